//! The exact attack-defense game solver.
//!
//! A configuration assigns `k` indistinguishable guards to vertices. An
//! attack on an edge is defended by moving every guard to an adjacent
//! vertex or keeping it in place, with at least one guard crossing the
//! attacked edge. A configuration set is a defense class when every member
//! can answer every attack inside the set; the defender wins with `k`
//! guards exactly when the greatest such fixpoint over cover
//! configurations is nonempty.
//!
//! Defendability between two configurations is a transportation
//! feasibility question: does a nonnegative move matrix over the arcs
//! "stay or slide along an edge" exist with the right marginals and one
//! unit forced across the attacked edge? It is decided by two max-flow
//! checks, one per orientation of the mandatory crossing; the exhaustive
//! move-matrix search is kept as [`defendable_by_enumeration`], the
//! reference oracle for the flow formulation.

use alloc::vec::Vec;
use core::fmt;

use crate::cover::{mvc_exact, mvc_forced};
use crate::graph::{Graph, VertexId};

/// How many guards may share a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OccupancyModel {
    /// Any number of guards per vertex (the default game).
    Multi,
    /// At most one guard per vertex.
    Single,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameError {
    MismatchedTotals { from: u32, to: u32 },
    NotAnEdge { u: VertexId, v: VertexId },
    WrongVertexCount { expected: usize, got: usize },
    /// A count exceeds one under the single-occupancy model.
    ModelViolation { vertex: VertexId, count: u32 },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GameError::MismatchedTotals { from, to } => {
                write!(f, "configurations have different totals ({from} vs {to})")
            }
            GameError::NotAnEdge { u, v } => write!(f, "({u}, {v}) is not an edge"),
            GameError::WrongVertexCount { expected, got } => {
                write!(f, "configuration over {got} vertices, graph has {expected}")
            }
            GameError::ModelViolation { vertex, count } => {
                write!(f, "{count} guards on vertex {vertex} under the single model")
            }
        }
    }
}

impl core::error::Error for GameError {}

/// A guard configuration: per-vertex counts with a fixed total.
///
/// The derived ordering is lexicographic on the count vector, which fixes
/// the iteration order of every enumeration and class in this module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GuardConfig {
    counts: Vec<u32>,
}

impl GuardConfig {
    pub fn new(counts: Vec<u32>) -> Self {
        GuardConfig { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, v: VertexId) -> u32 {
        self.counts[v]
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Vertices holding at least one guard, ascending.
    pub fn occupied(&self) -> Vec<VertexId> {
        (0..self.counts.len()).filter(|&v| self.counts[v] > 0).collect()
    }

    pub fn occupies_cover(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.counts[u] > 0 || self.counts[v] > 0)
    }
}

/// A set of same-total configurations closed under defending every attack,
/// all of whose members occupy the forced vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigClass {
    configs: Vec<GuardConfig>,
    model: OccupancyModel,
    forced: Vec<VertexId>,
}

impl ConfigClass {
    /// Members in lexicographic count-vector order.
    pub fn configs(&self) -> &[GuardConfig] {
        &self.configs
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn model(&self) -> OccupancyModel {
        self.model
    }

    pub fn forced(&self) -> &[VertexId] {
        &self.forced
    }

    pub fn contains(&self, config: &GuardConfig) -> bool {
        self.configs.binary_search(config).is_ok()
    }

    /// Re-verifies the defining closure property directly: every member
    /// defends every edge into some member.
    pub fn verify_closure(&self, g: &Graph) -> bool {
        let mut solver = TransportSolver::new();
        self.configs.iter().all(|c| {
            g.edges().iter().all(|&e| {
                self.configs
                    .iter()
                    .any(|c2| defendable_counts(g, c.counts(), e, c2.counts(), &mut solver))
            })
        })
    }
}

/// All configurations with total `k` that respect the occupancy model,
/// occupy every forced vertex, and whose occupied set is a vertex cover
/// (anything else loses immediately to an attack on an uncovered edge).
///
/// Under the single model a `k` larger than the vertex count yields an
/// empty list. Results are in lexicographic order.
pub fn enumerate_configs(
    g: &Graph,
    k: u32,
    model: OccupancyModel,
    forced: &[VertexId],
) -> Vec<GuardConfig> {
    enumerate_vectors(g, k, model, forced, true)
}

fn enumerate_vectors(
    g: &Graph,
    k: u32,
    model: OccupancyModel,
    forced: &[VertexId],
    covers_only: bool,
) -> Vec<GuardConfig> {
    let n = g.vertex_count();
    let mut forced_flag = alloc::vec![false; n];
    for &v in forced {
        assert!(v < n, "forced vertex {v} out of range");
        forced_flag[v] = true;
    }
    let cap = match model {
        OccupancyModel::Single => 1,
        OccupancyModel::Multi => k,
    };
    let mut out = Vec::new();
    let mut counts = alloc::vec![0u32; n];
    fn rec(
        g: &Graph,
        v: usize,
        remaining: u32,
        cap: u32,
        forced_flag: &[bool],
        covers_only: bool,
        counts: &mut Vec<u32>,
        out: &mut Vec<GuardConfig>,
    ) {
        let n = counts.len();
        if v == n {
            if remaining == 0 {
                let config = GuardConfig::new(counts.clone());
                if !covers_only || config.occupies_cover(g) {
                    out.push(config);
                }
            }
            return;
        }
        // remaining guards must fit on the suffix
        let suffix_capacity = cap.saturating_mul((n - v) as u32);
        if remaining > suffix_capacity {
            return;
        }
        let lo = if forced_flag[v] { 1 } else { 0 };
        let hi = cap.min(remaining);
        for x in lo..=hi {
            counts[v] = x;
            rec(g, v + 1, remaining - x, cap, forced_flag, covers_only, counts, out);
        }
        counts[v] = 0;
    }
    if n == 0 {
        if k == 0 {
            out.push(GuardConfig::new(Vec::new()));
        }
        return out;
    }
    rec(g, 0, k, cap, &forced_flag, covers_only, &mut counts, &mut out);
    out
}

// ---------------------------------------------------------------------------
// transportation feasibility (max-flow) and the defendability predicate
// ---------------------------------------------------------------------------

/// Small max-flow network with paired reverse arcs, reusable across calls.
struct FlowNet {
    head: Vec<i32>,
    next: Vec<i32>,
    to: Vec<u32>,
    cap: Vec<u32>,
    prev_arc: Vec<i32>,
    queue: Vec<u32>,
}

impl FlowNet {
    fn new() -> Self {
        FlowNet {
            head: Vec::new(),
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            prev_arc: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn reset(&mut self, nodes: usize) {
        self.head.clear();
        self.head.resize(nodes, -1);
        self.next.clear();
        self.to.clear();
        self.cap.clear();
        self.prev_arc.clear();
        self.prev_arc.resize(nodes, -2);
    }

    fn add(&mut self, u: usize, v: usize, c: u32) {
        let id = self.to.len() as i32;
        self.to.push(v as u32);
        self.cap.push(c);
        self.next.push(self.head[u]);
        self.head[u] = id;
        self.to.push(u as u32);
        self.cap.push(0);
        self.next.push(self.head[v]);
        self.head[v] = id + 1;
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let mut total = 0u32;
        loop {
            for p in self.prev_arc.iter_mut() {
                *p = -2;
            }
            self.prev_arc[s] = -1;
            self.queue.clear();
            self.queue.push(s as u32);
            let mut qi = 0;
            'bfs: while qi < self.queue.len() {
                let v = self.queue[qi] as usize;
                qi += 1;
                let mut a = self.head[v];
                while a >= 0 {
                    let arc = a as usize;
                    let w = self.to[arc] as usize;
                    if self.cap[arc] > 0 && self.prev_arc[w] == -2 {
                        self.prev_arc[w] = a;
                        if w == t {
                            break 'bfs;
                        }
                        self.queue.push(w as u32);
                    }
                    a = self.next[arc];
                }
            }
            if self.prev_arc[t] == -2 {
                return total;
            }
            let mut bottleneck = u32::MAX;
            let mut v = t;
            while v != s {
                let a = self.prev_arc[v] as usize;
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.to[a ^ 1] as usize;
            }
            let mut v = t;
            while v != s {
                let a = self.prev_arc[v] as usize;
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.to[a ^ 1] as usize;
            }
            total += bottleneck;
        }
    }
}

/// Decides whether guards with the `rows` marginal can redistribute to the
/// `cols` marginal when every guard may stay or slide along one edge.
pub(crate) struct TransportSolver {
    net: FlowNet,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl TransportSolver {
    pub(crate) fn new() -> Self {
        TransportSolver { net: FlowNet::new(), rows: Vec::new(), cols: Vec::new() }
    }

    fn feasible(&mut self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let total: u32 = self.rows.iter().sum();
        debug_assert_eq!(total, self.cols.iter().sum::<u32>());
        if total == 0 {
            return true;
        }
        let (s, t) = (2 * n, 2 * n + 1);
        self.net.reset(2 * n + 2);
        for u in 0..n {
            if self.rows[u] > 0 {
                self.net.add(s, u, self.rows[u]);
                self.net.add(u, n + u, total);
                for &w in g.neighbors(u) {
                    self.net.add(u, n + w, total);
                }
            }
        }
        for w in 0..n {
            if self.cols[w] > 0 {
                self.net.add(n + w, t, self.cols[w]);
            }
        }
        self.net.max_flow(s, t) == total
    }

    /// Transportation feasibility with one unit pre-routed `from -> to`.
    fn feasible_with_crossing(
        &mut self,
        g: &Graph,
        c: &[u32],
        from: VertexId,
        c_next: &[u32],
        to: VertexId,
    ) -> bool {
        self.rows.clear();
        self.rows.extend_from_slice(c);
        self.rows[from] -= 1;
        self.cols.clear();
        self.cols.extend_from_slice(c_next);
        self.cols[to] -= 1;
        self.feasible(g)
    }
}

fn validate_pair(
    g: &Graph,
    c: &GuardConfig,
    e: (VertexId, VertexId),
    c_next: &GuardConfig,
    model: OccupancyModel,
) -> Result<(), GameError> {
    let n = g.vertex_count();
    for cfg in [c, c_next] {
        if cfg.counts().len() != n {
            return Err(GameError::WrongVertexCount { expected: n, got: cfg.counts().len() });
        }
        if model == OccupancyModel::Single {
            for (v, &x) in cfg.counts().iter().enumerate() {
                if x > 1 {
                    return Err(GameError::ModelViolation { vertex: v, count: x });
                }
            }
        }
    }
    if c.total() != c_next.total() {
        return Err(GameError::MismatchedTotals { from: c.total(), to: c_next.total() });
    }
    if !g.has_edge(e.0, e.1) {
        return Err(GameError::NotAnEdge { u: e.0, v: e.1 });
    }
    Ok(())
}

fn defendable_counts(
    g: &Graph,
    c: &[u32],
    e: (VertexId, VertexId),
    c_next: &[u32],
    solver: &mut TransportSolver,
) -> bool {
    let (a, b) = e;
    for (from, to) in [(a, b), (b, a)] {
        if c[from] >= 1
            && c_next[to] >= 1
            && solver.feasible_with_crossing(g, c, from, c_next, to)
        {
            return true;
        }
    }
    false
}

/// Can the defender move from `c` to `c_next` while defending an attack on
/// `e`? Decided by two transportation-feasibility max-flow checks, one per
/// orientation of the mandatory crossing.
pub fn defendable(
    g: &Graph,
    c: &GuardConfig,
    e: (VertexId, VertexId),
    c_next: &GuardConfig,
    model: OccupancyModel,
) -> Result<bool, GameError> {
    validate_pair(g, c, e, c_next, model)?;
    let mut solver = TransportSolver::new();
    Ok(defendable_counts(g, c.counts(), e, c_next.counts(), &mut solver))
}

/// Reference oracle for [`defendable`]: exhaustive search over all move
/// matrices with the required marginals and crossing. Exponential; meant
/// for cross-checking the flow formulation on small instances.
pub fn defendable_by_enumeration(
    g: &Graph,
    c: &GuardConfig,
    e: (VertexId, VertexId),
    c_next: &GuardConfig,
    model: OccupancyModel,
) -> Result<bool, GameError> {
    validate_pair(g, c, e, c_next, model)?;
    let n = g.vertex_count();
    let target = c_next.counts();
    let mut cols = alloc::vec![0u32; n];

    fn place(
        g: &Graph,
        c: &[u32],
        target: &[u32],
        e: (VertexId, VertexId),
        v: usize,
        cols: &mut [u32],
        crossed: bool,
    ) -> bool {
        let n = cols.len();
        if v == n {
            return crossed && cols == target;
        }
        // distribute c[v] over v itself and its neighbors
        fn split(
            g: &Graph,
            c: &[u32],
            target: &[u32],
            e: (VertexId, VertexId),
            v: usize,
            targets: &[VertexId],
            idx: usize,
            left: u32,
            cols: &mut [u32],
            crossed: bool,
        ) -> bool {
            if idx == targets.len() {
                return left == 0 && place(g, c, target, e, v + 1, cols, crossed);
            }
            let w = targets[idx];
            let room = target[w].saturating_sub(cols[w]);
            let hi = left.min(room);
            for x in 0..=hi {
                cols[w] += x;
                let crosses = x >= 1 && ((v, w) == e || (w, v) == e);
                if split(g, c, target, e, v, targets, idx + 1, left - x, cols, crossed || crosses)
                {
                    cols[w] -= x;
                    return true;
                }
                cols[w] -= x;
            }
            false
        }
        let mut targets: Vec<VertexId> = alloc::vec![v];
        targets.extend_from_slice(g.neighbors(v));
        split(g, c, target, e, v, &targets, 0, c[v], cols, crossed)
    }

    Ok(place(g, c.counts(), target, e, 0, &mut cols, false))
}

// ---------------------------------------------------------------------------
// greatest fixpoint of the defense operator
// ---------------------------------------------------------------------------

/// The maximal defense class with `k` guards: the greatest fixpoint of
/// iterated deletion of configurations that cannot answer some attack
/// inside the surviving set. Empty exactly when the defender loses.
///
/// Each surviving (configuration, edge) pair watches one witness
/// successor; a deletion only re-scans the pairs whose witness died, and
/// the cascade is processed to fixpoint. The result is the unique greatest
/// fixpoint, independent of processing order.
pub fn evc_class(
    g: &Graph,
    k: u32,
    model: OccupancyModel,
    forced: &[VertexId],
) -> ConfigClass {
    let universe = enumerate_configs(g, k, model, forced);
    class_from_universe(g, universe, model, forced)
}

/// Fixpoint over the unpruned universe (covers and non-covers alike);
/// equivalent to [`evc_class`] because a configuration leaving an edge
/// uncovered cannot defend an attack on it and dies in the first round.
/// Exposed for the equivalence tests.
#[doc(hidden)]
pub fn evc_class_unpruned(
    g: &Graph,
    k: u32,
    model: OccupancyModel,
    forced: &[VertexId],
) -> ConfigClass {
    let universe = enumerate_vectors(g, k, model, forced, false);
    class_from_universe(g, universe, model, forced)
}

fn class_from_universe(
    g: &Graph,
    universe: Vec<GuardConfig>,
    model: OccupancyModel,
    forced: &[VertexId],
) -> ConfigClass {
    let n = g.vertex_count();
    let m = g.edge_count();
    let nconf = universe.len();
    let mut forced_sorted = forced.to_vec();
    forced_sorted.sort_unstable();
    forced_sorted.dedup();
    if nconf == 0 || m == 0 {
        return ConfigClass { configs: universe, model, forced: forced_sorted };
    }

    // closed-neighborhood supply per configuration: a necessary condition
    // for any move (successor counts bounded by what can reach each vertex)
    let mut reach: Vec<Vec<u32>> = Vec::with_capacity(nconf);
    for cfg in &universe {
        let counts = cfg.counts();
        let mut r = alloc::vec![0u32; n];
        for v in 0..n {
            let mut sum = counts[v];
            for &w in g.neighbors(v) {
                sum += counts[w];
            }
            r[v] = sum;
        }
        reach.push(r);
    }

    let edges = g.edges();
    let mut alive = alloc::vec![true; nconf];
    let mut watch: Vec<Vec<usize>> = alloc::vec![alloc::vec![usize::MAX; m]; nconf];
    let mut watchers: Vec<Vec<(u32, u32)>> = alloc::vec![Vec::new(); nconf];
    let mut dead: Vec<usize> = Vec::new();
    let mut solver = TransportSolver::new();

    let find_witness = |i: usize,
                        j: usize,
                        alive: &[bool],
                        solver: &mut TransportSolver|
     -> Option<usize> {
        let c = universe[i].counts();
        let e = edges[j];
        let usable = |cand: usize, solver: &mut TransportSolver| -> bool {
            let c2 = universe[cand].counts();
            for v in 0..n {
                if c2[v] > reach[i][v] || c[v] > reach[cand][v] {
                    return false;
                }
            }
            defendable_counts(g, c, e, c2, solver)
        };
        // a stationary defense (swap along e) is the common case
        if alive[i] && usable(i, solver) {
            return Some(i);
        }
        (0..nconf).find(|&cand| cand != i && alive[cand] && usable(cand, solver))
    };

    for i in 0..nconf {
        if !alive[i] {
            continue;
        }
        for j in 0..m {
            match find_witness(i, j, &alive, &mut solver) {
                Some(w) => {
                    watch[i][j] = w;
                    watchers[w].push((i as u32, j as u32));
                }
                None => {
                    alive[i] = false;
                    dead.push(i);
                    break;
                }
            }
        }
    }

    while let Some(d) = dead.pop() {
        let entries = core::mem::take(&mut watchers[d]);
        for (i, j) in entries {
            let (i, j) = (i as usize, j as usize);
            if !alive[i] || watch[i][j] != d {
                continue;
            }
            match find_witness(i, j, &alive, &mut solver) {
                Some(w) => {
                    watch[i][j] = w;
                    watchers[w].push((i as u32, j as u32));
                }
                None => {
                    alive[i] = false;
                    dead.push(i);
                }
            }
        }
    }

    let configs: Vec<GuardConfig> = universe
        .into_iter()
        .enumerate()
        .filter_map(|(i, c)| if alive[i] { Some(c) } else { None })
        .collect();
    ConfigClass { configs, model, forced: forced_sorted }
}

/// The solved game: the eternal vertex cover number and the maximal class
/// witnessing it.
#[derive(Clone, Debug)]
pub struct EvcSolution {
    pub k: u32,
    pub class: ConfigClass,
}

/// Eternal vertex cover number of a connected graph: the smallest `k`,
/// searched upward from the plain cover bound, with a nonempty defense
/// class. `k = n` always succeeds (everyone occupied, swap along the
/// attacked edge), so the search terminates.
pub fn evc_exact(g: &Graph, model: OccupancyModel) -> EvcSolution {
    assert!(g.is_connected(), "evc_exact expects a connected graph");
    let start = mvc_exact(g).size as u32;
    let n = g.vertex_count() as u32;
    for k in start..=n {
        let class = evc_class(g, k, model, &[]);
        if !class.is_empty() {
            return EvcSolution { k, class };
        }
    }
    unreachable!("the all-vertices configuration defends every attack")
}

/// Smallest guard count admitting a defense class whose every member
/// occupies all of `restricted`.
pub fn evc_forced(g: &Graph, restricted: &[VertexId], model: OccupancyModel) -> u32 {
    assert!(g.is_connected(), "evc_forced expects a connected graph");
    let start = mvc_forced(g, restricted).size as u32;
    let n = g.vertex_count() as u32;
    for k in start..=n {
        if !evc_class(g, k, model, restricted).is_empty() {
            return k;
        }
    }
    unreachable!("the all-vertices configuration defends every attack")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k2() -> Graph {
        Graph::from_edges(2, [(0, 1)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn cfg(counts: &[u32]) -> GuardConfig {
        GuardConfig::new(counts.to_vec())
    }

    #[test]
    fn enumerate_k2_one_guard() {
        let configs = enumerate_configs(&k2(), 1, OccupancyModel::Multi, &[]);
        assert_eq!(configs, vec![cfg(&[0, 1]), cfg(&[1, 0])]);
    }

    #[test]
    fn enumerate_k2_two_guards() {
        // all three multisets of size two occupy a cover of K2
        let configs = enumerate_configs(&k2(), 2, OccupancyModel::Multi, &[]);
        assert_eq!(configs, vec![cfg(&[0, 2]), cfg(&[1, 1]), cfg(&[2, 0])]);
    }

    #[test]
    fn enumerate_p3_one_guard_keeps_only_the_cover() {
        let configs = enumerate_configs(&p3(), 1, OccupancyModel::Multi, &[]);
        assert_eq!(configs, vec![cfg(&[0, 1, 0])]);
    }

    #[test]
    fn enumerate_single_model_caps() {
        let configs = enumerate_configs(&k2(), 2, OccupancyModel::Single, &[]);
        assert_eq!(configs, vec![cfg(&[1, 1])]);
        assert!(enumerate_configs(&k2(), 3, OccupancyModel::Single, &[]).is_empty());
    }

    #[test]
    fn enumerate_respects_forced() {
        // (2,0,0) has total 2 and occupies vertex 0, but {0} is no cover
        let configs = enumerate_configs(&p3(), 2, OccupancyModel::Multi, &[0]);
        assert!(configs.iter().all(|c| c.count(0) >= 1));
        assert_eq!(configs, vec![cfg(&[1, 0, 1]), cfg(&[1, 1, 0])]);
    }

    #[test]
    fn defendable_k2_crossing() {
        let g = k2();
        let yes = defendable(&g, &cfg(&[1, 0]), (0, 1), &cfg(&[0, 1]), OccupancyModel::Multi);
        assert_eq!(yes, Ok(true));
    }

    #[test]
    fn defendable_p3_examples() {
        let g = p3();
        // guard 1 -> 2 while guard 0 -> 1
        assert_eq!(
            defendable(&g, &cfg(&[1, 1, 0]), (1, 2), &cfg(&[0, 1, 1]), OccupancyModel::Multi),
            Ok(true)
        );
        // a crossing of (1,2) forces occupancy at 2
        assert_eq!(
            defendable(&g, &cfg(&[1, 1, 0]), (1, 2), &cfg(&[1, 1, 0]), OccupancyModel::Multi),
            Ok(false)
        );
    }

    #[test]
    fn defendable_validates() {
        let g = p3();
        assert!(matches!(
            defendable(&g, &cfg(&[1, 0, 0]), (0, 1), &cfg(&[1, 1, 0]), OccupancyModel::Multi),
            Err(GameError::MismatchedTotals { .. })
        ));
        assert!(matches!(
            defendable(&g, &cfg(&[1, 0, 0]), (0, 2), &cfg(&[0, 0, 1]), OccupancyModel::Multi),
            Err(GameError::NotAnEdge { .. })
        ));
        assert!(matches!(
            defendable(&g, &cfg(&[2, 0, 0]), (0, 1), &cfg(&[1, 1, 0]), OccupancyModel::Single),
            Err(GameError::ModelViolation { .. })
        ));
    }

    #[test]
    fn flow_matches_enumeration_on_p3_and_c4() {
        for g in [p3(), c4()] {
            for k in 1..=3u32 {
                let all = enumerate_vectors(&g, k, OccupancyModel::Multi, &[], false);
                for a in &all {
                    for b in &all {
                        for &e in g.edges() {
                            let fast =
                                defendable(&g, a, e, b, OccupancyModel::Multi).unwrap();
                            let slow =
                                defendable_by_enumeration(&g, a, e, b, OccupancyModel::Multi)
                                    .unwrap();
                            assert_eq!(fast, slow, "{a:?} -{e:?}-> {b:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn p3_class_with_two_guards() {
        let class = evc_class(&p3(), 2, OccupancyModel::Multi, &[]);
        assert!(!class.is_empty());
        assert!(class.contains(&cfg(&[1, 1, 0])));
        assert!(class.contains(&cfg(&[0, 1, 1])));
        assert!(class.verify_closure(&p3()));
    }

    #[test]
    fn p3_forced_endpoint_needs_three() {
        assert!(evc_class(&p3(), 2, OccupancyModel::Multi, &[0]).is_empty());
        assert!(!evc_class(&p3(), 3, OccupancyModel::Multi, &[0]).is_empty());
    }

    #[test]
    fn p3_single_guard_loses() {
        assert!(evc_class(&p3(), 1, OccupancyModel::Multi, &[]).is_empty());
    }

    #[test]
    fn evc_small_values() {
        assert_eq!(evc_exact(&k2(), OccupancyModel::Multi).k, 1);
        assert_eq!(evc_exact(&p3(), OccupancyModel::Multi).k, 2);
        assert_eq!(evc_exact(&p4(), OccupancyModel::Multi).k, 3);
        let sol = evc_exact(&c4(), OccupancyModel::Multi);
        assert_eq!(sol.k, 2);
        assert!(sol.class.contains(&cfg(&[1, 0, 1, 0])));
        assert!(sol.class.contains(&cfg(&[0, 1, 0, 1])));
    }

    #[test]
    fn evc_forced_values() {
        assert_eq!(evc_forced(&p3(), &[1], OccupancyModel::Multi), 2);
        assert_eq!(evc_forced(&p3(), &[0], OccupancyModel::Multi), 3);
        assert_eq!(evc_forced(&k2(), &[0], OccupancyModel::Multi), 2);
    }

    #[test]
    fn monotone_in_k_under_multi() {
        for g in [p3(), p4(), c4()] {
            let k = evc_exact(&g, OccupancyModel::Multi).k;
            for extra in 1..=2 {
                assert!(
                    !evc_class(&g, k + extra, OccupancyModel::Multi, &[]).is_empty(),
                    "class vanished at k+{extra}"
                );
            }
        }
    }

    #[test]
    fn single_model_needs_at_least_as_many_guards() {
        for g in [k2(), p3(), p4(), c4()] {
            let multi = evc_exact(&g, OccupancyModel::Multi).k;
            let single = evc_exact(&g, OccupancyModel::Single).k;
            assert!(single >= multi);
        }
    }

    #[test]
    fn class_is_maximal() {
        // any excluded cover configuration breaks closure when added
        let g = p4();
        let sol = evc_exact(&g, OccupancyModel::Multi);
        let universe = enumerate_configs(&g, sol.k, OccupancyModel::Multi, &[]);
        for excluded in universe.iter().filter(|c| !sol.class.contains(c)) {
            let mut configs = sol.class.configs().to_vec();
            configs.push(excluded.clone());
            configs.sort();
            let enlarged = ConfigClass {
                configs,
                model: OccupancyModel::Multi,
                forced: vec![],
            };
            assert!(!enlarged.verify_closure(&g), "{excluded:?} should break closure");
        }
    }

    #[test]
    fn pruned_and_unpruned_fixpoints_agree() {
        for g in [k2(), p3(), p4(), c4()] {
            for k in 1..=3u32 {
                let pruned = evc_class(&g, k, OccupancyModel::Multi, &[]);
                let unpruned = evc_class_unpruned(&g, k, OccupancyModel::Multi, &[]);
                assert_eq!(pruned.configs(), unpruned.configs(), "k={k}");
            }
        }
    }

    #[test]
    fn single_vertex_graph_needs_no_guards() {
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(evc_exact(&k1, OccupancyModel::Multi).k, 0);
    }
}

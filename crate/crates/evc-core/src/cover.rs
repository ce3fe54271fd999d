//! Minimum vertex cover, exact and constrained, with a linear-time
//! pipeline for chordal graphs.
//!
//! The exact solver is the ground-truth oracle for everything else in the
//! crate; it always reports the lexicographically smallest witness among
//! the minimum covers so results are reproducible. The chordal pipeline
//! (lexicographic BFS recognition, perfect-elimination verification, and
//! the greedy independent-set sweep) is deterministic but makes no
//! lexicographic promise about its witness.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    /// The supplied order is not a perfect elimination order of the graph.
    InvalidEliminationOrder,
    /// The chordal pipeline was asked to run on a non-chordal graph.
    NotChordal,
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::InvalidEliminationOrder => {
                write!(f, "order is not a perfect elimination order of the graph")
            }
            CoverError::NotChordal => write!(f, "graph is not chordal"),
        }
    }
}

impl core::error::Error for CoverError {}

/// A vertex cover size together with a witness attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub size: usize,
    /// Sorted witness set; covers every edge and contains the forced set
    /// of the query.
    pub witness: Vec<VertexId>,
}

/// A vertex elimination order; `order[0]` is eliminated first.
///
/// Construction does not validate the perfect elimination property — the
/// consumers do, so an invalid order fails fast instead of producing a
/// wrong cover size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<VertexId>,
}

impl EliminationOrder {
    pub fn new(order: Vec<VertexId>) -> Self {
        EliminationOrder { order }
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.order
    }
}

fn check_cover(g: &Graph, result: &CoverResult, forced: &[VertexId]) {
    debug_assert!(result.witness.len() == result.size);
    debug_assert!(
        g.edges()
            .iter()
            .all(|&(u, v)| result.witness.binary_search(&u).is_ok()
                || result.witness.binary_search(&v).is_ok()),
        "witness is not a vertex cover"
    );
    debug_assert!(
        forced.iter().all(|f| result.witness.binary_search(f).is_ok()),
        "witness misses a forced vertex"
    );
}

// ---------------------------------------------------------------------------
// exact branch-and-bound solver (bitmask core, n <= 64)
// ---------------------------------------------------------------------------

struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        assert!(n <= 64, "exact cover solver handles at most 64 vertices, got {n}");
        let mut adj = alloc::vec![0u64; n];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        MaskGraph { n, adj }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

/// Greedy maximal matching on the live subgraph; its size lower-bounds the
/// cover of that subgraph.
fn matching_bound(mg: &MaskGraph, alive: u64) -> usize {
    let mut rem = alive;
    let mut count = 0;
    while rem != 0 {
        let v = rem.trailing_zeros() as usize;
        rem &= rem - 1;
        let nb = mg.adj[v] & rem;
        if nb != 0 {
            rem &= !(1u64 << nb.trailing_zeros());
            count += 1;
        }
    }
    count
}

/// Degree-0/degree-1 reductions; adds taken vertices to `size`.
fn reduce(mg: &MaskGraph, alive: &mut u64, size: &mut usize) {
    loop {
        let mut changed = false;
        let mut it = *alive;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            if *alive & (1u64 << v) == 0 {
                continue;
            }
            let nb = mg.adj[v] & *alive;
            match nb.count_ones() {
                0 => {
                    *alive &= !(1u64 << v);
                    changed = true;
                }
                1 => {
                    let u = nb.trailing_zeros() as u64;
                    *alive &= !((1u64 << v) | (1u64 << u));
                    *size += 1;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
}

fn branch(mg: &MaskGraph, mut alive: u64, mut size: usize, best: &mut usize) {
    reduce(mg, &mut alive, &mut size);
    if size >= *best {
        return;
    }
    if alive == 0 {
        *best = size;
        return;
    }
    if size + matching_bound(mg, alive) >= *best {
        return;
    }
    // branch on a maximum-degree vertex, smallest id on ties
    let mut v = usize::MAX;
    let mut best_deg = 0;
    let mut it = alive;
    while it != 0 {
        let u = it.trailing_zeros() as usize;
        it &= it - 1;
        let deg = (mg.adj[u] & alive).count_ones();
        if deg > best_deg {
            best_deg = deg;
            v = u;
        }
    }
    let nb = mg.adj[v] & alive;
    // either v stays out and all its neighbors go in, or v goes in
    branch(mg, alive & !(nb | (1u64 << v)), size + nb.count_ones() as usize, best);
    branch(mg, alive & !(1u64 << v), size + 1, best);
}

fn greedy_cover_size(mg: &MaskGraph, mut alive: u64) -> usize {
    let mut size = 0;
    loop {
        reduce(mg, &mut alive, &mut size);
        if alive == 0 {
            return size;
        }
        let mut v = usize::MAX;
        let mut best_deg = 0;
        let mut it = alive;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            let deg = (mg.adj[u] & alive).count_ones();
            if deg > best_deg {
                best_deg = deg;
                v = u;
            }
        }
        alive &= !(1u64 << v);
        size += 1;
    }
}

fn min_cover_size(mg: &MaskGraph, alive: u64) -> usize {
    let mut best = greedy_cover_size(mg, alive);
    branch(mg, alive, 0, &mut best);
    best
}

/// Is there a cover of size <= `budget` containing `forced_in`, avoiding
/// `forced_out`, on the live vertex set implied by those constraints?
fn cover_feasible(mg: &MaskGraph, forced_in: u64, forced_out: u64, budget: usize) -> bool {
    let mut taken = forced_in;
    let mut it = forced_out;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        if mg.adj[v] & forced_out != 0 {
            return false; // an edge with both endpoints excluded
        }
        taken |= mg.adj[v]; // excluded vertex forces all its neighbors in
    }
    if taken & forced_out != 0 {
        return false;
    }
    let used = taken.count_ones() as usize;
    if used > budget {
        return false;
    }
    let alive = mg.full() & !taken & !forced_out;
    let mut best = budget - used + 1;
    branch(mg, alive, 0, &mut best);
    best <= budget - used
}

/// Lexicographically smallest cover of size `k` (k must be attainable).
fn lex_min_cover(mg: &MaskGraph, k: usize) -> Vec<VertexId> {
    let mut forced_in = 0u64;
    let mut forced_out = 0u64;
    for v in 0..mg.n {
        let bit = 1u64 << v;
        if (forced_in | forced_out) & bit != 0 {
            continue;
        }
        if cover_feasible(mg, forced_in | bit, forced_out, k) {
            forced_in |= bit;
        } else {
            forced_out |= bit;
            forced_in |= mg.adj[v]; // neighbors must cover v's edges
        }
    }
    (0..mg.n).filter(|&v| forced_in & (1u64 << v) != 0).collect()
}

/// Exact minimum vertex cover with the lexicographically smallest witness.
pub fn mvc_exact(g: &Graph) -> CoverResult {
    let mg = MaskGraph::new(g);
    let size = min_cover_size(&mg, mg.full());
    let witness = lex_min_cover(&mg, size);
    let result = CoverResult { size, witness };
    check_cover(g, &result, &[]);
    result
}

/// Minimum vertex cover constrained to contain `forced`, by the
/// delete-and-add reduction: `|X| + mvc(G \ X)` with the witness mapped
/// back and merged.
///
/// Panics if `forced` contains an out-of-range vertex.
pub fn mvc_forced(g: &Graph, forced: &[VertexId]) -> CoverResult {
    let mut forced: Vec<VertexId> = forced.to_vec();
    forced.sort_unstable();
    forced.dedup();
    let (rest, map) = g
        .remove_vertices(&forced)
        .expect("forced set must be a subset of the vertices");
    let inner = mvc_exact(&rest);
    let mut witness: Vec<VertexId> = forced.clone();
    witness.extend(inner.witness.iter().map(|&v| map.to_parent(v)));
    witness.sort_unstable();
    let result = CoverResult { size: forced.len() + inner.size, witness };
    check_cover(g, &result, &forced);
    result
}

// ---------------------------------------------------------------------------
// chordal pipeline: lexicographic BFS + perfect elimination + greedy MIS
// ---------------------------------------------------------------------------

/// Lexicographic BFS visit order via partition refinement.
pub(crate) fn lex_bfs(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    // Cells form a linked list; splitting moves a visited vertex's
    // unvisited neighbors into a fresh cell just before their current one.
    let mut members: Vec<Vec<VertexId>> = alloc::vec![(0..n).rev().collect()];
    let mut prev: Vec<usize> = alloc::vec![usize::MAX];
    let mut next: Vec<usize> = alloc::vec![usize::MAX];
    let mut split_target: Vec<usize> = alloc::vec![usize::MAX];
    let mut split_round: Vec<usize> = alloc::vec![usize::MAX];
    let mut head = 0usize;
    let mut cell_of: Vec<usize> = alloc::vec![0; n];
    let mut pos_in_cell: Vec<usize> = alloc::vec![0; n];
    for (i, &v) in members[0].iter().enumerate() {
        pos_in_cell[v] = i;
    }
    let mut visited = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);

    for round in 0..n {
        while members[head].is_empty() {
            head = next[head];
        }
        let v = members[head].pop().expect("head cell is nonempty");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let c = cell_of[w];
            let target = if split_round[c] == round {
                split_target[c]
            } else {
                let t = members.len();
                members.push(Vec::new());
                prev.push(prev[c]);
                next.push(c);
                split_target.push(usize::MAX);
                split_round.push(usize::MAX);
                if prev[c] != usize::MAX {
                    next[prev[c]] = t;
                }
                if c == head {
                    head = t; // everything before the cursor is empty
                }
                prev[c] = t;
                split_target[c] = t;
                split_round[c] = round;
                t
            };
            let p = pos_in_cell[w];
            members[c].swap_remove(p);
            if p < members[c].len() {
                let moved = members[c][p];
                pos_in_cell[moved] = p;
            }
            pos_in_cell[w] = members[target].len();
            members[target].push(w);
            cell_of[w] = target;
        }
    }
    order
}

/// Linear-time perfect-elimination check: each vertex's later neighbors
/// must already be mutually adjacent, verified through the earliest later
/// neighbor's deferred list.
fn is_perfect_elimination_order(g: &Graph, order: &[VertexId]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = alloc::vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false; // not a permutation
        }
        pos[v] = i;
    }
    let mut deferred: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); n];
    let mut mark = alloc::vec![false; n];
    for &v in order {
        for &w in g.neighbors(v) {
            mark[w] = true;
        }
        let ok = deferred[v].iter().all(|&w| mark[w]);
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
        if !ok {
            return false;
        }
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            for &w in &later {
                if w != parent {
                    deferred[parent].push(w);
                }
            }
        }
    }
    true
}

/// Chordality test; returns a perfect elimination order iff the graph is
/// chordal (reverse lexicographic-BFS order, then verified).
pub fn is_chordal(g: &Graph) -> Option<EliminationOrder> {
    let mut order = lex_bfs(g);
    order.reverse();
    if is_perfect_elimination_order(g, &order) {
        Some(EliminationOrder::new(order))
    } else {
        None
    }
}

/// Greedy maximum independent set along a perfect elimination order; on a
/// chordal graph this attains the maximum, so the complement attains the
/// minimum vertex cover. Runs in O(n + m).
fn greedy_cover_along(g: &Graph, order: &[VertexId]) -> CoverResult {
    let n = g.vertex_count();
    let mut dominated = alloc::vec![false; n];
    let mut independent = alloc::vec![false; n];
    for &v in order {
        if !dominated[v] {
            independent[v] = true;
            dominated[v] = true;
            for &w in g.neighbors(v) {
                dominated[w] = true;
            }
        }
    }
    let witness: Vec<VertexId> = (0..n).filter(|&v| !independent[v]).collect();
    CoverResult { size: witness.len(), witness }
}

/// Minimum vertex cover of a chordal graph given a perfect elimination
/// order. Fails fast on an invalid order rather than returning a wrong
/// size.
pub fn chordal_mvc(g: &Graph, order: &EliminationOrder) -> Result<CoverResult, CoverError> {
    if !is_perfect_elimination_order(g, order.as_slice()) {
        return Err(CoverError::InvalidEliminationOrder);
    }
    let result = greedy_cover_along(g, order.as_slice());
    check_cover(g, &result, &[]);
    Ok(result)
}

/// Constrained minimum vertex cover on a chordal graph: `|X| + mvc(G \ X)`
/// where the subgraph stays chordal by heredity. Errors if `g` is not
/// chordal.
pub fn chordal_mvc_forced(g: &Graph, forced: &[VertexId]) -> Result<CoverResult, CoverError> {
    let order = is_chordal(g).ok_or(CoverError::NotChordal)?;
    Ok(chordal_forced_with_order(g, &order, forced))
}

/// Same as [`chordal_mvc_forced`] with recognition already done: restricts
/// the parent order to the remaining vertices (still a perfect elimination
/// order, since the property is hereditary under induced subgraphs).
pub(crate) fn chordal_forced_with_order(
    g: &Graph,
    order: &EliminationOrder,
    forced: &[VertexId],
) -> CoverResult {
    let mut forced: Vec<VertexId> = forced.to_vec();
    forced.sort_unstable();
    forced.dedup();
    let (rest, map) = g
        .remove_vertices(&forced)
        .expect("forced set must be a subset of the vertices");
    let sub_order: Vec<VertexId> = order
        .as_slice()
        .iter()
        .filter_map(|&v| map.to_sub(v))
        .collect();
    debug_assert!(is_perfect_elimination_order(&rest, &sub_order));
    let inner = greedy_cover_along(&rest, &sub_order);
    let mut witness: Vec<VertexId> = forced.clone();
    witness.extend(inner.witness.iter().map(|&v| map.to_parent(v)));
    witness.sort_unstable();
    let result = CoverResult { size: forced.len() + inner.size, witness };
    check_cover(g, &result, &forced);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use alloc::vec;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn star() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn exact_small_cases() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(mvc_exact(&k2).size, 1);
        assert_eq!(mvc_exact(&c4()).size, 2);
        assert_eq!(mvc_exact(&c4()).size, brute::mvc_by_enumeration(&c4()));
        let st = mvc_exact(&star());
        assert_eq!(st.size, 1);
        assert_eq!(st.witness, vec![0]);
    }

    #[test]
    fn exact_witness_is_lexicographically_smallest() {
        // C4 has two minimum covers {0,2} and {1,3}
        assert_eq!(mvc_exact(&c4()).witness, vec![0, 2]);
        // edgeless graph: empty witness
        let e3 = Graph::from_edges(3, []).unwrap();
        assert_eq!(mvc_exact(&e3), CoverResult { size: 0, witness: vec![] });
    }

    #[test]
    fn forced_small_cases() {
        assert_eq!(mvc_forced(&p3(), &[1]).size, 1);
        let r = mvc_forced(&p3(), &[0]);
        assert_eq!(r.size, 2);
        assert_eq!(r.witness, vec![0, 1]);
        assert_eq!(r.size, brute::mvc_forced_by_enumeration(&p3(), &[0]));
        assert_eq!(mvc_forced(&bowtie(), &[0]).size, 3);
        assert_eq!(
            mvc_forced(&bowtie(), &[0]).size,
            brute::mvc_forced_by_enumeration(&bowtie(), &[0])
        );
    }

    #[test]
    fn forced_empty_matches_exact() {
        for g in [p3(), p4(), c4(), k4(), star(), bowtie()] {
            assert_eq!(mvc_forced(&g, &[]), mvc_exact(&g));
        }
    }

    #[test]
    fn single_vertex_force_costs_at_most_one_extra() {
        for g in [p3(), p4(), c4(), k4(), star(), bowtie()] {
            let base = mvc_exact(&g).size;
            for v in g.vertices() {
                assert!(mvc_forced(&g, &[v]).size <= base + 1);
            }
        }
    }

    #[test]
    fn chordality_cases() {
        assert!(is_chordal(&c4()).is_none());
        assert!(is_chordal(&p4()).is_some());
        assert!(is_chordal(&k4()).is_some());
        assert!(is_chordal(&bowtie()).is_some());
        // C5 and C6 are not chordal either
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_chordal(&c5).is_none());
        // chord the C4 and it becomes chordal
        let diamond = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&diamond).is_some());
    }

    #[test]
    fn chordal_mvc_matches_exact() {
        for g in [p3(), p4(), k4(), star(), bowtie()] {
            let order = is_chordal(&g).expect("test graphs are chordal");
            let fast = chordal_mvc(&g, &order).unwrap();
            assert_eq!(fast.size, mvc_exact(&g).size, "size mismatch on {g:?}");
            assert!(brute::is_vertex_cover(&g, &fast.witness));
        }
        assert_eq!(chordal_mvc(&k4(), &is_chordal(&k4()).unwrap()).unwrap().size, 3);
    }

    #[test]
    fn chordal_mvc_rejects_invalid_order() {
        // not a permutation
        let bad = EliminationOrder::new(vec![0, 0, 1, 2]);
        assert_eq!(chordal_mvc(&p4(), &bad).unwrap_err(), CoverError::InvalidEliminationOrder);
        // a permutation that is not a perfect elimination order: eliminate
        // the middle of P3 first
        let bad = EliminationOrder::new(vec![1, 0, 2]);
        assert_eq!(chordal_mvc(&p3(), &bad).unwrap_err(), CoverError::InvalidEliminationOrder);
    }

    #[test]
    fn chordal_forced_cases() {
        assert_eq!(chordal_mvc_forced(&p4(), &[1, 2]).unwrap().size, 2);
        assert_eq!(chordal_mvc_forced(&bowtie(), &[0]).unwrap().size, 3);
        assert_eq!(chordal_mvc_forced(&k4(), &[]).unwrap().size, 3);
        assert_eq!(chordal_mvc_forced(&c4(), &[]).unwrap_err(), CoverError::NotChordal);
    }

    #[test]
    fn chordal_forced_agrees_with_oracle() {
        for g in [p3(), p4(), k4(), star(), bowtie()] {
            for v in g.vertices() {
                assert_eq!(
                    chordal_mvc_forced(&g, &[v]).unwrap().size,
                    brute::mvc_forced_by_enumeration(&g, &[v]),
                    "disagreement at v={v} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn forced_monotone_in_forced_set() {
        let g = bowtie();
        for x in g.vertices() {
            for y in g.vertices() {
                if x == y {
                    continue;
                }
                let small = mvc_forced(&g, &[x]).size;
                let big = mvc_forced(&g, &[x, y]).size;
                assert!(small <= big && big <= small + 1);
            }
        }
    }

    #[test]
    fn lex_bfs_is_a_permutation() {
        for g in [p3(), p4(), c4(), k4(), star(), bowtie()] {
            let mut order = lex_bfs(&g);
            order.sort_unstable();
            let expected: Vec<usize> = g.vertices().collect();
            assert_eq!(order, expected);
        }
    }
}

//! Structural eternal-vertex-cover algorithms and their verifiers.
//!
//! The cut-constrained cover size `mvc_X` (the minimum cover containing
//! every cut vertex) lower-bounds the eternal vertex cover number of any
//! connected graph. For graphs whose blocks are all locally connected —
//! chordal graphs in particular — the answer is pinned to `mvc_X` or
//! `mvc_X + 1`, decided by whether forcing any extra vertex into the
//! cover raises the constrained size. That decision needs one constrained
//! cover per vertex, which is what makes the chordal pipeline run in
//! O(n·(n+m)).
//!
//! Each rule this rests on also ships as an executable verifier that
//! recomputes both sides of the identity on a concrete graph and reports
//! counterexamples, so the whole chain can be checked empirically on any
//! corpus.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cover::{chordal_forced_with_order, is_chordal, mvc_forced, CoverResult};
use crate::decompose::{block_cut_structure, x_components, ComponentPiece};
use crate::game::{evc_class, evc_exact, OccupancyModel};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralError {
    Disconnected,
    /// The structural rules are stated for graphs with at least two vertices.
    TooSmall,
    NotChordal,
    /// Some block fails local connectivity, so the cover-maximum rule
    /// does not apply.
    BlocksNotLocallyConnected,
    /// The supplied graph is not an attachment extension of the base.
    NotAnExtension { reason: &'static str },
}

impl fmt::Display for StructuralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuralError::Disconnected => write!(f, "graph is disconnected"),
            StructuralError::TooSmall => write!(f, "graph needs at least two vertices"),
            StructuralError::NotChordal => write!(f, "graph is not chordal"),
            StructuralError::BlocksNotLocallyConnected => {
                write!(f, "some block is not locally connected")
            }
            StructuralError::NotAnExtension { reason } => {
                write!(f, "not an attachment extension: {reason}")
            }
        }
    }
}

impl core::error::Error for StructuralError {}

/// How an [`EvcReport`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvcMethod {
    LocallyConnectedBlocks,
    Chordal,
    ExactGame,
    BoundOnly,
}

impl EvcMethod {
    pub fn name(self) -> &'static str {
        match self {
            EvcMethod::LocallyConnectedBlocks => "locally-connected-blocks",
            EvcMethod::Chordal => "chordal",
            EvcMethod::ExactGame => "exact-game",
            EvcMethod::BoundOnly => "bound-only",
        }
    }
}

/// Result of a structural evc computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvcReport {
    /// The cut-constrained cover size `mvc_X`.
    pub lower_bound: usize,
    /// The eternal vertex cover number, when the method determines it.
    pub evc: Option<usize>,
    pub method: EvcMethod,
    /// A vertex whose forced inclusion raises the constrained cover size,
    /// present exactly when `evc = lower_bound + 1`.
    pub plus_one_witness: Option<VertexId>,
    /// Deduplicated covers of size <= evc such that every vertex appears
    /// in one of them together with all cut vertices; a polynomial-time
    /// checkable certificate for the reported value.
    pub certificate: Vec<Vec<VertexId>>,
}

/// Outcome of a certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub valid: bool,
    pub reason: Option<String>,
}

impl CertificateCheck {
    fn ok() -> Self {
        CertificateCheck { valid: true, reason: None }
    }

    fn fail(reason: String) -> Self {
        CertificateCheck { valid: false, reason: Some(reason) }
    }
}

/// Outcome of running one verifier over one or many instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: &'static str,
    pub instances_checked: usize,
    pub skipped: usize,
    /// One full counterexample dump per violated instance; empty means the
    /// claim held everywhere it applied.
    pub failures: Vec<String>,
}

impl VerificationReport {
    fn new(claim: &'static str) -> Self {
        VerificationReport { claim, instances_checked: 0, skipped: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds another report for the same claim into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        debug_assert_eq!(self.claim, other.claim);
        self.instances_checked += other.instances_checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }
}

fn dump_graph(g: &Graph) -> String {
    format!("n={} edges={:?}", g.vertex_count(), g.edges())
}

fn require_connected(g: &Graph) -> Result<(), StructuralError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(StructuralError::Disconnected)
    }
}

/// Cut vertices of `g`, sorted.
fn cut_vertex_set(g: &Graph) -> Vec<VertexId> {
    block_cut_structure(g).cut_vertices().to_vec()
}

/// Lower bound for the eternal vertex cover number of a connected graph:
/// the minimum size of a vertex cover containing all cut vertices.
pub fn evc_lower_bound(g: &Graph) -> Result<usize, StructuralError> {
    require_connected(g)?;
    Ok(mvc_forced(g, &cut_vertex_set(g)).size)
}

/// The shared decision rule: `evc = mvc_X` iff forcing any further vertex
/// into the cover leaves the constrained size unchanged, else `mvc_X + 1`.
/// `cover` computes a constrained minimum cover for a forced set.
fn decide_with<F>(g: &Graph, cut: &[VertexId], method: EvcMethod, mut cover: F) -> EvcReport
where
    F: FnMut(&[VertexId]) -> CoverResult,
{
    let base = cover(cut);
    let lower_bound = base.size;
    let mut certificate: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    certificate.insert(base.witness);
    let mut plus_one_witness = None;
    let mut forced: Vec<VertexId> = Vec::with_capacity(cut.len() + 1);
    for v in g.vertices() {
        if cut.binary_search(&v).is_ok() {
            continue;
        }
        forced.clear();
        forced.extend_from_slice(cut);
        forced.push(v);
        let r = cover(&forced);
        debug_assert!(r.size <= lower_bound + 1);
        if r.size > lower_bound && plus_one_witness.is_none() {
            plus_one_witness = Some(v);
        }
        certificate.insert(r.witness);
    }
    let evc = lower_bound + usize::from(plus_one_witness.is_some());
    EvcReport {
        lower_bound,
        evc: Some(evc),
        method,
        plus_one_witness,
        certificate: certificate.into_iter().collect(),
    }
}

fn all_blocks_locally_connected(g: &Graph) -> bool {
    block_cut_structure(g).blocks().iter().all(|b| {
        let (sub, _) = g.induced_subgraph(b).expect("block vertices are in range");
        crate::decompose::is_locally_connected(&sub)
    })
}

/// Structural evc for graphs whose blocks are all locally connected.
/// Returns `None` when some block fails the test; errors on disconnected
/// input or fewer than two vertices.
pub fn evc_locally_connected(g: &Graph) -> Result<Option<EvcReport>, StructuralError> {
    require_connected(g)?;
    if g.vertex_count() < 2 {
        return Err(StructuralError::TooSmall);
    }
    if !all_blocks_locally_connected(g) {
        return Ok(None);
    }
    let cut = cut_vertex_set(g);
    Ok(Some(decide_with(g, &cut, EvcMethod::LocallyConnectedBlocks, |f| mvc_forced(g, f))))
}

/// Structural evc for connected chordal graphs: the same decision rule,
/// with every constrained cover computed by the linear-time chordal
/// pipeline, for O(n·(n+m)) total work.
pub fn evc_chordal(g: &Graph) -> Result<EvcReport, StructuralError> {
    require_connected(g)?;
    if g.vertex_count() < 2 {
        return Err(StructuralError::TooSmall);
    }
    let order = is_chordal(g).ok_or(StructuralError::NotChordal)?;
    let cut = cut_vertex_set(g);
    Ok(decide_with(g, &cut, EvcMethod::Chordal, |f| {
        chordal_forced_with_order(g, &order, f)
    }))
}

/// The cover-maximum form of the structural rule: the smallest `k` such
/// that every vertex lies in some size-`k` cover through the cut vertices,
/// i.e. the maximum over vertices of the constrained cover size. Requires
/// all blocks locally connected.
pub fn evc_cover_maximum(g: &Graph) -> Result<usize, StructuralError> {
    require_connected(g)?;
    if g.vertex_count() < 2 {
        return Err(StructuralError::TooSmall);
    }
    if !all_blocks_locally_connected(g) {
        return Err(StructuralError::BlocksNotLocallyConnected);
    }
    let cut = cut_vertex_set(g);
    let mut best = 0usize;
    let mut forced: Vec<VertexId> = Vec::with_capacity(cut.len() + 1);
    for v in g.vertices() {
        forced.clear();
        forced.extend_from_slice(&cut);
        forced.push(v);
        best = best.max(mvc_forced(g, &forced).size);
    }
    Ok(best)
}

/// Exponential diagnostic for the family where the structural rule is
/// justified: checks that every minimum cover containing all cut vertices
/// induces a connected subgraph. Subset enumeration, so n <= 20.
pub fn all_min_forced_covers_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20, "definitional membership check is exponential; n <= 20 only");
    let cut = cut_vertex_set(g);
    let k = mvc_forced(g, &cut).size;
    let cut_mask: u32 = cut.iter().fold(0, |m, &v| m | (1 << v));
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k || mask & cut_mask != cut_mask {
            continue;
        }
        let set: Vec<VertexId> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let covered = g
            .edges()
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0);
        if !covered {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&set).expect("subset is valid");
        if !sub.is_connected() {
            return false;
        }
    }
    true
}

/// Checks a list of covers as a certificate for `evc(g) <= k`: every
/// listed set must be a vertex cover of size at most `k`, and every vertex
/// must appear in some listed cover together with all cut vertices.
pub fn verify_certificate(g: &Graph, k: usize, covers: &[Vec<VertexId>]) -> CertificateCheck {
    let n = g.vertex_count();
    let mut normalized: Vec<Vec<VertexId>> = Vec::with_capacity(covers.len());
    for (i, cover) in covers.iter().enumerate() {
        let mut set = cover.clone();
        set.sort_unstable();
        set.dedup();
        if let Some(&v) = set.iter().find(|&&v| v >= n) {
            return CertificateCheck::fail(format!("cover {i} contains invalid vertex {v}"));
        }
        if set.len() > k {
            return CertificateCheck::fail(format!(
                "cover {i} has size {} > k = {k}",
                set.len()
            ));
        }
        if let Some(&(u, w)) = g
            .edges()
            .iter()
            .find(|&&(u, w)| set.binary_search(&u).is_err() && set.binary_search(&w).is_err())
        {
            return CertificateCheck::fail(format!(
                "cover {i} misses edge ({u}, {w})"
            ));
        }
        normalized.push(set);
    }
    let cut = cut_vertex_set(g);
    for v in g.vertices() {
        let hit = normalized.iter().any(|set| {
            set.binary_search(&v).is_ok()
                && cut.iter().all(|x| set.binary_search(x).is_ok())
        });
        if !hit {
            return CertificateCheck::fail(format!(
                "no listed cover contains vertex {v} together with all cut vertices"
            ));
        }
    }
    CertificateCheck::ok()
}

/// Forced set of a piece: the parent cut vertices it contains, in piece ids.
fn piece_cut_set(piece: &ComponentPiece, cut: &[VertexId]) -> Vec<VertexId> {
    piece
        .map
        .parent_ids()
        .iter()
        .filter(|p| cut.binary_search(p).is_ok())
        .map(|&p| piece.map.to_sub(p).expect("parent id is in the piece"))
        .collect()
}

/// Checks, for every cut vertex `x`, the split identity
/// `mvc_X(G) = 1 + sum over x-components of (mvc_{X(G_i)}(G_i) - 1)`,
/// along with `mvc_{X ∪ {x}}(G) = mvc_X(G)`.
pub fn verify_lemma1(g: &Graph) -> VerificationReport {
    let mut report = VerificationReport::new("lemma1");
    let cut = cut_vertex_set(g);
    if cut.is_empty() {
        return report;
    }
    let mvc_x = mvc_forced(g, &cut).size;
    for &x in &cut {
        let pieces = x_components(g, x).expect("x is a cut vertex");
        let mut rhs = 1usize;
        for piece in &pieces {
            let inner_forced = piece_cut_set(piece, &cut);
            rhs += mvc_forced(&piece.subgraph, &inner_forced).size - 1;
        }
        let mut with_x = cut.clone();
        with_x.push(x);
        let lhs_augmented = mvc_forced(g, &with_x).size;
        report.instances_checked += 1;
        if mvc_x != rhs || lhs_augmented != mvc_x {
            report.failures.push(format!(
                "{}: x={x} mvc_X={mvc_x} augmented={lhs_augmented} split-sum={rhs}",
                dump_graph(g)
            ));
        }
    }
    report
}

/// Checks, for every block `B` and every non-cut vertex `v` of `B`, the
/// identity `mvc_{X ∪ {v}}(G) = mvc_{X(B) ∪ {v}}(B) + sum over
/// B-components of (mvc_{X(G_i)}(G_i) - 1)`. Blocks without an eligible
/// vertex are counted as skipped.
pub fn verify_lemma2(g: &Graph) -> VerificationReport {
    let mut report = VerificationReport::new("lemma2");
    let cut = cut_vertex_set(g);
    if cut.is_empty() {
        return report;
    }
    let bcs = block_cut_structure(g);
    for block in bcs.blocks() {
        let eligible: Vec<VertexId> = block
            .iter()
            .copied()
            .filter(|v| cut.binary_search(v).is_err())
            .collect();
        if eligible.is_empty() {
            report.skipped += 1;
            continue;
        }
        let (block_sub, block_map) = g.induced_subgraph(block).expect("block is in range");
        let block_cut: Vec<VertexId> = block
            .iter()
            .filter(|v| cut.binary_search(v).is_ok())
            .map(|&v| block_map.to_sub(v).expect("block vertex"))
            .collect();
        let pieces = crate::decompose::b_components(g, block).expect("block of g");
        let hanging: usize = pieces
            .iter()
            .map(|piece| mvc_forced(&piece.subgraph, &piece_cut_set(piece, &cut)).size - 1)
            .sum();
        for &v in &eligible {
            let mut forced = cut.clone();
            forced.push(v);
            let lhs = mvc_forced(g, &forced).size;
            let mut block_forced = block_cut.clone();
            block_forced.push(block_map.to_sub(v).expect("v lies in the block"));
            let rhs = mvc_forced(&block_sub, &block_forced).size + hanging;
            report.instances_checked += 1;
            if lhs != rhs {
                report.failures.push(format!(
                    "{}: block={block:?} v={v} lhs={lhs} rhs={rhs}",
                    dump_graph(g)
                ));
            }
        }
    }
    report
}

/// Checks the guard-count bounds that every defense configuration of an
/// attachment extension must satisfy on the base graph: with
/// `l = mvc_{X' ∪ {x}}(base)`, every configuration of the extension's
/// maximal class carries at least `l` guards on the base and at least
/// `l - 1` guards off `x`. Classes are checked for every guard total from
/// the extension's evc up to evc + `delta`. Guards are counted, not
/// occupied vertices.
pub fn verify_evc_cut_property(
    base: &Graph,
    x: VertexId,
    extension: &Graph,
    delta: u32,
) -> Result<VerificationReport, StructuralError> {
    require_connected(base)?;
    let nb = base.vertex_count();
    if x >= nb {
        return Err(StructuralError::NotAnExtension { reason: "attach vertex out of range" });
    }
    if nb < 2 {
        return Err(StructuralError::NotAnExtension {
            reason: "the base needs at least two vertices",
        });
    }
    if extension.vertex_count() <= nb {
        return Err(StructuralError::NotAnExtension { reason: "no vertices were added" });
    }
    // the base must sit on ids 0..nb with exactly its own edges
    let prefix: Vec<VertexId> = (0..nb).collect();
    let (induced, _) = extension.induced_subgraph(&prefix).expect("prefix is in range");
    if induced != *base {
        return Err(StructuralError::NotAnExtension {
            reason: "extension does not induce the base on its id prefix",
        });
    }
    // the added part may touch the base only through x
    for &(u, v) in extension.edges() {
        let (inside, outside) = if u < nb { (u, v) } else { (v, u) };
        if outside >= nb && inside < nb && inside != x {
            return Err(StructuralError::NotAnExtension {
                reason: "an added vertex is adjacent to the base off the attach vertex",
            });
        }
    }
    // the added part plus x must form one connected attached piece
    let mut piece: Vec<VertexId> = alloc::vec![x];
    piece.extend(nb..extension.vertex_count());
    let (attached, _) = extension.induced_subgraph(&piece).expect("piece ids are valid");
    if !attached.is_connected() {
        return Err(StructuralError::NotAnExtension {
            reason: "the attached piece is disconnected",
        });
    }
    debug_assert!(block_cut_structure(extension).is_cut_vertex(x));

    let mut cut_aug = cut_vertex_set(base);
    if cut_aug.binary_search(&x).is_err() {
        cut_aug.push(x);
        cut_aug.sort_unstable();
    }
    let required = mvc_forced(base, &cut_aug).size;

    let mut report = VerificationReport::new("cut-property");
    let solution = evc_exact(extension, OccupancyModel::Multi);
    for k in solution.k..=solution.k + delta {
        let class = if k == solution.k {
            solution.class.clone()
        } else {
            evc_class(extension, k, OccupancyModel::Multi, &[])
        };
        for config in class.configs() {
            let on_base: u32 = (0..nb).map(|v| config.count(v)).sum();
            let off_x = on_base - config.count(x);
            report.instances_checked += 1;
            if (on_base as usize) < required || (off_x as usize) < required.saturating_sub(1) {
                report.failures.push(format!(
                    "{}: x={x} k={k} required={required} config={:?} on_base={on_base} off_x={off_x}",
                    dump_graph(extension),
                    config.counts()
                ));
            }
        }
    }
    Ok(report)
}

/// When the eternal vertex cover number equals the cut-constrained cover
/// size, every configuration of the maximal class must occupy every cut
/// vertex. Graphs where the equality does not hold are reported as
/// skipped.
pub fn verify_observation1(g: &Graph) -> VerificationReport {
    let mut report = VerificationReport::new("observation1");
    let cut = cut_vertex_set(g);
    if cut.is_empty() {
        return report;
    }
    let mvc_x = mvc_forced(g, &cut).size;
    let solution = evc_exact(g, OccupancyModel::Multi);
    if solution.k as usize != mvc_x {
        report.skipped += 1;
        return report;
    }
    for config in solution.class.configs() {
        report.instances_checked += 1;
        if let Some(&x) = cut.iter().find(|&&x| config.count(x) == 0) {
            report.failures.push(format!(
                "{}: config={:?} leaves cut vertex {x} unoccupied at k={}",
                dump_graph(g),
                config.counts(),
                solution.k
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::attach_extension;
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

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
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
    fn lower_bound_cases() {
        assert_eq!(evc_lower_bound(&p4()).unwrap(), 2);
        assert_eq!(evc_lower_bound(&bowtie()).unwrap(), 3);
        assert_eq!(evc_lower_bound(&c4()).unwrap(), 2); // no cut vertices
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(evc_lower_bound(&disconnected).unwrap_err(), StructuralError::Disconnected);
    }

    #[test]
    fn locally_connected_pipeline() {
        let report = evc_locally_connected(&p4()).unwrap().unwrap();
        assert_eq!(report.lower_bound, 2);
        assert_eq!(report.evc, Some(3));
        assert_eq!(report.plus_one_witness, Some(0));

        let report = evc_locally_connected(&bowtie()).unwrap().unwrap();
        assert_eq!(report.evc, Some(3));
        assert_eq!(report.plus_one_witness, None);

        let report = evc_locally_connected(&star()).unwrap().unwrap();
        assert_eq!(report.lower_bound, 1);
        assert_eq!(report.evc, Some(2));

        assert!(evc_locally_connected(&c4()).unwrap().is_none());

        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(evc_locally_connected(&k1).unwrap_err(), StructuralError::TooSmall);
    }

    #[test]
    fn chordal_pipeline() {
        assert_eq!(evc_chordal(&p4()).unwrap().evc, Some(3));
        assert_eq!(evc_chordal(&bowtie()).unwrap().evc, Some(3));
        assert_eq!(evc_chordal(&k4()).unwrap().evc, Some(3));
        assert_eq!(evc_chordal(&c4()).unwrap_err(), StructuralError::NotChordal);
    }

    #[test]
    fn chordal_matches_locally_connected_and_cover_maximum() {
        for g in [p3(), p4(), k3(), k4(), star(), bowtie()] {
            let a = evc_chordal(&g).unwrap().evc.unwrap();
            let b = evc_locally_connected(&g).unwrap().unwrap().evc.unwrap();
            let c = evc_cover_maximum(&g).unwrap();
            assert_eq!(a, b);
            assert_eq!(b, c, "cover-maximum disagrees on {g:?}");
        }
    }

    #[test]
    fn cover_maximum_cases() {
        assert_eq!(evc_cover_maximum(&p4()).unwrap(), 3);
        assert_eq!(evc_cover_maximum(&star()).unwrap(), 2);
        assert_eq!(evc_cover_maximum(&bowtie()).unwrap(), 3);
        assert_eq!(
            evc_cover_maximum(&c4()).unwrap_err(),
            StructuralError::BlocksNotLocallyConnected
        );
    }

    #[test]
    fn locally_connected_blocks_imply_connected_min_covers() {
        for g in [p3(), p4(), k3(), k4(), star(), bowtie()] {
            assert!(all_min_forced_covers_connected(&g), "failed on {g:?}");
        }
    }

    #[test]
    fn certificate_checks() {
        assert!(verify_certificate(&p4(), 3, &[vec![0, 1, 2], vec![1, 2, 3]]).valid);
        let bad = verify_certificate(&p4(), 2, &[vec![1, 2]]);
        assert!(!bad.valid);
        assert!(bad.reason.is_some());
        assert!(verify_certificate(&bowtie(), 3, &[vec![0, 1, 3], vec![0, 2, 4]]).valid);
        // malformed: out-of-range vertex
        assert!(!verify_certificate(&p4(), 3, &[vec![0, 9]]).valid);
        // malformed: not a cover
        assert!(!verify_certificate(&p4(), 3, &[vec![0, 3]]).valid);
    }

    #[test]
    fn reported_certificate_verifies() {
        for g in [p4(), k4(), star(), bowtie()] {
            let report = evc_chordal(&g).unwrap();
            let evc = report.evc.unwrap();
            assert!(verify_certificate(&g, evc, &report.certificate).valid);
            if report.plus_one_witness.is_some() {
                assert!(!verify_certificate(&g, evc - 1, &report.certificate).valid);
            }
        }
    }

    #[test]
    fn lemma1_identities() {
        for g in [p3(), p4(), star(), bowtie()] {
            let report = verify_lemma1(&g);
            assert!(report.passed(), "failures: {:?}", report.failures);
            assert!(report.instances_checked > 0);
        }
        // no cut vertices: empty report
        assert_eq!(verify_lemma1(&c4()).instances_checked, 0);
    }

    #[test]
    fn lemma2_identities() {
        for g in [p3(), p4(), star(), bowtie()] {
            let report = verify_lemma2(&g);
            assert!(report.passed(), "failures: {:?}", report.failures);
        }
        // P4's inner block has no eligible vertex: both members are cut
        let report = verify_lemma2(&p4());
        assert_eq!(report.skipped, 1);
        assert_eq!(report.instances_checked, 2);
    }

    #[test]
    fn cut_property_on_p4_from_p3() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let extension = attach_extension(&p3(), 2, &k2, 0).unwrap();
        assert_eq!(extension, p4());
        let report = verify_evc_cut_property(&p3(), 2, &extension, 1).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.instances_checked > 0);
    }

    #[test]
    fn cut_property_on_bowtie_from_k3() {
        let extension = attach_extension(&k3(), 0, &k3(), 0).unwrap();
        let report = verify_evc_cut_property(&k3(), 0, &extension, 1).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn cut_property_when_attach_is_already_a_cut_vertex() {
        // gluing a leaf onto the center of P3 gives the star; the base
        // minus the attach vertex is disconnected, which is fine
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let extension = attach_extension(&p3(), 1, &k2, 0).unwrap();
        let report = verify_evc_cut_property(&p3(), 1, &extension, 1).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.instances_checked > 0);
    }

    #[test]
    fn cut_property_rejects_non_extensions() {
        // P4 does not induce C4's prefix
        assert!(verify_evc_cut_property(&p3(), 0, &c4(), 0).is_err());
        // nothing added
        assert!(verify_evc_cut_property(&p4(), 0, &p4(), 0).is_err());
    }

    #[test]
    fn observation1_cases() {
        // bowtie: evc = mvc_X = 3, so every class member occupies vertex 0
        let report = verify_observation1(&bowtie());
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.instances_checked > 0);
        assert_eq!(report.skipped, 0);

        // star and P3: evc exceeds mvc_X, so the check is skipped
        for g in [star(), p3()] {
            let report = verify_observation1(&g);
            assert_eq!(report.skipped, 1);
            assert_eq!(report.instances_checked, 0);
        }
    }

    #[test]
    fn structural_agrees_with_game_solver_on_fixtures() {
        for g in [p3(), p4(), k3(), k4(), star(), bowtie()] {
            let fast = evc_chordal(&g).unwrap().evc.unwrap();
            let exact = evc_exact(&g, OccupancyModel::Multi).k as usize;
            assert_eq!(fast, exact, "mismatch on {g:?}");
        }
    }
}

//! Test-only exhaustive oracles, independent of the implementation paths
//! they are used to check.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};

/// True iff `set` covers every edge of `g`.
pub fn is_vertex_cover(g: &Graph, set: &[VertexId]) -> bool {
    let mut inside = alloc::vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().iter().all(|&(u, v)| inside[u] || inside[v])
}

/// Minimum vertex cover size by subset enumeration (n <= ~20).
pub fn mvc_by_enumeration(g: &Graph) -> usize {
    mvc_forced_by_enumeration(g, &[])
}

/// Minimum size of a vertex cover containing `forced`, by subset
/// enumeration over all supersets of `forced`.
pub fn mvc_forced_by_enumeration(g: &Graph, forced: &[VertexId]) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "enumeration oracle is for small graphs");
    let forced_mask: u32 = forced.iter().fold(0, |m, &v| m | (1 << v));
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        if mask & forced_mask != forced_mask {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let covered = g
            .edges()
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0);
        if covered {
            best = size;
        }
    }
    best
}

/// Cut vertices by the definition: removal increases the component count.
/// (An isolated vertex only removes its own component, so it never counts.)
pub fn cut_vertices_by_removal(g: &Graph) -> Vec<VertexId> {
    let base = g.connected_components().len();
    let mut cuts = Vec::new();
    for v in g.vertices() {
        let (h, _) = g.remove_vertices(&[v]).unwrap();
        if h.connected_components().len() > base {
            cuts.push(v);
        }
    }
    cuts
}

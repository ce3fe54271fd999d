//! Immutable simple undirected graphs over dense vertex ids.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

/// Dense 0-based vertex id, always `< n` of the owning [`Graph`].
pub type VertexId = usize;

/// Construction error naming the offending input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is `>= n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge of the form `(u, u)`.
    SelfLoop { vertex: usize },
    /// The same unordered pair appeared twice in the edge list.
    DuplicateEdge { u: usize, v: usize },
    /// A vertex-set argument contains an id `>= n`.
    InvalidSubset { vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::InvalidSubset { vertex, n } => {
                write!(f, "subset contains vertex {vertex}, out of range for n = {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph, immutable after construction.
///
/// Edges are stored normalized (`u < v`, sorted) and mirrored into sorted
/// per-vertex adjacency lists, so `edge_index` and `has_edge` are binary
/// searches and iteration order is always deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Edge order and endpoint order in the input are irrelevant.
    pub fn from_edges<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edge_list {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges, normalized `u < v` and sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Iterator over `0..n`.
    pub fn vertices(&self) -> Range<VertexId> {
        0..self.n
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the normalized edge in [`Self::edges`], if present.
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Induced subgraph on `sub` together with the id bijection
    /// `sub -> 0..|sub|`. Duplicates in `sub` are ignored.
    pub fn induced_subgraph(&self, sub: &[VertexId]) -> Result<(Graph, SubgraphMap), GraphError> {
        for &v in sub {
            if v >= self.n {
                return Err(GraphError::InvalidSubset { vertex: v, n: self.n });
            }
        }
        let mut to_parent: Vec<VertexId> = sub.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        let map = SubgraphMap { to_parent };
        let mut edges = Vec::new();
        for (new_u, &old_u) in map.to_parent.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if old_v > old_u {
                    if let Some(new_v) = map.to_sub(old_v) {
                        edges.push((new_u, new_v));
                    }
                }
            }
        }
        let g = Graph::from_edges(map.to_parent.len(), edges)
            .expect("induced edges are valid by construction");
        Ok((g, map))
    }

    /// Induced subgraph on the complement of `removed`.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> Result<(Graph, SubgraphMap), GraphError> {
        for &v in removed {
            if v >= self.n {
                return Err(GraphError::InvalidSubset { vertex: v, n: self.n });
            }
        }
        let mut drop = alloc::vec![false; self.n];
        for &v in removed {
            drop[v] = true;
        }
        let keep: Vec<VertexId> = (0..self.n).filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Partition of `0..n` into maximal connected parts, each sorted, the
    /// list ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = alloc::vec![false; self.n];
        let mut parts = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut part = Vec::new();
            while let Some(v) = stack.pop() {
                part.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }
}

/// Bijection between a sorted vertex subset of a parent graph and the dense
/// ids `0..|sub|` of the induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphMap {
    to_parent: Vec<VertexId>,
}

impl SubgraphMap {
    /// Parent id of a subgraph vertex.
    pub fn to_parent(&self, sub_id: VertexId) -> VertexId {
        self.to_parent[sub_id]
    }

    /// Subgraph id of a parent vertex, if the vertex is in the subset.
    pub fn to_sub(&self, parent_id: VertexId) -> Option<VertexId> {
        self.to_parent.binary_search(&parent_id).ok()
    }

    /// The subset in parent ids, sorted; position = subgraph id.
    pub fn parent_ids(&self) -> &[VertexId] {
        &self.to_parent
    }

    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn builds_p3() {
        let g = p3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn builds_single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = Graph::from_edges(3, [(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
        // reversed orientation is the same unordered pair
        let err = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(
            Graph::from_edges(3, [(2, 2)]).unwrap_err(),
            GraphError::SelfLoop { vertex: 2 }
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 3 }
        );
    }

    #[test]
    fn induced_subgraph_p3_prefix_is_k2() {
        let (h, map) = p3().induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
        assert_eq!(map.parent_ids(), &[0, 1]);
    }

    #[test]
    fn induced_subgraph_of_c4_is_p3() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (h, _) = c4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_of_bowtie_triangle() {
        // exhaustive edge-membership check of the induced triangle
        let (h, map) = bowtie().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        for u in 0..3 {
            for v in (u + 1)..3 {
                let (pu, pv) = (map.to_parent(u), map.to_parent(v));
                assert_eq!(h.has_edge(u, v), bowtie().has_edge(pu, pv));
                assert!(h.has_edge(u, v));
            }
        }
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        assert!(p3().induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn components_of_p3() {
        assert_eq!(p3().connected_components(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn components_of_two_edges() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn components_after_deleting_path_vertex() {
        // P4 minus vertex 1: vertices {0, 2, 3}, edge (2, 3)
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = p4.remove_vertices(&[1]).unwrap();
        let parts: Vec<Vec<usize>> = h
            .connected_components()
            .into_iter()
            .map(|p| p.into_iter().map(|v| map.to_parent(v)).collect())
            .collect();
        assert_eq!(parts, vec![vec![0], vec![2, 3]]);
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in [p3(), bowtie()] {
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn induced_on_full_vertex_set_is_identity() {
        let g = bowtie();
        let all: Vec<usize> = g.vertices().collect();
        let (h, map) = g.induced_subgraph(&all).unwrap();
        assert_eq!(h, g);
        assert!(g.vertices().all(|v| map.to_parent(v) == v));
    }
}

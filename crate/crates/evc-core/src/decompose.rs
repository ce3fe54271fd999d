//! Cut vertices, blocks, and the attachment components used by the
//! structural evc algorithms.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, SubgraphMap, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    /// `x_components` requires its pivot to be a cut vertex.
    NotACutVertex { vertex: VertexId },
    /// The given vertex set is not a block of the graph.
    NotABlock,
    /// The attached piece must have at least two vertices.
    ExtensionTooSmall,
    /// The attached piece must be connected.
    ExtensionDisconnected,
    Graph(GraphError),
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::NotACutVertex { vertex } => {
                write!(f, "vertex {vertex} is not a cut vertex")
            }
            DecomposeError::NotABlock => write!(f, "vertex set is not a block"),
            DecomposeError::ExtensionTooSmall => {
                write!(f, "attached piece needs at least two vertices")
            }
            DecomposeError::ExtensionDisconnected => write!(f, "attached piece is disconnected"),
            DecomposeError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DecomposeError {}

impl From<GraphError> for DecomposeError {
    fn from(e: GraphError) -> Self {
        DecomposeError::Graph(e)
    }
}

/// Cut vertices and blocks of a graph, with the edge-to-block assignment.
///
/// Blocks are maximal biconnected subgraphs; a bridge is a two-vertex
/// block. Every edge lies in exactly one block, and a vertex lies in two
/// or more blocks exactly when it is a cut vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutStructure {
    cut_vertices: Vec<VertexId>,
    blocks: Vec<Vec<VertexId>>,
    block_of_edge: Vec<usize>,
}

impl BlockCutStructure {
    /// Sorted cut-vertex set `X`.
    pub fn cut_vertices(&self) -> &[VertexId] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Blocks as sorted vertex sets, in a canonical (sorted) order.
    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    /// Block index of the edge at `edge_index` in the owning graph.
    pub fn block_of_edge(&self, edge_index: usize) -> usize {
        self.block_of_edge[edge_index]
    }

    /// Index of the block with exactly this vertex set, if any.
    pub fn find_block(&self, vertices: &[VertexId]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        key.dedup();
        self.blocks.iter().position(|b| *b == key)
    }

    /// `X(B)`: the cut vertices lying in the given block, sorted.
    pub fn block_cut_vertices(&self, block: usize) -> Vec<VertexId> {
        self.blocks[block]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }
}

/// Computes cut vertices and biconnected components with the standard
/// lowpoint depth-first search (explicit stack, so deep graphs are fine).
pub fn block_cut_structure(g: &Graph) -> BlockCutStructure {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = alloc::vec![UNSEEN; n];
    let mut low = alloc::vec![0usize; n];
    let mut parent = alloc::vec![UNSEEN; n];
    let mut is_cut = alloc::vec![false; n];
    let mut timer = 0usize;
    let mut raw_blocks: Vec<Vec<VertexId>> = Vec::new();
    let mut raw_block_of_edge = alloc::vec![usize::MAX; g.edge_count()];
    let mut edge_stack: Vec<usize> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        let mut stack: Vec<(VertexId, usize)> = alloc::vec![(root, 0)];
        while let Some(frame) = stack.last_mut() {
            let v = frame.0;
            if frame.1 < g.degree(v) {
                let w = g.neighbors(v)[frame.1];
                frame.1 += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    if v == root {
                        root_children += 1;
                    }
                    edge_stack.push(g.edge_index(v, w).expect("adjacency edge exists"));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push(g.edge_index(v, w).expect("adjacency edge exists"));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let closing = g.edge_index(u, v).expect("tree edge exists");
                        let block_idx = raw_blocks.len();
                        let mut members: Vec<VertexId> = Vec::new();
                        loop {
                            let e = edge_stack.pop().expect("closing edge is on the stack");
                            raw_block_of_edge[e] = block_idx;
                            let (a, b) = g.edges()[e];
                            members.push(a);
                            members.push(b);
                            if e == closing {
                                break;
                            }
                        }
                        members.sort_unstable();
                        members.dedup();
                        raw_blocks.push(members);
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    // canonical block order, with the edge map remapped to match
    let mut order: Vec<usize> = (0..raw_blocks.len()).collect();
    order.sort_unstable_by(|&a, &b| raw_blocks[a].cmp(&raw_blocks[b]));
    let mut rank = alloc::vec![0usize; raw_blocks.len()];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        rank[old_idx] = new_idx;
    }
    let blocks: Vec<Vec<VertexId>> = order.iter().map(|&i| raw_blocks[i].clone()).collect();
    let block_of_edge: Vec<usize> = raw_block_of_edge.iter().map(|&b| rank[b]).collect();

    BlockCutStructure {
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        blocks,
        block_of_edge,
    }
}

/// One attachment component: the induced subgraph on `{x} ∪ H` for a
/// component `H` of `G \ x`, keeping the id mapping back into the parent.
#[derive(Clone, Debug)]
pub struct ComponentPiece {
    pub subgraph: Graph,
    /// The attachment vertex, as a parent-graph id.
    pub attach_vertex: VertexId,
    pub map: SubgraphMap,
}

impl ComponentPiece {
    /// Id of the attachment vertex inside the piece.
    pub fn attach_in_piece(&self) -> VertexId {
        self.map
            .to_sub(self.attach_vertex)
            .expect("attach vertex is part of the piece")
    }
}

/// Splits `g` at the cut vertex `x` into its attachment components, one per
/// component of `g \ x`. Pieces pairwise share only `x`.
pub fn x_components(g: &Graph, x: VertexId) -> Result<Vec<ComponentPiece>, DecomposeError> {
    if x >= g.vertex_count() {
        return Err(DecomposeError::Graph(GraphError::InvalidSubset {
            vertex: x,
            n: g.vertex_count(),
        }));
    }
    let (rest, rest_map) = g.remove_vertices(&[x]).expect("x is in range");
    let base_components = g.connected_components().len();
    let parts = rest.connected_components();
    if parts.len() <= base_components {
        return Err(DecomposeError::NotACutVertex { vertex: x });
    }
    let mut pieces = Vec::new();
    for part in parts {
        let mut vertex_set: Vec<VertexId> = part.iter().map(|&v| rest_map.to_parent(v)).collect();
        // components of g not containing x come back unchanged; they are
        // not attachment components
        if !part
            .iter()
            .any(|&v| g.neighbors(x).contains(&rest_map.to_parent(v)))
        {
            // a component with no edge to x is only valid when g itself is
            // disconnected; x-components are defined against the component
            // of x, so skip it
            continue;
        }
        vertex_set.push(x);
        let (subgraph, map) = g.induced_subgraph(&vertex_set).expect("subset is valid");
        pieces.push(ComponentPiece {
            subgraph,
            attach_vertex: x,
            map,
        });
    }
    if pieces.len() < 2 {
        return Err(DecomposeError::NotACutVertex { vertex: x });
    }
    Ok(pieces)
}

/// The attachment components hanging off a block: every `x`-component, for
/// `x` a cut vertex in the block, that shares no edge with the block.
pub fn b_components(
    g: &Graph,
    block_vertices: &[VertexId],
) -> Result<Vec<ComponentPiece>, DecomposeError> {
    let bcs = block_cut_structure(g);
    let block = bcs.find_block(block_vertices).ok_or(DecomposeError::NotABlock)?;
    let mut in_block = alloc::vec![false; g.vertex_count()];
    for &v in &bcs.blocks()[block] {
        in_block[v] = true;
    }
    let mut pieces = Vec::new();
    for x in bcs.block_cut_vertices(block) {
        for piece in x_components(g, x)? {
            let edge_disjoint = piece.subgraph.edges().iter().all(|&(a, b)| {
                !(in_block[piece.map.to_parent(a)] && in_block[piece.map.to_parent(b)])
            });
            if edge_disjoint {
                pieces.push(piece);
            }
        }
    }
    Ok(pieces)
}

/// Glues `piece` onto `base` by identifying `piece_attach` with `attach`:
/// the result keeps `base`'s ids and appends the remaining piece vertices.
///
/// When `base` is connected with at least two vertices, `attach` is a cut
/// vertex of the result and the result is an attachment extension of
/// `base` (the inverse of [`x_components`]).
pub fn attach_extension(
    base: &Graph,
    attach: VertexId,
    piece: &Graph,
    piece_attach: VertexId,
) -> Result<Graph, DecomposeError> {
    if attach >= base.vertex_count() {
        return Err(DecomposeError::Graph(GraphError::InvalidSubset {
            vertex: attach,
            n: base.vertex_count(),
        }));
    }
    if piece_attach >= piece.vertex_count() {
        return Err(DecomposeError::Graph(GraphError::InvalidSubset {
            vertex: piece_attach,
            n: piece.vertex_count(),
        }));
    }
    if piece.vertex_count() < 2 {
        return Err(DecomposeError::ExtensionTooSmall);
    }
    if !piece.is_connected() {
        return Err(DecomposeError::ExtensionDisconnected);
    }
    let nb = base.vertex_count();
    let relabel = |w: VertexId| -> VertexId {
        if w == piece_attach {
            attach
        } else if w < piece_attach {
            nb + w
        } else {
            nb + w - 1
        }
    };
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    edges.extend(piece.edges().iter().map(|&(a, b)| (relabel(a), relabel(b))));
    Ok(Graph::from_edges(nb + piece.vertex_count() - 1, edges)?)
}

/// True iff every open neighborhood induces a connected subgraph.
///
/// A single-vertex neighborhood is connected; an isolated vertex fails the
/// test except in the one-vertex graph, which passes vacuously.
pub fn is_locally_connected(g: &Graph) -> bool {
    if g.vertex_count() <= 1 {
        return true;
    }
    for v in g.vertices() {
        let nb = g.neighbors(v);
        if nb.is_empty() {
            return false;
        }
        if nb.len() <= 1 {
            continue;
        }
        let (h, _) = g.induced_subgraph(nb).expect("neighbors are in range");
        if !h.is_connected() {
            return false;
        }
    }
    true
}

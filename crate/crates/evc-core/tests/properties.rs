//! Property-based invariants across the core modules.

use evc_core::*;
use proptest::prelude::*;

/// Edge bit positions enumerate pairs (u, v), u < v, lexicographically.
fn pair_of(n: usize, idx: usize) -> (usize, usize) {
    let mut k = idx;
    for u in 0..n {
        let row = n - u - 1;
        if k < row {
            return (u, u + 1 + k);
        }
        k -= row;
    }
    unreachable!("edge index out of range")
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let m = n * (n - 1) / 2;
    let edges = (0..m).filter(|&e| mask & (1 << e) != 0).map(|e| pair_of(n, e));
    Graph::from_edges(n, edges).expect("mask edges are valid")
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (0u32..(1u32 << m)).prop_map(move |mask| graph_from_mask(n, mask))
    })
}

fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

/// Cut vertices straight from the definition, independent of the
/// lowpoint implementation.
fn cut_vertices_by_removal(g: &Graph) -> Vec<VertexId> {
    let base = g.connected_components().len();
    g.vertices()
        .filter(|&v| {
            let (h, _) = g.remove_vertices(&[v]).unwrap();
            h.connected_components().len() > base
        })
        .collect()
}

fn is_cover(g: &Graph, set: &[VertexId]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| set.binary_search(&u).is_ok() || set.binary_search(&v).is_ok())
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(8)) {
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(8)) {
        let mut seen = vec![0usize; g.vertex_count()];
        for part in g.connected_components() {
            prop_assert!(!part.is_empty());
            for v in part {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn induced_on_all_vertices_is_identity(g in arb_graph(8)) {
        let all: Vec<usize> = g.vertices().collect();
        let (h, map) = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert!(g.vertices().all(|v| map.to_parent(v) == v));
    }

    #[test]
    fn cut_vertices_match_removal_definition(g in arb_graph(8)) {
        let bcs = block_cut_structure(&g);
        let expected = cut_vertices_by_removal(&g);
        prop_assert_eq!(bcs.cut_vertices(), expected.as_slice());
    }

    #[test]
    fn vertex_in_two_blocks_iff_cut_vertex(g in arb_graph(8)) {
        let bcs = block_cut_structure(&g);
        for v in g.vertices() {
            let count = bcs.blocks().iter().filter(|b| b.binary_search(&v).is_ok()).count();
            prop_assert_eq!(count >= 2, bcs.is_cut_vertex(v));
        }
    }

    #[test]
    fn block_tree_identity_on_connected(g in arb_connected_graph(8)) {
        let bcs = block_cut_structure(&g);
        let total: usize = bcs.blocks().iter().map(|b| b.len() - 1).sum();
        prop_assert_eq!(total, g.vertex_count().saturating_sub(1));
    }

    #[test]
    fn x_components_cover_and_meet_in_x(g in arb_connected_graph(8)) {
        let bcs = block_cut_structure(&g);
        for &x in bcs.cut_vertices() {
            let pieces = x_components(&g, x).unwrap();
            prop_assert!(pieces.len() >= 2);
            let mut seen = vec![0usize; g.vertex_count()];
            for piece in &pieces {
                prop_assert!(piece.subgraph.is_connected());
                for &v in piece.map.parent_ids() {
                    seen[v] += 1;
                }
            }
            for v in g.vertices() {
                prop_assert_eq!(seen[v], if v == x { pieces.len() } else { 1 });
            }
        }
    }

    #[test]
    fn b_component_edges_avoid_the_block(g in arb_connected_graph(7)) {
        let bcs = block_cut_structure(&g);
        for block in bcs.blocks() {
            for piece in b_components(&g, block).unwrap() {
                for &(a, b) in piece.subgraph.edges() {
                    let (pa, pb) = (piece.map.to_parent(a), piece.map.to_parent(b));
                    prop_assert!(!(block.binary_search(&pa).is_ok()
                        && block.binary_search(&pb).is_ok()));
                }
            }
        }
    }

    #[test]
    fn forced_empty_equals_exact(g in arb_graph(8)) {
        prop_assert_eq!(mvc_forced(&g, &[]), mvc_exact(&g));
    }

    #[test]
    fn witnesses_cover_and_contain_forced(g in arb_graph(8), raw in proptest::collection::vec(0usize..8, 0..3)) {
        let forced: Vec<usize> = raw.into_iter().filter(|&v| v < g.vertex_count()).collect();
        let r = mvc_forced(&g, &forced);
        prop_assert!(is_cover(&g, &r.witness));
        prop_assert!(forced.iter().all(|f| r.witness.binary_search(f).is_ok()));
        prop_assert_eq!(r.witness.len(), r.size);
    }

    #[test]
    fn forcing_is_monotone(g in arb_graph(7), x in 0usize..7, y in 0usize..7) {
        let n = g.vertex_count();
        let (x, y) = (x % n, y % n);
        let small = mvc_forced(&g, &[x]).size;
        let big = mvc_forced(&g, &[x, y]).size;
        prop_assert!(small <= big);
        prop_assert!(big <= small + 1);
    }

    #[test]
    fn single_extra_forced_vertex_costs_at_most_one(g in arb_graph(8)) {
        let base = mvc_exact(&g).size;
        for v in g.vertices() {
            let forced = mvc_forced(&g, &[v]).size;
            prop_assert!(forced == base || forced == base + 1);
        }
    }

    #[test]
    fn chordal_cover_matches_exact(g in arb_graph(8)) {
        if let Some(order) = is_chordal(&g) {
            let fast = chordal_mvc(&g, &order).unwrap();
            prop_assert_eq!(fast.size, mvc_exact(&g).size);
            prop_assert!(is_cover(&g, &fast.witness));
        }
    }

    #[test]
    fn chordal_forced_matches_oracle(g in arb_graph(7), v in 0usize..7) {
        let v = v % g.vertex_count();
        if is_chordal(&g).is_some() {
            prop_assert_eq!(
                chordal_mvc_forced(&g, &[v]).unwrap().size,
                mvc_forced(&g, &[v]).size
            );
        }
    }
}

proptest! {
    // the game solver is exponential; keep the instance count low
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evc_at_least_mvc(g in arb_connected_graph(5)) {
        let solution = evc_exact(&g, OccupancyModel::Multi);
        prop_assert!(solution.k as usize >= mvc_exact(&g).size);
        prop_assert!(solution.class.verify_closure(&g));
    }

    #[test]
    fn evc_at_least_cut_constrained_cover(g in arb_connected_graph(6)) {
        let solution = evc_exact(&g, OccupancyModel::Multi);
        prop_assert!(solution.k as usize >= evc_lower_bound(&g).unwrap());
    }

    #[test]
    fn single_model_at_least_multi(g in arb_connected_graph(5)) {
        let multi = evc_exact(&g, OccupancyModel::Multi).k;
        let single = evc_exact(&g, OccupancyModel::Single).k;
        prop_assert!(single >= multi);
    }

    #[test]
    fn class_survives_one_extra_guard(g in arb_connected_graph(5)) {
        let k = evc_exact(&g, OccupancyModel::Multi).k;
        prop_assert!(!evc_class(&g, k + 1, OccupancyModel::Multi, &[]).is_empty());
    }

    #[test]
    fn pruning_does_not_change_the_fixpoint(g in arb_connected_graph(5), k in 1u32..4) {
        let pruned = evc_class(&g, k, OccupancyModel::Multi, &[]);
        let unpruned = game::evc_class_unpruned(&g, k, OccupancyModel::Multi, &[]);
        prop_assert_eq!(pruned.configs(), unpruned.configs());
    }
}

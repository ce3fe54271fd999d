//! Seeded random instance generators.
//!
//! Everything is driven by a `ChaCha8` stream, so a (kind, n, density,
//! seed) tuple always produces the same graph on every platform and
//! parallelism setting.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Result};
use evc_core::{is_chordal, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Tree,
    Chordal,
    Interval,
    Connected,
}

impl FromStr for GenKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" => Ok(GenKind::Tree),
            "chordal" => Ok(GenKind::Chordal),
            "interval" => Ok(GenKind::Interval),
            "connected" => Ok(GenKind::Connected),
            other => bail!("unknown generator kind {other:?}"),
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::Tree => "tree",
            GenKind::Chordal => "chordal",
            GenKind::Interval => "interval",
            GenKind::Connected => "connected",
        })
    }
}

/// Deterministic generation; `density` is interpreted per kind:
/// for `tree` it is ignored, for `chordal` and `connected` it scales the
/// number of extra edges beyond the spanning skeleton (roughly
/// `density * n` additions are attempted), and for `interval` it is the
/// target average degree.
pub fn generate(kind: GenKind, n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        bail!("generator needs n >= 1");
    }
    if !(density >= 0.0) {
        bail!("density must be nonnegative");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match kind {
        GenKind::Tree => random_tree(n, &mut rng),
        GenKind::Chordal => random_chordal(n, density, &mut rng),
        GenKind::Interval => random_interval(n, density, &mut rng),
        GenKind::Connected => random_connected(n, density, &mut rng),
    };
    Ok(g)
}

pub(crate) fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> =
        (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, edges).expect("tree edges are simple")
}

pub(crate) fn random_connected(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut present: std::collections::BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let attempts = (density * n as f64).round() as usize;
    for _ in 0..attempts {
        if n < 2 {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push(key);
        }
    }
    let g = Graph::from_edges(n, edges).expect("deduped simple edges");
    debug_assert!(g.is_connected());
    g
}

/// Random connected chordal graph: a spanning skeleton in which every
/// vertex keeps a single later neighbor (so the natural order is a
/// perfect elimination order), then fill edges added only when the new
/// later neighbor is adjacent to all current ones, which preserves the
/// elimination property. Certified chordal before returning.
pub(crate) fn random_chordal(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for v in 0..n.saturating_sub(1) {
        let w = rng.gen_range(v + 1..n);
        later[v].push(w);
        edges.insert((v, w));
    }
    let attempts = (density * n as f64).round() as usize;
    for _ in 0..attempts {
        if n < 3 {
            break;
        }
        let u = rng.gen_range(0..n - 1);
        let w = rng.gen_range(u + 1..n);
        if edges.contains(&(u, w)) {
            continue;
        }
        if later[u].iter().all(|&x| x == w || edges.contains(&(x.min(w), x.max(w)))) {
            later[u].push(w);
            edges.insert((u, w));
        }
    }
    let g = Graph::from_edges(n, edges).expect("simple by construction");
    assert!(is_chordal(&g).is_some(), "generator postcondition: chordal");
    debug_assert!(n < 2 || g.is_connected());
    g
}

/// Random interval graph with `density` as the target average degree:
/// intervals get uniform starts and lengths around `density / n`, and
/// overlaps become edges via an endpoint sweep. Certified chordal.
pub(crate) fn random_interval(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mean_len = if n > 1 { density / (2.0 * (n as f64 - 1.0)) } else { 0.0 };
    let intervals: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let start = rng.gen::<f64>();
            let len = rng.gen::<f64>() * 2.0 * mean_len;
            (start, start + len)
        })
        .collect();
    // sweep the starts in order; an interval overlaps all active intervals
    // whose end is not before its start
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| intervals[a].0.total_cmp(&intervals[b].0).then(a.cmp(&b)));
    let mut active: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &i in &order {
        active.retain(|&j| intervals[j].1 >= intervals[i].0);
        for &j in &active {
            edges.push((j.min(i), j.max(i)));
        }
        active.push(i);
    }
    let g = Graph::from_edges(n, edges).expect("overlap edges are simple");
    assert!(is_chordal(&g).is_some(), "generator postcondition: chordal");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use evc_core::block_cut_structure;

    #[test]
    fn tree_is_connected_and_acyclic() {
        let g = generate(GenKind::Tree, 5, 0.0, 1).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn chordal_generator_is_certified() {
        for seed in 0..20 {
            let g = generate(GenKind::Chordal, 50, 2.0, seed).unwrap();
            assert!(is_chordal(&g).is_some());
            assert!(g.is_connected());
        }
        let g = generate(GenKind::Chordal, 50, 7.0, 7).unwrap();
        assert!(g.edge_count() > 49, "fills were added");
    }

    #[test]
    fn interval_generator_hits_density_band() {
        let g = generate(GenKind::Interval, 3000, 20.0, 3).unwrap();
        assert!(is_chordal(&g).is_some());
        let m = g.edge_count();
        assert!(
            (15_000..=60_000).contains(&m),
            "edge count {m} far from the target band"
        );
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate(GenKind::Connected, 30, 1.5, 99).unwrap();
        let b = generate(GenKind::Connected, 30, 1.5, 99).unwrap();
        assert_eq!(a, b);
        let c = generate(GenKind::Connected, 30, 1.5, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn connected_generator_often_has_cut_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut with_cut = 0;
        for _ in 0..20 {
            let g = random_connected(8, 0.5, &mut rng);
            if !block_cut_structure(&g).cut_vertices().is_empty() {
                with_cut += 1;
            }
        }
        assert!(with_cut > 10);
    }
}

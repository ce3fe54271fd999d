//! Verification corpora: exhaustive small-graph enumeration up to
//! isomorphism and seeded random instance families, all addressable by a
//! compact descriptor string so runs are reproducible.
//!
//! Descriptor grammar:
//!
//! * `all-connected-n<K>` — every connected graph on 1..=K vertices, one
//!   representative per isomorphism class (K <= 7);
//! * `random-cut:n=<N>,count=<C>,seed=<S>` — C seeded random connected
//!   graphs with at least one cut vertex, 3..=N vertices each;
//! * `random-chordal:n=<N>,count=<C>,seed=<S>` — C seeded random
//!   connected chordal graphs on 2..=N vertices;
//! * `random-extensions:max=<N>,count=<C>,seed=<S>` — C seeded
//!   (base, attach vertex, extension) triples with at most N vertices in
//!   the extension.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use evc_core::{attach_extension, block_cut_structure, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generate::{random_chordal, random_connected};

/// One permutation per call, recursively.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..remaining.len() {
            let x = remaining.remove(i);
            cur.push(x);
            rec(remaining, cur, out);
            cur.pop();
            remaining.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::with_capacity(n), &mut out);
    out
}

fn pair_table(n: usize) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let mut pairs = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for u in 0..n {
        for v in (u + 1)..n {
            index[u][v] = pairs.len();
            pairs.push((u, v));
        }
    }
    (pairs, index)
}

fn graph_from_mask(n: usize, mask: u32, pairs: &[(usize, usize)]) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(e, _)| mask & (1 << e) != 0)
        .map(|(_, &p)| p);
    Graph::from_edges(n, edges).expect("mask edges are simple")
}

/// All graphs on exactly `n` vertices up to isomorphism (n <= 7).
///
/// Scans edge masks in increasing order; the first unseen mask is the
/// least member of its isomorphism orbit, so it becomes the
/// representative and its whole orbit is marked seen.
pub fn graphs_up_to_iso(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "exhaustive enumeration supports n in 1..=7");
    let (pairs, index) = pair_table(n);
    let m = pairs.len();
    let edge_maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| {
            (0..m)
                .map(|e| {
                    let (u, v) = pairs[e];
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    index[a][b]
                })
                .collect()
        })
        .collect();
    let mut seen = vec![false; 1usize << m];
    let mut reps = Vec::new();
    for mask in 0..(1u32 << m) as u32 {
        if seen[mask as usize] {
            continue;
        }
        for em in &edge_maps {
            let mut img = 0u32;
            let mut rem = mask;
            while rem != 0 {
                let e = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                img |= 1 << em[e];
            }
            seen[img as usize] = true;
        }
        let g = graph_from_mask(n, mask, &pairs);
        if !connected_only || g.is_connected() {
            reps.push(g);
        }
    }
    reps
}

/// Connected graphs on 1..=`max_n` vertices up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| graphs_up_to_iso(n, true)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    AllConnected { max_n: usize },
    RandomCut { max_n: usize, count: usize, seed: u64 },
    RandomChordal { max_n: usize, count: usize, seed: u64 },
    RandomExtensions { max_total: usize, count: usize, seed: u64 },
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CorpusSpec::AllConnected { max_n } => write!(f, "all-connected-n{max_n}"),
            CorpusSpec::RandomCut { max_n, count, seed } => {
                write!(f, "random-cut:n={max_n},count={count},seed={seed}")
            }
            CorpusSpec::RandomChordal { max_n, count, seed } => {
                write!(f, "random-chordal:n={max_n},count={count},seed={seed}")
            }
            CorpusSpec::RandomExtensions { max_total, count, seed } => {
                write!(f, "random-extensions:max={max_total},count={count},seed={seed}")
            }
        }
    }
}

fn parse_fields(s: &str) -> Result<std::collections::BTreeMap<&str, u64>> {
    let mut map = std::collections::BTreeMap::new();
    for field in s.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got {field:?}"))?;
        let value: u64 = value.parse().map_err(|_| anyhow!("invalid number in {field:?}"))?;
        map.insert(key, value);
    }
    Ok(map)
}

impl FromStr for CorpusSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("all-connected-n") {
            let max_n: usize = rest.parse().map_err(|_| anyhow!("invalid corpus {s:?}"))?;
            if !(1..=7).contains(&max_n) {
                bail!("exhaustive corpus supports n up to 7");
            }
            return Ok(CorpusSpec::AllConnected { max_n });
        }
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("unknown corpus descriptor {s:?}"))?;
        let fields = parse_fields(rest)?;
        let get = |key: &str| -> Result<u64> {
            fields.get(key).copied().ok_or_else(|| anyhow!("corpus {s:?} is missing {key}="))
        };
        match name {
            "random-cut" => Ok(CorpusSpec::RandomCut {
                max_n: get("n")? as usize,
                count: get("count")? as usize,
                seed: get("seed")?,
            }),
            "random-chordal" => Ok(CorpusSpec::RandomChordal {
                max_n: get("n")? as usize,
                count: get("count")? as usize,
                seed: get("seed")?,
            }),
            "random-extensions" => Ok(CorpusSpec::RandomExtensions {
                max_total: get("max")? as usize,
                count: get("count")? as usize,
                seed: get("seed")?,
            }),
            other => bail!("unknown corpus family {other:?}"),
        }
    }
}

/// A materialized corpus: plain graphs or attachment-extension triples.
pub enum Corpus {
    Graphs(Vec<Graph>),
    Extensions(Vec<ExtensionInstance>),
}

pub struct ExtensionInstance {
    pub base: Graph,
    pub attach: usize,
    pub extension: Graph,
}

pub fn random_cut_graphs(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    assert!(max_n >= 3, "cut vertices need at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=max_n);
        let density = rng.gen::<f64>() * 0.8;
        let g = random_connected(n, density, &mut rng);
        if !block_cut_structure(&g).cut_vertices().is_empty() {
            out.push(g);
        }
    }
    out
}

pub fn random_chordal_graphs(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    assert!(max_n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let density = rng.gen::<f64>() * 2.0;
            random_chordal(n, density, &mut rng)
        })
        .collect()
}

pub fn random_extension_instances(
    max_total: usize,
    count: usize,
    seed: u64,
) -> Vec<ExtensionInstance> {
    assert!(max_total >= 4, "an extension needs a base and a piece of two vertices each");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let base_n = rng.gen_range(2..=max_total - 1);
            let piece_n = rng.gen_range(2..=max_total + 1 - base_n);
            let base = random_connected(base_n, rng.gen::<f64>() * 0.8, &mut rng);
            let piece = random_connected(piece_n, rng.gen::<f64>() * 0.8, &mut rng);
            let attach = rng.gen_range(0..base_n);
            let piece_attach = rng.gen_range(0..piece_n);
            let extension = attach_extension(&base, attach, &piece, piece_attach)
                .expect("connected pieces of size >= 2 always attach");
            ExtensionInstance { base, attach, extension }
        })
        .collect()
}

impl CorpusSpec {
    pub fn materialize(&self) -> Corpus {
        match *self {
            CorpusSpec::AllConnected { max_n } => Corpus::Graphs(connected_graphs_up_to(max_n)),
            CorpusSpec::RandomCut { max_n, count, seed } => {
                Corpus::Graphs(random_cut_graphs(max_n, count, seed))
            }
            CorpusSpec::RandomChordal { max_n, count, seed } => {
                Corpus::Graphs(random_chordal_graphs(max_n, count, seed))
            }
            CorpusSpec::RandomExtensions { max_total, count, seed } => {
                Corpus::Extensions(random_extension_instances(max_total, count, seed))
            }
        }
    }
}

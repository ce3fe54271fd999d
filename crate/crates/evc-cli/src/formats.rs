//! Graph file formats: whitespace edge lists and DIMACS.
//!
//! Both formats map external labels to dense 0-based ids; the label map is
//! kept so witness sets in reports show the labels from the input file.
//!
//! Edge list grammar: `#` starts a comment, blank lines are ignored,
//! every data line is two nonnegative integers. The first data line is
//! taken as an `n m` header when that reading is consistent (exactly `m`
//! data lines follow and every endpoint is `< n`); otherwise all data
//! lines are edges and `n` is the largest endpoint plus one.
//!
//! DIMACS grammar: `c` comment lines, one `p edge <n> <m>` header, then
//! exactly `m` lines `e <u> <v>` with 1-based endpoints.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use evc_core::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl GraphFormat {
    /// Format by file extension: `.col`, `.dimacs`, `.clq` read as DIMACS,
    /// anything else as an edge list.
    pub fn detect(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col") | Some("dimacs") | Some("clq") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => bail!("unknown format {other:?}, expected edgelist or dimacs"),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Dimacs => "dimacs",
        })
    }
}

/// A graph together with the external labels of its vertices.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// External label of each internal id.
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Labels every vertex by its own id.
    pub fn with_identity_labels(graph: Graph) -> Self {
        let labels = graph.vertices().map(|v| v.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels_of(&self, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Internal id of an external label.
    pub fn resolve(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }
}

fn parse_endpoint(token: &str, line_no: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| anyhow!("line {line_no}: invalid vertex {token:?}"))
}

fn build(n: usize, edges: Vec<(usize, usize, usize)>, labels: Vec<String>) -> Result<LabeledGraph> {
    // check range/self-loop/duplicate per edge so the error names a line
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, line_no) in &edges {
        if u >= n || v >= n {
            bail!("line {line_no}: endpoint out of range (n = {n})");
        }
        if u == v {
            bail!("line {line_no}: self-loop at {u}");
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if !seen.insert(key) {
            bail!("line {line_no}: duplicate edge ({u}, {v})");
        }
    }
    let graph = Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v)))
        .map_err(|e| anyhow!("{e}"))?;
    Ok(LabeledGraph { graph, labels })
}

fn parse_edgelist(text: &str) -> Result<LabeledGraph> {
    let mut data: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let a = parse_endpoint(it.next().expect("nonempty line"), line_no)?;
        let b = it
            .next()
            .map(|t| parse_endpoint(t, line_no))
            .transpose()?
            .ok_or_else(|| anyhow!("line {line_no}: expected two vertices"))?;
        if it.next().is_some() {
            bail!("line {line_no}: expected exactly two fields");
        }
        data.push((a, b, line_no));
    }
    // header interpretation: first data line n m, consistent with the rest
    if let Some(&(n, m, _)) = data.first() {
        let rest = &data[1..];
        if rest.len() == m && rest.iter().all(|&(u, v, _)| u < n && v < n && u != v) {
            let labels = (0..n).map(|v| v.to_string()).collect();
            return build(n, rest.to_vec(), labels);
        }
    }
    let n = data
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let labels = (0..n).map(|v| v.to_string()).collect();
    build(n, data, labels)
}

fn parse_dimacs(text: &str) -> Result<LabeledGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    bail!("line {line_no}: duplicate problem line");
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    bail!("line {line_no}: expected `p edge <n> <m>`");
                }
                let n = parse_endpoint(fields[2], line_no)?;
                let m = parse_endpoint(fields[3], line_no)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header
                    .ok_or_else(|| anyhow!("line {line_no}: edge before the problem line"))?;
                if fields.len() != 3 {
                    bail!("line {line_no}: expected `e <u> <v>`");
                }
                let u = parse_endpoint(fields[1], line_no)?;
                let v = parse_endpoint(fields[2], line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    bail!("line {line_no}: endpoint out of range (1..={n})");
                }
                edges.push((u - 1, v - 1, line_no));
            }
            other => bail!("line {line_no}: unknown record {other:?}"),
        }
    }
    let (n, m) = header.ok_or_else(|| anyhow!("missing `p edge` problem line"))?;
    if edges.len() != m {
        bail!("problem line declares {m} edges, found {}", edges.len());
    }
    let labels = (0..n).map(|v| (v + 1).to_string()).collect();
    build(n, edges, labels)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<LabeledGraph> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn parse_graph_file(path: &Path, format: GraphFormat) -> Result<LabeledGraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph(&text, format).with_context(|| format!("while parsing {}", path.display()))
}

/// Serializes with an `n m` header; vertices appear under their ids.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

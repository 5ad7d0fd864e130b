//! Hypergraphs on at most 64 vertices, their line graphs, and the
//! edge-level closure check.

use std::fmt::Write as _;

use crate::bitset::{low_mask, BitMatrix, Bits};
use crate::closure::{check_level, first_failure, verdict, EcVerdict, Element, Splits, XiValue};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Cap on generated edge sets, to keep `C(n, k)` enumerations bounded.
const MAX_GENERATED_EDGES: u64 = 1 << 20;

/// A hypergraph with distinct nonempty edges, stored as vertex bitmasks in
/// ascending numeric order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u64>,
}

impl Hypergraph {
    /// Builds a hypergraph; rejects empty edges, duplicate edges and
    /// out-of-range vertices.
    pub fn new(n: usize, mut edges: Vec<u64>) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        if let Some(e) = edges.iter().find(|&&e| e & !low_mask(n) != 0) {
            return Err(Error::Hypergraph(format!(
                "edge {:?} uses a vertex outside 0..{n}",
                Bits(*e).collect::<Vec<_>>()
            )));
        }
        if edges.contains(&0) {
            return Err(Error::Hypergraph("empty edge".into()));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Hypergraph(format!(
                "duplicate edge {:?}",
                Bits(w[0]).collect::<Vec<_>>()
            )));
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn from_edge_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for list in lists {
            let mut mask = 0u64;
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
                mask |= 1 << v;
            }
            edges.push(mask);
        }
        Hypergraph::new(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_vertices(&self, i: usize) -> Vec<usize> {
        Bits(self.edges[i]).collect()
    }

    /// `Some(k)` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.count_ones();
        self.edges
            .iter()
            .all(|e| e.count_ones() == k)
            .then_some(k as usize)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.count_ones() as usize == k)
    }

    /// Parses the text format: a line `n m`, then `m` lines of vertex indices.
    pub fn parse(text: &str) -> Result<Self> {
        let perr = |line: usize, reason: String| Error::HypergraphParse { line, reason };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| perr(1, "missing header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| perr(hline, format!("bad integer `{t}`")))
            })
            .collect::<Result<_>>()?;
        let [n, m] = nums[..] else {
            return Err(perr(hline, "header must be `n m`".into()));
        };
        if n > MAX_ORDER {
            return Err(perr(hline, format!("order {n} exceeds {MAX_ORDER}")));
        }
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines.by_ref().take(m) {
            let mut mask = 0u64;
            for t in body.split_whitespace() {
                let v: usize = t
                    .parse()
                    .map_err(|_| perr(line, format!("bad integer `{t}`")))?;
                if v >= n {
                    return Err(perr(line, format!("vertex {v} outside 0..{n}")));
                }
                if mask >> v & 1 == 1 {
                    return Err(perr(line, format!("vertex {v} repeated")));
                }
                mask |= 1 << v;
            }
            edges.push(mask);
        }
        if edges.len() != m {
            return Err(perr(
                hline,
                format!("expected {m} edges, found {}", edges.len()),
            ));
        }
        if let Some((line, _)) = lines.next() {
            return Err(perr(line, "trailing content after the last edge".into()));
        }
        Hypergraph::new(n, edges)
    }

    /// Serializes to the text format; edges in stored order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &e in &self.edges {
            let verts: Vec<String> = Bits(e).map(|v| v.to_string()).collect();
            writeln!(out, "{}", verts.join(" ")).unwrap();
        }
        out
    }
}

/// Line graph: one vertex per edge, adjacent iff the edges intersect.
pub fn line_graph_of_hypergraph(h: &Hypergraph) -> Result<Graph> {
    if h.size() > MAX_ORDER {
        return Err(Error::TooManyEdges(h.size()));
    }
    let mut g = Graph::empty(h.size())?;
    for i in 0..h.size() {
        for j in i + 1..h.size() {
            if h.edges[i] & h.edges[j] != 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Decides n-line e.c. on edge bitmasks; the line graph is never built, so
/// any number of edges is accepted.
pub fn is_n_line_ec_hyper(h: &Hypergraph, n: usize) -> Result<EcVerdict> {
    check_level(n, h.size())?;
    let adj = BitMatrix::intersection(&h.edges);
    let failure = first_failure(&adj, n, Splits::All);
    Ok(verdict(n, failure, |i| {
        Element::HyperEdge(h.edge_vertices(i))
    }))
}

pub fn xi_line_hyper(h: &Hypergraph) -> XiValue {
    let adj = BitMatrix::intersection(&h.edges);
    let mut value = 0;
    while value < h.size().min(63) && first_failure(&adj, value + 1, Splits::All).is_none() {
        value += 1;
    }
    XiValue { value }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` that meet both `left` and `!left`.
fn crossing_edges(n: usize, left: u64, k: usize) -> Result<Vec<u64>> {
    let total = binomial(n as u64, k as u64);
    if total > MAX_GENERATED_EDGES {
        return Err(Error::Hypergraph(format!(
            "C({n},{k}) = {total} candidate edges is too many"
        )));
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
        if mask & left != 0 && mask & !left != 0 {
            out.push(mask);
        }
        if !crate::closure::next_combination(&mut c, n) {
            return Ok(out);
        }
    }
}

/// Vertices `0..x` form side X, `x..x+y` side Y; the edges are all
/// `k`-subsets meeting both sides.
pub fn crossing_hypergraph(x: usize, y: usize, k: usize) -> Result<Hypergraph> {
    if y < 1 || x < y {
        return Err(Error::InvalidArgument(format!(
            "need x >= y >= 1, got x={x} y={y}"
        )));
    }
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "uniformity must be at least 2, got {k}"
        )));
    }
    let n = x + y;
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "uniformity {k} exceeds {n} vertices"
        )));
    }
    Hypergraph::new(n, crossing_edges(n, low_mask(x), k)?)
}

/// The hypergraph on the edges of `g` whose hyperedges are the vertex stars
/// of `g`; its line graph is isomorphic to `g`.
pub fn star_dual(g: &Graph) -> Result<Hypergraph> {
    let edges = g.edges();
    if edges.len() > MAX_ORDER {
        return Err(Error::TooManyVertices(edges.len()));
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Hypergraph(format!(
            "isolated vertex {v} gives an empty star"
        )));
    }
    if let Some(&(u, v)) = edges
        .iter()
        .find(|&&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
    {
        return Err(Error::Hypergraph(format!(
            "component {{{u},{v}}} is a single edge; both stars coincide"
        )));
    }
    let mut stars = vec![0u64; g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        stars[u] |= 1 << i;
        stars[v] |= 1 << i;
    }
    Hypergraph::new(edges.len(), stars)
}

/// `h1 ∪ h2` on disjoint vertex ranges (`h2` shifted past `h1`) plus every
/// `k`-subset meeting both ranges.
pub fn cross_join_hypergraphs(h1: &Hypergraph, h2: &Hypergraph, k: usize) -> Result<Hypergraph> {
    if !h1.is_uniform(k) || !h2.is_uniform(k) {
        return Err(Error::Hypergraph(format!(
            "both inputs must be {k}-uniform"
        )));
    }
    let (n1, n2) = (h1.order(), h2.order());
    if n1 < n2 || n2 < 2 * k - 1 {
        return Err(Error::Hypergraph(format!(
            "need |V1| >= |V2| >= {}, got {n1} and {n2}",
            2 * k - 1
        )));
    }
    let n = n1 + n2;
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges: Vec<u64> = h1.edges.clone();
    edges.extend(h2.edges.iter().map(|e| e << n1));
    edges.extend(crossing_edges(n, low_mask(n1), k)?);
    Hypergraph::new(n, edges)
}

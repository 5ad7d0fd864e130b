//! Deciders for n-e.c. and n-line e.c., `xi` and `xi_line`.
//!
//! All three modes (vertices of a graph, edges of a graph, edges of a
//! hypergraph) reduce to the same scan over an adjacency bit matrix between
//! "items": every `level`-subset `S` of items is visited in lexicographic
//! order, and for each subset every split into `(A, B)` is tried in binary
//! order of the assignment mask, bit `i` set meaning `S[i]` is in `A`. A split
//! fails when no item outside `S` is adjacent to all of `A` and none of `B`;
//! the first failing split is the certificate.

use serde::Serialize;

use crate::bitset::{BitMatrix, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// One member of a certificate set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Element {
    Vertex(usize),
    Edge([usize; 2]),
    HyperEdge(Vec<usize>),
}

/// A split `(A, B)` that admits no witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(rename = "A")]
    pub a: Vec<Element>,
    #[serde(rename = "B")]
    pub b: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EcVerdict {
    pub level: usize,
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

impl EcVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

/// Largest closure level that holds; 0 when even level 1 fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct XiValue {
    pub value: usize,
}

/// Index form of a failing split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Split {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// Which A/B assignments to scan for each subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Splits {
    All,
    /// Only "all in A" and "all in B".
    Uniform,
}

/// First failing split in scan order, or `None` when the property holds.
pub(crate) fn first_failure(adj: &BitMatrix, level: usize, splits: Splits) -> Option<Split> {
    let count = adj.rows();
    debug_assert!(level >= 1 && level <= count && level <= MAX_LEVEL);
    let words = adj.words();
    let mut subset: Vec<usize> = (0..level).collect();
    let full = (1u64 << level) - 1;
    let steps = match splits {
        Splits::All => full + 1,
        Splits::Uniform => 2,
    };
    loop {
        for step in 0..steps {
            let mask = match splits {
                Splits::All => step,
                Splits::Uniform => step * full,
            };
            let witnessed = (0..words).any(|w| {
                let mut cand = adj.valid_word(w);
                for (i, &s) in subset.iter().enumerate() {
                    if s / 64 == w {
                        cand &= !(1u64 << (s % 64));
                    }
                    let row = adj.row(s)[w];
                    cand &= if mask >> i & 1 == 1 { row } else { !row };
                    if cand == 0 {
                        break;
                    }
                }
                cand != 0
            });
            if !witnessed {
                let (a, b) = subset
                    .iter()
                    .enumerate()
                    .partition::<Vec<_>, _>(|(i, _)| mask >> i & 1 == 1);
                return Some(Split {
                    a: a.into_iter().map(|(_, &s)| s).collect(),
                    b: b.into_iter().map(|(_, &s)| s).collect(),
                });
            }
        }
        if !next_combination(&mut subset, count) {
            return None;
        }
    }
}

/// Advances `c` to the next `k`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Split masks are single words.
const MAX_LEVEL: usize = 63;

pub(crate) fn check_level(level: usize, available: usize) -> Result<()> {
    if level == 0 {
        Err(Error::ZeroLevel)
    } else if level > MAX_LEVEL {
        Err(Error::InvalidArgument(format!(
            "closure level {level} above {MAX_LEVEL}"
        )))
    } else if level > available {
        Err(Error::LevelTooLarge { level, available })
    } else {
        Ok(())
    }
}

pub(crate) fn verdict<F: Fn(usize) -> Element>(
    level: usize,
    failure: Option<Split>,
    element: F,
) -> EcVerdict {
    EcVerdict {
        level,
        holds: failure.is_none(),
        certificate: failure.map(|s| Certificate {
            a: s.a.into_iter().map(&element).collect(),
            b: s.b.into_iter().map(&element).collect(),
        }),
    }
}

fn vertex_matrix(g: &Graph) -> BitMatrix {
    let mut m = BitMatrix::new(g.order(), g.order());
    for u in 0..g.order() {
        for v in Bits(g.neighbors(u)) {
            m.set(u, v);
        }
    }
    m
}

/// Edge masks (two bits each) in lexicographic edge order.
fn edge_masks(g: &Graph) -> (Vec<(usize, usize)>, Vec<u64>) {
    let edges = g.edges();
    let masks = edges.iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect();
    (edges, masks)
}

/// Decides whether `g` is `n`-e.c.
pub fn is_n_ec(g: &Graph, n: usize) -> Result<EcVerdict> {
    check_level(n, g.order())?;
    let failure = first_failure(&vertex_matrix(g), n, Splits::All);
    Ok(verdict(n, failure, Element::Vertex))
}

pub fn xi(g: &Graph) -> XiValue {
    let m = vertex_matrix(g);
    let mut value = 0;
    // monotone in the level, so the first failure ends the ascent
    while value < g.order().min(MAX_LEVEL) && first_failure(&m, value + 1, Splits::All).is_none() {
        value += 1;
    }
    XiValue { value }
}

/// Decides whether `g` is `n`-line e.c., working on edges directly.
///
/// At level 2 on graphs of minimum degree at least three, a pair of edges
/// only needs a common neighbor edge and an edge avoiding both; the third
/// condition follows. That check runs first; on failure the full scan runs
/// as well so the certificate is the least failing split overall.
pub fn is_n_line_ec(g: &Graph, n: usize) -> Result<EcVerdict> {
    let (edges, masks) = edge_masks(g);
    check_level(n, edges.len())?;
    let adj = BitMatrix::intersection(&masks);
    let failure = if n == 2 && g.min_degree() >= 3 {
        match first_failure(&adj, 2, Splits::Uniform) {
            None => None,
            Some(_) => {
                let full = first_failure(&adj, 2, Splits::All);
                debug_assert!(full.is_some(), "fast path disagrees with full scan");
                full
            }
        }
    } else {
        first_failure(&adj, n, Splits::All)
    };
    Ok(verdict(n, failure, |i| {
        Element::Edge([edges[i].0, edges[i].1])
    }))
}

/// Boolean 2-line e.c. check for search filters.
pub fn is_two_line_ec(g: &Graph) -> bool {
    let (edges, masks) = edge_masks(g);
    if edges.len() < 2 {
        return false;
    }
    let adj = BitMatrix::intersection(&masks);
    let splits = if g.min_degree() >= 3 {
        Splits::Uniform
    } else {
        Splits::All
    };
    first_failure(&adj, 2, splits).is_none()
}

/// Largest `n` for which `g` is `n`-line e.c.; never more than 2.
pub fn xi_line(g: &Graph) -> XiValue {
    let (_, masks) = edge_masks(g);
    let adj = BitMatrix::intersection(&masks);
    let mut value = 0;
    while value < masks.len().min(MAX_LEVEL)
        && first_failure(&adj, value + 1, Splits::All).is_none()
    {
        value += 1;
    }
    debug_assert!(value <= 2, "line closure above 2 on {g:?}");
    XiValue { value }
}

/// A line graph together with the edge behind each of its vertices.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the edge of the source graph that vertex `i` stands for.
    pub edges: Vec<(usize, usize)>,
}

pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    let (edges, masks) = edge_masks(g);
    if edges.len() > MAX_ORDER {
        return Err(Error::TooManyEdges(edges.len()));
    }
    let mut lg = Graph::empty(edges.len())?;
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                lg.add_edge(i, j);
            }
        }
    }
    Ok(LineGraph { graph: lg, edges })
}

//! Exhaustive searches over generated graphs and over graph6 streams.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_graph;
use crate::closure::{is_n_ec, is_two_line_ec};
use crate::enumerate::{Generator, Node, Pruning};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::planar::is_planar;

/// Largest order the in-tool searches accept.
pub const MAX_SEARCH_ORDER: usize = 12;

/// A named predicate in a filter chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    Connected,
    /// `|E| <= 3|V| - 6` for `|V| >= 3`.
    EulerBound,
    MinDegree(usize),
    MinCodegree(usize),
    MaxEdges(usize),
    EdgeCount(usize),
    Planar,
    OneEc,
    TwoEc,
    TwoLineEc,
}

impl Filter {
    pub fn accepts(&self, g: &Graph) -> bool {
        let n = g.order();
        match *self {
            Filter::Connected => g.is_connected(),
            Filter::EulerBound => n < 3 || g.size() <= 3 * n - 6,
            Filter::MinDegree(d) => g.min_degree() >= d,
            Filter::MinCodegree(d) => n > 0 && n - 1 - g.max_degree() >= d,
            Filter::MaxEdges(m) => g.size() <= m,
            Filter::EdgeCount(m) => g.size() == m,
            Filter::Planar => is_planar(g),
            Filter::OneEc => n >= 1 && is_n_ec(g, 1).is_ok_and(|v| v.holds),
            Filter::TwoEc => n >= 2 && is_n_ec(g, 2).is_ok_and(|v| v.holds),
            Filter::TwoLineEc => is_two_line_ec(g),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Connected => write!(f, "connected"),
            Filter::EulerBound => write!(f, "euler_bound"),
            Filter::MinDegree(d) => write!(f, "min_degree={d}"),
            Filter::MinCodegree(d) => write!(f, "min_codegree={d}"),
            Filter::MaxEdges(m) => write!(f, "max_edges={m}"),
            Filter::EdgeCount(m) => write!(f, "edge_count={m}"),
            Filter::Planar => write!(f, "planar"),
            Filter::OneEc => write!(f, "one_ec"),
            Filter::TwoEc => write!(f, "two_ec"),
            Filter::TwoLineEc => write!(f, "two_line_ec"),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('-', "_");
        let bad = || Error::InvalidArgument(format!("unknown filter `{s}`"));
        if let Some((name, value)) = s.split_once('=') {
            let v: usize = value.parse().map_err(|_| bad())?;
            return match name {
                "min_degree" => Ok(Filter::MinDegree(v)),
                "min_codegree" => Ok(Filter::MinCodegree(v)),
                "max_edges" => Ok(Filter::MaxEdges(v)),
                "edge_count" => Ok(Filter::EdgeCount(v)),
                _ => Err(bad()),
            };
        }
        match s.as_str() {
            "connected" => Ok(Filter::Connected),
            "euler_bound" => Ok(Filter::EulerBound),
            "planar" => Ok(Filter::Planar),
            "one_ec" | "1ec" => Ok(Filter::OneEc),
            "two_ec" | "2ec" => Ok(Filter::TwoEc),
            "two_line_ec" | "2lec" => Ok(Filter::TwoLineEc),
            _ => Err(bad()),
        }
    }
}

/// What to generate and which graphs survive.
///
/// The filter chain runs in the listed order after the connectivity check;
/// list cheap filters first. When `prune` is set, filters that are
/// hereditary along the generation chain also cut the generation tree:
/// `MinDegree`/`MinCodegree` by lookahead, `MaxEdges`/`EdgeCount` as an edge
/// cap, and `Planar` because planarity is closed under vertex deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    pub min_order: usize,
    pub max_order: usize,
    pub require_connected: bool,
    pub filters: Vec<Filter>,
    pub prune: bool,
}

impl SearchConstraints {
    pub fn order(n: usize) -> Self {
        SearchConstraints {
            min_order: n,
            max_order: n,
            require_connected: true,
            filters: Vec::new(),
            prune: true,
        }
    }

    fn chain(&self) -> Vec<Filter> {
        let mut chain = Vec::with_capacity(self.filters.len() + 1);
        if self.require_connected {
            chain.push(Filter::Connected);
        }
        chain.extend(self.filters.iter().copied());
        chain
    }

    fn pruning(&self) -> Pruning {
        let mut p = Pruning::default();
        if !self.prune {
            return p;
        }
        for f in &self.filters {
            match *f {
                Filter::MinDegree(d) => p.min_degree = Some(p.min_degree.unwrap_or(0).max(d)),
                Filter::MinCodegree(d) => p.min_codegree = Some(p.min_codegree.unwrap_or(0).max(d)),
                Filter::MaxEdges(m) | Filter::EdgeCount(m) => {
                    p.max_edges = Some(p.max_edges.map_or(m, |x| x.min(m)))
                }
                Filter::Planar => p.planar = true,
                _ => {}
            }
        }
        p
    }

    fn validate(&self) -> Result<()> {
        if self.min_order == 0 || self.min_order > self.max_order {
            return Err(Error::InvalidArgument(format!(
                "bad order range {}..={}",
                self.min_order, self.max_order
            )));
        }
        if self.max_order > MAX_SEARCH_ORDER {
            return Err(Error::InvalidArgument(format!(
                "order {} above the in-tool limit {MAX_SEARCH_ORDER}; use filter_stream",
                self.max_order
            )));
        }
        Ok(())
    }
}

/// Rejections attributed to one filter of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterCount {
    pub filter: String,
    pub rejected: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    /// Graphs examined in the order range (generated or read).
    pub generated: u64,
    pub generated_per_order: BTreeMap<usize, u64>,
    pub per_filter_rejected: Vec<FilterCount>,
    /// Stream lines skipped as malformed (lenient mode only).
    #[serde(skip_serializing_if = "is_zero")]
    pub malformed: u64,
    /// Stream graphs dropped as isomorphic to an earlier survivor.
    #[serde(skip_serializing_if = "is_zero")]
    pub duplicates: u64,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub name: String,
    pub min_order: usize,
    pub max_order: usize,
    pub counts: Counts,
    /// Canonical graph6 strings, sorted.
    pub survivors: Vec<String>,
    pub wall_ms: u64,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn survivor_graphs(&self) -> Vec<Graph> {
        self.survivors
            .iter()
            .map(|s| parse_graph6(s).expect("survivors are valid graph6"))
            .collect()
    }
}

/// Accumulates chain outcomes; mergeable across work units.
#[derive(Clone, Debug)]
struct Tally {
    generated: BTreeMap<usize, u64>,
    rejected: Vec<u64>,
    survivors: BTreeSet<String>,
}

impl Tally {
    fn new(chain_len: usize) -> Self {
        Tally {
            generated: BTreeMap::new(),
            rejected: vec![0; chain_len],
            survivors: BTreeSet::new(),
        }
    }

    /// Runs the chain; returns whether `g` survived.
    fn record(&mut self, chain: &[Filter], g: &Graph) -> bool {
        *self.generated.entry(g.order()).or_default() += 1;
        match chain.iter().position(|f| !f.accepts(g)) {
            Some(i) => {
                self.rejected[i] += 1;
                false
            }
            None => true,
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.generated {
            *self.generated.entry(k).or_default() += v;
        }
        for (a, b) in self.rejected.iter_mut().zip(other.rejected) {
            *a += b;
        }
        self.survivors.extend(other.survivors);
        self
    }

    fn into_report(
        self,
        name: &str,
        c: &SearchConstraints,
        chain: &[Filter],
        start: Instant,
    ) -> SearchReport {
        SearchReport {
            name: name.to_string(),
            min_order: c.min_order,
            max_order: c.max_order,
            counts: Counts {
                generated: self.generated.values().sum(),
                generated_per_order: self.generated,
                per_filter_rejected: chain
                    .iter()
                    .zip(self.rejected)
                    .map(|(f, r)| FilterCount {
                        filter: f.to_string(),
                        rejected: r,
                    })
                    .collect(),
                malformed: 0,
                duplicates: 0,
            },
            survivors: self.survivors.into_iter().collect(),
            wall_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Order at which the generation tree is cut into parallel work units.
fn split_order(max_order: usize) -> usize {
    max_order.saturating_sub(3).max(1)
}

/// Generates every graph in the order range once per isomorphism class and
/// runs the chain on each. Work is split into subtrees rooted a few levels
/// above the maximum order; the report does not depend on `workers`.
pub fn run_search(name: &str, c: &SearchConstraints, workers: usize) -> Result<SearchReport> {
    c.validate()?;
    let start = Instant::now();
    let chain = c.chain();
    let gen = Generator::new(c.max_order, c.pruning());
    let visit = |tally: &mut Tally, node: &Node| {
        if node.order() >= c.min_order && tally.record(&chain, &node.graph) {
            tally.survivors.insert(write_graph6(&node.canon));
        }
    };

    let mut head = Tally::new(chain.len());
    let units = gen.frontier(split_order(c.max_order), &mut |n| visit(&mut head, n));
    let run_unit = |unit: &Node| {
        let mut t = Tally::new(chain.len());
        gen.walk(unit, &mut |n| visit(&mut t, n));
        t
    };
    let tail = if workers <= 1 {
        units
            .iter()
            .map(run_unit)
            .fold(Tally::new(chain.len()), Tally::merge)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| {
            units
                .par_iter()
                .map(run_unit)
                .reduce(|| Tally::new(chain.len()), Tally::merge)
        })
    };
    Ok(head.merge(tail).into_report(name, c, &chain, start))
}

/// The reproduction searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchName {
    /// Connected planar 2-line e.c. graphs.
    PlanarTwoLineEc,
    /// 2-e.c. graphs.
    MinTwoEc,
    /// Connected 2-line e.c. graphs with exactly nine edges.
    NineEdgeTwoLineEc,
}

impl SearchName {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchName::PlanarTwoLineEc => "planar_2lec",
            SearchName::MinTwoEc => "min_2ec",
            SearchName::NineEdgeTwoLineEc => "nine_edge_2lec",
        }
    }

    pub fn default_max_order(&self) -> usize {
        match self {
            SearchName::PlanarTwoLineEc | SearchName::MinTwoEc => 9,
            // minimum degree 3 with nine edges allows at most six vertices
            SearchName::NineEdgeTwoLineEc => 6,
        }
    }

    pub fn constraints(&self, max_order: usize) -> SearchConstraints {
        let filters = match self {
            SearchName::PlanarTwoLineEc => vec![
                Filter::EulerBound,
                Filter::MinDegree(3),
                Filter::Planar,
                Filter::TwoLineEc,
            ],
            // a 2-e.c. graph and its complement both have minimum degree 3
            SearchName::MinTwoEc => {
                vec![Filter::MinDegree(3), Filter::MinCodegree(3), Filter::TwoEc]
            }
            SearchName::NineEdgeTwoLineEc => {
                vec![
                    Filter::EdgeCount(9),
                    Filter::MinDegree(3),
                    Filter::TwoLineEc,
                ]
            }
        };
        SearchConstraints {
            min_order: 1,
            max_order,
            require_connected: true,
            filters,
            prune: true,
        }
    }
}

impl FromStr for SearchName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "planar_2lec" => Ok(SearchName::PlanarTwoLineEc),
            "min_2ec" => Ok(SearchName::MinTwoEc),
            "nine_edge_2lec" => Ok(SearchName::NineEdgeTwoLineEc),
            _ => Err(Error::UnknownSearch(s.to_string())),
        }
    }
}

pub fn run_named_search(
    name: SearchName,
    max_order: usize,
    workers: usize,
) -> Result<SearchReport> {
    run_search(name.as_str(), &name.constraints(max_order), workers)
}

/// One graph per isomorphism class of order `n` satisfying `c`'s chain.
pub fn enumerate_connected(n: usize, c: &SearchConstraints) -> Result<Vec<Graph>> {
    let c = SearchConstraints {
        min_order: n,
        max_order: n,
        ..c.clone()
    };
    Ok(run_search("enumerate", &c, 1)?.survivor_graphs())
}

/// Runs the chain of `c` over graph6 lines. Blank lines and `>>graph6<<`
/// headers are accepted; survivors are deduplicated by canonical form. A
/// malformed line is an error naming its line number unless `lenient`.
pub fn filter_stream<R: BufRead>(
    input: R,
    c: &SearchConstraints,
    lenient: bool,
) -> Result<SearchReport> {
    let start = Instant::now();
    let chain = c.chain();
    let mut tally = Tally::new(chain.len());
    let (mut malformed, mut duplicates) = (0, 0);
    let (mut lo, mut hi) = (usize::MAX, 0);
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = match parse_graph6(&line) {
            Ok(g) => g,
            Err(e) if !lenient => {
                return Err(Error::Stream {
                    line: i + 1,
                    source: Box::new(e),
                })
            }
            Err(_) => {
                malformed += 1;
                continue;
            }
        };
        lo = lo.min(g.order());
        hi = hi.max(g.order());
        if tally.record(&chain, &g) && !tally.survivors.insert(write_graph6(&canonical_graph(&g))) {
            duplicates += 1;
        }
    }
    let range = SearchConstraints {
        min_order: if hi == 0 { 0 } else { lo },
        max_order: hi,
        ..c.clone()
    };
    let mut report = tally.into_report("filter", &range, &chain, start);
    report.counts.malformed = malformed;
    report.counts.duplicates = duplicates;
    Ok(report)
}

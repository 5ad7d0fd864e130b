//! Isomorph-free generation of graphs by canonical vertex augmentation.
//!
//! Every graph on `k + 1` vertices is generated from exactly one parent
//! class: the graph obtained by deleting its *canonical deletion vertex*.
//! That vertex is chosen among the vertices minimizing
//! `(degree, sum of neighbor degrees)`, ties broken by the largest canonical
//! label. A child built by appending vertex `k` to a parent is accepted only
//! when deleting the canonical deletion vertex gives back the parent's
//! isomorphism class. Accepted children of one parent are deduplicated by
//! canonical form, which replaces computing orbits of neighborhoods under
//! the parent's automorphism group.
//!
//! Pruning must be hereditary over the deletion chain: edge caps, planarity,
//! and degree lookahead (each later vertex raises a degree by at most one).

use std::collections::HashSet;

use crate::bitset::Bits;
use crate::canon::{canonical_graph, canonical_labeling};
use crate::graph::Graph;
use crate::planar::is_planar;

/// Hereditary pruning applied while growing graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pruning {
    pub max_edges: Option<usize>,
    /// Final graphs must have at least this minimum degree.
    pub min_degree: Option<usize>,
    /// Final graphs must have every vertex non-adjacent to at least this many others.
    pub min_codegree: Option<usize>,
    pub planar: bool,
}

/// A generated graph with its canonical form.
#[derive(Clone, Debug)]
pub struct Node {
    pub graph: Graph,
    pub canon: Graph,
}

impl Node {
    pub fn root() -> Self {
        let g = Graph::empty(1).expect("order 1");
        Node { graph: g, canon: g }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    max_order: usize,
    pruning: Pruning,
}

impl Generator {
    pub fn new(max_order: usize, pruning: Pruning) -> Self {
        assert!((1..=crate::graph::MAX_ORDER).contains(&max_order));
        Generator { max_order, pruning }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Visits `node` and every descendant up to the maximum order, depth first.
    pub fn walk<F: FnMut(&Node)>(&self, node: &Node, visit: &mut F) {
        visit(node);
        if node.order() < self.max_order {
            for child in self.children(node) {
                self.walk(&child, visit);
            }
        }
    }

    /// Walks down to `split_order`; nodes below it are visited, nodes at it
    /// are returned unvisited as independent work units.
    pub fn frontier<F: FnMut(&Node)>(&self, split_order: usize, visit: &mut F) -> Vec<Node> {
        let mut units = Vec::new();
        self.frontier_from(&Node::root(), split_order, visit, &mut units);
        units
    }

    fn frontier_from<F: FnMut(&Node)>(
        &self,
        node: &Node,
        split_order: usize,
        visit: &mut F,
        units: &mut Vec<Node>,
    ) {
        if node.order() >= split_order {
            units.push(node.clone());
            return;
        }
        visit(node);
        for child in self.children(node) {
            self.frontier_from(&child, split_order, visit, units);
        }
    }

    fn violates_lookahead(&self, g: &Graph) -> bool {
        let n = g.order();
        let remaining = self.max_order - n;
        if let Some(m) = self.pruning.max_edges {
            if g.size() > m {
                return true;
            }
        }
        if let Some(d) = self.pruning.min_degree {
            if g.min_degree() + remaining < d {
                return true;
            }
        }
        if let Some(d) = self.pruning.min_codegree {
            if n - 1 - g.max_degree() + remaining < d {
                return true;
            }
        }
        false
    }

    /// Accepted children of `node`, one per isomorphism class.
    pub fn children(&self, node: &Node) -> Vec<Node> {
        let parent = &node.graph;
        let k = parent.order();
        let mut seen: HashSet<Graph> = HashSet::new();
        let mut out = Vec::new();
        for nbhd in 0..1u64 << k {
            let mut child = *parent;
            child.add_vertex(nbhd).expect("order below 64");
            if self.violates_lookahead(&child) {
                continue;
            }
            let Some(canon) = self.accept(&child, &node.canon) else {
                continue;
            };
            if self.pruning.planar && !is_planar(&child) {
                continue;
            }
            if seen.insert(canon) {
                out.push(Node {
                    graph: child,
                    canon,
                });
            }
        }
        out
    }

    /// Canonical form of `child` if its last vertex is a canonical deletion
    /// vertex relative to the parent class `parent_canon`.
    fn accept(&self, child: &Graph, parent_canon: &Graph) -> Option<Graph> {
        let n = child.order();
        let last = n - 1;
        let key = |v: usize| {
            let nb: usize = Bits(child.neighbors(v)).map(|u| child.degree(u)).sum();
            (child.degree(v), nb)
        };
        let last_key = key(last);
        let mut candidates = 0u64;
        for v in 0..n {
            let kv = key(v);
            if kv < last_key {
                return None;
            }
            if kv == last_key {
                candidates |= 1 << v;
            }
        }
        if candidates.count_ones() == 1 {
            return Some(canonical_graph(child));
        }
        let lab = canonical_labeling(child);
        let w = Bits(candidates).max_by_key(|&v| lab.perm[v]).unwrap();
        if w == last || canonical_graph(&child.delete_vertex(w)) == *parent_canon {
            Some(lab.graph)
        } else {
            None
        }
    }
}

/// One graph per isomorphism class of order exactly `n`, optionally only
/// the connected ones. No pruning.
pub fn graphs_of_order(n: usize, connected_only: bool) -> Vec<Graph> {
    let gen = Generator::new(n, Pruning::default());
    let mut out = Vec::new();
    gen.walk(&Node::root(), &mut |node| {
        if node.order() == n && (!connected_only || node.graph.is_connected()) {
            out.push(node.graph);
        }
    });
    out
}

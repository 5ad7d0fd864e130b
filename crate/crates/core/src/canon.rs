//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree individualizes a vertex of the first smallest
//! non-singleton cell, refines to an equitable partition and recurses. Each
//! discrete leaf gives a relabeling; the canonical graph is the relabeling
//! with the lexicographically greatest adjacency rows. Two leaves with equal
//! rows yield an automorphism, and automorphisms that fix the current prefix
//! pointwise prune sibling branches lying in the same orbit.

use std::fmt;

use serde::Serialize;

use crate::bitset::Bits;
use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Canonical graph6 string: equal for two graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A canonical relabeling of a graph.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// The canonically relabeled graph.
    pub graph: Graph,
    /// `perm[v]` is the canonical label of original vertex `v`.
    pub perm: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(write_graph6(&canonical_graph(g)))
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_graph(a) == canonical_graph(b)
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            graph: *g,
            perm: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.descend(vec![g.vertex_mask()], &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        perm[v] = i;
    }
    Labeling {
        graph: Graph::from_rows(&best.rows).expect("relabeling preserves simplicity"),
        perm,
    }
}

/// Refines an ordered partition (cells as vertex masks) to the coarsest
/// equitable refinement, splitting cells by neighbor counts into each
/// splitter cell and ordering fragments by ascending count.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.order();
    let mut scratch = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() && cells.len() < n {
            let splitter = cells[s];
            scratch.clear();
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    scratch.push(cell);
                    continue;
                }
                let mut groups = [0u64; 65];
                let (mut lo, mut hi) = (64, 0);
                for v in Bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as usize;
                    groups[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                for &grp in &groups[lo..=hi] {
                    if grp != 0 {
                        scratch.push(grp);
                    }
                }
            }
            if scratch.len() != cells.len() {
                std::mem::swap(cells, &mut scratch);
                changed = true;
            }
            s += 1;
        }
        if !changed || cells.len() == n {
            return;
        }
    }
}

struct Leaf {
    /// Individualized vertices leading to the leaf.
    path: Vec<usize>,
    order: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when the search should unwind to depth `d`: the
    /// subtree containing a leaf equivalent to a stored one is a copy of an
    /// explored subtree.
    fn descend(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.len() == self.g.order() {
            return self.leaf(&cells, prefix);
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            let unwind = self.descend(child, prefix);
            prefix.pop();
            if let Some(d) = unwind {
                if d < prefix.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&u| gamma[u] != u) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| Bits(self.g.neighbors(v)).fold(0u64, |r, u| r | 1 << pos[u]))
            .collect();
        let leaf = Leaf {
            path: path.to_vec(),
            order,
            rows,
        };

        for stored in [&self.first, &self.best].into_iter().flatten() {
            if stored.rows == leaf.rows {
                self.autos.push(automorphism(&stored.order, &leaf.order));
                return Some(common_prefix(&stored.path, path));
            }
        }
        match &self.best {
            Some(best) if best.rows > leaf.rows => {}
            _ => {
                if self.first.is_none() {
                    self.first = Some(Leaf {
                        path: leaf.path.clone(),
                        order: leaf.order.clone(),
                        rows: leaf.rows.clone(),
                    });
                }
                self.best = Some(leaf);
            }
        }
        None
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The automorphism mapping `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn relabel_invariance_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(1..=14);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
        }
    }

    #[test]
    fn labeling_maps_to_canonical_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(&mut rng, n, 0.4);
            let lab = canonical_labeling(&g);
            assert_eq!(g.permuted(&lab.perm), lab.graph);
        }
    }

    #[test]
    fn symmetric_graphs_terminate() {
        for n in [1, 12, 30, 64] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_graph(&e), e);
            let k = e.complement();
            assert_eq!(canonical_graph(&k), k);
        }
        let c = Family::Cycle(40).build().unwrap();
        let mut perm: Vec<usize> = (0..40).collect();
        perm.reverse();
        perm.swap(3, 17);
        assert_eq!(canonical_form(&c), canonical_form(&c.permuted(&perm)));
    }

    #[test]
    fn distinguishes_p4_and_claw() {
        let p4 = Family::Path(4).build().unwrap();
        let claw = Family::CompleteBipartite(1, 3).build().unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&claw));
    }

    #[test]
    fn refinement_is_equitable() {
        let g = Family::Path(5).build().unwrap();
        let mut cells = vec![g.vertex_mask()];
        refine(&g, &mut cells);
        // ends {0,4}, their neighbours {1,3}, centre {2}
        assert_eq!(cells, vec![0b10001, 0b01010, 0b00100]);
    }
}

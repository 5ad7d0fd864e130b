//! Small dense simple graphs with one adjacency word per vertex.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::bitset::{low_mask, Bits};
use crate::error::{Error, Result};

/// Largest supported order: one `u64` per adjacency row.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph on vertices `0..order`.
///
/// Row `v` of the adjacency holds the neighbors of `v` as a bitmask. Rows are
/// kept symmetric and loop-free by every constructor and mutator; rows at
/// index `>= order` are always zero.
#[derive(Clone, Copy)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj[..self.n] == other.adj[..other.n]
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj[..self.n].hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::write_graph6(self))
    }
}

/// Degree and connectivity summary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub edge_count: usize,
    pub connected: bool,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows; the rows must be symmetric and
    /// loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row >> v & 1 == 1 {
                return Err(Error::InvalidArgument(format!("bad adjacency row {v}")));
            }
            for u in Bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Adds edge `uv`. Panics on a loop or an out-of-range vertex.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Appends a vertex adjacent to the vertices in `neighbors`; returns its index.
    pub fn add_vertex(&mut self, neighbors: u64) -> Result<usize> {
        if self.n == MAX_ORDER {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if neighbors & !self.vertex_mask() != 0 {
            return Err(Error::InvalidArgument("neighbor outside graph".into()));
        }
        let v = self.n;
        self.n += 1;
        self.adj[v] = neighbors;
        for u in Bits(neighbors) {
            self.adj[u] |= 1 << v;
        }
        Ok(v)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_mask()
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            edge_count: self.size(),
            connected: self.is_connected(),
        }
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in Bits(self.adj[u]) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Largest distance between two vertices, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let mask = self.vertex_mask();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & mask & !(1 << v);
        }
        g
    }

    /// Subgraph induced by the vertices in `mask`, relabeled `0..k` in
    /// ascending order of the original labels.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = Bits(mask).collect();
        let mut g = Graph {
            n: verts.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in verts.iter().enumerate() {
            let mut row = 0;
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    row |= 1 << j;
                }
            }
            g.adj[i] = row;
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1 << v))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.n {
            let mut row = 0;
            for v in Bits(self.adj[u]) {
                row |= 1 << perm[v];
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Disjoint union: the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let total = self.n + other.n;
        if total > MAX_ORDER {
            return Err(Error::TooManyVertices(total));
        }
        let mut g = *self;
        g.n = total;
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Cartesian product; vertex `(u, v)` is numbered `u * |V(h)| + v`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph> {
        let total = self.n * h.n;
        if total > MAX_ORDER {
            return Err(Error::TooManyVertices(total));
        }
        let mut g = Graph::empty(total)?;
        let idx = |u: usize, v: usize| u * h.n + v;
        for u in 0..self.n {
            for v in 0..h.n {
                for w in Bits(h.adj[v]) {
                    g.adj[idx(u, v)] |= 1 << idx(u, w);
                }
                for w in Bits(self.adj[u]) {
                    g.adj[idx(u, v)] |= 1 << idx(w, v);
                }
            }
        }
        Ok(g)
    }

    /// Whether some vertex subset of `self` induces a copy of `h`.
    pub fn contains_induced(&self, h: &Graph) -> bool {
        if h.n > self.n {
            return false;
        }
        if h.n == 0 {
            return true;
        }
        let mut image = vec![0usize; h.n];
        self.embed_from(h, 0, 0, &mut image)
    }

    fn embed_from(&self, h: &Graph, k: usize, used: u64, image: &mut [usize]) -> bool {
        if k == h.n {
            return true;
        }
        let hdeg = h.degree(k);
        for v in Bits(self.vertex_mask() & !used) {
            if self.degree(v) < hdeg {
                continue;
            }
            let consistent = (0..k).all(|j| h.has_edge(k, j) == self.has_edge(v, image[j]));
            if consistent {
                image[k] = v;
                if self.embed_from(h, k + 1, used | 1 << v, image) {
                    return true;
                }
            }
        }
        false
    }
}

/// Named graph families with vertices `0..n` in block or cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        let invalid = |msg: &str| Err(Error::InvalidFamily(msg.to_string()));
        match *self {
            Family::Complete(n) => {
                if n == 0 {
                    return invalid("complete graph needs at least one vertex");
                }
                Family::CompleteMultipartite(vec![1; n]).build()
            }
            Family::Empty(n) => {
                if n == 0 {
                    return invalid("empty graph needs at least one vertex");
                }
                Graph::empty(n)
            }
            Family::Path(n) => {
                if n == 0 {
                    return invalid("path needs at least one vertex");
                }
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return invalid("cycle needs at least three vertices");
                }
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::CompleteBipartite(a, b) => Family::CompleteMultipartite(vec![a, b]).build(),
            Family::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return invalid("part sizes must be positive");
                }
                let n: usize = parts.iter().sum();
                let mut g = Graph::empty(n)?;
                let mut start = 0;
                for &p in parts {
                    let block = low_mask(start + p) & !low_mask(start);
                    for v in start..start + p {
                        g.adj[v] = g.vertex_mask() & !block;
                    }
                    start += p;
                }
                Ok(g)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Family::Complete(n).build().unwrap()
    }

    #[test]
    fn complete_four() {
        let g = k(4);
        assert_eq!(g.size(), 6);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn bipartite_and_multipartite_counts() {
        let g = Family::CompleteBipartite(3, 3).build().unwrap();
        assert_eq!(g.size(), 9);
        assert_eq!(
            g.stats(),
            GraphStats {
                min_degree: 3,
                max_degree: 3,
                edge_count: 9,
                connected: true
            }
        );
        let m = Family::CompleteMultipartite(vec![3, 3, 3]).build().unwrap();
        assert_eq!(m.size(), 27);
        assert!(m.degrees().iter().all(|&d| d == 6));
    }

    #[test]
    fn family_errors() {
        assert!(Family::Complete(0).build().is_err());
        assert!(Family::CompleteMultipartite(vec![3, 0]).build().is_err());
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Complete(65).build().is_err());
    }

    #[test]
    fn path_stats() {
        let p4 = Family::Path(4).build().unwrap();
        assert_eq!(
            p4.stats(),
            GraphStats {
                min_degree: 1,
                max_degree: 2,
                edge_count: 3,
                connected: true
            }
        );
    }

    #[test]
    fn products() {
        let k3 = k(3);
        let g = k3.cartesian_product(&k3).unwrap();
        assert_eq!((g.order(), g.size()), (9, 18));
        assert!(g.degrees().iter().all(|&d| d == 4));

        let h = Family::Cycle(5).build().unwrap();
        assert_eq!(k(1).cartesian_product(&h).unwrap(), h);

        let k2 = k(2);
        let sq = k2.cartesian_product(&k2).unwrap();
        assert_eq!(sq.size(), 4);
        assert!(sq.degrees().iter().all(|&d| d == 2));
        assert!(sq.is_connected());

        assert!(Graph::empty(9)
            .unwrap()
            .cartesian_product(&Graph::empty(8).unwrap())
            .is_err());
    }

    #[test]
    fn complement_basics() {
        let g = k(4).complement();
        assert_eq!((g.order(), g.size()), (4, 0));
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(k(6).diameter(), Some(1));
        let k3 = k(3);
        assert_eq!(k3.cartesian_product(&k3).unwrap().diameter(), Some(2));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.diameter(), None);
        assert_eq!(Family::Path(5).build().unwrap().diameter(), Some(4));
    }

    #[test]
    fn induced_containment() {
        let claw = Family::CompleteBipartite(1, 3).build().unwrap();
        let c4 = Family::Cycle(4).build().unwrap();
        let k3 = k(3);
        let rook = k3.cartesian_product(&k3).unwrap();
        assert!(rook.contains_induced(&c4));
        assert!(!rook.contains_induced(&claw));
        assert!(rook.contains_induced(&k(1)));
        assert!(!k(5).contains_induced(&Graph::empty(2).unwrap()));
    }

    #[test]
    fn add_vertex_and_delete() {
        let mut g = k(3);
        let v = g.add_vertex(0b011).unwrap();
        assert_eq!(v, 3);
        assert!(g.has_edge(3, 0) && g.has_edge(0, 3) && !g.has_edge(3, 2));
        assert_eq!(g.delete_vertex(3), k(3));
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
    }
}

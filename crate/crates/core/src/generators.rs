//! Constructions that preserve 2-line e.c., and Paley graphs.

use crate::bitset::low_mask;
use crate::error::{Error, Result};
use crate::field::{prime_power, FiniteField};
use crate::graph::{Graph, MAX_ORDER};

/// `g` plus one vertex adjacent to every vertex of `g`.
pub fn cone(g: &Graph) -> Result<Graph> {
    let mut out = *g;
    out.add_vertex(g.vertex_mask())?;
    Ok(out)
}

/// `g` plus `s >= 2` pairwise non-adjacent vertices, each adjacent to all of `g`.
pub fn join_independent(g: &Graph, s: usize) -> Result<Graph> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "independent join needs at least 2 new vertices, got {s}"
        )));
    }
    if g.order() + s > MAX_ORDER {
        return Err(Error::TooManyVertices(g.order() + s));
    }
    let mut out = *g;
    for _ in 0..s {
        out.add_vertex(g.vertex_mask())?;
    }
    Ok(out)
}

/// Disjoint union of `g1` and `g2` plus every edge between them.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let mut out = g1.disjoint_union(g2)?;
    let (n1, n) = (g1.order(), out.order());
    let second = low_mask(n) & !low_mask(n1);
    for u in 0..n1 {
        for v in n1..n {
            out.add_edge(u, v);
        }
    }
    debug_assert!((0..n1).all(|u| out.neighbors(u) & second == second));
    Ok(out)
}

/// The Paley graph on GF(q): `u ~ v` iff `u - v` is a nonzero square.
pub fn paley(q: u32) -> Result<Graph> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
    }
    if q % 4 != 1 {
        return Err(Error::InvalidArgument(format!("{q} is not 1 mod 4")));
    }
    if q as usize > MAX_ORDER {
        return Err(Error::TooManyVertices(q as usize));
    }
    let field = FiniteField::new(q)?;
    let mut g = Graph::empty(q as usize)?;
    for u in field.elements() {
        for v in u + 1..q {
            if field.is_square(field.sub(u, v)) {
                g.add_edge(u as usize, v as usize);
            }
        }
    }
    Ok(g)
}

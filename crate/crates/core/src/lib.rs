//! Existential closure of graphs, line graphs and hypergraph line graphs.
//!
//! A graph is *n-e.c.* when every way of splitting an n-set of vertices into
//! disjoint sets `A` and `B` has a witness vertex outside `A ∪ B` adjacent to
//! all of `A` and none of `B`. The *line* variant asks the same question of
//! edges, with adjacency meaning a shared endpoint.
//!
//! The crate is organized as:
//!
//! * [`graph`], [`graph6`], [`canon`], [`matching`]: small dense graphs
//!   (at most 64 vertices, one `u64` per adjacency row), the graph6 codec,
//!   canonical labeling and elementary parameters.
//! * [`closure`]: the n-e.c. and n-line e.c. deciders with failure
//!   certificates, `xi` and `xi_line`.
//! * [`generators`] and [`field`]: cones, joins and Paley graphs.
//! * [`hypergraph`]: hypergraphs, their line graphs and the edge-level check.
//! * [`planar`]: a planarity decider.
//! * [`enumerate`] and [`search`]: isomorph-free generation by canonical
//!   augmentation and the named classification searches.

pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod closure;
pub mod enumerate;
mod error;
pub mod field;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod matching;
pub mod planar;
pub mod search;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use closure::{
    is_n_ec, is_n_line_ec, is_two_line_ec, line_graph, xi, xi_line, Certificate, EcVerdict,
    Element, LineGraph, XiValue,
};
pub use error::{Error, Result};
pub use field::FiniteField;
pub use generators::{cone, join, join_independent, paley};
pub use graph::{Family, Graph, GraphStats, MAX_ORDER};
pub use graph6::{parse_graph6, write_graph6};
pub use hypergraph::Hypergraph;
pub use matching::max_matching_size;
pub use planar::is_planar;
pub use search::{Filter, SearchConstraints, SearchName, SearchReport};

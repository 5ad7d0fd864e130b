//! Fixed inputs shared by the benchmarks.

use ecgraph::{catalog, generators, Family, Graph};

/// Graphs used across benchmark groups, with a short label each.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let k3 = Family::Complete(3).build().expect("K3");
    vec![
        ("tc44", catalog::tc44()),
        ("k3xk3", k3.cartesian_product(&k3).expect("order 9")),
        (
            "k33",
            Family::CompleteBipartite(3, 3).build().expect("K3,3"),
        ),
        ("paley29", generators::paley(29).expect("q = 29")),
    ]
}

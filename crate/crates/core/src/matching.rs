//! Maximum matching by branch and bound over vertices.

use crate::bitset::Bits;
use crate::graph::Graph;

/// Size of a maximum matching.
///
/// Branches on the lowest unresolved vertex: either it stays unmatched or it
/// is matched to one of its free neighbors. A branch is cut when even a
/// perfect matching of the remaining non-isolated free vertices cannot beat
/// the incumbent, which starts from a greedy matching.
pub fn max_matching_size(g: &Graph) -> usize {
    let free = g.vertex_mask();
    let mut best = greedy(g);
    branch(g, free, 0, &mut best);
    best
}

fn greedy(g: &Graph) -> usize {
    let mut free = g.vertex_mask();
    let mut size = 0;
    for u in 0..g.order() {
        if free >> u & 1 == 0 {
            continue;
        }
        if let Some(v) = Bits(g.neighbors(u) & free).next() {
            free &= !(1 << u | 1 << v);
            size += 1;
        }
    }
    size
}

fn branch(g: &Graph, free: u64, size: usize, best: &mut usize) {
    // vertices with no free neighbour can never be matched again
    let live = Bits(free)
        .filter(|&v| g.neighbors(v) & free != 0)
        .fold(0u64, |m, v| m | 1 << v);
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let Some(u) = Bits(live).next() else {
        *best = (*best).max(size);
        return;
    };
    for v in Bits(g.neighbors(u) & live) {
        branch(g, live & !(1 << u | 1 << v), size + 1, best);
    }
    branch(g, live & !(1 << u), size, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Family;

    #[test]
    fn named_cases() {
        assert_eq!(
            max_matching_size(&Family::CompleteBipartite(3, 3).build().unwrap()),
            3
        );
        assert_eq!(max_matching_size(&Family::Cycle(7).build().unwrap()), 3);
        assert_eq!(max_matching_size(&Family::Empty(5).build().unwrap()), 0);
        assert_eq!(
            max_matching_size(&Family::CompleteBipartite(1, 5).build().unwrap()),
            1
        );
        assert_eq!(max_matching_size(&catalog::tc20()), 3);
    }

    #[test]
    fn balanced_bipartite_is_perfect() {
        for n in 1..=8 {
            let g = Family::CompleteBipartite(n, n).build().unwrap();
            assert_eq!(max_matching_size(&g), n);
        }
    }

    #[test]
    fn greedy_trap() {
        // path 0-1-2-3: greedy from 1 would take (1,2); optimum is 2
        let g = Graph::from_edges(4, &[(1, 2), (0, 1), (2, 3)]).unwrap();
        assert_eq!(max_matching_size(&g), 2);
    }
}

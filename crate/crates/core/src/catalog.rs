//! The five planar 2-line e.c. graphs, with the vertex labels `v1..v7` of
//! their standard drawings mapped to `0..6`.

use crate::graph::Graph;

const TC20: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 7),
];

const TC30: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 6),
    (5, 7),
    (6, 7),
];

const TC39: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 7),
];

const TC43: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 7),
    (5, 6),
];

const TC44: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 7),
    (4, 7),
];

fn from_one_based(edges: &[(usize, usize)]) -> Graph {
    let shifted: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(7, &shifted).expect("catalog edge lists are valid")
}

pub fn tc20() -> Graph {
    from_one_based(TC20)
}

pub fn tc30() -> Graph {
    from_one_based(TC30)
}

pub fn tc39() -> Graph {
    from_one_based(TC39)
}

pub fn tc43() -> Graph {
    from_one_based(TC43)
}

pub fn tc44() -> Graph {
    from_one_based(TC44)
}

/// All five, paired with their Atlas names.
pub fn planar_two_line_ec() -> Vec<(&'static str, Graph)> {
    vec![
        ("Tc20", tc20()),
        ("Tc30", tc30()),
        ("Tc39", tc39()),
        ("Tc43", tc43()),
        ("Tc44", tc44()),
    ]
}

/// Looks up a catalog graph by case-insensitive name.
pub fn by_name(name: &str) -> Option<Graph> {
    planar_two_line_ec()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphStats;

    #[test]
    fn edge_counts() {
        let sizes: Vec<usize> = planar_two_line_ec().iter().map(|(_, g)| g.size()).collect();
        assert_eq!(sizes, vec![12, 13, 14, 15, 15]);
    }

    #[test]
    fn tc44_is_the_pentagonal_bipyramid() {
        // two apexes of degree 5 over a 5-cycle of degree-4 vertices
        assert_eq!(
            tc44().stats(),
            GraphStats {
                min_degree: 4,
                max_degree: 5,
                edge_count: 15,
                connected: true
            }
        );
        let mut degrees = tc44().degrees();
        degrees.sort();
        assert_eq!(degrees, vec![4, 4, 4, 4, 4, 5, 5]);
    }

    #[test]
    fn triangulations_meet_euler_bound() {
        for g in [tc43(), tc44()] {
            assert_eq!(g.size(), 3 * g.order() - 6);
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("tc39"), Some(tc39()));
        assert_eq!(by_name("Tc99"), None);
    }
}

//! Cross-checks of the fast algorithms against slow brute-force oracles.

use std::collections::{BTreeSet, HashMap};

use ecgraph::enumerate::graphs_of_order;
use ecgraph::search::{enumerate_connected, SearchConstraints};
use ecgraph::{canonical_form, is_planar, Graph};

/// Upper-triangle bit string of `g` relabeled by `perm`, minimized over all
/// permutations.
fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut inv = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let mut code = Vec::with_capacity(n * n / 2);
        for j in 1..n {
            for i in 0..j {
                code.push(g.has_edge(inv[i], inv[j]));
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        if !next_permutation(&mut perm) {
            return best.unwrap();
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut g = Graph::empty(n).unwrap();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

#[test]
fn canonical_form_agrees_with_permutation_oracle() {
    for n in 1..=6 {
        let mut fast = BTreeSet::new();
        let mut slow = BTreeSet::new();
        let mut pairs = HashMap::new();
        for g in all_labeled(n) {
            let (f, s) = (canonical_form(&g), brute_canonical(&g));
            // the two invariants must induce the same partition
            assert_eq!(
                *pairs.entry(f.clone()).or_insert_with(|| s.clone()),
                s,
                "n={n} g={g}"
            );
            fast.insert(f);
            slow.insert(s);
        }
        assert_eq!(fast.len(), slow.len(), "n={n}");
        assert_eq!(fast.len(), [1, 2, 4, 11, 34, 156][n - 1]);
    }
}

#[test]
fn enumeration_matches_labeled_oracle() {
    for n in 1..=6 {
        for connected in [false, true] {
            let oracle: BTreeSet<Vec<bool>> = all_labeled(n)
                .filter(|g| !connected || g.is_connected())
                .map(|g| brute_canonical(&g))
                .collect();
            let generated = graphs_of_order(n, connected);
            let classes: BTreeSet<Vec<bool>> = generated.iter().map(brute_canonical).collect();
            assert_eq!(classes.len(), generated.len(), "duplicate class at n={n}");
            assert_eq!(classes, oracle, "n={n} connected={connected}");
        }
    }
}

#[test]
fn connected_graphs_on_eight_vertices() {
    let graphs = enumerate_connected(8, &SearchConstraints::order(8)).unwrap();
    assert_eq!(graphs.len(), 11117);
}

/// Contains K5 or K3,3 as a (not necessarily induced) subgraph.
fn has_kuratowski_subgraph(g: &Graph) -> bool {
    let n = g.order();
    let full = (1u64 << n) - 1;
    for s in 0..=full {
        match s.count_ones() {
            5 => {
                if (0..n)
                    .filter(|v| s >> v & 1 == 1)
                    .all(|v| (g.neighbors(v) | 1 << v) & s == s)
                {
                    return true;
                }
            }
            6 => {
                // bipartitions with the lowest vertex on the left
                let low = s & s.wrapping_neg();
                let rest = s & !low;
                let mut sub = rest;
                loop {
                    let left = sub | low;
                    let right = s & !left;
                    if left.count_ones() == 3
                        && (0..n)
                            .filter(|v| left >> v & 1 == 1)
                            .all(|v| g.neighbors(v) & right == right)
                    {
                        return true;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
            }
            _ => {}
        }
    }
    false
}

fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    // merge v into u, then drop v
    let mut h = *g;
    for w in 0..g.order() {
        if w != u && w != v && g.has_edge(v, w) {
            h.add_edge(u, w);
        }
    }
    h.delete_vertex(v)
}

/// Whether `g` has a K5 or K3,3 minor. Every minor is a subgraph of some
/// sequence of edge contractions.
fn has_kuratowski_minor(g: &Graph, memo: &mut HashMap<ecgraph::CanonicalForm, bool>) -> bool {
    if g.order() < 5 {
        return false;
    }
    let key = canonical_form(g);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let answer = has_kuratowski_subgraph(g)
        || g.edges()
            .iter()
            .any(|&(u, v)| has_kuratowski_minor(&contract(g, u, v), memo));
    memo.insert(key, answer);
    answer
}

#[test]
fn planarity_matches_minor_oracle() {
    let mut memo = HashMap::new();
    let mut planar_counts = Vec::new();
    for n in 1..=7 {
        let mut planar = 0;
        for g in graphs_of_order(n, true) {
            let fast = is_planar(&g);
            assert_eq!(fast, !has_kuratowski_minor(&g, &mut memo), "{g}");
            planar += fast as usize;
        }
        planar_counts.push(planar);
    }
    assert_eq!(planar_counts, vec![1, 1, 2, 6, 20, 99, 646]);
}

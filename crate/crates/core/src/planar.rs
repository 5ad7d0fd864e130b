//! Planarity testing.
//!
//! A graph is planar iff each of its biconnected blocks is. Blocks are
//! tested with the Demoucron–Malgrange–Pertuiset path-addition algorithm:
//! start from an embedded cycle, repeatedly compute the fragments of the
//! block relative to the embedded part, and embed a path of a fragment in a
//! face containing all its attachment vertices. A fragment with no such face
//! proves non-planarity; fragments with a single admissible face are placed
//! first.

use crate::bitset::Bits;
use crate::graph::Graph;

/// Whether `g` has a planar embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|b| {
        let block = g.induced(b);
        let (bn, bm) = (block.order(), block.size());
        // a single edge or a cycle is trivially planar
        if bm <= bn {
            return true;
        }
        bm <= 3 * bn - 6 && embed_block(&block)
    })
}

/// Vertex sets of the biconnected blocks with at least one edge.
fn blocks(g: &Graph) -> Vec<u64> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<u64>,
    }

    fn visit(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for v in Bits(s.g.neighbors(u)) {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                visit(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = 0u64;
                    while let Some((a, b)) = s.stack.pop() {
                        block |= 1 << a | 1 << b;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(v) != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }

    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            visit(&mut s, v, None);
        }
    }
    s.out
}

/// Any cycle of a 2-connected graph, as a vertex sequence.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    depth[0] = 0;
    while let Some(u) = stack.pop() {
        for v in Bits(g.neighbors(u)) {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                stack.push(v);
            } else if v != parent[u] && parent[v] != u {
                // walk both ends up to their common ancestor
                let (mut a, mut b) = (u, v);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return left;
            }
        }
    }
    unreachable!("2-connected block has a cycle")
}

struct Fragment {
    attachments: u64,
    /// Path to embed, between two distinct attachment vertices.
    path: Vec<usize>,
}

/// Path-addition test on a 2-connected graph.
fn embed_block(g: &Graph) -> bool {
    let cycle = find_cycle(g);
    let mut emb_v: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let mut emb_adj = vec![0u64; g.order()];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_adj[a] |= 1 << b;
        emb_adj[b] |= 1 << a;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];
    let total = g.size();
    let mut embedded = faces[0].len();

    while embedded < total {
        let fragments = fragments(g, emb_v, &emb_adj);
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&i| face_masks[i] & frag.attachments == frag.attachments)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unembedded edges leave a fragment");
        let path = &fragments[fi].path;
        for w in path.windows(2) {
            emb_adj[w[0]] |= 1 << w[1];
            emb_adj[w[1]] |= 1 << w[0];
        }
        for &v in path {
            emb_v |= 1 << v;
        }
        embedded += path.len() - 1;
        let (one, two) = split_face(&faces[face_idx], path);
        faces[face_idx] = one;
        faces.push(two);
    }
    true
}

/// Fragments relative to the embedded subgraph: chords between embedded
/// vertices, and components of the unembedded vertices with their
/// attachments.
fn fragments(g: &Graph, emb_v: u64, emb_adj: &[u64]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in Bits(emb_v) {
        for v in Bits(g.neighbors(u) & emb_v & !emb_adj[u]) {
            if u < v {
                out.push(Fragment {
                    attachments: 1 << u | 1 << v,
                    path: vec![u, v],
                });
            }
        }
    }
    let mut rest = g.vertex_mask() & !emb_v;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        // component of the unembedded part containing `start`
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= g.neighbors(v) & rest;
            }
            frontier = next & !comp;
            comp |= next;
        }
        rest &= !comp;
        let attachments = Bits(comp).fold(0u64, |m, v| m | g.neighbors(v) & emb_v);
        out.push(Fragment {
            attachments,
            path: fragment_path(g, comp, attachments),
        });
    }
    out
}

/// A path from one attachment through `comp` to a different attachment.
fn fragment_path(g: &Graph, comp: u64, attachments: u64) -> Vec<usize> {
    let a = attachments.trailing_zeros() as usize;
    let mut parent = [usize::MAX; 64];
    let mut seen = 0u64;
    let mut queue = std::collections::VecDeque::new();
    for c in Bits(g.neighbors(a) & comp) {
        parent[c] = a;
        seen |= 1 << c;
        queue.push_back(c);
    }
    while let Some(u) = queue.pop_front() {
        if let Some(b) = Bits(g.neighbors(u) & attachments & !(1 << a)).next() {
            let mut path = vec![b, u];
            let mut x = u;
            while parent[x] != a {
                x = parent[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for v in Bits(g.neighbors(u) & comp & !seen) {
            seen |= 1 << v;
            parent[v] = u;
            queue.push_back(v);
        }
    }
    unreachable!("fragment of a 2-connected block has two attachments")
}

/// Splits the face cycle by a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], *path.last().unwrap());
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let len = face.len();
    let inner = &path[1..path.len() - 1];

    // a -> ... -> b along the face, then back through the path
    let mut one = Vec::new();
    let mut k = i;
    loop {
        one.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    one.extend(inner.iter().rev());

    // b -> ... -> a along the face, then forward through the path
    let mut two = Vec::new();
    let mut k = j;
    loop {
        two.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    two.extend(inner.iter());
    (one, two)
}

//! Brute-force oracles that share no code with the library's algorithms.
//! They only read adjacency, so they are slow and meant for n <= 6 or so.

#![allow(dead_code)]

use dimkit::{Graph, Poset};

fn adj(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// No induced cycle of length four or more.
pub fn chordal(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u64..1 << n {
        let vs = members(mask);
        if vs.len() < 4 {
            continue;
        }
        let two_regular = vs.iter().all(|&u| vs.iter().filter(|&&v| adj(g, u, v)).count() == 2);
        if two_regular && connected_within(g, &vs) {
            return false;
        }
    }
    true
}

fn connected_within(g: &Graph, vs: &[usize]) -> bool {
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in vs {
            if adj(g, u, v) && !seen.contains(&v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

/// Path from `a` to `b` avoiding `z` and all of its neighbors.
fn path_avoiding(g: &Graph, a: usize, b: usize, z: usize) -> bool {
    let blocked = |v: usize| v == z || adj(g, v, z);
    if blocked(a) || blocked(b) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for (v, seen_v) in seen.iter_mut().enumerate() {
            if !*seen_v && !blocked(v) && adj(g, u, v) {
                *seen_v = true;
                stack.push(v);
            }
        }
    }
    false
}

pub fn at_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj(g, a, b) || adj(g, a, c) || adj(g, b, c) {
                    continue;
                }
                if path_avoiding(g, a, b, c) && path_avoiding(g, a, c, b) && path_avoiding(g, b, c, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Interval graphs are exactly the chordal AT-free graphs.
pub fn interval(g: &Graph) -> bool {
    chordal(g) && at_free(g)
}

/// Sorted degree sequence of the subgraph induced on four vertices.
fn quad_degrees(g: &Graph, q: [usize; 4]) -> [usize; 4] {
    let mut d = [0; 4];
    for i in 0..4 {
        d[i] = (0..4).filter(|&j| j != i && adj(g, q[i], q[j])).count();
    }
    d.sort_unstable();
    d
}

fn quads(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

/// No induced 2K2, C4 or P4.
pub fn threshold(g: &Graph) -> bool {
    quads(g.n()).all(|q| {
        let d = quad_degrees(g, q);
        d != [1, 1, 1, 1] && d != [2, 2, 2, 2] && d != [1, 1, 2, 2]
    })
}

pub fn claw_free(g: &Graph) -> bool {
    quads(g.n()).all(|q| quad_degrees(g, q) != [1, 1, 1, 3])
}

/// Unit interval graphs are exactly the claw-free interval graphs.
pub fn unit_interval(g: &Graph) -> bool {
    interval(g) && claw_free(g)
}

/// Least number of `sets` whose union is `universe`; `None` if impossible.
pub fn min_cover(universe: u64, sets: &[u64]) -> Option<usize> {
    if universe == 0 {
        return Some(0);
    }
    let mut sets: Vec<u64> = sets.iter().map(|s| s & universe).filter(|&s| s != 0).collect();
    sets.sort_unstable();
    sets.dedup();
    let maximal: Vec<u64> =
        sets.iter().copied().filter(|&s| !sets.iter().any(|&t| t != s && s & t == s)).collect();
    // some chosen set must cover the lowest uncovered element
    fn go(left: u64, k: usize, sets: &[u64]) -> bool {
        if left == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let first = left.trailing_zeros();
        sets.iter().any(|&s| s >> first & 1 == 1 && go(left & !s, k - 1, sets))
    }
    (1..=maximal.len()).find(|&k| go(universe, k, &maximal))
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_from_pairs(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let chosen: Vec<(usize, usize)> = members(mask).into_iter().map(|i| pairs[i]).collect();
    Graph::from_edges(n, &chosen).unwrap()
}

/// Threshold dimension by enumerating every threshold subgraph of `g`.
pub fn tdim(g: &Graph) -> usize {
    let n = g.n();
    let edges: Vec<(usize, usize)> = pair_index(n).into_iter().filter(|&(u, v)| adj(g, u, v)).collect();
    let m = edges.len();
    let sets: Vec<u64> = (1u64..1 << m).filter(|&s| threshold(&graph_from_pairs(n, &edges, s))).collect();
    min_cover((1u64 << m) - 1, &sets).unwrap()
}

/// Least number of supergraphs accepted by `class` whose intersection is `g`,
/// at least one.
pub fn intersection_number(g: &Graph, class: fn(&Graph) -> bool) -> usize {
    let n = g.n();
    let all = pair_index(n);
    let non_edges: Vec<(usize, usize)> = all.iter().copied().filter(|&(u, v)| !adj(g, u, v)).collect();
    let m = non_edges.len();
    if m == 0 {
        return 1;
    }
    // a supergraph is g plus some non-edges; it removes the rest
    let sets: Vec<u64> = (0u64..1 << m)
        .filter(|&added| {
            let mut h = g.clone();
            for i in members(added) {
                h.add_edge(non_edges[i].0, non_edges[i].1);
            }
            class(&h)
        })
        .map(|added| !added & ((1u64 << m) - 1))
        .collect();
    min_cover((1u64 << m) - 1, &sets).unwrap()
}

pub fn boxicity(g: &Graph) -> usize {
    intersection_number(g, interval)
}

pub fn cubicity(g: &Graph) -> usize {
    intersection_number(g, unit_interval)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Poset dimension by enumerating every linear extension.
pub fn poset_dim(p: &Poset) -> usize {
    let n = p.n();
    let incomparable: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && !p.leq(x, y) && !p.leq(y, x))
        .collect();
    let exts: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|order| {
            let pos = position(order);
            (0..n).all(|x| (0..n).all(|y| !p.lt(x, y) || pos[x] < pos[y]))
        })
        .collect();
    let sets: Vec<u64> = exts
        .iter()
        .map(|order| {
            let pos = position(order);
            incomparable
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| pos[x] < pos[y])
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let universe = if incomparable.is_empty() { 0 } else { (1u64 << incomparable.len()) - 1 };
    min_cover(universe, &sets).unwrap().max(1)
}

fn position(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    pos
}

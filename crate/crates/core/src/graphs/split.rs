use crate::bitset::{bit, from_slice, to_vec, Bits};
use crate::error::{invalid, Result};
use crate::graphs::Graph;

/// A certified clique / independent-set bipartition of a split graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// Builds a partition from a clique mask; the independent side is the rest.
    pub fn from_clique_mask(n: usize, clique: u64) -> Self {
        let all = crate::bitset::full(n);
        SplitPartition {
            clique: to_vec(clique & all),
            independent: to_vec(!clique & all),
        }
    }

    pub fn clique_mask(&self) -> u64 {
        from_slice(&self.clique)
    }

    pub fn independent_mask(&self) -> u64 {
        from_slice(&self.independent)
    }

    /// Checks that this is a partition of `V(g)` into a clique and an independent set.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut seen = 0u64;
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= n {
                return invalid(format!("partition vertex {v} out of range for n = {n}"));
            }
            if seen & bit(v) != 0 {
                return invalid(format!("vertex {v} appears twice in the partition"));
            }
            seen |= bit(v);
        }
        if seen != g.vertex_mask() {
            return invalid("partition does not cover every vertex");
        }
        if !g.is_clique(self.clique_mask()) {
            return invalid("clique side is not a clique");
        }
        if !g.is_independent(self.independent_mask()) {
            return invalid("independent side is not an independent set");
        }
        Ok(())
    }

    /// Whether every clique vertex is adjacent to every independent vertex.
    pub fn is_complete_split(&self, g: &Graph) -> bool {
        let k = self.clique_mask();
        self.independent.iter().all(|&u| g.neighbors(u) & k == k)
    }
}

/// Small induced subgraphs that rule out split structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitObstructionKind {
    TwoK2,
    C4,
    C5,
}

/// An induced forbidden subgraph. For cycles, `vertices` is in cyclic order;
/// for `2K2` the edges are `vertices[0..2]` and `vertices[2..4]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitObstruction {
    pub kind: SplitObstructionKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    Split(SplitPartition),
    NotSplit(SplitObstruction),
}

impl SplitVerdict {
    pub fn partition(self) -> Option<SplitPartition> {
        match self {
            SplitVerdict::Split(p) => Some(p),
            SplitVerdict::NotSplit(_) => None,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, SplitVerdict::Split(_))
    }
}

/// Recognizes split graphs.
///
/// The degree-sequence test finds a maximum clique `K` with independent
/// complement when one exists. Every other maximum-clique partition differs
/// from it by a single swap, so the canonical partition (lexicographically
/// least clique) is picked among those. On failure an induced `2K2`, `C4` or
/// `C5` is returned.
pub fn recognize_split(g: &Graph) -> Result<SplitVerdict> {
    if g.n() == 0 {
        return invalid("graph has no vertices");
    }
    match degree_partition(g) {
        Some(k0) => Ok(SplitVerdict::Split(canonical_partition(g, k0))),
        None => {
            let obs = find_split_obstruction(g)
                .ok_or_else(|| crate::Error::Internal("non-split graph without obstruction".into()))?;
            Ok(SplitVerdict::NotSplit(obs))
        }
    }
}

/// Whether `g` admits a split partition with every clique-independent pair
/// adjacent, i.e. `g` is a clique joined to an independent set. Equivalently
/// the complement is one clique plus isolated vertices.
pub fn is_complete_split_graph(g: &Graph) -> bool {
    let c = g.complement();
    let core: u64 = (0..c.n()).filter(|&v| c.degree(v) > 0).fold(0, |m, v| m | bit(v));
    c.is_clique(core)
}

pub fn is_split(g: &Graph) -> bool {
    g.n() > 0 && degree_partition(g).is_some()
}

fn degree_partition(g: &Graph) -> Option<u64> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n).filter(|&i| deg[i] >= i).max().map_or(0, |i| i + 1);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * (m.saturating_sub(1)) + tail {
        return None;
    }
    let k = from_slice(&order[..m]);
    debug_assert!(g.is_clique(k) && g.is_independent(!k & g.vertex_mask()));
    Some(k)
}

fn canonical_partition(g: &Graph, k0: u64) -> SplitPartition {
    let all = g.vertex_mask();
    let valid = |k: u64| g.is_clique(k) && g.is_independent(!k & all);
    let mut best = to_vec(k0);
    for x in Bits(k0) {
        for y in Bits(!k0 & all) {
            let k = (k0 & !bit(x)) | bit(y);
            if valid(k) {
                let cand = to_vec(k);
                if cand < best {
                    best = cand;
                }
            }
        }
    }
    SplitPartition::from_clique_mask(g.n(), from_slice(&best))
}

/// Lexicographically first induced `2K2`, `C4` (4-subsets first) or `C5`.
pub fn find_split_obstruction(g: &Graph) -> Option<SplitObstruction> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Some(obs) = classify_four(g, [a, b, c, d]) {
                        return Some(obs);
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        if let Some(cyc) = induced_cycle(g, &[a, b, c, d, e]) {
                            return Some(SplitObstruction {
                                kind: SplitObstructionKind::C5,
                                vertices: cyc,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

fn classify_four(g: &Graph, vs: [usize; 4]) -> Option<SplitObstruction> {
    let mask = from_slice(&vs);
    let degs: Vec<u32> = vs.iter().map(|&v| (g.neighbors(v) & mask).count_ones()).collect();
    if degs.iter().all(|&d| d == 1) {
        let [a, b, c, d] = vs;
        let (p, q) = if g.has_edge(a, b) {
            ((a, b), (c, d))
        } else if g.has_edge(a, c) {
            ((a, c), (b, d))
        } else {
            ((a, d), (b, c))
        };
        return Some(SplitObstruction {
            kind: SplitObstructionKind::TwoK2,
            vertices: vec![p.0, p.1, q.0, q.1],
        });
    }
    if degs.iter().all(|&d| d == 2) {
        return induced_cycle(g, &vs).map(|cyc| SplitObstruction {
            kind: SplitObstructionKind::C4,
            vertices: cyc,
        });
    }
    None
}

/// If `vs` induces a chordless cycle, returns it in cyclic order starting at `vs[0]`.
pub(crate) fn induced_cycle(g: &Graph, vs: &[usize]) -> Option<Vec<usize>> {
    let mask = from_slice(vs);
    if vs.iter().any(|&v| (g.neighbors(v) & mask).count_ones() != 2) {
        return None;
    }
    let mut cyc = vec![vs[0]];
    let mut prev = usize::MAX;
    let mut cur = vs[0];
    loop {
        let next = Bits(g.neighbors(cur) & mask).find(|&w| w != prev)?;
        if next == vs[0] {
            break;
        }
        cyc.push(next);
        prev = cur;
        cur = next;
    }
    (cyc.len() == vs.len()).then_some(cyc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::graph::{cycle, path};

    #[test]
    fn p4_canonical_partition() {
        let v = recognize_split(&path(4)).unwrap();
        assert_eq!(
            v,
            SplitVerdict::Split(SplitPartition { clique: vec![1, 2], independent: vec![0, 3] })
        );
    }

    #[test]
    fn c4_is_its_own_witness() {
        match recognize_split(&cycle(4)).unwrap() {
            SplitVerdict::NotSplit(obs) => {
                assert_eq!(obs.kind, SplitObstructionKind::C4);
                assert_eq!(obs.vertices, vec![0, 1, 2, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn c5_and_2k2_witnesses() {
        match recognize_split(&cycle(5)).unwrap() {
            SplitVerdict::NotSplit(obs) => assert_eq!(obs.kind, SplitObstructionKind::C5),
            other => panic!("unexpected {other:?}"),
        }
        let two_k2 = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        match recognize_split(&two_k2).unwrap() {
            SplitVerdict::NotSplit(obs) => {
                assert_eq!(obs.kind, SplitObstructionKind::TwoK2);
                assert_eq!(obs.vertices, vec![0, 2, 1, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complete_split_graph_partition() {
        // K = {0,1,2}, I = {3,4}, every K-I edge present
        let mut g = Graph::complete(3).unwrap();
        g = {
            let mut h = Graph::new(5).unwrap();
            for (u, v) in g.edges() {
                h.add_edge(u, v);
            }
            h
        };
        for k in 0..3 {
            g.add_edge(k, 3);
            g.add_edge(k, 4);
        }
        let part = recognize_split(&g).unwrap().partition().unwrap();
        // {0,1,2,3} is also a clique; the canonical partition takes the
        // lexicographically least maximum clique
        assert_eq!(part.clique, vec![0, 1, 2, 3]);
        part.validate(&g).unwrap();
        assert!(!part.is_complete_split(&g));
        assert!(is_complete_split_graph(&g));
        let given = SplitPartition { clique: vec![0, 1, 2], independent: vec![3, 4] };
        given.validate(&g).unwrap();
        assert!(given.is_complete_split(&g));
        assert!(!is_complete_split_graph(&path(4)));
        assert!(is_complete_split_graph(&Graph::new(3).unwrap()));
    }

    #[test]
    fn degenerate_sizes() {
        assert!(recognize_split(&Graph::new(0).unwrap()).is_err());
        let p = recognize_split(&Graph::new(1).unwrap()).unwrap().partition().unwrap();
        assert_eq!(p.clique, vec![0]);
        assert!(p.independent.is_empty());
    }

    #[test]
    fn validate_rejects_bad_partitions() {
        let g = path(4);
        let bad = SplitPartition { clique: vec![0, 1], independent: vec![2, 3] };
        assert!(bad.validate(&g).is_err());
        let short = SplitPartition { clique: vec![1, 2], independent: vec![0] };
        assert!(short.validate(&g).is_err());
    }
}

use std::collections::HashSet;

use crate::bitset::{bit, full, Bits};
use crate::error::{invalid, Result};
use crate::graphs::Graph;

/// Closed integer intervals, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRep {
    pub intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        if let Some((v, &(l, r))) = intervals.iter().enumerate().find(|(_, &(l, r))| l > r) {
            return invalid(format!("interval of vertex {v} has l = {l} > r = {r}"));
        }
        if intervals.len() > crate::graphs::MAX_VERTICES {
            return invalid("too many intervals");
        }
        Ok(IntervalRep { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    #[inline]
    pub fn left(&self, v: usize) -> i64 {
        self.intervals[v].0
    }

    #[inline]
    pub fn right(&self, v: usize) -> i64 {
        self.intervals[v].1
    }

    #[inline]
    pub fn meets(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.intervals[u];
        let (c, d) = self.intervals[v];
        a <= d && c <= b
    }

    /// Intersection graph of the intervals.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n).expect("interval count checked at construction");
        for u in 0..n {
            for v in u + 1..n {
                if self.meets(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn realizes(&self, g: &Graph) -> bool {
        self.n() == g.n() && self.graph() == *g
    }
}

/// Recognizes interval graphs through a consecutive ordering of maximal cliques.
///
/// On success vertex `v` gets `[2f - 1, 2l]` where `f..=l` is the range of
/// cliques containing `v` (1-based), so all endpoints lie in `[1, 2n]`.
pub fn recognize_interval(g: &Graph) -> Result<Option<IntervalRep>> {
    if g.n() == 0 {
        return invalid("graph has no vertices");
    }
    Ok(clique_path(g).map(|path| {
        let spans = clique_spans(g.n(), &path);
        let intervals = spans.iter().map(|&(f, l)| (2 * f as i64 - 1, 2 * l as i64)).collect();
        IntervalRep { intervals }
    }))
}

pub fn is_interval(g: &Graph) -> bool {
    g.n() > 0 && clique_path(g).is_some()
}

/// `(first, last)` 1-based clique indices for every vertex.
pub(crate) fn clique_spans(n: usize, path: &[u64]) -> Vec<(usize, usize)> {
    let mut spans = vec![(usize::MAX, 0); n];
    for (i, &c) in path.iter().enumerate() {
        for v in Bits(c) {
            spans[v].0 = spans[v].0.min(i + 1);
            spans[v].1 = i + 1;
        }
    }
    spans
}

/// Perfect elimination ordering from maximum cardinality search, if `g` is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = 0u64;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| numbered & bit(v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))?;
        visit.push(v);
        numbered |= bit(v);
        for w in Bits(g.neighbors(v) & !numbered) {
            weight[w] += 1;
        }
    }
    visit.reverse();
    let mut later = full(n);
    for &v in &visit {
        later &= !bit(v);
        if !g.is_clique(g.neighbors(v) & later) {
            return None;
        }
    }
    Some(visit)
}

/// Maximal cliques of a chordal graph given a perfect elimination ordering,
/// in order of their first appearance.
pub(crate) fn chordal_maximal_cliques(g: &Graph, peo: &[usize]) -> Vec<u64> {
    let mut later = g.vertex_mask();
    let mut cands = Vec::with_capacity(peo.len());
    for &v in peo {
        later &= !bit(v);
        cands.push(bit(v) | (g.neighbors(v) & later));
    }
    let mut out: Vec<u64> = Vec::new();
    for (i, &c) in cands.iter().enumerate() {
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(j, &d)| j != i && c & !d == 0 && (c != d || j < i));
        if !dominated {
            out.push(c);
        }
    }
    out
}

/// Maximal cliques of `g` in an order where each vertex occupies a
/// contiguous run, or `None` when `g` is not an interval graph.
pub(crate) fn clique_path(g: &Graph) -> Option<Vec<u64>> {
    let peo = perfect_elimination_order(g)?;
    let cliques = chordal_maximal_cliques(g, &peo);
    let m = cliques.len();
    let mut count = vec![0u32; g.n()];
    for &c in &cliques {
        for v in Bits(c) {
            count[v] += 1;
        }
    }
    let shared: u64 = (0..g.n()).filter(|&v| count[v] > 1).fold(0, |s, v| s | bit(v));
    let mut search = CliqueOrder {
        cliques: &cliques,
        shared,
        failed: HashSet::new(),
        order: Vec::with_capacity(m),
    };
    if search.extend(0, 0) {
        Some(search.order.iter().map(|&i| cliques[i]).collect())
    } else {
        None
    }
}

struct CliqueOrder<'a> {
    cliques: &'a [u64],
    shared: u64,
    failed: HashSet<u64>,
    order: Vec<usize>,
}

impl CliqueOrder<'_> {
    /// `placed` is the set of placed clique indices, `covered` their union.
    fn extend(&mut self, placed: u64, covered: u64) -> bool {
        let m = self.cliques.len();
        if placed == full(m) {
            return true;
        }
        if self.failed.contains(&placed) {
            return false;
        }
        let pending: u64 = Bits(full(m) & !placed).fold(0, |u, i| u | self.cliques[i]);
        let open = covered & pending;
        let mut tried: Vec<u64> = Vec::new();
        for i in Bits(full(m) & !placed) {
            let c = self.cliques[i];
            if open & !c != 0 {
                continue;
            }
            // cliques with the same shared part are interchangeable
            let sig = c & self.shared;
            if tried.contains(&sig) {
                continue;
            }
            tried.push(sig);
            self.order.push(i);
            if self.extend(placed | bit(i), covered | c) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(placed);
        false
    }
}

/// Relabels endpoints to `1..=2n` so that all endpoints are distinct and no
/// interval is a single point, without changing the intersection graph.
///
/// Endpoints are ranked by coordinate; at equal coordinates left endpoints
/// come before right endpoints, so touching intervals still overlap.
pub fn normalize_interval_rep(rep: &IntervalRep) -> IntervalRep {
    let n = rep.n();
    let mut events: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * n);
    for (v, &(l, r)) in rep.intervals.iter().enumerate() {
        events.push((l, 0, v));
        events.push((r, 1, v));
    }
    events.sort_unstable();
    let mut out = vec![(0i64, 0i64); n];
    for (rank, &(_, side, v)) in events.iter().enumerate() {
        let pos = rank as i64 + 1;
        if side == 0 {
            out[v].0 = pos;
        } else {
            out[v].1 = pos;
        }
    }
    IntervalRep { intervals: out }
}

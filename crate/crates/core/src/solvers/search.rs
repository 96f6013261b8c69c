//! Exact threshold dimension, threshold intersection number, boxicity and
//! cubicity.
//!
//! All four share one scheme. Iterative deepening on `k`; within a `k`, the
//! pairs to be separated (edges for covers, non-edges for intersections) are
//! taken in lexicographic order and each is charged to one factor. A factor
//! is kept only while a graph of the right class still fits between its
//! required and forbidden pairs (the sandwich oracles). Factors are opened in
//! index order, which removes relabelling symmetry. The first assignment
//! found is the canonical witness.
//!
//! Charging each pair to a single factor is exact: in any valid family every
//! pair is separated by at least one factor, and charging it there keeps that
//! factor's sandwich feasible.

use std::collections::HashMap;

use crate::bitset::bit;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::solvers::config::{Clock, SearchConfig};
use crate::solvers::sandwich::{interval_sandwich, rows_of, threshold_sandwich, unit_interval_sandwich};

/// Class of the factors in an [`IntersectionRep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Interval,
    UnitInterval,
    Threshold,
}

impl FactorKind {
    pub fn name(self) -> &'static str {
        match self {
            FactorKind::Interval => "interval",
            FactorKind::UnitInterval => "unit-interval",
            FactorKind::Threshold => "threshold",
        }
    }
}

/// Spanning threshold subgraphs whose edge union is the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCover(pub Vec<Graph>);

/// Supergraphs of a declared class whose intersection is the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionRep {
    pub kind: FactorKind,
    pub factors: Vec<Graph>,
}

/// Which side of the target a factor family lives on.
#[derive(Clone, Copy)]
enum Mode {
    /// Factors are subgraphs; each edge must be present in one of them.
    Cover,
    /// Factors are supergraphs; each non-edge must be absent from one of them.
    Intersect(FactorKind),
}

/// Sandwich problem for one factor given the pairs charged to it.
struct Oracle<'a> {
    g: &'a Graph,
    mode: Mode,
    base: Vec<u64>,
    memo: HashMap<Vec<u64>, bool>,
}

impl<'a> Oracle<'a> {
    fn new(g: &'a Graph, mode: Mode) -> Self {
        let base = match mode {
            // a cover factor may not use non-edges
            Mode::Cover => rows_of(&g.complement()),
            // an intersection factor must keep every edge
            Mode::Intersect(_) => rows_of(g),
        };
        Oracle { g, mode, base, memo: HashMap::new() }
    }

    fn feasible(&mut self, charged: &[u64]) -> bool {
        if let Some(&ok) = self.memo.get(charged) {
            return ok;
        }
        let ok = self.solve(charged).is_some();
        self.memo.insert(charged.to_vec(), ok);
        ok
    }

    fn solve(&self, charged: &[u64]) -> Option<Graph> {
        let n = self.g.n();
        match self.mode {
            Mode::Cover => threshold_sandwich(n, charged, &self.base),
            Mode::Intersect(FactorKind::Threshold) => threshold_sandwich(n, &self.base, charged),
            Mode::Intersect(FactorKind::Interval) => {
                interval_sandwich(n, &self.base, charged).map(|r| r.graph())
            }
            Mode::Intersect(FactorKind::UnitInterval) => {
                unit_interval_sandwich(n, &self.base, charged)
            }
        }
    }
}

fn add_pair(rows: &mut [u64], (u, v): (usize, usize)) {
    rows[u] |= bit(v);
    rows[v] |= bit(u);
}

struct Assign<'o, 'g> {
    oracle: &'o mut Oracle<'g>,
    pairs: &'o [(usize, usize)],
    k: usize,
    clock: &'o mut Clock,
}

impl Assign<'_, '_> {
    fn run(&mut self, idx: usize, factors: &mut Vec<Vec<u64>>) -> bool {
        if self.clock.expired() {
            return false;
        }
        let Some(&pair) = self.pairs.get(idx) else {
            return true;
        };
        for j in 0..factors.len() {
            let saved = factors[j].clone();
            add_pair(&mut factors[j], pair);
            if self.oracle.feasible(&factors[j]) && self.run(idx + 1, factors) {
                return true;
            }
            factors[j] = saved;
        }
        if factors.len() < self.k {
            let mut rows = vec![0u64; self.oracle.g.n()];
            add_pair(&mut rows, pair);
            if self.oracle.feasible(&rows) {
                factors.push(rows);
                if self.run(idx + 1, factors) {
                    return true;
                }
                factors.pop();
            }
        }
        false
    }
}

/// Minimum number of factors, starting the deepening at `start`.
fn solve(g: &Graph, mode: Mode, pairs: &[(usize, usize)], start: usize, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    let mut oracle = Oracle::new(g, mode);
    let mut clock = cfg.clock();
    for k in start.max(1)..=pairs.len().max(1) {
        let mut factors: Vec<Vec<u64>> = Vec::with_capacity(k);
        let found = Assign { oracle: &mut oracle, pairs, k, clock: &mut clock }.run(0, &mut factors);
        if found {
            while factors.len() < k {
                factors.push(vec![0; g.n()]);
            }
            return factors
                .iter()
                .map(|rows| {
                    oracle
                        .solve(rows)
                        .ok_or_else(|| Error::Internal("feasible factor lost its witness".into()))
                })
                .collect();
        }
        if clock.expired() {
            return Err(Error::Timeout { best_upper_bound: Some(greedy(g, mode, pairs)) });
        }
    }
    Err(Error::Internal("one factor per pair should always suffice".into()))
}

/// First-fit charging without backtracking; always succeeds.
fn greedy(g: &Graph, mode: Mode, pairs: &[(usize, usize)]) -> usize {
    let mut oracle = Oracle::new(g, mode);
    let mut factors: Vec<Vec<u64>> = Vec::new();
    for &pair in pairs {
        let mut placed = false;
        for f in factors.iter_mut() {
            let mut trial = f.clone();
            add_pair(&mut trial, pair);
            if oracle.feasible(&trial) {
                *f = trial;
                placed = true;
                break;
            }
        }
        if !placed {
            let mut rows = vec![0u64; g.n()];
            add_pair(&mut rows, pair);
            factors.push(rows);
        }
    }
    factors.len().max(1)
}

/// Least `k` with `k` threshold spanning subgraphs covering `E(g)`, with a
/// canonical witness. The edgeless graph has threshold dimension 0.
pub fn threshold_dimension(g: &Graph, cfg: &SearchConfig) -> Result<(usize, ThresholdCover)> {
    cfg.check_size(g.n())?;
    let edges: Vec<_> = g.edges().collect();
    if edges.is_empty() {
        return Ok((0, ThresholdCover(Vec::new())));
    }
    let factors = solve(g, Mode::Cover, &edges, 1, cfg)?;
    Ok((factors.len(), ThresholdCover(factors)))
}

/// Least `k` with `g` the intersection of `k` threshold graphs; equals the
/// threshold dimension of the complement, except that complete graphs
/// report 1 (witness `[g]`).
pub fn threshold_intersection_number(g: &Graph, cfg: &SearchConfig) -> Result<(usize, IntersectionRep)> {
    let (k, cover) = threshold_dimension(&g.complement(), cfg)?;
    let factors: Vec<Graph> = if k == 0 {
        vec![g.clone()]
    } else {
        cover.0.iter().map(Graph::complement).collect()
    };
    Ok((factors.len(), IntersectionRep { kind: FactorKind::Threshold, factors }))
}

fn intersection_dimension(g: &Graph, kind: FactorKind, cfg: &SearchConfig) -> Result<(usize, IntersectionRep)> {
    cfg.check_size(g.n())?;
    if g.n() == 0 {
        return crate::error::invalid("graph has no vertices");
    }
    let non_edges: Vec<_> = g.non_edges().collect();
    if non_edges.is_empty() {
        return Ok((1, IntersectionRep { kind, factors: vec![g.clone()] }));
    }
    let factors = solve(g, Mode::Intersect(kind), &non_edges, 1, cfg)?;
    Ok((factors.len(), IntersectionRep { kind, factors }))
}

/// Least positive `k` with `g` the intersection of `k` interval graphs.
pub fn boxicity(g: &Graph, cfg: &SearchConfig) -> Result<(usize, IntersectionRep)> {
    intersection_dimension(g, FactorKind::Interval, cfg)
}

/// Least positive `k` with `g` the intersection of `k` unit interval graphs.
pub fn cubicity(g: &Graph, cfg: &SearchConfig) -> Result<(usize, IntersectionRep)> {
    intersection_dimension(g, FactorKind::UnitInterval, cfg)
}

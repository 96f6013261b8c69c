//! Sandwich oracles: given edges that must be present and pairs that must be
//! absent, find a graph of a given class in between.
//!
//! All three work on adjacency rows: `must[v]` are required neighbors and
//! `forbid[v]` are forbidden ones. Every other pair is free.

use std::collections::HashSet;

use crate::bitset::{bit, full, Bits};
use crate::graphs::{Graph, IntervalRep};

/// Threshold graph `F` with `must ⊆ F` and `F ∩ forbid = ∅`.
///
/// Greedy elimination: a vertex with no required edge left can be isolated,
/// a vertex with no forbidden pair left can be made dominating. Removing
/// such a vertex never destroys a solution, and every threshold graph has
/// one, so the greedy run fails only when no sandwich exists.
pub fn threshold_sandwich(n: usize, must: &[u64], forbid: &[u64]) -> Option<Graph> {
    let mut alive = full(n);
    let mut g = Graph::new(n).ok()?;
    while alive != 0 {
        let isolated = Bits(alive).find(|&v| must[v] & alive == 0);
        let v = match isolated {
            Some(v) => v,
            None => {
                let v = Bits(alive).find(|&v| forbid[v] & alive == 0)?;
                for w in Bits(alive & !bit(v)) {
                    g.add_edge(v, w);
                }
                v
            }
        };
        alive &= !bit(v);
    }
    Some(g)
}

/// Interval graph sandwich, returning a representation.
///
/// Searches over orders of left endpoints. A vertex's right endpoint is
/// placed as soon as all its required neighbors have started, which only
/// shrinks intervals and so loses no solution; the search state is then the
/// set of started vertices alone. A vertex may start only if no running
/// interval is forbidden to meet it.
pub fn interval_sandwich(n: usize, must: &[u64], forbid: &[u64]) -> Option<IntervalRep> {
    let mut s = IntervalSearch { n, must, forbid, failed: HashSet::new(), opens: Vec::new() };
    if !s.run(0) {
        return None;
    }
    Some(replay_events(n, must, &s.opens, false))
}

struct IntervalSearch<'a> {
    n: usize,
    must: &'a [u64],
    forbid: &'a [u64],
    failed: HashSet<u64>,
    opens: Vec<usize>,
}

impl IntervalSearch<'_> {
    fn closed(&self, started: u64) -> u64 {
        Bits(started).filter(|&u| self.must[u] & !started == 0).fold(0, |m, u| m | bit(u))
    }

    fn run(&mut self, started: u64) -> bool {
        if started == full(self.n) {
            return true;
        }
        if self.failed.contains(&started) {
            return false;
        }
        let running = started & !self.closed(started);
        for v in Bits(full(self.n) & !started) {
            if self.forbid[v] & running != 0 {
                continue;
            }
            self.opens.push(v);
            if self.run(started | bit(v)) {
                return true;
            }
            self.opens.pop();
        }
        self.failed.insert(started);
        false
    }
}

/// Unit interval graph sandwich.
///
/// Same scheme as [`interval_sandwich`] with intervals ending in the order
/// they start (a proper representation), so the state also records the
/// queue of running intervals.
pub fn unit_interval_sandwich(n: usize, must: &[u64], forbid: &[u64]) -> Option<Graph> {
    let mut s = UnitSearch { n, must, forbid, failed: HashSet::new(), opens: Vec::new() };
    if !s.run(0, Vec::new()) {
        return None;
    }
    let rep = replay_events(n, must, &s.opens, true);
    Some(rep.graph())
}

struct UnitSearch<'a> {
    n: usize,
    must: &'a [u64],
    forbid: &'a [u64],
    failed: HashSet<(u64, Vec<u8>)>,
    opens: Vec<usize>,
}

impl UnitSearch<'_> {
    fn run(&mut self, started: u64, queue: Vec<u8>) -> bool {
        if started == full(self.n) {
            return true;
        }
        let key = (started, queue);
        if self.failed.contains(&key) {
            return false;
        }
        let (started, queue) = key;
        let running = queue.iter().fold(0u64, |m, &u| m | bit(u as usize));
        for v in Bits(full(self.n) & !started) {
            if self.forbid[v] & running != 0 {
                continue;
            }
            let now = started | bit(v);
            let mut next = queue.clone();
            next.push(v as u8);
            let front_done = next
                .iter()
                .take_while(|&&u| self.must[u as usize] & !now == 0)
                .count();
            next.drain(..front_done);
            self.opens.push(v);
            if self.run(now, next) {
                return true;
            }
            self.opens.pop();
        }
        self.failed.insert((started, queue));
        false
    }
}

/// Turns a start order into integer intervals, closing every interval as
/// early as the rules allow (FIFO when `fifo`).
fn replay_events(n: usize, must: &[u64], opens: &[usize], fifo: bool) -> IntervalRep {
    let mut iv = vec![(0i64, 0i64); n];
    let mut t = 0i64;
    let mut started = 0u64;
    let mut running: Vec<usize> = Vec::new();
    for &v in opens {
        t += 1;
        iv[v].0 = t;
        started |= bit(v);
        running.push(v);
        if fifo {
            while let Some(&u) = running.first() {
                if must[u] & !started != 0 {
                    break;
                }
                t += 1;
                iv[u].1 = t;
                running.remove(0);
            }
        } else {
            let (done, keep): (Vec<usize>, Vec<usize>) =
                running.iter().partition(|&&u| must[u] & !started == 0);
            for u in done {
                t += 1;
                iv[u].1 = t;
            }
            running = keep;
        }
    }
    IntervalRep::new(iv).expect("replayed intervals are well formed")
}

/// Required rows for a target graph: its own adjacency.
pub(crate) fn rows_of(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v)).collect()
}

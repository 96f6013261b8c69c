use crate::bitset::bit;
use crate::error::{Error, Result};
use crate::posets::poset::{least_topological_order, LinearExtension, Poset, Realizer};
use crate::solvers::{Clock, SearchConfig};

/// Critical pairs `(x, y)`: `x` and `y` incomparable, everything below `x`
/// is below `y` and everything above `y` is above `x`. A family of linear
/// extensions realizes the poset iff each critical pair is reversed
/// (`y` before `x`) in some member.
pub fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.n();
    let below: Vec<u64> = (0..n).map(|x| p.below(x)).collect();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y
                && !p.comparable(x, y)
                && below[x] & !below[y] == 0
                && p.above(y) & !p.above(x) == 0
            {
                out.push((x, y));
            }
        }
    }
    out
}

/// Exact dimension with a canonical minimum realizer.
///
/// Iterative deepening on `k`. For each `k` the critical pairs are taken in
/// lexicographic order; a pair already reversed by some extension's forced
/// order is skipped, otherwise the reversal `y < x` is added to one of the
/// `k` orders (lowest index first, new orders opened in index order). Each
/// order is finally linearized by its least topological sort.
///
/// The empty poset has dimension 1 by convention.
pub fn poset_dimension(p: &Poset, cfg: &SearchConfig) -> Result<(usize, Realizer)> {
    cfg.check_size(p.n())?;
    let pairs = critical_pairs(p);
    let base: Vec<u64> = (0..p.n()).map(|x| p.above(x)).collect();
    if pairs.is_empty() {
        let ext = least_topological_order(&base).expect("poset is acyclic");
        return Ok((1, Realizer(vec![LinearExtension(ext)])));
    }
    let mut clock = cfg.clock();
    for k in 2..=p.n() {
        let mut search = Search { base: &base, pairs: &pairs, k, clock: &mut clock };
        let mut orders = Vec::with_capacity(k);
        match search.run(0, &mut orders) {
            Some(found) => {
                let exts = found
                    .iter()
                    .map(|o| LinearExtension(least_topological_order(o).expect("acyclic order")))
                    .collect();
                return Ok((k, Realizer(exts)));
            }
            None if clock.expired() => {
                return Err(Error::Timeout { best_upper_bound: Some(greedy_upper_bound(p, &pairs)) });
            }
            None => {}
        }
    }
    Err(Error::Internal("no realizer found up to the poset size".into()))
}

/// Number of orders used by first-fit assignment of critical-pair reversals.
pub fn greedy_upper_bound(p: &Poset, pairs: &[(usize, usize)]) -> usize {
    let base: Vec<u64> = (0..p.n()).map(|x| p.above(x)).collect();
    let mut orders: Vec<Vec<u64>> = Vec::new();
    for &(x, y) in pairs {
        if orders.iter().any(|o| o[y] & bit(x) != 0) {
            continue;
        }
        match orders.iter_mut().find(|o| o[x] & bit(y) == 0) {
            Some(o) => add_relation(o, y, x),
            None => {
                let mut o = base.clone();
                add_relation(&mut o, y, x);
                orders.push(o);
            }
        }
    }
    orders.len().max(1)
}

/// Adds `a < b` to a transitively closed strict order.
fn add_relation(order: &mut [u64], a: usize, b: usize) {
    let up = bit(b) | order[b];
    for (u, row) in order.iter_mut().enumerate() {
        if u == a || *row & bit(a) != 0 {
            *row |= up;
        }
    }
}

struct Search<'a> {
    base: &'a [u64],
    pairs: &'a [(usize, usize)],
    k: usize,
    clock: &'a mut Clock,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, orders: &mut Vec<Vec<u64>>) -> Option<Vec<Vec<u64>>> {
        if self.clock.expired() {
            return None;
        }
        let Some(&(x, y)) = self.pairs.get(idx) else {
            let mut out = orders.clone();
            while out.len() < self.k {
                out.push(self.base.to_vec());
            }
            return Some(out);
        };
        if orders.iter().any(|o| o[y] & bit(x) != 0) {
            return self.run(idx + 1, orders);
        }
        for c in 0..orders.len() {
            if orders[c][x] & bit(y) != 0 {
                continue;
            }
            let saved = orders[c].clone();
            add_relation(&mut orders[c], y, x);
            if let Some(found) = self.run(idx + 1, orders) {
                return Some(found);
            }
            orders[c] = saved;
        }
        if orders.len() < self.k {
            let mut o = self.base.to_vec();
            add_relation(&mut o, y, x);
            orders.push(o);
            if let Some(found) = self.run(idx + 1, orders) {
                return Some(found);
            }
            orders.pop();
        }
        None
    }
}

/// The standard example `S_m`: elements `a_i = i`, `b_j = m + j`, with
/// `a_i < b_j` iff `i != j`. Its dimension is `m`.
pub fn standard_example(m: usize) -> Result<Poset> {
    let mut above = vec![0u64; 2 * m];
    for (i, row) in above.iter_mut().take(m).enumerate() {
        for j in (0..m).filter(|&j| j != i) {
            *row |= bit(m + j);
        }
    }
    Poset::from_strict_rows(above)
}

use crate::bitset::{bit, full, Bits};
use crate::error::{invalid, Error, Result};

/// Largest ground set a [`Poset`] can hold.
pub const MAX_ELEMENTS: usize = 64;

/// A finite partial order on `0..n`.
///
/// `above[x]` holds every `y` with `x < y` (strict); the reflexive part is
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    above: Vec<u64>,
}

impl Poset {
    pub fn antichain(n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return invalid(format!("poset has {n} elements, at most {MAX_ELEMENTS} supported"));
        }
        Ok(Poset { n, above: vec![0; n] })
    }

    pub fn chain(n: usize) -> Result<Self> {
        let mut p = Poset::antichain(n)?;
        for x in 0..n {
            p.above[x] = full(n) & !full(x + 1);
        }
        Ok(p)
    }

    /// Builds a poset from strict upper sets, checking transitivity and antisymmetry.
    pub fn from_strict_rows(above: Vec<u64>) -> Result<Self> {
        let n = above.len();
        let p = Poset { n, above };
        if n > MAX_ELEMENTS {
            return invalid("too many elements");
        }
        for x in 0..n {
            if p.above[x] & !full(n) != 0 || p.above[x] & bit(x) != 0 {
                return invalid(format!("row {x} is not a strict upper set"));
            }
            for y in Bits(p.above[x]) {
                if p.above[y] & bit(x) != 0 {
                    return invalid(format!("{x} and {y} are mutually below each other"));
                }
                if p.above[y] & !p.above[x] != 0 {
                    return invalid(format!("relation is not transitive through {x} < {y}"));
                }
            }
        }
        Ok(p)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Strict upper set of `x`.
    #[inline]
    pub fn above(&self, x: usize) -> u64 {
        self.above[x]
    }

    /// Strict lower set of `x`.
    pub fn below(&self, x: usize) -> u64 {
        (0..self.n).filter(|&y| self.above[y] & bit(x) != 0).fold(0, |m, y| m | bit(y))
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x] & bit(y) != 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Unordered incomparable pairs `(x, y)`, `x < y` as integers.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.comparable(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        self.incomparable_pairs().is_empty()
    }

    /// Strict relation pairs `(x, y)` with `x < y` in the order.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| Bits(self.above[x]).map(move |y| (x, y)))
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .filter(|&(x, y)| Bits(self.above[x]).all(|z| !self.lt(z, y)))
            .collect()
    }

    /// Sub-poset on `elements`, element `i` of the result being `elements[i]`.
    pub fn restrict(&self, elements: &[usize]) -> Result<Poset> {
        if elements.iter().any(|&x| x >= self.n) {
            return invalid("element out of range");
        }
        let k = elements.len();
        let mut above = vec![0u64; k];
        for i in 0..k {
            for j in 0..k {
                if self.lt(elements[i], elements[j]) {
                    above[i] |= bit(j);
                }
            }
        }
        Poset::from_strict_rows(above)
    }

    /// Relabels elements: `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Poset> {
        if perm.len() != self.n {
            return invalid("permutation length does not match poset size");
        }
        let mut above = vec![0u64; self.n];
        for (x, y) in self.relations() {
            above[perm[x]] |= bit(perm[y]);
        }
        Poset::from_strict_rows(above)
    }
}

/// Reflexive-transitive closure of the strict pairs `u < v`.
///
/// A directed cycle in the input is reported with the elements along it.
pub fn poset_from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
    if n > MAX_ELEMENTS {
        return invalid(format!("poset has {n} elements, at most {MAX_ELEMENTS} supported"));
    }
    let mut succ = vec![0u64; n];
    for &(u, v) in pairs {
        if u >= n || v >= n {
            return invalid(format!("pair ({u}, {v}) out of range for n = {n}"));
        }
        succ[u] |= bit(v);
    }
    if let Some(cycle) = find_cycle(&succ) {
        let names: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
        return Err(Error::InvalidInput(format!("relation has a cycle: {}", names.join(" -> "))));
    }
    let mut above = succ;
    // Warshall over bit rows
    for k in 0..n {
        for x in 0..n {
            if above[x] & bit(k) != 0 {
                above[x] |= above[k];
            }
        }
    }
    Ok(Poset { n, above })
}

/// A directed cycle `x0 -> x1 -> ... -> x0` in the successor rows, if any.
fn find_cycle(succ: &[u64]) -> Option<Vec<usize>> {
    let n = succ.len();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(v: usize, succ: &[u64], state: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        stack.push(v);
        for w in Bits(succ[v]) {
            if state[w] == 1 {
                let start = stack.iter().position(|&x| x == w).expect("on stack");
                let mut cyc = stack[start..].to_vec();
                cyc.push(w);
                return Some(cyc);
            }
            if state[w] == 0 {
                if let Some(c) = dfs(w, succ, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[v] = 2;
        None
    }
    (0..n).find_map(|v| if state[v] == 0 { dfs(v, succ, &mut state, &mut stack) } else { None })
}

/// A total order on `0..n`, listed from least to greatest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension(pub Vec<usize>);

impl LinearExtension {
    /// `pos[x]` is the index of `x` in the order, or `None` if this is not a permutation.
    pub fn positions(&self) -> Option<Vec<usize>> {
        let n = self.0.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in self.0.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return None;
            }
            pos[x] = i;
        }
        Some(pos)
    }

    pub fn extends(&self, p: &Poset) -> bool {
        self.0.len() == p.n()
            && self
                .positions()
                .is_some_and(|pos| p.relations().all(|(x, y)| pos[x] < pos[y]))
    }
}

/// A family of linear extensions meant to realize a poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Realizer(pub Vec<LinearExtension>);

impl Realizer {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Whether every member extends `p` and every incomparable pair appears in
/// both orders across the members. An empty family realizes nothing.
pub fn is_realizer(p: &Poset, r: &Realizer) -> bool {
    if r.is_empty() || !r.0.iter().all(|l| l.extends(p)) {
        return false;
    }
    let positions: Vec<Vec<usize>> = r.0.iter().filter_map(|l| l.positions()).collect();
    p.incomparable_pairs().into_iter().all(|(x, y)| {
        positions.iter().any(|pos| pos[x] < pos[y]) && positions.iter().any(|pos| pos[y] < pos[x])
    })
}

/// Lexicographically least topological order of a strict relation given by
/// upper sets; `None` if the relation has a cycle.
pub(crate) fn least_topological_order(above: &[u64]) -> Option<Vec<usize>> {
    let n = above.len();
    let mut indeg = vec![0usize; n];
    for &row in above {
        for y in Bits(row) {
            indeg[y] += 1;
        }
    }
    let mut done = 0u64;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let x = (0..n).find(|&x| done & bit(x) == 0 && indeg[x] == 0)?;
        done |= bit(x);
        out.push(x);
        for y in Bits(above[x]) {
            indeg[y] -= 1;
        }
    }
    Some(out)
}

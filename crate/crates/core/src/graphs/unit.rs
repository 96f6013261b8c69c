use num_rational::Ratio;

use crate::bitset::{from_slice, Bits};
use crate::error::{invalid, Error, Result};
use crate::graphs::interval::{clique_path, clique_spans};
use crate::graphs::Graph;

/// Unit intervals `[a(v), a(v) + 1]` given by their rational left endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitIntervalRep {
    pub left: Vec<Ratio<i64>>,
}

impl UnitIntervalRep {
    pub fn graph(&self) -> Graph {
        let n = self.left.len();
        let one = Ratio::from_integer(1);
        let mut g = Graph::new(n).expect("unit representation within capacity");
        for u in 0..n {
            for v in u + 1..n {
                let d = self.left[u] - self.left[v];
                if d <= one && -d <= one {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn realizes(&self, g: &Graph) -> bool {
        self.left.len() == g.n() && self.graph() == *g
    }
}

/// Recognizes unit interval graphs.
///
/// Starting from a clique path, a vertex whose clique range strictly contains
/// another's on both sides would force an induced claw, so such graphs are
/// rejected. Otherwise vertices sorted by clique range form a proper order and
/// the unit positions are the solution of a system of difference constraints
/// with integer unit length `L`; the returned endpoints are divided by `L`.
pub fn recognize_unit_interval(g: &Graph) -> Result<Option<UnitIntervalRep>> {
    let n = g.n();
    if n == 0 {
        return invalid("graph has no vertices");
    }
    let Some(path) = clique_path(g) else {
        return Ok(None);
    };
    let spans = clique_spans(n, &path);
    for u in 0..n {
        for v in 0..n {
            if spans[v].0 < spans[u].0 && spans[u].1 < spans[v].1 {
                return Ok(None);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (spans[v], v));

    for unit in 1..=(4 * n as i64 + 4) {
        if let Some(x) = solve_positions(g, &order, unit) {
            let min = x.iter().copied().min().unwrap_or(0);
            let mut left = vec![Ratio::from_integer(0); n];
            for (pos, &v) in order.iter().enumerate() {
                left[v] = Ratio::new(x[pos] - min, unit);
            }
            let rep = UnitIntervalRep { left };
            debug_assert!(rep.realizes(g));
            return Ok(Some(rep));
        }
    }
    Err(Error::Internal("no integer unit length found for a proper ordering".into()))
}

pub fn is_unit_interval(g: &Graph) -> bool {
    matches!(recognize_unit_interval(g), Ok(Some(_)))
}

/// Bellman-Ford on the difference constraints for a fixed vertex order.
fn solve_positions(g: &Graph, order: &[usize], unit: i64) -> Option<Vec<i64>> {
    let n = order.len();
    // (from, to, w) encodes x[to] - x[from] <= w
    let mut cons: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            cons.push((i + 1, i, 0));
        }
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                cons.push((i, j, unit));
            } else {
                cons.push((j, i, -(unit + 1)));
            }
        }
    }
    let mut dist = vec![0i64; n];
    for _ in 0..=n {
        let mut changed = false;
        for &(a, b, w) in &cons {
            if dist[a] + w < dist[b] {
                dist[b] = dist[a] + w;
                changed = true;
            }
        }
        if !changed {
            return Some(dist);
        }
    }
    None
}

/// First induced claw `K1,3` as `[center, leaf, leaf, leaf]`.
pub fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.n() {
        let nb: Vec<usize> = Bits(g.neighbors(c)).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                for &d in nb.iter().skip(j + 1) {
                    if g.is_independent(from_slice(&[a, b, d])) {
                        return Some([c, a, b, d]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::graph::{path, star};

    #[test]
    fn paths_are_unit_interval() {
        for n in 1..8 {
            let g = path(n);
            let rep = recognize_unit_interval(&g).unwrap().unwrap();
            assert!(rep.realizes(&g));
        }
    }

    #[test]
    fn claw_is_not_unit_interval() {
        assert_eq!(recognize_unit_interval(&star(3)).unwrap(), None);
        assert_eq!(find_claw(&star(3)), Some([0, 1, 2, 3]));
    }

    #[test]
    fn complete_graph_all_zero() {
        let rep = recognize_unit_interval(&Graph::complete(5).unwrap()).unwrap().unwrap();
        assert!(rep.left.iter().all(|a| *a == Ratio::from_integer(0)));
    }

    #[test]
    fn spec_style_path_rep_is_valid() {
        let rep = UnitIntervalRep {
            left: (0..5).map(|i| Ratio::new(9 * i, 10)).collect(),
        };
        assert_eq!(rep.graph(), path(5));
    }
}

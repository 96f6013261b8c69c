use crate::bitset::{bit, from_slice, Bits};
use crate::error::{invalid, Result};
use crate::graphs::Graph;

/// Induced four-vertex subgraphs that a threshold graph cannot contain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdObstructionKind {
    TwoK2,
    C4,
    P4,
}

/// `vertices` lists the obstruction in path / cycle order; for `2K2` the two
/// edges are `vertices[0..2]` and `vertices[2..4]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdObstruction {
    pub kind: ThresholdObstructionKind,
    pub vertices: Vec<usize>,
}

/// Returns a creation order witnessing that `g` is threshold, or `None`.
///
/// The order lists vertices in removal order: each one is isolated or
/// dominating in the graph induced by itself and the vertices after it.
/// Ties pick the smallest vertex.
pub fn recognize_threshold(g: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() == 0 {
        return invalid("graph has no vertices");
    }
    Ok(elimination_order(g, g.vertex_mask()))
}

pub fn is_threshold(g: &Graph) -> bool {
    g.n() > 0 && elimination_order(g, g.vertex_mask()).is_some()
}

/// Elimination on the subgraph induced by `alive`.
pub(crate) fn elimination_order(g: &Graph, mut alive: u64) -> Option<Vec<usize>> {
    let mut order = Vec::with_capacity(alive.count_ones() as usize);
    while alive != 0 {
        let v = Bits(alive).find(|&v| {
            let nb = g.neighbors(v) & alive;
            nb == 0 || nb == alive & !bit(v)
        })?;
        order.push(v);
        alive &= !bit(v);
    }
    Some(order)
}

/// Lexicographically first induced `2K2`, `C4` or `P4`.
pub fn find_threshold_obstruction(g: &Graph) -> Option<ThresholdObstruction> {
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
    None
}

fn classify_four(g: &Graph, vs: [usize; 4]) -> Option<ThresholdObstruction> {
    let mask = from_slice(&vs);
    let deg = |v: usize| (g.neighbors(v) & mask).count_ones();
    let mut degs: Vec<u32> = vs.iter().map(|&v| deg(v)).collect();
    degs.sort_unstable();
    match degs.as_slice() {
        [1, 1, 1, 1] => {
            let a = vs[0];
            let b = Bits(g.neighbors(a) & mask).next()?;
            let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != a && v != b).collect();
            Some(ThresholdObstruction {
                kind: ThresholdObstructionKind::TwoK2,
                vertices: vec![a, b, rest[0], rest[1]],
            })
        }
        [2, 2, 2, 2] => crate::graphs::split::induced_cycle(g, &vs).map(|cyc| ThresholdObstruction {
            kind: ThresholdObstructionKind::C4,
            vertices: cyc,
        }),
        [1, 1, 2, 2] => {
            // three edges on four vertices with this degree sequence form a path
            let start = vs.iter().copied().find(|&v| deg(v) == 1)?;
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while path.len() < 4 {
                let next = Bits(g.neighbors(cur) & mask).find(|&w| w != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            Some(ThresholdObstruction { kind: ThresholdObstructionKind::P4, vertices: path })
        }
        _ => None,
    }
}

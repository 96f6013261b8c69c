use crate::bitset::{bit, to_vec};
use crate::error::Result;
use crate::graphs::{Graph, SplitPartition};
use crate::posets::poset::Poset;

/// The inclusion order on the distinct neighborhoods of independent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPosetResult {
    pub poset: Poset,
    /// Neighborhood (a set of clique vertices, as a mask) of each element.
    pub element_of: Vec<u64>,
    /// Independent vertices sharing each element's neighborhood, ascending.
    pub reps: Vec<Vec<usize>>,
    /// Set when the independent side is empty and the poset is empty.
    pub empty_warning: bool,
}

impl CharPosetResult {
    /// Neighborhood of element `x` as a sorted vertex list.
    pub fn neighborhood(&self, x: usize) -> Vec<usize> {
        to_vec(self.element_of[x])
    }

    /// Element whose neighborhood is `mask`, if any.
    pub fn element_with(&self, mask: u64) -> Option<usize> {
        self.element_of.iter().position(|&m| m == mask)
    }
}

/// Characteristic poset of a split graph under the given partition.
///
/// Elements are numbered in order of their first representative.
pub fn characteristic_poset(g: &Graph, part: &SplitPartition) -> Result<CharPosetResult> {
    part.validate(g)?;
    let mut element_of: Vec<u64> = Vec::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut indep = part.independent.clone();
    indep.sort_unstable();
    for u in indep {
        let nb = g.neighbors(u);
        match element_of.iter().position(|&m| m == nb) {
            Some(i) => reps[i].push(u),
            None => {
                element_of.push(nb);
                reps.push(vec![u]);
            }
        }
    }
    let m = element_of.len();
    let mut above = vec![0u64; m];
    for x in 0..m {
        for y in 0..m {
            if x != y && element_of[x] & !element_of[y] == 0 {
                above[x] |= bit(y);
            }
        }
    }
    let poset = Poset::from_strict_rows(above)?;
    Ok(CharPosetResult { poset, element_of, reps, empty_warning: m == 0 })
}

//! Exact desk-scale oracles for boxicity, cubicity, threshold dimension and
//! poset dimension, together with the constructive reductions that relate
//! them on split graphs.

pub mod bitset;
pub mod error;
pub mod graphs;
pub mod io;
pub mod posets;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::{Graph, IntervalRep, SplitPartition, UnitIntervalRep};
pub use posets::{LinearExtension, Poset, Realizer};
pub use solvers::{FactorKind, IntersectionRep, SearchConfig, ThresholdCover};

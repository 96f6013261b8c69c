//! Exact, witness-producing oracles at desk scale.

mod config;
pub mod sandwich;
mod search;

pub use config::{SearchConfig, TIMEOUT_ENV};
pub(crate) use config::Clock;
pub use search::{
    boxicity, cubicity, threshold_dimension, threshold_intersection_number, FactorKind,
    IntersectionRep, ThresholdCover,
};

//! Posets, linear extensions and realizers, the characteristic poset of a
//! split graph, and an exact dimension oracle.

pub mod charposet;
pub mod dimension;
pub mod poset;

pub use charposet::{characteristic_poset, CharPosetResult};
pub use dimension::{critical_pairs, poset_dimension, standard_example};
pub use poset::{is_realizer, poset_from_relation, LinearExtension, Poset, Realizer, MAX_ELEMENTS};

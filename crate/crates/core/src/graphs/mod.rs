//! Graph type, set operations, and recognizers for split, threshold,
//! interval and unit interval graphs.

pub mod graph;
pub mod interval;
pub mod split;
pub mod threshold;
pub mod unit;

pub use graph::{cycle, intersect_graphs, path, star, union_edges, Graph, MAX_VERTICES};
pub use interval::{
    is_interval, normalize_interval_rep, perfect_elimination_order, recognize_interval, IntervalRep,
};
pub use split::{
    find_split_obstruction, is_complete_split_graph, is_split, recognize_split, SplitObstruction,
    SplitObstructionKind, SplitPartition, SplitVerdict,
};
pub use threshold::{
    find_threshold_obstruction, is_threshold, recognize_threshold, ThresholdObstruction,
    ThresholdObstructionKind,
};
pub use unit::{find_claw, is_unit_interval, recognize_unit_interval, UnitIntervalRep};

/// `complement(g)`; provided as a free function alongside the other set operations.
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Subgraph of `g` induced by `vertices`, relabeled in the given order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> crate::Result<Graph> {
    g.induced_subgraph(vertices)
}

//! Graph substrates: min s-t cuts, reachability, edge-disjoint triple packings.

mod flow;
mod packing;
mod reach;

pub use flow::{min_st_cut, FlowNetwork, MinCut};
pub use packing::{arcs_of, greedy_triple_packing, Triple, TriplePacking};
pub use reach::reachability_sets;

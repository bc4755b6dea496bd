//! Lower and upper bounds on constrained preordering optima.

mod boundary;
mod induced;
mod local_search;
mod packing;
mod tractable;

pub use boundary::boundary_bound;
pub use induced::{arc_max, induced_value};
pub use local_search::{
    greedy_fixation, improve_by_insertion, local_search_lower_bound, LowerBound,
};
pub use packing::{relaxed_triple_max, triple_packing_upper_bound, PackingTable};
pub use tractable::{exact_bounds_tractable, plus_solution, TractableBounds};

/// How the bounds of a subset fixation are produced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum BoundMethod {
    /// `lb` from the closure of the constraint, `ub` from per-arc maxima.
    Simple,
    /// Local search for `lb`; ive/ivi plus a triple packing for `ub`.
    #[default]
    Heuristic,
    /// Exact values when the positive-part solution is feasible, else heuristic.
    Tractable,
}

impl BoundMethod {
    pub fn name(self) -> &'static str {
        match self {
            BoundMethod::Simple => "simple",
            BoundMethod::Heuristic => "heuristic",
            BoundMethod::Tractable => "tractable",
        }
    }
}

/// Bounds feeding the subset fixation inequality `lb - ub >= ub'`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct BoundReport {
    pub lb: f64,
    pub ub: f64,
    pub ub_prime: Option<f64>,
    pub lb_method: BoundMethod,
    pub ub_method: BoundMethod,
}

impl BoundReport {
    /// `lb - ub - ub'`, with a missing `ub'` read as 0.
    pub fn slack(&self) -> f64 {
        self.lb - self.ub - self.ub_prime.unwrap_or(0.0)
    }
}

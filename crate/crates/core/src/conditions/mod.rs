//! Partial optimality conditions and the joint fixpoint driver.
//!
//! Every condition reads a snapshot `(instance, x̂)` and returns fixations
//! that are sound jointly, in the order they must be applied. Conditions
//! whose certificates are invalidated by other fixations (join, subset and
//! weak fixations) are evaluated against the snapshot in parallel and then
//! re-verified one by one against the growing `x̂` before they are emitted.

mod commit;
mod cut;
mod fixation;
mod join;
mod pipeline;

use std::fmt;
use std::str::FromStr;

pub use cut::{directed_cut_condition, edge_cut_condition};
pub use fixation::{
    bound_conditions, subset_condition, subset_fixation_condition, SubsetOutcome, SubsetStrategy,
};
pub use join::{
    alpha_beta_swap_minimize, build_join_energy, edge_join_condition, Energy, EnergyModel,
    SwapOutcome, LABEL_REST, LABEL_U, LABEL_U_PRIME,
};
pub use pipeline::{
    run_joint, run_joint_from, ConditionStats, PipelineConfig, RunResult, RunStats,
};

use crate::error::Error;
use crate::Pair;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ConditionId {
    DirectedCut,
    EdgeCut,
    EdgeJoin,
    BoundStrong,
    BoundWeak,
    Subset,
}

impl ConditionId {
    pub const ALL: [ConditionId; 6] = [
        ConditionId::DirectedCut,
        ConditionId::EdgeCut,
        ConditionId::EdgeJoin,
        ConditionId::BoundStrong,
        ConditionId::BoundWeak,
        ConditionId::Subset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::DirectedCut => "directed-cut",
            ConditionId::EdgeCut => "edge-cut",
            ConditionId::EdgeJoin => "edge-join",
            ConditionId::BoundStrong => "bound-strong",
            ConditionId::BoundWeak => "bound-weak",
            ConditionId::Subset => "subset",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ConditionId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown condition `{s}`")))
    }
}

/// `x_pq = value` holds in some optimal solution of the constrained problem.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Fixation {
    pub pair: Pair,
    pub value: bool,
    pub condition: ConditionId,
    /// Slack by which the enabling inequality held.
    pub margin: f64,
}

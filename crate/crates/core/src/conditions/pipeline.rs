//! Joint fixpoint over the conditions, on the instance with fixed classes contracted.

use std::time::Instant;

use super::cut::{directed_cut_condition, edge_cut_condition};
use super::fixation::{bound_conditions, subset_condition, SubsetStrategy};
use super::join::edge_join_condition;
use super::{ConditionId, Fixation};
use crate::bounds::BoundMethod;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::preorder::{merge_all, ClosedPartial};

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    /// Conditions in the order they run within a round.
    pub conditions: Vec<ConditionId>,
    pub max_rounds: usize,
    /// Run every condition once instead of iterating to a fixpoint.
    pub single_pass: bool,
    pub parallel: bool,
    pub swap_sweeps: usize,
    pub edge_cut_reuse: bool,
    pub subset_strategy: SubsetStrategy,
    pub bound_method: BoundMethod,
    /// Contract classes fixed to one before each condition.
    pub merge: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            conditions: ConditionId::ALL.to_vec(),
            max_rounds: 64,
            single_pass: false,
            parallel: true,
            swap_sweeps: 20,
            edge_cut_reuse: true,
            subset_strategy: SubsetStrategy::default(),
            bound_method: BoundMethod::Heuristic,
            merge: true,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_rounds == 0 {
            return Err(Error::InvalidConfig("rounds must be at least 1".into()));
        }
        if self.swap_sweeps == 0 {
            return Err(Error::InvalidConfig(
                "swap sweeps must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditionStats {
    pub condition: ConditionId,
    pub zeros: usize,
    pub ones: usize,
    pub nanos: u128,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunStats {
    pub n: usize,
    pub pair_count: usize,
    /// `|dom x̂|` of the final partial assignment.
    pub decided: usize,
    pub rounds: usize,
    /// One entry per distinct condition, in configuration order.
    pub per_condition: Vec<ConditionStats>,
    pub total_nanos: u128,
}

impl RunStats {
    pub fn decided_percent(&self) -> f64 {
        if self.pair_count == 0 {
            100.0
        } else {
            100.0 * self.decided as f64 / self.pair_count as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub partial: ClosedPartial,
    /// Emitted fixations on original elements, in application order.
    pub fixations: Vec<Fixation>,
    pub stats: RunStats,
}

pub fn run_joint(inst: &Instance, cfg: &PipelineConfig) -> Result<RunResult> {
    run_joint_from(inst, &ClosedPartial::empty(inst.n()), cfg)
}

/// Runs the conditions starting from `start`, which must hold in some optimum.
///
/// Errors with [`Error::Soundness`] if emitted fixations contradict each other.
pub fn run_joint_from(
    inst: &Instance,
    start: &ClosedPartial,
    cfg: &PipelineConfig,
) -> Result<RunResult> {
    cfg.validate()?;
    if start.n() != inst.n() {
        return Err(Error::DimensionMismatch {
            expected: inst.n(),
            actual: start.n(),
        });
    }
    let begin = Instant::now();
    let mut xh = start.clone();
    let mut fixations = Vec::new();
    let mut per_condition: Vec<ConditionStats> = Vec::new();
    for &c in &cfg.conditions {
        if !per_condition.iter().any(|s| s.condition == c) {
            per_condition.push(ConditionStats {
                condition: c,
                zeros: 0,
                ones: 0,
                nanos: 0,
            });
        }
    }
    let limit = if cfg.single_pass { 1 } else { cfg.max_rounds };
    let mut rounds = 0;
    while rounds < limit && !xh.is_complete() {
        rounds += 1;
        let mut added = 0;
        for &cond in &cfg.conditions {
            if xh.is_complete() {
                break;
            }
            let t0 = Instant::now();
            let lifted = if cfg.merge {
                let con = merge_all(inst, &xh);
                let found = run_condition(cond, &con.instance, &con.partial, cfg)?;
                found
                    .into_iter()
                    .map(|f| Fixation {
                        pair: (con.representative(f.pair.0), con.representative(f.pair.1)),
                        ..f
                    })
                    .collect()
            } else {
                run_condition(cond, inst, &xh, cfg)?
            };
            let mut zeros = 0;
            let mut ones = 0;
            for f in lifted {
                let (p, q) = f.pair;
                if xh.is_decided(p, q) {
                    if !xh.admits(p, q, f.value) {
                        return Err(Error::Soundness(format!(
                            "{} fixes {:?} to {} against an earlier fixation",
                            f.condition, f.pair, f.value as u8
                        )));
                    }
                    continue;
                }
                xh.fix(p, q, f.value).map_err(|e| {
                    Error::Soundness(format!(
                        "{} fixation {:?} = {}: {e}",
                        f.condition, f.pair, f.value as u8
                    ))
                })?;
                if f.value {
                    ones += 1;
                } else {
                    zeros += 1;
                }
                fixations.push(f);
            }
            added += zeros + ones;
            let s = per_condition
                .iter_mut()
                .find(|s| s.condition == cond)
                .expect("every configured condition has a stats entry");
            s.zeros += zeros;
            s.ones += ones;
            s.nanos += t0.elapsed().as_nanos();
        }
        if added == 0 {
            break;
        }
    }
    let stats = RunStats {
        n: inst.n(),
        pair_count: inst.pair_count(),
        decided: xh.domain_len(),
        rounds,
        per_condition,
        total_nanos: begin.elapsed().as_nanos(),
    };
    Ok(RunResult {
        partial: xh,
        fixations,
        stats,
    })
}

fn run_condition(
    cond: ConditionId,
    inst: &Instance,
    xh: &ClosedPartial,
    cfg: &PipelineConfig,
) -> Result<Vec<Fixation>> {
    Ok(match cond {
        ConditionId::DirectedCut => directed_cut_condition(inst, xh),
        ConditionId::EdgeCut => edge_cut_condition(inst, xh, cfg.edge_cut_reuse, cfg.parallel),
        ConditionId::EdgeJoin => edge_join_condition(inst, xh, cfg.swap_sweeps, cfg.parallel),
        ConditionId::BoundStrong => bound_conditions(inst, xh, true, cfg.parallel)?,
        ConditionId::BoundWeak => bound_conditions(inst, xh, false, cfg.parallel)?,
        ConditionId::Subset => subset_condition(
            inst,
            xh,
            cfg.subset_strategy,
            cfg.bound_method,
            cfg.parallel,
        ),
    })
}

//! Fixations to 1 certified by conditional join maps `γ^{ij|1}`.

mod energy;
mod swap;

pub use energy::{build_join_energy, Energy, EnergyModel, LABEL_REST, LABEL_U, LABEL_U_PRIME};
pub use swap::{alpha_beta_swap_minimize, SwapOutcome};

use super::commit::{commit_serial, gamma_spec, join_rhs, Proposal};
use super::{ConditionId, Fixation};
use crate::exec::map_ordered;
use crate::instance::Instance;
use crate::preorder::ClosedPartial;
use crate::Pair;

/// Searches `U ∋ i`, `U' ∋ j` for each undecided `ij` with `c_ij > 0` by
/// αβ-swap on the join energy, and fixes `x_ij = 1` when the join map is true
/// to `x̂` and `c_ij⁺` covers `Σ_{P'01} c⁻ + Σ_{P'10} c⁺`.
pub fn edge_join_condition(
    inst: &Instance,
    xh: &ClosedPartial,
    max_sweeps: usize,
    parallel: bool,
) -> Vec<Fixation> {
    let tol = inst.tolerance();
    let pairs: Vec<Pair> = inst
        .pairs()
        .filter(|&(i, j)| !xh.is_decided(i, j) && inst.value(i, j) > tol)
        .collect();
    let proposals = map_ordered(&pairs, parallel, |&(i, j)| {
        join_proposal(inst, xh, i, j, max_sweeps, tol)
    });
    commit_serial(inst, xh, proposals.into_iter().flatten().collect())
}

fn join_proposal(
    inst: &Instance,
    xh: &ClosedPartial,
    i: usize,
    j: usize,
    sweeps: usize,
    tol: f64,
) -> Option<Proposal> {
    let n = inst.n();
    let model = build_join_energy(inst, xh, i, j).ok()?;
    let mut init = vec![LABEL_REST; n];
    init[i] = LABEL_U;
    init[j] = LABEL_U_PRIME;
    let out = alpha_beta_swap_minimize(&model, &init, sweeps).ok()?;
    if !out.energy.is_finite() || inst.pos(i, j) - out.energy.finite < tol {
        return None;
    }
    let u: Vec<bool> = out.labels.iter().map(|&l| l == LABEL_U).collect();
    let u_prime: Vec<bool> = out.labels.iter().map(|&l| l == LABEL_U_PRIME).collect();
    let rhs = join_rhs(inst, xh, &gamma_spec(&u, &u_prime, i, j))?;
    let margin = inst.pos(i, j) - rhs;
    (margin >= tol).then_some(Proposal::Join {
        fixation: Fixation {
            pair: (i, j),
            value: true,
            condition: ConditionId::EdgeJoin,
            margin,
        },
        u,
        u_prime,
    })
}

//! Exact constrained optima when the sign pattern of `c` is itself feasible.

use crate::error::{Error, Result};
use crate::graph::{min_st_cut, FlowNetwork};
use crate::instance::Instance;
use crate::maps::apply_dicut;
use crate::preorder::{ClosedPartial, Relation};
use crate::Pair;

/// `x⁺`: `x̂` on its domain, elsewhere 1 iff `c >= 0`; `None` unless transitive.
pub fn plus_solution(inst: &Instance, xh: &ClosedPartial) -> Option<Relation> {
    let mut x = xh.ones_relation();
    for (p, q) in inst.pairs() {
        if !xh.is_decided(p, q) && inst.value(p, q) >= 0.0 {
            x.set(p, q, true);
        }
    }
    x.is_transitive().then_some(x)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TractableBounds {
    /// `max φ_c` over `X_V[x̂]` with `x_ij = 1`, attained by `plus`.
    pub opt: f64,
    /// `max φ_c` over `X_V[x̂]` with `x_ij = 0`, attained by `cut_witness`.
    pub opt_cut: f64,
    pub plus: Relation,
    pub cut_witness: Relation,
}

/// Exact values of both constrained problems for a pair with `c_ij >= 0`,
/// or `None` if `x⁺` is infeasible.
pub fn exact_bounds_tractable(
    inst: &Instance,
    xh: &ClosedPartial,
    (i, j): Pair,
) -> Result<Option<TractableBounds>> {
    crate::preorder::check_pair(inst.n(), i, j)?;
    if xh.is_decided(i, j) {
        return Err(Error::AlreadyDecided((i, j)));
    }
    if inst.value(i, j) < 0.0 {
        return Err(Error::Precondition(format!("c_{i}{j} < 0")));
    }
    let Some(plus) = plus_solution(inst, xh) else {
        return Ok(None);
    };
    let side = min_plus_cut(inst, xh, i, j);
    let cut_witness = apply_dicut(&plus, &side);
    Ok(Some(TractableBounds {
        opt: inst.evaluate(&plus)?,
        opt_cut: inst.evaluate(&cut_witness)?,
        plus,
        cut_witness,
    }))
}

/// Source side of a minimum `ij`-cut over `c⁺` off `x̂⁻¹(0)` that crosses no arc of `x̂⁻¹(1)`.
pub(crate) fn min_plus_cut(inst: &Instance, xh: &ClosedPartial, i: usize, j: usize) -> Vec<bool> {
    let mut net = FlowNetwork::new(inst.n(), i, j).expect("distinct in-range terminals");
    for (p, q) in inst.pairs() {
        let cap = if xh.is_one(p, q) {
            f64::INFINITY
        } else if xh.is_zero(p, q) {
            continue;
        } else {
            inst.pos(p, q)
        };
        if cap > 0.0 {
            net.add_arc(p, q, cap).expect("valid capacity");
        }
    }
    min_st_cut(&net).source_side
}

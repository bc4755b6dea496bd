//! Feasible solutions by greedy arc fixation followed by greedy arc insertion.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::maps::apply_join;
use crate::preorder::{ClosedPartial, Relation};
use crate::Pair;

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBound {
    pub value: f64,
    /// A completion of the constrained partial assignment with `evaluate(witness) == value`.
    pub witness: Relation,
}

/// Best feasible solution found in `X_V[x̂]`, optionally with `x_ij = b`.
pub fn local_search_lower_bound(
    inst: &Instance,
    xh: &ClosedPartial,
    constraint: Option<(Pair, bool)>,
) -> Result<LowerBound> {
    if inst.n() != xh.n() {
        return Err(Error::DimensionMismatch {
            expected: inst.n(),
            actual: xh.n(),
        });
    }
    let constrained;
    let y = match constraint {
        Some(c) => {
            constrained = xh.with_fixed(&[c])?;
            &constrained
        }
        None => xh,
    };
    let start = greedy_fixation(inst, y);
    let witness = improve_by_insertion(inst, y, start);
    let value = inst.evaluate(&witness)?;
    Ok(LowerBound { value, witness })
}

/// Visits undecided arcs by descending `|c|` and fixes each to its preferred
/// value (1 iff `c > 0`), or to the other value if the preferred one is excluded.
pub fn greedy_fixation(inst: &Instance, y: &ClosedPartial) -> Relation {
    let mut z = y.clone();
    let mut order = z.undecided_pairs();
    order.sort_by(|a, b| {
        inst.value(b.0, b.1)
            .abs()
            .total_cmp(&inst.value(a.0, a.1).abs())
    });
    for (p, q) in order {
        if z.is_decided(p, q) {
            continue;
        }
        let want = inst.value(p, q) > 0.0;
        let v = if z.admits(p, q, want) { want } else { !want };
        z.fix(p, q, v)
            .expect("an undecided pair of a closed partial admits both values");
    }
    z.ones_relation()
}

/// Repeatedly applies the join `σ_pq` with the largest strictly positive gain
/// among those that keep `x` inside `X_V[y]`.
pub fn improve_by_insertion(inst: &Instance, y: &ClosedPartial, mut x: Relation) -> Relation {
    debug_assert!(y.contains(&x));
    let n = x.n();
    loop {
        let preds: Vec<Vec<usize>> = (0..n)
            .map(|p| (0..n).filter(|&a| x.get(a, p)).collect())
            .collect();
        let succs: Vec<Vec<usize>> = (0..n)
            .map(|q| (0..n).filter(|&b| x.get(q, b)).collect())
            .collect();
        let mut best: Option<(f64, usize, usize)> = None;
        for p in 0..n {
            for q in 0..n {
                if p == q || x.get(p, q) || y.is_zero(p, q) {
                    continue;
                }
                if let Some(gain) = join_gain(inst, y, &x, &preds[p], &succs[q]) {
                    if gain > 0.0 && best.is_none_or(|b| gain > b.0) {
                        best = Some((gain, p, q));
                    }
                }
            }
        }
        match best {
            Some((_, p, q)) => x = apply_join(&x, p, q),
            None => return x,
        }
    }
}

/// Gain of joining `pq`, or `None` if the join would set a pair that `y` fixes to 0.
fn join_gain(
    inst: &Instance,
    y: &ClosedPartial,
    x: &Relation,
    heads: &[usize],
    tails: &[usize],
) -> Option<f64> {
    let mut gain = 0.0;
    for &a in heads {
        for &b in tails {
            if a != b && !x.get(a, b) {
                if y.is_zero(a, b) {
                    return None;
                }
                gain += inst.value(a, b);
            }
        }
    }
    Some(gain)
}

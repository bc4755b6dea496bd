use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::preorder::ClosedPartial;
use crate::Pair;

/// `max_{x ∈ X_V[x̂]} c_e x_e` for a single arc.
#[inline]
pub fn arc_max(inst: &Instance, xh: &ClosedPartial, p: usize, q: usize) -> f64 {
    if xh.is_one(p, q) {
        inst.value(p, q)
    } else if xh.is_zero(p, q) {
        0.0
    } else {
        inst.pos(p, q)
    }
}

/// Max of `c_e x_e + c_f x_f` over the completions of the closed `y`.
fn pair_max(inst: &Instance, y: &ClosedPartial, e: Pair, f: Pair) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for a in [false, true] {
        for b in [false, true] {
            if y.admits_two((e, a), (f, b)) {
                let v = if a { inst.value(e.0, e.1) } else { 0.0 }
                    + if b { inst.value(f.0, f.1) } else { 0.0 };
                best = best.max(v);
            }
        }
    }
    best
}

/// Induced value of exclusion (`b = false`) or inclusion (`b = true`) of `ij`:
/// an upper bound on `Σ c_pq x_pq` over the arcs touching `i` or `j`, for every
/// completion of `x̂` with `x_ij = b`.
pub fn induced_value(inst: &Instance, xh: &ClosedPartial, (i, j): Pair, b: bool) -> Result<f64> {
    crate::preorder::check_pair(xh.n(), i, j)?;
    if xh.is_decided(i, j) {
        return Err(Error::AlreadyDecided((i, j)));
    }
    let y = xh.with_fixed(&[((i, j), b)])?;
    let mut total = arc_max(inst, xh, j, i);
    if b {
        total += inst.value(i, j);
    }
    for w in 0..xh.n() {
        if w == i || w == j {
            continue;
        }
        total += if b {
            pair_max(inst, &y, (j, w), (i, w)) + pair_max(inst, &y, (w, i), (w, j))
        } else {
            pair_max(inst, &y, (i, w), (w, j)) + arc_max(inst, xh, w, i) + arc_max(inst, xh, j, w)
        };
    }
    Ok(total)
}

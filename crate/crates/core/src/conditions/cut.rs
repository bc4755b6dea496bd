//! Fixations to 0 certified by dicut maps.

use super::commit::dedup_pairs;
use super::{ConditionId, Fixation};
use crate::bits::BitMatrix;
use crate::bounds::arc_max;
use crate::exec::map_ordered;
use crate::graph::{min_st_cut, reachability_sets, FlowNetwork};
use crate::instance::Instance;
use crate::preorder::ClosedPartial;

/// Minimum `ij`-cut over `c⁺` on arcs not fixed to 0, with arcs fixed to 1 uncuttable.
fn ij_cut(inst: &Instance, xh: &ClosedPartial, i: usize, j: usize) -> (f64, Vec<bool>) {
    let mut net = FlowNetwork::new(inst.n(), i, j).expect("distinct in-range terminals");
    for (p, q) in inst.pairs() {
        let cap = if xh.is_one(p, q) {
            f64::INFINITY
        } else {
            arc_max(inst, xh, p, q)
        };
        if cap > 0.0 {
            net.add_arc(p, q, cap).expect("valid capacity");
        }
    }
    let cut = min_st_cut(&net);
    (cut.value, cut.source_side)
}

/// For each undecided `ij` with `c_ij < 0`, fixes `x_ij = 0` if `c_ij⁻` reaches the
/// minimum `ij`-cut. With `reuse`, the cut found for one pair is also tested
/// for every other pair it separates before the next max-flow is solved.
///
/// Pairs are grouped by their first element; groups run in parallel when
/// `parallel` is set and always merge in ascending order.
pub fn edge_cut_condition(
    inst: &Instance,
    xh: &ClosedPartial,
    reuse: bool,
    parallel: bool,
) -> Vec<Fixation> {
    let n = inst.n();
    let tol = inst.tolerance();
    let candidate = |p: usize, q: usize| !xh.is_decided(p, q) && inst.value(p, q) < -tol;
    let rows: Vec<usize> = (0..n).collect();
    let per_row = map_ordered(&rows, parallel, |&i| {
        let mut found: Vec<Fixation> = Vec::new();
        let mut done = vec![false; n * n];
        for j in 0..n {
            if j == i || !candidate(i, j) || done[i * n + j] {
                continue;
            }
            let (value, side) = ij_cut(inst, xh, i, j);
            if !value.is_finite() {
                continue;
            }
            let mut test = |p: usize, q: usize| {
                let margin = inst.neg(p, q) - value;
                if margin >= tol && !done[p * n + q] {
                    done[p * n + q] = true;
                    found.push(Fixation {
                        pair: (p, q),
                        value: false,
                        condition: ConditionId::EdgeCut,
                        margin,
                    });
                }
            };
            if reuse {
                for p in (0..n).filter(|&p| side[p]) {
                    for q in (0..n).filter(|&q| !side[q]) {
                        if candidate(p, q) {
                            test(p, q);
                        }
                    }
                }
            } else {
                test(i, j);
            }
        }
        found
    });
    dedup_pairs(per_row.into_iter().flatten(), n)
}

/// Fixes to 0 every undecided pair leaving the reachability set `W_u` of some
/// `u` in the digraph of arcs that are fixed to 1 or have `c > -tol`.
pub fn directed_cut_condition(inst: &Instance, xh: &ClosedPartial) -> Vec<Fixation> {
    let n = inst.n();
    let tol = inst.tolerance();
    let mut adj = BitMatrix::new(n);
    for (p, q) in inst.pairs() {
        if !xh.is_zero(p, q) && (xh.is_one(p, q) || inst.value(p, q) > -tol) {
            adj.set(p, q);
        }
    }
    let reach = reachability_sets(&adj);
    let mut out = Vec::new();
    for u in 0..n {
        for p in reach.row_ones(u) {
            for q in 0..n {
                if !reach.get(u, q) && !xh.is_decided(p, q) {
                    out.push(Fixation {
                        pair: (p, q),
                        value: false,
                        condition: ConditionId::DirectedCut,
                        margin: inst.neg(p, q),
                    });
                }
            }
        }
    }
    dedup_pairs(out, n)
}

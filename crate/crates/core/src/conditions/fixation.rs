//! Fixations to either value from lower and upper bounds on constrained optima.

use super::commit::{commit_serial, Proposal};
use super::{ConditionId, Fixation};
use crate::bounds::{
    arc_max, boundary_bound, exact_bounds_tractable, improve_by_insertion, induced_value,
    local_search_lower_bound, plus_solution, triple_packing_upper_bound, BoundMethod, BoundReport,
    PackingTable,
};
use crate::error::{Error, Result};
use crate::exec::map_ordered;
use crate::instance::Instance;
use crate::maps::{apply_dicut, apply_join, is_true_to, members, MapKind, MapSpec, TauVariant};
use crate::preorder::{ClosedPartial, Relation};
use crate::Pair;

/// Which element subsets `U ⊇ {i, j}` the subset condition tries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubsetStrategy {
    /// `{i, j}` plus the `k` elements with the largest `|c|` mass towards `i` and `j`.
    Neighborhood { k: usize },
    /// `U = V`.
    Full,
    /// The neighborhood first, then `U = V`.
    NeighborhoodThenFull { k: usize },
}

impl Default for SubsetStrategy {
    fn default() -> Self {
        SubsetStrategy::Neighborhood { k: 4 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubsetOutcome {
    pub report: BoundReport,
    /// Lower bound witness on `U`, indexed by the members of `U` in ascending order.
    pub y: Relation,
    pub fixation: Option<Fixation>,
}

/// Subset fixation for one pair, value, subset and boundary map.
///
/// `report.ub_prime` is `None` when the boundary map is not true to `x̂`; no
/// fixation is emitted then.
pub fn subset_fixation_condition(
    inst: &Instance,
    xh: &ClosedPartial,
    ij: Pair,
    b: bool,
    u: &[bool],
    variant: TauVariant,
    method: BoundMethod,
) -> Result<SubsetOutcome> {
    let (report, y) = subset_bounds(inst, xh, ij, b, u, method)?;
    let spec = MapSpec::conditional(
        MapKind::Tau {
            variant,
            u: u.to_vec(),
            y: y.clone(),
        },
        ij,
        b,
    );
    let mut report = report;
    let mut fixation = None;
    if is_true_to(&spec, xh) {
        let ub_prime = boundary_bound(inst, xh, u, &y, variant, true)?;
        report.ub_prime = Some(ub_prime);
        let margin = report.slack();
        if margin >= inst.tolerance() {
            fixation = Some(Fixation {
                pair: ij,
                value: b,
                condition: ConditionId::Subset,
                margin,
            });
        }
    }
    Ok(SubsetOutcome {
        report,
        y,
        fixation,
    })
}

/// `lb` on the constrained optimum over `U` with `x_ij = b` (with its witness)
/// and `ub` on the one with `x_ij = 1 - b`.
fn subset_bounds(
    inst: &Instance,
    xh: &ClosedPartial,
    (i, j): Pair,
    b: bool,
    u: &[bool],
    method: BoundMethod,
) -> Result<(BoundReport, Relation)> {
    crate::preorder::check_pair(inst.n(), i, j)?;
    if u.len() != inst.n() {
        return Err(Error::DimensionMismatch {
            expected: inst.n(),
            actual: u.len(),
        });
    }
    if !u[i] || !u[j] {
        return Err(Error::Precondition("ij must lie in P_U".into()));
    }
    if xh.is_decided(i, j) {
        return Err(Error::AlreadyDecided((i, j)));
    }
    let (list, pos) = members(u);
    let sub = inst.restrict(&list);
    let xs = xh.restrict(&list);
    let local = (pos[i], pos[j]);
    let (li, lj) = local;

    let tractable = if method == BoundMethod::Tractable && sub.value(li, lj) >= 0.0 {
        exact_bounds_tractable(&sub, &xs, local)?
    } else {
        None
    };
    if let Some(t) = tractable {
        let (lb, y, ub) = if b {
            (t.opt, t.plus, t.opt_cut)
        } else {
            (t.opt_cut, t.cut_witness, t.opt)
        };
        let report = BoundReport {
            lb,
            ub,
            ub_prime: None,
            lb_method: BoundMethod::Tractable,
            ub_method: BoundMethod::Tractable,
        };
        return Ok((report, y));
    }

    let (lb, y, lb_method, ub, ub_method) = match method {
        BoundMethod::Simple => {
            let y = xs.with_fixed(&[(local, b)])?.ones_relation();
            let lb = sub.evaluate(&y)?;
            let mut ub: f64 = sub
                .pairs()
                .filter(|&e| e != local)
                .map(|(p, q)| arc_max(&sub, &xs, p, q))
                .sum();
            if !b {
                ub += sub.value(li, lj);
            }
            (lb, y, BoundMethod::Simple, ub, BoundMethod::Simple)
        }
        BoundMethod::Heuristic | BoundMethod::Tractable => {
            let found = local_search_lower_bound(&sub, &xs, Some((local, b)))?;
            let ub = induced_value(&sub, &xs, local, !b)?
                + triple_packing_upper_bound(&sub, &xs, &[li, lj]);
            (
                found.value,
                found.witness,
                BoundMethod::Heuristic,
                ub,
                BoundMethod::Heuristic,
            )
        }
    };
    let report = BoundReport {
        lb,
        ub,
        ub_prime: None,
        lb_method,
        ub_method,
    };
    Ok((report, y))
}

fn neighborhood(inst: &Instance, i: usize, j: usize, k: usize) -> Vec<bool> {
    let n = inst.n();
    let mass = |w: usize| {
        inst.value(i, w).abs()
            + inst.value(w, i).abs()
            + inst.value(j, w).abs()
            + inst.value(w, j).abs()
    };
    let mut others: Vec<usize> = (0..n).filter(|&w| w != i && w != j).collect();
    others.sort_by(|&a, &b| mass(b).total_cmp(&mass(a)).then(a.cmp(&b)));
    let mut u = vec![false; n];
    u[i] = true;
    u[j] = true;
    for &w in others.iter().take(k) {
        u[w] = true;
    }
    u
}

/// The subset condition over every undecided pair, both values and all boundary maps.
pub fn subset_condition(
    inst: &Instance,
    xh: &ClosedPartial,
    strategy: SubsetStrategy,
    method: BoundMethod,
    parallel: bool,
) -> Vec<Fixation> {
    let n = inst.n();
    let pairs = xh.undecided_pairs();
    let proposals = map_ordered(&pairs, parallel, |&(i, j)| {
        let subsets = match strategy {
            SubsetStrategy::Neighborhood { k } => vec![neighborhood(inst, i, j, k)],
            SubsetStrategy::Full => vec![vec![true; n]],
            SubsetStrategy::NeighborhoodThenFull { k } => {
                vec![neighborhood(inst, i, j, k), vec![true; n]]
            }
        };
        for u in subsets {
            for b in [true, false] {
                let Ok((report, y)) = subset_bounds(inst, xh, (i, j), b, &u, method) else {
                    continue;
                };
                let mut best: Option<(f64, TauVariant)> = None;
                for variant in TauVariant::ALL {
                    let spec = MapSpec::conditional(
                        MapKind::Tau {
                            variant,
                            u: u.clone(),
                            y: y.clone(),
                        },
                        (i, j),
                        b,
                    );
                    if !is_true_to(&spec, xh) {
                        continue;
                    }
                    let Ok(ub_prime) = boundary_bound(inst, xh, &u, &y, variant, true) else {
                        continue;
                    };
                    let margin = report.lb - report.ub - ub_prime;
                    if best.is_none_or(|(m, _)| margin > m) {
                        best = Some((margin, variant));
                    }
                }
                if let Some((margin, variant)) = best {
                    if margin >= inst.tolerance() {
                        return Some(Proposal::Subset {
                            fixation: Fixation {
                                pair: (i, j),
                                value: b,
                                condition: ConditionId::Subset,
                                margin,
                            },
                            u,
                            y,
                            variant,
                            lb: report.lb,
                            ub: report.ub,
                        });
                    }
                }
            }
        }
        None
    });
    commit_serial(inst, xh, proposals.into_iter().flatten().collect())
}

/// Shared per-snapshot data for the bound comparisons on `U = V`.
struct Snapshot<'a> {
    inst: &'a Instance,
    xh: &'a ClosedPartial,
    table: PackingTable,
    /// Best known feasible solution and its value; exact if `plus` is set.
    best: Relation,
    best_value: f64,
    plus: bool,
}

impl<'a> Snapshot<'a> {
    fn new(inst: &'a Instance, xh: &'a ClosedPartial) -> Result<Self> {
        let table = PackingTable::new(inst, xh);
        let (best, plus) = match plus_solution(inst, xh) {
            Some(x) => (x, true),
            None => (local_search_lower_bound(inst, xh, None)?.witness, false),
        };
        let best_value = inst.evaluate(&best)?;
        Ok(Self {
            inst,
            xh,
            table,
            best,
            best_value,
            plus,
        })
    }

    /// Upper bounds for `x_ij = 0` and `x_ij = 1`, exact ones when available,
    /// plus exact-solution witnesses for both values in that case.
    fn upper_bounds(&self, i: usize, j: usize) -> Result<([f64; 2], Option<[Relation; 2]>)> {
        if self.plus && self.inst.value(i, j) >= 0.0 {
            if let Some(t) = exact_bounds_tractable(self.inst, self.xh, (i, j))? {
                return Ok(([t.opt_cut, t.opt], Some([t.cut_witness, t.plus])));
            }
        }
        let rest = self.table.bound_without(i, j);
        let ub0 = induced_value(self.inst, self.xh, (i, j), false)? + rest;
        let ub1 = induced_value(self.inst, self.xh, (i, j), true)? + rest;
        Ok(([ub0, ub1], None))
    }

    /// Feasible solutions with `x_ij = b` derived from the best known solution.
    fn witnesses(&self, i: usize, j: usize, b: bool) -> Result<Vec<Relation>> {
        let y = self.xh.with_fixed(&[((i, j), b)])?;
        let x = &self.best;
        let mut starts = Vec::new();
        if x.get(i, j) == b {
            starts.push(x.clone());
        } else if b {
            starts.push(apply_join(x, i, j));
        } else {
            let n = x.n();
            let only_i: Vec<bool> = (0..n).map(|p| p == i).collect();
            let all_but_j: Vec<bool> = (0..n).map(|p| p != j).collect();
            starts.push(apply_dicut(x, &only_i));
            starts.push(apply_dicut(x, &all_but_j));
        }
        Ok(starts
            .into_iter()
            .filter(|s| y.contains(s))
            .map(|s| improve_by_insertion(self.inst, &y, s))
            .collect())
    }
}

/// Compares bounds on `U = V`. Strong: the best known objective value must
/// strictly exceed an upper bound for `x_ij = 1 - b`. Weak: a feasible value
/// with `x_ij = b` must reach that bound. Both use the tolerance as margin.
pub fn bound_conditions(
    inst: &Instance,
    xh: &ClosedPartial,
    strong: bool,
    parallel: bool,
) -> Result<Vec<Fixation>> {
    let tol = inst.tolerance();
    let snap = Snapshot::new(inst, xh)?;
    let pairs = xh.undecided_pairs();
    let condition = if strong {
        ConditionId::BoundStrong
    } else {
        ConditionId::BoundWeak
    };
    let results = map_ordered(&pairs, parallel, |&(i, j)| -> Result<Option<Found>> {
        let (ub, exact) = snap.upper_bounds(i, j)?;
        for b in [true, false] {
            let other = ub[usize::from(!b)];
            let fixation = |margin| Fixation {
                pair: (i, j),
                value: b,
                condition,
                margin,
            };
            if strong {
                let margin = snap.best_value - other;
                if margin >= tol {
                    return Ok(Some(Found::Strict(fixation(margin))));
                }
                continue;
            }
            if ub[usize::from(b)] < other + tol {
                continue;
            }
            let candidates = match &exact {
                Some(w) => vec![w[usize::from(b)].clone()],
                None => snap.witnesses(i, j, b)?,
            };
            let mut best: Option<(f64, Relation)> = None;
            for w in candidates {
                let v = inst.evaluate(&w)?;
                if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
                    best = Some((v, w));
                }
            }
            if let Some((lb, witness)) = best {
                let margin = lb - other;
                if margin >= tol {
                    return Ok(Some(Found::Weak(Proposal::Weak {
                        fixation: fixation(margin),
                        witness,
                        lb,
                        ub: other,
                    })));
                }
            }
        }
        Ok(None)
    });
    let mut strict = Vec::new();
    let mut proposals = Vec::new();
    for r in results {
        match r? {
            Some(Found::Strict(f)) => strict.push(f),
            Some(Found::Weak(p)) => proposals.push(p),
            None => {}
        }
    }
    if strong {
        // a strict fixation holds in every optimum, so those of one snapshot hold jointly
        return Ok(strict);
    }
    Ok(commit_serial(inst, xh, proposals))
}

enum Found {
    Strict(Fixation),
    Weak(Proposal),
}

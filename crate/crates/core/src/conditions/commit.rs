//! Re-verification of snapshot certificates against the current `x̂`.

use super::Fixation;
use crate::bounds::boundary_bound;
use crate::instance::Instance;
use crate::maps::{change_sets, is_true_to, MapKind, MapSpec, TauVariant};
use crate::preorder::{ClosedPartial, Relation};

/// A fixation found on a snapshot together with what is needed to re-check it.
#[derive(Clone, Debug)]
pub(crate) enum Proposal {
    Join {
        fixation: Fixation,
        u: Vec<bool>,
        u_prime: Vec<bool>,
    },
    Subset {
        fixation: Fixation,
        u: Vec<bool>,
        y: Relation,
        variant: TauVariant,
        lb: f64,
        ub: f64,
    },
    Weak {
        fixation: Fixation,
        witness: Relation,
        lb: f64,
        ub: f64,
    },
}

/// `Σ_{P01} c⁻ + Σ_{P10} c⁺` for the join map and whether it is true to `x̂`.
pub(crate) fn join_rhs(inst: &Instance, xh: &ClosedPartial, spec: &MapSpec) -> Option<f64> {
    if !is_true_to(spec, xh) {
        return None;
    }
    let sets = change_sets(spec, xh).ok()?;
    let mut rhs = 0.0;
    for (p, q) in sets.p01.ones() {
        rhs += inst.neg(p, q);
    }
    for (p, q) in sets.p10.ones() {
        rhs += inst.pos(p, q);
    }
    Some(rhs)
}

pub(crate) fn gamma_spec(u: &[bool], u_prime: &[bool], i: usize, j: usize) -> MapSpec {
    MapSpec::conditional(
        MapKind::Gamma {
            u: u.to_vec(),
            u_prime: u_prime.to_vec(),
            i,
            j,
        },
        (i, j),
        true,
    )
}

impl Proposal {
    /// The fixation with its margin recomputed on `xh`, if the certificate still holds.
    fn recheck(&self, inst: &Instance, xh: &ClosedPartial, tol: f64) -> Option<Fixation> {
        let fixation = match self {
            Proposal::Join { fixation, .. }
            | Proposal::Subset { fixation, .. }
            | Proposal::Weak { fixation, .. } => *fixation,
        };
        let (i, j) = fixation.pair;
        if xh.is_decided(i, j) {
            return None;
        }
        let margin = match self {
            Proposal::Join { u, u_prime, .. } => {
                let rhs = join_rhs(inst, xh, &gamma_spec(u, u_prime, i, j))?;
                inst.pos(i, j) - rhs
            }
            Proposal::Subset {
                u,
                y,
                variant,
                lb,
                ub,
                ..
            } => {
                let spec = MapSpec::conditional(
                    MapKind::Tau {
                        variant: *variant,
                        u: u.clone(),
                        y: y.clone(),
                    },
                    (i, j),
                    fixation.value,
                );
                if !is_true_to(&spec, xh) {
                    return None;
                }
                let ub_prime = boundary_bound(inst, xh, u, y, *variant, true).ok()?;
                lb - ub - ub_prime
            }
            Proposal::Weak {
                witness, lb, ub, ..
            } => {
                if !xh.contains(witness) {
                    return None;
                }
                lb - ub
            }
        };
        (margin >= tol).then_some(Fixation { margin, ..fixation })
    }
}

/// Applies proposals in order to a copy of `xh`, keeping those whose certificate
/// survives the fixations accepted before them.
pub(crate) fn commit_serial(
    inst: &Instance,
    xh: &ClosedPartial,
    proposals: Vec<Proposal>,
) -> Vec<Fixation> {
    let tol = inst.tolerance();
    let mut z = xh.clone();
    let mut out = Vec::new();
    for p in proposals {
        if let Some(f) = p.recheck(inst, &z, tol) {
            let (a, b) = f.pair;
            z.fix(a, b, f.value)
                .expect("a re-verified fixation is consistent with x̂");
            out.push(f);
        }
    }
    out
}

/// Drops repeated pairs, keeping the first occurrence.
pub(crate) fn dedup_pairs(
    fixations: impl IntoIterator<Item = Fixation>,
    n: usize,
) -> Vec<Fixation> {
    let mut seen = vec![false; n * n];
    fixations
        .into_iter()
        .filter(|f| !std::mem::replace(&mut seen[f.pair.0 * n + f.pair.1], true))
        .collect()
}

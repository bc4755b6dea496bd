//! Energy minimization by optimal αβ-swap moves, each one min s-t cut.

use super::energy::{Energy, EnergyModel, LABELS};
use crate::error::{Error, Result};
use crate::graph::{min_st_cut, FlowNetwork};

#[derive(Clone, Debug, PartialEq)]
pub struct SwapOutcome {
    pub labels: Vec<usize>,
    pub energy: Energy,
    /// Energy before the first sweep and after each sweep.
    pub trace: Vec<Energy>,
    pub sweeps: usize,
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Sweeps the three label pairs round-robin, accepting an optimal swap only if it
/// strictly lowers the energy; stops after a sweep without improvement or after
/// `max_sweeps` sweeps.
pub fn alpha_beta_swap_minimize(
    model: &EnergyModel,
    init: &[usize],
    max_sweeps: usize,
) -> Result<SwapOutcome> {
    let n = model.n();
    if init.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: init.len(),
        });
    }
    for (p, &l) in init.iter().enumerate() {
        if l >= LABELS {
            return Err(Error::OutOfRange {
                index: l,
                n: LABELS,
            });
        }
        if !model.unary(p, l).is_finite() {
            return Err(Error::Precondition(format!(
                "initial label of {p} is forbidden"
            )));
        }
    }
    let mut labels = init.to_vec();
    let mut energy = model.energy(&labels);
    let mut trace = vec![energy];
    let mut sweeps = 0;
    while sweeps < max_sweeps {
        sweeps += 1;
        let mut improved = false;
        for &(alpha, beta) in &PAIRS {
            let candidate = optimal_swap(model, &labels, alpha, beta);
            let e = model.energy(&candidate);
            if e.improves_on(&energy) {
                labels = candidate;
                energy = e;
                improved = true;
            }
        }
        trace.push(energy);
        if !improved {
            break;
        }
    }
    Ok(SwapOutcome {
        labels,
        energy,
        trace,
        sweeps,
    })
}

/// Best relabeling of the nodes currently labeled `alpha` or `beta` among those two labels.
fn optimal_swap(model: &EnergyModel, labels: &[usize], alpha: usize, beta: usize) -> Vec<usize> {
    let n = model.n();
    let active: Vec<usize> = (0..n)
        .filter(|&p| labels[p] == alpha || labels[p] == beta)
        .collect();
    if active.is_empty() {
        return labels.to_vec();
    }
    let m = active.len();
    let (s, t) = (m, m + 1);
    let mut net = FlowNetwork::new(m + 2, s, t).expect("two terminals");
    let fixed: Vec<usize> = (0..n)
        .filter(|&q| labels[q] != alpha && labels[q] != beta)
        .collect();
    for (a, &p) in active.iter().enumerate() {
        let mut to_beta = model.unary(p, beta);
        let mut to_alpha = model.unary(p, alpha);
        for &q in &fixed {
            to_beta +=
                model.pairwise(p, q, beta, labels[q]) + model.pairwise(q, p, labels[q], beta);
            to_alpha +=
                model.pairwise(p, q, alpha, labels[q]) + model.pairwise(q, p, labels[q], alpha);
        }
        // source side means label alpha; cutting s->p pays for p taking beta
        net.add_arc(s, a, to_beta).expect("nonnegative");
        net.add_arc(a, t, to_alpha).expect("nonnegative");
        for (b, &q) in active.iter().enumerate() {
            if a != b {
                let w = model.pairwise(p, q, alpha, beta) + model.pairwise(q, p, beta, alpha);
                net.add_arc(a, b, w).expect("nonnegative");
            }
        }
    }
    let cut = min_st_cut(&net);
    let mut out = labels.to_vec();
    for (a, &p) in active.iter().enumerate() {
        out[p] = if cut.source_side[a] { alpha } else { beta };
    }
    out
}

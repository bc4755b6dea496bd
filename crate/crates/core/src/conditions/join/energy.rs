//! Three-label energies `Σ H_pq(x_p, x_q) + Σ H_p(x_p)` with forbidden (infinite) costs.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::preorder::ClosedPartial;

pub const LABEL_U: usize = 0;
pub const LABEL_U_PRIME: usize = 1;
pub const LABEL_REST: usize = 2;
pub(crate) const LABELS: usize = 3;

/// Energy split into the number of forbidden terms and the sum of the finite ones,
/// compared lexicographically.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Energy {
    pub infinite: usize,
    pub finite: f64,
}

impl Energy {
    pub fn is_finite(&self) -> bool {
        self.infinite == 0
    }

    pub fn value(&self) -> f64 {
        if self.is_finite() {
            self.finite
        } else {
            f64::INFINITY
        }
    }

    /// Strictly lower, ignoring finite differences at rounding level.
    pub fn improves_on(&self, other: &Energy) -> bool {
        match self.infinite.cmp(&other.infinite) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                self.finite < other.finite - 1e-12 * other.finite.abs().max(1.0)
            }
        }
    }
}

/// Nonnegative unary and pairwise costs over labels `0..3`; `H_pq(l, l) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyModel {
    n: usize,
    unary: Vec<[f64; LABELS]>,
    pairwise: Vec<[[f64; LABELS]; LABELS]>,
}

impl EnergyModel {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            unary: vec![[0.0; LABELS]; n],
            pairwise: vec![[[0.0; LABELS]; LABELS]; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn unary(&self, p: usize, l: usize) -> f64 {
        self.unary[p][l]
    }

    #[inline]
    pub fn pairwise(&self, p: usize, q: usize, a: usize, b: usize) -> f64 {
        self.pairwise[p * self.n + q][a][b]
    }

    pub fn set_unary(&mut self, p: usize, l: usize, cost: f64) -> Result<()> {
        check_cost(cost)?;
        if p >= self.n || l >= LABELS {
            return Err(Error::OutOfRange {
                index: p.max(l),
                n: self.n,
            });
        }
        self.unary[p][l] = cost;
        Ok(())
    }

    pub fn set_pairwise(
        &mut self,
        p: usize,
        q: usize,
        a: usize,
        b: usize,
        cost: f64,
    ) -> Result<()> {
        check_cost(cost)?;
        crate::preorder::check_pair(self.n, p, q)?;
        if a >= LABELS || b >= LABELS {
            return Err(Error::OutOfRange {
                index: a.max(b),
                n: LABELS,
            });
        }
        if a == b && cost != 0.0 {
            return Err(Error::InvalidConfig(
                "pairwise cost on equal labels must be 0".into(),
            ));
        }
        self.pairwise[p * self.n + q][a][b] = cost;
        Ok(())
    }

    pub fn energy(&self, labels: &[usize]) -> Energy {
        let mut e = Energy {
            infinite: 0,
            finite: 0.0,
        };
        let mut add = |c: f64| {
            if c.is_finite() {
                e.finite += c;
            } else {
                e.infinite += 1;
            }
        };
        for p in 0..self.n {
            add(self.unary(p, labels[p]));
            for q in 0..self.n {
                if p != q {
                    add(self.pairwise(p, q, labels[p], labels[q]));
                }
            }
        }
        e
    }
}

fn check_cost(cost: f64) -> Result<()> {
    if cost.is_nan() || cost < 0.0 {
        return Err(Error::InvalidConfig(format!(
            "energy cost {cost} must be nonnegative"
        )));
    }
    Ok(())
}

/// The energy whose finite minimizers over labelings with `i ∈ U`, `j ∈ U'`
/// minimize `Σ_{P'01} c⁻ + Σ_{P'10} c⁺` over the join maps that are true to `x̂`.
pub fn build_join_energy(
    inst: &Instance,
    xh: &ClosedPartial,
    i: usize,
    j: usize,
) -> Result<EnergyModel> {
    let n = inst.n();
    crate::preorder::check_pair(n, i, j)?;
    if xh.is_decided(i, j) {
        return Err(Error::AlreadyDecided((i, j)));
    }
    let inf = f64::INFINITY;
    let mut m = EnergyModel::new(n);
    m.unary[i] = [0.0, inf, inf];
    m.unary[j] = [inf, 0.0, inf];
    for (p, q) in inst.pairs() {
        let cut = if xh.is_zero(p, q) {
            0.0
        } else if xh.is_one(p, q) {
            inf
        } else {
            inst.pos(p, q)
        };
        let join = if xh.is_zero(p, i) || xh.is_zero(j, q) || xh.is_one(p, q) {
            0.0
        } else if xh.is_zero(p, q) {
            inf
        } else {
            inst.neg(p, q)
        };
        let h = &mut m.pairwise[p * n + q];
        h[LABEL_U_PRIME][LABEL_U] = cut;
        h[LABEL_REST][LABEL_U] = cut;
        h[LABEL_U_PRIME][LABEL_REST] = cut;
        h[LABEL_U][LABEL_U_PRIME] = join;
    }
    Ok(m)
}

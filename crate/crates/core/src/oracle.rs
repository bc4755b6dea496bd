//! Exhaustive ground truth for instances with at most six elements.
//!
//! Preorders are enumerated by assigning arcs one at a time in a fixed element
//! order and rejecting an assignment as soon as a transitivity triple whose
//! three arcs are all assigned is violated. This does not use the closure
//! machinery of [`crate::preorder`], so it can serve as an oracle for it.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::preorder::{ClosedPartial, Decision, PartialAssignment, Relation};

pub const MAX_N: usize = 6;

/// Every maximizer of `φ_c` over a set of preorders; ties are exact.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimumSet {
    pub value: f64,
    pub optima: Vec<Relation>,
}

struct Enumerator<'a, F> {
    n: usize,
    order: Vec<(usize, usize)>,
    fixed: Option<&'a PartialAssignment>,
    assigned: Vec<bool>,
    value: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&Relation)> Enumerator<'_, F> {
    fn at(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    /// Checks every triple in which `ab` takes part and whose other two arcs are assigned.
    fn consistent(&self, a: usize, b: usize) -> bool {
        let get = |p: usize, q: usize| -> Option<bool> {
            let k = self.at(p, q);
            self.assigned[k].then(|| self.value[k])
        };
        let ab = self.value[self.at(a, b)];
        for r in 0..self.n {
            if r == a || r == b {
                continue;
            }
            // (a, b, r): ab + br - ar <= 1
            if let (Some(br), Some(ar)) = (get(b, r), get(a, r)) {
                if ab && br && !ar {
                    return false;
                }
            }
            // (r, a, b): ra + ab - rb <= 1
            if let (Some(ra), Some(rb)) = (get(r, a), get(r, b)) {
                if ra && ab && !rb {
                    return false;
                }
            }
            // (a, r, b): ar + rb - ab <= 1
            if let (Some(ar), Some(rb)) = (get(a, r), get(r, b)) {
                if ar && rb && !ab {
                    return false;
                }
            }
        }
        true
    }

    fn recurse(&mut self, depth: usize) {
        if depth == self.order.len() {
            let mut rel = Relation::empty(self.n);
            for &(a, b) in &self.order {
                if self.value[self.at(a, b)] {
                    rel.set(a, b, true);
                }
            }
            (self.visit)(&rel);
            return;
        }
        let (a, b) = self.order[depth];
        let k = self.at(a, b);
        let choices: &[bool] = match self.fixed.map(|x| x.get(a, b)) {
            Some(Decision::Zero) => &[false],
            Some(Decision::One) => &[true],
            _ => &[false, true],
        };
        for &v in choices {
            self.assigned[k] = true;
            self.value[k] = v;
            if self.consistent(a, b) {
                self.recurse(depth + 1);
            }
        }
        self.assigned[k] = false;
    }
}

fn run(n: usize, fixed: Option<&PartialAssignment>, visit: impl FnMut(&Relation)) -> Result<()> {
    if n > MAX_N {
        return Err(Error::TooLarge { n, limit: MAX_N });
    }
    let mut order = Vec::with_capacity(n * n.saturating_sub(1));
    for k in 1..n {
        for j in 0..k {
            order.push((j, k));
            order.push((k, j));
        }
    }
    let mut e = Enumerator {
        n,
        order,
        fixed,
        assigned: vec![false; n * n],
        value: vec![false; n * n],
        visit,
    };
    e.recurse(0);
    Ok(())
}

/// Calls `visit` once for every preorder on `n <= 6` elements.
pub fn for_each_preorder(n: usize, visit: impl FnMut(&Relation)) -> Result<()> {
    run(n, None, visit)
}

pub fn enumerate_preorders(n: usize) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for_each_preorder(n, |r| out.push(r.clone()))?;
    Ok(out)
}

/// Calls `visit` once for every preorder that agrees with `x` on its domain.
pub fn for_each_completion(x: &PartialAssignment, visit: impl FnMut(&Relation)) -> Result<()> {
    run(x.n(), Some(x), visit)
}

/// Maximizers of `φ_c` over the completions of `x`.
pub fn solve_exact(inst: &Instance, x: &PartialAssignment) -> Result<OptimumSet> {
    if x.n() != inst.n() {
        return Err(Error::DimensionMismatch {
            expected: inst.n(),
            actual: x.n(),
        });
    }
    let mut best = f64::NEG_INFINITY;
    let mut optima = Vec::new();
    for_each_completion(x, |rel| {
        let v = inst.evaluate(rel).expect("dimensions checked");
        if v > best {
            best = v;
            optima.clear();
        }
        if v == best {
            optima.push(rel.clone());
        }
    })?;
    if optima.is_empty() {
        let pair = x.entries().first().map(|e| e.0).unwrap_or((0, 0));
        return Err(Error::Inconsistent(pair));
    }
    Ok(OptimumSet {
        value: best,
        optima,
    })
}

/// True iff some unconstrained optimum lies in `X_V[x̂]`.
pub fn certify(inst: &Instance, xh: &ClosedPartial) -> Result<bool> {
    let opt = solve_exact(inst, &PartialAssignment::new(inst.n()))?;
    Ok(certify_against(&opt, xh))
}

/// [`certify`] against a precomputed optimum set.
pub fn certify_against(opt: &OptimumSet, xh: &ClosedPartial) -> bool {
    opt.optima.iter().any(|x| xh.contains(x))
}

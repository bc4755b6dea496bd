//! Contraction of classes whose internal pairs are all fixed to one.

use super::{ClosedPartial, Decision, PartialAssignment};
use crate::error::{Error, Result};
use crate::instance::Instance;

/// A contracted instance together with the data needed to lift results back.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub instance: Instance,
    pub partial: ClosedPartial,
    /// `Σ c_e` over the internal pairs of every merged class.
    pub offset: f64,
    /// Old element to new element.
    pub map: Vec<usize>,
    /// New element to its old constituents, ascending.
    pub members: Vec<Vec<usize>>,
}

impl Contraction {
    /// A representative old element for each new element (its smallest constituent).
    pub fn representative(&self, new: usize) -> usize {
        self.members[new][0]
    }

    /// All old pairs a contracted pair stands for.
    pub fn lift_pair(&self, p: usize, q: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.members[p].len() * self.members[q].len());
        for &a in &self.members[p] {
            for &b in &self.members[q] {
                out.push((a, b));
            }
        }
        out
    }
}

/// Equivalence classes of `x̂⁻¹(1)` (mutually one-related elements), ordered by smallest member.
pub fn equivalence_classes(xh: &ClosedPartial) -> Vec<Vec<usize>> {
    let n = xh.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for p in 0..n {
        if class_of[p] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![p];
        class_of[p] = id;
        for q in xh.ones().row_ones(p) {
            if q > p && xh.is_one(q, p) {
                class_of[q] = id;
                members.push(q);
            }
        }
        classes.push(members);
    }
    classes
}

/// Contracts the single class `u` into one element placed at the position of its smallest member.
pub fn merge_classes(inst: &Instance, xh: &ClosedPartial, u: &[usize]) -> Result<Contraction> {
    let n = inst.n();
    if xh.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: xh.n(),
        });
    }
    let mut members: Vec<usize> = u.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() < 2 {
        return Err(Error::Precondition(
            "a merged class needs at least two elements".into(),
        ));
    }
    if let Some(&p) = members.iter().find(|&&p| p >= n) {
        return Err(Error::OutOfRange { index: p, n });
    }
    for &p in &members {
        for &q in &members {
            if p != q && !xh.is_one(p, q) {
                return Err(Error::Precondition(format!(
                    "pair ({p}, {q}) inside the class is not fixed to one"
                )));
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::with_capacity(n - members.len() + 1);
    for p in 0..n {
        if p == members[0] {
            groups.push(members.clone());
        } else if members.binary_search(&p).is_err() {
            groups.push(vec![p]);
        }
    }
    Ok(contract(inst, xh, groups))
}

/// Contracts every class of size at least two at once.
pub fn merge_all(inst: &Instance, xh: &ClosedPartial) -> Contraction {
    contract(inst, xh, equivalence_classes(xh))
}

fn contract(inst: &Instance, xh: &ClosedPartial, groups: Vec<Vec<usize>>) -> Contraction {
    let n = inst.n();
    let k = groups.len();
    let mut map = vec![0; n];
    for (g, members) in groups.iter().enumerate() {
        for &p in members {
            map[p] = g;
        }
    }
    let mut offset = 0.0;
    for members in &groups {
        for &p in members {
            for &q in members {
                if p != q {
                    offset += inst.value(p, q);
                }
            }
        }
    }
    let mut values = vec![0.0; k * k];
    let mut partial = PartialAssignment::new(k);
    for a in 0..k {
        for b in 0..k {
            if a == b {
                continue;
            }
            let mut sum = 0.0;
            let (mut all_one, mut all_zero) = (true, true);
            for &p in &groups[a] {
                for &q in &groups[b] {
                    sum += inst.value(p, q);
                    match xh.get(p, q) {
                        Decision::One => all_zero = false,
                        Decision::Zero => all_one = false,
                        Decision::Undecided => {
                            all_one = false;
                            all_zero = false;
                        }
                    }
                }
            }
            values[a * k + b] = sum;
            let d = if all_one {
                Decision::One
            } else if all_zero {
                Decision::Zero
            } else {
                Decision::Undecided
            };
            partial.set(a, b, d).expect("indices in range");
        }
    }
    let partial = partial
        .close()
        .expect("contraction of a consistent partial assignment is consistent");
    Contraction {
        instance: Instance::from_raw(k, values),
        partial,
        offset,
        map,
        members: groups,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn joined(n: usize, pairs: &[(usize, usize)]) -> ClosedPartial {
        PartialAssignment::from_entries(n, pairs.iter().map(|&p| (p, true)))
            .unwrap()
            .close()
            .unwrap()
    }

    #[test]
    fn merged_values_sum_constituents() {
        let (a, b, c) = (0, 1, 2);
        let mut inst = Instance::zeros(3).unwrap();
        inst.set(a, c, 2.0).unwrap();
        inst.set(b, c, -1.0).unwrap();
        inst.set(a, b, 4.0).unwrap();
        inst.set(b, a, 4.0).unwrap();
        let xh = joined(3, &[(a, b), (b, a)]);
        let m = merge_classes(&inst, &xh, &[a, b]).unwrap();
        assert_eq!(m.instance.n(), 2);
        assert_eq!(m.map, vec![0, 0, 1]);
        assert_eq!(m.instance.value(0, 1), 1.0);
        assert_eq!(m.offset, 8.0);
    }

    #[test]
    fn precondition_checked() {
        let inst = Instance::zeros(3).unwrap();
        let xh = joined(3, &[(0, 1)]);
        assert!(matches!(
            merge_classes(&inst, &xh, &[0, 1]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            merge_classes(&inst, &xh, &[0]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classes_and_contracted_partial() {
        let xh = joined(4, &[(0, 2), (2, 0), (2, 3)]);
        assert_eq!(equivalence_classes(&xh), vec![vec![0, 2], vec![1], vec![3]]);
        let inst = Instance::zeros(4).unwrap();
        let m = merge_all(&inst, &xh);
        assert_eq!(m.members, vec![vec![0, 2], vec![1], vec![3]]);
        assert!(m.partial.is_one(0, 2));
        assert_eq!(m.partial.get(0, 1), Decision::Undecided);
        assert_eq!(m.lift_pair(0, 2), vec![(0, 3), (2, 3)]);
    }

    #[test]
    fn merge_order_is_irrelevant() {
        let inst = Instance::from_fn(5, |p, q| (p * 5 + q) as f64 - 12.0).unwrap();
        let xh = joined(5, &[(0, 3), (3, 0), (1, 4), (4, 1)]);
        let all = merge_all(&inst, &xh);
        let first = merge_classes(&inst, &xh, &[0, 3]).unwrap();
        let u = [first.map[1], first.map[4]];
        let second = merge_classes(&first.instance, &first.partial, &u).unwrap();
        assert_eq!(second.instance, all.instance);
        assert_eq!(second.partial, all.partial);
        assert_eq!(first.offset + second.offset, all.offset);
    }
}

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::Pair;

/// A 0/1 assignment on all ordered pairs of distinct elements.
///
/// The diagonal is never stored; [`Relation::get`] reports `x_pp = 1`.
/// A relation is a feasible preorder iff [`Relation::is_transitive`] holds.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    bits: BitMatrix,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Self {
            bits: BitMatrix::new(n),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut r = Self::empty(n);
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    r.bits.set(p, q);
                }
            }
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<Self> {
        let mut r = Self::empty(n);
        for (p, q) in pairs {
            check_pair(n, p, q)?;
            r.bits.set(p, q);
        }
        Ok(r)
    }

    pub(crate) fn from_bits(bits: BitMatrix) -> Self {
        debug_assert!((0..bits.dim()).all(|i| !bits.get(i, i)));
        Self { bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.bits.dim()
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> bool {
        p == q || self.bits.get(p, q)
    }

    #[inline]
    pub fn set(&mut self, p: usize, q: usize, value: bool) {
        debug_assert_ne!(p, q, "diagonal is implicit");
        self.bits.assign(p, q, value);
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    /// Successors of `p` (without `p` itself) as a word slice.
    pub fn row(&self, p: usize) -> &[u64] {
        self.bits.row(p)
    }

    /// Arcs `pq` with `x_pq = 1`, row-major.
    pub fn ones(&self) -> impl Iterator<Item = Pair> + '_ {
        self.bits.ones()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    /// The first triple `pqr` (lexicographic) violating `x_pq + x_qr - x_pr <= 1`.
    pub fn violated_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for p in 0..n {
            for q in self.bits.row_ones(p) {
                for r in self.bits.row_ones(q) {
                    if r != p && !self.bits.get(p, r) {
                        return Some((p, q, r));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        (0..n).all(|p| {
            // row(q) must lie inside row(p) + {p} for every successor q
            self.bits.row_ones(p).all(|q| {
                self.bits
                    .row(q)
                    .iter()
                    .zip(self.bits.row(p))
                    .enumerate()
                    .all(|(w, (a, b))| {
                        let mut diff = a & !b;
                        if p / 64 == w {
                            diff &= !(1u64 << (p % 64));
                        }
                        diff == 0
                    })
            })
        })
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut bits = self.bits.clone();
        bits.close_transitively();
        Relation { bits }
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Relation) -> bool {
        self.bits.is_subset_of(&other.bits)
    }
}

/// All pairs `pq` such that a directed `p -> q` path exists in `(V, pairs)`.
pub fn transitive_closure(n: usize, pairs: &[Pair]) -> Result<Vec<Pair>> {
    let rel = Relation::from_pairs(n, pairs.iter().copied())?;
    Ok(rel.transitive_closure().ones().collect())
}

pub(crate) fn check_pair(n: usize, p: usize, q: usize) -> Result<()> {
    if p >= n {
        return Err(Error::OutOfRange { index: p, n });
    }
    if q >= n {
        return Err(Error::OutOfRange { index: q, n });
    }
    if p == q {
        return Err(Error::Diagonal(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_two_chain() {
        assert_eq!(
            transitive_closure(3, &[(0, 1), (1, 2)]).unwrap(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
    }

    #[test]
    fn closure_of_empty_and_two_cycle() {
        assert!(transitive_closure(4, &[]).unwrap().is_empty());
        assert_eq!(
            transitive_closure(2, &[(0, 1), (1, 0)]).unwrap(),
            vec![(0, 1), (1, 0)]
        );
    }

    #[test]
    fn closure_rejects_bad_indices() {
        assert!(matches!(
            transitive_closure(2, &[(0, 2)]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            transitive_closure(2, &[(1, 1)]),
            Err(Error::Diagonal(1))
        ));
    }

    #[test]
    fn transitivity_check_matches_triangle_scan() {
        let r = Relation::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!r.is_transitive());
        assert_eq!(r.violated_triple(), Some((0, 1, 2)));
        let c = r.transitive_closure();
        assert!(c.is_transitive());
        assert_eq!(c.violated_triple(), None);
        let cyc = Relation::from_pairs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(cyc.is_transitive());
    }

    #[test]
    fn closure_is_idempotent_superset() {
        let r = Relation::from_pairs(5, [(0, 1), (1, 2), (3, 4), (4, 3), (2, 3)]).unwrap();
        let c = r.transitive_closure();
        assert!(r.le(&c));
        assert_eq!(c.transitive_closure(), c);
    }
}

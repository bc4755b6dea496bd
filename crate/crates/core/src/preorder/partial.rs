use crate::bits::{BitMatrix, BitRow};
use crate::error::{Error, Result};
use crate::preorder::relation::{check_pair, Relation};
use crate::Pair;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Decision {
    Zero,
    One,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::One
        } else {
            Decision::Zero
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::Zero => Some(false),
            Decision::One => Some(true),
            Decision::Undecided => None,
        }
    }
}

/// A partial map from ordered pairs to `{0, 1}`; pairs outside the domain are undecided.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialAssignment {
    ones: BitMatrix,
    zeros: BitMatrix,
}

impl PartialAssignment {
    pub fn new(n: usize) -> Self {
        Self {
            ones: BitMatrix::new(n),
            zeros: BitMatrix::new(n),
        }
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (Pair, bool)>) -> Result<Self> {
        let mut x = Self::new(n);
        for ((p, q), v) in entries {
            x.set(p, q, Decision::from_bool(v))?;
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.ones.dim()
    }

    pub fn set(&mut self, p: usize, q: usize, d: Decision) -> Result<()> {
        check_pair(self.n(), p, q)?;
        self.ones.assign(p, q, d == Decision::One);
        self.zeros.assign(p, q, d == Decision::Zero);
        Ok(())
    }

    pub fn get(&self, p: usize, q: usize) -> Decision {
        if p == q || self.ones.get(p, q) {
            Decision::One
        } else if self.zeros.get(p, q) {
            Decision::Zero
        } else {
            Decision::Undecided
        }
    }

    pub fn domain_len(&self) -> usize {
        self.ones.count_ones() + self.zeros.count_ones()
    }

    /// Decided pairs in row-major order.
    pub fn entries(&self) -> Vec<(Pair, bool)> {
        let n = self.n();
        let mut out = Vec::with_capacity(self.domain_len());
        for p in 0..n {
            for q in 0..n {
                match self.get(p, q) {
                    _ if p == q => {}
                    Decision::One => out.push(((p, q), true)),
                    Decision::Zero => out.push(((p, q), false)),
                    Decision::Undecided => {}
                }
            }
        }
        out
    }

    /// Whether the set of completions is non-empty: no zero pair lies in the
    /// transitive closure of the one pairs.
    pub fn is_consistent(&self) -> bool {
        let mut reach = self.ones.clone();
        reach.close_transitively();
        reach.is_disjoint(&self.zeros)
    }

    /// The unique maximally specific partial assignment with the same completions.
    pub fn close(&self) -> Result<ClosedPartial> {
        let mut ones = self.ones.clone();
        ones.close_transitively();
        if let Some(pair) = first_common(&ones, &self.zeros) {
            return Err(Error::Inconsistent(pair));
        }
        let ones_t = ones.transpose();
        let n = self.n();
        let mut zeros = BitMatrix::new(n);
        // (p', q') zero, p' ->* p, q ->* q'  =>  (p, q) zero
        for (zp, zq) in self.zeros.ones() {
            let mut targets = BitRow::from_words(ones_t.row(zq));
            targets.set(zq);
            zeros.or_row_with(zp, targets.words());
            for p in ones.row_ones(zp) {
                zeros.or_row_with(p, targets.words());
            }
        }
        debug_assert!((0..n).all(|i| !zeros.get(i, i)));
        Ok(ClosedPartial {
            ones,
            ones_t,
            zeros,
        })
    }
}

fn first_common(a: &BitMatrix, b: &BitMatrix) -> Option<Pair> {
    a.ones().find(|&(p, q)| b.get(p, q))
}

/// A consistent, maximally specific partial assignment.
///
/// `ones` is transitively closed, `zeros` is closed under one-paths leaving
/// its tail side and entering its head side. Every pair outside the domain
/// admits both values in some completion.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClosedPartial {
    ones: BitMatrix,
    ones_t: BitMatrix,
    zeros: BitMatrix,
}

impl ClosedPartial {
    pub fn empty(n: usize) -> Self {
        Self {
            ones: BitMatrix::new(n),
            ones_t: BitMatrix::new(n),
            zeros: BitMatrix::new(n),
        }
    }

    /// The closed partial whose domain is all of `P_V` (requires a transitive relation).
    pub fn from_relation(x: &Relation) -> Result<Self> {
        if let Some((p, q, _)) = x.violated_triple() {
            return Err(Error::Inconsistent((p, q)));
        }
        let n = x.n();
        let ones = x.bits().clone();
        let mut zeros = BitMatrix::new(n);
        for p in 0..n {
            for q in 0..n {
                if p != q && !ones.get(p, q) {
                    zeros.set(p, q);
                }
            }
        }
        Ok(Self {
            ones_t: ones.transpose(),
            ones,
            zeros,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ones.dim()
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> Decision {
        if p == q || self.ones.get(p, q) {
            Decision::One
        } else if self.zeros.get(p, q) {
            Decision::Zero
        } else {
            Decision::Undecided
        }
    }

    #[inline]
    pub fn is_one(&self, p: usize, q: usize) -> bool {
        p == q || self.ones.get(p, q)
    }

    #[inline]
    pub fn is_zero(&self, p: usize, q: usize) -> bool {
        self.zeros.get(p, q)
    }

    #[inline]
    pub fn is_decided(&self, p: usize, q: usize) -> bool {
        p == q || self.ones.get(p, q) || self.zeros.get(p, q)
    }

    /// Whether some completion has `x_pq = value`.
    #[inline]
    pub fn admits(&self, p: usize, q: usize, value: bool) -> bool {
        if value {
            !self.is_zero(p, q)
        } else {
            !self.is_one(p, q)
        }
    }

    pub fn ones(&self) -> &BitMatrix {
        &self.ones
    }

    pub fn zeros(&self) -> &BitMatrix {
        &self.zeros
    }

    /// Column view of the ones: `ones_t.row(q)` holds all `p` with `x̂_pq = 1`.
    pub fn ones_transposed(&self) -> &BitMatrix {
        &self.ones_t
    }

    pub fn domain_len(&self) -> usize {
        self.ones.count_ones() + self.zeros.count_ones()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.domain_len() == n * n.saturating_sub(1)
    }

    pub fn undecided_pairs(&self) -> Vec<Pair> {
        let n = self.n();
        let mut out = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if p != q && !self.ones.get(p, q) && !self.zeros.get(p, q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn to_partial(&self) -> PartialAssignment {
        PartialAssignment {
            ones: self.ones.clone(),
            zeros: self.zeros.clone(),
        }
    }

    /// The relation given by the one pairs (a transitive relation).
    pub fn ones_relation(&self) -> Relation {
        Relation::from_bits(self.ones.clone())
    }

    /// Whether `x` is a completion.
    pub fn contains(&self, x: &Relation) -> bool {
        self.ones.is_subset_of(x.bits()) && self.zeros.is_disjoint(x.bits())
    }

    /// Fix `x_pq = value` and restore maximal specificity incrementally.
    pub fn fix(&mut self, p: usize, q: usize, value: bool) -> Result<()> {
        check_pair(self.n(), p, q)?;
        if value {
            self.fix_one(p, q)
        } else {
            self.fix_zero(p, q)
        }
    }

    fn fix_one(&mut self, u: usize, v: usize) -> Result<()> {
        if self.zeros.get(u, v) {
            return Err(Error::Inconsistent((u, v)));
        }
        if self.ones.get(u, v) {
            return Ok(());
        }
        // tails: everything reaching u; heads: everything reachable from v
        let mut tails = BitRow::from_words(self.ones_t.row(u));
        tails.set(u);
        let mut heads = BitRow::from_words(self.ones.row(v));
        heads.set(v);

        let mut zero_acc = BitRow::new(self.n());
        for t in tails.iter() {
            zero_acc.or_with(self.zeros.row(t));
        }

        for t in tails.iter() {
            self.ones.or_row_with(t, heads.words());
            self.ones.clear(t, t);
        }
        for h in heads.iter() {
            self.ones_t.or_row_with(h, tails.words());
            self.ones_t.clear(h, h);
        }

        for h in heads.iter() {
            self.zeros.or_row_with(h, zero_acc.words());
        }
        for p in 0..self.n() {
            if self.zeros.row_intersects(p, heads.words()) {
                self.zeros.or_row_with(p, tails.words());
            }
        }
        debug_assert!(self.ones.is_disjoint(&self.zeros));
        debug_assert!((0..self.n()).all(|i| !self.zeros.get(i, i)));
        Ok(())
    }

    fn fix_zero(&mut self, u: usize, v: usize) -> Result<()> {
        if self.ones.get(u, v) {
            return Err(Error::Inconsistent((u, v)));
        }
        if self.zeros.get(u, v) {
            return Ok(());
        }
        let mut heads = BitRow::from_words(self.ones_t.row(v));
        heads.set(v);
        self.zeros.or_row_with(u, heads.words());
        for p in BitRow::from_words(self.ones.row(u)).iter() {
            self.zeros.or_row_with(p, heads.words());
        }
        debug_assert!(self.ones.is_disjoint(&self.zeros));
        Ok(())
    }

    /// Fix several pairs at once; fails without side effects if the result is inconsistent.
    pub fn with_fixed(&self, fixes: &[(Pair, bool)]) -> Result<ClosedPartial> {
        let mut out = self.clone();
        for &((p, q), v) in fixes {
            out.fix(p, q, v)?;
        }
        Ok(out)
    }

    /// Whether the given fixations are jointly consistent with `self`.
    pub fn admits_all(&self, fixes: &[(Pair, bool)]) -> bool {
        match fixes {
            [] => true,
            [((p, q), v)] => self.admits(*p, *q, *v),
            [a, b] => self.admits_two(*a, *b),
            _ => self.with_fixed(fixes).is_ok(),
        }
    }

    /// Joint consistency of two fixations without materializing the closure.
    pub fn admits_two(&self, a: (Pair, bool), b: (Pair, bool)) -> bool {
        let ((ap, aq), av) = a;
        let ((bp, bq), bv) = b;
        if !self.admits(ap, aq, av) || !self.admits(bp, bq, bv) {
            return false;
        }
        if (ap, aq) == (bp, bq) {
            return av == bv;
        }
        let r = |p: usize, q: usize| self.is_one(p, q);
        match (av, bv) {
            (false, false) => true,
            (true, false) => !(r(bp, ap) && r(aq, bq)),
            (false, true) => !(r(ap, bp) && r(bq, aq)),
            (true, true) => {
                // chains through both new arcs must avoid zero pairs
                !((r(aq, bp) && self.is_zero(ap, bq)) || (r(bq, ap) && self.is_zero(bp, aq)))
            }
        }
    }

    /// Restriction to `P_U`, reindexed in the order of `members`. The result is closed.
    pub fn restrict(&self, members: &[usize]) -> ClosedPartial {
        let k = members.len();
        let mut out = ClosedPartial::empty(k);
        for (a, &p) in members.iter().enumerate() {
            for (b, &q) in members.iter().enumerate() {
                if a == b {
                    continue;
                }
                if self.ones.get(p, q) {
                    out.ones.set(a, b);
                    out.ones_t.set(b, a);
                } else if self.zeros.get(p, q) {
                    out.zeros.set(a, b);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial(n: usize, entries: &[((usize, usize), bool)]) -> PartialAssignment {
        PartialAssignment::from_entries(n, entries.iter().copied()).unwrap()
    }

    #[test]
    fn consistency_examples() {
        assert!(!partial(3, &[((0, 1), true), ((1, 2), true), ((0, 2), false)]).is_consistent());
        assert!(PartialAssignment::new(4).is_consistent());
        assert!(partial(3, &[((0, 1), true), ((1, 2), true), ((2, 0), false)]).is_consistent());
    }

    #[test]
    fn close_reports_inconsistency() {
        let x = partial(3, &[((0, 1), true), ((1, 2), true), ((0, 2), false)]);
        assert!(matches!(x.close(), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn close_two_chains_with_cross_zero() {
        // chains a->b->c and d->e->f, cut e->b
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let x = partial(
            6,
            &[
                ((a, b), true),
                ((b, c), true),
                ((d, e), true),
                ((e, f), true),
                ((e, b), false),
            ],
        );
        let cl = x.close().unwrap();
        assert!(cl.is_one(a, c) && cl.is_one(d, f));
        for (p, q) in [(e, b), (f, a), (f, b), (e, a)] {
            assert!(cl.is_zero(p, q), "({p},{q}) should be zero");
        }
        assert_eq!(cl.zeros().count_ones(), 4);
        assert_eq!(cl.ones().count_ones(), 6);
    }

    #[test]
    fn close_is_idempotent_on_empty() {
        let cl = PartialAssignment::new(3).close().unwrap();
        assert_eq!(cl.domain_len(), 0);
        assert_eq!(cl.to_partial().close().unwrap(), cl);
    }

    #[test]
    fn incremental_fix_matches_batch_close() {
        let fixes = [
            ((0, 1), true),
            ((3, 2), false),
            ((1, 3), true),
            ((4, 0), true),
        ];
        let mut inc = ClosedPartial::empty(5);
        let mut batch = PartialAssignment::new(5);
        for &((p, q), v) in &fixes {
            inc.fix(p, q, v).unwrap();
            batch.set(p, q, Decision::from_bool(v)).unwrap();
            assert_eq!(inc, batch.close().unwrap());
        }
    }

    #[test]
    fn fix_rejects_contradiction() {
        let mut cl = partial(3, &[((0, 1), true), ((1, 2), true)])
            .close()
            .unwrap();
        assert!(cl.fix(0, 2, false).is_err());
        assert!(cl.fix(2, 0, false).is_ok());
        assert!(cl.fix(2, 1, true).is_ok());
        assert!(cl.fix(1, 0, true).is_err());
    }
}

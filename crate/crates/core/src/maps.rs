//! Self-maps on the set of preorders and the pairs they may change.
//!
//! Element subsets are membership masks of length `n`. For the boundary maps
//! `y` is a preorder on the members of `U` in ascending order.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::preorder::{ClosedPartial, Relation};
use crate::Pair;

/// Which part of the boundary of `U` a boundary map cuts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TauVariant {
    /// Cuts `δ(U, V∖U)`; pairs entering `U` follow `y`.
    Out,
    /// Cuts `δ(V∖U, U)`; pairs leaving `U` follow `y`.
    In,
    /// Cuts all of `δ(U)`.
    Both,
}

impl TauVariant {
    pub const ALL: [TauVariant; 3] = [TauVariant::Out, TauVariant::In, TauVariant::Both];
}

#[derive(Clone, PartialEq, Debug)]
pub enum MapKind {
    /// Zeroes `δ(U, V∖U)`.
    Dicut { u: Vec<bool> },
    /// Adds `ij` and everything it implies.
    Join { i: usize, j: usize },
    /// `σ_ij ∘ σ_δ(V∖U, U) ∘ σ_δ(U', V∖U')`.
    Gamma {
        u: Vec<bool>,
        u_prime: Vec<bool>,
        i: usize,
        j: usize,
    },
    /// Sets `P_U` to `y` and rewrites the boundary per `variant`.
    Tau {
        variant: TauVariant,
        u: Vec<bool>,
        y: Relation,
    },
}

/// A map, optionally wrapped so that it only acts when `x_ij != b`.
#[derive(Clone, PartialEq, Debug)]
pub struct MapSpec {
    pub kind: MapKind,
    pub condition: Option<(Pair, bool)>,
}

impl MapSpec {
    pub fn new(kind: MapKind) -> Self {
        Self {
            kind,
            condition: None,
        }
    }

    pub fn conditional(kind: MapKind, pair: Pair, b: bool) -> Self {
        Self {
            kind,
            condition: Some((pair, b)),
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let mask = |m: &Vec<bool>| {
            if m.len() == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    expected: n,
                    actual: m.len(),
                })
            }
        };
        let elem = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::OutOfRange { index: i, n })
            }
        };
        match &self.kind {
            MapKind::Dicut { u } => mask(u)?,
            MapKind::Join { i, j } => {
                crate::preorder::check_pair(n, *i, *j)?;
            }
            MapKind::Gamma { u, u_prime, i, j } => {
                mask(u)?;
                mask(u_prime)?;
                elem(*i)?;
                elem(*j)?;
                if u.iter().zip(u_prime).any(|(a, b)| *a && *b) {
                    return Err(Error::InvalidConfig("U and U' must be disjoint".into()));
                }
                if !u[*i] || !u_prime[*j] {
                    return Err(Error::InvalidConfig("need i in U and j in U'".into()));
                }
            }
            MapKind::Tau { u, y, .. } => {
                mask(u)?;
                let k = u.iter().filter(|&&b| b).count();
                if y.n() != k {
                    return Err(Error::DimensionMismatch {
                        expected: k,
                        actual: y.n(),
                    });
                }
                debug_assert!(y.is_transitive(), "y must be a preorder on U");
            }
        }
        if let Some(((p, q), _)) = self.condition {
            crate::preorder::check_pair(n, p, q)?;
        }
        Ok(())
    }
}

/// `σ_δ(U, V∖U)`: zero on pairs leaving `U`, unchanged elsewhere.
pub fn apply_dicut(x: &Relation, u: &[bool]) -> Relation {
    let mut out = x.clone();
    for (p, q) in x.ones() {
        if u[p] && !u[q] {
            out.set(p, q, false);
        }
    }
    out
}

/// `σ_ij`: `x'_pq = 1` whenever `x_pi = x_jq = 1` (diagonal counts as one).
pub fn apply_join(x: &Relation, i: usize, j: usize) -> Relation {
    let n = x.n();
    let mut out = x.clone();
    let heads: Vec<usize> = (0..n).filter(|&q| x.get(j, q)).collect();
    for p in (0..n).filter(|&p| x.get(p, i)) {
        for &q in &heads {
            if p != q {
                out.set(p, q, true);
            }
        }
    }
    out
}

pub fn apply_gamma(x: &Relation, u: &[bool], u_prime: &[bool], i: usize, j: usize) -> Relation {
    let first = apply_dicut(x, u_prime);
    let outside_u: Vec<bool> = u.iter().map(|&b| !b).collect();
    let second = apply_dicut(&first, &outside_u);
    apply_join(&second, i, j)
}

/// Members of a mask in ascending order, plus the inverse position map.
pub fn members(u: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let mut list = Vec::new();
    let mut pos = vec![usize::MAX; u.len()];
    for (p, &m) in u.iter().enumerate() {
        if m {
            pos[p] = list.len();
            list.push(p);
        }
    }
    (list, pos)
}

pub fn apply_tau(x: &Relation, variant: TauVariant, u: &[bool], y: &Relation) -> Relation {
    let n = x.n();
    let (list, pos) = members(u);
    let mut out = x.clone();
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            let v = match (u[p], u[q]) {
                (true, true) => y.get(pos[p], pos[q]),
                (false, false) => x.get(p, q),
                (true, false) => match variant {
                    TauVariant::In => list.iter().any(|&r| y.get(pos[p], pos[r]) && x.get(r, q)),
                    _ => false,
                },
                (false, true) => match variant {
                    TauVariant::Out => list.iter().any(|&r| x.get(p, r) && y.get(pos[r], pos[q])),
                    _ => false,
                },
            };
            out.set(p, q, v);
        }
    }
    out
}

pub fn apply_map(spec: &MapSpec, x: &Relation) -> Result<Relation> {
    spec.validate(x.n())?;
    if let Some(((i, j), b)) = spec.condition {
        if x.get(i, j) == b {
            return Ok(x.clone());
        }
    }
    Ok(match &spec.kind {
        MapKind::Dicut { u } => apply_dicut(x, u),
        MapKind::Join { i, j } => apply_join(x, *i, *j),
        MapKind::Gamma { u, u_prime, i, j } => apply_gamma(x, u, u_prime, *i, *j),
        MapKind::Tau { variant, u, y } => apply_tau(x, *variant, u, y),
    })
}

/// Supersets of the pairs a map may switch from 0 to 1 and from 1 to 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChangeSets {
    pub p01: BitMatrix,
    pub p10: BitMatrix,
}

impl ChangeSets {
    fn empty(n: usize) -> Self {
        Self {
            p01: BitMatrix::new(n),
            p10: BitMatrix::new(n),
        }
    }
}

/// Change sets relative to `x̂`. For the boundary maps these are the sets
/// that use `y` and only cover `δ(U)`.
pub fn change_sets(spec: &MapSpec, xh: &ClosedPartial) -> Result<ChangeSets> {
    change_sets_impl(spec, xh, true)
}

/// As [`change_sets`] but, for the boundary maps, the `y`-independent supersets.
pub fn change_sets_general(spec: &MapSpec, xh: &ClosedPartial) -> Result<ChangeSets> {
    change_sets_impl(spec, xh, false)
}

fn change_sets_impl(spec: &MapSpec, xh: &ClosedPartial, use_y: bool) -> Result<ChangeSets> {
    let n = xh.n();
    spec.validate(n)?;
    let mut cs = ChangeSets::empty(n);
    let pairs = (0..n).flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)));
    match &spec.kind {
        MapKind::Dicut { u } => {
            for (p, q) in pairs {
                if u[p] && !u[q] && !xh.is_zero(p, q) {
                    cs.p10.set(p, q);
                }
            }
        }
        MapKind::Join { i, j } => {
            for (p, q) in pairs {
                if !xh.is_zero(p, *i) && !xh.is_zero(*j, q) && !xh.is_one(p, q) {
                    cs.p01.set(p, q);
                }
            }
        }
        MapKind::Gamma { u, u_prime, i, j } => {
            let region = |p: usize| {
                if u[p] {
                    0
                } else if u_prime[p] {
                    1
                } else {
                    2
                }
            };
            for (p, q) in pairs {
                match (region(p), region(q)) {
                    (0, 1) => {
                        if !xh.is_zero(p, *i) && !xh.is_zero(*j, q) && !xh.is_one(p, q) {
                            cs.p01.set(p, q);
                        }
                    }
                    (2, 0) | (1, 0) | (1, 2) if !xh.is_zero(p, q) => cs.p10.set(p, q),
                    _ => {}
                }
            }
        }
        MapKind::Tau { variant, u, y } => {
            let (list, pos) = members(u);
            for (p, q) in pairs {
                let (entering, leaving) = (!u[p] && u[q], u[p] && !u[q]);
                if !entering && !leaving {
                    continue;
                }
                let (cut, follows) = match variant {
                    TauVariant::Out => (leaving, entering),
                    TauVariant::In => (entering, leaving),
                    TauVariant::Both => (true, false),
                };
                if cut {
                    if !xh.is_zero(p, q) {
                        cs.p10.set(p, q);
                    }
                } else if follows && !xh.is_one(p, q) {
                    let reachable = !use_y
                        || match variant {
                            TauVariant::Out => list
                                .iter()
                                .any(|&r| !xh.is_zero(p, r) && y.get(pos[r], pos[q])),
                            _ => list
                                .iter()
                                .any(|&r| y.get(pos[p], pos[r]) && !xh.is_zero(r, q)),
                        };
                    if reachable {
                        cs.p01.set(p, q);
                    }
                }
            }
        }
    }
    Ok(cs)
}

/// Sufficient check that the map sends every completion of `x̂` to a completion of `x̂`.
pub fn is_true_to(spec: &MapSpec, xh: &ClosedPartial) -> bool {
    let Ok(cs) = change_sets(spec, xh) else {
        return false;
    };
    if let MapKind::Tau { u, y, .. } = &spec.kind {
        let (list, _) = members(u);
        if !xh.restrict(&list).contains(y) {
            return false;
        }
    }
    cs.p10.is_disjoint(xh.ones()) && cs.p01.is_disjoint(xh.zeros())
}

//! Preordering instances: a value `c_pq` for every ordered pair of distinct elements.

mod ego;
mod generator;
pub(crate) mod io;

pub use ego::{ingest_ego_network, load_ego_network, parse_edge_list, EgoNetwork};
pub use generator::{draw_values, generate_synthetic, generate_truth, GeneratorConfig};
pub use io::{load_instance, read_instance, save_instance, write_instance};

use crate::error::{Error, Result};
use crate::preorder::Relation;
use crate::Pair;

/// Dense row-major value matrix over `n` elements; the diagonal is stored as 0 and never read.
#[derive(Clone, PartialEq, Debug)]
pub struct Instance {
    n: usize,
    values: Vec<f64>,
}

impl Instance {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig(
                "instance needs at least one element".into(),
            ));
        }
        Ok(Self {
            n,
            values: vec![0.0; n * n],
        })
    }

    /// Builds an instance from `f(p, q)` for every pair `p != q`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut inst = Self::zeros(n)?;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    inst.set(p, q, f(p, q))?;
                }
            }
        }
        Ok(inst)
    }

    /// Builds an instance from a full row-major `n x n` matrix; diagonal entries must be 0.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut inst = Self::zeros(n)?;
        for (p, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            for (q, &v) in row.iter().enumerate() {
                if p == q {
                    if v != 0.0 {
                        return Err(Error::Diagonal(p));
                    }
                } else {
                    inst.set(p, q, v)?;
                }
            }
        }
        Ok(inst)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|P_V| = n (n - 1)`.
    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1)
    }

    #[inline]
    pub fn value(&self, p: usize, q: usize) -> f64 {
        self.values[p * self.n + q]
    }

    /// `c⁺ = max(c, 0)`.
    #[inline]
    pub fn pos(&self, p: usize, q: usize) -> f64 {
        self.value(p, q).max(0.0)
    }

    /// `c⁻ = max(-c, 0)`.
    #[inline]
    pub fn neg(&self, p: usize, q: usize) -> f64 {
        (-self.value(p, q)).max(0.0)
    }

    pub fn set(&mut self, p: usize, q: usize, value: f64) -> Result<()> {
        crate::preorder::check_pair(self.n, p, q)?;
        if !value.is_finite() {
            return Err(Error::NonFinite((p, q)));
        }
        self.values[p * self.n + q] = value;
        Ok(())
    }

    /// All pairs `p != q` in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = Pair> {
        let n = self.n;
        (0..n).flat_map(move |p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
    }

    /// `φ_c(x) = Σ c_pq x_pq`, summed in row-major order.
    pub fn evaluate(&self, x: &Relation) -> Result<f64> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: x.n(),
            });
        }
        Ok(x.ones().map(|(p, q)| self.value(p, q)).sum())
    }

    pub fn total(&self) -> f64 {
        self.pairs().map(|(p, q)| self.value(p, q)).sum()
    }

    pub fn abs_sum(&self) -> f64 {
        self.pairs().map(|(p, q)| self.value(p, q).abs()).sum()
    }

    /// Absolute tolerance for comparing sums of values: `1e-9 · max(1, Σ|c|)`.
    pub fn tolerance(&self) -> f64 {
        1e-9 * self.abs_sum().max(1.0)
    }

    /// The instance restricted to `P_U`, reindexed in the order of `members`.
    pub fn restrict(&self, members: &[usize]) -> Instance {
        let k = members.len();
        let mut values = vec![0.0; k * k];
        for (a, &p) in members.iter().enumerate() {
            for (b, &q) in members.iter().enumerate() {
                if a != b {
                    values[a * k + b] = self.value(p, q);
                }
            }
        }
        Instance { n: k, values }
    }

    pub(crate) fn from_raw(n: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), n * n);
        Self { n, values }
    }
}

/// A five-element example over elements `i, j, k, l, m` (indices 0..5) whose
/// optimum value is 10, attained by the arcs `ij, ji, il, jl, kl, km`.
pub fn five_element_example() -> Instance {
    Instance::from_rows(&[
        vec![0.0, 2.0, -1.0, -1.0, -1.0],
        vec![2.0, 0.0, -1.0, 2.0, -1.0],
        vec![-4.0, -4.0, 0.0, 3.0, 2.0],
        vec![1.0, 1.0, -1.0, 0.0, -1.0],
        vec![-1.0, -1.0, 1.0, -2.0, 0.0],
    ])
    .expect("static instance is valid")
}

//! Synthetic instances around a planted preorder.
//!
//! Randomness comes from a `ChaCha8` stream seeded with `seed_from_u64`, which
//! is portable across platforms. Gaussian values use `rand_distr::Normal`
//! (ziggurat sampling of the standard normal, then `mean + sd * z`). Values are
//! drawn in row-major pair order after the planted preorder is complete, so a
//! fixed seed pins every bit of the output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::Instance;
use crate::error::{Error, Result};
use crate::maps::apply_join;
use crate::preorder::Relation;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    /// Target arc density of the planted preorder.
    pub p_e: f64,
    /// Difficulty: 0 separates the two value distributions, 1 merges them.
    pub alpha: f64,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.p_e) {
            return Err(Error::InvalidConfig(format!(
                "p_E = {} not in [0, 1]",
                self.p_e
            )));
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidConfig(format!(
                "alpha = {} not in [0, 1]",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Planted preorder: starting from the empty relation, join a uniformly random
/// non-arc while the arc density is below `p_e`. May overshoot `p_e`.
pub fn generate_truth<R: Rng + ?Sized>(n: usize, p_e: f64, rng: &mut R) -> Relation {
    let mut x = Relation::empty(n);
    let total = n * n.saturating_sub(1);
    loop {
        let ones = x.count_ones();
        if total == 0 || ones as f64 / total as f64 >= p_e || ones == total {
            return x;
        }
        let k = rng.random_range(0..total - ones);
        let (p, q) = nth_non_arc(&x, k);
        x = apply_join(&x, p, q);
    }
}

fn nth_non_arc(x: &Relation, mut k: usize) -> (usize, usize) {
    let n = x.n();
    for p in 0..n {
        for q in 0..n {
            if p != q && !x.get(p, q) {
                if k == 0 {
                    return (p, q);
                }
                k -= 1;
            }
        }
    }
    unreachable!("k exceeds the number of non-arcs")
}

/// Values `c_pq ~ N(±(1 - alpha), 0.1 + 0.3 alpha)`, positive mean on planted arcs.
pub fn draw_values<R: Rng + ?Sized>(truth: &Relation, alpha: f64, rng: &mut R) -> Result<Instance> {
    let n = truth.n();
    let sd = 0.1 + 0.3 * alpha;
    let on = Normal::new(1.0 - alpha, sd).map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let off = Normal::new(-1.0 + alpha, sd).map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let mut values = vec![0.0; n * n];
    for p in 0..n {
        for q in 0..n {
            if p != q {
                let dist = if truth.get(p, q) { &on } else { &off };
                values[p * n + q] = dist.sample(rng);
            }
        }
    }
    Ok(Instance::from_raw(n, values))
}

/// Planted preorder and values from a single seeded stream.
pub fn generate_synthetic(cfg: &GeneratorConfig) -> Result<(Instance, Relation)> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let truth = generate_truth(cfg.n, cfg.p_e, &mut rng);
    let inst = draw_values(&truth, cfg.alpha, &mut rng)?;
    Ok((inst, truth))
}

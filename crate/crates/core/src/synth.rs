//! Seeded test signals with known scaling.
//!
//! Randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! which is specified independently of platform and word size, so a given
//! seed produces the same samples everywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::MIN_SERIES_LEN;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CascadeSpec {
    /// Share of mass given to one half at every split, in `(0.5, 1)`.
    pub multiplier: f64,
    /// Number of splits; the output has `2^levels` samples.
    pub levels: u32,
    pub seed: u64,
}

impl CascadeSpec {
    pub fn new(multiplier: f64, levels: u32, seed: u64) -> Self {
        CascadeSpec {
            multiplier,
            levels,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.multiplier > 0.5 && self.multiplier < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "cascade multiplier {} outside (0.5, 1)",
                self.multiplier
            )));
        }
        if !(8..=24).contains(&self.levels) {
            return Err(Error::InvalidArgument(format!(
                "cascade levels {} outside [8, 24]",
                self.levels
            )));
        }
        Ok(())
    }
}

/// Binomial multiplicative cascade: unit mass split repeatedly, one half
/// (chosen at random) receiving `a`, the other `1 - a`.
pub fn binomial_cascade(spec: &CascadeSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let a = spec.multiplier;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut mass = vec![1.0];
    for _ in 0..spec.levels {
        let mut next = Vec::with_capacity(mass.len() * 2);
        for m in mass {
            let (left, right) = if rng.random::<bool>() {
                (a, 1.0 - a)
            } else {
                (1.0 - a, a)
            };
            next.push(m * left);
            next.push(m * right);
        }
        mass = next;
    }
    Ok(mass)
}

/// Generalized Hurst exponent of the binomial cascade with multiplier `a`:
/// `h(r) = 1/r - ln(a^r + (1-a)^r) / (r ln 2)`, continued at `r = 0` by its limit.
pub fn binomial_h(a: f64, r: f64) -> f64 {
    let b = 1.0 - a;
    if r.abs() < 1e-12 {
        return -(a.ln() + b.ln()) / (2.0 * std::f64::consts::LN_2);
    }
    1.0 / r - (a.powf(r) + b.powf(r)).ln() / (r * std::f64::consts::LN_2)
}

/// I.i.d. standard normal increments of a random walk.
pub fn gaussian_walk(length: usize, seed: u64) -> Result<Vec<f64>> {
    if length < MIN_SERIES_LEN {
        return Err(Error::InvalidArgument(format!(
            "walk length {length} below {MIN_SERIES_LEN}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..length).map(|_| rng.sample(StandardNormal)).collect())
}

/// Fisher-Yates shuffle with the same seeded generator.
pub fn shuffled(values: &[f64], seed: u64) -> Vec<f64> {
    use rand::seq::SliceRandom;
    let mut out = values.to_vec();
    out.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    out
}

//! Random-search runs on a convex bi-objective test function.
//!
//! Each run draws `n_samples` points uniformly from `[-5, 5]^dim` and
//! evaluates
//!
//! ```text
//! f1(x) = Σ_d x_d²
//! f2(x) = Σ_d (x_d − 2)²
//! ```
//!
//! Sampling uses `ChaCha8Rng::seed_from_u64(seed)` and draws coordinates in
//! run-major, then sample, then dimension order, so archives are identical
//! across platforms for a given seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataio::RunArchive;
use crate::error::{Error, Result};
use crate::tensor::RunTensor;

pub const LOWER: f64 = -5.0;
pub const UPPER: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthConfig {
    pub seed: u64,
    pub n_runs: usize,
    pub n_samples: usize,
    pub dim: usize,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 0,
            n_runs: 50,
            n_samples: 20,
            dim: 3,
        }
    }
}

/// Both objectives of the test function at `x`.
pub fn synthetic_objectives(x: &[f64]) -> [f64; 2] {
    let f1 = x.iter().map(|v| v * v).sum();
    let f2 = x.iter().map(|v| (v - 2.0) * (v - 2.0)).sum();
    [f1, f2]
}

pub fn generate(config: &SynthConfig) -> Result<RunArchive> {
    let SynthConfig {
        seed,
        n_runs,
        n_samples,
        dim,
    } = *config;
    if n_runs == 0 || n_samples == 0 || dim == 0 {
        return Err(Error::validation(format!(
            "n_runs, n_samples and dim must be positive, got {n_runs}, {n_samples}, {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(n_runs * n_samples * 2);
    let mut x = vec![0.0; dim];
    for _ in 0..n_runs * n_samples {
        for v in &mut x {
            *v = rng.gen::<f64>() * (UPPER - LOWER) + LOWER;
        }
        values.extend(synthetic_objectives(&x));
    }
    let costs = RunTensor::new(n_runs, n_samples, 2, values)?;
    Ok(RunArchive::new(costs)
        .with_metadata("optimizer", "random search")
        .with_metadata("function", "f1=sum(x^2), f2=sum((x-2)^2)")
        .with_metadata("generator", "ChaCha8Rng::seed_from_u64")
        .with_metadata("seed", seed.to_string())
        .with_metadata("dim", dim.to_string()))
}

//! Shared fixtures for the benchmark targets.

use stagewise::model::{generate_synthetic, standardize, SyntheticSpec};
use stagewise::StandardizedProblem;

/// A standardized synthetic instance with fixed seed.
pub fn instance(n: usize, p: usize, rho: f64) -> StandardizedProblem {
    let data = generate_synthetic(&SyntheticSpec {
        n,
        p,
        rho,
        snr: 1.0,
        support: 5.min(p),
        seed: 42,
    })
    .expect("valid spec");
    standardize(&data.raw, true).expect("standardizable")
}

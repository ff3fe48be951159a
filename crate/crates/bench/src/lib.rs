//! Shared fixtures for the benchmark targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use neim_core::ObjectiveVector;

/// Uniform random cloud in [-1, 1]^dim, reproducible by seed.
pub fn random_cloud(seed: u64, len: usize, dim: usize) -> Vec<ObjectiveVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| {
            ObjectiveVector::new((0..dim).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap()
        })
        .collect()
}

//! Shared fixtures for the benchmarks.

use kansets::chain::IntegerMatrix;
use kansets::io::catalog;
use kansets::sset::{product, SimplicialSet};
use num_bigint::BigInt;

/// Spaces of growing size used by the homology benchmarks.
pub fn spaces() -> Vec<(&'static str, SimplicialSet)> {
    vec![
        ("torus", catalog("torus").unwrap()),
        ("rp2", catalog("rp2").unwrap()),
        ("boundary:5", catalog("boundary:5").unwrap()),
        ("torus x circle", product(&catalog("torus").unwrap(), &catalog("circle").unwrap()).space),
    ]
}

/// Deterministic dense matrix with small entries (a linear congruential fill).
pub fn dense_matrix(n: usize, seed: u64) -> IntegerMatrix {
    let mut state = seed;
    IntegerMatrix::from_fn(n, n, |_, _| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        BigInt::from((state >> 59) as i64 - 16)
    })
}

//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tiled_core::random::random_exponent_matrix;
use tiled_core::{ExponentMatrix, FinAbGroup, GroupElement};

/// `count` random orders of size `n` with entries in `[−3, 3]`.
pub fn orders(n: usize, count: usize, seed: u64) -> Vec<ExponentMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_exponent_matrix(&mut rng, n, 3)).collect()
}

/// The `n × n` order of the chamber: ones strictly above the diagonal.
pub fn chamber(n: usize) -> ExponentMatrix {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(j > i)).collect()).collect();
    ExponentMatrix::validate(n, &rows).expect("chamber is a valid order")
}

/// `count` random relation sets of `per_set` elements in `g`.
pub fn relation_sets(g: &FinAbGroup, count: usize, per_set: usize, seed: u64) -> Vec<Vec<GroupElement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..per_set)
                .map(|_| {
                    let coords: Vec<i64> = g.invariant_factors().iter().map(|&d| rng.gen_range(0..d as i64)).collect();
                    g.element(&coords).expect("rank matches")
                })
                .collect()
        })
        .collect()
}

/// Random integer matrix with entries in `[−bound, bound]`.
pub fn integer_matrix(rows: usize, cols: usize, bound: i64, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

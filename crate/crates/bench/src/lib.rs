//! Inputs shared by the benchmarks in `benches/`.

use prismlv::{IntMatrix, SeifertSymbol};
use rand::{rngs::StdRng, Rng, SeedableRng};

/// `n × n` matrix with entries in `[-9, 9]`, fixed by `seed`.
pub fn random_matrix(n: usize, seed: u64) -> IntMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_rows(&rows).expect("square rows")
}

/// Oo symbol with `k` exceptional fibers of small coprime type.
pub fn many_fiber_symbol(k: usize) -> SeifertSymbol {
    let pairs: Vec<(i64, i64)> = (0..k).map(|i| (1, 2 + i as i64)).collect();
    SeifertSymbol::from_pairs(prismlv::BaseClass::Oo, 0, &pairs).expect("coprime pairs")
}

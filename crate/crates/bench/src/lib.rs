//! Fixtures shared by the benchmarks.

use subsetcx::generators::{gen_modified_moore, gen_moore, gen_random, RandomNfaSpec};
use subsetcx::{BoolMatrix, Fsa};

pub fn moore(n: usize) -> Fsa {
    gen_moore(n).expect("n >= 2")
}

pub fn modified_moore(n: usize) -> Fsa {
    gen_modified_moore(n).expect("n >= 2")
}

/// A reproducible random NFA over two symbols.
pub fn random(n: usize, density: f64, seed: u64) -> Fsa {
    gen_random(&RandomNfaSpec::new(n, 2, density, seed)).expect("valid spec")
}

/// Dense pseudo-random `n`×`n` matrix from a 64-bit xorshift stream.
pub fn matrix(n: usize, seed: u64) -> BoolMatrix {
    let mut x = seed | 1;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            if x & 3 == 0 {
                entries.push((i, j));
            }
        }
    }
    BoolMatrix::from_entries(n, entries)
}

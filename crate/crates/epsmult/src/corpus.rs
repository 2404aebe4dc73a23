//! Seeded random monomial ideals for the property and lemma runs.

use epsmult_core::{ExponentVector, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_DIM: usize = 3;
pub const MAX_GENERATORS: usize = 5;
pub const MAX_EXPONENT: u32 = 6;

/// A proper nonzero ideal: dimension in `1..=MAX_DIM`, up to
/// `MAX_GENERATORS` generators, exponents in `0..=MAX_EXPONENT`.
pub fn random_ideal<R: Rng>(rng: &mut R) -> MonomialIdeal {
    let dim = rng.gen_range(1..=MAX_DIM);
    random_ideal_in(rng, dim)
}

/// Like [`random_ideal`] with a fixed dimension.
pub fn random_ideal_in<R: Rng>(rng: &mut R, dim: usize) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=MAX_GENERATORS);
        let gens: Vec<ExponentVector> = (0..count)
            .map(|_| ExponentVector::new((0..dim).map(|_| rng.gen_range(0..=MAX_EXPONENT)).collect()))
            .collect();
        if gens.iter().any(ExponentVector::is_zero) {
            continue;
        }
        return MonomialIdeal::new(dim, gens).expect("generators have the right length");
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` ideals drawn from a ChaCha8 stream seeded with `seed`.
pub fn corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_ideal(&mut rng)).collect()
}

//! Bounded random elements for the property suites.
//!
//! Coordinates are `p/q` or `(p/q)√3` with `p ∈ [−3, 3]` and `q ∈ {1, 2}`,
//! which keeps numbers small through long product chains.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Vec8;
use crate::scalar::QSqrt3;

/// A generator determined by `(seed, trial)` only, so a trial can be
/// replayed on its own.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> QSqrt3 {
    let p = rng.gen_range(-3i64..=3);
    let q = if rng.gen_bool(0.5) { 1 } else { 2 };
    if rng.gen_bool(0.5) {
        QSqrt3::from_parts(0, 1, p, q)
    } else {
        QSqrt3::from_ratio(p, q)
    }
}

pub fn random_vec8<R: Rng + ?Sized>(rng: &mut R) -> Vec8 {
    Vec8::new(std::array::from_fn(|_| random_scalar(rng)))
}

pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Vec8 {
    loop {
        let v = random_vec8(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random element with at most `k` nonzero coordinates; useful where
/// cheaper arithmetic matters more than full generality.
pub fn random_sparse<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec8 {
    let mut v = Vec8::zero();
    for _ in 0..k {
        let slot = rng.gen_range(0..8);
        v[slot] = random_scalar(rng);
    }
    v
}

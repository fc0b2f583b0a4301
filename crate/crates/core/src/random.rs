//! Seeded randomness. Every random choice in the crate is drawn from an
//! explicitly passed [`RandomSource`]; nothing reads ambient entropy except
//! [`fresh_seed`].

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Seedable stream; identical seeds give identical streams on every platform.
pub type RandomSource = ChaCha20Rng;

pub fn seeded(seed: u64) -> RandomSource {
    RandomSource::seed_from_u64(seed)
}

/// Draws an independent child stream from `parent`.
pub fn fork<R: RngCore + ?Sized>(parent: &mut R) -> RandomSource {
    let mut seed = <RandomSource as SeedableRng>::Seed::default();
    parent.fill_bytes(&mut seed);
    RandomSource::from_seed(seed)
}

/// A seed from the operating system, for runs started without `--seed`.
pub fn fresh_seed() -> u64 {
    rand::rng().random()
}

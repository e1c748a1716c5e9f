//! Deterministic randomness helpers. All randomized operations in this crate
//! draw from ChaCha8 streams derived from user-supplied 64-bit seeds, so any
//! seeded command reproduces byte-identical output regardless of scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// splitmix64 finalizer; used to derive independent sub-seeds.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a sub-seed for a named phase of a seeded computation.
pub fn derive_seed(seed: u64, phase: u64) -> u64 {
    splitmix64(seed ^ splitmix64(phase))
}

/// Counter-based deterministic generator for a derived seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random permutation of `0..n` (Fisher-Yates); `perm[old] = new`.
pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Draws `take` distinct elements from `pool` uniformly at random (partial
/// Fisher-Yates). The chosen prefix keeps the draw order.
pub fn sample_distinct<T: Copy>(pool: &mut [T], take: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    assert!(take <= pool.len());
    for i in 0..take {
        let j = i + rng.random_range(0..pool.len() - i);
        pool.swap(i, j);
    }
    pool[..take].to_vec()
}

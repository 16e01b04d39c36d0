//! Deterministic pseudo-random sampling.
//!
//! All randomized checks in this crate (homomorphism spot checks, random slope
//! data, random parabolic draws) use this fixed SplitMix64 stream so that a
//! given seed reproduces the identical sequence on every platform and in every
//! run. Default seed is 0 everywhere.

use crate::linalg::{ratio, Rat};

/// SplitMix64: tiny, fast, and stable forever.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n` (n > 0). Modulo bias is irrelevant at our sizes.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Signed integer in `-bound..=bound`.
    pub fn int_in(&mut self, bound: i64) -> i64 {
        let span = 2 * bound as u64 + 1;
        self.below(span) as i64 - bound
    }

    /// Random rational with numerator in `-num_bound..=num_bound` and
    /// denominator in `1..=den_bound`.
    pub fn rational(&mut self, num_bound: i64, den_bound: i64) -> Rat {
        let n = self.int_in(num_bound);
        let d = 1 + self.below(den_bound as u64) as i64;
        ratio(n, d)
    }
}

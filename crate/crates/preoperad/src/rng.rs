//! Seeded pseudo-random numbers for the identity suites.
//!
//! SplitMix64 is fixed as the generator so that a `(seed, sample index)` pair
//! printed in a failure report reproduces the exact same inputs on every
//! platform.

/// SplitMix64 with the reference increment and mixing constants.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n` without modulo bias.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let limit = u64::MAX - (u64::MAX % n);
        loop {
            let x = self.next_u64();
            if x < limit {
                return x % n;
            }
        }
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn int_in(&mut self, bound: u32) -> i64 {
        let m = 2 * u64::from(bound) + 1;
        self.next_below(m) as i64 - i64::from(bound)
    }
}

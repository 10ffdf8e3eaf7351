//! Seeded pseudorandom stream used for random-walk signs and sampled tests.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood's `splitmix64`, the
//! update behind `java.util.SplittableRandom`): a 64-bit counter advanced
//! by the golden-gamma constant and finalized with two xor-shift
//! multiplies. It is fixed here so that a given seed produces the same
//! stream on every platform, bit for bit.

/// SplitMix64 stream. One `u64` of state, one output per step.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// One sign per step: the top bit of the next output. `true` is plus.
    pub fn next_sign(&mut self) -> bool {
        self.next_u64() >> 63 == 0
    }

    /// Uniform in `0..n`. Modulo bias is negligible for the small `n` used here.
    pub fn next_below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Small signed integer in `-bound..=bound`.
    pub fn next_small_int(&mut self, bound: u64) -> i64 {
        self.next_below(2 * bound + 1) as i64 - bound as i64
    }

    /// Uniform double in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

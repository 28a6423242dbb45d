//! SplitMix64: the fixed 64-bit generator behind every seeded scenario.
//!
//! The algorithm is the published SplitMix64 finalizer (Steele, Lea, Flood;
//! also Java's `SplittableRandom`), chosen because a one-page spec makes the
//! stream reproducible bit-for-bit in any language. Floating-point draws use
//! the standard 53-bit mantissa construction, so scenario generation is
//! byte-identical across platforms.

/// Deterministic 64-bit PRNG with a one-line update rule.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)` with 53 random mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }

    /// Uniform draw in `{0, .., n-1}` by reduction modulo `n`.
    ///
    /// The modulo bias is below `n / 2^64`, irrelevant for the small index
    /// spaces used here; the reduction is kept because it is trivially
    /// portable.
    pub fn next_index(&mut self, n: usize) -> usize {
        assert!(n > 0, "next_index requires a nonempty range");
        (self.next_u64() % n as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_stream() {
        // First outputs for seed 1234567, cross-checked against the published
        // SplitMix64 reference implementation.
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
    }

    #[test]
    fn doubles_are_in_unit_interval() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..1000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u64> = {
            let mut r = SplitMix64::new(42);
            (0..32).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = SplitMix64::new(42);
            (0..32).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
    }
}

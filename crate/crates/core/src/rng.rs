//! Seeded generator for random rational test polynomials.
//!
//! The generator is SplitMix64: the state advances by `0x9E3779B97F4A7C15`
//! and each output is the state passed through
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z =  z ^ (z >> 31)
//! ```
//!
//! (wrapping arithmetic). A random polynomial draws its degree uniformly from
//! `0..=degmax`, then for each coefficient from `x^0` upward a numerator in
//! `-20..=20` and a denominator in `1..=10`. Bounded draws use
//! `next_u64() % span`. The sequence for a given seed is fixed forever.

use crate::algebra::{frac, Poly};

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

    /// Uniform-ish integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn poly(&mut self, degmax: usize) -> Poly {
        let deg = self.range(0, degmax as i64) as usize;
        let coeffs = (0..=deg)
            .map(|_| {
                let p = self.range(-20, 20);
                let q = self.range(1, 10);
                frac(p, q)
            })
            .collect();
        Poly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_outputs() {
        // Known SplitMix64 outputs for seed 1234567.
        let mut g = SplitMix64::new(1234567);
        assert_eq!(g.next_u64(), 6457827717110365317);
        assert_eq!(g.next_u64(), 3203168211198807973);
        assert_eq!(g.next_u64(), 9817491932198370423);
    }

    #[test]
    fn deterministic_and_bounded() {
        let a: Vec<_> = {
            let mut g = SplitMix64::new(42);
            (0..20).map(|_| g.poly(6)).collect()
        };
        let mut g = SplitMix64::new(42);
        for p in &a {
            assert_eq!(p, &g.poly(6));
            assert!(p.degree().is_none_or(|d| d <= 6));
            for c in p.coeffs() {
                assert!(c.numer().magnitude() <= &20u32.into());
                assert!(c.denom() <= &10.into());
            }
        }
    }
}

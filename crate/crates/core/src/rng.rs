//! SplitMix64, the fixed generator behind every seeded instance.
//!
//! Each step adds `0x9E3779B97F4A7C15` to the state and returns
//!
//! ```text
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping 64-bit arithmetic. Derived quantities:
//!
//! * `below(k)`: draw `x`, reject while `x < 2⁶⁴ mod k`, return `x mod k`.
//! * `bits(w)`: ⌈w/64⌉ draws assembled little-endian (first draw is the least
//!   significant word), top word masked to `w` bits.
//! * `uniform(lo, hi)` over exact integers: with `r = hi − lo + 1` and
//!   `w = bitlen(r − 1)`, draw `bits(w)` until the value is `< r`, add `lo`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in `0..bound`; `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform in `0..2^width`.
    pub fn bits(&mut self, width: u64) -> BigUint {
        let words = width.div_ceil(64) as usize;
        let mut digits: Vec<u64> = (0..words).map(|_| self.next_u64()).collect();
        let spare = words as u64 * 64 - width;
        if let Some(top) = digits.last_mut() {
            if spare > 0 {
                *top &= u64::MAX >> spare;
            }
        }
        BigUint::from_slice(
            &digits
                .iter()
                .flat_map(|d| [*d as u32, (*d >> 32) as u32])
                .collect::<Vec<_>>(),
        )
    }

    /// Uniform over the inclusive range `lo..=hi`.
    pub fn uniform(&mut self, lo: &BigInt, hi: &BigInt) -> BigInt {
        assert!(lo <= hi, "empty range");
        let span = (hi - lo).to_biguint().expect("nonnegative") + BigUint::one();
        let width = (&span - BigUint::one()).bits();
        loop {
            let draw = if width == 0 {
                BigUint::zero()
            } else {
                self.bits(width)
            };
            if draw < span {
                return lo + BigInt::from(draw);
            }
        }
    }
}

/// The SplitMix64 output function.
pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-(n, trial) seed for benchmark runs. Injective in `(n, trial)` for
/// values below 2³², since `mix` is a bijection.
pub fn derive_seed(master: u64, n: u64, trial: u64) -> u64 {
    SplitMix64::new(master ^ ((n << 32) | (trial & 0xFFFF_FFFF))).next_u64()
}

//! Seeded instance families.
//!
//! Random draws come from [`SplitMix64`](crate::rng::SplitMix64) in a fixed order,
//! so a `(family, n, seed, size)` tuple always yields the same file:
//!
//! 1. elements: `n` draws of `uniform(1, 2^(2n))`; when `n ≤ 20` the whole
//!    batch is redrawn (continuing the stream) until all `2ⁿ` subset-sums differ;
//! 2. `random`: target `uniform(1, max(n, 1)·2^(2n))`;
//!    `planted`: partial Fisher–Yates over `0..n` using `below(n − k)` for
//!    `k < size`, target = sum of the chosen indices.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::model::{Instance, SubsetMask, MAX_MASK_BITS};
use crate::rng::SplitMix64;
use crate::Error;

/// Largest n for which distinct subset-sums are checked exhaustively.
pub const DISTINCT_CHECK_MAX_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    PowersOfTwo,
    RandomWide,
    Planted,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::PowersOfTwo => "powers2",
            Family::RandomWide => "random",
            Family::Planted => "planted",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "powers2" => Ok(Family::PowersOfTwo),
            "random" => Ok(Family::RandomWide),
            "planted" => Ok(Family::Planted),
            _ => Err(Error::Format(format!(
                "unknown family {s:?} (expected powers2, random or planted)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    /// Planted subset size; defaults to ⌊n/2⌋ for the planted family.
    pub planted_size: Option<usize>,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        Self {
            family,
            n,
            seed,
            planted_size: None,
        }
    }

    pub fn generate(&self) -> Result<Generated, Error> {
        match self.family {
            Family::PowersOfTwo => Ok(Generated {
                instance: gen_powers_of_two(self.n),
                planted_mask: None,
                distinct_verified: true,
            }),
            Family::RandomWide => Ok(gen_random_wide(self.n, self.seed)),
            Family::Planted => {
                let size = self.planted_size.unwrap_or(self.n / 2);
                gen_planted(self.n, self.seed, size)
            }
        }
    }
}

/// A generated instance with what is known about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub instance: Instance,
    pub planted_mask: Option<SubsetMask>,
    /// All 2ⁿ subset-sums were checked to be distinct (or are by construction).
    pub distinct_verified: bool,
}

impl Generated {
    pub fn metadata(&self, spec: &GeneratorSpec) -> Metadata {
        Metadata {
            family: spec.family.name().to_string(),
            seed: spec.seed,
            distinct_verified: self.distinct_verified,
            planted_mask: self.planted_mask.map(SubsetMask::to_hex),
        }
    }
}

/// Sidecar written next to each generated instance file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub family: String,
    pub seed: u64,
    pub distinct_verified: bool,
    pub planted_mask: Option<String>,
}

impl Metadata {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("metadata serialization is infallible");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// `a_i = 2^(i-1)`, `b = 2ⁿ`: every subset-sum is distinct and below the target.
pub fn gen_powers_of_two(n: usize) -> Instance {
    let elements = (0..n).map(|i| BigInt::one() << i).collect();
    Instance::new(elements, BigInt::one() << n)
}

pub fn gen_random_wide(n: usize, seed: u64) -> Generated {
    let mut rng = SplitMix64::new(seed);
    let (elements, distinct_verified) = draw_elements(&mut rng, n);
    let hi = BigInt::from(n.max(1)) << (2 * n);
    let target = rng.uniform(&BigInt::one(), &hi);
    Generated {
        instance: Instance::new(elements, target),
        planted_mask: None,
        distinct_verified,
    }
}

pub fn gen_planted(n: usize, seed: u64, planted_size: usize) -> Result<Generated, Error> {
    if planted_size > n {
        return Err(Error::Format(format!(
            "planted size {planted_size} exceeds n = {n}"
        )));
    }
    if n > MAX_MASK_BITS {
        return Err(Error::cap("planted instance size n", n, MAX_MASK_BITS));
    }
    let mut rng = SplitMix64::new(seed);
    let (elements, distinct_verified) = draw_elements(&mut rng, n);
    let mut order: Vec<usize> = (0..n).collect();
    for k in 0..planted_size {
        let j = k + rng.below((n - k) as u64) as usize;
        order.swap(k, j);
    }
    let mask = SubsetMask::from_indices(order[..planted_size].iter().copied());
    let target = mask.indices().map(|i| &elements[i]).sum();
    Ok(Generated {
        instance: Instance::new(elements, target),
        planted_mask: Some(mask),
        distinct_verified,
    })
}

fn draw_elements(rng: &mut SplitMix64, n: usize) -> (Vec<BigInt>, bool) {
    let hi = BigInt::one() << (2 * n);
    let lo = BigInt::one();
    loop {
        let elements: Vec<BigInt> = (0..n).map(|_| rng.uniform(&lo, &hi)).collect();
        if n > DISTINCT_CHECK_MAX_N {
            return (elements, false);
        }
        if count_distinct_sums(&elements) == 1u64 << n {
            return (elements, true);
        }
    }
}

/// Number of distinct values among all 2ⁿ subset-sums of `elements`.
pub fn count_distinct_sums(elements: &[BigInt]) -> u64 {
    let mut sums = vec![BigInt::zero()];
    for a in elements {
        let extended: Vec<BigInt> = sums.iter().map(|s| s + a).collect();
        sums.extend(extended);
    }
    sums.into_iter().collect::<HashSet<_>>().len() as u64
}

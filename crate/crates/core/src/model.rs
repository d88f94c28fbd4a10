//! Instances, subset masks and exact subset-sum evaluation.
//!
//! Elements are kept in input order and addressed by index, so duplicate
//! values are unambiguous. All arithmetic is arbitrary-precision.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::Error;

/// Widest instance a [`SubsetMask`] can address.
pub const MAX_MASK_BITS: usize = 64;

/// A multiset of exact integers `a_1..a_n` and a target `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    elements: Vec<BigInt>,
    target: BigInt,
}

impl Instance {
    pub fn new(elements: Vec<BigInt>, target: BigInt) -> Self {
        Self { elements, target }
    }

    /// Convenience constructor for small literal instances.
    pub fn from_i64(elements: &[i64], target: i64) -> Self {
        Self::new(
            elements.iter().map(|&a| BigInt::from(a)).collect(),
            BigInt::from(target),
        )
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[BigInt] {
        &self.elements
    }

    pub fn target(&self) -> &BigInt {
        &self.target
    }

    /// Checks that `mask` only selects indices below `n`.
    pub fn check_mask(&self, mask: SubsetMask) -> Result<(), Error> {
        if mask.fits(self.n()) {
            Ok(())
        } else {
            Err(Error::InvalidMask { mask, n: self.n() })
        }
    }

    /// Exact sum of the elements selected by `mask`; zero for the empty mask.
    pub fn subset_sum(&self, mask: SubsetMask) -> Result<BigInt, Error> {
        self.check_mask(mask)?;
        let mut sum = BigInt::zero();
        for i in mask.indices() {
            sum += &self.elements[i];
        }
        Ok(sum)
    }

    /// True iff the subset selected by `mask` sums to the target.
    pub fn verify(&self, mask: SubsetMask) -> Result<bool, Error> {
        Ok(self.subset_sum(mask)? == self.target)
    }

    /// Canonical JSON encoding: `{"n":<int>,"a":["<dec>",...],"b":"<dec>"}` plus a newline.
    pub fn to_json(&self) -> String {
        let file = InstanceFile {
            n: self.n() as u64,
            a: self.elements.iter().map(BigInt::to_string).collect(),
            b: self.target.to_string(),
        };
        let mut out = serde_json::to_string(&file).expect("instance serialization is infallible");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.n != file.a.len() as u64 {
            return Err(Error::Format(format!(
                "n is {} but the element list has {} entries",
                file.n,
                file.a.len()
            )));
        }
        let elements = file
            .a
            .iter()
            .map(|s| parse_decimal(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(elements, parse_decimal(&file.b)?))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: u64,
    a: Vec<String>,
    b: String,
}

/// Parses `-?[0-9]+` into an exact integer.
pub fn parse_decimal(s: &str) -> Result<BigInt, Error> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(Error::Format(format!("not a decimal integer: {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Format(format!("{s:?}: {e}")))
}

/// Index set over an instance's elements: bit `i` selects element `a_{i+1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetMask(indices.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    /// Whether every set bit is below `n`.
    pub fn fits(self, n: usize) -> bool {
        n >= MAX_MASK_BITS || self.0 >> n == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Set indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Lowercase hex without prefix, `0` for the empty mask.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, Error> {
        let digits = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .unwrap_or(s);
        u64::from_str_radix(digits, 16)
            .map(SubsetMask)
            .map_err(|e| Error::Format(format!("bad mask {s:?}: {e}")))
    }
}

impl std::ops::BitOr for SubsetMask {
    type Output = SubsetMask;

    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

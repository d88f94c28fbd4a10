use num_bigint::BigInt;
use num_traits::Zero;

use super::{SolveResult, SolverConfig};
use crate::instrumentation::{ComparisonLedger, Encoding, Outcome};
use crate::model::{Instance, SubsetMask, MAX_MASK_BITS};
use crate::Error;

/// Which part of the fixed partition: `Plus` is the first ⌈n/2⌉ elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    Plus,
    Minus,
}

impl Half {
    /// Index range of the elements belonging to this half.
    pub fn range(self, n: usize) -> std::ops::Range<usize> {
        let split = n.div_ceil(2);
        match self {
            Half::Plus => 0..split,
            Half::Minus => split..n,
        }
    }
}

/// A half subset-sum and the mask (in whole-instance bit positions) producing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSumEntry {
    pub sum: BigInt,
    pub mask: SubsetMask,
}

/// An entry of the b − S⁻ list: `key = b − sum(mask)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KeyedEntry {
    pub key: BigInt,
    pub mask: SubsetMask,
}

/// All subset-sums of one half, in ascending mask order. Charges one op per entry.
pub fn half_sums(
    instance: &Instance,
    half: Half,
    ledger: &mut ComparisonLedger,
    config: &SolverConfig,
) -> Result<Vec<HalfSumEntry>, Error> {
    let range = half.range(instance.n());
    let width = range.len();
    if width >= 63 || (1u64 << width) > config.max_half_entries {
        return Err(Error::cap(
            "half-sum list length",
            format_args!("2^{width}"),
            config.max_half_entries,
        ));
    }
    let offset = range.start;
    let mut entries = Vec::with_capacity(1 << width);
    entries.push(HalfSumEntry {
        sum: BigInt::zero(),
        mask: SubsetMask::EMPTY,
    });
    // Doubling: the appended block has the new, highest bit set, so the list
    // stays in ascending mask order.
    for (j, a) in instance.elements()[range].iter().enumerate() {
        let bit = SubsetMask(1 << (offset + j));
        for k in 0..entries.len() {
            let extended = HalfSumEntry {
                sum: &entries[k].sum + a,
                mask: entries[k].mask | bit,
            };
            entries.push(extended);
        }
    }
    ledger.record_generated(entries.len() as u64);
    Ok(entries)
}

/// The two sorted lists the scan walks: S⁺ by (sum, mask) and b − S⁻ by (key, mask).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortedLists {
    pub plus: Vec<HalfSumEntry>,
    pub minus: Vec<KeyedEntry>,
}

pub fn build_lists(
    instance: &Instance,
    ledger: &mut ComparisonLedger,
    config: &SolverConfig,
) -> Result<SortedLists, Error> {
    let mut plus = half_sums(instance, Half::Plus, ledger, config)?;
    let minus = half_sums(instance, Half::Minus, ledger, config)?;

    plus.sort_unstable();
    ledger.record_sort(plus.len() as u64);
    ledger.record_sorted_list(plus.len() as u64);

    let target = instance.target();
    let mut minus: Vec<KeyedEntry> = minus
        .into_iter()
        .map(|e| KeyedEntry {
            key: target - e.sum,
            mask: e.mask,
        })
        .collect();
    minus.sort_unstable();
    ledger.record_sort(minus.len() as u64);
    ledger.record_sorted_list(minus.len() as u64);

    Ok(SortedLists { plus, minus })
}

/// Meet-in-the-middle: sort S⁺ and b − S⁻ ascending and walk both from the head,
/// advancing whichever side holds the smaller value, until a match or either
/// list runs out.
pub fn mitm_solve(
    instance: &Instance,
    ledger: &mut ComparisonLedger,
    config: &SolverConfig,
) -> Result<SolveResult, Error> {
    let n = instance.n();
    let cap = config.mitm_max_n.min(MAX_MASK_BITS);
    if n > cap {
        return Err(Error::cap("meet-in-the-middle instance size n", n, cap));
    }
    ledger.admit(n)?;

    let SortedLists { plus, minus } = build_lists(instance, ledger, config)?;
    let (mut i, mut j) = (0, 0);
    let mut solution = None;
    while i < plus.len() && j < minus.len() {
        match ledger.record_compare(&plus[i].sum, &minus[j].key) {
            Outcome::Equal => {
                let mask = plus[i].mask | minus[j].mask;
                ledger.record_emit(mask);
                solution = Some(mask);
                break;
            }
            Outcome::LhsLess => i += 1,
            Outcome::LhsGreater => j += 1,
        }
    }

    Ok(SolveResult {
        solution,
        stats: ledger.stats(),
        encoding: Encoding::SPlusVsBMinusSMinus,
    })
}

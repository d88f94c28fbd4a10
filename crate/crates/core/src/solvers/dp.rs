use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::SolverConfig;
use crate::model::{Instance, SubsetMask, MAX_MASK_BITS};
use crate::Error;

const UNREACHED: u32 = u32::MAX;
const ORIGIN: u32 = u32::MAX - 1;

/// Pseudo-polynomial reachability table over `[sum of negatives, sum of positives]`.
/// Only used to cross-check the comparison-based solvers on small magnitudes.
pub fn dp_solve(instance: &Instance, config: &SolverConfig) -> Result<Option<SubsetMask>, Error> {
    let n = instance.n();
    if n > MAX_MASK_BITS {
        return Err(Error::cap("dp instance size n", n, MAX_MASK_BITS));
    }
    let low: BigInt = instance.elements().iter().filter(|a| a.is_negative()).sum();
    let high: BigInt = instance.elements().iter().filter(|a| a.is_positive()).sum();
    let span = &high - &low;
    let span = match span.to_u64() {
        Some(s) if s <= config.dp_max_range => s as usize,
        _ => {
            return Err(Error::cap(
                "dp reachable-sum range",
                span,
                config.dp_max_range,
            ))
        }
    };

    let target = instance.target();
    if target < &low || target > &high {
        return Ok(None);
    }
    let index = |v: &BigInt| -> usize { (v - &low).to_usize().expect("within span") };

    // first[s] = element that first made offset s reachable
    let mut first = vec![UNREACHED; span + 1];
    first[index(&BigInt::zero())] = ORIGIN;
    let values: Vec<i64> = instance
        .elements()
        .iter()
        .map(|a| a.to_i64().expect("bounded by span"))
        .collect();
    for (i, &a) in values.iter().enumerate() {
        let step = a.unsigned_abs() as usize;
        if step == 0 {
            continue;
        }
        // Visit targets so each source is read before this element can update it.
        let mut update = |s: usize| {
            let src = if a > 0 { s - step } else { s + step };
            if first[s] == UNREACHED && first[src] != UNREACHED {
                first[s] = i as u32;
            }
        };
        if a > 0 {
            for s in (step..=span).rev() {
                update(s);
            }
        } else {
            for s in 0..=span - step {
                update(s);
            }
        }
    }

    let mut cur = index(target);
    if first[cur] == UNREACHED {
        return Ok(None);
    }
    let mut mask = SubsetMask::EMPTY;
    while first[cur] != ORIGIN {
        let i = first[cur] as usize;
        mask = mask | SubsetMask(1 << i);
        let a = values[i];
        cur = if a > 0 {
            cur - a as usize
        } else {
            cur + a.unsigned_abs() as usize
        };
    }
    Ok(Some(mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(a: &[i64], b: i64) -> Option<SubsetMask> {
        dp_solve(&Instance::from_i64(a, b), &SolverConfig::default()).unwrap()
    }

    #[test]
    fn classic_instance() {
        let inst = Instance::from_i64(&[3, 34, 4, 12, 5, 2], 9);
        let mask = dp_solve(&inst, &SolverConfig::default()).unwrap().unwrap();
        assert!(inst.verify(mask).unwrap());
    }

    #[test]
    fn unreachable_and_mixed_signs() {
        assert_eq!(dp(&[1, 2], 4), None);
        let m = dp(&[-2, 2], 0).unwrap();
        assert!(Instance::from_i64(&[-2, 2], 0).verify(m).unwrap());
        let m = dp(&[-5, 3, 7, -1], -6).unwrap();
        assert!(Instance::from_i64(&[-5, 3, 7, -1], -6).verify(m).unwrap());
        assert_eq!(dp(&[-5, 3], -3), None);
        assert_eq!(dp(&[], 0), Some(SubsetMask::EMPTY));
        assert_eq!(dp(&[], 2), None);
    }

    #[test]
    fn each_element_used_once() {
        // 4 = 2 + 2 needs both copies, 6 is not reachable
        let m = dp(&[2, 2], 4).unwrap();
        assert_eq!(m, SubsetMask(0b11));
        assert_eq!(dp(&[2, 2], 6), None);
        assert_eq!(dp(&[-3], -6), None);
        assert_eq!(dp(&[0, 0, 5], 5).map(|m| m.bits() & 0b100), Some(0b100));
    }

    #[test]
    fn range_cap_is_refused() {
        let inst = Instance::from_i64(&[1, 20_000_000], 1);
        assert!(matches!(
            dp_solve(&inst, &SolverConfig::default()),
            Err(Error::CapExceeded { .. })
        ));
    }
}

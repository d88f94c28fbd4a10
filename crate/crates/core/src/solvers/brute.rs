use num_bigint::BigInt;
use num_traits::Zero;

use super::{SolveResult, SolverConfig};
use crate::instrumentation::{ComparisonLedger, Encoding, Outcome};
use crate::model::{Instance, SubsetMask};
use crate::Error;

/// Enumerates masks `0..2ⁿ` in ascending order, comparing each subset-sum with
/// the target once. Builds no sorted list, so M stays at its floor of 1.
pub fn brute_force_solve(
    instance: &Instance,
    ledger: &mut ComparisonLedger,
    config: &SolverConfig,
) -> Result<SolveResult, Error> {
    let n = instance.n();
    let cap = config.brute_max_n.min(63);
    if n > cap {
        return Err(Error::cap("brute-force instance size n", n, cap));
    }
    ledger.admit(n)?;

    let a = instance.elements();
    let target = instance.target();
    let mut sum = BigInt::zero();
    let mut solution = None;
    for m in 0..1u64 << n {
        if m > 0 {
            // m-1 → m clears the trailing ones of m-1 and sets bit tz(m)
            let set = m.trailing_zeros() as usize;
            for cleared in &a[..set] {
                sum -= cleared;
            }
            sum += &a[set];
        }
        ledger.record_generated(1);
        if ledger.record_compare(&sum, target) == Outcome::Equal {
            let mask = SubsetMask(m);
            ledger.record_emit(mask);
            solution = Some(mask);
            break;
        }
    }

    Ok(SolveResult {
        solution,
        stats: ledger.stats(),
        encoding: Encoding::Direct,
    })
}

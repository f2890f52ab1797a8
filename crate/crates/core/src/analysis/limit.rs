use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{check_range, needs_predecessor, run_check, CheckResult};
use crate::arith::QuadNumber;
use crate::cert::BoundFunction;
use crate::error::{Error, Result};
use crate::report::Witness;
use crate::sequence::{ratio, TermStore};

/// Two-sided enclosure of the ratios around the bound's limit `c0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitEnclosure {
    /// `|c0 - r_n| < |c1|/n` on the checked range.
    pub check: CheckResult,
    pub limit: QuadNumber,
    /// `b(hi+1) - b(hi)`, the width of the last bracket.
    pub width_at_hi: QuadNumber,
    /// `|c1|/hi`
    pub distance_bound_at_hi: QuadNumber,
    /// `c0 - r_hi`, exact.
    pub distance_at_hi: QuadNumber,
}

/// From `b(n) < r_n < b(n+1)` on `[lo, hi]` derive `|c0 - r_n| < |c1|/n`,
/// re-checking both the bracket and the distance exactly at every `n`.
///
/// A broken bracket is an error ([`Error::InterlacingViolated`]), because
/// the enclosure is only meaningful on top of it.
pub fn limit_enclosure(
    store: &TermStore,
    b: &BoundFunction,
    lo: u64,
    hi: u64,
) -> Result<LimitEnclosure> {
    check_range(lo, hi)?;
    needs_predecessor(lo, hi)?;
    for n in lo..=hi + 1 {
        store.positive(n)?;
    }
    let c1_abs = b.c1.abs();
    let pieces = |n: u64| -> Result<(QuadNumber, QuadNumber, QuadNumber)> {
        let r = QuadNumber::from_rational(ratio(store, n)?);
        let inv = BigRational::new(BigInt::from(1), BigInt::from(n));
        Ok((
            r,
            c1_abs.scale(&inv),
            &b.c0 - &QuadNumber::from_rational(ratio(store, n)?),
        ))
    };
    let check = run_check(
        "limit-enclosure",
        lo,
        hi,
        true,
        |n| {
            let (r, bound, dist) = pieces(n)?;
            if (&r - &b.eval(n)?).sign() <= 0 || (&b.eval(n + 1)? - &r).sign() <= 0 {
                return Err(Error::InterlacingViolated { n });
            }
            Ok(match (&bound - &dist.abs()).sign() {
                1 => Ordering::Greater,
                0 => Ordering::Equal,
                _ => Ordering::Less,
            })
        },
        |n| {
            let (_, bound, dist) = pieces(n)?;
            Ok((Witness::Quad(dist.abs()), Witness::Quad(bound)))
        },
    )?;
    let (_, distance_bound_at_hi, distance_at_hi) = pieces(hi)?;
    Ok(LimitEnclosure {
        check,
        limit: b.c0.clone(),
        width_at_hi: &b.eval(hi + 1)? - &b.eval(hi)?,
        distance_bound_at_hi,
        distance_at_hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Verdict;
    use crate::arith::rat;
    use crate::sequence::{builtin, generate};

    #[test]
    fn enclosure_of_r() {
        let r = generate(&builtin::r_sequence(), 120).unwrap();
        let b = BoundFunction::sandwich();
        let e = limit_enclosure(&r, &b, 3, 119).unwrap();
        assert_eq!(e.check.verdict, Verdict::HoldsStrict);
        assert!(e.distance_at_hi.sign() > 0);
        assert!(e.distance_at_hi < e.distance_bound_at_hi);
        assert_eq!(e.width_at_hi, (-&b.c1).scale(&rat(1, 119 * 120)));
    }

    #[test]
    fn broken_bracket_is_an_error() {
        let r = generate(&builtin::r_sequence(), 20).unwrap();
        let b = BoundFunction::sandwich().offset(&QuadNumber::from(1));
        assert!(matches!(
            limit_enclosure(&r, &b, 3, 10),
            Err(Error::InterlacingViolated { n: 3 })
        ));
    }
}

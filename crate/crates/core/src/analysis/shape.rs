use num_bigint::BigInt;
use num_traits::Pow;

use super::{check_range, needs_predecessor, run_check, CheckResult, Direction, LogShape};
use crate::error::Result;
use crate::report::Witness;
use crate::sequence::{ratio, TermStore};

/// `z_{n-1} z_{n+1}` against `z_n²` for every center `n` in `[lo, hi]`.
pub fn check_log_shape(
    store: &TermStore,
    lo: u64,
    hi: u64,
    mode: LogShape,
    strict: bool,
) -> Result<CheckResult> {
    check_range(lo, hi)?;
    needs_predecessor(lo, hi)?;
    store.require(lo - 1, hi + 1)?;
    let sides = |n: u64| -> Result<(BigInt, BigInt)> {
        let outer = store.term(n - 1)? * store.term(n + 1)?;
        let inner = Pow::pow(store.term(n)?, 2u32);
        Ok((outer, inner))
    };
    let property = match mode {
        LogShape::Convex => "log-convex",
        LogShape::Concave => "log-concave",
    };
    run_check(
        property,
        lo,
        hi,
        strict,
        |n| {
            let (outer, inner) = sides(n)?;
            Ok(match mode {
                LogShape::Convex => outer.cmp(&inner),
                LogShape::Concave => inner.cmp(&outer),
            })
        },
        |n| {
            let (outer, inner) = sides(n)?;
            Ok((Witness::Integer(outer), Witness::Integer(inner)))
        },
    )
}

/// Monotonicity of `r_n = z_{n+1}/z_n` over `r_lo, ..., r_hi`; index `n`
/// in the result refers to the comparison of `r_n` with `r_{n+1}`.
pub fn check_ratio_monotone(
    store: &TermStore,
    lo: u64,
    hi: u64,
    direction: Direction,
) -> Result<CheckResult> {
    check_range(lo, hi)?;
    for n in lo..=hi + 1 {
        store.positive(n)?;
    }
    let property = match direction {
        Direction::Increasing => "ratio-increasing",
        Direction::Decreasing => "ratio-decreasing",
    };
    run_check(
        property,
        lo,
        hi.saturating_sub(1).max(lo),
        false,
        |n| {
            if n >= hi {
                return Ok(std::cmp::Ordering::Greater);
            }
            let (a, b) = (ratio(store, n)?, ratio(store, n + 1)?);
            Ok(match direction {
                Direction::Increasing => b.cmp(&a),
                Direction::Decreasing => a.cmp(&b),
            })
        },
        |n| Ok((ratio(store, n)?.into(), ratio(store, n + 1)?.into())),
    )
    .map(|mut r| {
        r.hi = hi;
        r
    })
}

/// `r_n² >= r_{n-1} r_{n+1}` at every center `n` in `[lo, hi]`, decided as
/// `z_{n+1}³ z_{n-1}` against `z_n³ z_{n+2}`.
pub fn check_ratio_log_concave(store: &TermStore, lo: u64, hi: u64) -> Result<CheckResult> {
    check_range(lo, hi)?;
    needs_predecessor(lo, hi)?;
    for n in lo - 1..=hi + 2 {
        store.positive(n)?;
    }
    let sides = |n: u64| -> Result<(BigInt, BigInt)> {
        let left = Pow::pow(store.term(n + 1)?, 3u32) * store.term(n - 1)?;
        let right = Pow::pow(store.term(n)?, 3u32) * store.term(n + 2)?;
        Ok((left, right))
    };
    run_check(
        "ratio-log-concave",
        lo,
        hi,
        false,
        |n| {
            let (l, r) = sides(n)?;
            Ok(l.cmp(&r))
        },
        |n| {
            let (l, r) = sides(n)?;
            Ok((Witness::Integer(l), Witness::Integer(r)))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Verdict;
    use crate::arith::rat;
    use crate::sequence::{builtin, generate};

    fn r_store(upto: u64) -> TermStore {
        generate(&builtin::r_sequence(), upto).unwrap()
    }

    fn seq(v: &[i64]) -> TermStore {
        TermStore::new("t", 0, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn r_convexity_boundary() {
        let r = r_store(30);
        let c = check_log_shape(&r, 4, 29, LogShape::Convex, true).unwrap();
        assert_eq!(c.verdict, Verdict::HoldsStrict);
        let c = check_log_shape(&r, 3, 3, LogShape::Convex, true).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        let v = c.violation.unwrap();
        assert_eq!(v.index, 3);
        // 25² - 7·87 = 16
        assert_eq!(v.lhs, Witness::int(609));
        assert_eq!(v.rhs, Witness::int(625));
        let cc = check_log_shape(&r, 3, 3, LogShape::Concave, true).unwrap();
        assert_eq!(cc.verdict, Verdict::HoldsStrict);
    }

    #[test]
    fn constant_sequence_is_weakly_convex() {
        let s = seq(&[1, 1, 1]);
        let c = check_log_shape(&s, 1, 1, LogShape::Convex, false).unwrap();
        assert_eq!(c.verdict, Verdict::HoldsWeak);
        let c = check_log_shape(&s, 1, 1, LogShape::Convex, true).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
    }

    #[test]
    fn ratio_monotone_examples() {
        let r = r_store(30);
        let c = check_ratio_monotone(&r, 3, 28, Direction::Increasing).unwrap();
        assert_eq!(c.verdict, Verdict::HoldsStrict);
        let c = check_ratio_monotone(&r, 2, 28, Direction::Increasing).unwrap();
        let v = c.violation.unwrap();
        assert_eq!(v.index, 2);
        assert_eq!(v.lhs, Witness::Rational(rat(25, 7)));
        assert_eq!(v.rhs, Witness::Rational(rat(87, 25)));
        assert!(check_ratio_monotone(&r, 0, 5, Direction::Increasing).is_err());
    }

    #[test]
    fn out_of_range_is_an_error() {
        let r = r_store(10);
        assert!(check_log_shape(&r, 0, 3, LogShape::Convex, true).is_err());
        assert!(check_log_shape(&r, 2, 10, LogShape::Convex, true).is_err());
        assert!(check_log_shape(&r, 5, 4, LogShape::Convex, true).is_err());
    }

    #[test]
    fn ratio_log_concavity() {
        let geo = seq(&[1, 2, 4, 8, 16, 32]);
        let c = check_ratio_log_concave(&geo, 1, 3).unwrap();
        assert_eq!(c.verdict, Verdict::HoldsWeak);
        // the ratio sequence from r_4 on: centers 5 and up
        let r = r_store(40);
        assert!(check_ratio_log_concave(&r, 5, 37).unwrap().holds_strict());
        assert_eq!(
            check_ratio_log_concave(&r, 2, 37)
                .unwrap()
                .first_violation(),
            Some(2)
        );
        assert_eq!(
            check_ratio_log_concave(&r, 4, 4).unwrap().verdict,
            Verdict::Fails
        );
    }
}

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{check_range, needs_predecessor, run_check, CheckResult};
use crate::arith::{format_scaled, pow10, rational_root_scaled, round_half_away};
use crate::error::{Error, Result};
use crate::report::Witness;
use crate::sequence::TermStore;

/// Extra digits carried when differencing neighbouring ratios.
const GUARD: u32 = 6;

/// `round(10^digits · q_n)` with `q_n = z_{n+1}^(1/(n+1)) / z_n^(1/n)`,
/// rounded half away from zero and exact.
pub fn root_ratio_scaled(store: &TermStore, n: u64, digits: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("q_n is undefined at n = 0".into()));
    }
    let big = |e: u64| {
        u32::try_from(e).map_err(|_| Error::Domain(format!("exponent {e} does not fit in 32 bits")))
    };
    let (a, b) = (store.positive(n)?, store.positive(n + 1)?);
    let p = num_traits::pow(b.clone(), big(n)? as usize);
    let q = num_traits::pow(a.clone(), big(n + 1)? as usize);
    rational_root_scaled(&p, &q, big(n * (n + 1))?, digits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrendRow {
    pub n: u64,
    /// `q_n` rounded to the requested digits.
    pub ratio: String,
    pub ratio_scaled: BigInt,
    /// `q_n - q_{n+1}` to the requested digits, for every row but the last.
    pub diff_to_next: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRatioTrend {
    pub digits: u32,
    pub rows: Vec<TrendRow>,
    /// Whether the printed values decrease across the range.
    pub check: CheckResult,
    /// `q_hi - 1` to the requested digits.
    pub distance_to_one: String,
}

/// Decimal table of `q_n` over `[lo, hi]` with neighbouring differences.
///
/// The printed values are exact roundings; the differences come from values
/// carried with extra guard digits before rounding.
pub fn root_ratio_trend(
    store: &TermStore,
    lo: u64,
    hi: u64,
    digits: u32,
) -> Result<RootRatioTrend> {
    check_range(lo, hi)?;
    needs_predecessor(lo, hi)?;
    if digits == 0 {
        return Err(Error::Domain("digits must be positive".into()));
    }
    for n in lo..=hi + 1 {
        store.positive(n)?;
    }
    let pairs: Vec<(BigInt, BigInt)> = (lo..=hi)
        .into_par_iter()
        .map(|n| {
            Ok((
                root_ratio_scaled(store, n, digits)?,
                root_ratio_scaled(store, n, digits + GUARD)?,
            ))
        })
        .collect::<Result<_>>()?;

    let guard_scale = pow10(u64::from(GUARD));
    let rows: Vec<TrendRow> = pairs
        .iter()
        .enumerate()
        .map(|(i, (shown, fine))| {
            let diff_to_next = pairs.get(i + 1).map(|(_, next)| {
                let d = round_half_away(&BigRational::new(fine - next, guard_scale.clone()));
                format_scaled(&d, digits)
            });
            TrendRow {
                n: lo + i as u64,
                ratio: format_scaled(shown, digits),
                ratio_scaled: shown.clone(),
                diff_to_next,
            }
        })
        .collect();

    let printed = |n: u64| rows[(n - lo) as usize].ratio_scaled.clone();
    let as_witness = |m: BigInt| Witness::Rational(BigRational::new(m, pow10(u64::from(digits))));
    let last = hi.saturating_sub(1).max(lo);
    let mut check = run_check(
        "root-ratio-printed-decreasing",
        lo,
        last,
        false,
        |n| {
            if n >= hi {
                return Ok(Ordering::Greater);
            }
            Ok(printed(n).cmp(&printed(n + 1)))
        },
        |n| Ok((as_witness(printed(n)), as_witness(printed(n + 1)))),
    )?;
    check.hi = hi;

    let distance = &printed(hi) - pow10(u64::from(digits));
    Ok(RootRatioTrend {
        digits,
        rows,
        check,
        distance_to_one: format_scaled(&distance, digits),
    })
}

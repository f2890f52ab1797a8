use num_bigint::BigInt;
use num_traits::Pow;

use super::{check_range, needs_predecessor, run_check, CheckResult, Direction};
use crate::arith::{pow_cmp, pow_diff, power_product_cmp};
use crate::error::{Error, Result};
use crate::report::Witness;
use crate::sequence::TermStore;

fn exponent(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Domain(format!("exponent {n} does not fit in 32 bits")))
}

/// Monotonicity of `z_n^(1/n)`: compares `z_n^(n+1)` with `z_{n+1}^n` for
/// every `n` in `[lo, hi]`.
pub fn check_root_monotone(
    store: &TermStore,
    lo: u64,
    hi: u64,
    direction: Direction,
) -> Result<CheckResult> {
    check_range(lo, hi)?;
    needs_predecessor(lo, hi)?;
    for n in lo..=hi + 1 {
        store.positive(n)?;
    }
    let property = match direction {
        Direction::Increasing => "root-increasing",
        Direction::Decreasing => "root-decreasing",
    };
    run_check(
        property,
        lo,
        hi,
        true,
        |n| {
            let (a, b) = (store.term(n)?, store.term(n + 1)?);
            let (p, q) = (exponent(n + 1)?, exponent(n)?);
            Ok(match direction {
                Direction::Increasing => pow_cmp(b, q, a, p),
                Direction::Decreasing => pow_cmp(a, p, b, q),
            })
        },
        |n| {
            let (a, b) = (store.term(n)?, store.term(n + 1)?);
            Ok((
                Pow::pow(a, exponent(n + 1)?).into(),
                Pow::pow(b, exponent(n)?).into(),
            ))
        },
    )
}

/// Exact `z_n^(n+1) - z_{n+1}^n` for `n` in `[lo, hi]`; negative values mean
/// `z_n^(1/n)` increases at `n`.
pub fn root_power_differences(store: &TermStore, lo: u64, hi: u64) -> Result<Vec<(u64, BigInt)>> {
    check_range(lo, hi)?;
    store.require(lo, hi + 1)?;
    (lo..=hi)
        .map(|n| {
            let d = pow_diff(
                store.term(n)?,
                exponent(n + 1)?,
                store.term(n + 1)?,
                exponent(n)?,
            );
            Ok((n, d))
        })
        .collect()
}

/// Strict decrease of `q_n = z_{n+1}^(1/(n+1)) / z_n^(1/n)` over
/// `n` in `[lo, hi]`, i.e. strict log-concavity of `z_m^(1/m)` at
/// `m = n + 1`. Index `n` in the result refers to `q_n > q_{n+1}`, decided as
/// `z_m^(2(m-1)(m+1)) > z_{m-1}^(m(m+1)) · z_{m+1}^(m(m-1))` in integers.
pub fn check_root_log_concave(store: &TermStore, lo: u64, hi: u64) -> Result<CheckResult> {
    check_range(lo, hi)?;
    needs_predecessor(lo, hi)?;
    for n in lo..=hi + 2 {
        store.positive(n)?;
    }
    let exps = |n: u64| -> Result<(u32, u32, u32)> {
        let m = n + 1;
        Ok((
            exponent(2 * (m - 1) * (m + 1))?,
            exponent(m * (m + 1))?,
            exponent(m * (m - 1))?,
        ))
    };
    run_check(
        "root-log-concave",
        lo,
        hi,
        true,
        |n| {
            let (c, l, r) = exps(n)?;
            let center = [(store.term(n + 1)?, c)];
            let outer = [(store.term(n)?, l), (store.term(n + 2)?, r)];
            Ok(power_product_cmp(&center, &outer))
        },
        |n| {
            let (c, l, r) = exps(n)?;
            let center = Pow::pow(store.term(n + 1)?, c);
            let outer = Pow::pow(store.term(n)?, l) * Pow::pow(store.term(n + 2)?, r);
            Ok((Witness::Integer(center), Witness::Integer(outer)))
        },
    )
}

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::{format_scaled, log2_abs, pow10};
use crate::error::{Error, Result};

/// Floor of the `n`-th root of `x`, certified by `r^n <= x < (r+1)^n`.
///
/// Starts from a floating-point estimate taken slightly above the root and
/// runs Newton's iteration downward; the final bracket is checked exactly.
pub fn int_nth_root(x: &BigInt, n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("zeroth root".into()));
    }
    if x.is_negative() {
        return Err(Error::Domain(format!("{n}-th root of negative {x}")));
    }
    if n == 1 || x < &BigInt::from(2) {
        return Ok(x.clone());
    }

    let est_log2 = log2_abs(x) / f64::from(n);
    let mut r = if est_log2 < 50.0 {
        // small roots: nudge a float estimate into place
        let guess = BigInt::from(est_log2.exp2().floor() as u64);
        settle(x, n, guess)
    } else {
        // above the root by a relative margin that dwarfs the float error
        let shift = (est_log2 - 52.0).floor() as u64;
        let mantissa = (est_log2 - shift as f64).exp2() * (1.0 + 1e-9) + 2.0;
        let mut r = BigInt::from(mantissa as u64) << shift;
        while Pow::pow(&r, n) <= *x {
            r <<= 1;
        }
        let n_big = BigInt::from(n);
        let n1 = BigInt::from(n - 1);
        loop {
            let next = (&n1 * &r + x / Pow::pow(&r, n - 1)) / &n_big;
            if next >= r {
                break;
            }
            r = next;
        }
        settle(x, n, r)
    };
    debug_assert!(Pow::pow(&r, n) <= *x);
    if Pow::pow(&r, n) > *x {
        r = settle(x, n, r);
    }
    Ok(r)
}

fn settle(x: &BigInt, n: u32, mut r: BigInt) -> BigInt {
    while Pow::pow(&r, n) > *x {
        r -= 1;
    }
    loop {
        let up = &r + 1u32;
        if Pow::pow(&up, n) <= *x {
            r = up;
        } else {
            return r;
        }
    }
}

/// `round(10^digits · (p/q)^(1/n))`, rounded half away from zero and exact.
///
/// The floor comes from a certified integer root; the rounding direction is
/// decided by comparing `(2f+1)^n · q` against `p · 10^(n·digits) · 2^n`.
pub fn rational_root_scaled(p: &BigInt, q: &BigInt, n: u32, digits: u32) -> Result<BigInt> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if p.is_negative() != q.is_negative() && !p.is_zero() {
        return Err(Error::Domain("root of a negative rational".into()));
    }
    let (p, q) = (p.abs(), q.abs());
    let scaled = &p * pow10(u64::from(n) * u64::from(digits));
    let floor = int_nth_root(&(&scaled / &q), n)?;
    let twice = &floor * 2u32 + 1u32;
    let lhs = Pow::pow(&twice, n) * &q;
    let rhs = scaled << n as usize;
    Ok(if lhs <= rhs { floor + 1u32 } else { floor })
}

/// Decimal rendering of `x^(1/n)` with `digits` fractional digits.
pub fn nth_root_decimal(x: &BigInt, n: u32, digits: u32) -> Result<String> {
    let m = rational_root_scaled(x, &BigInt::one(), n, digits)?;
    Ok(format_scaled(&m, digits))
}

/// Exact `a^p - b^q`.
pub fn pow_diff(a: &BigInt, p: u32, b: &BigInt, q: u32) -> BigInt {
    Pow::pow(a, p) - Pow::pow(b, q)
}

/// Ordering of `a^p` against `b^q`.
pub fn pow_cmp(a: &BigInt, p: u32, b: &BigInt, q: u32) -> Ordering {
    power_product_cmp(&[(a, p)], &[(b, q)])
}

/// Ordering of `∏ lhs_i^e_i` against `∏ rhs_j^f_j` for positive bases.
///
/// A bit-length bracket and then a logarithmic estimate with an explicit
/// error budget settle most cases; anything within the budget is decided by
/// exact powering.
pub fn power_product_cmp(lhs: &[(&BigInt, u32)], rhs: &[(&BigInt, u32)]) -> Ordering {
    let positive = lhs.iter().chain(rhs).all(|(b, _)| b.is_positive());
    if positive {
        if let Some(ord) = bit_bracket(lhs, rhs) {
            return ord;
        }
        if let Some(ord) = log_estimate(lhs, rhs) {
            return ord;
        }
    }
    exact_product(lhs).cmp(&exact_product(rhs))
}

fn exact_product(factors: &[(&BigInt, u32)]) -> BigInt {
    factors
        .iter()
        .fold(BigInt::one(), |acc, (b, e)| acc * Pow::pow(*b, *e))
}

/// `x^e` has between `e·(bits-1)+1` and `e·bits` bits.
fn bit_bracket(lhs: &[(&BigInt, u32)], rhs: &[(&BigInt, u32)]) -> Option<Ordering> {
    let bounds = |fs: &[(&BigInt, u32)]| -> (u128, u128) {
        let mut lo = 0u128;
        let mut hi = 0u128;
        for (b, e) in fs {
            let bits = u128::from(b.bits());
            let e = u128::from(*e);
            lo += e * (bits - 1);
            hi += e * bits;
        }
        // the product lies in [2^lo, 2^hi]; closed above for empty exponents
        (lo, hi)
    };
    let (llo, lhi) = bounds(lhs);
    let (rlo, rhi) = bounds(rhs);
    if lhi < rlo {
        Some(Ordering::Less)
    } else if rhi < llo {
        Some(Ordering::Greater)
    } else {
        None
    }
}

/// log2 of each base is split into an exact integer shift and the float log
/// of its top 64 bits. Each float log is off by at most ~3e-14 (truncation,
/// conversion and `log2` rounding), scaled by its exponent; sums add a
/// relative 1e-15. The budget below is an order of magnitude above that.
fn log_estimate(lhs: &[(&BigInt, u32)], rhs: &[(&BigInt, u32)]) -> Option<Ordering> {
    let split = |fs: &[(&BigInt, u32)]| -> (i128, f64, f64) {
        let mut int_part = 0i128;
        let mut frac = 0f64;
        let mut weight = 0f64;
        for (b, e) in fs {
            let shift = b.bits().saturating_sub(64);
            let top: BigInt = (*b).clone() >> shift;
            let v = top.magnitude().iter_u64_digits().next().unwrap_or(1) as f64;
            int_part += i128::from(*e) * i128::from(shift);
            frac += f64::from(*e) * v.log2();
            weight += f64::from(*e);
        }
        (int_part, frac, weight)
    };
    let (li, lf, lw) = split(lhs);
    let (ri, rf, rw) = split(rhs);
    let int_diff = (li - ri) as f64;
    let diff = int_diff + (lf - rf);
    let budget = 1e-12 * (lw + rw) + 1e-14 * (lf.abs() + rf.abs() + int_diff.abs()) + 1e-9;
    if diff > budget {
        Some(Ordering::Greater)
    } else if diff < -budget {
        Some(Ordering::Less)
    } else {
        None
    }
}

#[cfg(test)]
fn is_perfect_power(x: &BigInt, n: u32) -> bool {
    int_nth_root(x, n)
        .map(|r| Pow::pow(&r, n) == *x)
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn root_examples() {
        assert_eq!(
            int_nth_root(&BigInt::from(87), 1).unwrap(),
            BigInt::from(87)
        );
        assert_eq!(
            int_nth_root(&BigInt::from(624), 2).unwrap(),
            BigInt::from(24)
        );
        assert_eq!(
            int_nth_root(&BigInt::from(625), 2).unwrap(),
            BigInt::from(25)
        );
        assert_eq!(
            int_nth_root(&big("1000000000000000000"), 3).unwrap(),
            BigInt::from(1_000_000)
        );
        assert!(int_nth_root(&BigInt::from(-8), 3).is_err());
        assert!(int_nth_root(&BigInt::from(8), 0).is_err());
        assert!(is_perfect_power(&BigInt::from(1024), 10));
    }

    #[test]
    fn large_roots_match_num_integer() {
        let x = Pow::pow(&BigInt::from(3242377), 37u32) + 12345u32;
        for n in [2u32, 3, 7, 36, 37, 38, 500] {
            assert_eq!(int_nth_root(&x, n).unwrap(), x.nth_root(n), "n={n}");
        }
        let y = Pow::pow(&BigInt::from(10), 4000u32) - 1u32;
        assert_eq!(int_nth_root(&y, 2).unwrap(), y.sqrt());
        assert_eq!(int_nth_root(&y, 1000).unwrap(), BigInt::from(9999));
    }

    #[test]
    fn root_decimals() {
        assert_eq!(nth_root_decimal(&BigInt::from(4), 2, 5).unwrap(), "2.00000");
        assert_eq!(nth_root_decimal(&BigInt::from(2), 2, 5).unwrap(), "1.41421");
        // mpmath at 30 digits: 1359^(1/6) = 3.32815269014...
        assert_eq!(
            nth_root_decimal(&BigInt::from(1359), 6, 6).unwrap(),
            "3.328153"
        );
        // 1.5^2 = 2.25 rounds half away at 1 digit
        assert_eq!(nth_root_decimal(&BigInt::from(225), 2, 0).unwrap(), "15");
        assert_eq!(
            rational_root_scaled(&BigInt::from(9), &BigInt::from(4), 2, 1).unwrap(),
            BigInt::from(15)
        );
    }

    #[test]
    fn power_comparisons_from_the_small_cases() {
        let r = [1i64, 7, 25, 87, 329, 1359];
        let expect = ["-6", "-282", "-267878", "-6731904874", "-3367343548629278"];
        for i in 0..5 {
            let (a, b) = (BigInt::from(r[i]), BigInt::from(r[i + 1]));
            let n = i as u32 + 1;
            assert_eq!(pow_diff(&a, n + 1, &b, n), big(expect[i]));
            assert_eq!(pow_cmp(&a, n + 1, &b, n), Ordering::Less);
        }
    }

    #[test]
    fn equal_powers_fall_through_to_exact() {
        let a = BigInt::from(8);
        let b = BigInt::from(4);
        assert_eq!(pow_cmp(&a, 2, &b, 3), Ordering::Equal);
        let big_a = Pow::pow(&BigInt::from(6001), 6u32);
        let big_b = Pow::pow(&BigInt::from(6001), 4u32);
        assert_eq!(pow_cmp(&big_a, 2, &big_b, 3), Ordering::Equal);
    }
}

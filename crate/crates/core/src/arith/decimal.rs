//! Correctly rounded decimal rendering of rationals and Q(√2) elements.
//!
//! Every routine here produces the exact round-half-away-from-zero result: a
//! fixed-precision estimate (√2 from an integer square root with guard
//! digits) is corrected with exact sign tests before rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{int_nth_root, log10_rational_abs, pow10, rat_floor, QuadNumber};

const SQRT2_GUARD: u64 = 10;

/// Nearest integer, ties away from zero.
pub fn round_half_away(x: &BigRational) -> BigInt {
    let half = BigRational::new(1.into(), 2.into());
    if x.is_negative() {
        -rat_floor(&(-x + &half))
    } else {
        rat_floor(&(x + &half))
    }
}

/// Render `m · 10^-digits` as a fixed-point decimal string.
pub fn format_scaled(m: &BigInt, digits: u32) -> String {
    let neg = m.is_negative();
    let mut s = m.abs().to_string();
    let d = digits as usize;
    if d > 0 {
        if s.len() <= d {
            s = format!("{}{}", "0".repeat(d + 1 - s.len()), s);
        }
        s.insert(s.len() - d, '.');
    }
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

pub fn rational_to_decimal(x: &BigRational, digits: u32) -> String {
    let scaled = x * BigRational::from_integer(pow10(u64::from(digits)));
    format_scaled(&round_half_away(&scaled), digits)
}

pub fn rational_to_scientific(x: &BigRational, sig: u32) -> String {
    quad_to_scientific(&QuadNumber::from_rational(x.clone()), sig)
}

/// Exact floor of `a + b√2`.
pub(crate) fn quad_floor(x: &QuadNumber) -> BigInt {
    let b_digits = if x.b().is_zero() {
        0
    } else {
        log10_rational_abs(x.b()).max(0.0).ceil() as u64
    };
    let p = SQRT2_GUARD + b_digits + 1;
    let scale = pow10(p);
    let sqrt2_scaled = int_nth_root(&(BigInt::from(2) * &scale * &scale), 2)
        .expect("square root of a positive integer");
    let approx = x.a() + x.b() * BigRational::new(sqrt2_scaled, scale);
    let mut f = rat_floor(&approx);
    let at = |k: &BigInt| (x - &QuadNumber::from_integer(k.clone())).sign();
    while at(&f) < 0 {
        f -= 1;
    }
    while at(&(&f + 1)) >= 0 {
        f += 1;
    }
    f
}

fn scale_pow10(x: &QuadNumber, k: i64) -> QuadNumber {
    let factor = if k >= 0 {
        BigRational::from_integer(pow10(k as u64))
    } else {
        BigRational::new(1.into(), pow10(k.unsigned_abs()))
    };
    x.scale(&factor)
}

fn quad_round(x: &QuadNumber) -> BigInt {
    let half = QuadNumber::from_rational(BigRational::new(1.into(), 2.into()));
    if x.sign() < 0 {
        -quad_floor(&(&(-x) + &half))
    } else {
        quad_floor(&(x + &half))
    }
}

/// `round(x · 10^digits)`, ties away from zero.
pub fn quad_round_scaled(x: &QuadNumber, digits: u32) -> BigInt {
    quad_round(&scale_pow10(x, i64::from(digits)))
}

pub fn quad_to_decimal(x: &QuadNumber, digits: u32) -> String {
    format_scaled(&quad_round_scaled(x, digits), digits)
}

/// Rough log10|x| for x != 0. Cancellation between the parts is avoided by
/// going through the norm when they have opposite signs.
fn log10_estimate(x: &QuadNumber) -> f64 {
    fn same_sign(a: &BigRational, b: &BigRational) -> f64 {
        let sqrt2 = std::f64::consts::SQRT_2.log10();
        match (a.is_zero(), b.is_zero()) {
            (true, _) => log10_rational_abs(b) + sqrt2,
            (_, true) => log10_rational_abs(a),
            _ => {
                let la = log10_rational_abs(a);
                let lb = log10_rational_abs(b) + sqrt2;
                let (hi, lo) = if la > lb { (la, lb) } else { (lb, la) };
                hi + (1.0 + 10f64.powf(lo - hi)).log10()
            }
        }
    }
    if x.a().is_positive() == x.b().is_positive() || x.a().is_zero() || x.b().is_zero() {
        same_sign(x.a(), x.b())
    } else {
        log10_rational_abs(&x.norm()) - same_sign(x.a(), &-x.b().clone())
    }
}

/// Scientific notation with `sig` significant digits and trailing zeros of
/// the mantissa trimmed, e.g. `-1.5798e8` or `6.41905e9`.
pub fn quad_to_scientific(x: &QuadNumber, sig: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let y = x.abs();
    let mut e = log10_estimate(&y).floor() as i64;
    let power = |e: i64| scale_pow10(&QuadNumber::one(), e);
    while y < power(e) {
        e -= 1;
    }
    while y >= power(e + 1) {
        e += 1;
    }
    let mut m = quad_round(&scale_pow10(&y, i64::from(sig) - 1 - e));
    if m == pow10(u64::from(sig)) {
        m /= 10;
        e += 1;
    }
    let digits = m.to_string();
    let (lead, rest) = digits.split_at(1);
    let rest = rest.trim_end_matches('0');
    let sign = if x.sign() < 0 { "-" } else { "" };
    if rest.is_empty() {
        format!("{sign}{lead}e{e}")
    } else {
        format!("{sign}{lead}.{rest}e{e}")
    }
}

//! Exact arithmetic: big integers and rationals (re-exported from `num`),
//! the quadratic field Q(√2), certified integer roots and decimal rendering.

mod decimal;
mod quad;
mod roots;

pub use num_bigint::{BigInt, Sign};
pub use num_rational::BigRational;

pub use decimal::{
    format_scaled, quad_round_scaled, quad_to_decimal, quad_to_scientific, rational_to_decimal,
    rational_to_scientific, round_half_away,
};
pub use quad::QuadNumber;
pub use roots::{
    int_nth_root, nth_root_decimal, pow_cmp, pow_diff, power_product_cmp, rational_root_scaled,
};

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Shorthand for the rational `num/den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Binary operations on rationals with a fallible division.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(x: &BigRational, y: &BigRational, op: RatOp) -> Result<BigRational> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x / y
        }
    })
}

pub fn rat_cmp(x: &BigRational, y: &BigRational) -> Ordering {
    x.cmp(y)
}

/// Sign of a rational as -1, 0 or +1.
pub(crate) fn rat_sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn pow10(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// Floor of a rational.
pub(crate) fn rat_floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Approximate log2 of |x| for x != 0, accurate to about 1e-15 relative in the
/// fractional part. Only ever used to choose starting points or as a
/// prefilter whose error is bounded separately.
pub(crate) fn log2_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        let v = x.magnitude().iter_u64_digits().next().unwrap_or(0);
        return (v as f64).log2();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    let v = top.magnitude().iter_u64_digits().next().unwrap_or(1);
    (v as f64).log2() + shift as f64
}

pub(crate) fn log10_rational_abs(x: &BigRational) -> f64 {
    (log2_abs(x.numer()) - log2_abs(x.denom())) * std::f64::consts::LOG10_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_examples() {
        assert_eq!(
            rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(),
            rat(5, 6)
        );
        let half = rat(2, 4);
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        assert_eq!(rat_cmp(&rat(87, 25), &rat(329, 87)), Ordering::Less);
        assert!(matches!(
            rat_arith(&rat(1, 2), &int(0), RatOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_form_has_positive_denominator() {
        let x = BigRational::new(BigInt::from(3), BigInt::from(-6));
        assert_eq!(x.numer(), &BigInt::from(-1));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn log2_estimate() {
        let x = num_traits::pow(BigInt::from(3), 500);
        let exact = 500.0 * 3f64.log2();
        assert!((log2_abs(&x) - exact).abs() < 1e-9);
        assert_eq!(log2_abs(&BigInt::from(8)), 3.0);
    }
}

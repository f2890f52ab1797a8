use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rat_sign;
use crate::error::{Error, Result};

/// An element `a + b√2` of the quadratic field Q(√2).
///
/// Both parts are canonical rationals, so the representation is unique and
/// structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNumber {
    a: BigRational,
    b: BigRational,
}

impl QuadNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadNumber { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadNumber::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadNumber::new(a, BigRational::zero())
    }

    pub fn from_integer(a: BigInt) -> Self {
        QuadNumber::from_rational(BigRational::from_integer(a))
    }

    pub fn sqrt2() -> Self {
        QuadNumber::from_ints(0, 1)
    }

    pub fn zero() -> Self {
        QuadNumber::from_ints(0, 0)
    }

    pub fn one() -> Self {
        QuadNumber::from_ints(1, 0)
    }

    /// Rational part.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √2.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b√2`.
    pub fn conj(&self) -> Self {
        QuadNumber::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 2b²`, zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadNumber::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, other: &QuadNumber) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuadNumber::new(&self.a * k, &self.b * k)
    }

    /// Exact sign of the real number `a + b√2`.
    ///
    /// When the parts disagree in sign the one with the larger square
    /// (`a²` against `2b²`) decides; equality there forces both to be zero.
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(2.into()) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadNumber::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Floating-point approximation, for display heuristics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }

    /// Exact rendering with the rational content pulled out, e.g.
    /// `-3(4647+3328√2)` or `9/2+3√2`.
    pub fn factored(&self) -> String {
        if self.a.is_zero() || self.b.is_zero() {
            return self.to_string();
        }
        let num_gcd = self.a.numer().gcd(self.b.numer());
        let den_lcm = self.a.denom().lcm(self.b.denom());
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.a.is_negative() {
            content = -content;
        }
        if content.is_one() {
            return self.to_string();
        }
        let inner = self.scale(&content.recip());
        if (-content.clone()).is_one() {
            return format!("-({inner})");
        }
        format!("{content}({inner})")
    }
}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b_part = |b: &BigRational| -> String {
            if b.is_one() {
                "√2".to_string()
            } else if (-b.clone()).is_one() {
                "-√2".to_string()
            } else {
                format!("{b}√2")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}", b_part(&self.b)),
            (false, false) => {
                let b = b_part(&self.b);
                if b.starts_with('-') {
                    write!(f, "{}{}", self.a, b)
                } else {
                    write!(f, "{}+{}", self.a, b)
                }
            }
        }
    }
}

impl PartialOrd for QuadNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl From<BigRational> for QuadNumber {
    fn from(a: BigRational) -> Self {
        QuadNumber::from_rational(a)
    }
}

impl From<BigInt> for QuadNumber {
    fn from(a: BigInt) -> Self {
        QuadNumber::from_integer(a)
    }
}

impl From<i64> for QuadNumber {
    fn from(a: i64) -> Self {
        QuadNumber::from_ints(a, 0)
    }
}

impl<'a> Add<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;
    fn add(self, rhs: &'a QuadNumber) -> QuadNumber {
        QuadNumber::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;
    fn sub(self, rhs: &'a QuadNumber) -> QuadNumber {
        QuadNumber::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;
    fn mul(self, rhs: &'a QuadNumber) -> QuadNumber {
        let two = BigRational::from_integer(2.into());
        QuadNumber::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &QuadNumber {
    type Output = QuadNumber;
    fn neg(self) -> QuadNumber {
        QuadNumber::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for QuadNumber {
    type Output = QuadNumber;
    fn neg(self) -> QuadNumber {
        QuadNumber::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadNumber> for QuadNumber {
            type Output = QuadNumber;
            fn $m(self, rhs: QuadNumber) -> QuadNumber { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a QuadNumber> for QuadNumber {
            type Output = QuadNumber;
            fn $m(self, rhs: &'a QuadNumber) -> QuadNumber { (&self).$m(rhs) }
        }
        impl<'a> $tr<QuadNumber> for &'a QuadNumber {
            type Output = QuadNumber;
            fn $m(self, rhs: QuadNumber) -> QuadNumber { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q(a: i64, b: i64) -> QuadNumber {
        QuadNumber::from_ints(a, b)
    }

    #[test]
    fn conjugate_identity_and_inverse() {
        assert_eq!(q(3, 2) * q(3, -2), QuadNumber::one());
        assert_eq!(q(3, 2).inv().unwrap(), q(3, -2));
        assert_eq!(q(1, 1) * q(1, 1), q(3, 2));
        assert!(matches!(
            QuadNumber::zero().inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn powers() {
        assert_eq!(q(1, 1).pow(0), QuadNumber::one());
        assert_eq!(q(1, 1).pow(2), q(3, 2));
        // (3+2√2)^3 by repeated multiplication
        let cube = q(3, 2) * q(3, 2) * q(3, 2);
        assert_eq!(cube, q(99, 70));
        assert_eq!(q(3, 2).pow(3), q(99, 70));
    }

    #[test]
    fn signs() {
        assert_eq!(q(3, -2).sign(), 1);
        assert_eq!(q(1, -1).sign(), -1);
        assert_eq!(QuadNumber::zero().sign(), 0);
        let b3 = QuadNumber::new(rat(3, 2), rat(1, 1));
        let r3 = QuadNumber::from_rational(rat(87, 25));
        assert_eq!((b3 - r3).sign(), -1);
    }

    #[test]
    fn factored_rendering() {
        assert_eq!(q(-13941, -9984).factored(), "-3(4647+3328√2)");
        assert_eq!(q(1881, 1242).factored(), "9(209+138√2)");
        assert_eq!(q(3, 2).factored(), "3+2√2");
        assert_eq!(
            QuadNumber::new(rat(9, 2), rat(3, 1)).factored(),
            "3/2(3+2√2)"
        );
        assert_eq!(q(1, -1).to_string(), "1-√2");
    }
}

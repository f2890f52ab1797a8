use std::fmt;

use super::QuadPolynomial;
use crate::arith::QuadNumber;
use crate::error::{Error, Result};

/// Quotient of polynomials over Q(√2), reduced by their gcd with a monic
/// denominator. Equality is decided by cross-multiplication either way.
#[derive(Clone, Debug)]
pub struct QuadRationalFunction {
    numer: QuadPolynomial,
    denom: QuadPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl QuadRationalFunction {
    pub fn new(numer: QuadPolynomial, denom: QuadPolynomial) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = QuadPolynomial::gcd(&numer, &denom);
        let (numer, denom) = if g.degree().unwrap_or(0) > 0 {
            (numer.div_rem(&g)?.0, denom.div_rem(&g)?.0)
        } else {
            (numer, denom)
        };
        let lead = denom.leading().expect("nonzero denominator").inv()?;
        Ok(QuadRationalFunction {
            numer: numer.scale(&lead),
            denom: denom.scale(&lead),
        })
    }

    pub fn from_poly(p: QuadPolynomial) -> Self {
        QuadRationalFunction {
            numer: p,
            denom: QuadPolynomial::one(),
        }
    }

    pub fn constant(c: QuadNumber) -> Self {
        QuadRationalFunction::from_poly(QuadPolynomial::constant(c))
    }

    pub fn numer(&self) -> &QuadPolynomial {
        &self.numer
    }

    pub fn denom(&self) -> &QuadPolynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn eval(&self, x: &QuadNumber) -> Result<QuadNumber> {
        self.numer.eval(x).checked_div(&self.denom.eval(x))
    }

    pub fn arith(&self, other: &QuadRationalFunction, op: RfOp) -> Result<Self> {
        let (a, b, c, d) = (&self.numer, &self.denom, &other.numer, &other.denom);
        match op {
            RfOp::Add => Self::new(&(a * d) + &(c * b), b * d),
            RfOp::Sub => Self::new(&(a * d) - &(c * b), b * d),
            RfOp::Mul => Self::new(a * c, b * d),
            RfOp::Div => {
                if other.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Self::new(a * d, b * c)
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.arith(other, RfOp::Add).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.arith(other, RfOp::Sub).expect("nonzero denominators")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.arith(other, RfOp::Mul).expect("nonzero denominators")
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.arith(other, RfOp::Div)
    }

    pub fn scale_poly(&self, p: &QuadPolynomial) -> Self {
        self.mul(&QuadRationalFunction::from_poly(p.clone()))
    }

    /// `self = other` as a polynomial identity `a·d = c·b`.
    pub fn equals(&self, other: &Self) -> bool {
        self.cross_difference(other).is_zero()
    }

    /// `a·d - c·b`; zero exactly when the two functions are equal.
    pub fn cross_difference(&self, other: &Self) -> QuadPolynomial {
        &(&self.numer * &other.denom) - &(&other.numer * &self.denom)
    }
}

impl PartialEq for QuadRationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for QuadRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == QuadPolynomial::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

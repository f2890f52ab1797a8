use num_bigint::BigInt;
use num_rational::BigRational;

use super::{QuadPolynomial, QuadRationalFunction};
use crate::arith::{rat, QuadNumber};
use crate::error::{Error, Result};

/// `b(n) = c0 + c1/n` with coefficients in Q(√2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundFunction {
    pub c0: QuadNumber,
    pub c1: QuadNumber,
}

impl BoundFunction {
    pub fn new(c0: QuadNumber, c1: QuadNumber) -> Self {
        BoundFunction { c0, c1 }
    }

    /// The interlacing bound for the ratios of `R`:
    /// `c0 = 3 + 2√2`, `c1 = -9/2 - 3√2`.
    pub fn sandwich() -> Self {
        BoundFunction {
            c0: QuadNumber::from_ints(3, 2),
            c1: QuadNumber::new(rat(-9, 2), rat(-3, 1)),
        }
    }

    /// Same shape with `delta` added to the constant term.
    pub fn offset(&self, delta: &QuadNumber) -> Self {
        BoundFunction {
            c0: &self.c0 + delta,
            c1: self.c1.clone(),
        }
    }

    /// `c0 + c1/n`; undefined at `n = 0`.
    pub fn eval(&self, n: u64) -> Result<QuadNumber> {
        if n == 0 {
            return Err(Error::Domain("bound evaluated at n = 0".into()));
        }
        let inv = BigRational::new(BigInt::from(1), BigInt::from(n));
        Ok(&self.c0 + &self.c1.scale(&inv))
    }

    /// `b(k + j)` as a rational function of `k`.
    pub fn shifted(&self, j: i64) -> QuadRationalFunction {
        let lin = QuadPolynomial::x_plus(j);
        let numer = &lin.scale(&self.c0) + &QuadPolynomial::constant(self.c1.clone());
        QuadRationalFunction::new(numer, lin).expect("k + j is a nonzero polynomial")
    }

    /// `b(n+1) - b(n) = -c1 / (n(n+1))`.
    pub fn gap(&self, n: u64) -> Result<QuadNumber> {
        Ok(&self.eval(n + 1)? - &self.eval(n)?)
    }
}

/// Shorthand for [`BoundFunction::eval`].
pub fn eval_bound(b: &BoundFunction, n: u64) -> Result<QuadNumber> {
    b.eval(n)
}

/// The interlacing bound also appears as
/// `3 + 2√2 - 3(41√2 + 58)/((14√2 + 20) n)`; confirm both forms give the
/// same `c1`.
pub fn sandwich_forms_agree() -> bool {
    let num = QuadNumber::from_ints(58, 41).scale(&rat(3, 1));
    let den = QuadNumber::from_ints(20, 14);
    match num.checked_div(&den) {
        Ok(q) => -q == BoundFunction::sandwich().c1,
        Err(_) => false,
    }
}

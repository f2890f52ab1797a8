use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::QuadNumber;
use crate::error::{Error, Result};

/// Univariate polynomial over Q(√2), coefficients in ascending degree, with
/// no trailing zero coefficients (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadPolynomial {
    coeffs: Vec<QuadNumber>,
}

impl QuadPolynomial {
    pub fn new(mut coeffs: Vec<QuadNumber>) -> Self {
        while coeffs.last().is_some_and(QuadNumber::is_zero) {
            coeffs.pop();
        }
        QuadPolynomial { coeffs }
    }

    /// Coefficients as `(a, b)` integer pairs for `a + b√2`, ascending.
    pub fn from_int_pairs(pairs: &[(i64, i64)]) -> Self {
        QuadPolynomial::new(
            pairs
                .iter()
                .map(|&(a, b)| QuadNumber::from_ints(a, b))
                .collect(),
        )
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QuadPolynomial::new(coeffs.iter().map(|&c| QuadNumber::from(c)).collect())
    }

    pub fn zero() -> Self {
        QuadPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: QuadNumber) -> Self {
        QuadPolynomial::new(vec![c])
    }

    pub fn one() -> Self {
        QuadPolynomial::constant(QuadNumber::one())
    }

    /// `x + c`
    pub fn x_plus(c: i64) -> Self {
        QuadPolynomial::from_ints(&[c, 1])
    }

    pub fn coeffs(&self) -> &[QuadNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> QuadNumber {
        self.coeffs
            .get(deg)
            .cloned()
            .unwrap_or_else(QuadNumber::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QuadNumber> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QuadNumber) -> Self {
        QuadPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &QuadNumber) -> QuadNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(QuadNumber::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_int(&self, x: i64) -> QuadNumber {
        self.eval(&QuadNumber::from(x))
    }

    /// `p(x + k)`, by Horner's scheme in polynomial arithmetic.
    pub fn shift(&self, k: &QuadNumber) -> Self {
        let lin = QuadPolynomial::new(vec![k.clone(), QuadNumber::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(QuadPolynomial::zero(), |acc, c| {
                &(&acc * &lin) + &QuadPolynomial::constant(c.clone())
            })
    }

    pub fn derivative(&self) -> Self {
        QuadPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &QuadNumber::from(i as i64))
                .collect(),
        )
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division over the field Q(√2).
    pub fn div_rem(&self, divisor: &QuadPolynomial) -> Result<(QuadPolynomial, QuadPolynomial)> {
        let (dd, lead_inv) = match (divisor.degree(), divisor.leading()) {
            (Some(d), Some(l)) => (d, l.inv()?),
            _ => return Err(Error::DivisionByZero),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QuadNumber::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().expect("nonempty") * &lead_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(c * &factor);
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(QuadNumber::is_zero) {
                rem.pop();
            }
        }
        Ok((QuadPolynomial::new(quot), QuadPolynomial::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &QuadPolynomial, b: &QuadPolynomial) -> QuadPolynomial {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic()
    }

    fn fmt_with(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match deg {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{deg}"),
            };
            let text = if c.is_rational() {
                let s = c.to_string();
                match (s.as_str(), deg) {
                    ("1", d) if d > 0 => "+".to_string(),
                    ("-1", d) if d > 0 => "-".to_string(),
                    _ if s.starts_with('-') => s,
                    _ => format!("+{s}"),
                }
            } else {
                format!("+({})", c.factored())
            };
            let text = if first {
                text.trim_start_matches('+').to_string()
            } else {
                text
            };
            write!(f, "{text}{mono}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for QuadPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with("n", f)
    }
}

impl<'a> Add<&'a QuadPolynomial> for &'a QuadPolynomial {
    type Output = QuadPolynomial;
    fn add(self, rhs: &'a QuadPolynomial) -> QuadPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QuadPolynomial::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a QuadPolynomial> for &'a QuadPolynomial {
    type Output = QuadPolynomial;
    fn sub(self, rhs: &'a QuadPolynomial) -> QuadPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QuadPolynomial::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a QuadPolynomial> for &'a QuadPolynomial {
    type Output = QuadPolynomial;
    fn mul(self, rhs: &'a QuadPolynomial) -> QuadPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QuadPolynomial::zero();
        }
        let mut out = vec![QuadNumber::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QuadPolynomial::new(out)
    }
}

impl Neg for &QuadPolynomial {
    type Output = QuadPolynomial;
    fn neg(self) -> QuadPolynomial {
        QuadPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

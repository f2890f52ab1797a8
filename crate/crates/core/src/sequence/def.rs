use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in `n`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_u64(&self, n: u64) -> BigInt {
        self.eval(&BigInt::from(n))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let mono = match deg {
                0 => mag.to_string(),
                1 if mag == BigInt::from(1) => "n".to_string(),
                1 => format!("{mag}n"),
                _ if mag == BigInt::from(1) => format!("n^{deg}"),
                _ => format!("{mag}n^{deg}"),
            };
            write!(f, "{sign}{mono}")?;
            first = false;
        }
        Ok(())
    }
}

/// The binomial factors the summand grammar knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinomialKind {
    /// C(n, k)
    NChooseK,
    /// C(n+k, k)
    NPlusKChooseK,
    /// C(2k, k)
    CentralK,
}

impl BinomialKind {
    pub fn label(self) -> &'static str {
        match self {
            BinomialKind::NChooseK => "binom(n,k)",
            BinomialKind::NPlusKChooseK => "binom(n+k,k)",
            BinomialKind::CentralK => "binom(2k,k)",
        }
    }
}

/// `∏ binom^e · (αk+β) / (γk+δ)`, summed over `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialSummand {
    pub factors: Vec<(BinomialKind, u32)>,
    pub numerator: Option<(i64, i64)>,
    pub denominator: Option<(i64, i64)>,
}

impl BinomialSummand {
    pub fn validate(&self) -> Result<()> {
        if let Some((_, e)) = self.factors.iter().find(|(_, e)| *e == 0) {
            return Err(Error::Definition(format!(
                "binomial exponent {e} must be positive"
            )));
        }
        if let Some((0, 0)) = self.denominator {
            return Err(Error::Definition(
                "denominator γk+δ is identically zero".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for BinomialSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(kind, e)| {
                if *e == 1 {
                    kind.label().to_string()
                } else {
                    format!("{}^{e}", kind.label())
                }
            })
            .collect();
        if let Some((a, b)) = self.numerator {
            parts.push(format!("({a}k{b:+})"));
        }
        let mut s = parts.join("*");
        if let Some((c, d)) = self.denominator {
            s.push_str(&format!("/({c}k{d:+})"));
        }
        f.write_str(&s)
    }
}

/// `Σ_j c_j(n) z_{n+j} = 0` for `j = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Recurrence {
    coeffs: Vec<IntPoly>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<IntPoly>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Definition(
                "a recurrence needs at least two coefficient polynomials".into(),
            ));
        }
        if coeffs.last().is_some_and(IntPoly::is_zero) {
            return Err(Error::Definition(
                "leading coefficient polynomial is zero".into(),
            ));
        }
        Ok(Recurrence { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> &IntPoly {
        &self.coeffs[self.order()]
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| format!("({c})z[n+{j}]"))
            .collect();
        write!(f, "{} = 0", terms.join(" + "))
    }
}

/// A named integer sequence given by a binomial sum, a recurrence with seed
/// terms, or both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceDef {
    pub name: String,
    pub summand: Option<BinomialSummand>,
    pub recurrence: Option<Recurrence>,
    /// Seeds starting at index 0.
    pub initial_terms: Vec<BigInt>,
}

impl SequenceDef {
    pub fn new(
        name: impl Into<String>,
        summand: Option<BinomialSummand>,
        recurrence: Option<Recurrence>,
        initial_terms: Vec<BigInt>,
    ) -> Result<Self> {
        let def = SequenceDef {
            name: name.into(),
            summand,
            recurrence,
            initial_terms,
        };
        def.validate()?;
        Ok(def)
    }

    pub fn validate(&self) -> Result<()> {
        if self.name.is_empty()
            || !self
                .name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || "_-".contains(c))
        {
            return Err(Error::Definition(format!(
                "name `{}` must be a nonempty identifier",
                self.name
            )));
        }
        if self.summand.is_none() && self.recurrence.is_none() {
            return Err(Error::Definition(
                "at least one of summand or recurrence is required".into(),
            ));
        }
        if let Some(s) = &self.summand {
            s.validate()?;
        }
        if let Some(rec) = &self.recurrence {
            if self.initial_terms.len() < rec.order() {
                return Err(Error::Definition(format!(
                    "recurrence of order {} needs {} initial terms, got {}",
                    rec.order(),
                    rec.order(),
                    self.initial_terms.len()
                )));
            }
        }
        Ok(())
    }

    /// Stable textual form used to key cached term tables.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("name={}\n", self.name);
        if let Some(sum) = &self.summand {
            s.push_str(&format!("summand={sum}\n"));
        }
        if let Some(rec) = &self.recurrence {
            s.push_str(&format!("recurrence={rec}\n"));
        }
        let seeds: Vec<String> = self.initial_terms.iter().map(|t| t.to_string()).collect();
        s.push_str(&format!("seeds={}\n", seeds.join(",")));
        s
    }
}

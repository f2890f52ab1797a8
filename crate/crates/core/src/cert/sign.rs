use std::fmt;

use super::QuadPolynomial;
use crate::arith::{rat, QuadNumber};
use crate::error::{Error, Result};
use crate::report::{CertificateReport, StepStatus, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignMethod {
    /// All coefficients of `p(x + k0)` share one sign.
    ShiftTest,
    /// Leading coefficient, position of the axis of symmetry and the value
    /// at the nearer of `k0` and the vertex.
    QuadraticVertex,
}

impl fmt::Display for SignMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignMethod::ShiftTest => "shift test",
            SignMethod::QuadraticVertex => "quadratic vertex",
        })
    }
}

/// `p(x)` has constant sign for all real `x >= k0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCertificate {
    pub polynomial: QuadPolynomial,
    pub k0: i64,
    /// -1 or +1.
    pub sign: i8,
    /// `false` when `p` touches zero on the half-line.
    pub strict: bool,
    pub zero_at: Option<QuadNumber>,
    pub method: SignMethod,
    pub value_at_start: QuadNumber,
    /// `-b/(2a)` for quadratics.
    pub vertex: Option<QuadNumber>,
}

impl SignCertificate {
    pub fn is_positive(&self) -> bool {
        self.sign > 0 && self.strict
    }

    pub fn is_negative(&self) -> bool {
        self.sign < 0 && self.strict
    }

    pub fn report(&self, claim: impl Into<String>) -> CertificateReport {
        let mut r = CertificateReport::new(claim);
        r.push(
            format!("{} for x >= {} by {}", self, self.k0, self.method),
            "polynomial sign certificate",
            StepStatus::Certified,
            Witness::Quad(self.value_at_start.clone()),
        );
        r
    }
}

impl fmt::Display for SignCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match (self.sign > 0, self.strict) {
            (true, true) => "positive",
            (false, true) => "negative",
            (true, false) => "nonnegative",
            (false, false) => "nonpositive",
        };
        f.write_str(word)?;
        if let Some(z) = &self.zero_at {
            write!(f, ", zero at x={z}")?;
        }
        Ok(())
    }
}

/// Certify that `p` keeps one sign on `[k0, ∞)`.
///
/// The shift test is tried first and works for any degree. Quadratics that
/// fail it fall back to locating the vertex. Anything else is
/// [`Error::Inconclusive`]; the caller decides whether to move `k0`.
pub fn sign_beyond(p: &QuadPolynomial, k0: i64) -> Result<SignCertificate> {
    if p.is_zero() {
        return Err(Error::Inconclusive {
            k0,
            reason: "the zero polynomial has no sign".into(),
        });
    }
    let start = QuadNumber::from(k0);
    let value_at_start = p.eval(&start);
    let vertex = quadratic_vertex(p);
    let cert = |sign: i8, strict: bool, zero_at: Option<QuadNumber>, method| SignCertificate {
        polynomial: p.clone(),
        k0,
        sign,
        strict,
        zero_at,
        method,
        value_at_start: value_at_start.clone(),
        vertex: vertex.clone(),
    };

    let shifted = p.shift(&start);
    let signs: Vec<i8> = shifted.coeffs().iter().map(QuadNumber::sign).collect();
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    if nonzero.windows(2).all(|w| w[0] == w[1]) {
        let sign = nonzero[0];
        let strict = signs[0] != 0 || shifted.degree() == Some(0);
        let zero_at = (!strict).then(|| start.clone());
        return Ok(cert(sign, strict, zero_at, SignMethod::ShiftTest));
    }

    if let (Some(2), Some(v)) = (p.degree(), &vertex) {
        let lead = p.coeff(2).sign();
        // beyond the vertex p moves away from zero in the direction of `lead`
        let extreme = if *v <= start {
            start.clone()
        } else {
            v.clone()
        };
        let at = p.eval(&extreme);
        let s = at.sign();
        if s == lead {
            return Ok(cert(lead, true, None, SignMethod::QuadraticVertex));
        }
        if s == 0 {
            return Ok(cert(
                lead,
                false,
                Some(extreme),
                SignMethod::QuadraticVertex,
            ));
        }
    }
    Err(Error::Inconclusive {
        k0,
        reason: format!("no certificate for {p} on [{k0}, ∞)"),
    })
}

/// `-b/(2a)` of a quadratic `a x² + b x + c`.
pub fn quadratic_vertex(p: &QuadPolynomial) -> Option<QuadNumber> {
    if p.degree() != Some(2) {
        return None;
    }
    let a2 = p.coeff(2).scale(&rat(2, 1));
    (-&p.coeff(1)).checked_div(&a2).ok()
}

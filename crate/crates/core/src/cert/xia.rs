use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};
use rayon::prelude::*;

use super::{sign_beyond, BoundFunction, QuadPolynomial, QuadRationalFunction};
use crate::arith::{quad_to_scientific, QuadNumber};
use crate::error::{Error, Result};
use crate::report::{CertificateReport, Witness};
use crate::sequence::{ratio, TermStore};

/// Parameters of the criterion for strict log-concavity of `z_n^(1/n)`:
/// ratio bounds `f(n) = b(n - shift)`, a rational `k0` and a starting index
/// `n0`.
#[derive(Clone, Debug)]
pub struct XiaParameters {
    pub bound: BoundFunction,
    pub shift: u64,
    pub k0: BigRational,
    pub n0: u64,
    /// Closed form that `f(n+1)/f(n+3) - 1 + k0/(n²+n+2)` must reduce to.
    pub expected_reduction: Option<QuadRationalFunction>,
}

impl XiaParameters {
    /// `f(n) = b(n-1)` with the interlacing bound, `k0 = 4`, `n0 = 9`.
    pub fn for_r() -> Self {
        XiaParameters {
            bound: BoundFunction::sandwich(),
            shift: 1,
            k0: BigRational::from_integer(BigInt::from(4)),
            n0: 9,
            expected_reduction: Some(r_reduction()),
        }
    }

    pub fn with_k0(mut self, k0: BigRational) -> Self {
        if k0 != self.k0 {
            self.expected_reduction = None;
        }
        self.k0 = k0;
        self
    }

    pub fn with_n0(mut self, n0: u64) -> Self {
        self.n0 = n0;
        self
    }

    pub fn with_bound(mut self, bound: BoundFunction) -> Self {
        if bound != self.bound {
            self.expected_reduction = None;
        }
        self.bound = bound;
        self
    }

    /// `n0² + n0 + 2`
    pub fn exponent(&self) -> u64 {
        self.n0 * self.n0 + self.n0 + 2
    }

    pub fn f(&self, n: u64) -> Result<QuadNumber> {
        let m = n
            .checked_sub(self.shift)
            .ok_or_else(|| Error::Domain(format!("f({n}) needs n > {}", self.shift)))?;
        self.bound.eval(m)
    }

    fn f_rf(&self, j: i64) -> QuadRationalFunction {
        self.bound.shifted(j - self.shift as i64)
    }
}

/// `2(n-3)(n+2) / (n(2n+1)(n²+n+2))`
pub fn r_reduction() -> QuadRationalFunction {
    let numer =
        (&QuadPolynomial::x_plus(-3) * &QuadPolynomial::x_plus(2)).scale(&QuadNumber::from(2));
    let denom = &(&QuadPolynomial::from_ints(&[0, 1]) * &QuadPolynomial::from_ints(&[1, 2]))
        * &QuadPolynomial::from_ints(&[2, 1, 1]);
    QuadRationalFunction::new(numer, denom).expect("nonzero denominator")
}

/// `f(n+1)/f(n+3) - 1 + k0/(n²+n+2)` as a rational function of `n`.
pub fn bound_ratio_defect(params: &XiaParameters) -> Result<QuadRationalFunction> {
    let quotient = params.f_rf(1).checked_div(&params.f_rf(3))?;
    let tail = QuadRationalFunction::new(
        QuadPolynomial::constant(QuadNumber::from_rational(params.k0.clone())),
        QuadPolynomial::from_ints(&[2, 1, 1]),
    )?;
    Ok(quotient
        .sub(&QuadRationalFunction::constant(QuadNumber::one()))
        .add(&tail))
}

/// `(1 - k0/K)^K · f(n0)^(2·n0) - z_{n0}²` with `K = n0² + n0 + 2`.
pub fn base_inequality_gap(store: &TermStore, params: &XiaParameters) -> Result<QuadNumber> {
    let k = params.exponent();
    let kq = BigRational::from_integer(BigInt::from(k));
    let factor = Pow::pow(BigRational::one() - &params.k0 / &kq, k as u32);
    let lhs = params.f(params.n0)?.pow(2 * params.n0).scale(&factor);
    let z = store.term(params.n0)?;
    Ok(&lhs - &QuadNumber::from_integer(z * z))
}

/// `z_n/z_{n-1} - f(n)` and `f(n+1) - z_n/z_{n-1}`.
fn ratio_gaps(
    store: &TermStore,
    params: &XiaParameters,
    n: u64,
) -> Result<(QuadNumber, QuadNumber)> {
    let r = QuadNumber::from_rational(ratio(store, n - 1)?);
    Ok((&r - &params.f(n)?, &params.f(n + 1)? - &r))
}

fn hypothesis_holds(params: &XiaParameters) -> bool {
    params.k0.is_positive()
        && params.k0 < BigRational::from_integer(BigInt::from(params.exponent()))
}

/// Check all three conditions of the criterion with exact witnesses.
///
/// The ratio bounds are checked on `[n0, horizon]` only and the report says
/// so; the bound-ratio inequality is certified for every `n >= n0`
/// symbolically; the base inequality is a single exact comparison. Every
/// condition is evaluated even after an earlier one fails.
pub fn check_xia(
    store: &TermStore,
    params: &XiaParameters,
    horizon: u64,
) -> Result<CertificateReport> {
    let n0 = params.n0;
    if n0 <= params.shift || horizon < n0 {
        return Err(Error::InvalidRange {
            lo: n0 as i64,
            hi: horizon as i64,
            reason: format!("need {} < n0 <= horizon", params.shift),
        });
    }
    store.require(n0 - 1, horizon)?;
    let mut report = CertificateReport::new(format!("xia-{}", store.name()));
    let k = params.exponent();
    let anchor = "log-concavity criterion for n-th roots";

    let slack = BigRational::from_integer(BigInt::from(k)) - &params.k0;
    report.check(
        hypothesis_holds(params),
        format!("hypothesis: 0 < k0 = {} < n0²+n0+2 = {k}", params.k0),
        anchor,
        Witness::Rational(slack),
    );

    // f(n)·(n - shift) = c0·n + (c1 - c0·shift) keeps one sign beyond n0
    let c0 = &params.bound.c0;
    let lin = QuadPolynomial::new(vec![
        &params.bound.c1 - &c0.scale(&BigRational::from_integer(BigInt::from(params.shift))),
        c0.clone(),
    ]);
    let positive = sign_beyond(&lin, n0 as i64).is_ok_and(|c| c.is_positive());
    report.check(
        positive,
        format!("ratio bounds: f(n) > 0 for all n >= {n0}"),
        anchor,
        Witness::Polynomial(lin),
    );

    let gaps: Vec<(QuadNumber, QuadNumber)> = (n0..=horizon)
        .into_par_iter()
        .map(|n| ratio_gaps(store, params, n))
        .collect::<Result<_>>()?;
    let bad = gaps
        .iter()
        .position(|(lo, hi)| lo.sign() <= 0 || hi.sign() <= 0);
    match bad {
        None => report.check(
            true,
            format!("ratio bounds: f(n) < z_n/z_(n-1) < f(n+1) for {n0} <= n <= {horizon} (to horizon only)"),
            anchor,
            Witness::List(vec![gaps[0].0.clone().into(), gaps[0].1.clone().into()]),
        ),
        Some(i) => report.check(
            false,
            format!("ratio bounds: violated at n = {}", n0 + i as u64),
            anchor,
            Witness::List(vec![gaps[i].0.clone().into(), gaps[i].1.clone().into()]),
        ),
    };

    let defect = bound_ratio_defect(params)?;
    if let Some(expected) = &params.expected_reduction {
        report.check(
            defect.equals(expected),
            format!("bound-ratio inequality: defect reduces to {expected}"),
            anchor,
            Witness::Polynomial(defect.cross_difference(expected)),
        );
    }
    let num = sign_beyond(defect.numer(), n0 as i64);
    let den = sign_beyond(defect.denom(), n0 as i64);
    let ok = match (&num, &den) {
        (Ok(a), Ok(b)) => a.strict && b.strict && a.sign == b.sign,
        _ => false,
    };
    report.check(
        ok,
        format!("bound-ratio inequality: f(n+1)/f(n+3) > 1 - k0/(n²+n+2) for all n >= {n0}"),
        anchor,
        Witness::Polynomial(defect.numer().clone()),
    );

    let gap = base_inequality_gap(store, params)?;
    report.check(
        gap.sign() > 0,
        format!(
            "base inequality at n0 = {n0}: (1-k0/{k})^{k}·f(n0)^{} - z_n0² = {}",
            2 * n0,
            quad_to_scientific(&gap, 6)
        ),
        anchor,
        Witness::Quad(gap),
    );
    Ok(report)
}

/// Smallest `n0` in `[lo, hi]` for which the hypothesis, the base inequality
/// and the ratio bounds at `n0` itself hold.
pub fn find_min_n0(
    store: &TermStore,
    params: &XiaParameters,
    lo: u64,
    hi: u64,
) -> Result<Option<u64>> {
    for n0 in lo.max(params.shift + 1)..=hi {
        let p = params.clone().with_n0(n0);
        if !hypothesis_holds(&p) {
            continue;
        }
        if base_inequality_gap(store, &p)?.sign() <= 0 {
            continue;
        }
        let (a, b) = ratio_gaps(store, &p, n0)?;
        if a.sign() > 0 && b.sign() > 0 {
            return Ok(Some(n0));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::sequence::{builtin, generate};

    fn r() -> TermStore {
        generate(&builtin::r_sequence(), 60).unwrap()
    }

    #[test]
    fn certifies_with_standard_parameters() {
        let rep = check_xia(&r(), &XiaParameters::for_r(), 60).unwrap();
        assert!(rep.is_certified(), "{:#?}", rep.first_refutation());
        let last = rep.steps.last().unwrap();
        assert!(
            last.description.ends_with("6.41905e9"),
            "{}",
            last.description
        );
    }

    #[test]
    fn base_inequality_fails_at_eight() {
        let rep = check_xia(&r(), &XiaParameters::for_r().with_n0(8), 60).unwrap();
        assert!(rep.is_refuted());
        let bad = rep.first_refutation().unwrap();
        assert!(bad.description.contains("-1.5798e8"), "{}", bad.description);
    }

    #[test]
    fn perturbations() {
        let rep = check_xia(&r(), &XiaParameters::for_r().with_k0(int(93)), 60).unwrap();
        assert!(rep
            .first_refutation()
            .unwrap()
            .description
            .starts_with("hypothesis"));
        let rep = check_xia(&r(), &XiaParameters::for_r().with_k0(int(5)), 60).unwrap();
        assert!(rep.steps[0].status == crate::report::StepStatus::Certified);
        assert!(rep
            .first_refutation()
            .unwrap()
            .description
            .starts_with("base inequality"));
        let up = BoundFunction::sandwich().offset(&QuadNumber::from(1));
        let rep = check_xia(&r(), &XiaParameters::for_r().with_bound(up), 60).unwrap();
        assert!(rep
            .first_refutation()
            .unwrap()
            .description
            .starts_with("ratio bounds"));
    }

    #[test]
    fn minimal_start() {
        let (store, p) = (r(), XiaParameters::for_r());
        assert_eq!(find_min_n0(&store, &p, 5, 20).unwrap(), Some(9));
        assert_eq!(find_min_n0(&store, &p, 10, 20).unwrap(), Some(10));
        assert_eq!(find_min_n0(&store, &p, 5, 8).unwrap(), None);
    }

    #[test]
    fn reduction_closed_form() {
        let d = bound_ratio_defect(&XiaParameters::for_r()).unwrap();
        assert!(d.equals(&r_reduction()));
    }
}

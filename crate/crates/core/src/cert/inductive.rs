use super::{quadratic_vertex, sign_beyond, BoundFunction, QuadPolynomial, QuadRationalFunction};
use crate::arith::{quad_to_decimal, QuadNumber};
use crate::error::{Error, Result};
use crate::report::{CertificateReport, StepStatus, Witness};

/// Numerator of the upper-bound defect, negative for `k >= 3`.
pub fn upper_defect_quadratic() -> QuadPolynomial {
    QuadPolynomial::from_int_pairs(&[(-3591, -2532), (9438, 6660), (-4296, -3048)])
}

/// `16 k (k+1) (k+2)`
pub fn upper_defect_denominator() -> QuadPolynomial {
    let k = QuadPolynomial::from_ints(&[0, 1]);
    (&(&k * &QuadPolynomial::x_plus(1)) * &QuadPolynomial::x_plus(2)).scale(&QuadNumber::from(16))
}

/// Numerator of the lower-bound defect, positive for `k >= 4`.
pub fn lower_defect_quadratic() -> QuadPolynomial {
    QuadPolynomial::from_int_pairs(&[(-915, -654), (-1557, -1110), (564, 396)])
}

/// `8 (k+1) (k+2)²`
pub fn lower_defect_denominator() -> QuadPolynomial {
    let k2 = QuadPolynomial::x_plus(2);
    (&(&QuadPolynomial::x_plus(1) * &k2) * &k2).scale(&QuadNumber::from(8))
}

fn lin(a: i64, c: i64) -> QuadRationalFunction {
    QuadRationalFunction::from_poly(QuadPolynomial::from_ints(&[c, a]))
}

/// `(7k+13) b_k b_{k+1} b_{k+2} - (7k+15) b_k b_{k+1} + (k+1) b_{k+2}
///  - (k+3) b_k b_{k+1} b_{k+2} b_{k+3}`
pub fn upper_defect(b: &BoundFunction) -> QuadRationalFunction {
    let [b0, b1, b2, b3] = [0, 1, 2, 3].map(|j| b.shifted(j));
    let b01 = b0.mul(&b1);
    let b012 = b01.mul(&b2);
    lin(7, 13)
        .mul(&b012)
        .sub(&lin(7, 15).mul(&b01))
        .add(&lin(1, 1).mul(&b2))
        .sub(&lin(1, 3).mul(&b012.mul(&b3)))
}

/// `(7k+13) b_{k+1} b_{k+2} - (7k+15) b_{k+2} + (k+1) - (k+3) b_{k+1} b_{k+2}²`
pub fn lower_defect(b: &BoundFunction) -> QuadRationalFunction {
    let [b1, b2] = [1, 2].map(|j| b.shifted(j));
    let b12 = b1.mul(&b2);
    lin(7, 13)
        .mul(&b12)
        .sub(&lin(7, 15).mul(&b2))
        .add(&lin(1, 1))
        .sub(&lin(1, 3).mul(&b12.mul(&b2)))
}

/// The commonly quoted expression `-(1557+1110√2) / (2(915+654√2))`, i.e.
/// `-b/(2c)` for the lower-defect quadratic `a k² + b k + c`. It is not the
/// axis of symmetry `-b/(2a)`, which lies near 1.39088.
pub fn lower_defect_displayed_axis() -> QuadNumber {
    let g = lower_defect_quadratic();
    let two_c = g.coeff(0).scale(&crate::arith::rat(2, 1));
    (-&g.coeff(1))
        .checked_div(&two_c)
        .expect("constant term is nonzero")
}

fn identity_step(
    report: &mut CertificateReport,
    label: &str,
    lhs: &QuadRationalFunction,
    numer: &QuadPolynomial,
    denom: &QuadPolynomial,
) -> Result<bool> {
    let rhs = QuadRationalFunction::new(numer.clone(), denom.clone())?;
    let diff = lhs.cross_difference(&rhs);
    let ok = diff.is_zero();
    let witness = if ok {
        Witness::Polynomial(numer.clone())
    } else {
        Witness::Polynomial(diff)
    };
    report.check(
        ok,
        format!("{label} defect equals ({numer})/({denom})"),
        "inductive-step identity",
        witness,
    );
    Ok(ok)
}

fn sign_step(
    report: &mut CertificateReport,
    label: &str,
    p: &QuadPolynomial,
    k0: i64,
    want: i8,
) -> bool {
    match sign_beyond(p, k0) {
        Ok(c) => {
            let ok = c.sign == want && c.strict;
            report.check(
                ok,
                format!("{label}: {c} for k >= {k0} ({}), value at {k0}", c.method),
                "inductive-step sign",
                Witness::Quad(c.value_at_start),
            )
        }
        Err(Error::Inconclusive { reason, .. }) => report.check(
            false,
            format!("{label}: inconclusive for k >= {k0}: {reason}"),
            "inductive-step sign",
            Witness::Polynomial(p.clone()),
        ),
        Err(_) => false,
    }
}

/// Symbolic inductive step of the interlacing argument: the two defect
/// identities, the signs of their numerators and denominators, and the
/// vertex locations used in the sign argument.
///
/// If `b_k < r_k < b_{k+1}` then the upper defect being negative gives
/// `r_{k+2} < b_{k+3}` and the lower defect being positive gives
/// `r_{k+2} > b_{k+2}`, through the recurrence for `R`.
pub fn verify_inductive_step(b: &BoundFunction) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("interlacing-inductive-step");
    let f = upper_defect_quadratic();
    let g = lower_defect_quadratic();

    let a_ok = identity_step(
        &mut report,
        "upper",
        &upper_defect(b),
        &f,
        &upper_defect_denominator(),
    )?;
    let b_ok = identity_step(
        &mut report,
        "lower",
        &lower_defect(b),
        &g,
        &lower_defect_denominator(),
    )?;
    if !(a_ok && b_ok) {
        return Ok(report);
    }

    let signs = [
        sign_step(&mut report, "upper numerator f", &f, 3, -1),
        sign_step(
            &mut report,
            "upper denominator",
            &upper_defect_denominator(),
            3,
            1,
        ),
        sign_step(&mut report, "lower numerator g", &g, 4, 1),
        sign_step(
            &mut report,
            "lower denominator",
            &lower_defect_denominator(),
            4,
            1,
        ),
    ];
    if signs.contains(&false) {
        return Ok(report);
    }

    let three = QuadNumber::from(3);
    let four = QuadNumber::from(4);
    let fv = quadratic_vertex(&f).expect("f is quadratic");
    report.check(
        fv < three,
        format!("axis of f at {} lies left of 3", quad_to_decimal(&fv, 5)),
        "inductive-step vertex",
        Witness::Quad(fv),
    );
    let gv = quadratic_vertex(&g).expect("g is quadratic");
    report.check(
        gv < four,
        format!("axis of g at {} lies left of 4", quad_to_decimal(&gv, 5)),
        "inductive-step vertex",
        Witness::Quad(gv),
    );
    let shown = lower_defect_displayed_axis();
    report.push(
        format!(
            "-b/(2c) for g is {}; it differs from the axis -b/(2a)",
            quad_to_decimal(&shown, 6)
        ),
        "inductive-step vertex (displayed form)",
        StepStatus::Evidence,
        Witness::Quad(shown),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn quadratic_values() {
        let f = upper_defect_quadratic();
        assert_eq!(f.eval_int(3), QuadNumber::from_ints(-13941, -9984));
        assert_eq!(f.eval_int(3).factored(), "-3(4647+3328√2)");
        let g = lower_defect_quadratic();
        assert_eq!(g.eval_int(4).factored(), "9(209+138√2)");
    }

    #[test]
    fn vertices() {
        let fv = quadratic_vertex(&upper_defect_quadratic()).unwrap();
        let want = QuadNumber::from_ints(3146, 2220)
            .checked_div(&QuadNumber::from_ints(179, 127).scale(&rat(16, 1)))
            .unwrap();
        assert_eq!(fv, want);
        assert_eq!(quad_to_decimal(&fv, 5), "1.09549");
        let gv = quadratic_vertex(&lower_defect_quadratic()).unwrap();
        assert_eq!(quad_to_decimal(&gv, 5), "1.39088");
        assert_eq!(
            quad_to_decimal(&lower_defect_displayed_axis(), 6),
            "-0.849716"
        );
    }

    #[test]
    fn inductive_step_certifies() {
        let rep = verify_inductive_step(&BoundFunction::sandwich()).unwrap();
        assert!(rep.is_certified(), "{:#?}", rep.first_refutation());
        assert_eq!(rep.steps.len(), 9);
    }

    #[test]
    fn wrong_bound_breaks_the_identity() {
        let b = BoundFunction::sandwich().offset(&QuadNumber::from(1));
        let rep = verify_inductive_step(&b).unwrap();
        assert!(rep.is_refuted());
        assert!(matches!(rep.steps[0].witness, Witness::Polynomial(_)));
    }
}

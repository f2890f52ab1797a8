use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use super::{check_interlacing, check_xia, verify_inductive_step, BoundFunction, XiaParameters};
use crate::analysis::{
    check_log_shape, check_ratio_monotone, check_root_log_concave, check_root_monotone,
    limit_enclosure, root_power_differences, CheckResult, Direction, LogShape,
};
use crate::arith::int_nth_root;
use crate::error::{Error, Result};
use crate::report::{CertificateReport, Witness};
use crate::sequence::{ratio, verify_recurrence, SequenceDef, TermStore};

#[derive(Clone, Debug)]
pub struct TheoremOptions {
    pub horizon: u64,
    /// Base range of the interlacing induction.
    pub base: (u64, u64),
    pub xia: XiaParameters,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions {
            horizon: 200,
            base: (3, 8),
            xia: XiaParameters::for_r(),
        }
    }
}

/// Smallest horizon the ledger accepts: the root-monotonicity step reads
/// `r_11 = R_12/R_11`.
pub const MIN_HORIZON: u64 = 12;

fn check_witness(c: &CheckResult) -> Witness {
    match &c.violation {
        Some(v) => Witness::List(vec![Witness::int(v.index), v.lhs.clone(), v.rhs.clone()]),
        None => Witness::int(c.hi - c.lo + 1),
    }
}

struct Ledger {
    report: CertificateReport,
}

impl Ledger {
    fn record(&mut self, c: &CheckResult, description: String, anchor: &str) -> bool {
        self.report
            .check(c.holds_strict(), description, anchor, check_witness(c))
    }

    fn absorb(&mut self, sub: CertificateReport) -> bool {
        let ok = !sub.is_refuted();
        self.report.absorb(sub);
        ok
    }

    fn fact(&mut self, holds: bool, description: String, anchor: &str, witness: Witness) -> bool {
        self.report.check(holds, description, anchor, witness)
    }
}

/// One ledger for the full argument about `R`:
///
/// 1. the stored terms satisfy the recurrence;
/// 2. the ratios increase from `n = 3` (log-convexity, the interlacing base
///    range and the symbolic inductive step, an increasing bound sequence);
/// 3. the ratios converge to `3 + 2√2`, enclosed by the bound;
/// 4. `R_n^(1/n)` increases (power comparisons and the `r_11 > √R_3` step);
/// 5. `R_n^(1/n)` is strictly log-concave from `n = 5` (exact checks up to
///    the criterion's `n0`, then the criterion itself).
///
/// The ledger stops after the first stage containing a refuted step.
pub fn assemble_theorem_report(
    def: &SequenceDef,
    store: &TermStore,
    options: &TheoremOptions,
) -> Result<CertificateReport> {
    let h = options.horizon;
    if h < MIN_HORIZON {
        return Err(Error::InvalidRange {
            lo: MIN_HORIZON as i64,
            hi: h as i64,
            reason: format!("horizon must be at least {MIN_HORIZON}"),
        });
    }
    store.require(0, h)?;
    let mut ledger = Ledger {
        report: CertificateReport::new(format!("ratio-and-root-shape-{}", store.name())),
    };
    let b = BoundFunction::sandwich();

    // 1. recurrence
    if !ledger.absorb(verify_recurrence(def, store, 0, h - 3)?) {
        return Ok(ledger.report);
    }

    // 2. increasing ratios
    let anchor = "ratio monotonicity";
    let (z1, z2, z3, z4) = (
        store.term(1)?,
        store.term(2)?,
        store.term(3)?,
        store.term(4)?,
    );
    let boundary = Pow::pow(z3, 2u32) - z2 * z4;
    ledger.report.check(
        boundary > BigInt::from(0),
        format!("boundary case n=3: R_3² - R_2·R_4 = {z3}² - {z2}·{z4} = {boundary} > 0 (log-concave there)"),
        anchor,
        Witness::Integer(boundary.clone()),
    );
    let ok = ledger.record(
        &check_log_shape(store, 4, h - 1, LogShape::Convex, true)?,
        format!("strictly log-convex for 4 <= n <= {}", h - 1),
        anchor,
    ) && ledger.fact(
        super::sandwich_forms_agree(),
        "both displayed forms of the bound agree".into(),
        "interlacing bound",
        Witness::Quad(b.c1.clone()),
    ) && ledger.absorb(check_interlacing(
        store,
        &b,
        options.base.0,
        options.base.1,
    )?) && ledger.absorb(verify_inductive_step(&b)?)
        && ledger.fact(
            b.c1.sign() < 0,
            "bound increasing: b(n+1) - b(n) = -c1/(n(n+1)) > 0".into(),
            "interlacing bound",
            Witness::Quad(-&b.c1),
        )
        && ledger.record(
            &check_ratio_monotone(store, 3, h - 1, Direction::Increasing)?,
            format!("r_n < r_(n+1) re-checked directly for 3 <= n < {}", h - 1),
            anchor,
        )
        && ledger.fact(
            z1 * z3 < Pow::pow(z2, 2u32),
            format!(
                "ratio not increasing at the start: r_1 = {} > r_2 = {}",
                ratio(store, 1)?,
                ratio(store, 2)?
            ),
            anchor,
            Witness::Integer(Pow::pow(z2, 2u32) - z1 * z3),
        );
    if !ok {
        return Ok(ledger.report);
    }

    // 3. limit
    let enc = limit_enclosure(store, &b, 3, h - 1)?;
    let ok = ledger.record(
        &enc.check,
        format!("|3+2√2 - r_n| < (9/2+3√2)/n for 3 <= n <= {}", h - 1),
        "ratio limit",
    );
    if !ok {
        return Ok(ledger.report);
    }

    // 4. increasing n-th roots
    let anchor = "n-th root monotonicity";
    let diffs = root_power_differences(store, 1, 10)?;
    let ok = ledger.fact(
        diffs
            .iter()
            .all(|(_, d)| d.sign() == num_bigint::Sign::Minus),
        "R_n^(n+1) < R_(n+1)^n for 1 <= n <= 10".into(),
        anchor,
        Witness::List(
            diffs
                .iter()
                .map(|(_, d)| Witness::Integer(d.clone()))
                .collect(),
        ),
    );
    let sqrt_r3 = int_nth_root(z3, 2)?;
    let exact_root = &sqrt_r3 * &sqrt_r3 == *z3;
    let r11 = ratio(store, 11)?;
    let ok =
        ok && ledger.fact(
            exact_root && r11 > BigRational::from_integer(sqrt_r3.clone()),
            format!("r_11 = {r11} > {sqrt_r3} = √R_3"),
            anchor,
            Witness::Rational(r11.clone() - BigRational::from_integer(sqrt_r3.clone())),
        ) && ledger.record(
            &check_root_monotone(store, 1, h - 1, Direction::Increasing)?,
            format!("R_n^(1/n) strictly increasing for 1 <= n <= {}", h - 1),
            anchor,
        );
    if !ok {
        return Ok(ledger.report);
    }

    // 5. log-concave n-th roots
    let anchor = "n-th root log-concavity";
    let n0 = options.xia.n0;
    let last = n0.saturating_sub(1).max(5);
    if ledger.record(
        &check_root_log_concave(store, 5, last)?,
        format!("q_n > q_(n+1) exactly for 5 <= n <= {last}"),
        anchor,
    ) {
        ledger.absorb(check_xia(store, &options.xia, h)?);
    }
    Ok(ledger.report)
}

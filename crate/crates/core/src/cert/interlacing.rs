use num_rational::BigRational;
use rayon::prelude::*;

use super::BoundFunction;
use crate::arith::QuadNumber;
use crate::error::{Error, Result};
use crate::report::{CertificateReport, Witness};
use crate::sequence::{ratio, TermStore};

/// `r_n - b(n)` and `b(n+1) - r_n`, exactly.
fn gaps(store: &TermStore, b: &BoundFunction, n: u64) -> Result<(QuadNumber, QuadNumber)> {
    let r = QuadNumber::from_rational(ratio(store, n)?);
    let below = &r - &b.eval(n)?;
    let above = &b.eval(n + 1)? - &r;
    Ok((below, above))
}

/// Certify `b(n) < r_n < b(n+1)` for every `n` in `[from, to]`.
///
/// One step per index, witnessed by both exact gaps. The first violated
/// index produces a refuted step and ends the report.
pub fn check_interlacing(
    store: &TermStore,
    b: &BoundFunction,
    from: u64,
    to: u64,
) -> Result<CertificateReport> {
    if from == 0 || from > to {
        return Err(Error::InvalidRange {
            lo: from as i64,
            hi: to as i64,
            reason: "interlacing needs 1 <= from <= to".into(),
        });
    }
    for n in from..=to + 1 {
        store.positive(n)?;
    }
    let rows: Vec<(QuadNumber, QuadNumber)> = (from..=to)
        .into_par_iter()
        .map(|n| gaps(store, b, n))
        .collect::<Result<_>>()?;

    let mut report = CertificateReport::new(format!("interlacing-{}-{from}-{to}", store.name()));
    for (i, (below, above)) in rows.into_iter().enumerate() {
        let n = from + i as u64;
        let ok = below.sign() > 0 && above.sign() > 0;
        let desc = if ok {
            format!("b({n}) < r_{n} < b({})", n + 1)
        } else if below.sign() <= 0 {
            format!("r_{n} <= b({n})")
        } else {
            format!("r_{n} >= b({})", n + 1)
        };
        report.check(
            ok,
            desc,
            "interlacing bound",
            Witness::List(vec![Witness::Quad(below), Witness::Quad(above)]),
        );
        if !ok {
            break;
        }
    }
    Ok(report)
}

/// First index in `[from, to]` where the interlacing fails, if any.
pub fn first_interlacing_violation(
    store: &TermStore,
    b: &BoundFunction,
    from: u64,
    to: u64,
) -> Result<Option<u64>> {
    let report = check_interlacing(store, b, from, to)?;
    Ok(report
        .is_refuted()
        .then(|| from + report.steps.len() as u64 - 1))
}

/// One row of the bound table: `b(n+1)`, `r_n`, `b(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub n: u64,
    pub upper: QuadNumber,
    pub ratio: BigRational,
    pub lower: QuadNumber,
}

pub fn bound_table(
    store: &TermStore,
    b: &BoundFunction,
    from: u64,
    to: u64,
) -> Result<Vec<BoundRow>> {
    (from..=to)
        .map(|n| {
            Ok(BoundRow {
                n,
                upper: b.eval(n + 1)?,
                ratio: ratio(store, n)?,
                lower: b.eval(n)?,
            })
        })
        .collect()
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{eval::sum_terms, Recurrence, SequenceDef, TermStore};
use crate::error::{Error, Result};
use crate::report::{CertificateReport, Witness};

fn recurrence_of(def: &SequenceDef) -> Result<&Recurrence> {
    def.recurrence
        .as_ref()
        .ok_or_else(|| Error::Definition(format!("`{}` has no recurrence", def.name)))
}

/// Extend `store` up to index `upto` by solving the recurrence for its top
/// shift. Every step must divide exactly by the leading coefficient.
pub fn extend_by_recurrence(def: &SequenceDef, store: &TermStore, upto: u64) -> Result<TermStore> {
    let rec = recurrence_of(def)?;
    let order = rec.order();
    if store.len() < order {
        return Err(Error::Definition(format!(
            "need {order} seed terms for `{}`, store has {}",
            def.name,
            store.len()
        )));
    }
    if (upto as i64) <= store.last_index() {
        return store.slice(store.first_index(), upto.max(store.first_index()));
    }

    let first = store.first_index();
    let mut terms = store.terms().to_vec();
    while (first as i64 + terms.len() as i64 - 1) < upto as i64 {
        let target = first + terms.len() as u64;
        let n = target - order as u64;
        let nb = BigInt::from(n);
        let base = (n - first) as usize;
        let lead = rec.leading().eval(&nb);
        if lead.is_zero() {
            return Err(Error::Recurrence {
                name: def.name.clone(),
                n,
                reason: "leading coefficient vanishes".into(),
            });
        }
        let mut acc = BigInt::zero();
        for (j, c) in rec.coeffs()[..order].iter().enumerate() {
            acc += c.eval(&nb) * &terms[base + j];
        }
        let (q, r) = (-acc).div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::Recurrence {
                name: def.name.clone(),
                n,
                reason: format!("inexact division by leading coefficient {lead}"),
            });
        }
        terms.push(q);
    }
    Ok(TermStore::new(store.name(), first, terms))
}

/// Terms `0..=upto`: seeds extended by the recurrence when there is one,
/// direct summation otherwise.
pub fn generate(def: &SequenceDef, upto: u64) -> Result<TermStore> {
    if def.recurrence.is_some() {
        let seeds = TermStore::new(def.name.clone(), 0, def.initial_terms.clone());
        extend_by_recurrence(def, &seeds, upto)
    } else {
        sum_terms(def, 0, upto)
    }
}

/// Residual `Σ_j c_j(n) z_{n+j}` at `n`.
pub fn residual(rec: &Recurrence, store: &TermStore, n: u64) -> Result<BigInt> {
    let nb = BigInt::from(n);
    let mut acc = BigInt::zero();
    for (j, c) in rec.coeffs().iter().enumerate() {
        acc += c.eval(&nb) * store.term(n + j as u64)?;
    }
    Ok(acc)
}

/// Check that the recurrence annihilates the stored terms for `n` in
/// `[lo, hi]`; the report names the first failing `n` with its residual.
pub fn verify_recurrence(
    def: &SequenceDef,
    store: &TermStore,
    lo: u64,
    hi: u64,
) -> Result<CertificateReport> {
    let rec = recurrence_of(def)?;
    if lo > hi {
        return Err(Error::InvalidRange {
            lo: lo as i64,
            hi: hi as i64,
            reason: "empty range".into(),
        });
    }
    store.require(lo, hi + rec.order() as u64)?;

    let mut report = CertificateReport::new(format!("recurrence-{}", def.name));
    for n in lo..=hi {
        let res = residual(rec, store, n)?;
        if !res.is_zero() {
            report.check(
                false,
                format!("residual of {rec} at n={n}"),
                "four-term recurrence",
                Witness::Integer(res),
            );
            return Ok(report);
        }
    }
    report.check(
        true,
        format!("{rec} holds for {lo} <= n <= {hi}"),
        "four-term recurrence",
        Witness::int(0),
    );
    Ok(report)
}

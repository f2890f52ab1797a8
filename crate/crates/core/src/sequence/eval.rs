use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use super::{BinomialKind, SequenceDef, TermStore};
use crate::error::{Error, Result};

/// Exact value of the binomial sum at `n`.
///
/// Binomials are advanced multiplicatively in `k` with exact divisions; the
/// rational tail (from the linear denominator) is accumulated exactly and
/// the total must come out integral.
pub fn eval_binomial_sum(def: &SequenceDef, n: u64) -> Result<BigInt> {
    let summand = def
        .summand
        .as_ref()
        .ok_or_else(|| Error::Definition(format!("`{}` has no binomial summand", def.name)))?;

    let mut n_k = BigInt::one();
    let mut npk_k = BigInt::one();
    let mut central = BigInt::one();
    let mut integral = BigInt::zero();
    let mut fractional = BigRational::zero();

    for k in 0..=n {
        let mut term = BigInt::one();
        for (kind, e) in &summand.factors {
            let base = match kind {
                BinomialKind::NChooseK => &n_k,
                BinomialKind::NPlusKChooseK => &npk_k,
                BinomialKind::CentralK => &central,
            };
            term *= Pow::pow(base, *e);
        }
        let kb = BigInt::from(k);
        if let Some((alpha, beta)) = summand.numerator {
            term *= &kb * alpha + beta;
        }
        match summand.denominator {
            Some((gamma, delta)) => {
                let d = &kb * gamma + delta;
                if d.is_zero() {
                    return Err(Error::Definition(format!(
                        "denominator ({gamma}k{delta:+}) vanishes at k={k}"
                    )));
                }
                fractional += BigRational::new(term, d);
            }
            None => integral += term,
        }

        let k1 = BigInt::from(k + 1);
        n_k = n_k * (n - k) / &k1;
        npk_k = npk_k * (n + k + 1) / &k1;
        central = central * (2 * (2 * k + 1)) / &k1;
    }

    let total = fractional + BigRational::from_integer(integral);
    if !total.is_integer() {
        return Err(Error::NonIntegral {
            name: def.name.clone(),
            n,
            value: total.to_string(),
        });
    }
    Ok(total.to_integer())
}

/// Terms `lo..=hi` by direct summation, evaluated in parallel.
pub fn sum_terms(def: &SequenceDef, lo: u64, hi: u64) -> Result<TermStore> {
    if lo > hi {
        return Err(Error::InvalidRange {
            lo: lo as i64,
            hi: hi as i64,
            reason: "empty range".into(),
        });
    }
    let terms = (lo..=hi)
        .into_par_iter()
        .map(|n| eval_binomial_sum(def, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(TermStore::new(def.name.clone(), lo, terms))
}

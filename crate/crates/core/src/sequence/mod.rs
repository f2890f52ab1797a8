//! Sequence definitions, exact term generation (binomial sums and
//! recurrences), cross-checking and b-file persistence.

pub mod bfile;
pub mod builtin;
mod cache;
mod def;
mod eval;
mod recurrence;
mod store;

pub use cache::TermCache;
pub use def::{BinomialKind, BinomialSummand, IntPoly, Recurrence, SequenceDef};
pub use eval::{eval_binomial_sum, sum_terms};
pub use recurrence::{extend_by_recurrence, generate, residual, verify_recurrence};
pub use store::TermStore;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Consecutive quotients `r_n = z_{n+1} / z_n` for `n` in `[lo, hi]`.
pub fn ratios(store: &TermStore, lo: u64, hi: u64) -> Result<Vec<BigRational>> {
    if lo > hi {
        return Err(Error::InvalidRange {
            lo: lo as i64,
            hi: hi as i64,
            reason: "empty range".into(),
        });
    }
    (lo..=hi).map(|n| ratio(store, n)).collect()
}

pub fn ratio(store: &TermStore, n: u64) -> Result<BigRational> {
    let z = store.term(n)?;
    if z.is_zero() {
        return Err(Error::Domain(format!(
            "term {n} of `{}` is zero",
            store.name()
        )));
    }
    Ok(BigRational::new(store.term(n + 1)?.clone(), z.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn ratio_examples() {
        let r = generate(&builtin::r_sequence(), 13).unwrap();
        assert_eq!(ratio(&r, 3).unwrap(), rat(87, 25));
        assert_eq!(ratio(&r, 4).unwrap(), rat(329, 87));
        assert_eq!(ratio(&r, 11).unwrap(), rat(16421831, 3242377));
        assert_eq!(ratios(&r, 3, 5).unwrap().len(), 3);
        let z = TermStore::new("z", 0, vec![0.into(), 1.into()]);
        assert!(ratio(&z, 0).is_err());
    }
}

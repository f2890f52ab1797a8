use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Immutable table `n -> z_n` over a contiguous index range.
///
/// Cloning is cheap; the terms are shared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermStore {
    name: String,
    first_index: u64,
    terms: Arc<[BigInt]>,
}

impl TermStore {
    pub fn new(name: impl Into<String>, first_index: u64, terms: Vec<BigInt>) -> Self {
        TermStore {
            name: name.into(),
            first_index,
            terms: terms.into(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn first_index(&self) -> u64 {
        self.first_index
    }

    /// Last stored index, or `first_index - 1` when empty.
    pub fn last_index(&self) -> i64 {
        self.first_index as i64 + self.terms.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.first_index && (n as i64) <= self.last_index()
    }

    pub fn get(&self, n: u64) -> Option<&BigInt> {
        if self.contains(n) {
            Some(&self.terms[(n - self.first_index) as usize])
        } else {
            None
        }
    }

    pub fn term(&self, n: u64) -> Result<&BigInt> {
        self.get(n).ok_or_else(|| Error::IndexOutOfRange {
            name: self.name.clone(),
            index: n,
            first: self.first_index,
            last: self.last_index(),
        })
    }

    /// Positive term or an error naming the offending index.
    pub fn positive(&self, n: u64) -> Result<&BigInt> {
        let z = self.term(n)?;
        if !z.is_positive() {
            return Err(Error::NonPositiveTerm {
                name: self.name.clone(),
                index: n,
                value: z.to_string(),
            });
        }
        Ok(z)
    }

    /// Fail unless `[lo, hi]` is stored.
    pub fn require(&self, lo: u64, hi: u64) -> Result<()> {
        self.term(lo)?;
        self.term(hi)?;
        Ok(())
    }

    /// Sub-table over `[lo, hi]`.
    pub fn slice(&self, lo: u64, hi: u64) -> Result<TermStore> {
        self.require(lo, hi)?;
        let a = (lo - self.first_index) as usize;
        let b = (hi - self.first_index) as usize;
        Ok(TermStore::new(
            self.name.clone(),
            lo,
            self.terms[a..=b].to_vec(),
        ))
    }

    pub fn renamed(&self, name: impl Into<String>) -> TermStore {
        TermStore {
            name: name.into(),
            ..self.clone()
        }
    }

    /// Copy with one term replaced; for fault-injection tests.
    pub fn with_term(&self, n: u64, value: BigInt) -> Result<TermStore> {
        self.term(n)?;
        let mut terms = self.terms.to_vec();
        terms[(n - self.first_index) as usize] = value;
        Ok(TermStore::new(self.name.clone(), self.first_index, terms))
    }

    /// Termwise map into a new table with the same indices.
    pub fn map(&self, name: impl Into<String>, f: impl Fn(&BigInt) -> BigInt) -> TermStore {
        TermStore::new(name, self.first_index, self.terms.iter().map(f).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms
            .iter()
            .enumerate()
            .map(move |(i, z)| (self.first_index + i as u64, z))
    }
}

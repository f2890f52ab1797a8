use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::report::{CertificateReport, StepStatus, Witness};
use crate::sequence::TermStore;

/// `(L z)_n = z_n² - z_{n-1} z_{n+1}`, defined on the interior of the table.
pub fn l_operator(store: &TermStore) -> Result<TermStore> {
    if store.len() < 3 {
        return Err(Error::WindowExhausted {
            width: store.len() as u64,
            depth: 1,
        });
    }
    let z = store.terms();
    let out = z
        .windows(3)
        .map(|w| Pow::pow(&w[1], 2u32) - &w[0] * &w[2])
        .collect();
    Ok(TermStore::new(
        format!("L({})", store.name()),
        store.first_index() + 1,
        out,
    ))
}

/// How negative iterates are treated between applications of `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Apply `L` to the iterate as computed.
    Raw,
    /// Apply `L` to the termwise absolute value of the previous iterate.
    Absolute,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Raw => "raw",
            Convention::Absolute => "absolute",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthVerdict {
    pub depth: u32,
    pub lo: u64,
    pub hi: u64,
    pub negatives: usize,
    pub zeros: usize,
    pub first_negative: Option<(u64, BigInt)>,
}

impl DepthVerdict {
    pub fn nonnegative(&self) -> bool {
        self.negatives == 0
    }
}

/// Per-depth sign ledger for iterates of `L` on a finite window. This is
/// bounded-depth evidence only; it never certifies ∞-log-concavity.
#[derive(Clone, Debug)]
pub struct InfiniteLcLedger {
    pub convention: Convention,
    pub start: u64,
    pub width: u64,
    pub depths: Vec<DepthVerdict>,
    pub report: CertificateReport,
}

impl InfiniteLcLedger {
    pub fn all_nonnegative(&self) -> bool {
        self.depths.iter().all(DepthVerdict::nonnegative)
    }
}

/// Apply `L` up to `depth` times to `z_start, ..., z_{start+width-1}` and
/// record the sign pattern at every depth (depth 0 is the window itself).
///
/// Each application shrinks the window by one index at each end, so the
/// window must satisfy `width >= 2·depth + 1`.
pub fn explore_infinite_log_concavity(
    store: &TermStore,
    start: u64,
    depth: u32,
    width: u64,
    convention: Convention,
) -> Result<InfiniteLcLedger> {
    if width < 2 * u64::from(depth) + 1 {
        return Err(Error::WindowExhausted { width, depth });
    }
    let mut current = store.slice(start, start + width - 1)?;
    let mut report = CertificateReport::evidence(format!(
        "infinite-log-concavity-{}-{convention}",
        store.name()
    ));
    let mut depths = Vec::with_capacity(depth as usize + 1);
    for d in 0..=depth {
        let verdict = sign_pattern(&current, d);
        let desc = format!(
            "depth {d} on [{}, {}]: {} negative, {} zero",
            verdict.lo, verdict.hi, verdict.negatives, verdict.zeros
        );
        let witness = match &verdict.first_negative {
            Some((n, v)) => Witness::List(vec![Witness::int(*n), Witness::Integer(v.clone())]),
            None => Witness::int(verdict.negatives),
        };
        report.push(desc, "iterated L-operator", StepStatus::Evidence, witness);
        depths.push(verdict);
        if d < depth {
            let base = match convention {
                Convention::Raw => current,
                Convention::Absolute => current.map(current.name().to_string(), |z| z.abs()),
            };
            current = l_operator(&base)?;
        }
    }
    Ok(InfiniteLcLedger {
        convention,
        start,
        width,
        depths,
        report,
    })
}

/// Both conventions on the same window, raw first.
pub fn explore_both_conventions(
    store: &TermStore,
    start: u64,
    depth: u32,
    width: u64,
) -> Result<(InfiniteLcLedger, InfiniteLcLedger)> {
    Ok((
        explore_infinite_log_concavity(store, start, depth, width, Convention::Raw)?,
        explore_infinite_log_concavity(store, start, depth, width, Convention::Absolute)?,
    ))
}

fn sign_pattern(store: &TermStore, depth: u32) -> DepthVerdict {
    let mut negatives = 0;
    let mut zeros = 0;
    let mut first_negative = None;
    for (n, z) in store.iter() {
        if z.is_negative() {
            negatives += 1;
            first_negative.get_or_insert_with(|| (n, z.clone()));
        } else if z.is_zero() {
            zeros += 1;
        }
    }
    DepthVerdict {
        depth,
        lo: store.first_index(),
        hi: store.last_index().max(0) as u64,
        negatives,
        zeros,
        first_negative,
    }
}

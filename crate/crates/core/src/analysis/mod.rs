//! Exact checks of log-convexity and log-concavity, ratio and n-th-root
//! monotonicity, limit enclosures and the bounded ∞-log-concavity explorer.
//!
//! Every verdict comes from integer or rational comparisons. Decimals appear
//! only in [`trend`] output, and there they are rendering, not evidence.

mod infinite;
mod limit;
mod roots;
mod shape;
mod trend;

pub use infinite::{
    explore_both_conventions, explore_infinite_log_concavity, l_operator, Convention, DepthVerdict,
    InfiniteLcLedger,
};
pub use limit::{limit_enclosure, LimitEnclosure};
pub use roots::{check_root_log_concave, check_root_monotone, root_power_differences};
pub use shape::{check_log_shape, check_ratio_log_concave, check_ratio_monotone};
pub use trend::{root_ratio_scaled, root_ratio_trend, RootRatioTrend, TrendRow};

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    HoldsStrict,
    HoldsWeak,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HoldsStrict => "holds_strict",
            Verdict::HoldsWeak => "holds_weak",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogShape {
    Convex,
    Concave,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// The two sides of the comparison that broke, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: u64,
    pub lhs: Witness,
    pub rhs: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub property: String,
    pub lo: u64,
    pub hi: u64,
    pub verdict: Verdict,
    pub violation: Option<Violation>,
}

impl CheckResult {
    pub fn first_violation(&self) -> Option<u64> {
        self.violation.as_ref().map(|v| v.index)
    }

    pub fn holds(&self) -> bool {
        self.verdict != Verdict::Fails
    }

    pub fn holds_strict(&self) -> bool {
        self.verdict == Verdict::HoldsStrict
    }
}

pub(crate) fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo > hi {
        return Err(Error::InvalidRange {
            lo: lo as i64,
            hi: hi as i64,
            reason: "lower end exceeds upper end".into(),
        });
    }
    Ok(())
}

pub(crate) fn needs_predecessor(lo: u64, hi: u64) -> Result<()> {
    if lo == 0 {
        return Err(Error::InvalidRange {
            lo: 0,
            hi: hi as i64,
            reason: "index 0 has no predecessor".into(),
        });
    }
    Ok(())
}

/// Evaluate `cmp` on every index of `[lo, hi]` (in parallel) and fold the
/// results in index order, so errors and violations are reported at the
/// lowest index. `Greater` means the wanted inequality holds
/// strictly, `Equal` means equality, `Less` means it is violated. Equality
/// is a violation when `strict` is set.
pub(crate) fn run_check<F, W>(
    property: impl Into<String>,
    lo: u64,
    hi: u64,
    strict: bool,
    cmp: F,
    witness: W,
) -> Result<CheckResult>
where
    F: Fn(u64) -> Result<Ordering> + Sync,
    W: Fn(u64) -> Result<(Witness, Witness)>,
{
    let outcomes: Vec<Result<Ordering>> = (lo..=hi).into_par_iter().map(&cmp).collect();
    let mut verdict = Verdict::HoldsStrict;
    let mut violation = None;
    for (i, ord) in outcomes.into_iter().enumerate() {
        let n = lo + i as u64;
        let ord = ord?;
        let broken = match ord {
            Ordering::Greater => false,
            Ordering::Equal if !strict => {
                verdict = Verdict::HoldsWeak;
                false
            }
            _ => true,
        };
        if broken {
            let (lhs, rhs) = witness(n)?;
            verdict = Verdict::Fails;
            violation = Some(Violation { index: n, lhs, rhs });
            break;
        }
    }
    Ok(CheckResult {
        property: property.into(),
        lo,
        hi,
        verdict,
        violation,
    })
}

//! Certificate ledgers: ordered steps, each carrying an exact witness.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::QuadNumber;
use crate::cert::QuadPolynomial;

/// Exact evidence attached to a step. Never a float.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Integer(BigInt),
    Rational(BigRational),
    Quad(QuadNumber),
    Polynomial(QuadPolynomial),
    List(Vec<Witness>),
}

impl Witness {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Witness::Integer(n.into())
    }

    /// Exact textual form: integers and rationals verbatim, surds factored.
    pub fn exact(&self) -> String {
        match self {
            Witness::Integer(n) => n.to_string(),
            Witness::Rational(r) => r.to_string(),
            Witness::Quad(q) => q.factored(),
            Witness::Polynomial(p) => p.to_string(),
            Witness::List(items) => items
                .iter()
                .map(Witness::exact)
                .collect::<Vec<_>>()
                .join("; "),
        }
    }

    /// Numeric value as an element of Q(√2), when the witness is a number.
    pub fn value(&self) -> Option<QuadNumber> {
        match self {
            Witness::Integer(n) => Some(QuadNumber::from_integer(n.clone())),
            Witness::Rational(r) => Some(QuadNumber::from_rational(r.clone())),
            Witness::Quad(q) => Some(q.clone()),
            _ => None,
        }
    }
}

impl From<BigInt> for Witness {
    fn from(n: BigInt) -> Self {
        Witness::Integer(n)
    }
}

impl From<BigRational> for Witness {
    fn from(r: BigRational) -> Self {
        Witness::Rational(r)
    }
}

impl From<QuadNumber> for Witness {
    fn from(q: QuadNumber) -> Self {
        Witness::Quad(q)
    }
}

impl From<QuadPolynomial> for Witness {
    fn from(p: QuadPolynomial) -> Self {
        Witness::Polynomial(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepStatus {
    Certified,
    Refuted,
    /// Finite-range or numeric support; never counts as proof.
    Evidence,
}

impl fmt::Display for StepStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepStatus::Certified => "certified",
            StepStatus::Refuted => "refuted",
            StepStatus::Evidence => "evidence",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub claim: String,
    pub description: String,
    /// Which part of the argument this step reproduces.
    pub anchor: String,
    pub status: StepStatus,
    pub witness: Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReportStatus {
    Certified,
    Refuted,
    EvidenceOnly,
}

impl fmt::Display for ReportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportStatus::Certified => "certified",
            ReportStatus::Refuted => "refuted",
            ReportStatus::EvidenceOnly => "evidence-only",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub claim: String,
    pub status: ReportStatus,
    pub steps: Vec<Step>,
    evidence_only: bool,
}

impl CertificateReport {
    pub fn new(claim: impl Into<String>) -> Self {
        CertificateReport {
            claim: claim.into(),
            status: ReportStatus::Certified,
            steps: Vec::new(),
            evidence_only: false,
        }
    }

    /// A report that can at best be evidence, e.g. a bounded search.
    pub fn evidence(claim: impl Into<String>) -> Self {
        CertificateReport {
            status: ReportStatus::EvidenceOnly,
            evidence_only: true,
            ..CertificateReport::new(claim)
        }
    }

    pub fn push(
        &mut self,
        description: impl Into<String>,
        anchor: impl Into<String>,
        status: StepStatus,
        witness: impl Into<Witness>,
    ) {
        let step = Step {
            claim: self.claim.clone(),
            description: description.into(),
            anchor: anchor.into(),
            status,
            witness: witness.into(),
        };
        self.push_step(step);
    }

    /// Record a step whose status follows from `holds`.
    pub fn check(
        &mut self,
        holds: bool,
        description: impl Into<String>,
        anchor: impl Into<String>,
        witness: impl Into<Witness>,
    ) -> bool {
        let status = if holds {
            StepStatus::Certified
        } else {
            StepStatus::Refuted
        };
        self.push(description, anchor, status, witness);
        holds
    }

    pub fn push_step(&mut self, step: Step) {
        if step.status == StepStatus::Refuted {
            self.status = ReportStatus::Refuted;
        }
        self.steps.push(step);
    }

    /// Append another report's steps, keeping their own claim labels.
    pub fn absorb(&mut self, other: CertificateReport) {
        for step in other.steps {
            self.push_step(step);
        }
    }

    pub fn is_certified(&self) -> bool {
        self.status == ReportStatus::Certified
    }

    pub fn is_refuted(&self) -> bool {
        self.status == ReportStatus::Refuted
    }

    pub fn is_evidence_only(&self) -> bool {
        self.evidence_only
    }

    pub fn first_refutation(&self) -> Option<&Step> {
        self.steps.iter().find(|s| s.status == StepStatus::Refuted)
    }

    pub fn find(&self, needle: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.description.contains(needle))
    }
}

//! Exact computation of the binomial-sum sequences R_n and S_n and
//! machine-checked certificates for their log-behavior.

pub mod analysis;
pub mod arith;
pub mod cert;
pub mod error;
pub mod report;
pub mod sequence;

pub use analysis::{CheckResult, Direction, LogShape, Verdict};
pub use arith::{BigInt, BigRational, QuadNumber};
pub use cert::{BoundFunction, QuadPolynomial, QuadRationalFunction, XiaParameters};
pub use error::{Error, Result};
pub use report::{CertificateReport, ReportStatus, Step, StepStatus, Witness};
pub use sequence::{SequenceDef, TermStore};

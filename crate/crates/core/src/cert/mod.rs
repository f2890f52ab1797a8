//! Exact certificates for ratio bounds: polynomials and rational functions
//! over Q(√2), polynomial sign certificates, the interlacing check with its
//! symbolic inductive step, and the n-th root log-concavity criterion.

mod bound;
mod inductive;
mod interlacing;
mod poly;
mod ratfunc;
mod sign;
mod theorem;
mod xia;

pub use bound::{eval_bound, sandwich_forms_agree, BoundFunction};
pub use inductive::{
    lower_defect, lower_defect_denominator, lower_defect_displayed_axis, lower_defect_quadratic,
    upper_defect, upper_defect_denominator, upper_defect_quadratic, verify_inductive_step,
};
pub use interlacing::{bound_table, check_interlacing, first_interlacing_violation, BoundRow};
pub use poly::QuadPolynomial;
pub use ratfunc::{QuadRationalFunction, RfOp};
pub use sign::{quadratic_vertex, sign_beyond, SignCertificate, SignMethod};
pub use theorem::{assemble_theorem_report, TheoremOptions, MIN_HORIZON};
pub use xia::{
    base_inequality_gap, bound_ratio_defect, check_xia, find_min_n0, r_reduction, XiaParameters,
};

//! The two built-in sequences.
//!
//! R_n = Σ_k C(n,k) C(n+k,k) / (2k-1), with
//! (n+3)R_{n+3} - (7n+13)R_{n+2} + (7n+15)R_{n+1} - (n+1)R_n = 0.
//!
//! S_n = Σ_k C(n,k)² C(2k,k) (2k+1), with
//! 9(n+1)²S_n - (19n²+74n+87)S_{n+1} + (n+3)(11n+29)S_{n+2} - (n+3)²S_{n+3} = 0.

use num_bigint::BigInt;

use super::{BinomialKind, BinomialSummand, IntPoly, Recurrence, SequenceDef};

pub fn r_sequence() -> SequenceDef {
    let summand = BinomialSummand {
        factors: vec![
            (BinomialKind::NChooseK, 1),
            (BinomialKind::NPlusKChooseK, 1),
        ],
        numerator: None,
        denominator: Some((2, -1)),
    };
    let rec = Recurrence::new(vec![
        IntPoly::from_i64s(&[-1, -1]),
        IntPoly::from_i64s(&[15, 7]),
        IntPoly::from_i64s(&[-13, -7]),
        IntPoly::from_i64s(&[3, 1]),
    ])
    .expect("static recurrence");
    SequenceDef::new("R", Some(summand), Some(rec), seeds(&[-1, 1, 7])).expect("static definition")
}

pub fn s_sequence() -> SequenceDef {
    let summand = BinomialSummand {
        factors: vec![(BinomialKind::NChooseK, 2), (BinomialKind::CentralK, 1)],
        numerator: Some((2, 1)),
        denominator: None,
    };
    let rec = Recurrence::new(vec![
        IntPoly::from_i64s(&[9, 18, 9]),
        IntPoly::from_i64s(&[-87, -74, -19]),
        IntPoly::from_i64s(&[87, 62, 11]),
        IntPoly::from_i64s(&[-9, -6, -1]),
    ])
    .expect("static recurrence");
    SequenceDef::new("S", Some(summand), Some(rec), seeds(&[1, 7, 55])).expect("static definition")
}

/// Look up a built-in by name (`R` or `S`, case-insensitive).
pub fn by_name(name: &str) -> Option<SequenceDef> {
    match name {
        "R" | "r" => Some(r_sequence()),
        "S" | "s" => Some(s_sequence()),
        _ => None,
    }
}

fn seeds(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

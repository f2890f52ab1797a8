use num_bigint::BigInt;

use sunseq_core::analysis::{check_root_log_concave, root_ratio_trend, Verdict};
use sunseq_core::cert::{check_interlacing, BoundFunction};
use sunseq_core::sequence::{
    builtin, extend_by_recurrence, generate, sum_terms, verify_recurrence, TermCache,
};
use sunseq_core::TermStore;

#[test]
fn sums_agree_with_recurrences() {
    for def in [builtin::r_sequence(), builtin::s_sequence()] {
        let summed = sum_terms(&def, 0, 200).unwrap();
        let rec = generate(&def, 200).unwrap();
        assert_eq!(summed.terms(), rec.terms(), "{}", def.name);
        assert!(verify_recurrence(&def, &summed, 0, 197)
            .unwrap()
            .is_certified());
    }
}

#[test]
fn known_values() {
    let r = generate(&builtin::r_sequence(), 13).unwrap();
    let want = [
        -1i64, 1, 7, 25, 87, 329, 1359, 6001, 27759, 132689, 649815, 3242377, 16421831, 84196761,
    ];
    let got: Vec<BigInt> = want.iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(r.terms(), got.as_slice());
    let s = generate(&builtin::s_sequence(), 4).unwrap();
    assert_eq!(
        s.terms(),
        [1, 7, 55, 465, 4047].map(BigInt::from).as_slice()
    );
}

#[test]
fn recurrence_extension_from_a_prefix() {
    let def = builtin::r_sequence();
    let prefix = sum_terms(&def, 0, 10).unwrap();
    let long = extend_by_recurrence(&def, &prefix, 120).unwrap();
    assert_eq!(long.terms(), sum_terms(&def, 0, 120).unwrap().terms());
}

#[test]
fn cache_round_trip_and_growth() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TermCache::new(dir.path());
    let def = builtin::r_sequence();
    let a = cache.get_or_generate(&def, 40).unwrap();
    let b = cache.get_or_generate(&def, 80).unwrap();
    assert_eq!(&b.terms()[..41], a.terms());
    let c = cache.get_or_generate(&def, 60).unwrap();
    assert_eq!(c.terms(), &b.terms()[..61]);
}

#[test]
fn interlacing_extends_far_beyond_the_base_range() {
    let r = generate(&builtin::r_sequence(), 501).unwrap();
    let rep = check_interlacing(&r, &BoundFunction::sandwich(), 3, 500).unwrap();
    assert!(rep.is_certified());
    assert_eq!(rep.steps.len(), 498);
}

#[test]
fn interlacing_implies_increasing_ratios() {
    let r = generate(&builtin::r_sequence(), 60).unwrap();
    let b = BoundFunction::sandwich();
    assert!(check_interlacing(&r, &b, 3, 58).unwrap().is_certified());
    let ratios = sunseq_core::sequence::ratios(&r, 3, 59).unwrap();
    assert!(ratios.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn s_shape() {
    let s = generate(&builtin::s_sequence(), 50).unwrap();
    assert_eq!(
        check_root_log_concave(&s, 1, 40).unwrap().verdict,
        Verdict::HoldsStrict
    );
    let t = root_ratio_trend(&s, 1, 30, 8).unwrap();
    assert!(t.check.holds_strict());
}

#[test]
fn corrupted_table_is_refuted_at_the_right_index() {
    let def = builtin::r_sequence();
    let good = generate(&def, 20).unwrap();
    let bad: TermStore = good.with_term(4, BigInt::from(88)).unwrap();
    let rep = verify_recurrence(&def, &bad, 0, 17).unwrap();
    assert!(rep.is_refuted());
    assert!(rep.first_refutation().unwrap().description.contains("n=1"));
}

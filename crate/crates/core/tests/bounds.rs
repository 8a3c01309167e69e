use mckay_core::bounds::*;
use mckay_core::builders::*;
use mckay_core::chartable::{import_table, CharacterTable};
use mckay_core::exactnum::{BigUint, Rational};

fn fixture(name: &str) -> CharacterTable {
    let path = format!("{}/tests/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    import_table(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn idx(t: &CharacterTable, name: &str) -> usize {
    t.character_index(name).unwrap_or_else(|| panic!("no {name} in {}", t.name))
}

fn k() -> ConstantsTable {
    ConstantsTable::standard()
}

#[test]
fn s5_standard_character() {
    let t = build_sym_table(5).unwrap();
    let bb = burnside_brauer(&t, idx(&t, "chi(4,1)")).unwrap();
    // values 4, 2, 1, 0, -1
    assert_eq!(bb.distinct, 5);
    assert_eq!(bb.bound, 4);
    // 1 -> 4 -> {5, 6} -> {4', 5'} -> sgn
    assert_eq!(bb.diameter, 4);
    assert!(bb.covering <= 4);
    assert!(bb.pass);
    assert!(bb_suite(&t).unwrap().passed());
}

#[test]
fn bb_rejects_trivial_and_unfaithful() {
    let t = build_sym_table(5).unwrap();
    assert!(burnside_brauer(&t, idx(&t, "chi(5)")).is_err());
    assert!(burnside_brauer(&t, idx(&t, "chi(1,1,1,1,1)")).is_err());
    assert!(matches!(burnside_brauer(&t, 99), Err(BoundsError::NoCharacter(99))));
}

#[test]
fn lower_bound_small_groups() {
    for t in [build_sym_table(5).unwrap(), build_alt_table(5).unwrap()] {
        let r = lower_suite(&t).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
    let a5 = build_alt_table(5).unwrap();
    let lb = lower_bound(&a5, idx(&a5, "chi(3,1,1)+")).unwrap();
    assert_eq!(lb.degree, 3);
    assert_eq!(lb.largest_degree, 5);
    // 3^d >= 5 needs d >= 2
    assert!(lb.diameter >= 2);
    let s5 = build_sym_table(5).unwrap();
    assert!(matches!(
        lower_bound(&s5, idx(&s5, "chi(1,1,1,1,1)")),
        Err(BoundsError::Linear(_))
    ));
}

#[test]
fn steinberg_square_rank_one() {
    for q in [5, 7, 8, 9, 11, 13] {
        let t = build_psl2_table(q).unwrap();
        let r = verify_stsq(&t).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        let r = verify_stval(&t).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
}

#[test]
fn steinberg_square_unitary_exception() {
    let t = fixture("psu3_3");
    let r = verify_stsq(&t).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let missing: Vec<_> = r
        .cases
        .iter()
        .filter(|c| c.computed.get("level") == Some(&serde_json::json!(3)))
        .collect();
    assert_eq!(missing.len(), 1);
    // (27 - 3) / 4
    assert_eq!(missing[0].inputs["degree"], serde_json::json!(6));
    assert_eq!(r.case("PSU3(3)/St^3 covers").unwrap().pass, Some(true));
}

#[test]
fn gluck_rank_one() {
    // For q = 1 mod 4 the largest ratio is the half-degree character on a
    // unipotent class: (1 + sqrt q)/2 over (q + 1)/2.
    let g9 = gluck_check(&build_psl2_table(9).unwrap(), &k()).unwrap();
    assert!((g9.bound - 0.95).abs() < 1e-12);
    assert!((g9.max_ratio - 0.4).abs() < 1e-9);
    assert!(g9.pass);
    let g13 = gluck_check(&build_psl2_table(13).unwrap(), &k()).unwrap();
    assert!((g13.bound - 3.0 / 13f64.sqrt()).abs() < 1e-12);
    assert!((g13.max_ratio - (1.0 + 13f64.sqrt()) / 14.0).abs() < 1e-9);
    assert!(g13.pass);
    assert!(matches!(
        gluck_check(&build_sym_table(5).unwrap(), &k()),
        Err(BoundsError::NoLieParams(_))
    ));
    assert!(matches!(
        gluck_check(&build_sl2_table(7).unwrap(), &k()),
        Err(BoundsError::NotSimple(_))
    ));
}

#[test]
fn sigma_psl2_7() {
    let t = fixture("psl2_7_reference");
    let st = verify_stsq(&t).unwrap();
    assert!(st.passed());
    // St is 1 on the order-3 class and -1 on orders 2 and 4, all with
    // centralizer p-part 1: Σ_2 = (21 + 56 + 42)/49.
    let s = sigma_l(&t, idx(&t, "X5"), 2).unwrap();
    assert_eq!(s.value, SigmaValue::Exact(Rational::new(17.into(), 7.into())));
    assert_eq!(s.group_p_part, 7);
    assert_eq!(s.below, Some(true));
    assert_eq!(s.pass, Some(true));
    // degree 8: zero on orders 2 and 4, -1 on order 3
    let s = sigma_l(&t, idx(&t, "X6"), 2).unwrap();
    assert_eq!(s.value, SigmaValue::Exact(Rational::new(7.into(), 8.into())));
    let r = sigma_suite(&t, &k()).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    for i in 1..t.characters.len() {
        let s = sigma_l(&t, i, 163).unwrap();
        assert_eq!(s.below, Some(true));
        assert!(s.value.approx() < 1e-10);
    }
}

#[test]
fn sigma_tie_at_odd_l_is_exact() {
    // theta_2 of PSL2(5) is 1 on the order-3 class (size 20) and 0 on the
    // involutions: Σ_1 = 20/4 = |G|_5, so the criterion does not fire.
    let t = build_psl2_table(5).unwrap();
    let s = sigma_l(&t, idx(&t, "theta_2"), 1).unwrap();
    assert_eq!(s.value, SigmaValue::Exact(Rational::from_integer(5.into())));
    assert_eq!(s.below, Some(false));
    assert_eq!(s.pass, None);
    // irrational magnitudes still get an enclosure
    let t13 = build_psl2_table(13).unwrap();
    let any_interval = (1..t13.characters.len())
        .any(|i| matches!(sigma_l(&t13, i, 3).unwrap().value, SigmaValue::Interval { .. }));
    assert!(any_interval);
}

#[test]
fn expansion_identity_holds() {
    let tables = [
        fixture("psl2_7_reference"),
        fixture("psl2_5_reference"),
        fixture("psu3_3"),
        build_psl2_table(8).unwrap(),
        build_sl2_table(5).unwrap(),
    ];
    for t in &tables {
        let r = expansion_suite(t, 6).unwrap();
        assert!(r.passed(), "{}", t.name);
        assert_eq!(r.cases.len(), 6 * t.characters.len());
    }
}

#[test]
fn delta_values() {
    assert_eq!(delta_l(3, 5, 10, &[0.0, 0.0], &k()).unwrap(), 0.0);
    assert!(matches!(
        delta_l(3, 5, 10, &[0.0], &k()),
        Err(BoundsError::MissingRatio { expected: 2, found: 1 })
    ));
    // n = 2, s = 1 has coefficient q^3: Δ_4 = 7^3 (1/7)^4 for St.
    let t = fixture("psl2_7_reference");
    let d = verify_delta(&t, idx(&t, "X5"), 4, &k()).unwrap();
    assert!((d.delta - 1.0 / 7.0).abs() < 1e-12);
    assert_eq!(d.pass, Some(true));
    assert!(d.inner_product.unwrap() > Rational::from_integer(0.into()));
    // built rank-one tables default to support 1
    let b = build_psl2_table(7).unwrap();
    let db = verify_delta(&b, idx(&b, "St"), 4, &k()).unwrap();
    assert!((db.delta - d.delta).abs() < 1e-12);
}

#[test]
fn threshold_rank_one() {
    let th = lie_threshold(2, &k()).unwrap();
    let expected = BigUint::from(49u32).pow(16) * BigUint::from(2u32).pow(40);
    assert_eq!(th.q0, Some(expected));
    assert!((th.log10_q0 - (16.0 * 49f64.log10() + 40.0 * 2f64.log10())).abs() < 1e-9);
    assert!(lie_threshold(1, &k()).is_err());
    let r = threshold_suite(&fixture("psu3_3"), &k()).unwrap();
    assert!(r.case("PSU3(3)/order").unwrap().pass == Some(true));
}

#[test]
fn alternating_and_symmetric() {
    let r = verify_alt(5).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let r = verify_alt(7).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    // restriction of (5,2) to S6 is (4,2) + (5,1)
    let c = r.case("S7/chi(5,2)").unwrap();
    assert_eq!(c.computed["restriction_norm"], serde_json::json!(2));
    assert!(c.bound.contains_key("reducible_restriction_covering_power"));
    let std = r.case("S7/chi(6,1)").unwrap();
    assert_eq!(std.computed["distinct_values"], serde_json::json!(7));
    assert!(matches!(verify_alt(4), Err(BoundsError::OutOfRange { .. })));
}

#[test]
fn quasisimple_rank_one() {
    for q in [5, 7] {
        let g = build_sl2_table(q).unwrap();
        let s = build_psl2_table(q).unwrap();
        let r = verify_quasisimple(&g, &s).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(r.case(&format!("SL2({q})/max")).is_some());
    }
    let s5 = build_sym_table(5).unwrap();
    assert!(matches!(
        verify_quasisimple(&build_sl2_table(5).unwrap(), &s5),
        Err(BoundsError::NotSimple(_))
    ));
    // PSL2 classes carry no images
    let p = build_psl2_table(5).unwrap();
    assert!(matches!(
        verify_quasisimple(&p, &p),
        Err(BoundsError::MissingAnnotation { .. })
    ));
}

#[test]
fn multiplicity_free() {
    let t = build_psl2_table(11).unwrap();
    let r = verify_multfree(&t, &[idx(&t, "eta1"), idx(&t, "eta2")], &k()).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let deg = r.case("PSL2(11)/eta1+eta2/degrees").unwrap();
    assert_eq!(deg.computed["min_degree"], serde_json::json!(5));
    assert_eq!(deg.computed["class_number"], serde_json::json!(8));

    let s5 = build_sym_table(5).unwrap();
    let r = verify_multfree(&s5, &[idx(&s5, "chi(4,1)"), idx(&s5, "chi(3,2)")], &k()).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    assert!(r.case("S5/chi(4,1)+chi(3,2)/degrees").is_none());
    let a = idx(&s5, "chi(4,1)");
    assert!(verify_multfree(&s5, &[a, a], &k()).is_err());
    assert!(verify_multfree(&s5, &[], &k()).is_err());
}

#[test]
fn centralizer_and_class_counts() {
    for name in ["psl2_7_reference", "psu3_3"] {
        let r = class_count_check(&fixture(name), &k()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
    assert!(matches!(
        class_count_check(&build_psl2_table(7).unwrap(), &k()),
        Err(BoundsError::MissingAnnotation { .. })
    ));
}

#[test]
fn transvection_value_psu3_3() {
    let t = fixture("psu3_3");
    let r = transvection_check(&t).unwrap();
    let formula = r.case("PSU3(3)/3a/formula").unwrap();
    assert_eq!(formula.pass, Some(false));
    assert_eq!(formula.computed["value"], serde_json::json!("-3"));
    assert_eq!(r.case("PSU3(3)/3a/nonzero").unwrap().pass, Some(true));
    assert_eq!(r.verdict, Verdict::Fail);
    let skipped = transvection_check(&fixture("psl2_7_reference")).unwrap();
    assert_eq!(skipped.verdict, Verdict::Report);
}

#[test]
fn conjecture_ratios() {
    let r = conjecture_suite(&build_sym_table(6).unwrap(), &k()).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let r = conjecture_suite(&build_psl2_table(13).unwrap(), &k()).unwrap();
    assert!(r.passed(), "{}", r.to_json());
}

#[test]
fn report_json_round_trips_verdict() {
    let r = bb_suite(&build_alt_table(5).unwrap()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["suite"], "bb");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["cases"].as_array().unwrap().len(), r.cases.len());
}

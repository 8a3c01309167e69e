use mckay_core::exactnum::{cyc_parse, cyc_render, Cyclotomic, Rational};
use proptest::prelude::*;

/// Small sums `Σ c_i ζ_{n_i}^{k_i}` over a few conductors, so that mixed
/// conductors and cancellations both occur.
fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    let term = (
        -6i64..=6,
        1i64..=4,
        prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 12, 15]),
        0i64..30,
    );
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(num, den, n, k)| {
                Cyclotomic::root_of_unity(n, k).scale(&Rational::new(num.into(), den.into()))
            })
            .sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn conjugation_and_embedding(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert!(a.abs_sq().is_real());
        let prod = (&a * &b).embed();
        prop_assert!((prod - a.embed() * b.embed()).norm() < 1e-9 * (1.0 + prod.norm()));
        prop_assert!((a.abs_f64().powi(2) - a.abs_sq().embed().re).abs() < 1e-8 * (1.0 + a.abs_f64().powi(2)));
    }

    #[test]
    fn minimized_is_equal_and_idempotent(a in cyclotomic()) {
        let m = a.minimized();
        prop_assert_eq!(&m, &a);
        prop_assert_eq!(m.minimized().conductor(), m.conductor());
        prop_assert!(a.conductor() % m.conductor() == 0);
    }

    #[test]
    fn render_round_trips(a in cyclotomic()) {
        let text = cyc_render(&a);
        let back = cyc_parse(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(cyc_render(&back), text);
    }
}

const ALPHABET: &[u8] = b"0123456789E()^*/+-";

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    /// Arbitrary strings over the literal alphabet either parse and
    /// round-trip through rendering, or fail at a byte inside the input.
    #[test]
    fn literal_fuzz(bytes in prop::collection::vec(prop::sample::select(ALPHABET.to_vec()), 0..24)) {
        let s = String::from_utf8(bytes).unwrap();
        match cyc_parse(&s) {
            Ok(x) => {
                let r = cyc_render(&x);
                prop_assert_eq!(cyc_parse(&r).unwrap(), x);
            }
            Err(e) => prop_assert!(e.position <= s.len(), "{} at {}", s, e.position),
        }
    }

    /// Corrupting one byte of a valid literal either still parses to a
    /// round-tripping value or reports a position.
    #[test]
    fn literal_mutation(a in cyclotomic(), at in any::<prop::sample::Index>(), b in prop::sample::select(ALPHABET.to_vec())) {
        let mut bytes = cyc_render(&a).into_bytes();
        let i = at.index(bytes.len());
        bytes[i] = b;
        let s = String::from_utf8(bytes).unwrap();
        match cyc_parse(&s) {
            Ok(x) => prop_assert_eq!(cyc_parse(&cyc_render(&x)).unwrap(), x),
            Err(e) => prop_assert!(e.position <= s.len()),
        }
    }
}

#[test]
fn literal_examples() {
    let half_root = cyc_parse("-1/2+1/2*E(5)").unwrap();
    assert_eq!(
        half_root,
        Cyclotomic::root_of_unity(5, 1).scale(&Rational::new(1.into(), 2.into()))
            - Cyclotomic::from_rational(&Rational::new(1.into(), 2.into()))
    );
    assert_eq!(cyc_parse("E(4)^2").unwrap(), Cyclotomic::from_integer(-1));
    assert_eq!(cyc_render(&Cyclotomic::root_of_unity(4, 2)), "-1");
    // each root is in range but the sum needs conductor 7·1605
    let e = cyc_parse("E(7)+E(1605)").unwrap_err();
    assert_eq!(e.position, 5);
    for bad in ["", "E(", "1//2", "E(0)", "1 + 1", "+"] {
        let e = cyc_parse(bad).unwrap_err();
        assert!(e.position <= bad.len(), "{bad}");
    }
}

#[test]
fn rational_values_collapse_to_conductor_one() {
    let z = Cyclotomic::root_of_unity(3, 1);
    let sum = &(&Cyclotomic::one() + &z) + &Cyclotomic::root_of_unity(3, 2);
    assert!(sum.is_zero());
    let r = &z * &z.conj();
    assert_eq!(r.minimized().conductor(), 1);
    assert_eq!(r.to_integer().unwrap(), 1.into());
}

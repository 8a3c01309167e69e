use std::sync::OnceLock;

use mckay_core::bounds::{bb_suite, lower_suite, sigma_l, verify_alt_on, BoundReport, SigmaValue};
use mckay_core::builders::*;
use mckay_core::chartable::{export_table, import_table, CharacterTable};
use mckay_core::exactnum::Cyclotomic;
use mckay_core::mckay::{diameter, mckay_graph, McKayGraph};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn pool() -> &'static [CharacterTable] {
    static POOL: OnceLock<Vec<CharacterTable>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<CharacterTable> = (3..=7).map(|n| build_sym_table(n).unwrap()).collect();
        v.extend((4..=7).map(|n| build_alt_table(n).unwrap()));
        v.extend([4, 5, 7, 8, 9, 11, 13].map(|q| build_psl2_table(q).unwrap()));
        v.extend([5, 7, 9].map(|q| build_sl2_table(q).unwrap()));
        v.extend([5, 7].map(|q| build_pgl2_table(q).unwrap()));
        v
    })
}

/// Simple rank-one tables, where Σ_l is defined.
fn lie_pool() -> Vec<&'static CharacterTable> {
    pool().iter().filter(|t| t.lie.is_some() && t.is_simple()).collect()
}

fn table_and_character() -> impl Strategy<Value = (&'static CharacterTable, usize)> {
    (0..pool().len()).prop_flat_map(|i| {
        let t = &pool()[i];
        (Just(t), 0..t.characters.len())
    })
}

fn contains(big: &McKayGraph, small: &McKayGraph) -> bool {
    (0..small.len()).all(|i| (0..small.len()).all(|j| !small.has_edge(i, j) || big.has_edge(i, j)))
}

fn sorted(mut r: BoundReport) -> BoundReport {
    r.cases.sort_by(|a, b| a.id.cmp(&b.id));
    r
}

fn relabeling(t: &CharacterTable) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    let rest: Vec<usize> = (1..t.num_classes()).collect();
    let chars: Vec<usize> = (0..t.characters.len()).collect();
    (Just(rest).prop_shuffle(), Just(chars).prop_shuffle()).prop_map(|(rest, chars)| {
        let mut classes = vec![0];
        classes.extend(rest);
        (classes, chars)
    })
}

#[test]
fn round_trip_every_built_table() {
    for t in pool() {
        let text = export_table(t);
        let back = import_table(&text).unwrap_or_else(|e| panic!("{}: {e}", t.name));
        assert_eq!(&back, t, "{}", t.name);
        assert_eq!(export_table(&back), text, "{}", t.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_conservation((t, a) in table_and_character()) {
        let g = mckay_graph(t, &t.characters[a].values).unwrap();
        prop_assert!(g.degree_conservation_failures().is_empty(), "{} {}", t.name, t.characters[a].name);
    }

    /// `M(G, ᾱ)` is the reverse of `M(G, α)`, so a real `α` gives a symmetric graph.
    #[test]
    fn real_alpha_symmetry((t, a) in table_and_character()) {
        let alpha = &t.characters[a].values;
        let conj: Vec<Cyclotomic> = alpha.iter().map(Cyclotomic::conj).collect();
        let g = mckay_graph(t, alpha).unwrap();
        let h = mckay_graph(t, &conj).unwrap();
        let real = alpha.iter().all(Cyclotomic::is_real);
        for i in 0..g.len() {
            for j in 0..g.len() {
                prop_assert_eq!(g.has_edge(i, j), h.has_edge(j, i));
                if real {
                    prop_assert_eq!(g.has_edge(i, j), g.has_edge(j, i));
                }
            }
        }
    }

    #[test]
    fn subgraph_monotonicity((t, a) in table_and_character(), pick in any::<prop::sample::Index>()) {
        let b = pick.index(t.characters.len());
        prop_assume!(a != b);
        let (x, y) = (&t.characters[a].values, &t.characters[b].values);
        let sum: Vec<Cyclotomic> = x.iter().zip(y).map(|(u, v)| u + v).collect();
        let gs = mckay_graph(t, &sum).unwrap();
        let gx = mckay_graph(t, x).unwrap();
        let gy = mckay_graph(t, y).unwrap();
        prop_assert!(contains(&gs, &gx));
        prop_assert!(contains(&gs, &gy));
        prop_assert!(diameter(&gs) <= diameter(&gx).min(diameter(&gy)));
    }

    /// Ratios are at most one, so `Σ_l` cannot grow with `l`.
    #[test]
    fn sigma_monotone(ti in any::<prop::sample::Index>(), ci in any::<prop::sample::Index>(), half in 1u64..12) {
        let tables = lie_pool();
        let t = tables[ti.index(tables.len())];
        let chi = 1 + ci.index(t.characters.len() - 1);
        prop_assume!(Some(chi) != t.trivial_index());
        let l = 2 * half;
        let exact = |l| match sigma_l(t, chi, l).unwrap().value {
            SigmaValue::Exact(r) => r,
            v => panic!("even l gave {v:?}"),
        };
        let (s0, s1) = (exact(l), exact(l + 2));
        prop_assert!(s1 <= s0, "{} {} l={}", t.name, t.characters[chi].name, l);
        match sigma_l(t, chi, l + 1).unwrap().value {
            SigmaValue::Interval { lo, hi } => {
                let (a, b) = (s1.to_f64().unwrap(), s0.to_f64().unwrap());
                prop_assert!(lo <= hi);
                prop_assert!(lo <= b * (1.0 + 1e-9) && hi >= a * (1.0 - 1e-9));
            }
            SigmaValue::Exact(v) => prop_assert!(s1 <= v && v <= s0),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_invariance_graph_suites(
        (t, perm) in (0..pool().len()).prop_flat_map(|i| {
            let t = &pool()[i];
            (Just(t), relabeling(t))
        })
    ) {
        let p = t.permuted(&perm.0, &perm.1);
        let (a, b) = (bb_suite(t), bb_suite(&p));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(sorted(a), sorted(b));
        }
        let (a, b) = (lower_suite(t), lower_suite(&p));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(sorted(a), sorted(b));
        }
    }
}

fn alt_inputs(n: u32) -> &'static (CharacterTable, CharacterTable, CharacterTable, BoundReport) {
    static FIVE: OnceLock<(CharacterTable, CharacterTable, CharacterTable, BoundReport)> = OnceLock::new();
    static SIX: OnceLock<(CharacterTable, CharacterTable, CharacterTable, BoundReport)> = OnceLock::new();
    let cell = if n == 5 { &FIVE } else { &SIX };
    cell.get_or_init(|| {
        let (s, a, p) = (
            build_sym_table(n).unwrap(),
            build_alt_table(n).unwrap(),
            build_sym_table(n - 1).unwrap(),
        );
        let r = verify_alt_on(n, &s, &a, &p).unwrap();
        (s, a, p, r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabeling_invariance_alt(
        (n, ps, pa, pp) in (5u32..=6).prop_flat_map(|n| {
            let (s, a, p, _) = alt_inputs(n);
            (Just(n), relabeling(s), relabeling(a), relabeling(p))
        })
    ) {
        let (s, a, p, expected) = alt_inputs(n);
        let r = verify_alt_on(
            n,
            &s.permuted(&ps.0, &ps.1),
            &a.permuted(&pa.0, &pa.1),
            &p.permuted(&pp.0, &pp.1),
        )
        .unwrap();
        prop_assert_eq!(&r, expected);
    }
}

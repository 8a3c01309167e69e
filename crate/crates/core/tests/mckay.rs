use mckay_core::builders::*;
use mckay_core::chartable::{import_table, CharacterTable};
use mckay_core::exactnum::{BigUint, Cyclotomic};
use mckay_core::mckay::*;

fn fixture(name: &str) -> CharacterTable {
    let path = format!("{}/tests/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    import_table(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn idx(t: &CharacterTable, name: &str) -> usize {
    t.character_index(name).unwrap_or_else(|| panic!("no {name}"))
}

fn vals(t: &CharacterTable, name: &str) -> Vec<Cyclotomic> {
    t.characters[idx(t, name)].values.clone()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn identity_tensor_case() {
    let t = build_alt_table(6).unwrap();
    let one = vals(&t, "chi(6)");
    for (i, chi) in t.characters.iter().enumerate() {
        assert_eq!(tensor_multiplicity(&t, &one, &chi.values, i).unwrap(), BigUint::from(1u32));
        let d = decompose_product(&t, &one, &chi.values).unwrap();
        assert_eq!(d, vec![(i, BigUint::from(1u32))]);
    }
}

#[test]
fn s3_square_of_standard() {
    let t = build_sym_table(3).unwrap();
    let std = vals(&t, "chi(2,1)");
    let m = tensor_multiplicity(&t, &std, &std, idx(&t, "chi(1,1,1)")).unwrap();
    assert_eq!(m, BigUint::from(1u32));
    let g = mckay_graph(&t, &std).unwrap();
    let triv = idx(&t, "chi(3)");
    let succ: Vec<usize> = g.successors(triv).collect();
    assert_eq!(succ, vec![idx(&t, "chi(2,1)")]);
    let succ: Vec<usize> = g.successors(idx(&t, "chi(2,1)")).collect();
    assert_eq!(succ, vec![0, 1, 2]);
}

#[test]
fn s5_standard_square_matches_brute_force() {
    let t = build_sym_table(5).unwrap();
    let std = vals(&t, "chi(4,1)");
    let d = decompose_product(&t, &std, &std).unwrap();
    let names: Vec<&str> = d.iter().map(|(i, _)| t.characters[*i].name.as_str()).collect();
    assert_eq!(names, ["chi(5)", "chi(4,1)", "chi(3,2)", "chi(3,1,1)"]);
    assert!(d.iter().all(|(_, m)| *m == BigUint::from(1u32)));

    // oracle over all 120 permutations: chi(4,1) = fix - 1, chi(3,2) = fixed 2-sets - fix
    let mut sum = 0i64;
    for p in permutations(5) {
        let fix = (0..5).filter(|&i| p[i] == i).count() as i64;
        let mut pairs = 0i64;
        for a in 0..5 {
            for b in a + 1..5 {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                if (x, y) == (a, b) {
                    pairs += 1;
                }
            }
        }
        sum += (fix - 1) * (fix - 1) * (pairs - fix);
    }
    assert_eq!(sum % 120, 0);
    let m = tensor_multiplicity(&t, &std, &std, idx(&t, "chi(3,2)")).unwrap();
    assert_eq!(m, BigUint::from((sum / 120) as u64));
}

#[test]
fn a5_three_dimensional_times_conjugate() {
    let t = build_alt_table(5).unwrap();
    let a = vals(&t, "chi(3,1,1)+");
    let abar: Vec<Cyclotomic> = a.iter().map(Cyclotomic::conj).collect();
    let m = tensor_multiplicity(&t, &a, &abar, idx(&t, "chi(5)")).unwrap();
    assert_eq!(m, BigUint::from(1u32));
}

#[test]
fn trivial_alpha_gives_identity_adjacency() {
    let t = build_psl2_table(7).unwrap();
    let g = mckay_graph(&t, &vals(&t, "1")).unwrap();
    for i in 0..g.len() {
        for j in 0..g.len() {
            assert_eq!(g.has_edge(i, j), i == j);
        }
    }
    assert_eq!(diameter(&g), Diameter::Disconnected);
    assert_eq!(min_power_covering(&t, &vals(&t, "1")), Err(McKayError::NotFaithful));
}

#[test]
fn non_faithful_alpha_leaves_vertices_unreachable() {
    let t = build_sym_table(5).unwrap();
    let sgn = vals(&t, "chi(1,1,1,1,1)");
    let g = mckay_graph(&t, &sgn).unwrap();
    assert!(distances(&g, 0).iter().any(Option::is_none));
    assert_eq!(diameter(&g), Diameter::Disconnected);
}

#[test]
fn s5_standard_distances() {
    let t = build_sym_table(5).unwrap();
    let g = mckay_graph_named(&t, "chi(4,1)").unwrap();
    let d = distances(&g, idx(&t, "chi(5)"));
    assert_eq!(d[idx(&t, "chi(1,1,1,1,1)")], Some(4));
    assert!(d.iter().enumerate().all(|(i, x)| i != 0 || *x == Some(0)));
    assert_eq!(diameter(&g), Diameter::Finite(4));
    assert_eq!(min_power_covering(&t, &vals(&t, "chi(4,1)")), Ok(4));
}

#[test]
fn distances_agree_with_power_accumulation() {
    for t in [
        build_sym_table(6).unwrap(),
        build_alt_table(6).unwrap(),
        build_psl2_table(11).unwrap(),
        build_sl2_table(9).unwrap(),
    ] {
        let triv = t.trivial_index().unwrap();
        for a in 0..t.characters.len() {
            let g = mckay_graph(&t, &t.characters[a].values).unwrap();
            let d = distances(&g, triv);
            let acc = power_accumulation(&t, &g, t.characters.len());
            for chi in 0..t.characters.len() {
                assert_eq!(d[chi], acc.first_level(chi), "{} {a} {chi}", t.name);
            }
            if let Some(n) = min_power_covering_of(&t, &g) {
                assert!(diameter(&g).finite().unwrap() <= n);
                assert_eq!(Some(n), d.iter().map(|x| x.unwrap()).max());
            }
        }
    }
}

#[test]
fn power_multiplicities_grow_past_machine_width() {
    let t = build_sym_table(8).unwrap();
    let g = mckay_graph_named(&t, "chi(7,1)").unwrap();
    let acc = power_accumulation(&t, &g, 30);
    let last = acc.powers.last().unwrap();
    let total: BigUint = last
        .iter()
        .zip(&g.degrees)
        .map(|(m, &d)| m * BigUint::from(d))
        .sum();
    assert_eq!(total, BigUint::from(7u32).pow(30));
    assert!(last.iter().any(|m| m.bits() > 64));
}

#[test]
fn psl2_7_steinberg_covers_in_two_steps() {
    let t = build_psl2_table(7).unwrap();
    assert!(min_power_covering(&t, &vals(&t, "St")).unwrap() <= 2);
}

#[test]
fn a5_degree_four_diameter() {
    let t = build_alt_table(5).unwrap();
    let g = mckay_graph_named(&t, "chi(4,1)").unwrap();
    assert!(diameter(&g).finite().unwrap() <= 16);
}

#[test]
fn degree_conservation_everywhere() {
    for t in [
        build_sym_table(7).unwrap(),
        build_alt_table(7).unwrap(),
        build_pgl2_table(9).unwrap(),
        fixture("psu3_3"),
    ] {
        for a in 0..t.characters.len() {
            let g = mckay_graph(&t, &t.characters[a].values).unwrap();
            assert!(g.degree_conservation_failures().is_empty(), "{}", t.name);
        }
    }
}

#[test]
fn q8_gives_affine_d4() {
    let t = fixture("q8");
    let two = t.characters.iter().position(|c| c.degree() == 2).unwrap();
    let g = mckay_graph(&t, &t.characters[two].values).unwrap();
    assert_eq!(identify_affine_dynkin(&g), Some(AffineDynkin::D(4)));
    assert!(is_isomorphic(&underlying_simple_graph(&g), &AffineDynkin::D(4).adjacency()));
}

#[test]
fn binary_icosahedral_gives_affine_e8() {
    let t = build_sl2_table(5).unwrap();
    let g = mckay_graph_named(&t, "eta1").unwrap();
    assert_eq!(g.alpha_degree(), 2);
    assert_eq!(identify_affine_dynkin(&g), Some(AffineDynkin::E8));
}

#[test]
fn exports() {
    let t = build_psl2_table(7).unwrap();
    let g = mckay_graph_named(&t, "St").unwrap();
    let dot = to_dot(&g);
    assert!(dot.starts_with("digraph \"M(PSL2(7),St)\" {"));
    assert_eq!(dot.matches("[label=\"").count() - dot.matches(" -> ").count(), 6);
    let csv = to_csv(&g);
    assert_eq!(csv.lines().count(), 7);
    let s = build_sym_table(4).unwrap();
    let csv = to_csv(&mckay_graph_named(&s, "chi(3,1)").unwrap());
    assert!(csv.starts_with("from\\to,chi(4),\"chi(3,1)\","));
}

#[test]
fn corrupt_table_is_a_fault() {
    let mut t = build_sym_table(4).unwrap();
    t.characters[1].values[1] = Cyclotomic::from_integer(5);
    let f = t.characters[1].values.clone();
    assert!(matches!(
        decompose(&t, &f),
        Err(McKayError::NotInteger { .. }) | Err(McKayError::Negative { .. })
    ));
}

use mckay_core::builders::*;
use mckay_core::chartable::{identify_steinberg, validate_table, CharacterTable};
use mckay_core::exactnum::Cyclotomic;

fn assert_valid(t: &CharacterTable) {
    let r = validate_table(t);
    assert!(r.is_valid(), "{}: {}", t.name, r);
}

fn sorted_degrees(t: &CharacterTable) -> Vec<u64> {
    let mut d = t.degrees();
    d.sort_unstable();
    d
}

/// Partition count by Euler's pentagonal recurrence.
fn euler_partition_count(n: i64) -> i64 {
    let mut p = vec![1i64];
    for m in 1..=n {
        let mut total = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[(m - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[(m - g2) as usize];
            }
        }
        p.push(total);
    }
    p[n as usize]
}

#[test]
fn partition_listing() {
    let p3: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
    assert_eq!(p3, ["(3)", "(2,1)", "(1,1,1)"]);
    for n in 1..=12 {
        let ps = partitions(n);
        assert_eq!(ps.len() as i64, euler_partition_count(n as i64), "n = {n}");
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }
}

#[test]
fn s3_matches_permutation_matrices() {
    let t = build_sym_table(3).unwrap();
    let rows: Vec<Vec<Cyclotomic>> = t.characters.iter().map(|c| c.values.clone()).collect();
    let ints = |v: [i64; 3]| v.iter().map(|&x| Cyclotomic::from_integer(x)).collect::<Vec<_>>();
    // trace of the permutation matrix minus one, computed on (), (12), (123)
    let perms: [[usize; 3]; 3] = [[0, 1, 2], [1, 0, 2], [1, 2, 0]];
    let fixed: Vec<i64> = perms
        .iter()
        .map(|p| (0..3).filter(|&i| p[i] == i).count() as i64)
        .collect();
    assert_eq!(rows[1], ints([fixed[0] - 1, fixed[1] - 1, fixed[2] - 1]));
    assert_eq!(rows, vec![ints([1, 1, 1]), ints([2, 0, -1]), ints([1, -1, 1])]);
    assert_eq!(
        t.classes.iter().map(|c| c.size).collect::<Vec<_>>(),
        vec![1, 3, 2]
    );
}

#[test]
fn symmetric_tables_validate() {
    for n in 1..=8 {
        assert_valid(&build_sym_table(n).unwrap());
    }
    assert_eq!(build_sym_table(1).unwrap().num_classes(), 1);
    assert!(build_sym_table(0).is_err());
    assert!(build_sym_table(13).is_err());
}

#[test]
fn trivial_and_sign_characters() {
    for n in 2..=7 {
        let classes = sym_classes(n);
        let triv = Partition::new(vec![n]);
        let sign = Partition::new(vec![1; n as usize]);
        for ct in &classes {
            assert_eq!(mn_value(&triv, ct).unwrap(), 1);
            assert_eq!(mn_value(&sign, ct).unwrap(), ct.sign());
        }
    }
}

#[test]
fn degree_sum_counts_involutions() {
    for n in 1..=8u32 {
        let t = build_sym_table(n).unwrap();
        let sum: u64 = t.degrees().iter().sum();
        let perms = permutations(n as usize);
        let involutions = perms
            .iter()
            .filter(|p| (0..p.len()).all(|i| p[p[i]] == i))
            .count() as u64;
        assert_eq!(sum, involutions, "n = {n}");
    }
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
fn alternating_tables_validate() {
    for n in 3..=9 {
        assert_valid(&build_alt_table(n).unwrap());
    }
    assert_eq!(sorted_degrees(&build_alt_table(5).unwrap()), vec![1, 3, 3, 4, 5]);
    assert_eq!(sorted_degrees(&build_alt_table(4).unwrap()), vec![1, 1, 1, 3]);
    assert!(build_alt_table(2).is_err());
}

#[test]
fn a5_split_values() {
    let t = build_alt_table(5).unwrap();
    let plus = t.character_index("chi(3,1,1)+").unwrap();
    let minus = t.character_index("chi(3,1,1)-").unwrap();
    let c5p = t.class_index("(5)+").unwrap();
    let c5m = t.class_index("(5)-").unwrap();
    let golden: Cyclotomic = "-E(5)^2-E(5)^3".parse().unwrap();
    let golden_conj: Cyclotomic = "1+E(5)^2+E(5)^3".parse().unwrap();
    assert_eq!(t.characters[plus].values[c5p], golden);
    assert_eq!(t.characters[plus].values[c5m], golden_conj);
    assert_eq!(t.characters[minus].values[c5p], golden_conj);
    assert!(plus < minus);
}

#[test]
fn split_pairs_sum_to_restriction() {
    for n in 3..=9 {
        let s = build_sym_table(n).unwrap();
        let a = build_alt_table(n).unwrap();
        for (lambda, chi) in partitions(n).iter().zip(&s.characters) {
            if !lambda.is_self_associated() {
                continue;
            }
            let name = character_name(lambda);
            let p = &a.characters[a.character_index(&format!("{name}+")).unwrap()];
            let m = &a.characters[a.character_index(&format!("{name}-")).unwrap()];
            let restricted = restrict_sym_to_alt(n, &chi.values);
            let sum: Vec<Cyclotomic> = p.values.iter().zip(&m.values).map(|(x, y)| x + y).collect();
            assert_eq!(sum, restricted);
            let eps_real = (n as usize - lambda.diagonal_hooks().len()) / 2 % 2 == 0;
            let conj: Vec<Cyclotomic> = p.values.iter().map(Cyclotomic::conj).collect();
            if eps_real {
                assert_eq!(conj, p.values);
            } else {
                assert_eq!(conj, m.values);
            }
        }
    }
}

#[test]
fn branching_rule_on_two_row_characters() {
    for n in 5..=8u32 {
        let s = build_sym_table(n).unwrap();
        let s1 = build_sym_table(n - 1).unwrap();
        let chi = |t: &CharacterTable, parts: Vec<u32>| {
            t.character_index(&character_name(&Partition::new(parts))).unwrap()
        };
        let top = &s.characters[chi(&s, vec![n - 2, 2])].values;
        let res = restrict_to_previous_sym(n, top);
        let a = &s1.characters[chi(&s1, vec![n - 2, 1])].values;
        let b = &s1.characters[chi(&s1, vec![n - 3, 2])].values;
        let expect: Vec<Cyclotomic> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        assert_eq!(res, expect, "n = {n}");
    }
}

#[test]
fn young_characters_by_fixed_points() {
    let v = young_perm_character(5, &[4, 1]).unwrap();
    let expect: Vec<Cyclotomic> = [5, 3, 1, 2, 0, 1, 0].iter().map(|&x| Cyclotomic::from_integer(x)).collect();
    assert_eq!(v.values, expect);
    assert!(young_perm_character(5, &[3, 1]).is_err());
}

#[test]
fn rank_one_tables_validate() {
    for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49] {
        for t in [
            build_psl2_table(q).unwrap(),
            build_sl2_table(q).unwrap(),
            build_pgl2_table(q).unwrap(),
        ] {
            assert_valid(&t);
            let st = identify_steinberg(&t).unwrap_or_else(|e| panic!("{}: {e}", t.name));
            assert_eq!(t.characters[st.st_index].name, "St");
        }
        let psl = build_psl2_table(q).unwrap();
        let expected_order = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
        assert_eq!(psl.classes.iter().map(|c| c.size).sum::<u64>(), expected_order);
        if q % 2 == 1 {
            assert_eq!(psl.num_classes() as u64, (q + 5) / 2);
        }
        assert!(psl.is_simple());
    }
}

#[test]
fn rank_one_examples() {
    assert_eq!(sorted_degrees(&build_psl2_table(7).unwrap()), vec![1, 3, 3, 6, 7, 8]);
    assert_eq!(sorted_degrees(&build_psl2_table(5).unwrap()), vec![1, 3, 3, 4, 5]);
    let sl = build_sl2_table(5).unwrap();
    assert_eq!(sl.order, 120);
    assert_eq!(sl.classes.iter().filter(|c| c.is_central).count(), 2);
    assert!(build_psl2_table(6).is_err());
    assert!(build_psl2_table(3).is_err());
    assert!(build_psl2_table(53).is_err());
}

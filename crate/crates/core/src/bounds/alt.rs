use std::collections::HashMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{distinct_values, partition_of_name, BoundReport, BoundsError, CaseRecord, Result};
use crate::builders::{build_alt_table, build_sym_table, Partition};
use crate::chartable::CharacterTable;
use crate::exactnum::Cyclotomic;
use crate::mckay::{diameter, mckay_graph, min_power_covering_of};

pub const MIN_ALT_DEGREE: u32 = 5;
pub const MAX_ALT_DEGREE: u32 = 8;

/// Every faithful irreducible of `S_n` and `A_n` has diameter and `N(α)` at
/// most `4n − 4`, with the sharper step bounds where they apply.
pub fn verify_alt(n: u32) -> Result<BoundReport> {
    if !(MIN_ALT_DEGREE..=MAX_ALT_DEGREE).contains(&n) {
        return Err(BoundsError::OutOfRange {
            what: "n",
            value: n as u64,
            min: MIN_ALT_DEGREE as u64,
            max: MAX_ALT_DEGREE as u64,
        });
    }
    let (sym, (alt, prev)) = rayon::join(
        || build_sym_table(n),
        || rayon::join(|| build_alt_table(n), || build_sym_table(n - 1)),
    );
    verify_alt_on(n, &sym?, &alt?, &prev?)
}

fn is_square(l: &Partition) -> bool {
    let p = l.parts();
    p.iter().all(|&x| x as usize == p.len())
}

/// Restriction to `S_{n−1}` through class names: class `μ` of `S_{n−1}`
/// takes the value on class `μ ∪ (1)` of `S_n`.
fn restrict_by_name(
    sym: &CharacterTable,
    prev: &CharacterTable,
    values: &[Cyclotomic],
) -> Result<Vec<Cyclotomic>> {
    let index: HashMap<&str, usize> = sym
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.as_str(), i))
        .collect();
    prev.classes
        .iter()
        .map(|c| {
            let mu: Partition = c
                .name
                .parse()
                .map_err(|_| BoundsError::Invalid(format!("class name {} is not a cycle type", c.name)))?;
            let key = mu.with_fixed_point().to_string();
            index
                .get(key.as_str())
                .map(|&k| values[k].clone())
                .ok_or_else(|| BoundsError::Invalid(format!("no class {key} in {}", sym.name)))
        })
        .collect()
}

/// [`verify_alt`] on given tables of `S_n`, `A_n` and `S_{n−1}`, in any row
/// and column order. Characters and classes are recognized by builder names.
pub fn verify_alt_on(
    n: u32,
    sym: &CharacterTable,
    alt: &CharacterTable,
    prev: &CharacterTable,
) -> Result<BoundReport> {
    let bound = 4 * n as usize - 4;
    let standard = Partition::new(vec![n - 1, 1]);

    let sym_cases = (0..sym.characters.len())
        .into_par_iter()
        .filter(|&i| sym.is_faithful(&sym.characters[i].values))
        .map(|i| {
            let c = &sym.characters[i];
            let lam = partition_of_name(&c.name)
                .ok_or_else(|| BoundsError::Invalid(format!("character name {}", c.name)))?;
            let g = mckay_graph(sym, &c.values)?;
            let d = diameter(&g)
                .finite()
                .ok_or_else(|| BoundsError::NotFaithful(c.name.clone()))?;
            let cover = min_power_covering_of(sym, &g)
                .ok_or_else(|| BoundsError::NotFaithful(c.name.clone()))?;
            let res = restrict_by_name(sym, prev, &c.values)?;
            let norm = prev
                .inner_product(&res, &res)
                .to_integer()
                .and_then(|v| v.to_u64())
                .ok_or_else(|| BoundsError::Invalid("restriction norm".into()))?;
            let mut case = CaseRecord::new(format!("S{n}/{}", c.name))
                .input("group", format!("S{n}"))
                .input("alpha", c.name.as_str())
                .computed("diameter", d)
                .computed("covering_power", cover)
                .computed("restriction_norm", norm)
                .bound("diameter", bound)
                .bound("covering_power", bound);
            let mut pass = d <= bound && cover <= bound;
            if lam == standard {
                let nd = distinct_values(&c.values);
                case = case
                    .computed("distinct_values", nd)
                    .bound("standard_covering_power", n - 1)
                    .bound("standard_distinct_values", n);
                pass &= cover <= n as usize - 1 && nd == n as usize;
            }
            if norm >= 2 {
                case = case.bound("reducible_restriction_covering_power", 2 * n - 2);
                pass &= cover <= 2 * n as usize - 2;
            }
            Ok(case.pass(pass))
        })
        .collect::<Result<Vec<_>>>()?;

    let triv = alt.trivial_index();
    let alt_cases = (0..alt.characters.len())
        .into_par_iter()
        .filter(|&i| Some(i) != triv)
        .map(|i| {
            let c = &alt.characters[i];
            let lam = partition_of_name(&c.name)
                .ok_or_else(|| BoundsError::Invalid(format!("character name {}", c.name)))?;
            let split = c.name.ends_with('+') || c.name.ends_with('-');
            let g = mckay_graph(alt, &c.values)?;
            let d = diameter(&g)
                .finite()
                .ok_or_else(|| BoundsError::NotFaithful(c.name.clone()))?;
            let cover = min_power_covering_of(alt, &g)
                .ok_or_else(|| BoundsError::NotFaithful(c.name.clone()))?;
            let real = c.values.iter().all(Cyclotomic::is_real);
            let mut case = CaseRecord::new(format!("A{n}/{}", c.name))
                .input("group", format!("A{n}"))
                .input("alpha", c.name.as_str())
                .computed("diameter", d)
                .computed("covering_power", cover)
                .computed("real", real)
                .bound("diameter", bound)
                .bound("covering_power", bound);
            let mut pass = d <= bound && cover <= bound;
            if split && n <= 6 {
                let nd = distinct_values(&c.values);
                case = case
                    .computed("distinct_values", nd)
                    .bound("split_distinct_values", 5)
                    .bound("split_covering_power", 4);
                pass &= nd <= 5 && cover <= 4;
            } else if split && !real && !is_square(&lam) {
                case = case.bound("nonreal_covering_power", 2 * n - 2);
                pass &= cover <= 2 * n as usize - 2;
            }
            Ok(case.pass(pass))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut cases = sym_cases;
    cases.extend(alt_cases);
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(BoundReport::new("alt", cases))
}

use num_bigint::BigInt;

use super::partition::{factorial, partitions, CycleType, Partition};
use super::symmetric::{character_name, check_sym_range, sym_classes, sym_values};
use super::BuildError;
use crate::chartable::{Character, CharacterTable, ConjugacyClass};
use crate::exactnum::{Cyclotomic, Rational};

/// One `A_n` class: its cycle type and, for split classes, which half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltClass {
    pub cycle_type: CycleType,
    /// `Some(true)` for the `+` half, `Some(false)` for `-`.
    pub half: Option<bool>,
    /// Column of the cycle type in the `S_n` table.
    pub sym_index: usize,
}

/// `A_n` classes in table order: even cycle types in `S_n` order, split
/// types as `+` then `-`.
pub fn alt_classes(n: u32) -> Vec<AltClass> {
    let mut out = Vec::new();
    for (i, ct) in sym_classes(n).into_iter().enumerate() {
        if ct.sign() != 1 {
            continue;
        }
        if ct.splits_in_alternating() && n > 1 {
            for half in [true, false] {
                out.push(AltClass {
                    cycle_type: ct.clone(),
                    half: Some(half),
                    sym_index: i,
                });
            }
        } else {
            out.push(AltClass {
                cycle_type: ct,
                half: None,
                sym_index: i,
            });
        }
    }
    out
}

/// Restrict an `S_n` class function (in `S_n` class order) to `A_n`.
pub fn restrict_sym_to_alt(n: u32, values: &[Cyclotomic]) -> Vec<Cyclotomic> {
    alt_classes(n)
        .iter()
        .map(|c| values[c.sym_index].clone())
        .collect()
}

fn half(v: i64) -> Cyclotomic {
    Cyclotomic::from_rational(&Rational::new(BigInt::from(v), BigInt::from(2)))
}

pub fn build_alt_table(n: u32) -> Result<CharacterTable, BuildError> {
    check_sym_range(n, 3)?;
    let classes = alt_classes(n);
    let table_classes = classes
        .iter()
        .map(|c| {
            let sign = match c.half {
                Some(true) => "+",
                Some(false) => "-",
                None => "",
            };
            let size = c.cycle_type.class_size() / if c.half.is_some() { 2 } else { 1 };
            ConjugacyClass::new(
                format!("{}{sign}", c.cycle_type),
                size,
                c.cycle_type.element_order(),
            )
        })
        .collect();

    let sym = sym_values(n);
    let mut characters = Vec::new();
    for (row, lambda) in partitions(n).iter().enumerate() {
        let assoc = lambda.conjugate();
        if *lambda < assoc {
            continue;
        }
        let restricted = || classes.iter().map(|c| sym[row][c.sym_index]);
        if *lambda != assoc {
            characters.push(Character::new(
                character_name(lambda),
                restricted().map(Cyclotomic::from_integer).collect(),
            ));
            continue;
        }
        let hooks = lambda.diagonal_hooks();
        let split_type = Partition::new(hooks.clone());
        let eps: i64 = if (n as usize - hooks.len()) / 2 % 2 == 0 { 1 } else { -1 };
        let prod: i64 = hooks.iter().map(|&h| h as i64).product();
        let root = Cyclotomic::sqrt_int(eps * prod);
        let eps_c = Cyclotomic::from_integer(eps);
        let halve = Rational::new(BigInt::from(1), BigInt::from(2));
        let plus = (&eps_c + &root).scale(&halve);
        let minus = (&eps_c - &root).scale(&halve);
        for (suffix, first) in [("+", true), ("-", false)] {
            let values = classes
                .iter()
                .map(|c| match c.half {
                    Some(h) if c.cycle_type == split_type => {
                        if h == first {
                            plus.clone()
                        } else {
                            minus.clone()
                        }
                    }
                    _ => half(sym[row][c.sym_index]),
                })
                .collect();
            characters.push(Character::new(
                format!("{}{suffix}", character_name(lambda)),
                values,
            ));
        }
    }

    Ok(CharacterTable {
        name: format!("A{n}"),
        order: factorial(n) / 2,
        characteristic: None,
        lie: None,
        classes: table_classes,
        characters,
    })
}

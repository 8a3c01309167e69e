use std::collections::HashMap;

use rayon::prelude::*;

use super::partition::{factorial, partitions, CycleType, Partition};
use super::BuildError;
use crate::chartable::{Character, CharacterTable, ConjugacyClass};
use crate::exactnum::Cyclotomic;

pub const MAX_SYM_DEGREE: u32 = 12;

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

/// Beta-set of `λ` with `k` beads, decreasing.
fn beta_set(parts: &[u32], k: usize) -> Vec<u32> {
    (0..k)
        .map(|i| parts.get(i).copied().unwrap_or(0) + (k - 1 - i) as u32)
        .collect()
}

fn from_beta(beta: &mut [u32]) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let k = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (k - 1 - i) as u32)
        .filter(|&p| p > 0)
        .collect()
}

fn mn_rec(lambda: &[u32], cycles: &[u32], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = beta_set(lambda, lambda.len());
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        let smaller = from_beta(&mut moved);
        let v = mn_rec(&smaller, rest, memo);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// `χ^λ` on the class of cycle type `ct`, by rim-hook removal.
pub fn mn_value(lambda: &Partition, ct: &CycleType) -> Result<i64, BuildError> {
    if lambda.n() != ct.n() {
        return Err(BuildError::SizeMismatch {
            expected: lambda.n(),
            found: ct.n(),
        });
    }
    Ok(mn_rec(lambda.parts(), ct.parts(), &mut Memo::new()))
}

/// Class parameters of `S_n` in table order: reverse of [`partitions`], identity first.
pub fn sym_classes(n: u32) -> Vec<CycleType> {
    let mut c = partitions(n);
    c.reverse();
    c
}

/// Integer character values of `S_n`: rows follow [`partitions`], columns [`sym_classes`].
pub fn sym_values(n: u32) -> Vec<Vec<i64>> {
    let classes = sym_classes(n);
    partitions(n)
        .par_iter()
        .map(|lambda| {
            let mut memo = Memo::new();
            classes
                .iter()
                .map(|ct| mn_rec(lambda.parts(), ct.parts(), &mut memo))
                .collect()
        })
        .collect()
}

pub(crate) fn check_sym_range(n: u32, min: u32) -> Result<(), BuildError> {
    if n < min || n > MAX_SYM_DEGREE {
        return Err(BuildError::OutOfRange {
            what: "n",
            value: n as u64,
            min: min as u64,
            max: MAX_SYM_DEGREE as u64,
        });
    }
    Ok(())
}

pub fn character_name(lambda: &Partition) -> String {
    format!("chi{lambda}")
}

pub fn build_sym_table(n: u32) -> Result<CharacterTable, BuildError> {
    check_sym_range(n, 1)?;
    let classes: Vec<ConjugacyClass> = sym_classes(n)
        .iter()
        .map(|ct| ConjugacyClass::new(ct.to_string(), ct.class_size(), ct.element_order()))
        .collect();
    let characters = partitions(n)
        .iter()
        .zip(sym_values(n))
        .map(|(lambda, row)| {
            Character::new(
                character_name(lambda),
                row.into_iter().map(Cyclotomic::from_integer).collect(),
            )
        })
        .collect();
    Ok(CharacterTable {
        name: format!("S{n}"),
        order: factorial(n),
        characteristic: None,
        lie: None,
        classes,
        characters,
    })
}

/// Ways to place the labelled cycles into blocks whose sizes are `caps`.
fn block_fillings(cycles: &[u32], caps: &mut Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
    let Some(&c) = cycles.first() else {
        return caps.iter().all(|&x| x == 0) as u64;
    };
    let key = (cycles.len(), caps.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for b in 0..caps.len() {
        if caps[b] >= c {
            caps[b] -= c;
            total += block_fillings(&cycles[1..], caps, memo);
            caps[b] += c;
        }
    }
    memo.insert(key, total);
    total
}

/// Permutation character of `S_n` on cosets of the Young subgroup `S_μ`,
/// in [`sym_classes`] order. Zero entries of `μ` are ignored.
pub fn young_perm_character(n: u32, mu: &[u32]) -> Result<Character, BuildError> {
    let total: u32 = mu.iter().sum();
    if total != n {
        return Err(BuildError::SizeMismatch {
            expected: n,
            found: total,
        });
    }
    let caps: Vec<u32> = mu.iter().copied().filter(|&m| m > 0).collect();
    let values = sym_classes(n)
        .iter()
        .map(|ct| {
            let mut memo = HashMap::new();
            let v = block_fillings(ct.parts(), &mut caps.clone(), &mut memo);
            Cyclotomic::from_integer(v as i64)
        })
        .collect();
    let label: Vec<String> = mu.iter().map(u32::to_string).collect();
    Ok(Character::new(format!("ind({})", label.join(",")), values))
}

/// Restriction of a class function of `S_n` (in [`sym_classes`] order) to `S_{n−1}`.
pub fn restrict_to_previous_sym(n: u32, values: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let index: HashMap<CycleType, usize> = sym_classes(n)
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    sym_classes(n - 1)
        .iter()
        .map(|ct| values[index[&ct.with_fixed_point()]].clone())
        .collect()
}

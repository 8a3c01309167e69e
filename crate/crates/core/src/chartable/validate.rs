use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{is_prime, prime_power, CharacterTable};
use crate::exactnum::{Cyclotomic, MAGNITUDE_TOL};

/// One violated table invariant. Indices refer to table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    DuplicateClassName(String),
    DuplicateCharacterName(String),
    IdentityClass(String),
    ClassSizeDivisibility { class: usize, size: u64 },
    ClassSizeSum { sum: u64, order: u64 },
    CharacterCount { characters: usize, classes: usize },
    ValueCount { character: usize, found: usize },
    Degree { character: usize, value: String },
    DegreeSquareSum { sum: BigInt, order: u64 },
    RowOrthogonality { i: usize, j: usize, value: String },
    ColumnOrthogonality { k: usize, l: usize, value: String },
    CentralFlag { class: usize, flagged: bool },
    Magnitude { character: usize, class: usize },
    NoTrivialCharacter,
    Lie(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Empty => write!(f, "table has no classes"),
            DuplicateClassName(n) => write!(f, "duplicate class name {n:?}"),
            DuplicateCharacterName(n) => write!(f, "duplicate character name {n:?}"),
            IdentityClass(m) => write!(f, "identity class: {m}"),
            ClassSizeDivisibility { class, size } => {
                write!(f, "class {class}: size {size} does not divide the group order")
            }
            ClassSizeSum { sum, order } => write!(f, "class sizes sum to {sum}, order is {order}"),
            CharacterCount { characters, classes } => {
                write!(f, "{characters} characters for {classes} classes")
            }
            ValueCount { character, found } => {
                write!(f, "character {character} has {found} values")
            }
            Degree { character, value } => {
                write!(f, "character {character}: degree {value} is not a positive integer")
            }
            DegreeSquareSum { sum, order } => {
                write!(f, "sum of squared degrees is {sum}, order is {order}")
            }
            RowOrthogonality { i, j, value } => {
                write!(f, "row orthogonality: [chi_{i}, chi_{j}] = {value}")
            }
            ColumnOrthogonality { k, l, value } => {
                write!(f, "column orthogonality: classes {k},{l} give {value}")
            }
            CentralFlag { class, flagged } => write!(
                f,
                "class {class}: central flag {flagged} disagrees with the character values"
            ),
            Magnitude { character, class } => {
                write!(f, "|chi_{character}(g_{class})| exceeds chi_{character}(1)")
            }
            NoTrivialCharacter => write!(f, "no trivial character"),
            Lie(m) => write!(f, "lie parameters: {m}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Check every table invariant exactly. An empty report means the table is valid.
pub fn validate_table(t: &CharacterTable) -> ValidationReport {
    let mut v = Vec::new();
    let k = t.classes.len();
    if k == 0 {
        return ValidationReport {
            violations: vec![Violation::Empty],
        };
    }

    let mut seen = HashSet::new();
    for c in &t.classes {
        if !seen.insert(c.name.as_str()) {
            v.push(Violation::DuplicateClassName(c.name.clone()));
        }
    }
    let mut seen = HashSet::new();
    for c in &t.characters {
        if !seen.insert(c.name.as_str()) {
            v.push(Violation::DuplicateCharacterName(c.name.clone()));
        }
    }

    let id = &t.classes[0];
    if id.size != 1 || id.rep_order != 1 || !id.is_central {
        v.push(Violation::IdentityClass(format!(
            "first class {:?} must have size 1, order 1 and be central",
            id.name
        )));
    }
    for (i, c) in t.classes.iter().enumerate() {
        if c.size == 0 || t.order % c.size != 0 {
            v.push(Violation::ClassSizeDivisibility {
                class: i,
                size: c.size,
            });
        }
        if i > 0 && c.rep_order == 1 {
            v.push(Violation::IdentityClass(format!(
                "class {:?} has representative order 1",
                c.name
            )));
        }
    }
    let sum: u64 = t.classes.iter().map(|c| c.size).sum();
    if sum != t.order {
        v.push(Violation::ClassSizeSum {
            sum,
            order: t.order,
        });
    }

    if let Some(lie) = &t.lie {
        if !is_prime(lie.p) || prime_power(lie.q).map(|(p, _)| p) != Some(lie.p) {
            v.push(Violation::Lie(format!("q = {} is not a power of p = {}", lie.q, lie.p)));
        }
        if t.characteristic != Some(lie.p) {
            v.push(Violation::Lie("characteristic differs from p".into()));
        }
    }

    if t.characters.len() != k {
        v.push(Violation::CharacterCount {
            characters: t.characters.len(),
            classes: k,
        });
    }
    let mut shape_ok = t.characters.len() == k;
    for (i, c) in t.characters.iter().enumerate() {
        if c.values.len() != k {
            v.push(Violation::ValueCount {
                character: i,
                found: c.values.len(),
            });
            shape_ok = false;
        }
    }
    if !shape_ok {
        return ValidationReport { violations: v };
    }

    let mut degrees_ok = true;
    let mut sq_sum = BigInt::zero();
    for (i, c) in t.characters.iter().enumerate() {
        match c.values[0].to_integer() {
            Some(d) if d.is_positive() => sq_sum += &d * &d,
            _ => {
                degrees_ok = false;
                v.push(Violation::Degree {
                    character: i,
                    value: c.values[0].to_string(),
                });
            }
        }
    }
    if degrees_ok && sq_sum != BigInt::from(t.order) {
        v.push(Violation::DegreeSquareSum {
            sum: sq_sum,
            order: t.order,
        });
    }
    if !degrees_ok || t.order == 0 || t.classes.iter().any(|c| c.size == 0) {
        return ValidationReport { violations: v };
    }

    let conj: Vec<Vec<Cyclotomic>> = t
        .characters
        .iter()
        .map(|c| c.values.iter().map(Cyclotomic::conj).collect())
        .collect();

    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let rows: Vec<Violation> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let ip = t.inner_product_preconj(&t.characters[i].values, &conj[j]);
            let expected = if i == j {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            };
            (ip != expected).then(|| Violation::RowOrthogonality {
                i,
                j,
                value: ip.to_string(),
            })
        })
        .collect();
    v.extend(rows);

    let cols: Vec<Violation> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let s = Cyclotomic::sum_grouped(
                (0..k).map(|i| &t.characters[i].values[a] * &conj[i][b]),
            );
            let expected = if a == b {
                Cyclotomic::from_integer((t.order / t.classes[a].size) as i64)
            } else {
                Cyclotomic::zero()
            };
            (s != expected).then(|| {
                Violation::ColumnOrthogonality {
                    k: a,
                    l: b,
                    value: s.to_string(),
                }
            })
        })
        .collect();
    v.extend(cols);

    for (g, class) in t.classes.iter().enumerate() {
        let derived = (0..k).all(|i| {
            let d = &t.characters[i].values[0];
            &t.characters[i].values[g] * &conj[i][g] == d * d
        });
        if derived != class.is_central {
            v.push(Violation::CentralFlag {
                class: g,
                flagged: class.is_central,
            });
        }
    }

    for (i, c) in t.characters.iter().enumerate() {
        let d = c.values[0].abs_f64();
        for (g, x) in c.values.iter().enumerate() {
            if x.abs_f64() > d + MAGNITUDE_TOL {
                v.push(Violation::Magnitude {
                    character: i,
                    class: g,
                });
            }
        }
    }

    if t.trivial_index().is_none() {
        v.push(Violation::NoTrivialCharacter);
    }

    ValidationReport { violations: v }
}

//! Character tables: data model, exact validation, Steinberg extraction and
//! the JSON exchange format.

mod format;
mod steinberg;
mod validate;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::{Cyclotomic, Rational};

pub use format::{export_table, import_table, import_table_unchecked, ImportError};
pub use steinberg::{identify_steinberg, SteinbergData, SteinbergEntry, SteinbergError};
pub use validate::{validate_table, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
    /// Order of a representative.
    pub rep_order: u64,
    pub is_central: bool,
    /// Support `ν(g)`, carried only by annotated imports.
    pub support: Option<u32>,
    /// Name of the image class in the table of a central quotient.
    pub image: Option<String>,
    /// Marks the class of transvections in an imported classical group.
    pub transvection: bool,
}

impl ConjugacyClass {
    pub fn new(name: impl Into<String>, size: u64, rep_order: u64) -> Self {
        ConjugacyClass {
            name: name.into(),
            size,
            rep_order,
            is_central: size == 1,
            support: None,
            image: None,
            transvection: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(name: impl Into<String>, values: Vec<Cyclotomic>) -> Self {
        Character {
            name: name.into(),
            values,
        }
    }

    /// `χ(1)` as an integer; panics if the identity value is not a rational integer.
    pub fn degree(&self) -> u64 {
        self.values[0]
            .to_integer()
            .and_then(|d| d.to_u64())
            .expect("character degree is not a nonnegative integer")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Epsilon {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-", alias = "−")]
    Minus,
}

/// Parameters of `PSL_n^ε(q)`-style groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LieParams {
    pub n: u32,
    pub q: u64,
    pub epsilon: Epsilon,
    pub rank: u32,
    pub p: u64,
}

impl LieParams {
    /// Derives `p` from `q`; returns `None` unless `q` is a prime power.
    pub fn new(n: u32, q: u64, epsilon: Epsilon, rank: u32) -> Option<Self> {
        let (p, _) = prime_power(q)?;
        Some(LieParams {
            n,
            q,
            epsilon,
            rank,
            p,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub characteristic: Option<u64>,
    pub lie: Option<LieParams>,
    pub classes: Vec<ConjugacyClass>,
    pub characters: Vec<Character>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.characters[chi].degree()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(Character::degree).collect()
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order / self.classes[class].size
    }

    pub fn character_index(&self, name: &str) -> Option<usize> {
        self.characters.iter().position(|c| c.name == name)
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    /// Index of the character that is identically one.
    pub fn trivial_index(&self) -> Option<usize> {
        let one = Cyclotomic::one();
        self.characters
            .iter()
            .position(|c| c.values.iter().all(|v| *v == one))
    }

    /// `[a, b] = (1/|G|) Σ_k |g_k^G| a(g_k) conj(b(g_k))`, exact.
    ///
    /// The result is rational whenever the arguments are genuine class
    /// functions of a valid table; corrupt data can produce anything.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let conj_b: Vec<Cyclotomic> = b.iter().map(Cyclotomic::conj).collect();
        self.inner_product_preconj(a, &conj_b)
    }

    /// As [`Self::inner_product`], with the second argument already conjugated.
    pub fn inner_product_preconj(&self, a: &[Cyclotomic], conj_b: &[Cyclotomic]) -> Cyclotomic {
        debug_assert_eq!(a.len(), self.classes.len());
        let total = Cyclotomic::sum_grouped(
            self.classes
                .iter()
                .zip(a.iter().zip(conj_b))
                .filter(|(_, (x, y))| !x.is_zero() && !y.is_zero())
                .map(|(c, (x, y))| (x * y).scale(&Rational::from_integer(c.size.into()))),
        );
        total.scale(&Rational::new(BigInt::from(1), BigInt::from(self.order)))
    }

    /// Classes on which a class function takes its identity value.
    pub fn kernel_classes(&self, values: &[Cyclotomic]) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&k| values[k] == values[0])
            .collect()
    }

    /// A character is faithful when only the identity lies in its kernel.
    pub fn is_faithful(&self, values: &[Cyclotomic]) -> bool {
        self.kernel_classes(values).len() == 1 && self.classes[0].size == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.iter().all(|c| c.size == 1)
    }

    /// Simple non-abelian, read off the table: every nontrivial irreducible is faithful.
    pub fn is_simple(&self) -> bool {
        if self.is_abelian() {
            return false;
        }
        let triv = self.trivial_index();
        self.characters
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != triv)
            .all(|(_, c)| self.is_faithful(&c.values))
    }

    /// `|Z(G)|`, counted from the central classes.
    pub fn center_order(&self) -> u64 {
        self.classes.iter().filter(|c| c.is_central).count() as u64
    }

    /// Semisimple classes have representative order prime to the characteristic.
    pub fn is_semisimple(&self, class: usize) -> Option<bool> {
        let p = self.characteristic?;
        Some(gcd(self.classes[class].rep_order, p) == 1)
    }

    /// Largest irreducible degree `b(G)`.
    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Smallest nontrivial irreducible degree `d(G)`.
    pub fn min_nontrivial_degree(&self) -> Option<u64> {
        let triv = self.trivial_index();
        self.characters
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != triv)
            .map(|(_, c)| c.degree())
            .min()
    }

    /// Classwise product of two class functions.
    pub fn product(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }

    /// Table with classes and characters reordered; `class_perm[0]` must be 0.
    pub fn permuted(&self, class_perm: &[usize], char_perm: &[usize]) -> CharacterTable {
        assert_eq!(class_perm[0], 0, "identity class must stay first");
        CharacterTable {
            name: self.name.clone(),
            order: self.order,
            characteristic: self.characteristic,
            lie: self.lie,
            classes: class_perm.iter().map(|&k| self.classes[k].clone()).collect(),
            characters: char_perm
                .iter()
                .map(|&i| {
                    let c = &self.characters[i];
                    Character::new(
                        c.name.clone(),
                        class_perm.iter().map(|&k| c.values[k].clone()).collect(),
                    )
                })
                .collect(),
        }
    }
}

/// Class and character permutations carrying `b` onto `a`, if the tables
/// agree up to reordering. Classes must match in size and element order.
///
/// Returns `(class_perm, char_perm)` with `b.permuted(&class_perm, &char_perm)`
/// equal to `a` in values, sizes and orders.
pub fn find_equivalence(a: &CharacterTable, b: &CharacterTable) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = a.num_classes();
    if a.order != b.order || k != b.num_classes() || a.characters.len() != b.characters.len() {
        return None;
    }
    let text = |t: &CharacterTable| -> Vec<Vec<String>> {
        t.characters
            .iter()
            .map(|c| c.values.iter().map(|v| v.to_string()).collect())
            .collect()
    };
    let (ta, tb) = (text(a), text(b));

    fn partial_rows(t: &[Vec<String>], cols: &[usize]) -> Vec<Vec<String>> {
        let mut rows: Vec<Vec<String>> = t
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        rows.sort();
        rows
    }

    fn extend(
        pos: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        a: &CharacterTable,
        b: &CharacterTable,
        ta: &[Vec<String>],
        tb: &[Vec<String>],
    ) -> bool {
        if pos == a.num_classes() {
            return true;
        }
        let ca = &a.classes[pos];
        for j in 0..b.num_classes() {
            let cb = &b.classes[j];
            if used[j] || cb.size != ca.size || cb.rep_order != ca.rep_order {
                continue;
            }
            perm.push(j);
            let cols_a: Vec<usize> = (0..=pos).collect();
            if partial_rows(ta, &cols_a) == partial_rows(tb, perm) {
                used[j] = true;
                if extend(pos + 1, perm, used, a, b, ta, tb) {
                    return true;
                }
                used[j] = false;
            }
            perm.pop();
        }
        false
    }

    let mut perm = Vec::with_capacity(k);
    let mut used = vec![false; k];
    if !extend(0, &mut perm, &mut used, a, b, &ta, &tb) {
        return None;
    }
    let mut taken = vec![false; b.characters.len()];
    let mut chars = Vec::with_capacity(b.characters.len());
    for row in &ta {
        let j = (0..tb.len()).find(|&j| {
            !taken[j] && perm.iter().enumerate().all(|(c, &pc)| tb[j][pc] == row[c])
        })?;
        taken[j] = true;
        chars.push(j);
    }
    Some((perm, chars))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, f)` with `q = p^f`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = q;
    let mut f = 0;
    while m % p == 0 {
        m /= p;
        f += 1;
    }
    (m == 1).then_some((p, f))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not prime")]
pub struct NotPrime(pub u64);

/// Largest power of `p` dividing `m`.
pub fn p_part(m: u64, p: u64) -> Result<u64, NotPrime> {
    if !is_prime(p) {
        return Err(NotPrime(p));
    }
    if m.is_zero() {
        return Ok(0);
    }
    let mut m = m;
    let mut part = 1;
    while m % p == 0 {
        m /= p;
        part *= p;
    }
    Ok(part)
}

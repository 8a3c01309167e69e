//! Tensor-product decomposition, McKay graphs, distances and diameters.

mod dynkin;
mod export;

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::chartable::CharacterTable;
use crate::exactnum::Cyclotomic;

pub use dynkin::{identify_affine_dynkin, is_isomorphic, underlying_simple_graph, AffineDynkin};
pub use export::{to_csv, to_dot};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum McKayError {
    #[error("class function has {found} values, table has {expected} classes")]
    Length { expected: usize, found: usize },
    #[error("multiplicity of {character} is {value}, not an integer (corrupt table)")]
    NotInteger { character: String, value: String },
    #[error("multiplicity of {character} is negative: {value} (not a character)")]
    Negative { character: String, value: BigInt },
    #[error("character is not faithful")]
    NotFaithful,
    #[error("no character named {0:?}")]
    UnknownCharacter(String),
}

/// Complex conjugates of every irreducible, computed once per table.
pub struct ConjugateRows(Vec<Vec<Cyclotomic>>);

impl ConjugateRows {
    pub fn new(t: &CharacterTable) -> Self {
        ConjugateRows(
            t.characters
                .iter()
                .map(|c| c.values.iter().map(Cyclotomic::conj).collect())
                .collect(),
        )
    }
}

fn check_len(t: &CharacterTable, f: &[Cyclotomic]) -> Result<(), McKayError> {
    if f.len() != t.num_classes() {
        return Err(McKayError::Length {
            expected: t.num_classes(),
            found: f.len(),
        });
    }
    Ok(())
}

/// `[f, ψ]` for a class function `f`; must be an integer.
pub fn constituent_multiplicity(
    t: &CharacterTable,
    f: &[Cyclotomic],
    psi: usize,
) -> Result<BigInt, McKayError> {
    check_len(t, f)?;
    let ip = t.inner_product(f, &t.characters[psi].values);
    ip.to_integer().ok_or_else(|| McKayError::NotInteger {
        character: t.characters[psi].name.clone(),
        value: ip.to_string(),
    })
}

fn decompose_with(
    t: &CharacterTable,
    f: &[Cyclotomic],
    conj: &ConjugateRows,
) -> Result<Vec<BigUint>, McKayError> {
    check_len(t, f)?;
    (0..t.characters.len())
        .map(|j| {
            let ip = t.inner_product_preconj(f, &conj.0[j]);
            let name = || t.characters[j].name.clone();
            let v = ip.to_integer().ok_or_else(|| McKayError::NotInteger {
                character: name(),
                value: ip.to_string(),
            })?;
            if v.is_negative() {
                return Err(McKayError::Negative {
                    character: name(),
                    value: v,
                });
            }
            Ok(v.magnitude().clone())
        })
        .collect()
}

/// Multiplicities of every irreducible in the character `f`.
pub fn decompose(t: &CharacterTable, f: &[Cyclotomic]) -> Result<Vec<BigUint>, McKayError> {
    decompose_with(t, f, &ConjugateRows::new(t))
}

/// `[αχ, ψ]`, exact.
pub fn tensor_multiplicity(
    t: &CharacterTable,
    alpha: &[Cyclotomic],
    chi: &[Cyclotomic],
    psi: usize,
) -> Result<BigUint, McKayError> {
    check_len(t, alpha)?;
    check_len(t, chi)?;
    let f = CharacterTable::product(alpha, chi);
    let v = constituent_multiplicity(t, &f, psi)?;
    if v.is_negative() {
        return Err(McKayError::Negative {
            character: t.characters[psi].name.clone(),
            value: v,
        });
    }
    Ok(v.magnitude().clone())
}

/// Nonzero constituents of `α·χ` with multiplicities.
pub fn decompose_product(
    t: &CharacterTable,
    alpha: &[Cyclotomic],
    chi: &[Cyclotomic],
) -> Result<Vec<(usize, BigUint)>, McKayError> {
    check_len(t, chi)?;
    let m = decompose(t, &CharacterTable::product(alpha, chi))?;
    Ok(m.into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayGraph {
    pub table_name: String,
    /// Index of `α` when it is an irreducible of the table.
    pub alpha_index: Option<usize>,
    pub alpha: Vec<Cyclotomic>,
    pub names: Vec<String>,
    pub degrees: Vec<u64>,
    /// `adjacency[i][j] = [α·χ_i, χ_j]`.
    pub adjacency: Vec<Vec<BigUint>>,
}

impl McKayGraph {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        !self.adjacency[i][j].is_zero()
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.has_edge(i, j))
    }

    /// `α(1)`.
    pub fn alpha_degree(&self) -> u64 {
        self.alpha[0]
            .to_integer()
            .and_then(|d| d.to_u64())
            .expect("alpha degree is a nonnegative integer")
    }

    /// Rows whose weighted degree sum differs from `α(1)·χ_i(1)`; empty when consistent.
    pub fn degree_conservation_failures(&self) -> Vec<usize> {
        let a = BigUint::from(self.alpha_degree());
        (0..self.len())
            .filter(|&i| {
                let s: BigUint = self.adjacency[i]
                    .iter()
                    .zip(&self.degrees)
                    .map(|(m, &d)| m * BigUint::from(d))
                    .sum();
                s != &a * BigUint::from(self.degrees[i])
            })
            .collect()
    }
}

/// McKay graph of the class function `α` (a character of `t`).
pub fn mckay_graph(t: &CharacterTable, alpha: &[Cyclotomic]) -> Result<McKayGraph, McKayError> {
    check_len(t, alpha)?;
    let conj = ConjugateRows::new(t);
    let adjacency = t
        .characters
        .par_iter()
        .map(|chi| decompose_with(t, &CharacterTable::product(alpha, &chi.values), &conj))
        .collect::<Result<Vec<_>, _>>()?;
    let alpha_index = t.characters.iter().position(|c| c.values == alpha);
    Ok(McKayGraph {
        table_name: t.name.clone(),
        alpha_index,
        alpha: alpha.to_vec(),
        names: t.characters.iter().map(|c| c.name.clone()).collect(),
        degrees: t.degrees(),
        adjacency,
    })
}

/// McKay graph of a named irreducible.
pub fn mckay_graph_named(t: &CharacterTable, alpha: &str) -> Result<McKayGraph, McKayError> {
    let i = t
        .character_index(alpha)
        .ok_or_else(|| McKayError::UnknownCharacter(alpha.to_string()))?;
    mckay_graph(t, &t.characters[i].values)
}

/// BFS distances from `source`; `None` marks unreachable vertices.
pub fn distances(g: &McKayGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued vertices are reached");
        for w in g.successors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => write!(f, "disconnected"),
        }
    }
}

/// Largest distance over ordered pairs.
pub fn diameter(g: &McKayGraph) -> Diameter {
    let per_source: Vec<Option<usize>> = (0..g.len())
        .into_par_iter()
        .map(|s| {
            distances(g, s)
                .into_iter()
                .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
        })
        .collect();
    per_source
        .into_iter()
        .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
        .map_or(Diameter::Disconnected, Diameter::Finite)
}

/// Multiplicities of `α^0, α^1, …, α^k` in the irreducibles, each power
/// obtained by decomposing `α` times the previous one.
#[derive(Debug, Clone)]
pub struct PowerAccumulation {
    pub powers: Vec<Vec<BigUint>>,
}

impl PowerAccumulation {
    /// Smallest `j` with `[α^j, χ] ≠ 0`, if reached.
    pub fn first_level(&self, chi: usize) -> Option<usize> {
        self.powers.iter().position(|p| !p[chi].is_zero())
    }
}

/// Accumulate powers of `α` up to `max_power`, using the graph's adjacency.
pub fn power_accumulation(
    t: &CharacterTable,
    g: &McKayGraph,
    max_power: usize,
) -> PowerAccumulation {
    let k = g.len();
    let mut first = vec![BigUint::zero(); k];
    first[t.trivial_index().expect("table has a trivial character")] = BigUint::from(1u32);
    let mut powers = vec![first];
    for _ in 0..max_power {
        let prev = powers.last().expect("nonempty");
        let next: Vec<BigUint> = (0..k)
            .into_par_iter()
            .map(|j| {
                (0..k)
                    .filter(|&i| !prev[i].is_zero() && g.has_edge(i, j))
                    .map(|i| &prev[i] * &g.adjacency[i][j])
                    .sum()
            })
            .collect();
        powers.push(next);
    }
    PowerAccumulation { powers }
}

/// `N(α)`: least `N` with every irreducible a constituent of `Σ_{i≤N} α^i`.
pub fn min_power_covering(t: &CharacterTable, alpha: &[Cyclotomic]) -> Result<usize, McKayError> {
    check_len(t, alpha)?;
    if !t.is_faithful(alpha) {
        return Err(McKayError::NotFaithful);
    }
    let g = mckay_graph(t, alpha)?;
    Ok(min_power_covering_of(t, &g).expect("faithful characters reach every irreducible"))
}

/// `N(α)` from a prebuilt graph; `None` when some irreducible is never reached.
pub fn min_power_covering_of(t: &CharacterTable, g: &McKayGraph) -> Option<usize> {
    let k = g.len();
    let triv = t.trivial_index()?;
    let mut covered = vec![false; k];
    covered[triv] = true;
    let mut count = 1;
    let mut level = vec![BigUint::zero(); k];
    level[triv] = BigUint::from(1u32);
    let mut n = 0;
    while count < k {
        if n >= k {
            return None;
        }
        level = (0..k)
            .into_par_iter()
            .map(|j| {
                (0..k)
                    .filter(|&i| !level[i].is_zero() && g.has_edge(i, j))
                    .map(|i| &level[i] * &g.adjacency[i][j])
                    .sum()
            })
            .collect();
        n += 1;
        for j in 0..k {
            if !covered[j] && !level[j].is_zero() {
                covered[j] = true;
                count += 1;
            }
        }
    }
    Some(n)
}

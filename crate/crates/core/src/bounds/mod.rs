//! Verifier suites for the diameter bounds: general graph bounds, Steinberg
//! based criteria, rank-one and classical inequalities, symmetric and
//! alternating groups, quasi-simple groups.

mod alt;
mod classical;
mod general;
mod quasisimple;
mod steinberg;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::builders::{factorial, BuildError, Partition};
use crate::chartable::{CharacterTable, SteinbergError};
use crate::exactnum::{Cyclotomic, Rational};
use crate::mckay::McKayError;

pub use alt::{verify_alt, verify_alt_on};
pub use classical::{
    delta_l, delta_suite, class_count_check, lie_threshold, table_ratio_bounds, formula_ratio_bounds,
    threshold_suite, verify_delta, DeltaCheck, Threshold,
};
pub use general::{
    bb_suite, burnside_brauer, conjecture_ratio, conjecture_suite, lower_bound, lower_suite,
    verify_multfree, BurnsideBrauer, ConjectureRatio, Family, LowerBound,
};
pub use quasisimple::verify_quasisimple;
pub use steinberg::{
    gluck_check, gluck_suite, sigma_l, sigma_suite, transvection_check, expansion_identity,
    expansion_suite, verify_stsq, verify_stval, Gluck, SigmaL, SigmaValue, Expansion,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("{0} is not faithful")]
    NotFaithful(String),
    #[error("{0} is linear")]
    Linear(String),
    #[error("{0} is the trivial character")]
    Trivial(String),
    #[error("no character with index {0}")]
    NoCharacter(usize),
    #[error("table {0} has no Lie parameters")]
    NoLieParams(String),
    #[error("table {0} is not simple")]
    NotSimple(String),
    #[error("table {0} is not of Lie type, symmetric, alternating or simple")]
    Metadata(String),
    #[error("class {class} of {table} has no {what} annotation")]
    MissingAnnotation {
        table: String,
        class: String,
        what: &'static str,
    },
    #[error("{what} = {value} is outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    #[error("expected {expected} ratio values, got {found}")]
    MissingRatio { expected: usize, found: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("table {0} has no faithful irreducible character")]
    NoFaithful(String),
    #[error(transparent)]
    Steinberg(#[from] SteinbergError),
    #[error(transparent)]
    McKay(#[from] McKayError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

pub type Result<T> = std::result::Result<T, BoundsError>;

/// `f(n) = (n!)^e`, the growth function in the character-ratio bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthFunction {
    pub factorial_exponent: Rational,
}

impl GrowthFunction {
    pub fn factorial_power(num: i64, den: i64) -> Self {
        GrowthFunction {
            factorial_exponent: Rational::new(num.into(), den.into()),
        }
    }

    pub fn exponent_f64(&self) -> f64 {
        self.factorial_exponent.to_f64().expect("finite exponent")
    }

    /// `ln f(n)`.
    pub fn ln(&self, n: u32) -> f64 {
        self.exponent_f64() * (factorial(n) as f64).ln()
    }

    pub fn eval(&self, n: u32) -> f64 {
        self.ln(n).exp()
    }

    /// `f(n)^m` exactly, when `m·e` is a nonnegative integer.
    pub fn pow_exact(&self, n: u32, m: u32) -> Option<BigUint> {
        let e = &self.factorial_exponent * Rational::from_integer(m.into());
        if !e.is_integer() {
            return None;
        }
        let e = e.to_integer().to_u32()?;
        Some(BigUint::from(factorial(n)).pow(e))
    }
}

impl fmt::Display for GrowthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n!)^({})", self.factorial_exponent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantsTable {
    /// Rank-squared diameter constant for Lie type.
    pub c_bdd: u64,
    /// `[χ^l, St] ≠ 0` for `l ≥ D·r²`.
    pub d: u64,
    /// Diameter constant for `PSL_n^ε(q)`, large `q`.
    pub c_psl: u64,
    /// Class-count constant `c` in the `n_s` estimate.
    pub c_classcount: Rational,
    /// Uniform cap in the character-ratio bound.
    pub gluck_cap: Rational,
    /// Exponent relating the largest constituent to a multiplicity-free character.
    pub multfree_factor: Rational,
    pub f: GrowthFunction,
}

impl ConstantsTable {
    pub fn standard() -> Self {
        ConstantsTable {
            c_bdd: 489,
            d: 163,
            c_psl: 15,
            c_classcount: Rational::new(441.into(), 10.into()),
            gluck_cap: Rational::new(19.into(), 20.into()),
            multfree_factor: Rational::new(5.into(), 2.into()),
            f: GrowthFunction::factorial_power(5, 2),
        }
    }
}

impl Default for ConstantsTable {
    fn default() -> Self {
        Self::standard()
    }
}

/// One checked instance inside a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub inputs: Map<String, Value>,
    pub computed: Map<String, Value>,
    pub bound: Map<String, Value>,
    /// `None` for report-only or inconclusive cases.
    pub pass: Option<bool>,
}

impl CaseRecord {
    pub fn new(id: impl Into<String>) -> Self {
        CaseRecord {
            id: id.into(),
            inputs: Map::new(),
            computed: Map::new(),
            bound: Map::new(),
            pass: None,
        }
    }

    pub fn input(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(key.into(), v.into());
        self
    }

    pub fn computed(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.computed.insert(key.into(), v.into());
        self
    }

    pub fn bound(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.bound.insert(key.into(), v.into());
        self
    }

    pub fn pass(mut self, ok: bool) -> Self {
        self.pass = Some(ok);
        self
    }

    pub fn pass_opt(mut self, ok: Option<bool>) -> Self {
        self.pass = ok;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Some case could not be decided and none failed.
    Inconclusive,
    /// No case carries a verdict.
    Report,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Report => "report",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn new(suite: impl Into<String>, cases: Vec<CaseRecord>) -> Self {
        let verdict = verdict_of(&cases);
        BoundReport {
            suite: suite.into(),
            cases,
            verdict,
        }
    }

    /// Concatenate reports under one suite name, cases ordered by id.
    pub fn merge(suite: impl Into<String>, reports: Vec<BoundReport>) -> Self {
        let mut cases: Vec<CaseRecord> = reports.into_iter().flat_map(|r| r.cases).collect();
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        Self::new(suite, cases)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> Vec<&CaseRecord> {
        self.cases.iter().filter(|c| c.pass == Some(false)).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn verdict_of(cases: &[CaseRecord]) -> Verdict {
    if cases.iter().any(|c| c.pass == Some(false)) {
        Verdict::Fail
    } else if cases.iter().all(|c| c.pass.is_none()) {
        Verdict::Report
    } else if cases.iter().any(|c| c.pass.is_none()) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    }
}

pub(crate) fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

pub(crate) fn rat(v: &Rational) -> Value {
    Value::String(v.to_string())
}

pub(crate) fn cyc(v: &Cyclotomic) -> Value {
    Value::String(v.to_string())
}

pub(crate) fn float(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or_else(|| Value::String(x.to_string()), Value::Number)
}

pub(crate) fn upow(base: u64, e: u64) -> BigUint {
    let mut r = BigUint::one();
    let b = BigUint::from(base);
    for _ in 0..e {
        r *= &b;
    }
    r
}

/// Number of distinct values, by exact equality.
pub fn distinct_values(values: &[Cyclotomic]) -> usize {
    let mut seen: Vec<&Cyclotomic> = Vec::new();
    for v in values {
        if !seen.contains(&v) {
            seen.push(v);
        }
    }
    seen.len()
}

pub(crate) fn character(t: &CharacterTable, i: usize) -> Result<&crate::chartable::Character> {
    t.characters.get(i).ok_or(BoundsError::NoCharacter(i))
}

pub(crate) fn nontrivial(t: &CharacterTable) -> Vec<usize> {
    let triv = t.trivial_index();
    (0..t.characters.len()).filter(|&i| Some(i) != triv).collect()
}

/// `n` for tables named `S{n}` / `A{n}` by the builders.
pub fn sym_alt_degree(t: &CharacterTable) -> Option<(char, u32)> {
    let mut chars = t.name.chars();
    let kind = chars.next()?;
    if kind != 'S' && kind != 'A' {
        return None;
    }
    let n: u32 = chars.as_str().parse().ok()?;
    Some((kind, n))
}

/// Partition from a builder character name such as `chi(3,1,1)+`.
pub(crate) fn partition_of_name(name: &str) -> Option<Partition> {
    let body = name.strip_prefix("chi")?;
    let body = body.trim_end_matches(['+', '-']);
    body.parse().ok()
}

pub(crate) fn require_simple_lie(t: &CharacterTable) -> Result<crate::chartable::LieParams> {
    let lie = t.lie.ok_or_else(|| BoundsError::NoLieParams(t.name.clone()))?;
    if !t.is_simple() {
        return Err(BoundsError::NotSimple(t.name.clone()));
    }
    Ok(lie)
}

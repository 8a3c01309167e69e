use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{
    character, cyc, float, nontrivial, rat, require_simple_lie, BoundReport, BoundsError, CaseRecord,
    ConstantsTable, Result,
};
use crate::chartable::{identify_steinberg, CharacterTable, Epsilon, SteinbergData, SteinbergError};
use crate::exactnum::{Cyclotomic, Rational};
use crate::mckay::decompose;

/// Slack on floating comparisons against the character-ratio bound.
pub const GLUCK_TOL: f64 = 1e-9;
/// Half-width certified around each floating `|χ(g)|`.
pub const MAGNITUDE_WIDTH: f64 = 1e-9;

fn ratio(n: u64, d: u64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn unitary_odd(t: &CharacterTable) -> bool {
    t.lie
        .is_some_and(|l| l.epsilon == Epsilon::Minus && l.n >= 3 && l.n % 2 == 1)
}

/// Coverage of `Irr(G)` by `St²`, falling back to `St³`. Only unitary groups
/// in odd dimension may miss a character at the square, and then only the
/// unipotent one of degree `(q^n − q)/(q + 1)`.
pub fn verify_stsq(t: &CharacterTable) -> Result<BoundReport> {
    let st = identify_steinberg(t)?;
    let s = &t.characters[st.st_index].values;
    let s2 = CharacterTable::product(s, s);
    let s3 = CharacterTable::product(&s2, s);
    let (m2, m3) = rayon::join(|| decompose(t, &s2), || decompose(t, &s3));
    let (m2, m3) = (m2?, m3?);
    let missing: Vec<usize> = (0..m2.len()).filter(|&i| m2[i].is_zero()).collect();
    let exception_degree = match t.lie {
        Some(l) if unitary_odd(t) => {
            let qn = l.q.pow(l.n);
            Some((qn - l.q) / (l.q + 1))
        }
        _ => None,
    };
    let mut cases: Vec<CaseRecord> = t
        .characters
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let level = if !m2[i].is_zero() {
                Some(2)
            } else if !m3[i].is_zero() {
                Some(3)
            } else {
                None
            };
            let excused = exception_degree == Some(c.degree()) && missing.len() == 1;
            let pass = !m2[i].is_zero() || (excused && !m3[i].is_zero());
            let mut case = CaseRecord::new(format!("{}/{}", t.name, c.name))
                .input("character", c.name.as_str())
                .input("degree", c.degree())
                .computed("st2_multiplicity", m2[i].to_string())
                .computed("st3_multiplicity", m3[i].to_string())
                .computed("level", serde_json::json!(level))
                .bound("level", if excused { 3 } else { 2 })
                .pass(pass);
            if let Some(d) = exception_degree {
                case = case.bound("exception_degree", d);
            }
            case
        })
        .collect();
    let all3 = m3.iter().all(|m| !m.is_zero());
    cases.push(
        CaseRecord::new(format!("{}/St^3 covers", t.name))
            .computed("st2_missing", missing.len())
            .computed("st3_covers", all3)
            .pass(all3),
    );
    Ok(BoundReport::new("stsq", cases))
}

/// `St(g) = ε_g |C_G(g)|_p` on semisimple classes and `0` elsewhere.
pub fn verify_stval(t: &CharacterTable) -> Result<BoundReport> {
    match identify_steinberg(t) {
        Ok(st) => {
            let values = &t.characters[st.st_index].values;
            let cases = t
                .classes
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let case = CaseRecord::new(format!("{}/{}", t.name, c.name))
                        .input("class", c.name.as_str())
                        .computed("st", cyc(&values[k]));
                    match st.entry(k) {
                        Some(e) => case
                            .computed("semisimple", true)
                            .computed("epsilon", e.epsilon)
                            .bound("centralizer_p_part", e.cent_p_part)
                            .pass(values[k] == Cyclotomic::from_integer(st.value(k))),
                        None => case
                            .computed("semisimple", false)
                            .bound("st", 0)
                            .pass(values[k].is_zero()),
                    }
                })
                .collect();
            Ok(BoundReport::new("stval", cases))
        }
        Err(SteinbergError::PatternViolated { classes }) => {
            let cases = t
                .classes
                .iter()
                .map(|c| {
                    CaseRecord::new(format!("{}/{}", t.name, c.name))
                        .input("class", c.name.as_str())
                        .pass(!classes.contains(&c.name))
                })
                .collect();
            Ok(BoundReport::new("stval", cases))
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gluck {
    pub max_ratio: f64,
    pub character: String,
    pub class: String,
    /// `min(3/√q, cap)`.
    pub bound: f64,
    pub pass: bool,
}

/// `max |χ(g)|/χ(1)` over `χ ≠ 1`, `g ≠ 1` against `min(3/√q, 19/20)`.
pub fn gluck_check(t: &CharacterTable, k: &ConstantsTable) -> Result<Gluck> {
    let lie = require_simple_lie(t)?;
    let cap = k.gluck_cap.to_f64().expect("finite cap");
    let bound = (3.0 / (lie.q as f64).sqrt()).min(cap);
    let best = nontrivial(t)
        .into_par_iter()
        .flat_map_iter(|i| {
            let c = &t.characters[i];
            let d = c.degree() as f64;
            (0..t.num_classes())
                .filter(|&g| t.classes[g].rep_order != 1)
                .map(move |g| (c.values[g].abs_f64() / d, i, g))
        })
        .reduce(
            || (f64::NEG_INFINITY, usize::MAX, usize::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                    b
                } else {
                    a
                }
            },
        );
    Ok(Gluck {
        max_ratio: best.0,
        character: t.characters[best.1].name.clone(),
        class: t.classes[best.2].name.clone(),
        bound,
        pass: best.0 <= bound + GLUCK_TOL,
    })
}

pub fn gluck_suite(t: &CharacterTable, k: &ConstantsTable) -> Result<BoundReport> {
    let g = gluck_check(t, k)?;
    let case = CaseRecord::new(t.name.clone())
        .input("table", t.name.as_str())
        .computed("max_ratio", float(g.max_ratio))
        .computed("character", g.character.as_str())
        .computed("class", g.class.as_str())
        .bound("ratio", float(g.bound))
        .bound("tolerance", float(GLUCK_TOL))
        .pass(g.pass);
    Ok(BoundReport::new("gluck", vec![case]))
}

/// `Σ_l`, exact or as a certified enclosure.
#[derive(Debug, Clone, PartialEq)]
pub enum SigmaValue {
    Exact(Rational),
    Interval { lo: f64, hi: f64 },
}

impl SigmaValue {
    pub fn approx(&self) -> f64 {
        match self {
            SigmaValue::Exact(r) => rat_f64(r),
            SigmaValue::Interval { lo, hi } => 0.5 * (lo + hi),
        }
    }

    /// Whether `Σ_l < bound`; `None` when the enclosure straddles the bound.
    pub fn below(&self, bound: u64) -> Option<bool> {
        match self {
            SigmaValue::Exact(r) => Some(*r < Rational::from_integer(bound.into())),
            SigmaValue::Interval { lo, hi } => {
                if *hi < bound as f64 {
                    Some(true)
                } else if *lo >= bound as f64 {
                    Some(false)
                } else {
                    None
                }
            }
        }
    }

    fn to_value(&self) -> serde_json::Value {
        match self {
            SigmaValue::Exact(r) => rat(r),
            SigmaValue::Interval { lo, hi } => serde_json::json!([float(*lo), float(*hi)]),
        }
    }
}

fn rat_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SigmaL {
    pub character: String,
    pub l: u64,
    pub value: SigmaValue,
    /// `|G|_p`.
    pub group_p_part: u64,
    pub below: Option<bool>,
    /// `[χ^l, St]`, computed when the criterion fires.
    pub inner_product: Option<Rational>,
    /// `Some(true)` when the criterion fires and the inner product is nonzero;
    /// `None` when the criterion is silent.
    pub pass: Option<bool>,
}

/// `|v|` when `|v|²` is the square of a rational.
fn rational_abs(v: &Cyclotomic) -> Option<Rational> {
    let sq = v.abs_sq().to_rational()?;
    let root = |x: &BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    Some(Rational::new(root(sq.numer())?, root(sq.denom())?))
}

fn sigma_value(t: &CharacterTable, st: &SteinbergData, chi: usize, l: u64) -> Result<SigmaValue> {
    let c = &t.characters[chi];
    let d = c.degree();
    let terms = st
        .entries
        .iter()
        .filter(|e| t.classes[e.class].rep_order != 1 && !c.values[e.class].is_zero());
    let dl = Rational::from_integer(num_traits::pow(BigInt::from(d), l as usize));
    // odd l is exact too when every |χ(g)| is rational, which settles ties with |G|_p
    if l % 2 == 1 {
        let exact: Option<Vec<(u64, Rational)>> = terms
            .clone()
            .map(|e| Some((t.classes[e.class].size * e.cent_p_part, rational_abs(&c.values[e.class])?)))
            .collect();
        if let Some(exact) = exact {
            let total: Rational = exact
                .into_iter()
                .map(|(w, a)| num_traits::pow(a, l as usize) * Rational::from_integer(w.into()))
                .sum();
            return Ok(SigmaValue::Exact(total / dl));
        }
    }
    if l % 2 == 0 {
        let total = Cyclotomic::sum_grouped(terms.map(|e| {
            let w = t.classes[e.class].size * e.cent_p_part;
            c.values[e.class]
                .abs_sq()
                .pow(l / 2)
                .scale(&Rational::from_integer(w.into()))
        }));
        let total = total
            .to_rational()
            .ok_or_else(|| BoundsError::Invalid(format!("Σ_{l} for {} is not rational", c.name)))?;
        return Ok(SigmaValue::Exact(total / dl));
    }
    let (mut lo, mut hi, mut count) = (0.0f64, 0.0f64, 0u32);
    for e in terms {
        let w = (t.classes[e.class].size * e.cent_p_part) as f64;
        let m = c.values[e.class].abs_f64();
        let width = MAGNITUDE_WIDTH * (1.0 + m);
        let up = ((m + width) / d as f64).ln() * l as f64;
        hi += w * up.exp();
        let low = (m - width).max(0.0);
        if low > 0.0 {
            lo += w * ((low / d as f64).ln() * l as f64).exp();
        }
        count += 1;
    }
    let slack = 1e-12;
    Ok(SigmaValue::Interval {
        lo: lo * (1.0 - slack),
        hi: hi * (1.0 + slack) + count as f64 * f64::MIN_POSITIVE,
    })
}

fn steinberg_product(t: &CharacterTable, st: &SteinbergData, chi: usize, l: u64) -> Rational {
    let power: Vec<Cyclotomic> = t.characters[chi].values.iter().map(|v| v.pow(l)).collect();
    t.inner_product(&power, &t.characters[st.st_index].values)
        .to_rational()
        .expect("inner product of characters is rational")
}

fn sigma_with(t: &CharacterTable, st: &SteinbergData, chi: usize, l: u64) -> Result<SigmaL> {
    let c = character(t, chi)?;
    if Some(chi) == t.trivial_index() {
        return Err(BoundsError::Trivial(c.name.clone()));
    }
    if l == 0 {
        return Err(BoundsError::Invalid("l must be at least 1".into()));
    }
    let p = t.characteristic.expect("Steinberg data implies a characteristic");
    let gp = crate::chartable::p_part(t.order, p).expect("prime characteristic");
    let value = sigma_value(t, st, chi, l)?;
    let below = value.below(gp);
    let inner_product = (below == Some(true)).then(|| steinberg_product(t, st, chi, l));
    let pass = inner_product.as_ref().map(|ip| !ip.is_zero());
    Ok(SigmaL {
        character: c.name.clone(),
        l,
        value,
        group_p_part: gp,
        below,
        inner_product,
        pass,
    })
}

/// `Σ_l = Σ_{1≠g∈G_ss} |χ(g)/χ(1)|^l |C_G(g)|_p`. When `Σ_l < |G|_p` the
/// inner product `[χ^l, St]` is computed and must be nonzero; otherwise the
/// criterion says nothing.
pub fn sigma_l(t: &CharacterTable, chi: usize, l: u64) -> Result<SigmaL> {
    let st = identify_steinberg(t)?;
    sigma_with(t, &st, chi, l)
}

/// `Σ_{D r²} < |G|_p` for every nontrivial `χ`, and `[χ^l, St] ≠ 0` at the
/// least `l` where the criterion fires.
pub fn sigma_suite(t: &CharacterTable, k: &ConstantsTable) -> Result<BoundReport> {
    let lie = require_simple_lie(t)?;
    let st = identify_steinberg(t)?;
    let l0 = k.d * (lie.rank as u64).pow(2);
    let cases = nontrivial(t)
        .into_par_iter()
        .map(|i| {
            let at = sigma_with(t, &st, i, l0)?;
            let mut undecided_before = false;
            let mut first = None;
            for l in 1..=l0 {
                let s = if l == l0 { at.clone() } else { sigma_with(t, &st, i, l)? };
                match s.below {
                    Some(true) => {
                        first = Some(s);
                        break;
                    }
                    None => undecided_before = true,
                    Some(false) => {}
                }
            }
            let mut case = CaseRecord::new(format!("{}/{}", t.name, at.character))
                .input("character", at.character.as_str())
                .input("l", l0)
                .computed("sigma", at.value.to_value())
                .computed("sigma_approx", float(at.value.approx()))
                .bound("group_p_part", at.group_p_part);
            let pass = match (&at.below, &first) {
                (Some(true), Some(f)) => {
                    case = case
                        .computed("least_l", f.l)
                        .computed("least_l_certain", !undecided_before)
                        .computed(
                            "inner_product_at_least_l",
                            rat(f.inner_product.as_ref().expect("criterion fired")),
                        );
                    f.pass
                }
                (Some(false), _) => Some(false),
                _ => None,
            };
            Ok(case.pass_opt(pass))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::new("sigma", cases))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub character: String,
    pub l: u64,
    /// `[χ^l, St]` by direct inner product.
    pub lhs: Cyclotomic,
    /// `(χ(1)^l/|G|)(|G|_p + Σ_{1≠g∈G_ss} ε_g (χ(g)/χ(1))^l |C_G(g)|_p)`.
    pub rhs: Cyclotomic,
    pub equal: bool,
}

fn expansion_with(t: &CharacterTable, st: &SteinbergData, chi: usize, l: u64) -> Result<Expansion> {
    let c = character(t, chi)?;
    let d = c.degree();
    let power: Vec<Cyclotomic> = c.values.iter().map(|v| v.pow(l)).collect();
    let lhs = t.inner_product(&power, &t.characters[st.st_index].values);
    let p = t.characteristic.expect("Steinberg data implies a characteristic");
    let gp = crate::chartable::p_part(t.order, p).expect("prime characteristic");
    let inv_d = ratio(1, d);
    let sum = Cyclotomic::sum_grouped(
        st.entries
            .iter()
            .filter(|e| t.classes[e.class].rep_order != 1)
            .map(|e| {
                let w = BigInt::from(t.classes[e.class].size)
                    * BigInt::from(e.cent_p_part)
                    * BigInt::from(e.epsilon);
                c.values[e.class]
                    .scale(&inv_d)
                    .pow(l)
                    .scale(&Rational::from_integer(w))
            }),
    );
    let dl = num_traits::pow(BigInt::from(d), l as usize);
    let rhs = (Cyclotomic::from_integer(gp as i64) + sum)
        .scale(&Rational::new(dl, BigInt::from(t.order)));
    let equal = lhs == rhs;
    Ok(Expansion {
        character: c.name.clone(),
        l,
        lhs,
        rhs,
        equal,
    })
}

/// Both sides of the Steinberg expansion of `[χ^l, St]`.
pub fn expansion_identity(t: &CharacterTable, chi: usize, l: u64) -> Result<Expansion> {
    let st = identify_steinberg(t)?;
    expansion_with(t, &st, chi, l)
}

/// [`expansion_identity`] for every character and `1 ≤ l ≤ max_l`.
pub fn expansion_suite(t: &CharacterTable, max_l: u64) -> Result<BoundReport> {
    let st = identify_steinberg(t)?;
    let jobs: Vec<(usize, u64)> = (0..t.characters.len())
        .flat_map(|i| (1..=max_l).map(move |l| (i, l)))
        .collect();
    let cases = jobs
        .into_par_iter()
        .map(|(i, l)| {
            let u = expansion_with(t, &st, i, l)?;
            Ok(CaseRecord::new(format!("{}/{}/l={l}", t.name, u.character))
                .input("character", u.character.as_str())
                .input("l", l)
                .computed("lhs", cyc(&u.lhs))
                .computed("rhs", cyc(&u.rhs))
                .pass(u.equal))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::new("expansion", cases))
}

/// Value of the unipotent character of degree `(q^n − q)/(q + 1)` on a
/// transvection, against `−(q^n − q(−1)^n)/(q + 1)` and against zero.
/// Runs only for unitary tables in odd dimension that flag a transvection class.
pub fn transvection_check(t: &CharacterTable) -> Result<BoundReport> {
    let lie = t.lie.ok_or_else(|| BoundsError::NoLieParams(t.name.clone()))?;
    let flagged: Vec<usize> = (0..t.num_classes())
        .filter(|&k| t.classes[k].transvection)
        .collect();
    if !unitary_odd(t) || flagged.is_empty() {
        let reason = if flagged.is_empty() {
            "no transvection class annotated"
        } else {
            "not a unitary group in odd dimension"
        };
        let case = CaseRecord::new(format!("{}/skipped", t.name)).computed("skipped", reason);
        return Ok(BoundReport::new("transvection", vec![case]));
    }
    let st = identify_steinberg(t)?;
    let s = &t.characters[st.st_index].values;
    let m2 = decompose(t, &CharacterTable::product(s, s))?;
    let (q, n) = (BigInt::from(lie.q), lie.n as usize);
    let qn = num_traits::pow(q.clone(), n);
    let degree = (&qn - &q) / (&q + BigInt::one());
    let alpha = (0..t.characters.len())
        .find(|&i| m2[i].is_zero() && BigInt::from(t.degree(i)) == degree)
        .ok_or_else(|| {
            BoundsError::Invalid(format!(
                "no character of degree {degree} missing from St^2 in {}",
                t.name
            ))
        })?;
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let stated = -Rational::new(&qn - &q * sign, &q + BigInt::one());
    let mut cases = Vec::new();
    for k in flagged {
        let v = &t.characters[alpha].values[k];
        let name = &t.classes[k].name;
        cases.push(
            CaseRecord::new(format!("{}/{name}/formula", t.name))
                .input("character", t.characters[alpha].name.as_str())
                .input("class", name.as_str())
                .computed("value", cyc(v))
                .bound("stated_value", rat(&stated))
                .bound("stated_value_is_integer", stated.is_integer())
                .pass(*v == Cyclotomic::from_rational(&stated)),
        );
        cases.push(
            CaseRecord::new(format!("{}/{name}/nonzero", t.name))
                .input("character", t.characters[alpha].name.as_str())
                .input("class", name.as_str())
                .computed("value", cyc(v))
                .pass(!v.is_zero()),
        );
    }
    Ok(BoundReport::new("transvection", cases))
}

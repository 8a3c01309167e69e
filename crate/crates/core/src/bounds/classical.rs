use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::{
    big, character, float, nontrivial, rat, require_simple_lie, upow, BoundReport, BoundsError,
    CaseRecord, ConstantsTable, Result,
};
use crate::chartable::{identify_steinberg, p_part, CharacterTable, Epsilon, LieParams};
use crate::exactnum::{Cyclotomic, Rational};

/// `Δ_l` for `PSL_n^ε(q)` from per-support ratio bounds `ratios[s − 1]`,
/// `1 ≤ s < n`, evaluated in floating point through logarithms.
pub fn delta_l(n: u32, q: u64, l: u64, ratios: &[f64], k: &ConstantsTable) -> Result<f64> {
    if n < 2 {
        return Err(BoundsError::OutOfRange {
            what: "n",
            value: n as u64,
            min: 2,
            max: u32::MAX as u64,
        });
    }
    if ratios.len() != n as usize - 1 {
        return Err(BoundsError::MissingRatio {
            expected: n as usize - 1,
            found: ratios.len(),
        });
    }
    let c = k.c_classcount.to_f64().expect("finite constant");
    let (nf, lq) = (n as f64, (q as f64).ln());
    let mut total = 0.0;
    for s in 1..n {
        let r = ratios[s as usize - 1];
        if r == 0.0 {
            continue;
        }
        let sf = s as f64;
        let ln_coef = if 2 * s < n {
            c.ln() + (nf * sf + 1.5 * nf - 1.0) * lq
        } else {
            (nf * nf - 0.5 * nf * (sf - 1.0) - 1.0) * lq
        };
        total += (ln_coef + l as f64 * r.ln()).exp();
    }
    Ok(total)
}

/// `f(n)·χ(1)^{−s/n}` for `s = 1, …, n − 1`.
pub fn formula_ratio_bounds(n: u32, degree: u64, k: &ConstantsTable) -> Vec<f64> {
    let ld = (degree as f64).ln();
    (1..n)
        .map(|s| (k.f.ln(n) - s as f64 / n as f64 * ld).exp())
        .collect()
}

fn support_of(t: &CharacterTable, lie: &LieParams, class: usize) -> Result<u32> {
    match t.classes[class].support {
        Some(s) => Ok(s),
        // every nonidentity semisimple element of PSL_2 has a 1-dimensional eigenspace
        None if lie.n == 2 => Ok(1),
        None => Err(BoundsError::MissingAnnotation {
            table: t.name.clone(),
            class: t.classes[class].name.clone(),
            what: "support",
        }),
    }
}

fn semisimple_nonidentity(t: &CharacterTable) -> Vec<usize> {
    (0..t.num_classes())
        .filter(|&k| t.classes[k].rep_order != 1 && t.is_semisimple(k) == Some(true))
        .collect()
}

/// Per support `s`, the largest `|χ(g)|/χ(1)` over semisimple `g ≠ 1` with `ν(g) = s`.
pub fn table_ratio_bounds(t: &CharacterTable, chi: usize) -> Result<Vec<f64>> {
    let lie = t.lie.ok_or_else(|| BoundsError::NoLieParams(t.name.clone()))?;
    let c = character(t, chi)?;
    let d = c.degree() as f64;
    let mut out = vec![0.0f64; lie.n as usize - 1];
    for k in semisimple_nonidentity(t) {
        let s = support_of(t, &lie, k)?;
        if s == 0 || s >= lie.n {
            return Err(BoundsError::Invalid(format!(
                "class {} has support {s}, expected 1..{}",
                t.classes[k].name, lie.n
            )));
        }
        let r = c.values[k].abs_f64() / d;
        let slot = &mut out[s as usize - 1];
        *slot = slot.max(r);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaCheck {
    pub character: String,
    pub l: u64,
    pub ratios: Vec<f64>,
    pub delta: f64,
    /// `[χ^l, St]`, computed when `Δ_l < 1`.
    pub inner_product: Option<Rational>,
    pub pass: Option<bool>,
}

/// Table-driven `Δ_l`; when it is below one, `[χ^l, St] ≠ 0` is checked exactly.
pub fn verify_delta(t: &CharacterTable, chi: usize, l: u64, k: &ConstantsTable) -> Result<DeltaCheck> {
    let lie = require_simple_lie(t)?;
    if Some(chi) == t.trivial_index() {
        return Err(BoundsError::Trivial(t.characters[chi].name.clone()));
    }
    let ratios = table_ratio_bounds(t, chi)?;
    let delta = delta_l(lie.n, lie.q, l, &ratios, k)?;
    let inner_product = if delta < 1.0 {
        let st = identify_steinberg(t)?;
        let power: Vec<Cyclotomic> = t.characters[chi].values.iter().map(|v| v.pow(l)).collect();
        let ip = t.inner_product(&power, &t.characters[st.st_index].values);
        Some(ip.to_rational().ok_or_else(|| {
            BoundsError::Invalid(format!("[χ^{l}, St] is not rational in {}", t.name))
        })?)
    } else {
        None
    };
    let pass = inner_product.as_ref().map(|ip| !ip.is_zero());
    Ok(DeltaCheck {
        character: t.characters[chi].name.clone(),
        l,
        ratios,
        delta,
        inner_product,
        pass,
    })
}

/// [`verify_delta`] for every nontrivial character.
pub fn delta_suite(t: &CharacterTable, l: u64, k: &ConstantsTable) -> Result<BoundReport> {
    require_simple_lie(t)?;
    let cases = nontrivial(t)
        .into_par_iter()
        .map(|i| {
            let d = verify_delta(t, i, l, k)?;
            let mut case = CaseRecord::new(format!("{}/{}", t.name, d.character))
                .input("character", d.character.as_str())
                .input("l", l)
                .input(
                    "ratios",
                    d.ratios.iter().map(|&r| float(r)).collect::<Vec<_>>(),
                )
                .computed("delta", float(d.delta))
                .bound("delta", 1)
                .pass_opt(d.pass);
            if let Some(ip) = &d.inner_product {
                case = case.computed("inner_product", rat(ip));
            }
            Ok(case)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::new("delta", cases))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Threshold {
    pub n: u32,
    /// `(49·f(n))^16` when it is an integer.
    pub q0: Option<BigUint>,
    pub log10_q0: f64,
    pub f: String,
}

/// `q₀ = (49·f(n))^16`, past which the large-`q` argument applies.
pub fn lie_threshold(n: u32, k: &ConstantsTable) -> Result<Threshold> {
    if n < 2 {
        return Err(BoundsError::OutOfRange {
            what: "n",
            value: n as u64,
            min: 2,
            max: u32::MAX as u64,
        });
    }
    let q0 = k.f.pow_exact(n, 16).map(|f16| f16 * upow(49, 16));
    let log10_q0 = 16.0 * (49f64.ln() + k.f.ln(n)) / std::f64::consts::LN_10;
    Ok(Threshold {
        n,
        q0,
        log10_q0,
        f: k.f.to_string(),
    })
}

/// The window `8(n+2) ≥ l > 3n²/log_q χ(1)` for `l = 5·log|G|/log χ(1)`,
/// through `χ(1)^{8(n+2)} ≥ |G|^5` and `|G|^5 > q^{3n²}`, with the degree and
/// order estimates behind it for `n ≥ 3`.
pub fn threshold_suite(t: &CharacterTable, k: &ConstantsTable) -> Result<BoundReport> {
    let lie = require_simple_lie(t)?;
    let th = lie_threshold(lie.n, k)?;
    let (n, q) = (lie.n as u64, lie.q);
    let g5 = upow(t.order, 5);
    let lower_ok = g5 > upow(q, 3 * n * n);
    let q0_log = float(th.log10_q0);
    let mut cases: Vec<CaseRecord> = nontrivial(t)
        .into_par_iter()
        .map(|i| {
            let c = &t.characters[i];
            let d = c.degree();
            let upper_ok = upow(d, 8 * (n + 2)) >= g5;
            let l = 5.0 * (t.order as f64).ln() / (d as f64).ln();
            let mut case = CaseRecord::new(format!("{}/{}", t.name, c.name))
                .input("character", c.name.as_str())
                .input("degree", d)
                .computed("l", float(l))
                .computed("upper_holds", upper_ok)
                .computed("lower_holds", lower_ok)
                .bound("l_max", 8 * (n + 2))
                .bound("q0_log10", q0_log.clone())
                .bound("f", th.f.as_str());
            let mut pass = upper_ok && lower_ok;
            if n >= 3 {
                let e = match lie.epsilon {
                    Epsilon::Plus => n - 1,
                    Epsilon::Minus => n - 2,
                };
                let deg_ok = BigUint::from(d) > upow(q, e);
                case = case
                    .computed("degree_bound_holds", deg_ok)
                    .bound("degree_exceeds_q_power", e);
                pass &= deg_ok;
            }
            case.pass(pass)
        })
        .collect();
    if n >= 3 {
        let low = match lie.epsilon {
            Epsilon::Plus => n * n - 2,
            Epsilon::Minus => n * n - 3,
        };
        let order = BigUint::from(t.order);
        let ok = upow(q, n * n - 1) > order && order > upow(q, low);
        cases.push(
            CaseRecord::new(format!("{}/order", t.name))
                .computed("order", t.order)
                .bound("upper", big(&upow(q, n * n - 1)))
                .bound("lower", big(&upow(q, low)))
                .pass(ok),
        );
    }
    Ok(BoundReport::new("threshold", cases))
}

/// Centralizer `p`-parts and support class counts on an annotated table:
/// `|C_G(g)|_p² < q^{n²+2s²−2ns}` for `s < n/2`, `|C_G(g)|_p² < q^{n²−ns}`
/// for `s ≥ n/2`, `n_s < c·q^{s(2n−s)+n−1}` for `s < n/2`, and
/// `Σ_{s≥n/2} n_s < |G| < q^{n²−1}`.
pub fn class_count_check(t: &CharacterTable, k: &ConstantsTable) -> Result<BoundReport> {
    let lie = t.lie.ok_or_else(|| BoundsError::NoLieParams(t.name.clone()))?;
    let (n, q, p) = (lie.n as u64, lie.q, lie.p);
    let classes = semisimple_nonidentity(t);
    let mut counts = vec![0u64; n as usize];
    let mut cases = Vec::new();
    for &c in &classes {
        let cl = &t.classes[c];
        let s = cl.support.ok_or_else(|| BoundsError::MissingAnnotation {
            table: t.name.clone(),
            class: cl.name.clone(),
            what: "support",
        })? as u64;
        if s == 0 || s >= n {
            return Err(BoundsError::Invalid(format!(
                "class {} has support {s}, expected 1..{n}",
                cl.name
            )));
        }
        counts[s as usize] += cl.size;
        let cp = p_part(t.centralizer_order(c), p).expect("prime characteristic");
        let (part, e) = if 2 * s < n {
            ("small_support", n * n + 2 * s * s - 2 * n * s)
        } else {
            ("large_support", n * n - n * s)
        };
        let ok = upow(cp, 2) < upow(q, e);
        cases.push(
            CaseRecord::new(format!("{}/{}", t.name, cl.name))
                .input("class", cl.name.as_str())
                .input("support", s)
                .input("part", part)
                .computed("centralizer_p_part", cp)
                .bound("squared_below_q_power", e)
                .pass(ok),
        );
    }
    let num = BigInt::from(k.c_classcount.numer().clone());
    let den = BigInt::from(k.c_classcount.denom().clone());
    for s in 1..n {
        if 2 * s >= n {
            continue;
        }
        let e = s * (2 * n - s) + n - 1;
        let lhs = BigInt::from(counts[s as usize]) * &den;
        let rhs = &num * BigInt::from(upow(q, e));
        cases.push(
            CaseRecord::new(format!("{}/n_{s}", t.name))
                .input("support", s)
                .input("part", "small_count")
                .computed("count", counts[s as usize])
                .bound("c", rat(&k.c_classcount))
                .bound("q_exponent", e)
                .pass(lhs < rhs),
        );
    }
    let large: u64 = (1..n).filter(|&s| 2 * s >= n).map(|s| counts[s as usize]).sum();
    let order = BigUint::from(t.order);
    let ok = BigUint::from(large) < order && order < upow(q, n * n - 1);
    cases.push(
        CaseRecord::new(format!("{}/large_support", t.name))
            .input("part", "large_count")
            .computed("count", large)
            .computed("order", t.order)
            .bound("q_power", big(&upow(q, n * n - 1)))
            .pass(ok),
    );
    Ok(BoundReport::new("classcount", cases))
}

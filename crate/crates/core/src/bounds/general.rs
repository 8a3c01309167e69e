use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;

use super::{
    character, distinct_values, float, sym_alt_degree, upow, BoundReport,
    BoundsError, CaseRecord, ConstantsTable, Result,
};
use crate::chartable::{CharacterTable, Epsilon};
use crate::exactnum::Cyclotomic;
use crate::mckay::{diameter, mckay_graph, min_power_covering_of, McKayGraph};

fn connected_graph(t: &CharacterTable, i: usize) -> Result<(McKayGraph, usize)> {
    let chi = character(t, i)?;
    if !t.is_faithful(&chi.values) {
        return Err(BoundsError::NotFaithful(chi.name.clone()));
    }
    let g = mckay_graph(t, &chi.values)?;
    let d = diameter(&g)
        .finite()
        .ok_or_else(|| BoundsError::NotFaithful(chi.name.clone()))?;
    Ok((g, d))
}

fn faithful_indices(t: &CharacterTable) -> Result<Vec<usize>> {
    let v: Vec<usize> = (0..t.characters.len())
        .filter(|&i| t.is_faithful(&t.characters[i].values))
        .collect();
    if v.is_empty() {
        return Err(BoundsError::NoFaithful(t.name.clone()));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideBrauer {
    pub alpha: String,
    /// Number of distinct values `N`.
    pub distinct: usize,
    /// `N − 1`.
    pub bound: usize,
    pub diameter: usize,
    /// `N(α)`.
    pub covering: usize,
    pub pass: bool,
}

impl BurnsideBrauer {
    pub fn case(&self, table: &str) -> CaseRecord {
        CaseRecord::new(format!("{table}/{}", self.alpha))
            .input("table", table)
            .input("alpha", self.alpha.as_str())
            .computed("distinct_values", self.distinct)
            .computed("diameter", self.diameter)
            .computed("covering_power", self.covering)
            .bound("n_minus_1", self.bound)
            .pass(self.pass)
    }
}

/// Diameter and `N(α)` against `N − 1`, `N` the number of distinct values of `α`.
pub fn burnside_brauer(t: &CharacterTable, alpha: usize) -> Result<BurnsideBrauer> {
    let (g, d) = connected_graph(t, alpha)?;
    let chi = &t.characters[alpha];
    let n = distinct_values(&chi.values);
    let covering = min_power_covering_of(t, &g)
        .ok_or_else(|| BoundsError::NotFaithful(chi.name.clone()))?;
    Ok(BurnsideBrauer {
        alpha: chi.name.clone(),
        distinct: n,
        bound: n - 1,
        diameter: d,
        covering,
        pass: d < n && covering < n,
    })
}

/// [`burnside_brauer`] for every faithful irreducible.
pub fn bb_suite(t: &CharacterTable) -> Result<BoundReport> {
    let cases = faithful_indices(t)?
        .into_par_iter()
        .map(|i| burnside_brauer(t, i).map(|r| r.case(&t.name)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::new("bb", cases))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBound {
    pub alpha: String,
    pub degree: u64,
    pub diameter: usize,
    /// Least `d` with `4·α(1)^{2d} ≥ |G|`, i.e. `⌈½ log(|G|/4)/log α(1)⌉`.
    pub min_diameter: usize,
    /// `½ log(|G|/4)/log α(1)`, for display only.
    pub estimate: f64,
    pub largest_degree: u64,
    /// `4·α(1)^{2·diam} ≥ |G|`.
    pub half_log_holds: bool,
    /// `α(1)^{diam} ≥ b(G)`.
    pub largest_degree_holds: bool,
    pub pass: bool,
}

impl LowerBound {
    pub fn case(&self, table: &str) -> CaseRecord {
        CaseRecord::new(format!("{table}/{}", self.alpha))
            .input("table", table)
            .input("alpha", self.alpha.as_str())
            .input("alpha_degree", self.degree)
            .computed("diameter", self.diameter)
            .computed("estimate", float(self.estimate))
            .computed("half_log_holds", self.half_log_holds)
            .computed("largest_degree_holds", self.largest_degree_holds)
            .bound("min_diameter", self.min_diameter)
            .bound("largest_degree", self.largest_degree)
            .pass(self.pass)
    }
}

/// The elementary lower bounds `diam ≥ ½ log(|G|/4)/log α(1)` and
/// `diam ≥ log b(G)/log α(1)`, compared through integer powers.
pub fn lower_bound(t: &CharacterTable, alpha: usize) -> Result<LowerBound> {
    let chi = character(t, alpha)?;
    let a = chi.degree();
    if a <= 1 {
        return Err(BoundsError::Linear(chi.name.clone()));
    }
    let (_, d) = connected_graph(t, alpha)?;
    let order = BigUint::from(t.order);
    let four_pow = |k: usize| BigUint::from(4u32) * upow(a, 2 * k as u64);
    let mut min_d = 0;
    while four_pow(min_d) < order {
        min_d += 1;
    }
    let b = t.max_degree();
    let half_log_holds = four_pow(d) >= order;
    let largest_degree_holds = upow(a, d as u64) >= BigUint::from(b);
    Ok(LowerBound {
        alpha: chi.name.clone(),
        degree: a,
        diameter: d,
        min_diameter: min_d,
        estimate: 0.5 * (t.order as f64 / 4.0).ln() / (a as f64).ln(),
        largest_degree: b,
        half_log_holds,
        largest_degree_holds,
        pass: half_log_holds && largest_degree_holds && d >= min_d,
    })
}

/// [`lower_bound`] for every faithful nonlinear irreducible.
pub fn lower_suite(t: &CharacterTable) -> Result<BoundReport> {
    let cases = faithful_indices(t)?
        .into_par_iter()
        .filter(|&i| t.degree(i) > 1)
        .map(|i| lower_bound(t, i).map(|r| r.case(&t.name)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::new("lower", cases))
}

/// What the table is known to be, as far as the diameter bounds care.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Lie { rank: u32, n: u32, epsilon: Epsilon },
    Symmetric(u32),
    Alternating(u32),
    Simple,
}

impl Family {
    pub fn of(t: &CharacterTable) -> Result<Family> {
        if let Some(lie) = t.lie {
            if !t.is_simple() {
                return Err(BoundsError::NotSimple(t.name.clone()));
            }
            return Ok(Family::Lie {
                rank: lie.rank,
                n: lie.n,
                epsilon: lie.epsilon,
            });
        }
        match sym_alt_degree(t) {
            Some(('S', n)) => Ok(Family::Symmetric(n)),
            Some(('A', n)) => Ok(Family::Alternating(n)),
            _ if t.is_simple() => Ok(Family::Simple),
            _ => Err(BoundsError::Metadata(t.name.clone())),
        }
    }

    /// Proven diameter bound: `C·r²` for Lie type, `4n − 4` for `S_n`, `A_n`, `n ≥ 5`.
    pub fn diameter_bound(&self, k: &ConstantsTable) -> Option<u64> {
        match *self {
            Family::Lie { rank, .. } => Some(k.c_bdd * (rank as u64).pow(2)),
            Family::Symmetric(n) | Family::Alternating(n) if n >= 5 => Some(4 * n as u64 - 4),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureRatio {
    pub alpha: String,
    pub family: Family,
    pub diameter: usize,
    /// `diam·log α(1)/log|G|`.
    pub ratio: f64,
    pub diameter_bound: Option<u64>,
    /// `α(1)^{diam} < |G|^{C_psl}`; informative only, since the large-`q`
    /// hypothesis is never met at desk scale.
    pub psl_constant_holds: Option<bool>,
    pub pass: Option<bool>,
}

impl ConjectureRatio {
    pub fn case(&self, table: &str) -> CaseRecord {
        let mut c = CaseRecord::new(format!("{table}/{}", self.alpha))
            .input("table", table)
            .input("alpha", self.alpha.as_str())
            .input("family", format!("{:?}", self.family))
            .computed("diameter", self.diameter)
            .computed("ratio", float(self.ratio))
            .pass_opt(self.pass);
        if let Some(b) = self.diameter_bound {
            c = c.bound("diameter", b);
        }
        if let Some(h) = self.psl_constant_holds {
            c = c.computed("psl_constant_holds", h);
        }
        c
    }
}

/// `diam·log α(1)/log|G|`, cross-checked against the proven bound of the family.
pub fn conjecture_ratio(
    t: &CharacterTable,
    alpha: usize,
    k: &ConstantsTable,
) -> Result<ConjectureRatio> {
    let family = Family::of(t)?;
    let chi = character(t, alpha)?;
    if Some(alpha) == t.trivial_index() {
        return Err(BoundsError::Trivial(chi.name.clone()));
    }
    let (_, d) = connected_graph(t, alpha)?;
    let a = chi.degree();
    let ratio = d as f64 * (a as f64).ln() / (t.order as f64).ln();
    let bound = family.diameter_bound(k);
    let psl_constant_holds = match family {
        Family::Lie { .. } if a > 1 => {
            Some(upow(a, d as u64) < upow(t.order, k.c_psl))
        }
        _ => None,
    };
    Ok(ConjectureRatio {
        alpha: chi.name.clone(),
        family,
        diameter: d,
        ratio,
        diameter_bound: bound,
        psl_constant_holds,
        pass: bound.map(|b| d as u64 <= b),
    })
}

/// [`conjecture_ratio`] for every faithful nontrivial irreducible.
pub fn conjecture_suite(t: &CharacterTable, k: &ConstantsTable) -> Result<BoundReport> {
    Family::of(t)?;
    let triv = t.trivial_index();
    let cases = faithful_indices(t)?
        .into_par_iter()
        .filter(|&i| Some(i) != triv)
        .map(|i| conjecture_ratio(t, i, k).map(|r| r.case(&t.name)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::new("conjecture", cases))
}

/// Multiplicity-free reduction: `β = Σ α_i` has diameter at most that of its
/// largest constituent, and every `M(G, α_i)` is a subgraph of `M(G, β)`.
pub fn verify_multfree(
    t: &CharacterTable,
    constituents: &[usize],
    k: &ConstantsTable,
) -> Result<BoundReport> {
    if constituents.is_empty() {
        return Err(BoundsError::Invalid("no constituents given".into()));
    }
    for (j, &i) in constituents.iter().enumerate() {
        character(t, i)?;
        if constituents[..j].contains(&i) {
            return Err(BoundsError::Invalid(format!(
                "constituent {} repeated",
                t.characters[i].name
            )));
        }
    }
    let beta: Vec<Cyclotomic> = (0..t.num_classes())
        .map(|c| {
            constituents
                .iter()
                .map(|&i| t.characters[i].values[c].clone())
                .sum()
        })
        .collect();
    let names: Vec<&str> = constituents
        .iter()
        .map(|&i| t.characters[i].name.as_str())
        .collect();
    let label = names.join("+");
    if !t.is_faithful(&beta) {
        return Err(BoundsError::NotFaithful(label));
    }
    let top = *constituents
        .iter()
        .max_by_key(|&&i| (t.degree(i), std::cmp::Reverse(i)))
        .expect("nonempty");
    let gb = mckay_graph(t, &beta)?;
    let db = diameter(&gb);
    let graphs: Vec<McKayGraph> = constituents
        .par_iter()
        .map(|&i| mckay_graph(t, &t.characters[i].values))
        .collect::<std::result::Result<_, _>>()?;
    let gtop = &graphs[constituents.iter().position(|&i| i == top).expect("member")];
    let dtop = diameter(gtop);
    let nb = min_power_covering_of(t, &gb);
    let ntop = min_power_covering_of(t, gtop);

    let mut cases = vec![CaseRecord::new(format!("{}/{label}/diameter", t.name))
        .input("beta", label.as_str())
        .input("largest", t.characters[top].name.as_str())
        .computed("diameter", db.to_string())
        .computed("covering_power", json!(nb))
        .bound("largest_diameter", dtop.to_string())
        .bound("largest_covering_power", json!(ntop))
        .pass(db <= dtop && ntop.map_or(true, |n| nb.is_some_and(|m| m <= n)))];

    let subgraph = graphs.iter().all(|g| {
        (0..g.len()).all(|i| (0..g.len()).all(|j| !g.has_edge(i, j) || gb.has_edge(i, j)))
    });
    cases.push(
        CaseRecord::new(format!("{}/{label}/subgraph", t.name))
            .input("beta", label.as_str())
            .computed("constituent_graphs_contained", subgraph)
            .pass(subgraph),
    );

    // degree count d³ > k(G)² for simple classical tables
    if let (Some(lie), true) = (t.lie, t.is_simple()) {
        if lie.n >= 3 || lie.q >= 11 {
            let d = t.min_nontrivial_degree().expect("simple tables are nontrivial");
            let kg = t.characters.len() as u64;
            let dk = upow(d, 3) > upow(kg, 2);
            let num = k.multfree_factor.numer().to_u64().expect("small");
            let den = k.multfree_factor.denom().to_u64().expect("small");
            let beta_deg = beta[0]
                .to_integer()
                .and_then(|v| v.to_u64())
                .expect("degree");
            let top_deg = t.degree(top);
            let grows = upow(top_deg, num) > upow(beta_deg, den);
            cases.push(
                CaseRecord::new(format!("{}/{label}/degrees", t.name))
                    .input("beta", label.as_str())
                    .computed("min_degree", d)
                    .computed("class_number", kg)
                    .computed("largest_degree", top_deg)
                    .computed("beta_degree", beta_deg)
                    .bound("min_degree_cubed_exceeds_class_number_squared", dk)
                    .bound("largest_degree_power_exceeds_beta_degree", grows)
                    .pass(dk && grows),
            );
        }
    }
    Ok(BoundReport::new("multfree", cases))
}

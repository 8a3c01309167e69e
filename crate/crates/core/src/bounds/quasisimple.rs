use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use super::{BoundReport, BoundsError, CaseRecord, Result};
use crate::chartable::CharacterTable;
use crate::exactnum::Cyclotomic;
use crate::mckay::{decompose, diameter, distances, mckay_graph, power_accumulation};

/// Diameters for a quasi-simple `G` with cyclic center against those of
/// `S = G/Z`: `diam M(G,χ) ≤ |Z|·diam M(S,β) + |Z| − 1` for every faithful
/// `χ` and every nontrivial constituent `β` of `χ^{|Z|}` trivial on `Z`, and
/// every path from `1_G` to a character trivial on `Z` has length divisible by `|Z|`.
///
/// Classes of `G` must carry `image` annotations naming their class in `S`.
pub fn verify_quasisimple(g: &CharacterTable, s: &CharacterTable) -> Result<BoundReport> {
    if !s.is_simple() {
        return Err(BoundsError::NotSimple(s.name.clone()));
    }
    let center: Vec<usize> = (0..g.num_classes())
        .filter(|&k| g.classes[k].is_central)
        .collect();
    let e = center.len();
    if !center.iter().any(|&k| g.classes[k].rep_order as usize == e) {
        return Err(BoundsError::Invalid(format!("center of {} is not cyclic", g.name)));
    }
    let image: Vec<usize> = g
        .classes
        .iter()
        .map(|c| {
            let name = c.image.as_deref().ok_or_else(|| BoundsError::MissingAnnotation {
                table: g.name.clone(),
                class: c.name.clone(),
                what: "image",
            })?;
            s.class_index(name).ok_or_else(|| {
                BoundsError::Invalid(format!("image {name} of {} not a class of {}", c.name, s.name))
            })
        })
        .collect::<Result<_>>()?;

    let center_trivial: Vec<usize> = (0..g.characters.len())
        .filter(|&i| {
            let v = &g.characters[i].values;
            center.iter().all(|&k| v[k] == v[0])
        })
        .collect();
    let mut to_s: HashMap<usize, usize> = HashMap::new();
    for (j, beta) in s.characters.iter().enumerate() {
        let inflated: Vec<Cyclotomic> = image.iter().map(|&k| beta.values[k].clone()).collect();
        let i = center_trivial
            .iter()
            .copied()
            .find(|&i| g.characters[i].values == inflated)
            .ok_or_else(|| {
                BoundsError::Invalid(format!("{} does not inflate to a character of {}", beta.name, g.name))
            })?;
        to_s.insert(i, j);
    }
    if to_s.len() != center_trivial.len() {
        return Err(BoundsError::Invalid(format!(
            "{} characters of {} are trivial on the center, {} has {}",
            center_trivial.len(),
            g.name,
            s.name,
            s.characters.len()
        )));
    }

    let s_triv = s.trivial_index();
    let s_diam: Vec<Option<usize>> = (0..s.characters.len())
        .into_par_iter()
        .map(|j| {
            if Some(j) == s_triv {
                return Ok(None);
            }
            Ok(diameter(&mckay_graph(s, &s.characters[j].values)?).finite())
        })
        .collect::<Result<_>>()?;

    let faithful: Vec<usize> = (0..g.characters.len())
        .filter(|&i| g.is_faithful(&g.characters[i].values))
        .collect();
    if faithful.is_empty() {
        return Err(BoundsError::NoFaithful(g.name.clone()));
    }
    let g_triv = g.trivial_index().ok_or_else(|| BoundsError::Invalid("no trivial character".into()))?;

    let per_chi = faithful
        .par_iter()
        .map(|&i| {
            let chi = &g.characters[i];
            let graph = mckay_graph(g, &chi.values)?;
            let d = diameter(&graph)
                .finite()
                .ok_or_else(|| BoundsError::NotFaithful(chi.name.clone()))?;
            let power: Vec<Cyclotomic> = chi.values.iter().map(|v| v.pow(e as u64)).collect();
            let m = decompose(g, &power)?;
            let betas: Vec<usize> = center_trivial
                .iter()
                .copied()
                .filter(|&b| b != g_triv && !m[b].is_zero())
                .collect();
            let bounds: Vec<(String, usize)> = betas
                .iter()
                .map(|b| {
                    let j = to_s[b];
                    let sd = s_diam[j].expect("nontrivial characters of a simple group are faithful");
                    (s.characters[j].name.clone(), e * sd + e - 1)
                })
                .collect();
            let ok = !bounds.is_empty() && bounds.iter().all(|(_, b)| d <= *b);
            let bound_case = CaseRecord::new(format!("{}/{}/bound", g.name, chi.name))
                .input("character", chi.name.as_str())
                .input("center_order", e)
                .computed("diameter", d)
                .bound(
                    "per_beta",
                    json!(bounds.iter().map(|(n, b)| json!({"beta": n, "bound": b})).collect::<Vec<_>>()),
                )
                .pass(ok);

            let dist = distances(&graph, g_triv);
            let acc = power_accumulation(g, &graph, d + e);
            let mut bad: Vec<String> = Vec::new();
            for &psi in &center_trivial {
                let name = &g.characters[psi].name;
                if dist[psi].map_or(true, |x| x % e != 0) {
                    bad.push(format!("{name}: distance {:?}", dist[psi]));
                }
                for (k, level) in acc.powers.iter().enumerate() {
                    if k % e != 0 && !level[psi].is_zero() {
                        bad.push(format!("{name}: power {k}"));
                    }
                }
            }
            let div_case = CaseRecord::new(format!("{}/{}/divisibility", g.name, chi.name))
                .input("character", chi.name.as_str())
                .input("center_order", e)
                .input("powers_checked", d + e)
                .computed("violations", bad.clone())
                .pass(bad.is_empty());
            Ok((d, vec![bound_case, div_case]))
        })
        .collect::<Result<Vec<_>>>()?;

    let max_g = per_chi.iter().map(|(d, _)| *d).max().expect("nonempty");
    let max_s = s_diam.iter().flatten().copied().max().unwrap_or(0);
    let overall = e * (max_s + 1) - 1;
    let mut cases: Vec<CaseRecord> = per_chi.into_iter().flat_map(|(_, c)| c).collect();
    cases.push(
        CaseRecord::new(format!("{}/max", g.name))
            .input("quotient", s.name.as_str())
            .computed("max_faithful_diameter", max_g)
            .computed("max_quotient_diameter", max_s)
            .bound("diameter", overall)
            .pass(max_g <= overall),
    );
    Ok(BoundReport::new("qs", cases))
}

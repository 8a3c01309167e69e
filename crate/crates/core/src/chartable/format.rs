//! JSON exchange format.
//!
//! ```json
//! {
//!   "name": "S3",
//!   "order": 6,
//!   "characteristic": 3,
//!   "lie": {"n": 2, "q": 3, "epsilon": "+", "rank": 1},
//!   "classes": [{"name": "1a", "size": 1, "order": 1, "central": true}, ...],
//!   "characters": [{"name": "chi1", "values": ["1", "E(3)+E(3)^2", ...]}, ...]
//! }
//! ```
//!
//! Optional class fields: `central` (derived from the values when absent),
//! `support`, `image`, `transvection`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{
    validate_table, Character, CharacterTable, ConjugacyClass, Epsilon, LieParams,
    ValidationReport,
};
use crate::exactnum::{cyc_parse, Cyclotomic, LiteralError};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    name: String,
    order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    characteristic: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lie: Option<LieDoc>,
    classes: Vec<ClassDoc>,
    characters: Vec<CharDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieDoc {
    n: u32,
    q: u64,
    epsilon: Epsilon,
    rank: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    name: String,
    size: u64,
    order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    central: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    support: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    image: Option<String>,
    #[serde(default, skip_serializing_if = "is_false")]
    transvection: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharDoc {
    name: String,
    values: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum ImportError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("character {character:?}, value {index}: {source}")]
    Literal {
        character: String,
        index: usize,
        source: LiteralError,
    },
    #[error("duplicate class name {0:?}")]
    DuplicateClass(String),
    #[error("duplicate character name {0:?}")]
    DuplicateCharacter(String),
    #[error("lie parameters: q = {0} is not a prime power")]
    Lie(u64),
    #[error("invalid table:\n{0}")]
    Invalid(ValidationReport),
}

/// Parse and validate.
pub fn import_table(text: &str) -> Result<CharacterTable, ImportError> {
    let t = import_table_unchecked(text)?;
    let report = validate_table(&t);
    if report.is_valid() {
        Ok(t)
    } else {
        Err(ImportError::Invalid(report))
    }
}

/// Parse without running the table invariants.
pub fn import_table_unchecked(text: &str) -> Result<CharacterTable, ImportError> {
    let doc: TableDoc = serde_json::from_str(text).map_err(|e| ImportError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut seen = HashSet::new();
    for c in &doc.classes {
        if !seen.insert(c.name.as_str()) {
            return Err(ImportError::DuplicateClass(c.name.clone()));
        }
    }
    let mut seen = HashSet::new();
    for c in &doc.characters {
        if !seen.insert(c.name.as_str()) {
            return Err(ImportError::DuplicateCharacter(c.name.clone()));
        }
    }

    let lie = match doc.lie {
        Some(l) => Some(LieParams::new(l.n, l.q, l.epsilon, l.rank).ok_or(ImportError::Lie(l.q))?),
        None => None,
    };

    let mut characters = Vec::with_capacity(doc.characters.len());
    for c in doc.characters {
        let values = c
            .values
            .iter()
            .enumerate()
            .map(|(index, s)| {
                cyc_parse(s).map_err(|source| ImportError::Literal {
                    character: c.name.clone(),
                    index,
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        characters.push(Character::new(c.name, values));
    }

    let classes = doc
        .classes
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let central = c
                .central
                .unwrap_or_else(|| derived_central(&characters, k, c.size));
            ConjugacyClass {
                name: c.name,
                size: c.size,
                rep_order: c.order,
                is_central: central,
                support: c.support,
                image: c.image,
                transvection: c.transvection,
            }
        })
        .collect();

    Ok(CharacterTable {
        name: doc.name,
        order: doc.order,
        characteristic: doc.characteristic,
        lie,
        classes,
        characters,
    })
}

fn derived_central(chars: &[Character], k: usize, size: u64) -> bool {
    if chars.is_empty() || chars.iter().any(|c| c.values.len() <= k) {
        return size == 1;
    }
    chars.iter().all(|c| {
        let v: &Cyclotomic = &c.values[k];
        let d = &c.values[0];
        &(v * &v.conj()) == &(d * d)
    })
}

/// Canonical JSON rendering; `central` is always written.
pub fn export_table(t: &CharacterTable) -> String {
    let doc = TableDoc {
        name: t.name.clone(),
        order: t.order,
        characteristic: t.characteristic,
        lie: t.lie.map(|l| LieDoc {
            n: l.n,
            q: l.q,
            epsilon: l.epsilon,
            rank: l.rank,
        }),
        classes: t
            .classes
            .iter()
            .map(|c| ClassDoc {
                name: c.name.clone(),
                size: c.size,
                order: c.rep_order,
                central: Some(c.is_central),
                support: c.support,
                image: c.image.clone(),
                transvection: c.transvection,
            })
            .collect(),
        characters: t
            .characters
            .iter()
            .map(|c| CharDoc {
                name: c.name.clone(),
                values: c.values.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

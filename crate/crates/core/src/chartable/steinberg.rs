use super::{p_part, CharacterTable};
use crate::exactnum::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergEntry {
    pub class: usize,
    /// Sign `ε_g`.
    pub epsilon: i8,
    /// `|C_G(g)|_p`.
    pub cent_p_part: u64,
}

/// Steinberg character location plus its sign/p-part data on semisimple classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergData {
    pub st_index: usize,
    /// One entry per semisimple class, in table order.
    pub entries: Vec<SteinbergEntry>,
}

impl SteinbergData {
    pub fn entry(&self, class: usize) -> Option<&SteinbergEntry> {
        self.entries.iter().find(|e| e.class == class)
    }

    /// `St(g)` rebuilt from the extracted data; zero off the semisimple classes.
    pub fn value(&self, class: usize) -> i64 {
        self.entry(class)
            .map(|e| e.epsilon as i64 * e.cent_p_part as i64)
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SteinbergError {
    #[error("table has no characteristic")]
    NoCharacteristic,
    #[error("no character of degree {0}")]
    NoCandidate(u64),
    #[error("{count} characters of degree {degree} and none named \"St\"")]
    Ambiguous { degree: u64, count: usize },
    #[error("Steinberg value pattern fails on classes {}", .classes.join(", "))]
    PatternViolated { classes: Vec<String> },
}

/// Locate St (degree `|G|_p`) and extract `ε_g`, `|C_G(g)|_p` on semisimple classes.
pub fn identify_steinberg(t: &CharacterTable) -> Result<SteinbergData, SteinbergError> {
    let p = t.characteristic.ok_or(SteinbergError::NoCharacteristic)?;
    let gp = p_part(t.order, p).map_err(|_| SteinbergError::NoCharacteristic)?;
    let target = Cyclotomic::from_integer(gp as i64);
    let candidates: Vec<usize> = (0..t.characters.len())
        .filter(|&i| t.characters[i].values[0] == target)
        .collect();
    let st_index = match candidates.len() {
        0 => return Err(SteinbergError::NoCandidate(gp)),
        1 => candidates[0],
        n => *candidates
            .iter()
            .find(|&&i| t.characters[i].name == "St")
            .ok_or(SteinbergError::Ambiguous {
                degree: gp,
                count: n,
            })?,
    };

    let st = &t.characters[st_index].values;
    let mut entries = Vec::new();
    let mut bad = Vec::new();
    for (k, class) in t.classes.iter().enumerate() {
        let semisimple = t.is_semisimple(k).unwrap_or(false);
        if !semisimple {
            if !st[k].is_zero() {
                bad.push(class.name.clone());
            }
            continue;
        }
        let cp = p_part(t.centralizer_order(k), p).expect("p checked prime");
        let v = st[k].to_integer();
        let eps = match v {
            Some(v) if v == cp.into() => 1,
            Some(v) if v == (-(cp as i64)).into() => -1,
            _ => {
                bad.push(class.name.clone());
                continue;
            }
        };
        entries.push(SteinbergEntry {
            class: k,
            epsilon: eps,
            cent_p_part: cp,
        });
    }
    if !bad.is_empty() {
        return Err(SteinbergError::PatternViolated { classes: bad });
    }
    Ok(SteinbergData { st_index, entries })
}

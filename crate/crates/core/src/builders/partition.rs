use std::fmt;

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A partition read as the cycle lengths of a permutation.
pub type CycleType = Partition;

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Associate partition `λ*` (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_associated(&self) -> bool {
        *self == self.conjugate()
    }

    /// `2(λ_i − i) − 1` over the diagonal (`i` from zero): the diagonal hook
    /// lengths when `λ` is self-associated.
    pub fn diagonal_hooks(&self) -> Vec<u32> {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .map(|(i, &p)| 2 * (p - i as u32) - 1)
            .collect()
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.parts[j] - i as u32 - 1);
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order in `S_n`.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0u64;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
                z *= p as u64 * m;
            }
        }
        z
    }

    /// Size of the `S_n` class with this cycle type.
    pub fn class_size(&self) -> u64 {
        factorial(self.n()) / self.z()
    }

    /// Order of a permutation with this cycle type.
    pub fn element_order(&self) -> u64 {
        self.parts
            .iter()
            .fold(1u64, |acc, &p| acc / crate::chartable::gcd(acc, p as u64) * p as u64)
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.n() as usize - self.parts.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Distinct odd parts: the `S_n` classes that split in `A_n`.
    pub fn splits_in_alternating(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Cycle type with one extra fixed point.
    pub fn with_fixed_point(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse partition {0:?}")]
pub struct PartitionParseError(pub String);

impl std::str::FromStr for Partition {
    type Err = PartitionParseError;

    /// Accepts `(4,1)`, `4,1` or `4 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionParseError(s.to_string()))?;
        if parts.is_empty() || parts.contains(&0) {
            return Err(PartitionParseError(s.to_string()));
        }
        Ok(Partition::new(parts))
    }
}

pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// All partitions of `n`, descending lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Subsystem dimensions of a tensor-product space.
///
/// Composite indices put the first subsystem in the most significant
/// position: `index = sum_i idx_i * prod_{j>i} d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DimensionVector(Vec<usize>);

impl DimensionVector {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidDims("no subsystems".into()));
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidDims(format!(
                "subsystem dimension {d} is below 2"
            )));
        }
        dims.iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidDims("total dimension overflows".into()))?;
        Ok(Self(dims))
    }

    /// `d ⊗ d`.
    pub fn bipartite(d: usize) -> Result<Self> {
        Self::new(vec![d, d])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of subsystems.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn is_bipartite(&self) -> bool {
        self.0.len() == 2
    }

    /// Stride of each subsystem in the composite index.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.0.len()];
        for i in (0..self.0.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.0[i + 1];
        }
        strides
    }

    /// Splits a composite index into per-subsystem digits.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for (slot, &d) in out.iter_mut().zip(&self.0).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    pub fn compose(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.0)
            .fold(0, |acc, (&i, &d)| acc * d + i)
    }

    /// Dimension vector of `n` copies laid out copy after copy.
    pub fn repeated(&self, n: usize) -> Self {
        let mut dims = Vec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            dims.extend_from_slice(&self.0);
        }
        Self(dims)
    }
}

impl TryFrom<Vec<usize>> for DimensionVector {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        Self::new(dims)
    }
}

impl From<DimensionVector> for Vec<usize> {
    fn from(dims: DimensionVector) -> Self {
        dims.0
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// A bipartition of subsystem indices (zero-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cut {
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl Cut {
    pub fn new(side_a: &[usize], num_subsystems: usize) -> Result<Self> {
        let mut a: Vec<usize> = side_a.to_vec();
        a.sort_unstable();
        a.dedup();
        if a.len() != side_a.len() {
            return Err(Error::InvalidCut("repeated subsystem index".into()));
        }
        if a.is_empty() {
            return Err(Error::InvalidCut("side A is empty".into()));
        }
        if let Some(&i) = a.iter().find(|&&i| i >= num_subsystems) {
            return Err(Error::InvalidCut(format!(
                "subsystem {i} out of range for {num_subsystems} subsystems"
            )));
        }
        if a.len() == num_subsystems {
            return Err(Error::InvalidCut("side B is empty".into()));
        }
        let b = (0..num_subsystems).filter(|i| !a.contains(i)).collect();
        Ok(Self { side_a: a, side_b: b })
    }

    /// The `A|B` cut of a two-party system.
    pub fn standard() -> Self {
        Self {
            side_a: vec![0],
            side_b: vec![1],
        }
    }

    /// Every bipartition of `m` subsystems, each listed once with the smaller
    /// side as `side_a` (ties keep subsystem 0 on side A).
    pub fn all_bipartitions(m: usize) -> Vec<Cut> {
        if m < 2 {
            return Vec::new();
        }
        let mut cuts: Vec<Cut> = (1..(1usize << (m - 1)))
            .map(|mask| {
                let a: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
                let b: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 0).collect();
                if a.len() > b.len() {
                    Cut { side_a: b, side_b: a }
                } else {
                    Cut { side_a: a, side_b: b }
                }
            })
            .collect();
        cuts.sort_by(|x, y| {
            (x.side_a.len(), &x.side_a).cmp(&(y.side_a.len(), &y.side_a))
        });
        cuts
    }

    /// Parses `"1|23"` or `"1,2|3"` style one-based notation.
    pub fn parse(text: &str, num_subsystems: usize) -> Result<Self> {
        let (a, _) = text
            .split_once('|')
            .ok_or_else(|| Error::InvalidCut(format!("expected 'A|B', got '{text}'")))?;
        let parse_side = |s: &str| -> Result<Vec<usize>> {
            let items: Vec<&str> = if s.contains(',') {
                s.split(',').map(str::trim).collect()
            } else {
                s.trim()
                    .char_indices()
                    .map(|(i, c)| &s.trim()[i..i + c.len_utf8()])
                    .collect()
            };
            items
                .into_iter()
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .map(|v| v - 1)
                        .ok_or_else(|| Error::InvalidCut(format!("bad subsystem label '{t}'")))
                })
                .collect()
        };
        let side_a = parse_side(a)?;
        let cut = Self::new(&side_a, num_subsystems)?;
        let (_, b) = text.split_once('|').unwrap_or_default();
        let side_b = parse_side(b)?;
        let mut sorted_b = side_b.clone();
        sorted_b.sort_unstable();
        if sorted_b != cut.side_b {
            return Err(Error::InvalidCut(format!(
                "'{text}' is not a bipartition of {num_subsystems} subsystems"
            )));
        }
        Ok(cut)
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    pub fn num_subsystems(&self) -> usize {
        self.side_a.len() + self.side_b.len()
    }

    pub fn complement(&self) -> Self {
        Self {
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
        }
    }

    pub fn dim_a(&self, dims: &DimensionVector) -> usize {
        self.side_a.iter().map(|&i| dims.as_slice()[i]).product()
    }

    pub fn dim_b(&self, dims: &DimensionVector) -> usize {
        self.side_b.iter().map(|&i| dims.as_slice()[i]).product()
    }

    pub(crate) fn check(&self, dims: &DimensionVector) -> Result<()> {
        if self.num_subsystems() != dims.len() {
            return Err(Error::InvalidCut(format!(
                "cut {self} covers {} subsystems, dims have {}",
                self.num_subsystems(),
                dims.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |side: &[usize]| -> String {
            let wide = side.iter().any(|&i| i >= 9);
            let parts: Vec<String> = side.iter().map(|i| (i + 1).to_string()).collect();
            parts.join(if wide { "," } else { "" })
        };
        write!(f, "{}|{}", label(&self.side_a), label(&self.side_b))
    }
}

//! Subsystem permutation and merging.
//!
//! A grouping such as `{0}, {1, 2}` on `[2, 2, 2]` reorders subsystems to
//! `0, 1, 2` and merges each block into a single subsystem, giving `[2, 4]`.
//! Every entry of the result is copied from the input; nothing is recomputed.

use super::dims::DimensionVector;
use super::matrix::ComplexMatrix;
use super::pure::PureVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regrouping {
    source: DimensionVector,
    target: DimensionVector,
    /// `perm[new_index] = old_index`.
    perm: Vec<usize>,
}

impl Regrouping {
    pub fn new(dims: &DimensionVector, grouping: &[Vec<usize>]) -> Result<Self> {
        let m = dims.len();
        let order: Vec<usize> = grouping.iter().flatten().copied().collect();
        if grouping.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        let mut seen = vec![false; m];
        for &i in &order {
            if i >= m {
                return Err(Error::InvalidPartition(format!(
                    "subsystem {i} out of range for {m} subsystems"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPartition(format!("subsystem {i} repeated")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "grouping {grouping:?} does not cover all {m} subsystems"
            )));
        }

        let d = dims.as_slice();
        let permuted = DimensionVector::new(order.iter().map(|&i| d[i]).collect())?;
        let target = DimensionVector::new(
            grouping
                .iter()
                .map(|block| block.iter().map(|&i| d[i]).product())
                .collect(),
        )?;

        let strides = dims.strides();
        let perm = (0..dims.total())
            .map(|new| {
                permuted
                    .digits(new)
                    .iter()
                    .zip(&order)
                    .map(|(&digit, &old_sub)| digit * strides[old_sub])
                    .sum()
            })
            .collect();

        Ok(Self {
            source: dims.clone(),
            target,
            perm,
        })
    }

    /// Pure basis relabeling within a single space: `map[old] = new`.
    pub fn relabel(dims: &DimensionVector, map: &[usize]) -> Result<Self> {
        let n = dims.total();
        if map.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: map.len() });
        }
        let mut perm = vec![usize::MAX; n];
        for (old, &new) in map.iter().enumerate() {
            if new >= n || perm[new] != usize::MAX {
                return Err(Error::InvalidPartition(format!("{map:?} is not a permutation")));
            }
            perm[new] = old;
        }
        Ok(Self {
            source: dims.clone(),
            target: dims.clone(),
            perm,
        })
    }

    pub fn source(&self) -> &DimensionVector {
        &self.source
    }

    pub fn target(&self) -> &DimensionVector {
        &self.target
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.perm.len()];
        for (new, &old) in self.perm.iter().enumerate() {
            perm[old] = new;
        }
        Self {
            source: self.target.clone(),
            target: self.source.clone(),
            perm,
        }
    }

    /// Composition: apply `self`, then `next`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if self.target.total() != next.source.total() {
            return Err(Error::DimensionMismatch {
                expected: self.target.total(),
                got: next.source.total(),
            });
        }
        Ok(Self {
            source: self.source.clone(),
            target: next.target.clone(),
            perm: next.perm.iter().map(|&mid| self.perm[mid]).collect(),
        })
    }

    pub fn apply_slice<T: Copy>(&self, v: &[T]) -> Vec<T> {
        self.perm.iter().map(|&old| v[old]).collect()
    }

    pub fn apply_vector(&self, v: &PureVector) -> Result<PureVector> {
        if v.dims().total() != self.source.total() {
            return Err(Error::DimensionMismatch {
                expected: self.source.total(),
                got: v.dims().total(),
            });
        }
        Ok(PureVector::from_parts_unchecked(
            self.target.clone(),
            self.apply_slice(v.amplitudes()),
        ))
    }

    pub fn apply_matrix(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.source.total();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: m.rows() });
        }
        let mut out = ComplexMatrix::zeros(n, n);
        for (r, &or) in self.perm.iter().enumerate() {
            for (c, &oc) in self.perm.iter().enumerate() {
                out[(r, c)] = m[(or, oc)];
            }
        }
        Ok(out)
    }
}

/// Reorders and merges the subsystems of a vector per `grouping`.
pub fn permute_and_merge_vector(v: &PureVector, grouping: &[Vec<usize>]) -> Result<PureVector> {
    Regrouping::new(v.dims(), grouping)?.apply_vector(v)
}

/// Reorders and merges the subsystems of a `D×D` operator per `grouping`.
pub fn permute_and_merge_matrix(
    m: &ComplexMatrix,
    dims: &DimensionVector,
    grouping: &[Vec<usize>],
) -> Result<(ComplexMatrix, DimensionVector)> {
    let r = Regrouping::new(dims, grouping)?;
    Ok((r.apply_matrix(m)?, r.target.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(v: &[usize]) -> DimensionVector {
        DimensionVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn merge_keeps_basis_state() {
        let v = PureVector::basis(dims(&[2, 2, 2]), &[0, 0, 0]).unwrap();
        let merged = permute_and_merge_vector(&v, &[vec![0], vec![1, 2]]).unwrap();
        assert_eq!(merged.dims().as_slice(), &[2, 4]);
        assert_eq!(merged, PureVector::basis(dims(&[2, 4]), &[0, 0]).unwrap());
    }

    #[test]
    fn swap_moves_digits() {
        let v = PureVector::basis(dims(&[2, 3]), &[1, 2]).unwrap();
        let swapped = permute_and_merge_vector(&v, &[vec![1], vec![0]]).unwrap();
        assert_eq!(swapped, PureVector::basis(dims(&[3, 2]), &[2, 1]).unwrap());
    }

    #[test]
    fn inverse_roundtrip() {
        let d = dims(&[2, 3, 2, 3]);
        let r = Regrouping::new(&d, &[vec![0, 2], vec![1, 3]]).unwrap();
        let data: Vec<usize> = (0..d.total()).collect();
        assert_eq!(r.inverse().apply_slice(&r.apply_slice(&data)), data);
        assert_eq!(r.target().as_slice(), &[4, 9]);
    }

    #[test]
    fn invalid_partitions() {
        let d = dims(&[2, 2, 2]);
        assert!(Regrouping::new(&d, &[vec![0], vec![1]]).is_err());
        assert!(Regrouping::new(&d, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Regrouping::new(&d, &[vec![0], vec![], vec![1, 2]]).is_err());
        assert!(Regrouping::new(&d, &[vec![0, 1, 3], vec![2]]).is_err());
        assert!(Regrouping::relabel(&d, &[0, 0, 1, 2, 3, 4, 5, 6]).is_err());
    }
}

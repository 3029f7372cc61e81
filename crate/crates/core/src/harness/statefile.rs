//! JSON state files: `dims`, a row-major `matrix` of `[re, im]` pairs and
//! optional family metadata.
//!
//! Numbers are written in shortest round-trip form, so parsing a written
//! file reproduces every entry bit for bit.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::{DensityMatrix, Family};
use crate::tensor::{ComplexMatrix, DimensionVector};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Family>,
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix, metadata: Option<Family>) -> Self {
        let m = rho.matrix();
        let matrix = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        Self {
            dims: rho.dims().as_slice().to_vec(),
            matrix,
            metadata,
        }
    }

    /// Validates into a density matrix; errors name the violated invariant.
    pub fn to_state(&self) -> Result<DensityMatrix> {
        let dims = DimensionVector::new(self.dims.clone())?;
        let n = dims.total();
        if self.matrix.len() != n || self.matrix.iter().any(|row| row.len() != n) {
            let widths: Vec<usize> = self.matrix.iter().map(Vec::len).collect();
            return Err(Error::InvalidState {
                invariant: "shape",
                detail: format!(
                    "dims {dims} require a {n}x{n} matrix, got {} rows of widths {widths:?}",
                    self.matrix.len()
                ),
            });
        }
        let data: Vec<Complex64> = self
            .matrix
            .iter()
            .flatten()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        DensityMatrix::new(dims, ComplexMatrix::from_vec(n, n, data)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{sigma_phi, SchmidtSpec};

    #[test]
    fn round_trip_is_exact() {
        let family = Family::SigmaPhi { d: 3, etas: vec![0.8, 0.6] };
        let rho = sigma_phi(&SchmidtSpec::new(vec![0.8, 0.6]).unwrap(), 3).unwrap();
        let file = StateFile::from_state(&rho, Some(family.clone()));
        let back = StateFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back.metadata, Some(family));
        assert_eq!(back.to_state().unwrap(), rho);
    }

    #[test]
    fn diagnostics_name_the_invariant() {
        let file = |m: Vec<Vec<[f64; 2]>>| StateFile { dims: vec![2], matrix: m, metadata: None };
        let cases = [
            (vec![vec![[0.45, 0.0], [0.0, 0.0]], vec![[0.0, 0.0], [0.45, 0.0]]], "trace"),
            (vec![vec![[0.5, 0.0], [0.1, 0.0]], vec![[0.0, 0.0], [0.5, 0.0]]], "hermitian"),
            (vec![vec![[1.5, 0.0], [0.0, 0.0]], vec![[0.0, 0.0], [-0.5, 0.0]]], "positive semidefinite"),
            (vec![vec![[1.0, 0.0]]], "shape"),
        ];
        for (m, name) in cases {
            match file(m).to_state() {
                Err(Error::InvalidState { invariant, .. }) => assert_eq!(invariant, name),
                other => panic!("expected {name} violation, got {other:?}"),
            }
        }
    }

    #[test]
    fn rejects_malformed_json() {
        assert!(matches!(StateFile::from_json("{\"dims\": [2]"), Err(Error::Parse(_))));
    }
}

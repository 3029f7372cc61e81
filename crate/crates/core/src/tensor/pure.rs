use num_complex::Complex64;

use super::dims::DimensionVector;
use super::matrix::{vector_norm, ComplexMatrix};
use crate::error::{Error, Result};
use crate::tolerance;

/// Normalized state vector over a tensor-product space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureVector {
    dims: DimensionVector,
    amplitudes: Vec<Complex64>,
}

impl PureVector {
    /// Validates length and unit norm.
    pub fn new(dims: DimensionVector, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        let norm = vector_norm(&amplitudes);
        if (norm - 1.0).abs() > tolerance::NORM {
            return Err(Error::InvalidState {
                invariant: "norm",
                detail: format!("vector norm is {norm}, expected 1"),
            });
        }
        Ok(Self { dims, amplitudes })
    }

    /// Scales `amplitudes` to unit norm.
    pub fn normalized(dims: DimensionVector, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = vector_norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidParameter("cannot normalize a zero vector".into()));
        }
        for a in &mut amplitudes {
            *a /= norm;
        }
        Self::new(dims, amplitudes)
    }

    /// Computational basis vector `|digits>`.
    pub fn basis(dims: DimensionVector, digits: &[usize]) -> Result<Self> {
        if digits.len() != dims.len() || digits.iter().zip(dims.as_slice()).any(|(&i, &d)| i >= d) {
            return Err(Error::InvalidParameter(format!(
                "basis label {digits:?} does not fit dims {dims}"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dims.total()];
        amplitudes[dims.compose(digits)] = Complex64::new(1.0, 0.0);
        Ok(Self { dims, amplitudes })
    }

    /// Real superposition `sum_j c_j |digits_j>`, normalized afterwards.
    pub fn from_terms(dims: DimensionVector, terms: &[(f64, &[usize])]) -> Result<Self> {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dims.total()];
        for &(coef, digits) in terms {
            if digits.len() != dims.len()
                || digits.iter().zip(dims.as_slice()).any(|(&i, &d)| i >= d)
            {
                return Err(Error::InvalidParameter(format!(
                    "basis label {digits:?} does not fit dims {dims}"
                )));
            }
            amplitudes[dims.compose(digits)] += Complex64::new(coef, 0.0);
        }
        Self::normalized(dims, amplitudes)
    }

    pub(crate) fn from_parts_unchecked(dims: DimensionVector, amplitudes: Vec<Complex64>) -> Self {
        Self { dims, amplitudes }
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `|v><v|`.
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims: Vec<usize> = self.dims.as_slice().to_vec();
        dims.extend_from_slice(other.dims.as_slice());
        Self {
            dims: DimensionVector::new(dims).expect("concatenated dims are valid"),
            amplitudes: super::matrix::kron_vec(&self.amplitudes, &other.amplitudes),
        }
    }
}

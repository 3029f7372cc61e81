//! Dense complex linear algebra over tensor-product spaces.

mod dims;
mod eigen;
mod matrix;
mod partial_transpose;
mod pure;
mod regroup;
mod schmidt;

pub use dims::{Cut, DimensionVector};
pub use eigen::{hermitian_eigs, HermitianEigen};
pub use matrix::{inner, kron_vec, vector_norm, ComplexMatrix, ONE, ZERO};
pub use partial_transpose::{partial_transpose, tensor_product};
pub use pure::PureVector;
pub use regroup::{permute_and_merge_matrix, permute_and_merge_vector, Regrouping};
pub use schmidt::{decompose_coefficients, schmidt_decompose, schmidt_rank, SchmidtDecomposition};


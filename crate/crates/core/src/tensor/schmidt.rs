use num_complex::Complex64;

use super::dims::Cut;
use super::eigen::hermitian_eigs;
use super::matrix::{kron_vec, vector_norm, ComplexMatrix};
use super::pure::PureVector;
use super::regroup::Regrouping;
use crate::error::Result;
use crate::tolerance;

/// `v = sum_k coefficients[k] |left_k> ⊗ |right_k>`.
///
/// `coefficients` has `min(d_A, d_B)` nonincreasing entries; the vector lists
/// only hold the `rank` components above the rank tolerance.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub coefficients: Vec<f64>,
    pub left_vectors: Vec<Vec<Complex64>>,
    pub right_vectors: Vec<Vec<Complex64>>,
    pub rank: usize,
    pub dim_a: usize,
    pub dim_b: usize,
}

impl SchmidtDecomposition {
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim_a * self.dim_b];
        for k in 0..self.rank {
            let term = kron_vec(&self.left_vectors[k], &self.right_vectors[k]);
            for (o, t) in out.iter_mut().zip(term) {
                *o += t * self.coefficients[k];
            }
        }
        out
    }
}

/// Schmidt decomposition of `v` across `cut`.
///
/// The coefficient matrix `C` (d_A × d_B) is eigendecomposed through its Gram
/// matrix `C C^dagger`; each coefficient is then taken as the norm of
/// `C^T conj(u_k)`, which keeps vanishing coefficients at rounding level.
pub fn schmidt_decompose(v: &PureVector, cut: &Cut) -> Result<SchmidtDecomposition> {
    cut.check(v.dims())?;
    let grouping = vec![cut.side_a().to_vec(), cut.side_b().to_vec()];
    let merged = Regrouping::new(v.dims(), &grouping)?.apply_vector(v)?;
    let d = merged.dims().as_slice();
    Ok(decompose_coefficients(merged.amplitudes(), d[0], d[1]))
}

/// Schmidt decomposition of a vector already laid out as `d_a × d_b`.
pub fn decompose_coefficients(amplitudes: &[Complex64], dim_a: usize, dim_b: usize) -> SchmidtDecomposition {
    assert_eq!(amplitudes.len(), dim_a * dim_b);
    let c = ComplexMatrix::from_vec(dim_a, dim_b, amplitudes.to_vec()).expect("shape checked");
    let gram = c.matmul(&c.adjoint());
    let eig = hermitian_eigs(&gram).expect("Gram matrices are Hermitian");

    let mut components: Vec<(f64, Vec<Complex64>, Vec<Complex64>)> = (0..dim_a)
        .rev()
        .map(|k| {
            let u = eig.eigenvector(k);
            let w: Vec<Complex64> = (0..dim_b)
                .map(|b| (0..dim_a).map(|a| u[a].conj() * c[(a, b)]).sum())
                .collect();
            (vector_norm(&w), u, w)
        })
        .collect();
    components.sort_by(|x, y| y.0.total_cmp(&x.0));
    components.truncate(dim_a.min(dim_b));

    let coefficients: Vec<f64> = components.iter().map(|c| c.0).collect();
    let rank = coefficients.iter().filter(|&&s| s > tolerance::RANK).count();
    let mut left_vectors = Vec::with_capacity(rank);
    let mut right_vectors = Vec::with_capacity(rank);
    for (s, u, w) in components.into_iter().take(rank) {
        left_vectors.push(u);
        right_vectors.push(w.into_iter().map(|z| z / s).collect());
    }
    SchmidtDecomposition {
        coefficients,
        left_vectors,
        right_vectors,
        rank,
        dim_a,
        dim_b,
    }
}

/// Schmidt rank of `v` across `cut`.
pub fn schmidt_rank(v: &PureVector, cut: &Cut) -> Result<usize> {
    Ok(schmidt_decompose(v, cut)?.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::DimensionVector;

    fn bell(s: f64) -> PureVector {
        PureVector::from_terms(
            DimensionVector::bipartite(2).unwrap(),
            &[(1.0, &[0, 0]), (s, &[1, 1])],
        )
        .unwrap()
    }

    #[test]
    fn product_state_rank_one() {
        let v = PureVector::basis(DimensionVector::bipartite(2).unwrap(), &[0, 0]).unwrap();
        let s = schmidt_decompose(&v, &Cut::standard()).unwrap();
        assert_eq!(s.rank, 1);
        assert!((s.coefficients[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn phi_plus_rank_two() {
        let s = schmidt_decompose(&bell(1.0), &Cut::standard()).unwrap();
        assert_eq!(s.rank, 2);
        for c in &s.coefficients {
            assert!((c - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
        }
        let rec = s.reconstruct();
        for (a, b) in rec.iter().zip(bell(1.0).amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn k1_psi_rank_two() {
        // (|10> - |11> - 2|01>)/sqrt(6): coefficient matrix [[0, -2], [1, -1]]/sqrt(6),
        // singular values squared (3 ± sqrt 5)/6.
        let v = PureVector::from_terms(
            DimensionVector::bipartite(2).unwrap(),
            &[(1.0, &[1, 0]), (-1.0, &[1, 1]), (-2.0, &[0, 1])],
        )
        .unwrap();
        let s = schmidt_decompose(&v, &Cut::standard()).unwrap();
        assert_eq!(s.rank, 2);
        let expected = [((3.0 + 5f64.sqrt()) / 6.0).sqrt(), ((3.0 - 5f64.sqrt()) / 6.0).sqrt()];
        for (c, e) in s.coefficients.iter().zip(expected) {
            assert!((c - e).abs() < 1e-12);
        }
    }

    #[test]
    fn rectangular_and_multipartite_cut() {
        // |0>|Phi+> on [2,2,2] is a product across 1|23, rank 2 across 2|13.
        let d = DimensionVector::new(vec![2, 2, 2]).unwrap();
        let v = PureVector::from_terms(d, &[(1.0, &[0, 0, 0]), (1.0, &[0, 1, 1])]).unwrap();
        assert_eq!(schmidt_rank(&v, &Cut::new(&[0], 3).unwrap()).unwrap(), 1);
        assert_eq!(schmidt_rank(&v, &Cut::new(&[1], 3).unwrap()).unwrap(), 2);
        let s = schmidt_decompose(&v, &Cut::new(&[1], 3).unwrap()).unwrap();
        assert_eq!(s.coefficients.len(), 2);
        assert_eq!((s.dim_a, s.dim_b), (2, 4));
    }
}

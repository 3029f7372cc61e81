//! Seeded random ensembles used by the claim suite, the witness search and tests.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::states::DensityMatrix;
use crate::tensor::{inner, vector_norm, ComplexMatrix, DimensionVector, PureVector};

pub type SeededRng = ChaCha8Rng;

/// Deterministic generator for a `(seed, stream)` pair.
pub fn rng(seed: u64, stream: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| gaussian_complex(rng)).collect()
}

/// Haar-random pure state.
pub fn pure_state<R: Rng + ?Sized>(rng: &mut R, dims: &DimensionVector) -> PureVector {
    loop {
        let v = gaussian_vector(rng, dims.total());
        if let Ok(p) = PureVector::normalized(dims.clone(), v) {
            return p;
        }
    }
}

/// Ginibre-ensemble density matrix `G G^dagger / Tr(G G^dagger)` of the given rank.
pub fn density_matrix<R: Rng + ?Sized>(rng: &mut R, dims: &DimensionVector, rank: usize) -> DensityMatrix {
    let n = dims.total();
    let rank = rank.clamp(1, n);
    let g = ComplexMatrix::from_vec(n, rank, gaussian_vector(rng, n * rank)).expect("shape");
    let m = g.matmul(&g.adjoint());
    let tr = m.trace().re;
    DensityMatrix::new(dims.clone(), m.scale(1.0 / tr)).expect("Ginibre matrices are states")
}

/// Traceless Hermitian matrix with unit Frobenius norm.
pub fn traceless_direction<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_vec(n, n, gaussian_vector(rng, n * n)).expect("shape");
    let mut h = (&g + &g.adjoint()).scale(0.5);
    let mean = h.trace().re / n as f64;
    for i in 0..n {
        h[(i, i)] -= Complex64::new(mean, 0.0);
    }
    let norm = h.frobenius_norm();
    h.scale(1.0 / norm)
}

/// `columns` orthonormal vectors of length `n` from Gram–Schmidt (QR) of a
/// Gaussian matrix.
pub fn isometry<R: Rng + ?Sized>(rng: &mut R, n: usize, columns: usize) -> Vec<Vec<Complex64>> {
    assert!(columns <= n);
    let mut out: Vec<Vec<Complex64>> = Vec::with_capacity(columns);
    while out.len() < columns {
        let mut v = gaussian_vector(rng, n);
        for q in &out {
            let p = inner(q, &v);
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= p * qi;
            }
        }
        let norm = vector_norm(&v);
        if norm > 1e-8 {
            out.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    out
}

/// Convex mixture of `terms` random product states across the standard cut.
pub fn separable_state<R: Rng + ?Sized>(rng: &mut R, dims: &DimensionVector, terms: usize) -> DensityMatrix {
    let n = dims.total();
    let mut m = ComplexMatrix::zeros(n, n);
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    let parts: Vec<DimensionVector> = dims
        .as_slice()
        .iter()
        .map(|&d| DimensionVector::new(vec![d]).expect("d >= 2"))
        .collect();
    for w in weights {
        let mut v = pure_state(rng, &parts[0]);
        for p in &parts[1..] {
            v = v.tensor(&pure_state(rng, p));
        }
        m = &m + &v.projector().scale(w);
    }
    DensityMatrix::new(dims.clone(), m).expect("mixture of product states")
}

use super::dims::{Cut, DimensionVector};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Kronecker product `a ⊗ b`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// Transposes the row and column digits of every subsystem on `cut.side_b`.
///
/// The result is an exact permutation of the entries of `m`, so applying it
/// twice returns `m` bit for bit.
pub fn partial_transpose(
    m: &ComplexMatrix,
    dims: &DimensionVector,
    cut: &Cut,
) -> Result<ComplexMatrix> {
    let total = dims.total();
    if m.rows() != total || m.cols() != total {
        return Err(Error::DimensionMismatch {
            expected: total,
            got: if m.rows() != total { m.rows() } else { m.cols() },
        });
    }
    cut.check(dims)?;
    Ok(transpose_subsystems(m, dims, cut.side_b()))
}

pub(crate) fn transpose_subsystems(
    m: &ComplexMatrix,
    dims: &DimensionVector,
    subsystems: &[usize],
) -> ComplexMatrix {
    let total = dims.total();
    let strides = dims.strides();
    let d = dims.as_slice();
    let mut out = ComplexMatrix::zeros(total, total);
    for r in 0..total {
        for c in 0..total {
            let (mut r2, mut c2) = (r, c);
            for &s in subsystems {
                let rs = (r / strides[s]) % d[s];
                let cs = (c / strides[s]) % d[s];
                r2 = r2 - rs * strides[s] + cs * strides[s];
                c2 = c2 - cs * strides[s] + rs * strides[s];
            }
            out[(r2, c2)] = m[(r, c)];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn phi_plus_projector() -> ComplexMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [s, 0.0, 0.0, s].map(|x| Complex64::new(x, 0.0));
        ComplexMatrix::outer(&v, &v)
    }

    #[test]
    fn phi_plus_partial_transpose_explicit() {
        let dims = DimensionVector::bipartite(2).unwrap();
        let pt = partial_transpose(&phi_plus_projector(), &dims, &Cut::standard()).unwrap();
        let mut expected = ComplexMatrix::zeros(4, 4);
        for (i, j) in [(0, 0), (3, 3), (1, 2), (2, 1)] {
            expected[(i, j)] = Complex64::new(0.5, 0.0);
        }
        assert!(pt.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn involution_is_bit_exact() {
        let dims = DimensionVector::new(vec![2, 3, 2]).unwrap();
        let n = dims.total();
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = Complex64::new((i * 7 + j) as f64 * 0.1, (i as f64 - j as f64) / 3.0);
            }
        }
        for cut in Cut::all_bipartitions(3) {
            let once = partial_transpose(&m, &dims, &cut).unwrap();
            assert_eq!(partial_transpose(&once, &dims, &cut).unwrap(), m);
            // Transposing side A equals the full transpose of transposing side B.
            let other = partial_transpose(&m, &dims, &cut.complement()).unwrap();
            assert_eq!(other, once.transpose());
        }
    }

    #[test]
    fn rejects_wrong_shape() {
        let dims = DimensionVector::bipartite(2).unwrap();
        assert!(partial_transpose(&ComplexMatrix::identity(3), &dims, &Cut::standard()).is_err());
        let cut3 = Cut::new(&[0], 3).unwrap();
        assert!(partial_transpose(&ComplexMatrix::identity(4), &dims, &cut3).is_err());
    }
}

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::states::DensityMatrix;
use crate::tensor::{hermitian_eigs, Cut};
use crate::tolerance;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PptCheck {
    pub cut: Cut,
    pub is_ppt: bool,
    pub min_eigenvalue: f64,
}

/// Smallest eigenvalue of the partial transpose across `cut`.
pub fn ppt_check(rho: &DensityMatrix, cut: &Cut) -> Result<PptCheck> {
    let pt = rho.partial_transpose(cut)?;
    let min = hermitian_eigs(&pt)?.min_eigenvalue();
    Ok(PptCheck {
        cut: cut.clone(),
        is_ppt: min >= -tolerance::PSD,
        min_eigenvalue: min,
    })
}

/// [`ppt_check`] on each of the `2^(m-1) - 1` bipartitions of `m` subsystems.
pub fn ppt_all_cuts(rho: &DensityMatrix) -> Result<Vec<PptCheck>> {
    Cut::all_bipartitions(rho.dims().len())
        .iter()
        .map(|cut| ppt_check(rho, cut))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::*;
    use crate::tensor::DimensionVector;

    #[test]
    fn maximally_mixed_is_ppt() {
        for dims in [vec![2, 2], vec![2, 3], vec![2, 2, 2]] {
            let d = DimensionVector::new(dims).unwrap();
            for check in ppt_all_cuts(&maximally_mixed(&d)).unwrap() {
                assert!(check.is_ppt);
                assert!((check.min_eigenvalue - 1.0 / d.total() as f64).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn bell_werner_two_qubits_npt() {
        let phi = DensityMatrix::from_pure(&bell_state(BellState::PhiPlus, 2).unwrap());
        let rho = werner_type(&phi, WernerParams::new(0.4).unwrap());
        let check = ppt_check(&rho, &Cut::standard()).unwrap();
        assert!(!check.is_ppt);
        assert!((check.min_eigenvalue + 0.05).abs() < 1e-14);
    }

    #[test]
    fn sigma_phi_is_ppt() {
        for k in 1..=3 {
            let s = sigma_phi(&SchmidtSpec::uniform(k).unwrap(), 3).unwrap();
            assert!(ppt_check(&s, &Cut::standard()).unwrap().is_ppt);
        }
    }

    #[test]
    fn complementary_cut_same_spectrum() {
        let rho = perturbed_k1(3, 0.3).unwrap();
        let a = ppt_check(&rho, &Cut::standard()).unwrap();
        let b = ppt_check(&rho, &Cut::standard().complement()).unwrap();
        assert_eq!(a.is_ppt, b.is_ppt);
        assert!((a.min_eigenvalue - b.min_eigenvalue).abs() < 1e-14);
    }

    #[test]
    fn rho_tilde_npt_on_first_cut() {
        let rho = multipartite_rho_tilde(0.1).unwrap();
        let checks = ppt_all_cuts(&rho).unwrap();
        assert_eq!(checks.len(), 3);
        assert_eq!(checks[0].cut.to_string(), "1|23");
        assert!(!checks[0].is_ppt);
    }
}

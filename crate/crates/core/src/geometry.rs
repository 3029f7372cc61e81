//! Hilbert–Schmidt metric, ball radii and ball/eigenvalue separability
//! certificates.
//!
//! Every predicate here is a sufficient condition: `true` is a certificate,
//! `false` means "inconclusive".

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::{maximally_mixed, DensityMatrix};
use crate::tolerance;

/// `sqrt(Tr((a - b)^2))`.
pub fn hs_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch {
            expected: a.total_dim(),
            got: b.total_dim(),
        });
    }
    Ok((a.matrix() - b.matrix()).frobenius_norm())
}

/// Distance from `I / D`.
pub fn radius_from_center(rho: &DensityMatrix) -> f64 {
    hs_distance(rho, &maximally_mixed(rho.dims())).expect("same dims")
}

/// `1 / sqrt(D (D - 1))`: the largest separable ball radius for two parties
/// and the largest PPT ball radius for any number of parties.
pub fn lsb_radius(total_dim: usize) -> f64 {
    let d = total_dim as f64;
    1.0 / (d * (d - 1.0)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallVerdict {
    pub radius_from_center: f64,
    /// Radius within `lsb_radius(D)`; a separability certificate only for
    /// two-party dims.
    pub inside_lsb: bool,
    /// Radius within the largest PPT (and undistillable) ball; holds for any
    /// partition of the same total dimension.
    pub inside_largest_ppt_ball: bool,
}

/// Radius and ball membership, boundary included.
pub fn ball_verdict(rho: &DensityMatrix) -> BallVerdict {
    let r = radius_from_center(rho);
    let inside = r <= lsb_radius(rho.total_dim()) + tolerance::BALL_SLACK;
    BallVerdict {
        radius_from_center: r,
        inside_lsb: inside,
        inside_largest_ppt_ball: inside,
    }
}

/// Minimum-eigenvalue criterion: a two-party state whose smallest eigenvalue
/// is at least `1/(D+2)` is separable.
pub fn vidal_separability_sufficient(rho: &DensityMatrix) -> Result<bool> {
    if !rho.dims().is_bipartite() {
        return Err(Error::BipartiteOnly(rho.dims().len()));
    }
    let d = rho.total_dim() as f64;
    Ok(rho.min_eigenvalue() >= 1.0 / (d + 2.0) - tolerance::BALL_SLACK)
}

/// Ball criterion: radius at most `1/sqrt(D(D-1))` certifies separability for
/// two parties and PPT across every cut for more parties.
pub fn gurvits_ball_separability_sufficient(rho: &DensityMatrix) -> bool {
    ball_verdict(rho).inside_lsb
}

/// Distance of the nearest entangled Werner-type state against the ball radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub total_dim: usize,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "R_lsb")]
    pub r_lsb: f64,
    pub ratio: f64,
}

/// `R = (2/(D+2)) sqrt((D-1)/D)`, `R_lsb`, and their ratio.
pub fn werner_gap_report(total_dim: usize) -> GapReport {
    let d = total_dim as f64;
    let r = 2.0 / (d + 2.0) * ((d - 1.0) / d).sqrt();
    let r_lsb = lsb_radius(total_dim);
    GapReport {
        total_dim,
        r,
        r_lsb,
        ratio: r / r_lsb,
    }
}

/// `2 (D - 1) / (D + 2)` in lowest terms.
pub fn gap_ratio_exact(total_dim: usize) -> Ratio<u64> {
    let d = total_dim as u64;
    Ratio::new(2 * (d - 1), d + 2)
}

/// Werner weight below which every `x rho + (1-x) I/D` lies in the ball: `1/(D-1)`.
pub fn ball_threshold_exact(total_dim: usize) -> Ratio<u64> {
    Ratio::new(1, total_dim as u64 - 1)
}

/// Werner weight up to which the minimum-eigenvalue criterion certifies
/// separability for every `rho`, and beyond which Bell-state mixtures are NPT: `2/(D+2)`.
pub fn npt_threshold_exact(total_dim: usize) -> Ratio<u64> {
    Ratio::new(2, total_dim as u64 + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::*;
    use crate::tensor::{ComplexMatrix, DimensionVector, PureVector};

    #[test]
    fn distance_to_self_is_zero() {
        let rho = perturbed_k1(3, 0.2).unwrap();
        assert_eq!(hs_distance(&rho, &rho).unwrap(), 0.0);
    }

    #[test]
    fn distance_two_qubit_complement() {
        let d = DimensionVector::bipartite(2).unwrap();
        let third = 1.0 / 3.0;
        let s = DensityMatrix::new(
            d.clone(),
            ComplexMatrix::from_real_diagonal(&[0.0, third, third, third]),
        )
        .unwrap();
        // 1/16 + 3 (1/12)^2 = 1/12.
        let dist = hs_distance(&maximally_mixed(&d), &s).unwrap();
        assert!((dist - 1.0 / 12f64.sqrt()).abs() < 1e-15);
        assert!((dist - lsb_radius(4)).abs() < 1e-15);
    }

    #[test]
    fn distance_dimension_mismatch() {
        let a = maximally_mixed(&DimensionVector::bipartite(2).unwrap());
        let b = maximally_mixed(&DimensionVector::new(vec![4]).unwrap());
        assert!(hs_distance(&a, &b).is_err());
    }

    #[test]
    fn radius_values() {
        assert!((lsb_radius(4) - 0.288_675_134_594_812_9).abs() < 1e-15);
        assert!((lsb_radius(8) - 1.0 / 56f64.sqrt()).abs() < 1e-16);
    }

    #[test]
    fn ball_verdicts() {
        let d = DimensionVector::bipartite(3).unwrap();
        let v = ball_verdict(&maximally_mixed(&d));
        assert_eq!(v.radius_from_center, 0.0);
        assert!(v.inside_lsb && v.inside_largest_ppt_ball);

        // Pure-state Werner mixture at x = 1/(D-1) sits on the surface.
        let pure = DensityMatrix::from_pure(&PureVector::basis(d.clone(), &[1, 2]).unwrap());
        let w = werner_type(&pure, WernerParams::new(1.0 / 8.0).unwrap());
        let v = ball_verdict(&w);
        assert!((v.radius_from_center - lsb_radius(9)).abs() < 1e-15);
        assert!(v.inside_lsb);
    }

    #[test]
    fn vidal_certificates() {
        let d = DimensionVector::bipartite(2).unwrap();
        assert!(vidal_separability_sufficient(&maximally_mixed(&d)).unwrap());
        let phi = DensityMatrix::from_pure(&bell_state(BellState::PhiPlus, 2).unwrap());
        let at = werner_type(&phi, WernerParams::new(1.0 / 3.0).unwrap());
        assert!(vidal_separability_sufficient(&at).unwrap());
        let above = werner_type(&phi, WernerParams::new(1.0 / 3.0 + 0.01).unwrap());
        assert!(!vidal_separability_sufficient(&above).unwrap());
        assert!(!gurvits_ball_separability_sufficient(&above));
        let three = maximally_mixed(&DimensionVector::new(vec![2, 2, 2]).unwrap());
        assert!(matches!(vidal_separability_sufficient(&three), Err(Error::BipartiteOnly(3))));
    }

    #[test]
    fn gap_report_values() {
        let g4 = werner_gap_report(4);
        assert!((g4.ratio - 1.0).abs() < 1e-15);
        assert_eq!(gap_ratio_exact(4), Ratio::from_integer(1));
        assert_eq!(gap_ratio_exact(9), Ratio::new(16, 11));
        assert!((werner_gap_report(9).ratio - 16.0 / 11.0).abs() < 1e-14);
        assert!((werner_gap_report(1_000_000).ratio - 2.0).abs() < 1e-5);
    }

    #[test]
    fn thresholds_coincide_in_two_qubits() {
        assert_eq!(ball_threshold_exact(4), npt_threshold_exact(4));
        assert_eq!(npt_threshold_exact(4), Ratio::new(1, 3));
        assert!(ball_threshold_exact(9) < npt_threshold_exact(9));
    }
}

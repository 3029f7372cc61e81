//! Radial scans `rho_t = t sigma + (1 - t) I/D` classified by certificates only.

use serde::{Deserialize, Serialize};

use crate::distillability::ppt_all_cuts;
use crate::error::{Error, Result};
use crate::geometry::{ball_verdict, radius_from_center, vidal_separability_sufficient};
use crate::states::{werner_type, DensityMatrix, WernerParams};

pub const DEFAULT_RESOLUTION: f64 = 1e-9;
/// Grid intervals examined before bisection.
pub const GRID_INTERVALS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ScanClass {
    SeparableCertified,
    /// Multipartite states inside the PPT ball.
    PptBallCertified,
    Npt,
    /// No certificate fires.
    Unknown,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanSample {
    pub t: f64,
    pub radius: f64,
    pub class: ScanClass,
}

/// A class change bracketed in `[t_low, t_high]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Transition {
    pub from: ScanClass,
    pub to: ScanClass,
    pub t_low: f64,
    pub t_high: f64,
    pub radius_low: f64,
    pub radius_high: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanResult {
    pub direction: String,
    pub dims: Vec<usize>,
    pub resolution: f64,
    pub samples: Vec<ScanSample>,
    pub transitions: Vec<Transition>,
}

pub fn classify_point(rho: &DensityMatrix) -> Result<ScanClass> {
    let bipartite = rho.dims().is_bipartite();
    let in_ball = ball_verdict(rho).inside_largest_ppt_ball;
    if bipartite && (in_ball || vidal_separability_sufficient(rho)?) {
        return Ok(ScanClass::SeparableCertified);
    }
    if in_ball {
        return Ok(ScanClass::PptBallCertified);
    }
    if ppt_all_cuts(rho)?.iter().any(|c| !c.is_ppt) {
        return Ok(ScanClass::Npt);
    }
    Ok(ScanClass::Unknown)
}

pub fn radial_scan(direction: &DensityMatrix, label: &str, resolution: f64) -> Result<ScanResult> {
    if !(resolution > 0.0 && resolution < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "resolution must lie in (0, 1), got {resolution}"
        )));
    }
    let point = |t: f64| -> Result<(f64, ScanClass)> {
        let rho = werner_type(direction, WernerParams::new(t)?);
        Ok((radius_from_center(&rho), classify_point(&rho)?))
    };

    let mut samples = Vec::with_capacity(GRID_INTERVALS + 1);
    for i in 0..=GRID_INTERVALS {
        let t = i as f64 / GRID_INTERVALS as f64;
        let (radius, class) = point(t)?;
        samples.push(ScanSample { t, radius, class });
    }

    // Bisect every class change inside each grid cell at a finer step, then
    // merge changes whose combined bracket still fits the resolution (the
    // certificate tolerances leave slivers far thinner than that).
    let step = resolution / 4.0;
    let mut raw: Vec<Transition> = Vec::new();
    for pair in samples.windows(2) {
        let hi = &pair[1];
        let (mut t_lo, mut r_lo, mut from) = (pair[0].t, pair[0].radius, pair[0].class);
        while from != hi.class {
            let (mut t_hi, mut r_hi, mut to) = (hi.t, hi.radius, hi.class);
            while t_hi - t_lo > step {
                let mid = 0.5 * (t_lo + t_hi);
                let (r, c) = point(mid)?;
                if c == from {
                    t_lo = mid;
                    r_lo = r;
                } else {
                    t_hi = mid;
                    r_hi = r;
                    to = c;
                }
            }
            raw.push(Transition {
                from,
                to,
                t_low: t_lo,
                t_high: t_hi,
                radius_low: r_lo,
                radius_high: r_hi,
            });
            (t_lo, r_lo, from) = (t_hi, r_hi, to);
        }
    }
    let mut transitions: Vec<Transition> = Vec::new();
    for t in raw {
        match transitions.last_mut() {
            Some(prev) if prev.to == t.from && t.t_high - prev.t_low <= resolution => {
                prev.to = t.to;
                prev.t_high = t.t_high;
                prev.radius_high = t.radius_high;
                if prev.from == prev.to {
                    transitions.pop();
                }
            }
            _ => transitions.push(t),
        }
    }

    Ok(ScanResult {
        direction: label.to_string(),
        dims: direction.dims().as_slice().to_vec(),
        resolution,
        samples,
        transitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, maximally_mixed, BellState};
    use crate::tensor::DimensionVector;

    fn bell(d: usize) -> DensityMatrix {
        DensityMatrix::from_pure(&bell_state(BellState::PhiPlus, d).unwrap())
    }

    #[test]
    fn two_qubit_bell_ray_has_one_transition_at_one_third() {
        let scan = radial_scan(&bell(2), "phi+", DEFAULT_RESOLUTION).unwrap();
        assert_eq!(scan.transitions.len(), 1);
        let tr = &scan.transitions[0];
        assert_eq!((tr.from, tr.to), (ScanClass::SeparableCertified, ScanClass::Npt));
        assert!(tr.t_low <= 1.0 / 3.0 + 1e-12 && 1.0 / 3.0 <= tr.t_high + 1e-12);
        assert!(tr.t_high - tr.t_low <= DEFAULT_RESOLUTION);
        let r = (0.75f64).sqrt() / 3.0;
        assert!(tr.radius_low <= r + 1e-9 && r <= tr.radius_high + 1e-9);
    }

    #[test]
    fn qutrit_bell_ray_switches_at_two_elevenths() {
        let scan = radial_scan(&bell(3), "phi+", DEFAULT_RESOLUTION).unwrap();
        assert_eq!(scan.transitions.len(), 1);
        let tr = &scan.transitions[0];
        assert_eq!((tr.from, tr.to), (ScanClass::SeparableCertified, ScanClass::Npt));
        assert!((tr.t_low - 2.0 / 11.0).abs() <= 2e-9);
    }

    #[test]
    fn identity_direction_has_no_transitions() {
        let mm = maximally_mixed(&DimensionVector::bipartite(2).unwrap());
        let scan = radial_scan(&mm, "identity", DEFAULT_RESOLUTION).unwrap();
        assert!(scan.transitions.is_empty());
        assert!(scan.samples.iter().all(|s| s.class == ScanClass::SeparableCertified));
    }
}

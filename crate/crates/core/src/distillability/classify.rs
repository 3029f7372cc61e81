//! Merges geometric certificates, per-cut PPT verdicts and witnesses into a
//! single verdict.

use serde::{Deserialize, Serialize};

use super::ppt::{ppt_all_cuts, PptCheck};
use super::seesaw::{seesaw_witness_search, SeesawOptions};
use super::witness::{ExplicitWitness, NCopyOperator, WitnessResult};
use crate::error::{Error, Result};
use crate::geometry::{ball_verdict, lsb_radius, vidal_separability_sufficient};
use crate::states::DensityMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    SeparableCertified,
    PptAllCuts,
    NptUndetermined,
    DistillableCertified { n_copies: usize },
    Unknown,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "criterion", rename_all = "kebab-case")]
pub enum Evidence {
    /// Smallest eigenvalue at least `1/(D+2)` (two parties).
    MinEigenvalue { min_eigenvalue: f64, threshold: f64 },
    /// Hilbert–Schmidt radius within `1/sqrt(D(D-1))`.
    Ball { radius: f64, ball_radius: f64, multipartite: bool },
    PartialTranspose(PptCheck),
    Witness(WitnessResult),
    /// The search ran without finding a certified witness.
    SearchExhausted { cut: String, n_copies: usize, restarts: usize, best_value: f64 },
    /// The search was not run at this copy number.
    SearchSkipped { cut: String, n_copies: usize, reason: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub dims: Vec<usize>,
    pub cuts: Vec<PptCheck>,
    pub overall: Verdict,
    pub evidence: Vec<Evidence>,
}

impl ClassificationReport {
    pub fn witness(&self) -> Option<&WitnessResult> {
        self.evidence.iter().find_map(|e| match e {
            Evidence::Witness(w) if w.certified => Some(w),
            _ => None,
        })
    }
}

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub seed: u64,
    pub restarts: usize,
    /// Copy numbers are searched in order `1..=max_copies`.
    pub max_copies: usize,
    pub search: bool,
    pub explicit: Vec<ExplicitWitness>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            restarts: 32,
            max_copies: 2,
            search: true,
            explicit: Vec::new(),
        }
    }
}

pub fn classify(rho: &DensityMatrix, options: &ClassifyOptions) -> Result<ClassificationReport> {
    let mut evidence = Vec::new();
    let d = rho.total_dim() as f64;
    let bipartite = rho.dims().is_bipartite();

    let ball = ball_verdict(rho);
    let in_ball = ball.inside_largest_ppt_ball;
    if in_ball {
        evidence.push(Evidence::Ball {
            radius: ball.radius_from_center,
            ball_radius: lsb_radius(rho.total_dim()),
            multipartite: !bipartite,
        });
    }
    let mut separable = bipartite && in_ball;
    if bipartite && vidal_separability_sufficient(rho)? {
        evidence.push(Evidence::MinEigenvalue {
            min_eigenvalue: rho.min_eigenvalue(),
            threshold: 1.0 / (d + 2.0),
        });
        separable = true;
    }

    let cuts = ppt_all_cuts(rho)?;
    evidence.extend(cuts.iter().cloned().map(Evidence::PartialTranspose));
    let npt: Vec<&PptCheck> = cuts.iter().filter(|c| !c.is_ppt).collect();

    if !npt.is_empty() && (separable || in_ball) {
        return Err(Error::InternalInconsistency(format!(
            "state certified {} but NPT on cut {}",
            if separable { "separable" } else { "inside the PPT ball" },
            npt[0].cut
        )));
    }

    let mut overall = if npt.is_empty() {
        if separable {
            Verdict::SeparableCertified
        } else {
            Verdict::PptAllCuts
        }
    } else {
        Verdict::Unknown
    };

    'cuts: for check in &npt {
        for ex in options.explicit.iter().filter(|e| e.cut == check.cut) {
            let op = NCopyOperator::new(rho, &ex.cut, ex.n_copies)?;
            let w = WitnessResult::evaluate(&op, &ex.chi)?;
            let certified = w.certified;
            let n = w.n_copies;
            evidence.push(Evidence::Witness(w));
            if certified {
                overall = Verdict::DistillableCertified { n_copies: n };
                break 'cuts;
            }
        }
        if !options.search {
            continue;
        }
        for n in 1..=options.max_copies {
            let warm: Vec<_> = options
                .explicit
                .iter()
                .filter(|e| e.cut == check.cut && e.n_copies == 1 && n == 1)
                .map(|e| e.chi.clone())
                .collect();
            let opts = SeesawOptions {
                n_copies: n,
                restarts: options.restarts,
                seed: options.seed,
                warm_starts: warm,
                ..Default::default()
            };
            match seesaw_witness_search(rho, &check.cut, &opts) {
                Ok(report) => {
                    let best = report.best;
                    if best.certified {
                        evidence.push(Evidence::Witness(best));
                        overall = Verdict::DistillableCertified { n_copies: n };
                        break 'cuts;
                    }
                    evidence.push(Evidence::SearchExhausted {
                        cut: check.cut.to_string(),
                        n_copies: n,
                        restarts: report.restarts.len(),
                        best_value: best.value,
                    });
                    overall = Verdict::NptUndetermined;
                }
                Err(Error::DimensionGuard { dim, guard }) => {
                    evidence.push(Evidence::SearchSkipped {
                        cut: check.cut.to_string(),
                        n_copies: n,
                        reason: format!("n-copy dimension {dim} exceeds {guard}"),
                    });
                    break;
                }
                Err(e) => return Err(e),
            }
        }
    }

    if matches!(overall, Verdict::DistillableCertified { .. }) && separable {
        return Err(Error::InternalInconsistency(
            "state certified both separable and distillable".into(),
        ));
    }

    Ok(ClassificationReport {
        dims: rho.dims().as_slice().to_vec(),
        cuts,
        overall,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distillability::explicit_witnesses;
    use crate::states::*;
    use crate::tensor::DimensionVector;

    #[test]
    fn maximally_mixed_separable() {
        let r = classify(
            &maximally_mixed(&DimensionVector::bipartite(3).unwrap()),
            &ClassifyOptions::default(),
        )
        .unwrap();
        assert_eq!(r.overall, Verdict::SeparableCertified);
    }

    #[test]
    fn multipartite_ball_is_ppt_not_separable() {
        let r = classify(&multipartite_sigma_tilde(), &ClassifyOptions::default()).unwrap();
        assert_eq!(r.overall, Verdict::PptAllCuts);
    }

    #[test]
    fn k2_construction_via_explicit_witness() {
        let fam = Family::PerturbedSinglet { d: 3, etas: vec![1.0, 1.0], epsilon: 0.1 };
        let opts = ClassifyOptions {
            explicit: explicit_witnesses(&fam).unwrap(),
            search: false,
            ..Default::default()
        };
        let r = classify(&fam.build().unwrap(), &opts).unwrap();
        assert_eq!(r.overall, Verdict::DistillableCertified { n_copies: 1 });
        assert!((r.witness().unwrap().value + 0.05).abs() < 1e-14);
    }

    #[test]
    fn search_disabled_leaves_unknown() {
        let rho = perturbed_k1(3, 0.1).unwrap();
        let opts = ClassifyOptions { search: false, ..Default::default() };
        assert_eq!(classify(&rho, &opts).unwrap().overall, Verdict::Unknown);
    }

    #[test]
    fn multipartite_rho_tilde_distillable_across_first_cut() {
        let fam = Family::MultipartiteRhoTilde { epsilon: 0.1 };
        let opts = ClassifyOptions {
            explicit: explicit_witnesses(&fam).unwrap(),
            search: false,
            ..Default::default()
        };
        let r = classify(&fam.build().unwrap(), &opts).unwrap();
        assert_eq!(r.overall, Verdict::DistillableCertified { n_copies: 1 });
        assert_eq!(r.witness().unwrap().cut.to_string(), "1|23");
    }
}

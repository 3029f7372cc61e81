//! n-copy partial transposes and Schmidt-rank-two witness evaluation.
//!
//! A state is certified distillable across a cut when some vector `chi` of
//! Schmidt rank at most two (between all A copies and all B copies) has
//! `<chi| (rho^PT)^{⊗n} |chi> < 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::{
    bell_state, cut_1_23_relabeling, BellState, ChiWitness, DensityMatrix, Family,
    SchmidtSpec,
};
use crate::tensor::{
    partial_transpose, schmidt_decompose, ComplexMatrix, Cut, DimensionVector, PureVector,
    Regrouping,
};
use crate::tolerance;

/// `(rho^PT)^{⊗n}` and `rho^{⊗n}` with all A factors first, as a
/// `d_A^n ⊗ d_B^n` operator.
#[derive(Debug, Clone)]
pub struct NCopyOperator {
    pub cut: Cut,
    pub n_copies: usize,
    /// `[d_A^n, d_B^n]`.
    pub joint_dims: DimensionVector,
    pub pt_power: ComplexMatrix,
    pub state_power: ComplexMatrix,
    merge: Regrouping,
}

impl NCopyOperator {
    pub fn new(rho: &DensityMatrix, cut: &Cut, n_copies: usize) -> Result<Self> {
        if n_copies == 0 {
            return Err(Error::InvalidParameter("at least one copy required".into()));
        }
        cut.check(rho.dims())?;
        let joint = rho
            .total_dim()
            .checked_pow(n_copies as u32)
            .filter(|&j| j <= tolerance::NCOPY_DIMENSION_GUARD)
            .ok_or(Error::DimensionGuard {
                dim: rho.total_dim().saturating_pow(n_copies as u32),
                guard: tolerance::NCOPY_DIMENSION_GUARD,
            })?;

        let merge = Regrouping::new(rho.dims(), &[cut.side_a().to_vec(), cut.side_b().to_vec()])?;
        let bip = rho.regroup(&merge)?;
        let pt = partial_transpose(bip.matrix(), bip.dims(), &Cut::standard())?;

        let (da, db) = (bip.dims().as_slice()[0], bip.dims().as_slice()[1]);
        let (mut pt_power, mut state_power) = (pt.clone(), bip.matrix().clone());
        for _ in 1..n_copies {
            pt_power = pt_power.kron(&pt);
            state_power = state_power.kron(bip.matrix());
        }
        let copies = bip.dims().repeated(n_copies);
        let grouping = vec![
            (0..n_copies).map(|c| 2 * c).collect::<Vec<_>>(),
            (0..n_copies).map(|c| 2 * c + 1).collect::<Vec<_>>(),
        ];
        let regroup = Regrouping::new(&copies, &grouping)?;
        let joint_dims = regroup.target().clone();
        debug_assert_eq!(joint_dims.total(), joint);
        debug_assert_eq!(joint_dims.as_slice(), &[da.pow(n_copies as u32), db.pow(n_copies as u32)]);
        Ok(Self {
            cut: cut.clone(),
            n_copies,
            joint_dims,
            pt_power: regroup.apply_matrix(&pt_power)?,
            state_power: regroup.apply_matrix(&state_power)?,
            merge,
        })
    }

    pub fn dim_a(&self) -> usize {
        self.joint_dims.as_slice()[0]
    }

    pub fn dim_b(&self) -> usize {
        self.joint_dims.as_slice()[1]
    }

    /// Brings `chi` onto the joint `[d_A^n, d_B^n]` layout. For one copy a
    /// vector on the original subsystem dims is merged across the cut.
    pub fn align(&self, chi: &PureVector) -> Result<PureVector> {
        if chi.dims() == &self.joint_dims {
            return Ok(chi.clone());
        }
        if self.n_copies == 1 && chi.dims() == self.merge.source() {
            return self.merge.apply_vector(chi);
        }
        Err(Error::DimensionMismatch {
            expected: self.joint_dims.total(),
            got: chi.dims().total(),
        })
    }

    /// `<chi| (rho^PT)^{⊗n} |chi>` as a quadratic form.
    pub fn value(&self, chi: &PureVector) -> Result<f64> {
        let chi = self.align(chi)?;
        Ok(self.pt_power.sandwich(chi.amplitudes(), chi.amplitudes()).re)
    }

    /// Same value through `Tr(rho^{⊗n} (|chi><chi|)^{T_B})`.
    pub fn value_via_transposed_projector(&self, chi: &PureVector) -> Result<f64> {
        let chi = self.align(chi)?;
        let proj_pt = partial_transpose(&chi.projector(), &self.joint_dims, &Cut::standard())?;
        // Tr(X Y) = sum_ij X_ij Y_ji.
        let n = self.joint_dims.total();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += self.state_power[(i, j)] * proj_pt[(j, i)];
            }
        }
        Ok(acc.re)
    }
}

/// A candidate witness with its expectation value and certification status.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessResult {
    #[serde(with = "chi_serde")]
    pub chi: PureVector,
    pub n_copies: usize,
    pub value: f64,
    pub reverified_value: f64,
    pub cut: Cut,
    pub schmidt_rank: usize,
    pub certified: bool,
}

impl WitnessResult {
    /// Evaluates `chi` against the operator, recomputes the value by the
    /// transposed-projector route and checks the joint Schmidt rank.
    pub fn evaluate(op: &NCopyOperator, chi: &PureVector) -> Result<Self> {
        let chi = op.align(chi)?;
        let value = op.value(&chi)?;
        let reverified_value = op.value_via_transposed_projector(&chi)?;
        if (value - reverified_value).abs() > tolerance::REVERIFY {
            return Err(Error::InternalInconsistency(format!(
                "witness value {value:e} does not re-verify ({reverified_value:e})"
            )));
        }
        let schmidt_rank = schmidt_decompose(&chi, &Cut::standard())?.rank;
        Ok(Self {
            certified: value < -tolerance::CERTIFICATION_MARGIN && schmidt_rank <= 2,
            chi,
            n_copies: op.n_copies,
            value,
            reverified_value,
            cut: op.cut.clone(),
            schmidt_rank,
        })
    }
}

/// `<chi| (rho^PT)^{⊗n} |chi>` across `cut`.
pub fn witness_value(chi: &PureVector, rho: &DensityMatrix, cut: &Cut, n_copies: usize) -> Result<f64> {
    NCopyOperator::new(rho, cut, n_copies)?.value(chi)
}

/// Smallest perturbation weight for which `chi(y)` detects the `k = 1`
/// construction: `1 / (1 + y A)` with `A = 4 (D - 1) / 9`.
pub fn k1_threshold(y: f64, total_dim: usize) -> f64 {
    let a = 4.0 * (total_dim as f64 - 1.0) / 9.0;
    1.0 / (1.0 + y * a)
}

/// Closed-form `<chi|rho_psi(epsilon,1)^PT|chi>`:
/// `-(epsilon/3)|alpha||beta| + 3 (1 - epsilon) |beta|^2 / (4 (D - 1))`.
pub fn k1_witness_closed_form(chi: &ChiWitness, epsilon: f64, total_dim: usize) -> f64 {
    let (a, b) = (chi.abs_alpha(), chi.abs_beta());
    -(epsilon / 3.0) * a * b + 3.0 * (1.0 - epsilon) * b * b / (4.0 * (total_dim as f64 - 1.0))
}

/// Ratio `y = |alpha|/|beta|` minimizing the closed-form `k = 1` witness value.
pub fn k1_optimal_ratio(epsilon: f64, total_dim: usize) -> f64 {
    let a = epsilon / 3.0;
    let c = 3.0 * (1.0 - epsilon) / (4.0 * (total_dim as f64 - 1.0));
    (c + (c * c + a * (a + c)).sqrt()) / a
}

/// A known witness for a named family, on the family's own subsystem dims.
#[derive(Debug, Clone)]
pub struct ExplicitWitness {
    pub chi: PureVector,
    pub cut: Cut,
    pub n_copies: usize,
    pub label: String,
}

/// Single-copy witnesses attached to the named families.
pub fn explicit_witnesses(family: &Family) -> Result<Vec<ExplicitWitness>> {
    let one = |chi: PureVector, label: String| ExplicitWitness {
        chi,
        cut: Cut::standard(),
        n_copies: 1,
        label,
    };
    Ok(match family {
        Family::Werner { d, bell, .. } | Family::Bell { d, bell } => {
            let partner = match bell {
                BellState::PhiPlus => BellState::PsiMinus,
                BellState::PhiMinus => BellState::PsiPlus,
                BellState::PsiPlus => BellState::PhiMinus,
                BellState::PsiMinus => BellState::PhiPlus,
            };
            vec![one(bell_state(partner, *d)?, format!("{partner:?}"))]
        }
        Family::PerturbedK1 { d, epsilon } => {
            let dims = DimensionVector::bipartite(*d)?;
            let y = k1_optimal_ratio(*epsilon, dims.total());
            let chi = ChiWitness::from_ratio(y)?;
            vec![one(chi.vector_rank_two(&dims)?, format!("chi(y={y:.6e})"))]
        }
        Family::PerturbedSinglet { d, etas, .. } if etas.len() == 2 => {
            let dims = DimensionVector::bipartite(*d)?;
            vec![one(SchmidtSpec::normalized(etas)?.phi(&dims)?, "phi".into())]
        }
        Family::MultipartiteRhoTilde { epsilon } => {
            let bar = cut_1_23_relabeling();
            let dims = bar.target().clone();
            let y = k1_optimal_ratio(*epsilon, dims.total());
            let chi_bar = ChiWitness::from_ratio(y)?.vector_rank_two(&dims)?;
            vec![ExplicitWitness {
                chi: bar.inverse().apply_vector(&chi_bar)?,
                cut: Cut::new(&[0], 3)?,
                n_copies: 1,
                label: format!("chi(y={y:.6e}) on 1|23"),
            }]
        }
        _ => Vec::new(),
    })
}

mod chi_serde {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::tensor::{DimensionVector, PureVector};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        dims: DimensionVector,
        amplitudes: Vec<[f64; 2]>,
    }

    pub fn serialize<S: Serializer>(v: &PureVector, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            dims: v.dims().clone(),
            amplitudes: v.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PureVector, D::Error> {
        let r = Repr::deserialize(d)?;
        let amps = r.amplitudes.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        PureVector::new(r.dims, amps).map_err(serde::de::Error::custom)
    }
}

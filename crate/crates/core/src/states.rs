//! Constructors for the state families around the maximally mixed state.
//!
//! Every constructor returns a validated [`DensityMatrix`] or [`PureVector`].
//! Two-level states embedded in `d`-level systems occupy levels `{0, 1}`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{
    hermitian_eigs, partial_transpose, ComplexMatrix, Cut, DimensionVector, HermitianEigen,
    PureVector, Regrouping,
};
use crate::tolerance;

/// Hermitian, positive semidefinite, trace-one operator on a tensor-product space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: DimensionVector,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates shape, Hermiticity, unit trace and positivity.
    pub fn new(dims: DimensionVector, matrix: ComplexMatrix) -> Result<Self> {
        let n = dims.total();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::InvalidState {
                invariant: "shape",
                detail: format!(
                    "matrix is {}x{}, dims {dims} require {n}x{n}",
                    matrix.rows(),
                    matrix.cols()
                ),
            });
        }
        let defect = matrix.hermiticity_defect();
        if defect > tolerance::HERMITIAN {
            return Err(Error::InvalidState {
                invariant: "hermitian",
                detail: format!("max |M - M^dagger| = {defect:e}"),
            });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tolerance::TRACE || tr.im.abs() > tolerance::TRACE {
            return Err(Error::InvalidState {
                invariant: "trace",
                detail: format!("trace is {tr}, expected 1"),
            });
        }
        let min = hermitian_eigs(&matrix)?.min_eigenvalue();
        if min < -tolerance::PSD {
            return Err(Error::InvalidState {
                invariant: "positive semidefinite",
                detail: format!("minimum eigenvalue {min:e}"),
            });
        }
        Ok(Self { dims, matrix })
    }

    pub fn from_pure(v: &PureVector) -> Self {
        Self {
            dims: v.dims().clone(),
            matrix: v.projector(),
        }
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn eigen(&self) -> HermitianEigen {
        hermitian_eigs(&self.matrix).expect("validated density matrices are Hermitian")
    }

    pub fn spectrum(&self) -> Vec<f64> {
        self.eigen().eigenvalues
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigen().min_eigenvalue()
    }

    /// Number of eigenvalues above the rank tolerance.
    pub fn rank(&self) -> usize {
        self.spectrum().iter().filter(|&&l| l > tolerance::RANK).count()
    }

    pub fn partial_transpose(&self, cut: &Cut) -> Result<ComplexMatrix> {
        partial_transpose(&self.matrix, &self.dims, cut)
    }

    /// Same operator with subsystems regrouped; entries are only permuted.
    pub fn regroup(&self, regrouping: &Regrouping) -> Result<Self> {
        if regrouping.source().total() != self.dims.total() {
            return Err(Error::DimensionMismatch {
                expected: regrouping.source().total(),
                got: self.dims.total(),
            });
        }
        Ok(Self {
            dims: regrouping.target().clone(),
            matrix: regrouping.apply_matrix(&self.matrix)?,
        })
    }
}

/// `w a + (1 - w) b` computed entrywise in a fixed order.
fn mix(w: f64, a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &a.scale(w) + &b.scale(1.0 - w)
}

/// Schmidt coefficients of `|phi> = sum_i eta_i |ii>`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchmidtSpec {
    etas: Vec<f64>,
}

impl SchmidtSpec {
    pub fn new(etas: Vec<f64>) -> Result<Self> {
        if etas.is_empty() {
            return Err(Error::InvalidParameter("at least one Schmidt coefficient required".into()));
        }
        if let Some(e) = etas.iter().find(|&&e| e.is_nan() || e <= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "Schmidt coefficients must be positive, got {e}"
            )));
        }
        let sq: f64 = etas.iter().map(|e| e * e).sum();
        if (sq - 1.0).abs() > tolerance::NORM {
            return Err(Error::InvalidParameter(format!(
                "squared Schmidt coefficients sum to {sq}, expected 1"
            )));
        }
        Ok(Self { etas })
    }

    /// Positive weights rescaled so their squares sum to one.
    pub fn normalized(weights: &[f64]) -> Result<Self> {
        let norm = weights.iter().map(|e| e * e).sum::<f64>().sqrt();
        Self::new(weights.iter().map(|e| e / norm).collect())
    }

    /// Maximally entangled coefficients `1/sqrt(k)`.
    pub fn uniform(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("Schmidt rank must be at least 1".into()));
        }
        Self::new(vec![1.0 / (k as f64).sqrt(); k])
    }

    pub fn k(&self) -> usize {
        self.etas.len()
    }

    pub fn etas(&self) -> &[f64] {
        &self.etas
    }

    /// `sum_i eta_i |ii>` on the given two-party dims.
    pub fn phi(&self, dims: &DimensionVector) -> Result<PureVector> {
        check_rank_fits(self.k(), dims)?;
        let terms: Vec<(f64, [usize; 2])> =
            self.etas.iter().enumerate().map(|(i, &e)| (e, [i, i])).collect();
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dims.total()];
        for (e, digits) in terms {
            amplitudes[dims.compose(&digits)] = Complex64::new(e, 0.0);
        }
        PureVector::new(dims.clone(), amplitudes)
    }
}

fn check_rank_fits(k: usize, dims: &DimensionVector) -> Result<()> {
    if !dims.is_bipartite() {
        return Err(Error::BipartiteOnly(dims.len()));
    }
    let d = dims.as_slice();
    if k > d[0].min(d[1]) {
        return Err(Error::InvalidParameter(format!(
            "Schmidt rank {k} exceeds local dimension of {dims}"
        )));
    }
    Ok(())
}

/// Mixing weight `x` of a Werner-type state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WernerParams {
    x: f64,
}

impl WernerParams {
    pub fn new(x: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::InvalidParameter(format!("x = {x} outside [0, 1]")));
        }
        Ok(Self { x })
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// Perturbation weight `epsilon` in `(0, 1)` and the Schmidt rank `k` of `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbationParams {
    epsilon: f64,
    k: usize,
}

impl PerturbationParams {
    pub fn new(epsilon: f64, k: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidParameter(format!("epsilon = {epsilon} outside (0, 1)")));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        Ok(Self { epsilon, k })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// `I / D`.
pub fn maximally_mixed(dims: &DimensionVector) -> DensityMatrix {
    let n = dims.total();
    DensityMatrix {
        dims: dims.clone(),
        matrix: ComplexMatrix::identity(n).scale(1.0 / n as f64),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi+" | "phi-plus" => Ok(Self::PhiPlus),
            "phi-" | "phi-minus" => Ok(Self::PhiMinus),
            "psi+" | "psi-plus" => Ok(Self::PsiPlus),
            "psi-" | "psi-minus" | "singlet" => Ok(Self::PsiMinus),
            _ => Err(Error::InvalidParameter(format!("unknown Bell state '{s}'"))),
        }
    }
}

/// Bell state on levels `{0, 1}` of each side of `dims` (two parties).
pub fn bell_state_in(which: BellState, dims: &DimensionVector) -> Result<PureVector> {
    if !dims.is_bipartite() {
        return Err(Error::BipartiteOnly(dims.len()));
    }
    let s = FRAC_1_SQRT_2;
    let ((a, b), sign) = match which {
        BellState::PhiPlus => (([0, 0], [1, 1]), 1.0),
        BellState::PhiMinus => (([0, 0], [1, 1]), -1.0),
        BellState::PsiPlus => (([0, 1], [1, 0]), 1.0),
        BellState::PsiMinus => (([0, 1], [1, 0]), -1.0),
    };
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dims.total()];
    amplitudes[dims.compose(&a)] = Complex64::new(s, 0.0);
    amplitudes[dims.compose(&b)] = Complex64::new(sign * s, 0.0);
    PureVector::new(dims.clone(), amplitudes)
}

/// Bell state embedded in `d ⊗ d`.
pub fn bell_state(which: BellState, d: usize) -> Result<PureVector> {
    bell_state_in(which, &DimensionVector::bipartite(d)?)
}

/// `x rho + (1 - x) I / D`.
pub fn werner_type(rho: &DensityMatrix, x: WernerParams) -> DensityMatrix {
    let mm = maximally_mixed(rho.dims());
    DensityMatrix {
        dims: rho.dims.clone(),
        matrix: mix(x.x(), &rho.matrix, &mm.matrix),
    }
}

/// `(I - |phi><phi|) / (D - 1)`: the maximally mixed state of the subspace
/// orthogonal to `phi`.
pub fn subspace_complement_mixed(phi: &PureVector) -> DensityMatrix {
    let n = phi.dims().total();
    let m = &ComplexMatrix::identity(n) - &phi.projector();
    DensityMatrix {
        dims: phi.dims().clone(),
        matrix: m.scale(1.0 / (n as f64 - 1.0)),
    }
}

/// `sigma_phi(k) = (I - (|phi><phi|)^PT) / (D - 1)` on two-party `dims`.
pub fn sigma_phi_in(spec: &SchmidtSpec, dims: &DimensionVector) -> Result<DensityMatrix> {
    let phi = spec.phi(dims)?;
    let n = dims.total();
    let pt = partial_transpose(&phi.projector(), dims, &Cut::standard())?;
    let m = &ComplexMatrix::identity(n) - &pt;
    Ok(DensityMatrix {
        dims: dims.clone(),
        matrix: m.scale(1.0 / (n as f64 - 1.0)),
    })
}

/// `sigma_phi(k)` on `d ⊗ d`.
pub fn sigma_phi(spec: &SchmidtSpec, d: usize) -> Result<DensityMatrix> {
    sigma_phi_in(spec, &DimensionVector::bipartite(d)?)
}

/// Eigenvector label of the closed-form `sigma_phi(k)` spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectralLabel {
    /// `|ii>`
    Diagonal(usize),
    /// `(|ij> + |ji>)/sqrt 2`, `i < j`
    Symmetric(usize, usize),
    /// `(|ij> - |ji>)/sqrt 2`, `i < j`
    Antisymmetric(usize, usize),
    /// The `D - k^2` dimensional complement of the above.
    Complement,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralTerm {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub label: SpectralLabel,
}

/// Closed-form spectral decomposition of `sigma_phi(k)` on two-party `dims`.
pub fn closed_form_spectrum_in(spec: &SchmidtSpec, dims: &DimensionVector) -> Result<Vec<SpectralTerm>> {
    check_rank_fits(spec.k(), dims)?;
    let n = dims.total();
    let scale = 1.0 / (n as f64 - 1.0);
    let eta = spec.etas();
    let k = spec.k();
    let mut terms = Vec::with_capacity(k * k + 1);
    for (i, e) in eta.iter().enumerate() {
        terms.push(SpectralTerm {
            eigenvalue: (1.0 - e * e) * scale,
            multiplicity: 1,
            label: SpectralLabel::Diagonal(i),
        });
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let p = eta[i] * eta[j];
            terms.push(SpectralTerm {
                eigenvalue: (1.0 - p) * scale,
                multiplicity: 1,
                label: SpectralLabel::Symmetric(i, j),
            });
            terms.push(SpectralTerm {
                eigenvalue: (1.0 + p) * scale,
                multiplicity: 1,
                label: SpectralLabel::Antisymmetric(i, j),
            });
        }
    }
    if n > k * k {
        terms.push(SpectralTerm {
            eigenvalue: scale,
            multiplicity: n - k * k,
            label: SpectralLabel::Complement,
        });
    }
    Ok(terms)
}

pub fn closed_form_spectrum(spec: &SchmidtSpec, d: usize) -> Result<Vec<SpectralTerm>> {
    closed_form_spectrum_in(spec, &DimensionVector::bipartite(d)?)
}

/// Closed-form eigenvalues with multiplicity, sorted ascending.
pub fn flatten_spectrum(terms: &[SpectralTerm]) -> Vec<f64> {
    let mut out: Vec<f64> = terms
        .iter()
        .flat_map(|t| std::iter::repeat_n(t.eigenvalue, t.multiplicity))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Eigenvector belonging to a spectral label (the complement has none).
pub fn spectral_vector(label: SpectralLabel, dims: &DimensionVector) -> Option<PureVector> {
    let v = match label {
        SpectralLabel::Diagonal(i) => PureVector::basis(dims.clone(), &[i, i]),
        SpectralLabel::Symmetric(i, j) => {
            PureVector::from_terms(dims.clone(), &[(1.0, &[i, j]), (1.0, &[j, i])])
        }
        SpectralLabel::Antisymmetric(i, j) => {
            PureVector::from_terms(dims.clone(), &[(1.0, &[i, j]), (-1.0, &[j, i])])
        }
        SpectralLabel::Complement => return None,
    };
    v.ok()
}

/// `(|10> - |11> - 2|01>) / sqrt 6` on two-party `dims`.
pub fn psi_k1_in(dims: &DimensionVector) -> Result<PureVector> {
    if !dims.is_bipartite() {
        return Err(Error::BipartiteOnly(dims.len()));
    }
    PureVector::from_terms(
        dims.clone(),
        &[(1.0, &[1, 0]), (-1.0, &[1, 1]), (-2.0, &[0, 1])],
    )
}

pub fn psi_k1(d: usize) -> Result<PureVector> {
    psi_k1_in(&DimensionVector::bipartite(d)?)
}

/// `|chi> = alpha |00> + (beta / 2)(|10> - |11> - |00> + |01>)` with the
/// relative phase `theta1 - theta2` pinned to `pi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChiWitness {
    abs_alpha: f64,
    abs_beta: f64,
    theta1: f64,
}

impl ChiWitness {
    pub fn new(abs_alpha: f64, abs_beta: f64, theta1: f64, theta2: f64) -> Result<Self> {
        if abs_alpha < 0.0 || abs_beta < 0.0 {
            return Err(Error::InvalidParameter("|alpha| and |beta| must be nonnegative".into()));
        }
        let gap = (theta1 - theta2 - PI).rem_euclid(2.0 * PI);
        if gap.min(2.0 * PI - gap) > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "theta1 - theta2 = {} must equal pi",
                theta1 - theta2
            )));
        }
        let norm = abs_alpha * abs_alpha + abs_beta * abs_beta + abs_alpha * abs_beta;
        if (norm - 1.0).abs() > tolerance::NORM {
            return Err(Error::InvalidState {
                invariant: "normalization",
                detail: format!("|alpha|^2 + |beta|^2 + |alpha||beta| = {norm}, expected 1"),
            });
        }
        Ok(Self {
            abs_alpha,
            abs_beta,
            theta1,
        })
    }

    /// Solves `|beta|^2 (y^2 + y + 1) = 1` for `y = |alpha| / |beta|`.
    pub fn from_ratio(y: f64) -> Result<Self> {
        if !(y >= 0.0 && y.is_finite()) {
            return Err(Error::InvalidParameter(format!("ratio y = {y} must be finite and >= 0")));
        }
        let abs_beta = 1.0 / (y * y + y + 1.0).sqrt();
        Ok(Self {
            abs_alpha: y * abs_beta,
            abs_beta,
            theta1: PI,
        })
    }

    pub fn abs_alpha(&self) -> f64 {
        self.abs_alpha
    }

    pub fn abs_beta(&self) -> f64 {
        self.abs_beta
    }

    pub fn ratio(&self) -> f64 {
        self.abs_alpha / self.abs_beta
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.abs_alpha, self.theta1)
    }

    pub fn beta(&self) -> Complex64 {
        Complex64::from_polar(self.abs_beta, self.theta1 - PI)
    }

    pub fn vector(&self, dims: &DimensionVector) -> Result<PureVector> {
        if !dims.is_bipartite() {
            return Err(Error::BipartiteOnly(dims.len()));
        }
        let (a, hb) = (self.alpha(), self.beta() * 0.5);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dims.total()];
        amplitudes[dims.compose(&[0, 0])] = a - hb;
        amplitudes[dims.compose(&[0, 1])] = hb;
        amplitudes[dims.compose(&[1, 0])] = hb;
        amplitudes[dims.compose(&[1, 1])] = -hb;
        PureVector::normalized(dims.clone(), amplitudes)
    }

    /// Like [`vector`](Self::vector) but rejects the degenerate `|beta| = 0`
    /// boundary, where `|chi>` collapses to the product state `|00>`.
    pub fn vector_rank_two(&self, dims: &DimensionVector) -> Result<PureVector> {
        let v = self.vector(dims)?;
        let rank = crate::tensor::schmidt_rank(&v, &Cut::standard())?;
        if rank != 2 {
            return Err(Error::InvalidParameter(format!(
                "witness has Schmidt rank {rank}, expected 2"
            )));
        }
        Ok(v)
    }
}

/// `epsilon |psi><psi| + (1 - epsilon) sigma_phi(k)` on the dims of `psi`.
///
/// Accepts the closed interval `[0, 1]` so the endpoints can be inspected;
/// the family proper is [`PerturbationParams`]' open interval.
pub fn perturbed_state(psi: &PureVector, spec: &SchmidtSpec, epsilon: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::InvalidParameter(format!("epsilon = {epsilon} outside [0, 1]")));
    }
    let sigma = sigma_phi_in(spec, psi.dims())?;
    Ok(DensityMatrix {
        dims: psi.dims().clone(),
        matrix: mix(epsilon, &psi.projector(), &sigma.matrix),
    })
}

/// `rho_psi(epsilon, 1)` with `psi = psi_k1` on `d ⊗ d`.
pub fn perturbed_k1(d: usize, epsilon: f64) -> Result<DensityMatrix> {
    perturbed_state(&psi_k1(d)?, &SchmidtSpec::uniform(1)?, epsilon)
}

/// Singlet `Psi-` perturbation of `sigma_phi(k)`; `k = 2` with uniform
/// coefficients is the `phi = Phi+` construction.
pub fn perturbed_singlet(d: usize, spec: &SchmidtSpec, epsilon: f64) -> Result<DensityMatrix> {
    perturbed_state(&bell_state(BellState::PsiMinus, d)?, spec, epsilon)
}

fn three_qubits() -> DimensionVector {
    DimensionVector::new(vec![2, 2, 2]).expect("valid")
}

/// `(|100> - |111> - 2|011>) / sqrt 6` on three qubits.
pub fn multipartite_psi123() -> PureVector {
    PureVector::from_terms(
        three_qubits(),
        &[(1.0, &[1, 0, 0]), (-1.0, &[1, 1, 1]), (-2.0, &[0, 1, 1])],
    )
    .expect("nonzero vector")
}

/// `(I - |000><000|) / 7`.
pub fn multipartite_sigma_tilde() -> DensityMatrix {
    subspace_complement_mixed(&PureVector::basis(three_qubits(), &[0, 0, 0]).expect("fits"))
}

/// `epsilon |psi123><psi123| + (1 - epsilon) sigma_tilde`.
pub fn multipartite_rho_tilde(epsilon: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::InvalidParameter(format!("epsilon = {epsilon} outside [0, 1]")));
    }
    let sigma = multipartite_sigma_tilde();
    Ok(DensityMatrix {
        dims: three_qubits(),
        matrix: mix(epsilon, &multipartite_psi123().projector(), &sigma.matrix),
    })
}

/// Three qubits viewed across the `1|23` cut, with qubits 2 and 3 relabeled
/// `|00> -> 0`, `|11> -> 1`, `|01> -> 2`, `|10> -> 3`.
pub fn cut_1_23_relabeling() -> Regrouping {
    let merge = Regrouping::new(&three_qubits(), &[vec![0], vec![1, 2]]).expect("valid grouping");
    let target = merge.target().clone();
    // Merged index of qubits (2,3) is 2*q2 + q3; map it to the bar labels.
    let bar = [0usize, 2, 3, 1];
    let map: Vec<usize> = (0..target.total()).map(|i| (i / 4) * 4 + bar[i % 4]).collect();
    let relabel = Regrouping::relabel(&target, &map).expect("permutation");
    merge.then(&relabel).expect("compatible")
}

/// Named state families with their parameters; used for file metadata and to
/// attach known witnesses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    MaximallyMixed { dims: Vec<usize> },
    Bell { d: usize, bell: BellState },
    Werner { d: usize, bell: BellState, x: f64 },
    SubspaceComplement { d: usize, etas: Vec<f64> },
    SigmaPhi { d: usize, etas: Vec<f64> },
    PerturbedK1 { d: usize, epsilon: f64 },
    PerturbedSinglet { d: usize, etas: Vec<f64>, epsilon: f64 },
    MultipartiteSigmaTilde,
    MultipartiteRhoTilde { epsilon: f64 },
}

impl Family {
    pub fn build(&self) -> Result<DensityMatrix> {
        match self {
            Family::MaximallyMixed { dims } => {
                Ok(maximally_mixed(&DimensionVector::new(dims.clone())?))
            }
            Family::Bell { d, bell } => Ok(DensityMatrix::from_pure(&bell_state(*bell, *d)?)),
            Family::Werner { d, bell, x } => Ok(werner_type(
                &DensityMatrix::from_pure(&bell_state(*bell, *d)?),
                WernerParams::new(*x)?,
            )),
            Family::SubspaceComplement { d, etas } => {
                let phi = SchmidtSpec::normalized(etas)?.phi(&DimensionVector::bipartite(*d)?)?;
                Ok(subspace_complement_mixed(&phi))
            }
            Family::SigmaPhi { d, etas } => sigma_phi(&SchmidtSpec::normalized(etas)?, *d),
            Family::PerturbedK1 { d, epsilon } => perturbed_k1(*d, *epsilon),
            Family::PerturbedSinglet { d, etas, epsilon } => {
                perturbed_singlet(*d, &SchmidtSpec::normalized(etas)?, *epsilon)
            }
            Family::MultipartiteSigmaTilde => Ok(multipartite_sigma_tilde()),
            Family::MultipartiteRhoTilde { epsilon } => multipartite_rho_tilde(*epsilon),
        }
    }
}

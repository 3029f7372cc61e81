//! Alternating search for Schmidt-rank-two vectors minimizing
//! `<chi| (rho^PT)^{⊗n} |chi>`.
//!
//! The iterate is a pair of two-column isometries `P_A`, `P_B`. An A step
//! minimizes over `C^{d_A^n} ⊗ span(P_B)`, i.e. over every rank-two vector
//! whose B support lies in `span(P_B)`, and replaces `P_A` with the top two
//! left Schmidt vectors of the minimizer; a B step does the mirror image.
//! Each search space contains the previous minimizer, so the objective never
//! increases.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::witness::{NCopyOperator, WitnessResult};
use crate::error::{Error, Result};
use crate::random;
use crate::states::DensityMatrix;
use crate::tensor::{decompose_coefficients, hermitian_eigs, inner, vector_norm, ComplexMatrix, Cut, PureVector};

#[derive(Debug, Clone)]
pub struct SeesawOptions {
    pub n_copies: usize,
    /// Number of random restarts; warm starts come on top.
    pub restarts: usize,
    pub seed: u64,
    pub max_iterations: usize,
    /// Stop once a full A+B iteration improves by less than this.
    pub tolerance: f64,
    /// Extra starting vectors, on the original or the joint n-copy dims.
    pub warm_starts: Vec<PureVector>,
    /// Start from the top-two Schmidt truncation of the minimal eigenvector.
    pub eigenvector_warm_start: bool,
}

impl Default for SeesawOptions {
    fn default() -> Self {
        Self {
            n_copies: 1,
            restarts: 32,
            seed: 0,
            max_iterations: 500,
            tolerance: 1e-12,
            warm_starts: Vec::new(),
            eigenvector_warm_start: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StartKind {
    MinEigenvector,
    Explicit,
    Random,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RestartSummary {
    pub index: usize,
    pub kind: StartKind,
    pub value: f64,
    pub iterations: usize,
    /// Objective after the start and after every half step.
    pub trace: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeesawReport {
    pub best: WitnessResult,
    pub best_restart: usize,
    pub restarts: Vec<RestartSummary>,
}

type Isometry = [Vec<Complex64>; 2];

/// Best witness over all restarts; ties go to the lowest restart index.
pub fn seesaw_witness_search(
    rho: &DensityMatrix,
    cut: &Cut,
    options: &SeesawOptions,
) -> Result<SeesawReport> {
    let op = NCopyOperator::new(rho, cut, options.n_copies)?;
    let (a, b) = (op.dim_a(), op.dim_b());

    let mut starts: Vec<(StartKind, Isometry, Isometry)> = Vec::new();
    if options.eigenvector_warm_start {
        let eig = hermitian_eigs(&op.pt_power)?;
        let (pa, pb) = truncate_to_isometries(&eig.eigenvector(0), a, b);
        starts.push((StartKind::MinEigenvector, pa, pb));
    }
    for chi in &options.warm_starts {
        let chi = op.align(chi)?;
        let (pa, pb) = truncate_to_isometries(chi.amplitudes(), a, b);
        starts.push((StartKind::Explicit, pa, pb));
    }
    for r in 0..options.restarts {
        let mut g = random::rng(options.seed, r as u64);
        let pa = random::isometry(&mut g, a, 2);
        let pb = random::isometry(&mut g, b, 2);
        starts.push((StartKind::Random, [pa[0].clone(), pa[1].clone()], [pb[0].clone(), pb[1].clone()]));
    }
    if starts.is_empty() {
        return Err(Error::InvalidParameter("witness search needs at least one start".into()));
    }

    let runs: Vec<(RestartSummary, Vec<Complex64>)> = starts
        .into_par_iter()
        .enumerate()
        .map(|(index, (kind, pa, pb))| {
            let (trace, iterations, best) = run(&op, pa, pb, options);
            let value = *trace.last().expect("nonempty trace");
            (
                RestartSummary {
                    index,
                    kind,
                    value,
                    iterations,
                    trace,
                },
                best,
            )
        })
        .collect();

    let best_restart = runs
        .iter()
        .enumerate()
        .min_by(|(i, x), (j, y)| x.0.value.total_cmp(&y.0.value).then(i.cmp(j)))
        .map(|(i, _)| i)
        .expect("at least one run");
    let chi = PureVector::normalized(op.joint_dims.clone(), runs[best_restart].1.clone())?;
    let best = WitnessResult::evaluate(&op, &chi)?;
    Ok(SeesawReport {
        best,
        best_restart,
        restarts: runs.into_iter().map(|r| r.0).collect(),
    })
}

fn run(
    op: &NCopyOperator,
    mut pa: Isometry,
    mut pb: Isometry,
    options: &SeesawOptions,
) -> (Vec<f64>, usize, Vec<Complex64>) {
    let (a, b) = (op.dim_a(), op.dim_b());
    let (start_value, mut best) = product_subspace_minimum(op, &pa, &pb);
    let mut trace = vec![start_value];
    let mut iterations = 0;
    while iterations < options.max_iterations {
        let before = *trace.last().expect("nonempty");

        let (value, v) = a_step(op, &pb);
        let (new_pa, _) = truncate_to_isometries(&v, a, b);
        pa = new_pa;
        trace.push(value);

        let (value, v) = b_step(op, &pa);
        let (_, new_pb) = truncate_to_isometries(&v, a, b);
        pb = new_pb;
        trace.push(value);
        best = v;

        iterations += 1;
        if before - value < options.tolerance {
            break;
        }
    }
    (trace, iterations, best)
}

/// Minimal eigenpair of `W^dagger M W` lifted back through `W`.
fn min_lifted(c: ComplexMatrix, lift: impl Fn(&[Complex64]) -> Vec<Complex64>) -> (f64, Vec<Complex64>) {
    let eig = hermitian_eigs(&c.hermitian_part()).expect("compressions are Hermitian");
    let x = eig.eigenvector(0);
    let mut v = lift(&x);
    let norm = vector_norm(&v);
    v.iter_mut().for_each(|z| *z /= norm);
    (eig.min_eigenvalue(), v)
}

fn product_subspace_minimum(op: &NCopyOperator, pa: &Isometry, pb: &Isometry) -> (f64, Vec<Complex64>) {
    let columns: Vec<Vec<Complex64>> = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| crate::tensor::kron_vec(&pa[i], &pb[j]))
        .collect();
    let w = ComplexMatrix::from_columns(&columns);
    let c = op.pt_power.compress(&w);
    min_lifted(c, |x| w.matvec(x))
}

/// Minimizes over `C^a ⊗ span(P_B)`; coordinates are indexed `(i, j)` for
/// basis vector `e_i ⊗ pb_j`.
fn a_step(op: &NCopyOperator, pb: &Isometry) -> (f64, Vec<Complex64>) {
    let (a, b) = (op.dim_a(), op.dim_b());
    let m = &op.pt_power;
    let n = a * b;
    // T = M (I ⊗ P_B), n × 2a.
    let mut t = ComplexMatrix::zeros(n, 2 * a);
    for r in 0..n {
        let row = m.row(r);
        for i in 0..a {
            for j in 0..2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for bb in 0..b {
                    acc += row[i * b + bb] * pb[j][bb];
                }
                t[(r, 2 * i + j)] = acc;
            }
        }
    }
    // C = (I ⊗ P_B)^dagger T.
    let mut c = ComplexMatrix::zeros(2 * a, 2 * a);
    for i in 0..a {
        for j in 0..2 {
            for col in 0..2 * a {
                let mut acc = Complex64::new(0.0, 0.0);
                for bb in 0..b {
                    acc += pb[j][bb].conj() * t[(i * b + bb, col)];
                }
                c[(2 * i + j, col)] = acc;
            }
        }
    }
    min_lifted(c, |x| {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..a {
            for j in 0..2 {
                let coef = x[2 * i + j];
                for bb in 0..b {
                    v[i * b + bb] += coef * pb[j][bb];
                }
            }
        }
        v
    })
}

/// Minimizes over `span(P_A) ⊗ C^b`; coordinates `(i, k)` for `pa_i ⊗ e_k`.
fn b_step(op: &NCopyOperator, pa: &Isometry) -> (f64, Vec<Complex64>) {
    let (a, b) = (op.dim_a(), op.dim_b());
    let m = &op.pt_power;
    let n = a * b;
    let mut t = ComplexMatrix::zeros(n, 2 * b);
    for r in 0..n {
        let row = m.row(r);
        for i in 0..2 {
            for k in 0..b {
                let mut acc = Complex64::new(0.0, 0.0);
                for aa in 0..a {
                    acc += row[aa * b + k] * pa[i][aa];
                }
                t[(r, i * b + k)] = acc;
            }
        }
    }
    let mut c = ComplexMatrix::zeros(2 * b, 2 * b);
    for i in 0..2 {
        for k in 0..b {
            for col in 0..2 * b {
                let mut acc = Complex64::new(0.0, 0.0);
                for aa in 0..a {
                    acc += pa[i][aa].conj() * t[(aa * b + k, col)];
                }
                c[(i * b + k, col)] = acc;
            }
        }
    }
    min_lifted(c, |x| {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..2 {
            for k in 0..b {
                let coef = x[i * b + k];
                for aa in 0..a {
                    v[aa * b + k] += coef * pa[i][aa];
                }
            }
        }
        v
    })
}

/// Top-two Schmidt vectors of `v` on each side, completed to two
/// orthonormal columns when the rank is below two.
fn truncate_to_isometries(v: &[Complex64], a: usize, b: usize) -> (Isometry, Isometry) {
    let s = decompose_coefficients(v, a, b);
    let complete = |mut cols: Vec<Vec<Complex64>>, dim: usize| -> Isometry {
        cols.truncate(2);
        let mut e = 0;
        while cols.len() < 2 {
            let mut cand = vec![Complex64::new(0.0, 0.0); dim];
            cand[e] = Complex64::new(1.0, 0.0);
            e += 1;
            for q in &cols {
                let p = inner(q, &cand);
                for (c, qi) in cand.iter_mut().zip(q) {
                    *c -= p * qi;
                }
            }
            let norm = vector_norm(&cand);
            if norm > 1e-6 {
                cols.push(cand.into_iter().map(|z| z / norm).collect());
            }
        }
        [cols[0].clone(), cols[1].clone()]
    };
    (complete(s.left_vectors, a), complete(s.right_vectors, b))
}

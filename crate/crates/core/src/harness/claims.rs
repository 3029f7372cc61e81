//! The reproducible claim suite C1–C12.
//!
//! Every claim reports the largest deviation from its closed-form value and
//! whether its qualitative relations hold; it passes when both do.

use std::time::Instant;

use num_rational::Ratio;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::distillability::{
    classify, explicit_witnesses, k1_threshold, k1_witness_closed_form, ppt_all_cuts,
    seesaw_witness_search, witness_value, ClassifyOptions, Evidence, SeesawOptions, Verdict,
};
use crate::error::{Error, Result};
use crate::geometry::{
    ball_verdict, gap_ratio_exact, hs_distance, lsb_radius, radius_from_center, werner_gap_report,
};
use crate::random::{self, SeededRng};
use crate::states::{
    bell_state, cut_1_23_relabeling, closed_form_spectrum, flatten_spectrum, maximally_mixed,
    multipartite_rho_tilde, perturbed_k1, perturbed_singlet, perturbed_state, psi_k1_in,
    sigma_phi, subspace_complement_mixed, werner_type, BellState, ChiWitness, DensityMatrix,
    Family, SchmidtSpec, WernerParams,
};
use crate::tensor::{ComplexMatrix, Cut, DimensionVector};
use crate::tolerance;

pub const CLAIM_IDS: [&str; 12] = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
];

/// Total dimensions used by C1 and C5 when none are given; C4 keeps the squares.
pub const DEFAULT_DIMS: [usize; 5] = [4, 8, 9, 16, 25];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    /// Largest absolute deviation from the closed form (0 for pure relations).
    pub deviation: f64,
    pub tolerance: f64,
    pub relations_hold: bool,
    pub pass: bool,
    pub runtime_ms: f64,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    /// Claim ids to run; `None` runs all twelve.
    pub claims: Option<Vec<String>>,
    /// Total dimensions for the dimension-parametrized claims.
    pub dims: Option<Vec<usize>>,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: usize,
    pub total: usize,
    pub results: Vec<ClaimResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&summary_line(r));
            out.push('\n');
        }
        out.push_str(&format!("{}/{} claims pass (seed {})\n", self.passed, self.total, self.seed));
        out
    }
}

pub fn summary_line(r: &ClaimResult) -> String {
    format!(
        "{:<4} {}  {}: computed {} (expected {}, deviation {:.3e} <= {:.0e}) [{:.0} ms]",
        r.id,
        if r.pass { "PASS" } else { "FAIL" },
        r.description,
        r.computed,
        r.expected,
        r.deviation,
        r.tolerance,
        r.runtime_ms
    )
}

/// Accumulates deviations and relation checks for one claim.
struct Check {
    tolerance: f64,
    deviation: f64,
    relations_hold: bool,
    details: Vec<String>,
}

impl Check {
    fn new(tolerance: f64) -> Self {
        Self {
            tolerance,
            deviation: 0.0,
            relations_hold: true,
            details: Vec::new(),
        }
    }

    fn close(&mut self, what: impl FnOnce() -> String, computed: f64, expected: f64) {
        let dev = (computed - expected).abs();
        if dev.is_nan() || dev > self.tolerance {
            self.details.push(format!("{}: {computed:e} vs {expected:e}", what()));
        }
        self.deviation = if dev.is_nan() { f64::INFINITY } else { self.deviation.max(dev) };
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.relations_hold = false;
            self.details.push(what());
        }
    }
}

struct Outcome {
    description: &'static str,
    anchor: &'static str,
    expected: String,
    computed: String,
    check: Check,
}

pub fn run_claim_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let ids: Vec<&str> = match &config.claims {
        None => CLAIM_IDS.to_vec(),
        Some(list) => {
            let mut ids = Vec::new();
            for c in list {
                let id = CLAIM_IDS
                    .iter()
                    .find(|k| k.eq_ignore_ascii_case(c.trim()))
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown claim id {c:?}")))?;
                if !ids.contains(id) {
                    ids.push(*id);
                }
            }
            ids
        }
    };
    let dims = match &config.dims {
        None => DEFAULT_DIMS.to_vec(),
        Some(d) => {
            for &n in d {
                split_dimension(n)?;
            }
            d.clone()
        }
    };

    let mut results = Vec::with_capacity(ids.len());
    for id in ids {
        results.push(run_claim(id, &dims, config.seed)?);
    }
    let passed = results.iter().filter(|r| r.pass).count();
    Ok(SuiteReport {
        seed: config.seed,
        passed,
        total: results.len(),
        results,
    })
}

pub fn run_claim(id: &str, dims: &[usize], seed: u64) -> Result<ClaimResult> {
    let start = Instant::now();
    let index = CLAIM_IDS
        .iter()
        .position(|k| *k == id)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown claim id {id:?}")))?;
    let mut rng = random::rng(seed, 1000 + index as u64);
    let outcome = match id {
        "C1" => c1(dims, &mut rng)?,
        "C2" => c2(&mut rng)?,
        "C3" => c3(&mut rng)?,
        "C4" => c4(dims, &mut rng)?,
        "C5" => c5(dims, &mut rng)?,
        "C6" => c6()?,
        "C7" => c7()?,
        "C8" => c8()?,
        "C9" => c9()?,
        "C10" => c10(&mut rng)?,
        "C11" => c11(seed, &mut rng)?,
        _ => c12(seed)?,
    };
    let Outcome { description, anchor, expected, computed, check } = outcome;
    Ok(ClaimResult {
        id: id.to_string(),
        description: description.to_string(),
        anchor: anchor.to_string(),
        expected,
        computed,
        deviation: check.deviation,
        tolerance: check.tolerance,
        relations_hold: check.relations_hold,
        pass: check.relations_hold && check.deviation <= check.tolerance,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
        details: check.details,
    })
}

/// `D = p * (D / p)` with `p` the smallest prime factor.
pub fn split_dimension(total: usize) -> Result<DimensionVector> {
    let p = (2..total).find(|p| total.is_multiple_of(*p)).filter(|_| total >= 4).ok_or_else(|| {
        Error::InvalidParameter(format!("total dimension {total} is not a composite number >= 4"))
    })?;
    DimensionVector::new(vec![p, total / p])
}

fn integer_sqrt(n: usize) -> Option<usize> {
    (2..=n).take_while(|d| d * d <= n).find(|d| d * d == n)
}

fn random_etas(rng: &mut SeededRng, k: usize) -> Result<SchmidtSpec> {
    let w: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..1.0)).collect();
    SchmidtSpec::normalized(&w)
}

fn c1(dims: &[usize], rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    let mut count = 0;
    for &n in dims {
        let dv = split_dimension(n)?;
        let center = maximally_mixed(&dv);
        for _ in 0..10 {
            let phi = random::pure_state(rng, &dv);
            let d = hs_distance(&center, &subspace_complement_mixed(&phi))?;
            check.close(|| format!("D={n}"), d, lsb_radius(n));
            count += 1;
        }
    }
    Ok(Outcome {
        description: "complement-subspace states lie on the largest separable ball",
        anchor: "largest separable ball radius",
        expected: "1/sqrt(D(D-1))".into(),
        computed: format!("{count} distances over D in {dims:?}"),
        check,
    })
}

fn c2(rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(1e-10);
    let mut count = 0;
    for d in 2..=6usize {
        for k in 1..=d {
            for _ in 0..20 {
                let spec = random_etas(rng, k)?;
                let sigma = sigma_phi(&spec, d)?;
                let numeric = sigma.spectrum();
                let closed = flatten_spectrum(&closed_form_spectrum(&spec, d)?);
                for (a, b) in numeric.iter().zip(&closed) {
                    check.close(|| format!("d={d} k={k} etas={:?}", spec.etas()), *a, *b);
                }
                let rank = sigma.rank();
                let want = if k >= 2 { d * d } else { d * d - 1 };
                check.require(rank == want, || format!("d={d} k={k}: rank {rank}, expected {want}"));
                count += 1;
            }
        }
    }
    Ok(Outcome {
        description: "eigensolved sigma_phi(k) spectrum matches the closed form",
        anchor: "sigma_phi spectral decomposition and rank",
        expected: "closed-form spectrum; rank D for k>=2, D-1 for k=1".into(),
        computed: format!("{count} spectra, d=2..6, all k"),
        check,
    })
}

fn c3(rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    let mut count = 0;
    for d in 2..=6usize {
        for k in 1..=d {
            for draw in 0..5 {
                let spec = if draw == 0 { SchmidtSpec::uniform(k)? } else { random_etas(rng, k)? };
                let v = ball_verdict(&sigma_phi(&spec, d)?);
                check.close(|| format!("d={d} k={k}"), v.radius_from_center, lsb_radius(d * d));
                count += 1;
            }
        }
    }
    Ok(Outcome {
        description: "sigma_phi(k) sits on the ball surface for every k",
        anchor: "surface distance independent of k",
        expected: "radius = 1/sqrt(D(D-1))".into(),
        computed: format!("{count} states, d=2..6"),
        check,
    })
}

fn c4(dims: &[usize], rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    let squares: Vec<usize> = dims.iter().filter_map(|&n| integer_sqrt(n)).collect();
    let singlet_pt = |d: usize, x: f64| -> Result<f64> {
        let rho = DensityMatrix::from_pure(&bell_state(BellState::PhiPlus, d)?);
        let w = werner_type(&rho, WernerParams::new(x)?);
        witness_value(&bell_state(BellState::PsiMinus, d)?, &w, &Cut::standard(), 1)
    };
    let mut worst_margin = f64::INFINITY;
    for &d in &squares {
        let n = d * d;
        let x_star = 2.0 / (n as f64 + 2.0);
        check.close(|| format!("D={n} at threshold"), singlet_pt(d, x_star)?, 0.0);
        let below = singlet_pt(d, x_star - 1e-6)?;
        let above = singlet_pt(d, x_star + 1e-6)?;
        check.require(below > 0.0 && above < 0.0, || {
            format!("D={n}: no sign flip ({below:e} below, {above:e} above)")
        });

        let dv = DimensionVector::bipartite(d)?;
        let floor = 1.0 / (n as f64 + 2.0);
        for i in 0..50 {
            let rank = 1 + i % n;
            let rho = random::density_matrix(rng, &dv, rank);
            let min = werner_type(&rho, WernerParams::new(x_star)?).min_eigenvalue();
            worst_margin = worst_margin.min(min - floor);
            check.require(min >= floor - tolerance::PSD, || {
                format!("D={n}: min eigenvalue {min:e} below 1/(D+2)")
            });
        }
    }
    Ok(Outcome {
        description: "Werner NPT threshold and minimum-eigenvalue floor at x = 2/(D+2)",
        anchor: "Werner-type threshold 2/(D+2)",
        expected: "<Psi-|rho_x^PT|Psi-> = 0 at x = 2/(D+2), sign flip; lambda_min >= 1/(D+2)".into(),
        computed: format!("D in {:?}, worst lambda_min - 1/(D+2) = {worst_margin:.3e}", squares.iter().map(|d| d * d).collect::<Vec<_>>()),
        check,
    })
}

fn c5(dims: &[usize], rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    let mut ratios = Vec::new();
    for &n in dims {
        let g = werner_gap_report(n);
        let d = n as f64;
        check.close(|| format!("D={n} ratio"), g.ratio, 2.0 * (d - 1.0) / (d + 2.0));
        // The nearest NPT Werner-type state from a pure direction.
        let dv = split_dimension(n)?;
        let pure = DensityMatrix::from_pure(&random::pure_state(rng, &dv));
        let w = werner_type(&pure, WernerParams::new(2.0 / (d + 2.0))?);
        check.close(|| format!("D={n} R"), radius_from_center(&w), g.r);
        let exact = gap_ratio_exact(n);
        let one = Ratio::from_integer(1);
        check.require((exact == one) == (n == 4), || format!("D={n}: exact ratio {exact}"));
        check.require(exact >= one, || format!("D={n}: ratio {exact} below 1"));
        ratios.push(format!("{n}:{exact}"));
    }
    Ok(Outcome {
        description: "gap between the NPT Werner radius and the ball radius",
        anchor: "gap ratio, equality only at D = 4",
        expected: "R/R_lsb = 2(D-1)/(D+2), exactly 1 iff D = 4".into(),
        computed: format!("exact ratios {}", ratios.join(", ")),
        check,
    })
}

const C6_EPSILONS: [f64; 5] = [0.01, 0.1, 0.3, 0.6, 0.9];
const C6_RATIOS: [f64; 5] = [0.1, 0.5, 1.0, 3.0, 10.0];

fn c6() -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    for d in [2usize, 3] {
        let dv = DimensionVector::bipartite(d)?;
        for eps in C6_EPSILONS {
            let rho = perturbed_k1(d, eps)?;
            for y in C6_RATIOS {
                let chi = ChiWitness::from_ratio(y)?;
                let v = witness_value(&chi.vector(&dv)?, &rho, &Cut::standard(), 1)?;
                check.close(|| format!("D={} eps={eps} y={y}", d * d), v, k1_witness_closed_form(&chi, eps, d * d));
            }
        }
    }
    Ok(Outcome {
        description: "k=1 witness expectation matches its closed form",
        anchor: "k=1 witness expectation",
        expected: "-(eps/3)|a||b| + 3(1-eps)|b|^2/(4(D-1))".into(),
        computed: "5x5 (eps, y) grid, D in [4, 9]".into(),
        check,
    })
}

fn c7() -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    let mut worst_above = f64::NEG_INFINITY;
    for d in [2usize, 3] {
        let dv = DimensionVector::bipartite(d)?;
        for y in C6_RATIOS {
            let chi = ChiWitness::from_ratio(y)?;
            let v = chi.vector(&dv)?;
            let eps = k1_threshold(y, d * d);
            let at = witness_value(&v, &perturbed_k1(d, eps)?, &Cut::standard(), 1)?;
            check.close(|| format!("D={} y={y} at threshold", d * d), at, 0.0);
            let above = witness_value(&v, &perturbed_k1(d, eps * (1.0 + 1e-6))?, &Cut::standard(), 1)?;
            worst_above = worst_above.max(above);
            check.require(above < 0.0, || format!("D={} y={y}: {above:e} not negative", d * d));
        }
    }
    Ok(Outcome {
        description: "k=1 distillability threshold eps = 1/(1 + yA)",
        anchor: "k=1 threshold, A = 4(D-1)/9",
        expected: "value 0 at threshold, negative at eps(1+1e-6)".into(),
        computed: format!("largest value just above threshold {worst_above:.3e}"),
        check,
    })
}

fn c8() -> Result<Outcome> {
    let mut check = Check::new(1e-12);
    let spec = SchmidtSpec::uniform(2)?;
    for d in [2usize, 3, 4] {
        let phi = bell_state(BellState::PhiPlus, d)?;
        for eps in [1e-6, 1e-3, 0.1] {
            let v = witness_value(&phi, &perturbed_singlet(d, &spec, eps)?, &Cut::standard(), 1)?;
            check.close(|| format!("d={d} eps={eps}"), v, -eps / 2.0);
        }
    }
    Ok(Outcome {
        description: "Phi+ witnesses the k=2 construction for every eps > 0",
        anchor: "k=2 witness",
        expected: "<Phi+|rho^PT(eps,2)|Phi+> = -eps/2".into(),
        computed: "eps in [1e-6, 1e-3, 0.1], d in [2, 3, 4]".into(),
        check,
    })
}

fn c9() -> Result<Outcome> {
    let mut check = Check::new(0.0);
    let relabel = cut_1_23_relabeling();
    let cut = Cut::new(&[0], 3)?;
    let dims_24 = DimensionVector::new(vec![2, 4])?;
    let k1 = SchmidtSpec::uniform(1)?;
    let mut mins = Vec::new();
    for eps in [0.01, 0.1] {
        let tilde = multipartite_rho_tilde(eps)?;
        let merged = tilde.regroup(&relabel)?;
        let bipartite = perturbed_state(&psi_k1_in(&dims_24)?, &k1, eps)?;
        check.require(merged.matrix() == bipartite.matrix(), || {
            format!("eps={eps}: merged matrix differs from the 2x4 construction")
        });
        check.require(same_entries(tilde.matrix(), merged.matrix()), || {
            format!("eps={eps}: regrouping is not a permutation of entries")
        });
        let cuts = ppt_all_cuts(&tilde)?;
        let c = cuts.iter().find(|c| c.cut == cut).expect("1|23 is enumerated");
        check.require(!c.is_ppt, || format!("eps={eps}: 1|23 is PPT"));
        mins.push(c.min_eigenvalue);
    }
    Ok(Outcome {
        description: "three-qubit construction reduces to the 2x4 k=1 state across 1|23",
        anchor: "multipartite reduction across 1|23",
        expected: "bit-exact equality; NPT on 1|23".into(),
        computed: format!("1|23 min PT eigenvalues {:.3e}, {:.3e}", mins[0], mins[1]),
        check,
    })
}

fn same_entries(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
    let key = |m: &ComplexMatrix| {
        let mut v: Vec<(u64, u64)> = m.as_slice().iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect();
        v.sort_unstable();
        v
    };
    key(a) == key(b)
}

fn c10(rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(0.0);
    let dv = DimensionVector::new(vec![2, 2, 2])?;
    let r_max = lsb_radius(8);
    let mm = maximally_mixed(&dv);
    let mut worst = f64::INFINITY;
    for i in 0..200 {
        let r = if i % 4 == 0 { r_max } else { r_max * rng.random::<f64>() };
        let h = random::traceless_direction(rng, 8);
        let rho = DensityMatrix::new(dv.clone(), mm.matrix() + &h.scale(r))?;
        for c in ppt_all_cuts(&rho)? {
            worst = worst.min(c.min_eigenvalue);
            check.require(c.is_ppt, || format!("state {i}: NPT on {} ({:e})", c.cut, c.min_eigenvalue));
        }
    }
    Ok(Outcome {
        description: "three-qubit states inside radius 1/sqrt(56) are PPT on every cut",
        anchor: "largest PPT ball, multipartite",
        expected: "PPT on 1|23, 2|13, 3|12".into(),
        computed: format!("200 states, smallest PT eigenvalue {worst:.3e}"),
        check,
    })
}

fn c11(seed: u64, rng: &mut SeededRng) -> Result<Outcome> {
    let mut check = Check::new(1e-8);
    let cut = Cut::standard();
    let opts = SeesawOptions { seed, ..Default::default() };

    let mut ppt_states = Vec::new();
    for d in [2usize, 3] {
        let dv = DimensionVector::bipartite(d)?;
        for _ in 0..4 {
            ppt_states.push(random::separable_state(rng, &dv, 4));
        }
    }
    for k in 1..=3 {
        for _ in 0..2 {
            ppt_states.push(sigma_phi(&random_etas(rng, k)?, 3)?);
        }
    }
    let dv = DimensionVector::bipartite(3)?;
    let mm = maximally_mixed(&dv);
    for _ in 0..6 {
        let h = random::traceless_direction(rng, 9);
        ppt_states.push(DensityMatrix::new(dv.clone(), mm.matrix() + &h.scale(lsb_radius(9)))?);
    }
    let mut lowest_ppt = f64::INFINITY;
    for (i, rho) in ppt_states.iter().enumerate() {
        let v = seesaw_witness_search(rho, &cut, &opts)?.best.value;
        lowest_ppt = lowest_ppt.min(v);
        check.require(v >= -tolerance::CERTIFICATION_MARGIN, || format!("PPT state {i}: value {v:e}"));
    }

    let bell = DensityMatrix::from_pure(&bell_state(BellState::PhiPlus, 2)?);
    let werner = werner_type(&bell, WernerParams::new(0.5)?);
    let bw = seesaw_witness_search(&werner, &cut, &opts)?.best;
    check.close(|| "Bell-Werner x=0.5".into(), bw.value, -0.125);

    let k1 = seesaw_witness_search(&perturbed_k1(3, 1e-3)?, &cut, &opts)?.best;
    check.require(k1.certified, || format!("k=1, eps=1e-3: value {:e} not certified", k1.value));

    Ok(Outcome {
        description: "witness search is sound on PPT states and finds known witnesses",
        anchor: "Schmidt-rank-2 distillability witness",
        expected: "PPT >= -1e-10; Bell-Werner -0.125; k=1 eps=1e-3 certified".into(),
        computed: format!(
            "{} PPT states min {lowest_ppt:.3e}; Bell-Werner {:.12}; k=1 {:.3e}",
            ppt_states.len(),
            bw.value,
            k1.value
        ),
        check,
    })
}

/// Epsilon of the `k = 3` boundary state examined by C12.
pub const C12_EPSILON: f64 = 0.01;

fn c12(seed: u64) -> Result<Outcome> {
    let mut check = Check::new(0.0);
    let etas = SchmidtSpec::uniform(3)?.etas().to_vec();
    let family = Family::PerturbedSinglet { d: 3, etas, epsilon: C12_EPSILON };
    let rho = family.build()?;
    let options = ClassifyOptions {
        seed,
        restarts: 64,
        max_copies: 2,
        search: true,
        explicit: explicit_witnesses(&family)?,
    };
    let report = classify(&rho, &options)?;
    let min_pt = report.cuts.iter().map(|c| c.min_eigenvalue).fold(f64::INFINITY, f64::min);
    check.require(min_pt < -tolerance::PSD, || format!("state is PPT (min PT eigenvalue {min_pt:e})"));
    check.require(report.overall == Verdict::NptUndetermined, || {
        format!("verdict {:?}", report.overall)
    });
    let mut bests = Vec::new();
    for n in 1..=2 {
        let best = report.evidence.iter().find_map(|e| match e {
            Evidence::SearchExhausted { n_copies, restarts, best_value, .. } if *n_copies == n => {
                Some((*restarts, *best_value))
            }
            _ => None,
        });
        check.require(best.is_some(), || format!("no completed search at n={n}"));
        if let Some((restarts, v)) = best {
            check.require(restarts >= 64, || format!("n={n}: only {restarts} restarts"));
            bests.push(format!("n={n}: {v:.3e}"));
        }
    }
    Ok(Outcome {
        description: "k=3 boundary state is NPT with no witness at n<=2 (non-conclusive: absence of evidence only)",
        anchor: "n-copy undistillable boundary states",
        expected: "NPT, verdict NPT_UNDETERMINED".into(),
        computed: format!("min PT eigenvalue {min_pt:.3e}; best search values {}", bests.join(", ")),
        check,
    })
}

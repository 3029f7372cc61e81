use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

use qball::distillability::{
    classify, ppt_all_cuts, ppt_check, seesaw_witness_search, witness_value, ClassifyOptions,
    SeesawOptions, Verdict,
};
use qball::geometry::{
    gurvits_ball_separability_sufficient, hs_distance, lsb_radius, vidal_separability_sufficient,
};
use qball::harness::StateFile;
use qball::random;
use qball::states::{
    bell_state, closed_form_spectrum, flatten_spectrum, maximally_mixed, sigma_phi, werner_type,
    BellState, DensityMatrix, SchmidtSpec, WernerParams,
};
use qball::tensor::{
    hermitian_eigs, partial_transpose, schmidt_rank, ComplexMatrix, Cut, DimensionVector,
};

fn random_hermitian(seed: u64, n: usize) -> ComplexMatrix {
    let mut g = random::rng(seed, 0);
    let a = ComplexMatrix::from_vec(n, n, random::gaussian_vector(&mut g, n * n)).unwrap();
    (&a + &a.adjoint()).scale(0.5)
}

fn dims_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![
        (2usize..=4, 2usize..=4).prop_map(|(a, b)| vec![a, b]),
        Just(vec![2, 2, 2]),
        Just(vec![2, 3, 2]),
    ]
}

fn ball_state(seed: u64, dims: &DimensionVector, fraction: f64) -> DensityMatrix {
    let mut g = random::rng(seed, 1);
    let n = dims.total();
    let h = random::traceless_direction(&mut g, n);
    let m = maximally_mixed(dims).matrix() + &h.scale(fraction * lsb_radius(n));
    DensityMatrix::new(dims.clone(), m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_transpose_is_an_involution_preserving_purity(seed in any::<u64>(), dims in dims_strategy()) {
        let dv = DimensionVector::new(dims).unwrap();
        let m = random_hermitian(seed, dv.total());
        for cut in Cut::all_bipartitions(dv.len()) {
            let pt = partial_transpose(&m, &dv, &cut).unwrap();
            prop_assert_eq!(&partial_transpose(&pt, &dv, &cut).unwrap(), &m);
            let tr2 = |x: &ComplexMatrix| x.matmul(x).trace().re;
            prop_assert!((tr2(&pt) - tr2(&m)).abs() <= 1e-10 * tr2(&m).max(1.0));
        }
    }

    #[test]
    fn eigensolver_agrees_with_independent_oracle(seed in any::<u64>(), n in 1usize..=12) {
        let m = random_hermitian(seed, n);
        let eig = hermitian_eigs(&m).unwrap();
        let oracle = DMatrix::<Complex64>::from_fn(n, n, |i, j| m[(i, j)]).symmetric_eigen();
        let mut expected: Vec<f64> = oracle.eigenvalues.iter().copied().collect();
        expected.sort_by(f64::total_cmp);
        for (a, b) in eig.eigenvalues.iter().zip(&expected) {
            prop_assert!((a - b).abs() <= 1e-10, "{} vs {}", a, b);
        }
        prop_assert!(eig.reconstruct().max_abs_diff(&m) <= 1e-10);
    }

    #[test]
    fn product_states_have_schmidt_rank_one(seed in any::<u64>(), a in 2usize..=5, b in 2usize..=5) {
        let mut g = random::rng(seed, 2);
        let u = random::pure_state(&mut g, &DimensionVector::new(vec![a]).unwrap());
        let v = random::pure_state(&mut g, &DimensionVector::new(vec![b]).unwrap());
        prop_assert_eq!(schmidt_rank(&u.tensor(&v), &Cut::standard()).unwrap(), 1);
    }

    #[test]
    fn hilbert_schmidt_triangle_inequality(seed in any::<u64>(), d in 2usize..=3) {
        let dv = DimensionVector::bipartite(d).unwrap();
        let mut g = random::rng(seed, 3);
        let n = dv.total();
        let [a, b, c] = [0, 1, 2].map(|i| random::density_matrix(&mut g, &dv, 1 + i % n));
        let (ab, bc, ac) = (hs_distance(&a, &b).unwrap(), hs_distance(&b, &c).unwrap(), hs_distance(&a, &c).unwrap());
        prop_assert!(ac <= ab + bc + 1e-12);
        prop_assert_eq!(hs_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn states_inside_the_ball_are_ppt_on_every_cut(seed in any::<u64>(), dims in dims_strategy(), f in 0.0f64..=1.0) {
        let rho = ball_state(seed, &DimensionVector::new(dims).unwrap(), f);
        for c in ppt_all_cuts(&rho).unwrap() {
            prop_assert!(c.is_ppt, "NPT on {} ({})", c.cut, c.min_eigenvalue);
        }
    }

    #[test]
    fn complementary_cuts_agree(seed in any::<u64>(), dims in dims_strategy()) {
        let dv = DimensionVector::new(dims).unwrap();
        let mut g = random::rng(seed, 4);
        let rho = random::density_matrix(&mut g, &dv, 2);
        for cut in Cut::all_bipartitions(dv.len()) {
            let a = ppt_check(&rho, &cut).unwrap();
            let b = ppt_check(&rho, &cut.complement()).unwrap();
            prop_assert_eq!(a.is_ppt, b.is_ppt);
            prop_assert!((a.min_eigenvalue - b.min_eigenvalue).abs() <= 1e-10);
        }
    }

    #[test]
    fn sufficient_separability_conditions_never_fire_on_npt_states(seed in any::<u64>(), x in 0.0f64..=1.0, rank in 1usize..=4) {
        let dv = DimensionVector::bipartite(2).unwrap();
        let mut g = random::rng(seed, 5);
        let rho = werner_type(&random::density_matrix(&mut g, &dv, rank), WernerParams::new(x).unwrap());
        if !ppt_check(&rho, &Cut::standard()).unwrap().is_ppt {
            prop_assert!(!vidal_separability_sufficient(&rho).unwrap());
            prop_assert!(!gurvits_ball_separability_sufficient(&rho));
        }
    }

    #[test]
    fn singlet_expectation_on_bell_werner_states(x in 0.0f64..=1.0, d in 2usize..=4) {
        let rho = DensityMatrix::from_pure(&bell_state(BellState::PhiPlus, d).unwrap());
        let w = werner_type(&rho, WernerParams::new(x).unwrap());
        let v = witness_value(&bell_state(BellState::PsiMinus, d).unwrap(), &w, &Cut::standard(), 1).unwrap();
        let n = (d * d) as f64;
        prop_assert!((v - (-x / 2.0 + (1.0 - x) / n)).abs() <= 1e-12);
    }

    #[test]
    fn state_files_round_trip_bit_exactly(seed in any::<u64>(), dims in dims_strategy()) {
        let dv = DimensionVector::new(dims).unwrap();
        let mut g = random::rng(seed, 6);
        let rho = random::density_matrix(&mut g, &dv, 3);
        let back = StateFile::from_json(&StateFile::from_state(&rho, None).to_json()).unwrap().to_state().unwrap();
        prop_assert_eq!(back, rho);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sigma_phi_spectrum_matches_closed_form(weights in prop::collection::vec(0.05f64..1.0, 1..=5), extra in 0usize..=1) {
        let k = weights.len();
        let d = (k + extra).max(2);
        let spec = SchmidtSpec::normalized(&weights).unwrap();
        let sigma = sigma_phi(&spec, d).unwrap();
        let closed = flatten_spectrum(&closed_form_spectrum(&spec, d).unwrap());
        for (a, b) in sigma.spectrum().iter().zip(&closed) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn seesaw_objective_never_increases(seed in any::<u64>(), b in 2usize..=3, x in 0.0f64..=1.0) {
        let dv = DimensionVector::new(vec![2, b]).unwrap();
        let mut g = random::rng(seed, 7);
        let rho = werner_type(&random::density_matrix(&mut g, &dv, 2), WernerParams::new(x).unwrap());
        let opts = SeesawOptions { restarts: 4, seed, ..Default::default() };
        let report = seesaw_witness_search(&rho, &Cut::standard(), &opts).unwrap();
        for r in &report.restarts {
            for w in r.trace.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-12, "{} -> {}", w[0], w[1]);
            }
        }
        prop_assert!(report.best.schmidt_rank <= 2);
        prop_assert!((report.best.value - report.best.reverified_value).abs() <= 1e-12);
    }

    #[test]
    fn certified_witnesses_re_verify(seed in any::<u64>(), x in 0.0f64..=1.0) {
        let dv = DimensionVector::bipartite(2).unwrap();
        let mut g = random::rng(seed, 8);
        let rho = werner_type(&random::density_matrix(&mut g, &dv, 1), WernerParams::new(x).unwrap());
        let opts = ClassifyOptions { seed, restarts: 4, max_copies: 1, ..Default::default() };
        let report = classify(&rho, &opts).unwrap();
        if let Verdict::DistillableCertified { .. } = report.overall {
            let w = report.witness().expect("certified verdict carries a witness");
            let again = witness_value(&w.chi, &rho, &w.cut, w.n_copies).unwrap();
            prop_assert!(again < -1e-10);
            prop_assert!(w.schmidt_rank <= 2);
        }
        if report.overall == Verdict::SeparableCertified {
            prop_assert!(report.witness().is_none());
        }
    }
}

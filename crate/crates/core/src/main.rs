use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qball::distillability::{
    classify, explicit_witnesses, ppt_check, seesaw_witness_search, ClassificationReport,
    ClassifyOptions, Evidence, SeesawOptions, Verdict, WitnessResult,
};
use qball::harness::{radial_scan, run_claim_suite, ScanResult, StateFile, SuiteConfig};
use qball::states::{BellState, DensityMatrix, Family, SchmidtSpec};
use qball::tensor::Cut;
use qball::Error;

#[derive(Parser)]
#[command(name = "qball", version, about = "Separability, PPT and distillability checks near the maximally mixed state")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named state family and emit a state file.
    Construct(FamilyArgs),
    /// Run certificates, PPT checks and the witness search on a state file.
    Classify {
        state: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        /// Largest copy number searched.
        #[arg(long, default_value_t = 2)]
        ncopies: usize,
    },
    /// Search for a Schmidt-rank-2 witness across one cut.
    Witness {
        state: PathBuf,
        /// One-based cut such as `1|2` or `1|23`.
        #[arg(long)]
        cut: Option<String>,
        #[arg(long, default_value_t = 1)]
        ncopies: usize,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify t*sigma + (1-t)*I/D over t in [0, 1] and bracket transitions.
    Scan {
        /// Direction state file; otherwise the family flags are used.
        state: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1e-9)]
        resolution: f64,
    },
    /// Run the claim suite C1-C12.
    Verify {
        /// Comma-separated claim ids, e.g. `C5,C6`.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Comma-separated total dimensions for the dimension-parametrized claims.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// maximally-mixed, bell, werner, subspace-complement, sigma-phi,
    /// perturbed-k1, perturbed-singlet, sigma-tilde, rho-tilde
    #[arg(long)]
    family: Option<String>,
    /// Local dimension of d x d families.
    #[arg(long)]
    d: Option<usize>,
    /// Subsystem dimensions for maximally-mixed, e.g. `2,2,2`.
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    /// Schmidt coefficients of phi (normalized on input).
    #[arg(long, value_delimiter = ',')]
    etas: Option<Vec<f64>>,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value = "phi+")]
    bell: String,
}

enum Failure {
    Claims,
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claims) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Construct(args) => {
            let family = family_from_args(args)?;
            let file = StateFile::from_state(&family.build()?, Some(family));
            // State files are always JSON.
            emit(cli.out.as_deref(), &file.to_json())
        }
        Command::Classify { state, seed, restarts, ncopies } => {
            let (rho, family) = load(state)?;
            let explicit = match &family {
                Some(f) => explicit_witnesses(f)?,
                None => Vec::new(),
            };
            let options = ClassifyOptions {
                seed: *seed,
                restarts: *restarts,
                max_copies: *ncopies,
                search: true,
                explicit,
            };
            let report = classify(&rho, &options)?;
            render(cli, &report, classification_text)
        }
        Command::Witness { state, cut, ncopies, restarts, seed } => {
            let (rho, _) = load(state)?;
            let m = rho.dims().len();
            let cut = match cut {
                Some(text) => Cut::parse(text, m)?,
                None => Cut::all_bipartitions(m).remove(0),
            };
            let check = ppt_check(&rho, &cut)?;
            if check.is_ppt {
                let report = WitnessReport::Ppt {
                    cut: cut.to_string(),
                    min_eigenvalue: check.min_eigenvalue,
                    message: format!(
                        "no witness found; state PPT on cut {cut} (certified undistillable across this cut)"
                    ),
                };
                return render(cli, &report, WitnessReport::text);
            }
            let options = SeesawOptions {
                n_copies: *ncopies,
                restarts: *restarts,
                seed: *seed,
                ..Default::default()
            };
            let best = seesaw_witness_search(&rho, &cut, &options)?.best;
            render(cli, &WitnessReport::Searched { min_eigenvalue: check.min_eigenvalue, best }, WitnessReport::text)
        }
        Command::Scan { state, family, resolution } => {
            let (rho, label) = match state {
                Some(path) => (load(path)?.0, path.display().to_string()),
                None => {
                    let f = family_from_args(family)?;
                    (f.build()?, serde_json::to_string(&f).expect("family serializes"))
                }
            };
            let result = radial_scan(&rho, &label, *resolution)?;
            render(cli, &result, scan_text)
        }
        Command::Verify { claims, dims, seed } => {
            let config = SuiteConfig {
                claims: claims.clone(),
                dims: dims.clone(),
                seed: *seed,
            };
            let report = run_claim_suite(&config)?;
            render(cli, &report, |r| r.summary())?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::Claims)
            }
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
enum WitnessReport {
    Ppt { cut: String, min_eigenvalue: f64, message: String },
    Searched { min_eigenvalue: f64, best: WitnessResult },
}

impl WitnessReport {
    fn text(&self) -> String {
        match self {
            WitnessReport::Ppt { message, .. } => format!("{message}\n"),
            WitnessReport::Searched { min_eigenvalue, best } => format!(
                "cut {}: NPT (min PT eigenvalue {min_eigenvalue:.6e})\n\
                 best witness value {:.6e} at n = {} (re-verified {:.6e}, Schmidt rank {})\n{}\n",
                best.cut,
                best.value,
                best.n_copies,
                best.reverified_value,
                best.schmidt_rank,
                if best.certified {
                    "certified distillable"
                } else {
                    "no certified witness found (inconclusive)"
                }
            ),
        }
    }
}

fn classification_text(r: &ClassificationReport) -> String {
    let mut out = format!("dims {:?}\n", r.dims);
    for c in &r.cuts {
        out.push_str(&format!(
            "cut {}: {} (min PT eigenvalue {:.6e})\n",
            c.cut,
            if c.is_ppt { "PPT" } else { "NPT" },
            c.min_eigenvalue
        ));
    }
    for e in &r.evidence {
        let line = match e {
            Evidence::MinEigenvalue { min_eigenvalue, threshold } => {
                format!("minimum eigenvalue {min_eigenvalue:.6e} >= 1/(D+2) = {threshold:.6e}")
            }
            Evidence::Ball { radius, ball_radius, multipartite } => format!(
                "radius {radius:.6e} within {} ball {ball_radius:.6e}",
                if *multipartite { "PPT" } else { "separable" }
            ),
            Evidence::PartialTranspose(_) => continue,
            Evidence::Witness(w) => format!(
                "witness on {} at n = {}: {:.6e}{}",
                w.cut,
                w.n_copies,
                w.value,
                if w.certified { " (certified)" } else { "" }
            ),
            Evidence::SearchExhausted { cut, n_copies, restarts, best_value } => format!(
                "search on {cut} at n = {n_copies}: best {best_value:.6e} over {restarts} starts, no witness"
            ),
            Evidence::SearchSkipped { cut, n_copies, reason } => {
                format!("search on {cut} at n = {n_copies} skipped: {reason}")
            }
        };
        out.push_str(&format!("  {line}\n"));
    }
    let verdict = match r.overall {
        Verdict::SeparableCertified => "SEPARABLE_CERTIFIED".to_string(),
        Verdict::PptAllCuts => "PPT_ALL_CUTS".to_string(),
        Verdict::NptUndetermined => "NPT_UNDETERMINED".to_string(),
        Verdict::DistillableCertified { n_copies } => format!("DISTILLABLE_CERTIFIED({n_copies})"),
        Verdict::Unknown => "UNKNOWN".to_string(),
    };
    out.push_str(&format!("verdict: {verdict}\n"));
    out
}

fn scan_text(r: &ScanResult) -> String {
    let mut out = format!("direction {} on dims {:?}\n", r.direction, r.dims);
    if r.transitions.is_empty() {
        if let Some(s) = r.samples.first() {
            out.push_str(&format!("no transitions; every sample {:?}\n", s.class));
        }
    }
    for t in &r.transitions {
        out.push_str(&format!(
            "{:?} -> {:?} at t in [{:.12}, {:.12}], radius in [{:.12}, {:.12}]\n",
            t.from, t.to, t.t_low, t.t_high, t.radius_low, t.radius_high
        ));
    }
    out
}

fn render<T: Serialize>(cli: &Cli, value: &T, text: impl Fn(&T) -> String) -> Result<(), Failure> {
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(value).expect("report serializes") + "\n",
        Format::Text => text(value),
    };
    emit(cli.out.as_deref(), &body)
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<(DensityMatrix, Option<Family>), Failure> {
    let file = StateFile::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let rho = file
        .to_state()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok((rho, file.metadata))
}

fn family_from_args(a: &FamilyArgs) -> Result<Family, Failure> {
    let missing = |flag: &str, name: &str| Failure::Input(format!("--family {name} needs --{flag}"));
    let name = a.family.as_deref().ok_or_else(|| Failure::Input("--family is required".into()))?;
    let d = || a.d.ok_or_else(|| missing("d", name));
    let etas = || a.etas.clone().ok_or_else(|| missing("etas", name));
    let epsilon = || a.epsilon.ok_or_else(|| missing("epsilon", name));
    let bell = || BellState::parse(&a.bell).map_err(Failure::from);
    Ok(match name {
        "maximally-mixed" => Family::MaximallyMixed {
            dims: match (&a.dims, a.d) {
                (Some(dims), _) => dims.clone(),
                (None, Some(d)) => vec![d, d],
                (None, None) => return Err(missing("dims", name)),
            },
        },
        "bell" => Family::Bell { d: d()?, bell: bell()? },
        "werner" => Family::Werner {
            d: d()?,
            bell: bell()?,
            x: a.x.ok_or_else(|| missing("x", name))?,
        },
        "subspace-complement" => Family::SubspaceComplement { d: d()?, etas: etas()? },
        "sigma-phi" => Family::SigmaPhi { d: d()?, etas: etas()? },
        "perturbed-k1" => Family::PerturbedK1 { d: d()?, epsilon: epsilon()? },
        "perturbed-singlet" => Family::PerturbedSinglet {
            d: d()?,
            etas: match &a.etas {
                Some(e) => e.clone(),
                None => SchmidtSpec::uniform(2)?.etas().to_vec(),
            },
            epsilon: epsilon()?,
        },
        "sigma-tilde" => Family::MultipartiteSigmaTilde,
        "rho-tilde" => Family::MultipartiteRhoTilde { epsilon: epsilon()? },
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    })
}

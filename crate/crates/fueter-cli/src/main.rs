//! Command-line front end: parse seed expressions and polynomial files, run
//! transforms and verification suites, emit JSON reports.
//!
//! JSON goes to standard output, diagnostics to standard error. Exit codes:
//! 0 on success with every verification true, 1 on verification failure (the
//! report is still emitted), 2 on usage, parse or validation errors.

#![allow(clippy::manual_is_multiple_of)]

mod seed;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use fueter_core::fueter::{fueter_axial, fueter_spatial};
use fueter_core::polynomial::CliffordPolynomial;
use fueter_core::spherical::{
    ck_extend, fischer_decompose, random_homogeneous, random_monogenic, SphericalMonogenic,
};
use fueter_core::verify::{self, SuiteOutcome};

const DEFAULT_RNG_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "fueter",
    version,
    about = "Generate monogenic functions from planar holomorphic seeds, with exact verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a seed against a monogenic factor of the vector variables
    Transform {
        /// Dimension m (odd, at least 3)
        #[arg(long)]
        m: usize,
        /// Expected degree of the monogenic factor (0 with no factor source
        /// means the constant factor 1)
        #[arg(long)]
        k: Option<usize>,
        /// Seed expression, e.g. "3*z^4 - z + 1/2"
        #[arg(long)]
        seed: String,
        /// Monogenic factor from a .cpoly.json file
        #[arg(long, value_name = "FILE", conflicts_with = "random_pk")]
        pk: Option<PathBuf>,
        /// Generate a random monogenic factor of the given degree
        #[arg(long, value_name = "DEGREE")]
        random_pk: Option<usize>,
        /// Seed for all randomized choices
        #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
        rng_seed: u64,
    },
    /// Transform a seed against a monogenic homogeneous factor that may
    /// depend on x0, verifying two independent computation paths
    TransformAxial {
        #[arg(long)]
        m: usize,
        /// Expected degree of the factor
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: String,
        /// Factor from a .cpoly.json file
        #[arg(long, value_name = "FILE", conflicts_with = "random_pk")]
        pk: Option<PathBuf>,
        /// Generate a random monogenic homogeneous factor of the given degree
        #[arg(long, value_name = "DEGREE")]
        random_pk: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
        rng_seed: u64,
    },
    /// Monogenic extension of a polynomial of the vector variables
    CkExtend {
        #[arg(long)]
        m: usize,
        /// Input .cpoly.json file
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Decompose a homogeneous polynomial of the vector variables into
    /// monogenic components
    Fischer {
        #[arg(long)]
        m: usize,
        /// Homogeneity degree of the input
        #[arg(long)]
        k: usize,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Run one verification suite (or "all")
    Verify {
        /// One of: spatial, lemma21, dual-path, polyharmonic, higher,
        /// ck-fischer, dirac-power, axial, spot, roundtrip, seed-holomorphy,
        /// all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Random inputs per parameter combination (per-suite default when
        /// omitted)
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
        rng_seed: u64,
    },
    /// Run the radial ladder identity suite and the dual-path suite
    LemmaCheck {
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Random polynomials for the identity suite
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
        rng_seed: u64,
    },
}

#[derive(Serialize)]
struct SuiteReport {
    suite: String,
    m: usize,
    trials: usize,
    cases: usize,
    passed: bool,
    failures: Vec<String>,
}

impl SuiteReport {
    fn new(outcome: SuiteOutcome, m: usize, trials: usize) -> Self {
        SuiteReport {
            suite: outcome.suite,
            m,
            trials,
            cases: outcome.cases,
            passed: outcome.failures.is_empty(),
            failures: outcome.failures,
        }
    }
}

#[derive(Serialize)]
struct MultiSuiteReport {
    suites: Vec<SuiteReport>,
    passed: bool,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(), // usage errors exit 2, --help/--version exit 0
    };
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Transform {
            m,
            k,
            seed,
            pk,
            random_pk,
            rng_seed,
        } => {
            let seed = seed::parse_seed(&seed).map_err(|e| e.to_string())?;
            let factor = resolve_spatial_factor(m, k, pk.as_deref(), random_pk, rng_seed)?;
            let report = fueter_spatial(&seed, &factor, m).map_err(|e| e.to_string())?;
            emit(&report)?;
            Ok(if report.verified() { 0 } else { 1 })
        }
        Command::TransformAxial {
            m,
            k,
            seed,
            pk,
            random_pk,
            rng_seed,
        } => {
            let seed = seed::parse_seed(&seed).map_err(|e| e.to_string())?;
            let factor = resolve_axial_factor(m, k, pk.as_deref(), random_pk, rng_seed)?;
            let report = fueter_axial(&seed, &factor, m).map_err(|e| e.to_string())?;
            emit(&report)?;
            Ok(if report.verified() { 0 } else { 1 })
        }
        Command::CkExtend { m, input } => {
            let poly = read_polynomial(&input, m)?;
            let extension = ck_extend(&poly).map_err(|e| e.to_string())?;
            emit(&extension)?;
            if extension.is_monogenic() {
                Ok(0)
            } else {
                eprintln!("extension failed the exact monogenicity check");
                Ok(1)
            }
        }
        Command::Fischer { m, k, input } => {
            let poly = read_polynomial(&input, m)?;
            let decomposition = fischer_decompose(&poly, k).map_err(|e| e.to_string())?;
            emit(&decomposition)?;
            if decomposition.reassemble() == poly {
                Ok(0)
            } else {
                eprintln!("decomposition failed the exact reassembly check");
                Ok(1)
            }
        }
        Command::Verify {
            suite,
            m,
            trials,
            rng_seed,
        } => run_verify(&suite, m, trials, rng_seed),
        Command::LemmaCheck {
            m,
            trials,
            rng_seed,
        } => {
            if m % 2 == 0 || m < 3 {
                return Err(format!("m must be odd and at least 3, got {m}"));
            }
            let suites = vec![
                SuiteReport::new(verify::lemma21(trials, rng_seed), m, trials),
                SuiteReport::new(verify::dual_path(&[m], 2, rng_seed), m, 2),
            ];
            let passed = suites.iter().all(|s| s.passed);
            emit(&MultiSuiteReport { suites, passed })?;
            Ok(if passed { 0 } else { 1 })
        }
    }
}

/// Serializes a value to standard output as a single JSON line.
fn emit<T: Serialize>(value: &T) -> Result<(), String> {
    let json = serde_json::to_string(value).map_err(|e| e.to_string())?;
    println!("{json}");
    Ok(())
}

fn read_polynomial(path: &Path, m: usize) -> Result<CliffordPolynomial, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let poly: CliffordPolynomial =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    if poly.m() != m {
        return Err(format!(
            "dimension mismatch: {} has m={}, requested m={}",
            path.display(),
            poly.m(),
            m
        ));
    }
    Ok(poly)
}

/// Resolves the monogenic factor of the vector variables for `transform`.
fn resolve_spatial_factor(
    m: usize,
    k: Option<usize>,
    pk: Option<&Path>,
    random_pk: Option<usize>,
    rng_seed: u64,
) -> Result<SphericalMonogenic, String> {
    let factor = if let Some(path) = pk {
        let poly = read_polynomial(path, m)?;
        let degree = poly.total_degree().unwrap_or(0);
        SphericalMonogenic::new(poly, degree).map_err(|e| e.to_string())?
    } else if let Some(degree) = random_pk {
        random_monogenic(degree, m, rng_seed)
    } else if k.unwrap_or(0) == 0 {
        SphericalMonogenic::one(m)
    } else {
        return Err("--k > 0 requires --pk or --random-pk".to_owned());
    };
    if let Some(k) = k {
        if k != factor.degree() {
            return Err(format!(
                "--k {k} does not match the factor degree {}",
                factor.degree()
            ));
        }
    }
    Ok(factor)
}

/// Resolves the monogenic homogeneous factor for `transform-axial`; random
/// factors are monogenic extensions of random polynomials of the vector
/// variables.
fn resolve_axial_factor(
    m: usize,
    k: Option<usize>,
    pk: Option<&Path>,
    random_pk: Option<usize>,
    rng_seed: u64,
) -> Result<CliffordPolynomial, String> {
    let factor = if let Some(path) = pk {
        read_polynomial(path, m)?
    } else if let Some(degree) = random_pk {
        ck_extend(&random_homogeneous(degree, m, rng_seed)).map_err(|e| e.to_string())?
    } else if k.unwrap_or(0) == 0 {
        CliffordPolynomial::one(m)
    } else {
        return Err("--k > 0 requires --pk or --random-pk".to_owned());
    };
    if let Some(k) = k {
        let degree = factor.total_degree().unwrap_or(0);
        if k != degree {
            return Err(format!("--k {k} does not match the factor degree {degree}"));
        }
    }
    Ok(factor)
}

fn run_verify(suite: &str, m: usize, trials: Option<usize>, rng_seed: u64) -> Result<i32, String> {
    if m % 2 == 0 || m < 3 {
        return Err(format!("m must be odd and at least 3, got {m}"));
    }
    let ms = [m];
    // returns the outcome and the trial count actually used
    let run_one = |name: &str, trials: Option<usize>| -> Result<(SuiteOutcome, usize), String> {
        let outcome = match name {
            "spatial" => {
                let t = trials.unwrap_or(3);
                (verify::spatial(&ms, t, rng_seed), t)
            }
            "lemma21" => {
                let t = trials.unwrap_or(50);
                (verify::lemma21(t, rng_seed), t)
            }
            "dual-path" => {
                let t = trials.unwrap_or(2);
                (verify::dual_path(&ms, t, rng_seed), t)
            }
            "polyharmonic" => {
                let t = trials.unwrap_or(10);
                (verify::polyharmonic(&ms, t, rng_seed), t)
            }
            "higher" => {
                let t = trials.unwrap_or(2);
                (verify::higher(&ms, t, rng_seed), t)
            }
            "ck-fischer" => {
                let t = trials.unwrap_or(2);
                (verify::ck_fischer(&ms, t, rng_seed), t)
            }
            "dirac-power" => {
                let t = trials.unwrap_or(3);
                (verify::dirac_power(&ms, t, rng_seed), t)
            }
            "axial" => {
                let t = trials.unwrap_or(1);
                (verify::axial(&ms, t, rng_seed), t)
            }
            "spot" => (verify::spot(), 0),
            "roundtrip" => {
                let t = trials.unwrap_or(20);
                (verify::roundtrip(t, rng_seed), t)
            }
            "seed-holomorphy" => {
                let t = trials.unwrap_or(50);
                (verify::seed_holomorphy(t, rng_seed), t)
            }
            other => return Err(format!("unknown suite {other:?}")),
        };
        Ok(outcome)
    };

    if suite == "all" {
        let names = [
            "spatial",
            "lemma21",
            "dual-path",
            "polyharmonic",
            "higher",
            "ck-fischer",
            "dirac-power",
            "axial",
            "spot",
            "roundtrip",
            "seed-holomorphy",
        ];
        let mut suites = Vec::new();
        for name in names {
            let (outcome, used) = run_one(name, trials)?;
            eprintln!(
                "suite {name}: {} ({} cases)",
                if outcome.passed() { "ok" } else { "FAILED" },
                outcome.cases
            );
            suites.push(SuiteReport::new(outcome, m, used));
        }
        let passed = suites.iter().all(|s| s.passed);
        emit(&MultiSuiteReport { suites, passed })?;
        Ok(if passed { 0 } else { 1 })
    } else {
        let (outcome, used) = run_one(suite, trials)?;
        let report = SuiteReport::new(outcome, m, used);
        let passed = report.passed;
        emit(&report)?;
        Ok(if passed { 0 } else { 1 })
    }
}

//! `hfid` — batch verifier and evaluator for the registry of
//! hypergeometric / central-binomial series identities.
//!
//! Exit codes: 0 every selected identity passes; 1 any failure or
//! non-convergence; 2 usage or domain errors.

use clap::{Args, Parser, Subcommand};

use hfid::closedform::{s3_closed, s4_closed, thai_rhs};
use hfid::harness::{
    json_report, list_identities, text_report, verify, verify_all, VerificationResult,
    VerifyOptions, VerifyStatus,
};
use hfid::hyper::{pfq, PfqSpec, Rational};
use hfid::numkit::PrecisionConfig;
use hfid::roots::thai_z;
use hfid::series::{sum_binom_family, BinomFamilyParams};

#[derive(Parser)]
#[command(
    name = "hfid",
    version,
    about = "Verify hypergeometric / binomial-sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Pass tolerance override (per-record defaults when omitted)
    #[arg(long)]
    tol: Option<f64>,
    /// Series term budget
    #[arg(long, default_value_t = 2_000_000)]
    max_terms: usize,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Table of identity ids and descriptions
    List,
    /// Verify selected identities (an empty id list selects the whole
    /// registry)
    Verify {
        /// Comma-separated identity ids, e.g. T2,T3
        #[arg(long, required = true)]
        id: String,
        #[command(flatten)]
        common: VerifyArgs,
    },
    /// Verify the whole registry
    VerifyAll {
        #[command(flatten)]
        common: VerifyArgs,
    },
    /// Evaluate one quantity and print value, terms, tail bound
    Eval {
        #[command(subcommand)]
        what: EvalCommand,
    },
}

#[derive(Subcommand)]
enum EvalCommand {
    /// Σ zⁿ/(n²·C(3n,n)) plus its root-decomposition closed form
    S3 {
        #[arg(long)]
        z: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Σ zⁿ/(n²·C(4n,n)) plus its root-decomposition closed form
    S4 {
        #[arg(long)]
        z: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// The arctan/log closed form at parameter m
    Thai {
        #[arg(long)]
        m: f64,
    },
    /// Generic pFq partial sum
    Pfq {
        /// Comma-separated upper parameters, fractions allowed (3/2)
        #[arg(long)]
        upper: String,
        /// Comma-separated lower parameters; may be empty
        #[arg(long, default_value = "")]
        lower: String,
        #[arg(long)]
        z: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|e| format!("bad numerator in '{s}': {e}"))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|e| format!("bad denominator in '{s}': {e}"))?;
        Rational::new(n, d).map_err(|e| e.to_string())
    } else {
        let n: i64 = s
            .parse()
            .map_err(|e| format!("bad integer parameter '{s}': {e}"))?;
        Ok(Rational::integer(n))
    }
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(parse_rational).collect()
}

fn exit_code(results: &[VerificationResult]) -> i32 {
    if results.iter().all(|r| r.status == VerifyStatus::Pass) {
        0
    } else {
        1
    }
}

fn emit(results: &[VerificationResult], common: &VerifyArgs) -> i32 {
    if common.format == "json" {
        print!("{}", json_report(results, common.tol, common.max_terms));
    } else {
        print!("{}", text_report(results));
    }
    exit_code(results)
}

fn eval_series_pair(
    k: u32,
    z: f64,
    tol: f64,
    closed: impl Fn(f64) -> hfid::Result<hfid::closedform::ClosedFormValue>,
) -> Result<(), String> {
    let cfg = PrecisionConfig::new(tol, 2_000_000, 2_000_000).map_err(|e| e.to_string())?;
    let params = BinomFamilyParams::new(k, 2, z).map_err(|e| e.to_string())?;
    let series = sum_binom_family(params, &cfg).map_err(|e| e.to_string())?;
    println!(
        "series = {:.17e}   terms = {}   tail_bound = {:.3e}",
        series.value, series.terms_used, series.tail_bound
    );
    match closed(z) {
        Ok(c) => println!(
            "closed = {:.17e}   imag_leak = {:.3e}",
            c.value, c.imag_leak
        ),
        Err(e) => println!("closed form unavailable here: {e}"),
    }
    Ok(())
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            println!("{:<4} {:<9} description", "id", "tol");
            for s in list_identities() {
                println!("{:<4} {:<9.0e} {}", s.id, s.default_tol, s.description);
            }
            Ok(0)
        }
        Command::Verify { id, common } => {
            let opts = VerifyOptions {
                tol: common.tol,
                max_terms: Some(common.max_terms),
                quad_budget: None,
            };
            let mut results = Vec::new();
            for one in id.split(',') {
                let one = one.trim();
                if one.is_empty() {
                    continue;
                }
                results.push(verify(one, &opts).map_err(|e| e.to_string())?);
            }
            if results.is_empty() {
                // Empty filter selects everything.
                results = verify_all(&opts);
            }
            Ok(emit(&results, &common))
        }
        Command::VerifyAll { common } => {
            let opts = VerifyOptions {
                tol: common.tol,
                max_terms: Some(common.max_terms),
                quad_budget: None,
            };
            let results = verify_all(&opts);
            Ok(emit(&results, &common))
        }
        Command::Eval { what } => {
            match what {
                EvalCommand::S3 { z, tol } => {
                    eval_series_pair(3, z, tol, s3_closed)?;
                }
                EvalCommand::S4 { z, tol } => {
                    eval_series_pair(4, z, tol, s4_closed)?;
                }
                EvalCommand::Thai { m } => {
                    let v = thai_rhs(m).map_err(|e| e.to_string())?;
                    println!("value = {v:.17e}");
                    if let Ok(z) = thai_z(m) {
                        println!("z     = {z:.17e}");
                    }
                }
                EvalCommand::Pfq {
                    upper,
                    lower,
                    z,
                    tol,
                } => {
                    let spec = PfqSpec::new(
                        parse_rational_list(&upper)?,
                        parse_rational_list(&lower)?,
                        z,
                    )
                    .map_err(|e| e.to_string())?;
                    let cfg = PrecisionConfig::new(tol, 2_000_000, 1).map_err(|e| e.to_string())?;
                    let v = pfq(&spec, &cfg).map_err(|e| e.to_string())?;
                    println!(
                        "value = {:.17e}   terms = {}   tail_bound = {:.3e}",
                        v.value, v.terms_used, v.tail_bound
                    );
                }
            }
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

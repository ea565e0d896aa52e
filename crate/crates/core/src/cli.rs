//! Command-line front-end. The binary only calls [`main_with_args`].
//!
//! ```text
//! lincomp solve --input seq.txt [--algorithm auto|bm|ggc|reduction|oracle] [--verify] [--json]
//! lincomp solve --field 3^2 --period 40 --seed 7 --verify
//! lincomp bench config.toml [--json]
//! lincomp --bench config.toml            # same as the bench subcommand
//! ```
//!
//! Exit status: 0 ok (and verified, when asked), 1 verification mismatch,
//! 2 usage or parse error, 3 algorithm inapplicable.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::{run_bench, BenchConfig};
use crate::error::{Error, Result};
use crate::field::{make_field, FieldSpec};
use crate::format::read_sequence_file;
use crate::poly::Poly;
use crate::report::RunReport;
use crate::sequence::{oracle_lincomp, verify_recurrence, LinCompResult, PeriodicSequence};
use crate::solve::{solve_with, Strategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lincomp", version, about = "Linear complexity of periodic sequences over GF(p^m)")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    /// Run the benchmark described by this TOML file.
    #[arg(long, value_name = "CONFIG", conflicts_with_all = ["input", "period"])]
    pub bench: Option<PathBuf>,
    #[command(flatten)]
    pub solve: SolveOptions,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the linear complexity of one sequence.
    Solve(SolveOptions),
    /// Run a seeded benchmark and check the cost bounds.
    Bench {
        config: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, Default, Args)]
pub struct SolveOptions {
    /// Sequence file; omit to generate a random sequence from --field, --period and --seed.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Field as `p` or `p^m`, optionally `:c0,c1,...,cm` for the modulus.
    #[arg(long, value_name = "FIELD")]
    pub field: Option<String>,
    /// Period of the generated sequence.
    #[arg(long, value_name = "N", requires = "field")]
    pub period: Option<usize>,
    #[arg(long, default_value = "auto", value_parser = ["auto", "bm", "ggc", "reduction", "oracle"])]
    pub algorithm: String,
    /// Cross-check against the generating-function oracle and the recurrence.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Corrupt the oracle answer so --verify must fail. For testing the exit status.
    #[arg(long, hide = true)]
    pub inject_mismatch: bool,
}

/// Parses `7`, `3^2` or `3^2:1,0,1`.
pub fn parse_field_arg(s: &str) -> Result<FieldSpec> {
    let bad = || Error::BadHeader(format!("bad field {s:?}, expected p, p^m or p^m:c0,...,cm"));
    let (size, modulus) = match s.split_once(':') {
        Some((a, b)) => {
            let coeffs = b
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            (a, Some(coeffs))
        }
        None => (s, None),
    };
    let (p, m) = match size.split_once('^') {
        Some((p, m)) => (p.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?),
        None => (size.trim().parse().map_err(|_| bad())?, 1),
    };
    make_field(p, m, modulus.as_deref())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inapplicable(_) | Error::NotPrimePowerPeriod { .. } => EXIT_INAPPLICABLE,
        _ => EXIT_USAGE,
    }
}

fn load_input(opts: &SolveOptions) -> Result<(String, PeriodicSequence)> {
    let field = opts.field.as_deref().map(parse_field_arg).transpose()?;
    match &opts.input {
        Some(path) => {
            let s = read_sequence_file(path)?;
            if let Some(f) = field {
                if &f != s.field() {
                    return Err(Error::BadHeader(format!("--field {f} conflicts with file header {}", s.field())));
                }
            }
            Ok((path.display().to_string(), s))
        }
        None => {
            let field = field.ok_or_else(|| Error::BadConfig("need --input, or --field with --period".into()))?;
            let n = opts.period.ok_or_else(|| Error::BadConfig("--period is required without --input".into()))?;
            if n == 0 {
                return Err(Error::EmptySequence);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            Ok((format!("random(seed={})", opts.seed), PeriodicSequence::random(&field, n, &mut rng)))
        }
    }
}

fn corrupted(r: LinCompResult) -> LinCompResult {
    let f = r.min_poly.field().clone();
    let one_minus_x = Poly::one_minus_x_pow(&f, 1);
    let ar = crate::field::Arith::new(&f);
    let min_poly = r.min_poly.mul(&one_minus_x, &ar).expect("same field");
    LinCompResult { complexity: r.complexity + 1, min_poly, ..r }
}

/// Runs one solve. The report's `verified` is `Some` iff `--verify` was given.
pub fn cmd_solve(opts: &SolveOptions) -> Result<RunReport> {
    let strategy: Strategy = opts.algorithm.parse()?;
    let (source, s) = load_input(opts)?;
    let start = Instant::now();
    let solution = solve_with(&s, strategy)?;
    let wall = start.elapsed().as_micros() as u64;
    let verified = if opts.verify {
        let mut oracle = oracle_lincomp(&s);
        if opts.inject_mismatch {
            oracle = corrupted(oracle);
        }
        Some(oracle.same_answer(&solution.result) && verify_recurrence(&s, &solution.result.min_poly)?)
    } else {
        None
    };
    Ok(RunReport::new(source, &s, strategy, &solution, verified, wall))
}

pub fn cmd_bench(config: &PathBuf, json: bool) -> Result<(String, bool)> {
    let cfg = BenchConfig::from_file(config)?;
    let report = run_bench(&cfg)?;
    let text = if json { report.to_json() } else { report.to_table() };
    Ok((text, report.violations == 0))
}

fn run(cli: Cli) -> i32 {
    let bench = match (&cli.command, &cli.bench) {
        (Some(Command::Bench { config, json }), _) => Some((config.clone(), *json)),
        (None, Some(config)) => Some((config.clone(), cli.solve.json)),
        _ => None,
    };
    if let Some((config, json)) = bench {
        return match cmd_bench(&config, json) {
            Ok((text, clean)) => {
                print!("{text}");
                if clean {
                    EXIT_OK
                } else {
                    eprintln!("error: cost bound violated or algorithms disagree");
                    EXIT_MISMATCH
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit_code(&e)
            }
        };
    }
    let opts = match cli.command {
        Some(Command::Solve(o)) => o,
        _ => cli.solve,
    };
    match cmd_solve(&opts) {
        Ok(report) => {
            if opts.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.verified == Some(false) {
                eprintln!("error: verification mismatch");
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses arguments and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

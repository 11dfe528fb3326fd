//! Command-line front end: analyze, decompose, ideal, verify, sweep.
//!
//! Exit codes: 0 success, 1 usage or malformed input, 2 resource limit,
//! 3 theorem violation found by a sweep.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use monocurve::theorems::CheckSelection;
use monocurve::{
    decompose_at, minimal_generators, report, singularity_report, sweep, verify_suite,
    AnalysisOptions, Error as CoreError, NormalForm, RawSet,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_LIMIT: i32 = 2;
const EXIT_VIOLATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "monocurve",
    about = "Iterated sumsets and monomial projective curve invariants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on one set: growth table, asymptotic polynomial,
    /// singularities, decomposition, ideal generators, theorem verdicts.
    Analyze {
        /// Comma-separated non-negative integers, e.g. 0,2,4,5,7
        set: String,
        /// Growth table length (default: rho + 4)
        #[arg(long)]
        s_max: Option<u64>,
        /// Generator degree cap (default: rho + 1)
        #[arg(long)]
        degree_cap: Option<u64>,
        /// Fold at which to report the decomposition (default: sigma)
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Three-block decomposition of sA at one fold.
    Decompose {
        set: String,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        json: bool,
    },
    /// Minimal binomial generators of the defining ideal.
    Ideal {
        set: String,
        /// Generator degree cap (default: rho + 1)
        #[arg(long)]
        degree_cap: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the whole verification suite on one set.
    Verify {
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all normalized sets up to the given bounds, verify each,
    /// and emit one CSV row per set.
    Sweep {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        a_max: u64,
        /// Check groups to run: "all" or a comma list of
        /// growth,hilbert,semigroup,decomposition,lev,rigidity,ideal,cm
        #[arg(long, default_value = "all")]
        checks: String,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            if e.is_resource_limit() {
                EXIT_LIMIT
            } else {
                EXIT_USAGE
            }
        }
    }
}

enum CliError {
    Usage(String),
    Core(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

fn parse_set(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("'{part}' is not a non-negative integer")))
        })
        .collect()
}

fn normal_form(text: &str) -> Result<NormalForm, CliError> {
    Ok(RawSet::new(parse_set(text)?)?.normalize()?)
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze {
            set,
            s_max,
            degree_cap,
            s,
            json,
        } => {
            let elements = parse_set(&set)?;
            let opts = AnalysisOptions {
                s_max,
                degree_cap,
                decompose_at: s,
            };
            let report = report::analyze(&elements, &opts)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { set, s, json } => {
            let a = normal_form(&set)?;
            let d = decompose_at(&a, s)?;
            let sing = singularity_report(&a)?;
            if json {
                #[derive(Serialize)]
                struct DecomposeOutput {
                    decomposition: monocurve::Decomposition,
                    delta1: u64,
                    delta2: u64,
                }
                println!(
                    "{}",
                    to_json(&DecomposeOutput {
                        decomposition: d,
                        delta1: sing.delta1,
                        delta2: sing.delta2,
                    })
                );
            } else {
                println!("{}A = {}", d.s, d.render());
                if d.valid {
                    println!(
                        "valid; c1 = {}, C1 = {:?}, c2 = {}, C2 = {:?}",
                        d.c1, d.small1, d.c2, d.small2
                    );
                    println!(
                        "delta1 = {} = c1 - |C1|, delta2 = {} = c2 - |C2|",
                        sing.delta1, sing.delta2
                    );
                } else {
                    let reason = match d.reason {
                        Some(monocurve::DecompositionDefect::IntervalEmpty) => "interval empty",
                        _ => "set mismatch",
                    };
                    println!("invalid, reason \"{reason}\"");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Ideal {
            set,
            degree_cap,
            json,
        } => {
            let a = normal_form(&set)?;
            let cap = degree_cap.unwrap_or_else(|| monocurve::default_degree_cap(&a));
            let gens = minimal_generators(&a, cap)?;
            if json {
                println!("{}", to_json(&gens));
            } else {
                println!(
                    "{} minimal generators up to degree {}:",
                    gens.generators.len(),
                    gens.degree_cap
                );
                for g in &gens.generators {
                    println!(
                        "  {}   [degree {}, A-degree {}]",
                        g.binomial.render(),
                        g.degree,
                        g.a_degree
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { set, json } => {
            let a = normal_form(&set)?;
            let suite = verify_suite(&a)?;
            if json {
                println!("{}", to_json(&suite));
            } else {
                for r in &suite.reports {
                    match &r.witness {
                        None => println!("{}: holds", r.id),
                        Some(w) => println!("{}: FAILS ({w})", r.id),
                    }
                }
                println!(
                    "cm = {}, sigma = {}, r = {}, rho = {}, generators = {}",
                    suite.cm,
                    suite.stabilization.sigma_empirical,
                    suite.hilbert.r,
                    suite.hilbert.rho,
                    suite.generators.generators.len()
                );
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            n_max,
            a_max,
            checks,
        } => {
            let selection = CheckSelection::parse(&checks).map_err(CliError::Usage)?;
            let cfg = sweep::SweepConfig {
                n_max,
                a_max,
                checks: selection,
                parallel: true,
            };
            let outcome = sweep::run_sweep(&cfg)?;
            println!("{}", sweep::CSV_HEADER);
            for row in &outcome.rows {
                println!("{}", row.to_csv());
            }
            if outcome.failures.is_empty() {
                Ok(EXIT_OK)
            } else {
                for f in &outcome.failures {
                    eprintln!("FAIL {:?} {}: {}", f.set, f.check, f.witness);
                }
                Ok(EXIT_VIOLATION)
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization is infallible")
}

//! Command-line surface for the Stanley decomposition toolkit.
//!
//! Ideals are passed inline in the grammar `"n=3; x1^3, x2^2*x3^2"`.
//! Exit codes: 0 on success (and zero violations), 1 when a computed
//! answer is negative (invalid decomposition, property violations), 2 on
//! usage or precondition errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sdepth_core::construct;
use sdepth_core::decomp::{verify, verify_exhaustive, StanleyDecomposition};
use sdepth_core::harness::{random_ideal, run_campaign, CampaignSpec, PropertyId, Ranges};
use sdepth_core::oracle::{self, Budgets};
use sdepth_core::text::{decomposition_text, ideal_text, parse_decomposition, parse_ideal};
use sdepth_core::{Error, MonomialIdeal, Target};

#[derive(Parser)]
#[command(
    name = "sdepth",
    version,
    about = "Stanley decompositions and Stanley depth of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetKind {
    Ideal,
    Quotient,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Auto,
    Janet,
    ThreeGen,
    Saturated3,
    Small,
}

#[derive(Subcommand)]
enum Cmd {
    /// Echo the canonical form of an ideal
    Parse { ideal: String },
    /// Print the gcd factorization I = v * I'
    Reduce { ideal: String },
    /// Build a verified Stanley decomposition
    Decompose {
        ideal: String,
        #[arg(long, value_enum, default_value = "ideal")]
        target: TargetKind,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: Strategy,
        /// Also write the decomposition file here
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the construction trace as comment lines
        #[arg(long)]
        trace: bool,
    },
    /// Check a decomposition file
    Verify {
        file: PathBuf,
        /// Report every violation instead of the first
        #[arg(long)]
        all_violations: bool,
    },
    /// Exact Stanley depth by exhaustive interval-partition search
    Sdepth {
        ideal: String,
        #[arg(long, value_enum, default_value = "ideal")]
        target: TargetKind,
        /// Per-variable poset cap, e.g. "3,3,2" (defaults to the degrees)
        #[arg(long)]
        bound: Option<String>,
        /// Write the witness partition as a decomposition file
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, default_value_t = Budgets::default().poset_budget)]
        poset_budget: usize,
    },
    /// Exact depth of S/I via multigraded Koszul homology
    Depth {
        ideal: String,
        #[arg(long, default_value_t = Budgets::default().betti_max_gens)]
        betti_gens: usize,
        #[arg(long, default_value_t = Budgets::default().betti_max_vars)]
        betti_vars: usize,
    },
    /// Run a seeded property campaign and print its JSON report
    Check {
        #[arg(long)]
        property: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 3)]
        g: usize,
        /// Also write the JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
        /// Worker threads (results are independent of this)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = Budgets::default().poset_budget)]
        poset_budget: usize,
    },
    /// Emit a seeded random ideal
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 3)]
        g: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn target_for(kind: TargetKind, ideal: MonomialIdeal) -> Target {
    match kind {
        TargetKind::Ideal => Target::Ideal(ideal),
        TargetKind::Quotient => Target::Quotient(ideal),
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Parse { ideal } => {
            println!("{}", ideal_text(&parse_ideal(&ideal)?));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { ideal } => {
            let i = parse_ideal(&ideal)?;
            let (v, prime) = i.gcd_part()?;
            println!("v: {v}");
            println!("I': {}", ideal_text(&prime));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decompose {
            ideal,
            target,
            strategy,
            output,
            trace,
        } => {
            let i = parse_ideal(&ideal)?;
            let (d, log) = decompose(&i, target, strategy)?;
            let mut text = decomposition_text(&d);
            let report = verify(&d);
            text.push_str(&format!("# sdepth: {}\n", report.sdepth));
            text.push_str(&format!(
                "# status: {}\n",
                if report.valid { "valid" } else { "invalid" }
            ));
            if trace {
                match &log {
                    Some(log) => {
                        for line in log.lines() {
                            text.push_str(&format!("# {line}\n"));
                        }
                    }
                    None => text.push_str("# trace: none\n"),
                }
            }
            print!("{text}");
            if let Some(path) = output {
                fs::write(&path, &text).map_err(|e| io_error(&path, e))?;
            }
            if report.valid {
                Ok(ExitCode::SUCCESS)
            } else {
                if let Some(v) = report.violation {
                    eprintln!("invalid decomposition: {v}");
                }
                Ok(ExitCode::FAILURE)
            }
        }
        Cmd::Verify {
            file,
            all_violations,
        } => {
            let text = fs::read_to_string(&file).map_err(|e| io_error(&file, e))?;
            let d = parse_decomposition(&text)?;
            if all_violations {
                let violations = verify_exhaustive(&d);
                if violations.is_empty() {
                    println!("valid; sdepth {}", verify(&d).sdepth);
                    Ok(ExitCode::SUCCESS)
                } else {
                    for v in &violations {
                        println!("invalid: {v}");
                    }
                    Ok(ExitCode::FAILURE)
                }
            } else {
                let report = verify(&d);
                if report.valid {
                    println!("valid; sdepth {}", report.sdepth);
                    Ok(ExitCode::SUCCESS)
                } else {
                    println!(
                        "invalid: {}",
                        report.violation.expect("invalid report carries a witness")
                    );
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Cmd::Sdepth {
            ideal,
            target,
            bound,
            witness,
            poset_budget,
        } => {
            let i = parse_ideal(&ideal)?;
            let budgets = Budgets {
                poset_budget,
                ..Budgets::default()
            };
            let bound = bound.map(|b| parse_bound(&b)).transpose()?;
            let t = target_for(target, i);
            let (value, partition) = oracle::sdepth_exact(&t, bound.as_deref(), &budgets)?;
            println!("{value}");
            if let Some(path) = witness {
                let d = partition.to_decomposition(&t);
                fs::write(&path, decomposition_text(&d)).map_err(|e| io_error(&path, e))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Depth {
            ideal,
            betti_gens,
            betti_vars,
        } => {
            let i = parse_ideal(&ideal)?;
            let budgets = Budgets {
                betti_max_gens: betti_gens,
                betti_max_vars: betti_vars,
                ..Budgets::default()
            };
            println!("{}", oracle::depth_exact(&i, &budgets)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check {
            property,
            seed,
            samples,
            n,
            max_degree,
            g,
            output,
            jobs,
            poset_budget,
        } => {
            let spec = CampaignSpec {
                property: property.parse::<PropertyId>()?,
                samples,
                seed,
                ranges: Ranges { n, max_degree, g },
            };
            let budgets = Budgets {
                poset_budget,
                ..Budgets::default()
            };
            let report = run_campaign(&spec, &budgets, jobs)?;
            let json = report.to_json();
            println!("{json}");
            if let Some(path) = output {
                fs::write(&path, &json).map_err(|e| io_error(&path, e))?;
            }
            eprintln!(
                "property {}: {} checked, {} skipped, {} violations, {} ms",
                report.property,
                report.checked,
                report.skipped,
                report.violations.len(),
                report.elapsed_ms
            );
            if report.violations.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Cmd::Random {
            seed,
            n,
            max_degree,
            g,
        } => {
            println!("{}", ideal_text(&random_ideal(seed, n, max_degree, g)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn decompose(
    ideal: &MonomialIdeal,
    target: TargetKind,
    strategy: Strategy,
) -> Result<(StanleyDecomposition, Option<String>), Error> {
    let plain = |d: StanleyDecomposition| (d, None);
    let traced = |t: construct::ConstructionTrace| {
        let log = t.log();
        (t.result, Some(log))
    };
    let stats = ideal.stats();
    let small_applies = !stats.is_principal && (stats.g == 2 || stats.c == 2);
    Ok(match (target, strategy) {
        (TargetKind::Ideal, Strategy::Auto) => {
            if stats.is_principal {
                plain(construct::janet_ideal(ideal)?)
            } else if small_applies {
                plain(construct::small_ideal(ideal)?)
            } else if stats.g == 3 {
                traced(construct::three_gen_ideal(ideal)?)
            } else if ideal.dim() == 3 && ideal.is_proper() && ideal.saturate().1 {
                traced(construct::saturated_3var(ideal)?)
            } else {
                plain(construct::janet_ideal(ideal)?)
            }
        }
        (TargetKind::Quotient, Strategy::Auto) => {
            if stats.is_principal && ideal.is_proper() {
                plain(construct::principal_complement(&ideal.gens()[0])?)
            } else if small_applies {
                plain(construct::small_quotient(ideal)?)
            } else if stats.g == 3 {
                traced(construct::three_gen_quotient(ideal)?)
            } else {
                plain(construct::janet_quotient(ideal)?)
            }
        }
        (TargetKind::Ideal, Strategy::Janet) => plain(construct::janet_ideal(ideal)?),
        (TargetKind::Quotient, Strategy::Janet) => plain(construct::janet_quotient(ideal)?),
        (TargetKind::Ideal, Strategy::ThreeGen) => traced(construct::three_gen_ideal(ideal)?),
        (TargetKind::Quotient, Strategy::ThreeGen) => traced(construct::three_gen_quotient(ideal)?),
        (TargetKind::Ideal, Strategy::Saturated3) => traced(construct::saturated_3var(ideal)?),
        (TargetKind::Quotient, Strategy::Saturated3) => {
            return Err(Error::NotApplicable(
                "saturated3 builds ideal decompositions; use --target ideal".into(),
            ))
        }
        (TargetKind::Ideal, Strategy::Small) => plain(construct::small_ideal(ideal)?),
        (TargetKind::Quotient, Strategy::Small) => plain(construct::small_quotient(ideal)?),
    })
}

fn parse_bound(s: &str) -> Result<Vec<u32>, Error> {
    s.split(',')
        .map(|part| {
            part.trim().parse::<u32>().map_err(|_| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("invalid bound entry `{part}`"),
            })
        })
        .collect()
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::NotApplicable(format!("{}: {e}", path.display()))
}

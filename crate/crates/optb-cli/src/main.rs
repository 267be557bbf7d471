use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use optb_cli::commands::{self, AnalyzeOptions, TwistChoice, DEFAULT_MAX_N};
use optb_cli::render;
use optb_cli::report::to_json;
use optb_core::conditions::{ComponentEvidence, DefinitionField};
use optb_core::families::{self, Family};
use optb_core::reps::RepType;
use optb_core::{Error, Result};

/// Reducible SL2 representations, twisted Alexander invariants and Azumaya
/// extension verdicts for once-punctured torus bundles.
#[derive(Parser)]
#[command(name = "optb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monodromy, homology, (star1)/(star2), representations, verdict and primes.
    Analyze {
        word: String,
        /// Field of definition: Q, Q(i), Q(sqrt(d)) or Q(zeta_m).
        #[arg(long, default_value = "Q")]
        field: DefinitionField,
        /// Component evidence, e.g. A=present,B=absent,C=unknown.
        #[arg(long, default_value = "")]
        evidence: String,
        /// The component is a canonical component.
        #[arg(long)]
        canonical: bool,
        /// Assert that the component contains irreducible characters.
        #[arg(long)]
        irreducible: bool,
        /// Also run the finite-field scan up to this bound.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        twisted_scan: bool,
        /// Skip the Type B/C enumeration when n exceeds this.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Twisted Alexander invariants Delta0 and Delta1.
    Alexander {
        word: String,
        /// trivial, or x=zeta(m)^a,y=zeta(m)^b
        #[arg(long, conflicts_with = "all_twists")]
        twist: Option<TwistChoice>,
        /// Every twist with values in the n-th roots of unity.
        #[arg(long)]
        all_twists: bool,
        /// Reduce modulo this prime.
        #[arg(long)]
        modp: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Type A, B and C representations with exact verification.
    Reps {
        word: String,
        #[arg(long = "type", value_parser = parse_rep_type)]
        kind: Option<RepType>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u64,
        /// Print every matrix.
        #[arg(long)]
        matrices: bool,
        #[arg(long)]
        json: bool,
    },
    /// Candidate bad primes and the finite-field scan.
    Primes {
        word: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        twisted_scan: bool,
        #[arg(long)]
        json: bool,
    },
    /// Example families and their cited expectations.
    Family {
        /// tunnel_one, fib_cover or census_m135
        name: Family,
        /// Inclusive index range a..b.
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
        /// Recompute every expectation and report pass/fail.
        #[arg(long)]
        check: bool,
        /// Write one fixture file per index into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_rep_type(s: &str) -> std::result::Result<RepType, String> {
    match s.trim().to_ascii_uppercase().as_str() {
        "A" => Ok(RepType::A),
        "B" => Ok(RepType::B),
        "C" => Ok(RepType::C),
        _ => Err(format!("type must be A, B or C, got {s:?}")),
    }
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("range must look like 1..10, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok((a, b))
}

fn emit(out: String) {
    print!("{out}");
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { word, field, evidence, canonical, irreducible, bound, twisted_scan, max_n, json } => {
            let opts = AnalyzeOptions {
                word,
                field,
                evidence: ComponentEvidence::parse_assignments(&evidence, canonical)?,
                irreducible,
                bound,
                twisted_scan,
                max_n,
            };
            let r = commands::analyze(&opts)?;
            emit(if json { to_json(&r) } else { render::report(&r, false) });
        }
        Command::Alexander { word, twist, all_twists, modp, json } => {
            let choice = if all_twists { TwistChoice::All } else { twist.unwrap_or(TwistChoice::Trivial) };
            let r = commands::alexander(&word, &choice, modp)?;
            emit(if json { to_json(&r) } else { render::report(&r, false) });
        }
        Command::Reps { word, kind, max_n, matrices, json } => {
            let r = commands::reps(&word, kind, max_n)?;
            emit(if json { to_json(&r) } else { render::report(&r, matrices) });
        }
        Command::Primes { word, bound, twisted_scan, json } => {
            let r = commands::primes(&word, bound, twisted_scan)?;
            emit(if json { to_json(&r) } else { render::report(&r, false) });
        }
        Command::Family { name, range, check, emit: dir, json } => {
            if let Some(dir) = dir {
                let (lo, hi) = range.unwrap_or_else(|| commands::default_range(name));
                std::fs::create_dir_all(&dir).map_err(|e| Error::InvalidArgument(format!("{}: {e}", dir.display())))?;
                for f in families::fixtures(name, lo..=hi)? {
                    let path = dir.join(commands::fixture_file_name(&f));
                    std::fs::write(&path, to_json(&commands::fixture_file(&f)?))
                        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
                    println!("wrote {}", path.display());
                }
                return Ok(ExitCode::SUCCESS);
            }
            let r = commands::family(name, range, check)?;
            emit(if json { to_json(&r) } else { render::family(&r) });
            if r.pass == Some(false) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("optb: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}

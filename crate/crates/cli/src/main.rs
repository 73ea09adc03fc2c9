//! `bicurve`: numerical semigroup queries and glued-curve reports.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicurve::constructions::{
    default_scale, plot_data, BiAmalgSpec, BuildOptions, Convention, DoubleTiePolicy,
};
use bicurve::oracle::{oracle_compare, oracle_value_set, OracleMode};
use bicurve::{Error, NumericalSemigroup};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bicurve_cli::input::InputSpecFile;
use bicurve_cli::render;
use bicurve_cli::report::{OracleSummary, ReportDocument, VERSION};

#[derive(Parser)]
#[command(name = "bicurve", version, about = "Value semigroups of glued monomial curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the numerical semigroup generated by GENS.
    Numsgp {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<i64>,
        /// Also print the Apéry set with respect to N.
        #[arg(long, value_name = "N")]
        apery: Option<i64>,
        /// Also print the canonical ideal up to the conductor.
        #[arg(long)]
        canonical: bool,
    },
    /// Build a spec file and print the JSON report.
    Construct {
        spec: PathBuf,
        #[arg(long, value_enum)]
        plot: Option<PlotFormat>,
        /// Where to write the plot; ASCII defaults to stdout.
        #[arg(long, value_name = "PATH")]
        plot_out: Option<PathBuf>,
        /// Upper corner of the plot in displayed coordinates.
        #[arg(long, value_name = "X,Y", value_parser = pair)]
        plot_window: Option<[i64; 2]>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Intrinsic)]
        convention: ConventionArg,
        /// Axis factors for the scaled convention.
        #[arg(long, value_name = "A,B", value_parser = pair)]
        scale: Option<[i64; 2]>,
        /// Compare with the brute-force oracle; exit 3 on disagreement.
        #[arg(long)]
        oracle_check: bool,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Refuse to build when both coordinates can cancel below the window.
        #[arg(long)]
        strict_ties: bool,
    },
    /// Run the brute-force oracle on a spec file.
    Oracle {
        spec: PathBuf,
        #[arg(long)]
        prime: Option<u32>,
        #[arg(long)]
        truncation: Option<usize>,
        #[arg(long, conflicts_with = "trials")]
        budget: Option<usize>,
        /// Random mode with this many samples of the shared element.
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, requires = "trials")]
        seed: Option<u64>,
        #[arg(long, requires = "trials")]
        partitions: Option<u64>,
        #[arg(long, value_name = "X,Y", value_parser = pair)]
        window: Option<[i64; 2]>,
        /// Include a witness element for every point.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Svg,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Intrinsic,
    Scaled,
}

fn pair(s: &str) -> Result<[i64; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts[..] {
        [a, b] => Ok([
            a.parse().map_err(|e| format!("{a}: {e}"))?,
            b.parse().map_err(|e| format!("{b}: {e}"))?,
        ]),
        _ => Err(format!("expected two comma-separated integers, got {s:?}")),
    }
}

/// Why a command stopped; each maps to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Validation(String),
    Mismatch,
    DoubleTie(Vec<[i64; 2]>),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Mismatch => 3,
            Failure::DoubleTie(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DoubleTieUnresolved(points) => Failure::DoubleTie(points),
            other => Failure::Validation(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Numsgp { gens, apery, canonical } => numsgp(&gens, apery, canonical),
        Command::Construct {
            spec,
            plot,
            plot_out,
            plot_window,
            convention,
            scale,
            oracle_check,
            out,
            strict_ties,
        } => construct(ConstructArgs {
            spec,
            plot,
            plot_out,
            plot_window,
            convention,
            scale,
            oracle_check,
            out,
            strict_ties,
        }),
        Command::Oracle { spec, prime, truncation, budget, trials, seed, partitions, window, witnesses, out } => {
            oracle(OracleArgs { spec, prime, truncation, budget, trials, seed, partitions, window, witnesses, out })
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Validation(m) => eprintln!("invalid spec: {m}"),
                Failure::Mismatch => eprintln!("oracle disagrees with the fast computation"),
                Failure::DoubleTie(points) => {
                    eprintln!("unresolved double ties at {points:?}; rerun with --oracle-check")
                }
            }
            ExitCode::from(failure.code())
        }
    }
}

fn list(xs: impl IntoIterator<Item = i64>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn numsgp(gens: &[i64], apery: Option<i64>, canonical: bool) -> Result<(), Failure> {
    let s = NumericalSemigroup::from_generators(gens).map_err(|e| Failure::Usage(e.to_string()))?;
    let inv = s.invariants();
    let mut out = String::new();
    writeln!(out, "semigroup {s}").unwrap();
    writeln!(out, "frobenius {}", inv.frobenius).unwrap();
    writeln!(out, "conductor {}", inv.conductor).unwrap();
    writeln!(out, "multiplicity {}", inv.multiplicity).unwrap();
    writeln!(out, "gaps {}", list(inv.gaps.iter().copied())).unwrap();
    writeln!(out, "genus {}", inv.genus).unwrap();
    if s.is_naturals() {
        writeln!(out, "symmetric true (convention for N)").unwrap();
    } else {
        writeln!(out, "symmetric {}", s.is_symmetric()).unwrap();
    }
    if let Some(n) = apery {
        let ap = s.apery(n).map_err(|e| Failure::Usage(e.to_string()))?;
        writeln!(out, "apery({n}) {}", list(ap)).unwrap();
    }
    if canonical {
        match s.canonical_ideal() {
            Ok(k) => writeln!(out, "canonical {k}").unwrap(),
            Err(_) => writeln!(out, "canonical {{0,1,...}} (degenerate: S = N)").unwrap(),
        }
    }
    print!("{out}");
    Ok(())
}

fn read_spec(path: &Path) -> Result<(InputSpecFile, BiAmalgSpec), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let input = InputSpecFile::parse(&text)
        .map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))?;
    let data = input.to_data().map_err(|e| Failure::Validation(e.to_string()))?;
    match BiAmalgSpec::from_data(&data) {
        Ok(spec) => Ok((input, spec)),
        Err(report) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
            Err(Failure::Validation(format!("{} issue(s)", report.issues.len())))
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

struct ConstructArgs {
    spec: PathBuf,
    plot: Option<PlotFormat>,
    plot_out: Option<PathBuf>,
    plot_window: Option<[i64; 2]>,
    convention: ConventionArg,
    scale: Option<[i64; 2]>,
    oracle_check: bool,
    out: Option<PathBuf>,
    strict_ties: bool,
}

fn construct(args: ConstructArgs) -> Result<(), Failure> {
    if matches!(args.plot, Some(PlotFormat::Svg)) && args.plot_out.is_none() {
        return Err(Failure::Usage("--plot svg needs --plot-out".into()));
    }
    if args.scale.is_some() && args.convention != ConventionArg::Scaled {
        return Err(Failure::Usage("--scale needs --convention scaled".into()));
    }
    let (input, spec) = read_spec(&args.spec)?;
    // with an oracle at hand, double ties are settled by comparison instead
    let policy = if args.strict_ties && !args.oracle_check {
        DoubleTiePolicy::Escalate
    } else {
        DoubleTiePolicy::Reduce
    };
    let options = BuildOptions { window: input.window, double_ties: policy, ..Default::default() };
    let (mut doc, semigroup) = ReportDocument::build(&input, &spec, &options)?;

    let mut mismatch = false;
    if args.oracle_check {
        let config = input.oracle_config().map_err(|e| Failure::Validation(e.to_string()))?;
        let outcome = oracle_value_set(&spec, &config)?;
        let summary = OracleSummary::new(config, &outcome, &semigroup);
        mismatch = !summary.comparison.agrees();
        doc.oracle = Some(summary);
    }
    emit(&doc.to_json(), &args.out)?;

    if let Some(format) = args.plot {
        let convention = match args.convention {
            ConventionArg::Intrinsic => Convention::Intrinsic,
            ConventionArg::Scaled => Convention::Scaled(args.scale.unwrap_or_else(|| default_scale(&spec))),
        };
        let scale = match convention {
            Convention::Intrinsic => [1, 1],
            Convention::Scaled(s) => s,
        };
        let delta = semigroup.delta();
        let window = args
            .plot_window
            .unwrap_or([scale[0] * (delta[0] + 2), scale[1] * (delta[1] + 2)]);
        let grid = plot_data(&spec, &semigroup, window, convention)?;
        let text = match format {
            PlotFormat::Svg => render::svg(&grid),
            PlotFormat::Ascii => render::ascii(&grid),
        };
        emit(&text, &args.plot_out)?;
    }
    if mismatch {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

struct OracleArgs {
    spec: PathBuf,
    prime: Option<u32>,
    truncation: Option<usize>,
    budget: Option<usize>,
    trials: Option<u64>,
    seed: Option<u64>,
    partitions: Option<u64>,
    window: Option<[i64; 2]>,
    witnesses: bool,
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct PointEntry {
    point: [i64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<bicurve::oracle::Witness>,
}

#[derive(Serialize)]
struct OracleDocument {
    version: String,
    summary: OracleSummary,
    points: Vec<PointEntry>,
}

fn oracle(args: OracleArgs) -> Result<(), Failure> {
    let (input, spec) = read_spec(&args.spec)?;
    let mut config = input.oracle_config().map_err(|e| Failure::Validation(e.to_string()))?;
    if let Some(p) = args.prime {
        config.prime = p;
    }
    if let Some(n) = args.truncation {
        config.truncation = n;
    }
    if let Some(w) = args.window {
        config.window = Some(w);
    }
    if let Some(budget) = args.budget {
        config.mode = OracleMode::Exhaustive { budget };
    }
    if let Some(trials) = args.trials {
        config.mode = OracleMode::Random {
            trials,
            seed: args.seed.unwrap_or(0),
            partitions: args.partitions.unwrap_or(4),
        };
    }
    let outcome = oracle_value_set(&spec, &config)?;
    let options = BuildOptions { window: input.window, ..Default::default() };
    let fast = bicurve::constructions::value_semigroup(&spec, &options)?;
    let summary = OracleSummary::new(config, &outcome, &fast);
    let comparison = oracle_compare(&fast, &outcome.point_set(), outcome.window);
    // an incomplete run may miss values, but never finds one the fast set lacks
    let contradicts = !comparison.completeness.is_empty()
        || (outcome.saturation.complete && !comparison.soundness.is_empty());
    let doc = OracleDocument {
        version: VERSION.into(),
        summary,
        points: outcome
            .points
            .iter()
            .map(|(p, w)| PointEntry { point: *p, witness: args.witnesses.then(|| w.clone()) })
            .collect(),
    };
    emit(&(serde_json::to_string_pretty(&doc).expect("serializes") + "\n"), &args.out)?;
    if contradicts {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

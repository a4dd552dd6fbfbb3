//! Command-line front end: experiment execution, parameter sweeps, bound
//! tables, the statistical self-check battery, and chart rendering.
//!
//! The library exposes [`run`] so integration tests can drive the full
//! argument-to-exit-code path in process; the binary is a thin wrapper.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use mnl_bandits::{
    environment, parse_csv, render_svg, run_checks, run_experiment_with, BoundsReport, Error,
    ExperimentConfig, Series,
};

/// Exit code for a clean run.
pub const EXIT_OK: i32 = 0;
/// Exit code when a requested check or a runtime operation failed.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code when configuration, parameters, or input files were invalid.
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser)]
#[command(
    name = "mnl-bandits",
    version,
    about = "Subset-play bandit simulations under a multinomial-logit choice model",
    after_help = "Exit codes: 0 success, 1 failed checks or runtime failure, 2 invalid \
                  configuration or inputs."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment from a config file and write CSV/metadata artifacts
    Simulate(SimulateArgs),
    /// Run one experiment per value of a single swept config key
    Sweep(SweepArgs),
    /// Print instance-dependent regret-bound constants for a preset
    Bounds(BoundsArgs),
    /// Run the statistical self-check battery
    Validate(ValidateArgs),
    /// Render one or more result CSVs as a standalone SVG line chart
    Plot(PlotArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Path to a key = value config file
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides the config's `out`; default ".")
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write run 0's pairwise win counts as `<stem>.stats.csv` (schema i,j,wins)
    #[arg(long)]
    dump_stats: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Path to the base key = value config file
    #[arg(long)]
    config: PathBuf,
    /// Swept key and values, e.g. `m=1,5,10,20` (numeric keys only)
    #[arg(long)]
    vary: String,
    /// Output directory (overrides the config's `out`; default ".")
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Preset environment name (g1, g4, arith, geo, har, arithb, geob)
    #[arg(long)]
    env: String,
    /// Subset-size budget the bounds are evaluated at
    #[arg(long, default_value_t = 10)]
    k: usize,
    /// Feedback length the bounds are evaluated at
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Exploration exponent (must exceed 0.5)
    #[arg(long, default_value_t = 0.51)]
    alpha: f64,
    /// Confidence parameter in (0, 1)
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
}

#[derive(Args)]
struct ValidateArgs {
    /// Reduced sample sizes with proportionally looser limits
    #[arg(long)]
    quick: bool,
}

#[derive(Args)]
struct PlotArgs {
    /// Result CSV files (header checkpoint_t,mean_cum_regret,std_cum_regret)
    #[arg(required = true)]
    csvs: Vec<PathBuf>,
    /// Output SVG path
    #[arg(long)]
    out: PathBuf,
    /// Log-scale the round axis
    #[arg(long)]
    logx: bool,
}

/// Parses the argument list (including the program name) and executes one
/// subcommand, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_CONFIG,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Simulate(args) => simulate(&args),
        Command::Sweep(args) => sweep(&args),
        Command::Bounds(args) => bounds(&args),
        Command::Validate(args) => return validate(&args),
        Command::Plot(args) => plot(&args),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

/// I/O failures are runtime failures; every other error class means the
/// user-supplied configuration, parameters, or input files were invalid.
fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_FAILURE,
        _ => EXIT_CONFIG,
    }
}

fn load_config(path: &Path, out_override: Option<&Path>) -> Result<ExperimentConfig, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Config { line: 0, msg: format!("cannot read {}: {e}", path.display()) }
    })?;
    let mut cfg = ExperimentConfig::parse(&text)?;
    if let Some(dir) = out_override {
        cfg.out = Some(dir.display().to_string());
    }
    Ok(cfg)
}

fn output_dir(cfg: &ExperimentConfig) -> PathBuf {
    cfg.out.as_deref().map_or_else(|| PathBuf::from("."), PathBuf::from)
}

fn simulate(args: &SimulateArgs) -> Result<(), Error> {
    let cfg = load_config(&args.config, args.out.as_deref())?;
    cfg.validate()?;
    let result = run_experiment_with(&cfg, args.dump_stats)?;
    let written = mnl_bandits::write_outputs(&result, &output_dir(&cfg))?;
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Applies one swept value to a copy of the base config.
fn apply_sweep_value(cfg: &ExperimentConfig, key: &str, value: &str) -> Result<ExperimentConfig, Error> {
    let bad = |what: &str| Error::Config {
        line: 0,
        msg: format!("sweep value '{value}' for '{key}' is not a valid {what}"),
    };
    let mut cfg = cfg.clone();
    match key {
        "k" => cfg.k = value.parse().map_err(|_| bad("size"))?,
        "m" => cfg.m = value.parse().map_err(|_| bad("size"))?,
        "horizon" => cfg.horizon = value.parse().map_err(|_| bad("round count"))?,
        "runs" => cfg.runs = value.parse().map_err(|_| bad("run count"))?,
        "seed" => cfg.seed = value.parse().map_err(|_| bad("seed"))?,
        "alpha" => cfg.alpha = value.parse().map_err(|_| bad("number"))?,
        "checkpoints" => cfg.checkpoints = value.parse().map_err(|_| bad("count"))?,
        other => {
            return Err(Error::Config {
                line: 0,
                msg: format!("cannot sweep key '{other}' (numeric keys only)"),
            })
        }
    }
    Ok(cfg)
}

fn sweep(args: &SweepArgs) -> Result<(), Error> {
    let base = load_config(&args.config, args.out.as_deref())?;
    let (key, values) = args.vary.split_once('=').ok_or_else(|| Error::Config {
        line: 0,
        msg: format!("--vary expects key=v1,v2,... , got '{}'", args.vary),
    })?;
    let values: Vec<&str> = values.split(',').filter(|v| !v.is_empty()).collect();
    if values.is_empty() {
        return Err(Error::Config {
            line: 0,
            msg: format!("--vary '{}' lists no values", args.vary),
        });
    }
    // Validate the whole sweep before running anything so a bad value
    // cannot leave partial outputs behind.
    let configs = values
        .iter()
        .map(|value| {
            let cfg = apply_sweep_value(&base, key, value)?;
            cfg.validate()?;
            Ok((*value, cfg))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let dir = output_dir(&base);
    // k and m already distinguish the artifact stems; other keys get a
    // per-value subdirectory so sweep outputs never overwrite each other.
    let subdir_per_value = !matches!(key, "k" | "m");
    for (value, cfg) in configs {
        let result = run_experiment_with(&cfg, false)?;
        let value_dir =
            if subdir_per_value { dir.join(format!("{key}-{value}")) } else { dir.clone() };
        let written = mnl_bandits::write_outputs(&result, &value_dir)?;
        for path in written {
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn bounds(args: &BoundsArgs) -> Result<(), Error> {
    let inst = environment(&args.env)?;
    let report = BoundsReport::compute(&inst, args.k, args.m, args.alpha, args.delta)?;
    print!("{}", report.render());
    Ok(())
}

fn validate(args: &ValidateArgs) -> i32 {
    let outcomes = run_checks(args.quick);
    let mut failed = 0usize;
    for outcome in &outcomes {
        let verdict = if outcome.pass { "pass" } else { "FAIL" };
        println!("[CHECK] {}: {verdict} ({})", outcome.name, outcome.detail);
        if !outcome.pass {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all {} checks passed", outcomes.len());
        EXIT_OK
    } else {
        println!("{failed} of {} checks failed", outcomes.len());
        EXIT_FAILURE
    }
}

fn plot(args: &PlotArgs) -> Result<(), Error> {
    let mut series = Vec::new();
    for path in &args.csvs {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
        })?;
        let rows = parse_csv(&text)?;
        let label = path
            .file_stem()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        series.push(Series {
            label,
            points: rows.iter().map(|&(t, mean, _)| (t as f64, mean)).collect(),
        });
    }
    let svg = render_svg(&series, args.logx)?;
    std::fs::write(&args.out, svg).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", args.out.display())))
    })?;
    println!("wrote {}", args.out.display());
    Ok(())
}

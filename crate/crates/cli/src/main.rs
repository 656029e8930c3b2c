//! `fascicle` — braided pneumatic actuator calculator.
//!
//! Subcommands: `resolve` (parameter consistency), `force` (one-point force
//! evaluation), `compare` (pack vs equivalent-actuator table), `sweep`
//! (normalized-force surface), `energy` (conservation-of-energy audit).
//!
//! Exit codes: 0 success, 1 verification/consistency failure under
//! `--strict`, 2 usage or domain error.

mod commands;
mod config;
mod emit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{CommandError, RunOutput, SweepGrid};
use config::{parse_angle, parse_angle_deg, parse_length, parse_pressure, Policy, RunConfig, WallConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fascicle",
    version,
    about = "Braided pneumatic actuator model: kinematics, forces, energy, pack equivalence",
    after_help = "Dimensioned values carry unit suffixes: lengths mm/m, angles deg/rad, \
                  pressures kPa/Pa (e.g. --L 145mm --theta 80.369deg --pressure 1kPa)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Run-configuration file (flat `key = value` lines with unit suffixes).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Exit with status 1 when a verification verdict fails.
    #[arg(long, global = true)]
    strict: bool,

    /// Relative tolerance for consistency verdicts.
    #[arg(long, global = true, value_name = "X")]
    tolerance: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check a measured parameter set and rebuild a self-consistent one from L, D, N.
    Resolve(GeometryArgs),
    /// Evaluate thin-wall, thick-wall, and normalized force at one configuration.
    Force(ForceArgs),
    /// Compare an n-fascicle pack against its volumetrically equivalent single actuator.
    Compare(CompareArgs),
    /// Tabulate the normalized force over a (theta, t_hat) grid.
    Sweep(SweepArgs),
    /// Audit conservation of energy over a stroke, pack vs equivalent.
    Energy(EnergyArgs),
}

#[derive(Args)]
struct GeometryArgs {
    /// Axial length, e.g. 145mm.
    #[arg(long = "L", value_parser = parse_length, value_name = "LENGTH")]
    length: Option<f64>,

    /// External diameter, e.g. 17mm.
    #[arg(long = "D", value_parser = parse_length, value_name = "LENGTH")]
    diameter: Option<f64>,

    /// Fiber turn count (fractional turns allowed).
    #[arg(long = "N", value_name = "TURNS")]
    turns: Option<f64>,

    /// Measured braid angle to check against (the resolver discards it).
    #[arg(long, value_parser = parse_angle, value_name = "ANGLE")]
    theta: Option<f64>,
}

#[derive(Args)]
struct ForceArgs {
    #[command(flatten)]
    geometry: GeometryArgs,

    /// Wall thickness, e.g. 1mm.
    #[arg(long = "t-k", value_parser = parse_length, value_name = "LENGTH")]
    wall_thickness: Option<f64>,

    /// Wall thickness as a fraction of the diameter, in [0, 0.5].
    #[arg(long = "t-hat", value_name = "FRACTION", conflicts_with = "wall_thickness")]
    wall_fraction: Option<f64>,

    /// Gauge pressure, e.g. 1kPa.
    #[arg(long, value_parser = parse_pressure, value_name = "PRESSURE")]
    pressure: Option<f64>,

    /// Braid angle to evaluate at (defaults to the reference angle).
    #[arg(long = "at", value_parser = parse_angle, value_name = "ANGLE")]
    eval_theta: Option<f64>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    geometry: GeometryArgs,

    /// Wall thickness of the individual fascicle, e.g. 1mm.
    #[arg(long = "t-k", value_parser = parse_length, value_name = "LENGTH")]
    wall_thickness: Option<f64>,

    /// Wall thickness as a fraction of the diameter, in [0, 0.5].
    #[arg(long = "t-hat", value_name = "FRACTION", conflicts_with = "wall_thickness")]
    wall_fraction: Option<f64>,

    /// Pack sizes, comma separated (e.g. 1,2,4,8).
    #[arg(long = "n", value_delimiter = ',', value_name = "COUNTS")]
    counts: Option<Vec<u32>>,

    /// Which equivalent-actuator wall policy the `selected` output follows.
    #[arg(long, value_enum)]
    policy: Option<Policy>,

    /// Build the turn-count-held "equivalents" and report their
    /// self-consistency instead of any force.
    #[arg(long)]
    replicate_original_error: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Lower braid angle bound.
    #[arg(long, value_parser = parse_angle_deg, default_value = "30deg", value_name = "ANGLE")]
    theta_min: f64,

    /// Upper braid angle bound (inclusive, up to 90deg).
    #[arg(long, value_parser = parse_angle_deg, default_value = "90deg", value_name = "ANGLE")]
    theta_max: f64,

    /// Number of angle samples.
    #[arg(long, default_value_t = 61)]
    theta_steps: usize,

    /// Lower relative-thickness bound.
    #[arg(long, default_value_t = 0.0)]
    t_hat_min: f64,

    /// Upper relative-thickness bound (inclusive, up to 0.5).
    #[arg(long, default_value_t = 0.5)]
    t_hat_max: f64,

    /// Number of thickness samples.
    #[arg(long, default_value_t = 6)]
    t_hat_steps: usize,
}

#[derive(Args)]
struct EnergyArgs {
    #[command(flatten)]
    geometry: GeometryArgs,

    /// Stroke start angle (defaults to the resolved reference angle).
    #[arg(long = "theta1", value_parser = parse_angle, value_name = "ANGLE")]
    theta_initial: Option<f64>,

    /// Stroke end angle.
    #[arg(long = "theta2", value_parser = parse_angle, value_name = "ANGLE")]
    theta_final: Option<f64>,

    /// Gauge pressure, e.g. 1kPa.
    #[arg(long, value_parser = parse_pressure, value_name = "PRESSURE")]
    pressure: Option<f64>,

    /// Pack size for the pack-vs-equivalent check.
    #[arg(long = "n", value_name = "COUNT")]
    count: Option<u32>,
}

impl GeometryArgs {
    fn apply(&self, config: &mut RunConfig) {
        if let Some(v) = self.length {
            config.length = v;
        }
        if let Some(v) = self.diameter {
            config.diameter = v;
        }
        if let Some(v) = self.turns {
            config.turns = v;
        }
        if let Some(v) = self.theta {
            config.theta = Some(v);
        }
    }
}

fn base_config(cli: &Cli) -> Result<RunConfig, CommandError> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::load(path).map_err(|e| CommandError::Domain(e.to_string()))?,
        None => RunConfig::default(),
    };
    if let Some(tolerance) = cli.tolerance {
        if tolerance <= 0.0 {
            return Err(CommandError::Domain(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }
        config.tolerance = tolerance;
    }
    Ok(config)
}

fn run(cli: &Cli) -> Result<RunOutput, CommandError> {
    let mut config = base_config(cli)?;
    match &cli.command {
        Command::Resolve(args) => {
            args.apply(&mut config);
            commands::cmd_resolve(&config)
        }
        Command::Force(args) => {
            args.geometry.apply(&mut config);
            if let Some(t) = args.wall_thickness {
                config.wall = WallConfig::Thickness(t);
            }
            if let Some(f) = args.wall_fraction {
                config.wall = WallConfig::Fraction(f);
            }
            if let Some(p) = args.pressure {
                config.pressure = p;
            }
            commands::cmd_force(&config, args.eval_theta)
        }
        Command::Compare(args) => {
            args.geometry.apply(&mut config);
            if let Some(t) = args.wall_thickness {
                config.wall = WallConfig::Thickness(t);
            }
            if let Some(f) = args.wall_fraction {
                config.wall = WallConfig::Fraction(f);
            }
            if let Some(counts) = &args.counts {
                config.counts = counts.clone();
            }
            if let Some(policy) = args.policy {
                config.policy = policy;
            }
            commands::cmd_compare(&config, args.replicate_original_error)
        }
        Command::Sweep(args) => commands::cmd_sweep(&SweepGrid {
            theta_min_deg: args.theta_min,
            theta_max_deg: args.theta_max,
            theta_steps: args.theta_steps,
            t_hat_min: args.t_hat_min,
            t_hat_max: args.t_hat_max,
            t_hat_steps: args.t_hat_steps,
        }),
        Command::Energy(args) => {
            args.geometry.apply(&mut config);
            if let Some(p) = args.pressure {
                config.pressure = p;
            }
            if let Some(theta) = args.theta_initial {
                config.theta_initial = Some(theta);
            }
            if let Some(theta) = args.theta_final {
                config.theta_final = theta;
            }
            if let Some(n) = args.count {
                config.count = n;
            }
            commands::cmd_energy(&config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            let text = match cli.format {
                Format::Pretty => output.pretty.clone(),
                Format::Csv => output.csv.clone(),
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&output.json).expect("json serialization");
                    s.push('\n');
                    s
                }
            };
            if let Err(e) = emit::sink(cli.out.as_deref(), &text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if cli.strict && !output.verdict_failures.is_empty() {
                for failure in &output.verdict_failures {
                    eprintln!("verdict failed: {failure}");
                }
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(CommandError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end. Exit codes: 0 ok, 1 config or I/O error,
//! 2 infeasible kick, 3 failed plan check.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{ConfigError, KickConfig};
use crate::error::PlanError;
use crate::model::{KickParams, KickPlan, TrajectorySample};
use crate::planner::{plan_kick_with, schedule_step_frequency};
use crate::trajectory::sample_trajectory;
use crate::verify::{check_plan, estimate_ball_launch};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CONFIG: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 3;

pub const CSV_HEADER: &str = "t,phase,theta_l,omega_l,alpha,x_o,z_o";

#[derive(Debug, Parser)]
#[command(name = "kickplan", version, about = "Plan four-phase humanoid kicks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the kick and print every plan scalar.
    Plan {
        config: PathBuf,
        /// Also write the full plan as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print as `quantity,value,unit` CSV or JSON instead of text.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Sample the swing trajectory.
    Sample {
        config: PathBuf,
        /// Sample interval in seconds.
        #[arg(long, default_value_t = 0.001)]
        dt: f64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check continuity, boundary conditions and joint limits.
    Check {
        config: PathBuf,
        /// Check this serialized plan instead of solving the config.
        #[arg(long)]
        plan: Option<PathBuf>,
    },
    /// Estimate ball speed and carry for the planned kick velocity.
    Estimate {
        config: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// A failed command: message for standard error and its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<ConfigError> for CliError {
    fn from(err: ConfigError) -> Self {
        CliError {
            code: EXIT_CONFIG,
            message: err.to_string(),
        }
    }
}

impl From<PlanError> for CliError {
    fn from(err: PlanError) -> Self {
        CliError {
            code: if err.is_infeasible() {
                EXIT_INFEASIBLE
            } else {
                EXIT_CONFIG
            },
            message: err.to_string(),
        }
    }
}

fn io_error(path: &Path, err: std::io::Error) -> CliError {
    CliError {
        code: EXIT_CONFIG,
        message: format!("cannot write {}: {err}", path.display()),
    }
}

fn other(message: impl ToString) -> CliError {
    CliError {
        code: EXIT_CONFIG,
        message: message.to_string(),
    }
}

fn solve(config_path: &Path) -> Result<(KickConfig, KickParams, KickPlan), CliError> {
    let config = KickConfig::load(config_path)?;
    let params = config.params()?;
    let leg = config.leg()?;
    let plan = plan_kick_with(&params, &leg, config.options())?;
    Ok((config, params, plan))
}

/// Fixed six-decimal rendering without a negative zero.
fn fixed(value: f64) -> String {
    let text = format!("{value:.6}");
    if text == "-0.000000" {
        "0.000000".to_owned()
    } else {
        text
    }
}

pub fn render_csv(samples: &[TrajectorySample]) -> String {
    let mut out = String::with_capacity(64 * (samples.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fixed(s.t),
            s.phase,
            fixed(s.theta),
            fixed(s.omega),
            fixed(s.alpha),
            fixed(s.x_offset),
            fixed(s.z_offset)
        );
    }
    out
}

/// Plan scalars as `(name, value, unit)` in print order.
pub fn plan_rows(plan: &KickPlan, nominal_frequency: f64) -> Vec<(&'static str, f64, &'static str)> {
    let s = plan.summary();
    let schedule = schedule_step_frequency(plan, nominal_frequency);
    vec![
        ("alpha_k", s.kick_acceleration, "rad/s^2"),
        ("omega_k", s.kick_velocity, "rad/s"),
        ("theta_k", s.kick_angle, "rad"),
        ("theta_pre", s.pre_swing_angle, "rad"),
        ("theta_sw", s.swing_angle, "rad"),
        ("theta_ret", s.return_angle, "rad"),
        ("theta_post", s.post_angle, "rad"),
        ("t_pre", s.prepare_time, "s"),
        ("t_sw", s.swing_time, "s"),
        ("t_strike", s.strike_time, "s"),
        ("t_ext", s.extension_time, "s"),
        ("t_ret", s.return_time, "s"),
        ("t_k", s.kick_time, "s"),
        ("f_g", schedule.kick_step, "Hz"),
        ("f_nominal", schedule.following, "Hz"),
    ]
}

fn write_output(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_error(path, e)),
        None => stdout.write_all(text.as_bytes()).map_err(other),
    }
}

fn cmd_plan(
    config: &Path,
    out: Option<&Path>,
    format: Option<Format>,
    stdout: &mut dyn Write,
) -> Result<u8, CliError> {
    let (_, params, plan) = solve(config)?;
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&plan).map_err(other)?;
        std::fs::write(path, json + "\n").map_err(|e| io_error(path, e))?;
    }
    let rows = plan_rows(&plan, params.nominal_frequency);
    let mut text = String::new();
    match format {
        None => {
            for (name, value, unit) in rows {
                let _ = writeln!(text, "{name:<10} = {value:.9} {unit}");
            }
        }
        Some(Format::Csv) => {
            text.push_str("quantity,value,unit\n");
            for (name, value, unit) in rows {
                let _ = writeln!(text, "{name},{value:.9},{unit}");
            }
        }
        Some(Format::Json) => {
            let map: serde_json::Map<String, serde_json::Value> = rows
                .into_iter()
                .map(|(name, value, _)| (name.to_owned(), serde_json::Value::from(value)))
                .collect();
            text = serde_json::to_string_pretty(&map).map_err(other)? + "\n";
        }
    }
    write_output(None, &text, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_sample(
    config: &Path,
    dt: f64,
    out: Option<&Path>,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<u8, CliError> {
    let (_, _, plan) = solve(config)?;
    let samples = sample_trajectory(&plan, dt).map_err(other)?;
    let text = match format {
        Format::Csv => render_csv(&samples),
        Format::Json => serde_json::to_string_pretty(&samples).map_err(other)? + "\n",
    };
    write_output(out, &text, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_check(config: &Path, plan_path: Option<&Path>, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let config = KickConfig::load(config)?;
    let params = config.params()?;
    let plan = match plan_path {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| other(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str::<KickPlan>(&text)
                .map_err(|e| other(format!("malformed plan {}: {e}", path.display())))?
        }
        None => plan_kick_with(&params, &config.leg()?, config.options())?,
    };
    let report = check_plan(&plan, &params);
    write_output(None, &report.to_string(), stdout)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_estimate(config: &Path, format: Option<Format>, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let (config, params, plan) = solve(config)?;
    let model = config.impact_model()?;
    let estimate = estimate_ball_launch(
        plan.summary().kick_velocity,
        params.hip_height,
        params.ball_radius,
        &model,
    )
    .map_err(other)?;
    let text = match format {
        Some(Format::Json) => serde_json::to_string_pretty(&estimate).map_err(other)? + "\n",
        Some(Format::Csv) => format!(
            "foot_speed,ball_speed,impulse,range\n{},{},{},{}\n",
            fixed(estimate.foot_speed),
            fixed(estimate.ball_speed),
            fixed(estimate.impulse),
            fixed(estimate.range)
        ),
        None => format!(
            "foot_speed = {:.6} m/s\nball_speed = {:.6} m/s\nimpulse    = {:.6} kg*m/s\nrange      = {:.6} m\n",
            estimate.foot_speed, estimate.ball_speed, estimate.impulse, estimate.range
        ),
    };
    write_output(None, &text, stdout)?;
    Ok(EXIT_OK)
}

/// Runs a parsed command, writing results to `stdout`. Errors carry their exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Plan {
            config,
            out,
            format,
        } => cmd_plan(config, out.as_deref(), *format, stdout),
        Command::Sample {
            config,
            dt,
            out,
            format,
        } => cmd_sample(config, *dt, out.as_deref(), *format, stdout),
        Command::Check { config, plan } => cmd_check(config, plan.as_deref(), stdout),
        Command::Estimate { config, format } => cmd_estimate(config, *format, stdout),
    }
}

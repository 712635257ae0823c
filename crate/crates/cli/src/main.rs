//! Command-line front end: evaluates cooling bounds from JSON run
//! configurations and emits deterministic JSON or CSV documents.
//!
//! Exit codes: 0 on success, 1 when oracle validation fails, 2 on a
//! configuration or evaluation error.

// Validation uses `!(x > 0.0)` rather than `x <= 0.0` on purpose: the negated
// form also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{BudgetConfig, MethodConfig, RunConfig, SweepParam};
use cryobound::bounds::{self, BoundReport};
use cryobound::oracle;
use cryobound::report::{self, JsonObject, ScanRow};
use cryobound::spectra::{Bath, ResourceBudget, SystemSpec};

#[derive(Parser)]
#[command(
    name = "cryobound",
    version,
    about = "Lower bounds on cooling error and final temperature with finite thermal resources"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one bound and emit a JSON report.
    Bound(CommonArgs),
    /// Check bounds against the brute-force assignment oracle.
    Oracle(CommonArgs),
    /// Sweep one parameter and emit a CSV table.
    Scan(CommonArgs),
    /// Emit the gap-ramp protocol curve as CSV.
    Protocol(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Write output to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for randomized validation, overriding the config.
    #[arg(long)]
    seed: Option<u64>,
    /// Request CSV output (scan and protocol emit CSV already).
    #[arg(long)]
    csv: bool,
}

struct Outcome {
    text: String,
    out: Option<PathBuf>,
    validation_failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome.text, outcome.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.validation_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    let args = match &cli.command {
        Command::Bound(a) | Command::Oracle(a) | Command::Scan(a) | Command::Protocol(a) => a,
    };
    let cfg = RunConfig::from_path(&args.config)?;
    let out = args
        .out
        .clone()
        .or_else(|| cfg.out.as_ref().map(PathBuf::from));
    let (text, validation_failed) = match &cli.command {
        Command::Bound(_) => (cmd_bound(&cfg, args)?, false),
        Command::Oracle(_) => cmd_oracle(&cfg, args)?,
        Command::Scan(_) => (cmd_scan(&cfg)?, false),
        Command::Protocol(_) => (cmd_protocol(&cfg)?, false),
    };
    Ok(Outcome {
        text,
        out,
        validation_failed,
    })
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn reject_csv(args: &CommonArgs, command: &str) -> Result<(), String> {
    if args.csv {
        Err(format!(
            "--csv is not available for `{command}`: it emits a JSON document"
        ))
    } else {
        Ok(())
    }
}

/// Runs the selected bound path on already-built inputs.
#[allow(clippy::too_many_arguments)]
fn run_method(
    method: MethodConfig,
    system: &SystemSpec,
    bath: Option<&Bath>,
    w_max: Option<f64>,
    budget: Option<&ResourceBudget>,
    alpha: Option<f64>,
    window: Option<f64>,
    t: f64,
) -> Result<BoundReport, String> {
    let need_bath = || bath.ok_or("config field `bath`: required by this method".to_string());
    let need_w = || w_max.ok_or("config field `w_max`: required by this method".to_string());
    match method {
        MethodConfig::General => {
            let b = need_bath()?.as_explicit().map_err(|e| e.to_string())?;
            bounds::error_bound_general_with_window(system, b, need_w()?, t, window)
                .map_err(|e| e.to_string())
        }
        MethodConfig::Smooth => bounds::error_bound_smooth(system, need_bath()?, need_w()?, t)
            .map_err(|e| e.to_string()),
        MethodConfig::Thermal => bounds::thermal_cooling_bound(system, need_bath()?, need_w()?, t)
            .map_err(|e| e.to_string()),
        MethodConfig::Radiation => {
            let m = need_bath()?.as_analytic().map_err(|e| e.to_string())?;
            bounds::radiation_bound(system, m, need_w()?, t).map_err(|e| e.to_string())
        }
        MethodConfig::Time => {
            let budget = budget.ok_or("config field `budget`: required by the time method")?;
            let alpha = alpha.ok_or("config field `alpha`: required by the time method")?;
            bounds::time_bound(system, alpha, budget, t).map_err(|e| e.to_string())
        }
    }
}

fn budget_json(b: &BudgetConfig) -> String {
    let mut obj = JsonObject::new();
    obj.number("u", b.u)
        .number("v", b.v)
        .integer("dim", u64::from(b.dim))
        .number("t", b.t);
    obj.finish()
}

fn cmd_bound(cfg: &RunConfig, args: &CommonArgs) -> Result<String, String> {
    reject_csv(args, "bound")?;
    let method = cfg
        .method
        .ok_or("config field `method`: required by `bound`")?;
    let system = cfg.require_system()?;
    let t = cfg.temperature();
    let (bath, w_max, budget) = if method == MethodConfig::Time {
        (None, None, Some(cfg.require_budget()?))
    } else {
        (Some(cfg.require_bath()?), Some(cfg.require_w_max()?), None)
    };
    let report = run_method(
        method,
        &system,
        bath.as_ref(),
        w_max,
        budget.as_ref(),
        cfg.alpha,
        cfg.window,
        t,
    )?;
    let mut doc = JsonObject::new();
    doc.string("command", "bound")
        .string("method", method.name())
        .number("beta", cfg.beta);
    if let Some(w) = w_max {
        doc.number("w_max", w);
    }
    if let Some(b) = &cfg.budget {
        doc.raw("budget", &budget_json(b));
    }
    if let Some(a) = cfg.alpha {
        doc.number("alpha", a);
    }
    if let Some(w) = cfg.window {
        doc.number("window", w);
    }
    doc.raw("report", &report::bound_report_json(&report));
    Ok(doc.finish() + "\n")
}

fn cmd_oracle(cfg: &RunConfig, args: &CommonArgs) -> Result<(String, bool), String> {
    reject_csv(args, "oracle")?;
    if let Some(n) = cfg.oracle.as_ref().and_then(|o| o.instances) {
        if n == 0 {
            return Err("config field `oracle.instances`: must be at least 1".to_string());
        }
        let seed = args.seed.or(cfg.seed).unwrap_or(0);
        let mut min_slack = f64::INFINITY;
        let mut exhaustive_checked = 0u64;
        let mut failed_seeds = Vec::new();
        for i in 0..n {
            let instance_seed = seed.wrapping_add(i as u64);
            let inst = oracle::random_instance(instance_seed);
            let verdict =
                oracle::validate_bound(&inst.system, &inst.bath, inst.w_max, inst.temperature())
                    .map_err(|e| format!("instance seed {instance_seed}: {e}"))?;
            min_slack = min_slack.min(verdict.slack);
            if verdict.epsilon_exact.is_some() {
                exhaustive_checked += 1;
            }
            if !verdict.ok {
                failed_seeds.push(instance_seed);
            }
        }
        let failed_json = format!(
            "[{}]",
            failed_seeds
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let ok = failed_seeds.is_empty();
        let mut doc = JsonObject::new();
        doc.string("command", "oracle")
            .string("mode", "random")
            .integer("instances", n as u64)
            .integer("seed", seed)
            .integer("failures", failed_seeds.len() as u64)
            .raw("failed_seeds", &failed_json)
            .number("min_slack", min_slack)
            .integer("exhaustive_checked", exhaustive_checked)
            .boolean("ok", ok);
        Ok((doc.finish() + "\n", !ok))
    } else {
        let system = cfg.require_system()?;
        let bath = cfg.require_bath()?;
        let explicit = bath.as_explicit().map_err(|e| e.to_string())?;
        let verdict =
            oracle::validate_bound(&system, explicit, cfg.require_w_max()?, cfg.temperature())
                .map_err(|e| e.to_string())?;
        let mut doc = JsonObject::new();
        doc.string("command", "oracle")
            .string("mode", "single")
            .number("epsilon_oracle", verdict.epsilon_oracle)
            .number("epsilon_bound", verdict.epsilon_bound)
            .number("slack", verdict.slack)
            .opt_number("epsilon_exact", verdict.epsilon_exact)
            .boolean("ok", verdict.ok);
        Ok((doc.finish() + "\n", !verdict.ok))
    }
}

fn cmd_scan(cfg: &RunConfig) -> Result<String, String> {
    let sweep = cfg
        .sweep
        .as_ref()
        .ok_or("config field `sweep`: required by `scan`")?;
    let method = cfg
        .method
        .ok_or("config field `method`: required by `scan`")?;
    let system = cfg.require_system()?;
    let t = cfg.temperature();
    let mut rows = Vec::with_capacity(sweep.points);
    match sweep.param {
        SweepParam::WMax => {
            let bath = cfg.require_bath()?;
            for w in sweep.grid() {
                let report = run_method(
                    method,
                    &system,
                    Some(&bath),
                    Some(w),
                    None,
                    cfg.alpha,
                    cfg.window,
                    t,
                )?;
                rows.push(ScanRow::from_report(w, &report));
            }
        }
        SweepParam::Volume => {
            let bath = cfg.require_bath()?;
            let w_max = cfg.require_w_max()?;
            for volume in sweep.grid() {
                let scaled = match &bath {
                    Bath::Explicit(b) => {
                        Bath::Explicit(b.clone().with_volume(volume).map_err(|e| e.to_string())?)
                    }
                    Bath::Analytic(m) => {
                        Bath::Analytic(m.with_volume(volume).map_err(|e| e.to_string())?)
                    }
                };
                let report = run_method(
                    method,
                    &system,
                    Some(&scaled),
                    Some(w_max),
                    None,
                    cfg.alpha,
                    cfg.window,
                    t,
                )?;
                rows.push(ScanRow::from_report(volume, &report));
            }
        }
        SweepParam::T => {
            if method != MethodConfig::Time {
                return Err(
                    "config field `sweep.param`: `t` sweeps need the time method".to_string(),
                );
            }
            let base = cfg
                .budget
                .ok_or("config field `budget`: required by `t` sweeps")?;
            for time in sweep.grid() {
                let budget = ResourceBudget::at_time(base.u, base.v, base.dim, time)
                    .map_err(|e| e.to_string())?;
                let report = run_method(
                    method,
                    &system,
                    None,
                    None,
                    Some(&budget),
                    cfg.alpha,
                    cfg.window,
                    t,
                )?;
                rows.push(ScanRow::from_report(time, &report));
            }
        }
        SweepParam::DDiscard => {
            let bath = cfg.require_bath()?;
            let w_max = cfg.require_w_max()?;
            let g0 = system.ground_degeneracy();
            let gap0 = system.gap();
            for value in sweep.grid() {
                let factor = value.round() as i64;
                if factor < 1 {
                    return Err(format!(
                        "config field `sweep`: discard factor {value} rounds below 1"
                    ));
                }
                let factor = factor as usize;
                let widened = system
                    .with_discarded_factor(factor)
                    .and_then(|s| s.with_final_hamiltonian(g0 * factor, gap0))
                    .map_err(|e| e.to_string())?;
                let report = run_method(
                    method,
                    &widened,
                    Some(&bath),
                    Some(w_max),
                    None,
                    cfg.alpha,
                    cfg.window,
                    t,
                )?;
                rows.push(ScanRow::from_report(factor as f64, &report));
            }
        }
    }
    Ok(report::scan_csv(&rows))
}

fn cmd_protocol(cfg: &RunConfig) -> Result<String, String> {
    let protocol = cfg
        .protocol
        .as_ref()
        .ok_or("config field `protocol`: required by `protocol`")?;
    let budget = cfg.require_budget()?;
    let curve = bounds::isothermal_shift_protocol(
        protocol.delta,
        cfg.temperature(),
        &budget,
        protocol.points,
    )
    .map_err(|e| e.to_string())?;
    Ok(report::protocol_csv(&curve))
}

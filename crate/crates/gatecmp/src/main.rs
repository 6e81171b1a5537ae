//! `gatecmp`: evaluate, optimize, sweep, and cross-validate the two gate
//! models, and emit the comparison CSV/plot artifacts.
//!
//! Exit codes: 0 success, 2 configuration error, 3 verification failure,
//! 4 unknown figure or command.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gatecmp::error::GateError;
use gatecmp::figures::{write_figure, FigureId};
use gatecmp::optimize::{
    optimize_gate, sweep_1d, GateTuning, OptimizationSpec, OtherVars, SweptVar,
};
use gatecmp::output::{fmt_num, render_svg, write_atomic, Csv, Series, ERR_DEGENERATE};
use gatecmp::params::{load_config, ConfigValues, GateEnvironment, PhaseTuning, ZenoTuning};
use gatecmp::phase::phase_success;
use gatecmp::pulse::{coupling_profile, energy_audit, SwitchSpec};
use gatecmp::verify::{run_all, run_suite};
use gatecmp::zeno::{swap_fidelity, zeno_rates, zeno_transition};

#[derive(Parser)]
#[command(name = "gatecmp", version, about = "Cavity-QED gate comparison toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: CommonOpts,
}

#[derive(Args)]
struct CommonOpts {
    /// Key-value config file (gamma_r, omega, n_atoms, delta_r, Delta_r,
    /// eps_kappa); command-line flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Output directory for CSV/plot files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Also write an SVG plot next to each CSV.
    #[arg(long, global = true)]
    plot: bool,
    /// Atomic decay rate over cavity decay rate, Γ/κ.
    #[arg(long, global = true, value_name = "X")]
    gamma_r: Option<f64>,
    /// Normalized Rabi frequency g/(ħΓ).
    #[arg(long, global = true, value_name = "X")]
    omega: Option<f64>,
    /// Number of atoms coupled to the photons.
    #[arg(long, global = true, value_name = "K")]
    n_atoms: Option<u32>,
    /// Upper-level detuning δ_r (phase gate).
    #[arg(long, global = true, value_name = "X")]
    delta_r: Option<f64>,
    /// Intermediate-level detuning Δ_r (both gates).
    #[arg(long = "Delta-r", global = true, value_name = "X")]
    big_delta_r: Option<f64>,
    /// Resonator coupling ε/κ (Zeno gate).
    #[arg(long, global = true, value_name = "X")]
    eps_kappa: Option<f64>,
    /// Figure id for the `figure` command.
    #[arg(long, global = true, value_name = "ID")]
    figure: Option<String>,
    /// Verification suite for the `verify` command (default: all).
    #[arg(long, global = true, value_name = "NAME")]
    suite: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate both gate models at the given (or baseline) tunings.
    Eval,
    /// Optimize the tunings of both gates and report the optima.
    Optimize,
    /// Sweep the Rabi frequency with per-point optimized tunings.
    Sweep,
    /// Reproduce one of the canned comparison figures.
    Figure,
    /// Emit the time-dependent waveguide–resonator coupling profile.
    Switch,
    /// Run the randomized cross-validation suites.
    Verify,
    #[command(external_subcommand)]
    Unknown(Vec<String>),
}

/// Baseline environment and tunings, overridden by the config file and then
/// by flags.
struct Settings {
    env: GateEnvironment,
    phase: PhaseTuning,
    zeno: ZenoTuning,
}

fn resolve_settings(opts: &CommonOpts) -> Result<Settings, GateError> {
    let cfg = match &opts.config {
        Some(path) => load_config(path)?,
        None => ConfigValues::default(),
    };
    let pick = |flag: Option<f64>, file: Option<f64>, default: f64| {
        flag.or(file).unwrap_or(default)
    };
    let env = GateEnvironment::new(
        pick(opts.gamma_r, cfg.gamma_r, 0.1),
        pick(opts.omega, cfg.omega, 50.0),
        opts.n_atoms.or(cfg.n_atoms).unwrap_or(1),
    )?;
    let big_delta_r = pick(opts.big_delta_r, cfg.big_delta_r, 6.4);
    let phase = PhaseTuning {
        delta_r: pick(opts.delta_r, cfg.delta_r, 14.9),
        big_delta_r,
    };
    let zeno = ZenoTuning {
        eps_kappa: pick(opts.eps_kappa, cfg.eps_kappa, 725.0),
        big_delta_r,
    };
    zeno.validate()?;
    Ok(Settings { env, phase, zeno })
}

fn out_dir(opts: &CommonOpts) -> PathBuf {
    opts.out.clone().unwrap_or_else(|| PathBuf::from("."))
}

fn cmd_eval(opts: &CommonOpts) -> Result<(), GateError> {
    let s = resolve_settings(opts)?;
    println!(
        "environment: gamma_r = {}, omega = {}, n_atoms = {}",
        s.env.gamma_r, s.env.omega, s.env.n_atoms
    );
    let mut csv = Csv::new(["gate", "success", "delta_r", "Delta_r", "eps_kappa"]);

    match phase_success(&s.env, &s.phase) {
        Ok(r) => {
            println!(
                "phase gate: success {:.6} at delta_r {}, Delta_r {}",
                r.success, s.phase.delta_r, s.phase.big_delta_r
            );
            println!(
                "  losses: atomic upper {:.6}, cavity two-photon {:.6}, cavity virtual {:.6}, atomic intermediate {:.6}",
                r.loss_atomic_upper,
                r.loss_cavity_two_photon,
                r.loss_cavity_virtual,
                r.loss_atomic_intermediate
            );
            csv.push_row([
                "phase".to_string(),
                fmt_num(r.success),
                fmt_num(s.phase.delta_r),
                fmt_num(s.phase.big_delta_r),
                String::new(),
            ]);
        }
        Err(GateError::DegenerateTuning) => {
            println!("phase gate: degenerate tuning (diverging gate time)");
            csv.push_row([
                "phase".to_string(),
                ERR_DEGENERATE.to_string(),
                fmt_num(s.phase.delta_r),
                fmt_num(s.phase.big_delta_r),
                String::new(),
            ]);
        }
        Err(e) => return Err(e),
    }

    let tr = zeno_transition(&s.env, &s.zeno)?;
    let rates = zeno_rates(&s.env, &s.zeno)?;
    println!(
        "zeno gate: success {:.6} at eps_kappa {}, Delta_r {} (swap fidelity {:.6})",
        tr.success,
        s.zeno.eps_kappa,
        s.zeno.big_delta_r,
        swap_fidelity(&rates)
    );
    csv.push_row([
        "zeno".to_string(),
        fmt_num(tr.success),
        String::new(),
        fmt_num(s.zeno.big_delta_r),
        fmt_num(s.zeno.eps_kappa),
    ]);

    if opts.out.is_some() {
        write_atomic(&out_dir(opts).join("eval.csv"), &csv.render())?;
    }
    Ok(())
}

fn describe(tuning: &GateTuning) -> (String, String, String) {
    match tuning {
        GateTuning::Phase(t) => (fmt_num(t.delta_r), fmt_num(t.big_delta_r), String::new()),
        GateTuning::Zeno(t) => (String::new(), fmt_num(t.big_delta_r), fmt_num(t.eps_kappa)),
    }
}

fn cmd_optimize(opts: &CommonOpts) -> Result<(), GateError> {
    let s = resolve_settings(opts)?;
    let mut csv = Csv::new(["gate", "success", "delta_r", "Delta_r", "eps_kappa"]);
    for (name, spec) in [
        ("phase", OptimizationSpec::phase_default()),
        ("zeno", OptimizationSpec::zeno_default()),
    ] {
        let o = optimize_gate(&s.env, &spec)?;
        let (d, bd, ek) = describe(&o.tuning);
        println!(
            "{name} gate optimum: success {:.6} ({} evaluations)",
            o.success, o.evaluations
        );
        match &o.tuning {
            GateTuning::Phase(t) => {
                println!("  delta_r {:.4}, Delta_r {:.4}", t.delta_r, t.big_delta_r)
            }
            GateTuning::Zeno(t) => {
                println!("  eps_kappa {:.4}, Delta_r {:.4}", t.eps_kappa, t.big_delta_r)
            }
        }
        csv.push_row([name.to_string(), fmt_num(o.success), d, bd, ek]);
    }
    if opts.out.is_some() {
        write_atomic(&out_dir(opts).join("optimize.csv"), &csv.render())?;
    }
    Ok(())
}

fn cmd_sweep(opts: &CommonOpts) -> Result<(), GateError> {
    let s = resolve_settings(opts)?;
    let omegas: Vec<f64> = (0..49)
        .map(|i| 10f64.powf(5f64.log10() + (200f64.log10() - 5f64.log10()) * i as f64 / 48.0))
        .collect();
    let phase = sweep_1d(
        &s.env,
        SweptVar::Omega,
        &omegas,
        &OtherVars::Optimized(OptimizationSpec::phase_default()),
    );
    let zeno = sweep_1d(
        &s.env,
        SweptVar::Omega,
        &omegas,
        &OtherVars::Optimized(OptimizationSpec::zeno_default()),
    );
    let mut csv = Csv::new(["omega", "P_s_phase_opt", "P_s_zeno_opt"]);
    let cell = |o: &Result<(f64, GateTuning), GateError>| match o {
        Ok((v, _)) => fmt_num(*v),
        Err(_) => ERR_DEGENERATE.to_string(),
    };
    for (i, &omega) in omegas.iter().enumerate() {
        csv.push_row([
            fmt_num(omega),
            cell(&phase[i].outcome),
            cell(&zeno[i].outcome),
        ]);
    }
    let dir = out_dir(opts);
    write_atomic(&dir.join("sweep.csv"), &csv.render())?;
    println!("wrote {}", dir.join("sweep.csv").display());
    if opts.plot {
        let ys = |rows: &[gatecmp::optimize::SweepRow]| -> Vec<f64> {
            rows.iter()
                .map(|r| r.outcome.as_ref().map(|(v, _)| *v).unwrap_or(f64::NAN))
                .collect()
        };
        let (yp, yz) = (ys(&phase), ys(&zeno));
        let svg = render_svg(
            "Optimized gate comparison vs Rabi frequency",
            true,
            &[
                Series {
                    label: "phase",
                    x: &omegas,
                    y: &yp,
                },
                Series {
                    label: "zeno",
                    x: &omegas,
                    y: &yz,
                },
            ],
        );
        write_atomic(&dir.join("sweep.svg"), &svg)?;
    }
    Ok(())
}

fn cmd_figure(opts: &CommonOpts) -> Result<(), GateError> {
    let id_str = opts
        .figure
        .as_deref()
        .ok_or_else(|| GateError::Config("figure command requires --figure ID".into()))?;
    let id = FigureId::parse(id_str)?;
    for path in write_figure(id, &out_dir(opts), opts.plot)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_switch(opts: &CommonOpts) -> Result<(), GateError> {
    let spec = SwitchSpec::new(20.0 * std::f64::consts::SQRT_2, 1e-4)?;
    let profile = coupling_profile(&spec)?;
    let mut csv = Csv::new(["t_over_a", "R_sq", "E_sq_norm", "out_env"]);
    for i in 0..profile.t_over_a.len() {
        csv.push_row([
            fmt_num(profile.t_over_a[i]),
            fmt_num(profile.r_sq[i]),
            fmt_num(profile.e_sq[i]),
            fmt_num(profile.out_env[i]),
        ]);
    }
    let dir = out_dir(opts);
    write_atomic(&dir.join("switch.csv"), &csv.render())?;
    println!(
        "wrote {} (peak R^2 {:.4}, energy audit residual {:.2e})",
        dir.join("switch.csv").display(),
        profile.max_r_sq,
        energy_audit(&profile)
    );
    if opts.plot {
        let svg = render_svg(
            "Extraction coupling and stored energy",
            false,
            &[
                Series {
                    label: "R_sq",
                    x: &profile.t_over_a,
                    y: &profile.r_sq,
                },
                Series {
                    label: "E_sq_norm",
                    x: &profile.t_over_a,
                    y: &profile.e_sq,
                },
            ],
        );
        write_atomic(&dir.join("switch.svg"), &svg)?;
    }
    Ok(())
}

fn cmd_verify(opts: &CommonOpts) -> Result<bool, GateError> {
    let reports = match &opts.suite {
        Some(name) => vec![run_suite(name)?],
        None => run_all(),
    };
    let mut all_pass = true;
    for r in &reports {
        println!(
            "{}: cases={} max_err={:.3e} tol={:.1e} {}",
            r.name,
            r.cases,
            r.max_err,
            r.tol,
            if r.pass() { "PASS" } else { "FAIL" }
        );
        all_pass &= r.pass();
    }
    Ok(all_pass)
}

fn exit_code_for(err: &GateError) -> u8 {
    match err {
        GateError::UnknownFigure(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<u8, GateError> = match &cli.command {
        Command::Eval => cmd_eval(&cli.opts).map(|_| 0),
        Command::Optimize => cmd_optimize(&cli.opts).map(|_| 0),
        Command::Sweep => cmd_sweep(&cli.opts).map(|_| 0),
        Command::Figure => cmd_figure(&cli.opts).map(|_| 0),
        Command::Switch => cmd_switch(&cli.opts).map(|_| 0),
        Command::Verify => cmd_verify(&cli.opts).map(|ok| if ok { 0 } else { 3 }),
        Command::Unknown(args) => {
            eprintln!(
                "error: unknown command {:?}",
                args.first().map(String::as_str).unwrap_or("")
            );
            return ExitCode::from(4);
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

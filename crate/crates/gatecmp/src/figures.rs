//! Canned comparison curves: each figure id maps to a CSV (one abscissa
//! column plus one column per curve) and an optional SVG companion. Axis
//! ranges are fixed here so reruns are byte-identical.

use std::path::{Path, PathBuf};

use crate::error::GateError;
use crate::optimize::{
    sweep_1d, GateTuning, OptimizationSpec, OtherVars, SweepRow, SweptVar, TuneVar,
};
use crate::output::{fmt_num, render_svg, write_atomic, Csv, Series, ERR_DEGENERATE};
use crate::params::{GateEnvironment, PhaseTuning, ZenoTuning};
use crate::phase::phase_success;
use crate::pulse::{coupling_profile, SwitchSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    F4a,
    F4b,
    F5,
    F6a,
    F6b,
    F6c,
    F7a,
    F7b,
    F8,
    A2a,
    A2b,
}

impl FigureId {
    pub fn parse(s: &str) -> Result<FigureId, GateError> {
        Ok(match s {
            "4a" => FigureId::F4a,
            "4b" => FigureId::F4b,
            "5" => FigureId::F5,
            "6a" => FigureId::F6a,
            "6b" => FigureId::F6b,
            "6c" => FigureId::F6c,
            "7a" => FigureId::F7a,
            "7b" => FigureId::F7b,
            "8" => FigureId::F8,
            "A2a" => FigureId::A2a,
            "A2b" => FigureId::A2b,
            other => return Err(GateError::UnknownFigure(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::F4a => "4a",
            FigureId::F4b => "4b",
            FigureId::F5 => "5",
            FigureId::F6a => "6a",
            FigureId::F6b => "6b",
            FigureId::F6c => "6c",
            FigureId::F7a => "7a",
            FigureId::F7b => "7b",
            FigureId::F8 => "8",
            FigureId::A2a => "A2a",
            FigureId::A2b => "A2b",
        }
    }

    pub fn all() -> [FigureId; 11] {
        [
            FigureId::F4a,
            FigureId::F4b,
            FigureId::F5,
            FigureId::F6a,
            FigureId::F6b,
            FigureId::F6c,
            FigureId::F7a,
            FigureId::F7b,
            FigureId::F8,
            FigureId::A2a,
            FigureId::A2b,
        ]
    }
}

pub struct FigureOutput {
    pub csv: Csv,
    pub svg: Option<String>,
    /// Swept values and per-curve y values, for programmatic checks.
    pub x: Vec<f64>,
    pub curves: Vec<(String, Vec<f64>)>,
    pub log_x: bool,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    linspace(lo.log10(), hi.log10(), n)
        .into_iter()
        .map(|e| 10f64.powf(e))
        .collect()
}

fn baseline_env() -> GateEnvironment {
    GateEnvironment::new(0.1, 50.0, 1).expect("baseline is valid")
}

fn successes(rows: &[SweepRow]) -> Vec<f64> {
    rows.iter()
        .map(|r| match &r.outcome {
            Ok((s, _)) => *s,
            Err(_) => f64::NAN,
        })
        .collect()
}

fn cell(v: f64) -> String {
    if v.is_nan() {
        ERR_DEGENERATE.to_string()
    } else {
        fmt_num(v)
    }
}

/// Phase spec with both detunings free over the default box.
fn phase_opt_spec() -> OptimizationSpec {
    OptimizationSpec::phase_default()
}

/// Zeno spec with coupling and detuning free over the default box.
fn zeno_opt_spec() -> OptimizationSpec {
    OptimizationSpec::zeno_default()
}

/// Zeno spec with only the detuning free (coupling pinned per point).
fn zeno_detuning_spec() -> OptimizationSpec {
    let mut spec = OptimizationSpec::zeno_default();
    spec.free.retain(|b| b.var == TuneVar::BigDeltaR);
    spec
}

fn curves_figure(
    abscissa: &str,
    x: Vec<f64>,
    curves: Vec<(String, Vec<f64>)>,
    log_x: bool,
    title: &str,
) -> FigureOutput {
    let mut header = vec![abscissa.to_string()];
    header.extend(curves.iter().map(|(n, _)| n.clone()));
    let mut csv = Csv::new(header);
    for (i, &xv) in x.iter().enumerate() {
        let mut row = vec![fmt_num(xv)];
        row.extend(curves.iter().map(|(_, ys)| cell(ys[i])));
        csv.push_row(row);
    }
    let series: Vec<Series> = curves
        .iter()
        .map(|(label, ys)| Series {
            label,
            x: &x,
            y: ys,
        })
        .collect();
    let svg = Some(render_svg(title, log_x, &series));
    FigureOutput {
        csv,
        svg,
        x,
        curves,
        log_x,
    }
}

fn fig_4a() -> FigureOutput {
    let env = baseline_env();
    let x = linspace(1.0, 100.0, 199);
    let mut curves = Vec::new();
    for big_delta_r in [6.0, 20.0] {
        let t = GateTuning::Phase(PhaseTuning {
            delta_r: 1.0,
            big_delta_r,
        });
        let rows = sweep_1d(&env, SweptVar::DeltaR, &x, &OtherVars::Fixed(t));
        curves.push((format!("P_s_Delta_r_{big_delta_r}"), successes(&rows)));
    }
    curves_figure(
        "delta_r",
        x,
        curves,
        false,
        "Phase-gate success vs upper detuning",
    )
}

fn fig_4b() -> FigureOutput {
    let env = baseline_env();
    let deltas = linspace(1.0, 100.0, 199);
    let big_deltas = linspace(1.0, 50.0, 99);
    let mut csv = Csv::new(["delta_r", "Delta_r", "P_s"]);
    for &d in &deltas {
        for &bd in &big_deltas {
            let t = PhaseTuning {
                delta_r: d,
                big_delta_r: bd,
            };
            let v = match phase_success(&env, &t) {
                Ok(r) => fmt_num(r.success),
                Err(_) => ERR_DEGENERATE.to_string(),
            };
            csv.push_row([fmt_num(d), fmt_num(bd), v]);
        }
    }
    // The SVG companion shows the slice through the optimum rather than the
    // full surface.
    let t64 = |d: f64| {
        phase_success(
            &env,
            &PhaseTuning {
                delta_r: d,
                big_delta_r: 6.4,
            },
        )
        .map(|r| r.success)
        .unwrap_or(f64::NAN)
    };
    let ys: Vec<f64> = deltas.iter().map(|&d| t64(d)).collect();
    let curves = vec![("P_s_Delta_r_6.4".to_string(), ys)];
    let series: Vec<Series> = curves
        .iter()
        .map(|(label, y)| Series {
            label,
            x: &deltas,
            y,
        })
        .collect();
    let svg = Some(render_svg(
        "Phase-gate success surface (slice at Delta_r = 6.4)",
        false,
        &series,
    ));
    FigureOutput {
        csv,
        svg,
        x: deltas,
        curves,
        log_x: false,
    }
}

fn fig_5() -> FigureOutput {
    let env = baseline_env();
    let x = logspace(10.0, 1e4, 61);
    let fixed = GateTuning::Zeno(ZenoTuning {
        eps_kappa: 10.0,
        big_delta_r: 6.4,
    });
    let fixed_rows = sweep_1d(&env, SweptVar::EpsKappa, &x, &OtherVars::Fixed(fixed));
    let opt_rows = sweep_1d(
        &env,
        SweptVar::EpsKappa,
        &x,
        &OtherVars::Optimized(zeno_detuning_spec()),
    );
    curves_figure(
        "eps_kappa",
        x,
        vec![
            ("P_s_fixed_Delta_r_6.4".to_string(), successes(&fixed_rows)),
            ("P_s_optimized_Delta_r".to_string(), successes(&opt_rows)),
        ],
        true,
        "Zeno-gate success vs resonator coupling",
    )
}

fn omega_axis() -> Vec<f64> {
    logspace(5.0, 200.0, 49)
}

fn fig_6a() -> FigureOutput {
    let env = baseline_env();
    let x = omega_axis();
    let fixed = GateTuning::Phase(PhaseTuning {
        delta_r: 10.0,
        big_delta_r: 6.4,
    });
    let fixed_rows = sweep_1d(&env, SweptVar::Omega, &x, &OtherVars::Fixed(fixed));
    let opt_rows = sweep_1d(
        &env,
        SweptVar::Omega,
        &x,
        &OtherVars::Optimized(phase_opt_spec()),
    );
    curves_figure(
        "omega",
        x,
        vec![
            ("P_s_fixed".to_string(), successes(&fixed_rows)),
            ("P_s_optimized".to_string(), successes(&opt_rows)),
        ],
        true,
        "Phase-gate success vs Rabi frequency",
    )
}

fn fig_6b() -> FigureOutput {
    let env = baseline_env();
    let x = omega_axis();
    let fixed = GateTuning::Zeno(ZenoTuning {
        eps_kappa: 800.0,
        big_delta_r: 6.4,
    });
    let fixed_rows = sweep_1d(&env, SweptVar::Omega, &x, &OtherVars::Fixed(fixed));
    let opt_rows = sweep_1d(
        &env,
        SweptVar::Omega,
        &x,
        &OtherVars::Optimized(zeno_opt_spec()),
    );
    curves_figure(
        "omega",
        x,
        vec![
            ("P_s_fixed".to_string(), successes(&fixed_rows)),
            ("P_s_optimized".to_string(), successes(&opt_rows)),
        ],
        true,
        "Zeno-gate success vs Rabi frequency",
    )
}

fn fig_6c() -> FigureOutput {
    let env = baseline_env();
    let x = omega_axis();
    let phase_rows = sweep_1d(
        &env,
        SweptVar::Omega,
        &x,
        &OtherVars::Optimized(phase_opt_spec()),
    );
    let zeno_rows = sweep_1d(
        &env,
        SweptVar::Omega,
        &x,
        &OtherVars::Optimized(zeno_opt_spec()),
    );
    curves_figure(
        "omega",
        x,
        vec![
            ("P_s_phase_opt".to_string(), successes(&phase_rows)),
            ("P_s_zeno_opt".to_string(), successes(&zeno_rows)),
        ],
        true,
        "Optimized gate comparison vs Rabi frequency",
    )
}

fn fig_7(zeno: bool) -> FigureOutput {
    let x = omega_axis();
    let mut curves = Vec::new();
    for gamma_r in [0.1, 1.8] {
        let env = GateEnvironment::new(gamma_r, 50.0, 1).unwrap();
        let spec = if zeno { zeno_opt_spec() } else { phase_opt_spec() };
        let rows = sweep_1d(&env, SweptVar::Omega, &x, &OtherVars::Optimized(spec));
        curves.push((format!("P_s_Gamma_r_{gamma_r}"), successes(&rows)));
    }
    curves_figure(
        "omega",
        x,
        curves,
        true,
        if zeno {
            "Optimized Zeno-gate success for two cavity qualities"
        } else {
            "Optimized phase-gate success for two cavity qualities"
        },
    )
}

fn atom_axis() -> Vec<f64> {
    let mut vals: Vec<u32> = logspace(1.0, 1000.0, 13)
        .into_iter()
        .map(|v| v.round() as u32)
        .collect();
    vals.dedup();
    vals.into_iter().map(f64::from).collect()
}

fn fig_8() -> FigureOutput {
    let env = baseline_env();
    let x = atom_axis();
    let phase_rows = sweep_1d(
        &env,
        SweptVar::NAtoms,
        &x,
        &OtherVars::Optimized(phase_opt_spec()),
    );
    let zeno_rows = sweep_1d(
        &env,
        SweptVar::NAtoms,
        &x,
        &OtherVars::Optimized(zeno_opt_spec()),
    );
    curves_figure(
        "n_atoms",
        x,
        vec![
            ("P_s_phase_opt".to_string(), successes(&phase_rows)),
            ("P_s_zeno_opt".to_string(), successes(&zeno_rows)),
        ],
        true,
        "Optimized gate comparison vs atom number",
    )
}

/// Pulse width shared by both appendix figures.
fn switch_width() -> f64 {
    20.0 * std::f64::consts::SQRT_2
}

fn fig_a2a() -> FigureOutput {
    let mut x = Vec::new();
    let mut curves = Vec::new();
    for (label, r) in [
        ("R_sq_r_1e-5", 1e-5),
        ("R_sq_r_1e-4", 1e-4),
        ("R_sq_r_0.1", 0.1),
    ] {
        let p = coupling_profile(&SwitchSpec::new(switch_width(), r).unwrap()).unwrap();
        x = p.t_over_a.clone();
        curves.push((label.to_string(), p.r_sq));
    }
    curves_figure(
        "t_over_a",
        x,
        curves,
        false,
        "Required coupling coefficient for Gaussian extraction",
    )
}

fn fig_a2b() -> FigureOutput {
    let p = coupling_profile(&SwitchSpec::new(switch_width(), 1e-4).unwrap()).unwrap();
    curves_figure(
        "t_over_a",
        p.t_over_a.clone(),
        vec![
            ("out_env".to_string(), p.out_env),
            ("E_sq_norm".to_string(), p.e_sq),
        ],
        false,
        "Output pulse envelope and stored energy",
    )
}

pub fn build_figure(id: FigureId) -> FigureOutput {
    match id {
        FigureId::F4a => fig_4a(),
        FigureId::F4b => fig_4b(),
        FigureId::F5 => fig_5(),
        FigureId::F6a => fig_6a(),
        FigureId::F6b => fig_6b(),
        FigureId::F6c => fig_6c(),
        FigureId::F7a => fig_7(false),
        FigureId::F7b => fig_7(true),
        FigureId::F8 => fig_8(),
        FigureId::A2a => fig_a2a(),
        FigureId::A2b => fig_a2b(),
    }
}

/// Write `<id>.csv` (and `<id>.svg` when `plot`); returns the paths written.
pub fn write_figure(id: FigureId, out_dir: &Path, plot: bool) -> Result<Vec<PathBuf>, GateError> {
    let fig = build_figure(id);
    let mut written = Vec::new();
    let csv_path = out_dir.join(format!("{}.csv", id.name()));
    write_atomic(&csv_path, &fig.csv.render())?;
    written.push(csv_path);
    if plot {
        if let Some(svg) = &fig.svg {
            let svg_path = out_dir.join(format!("{}.svg", id.name()));
            write_atomic(&svg_path, svg)?;
            written.push(svg_path);
        }
    }
    Ok(written)
}

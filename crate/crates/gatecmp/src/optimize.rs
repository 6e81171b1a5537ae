//! Deterministic derivative-free maximization of gate success over the
//! experimentally adjustable tunings: exhaustive coarse grid search followed
//! by Nelder–Mead simplex refinement from the best grid cell.

use crate::error::GateError;
use crate::params::{GateEnvironment, PhaseTuning, ZenoTuning};
use crate::phase::phase_success;
use crate::zeno::{zeno_rates, zeno_transition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    Phase,
    Zeno,
}

/// A tuning knob that can be varied by the optimizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuneVar {
    /// Upper-level detuning δ_r (phase gate only).
    DeltaR,
    /// Intermediate-level detuning Δ_r (both gates).
    BigDeltaR,
    /// Resonator coupling ε_κ (Zeno gate only; searched in log space).
    EpsKappa,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarBounds {
    pub var: TuneVar,
    pub lo: f64,
    pub hi: f64,
}

/// Tuning of whichever gate is being optimized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateTuning {
    Phase(PhaseTuning),
    Zeno(ZenoTuning),
}

impl GateTuning {
    pub fn kind(&self) -> GateKind {
        match self {
            GateTuning::Phase(_) => GateKind::Phase,
            GateTuning::Zeno(_) => GateKind::Zeno,
        }
    }

    fn get(&self, var: TuneVar) -> f64 {
        match (self, var) {
            (GateTuning::Phase(t), TuneVar::DeltaR) => t.delta_r,
            (GateTuning::Phase(t), TuneVar::BigDeltaR) => t.big_delta_r,
            (GateTuning::Zeno(t), TuneVar::BigDeltaR) => t.big_delta_r,
            (GateTuning::Zeno(t), TuneVar::EpsKappa) => t.eps_kappa,
            _ => f64::NAN,
        }
    }

    fn with(&self, var: TuneVar, value: f64) -> GateTuning {
        let mut out = *self;
        match (&mut out, var) {
            (GateTuning::Phase(t), TuneVar::DeltaR) => t.delta_r = value,
            (GateTuning::Phase(t), TuneVar::BigDeltaR) => t.big_delta_r = value,
            (GateTuning::Zeno(t), TuneVar::BigDeltaR) => t.big_delta_r = value,
            (GateTuning::Zeno(t), TuneVar::EpsKappa) => t.eps_kappa = value,
            _ => unreachable!("variable does not apply to this gate"),
        }
        out
    }
}

/// Success probability used as the optimization objective. Infeasible or
/// degenerate tunings score −∞ so they lose to any feasible point.
///
/// For the Zeno gate only tunings where the surviving pair amplitude keeps
/// its positive sign are counted: with too weak a blockade the pair swaps
/// back and forth and can return with high probability but the wrong sign,
/// which is not a working gate even though the raw survival is large.
pub fn objective(env: &GateEnvironment, tuning: &GateTuning) -> f64 {
    match tuning {
        GateTuning::Phase(t) => match phase_success(env, t) {
            Ok(r) => r.success,
            Err(_) => f64::NEG_INFINITY,
        },
        GateTuning::Zeno(t) => match zeno_transition(env, t) {
            Ok(tr) if tr.amp_11 > 0.0 => tr.success,
            Ok(_) => f64::NEG_INFINITY,
            Err(_) => f64::NEG_INFINITY,
        },
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationSpec {
    pub gate: GateKind,
    /// Variables to optimize with their closed bounds (1 or 2 of them).
    pub free: Vec<VarBounds>,
    /// Starting values; also supplies the pinned (non-free) variables.
    pub base: GateTuning,
    /// Coarse grid resolution per axis.
    pub grid: usize,
    /// Simplex iteration cap.
    pub refine_iters: usize,
    /// Convergence tolerance on the objective spread.
    pub tol: f64,
}

impl OptimizationSpec {
    /// Both detunings free over their default ranges.
    pub fn phase_default() -> Self {
        OptimizationSpec {
            gate: GateKind::Phase,
            free: vec![
                VarBounds {
                    var: TuneVar::DeltaR,
                    lo: 0.1,
                    hi: 200.0,
                },
                VarBounds {
                    var: TuneVar::BigDeltaR,
                    lo: 0.1,
                    hi: 200.0,
                },
            ],
            base: GateTuning::Phase(PhaseTuning {
                delta_r: 1.0,
                big_delta_r: 1.0,
            }),
            grid: 64,
            refine_iters: 200,
            tol: 1e-9,
        }
    }

    /// Coupling and intermediate detuning free over their default ranges.
    pub fn zeno_default() -> Self {
        OptimizationSpec {
            gate: GateKind::Zeno,
            free: vec![
                VarBounds {
                    var: TuneVar::EpsKappa,
                    lo: 1.0,
                    hi: 1e5,
                },
                VarBounds {
                    var: TuneVar::BigDeltaR,
                    lo: 0.1,
                    hi: 200.0,
                },
            ],
            base: GateTuning::Zeno(ZenoTuning {
                eps_kappa: 100.0,
                big_delta_r: 1.0,
            }),
            grid: 64,
            refine_iters: 200,
            tol: 1e-9,
        }
    }

    pub fn validate(&self) -> Result<(), GateError> {
        if self.free.is_empty() || self.free.len() > 2 {
            return Err(GateError::InvalidOptimizationSpec(
                "need one or two free variables",
            ));
        }
        for (i, b) in self.free.iter().enumerate() {
            if !(b.lo.is_finite() && b.hi.is_finite() && b.lo < b.hi) {
                return Err(GateError::InvalidOptimizationSpec(
                    "bounds must be finite with lower < upper",
                ));
            }
            let allowed = match self.gate {
                GateKind::Phase => matches!(b.var, TuneVar::DeltaR | TuneVar::BigDeltaR),
                GateKind::Zeno => matches!(b.var, TuneVar::EpsKappa | TuneVar::BigDeltaR),
            };
            if !allowed {
                return Err(GateError::InvalidOptimizationSpec(
                    "variable does not apply to this gate",
                ));
            }
            if self.free[..i].iter().any(|o| o.var == b.var) {
                return Err(GateError::InvalidOptimizationSpec(
                    "duplicate free variable",
                ));
            }
        }
        if self.base.kind() != self.gate {
            return Err(GateError::InvalidOptimizationSpec(
                "base tuning is for the other gate",
            ));
        }
        if self.grid < 2 {
            return Err(GateError::InvalidOptimizationSpec("grid must be ≥ 2"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Optimum {
    pub tuning: GateTuning,
    pub success: f64,
    pub evaluations: u64,
    /// Best objective seen on the coarse grid, before refinement.
    pub grid_best: f64,
}

/// ε_κ spans decades, so it is searched on a log₁₀ axis.
fn uses_log(var: TuneVar) -> bool {
    matches!(var, TuneVar::EpsKappa)
}

fn encode(var: TuneVar, value: f64) -> f64 {
    if uses_log(var) {
        value.log10()
    } else {
        value
    }
}

fn decode(var: TuneVar, coord: f64) -> f64 {
    if uses_log(var) {
        10f64.powf(coord)
    } else {
        coord
    }
}

/// Deterministic maximization of `f` over the axis-aligned box `bounds`
/// (in the already-encoded coordinates): exhaustive grid scan, then
/// Nelder–Mead refinement clamped to the box. Grid ties break toward the
/// lexicographically smallest coordinate tuple (ascending scan + strict
/// improvement). Returns (argmax, max, evaluation count, grid-phase max);
/// the returned point is the best ever evaluated, so it never falls below
/// the grid result.
pub fn maximize<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    bounds: &[(f64, f64)],
    grid: usize,
    refine_iters: usize,
    tol: f64,
) -> (Vec<f64>, f64, u64, f64) {
    let dim = bounds.len();
    assert!((1..=2).contains(&dim) && grid >= 2);
    let mut evals: u64 = 0;
    let mut eval = |x: &[f64], evals: &mut u64| -> f64 {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    };

    let coord = |axis: usize, i: usize| -> f64 {
        let (lo, hi) = bounds[axis];
        lo + (hi - lo) * i as f64 / (grid - 1) as f64
    };

    let mut best_x = vec![f64::NAN; dim];
    let mut best_v = f64::NEG_INFINITY;
    if dim == 1 {
        for i in 0..grid {
            let x = [coord(0, i)];
            let v = eval(&x, &mut evals);
            if v > best_v {
                best_v = v;
                best_x = x.to_vec();
            }
        }
    } else {
        for i in 0..grid {
            for j in 0..grid {
                let x = [coord(0, i), coord(1, j)];
                let v = eval(&x, &mut evals);
                if v > best_v {
                    best_v = v;
                    best_x = x.to_vec();
                }
            }
        }
    }
    let grid_best = best_v;
    if !grid_best.is_finite() {
        return (best_x, best_v, evals, grid_best);
    }

    // Nelder–Mead from the best grid cell; initial steps of one grid cell,
    // flipped where that would leave the box.
    let clamp = |x: &mut [f64]| {
        for (xi, (lo, hi)) in x.iter_mut().zip(bounds) {
            *xi = xi.clamp(*lo, *hi);
        }
    };
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((best_x.clone(), best_v));
    for axis in 0..dim {
        let (lo, hi) = bounds[axis];
        let step = (hi - lo) / (grid - 1) as f64;
        let mut x = best_x.clone();
        x[axis] = if x[axis] + step <= hi {
            x[axis] + step
        } else {
            x[axis] - step
        };
        let v = eval(&x, &mut evals);
        simplex.push((x, v));
    }

    let mut champion = (best_x.clone(), best_v);
    let consider = |x: &[f64], v: f64, champion: &mut (Vec<f64>, f64)| {
        if v > champion.1 {
            *champion = (x.to_vec(), v);
        }
    };
    for s in &simplex {
        consider(&s.0, s.1, &mut champion);
    }

    for _ in 0..refine_iters {
        // Highest value first (maximization).
        simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        let spread = simplex[0].1 - simplex[dim].1;
        let diameter = simplex
            .iter()
            .flat_map(|a| {
                simplex
                    .iter()
                    .map(move |b| a.0.iter().zip(&b.0).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max))
            })
            .fold(0.0, f64::max);
        if spread.abs() < tol || diameter < 1e-12 {
            break;
        }

        let worst = simplex[dim].clone();
        let mut centroid = vec![0.0; dim];
        for s in &simplex[..dim] {
            for (c, x) in centroid.iter_mut().zip(&s.0) {
                *c += x / dim as f64;
            }
        }
        let towards = |t: f64| -> Vec<f64> {
            // Point centroid + t·(centroid − worst), clamped into the box.
            let mut x: Vec<f64> = centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + t * (c - w))
                .collect();
            clamp(&mut x);
            x
        };

        let xr = towards(1.0);
        let fr = eval(&xr, &mut evals);
        consider(&xr, fr, &mut champion);
        if fr > simplex[0].1 {
            let xe = towards(2.0);
            let fe = eval(&xe, &mut evals);
            consider(&xe, fe, &mut champion);
            simplex[dim] = if fe > fr { (xe, fe) } else { (xr, fr) };
        } else if fr > simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
        } else {
            let xc = towards(-0.5);
            let fc = eval(&xc, &mut evals);
            consider(&xc, fc, &mut champion);
            if fc > worst.1 {
                simplex[dim] = (xc, fc);
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].0.clone();
                for s in simplex.iter_mut().skip(1) {
                    for (x, b) in s.0.iter_mut().zip(&best) {
                        *x = b + 0.5 * (*x - b);
                    }
                    s.1 = eval(&s.0, &mut evals);
                    let (x, v) = (s.0.clone(), s.1);
                    consider(&x, v, &mut champion);
                }
            }
        }
    }

    (champion.0, champion.1, evals, grid_best)
}

/// Best tuning for the gate under `spec`, in the given environment.
pub fn optimize_gate(env: &GateEnvironment, spec: &OptimizationSpec) -> Result<Optimum, GateError> {
    spec.validate()?;
    let vars: Vec<TuneVar> = spec.free.iter().map(|b| b.var).collect();
    let bounds: Vec<(f64, f64)> = spec
        .free
        .iter()
        .map(|b| (encode(b.var, b.lo), encode(b.var, b.hi)))
        .collect();
    let base = spec.base;
    let build = |coords: &[f64]| -> GateTuning {
        let mut t = base;
        for (var, c) in vars.iter().zip(coords) {
            t = t.with(*var, decode(*var, *c));
        }
        t
    };
    let (x, v, evals, grid_best) = maximize(
        |c| objective(env, &build(c)),
        &bounds,
        spec.grid,
        spec.refine_iters,
        spec.tol,
    );
    if !grid_best.is_finite() {
        return Err(GateError::EmptyFeasibleRegion);
    }
    Ok(Optimum {
        tuning: build(&x),
        success: v,
        evaluations: evals,
        grid_best,
    })
}

/// Variable swept along the x-axis of a comparison curve. Unlike `TuneVar`
/// this includes environment knobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweptVar {
    DeltaR,
    BigDeltaR,
    EpsKappa,
    Omega,
    NAtoms,
}

/// What to do with the non-swept tunings at each point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum OtherVars {
    /// Evaluate at this fixed tuning.
    Fixed(GateTuning),
    /// Re-optimize at every swept value using this spec (with the swept
    /// variable pinned if it is a tuning variable).
    Optimized(OptimizationSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub outcome: Result<(f64, GateTuning), GateError>,
}

/// One row per swept value; failed points carry their error rather than
/// being dropped.
pub fn sweep_1d(
    env: &GateEnvironment,
    swept: SweptVar,
    values: &[f64],
    others: &OtherVars,
) -> Vec<SweepRow> {
    values
        .iter()
        .map(|&value| {
            let point_env = match swept {
                SweptVar::Omega => GateEnvironment::new(env.gamma_r, value, env.n_atoms),
                SweptVar::NAtoms => GateEnvironment::new(env.gamma_r, env.omega, value as u32),
                _ => GateEnvironment::new(env.gamma_r, env.omega, env.n_atoms),
            };
            let outcome = point_env.and_then(|point_env| match others {
                OtherVars::Fixed(tuning) => {
                    let t = pin_swept(*tuning, swept, value);
                    let s = match &t {
                        GateTuning::Phase(pt) => phase_success(&point_env, pt)?.success,
                        GateTuning::Zeno(zt) => {
                            // Reported curves use the raw survival; rates
                            // validate the tuning.
                            zeno_rates(&point_env, zt)?;
                            zeno_transition(&point_env, zt)?.success
                        }
                    };
                    Ok((s, t))
                }
                OtherVars::Optimized(spec) => {
                    let mut spec = spec.clone();
                    spec.base = pin_swept(spec.base, swept, value);
                    if let Some(tv) = tune_var_of(swept) {
                        spec.free.retain(|b| b.var != tv);
                        if spec.free.is_empty() {
                            let opt_s = objective(&point_env, &spec.base);
                            return if opt_s.is_finite() {
                                Ok((opt_s, spec.base))
                            } else {
                                Err(GateError::DegenerateTuning)
                            };
                        }
                    }
                    let o = optimize_gate(&point_env, &spec)?;
                    Ok((o.success, o.tuning))
                }
            });
            SweepRow { value, outcome }
        })
        .collect()
}

fn tune_var_of(swept: SweptVar) -> Option<TuneVar> {
    match swept {
        SweptVar::DeltaR => Some(TuneVar::DeltaR),
        SweptVar::BigDeltaR => Some(TuneVar::BigDeltaR),
        SweptVar::EpsKappa => Some(TuneVar::EpsKappa),
        SweptVar::Omega | SweptVar::NAtoms => None,
    }
}

fn pin_swept(t: GateTuning, swept: SweptVar, value: f64) -> GateTuning {
    match tune_var_of(swept) {
        Some(tv) if applies(&t, tv) => t.with(tv, value),
        _ => t,
    }
}

fn applies(t: &GateTuning, var: TuneVar) -> bool {
    !t.get(var).is_nan()
}

//! Closed-form model of the nonlinear (Kerr) phase gate: energy shift, gate
//! time, per-channel loss probabilities, and success probability for 1 and
//! N atoms.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::GateError;
use crate::params::{DimensionalParams, GateEnvironment, PhaseTuning};

/// Relative threshold below which the phase-shift denominator is treated as
/// zero (the gate time diverges there).
pub const DEGENERACY_REL_TOL: f64 = 1e-12;

/// Perturbed atomic populations with two photons present.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbedPopulations {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
}

impl PerturbedPopulations {
    /// True when either excited-state population exceeds 0.1, i.e. the
    /// perturbative expressions are being evaluated outside their formal
    /// regime. The formulas are still evaluated as printed.
    pub fn perturbativity_warning(&self) -> bool {
        self.rho22 > 0.1 || self.rho33 > 0.1
    }
}

/// Success probability of the phase gate together with its per-channel loss
/// decomposition and the underlying shift/time in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseGateResult {
    /// Real part of the fourth-order ground-state energy shift (natural units).
    pub energy_shift_re: f64,
    /// Interaction time required for a π phase shift (units of 1/κ).
    pub gate_time: f64,
    /// Cavity photon loss while both photons are present.
    pub loss_cavity_two_photon: f64,
    /// Cavity photon loss in the virtual single-photon state.
    pub loss_cavity_virtual: f64,
    /// Decay of the intermediate atomic level.
    pub loss_atomic_intermediate: f64,
    /// Decay of the upper atomic level.
    pub loss_atomic_upper: f64,
    /// 1 minus the sum of the four loss channels. The truncated expansion can
    /// fall below zero for bad tunings; the raw value is returned.
    pub success: f64,
    /// False when the expansion has left its domain of validity (raw success
    /// below zero or any single loss term above 1).
    pub valid: bool,
}

/// Fourth-order ground-state energy shift as a complex number; the imaginary
/// part reflects the reduced ground-state lifetime.
pub fn fourth_order_shift(p: &DimensionalParams) -> Complex64 {
    let d2 = Complex64::new(p.big_delta, 0.5 * p.gamma2);
    let d3 = Complex64::new(p.delta, 0.5 * p.gamma3);
    let num = (p.g1 * p.g1) * (p.g2 * p.g2);
    num / (p.hbar.powi(3) * d2 * d2 * d3)
}

/// Real part of the fourth-order shift in expanded algebraic form; an
/// independent route used to cross-check `fourth_order_shift`.
pub fn fourth_order_shift_re(p: &DimensionalParams) -> f64 {
    let b2 = 4.0 * p.big_delta * p.big_delta + p.gamma2 * p.gamma2;
    let b3 = 4.0 * p.delta * p.delta + p.gamma3 * p.gamma3;
    let num = 4.0 * p.delta * p.big_delta * p.big_delta
        - 2.0 * p.gamma2 * p.gamma3 * p.big_delta
        - p.gamma2 * p.gamma2 * p.delta;
    16.0 * (p.g1 * p.g1) * (p.g2 * p.g2) * num / (p.hbar.powi(3) * b2 * b2 * b3)
}

/// Perturbed populations in dimensionless form.
pub fn phase_populations(env: &GateEnvironment, t: &PhaseTuning) -> PerturbedPopulations {
    let bm = 4.0 * t.big_delta_r * t.big_delta_r + 1.0;
    let bu = 4.0 * t.delta_r * t.delta_r + 1.0;
    let om2 = env.omega * env.omega;
    PerturbedPopulations {
        rho11: 1.0,
        rho22: 4.0 * om2 / bm,
        rho33: 16.0 * om2 * om2 / (bm * bu),
    }
}

/// |4 δr Δr² − 2 Δr − δr|, or None when degenerate.
fn denominator_dimensionless(t: &PhaseTuning) -> Option<f64> {
    let lead = 4.0 * t.delta_r * t.big_delta_r * t.big_delta_r;
    let raw = lead - 2.0 * t.big_delta_r - t.delta_r;
    if raw.abs() < DEGENERACY_REL_TOL * lead.abs().max(1.0) {
        None
    } else {
        Some(raw.abs())
    }
}

/// |4 δ Δ² − 2 Γ2 Γ3 Δ − Γ2² δ|, or None when degenerate.
fn denominator_dimensional(p: &DimensionalParams) -> Option<f64> {
    let lead = 4.0 * p.delta * p.big_delta * p.big_delta;
    let raw = lead - 2.0 * p.gamma2 * p.gamma3 * p.big_delta - p.gamma2 * p.gamma2 * p.delta;
    if raw.abs() < DEGENERACY_REL_TOL * lead.abs().max(1.0) {
        None
    } else {
        Some(raw.abs())
    }
}

/// Interaction time required for an N-atom π phase shift (dimensional form).
pub fn phase_gate_time(p: &DimensionalParams) -> Result<f64, GateError> {
    let d = denominator_dimensional(p).ok_or(GateError::DegenerateTuning)?;
    let b2 = 4.0 * p.big_delta * p.big_delta + p.gamma2 * p.gamma2;
    let b3 = 4.0 * p.delta * p.delta + p.gamma3 * p.gamma3;
    let n = p.n_atoms as f64;
    Ok(PI * p.hbar.powi(4) * b2 * b2 * b3 / (16.0 * n * (p.g1 * p.g1) * (p.g2 * p.g2) * d))
}

/// Success probability on the dimensional path (explicit ħ, κ and possibly
/// asymmetric g1/g2, Γ2/Γ3). The absolute value is applied uniformly to the
/// shared denominator.
pub fn phase_success_dimensional(p: &DimensionalParams) -> Result<f64, GateError> {
    let d = denominator_dimensional(p).ok_or(GateError::DegenerateTuning)?;
    let b2 = 4.0 * p.big_delta * p.big_delta + p.gamma2 * p.gamma2;
    let b3 = 4.0 * p.delta * p.delta + p.gamma3 * p.gamma3;
    let n = p.n_atoms as f64;
    let upper = PI * p.gamma3 * b2 / d;
    let cavity_two_photon = 2.0 * (p.kappa / n) * PI * p.hbar.powi(4) * b2 * b2 * b3
        / (16.0 * (p.g1 * p.g1) * (p.g2 * p.g2) * d);
    let combined = PI * p.hbar * p.hbar * (p.kappa / n + p.gamma2) * b2 * b3
        / (4.0 * (p.g2 * p.g2) * d);
    Ok(1.0 - upper - cavity_two_photon - combined)
}

/// Success probability and loss breakdown on the dimensionless path.
pub fn phase_success(
    env: &GateEnvironment,
    t: &PhaseTuning,
) -> Result<PhaseGateResult, GateError> {
    let d = denominator_dimensionless(t).ok_or(GateError::DegenerateTuning)?;
    let bm = 4.0 * t.big_delta_r * t.big_delta_r + 1.0;
    let bu = 4.0 * t.delta_r * t.delta_r + 1.0;
    let n = env.n_atoms as f64;
    let gr = env.gamma_r;
    let om2 = env.omega * env.omega;
    let om4 = om2 * om2;

    let loss_atomic_upper = PI * bm / d;
    let loss_cavity_two_photon = PI * bm * bm * bu / (8.0 * n * gr * om4 * d);
    // The single-photon term combines a cavity channel and the intermediate
    // atomic decay in the ratio 1 : N Γr.
    let combined = PI * (1.0 + n * gr) * bm * bu / (4.0 * n * gr * om2 * d);
    let loss_cavity_virtual = combined / (1.0 + n * gr);
    let loss_atomic_intermediate = combined * (n * gr) / (1.0 + n * gr);

    let success = 1.0
        - (loss_atomic_upper
            + loss_cavity_two_photon
            + loss_cavity_virtual
            + loss_atomic_intermediate);
    let valid = success >= 0.0
        && loss_atomic_upper <= 1.0
        && loss_cavity_two_photon <= 1.0
        && loss_cavity_virtual <= 1.0
        && loss_atomic_intermediate <= 1.0;

    let dims = DimensionalParams::from_dimensionless(env, t, 1.0);
    Ok(PhaseGateResult {
        energy_shift_re: fourth_order_shift(&dims).re,
        gate_time: phase_gate_time(&dims)?,
        loss_cavity_two_photon,
        loss_cavity_virtual,
        loss_atomic_intermediate,
        loss_atomic_upper,
        success,
        valid,
    })
}

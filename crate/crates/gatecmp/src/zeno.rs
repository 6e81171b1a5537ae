//! Quantum Zeno gate model: scattering rates during the swap, the
//! effective two-photon coupling, the success probability of the blocked
//! (two-photon) channel, and the fidelity of the single-photon swap.
//!
//! The success probability involves cosh/sinh of an argument that easily
//! exceeds 700, so everything is evaluated in the log domain.

use std::f64::consts::PI;

use crate::error::GateError;
use crate::params::{GateEnvironment, ZenoTuning};

/// Scattering rates and derived quantities, all pre-multiplied by the swap
/// time so they are dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoRates {
    /// Single-photon scattering rate times the swap time, in the two-photon
    /// channel.
    pub r1_ts: f64,
    /// Two-photon scattering rate times the swap time.
    pub r2_ts: f64,
    /// Single-photon scattering rate times the swap time when only one
    /// photon is present (no partner to scatter off).
    pub r1_swap_ts: f64,
    /// Swap time in units of 1/κ.
    pub t_s: f64,
    /// (r2_ts/4)² − (π/2)²·(effective coupling measure); the sign selects the
    /// overdamped (cosh) or oscillatory (cos) branch of the evolution.
    pub radicand: f64,
}

impl ZenoRates {
    /// |Ω0 ts| = sqrt(|radicand|).
    pub fn omega0_ts(&self) -> f64 {
        self.radicand.abs().sqrt()
    }
}

/// Amplitudes the two-photon input maps onto after the swap, together with
/// the success probability of the gate as a whole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoTransition {
    /// Amplitude retained by the vacuum component (always 1).
    pub amp_00: f64,
    /// Amplitude of a single photon completing the swap.
    pub amp_01_swap: f64,
    pub amp_10_swap: f64,
    /// Amplitude for the two-photon component to remain unswapped (the Zeno
    /// blockade); its square is the field below.
    pub amp_11: f64,
    /// Probability the two-photon channel survives, i.e. amp_11².
    pub success: f64,
}

/// Scattering rates for the given environment and tuning.
pub fn zeno_rates(env: &GateEnvironment, t: &ZenoTuning) -> Result<ZenoRates, GateError> {
    t.validate()?;
    let n = env.n_atoms as f64;
    let gr = env.gamma_r;
    let om2 = env.omega * env.omega;
    let om4 = om2 * om2;
    let bm = 4.0 * t.big_delta_r * t.big_delta_r + 1.0;
    let ek = t.eps_kappa;

    let r1_ts = (PI / (2.0 * ek)) * (1.0 + 4.0 * (1.0 + n * gr) * om2 / bm);
    let r2_ts = 8.0 * PI * n * gr * om4 / (ek * bm);
    let r1_swap_ts = (PI / (2.0 * ek)) * (1.0 + 4.0 * n * gr * om2 / bm);
    let t_s = PI / (2.0 * ek);

    // (Ω_N ts)² = (2 N Γr Ω⁴ π / (ε_κ bm))² − (π/2)·... rearranged so that
    // radicand = (r2_ts/4)² − π².  Positive radicand: blockade overdamps the
    // swap; negative: residual Rabi flopping of the pair.
    let quarter = r2_ts / 4.0;
    let radicand = quarter * quarter - PI * PI;

    Ok(ZenoRates {
        r1_ts,
        r2_ts,
        r1_swap_ts,
        t_s,
        radicand,
    })
}

/// ln|α| and sign(α), where
///   α = cosh(x) + (r2_ts/4)·sinh(x)/x,  x = sqrt(radicand)      (radicand > 0)
///   α = cos(y)  + (r2_ts/4)·sin(y)/y,   y = sqrt(-radicand)     (radicand < 0)
/// with the shared limit α = 1 + r2_ts/4 at radicand = 0.
pub fn alpha_log_abs(radicand: f64, r2_ts: f64) -> (f64, f64) {
    let q = r2_ts / 4.0;
    if radicand.abs() < 1e-8 {
        // Series in the radicand: cosh x = 1 + rad/2 + rad²/24, sinh(x)/x =
        // 1 + rad/6 + rad²/120 (valid for either sign).
        let a = (1.0 + radicand / 2.0 + radicand * radicand / 24.0)
            + q * (1.0 + radicand / 6.0 + radicand * radicand / 120.0);
        return (a.abs().ln(), a.signum());
    }
    if radicand > 0.0 {
        let x = radicand.sqrt();
        // cosh x + q sinh(x)/x = e^x/2 · [(1 + q/x) + (1 − q/x) e^{-2x}],
        // computed without forming e^x.
        let rho = q / x;
        let inner = 0.5 * (1.0 + rho) + 0.5 * (1.0 - rho) * (-2.0 * x).exp();
        // q ≥ 0 and x > 0 make inner positive for every input we produce.
        (x + inner.ln(), 1.0)
    } else {
        let y = (-radicand).sqrt();
        let a = y.cos() + q * y.sin() / y;
        (a.abs().ln(), a.signum())
    }
}

/// Natural log of the two-photon survival probability.
pub fn zeno_log_success(rates: &ZenoRates) -> f64 {
    let (ln_alpha, _sign) = alpha_log_abs(rates.radicand, rates.r2_ts);
    -2.0 * (rates.r1_ts + rates.r2_ts / 4.0) + 2.0 * ln_alpha
}

/// Success probability of the two-photon blockade.
pub fn zeno_success(env: &GateEnvironment, t: &ZenoTuning) -> Result<f64, GateError> {
    Ok(zeno_log_success(&zeno_rates(env, t)?).exp())
}

/// Amplitude fidelity of the single-photon swap, exp(−r1_swap_ts / ...):
/// the surviving probability is exp(−2·r1_swap_ts·(1/2)) = exp(−r1_swap_ts),
/// so the amplitude is its square root.
pub fn swap_fidelity(rates: &ZenoRates) -> f64 {
    (-0.5 * rates.r1_swap_ts).exp()
}

/// Full transition summary for the four logical inputs.
pub fn zeno_transition(env: &GateEnvironment, t: &ZenoTuning) -> Result<ZenoTransition, GateError> {
    let rates = zeno_rates(env, t)?;
    let success = zeno_log_success(&rates).exp();
    let (_, sign) = alpha_log_abs(rates.radicand, rates.r2_ts);
    let amp_11 = sign * success.sqrt();
    let swap = swap_fidelity(&rates);
    Ok(ZenoTransition {
        amp_00: 1.0,
        amp_01_swap: swap,
        amp_10_swap: swap,
        amp_11,
        success,
    })
}

//! Time-dependent waveguide–resonator coupling that ejects a stored photon
//! as a Gaussian pulse: the required coupling coefficient R²(t), the decaying
//! resonator energy, an energy-conservation audit, and the time-reversed
//! injection profile.
//!
//! Everything is expressed in ratios (E²/E0², R²) with time in units of the
//! resonator round-trip time τ_R, so no field normalization constants appear.

use libm::erf;

use crate::error::GateError;

/// Parameters of the extraction: Gaussian width `a` (in units of τ_R),
/// residual energy fraction `r` = (ΔE/E0)² deliberately left behind to cap
/// the peak coupling, plus the sampling grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchSpec {
    pub a: f64,
    pub r: f64,
    /// Sampling interval in units of `a` (default ±4).
    pub t_range: (f64, f64),
    /// Grid size; odd so t = 0 is on-grid.
    pub samples: usize,
}

impl SwitchSpec {
    pub fn new(a: f64, r: f64) -> Result<Self, GateError> {
        let spec = SwitchSpec {
            a,
            r,
            t_range: (-4.0, 4.0),
            samples: 2001,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GateError> {
        if !(self.r > 0.0 && self.r < 1.0) {
            return Err(GateError::ResidualOutOfRange);
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(GateError::InvalidSwitchSpec("pulse width must be positive"));
        }
        if self.samples < 3 || self.samples.is_multiple_of(2) {
            return Err(GateError::InvalidSwitchSpec("samples must be odd and ≥ 3"));
        }
        if self.t_range.0.partial_cmp(&self.t_range.1) != Some(std::cmp::Ordering::Less) {
            return Err(GateError::InvalidSwitchSpec("empty time range"));
        }
        Ok(())
    }
}

/// Sampled extraction profile. Times are in units of `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchProfile {
    pub spec: SwitchSpec,
    pub t_over_a: Vec<f64>,
    /// Required coupling coefficient squared.
    pub r_sq: Vec<f64>,
    /// Resonator energy E²(t)/E0².
    pub e_sq: Vec<f64>,
    /// Output pulse envelope |E_out(t)|²/E1² = exp(−2t²/a²).
    pub out_env: Vec<f64>,
    /// (E1/E0)²: peak output intensity over initial stored intensity.
    pub e1_over_e0_sq: f64,
    pub max_r_sq: f64,
}

/// R²(t) = exp(−2t²/a²) / { √(π/2)·a·[ r/(1−r) + 1/2 − Erf(√2 t/a)/2 ] }
/// with `a` in units of τ_R and u = t/a.
fn r_sq_at(a: f64, r: f64, u: f64) -> f64 {
    let gauss = (-2.0 * u * u).exp();
    let denom = (std::f64::consts::PI / 2.0).sqrt()
        * a
        * (r / (1.0 - r) + 0.5 - 0.5 * erf(std::f64::consts::SQRT_2 * u));
    gauss / denom
}

/// E²(t)/E0² = (1−r)·(1 − Erf(√2 t/a))/2 + r: the stored energy that has not
/// yet left, plus the residual that never does.
fn e_sq_at(r: f64, u: f64) -> f64 {
    (1.0 - r) * 0.5 * (1.0 - erf(std::f64::consts::SQRT_2 * u)) + r
}

/// Sample the extraction profile on the grid.
pub fn coupling_profile(spec: &SwitchSpec) -> Result<SwitchProfile, GateError> {
    spec.validate()?;
    let n = spec.samples;
    let (lo, hi) = spec.t_range;
    let mut t_over_a = Vec::with_capacity(n);
    let mut r_sq = Vec::with_capacity(n);
    let mut e_sq = Vec::with_capacity(n);
    let mut out_env = Vec::with_capacity(n);
    for i in 0..n {
        let u = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        t_over_a.push(u);
        r_sq.push(r_sq_at(spec.a, spec.r, u));
        e_sq.push(e_sq_at(spec.r, u));
        out_env.push((-2.0 * u * u).exp());
    }
    let max_r_sq = r_sq.iter().cloned().fold(0.0, f64::max);
    // E1² = (E0² − ΔE²)·√(2/π)/a in the slow-switching limit.
    let e1_over_e0_sq = (1.0 - spec.r) * (2.0 / std::f64::consts::PI).sqrt() / spec.a;
    Ok(SwitchProfile {
        spec: *spec,
        t_over_a,
        r_sq,
        e_sq,
        out_env,
        e1_over_e0_sq,
        max_r_sq,
    })
}

/// Maximum over the grid of the energy-balance residual
/// | E²(T)/E0² + (emitted up to T)/E0² − 1 |, with the emitted energy done in
/// closed form via Erf. The balance is against the left grid edge rather
/// than t → −∞, so the Gaussian tail cut off by the grid is added back.
pub fn energy_audit(profile: &SwitchProfile) -> f64 {
    let a = profile.spec.a;
    let s2 = std::f64::consts::SQRT_2;
    let lo = profile.t_over_a[0];
    let mut worst = 0.0f64;
    for (&u, &e) in profile.t_over_a.iter().zip(&profile.e_sq) {
        // ∫ E1²·exp(−2τ²/a²) dτ from lo·a to u·a
        //   = E1²·a·√(π/2)·(Erf(√2 u) − Erf(√2 lo))/2.
        let emitted = profile.e1_over_e0_sq
            * a
            * (std::f64::consts::PI / 2.0).sqrt()
            * 0.5
            * (erf(s2 * u) - erf(s2 * lo));
        // Tail that escaped before the grid started:
        let pre = (1.0 - profile.spec.r) * 0.5 * (1.0 + erf(s2 * lo));
        let residual = (e + emitted + pre - 1.0).abs();
        worst = worst.max(residual);
    }
    worst
}

/// The time-reversed profile: running the coupling backwards injects the
/// same Gaussian pulse into the resonator instead of extracting it.
pub fn reverse_profile(profile: &SwitchProfile) -> SwitchProfile {
    let mut out = profile.clone();
    out.t_over_a = profile.t_over_a.iter().rev().map(|t| -t).collect();
    out.r_sq = profile.r_sq.iter().rev().cloned().collect();
    out.e_sq = profile.e_sq.iter().rev().cloned().collect();
    out.out_env = profile.out_env.iter().rev().cloned().collect();
    let (lo, hi) = profile.spec.t_range;
    out.spec.t_range = (-hi, -lo);
    out
}


impl SwitchProfile {
    /// Index of the t = 0 sample (grids are odd-sized and symmetric by
    /// default; for asymmetric ranges this is the sample nearest zero).
    pub fn samples_at_zero(&self) -> usize {
        self.t_over_a
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .unwrap()
            .0
    }
}

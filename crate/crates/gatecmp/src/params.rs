//! Physical and dimensionless gate parameters, the conversion between them,
//! and flat key-value config ingestion.

use crate::error::GateError;

/// Dimensional parameters of a three-level atom coupled to a resonator mode.
///
/// Photon frequencies enter only through the two detunings: `big_delta` is the
/// intermediate-level detuning Δ = ω1 − ω21 and `delta` is the two-photon
/// (upper-level) detuning δ = ω1 + ω2 − ω21 − ω32.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionalParams {
    /// |1⟩ → |2⟩ coupling matrix element (energy units).
    pub g1: f64,
    /// |2⟩ → |3⟩ coupling matrix element (energy units).
    pub g2: f64,
    /// Intermediate-state decay rate (rad/s).
    pub gamma2: f64,
    /// Upper-state decay rate (rad/s).
    pub gamma3: f64,
    /// Cavity field decay rate (rad/s).
    pub kappa: f64,
    /// Intermediate detuning Δ (rad/s, signed).
    pub big_delta: f64,
    /// Upper-level detuning δ (rad/s, signed).
    pub delta: f64,
    /// Resonator-resonator coupling (energy units).
    pub eps: f64,
    /// Reduced Planck constant (energy·s); 1 in natural units.
    pub hbar: f64,
    /// Number of atoms coupled to the field.
    pub n_atoms: u32,
}

impl DimensionalParams {
    pub fn validate(&self) -> Result<(), GateError> {
        if self.gamma2 <= 0.0 || self.gamma2.is_nan() {
            return Err(GateError::NonPositiveRate("gamma2 must be > 0"));
        }
        if self.gamma3 <= 0.0 || self.gamma3.is_nan() {
            return Err(GateError::NonPositiveRate("gamma3 must be > 0"));
        }
        if self.kappa <= 0.0 || self.kappa.is_nan() {
            return Err(GateError::NonPositiveRate("kappa must be > 0"));
        }
        if self.hbar <= 0.0 || self.hbar.is_nan() {
            return Err(GateError::NonPositiveRate("hbar must be > 0"));
        }
        if self.n_atoms < 1 {
            return Err(GateError::NonPositiveRate("n_atoms must be >= 1"));
        }
        if self.g1 < 0.0 || self.g2 < 0.0 {
            return Err(GateError::NonPositiveRate("g1 and g2 must be >= 0"));
        }
        if self.eps < 0.0 {
            return Err(GateError::NonPositiveRate("eps must be >= 0"));
        }
        Ok(())
    }

    /// Reduce to the dimensionless description. Requires the symmetric case
    /// gamma2 = gamma3 and g1 = g2; the general asymmetric parameters are
    /// supported only on the dimensional evaluation path.
    pub fn to_dimensionless(
        &self,
    ) -> Result<(GateEnvironment, PhaseTuning, ZenoTuning), GateError> {
        self.validate()?;
        if self.gamma2 != self.gamma3 || self.g1 != self.g2 {
            return Err(GateError::AsymmetricParams);
        }
        let gamma = self.gamma2;
        let env = GateEnvironment::new(
            gamma / self.kappa,
            self.g1 / (self.hbar * gamma),
            self.n_atoms,
        )?;
        let phase = PhaseTuning {
            delta_r: self.delta / gamma,
            big_delta_r: self.big_delta / gamma,
        };
        let eps_kappa = self.eps / self.hbar / self.kappa;
        if eps_kappa <= 0.0 || eps_kappa.is_nan() {
            return Err(GateError::NonPositiveCoupling);
        }
        let zeno = ZenoTuning {
            eps_kappa,
            big_delta_r: phase.big_delta_r,
        };
        Ok((env, phase, zeno))
    }

    /// Reconstruct a dimensional parameter set in natural units
    /// (kappa = hbar = 1) from a dimensionless description.
    pub fn from_dimensionless(
        env: &GateEnvironment,
        phase: &PhaseTuning,
        eps_kappa: f64,
    ) -> DimensionalParams {
        let gamma = env.gamma_r;
        DimensionalParams {
            g1: env.omega * gamma,
            g2: env.omega * gamma,
            gamma2: gamma,
            gamma3: gamma,
            kappa: 1.0,
            big_delta: phase.big_delta_r * gamma,
            delta: phase.delta_r * gamma,
            eps: eps_kappa,
            hbar: 1.0,
            n_atoms: env.n_atoms,
        }
    }
}

/// Fixed hardware parameters shared by both gates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateEnvironment {
    /// Atomic decay rate over cavity decay rate, Γ/κ.
    pub gamma_r: f64,
    /// Normalized Rabi frequency g/(ħΓ).
    pub omega: f64,
    /// Number of atoms coupled to the field.
    pub n_atoms: u32,
}

impl GateEnvironment {
    pub fn new(gamma_r: f64, omega: f64, n_atoms: u32) -> Result<Self, GateError> {
        if gamma_r <= 0.0 || gamma_r.is_nan() {
            return Err(GateError::NonPositiveRate("gamma_r must be > 0"));
        }
        if omega <= 0.0 || omega.is_nan() {
            return Err(GateError::NonPositiveRate("omega must be > 0"));
        }
        if n_atoms < 1 {
            return Err(GateError::NonPositiveRate("n_atoms must be >= 1"));
        }
        Ok(GateEnvironment {
            gamma_r,
            omega,
            n_atoms,
        })
    }
}

/// Adjustable knobs of the nonlinear phase gate: the two detunings in units
/// of the atomic decay rate. Both are signed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseTuning {
    /// Upper-level detuning δ/Γ.
    pub delta_r: f64,
    /// Intermediate detuning Δ/Γ.
    pub big_delta_r: f64,
}

/// Adjustable knobs of the Zeno gate. The upper-level detuning is implicitly
/// zero (the two-photon absorption coefficient is maximized on resonance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoTuning {
    /// Resonator-resonator coupling over κ; must be positive so the swap
    /// time stays finite.
    pub eps_kappa: f64,
    /// Intermediate detuning Δ/Γ.
    pub big_delta_r: f64,
}

impl ZenoTuning {
    pub fn validate(&self) -> Result<(), GateError> {
        if self.eps_kappa <= 0.0 || self.eps_kappa.is_nan() {
            return Err(GateError::NonPositiveCoupling);
        }
        Ok(())
    }
}

/// Values read from a flat key-value config file. Any subset of the keys may
/// be present; missing ones fall back to the caller's defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigValues {
    pub gamma_r: Option<f64>,
    pub omega: Option<f64>,
    pub n_atoms: Option<u32>,
    pub delta_r: Option<f64>,
    pub big_delta_r: Option<f64>,
    pub eps_kappa: Option<f64>,
}

/// Parse a flat key-value config. Keys: `gamma_r`, `omega`, `n_atoms`,
/// `delta_r`, `Delta_r`, `eps_kappa`. `#` starts a comment; `key = value`
/// and `key value` are both accepted.
pub fn parse_config(text: &str) -> Result<ConfigValues, GateError> {
    let mut out = ConfigValues::default();
    for (i, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = match line.split_once('=') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => line
                .split_once(char::is_whitespace)
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| {
                    GateError::Config(format!("line {}: expected `key = value`", i + 1))
                })?,
        };
        let bad_num =
            |k: &str| GateError::Config(format!("line {}: invalid number for `{}`", i + 1, k));
        match key {
            "gamma_r" => out.gamma_r = Some(value.parse().map_err(|_| bad_num(key))?),
            "omega" => out.omega = Some(value.parse().map_err(|_| bad_num(key))?),
            "n_atoms" => out.n_atoms = Some(value.parse().map_err(|_| bad_num(key))?),
            "delta_r" => out.delta_r = Some(value.parse().map_err(|_| bad_num(key))?),
            "Delta_r" => out.big_delta_r = Some(value.parse().map_err(|_| bad_num(key))?),
            "eps_kappa" => out.eps_kappa = Some(value.parse().map_err(|_| bad_num(key))?),
            other => {
                return Err(GateError::Config(format!(
                    "line {}: unknown key `{}`",
                    i + 1,
                    other
                )))
            }
        }
    }
    Ok(out)
}

pub fn load_config(path: &std::path::Path) -> Result<ConfigValues, GateError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GateError::Config(format!("{}: {}", path.display(), e)))?;
    parse_config(&text)
}

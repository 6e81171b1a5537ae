use thiserror::Error;

/// Errors shared across the gate models, oracles, optimizer, and CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GateError {
    #[error("asymmetric parameters: the dimensionless reduction requires gamma2 = gamma3 and g1 = g2")]
    AsymmetricParams,
    #[error("nonpositive rate or count: {0}")]
    NonPositiveRate(&'static str),
    #[error("resonator-resonator coupling must be positive")]
    NonPositiveCoupling,
    #[error("degenerate tuning: the phase-shift denominator vanishes (infinite gate time)")]
    DegenerateTuning,
    #[error("residual energy fraction must lie strictly inside (0, 1)")]
    ResidualOutOfRange,
    #[error("invalid switch spec: {0}")]
    InvalidSwitchSpec(&'static str),
    #[error("eigenvalue branch tracking failed: spacing below resolution")]
    EigenvalueTrackingFailure,
    #[error("step count too small: the integrator needs at least 1000 steps")]
    StepCountTooSmall,
    #[error("empty feasible region: every grid point failed to evaluate")]
    EmptyFeasibleRegion,
    #[error("unknown figure id: {0}")]
    UnknownFigure(String),
    #[error("invalid optimization spec: {0}")]
    InvalidOptimizationSpec(&'static str),
    #[error("config error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GateError {
    fn from(e: std::io::Error) -> Self {
        GateError::Io(e.to_string())
    }
}

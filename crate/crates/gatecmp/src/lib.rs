//! Success-probability models for two kinds of cavity-QED photonic logic
//! gates — nonlinear (Kerr) phase gates and quantum Zeno gates — plus the
//! machinery to optimize, cross-validate, and compare them.
//!
//! The layering is: [`params`] defines the dimensional and reduced parameter
//! sets; [`phase`] and [`zeno`] hold the closed-form gate models; [`oracle`]
//! re-derives both from first principles (exact 3×3 eigenvalues, RK4 time
//! integration) for verification; [`optimize`] finds the best tunings;
//! [`pulse`] covers the time-dependent waveguide–resonator switching;
//! [`figures`], [`output`] and [`verify`] produce the comparison artifacts
//! consumed by the `gatecmp` binary.

pub mod error;
pub mod figures;
pub mod optimize;
pub mod oracle;
pub mod output;
pub mod params;
pub mod phase;
pub mod pulse;
pub mod verify;
pub mod zeno;

pub use error::GateError;
pub use params::{DimensionalParams, GateEnvironment, PhaseTuning, ZenoTuning};

//! Independent verifiers for the two closed-form models.
//!
//! * An eigenvalue oracle: the fourth-order ground-state shift is recovered
//!   from exact eigenvalues of the 3×3 non-Hermitian single-excitation-chain
//!   matrix by a cross difference in the two couplings.
//! * A time-domain oracle: the Zeno-gate survival probability is recovered
//!   by integrating the two-amplitude reduction of the swap dynamics with
//!   RK4, plus an analytic matrix-exponential solution of the same system as
//!   a second path.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::GateError;
use crate::params::DimensionalParams;
use crate::zeno::ZenoRates;

/// 3×3 complex-symmetric matrix of the two-photon/one-atom chain
/// |g;1,1⟩ ↔ |m;0,1⟩ ↔ |u;0,0⟩ in the rotating frame. Decay enters as
/// imaginary detunings, so the matrix is non-Hermitian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeLevelMatrix {
    /// Coupling of the ground chain link, g1/ħ.
    pub a: Complex64,
    /// Coupling of the upper chain link, g2/ħ.
    pub b: Complex64,
    /// Complex detuning of the intermediate level, −Δ − iΓ2/2.
    pub p: Complex64,
    /// Complex detuning of the upper level, −δ − iΓ3/2.
    pub q: Complex64,
}

impl ThreeLevelMatrix {
    pub fn from_params(params: &DimensionalParams, g1: f64, g2: f64) -> Self {
        ThreeLevelMatrix {
            a: Complex64::new(g1 / params.hbar, 0.0),
            b: Complex64::new(g2 / params.hbar, 0.0),
            p: Complex64::new(-params.big_delta, -0.5 * params.gamma2),
            q: Complex64::new(-params.delta, -0.5 * params.gamma3),
        }
    }

    /// Monic characteristic polynomial λ³ + c2 λ² + c1 λ + c0.
    pub fn char_poly(&self) -> (Complex64, Complex64, Complex64) {
        let c2 = -(self.p + self.q);
        let c1 = self.p * self.q - self.a * self.a - self.b * self.b;
        let c0 = self.a * self.a * self.q;
        (c2, c1, c0)
    }

    pub fn eigenvalues(&self) -> [Complex64; 3] {
        let (c2, c1, c0) = self.char_poly();
        cubic_roots(c2, c1, c0)
    }
}

/// A few Newton steps on λ³ + c2λ² + c1λ + c0, evaluated by Horner's scheme.
fn polish_root(c2: Complex64, c1: Complex64, c0: Complex64, mut x: Complex64) -> Complex64 {
    for _ in 0..3 {
        let f = ((x + c2) * x + c1) * x + c0;
        let df = (3.0 * x + 2.0 * c2) * x + c1;
        if df.norm() == 0.0 {
            break;
        }
        let step = f / df;
        x -= step;
        if step.norm() <= 1e-16 * x.norm().max(1e-300) {
            break;
        }
    }
    x
}

/// Roots of the monic complex cubic λ³ + c2λ² + c1λ + c0 via Cardano's
/// formula (with the anti-cancellation branch choice) followed by Newton
/// polishing.
pub fn cubic_roots(c2: Complex64, c1: Complex64, c0: Complex64) -> [Complex64; 3] {
    // Depress: λ = y − c2/3, y³ + p y + q = 0.
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;

    let roots_y: [Complex64; 3] = if p.norm() == 0.0 && q.norm() == 0.0 {
        [Complex64::default(); 3]
    } else {
        let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        // Pick the u³ candidate with the larger magnitude to avoid
        // cancellation between −q/2 and the square root.
        let z1 = -q / 2.0 + disc;
        let z2 = -q / 2.0 - disc;
        let u3 = if z1.norm() >= z2.norm() { z1 } else { z2 };
        let u = u3.cbrt();
        let omega = Complex64::new(-0.5, 0.75f64.sqrt());
        let mut out = [Complex64::default(); 3];
        let mut uk = u;
        for root in &mut out {
            // y = u − p/(3u); u ≠ 0 here because (p,q) ≠ (0,0) forces u³ ≠ 0.
            *root = uk - p / (3.0 * uk);
            uk *= omega;
        }
        out
    };

    let mut roots = [Complex64::default(); 3];
    for (r, y) in roots.iter_mut().zip(roots_y) {
        *r = polish_root(c2, c1, c0, y - shift);
    }
    roots
}

/// Eigenvalue of the chain matrix that is continuously connected to 0 as the
/// couplings are switched off, found by continuation: the couplings are
/// ramped geometrically from a tenth of their value while following the
/// nearest eigenvalue.
pub fn ground_eigenvalue(params: &DimensionalParams, g1: f64, g2: f64) -> Result<Complex64, GateError> {
    let mut tracked = Complex64::new(0.0, 0.0);
    for step in 0..=4 {
        let s = 10f64.powf(-1.0 + step as f64 / 4.0);
        let m = ThreeLevelMatrix::from_params(params, g1 * s, g2 * s);
        let eigs = m.eigenvalues();
        let mut by_dist: Vec<Complex64> = eigs.to_vec();
        by_dist.sort_by(|x, y| {
            (x - tracked)
                .norm()
                .partial_cmp(&(y - tracked).norm())
                .unwrap()
        });
        let scale = eigs.iter().map(|e| e.norm()).fold(1.0f64, f64::max);
        let d0 = (by_dist[0] - tracked).norm();
        let d1 = (by_dist[1] - tracked).norm();
        if d1 - d0 < 1e-9 * scale {
            return Err(GateError::EigenvalueTrackingFailure);
        }
        tracked = by_dist[0];
    }
    Ok(tracked)
}

/// E(g1,g2) − E(g1,0) − E(0,g2) + E(0,0) where E is ħ times the ground-branch
/// eigenvalue. The difference cancels everything even in either coupling
/// alone, isolating the lowest-order cross term with an O(g⁶) residual.
pub fn cross_difference_shift(params: &DimensionalParams) -> Result<Complex64, GateError> {
    let e11 = ground_eigenvalue(params, params.g1, params.g2)?;
    let e10 = ground_eigenvalue(params, params.g1, 0.0)?;
    let e01 = ground_eigenvalue(params, 0.0, params.g2)?;
    let e00 = ground_eigenvalue(params, 0.0, 0.0)?;
    Ok(params.hbar * (e11 - e10 - e01 + e00))
}

/// Two coupled amplitudes of the swap: the photon pair split across the
/// resonators, and the symmetric double-occupancy combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoTwoAmplitude {
    pub c11: Complex64,
    pub cplus: Complex64,
}

/// Decay rates (per normalized time) on the two amplitudes. Chosen so that
/// the exact solution of the 2×2 system has eigenvalues
/// −(r1_ts + r2_ts/4) ± Ω0·ts — i.e. so the model reproduces the closed-form
/// survival probability identically rather than being an independent
/// discretization of a different system.
fn zeno_decays(rates: &ZenoRates) -> (f64, f64) {
    (rates.r1_ts, rates.r1_ts + rates.r2_ts / 2.0)
}

/// Normalized coupling between the two amplitudes over the swap: π.
const ZENO_COUPLING: f64 = PI;

/// Survival probability |c11(t_s)|² by classic RK4 on normalized time
/// τ ∈ [0, 1].
pub fn integrate_zeno(rates: &ZenoRates, steps: u32) -> Result<f64, GateError> {
    if steps < 1000 {
        return Err(GateError::StepCountTooSmall);
    }
    let (d11, dplus) = zeno_decays(rates);
    if !(d11.is_finite() && dplus.is_finite()) {
        return Err(GateError::NonPositiveRate("zeno rates must be finite"));
    }
    let h = 1.0 / steps as f64;
    let ic = Complex64::new(0.0, -ZENO_COUPLING);
    let deriv = |y: ZenoTwoAmplitude| ZenoTwoAmplitude {
        c11: -d11 * y.c11 + ic * y.cplus,
        cplus: -dplus * y.cplus + ic * y.c11,
    };
    let mut y = ZenoTwoAmplitude {
        c11: Complex64::new(1.0, 0.0),
        cplus: Complex64::new(0.0, 0.0),
    };
    let mut prev_norm = 1.0f64;
    for _ in 0..steps {
        let k1 = deriv(y);
        let k2 = deriv(ZenoTwoAmplitude {
            c11: y.c11 + 0.5 * h * k1.c11,
            cplus: y.cplus + 0.5 * h * k1.cplus,
        });
        let k3 = deriv(ZenoTwoAmplitude {
            c11: y.c11 + 0.5 * h * k2.c11,
            cplus: y.cplus + 0.5 * h * k2.cplus,
        });
        let k4 = deriv(ZenoTwoAmplitude {
            c11: y.c11 + h * k3.c11,
            cplus: y.cplus + h * k3.cplus,
        });
        y = ZenoTwoAmplitude {
            c11: y.c11 + h / 6.0 * (k1.c11 + 2.0 * k2.c11 + 2.0 * k3.c11 + k4.c11),
            cplus: y.cplus + h / 6.0 * (k1.cplus + 2.0 * k2.cplus + 2.0 * k3.cplus + k4.cplus),
        };
        let norm = y.c11.norm_sqr() + y.cplus.norm_sqr();
        debug_assert!(norm <= prev_norm + 1e-9, "norm must only decay");
        prev_norm = norm;
    }
    Ok(y.c11.norm_sqr())
}

/// c11(t_s) from the exact matrix exponential of the same 2×2 system — a
/// second, integration-free path through the oracle.
pub fn analytic_zeno_amplitude(rates: &ZenoRates) -> Complex64 {
    let (d11, dplus) = zeno_decays(rates);
    let mean = 0.5 * (d11 + dplus);
    let half_gap = 0.5 * (dplus - d11);
    // c11(1) = e^{−mean} [cosh μ + half_gap · sinh(μ)/μ],
    // μ² = half_gap² − coupling².
    let mu2 = Complex64::new(half_gap * half_gap - ZENO_COUPLING * ZENO_COUPLING, 0.0);
    let mu = mu2.sqrt();
    let bracket = if mu.norm() < 1e-6 {
        // cosh μ → 1 + μ²/2, sinh(μ)/μ → 1 + μ²/6.
        (1.0 + mu2 / 2.0) + half_gap * (1.0 + mu2 / 6.0)
    } else {
        mu.cosh() + half_gap * mu.sinh() / mu
    };
    (-mean).exp() * bracket
}

//! Special functions underpinning the turning-point analysis: the pair
//! `zeta`/`t`, Airy functions, parabolic cylinder functions `U(a,z)` and
//! `V(a,z)`, the gamma function, and the weight functions used to bound
//! weighted quadratic expressions.
//!
//! All evaluations are pure; results carry a heuristic absolute error
//! estimate so downstream tolerances can be propagated.

mod airy;
mod gamma;
mod pcf;
mod weights;
mod zeta;

pub use airy::{airy, airy_all, AiryKind, AiryValues};
pub use gamma::{gamma, ln_gamma, ln_gamma_signed, rgamma};
pub use pcf::{pcf, pcf_airy_rep, pcf_profile, pcf_scaled, PcfAnchors, ScaledPc, ScaledPcPair};
pub use weights::{ln_weight_w, ln_weight_y, weight_w, weight_y};
pub use zeta::{t_derivs, t_of_zeta, zeta, zeta_deriv, TDerivs, ZETA_AT_MINUS_ONE};

use thiserror::Error;

/// Value of a special-function evaluation together with a heuristic
/// absolute error estimate (last-term magnitude for series, rule
/// comparison for quadrature, drift bound for propagated values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecfunValue {
    pub value: f64,
    pub abs_err_estimate: f64,
}

impl SpecfunValue {
    pub fn new(value: f64, abs_err_estimate: f64) -> Self {
        Self {
            value,
            abs_err_estimate,
        }
    }
}

/// Values of U, V and their z-derivatives at a common (a, z).
#[derive(Debug, Clone, Copy)]
pub struct PcPair {
    pub u: f64,
    pub u_z: f64,
    pub v: f64,
    pub v_z: f64,
}

impl PcPair {
    /// u v_z - v u_z, which equals sqrt(2/pi) for exact values.
    pub fn wronskian(&self) -> f64 {
        self.u * self.v_z - self.v * self.u_z
    }
}

#[derive(Debug, Error)]
pub enum SpecfunError {
    #[error("{func}: argument {arg} outside domain ({detail})")]
    Domain {
        func: &'static str,
        arg: f64,
        detail: &'static str,
    },
    #[error("{func}: accuracy loss, error estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    AccuracyLoss {
        func: &'static str,
        estimate: f64,
        tolerance: f64,
    },
    #[error("{func}: result not representable in f64 (log-magnitude {ln_mag})")]
    Overflow { func: &'static str, ln_mag: f64 },
}

pub type Result<T> = std::result::Result<T, SpecfunError>;

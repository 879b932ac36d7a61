//! Aharonov-Bohm coupling energies of confined Dirac eigenmodes in a
//! cylindrical cavity.
//!
//! The crate computes the coupling energy between a cavity eigenmode and a
//! thin solenoid threading the cavity axis under two prescriptions:
//!
//! * the magnetization-field form `-∫ M·B d³r`, which only sees the flux
//!   core, and
//! * the current-potential form `-∫ j·A d³r`, which is distributed over
//!   the whole region where the vector potential is nonzero.
//!
//! Every closed-form result has an independent quadrature route, and the
//! [`verify`] module runs the full cross-validation suite.
//!
//! Layout:
//!
//! * [`numerics`] - Bessel functions `J_l`/`K_l`, adaptive quadrature and
//!   bracketed root finding. No external special-function dependency.
//! * [`cavity`] - geometry, mode indices and the radial eigenmode solvers.
//! * [`fields`] - charge/current/magnetization densities and the solenoid
//!   potential, including gauge-shifted variants.
//! * [`coupling`] - the coupling energies themselves, closed form and
//!   quadrature.
//!
//! All numerical kernels are generic over the scalar type through the
//! [`Real`] trait; `f64` aliases for the main types live at the crate root
//! and are what the CLI and the verification suite use.

use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

pub mod cavity;
pub mod coupling;
pub mod fields;
pub mod numerics;
pub mod verify;

/// Floating-point scalar the numerical kernels are generic over.
///
/// Implemented by `f32` and `f64`. The accuracy contracts documented on
/// the individual operations (for example the `1e-13` relative error of
/// `bessel_j`) assume `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Converts an `f64` constant into `Self`, rounding as needed.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    /// Lossy view of the value as `f64`, used for diagnostics and
    /// branch-selection heuristics.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Error type shared by all modules.
///
/// The CLI maps these onto process exit codes, so the distinction between
/// validation, solver, and accuracy failures is part of the contract.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Malformed input (bad quantum numbers, non-positive lengths, ...).
    #[error("validation: {0}")]
    Validation(String),
    /// Argument outside the supported domain of a kernel.
    #[error("domain: {0}")]
    Domain(String),
    /// A root bracket whose endpoints do not straddle a sign change.
    #[error("bracket [{lo}, {hi}] does not straddle a sign change")]
    NoSignChange { lo: f64, hi: f64 },
    /// An iterative kernel ran out of refinement budget. Carries the best
    /// estimate and the error bound it reached.
    #[error("accuracy target not met: best estimate {best:e}, error bound {bound:e}")]
    Accuracy { best: f64, bound: f64 },
    /// Eigenvalue solver failure (no bound state in the scan window, ...).
    #[error("solver: {0}")]
    Solver(String),
    /// Parameters that put the mode outside the bound-state regime.
    #[error("unphysical regime: {0}")]
    UnphysicalRegime(String),
    /// Mode parameters that violate the continuity/normalization relations.
    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),
    /// A physically meaningless configuration (e.g. solenoid core outside
    /// the cavity).
    #[error("configuration: {0}")]
    Configuration(String),
    /// A divergent integral was requested.
    #[error("divergent integral: {0}")]
    Divergence(String),
    /// Evaluation exactly at a singular point.
    #[error("singular point: {0}")]
    SingularPoint(String),
    /// A field requested in a delta-function limit that only the analytic
    /// small-core formulas can handle.
    #[error("delta-function limit: {0}")]
    DeltaLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

// Concrete f64 aliases for downstream code that does not need genericity.
pub type Tolerance64 = numerics::Tolerance<f64>;
pub type Bracket64 = numerics::Bracket<f64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_trait_roundtrips_literals() {
        assert_eq!(f64::of(1.5), 1.5);
        assert_eq!(f32::of(1.5), 1.5f32);
        assert_eq!(1.5f64.as_f64(), 1.5);
    }

    #[test]
    fn error_display_carries_context() {
        let e = Error::Accuracy {
            best: 1.0,
            bound: 0.5,
        };
        assert!(e.to_string().contains("best estimate"));
    }
}

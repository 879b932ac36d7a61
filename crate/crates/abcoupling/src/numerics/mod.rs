//! Self-contained numerical kernels: Bessel functions, adaptive
//! quadrature, and bracketed root finding.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

mod bessel;
mod quadrature;
mod roots;

pub use bessel::{
    bessel_j, bessel_j_int, bessel_j_zero, bessel_k, bessel_k_int, bessel_k_scaled, MAX_ORDER,
};
pub use quadrature::{integrate_finite, integrate_semi_infinite, QuadResult};
pub use roots::find_root;

use crate::{Error, Real, Result};

/// Accuracy request for quadrature and root finding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    /// Relative tolerance. Must be positive.
    pub rel: T,
    /// Absolute floor. Must be non-negative.
    pub abs: T,
    /// Refinement cap: maximum bisection depth for quadrature, maximum
    /// iteration count for root finding.
    pub max_depth: u32,
}

impl<T: Real> Tolerance<T> {
    pub fn new(rel: T, abs: T, max_depth: u32) -> Result<Self> {
        if !(rel > T::zero()) {
            return Err(Error::Validation(format!(
                "relative tolerance must be positive, got {rel}"
            )));
        }
        if !(abs >= T::zero()) {
            return Err(Error::Validation(format!(
                "absolute tolerance must be non-negative, got {abs}"
            )));
        }
        if max_depth < 1 {
            return Err(Error::Validation("max_depth must be at least 1".into()));
        }
        Ok(Self {
            rel,
            abs,
            max_depth,
        })
    }

    /// Target accuracy for a result of magnitude `value`.
    pub(crate) fn target(&self, value: T) -> T {
        self.abs.max(self.rel * value.abs())
    }
}

impl<T: Real> Default for Tolerance<T> {
    /// `rel = 1e-12`, `abs = 1e-15`, `max_depth = 60`: two digits tighter
    /// than the 1e-10 closed-form cross-checks this crate runs.
    fn default() -> Self {
        Self {
            rel: T::of(1e-12),
            abs: T::of(1e-15),
            max_depth: 60,
        }
    }
}

/// An interval `[lo, hi]` on which a function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Bracket<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::Validation(format!(
                "bracket needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_rejects_bad_fields() {
        assert!(Tolerance::new(0.0, 1e-15, 60).is_err());
        assert!(Tolerance::new(1e-12, -1.0, 60).is_err());
        assert!(Tolerance::new(1e-12, 0.0, 0).is_err());
        assert!(Tolerance::new(1e-12, 0.0, 1).is_ok());
    }

    #[test]
    fn default_tolerance_matches_contract() {
        let tol = Tolerance::<f64>::default();
        assert_eq!(tol.rel, 1e-12);
        assert_eq!(tol.abs, 1e-15);
        assert_eq!(tol.max_depth, 60);
    }

    #[test]
    fn bracket_requires_order() {
        assert!(Bracket::new(1.0, 1.0).is_err());
        assert!(Bracket::new(2.0, 1.0).is_err());
        assert!(Bracket::new(1.0, 2.0).is_ok());
    }
}

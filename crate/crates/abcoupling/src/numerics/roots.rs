//! Bracketed root finding: Brent's method (bisection safeguarded by
//! secant/inverse-quadratic steps). The iterate never leaves the bracket.

use super::{Bracket, Tolerance};
use crate::{Error, Real, Result};

/// Finds the root of `f` inside `bracket`.
///
/// Requires a sign change across the bracket. Terminates once the bracket
/// has shrunk to `tol.rel * |x| + tol.abs` (plus the unavoidable floating
/// point floor); `tol.max_depth` caps the iteration count.
pub fn find_root<T: Real, F: Fn(T) -> T>(f: F, bracket: &Bracket<T>, tol: &Tolerance<T>) -> Result<T> {
    let mut a = bracket.lo;
    let mut b = bracket.hi;
    let mut fa = f(a);
    let mut fb = f(b);

    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if (fa > T::zero()) == (fb > T::zero()) {
        return Err(Error::NoSignChange {
            lo: a.as_f64(),
            hi: b.as_f64(),
        });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    let half = T::of(0.5);

    for _ in 0..tol.max_depth {
        if (fb > T::zero()) == (fc > T::zero()) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = T::of(2.0) * T::epsilon() * b.abs() + half * tol.target(b);
        let xm = half * (c - b);
        if xm.abs() <= tol1 || fb == T::zero() {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // secant / inverse quadratic interpolation
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (T::of(2.0) * xm * s, T::one() - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (T::of(2.0) * xm * q * (q - r) - (b - a) * (r - T::one())),
                    (q - T::one()) * (r - T::one()) * (s - T::one()),
                )
            };
            if p > T::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = T::of(3.0) * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if p + p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b = if d.abs() > tol1 {
            b + d
        } else {
            b + if xm > T::zero() { tol1 } else { -tol1 }
        };
        fb = f(b);
    }
    Err(Error::Accuracy {
        best: b.as_f64(),
        bound: (c - b).abs().as_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::{bessel_j, Bracket, Tolerance};
    use super::*;
    use approx::assert_relative_eq;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    #[test]
    fn linear_root() {
        let b = Bracket::new(0.0, 2.0).unwrap();
        let x = find_root(|x| x - 1.0, &b, &tol()).unwrap();
        assert_relative_eq!(x, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn bessel_zeros_match_frozen_oracle_values() {
        let b = Bracket::new(2.0, 3.0).unwrap();
        let x = find_root(|x| bessel_j(0, x).unwrap(), &b, &tol()).unwrap();
        assert_relative_eq!(x, 2.404825557695773, max_relative = 1e-12);

        let b = Bracket::new(3.0, 4.0).unwrap();
        let x = find_root(|x| bessel_j(1, x).unwrap(), &b, &tol()).unwrap();
        assert_relative_eq!(x, 3.831705970207512, max_relative = 1e-12);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let b = Bracket::new(0.0, 1.0).unwrap();
        let res = find_root(|x| x * x + 1.0, &b, &tol());
        assert!(matches!(res, Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn iteration_cap_reports_accuracy_error() {
        let b = Bracket::new(0.0, 4.0).unwrap();
        let starved = Tolerance::new(1e-15, 0.0, 1).unwrap();
        let res = find_root(|x| (x - std::f64::consts::PI).sin(), &b, &starved);
        assert!(matches!(res, Err(Error::Accuracy { .. })));
    }

    #[test]
    fn invariant_under_monotone_rescaling() {
        let b = Bracket::new(2.0, 3.0).unwrap();
        let reference = find_root(|x| bessel_j(0, x).unwrap(), &b, &tol()).unwrap();
        for scale in [1e-6, 1.0, 1e6] {
            let x = find_root(|x| scale * bessel_j(0, x).unwrap(), &b, &tol()).unwrap();
            assert_relative_eq!(x, reference, max_relative = 1e-12);
        }
    }

    #[test]
    fn endpoint_roots_return_immediately() {
        let b = Bracket::new(0.0, 1.0).unwrap();
        assert_eq!(find_root(|x| x, &b, &tol()).unwrap(), 0.0);
        assert_eq!(find_root(|x| x - 1.0, &b, &tol()).unwrap(), 1.0);
    }
}

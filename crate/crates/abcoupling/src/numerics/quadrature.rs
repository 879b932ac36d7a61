//! Globally adaptive Gauss-Kronrod quadrature (7-15 pair) and a
//! semi-infinite driver for exponentially decaying integrands.

use super::Tolerance;
use crate::{Error, Real, Result};

/// Integral estimate together with the error bound the driver achieved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub error_bound: T,
}

// 15-point Kronrod abscissae (positive half), 7-point Gauss embedded at
// the odd indices and the center.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// One G7-K15 application on `[a, b]`: returns the Kronrod estimate and a
/// conservative error bound (QUADPACK rescaling of `|K15 - G7|`).
fn kronrod_15<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> (T, T) {
    let half = T::of(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);

    let f_center = f(center);
    let mut res_gauss = f_center * T::of(WG[3]);
    let mut res_kronrod = f_center * T::of(WGK[7]);
    let mut res_abs = res_kronrod.abs();

    let mut fv = [T::zero(); 15];
    fv[7] = f_center;
    for j in 0..7 {
        let abscissa = half_len * T::of(XGK[j]);
        let f1 = f(center - abscissa);
        let f2 = f(center + abscissa);
        fv[j] = f1;
        fv[14 - j] = f2;
        let wk = T::of(WGK[j]);
        res_kronrod = res_kronrod + wk * (f1 + f2);
        res_abs = res_abs + wk * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss = res_gauss + T::of(WG[j / 2]) * (f1 + f2);
        }
    }

    let mean = res_kronrod * half;
    let mut res_asc = T::of(WGK[7]) * (f_center - mean).abs();
    for j in 0..7 {
        res_asc =
            res_asc + T::of(WGK[j]) * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let mut err = ((res_kronrod - res_gauss) * half_len).abs();
    res_kronrod = res_kronrod * half_len;
    res_abs = res_abs * half_len.abs();
    res_asc = res_asc * half_len.abs();

    if res_asc != T::zero() && err != T::zero() {
        let scale = (T::of(200.0) * err / res_asc).powf(T::of(1.5));
        err = if scale < T::one() {
            res_asc * scale
        } else {
            res_asc
        };
    }
    let fifty_eps = T::of(50.0) * T::epsilon();
    if res_abs > T::min_positive_value() / fifty_eps {
        err = err.max(fifty_eps * res_abs);
    }
    (res_kronrod, err)
}

#[derive(Debug, Clone, Copy)]
struct Interval<T> {
    a: T,
    b: T,
    value: T,
    err: T,
    depth: u32,
}

fn eval_interval<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, depth: u32) -> Result<Interval<T>> {
    let (value, err) = kronrod_15(f, a, b);
    if !value.is_finite() {
        return Err(Error::Domain(format!(
            "integrand produced a non-finite value on [{a}, {b}]"
        )));
    }
    Ok(Interval {
        a,
        b,
        value,
        err,
        depth,
    })
}

/// Adaptive integral of `f` over the finite interval `[lo, hi]`.
///
/// Bisects the interval with the largest error estimate until the summed
/// error drops below `max(tol.abs, tol.rel * |result|)`. An empty interval
/// integrates to zero. Running out of depth yields
/// [`Error::Accuracy`] carrying the best estimate and its bound.
pub fn integrate_finite<T: Real, F: Fn(T) -> T>(
    f: F,
    lo: T,
    hi: T,
    tol: &Tolerance<T>,
) -> Result<QuadResult<T>> {
    if !(lo <= hi) {
        return Err(Error::Validation(format!(
            "integration bounds must satisfy lo <= hi, got [{lo}, {hi}]"
        )));
    }
    if lo == hi {
        return Ok(QuadResult {
            value: T::zero(),
            error_bound: T::zero(),
        });
    }

    let mut intervals = vec![eval_interval(&f, lo, hi, 0)?];
    loop {
        let mut total = T::zero();
        let mut total_err = T::zero();
        let mut worst = 0usize;
        for (i, seg) in intervals.iter().enumerate() {
            total = total + seg.value;
            total_err = total_err + seg.err;
            if seg.err > intervals[worst].err {
                worst = i;
            }
        }
        if total_err <= tol.target(total) {
            return Ok(QuadResult {
                value: total,
                error_bound: total_err,
            });
        }
        let seg = intervals[worst];
        if seg.depth >= tol.max_depth || intervals.len() >= 4096 {
            return Err(Error::Accuracy {
                best: total.as_f64(),
                bound: total_err.as_f64(),
            });
        }
        let mid = T::of(0.5) * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // interval no longer splittable in this precision
            return Err(Error::Accuracy {
                best: total.as_f64(),
                bound: total_err.as_f64(),
            });
        }
        intervals[worst] = eval_interval(&f, seg.a, mid, seg.depth + 1)?;
        intervals.push(eval_interval(&f, mid, seg.b, seg.depth + 1)?);
    }
}

/// Integral of `f` over `[lo, inf)` for integrands bounded by
/// `C exp(-2 decay_rate rho)` beyond some finite point.
///
/// Marches window by window, tracking the envelope constant `C` from the
/// samples seen so far, and stops once the analytic tail bound
/// `C exp(-2 decay_rate rho_max) / (2 decay_rate)` falls below the
/// requested accuracy. The tail bound is added to the reported error.
pub fn integrate_semi_infinite<T: Real, F: Fn(T) -> T>(
    f: F,
    lo: T,
    decay_rate: T,
    tol: &Tolerance<T>,
) -> Result<QuadResult<T>> {
    if !(decay_rate > T::zero()) {
        return Err(Error::Domain(format!(
            "decay_rate must be positive, got {decay_rate}"
        )));
    }
    let window = T::of(2.0) / decay_rate; // e^{-4} attenuation per window
    let seg_tol = Tolerance {
        rel: tol.rel,
        abs: tol.abs * T::of(0.25),
        max_depth: tol.max_depth,
    };
    let two_lambda = (decay_rate + decay_rate).as_f64();

    let mut total = T::zero();
    let mut err_acc = T::zero();
    let mut ln_c_max = f64::NEG_INFINITY;
    let mut rho = lo;

    for w in 0..400u32 {
        let hi = rho + window;
        let seg = integrate_finite(&f, rho, hi, &seg_tol)?;
        total = total + seg.value;
        err_acc = err_acc + seg.error_bound;

        for frac in [0.0, 0.5, 1.0] {
            let t = rho + window * T::of(frac);
            let v = f(t).abs().as_f64();
            if v > 0.0 && v.is_finite() {
                ln_c_max = ln_c_max.max(v.ln() + two_lambda * t.as_f64());
            }
        }
        rho = hi;

        let tail = ((ln_c_max - two_lambda * rho.as_f64()).exp() / two_lambda).min(f64::MAX);
        let tail_t = T::of(tail);
        if w >= 1 && tail_t <= T::of(0.5) * tol.target(total) {
            return Ok(QuadResult {
                value: total,
                error_bound: err_acc + tail_t,
            });
        }
    }
    Err(Error::Accuracy {
        best: total.as_f64(),
        bound: err_acc.as_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::{bessel_j, bessel_k};
    use super::*;
    use approx::assert_relative_eq;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    #[test]
    fn kronrod_nodes_integrate_polynomials_exactly() {
        // The 15-point Kronrod rule is exact through degree 22; any
        // transcription slip in the node/weight tables breaks this.
        for k in 0..=22usize {
            let (got, _) = kronrod_15(&|x: f64| x.powi(k as i32), -1.0, 1.0);
            let want = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!(
                (got - want).abs() < 1e-14,
                "degree {k}: got {got}, want {want}"
            );
        }
        // The embedded 7-point Gauss rule is exact through degree 13.
        let (_, err) = kronrod_15(&|x: f64| x.powi(13), -1.0, 1.0);
        assert!(err < 1e-13);
    }

    #[test]
    fn finite_basics() {
        let r = integrate_finite(|t| t, 0.0, 1.0, &tol()).unwrap();
        assert_relative_eq!(r.value, 0.5, max_relative = 1e-14);

        // empty interval
        let r = integrate_finite(|t| t * t, 3.0, 3.0, &tol()).unwrap();
        assert_eq!(r.value, 0.0);

        // zero integrand
        let r = integrate_finite(|t: f64| (t + 0.7).sin() * 0.0, 0.0, 2.0, &tol()).unwrap();
        assert_eq!(r.value, 0.0);

        assert!(integrate_finite(|t| t, 1.0, 0.0, &tol()).is_err());
    }

    #[test]
    fn finite_matches_bessel_identity_at_first_zero() {
        // integral_0^x J_0^2 t dt = (x^2/2) J_1^2(x) at the first zero of
        // J_0, from the closed form (2/x^2) integral = J_0^2 + J_1^2.
        let x = 2.404825557695773;
        let r = integrate_finite(|t| bessel_j(0, t).unwrap().powi(2) * t, 0.0, x, &tol()).unwrap();
        let j1 = bessel_j(1, x).unwrap();
        assert_relative_eq!(r.value, 0.5 * x * x * j1 * j1, max_relative = 1e-12);
    }

    #[test]
    fn finite_reports_accuracy_failure_with_best_estimate() {
        let shallow = Tolerance::new(1e-14, 1e-16, 2).unwrap();
        let res = integrate_finite(|t: f64| (1000.0 * t).sin().abs(), 0.0, 3.0, &shallow);
        match res {
            Err(Error::Accuracy { best, bound }) => {
                assert!(best.is_finite());
                assert!(bound > 0.0);
            }
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }

    #[test]
    fn finite_rejects_non_finite_integrand() {
        let res = integrate_finite(
            |t: f64| if t < 0.3 { f64::NAN } else { 1.0 },
            0.0,
            1.0,
            &tol(),
        );
        assert!(matches!(res, Err(Error::Domain(_))));
    }

    #[test]
    fn semi_infinite_exponential() {
        let r = integrate_semi_infinite(|t: f64| (-2.0 * t).exp(), 0.0, 1.0, &tol()).unwrap();
        assert_relative_eq!(r.value, 0.5, max_relative = 1e-12);
        assert!(r.error_bound < 1e-11);
    }

    #[test]
    fn semi_infinite_matches_exterior_bessel_identity() {
        // integral_R^inf K_0^2 rho d rho = (R^2/2) [K_1^2(R) - K_0^2(R)]
        let radius = 1.0;
        let r = integrate_semi_infinite(
            |t| bessel_k(0, t).unwrap().powi(2) * t,
            radius,
            1.0,
            &tol(),
        )
        .unwrap();
        let k0 = bessel_k(0, radius).unwrap();
        let k1 = bessel_k(1, radius).unwrap();
        assert_relative_eq!(
            r.value,
            0.5 * radius * radius * (k1 * k1 - k0 * k0),
            max_relative = 1e-11
        );
    }

    #[test]
    fn semi_infinite_zero_integrand_and_bad_rate() {
        let r = integrate_semi_infinite(|_t: f64| 0.0, 0.0, 1.0, &tol()).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(matches!(
            integrate_semi_infinite(|t: f64| t, 0.0, 0.0, &tol()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn f32_smoke() {
        // f32 carries a ~50*eps*|I| error floor, so ask for 1e-5 only
        let loose = Tolerance::<f32>::new(1e-5, 1e-6, 40).unwrap();
        let r = integrate_finite(|t: f32| t * t, 0.0, 1.0, &loose).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-5);
    }
}

//! Numeric integration primitives: adaptive Gauss–Kronrod panels for
//! finite intervals, geometric segmentation for the half-line, cosine
//! half-period splitting for oscillatory weights, finite convolutions,
//! and the forward Laplace transform.
//!
//! Removable singularities are the caller's contract: integrands must
//! already be patched at 0 with their limits. Panel nodes are interior,
//! so endpoints themselves are never sampled.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BinaryHeap;

/// Outcome of a numeric integral.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Non-negative estimate of the absolute error, panel sum plus tail.
    pub error_estimate: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: usize,
    /// Whether `error_estimate` reached the requested tolerance.
    pub converged: bool,
}

// 15-point Kronrod abscissae on [0, 1]; odd indices are the embedded
// 7-point Gauss nodes.
const XGK: [f64; 7] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One Gauss–Kronrod 15(7) pass over [a, b]: (value, error, ∫|f| estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = WGK[7] * fc;
    let mut res_g = WG[3] * fc;
    let mut res_abs = res_k.abs();
    let mut fv = [0.0f64; 14];
    for (i, &xi) in XGK.iter().enumerate() {
        let dx = half * xi;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[2 * i] = f1;
        fv[2 * i + 1] = f2;
        res_k += WGK[i] * (f1 + f2);
        res_abs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            res_g += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for (i, pair) in fv.chunks(2).enumerate() {
        res_asc += WGK[i] * ((pair[0] - mean).abs() + (pair[1] - mean).abs());
    }
    let err = (res_k - res_g) * half;
    (
        res_k * half,
        rescale_error(err, res_abs * half.abs(), res_asc * half.abs()),
        res_abs * half.abs(),
    )
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    res_abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive refinement over an initial partition given by `cuts`
/// (sorted, length ≥ 2). Splits the worst panel until the summed error
/// estimate drops below the tolerance or the panel budget runs out.
/// The requested tolerance is floored at 100ε·∫|f|, the rounding level
/// below which panel splitting cannot help.
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    cuts: &[f64],
    tol: f64,
    max_panels: usize,
) -> QuadratureResult {
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    for pair in cuts.windows(2) {
        let (v, e, ra) = gk15(f, pair[0], pair[1]);
        evaluations += 15;
        heap.push(Panel {
            a: pair[0],
            b: pair[1],
            value: v,
            err: e,
            res_abs: ra,
        });
    }
    loop {
        let total_err: f64 = heap.iter().map(|p| p.err).sum();
        let res_abs: f64 = heap.iter().map(|p| p.res_abs).sum();
        let tol_eff = tol.max(100.0 * f64::EPSILON * res_abs);
        let exhausted = heap.len() >= max_panels;
        if total_err <= tol_eff || exhausted {
            let value: f64 = heap.iter().map(|p| p.value).sum();
            return QuadratureResult {
                value,
                error_estimate: total_err,
                evaluations,
                converged: total_err <= tol_eff && value.is_finite(),
            };
        }
        let worst = heap.pop().expect("non-empty partition");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at machine precision
            let value: f64 =
                heap.iter().map(|p| p.value).sum::<f64>() + worst.value;
            let total_err: f64 = heap.iter().map(|p| p.err).sum::<f64>() + worst.err;
            heap.push(worst);
            return QuadratureResult {
                value,
                error_estimate: total_err,
                evaluations,
                converged: total_err <= tol_eff && value.is_finite(),
            };
        }
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (v, e, ra) = gk15(f, lo, hi);
            evaluations += 15;
            heap.push(Panel {
                a: lo,
                b: hi,
                value: v,
                err: e,
                res_abs: ra,
            });
        }
    }
}

/// Adaptive integral of `f` over the finite interval [a, b].
pub fn integrate_finite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> QuadratureResult {
    adaptive(&f, &[a, b], tol, 2000)
}

/// Geometric segment boundaries 0, 1, 2, 4, …, `max_t` for half-line work.
fn segment_ends(max_t: f64) -> impl Iterator<Item = (f64, f64)> {
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    std::iter::from_fn(move || {
        if lo >= max_t {
            return None;
        }
        let seg = (lo, hi);
        lo = hi;
        hi = (hi * 2.0).min(max_t);
        Some(seg)
    })
}

const MAX_T: f64 = 8192.0;

/// ∫₀^∞ f(x) dx for integrands with (eventual) exponential decay.
///
/// Integrates geometric segments [0,1], [1,2], [2,4], … adaptively and
/// stops once two consecutive segments contribute less than tol/32; the
/// last contribution is carried as the tail estimate.
pub fn integrate_halfline<F: Fn(f64) -> f64>(f: F, tol: f64) -> QuadratureResult {
    integrate_cos(f, 0.0, tol)
}

/// ∫₀^∞ cos(sx) f(x) dx. For s = 0 this is `integrate_halfline`.
///
/// Segments whose length exceeds the oscillation scale are pre-split at
/// the zeros of cos(sx) so each panel sees at most one sign change.
pub fn integrate_cos<F: Fn(f64) -> f64>(f: F, s: f64, tol: f64) -> QuadratureResult {
    let s = s.abs();
    let weighted = |x: f64| {
        if s == 0.0 {
            f(x)
        } else {
            (s * x).cos() * f(x)
        }
    };
    let seg_tol = tol / 32.0;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut evaluations = 0;
    let mut small_run = 0;
    let mut last_contribution = 0.0f64;
    let mut all_converged = true;
    for (lo, hi) in segment_ends(MAX_T) {
        let cuts = cosine_cuts(lo, hi, s);
        let r = adaptive(&weighted, &cuts, seg_tol, 600);
        value += r.value;
        err += r.error_estimate;
        evaluations += r.evaluations;
        all_converged &= r.converged;
        last_contribution = r.value.abs();
        if last_contribution < tol / 32.0 {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let error_estimate = err + last_contribution.min(tol);
    QuadratureResult {
        value,
        error_estimate,
        evaluations,
        converged: all_converged && error_estimate <= 4.0 * tol,
    }
}

/// Partition [lo, hi] at the zeros of cos(sx), capped so pathological
/// frequencies cannot explode the panel count.
fn cosine_cuts(lo: f64, hi: f64, s: f64) -> Vec<f64> {
    let mut cuts = vec![lo];
    if s > 0.0 && s * (hi - lo) > std::f64::consts::PI {
        let step = std::f64::consts::PI / s;
        let mut k = ((lo / step) - 0.5).ceil();
        let mut count = 0;
        loop {
            let x = (k + 0.5) * step;
            if x >= hi {
                break;
            }
            if x > lo {
                cuts.push(x);
                count += 1;
                if count >= 2048 {
                    break;
                }
            }
            k += 1.0;
        }
    }
    cuts.push(hi);
    cuts
}

const CONVOLVE_TOL: f64 = 1e-12;

/// Convolution on the half-line evaluated at x: ∫₀^x f(x−u) g(u) du.
///
/// `g` may carry a removable singularity at 0⁺ provided the caller has
/// patched it with its limit; panel nodes never touch the endpoints.
pub fn convolve_halfline<F, G>(f: F, g: G, x: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    if x <= 0.0 || x.is_nan() {
        return Err(Error::domain(
            "convolve_halfline",
            format!("requires x > 0, got {x}"),
        ));
    }
    let integrand = |u: f64| f(x - u) * g(u);
    let r = adaptive(&integrand, &[0.0, x], CONVOLVE_TOL * x.max(1.0), 2000);
    if r.converged {
        Ok(r.value)
    } else {
        Err(Error::QuadratureNonConvergent {
            value: r.value,
            error_estimate: r.error_estimate,
            tolerance: CONVOLVE_TOL * x.max(1.0),
        })
    }
}

const LAPLACE_TOL: f64 = 1e-11;

/// Forward Laplace transform L[f; w] = ∫₀^∞ f(x) e^{−wx} dx.
///
/// Flags divergence when the damped integrand keeps growing through the
/// segment budget, which happens exactly when w is at or below the
/// abscissa of convergence of f.
pub fn laplace_forward<F: Fn(f64) -> f64>(f: F, w: f64) -> Result<f64> {
    let damped = |x: f64| f(x) * (-w * x).exp();
    let seg_tol = LAPLACE_TOL / 32.0;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut last = f64::INFINITY;
    let mut growth_run = 0;
    let mut decay_run = 0;
    let mut small_run = 0;
    let mut finished = false;
    for (lo, hi) in segment_ends(MAX_T) {
        let r = adaptive(&damped, &[lo, hi], seg_tol, 600);
        if !r.value.is_finite() {
            // Pointwise overflow of f (e.g. sinh(x) past x ≈ 710) can
            // poison the tail even though the damped products were
            // already in geometric decay; with ratio ≤ 1/2 per segment
            // the discarded tail is bounded by the last contribution.
            if decay_run >= 2 {
                err += last;
                finished = true;
                break;
            }
            return Err(Error::LaplaceDivergent { w });
        }
        let contribution = r.value.abs();
        if contribution > last * 1.0001 && contribution > LAPLACE_TOL {
            growth_run += 1;
        } else {
            growth_run = 0;
        }
        if contribution < 0.5 * last {
            decay_run += 1;
        } else {
            decay_run = 0;
        }
        value += r.value;
        err += r.error_estimate;
        last = contribution;
        if contribution < LAPLACE_TOL / 4.0 {
            small_run += 1;
            if small_run >= 2 {
                finished = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if !finished && growth_run >= 3 {
        return Err(Error::LaplaceDivergent { w });
    }
    if !finished && err > 100.0 * LAPLACE_TOL {
        return Err(Error::QuadratureNonConvergent {
            value,
            error_estimate: err,
            tolerance: LAPLACE_TOL,
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{expint_ei, nielsen_beta};
    use proptest::prelude::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn exponential_integrates_to_one() {
        let r = integrate_halfline(|x| (-x).exp(), 1e-12);
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-11, "value {}", r.value);
    }

    #[test]
    fn zeta_two_integral_representation() {
        // ∫₀^∞ x/(1−e^{−x}) e^{−x} dx = ζ(2,1) = π²/6
        let r = integrate_halfline(|x| x / (-(-x).exp_m1()) * (-x).exp(), 1e-12);
        assert!(r.converged);
        assert!((r.value - PI * PI / 6.0).abs() < 1e-10);
    }

    #[test]
    fn beta_integral_representation() {
        // ∫₀^∞ e^{−x/2}/(1+e^{−x}) dx = β(1/2) = π/2
        let r = integrate_halfline(|x| (-0.5 * x).exp() / (1.0 + (-x).exp()), 1e-12);
        assert!(r.converged);
        assert!((r.value - PI / 2.0).abs() < 1e-10);
    }

    #[test]
    fn cos_weight_of_exponential() {
        // ∫₀^∞ cos(x) e^{−x} dx = 1/2
        let r = integrate_cos(|x| (-x).exp(), 1.0, 1e-12);
        assert!(r.converged);
        assert!((r.value - 0.5).abs() < 1e-11);
    }

    #[test]
    fn cos_zero_frequency_reduces_to_halfline() {
        let a = integrate_cos(|x| (-2.0 * x).exp(), 0.0, 1e-12);
        let b = integrate_halfline(|x| (-2.0 * x).exp(), 1e-12);
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn highly_oscillatory_weight() {
        // ∫₀^∞ cos(sx) e^{−x} dx = 1/(1+s²)
        for s in [8.0, 30.0] {
            let r = integrate_cos(|x| (-x).exp(), s, 1e-12);
            assert!(r.converged, "s = {s}");
            assert!(
                (r.value - 1.0 / (1.0 + s * s)).abs() < 1e-11,
                "s = {s}, value {}",
                r.value
            );
        }
    }

    #[test]
    fn convolution_from_proposition_one_proof() {
        // (cosh ∗ 2/(1+e^{−2u}))(x) = 2 sinh(x)(π/4 − arctan(e^{−x})) − e^{−x} + 1
        for x in [0.5, 1.0, 2.0] {
            let got = convolve_halfline(|v| v.cosh(), |u| 2.0 / (1.0 + (-2.0 * u).exp()), x)
                .unwrap();
            let want = 2.0 * x.sinh() * (PI / 4.0 - (-x).exp().atan()) - (-x).exp() + 1.0;
            assert!((got - want).abs() < 1e-9, "x = {x}: {got} vs {want}");
        }
    }

    // 1/u − 2/(1−e^{−2u}), patched with its limit −1 and the Laurent tail
    // near 0 so panel nodes close to the endpoint stay accurate.
    fn digamma_kernel(u: f64) -> f64 {
        if u < 1e-3 {
            -1.0 - u / 3.0 + u * u * u / 45.0
        } else {
            1.0 / u - 2.0 / (-(-2.0 * u).exp_m1())
        }
    }

    #[test]
    fn convolution_from_proposition_two_proof() {
        // (cosh ∗ (1/u − 2/(1−e^{−2u})))(x) =
        //   e^{−x}Ei(x)/2 + e^{x}Ei(−x)/2 − 1 + e^{−x}
        //   + cosh(x)(log((1+e^{−x})/(1−e^{−x})) − γ − log 2)
        let x = 1.0;
        let got = convolve_halfline(|v| v.cosh(), digamma_kernel, x).unwrap();
        let want = (-x).exp() * expint_ei(x).unwrap() / 2.0
            + x.exp() * expint_ei(-x).unwrap() / 2.0
            - 1.0
            + (-x).exp()
            + x.cosh()
                * (((1.0 + (-x).exp()) / (1.0 - (-x).exp())).ln()
                    - crate::constants::EULER_GAMMA
                    - LN_2);
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }

    #[test]
    fn convolution_endpoint_safety() {
        // finite values across (0, 10] despite the removable singularity
        for x in [0.01, 0.1, 1.0, 5.0, 10.0] {
            let v = convolve_halfline(|v| v.cosh(), digamma_kernel, x).unwrap();
            assert!(v.is_finite(), "x = {x}");
        }
    }

    #[test]
    fn convolution_commutes() {
        let f = |u: f64| (-u).exp();
        let g = |u: f64| 1.0 / (1.0 + u * u);
        for x in [0.7, 2.3] {
            let a = convolve_halfline(f, g, x).unwrap();
            let b = convolve_halfline(g, f, x).unwrap();
            assert!((a - b).abs() < 1e-11, "x = {x}");
        }
    }

    #[test]
    fn laplace_of_sinh_and_cosh() {
        for w in [1.5, 2.0, 5.0] {
            let ls = laplace_forward(|x| x.sinh(), w).unwrap();
            assert!((ls - 1.0 / (w * w - 1.0)).abs() < 1e-9, "sinh, w = {w}");
            let lc = laplace_forward(|x| x.cosh(), w).unwrap();
            assert!((lc - w / (w * w - 1.0)).abs() < 1e-9, "cosh, w = {w}");
        }
    }

    #[test]
    fn laplace_of_logistic_is_nielsen_beta() {
        for w in [0.5, 1.0, 2.0] {
            let l = laplace_forward(|x| 1.0 / (1.0 + (-x).exp()), w).unwrap();
            assert!(
                (l - nielsen_beta(w).unwrap()).abs() < 1e-9,
                "w = {w}, value {l}"
            );
        }
    }

    #[test]
    fn laplace_flags_divergence_at_or_below_abscissa() {
        assert!(matches!(
            laplace_forward(|x| x.sinh(), 1.0),
            Err(Error::LaplaceDivergent { .. })
        ));
        assert!(matches!(
            laplace_forward(|x| x.sinh(), 0.7),
            Err(Error::LaplaceDivergent { .. })
        ));
    }

    #[test]
    fn laplace_close_to_abscissa_still_converges() {
        let w = 1.05;
        let l = laplace_forward(|x| x.sinh(), w).unwrap();
        assert!((l - 1.0 / (w * w - 1.0)).abs() < 1e-7);
    }

    #[test]
    fn tail_truncation_is_sound() {
        // A much longer truncation horizon moves the result by less than
        // the reported estimate.
        fn decaying(x: f64) -> f64 {
            if x == 0.0 {
                2.0 / PI
            } else {
                x / (1.0 + x * x) / (PI * x / 2.0).sinh()
            }
        }
        let short = integrate_halfline(decaying, 1e-10);
        let long = integrate_finite(decaying, 0.0, 400.0, 1e-13);
        assert!(short.converged);
        assert!((short.value - long.value).abs() <= short.error_estimate.max(1e-11));
    }

    #[test]
    fn evaluation_counts_are_reported() {
        let r = integrate_halfline(|x| (-x).exp(), 1e-10);
        assert!(r.evaluations >= 15);
        assert!(r.error_estimate >= 0.0);
    }

    proptest! {
        // Linearity over a fixed smooth pair.
        #[test]
        fn linearity(alpha in -3.0f64..3.0, beta in -3.0f64..3.0) {
            let f = |x: f64| (-x).exp();
            let g = |x: f64| (-2.0 * x).exp() * x;
            let combo = integrate_halfline(|x| alpha * f(x) + beta * g(x), 1e-12);
            let fa = integrate_halfline(f, 1e-12);
            let gb = integrate_halfline(g, 1e-12);
            prop_assert!(
                (combo.value - (alpha * fa.value + beta * gb.value)).abs() < 1e-10
            );
        }
    }
}

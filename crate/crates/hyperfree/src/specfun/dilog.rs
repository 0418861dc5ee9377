use num_complex::Complex64;
use std::f64::consts::PI;

/// B_k/(k+1)! for Li₂(z) = Σ_{k≥0} B_k/(k+1)! · u^{k+1}, u = −ln(1−z).
/// Odd Bernoulli numbers past B₁ vanish.
const BF: [f64; 23] = [
    1.0,
    -1.0 / 4.0,
    1.0 / 36.0,
    0.0,
    -1.0 / 3600.0,
    0.0,
    1.0 / 211_680.0,
    0.0,
    -1.0 / 10_886_400.0,
    0.0,
    1.0 / 526_901_760.0,
    0.0,
    -691.0 / 16_999_766_630_400.0,
    0.0,
    1.0 / 1_120_863_744_000.0,
    0.0,
    -3617.0 / (510.0 * 355_687_428_096_000.0),
    0.0,
    43867.0 / (798.0 * 121_645_100_408_832_000.0),
    0.0,
    -174_611.0 / (330.0 * 51_090_942_171_709_440_000.0),
    0.0,
    854_513.0 / (138.0 * 25_852_016_738_884_976_640_000.0),
];

/// Dilogarithm Li₂(z) = Σ_{k≥1} z^k/k² for complex z.
///
/// Arguments with |z| > 1 go through the inversion functional equation
/// (principal branch of ln(−z)), Re z > 1/2 through the reflection
/// equation; what remains is summed as a Bernoulli series in −ln(1−z).
pub fn dilog(z: Complex64) -> Complex64 {
    let pi2_6 = PI * PI / 6.0;
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if z.re == 1.0 && z.im == 0.0 {
        return Complex64::new(pi2_6, 0.0);
    }
    if z.norm_sqr() > 1.0 {
        // Li₂(z) = −π²/6 − ln²(−z)/2 − Li₂(1/z)
        let l = (-z).ln();
        return -Complex64::new(pi2_6, 0.0) - 0.5 * l * l - dilog(1.0 / z);
    }
    if z.re > 0.5 {
        // Li₂(z) = π²/6 − ln(z)·ln(1−z) − Li₂(1−z); the new argument has
        // modulus ≤ 1 and real part ≤ 1/2.
        let w = Complex64::new(1.0, 0.0) - z;
        return Complex64::new(pi2_6, 0.0) - z.ln() * w.ln() - dilog(w);
    }
    bernoulli_series(z)
}

fn bernoulli_series(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let mut acc = Complex64::new(BF[BF.len() - 1], 0.0);
    for k in (0..BF.len() - 1).rev() {
        acc = acc * u + BF[k];
    }
    u * acc
}

/// D(t) = i·(Li₂(i e^t) − Li₂(−i e^t)), a real number for real t.
///
/// The two arguments are conjugate, so D(t) = −2 Im Li₂(i e^t); for t > 0
/// the |z| > 1 branch of [`dilog`] supplies the inversion equation.
pub fn dilog_skew(t: f64) -> f64 {
    -2.0 * dilog(Complex64::new(0.0, t.exp())).im
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CATALAN;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zero_and_one() {
        assert_eq!(dilog(Complex64::new(0.0, 0.0)), Complex64::new(0.0, 0.0));
        assert_abs_diff_eq!(
            dilog(Complex64::new(1.0, 0.0)).re,
            PI * PI / 6.0,
            epsilon = 1e-15
        );
    }

    // Σ z^k/k² summed brute-force; good to ~1e-12 for |z| ≤ 0.9.
    fn dilog_series_oracle(z: Complex64) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut zk = Complex64::new(1.0, 0.0);
        for k in 1..4000 {
            zk *= z;
            sum += zk / (k as f64 * k as f64);
        }
        sum
    }

    #[test]
    fn matches_series_inside_disk() {
        for z in [
            Complex64::new(0.3, 0.4),
            Complex64::new(-0.8, 0.1),
            Complex64::new(0.0, 0.9),
            Complex64::new(0.6, -0.5),
        ] {
            let d = dilog(z) - dilog_series_oracle(z);
            assert!(d.norm() < 1e-12, "z = {z}");
        }
    }

    #[test]
    fn imaginary_unit_values() {
        // Li₂(i) − Li₂(−i) = 2iC and Li₂(i) = −π²/48 + iC
        let li_i = dilog(Complex64::new(0.0, 1.0));
        let li_mi = dilog(Complex64::new(0.0, -1.0));
        assert_abs_diff_eq!(li_i.re, -PI * PI / 48.0, epsilon = 1e-14);
        assert_abs_diff_eq!(li_i.im, CATALAN, epsilon = 1e-14);
        let diff = li_i - li_mi;
        assert_abs_diff_eq!(diff.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(diff.im, 2.0 * CATALAN, epsilon = 1e-13);
    }

    #[test]
    fn real_special_values() {
        // Li₂(−1) = −π²/12, Li₂(1/2) = π²/12 − ln²2/2
        assert_abs_diff_eq!(
            dilog(Complex64::new(-1.0, 0.0)).re,
            -PI * PI / 12.0,
            epsilon = 1e-14
        );
        let half = dilog(Complex64::new(0.5, 0.0));
        let ln2 = std::f64::consts::LN_2;
        assert_abs_diff_eq!(half.re, PI * PI / 12.0 - ln2 * ln2 / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(half.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn derivative_on_real_segment() {
        // d/dz Li₂(z) = −ln(1−z)/z by central differences
        let h = 1e-5;
        for x in [0.2, 0.5, 0.8] {
            let fd = (dilog(Complex64::new(x + h, 0.0)) - dilog(Complex64::new(x - h, 0.0))).re
                / (2.0 * h);
            let exact = -(1.0f64 - x).ln() / x;
            assert!((fd - exact).abs() < 1e-6, "x = {x}");
        }
    }

    #[test]
    fn skew_at_zero_is_minus_two_catalan() {
        assert_abs_diff_eq!(dilog_skew(0.0), -2.0 * CATALAN, epsilon = 1e-13);
    }

    #[test]
    fn skew_matches_exponential_series_for_negative_t() {
        // 2 Σ (−1)^k e^{(2k−1)t}/(2k−1)², t < 0
        let series = |t: f64| {
            let mut sum = 0.0;
            for k in 1..40 {
                let m = 2.0 * k as f64 - 1.0;
                let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
                sum += sign * (m * t).exp() / (m * m);
            }
            2.0 * sum
        };
        for t in [-0.5, -1.0, -2.0] {
            assert!((dilog_skew(t) - series(t)).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn skew_is_real_for_all_t() {
        // The result of i(Li₂(ie^t) − Li₂(−ie^t)) has zero imaginary part
        // because the arguments are conjugates; check through the raw
        // complex route rather than the folded implementation.
        for t in [-2.0f64, 0.0, 3.0] {
            let e = t.exp();
            let raw = Complex64::new(0.0, 1.0)
                * (dilog(Complex64::new(0.0, e)) - dilog(Complex64::new(0.0, -e)));
            assert!(raw.im.abs() < 1e-13, "t = {t}");
            assert!((raw.re - dilog_skew(t)).abs() < 1e-13, "t = {t}");
        }
    }

    #[test]
    fn inversion_consistency_across_unit_circle() {
        // Values just inside and outside the circle along ±i e^t agree to
        // the continuity limit of the functional equation.
        let inner = dilog(Complex64::new(0.0, 0.999_999));
        let outer = dilog(Complex64::new(0.0, 1.000_001));
        assert!((inner - outer).norm() < 1e-5);
    }
}

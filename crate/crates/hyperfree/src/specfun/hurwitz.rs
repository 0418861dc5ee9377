use crate::error::{Error, Result};

/// B_{2k} for the tail expansion ζ(2,a) ≈ 1/a + 1/(2a²) + Σ B_{2k}/a^{2k+1}.
const BERN: [f64; 5] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0];

/// Hurwitz zeta at s = 2: ζ(2, a) = Σ_{k≥0} 1/(k+a)² for a > 0.
///
/// Sums the series directly until the argument reaches 20, then switches
/// to the Euler–Maclaurin tail, which at that point is accurate to ~1e-16.
pub fn hurwitz_zeta2(a: f64) -> Result<f64> {
    if a <= 0.0 || a.is_nan() {
        return Err(Error::domain(
            "hurwitz_zeta2",
            format!("requires a > 0, got {a}"),
        ));
    }
    let mut sum = 0.0;
    let mut y = a;
    while y < 20.0 {
        sum += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut tail = inv + 0.5 * inv2;
    let mut pw = inv2 * inv;
    for b in BERN {
        tail += b * pw;
        pw *= inv2;
    }
    Ok(sum + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    // Independent oracle: direct series with an integral-plus-curvature
    // tail correction, no Bernoulli machinery shared with the
    // implementation path beyond the k ≤ N partial sum.
    fn zeta2_series_oracle(a: f64) -> f64 {
        let n = 20_000u64;
        let mut sum = 0.0;
        for k in 0..n {
            let t = a + k as f64;
            sum += 1.0 / (t * t);
        }
        let y = a + n as f64;
        sum + 1.0 / y + 0.5 / (y * y) + 1.0 / (6.0 * y * y * y)
    }

    #[test]
    fn basel_value() {
        assert!((hurwitz_zeta2(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-13);
        assert!((hurwitz_zeta2(1.0).unwrap() - zeta2_series_oracle(1.0)).abs() < 1e-12);
    }

    #[test]
    fn half_value() {
        // Σ 1/(k+1/2)² = 4 Σ 1/(odd)² = 4·(π²/8)
        assert!((hurwitz_zeta2(0.5).unwrap() - PI * PI / 2.0).abs() < 1e-13);
        assert!((hurwitz_zeta2(0.5).unwrap() - zeta2_series_oracle(0.5)).abs() < 1e-12);
    }

    #[test]
    fn quarter_value_hits_catalan() {
        // ζ(2, 1/4) = π² + 8C
        let expected = PI * PI + 8.0 * crate::constants::CATALAN;
        assert!((hurwitz_zeta2(0.25).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn index_shift() {
        for a in [0.5, 2.0] {
            let lhs = hurwitz_zeta2(a).unwrap() - hurwitz_zeta2(a + 1.0).unwrap();
            assert!((lhs - 1.0 / (a * a)).abs() < 1e-12, "a = {a}");
        }
    }

    #[test]
    fn series_agrees_with_laplace_integral() {
        // ζ(2, a) = ∫₀^∞ x/(1−e^{−x}) e^{−ax} dx, integrand patched with
        // its limit 1 at the origin
        use crate::quadrature::integrate_halfline;
        for a in [0.5, 1.0, 2.0, 4.0] {
            let r = integrate_halfline(
                move |x| {
                    if x < 1e-12 {
                        1.0
                    } else {
                        x / (-(-x).exp_m1()) * (-a * x).exp()
                    }
                },
                1e-11,
            );
            assert!(r.converged, "a = {a}");
            assert!(
                (r.value - hurwitz_zeta2(a).unwrap()).abs() < 1e-8,
                "a = {a}: {} vs {}",
                r.value,
                hurwitz_zeta2(a).unwrap()
            );
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(hurwitz_zeta2(0.0).is_err());
        assert!(hurwitz_zeta2(-1.5).is_err());
    }
}

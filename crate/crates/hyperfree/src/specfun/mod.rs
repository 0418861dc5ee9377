//! Special functions backing the transform family: digamma, Nielsen's
//! beta, the exponential integral, Hurwitz ζ(2,·), and the complex
//! dilogarithm. All of them are plain `f64` routines with stated
//! absolute-accuracy targets (≥ 1e-12 unless noted), each validated
//! against an independent series or integral oracle in the tests.

mod digamma;
mod dilog;
mod expint;
mod hurwitz;

pub use digamma::digamma;
pub use dilog::{dilog, dilog_skew};
pub use expint::expint_ei;
pub use hurwitz::hurwitz_zeta2;

use crate::error::{Error, Result};

/// Asymptotic coefficients of β(y) ~ 1/(2y) + Σ c_k / y^{2k}: Watson's
/// lemma applied to ∫ e^{−yt}/(1+e^{−t}) dt; c_k come from the odd Taylor
/// coefficients of tanh(t/2)/2.
const BETA_ASYMP: [f64; 6] = [
    1.0 / 4.0,
    -1.0 / 8.0,
    1.0 / 4.0,
    -17.0 / 16.0,
    31.0 / 4.0,
    -691.0 / 8.0,
];

/// Nielsen beta function β(x) = Σ_{k≥0} (−1)^k/(x+k) for x > 0.
///
/// Runs the forward recurrence β(x) = 1/x − β(x+1) until the argument
/// reaches 30, then sums the asymptotic expansion, whose first omitted
/// term is below 3e-18 there. Absolute accuracy ~1e-13.
pub fn nielsen_beta(x: f64) -> Result<f64> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::domain(
            "nielsen_beta",
            format!("requires x > 0, got {x}"),
        ));
    }
    let mut acc = 0.0;
    let mut sign = 1.0;
    let mut y = x;
    while y < 30.0 {
        acc += sign / y;
        sign = -sign;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut tail = 0.5 * inv;
    let mut pw = inv2;
    for c in BETA_ASYMP {
        tail += c * pw;
        pw *= inv2;
    }
    Ok(acc + sign * tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{LN_2, PI};

    /// Cohen–Rodriguez Villegas–Zagier acceleration for alternating sums
    /// Σ (−1)^k a_k: with n Chebyshev-derived weights the error shrinks
    /// like 5.83^{−n}. Test-side oracle only.
    fn sumalt(a: impl Fn(usize) -> f64, n: usize) -> f64 {
        let mut d = (3.0 + 8.0f64.sqrt()).powi(n as i32);
        d = (d + 1.0 / d) / 2.0;
        let mut b = -1.0;
        let mut c = -d;
        let mut s = 0.0;
        for k in 0..n {
            c = b - c;
            s += c * a(k);
            b *= (k as f64 + n as f64) * (k as f64 - n as f64)
                / ((k as f64 + 0.5) * (k as f64 + 1.0));
        }
        s / d
    }

    #[test]
    fn beta_half_is_pi_over_two() {
        // Oracle: accelerated partial sums of Σ (−1)^k/(1/2+k), which is
        // twice the Leibniz series.
        let oracle = sumalt(|k| 1.0 / (0.5 + k as f64), 40);
        assert!((oracle - PI / 2.0).abs() < 1e-13, "oracle sanity");
        assert!((nielsen_beta(0.5).unwrap() - oracle).abs() < 1e-12);
    }

    #[test]
    fn beta_one_is_ln_two() {
        let oracle = sumalt(|k| 1.0 / (1.0 + k as f64), 40);
        assert!((oracle - LN_2).abs() < 1e-13, "oracle sanity");
        assert!((nielsen_beta(1.0).unwrap() - oracle).abs() < 1e-12);
    }

    #[test]
    fn digamma_identity_at_fixed_points() {
        // β(x) = ½[ψ((x+1)/2) − ψ(x/2)]
        for x in [0.3, 1.0, 2.5] {
            let via_psi =
                0.5 * (digamma((x + 1.0) / 2.0).unwrap() - digamma(x / 2.0).unwrap());
            assert!(
                (nielsen_beta(x).unwrap() - via_psi).abs() < 1e-12,
                "x = {x}"
            );
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(nielsen_beta(0.0).is_err());
        assert!(nielsen_beta(-0.5).is_err());
    }

    proptest! {
        // Reflection-free consistency over (0, 10]: the recurrence+asymptotic
        // route must agree with the digamma route to 1e-10.
        #[test]
        fn beta_two_formula_agreement(x in 1e-4f64..10.0) {
            let via_psi =
                0.5 * (digamma((x + 1.0) / 2.0).unwrap() - digamma(x / 2.0).unwrap());
            prop_assert!((nielsen_beta(x).unwrap() - via_psi).abs() < 1e-10);
        }
    }
}

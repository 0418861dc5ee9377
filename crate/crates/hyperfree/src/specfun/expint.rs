use crate::error::{Error, Result};
use crate::constants::EULER_GAMMA;

/// Exponential integral Ei(x) for x ≠ 0.
///
/// For 0 < x ≤ 30 uses the everywhere-positive power series
/// Ei(x) = γ + ln x + Σ x^k/(k·k!); for x > 30 the asymptotic expansion
/// e^x/x · Σ k!/x^k truncated at its smallest term. For x < 0,
/// Ei(x) = −E1(−x) with E1 from its series (argument ≤ 1) or the
/// standard continued fraction.
pub fn expint_ei(x: f64) -> Result<f64> {
    if x == 0.0 || x.is_nan() {
        return Err(Error::domain(
            "expint_ei",
            format!("logarithmic singularity at x = 0, got {x}"),
        ));
    }
    if x > 0.0 {
        if x <= 30.0 {
            Ok(EULER_GAMMA + x.ln() + ei_power_series(x))
        } else {
            Ok(ei_asymptotic(x))
        }
    } else {
        Ok(-e1(-x))
    }
}

fn ei_power_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= x / kf;
        let add = term / kf;
        sum += add;
        if add.abs() < 1e-17 * (1.0 + sum.abs()) {
            break;
        }
    }
    sum
}

fn ei_asymptotic(x: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..200 {
        let next = term * k as f64 / x;
        if next.abs() >= term.abs() {
            break; // divergent tail reached; stop at the smallest term
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    x.exp() / x * sum
}

/// E1(y) = ∫_y^∞ e^{−t}/t dt for y > 0.
fn e1(y: f64) -> f64 {
    if y <= 1.0 {
        // −γ − ln y + Σ (−1)^{k+1} y^k / (k·k!)
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..60 {
            let kf = k as f64;
            term *= -y / kf;
            sum -= term / kf;
            if term.abs() < 1e-18 {
                break;
            }
        }
        -EULER_GAMMA - y.ln() + sum
    } else {
        // Continued fraction e^{−y}/(y + 1 − 1/(y + 3 − 4/(y + 5 − ...)))
        // evaluated by the modified Lentz algorithm.
        let tiny = 1e-300;
        let mut b = y + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for k in 1..200 {
            let a = -(k as f64) * (k as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let delta = c * d;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        (-y).exp() * h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_halfline;

    #[test]
    fn value_at_one() {
        // Oracle: partial sums of γ + ln x + Σ x^k/(k·k!) written out here
        // with its own accumulation (50 terms are far past convergence).
        let mut oracle = EULER_GAMMA; // ln 1 = 0
        let mut fact = 1.0;
        for k in 1..50u32 {
            fact *= k as f64;
            oracle += 1.0 / (k as f64 * fact);
        }
        assert!((expint_ei(1.0).unwrap() - oracle).abs() < 1e-14);
        assert!((expint_ei(1.0).unwrap() - 1.8951178163559368).abs() < 1e-12);
    }

    #[test]
    fn small_x_limit_is_gamma() {
        let x = 1e-6;
        assert!((expint_ei(x).unwrap() - x.ln() - EULER_GAMMA).abs() < 1e-5);
        // and the same limit from the negative side
        assert!((expint_ei(-x).unwrap() - x.ln() - EULER_GAMMA).abs() < 1e-5);
    }

    #[test]
    fn derivative_by_central_difference() {
        let (x, h) = (2.0, 1e-5);
        let fd = (expint_ei(x + h).unwrap() - expint_ei(x - h).unwrap()) / (2.0 * h);
        assert!((fd - x.exp() / x).abs() < 1e-6);
        let fd_neg = (expint_ei(-x + h).unwrap() - expint_ei(-x - h).unwrap()) / (2.0 * h);
        assert!((fd_neg - (-x).exp() / -x).abs() < 1e-6);
    }

    #[test]
    fn negative_argument_matches_quadrature() {
        // Ei(−1) = −∫_1^∞ e^{−t}/t dt, integrated numerically as an
        // independent route.
        let q = integrate_halfline(|u| (-(u + 1.0)).exp() / (u + 1.0), 1e-12);
        assert!(q.converged);
        assert!((expint_ei(-1.0).unwrap() + q.value).abs() < 1e-10);
        assert!((expint_ei(-1.0).unwrap() + 0.21938393439552029).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_branch_agrees_with_series() {
        // The power series converges for every x > 0, so just above the
        // switch point it still serves as the oracle for the asymptotic
        // branch (whose optimal-truncation error is ~2e-12 relative).
        let x = 30.000001f64;
        let series = EULER_GAMMA + x.ln() + super::ei_power_series(x);
        let asym = expint_ei(x).unwrap();
        assert!(((asym - series) / series).abs() < 1e-11);
        // 25-digit reference: 368973565623.2657522...
        assert!(((series - 368973565623.26575) / series).abs() < 1e-12);
    }

    #[test]
    fn negative_seam_matches_derivative_step() {
        // Series (y ≤ 1) and continued fraction (y > 1) straddle y = 1;
        // the two evaluations must differ by the derivative step
        // 2h·e^{-1}/(-1) up to branch accuracy.
        let h = 1e-6;
        let s = expint_ei(-1.0 + h).unwrap();
        let c = expint_ei(-1.0 - h).unwrap();
        let step = 2.0 * h * (-1.0f64).exp() / -1.0;
        assert!(((s - c) - step).abs() < 1e-10, "{}", s - c);
    }

    #[test]
    fn rejects_zero() {
        assert!(expint_ei(0.0).is_err());
    }
}

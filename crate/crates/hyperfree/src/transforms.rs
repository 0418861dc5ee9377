//! The four transforms of the hyperbolic family on the imaginary axis,
//! their canonical representation data, Khintchine densities, and
//! closed-form characteristic functions.
//!
//! Every member's transform V(it) is purely imaginary, V(it) = i·g(t)
//! with g real and g(−t) = −g(t); the shift parameter vanishes and the
//! representing measure is symmetric, so its characteristic function is
//! real and even.

use crate::constants::{CATALAN, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::quadrature::{self, QuadratureResult};
use crate::specfun::{digamma, dilog_skew, expint_ei, hurwitz_zeta2, nielsen_beta};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};

/// The transform family: free analogues of the hyperbolic cosine, sine
/// and tangent characteristic functions, plus the background-driving
/// characteristic function attached to the cosine member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyMember {
    CosineC,
    SineS,
    TangentT,
    BdcfPsiC,
}

impl FamilyMember {
    pub const ALL: [FamilyMember; 4] = [
        FamilyMember::CosineC,
        FamilyMember::SineS,
        FamilyMember::TangentT,
        FamilyMember::BdcfPsiC,
    ];

    /// Short stable key used by the CLI and reports.
    pub fn key(self) -> &'static str {
        match self {
            FamilyMember::CosineC => "C",
            FamilyMember::SineS => "S",
            FamilyMember::TangentT => "T",
            FamilyMember::BdcfPsiC => "psiC",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        match key {
            "C" => Some(FamilyMember::CosineC),
            "S" => Some(FamilyMember::SineS),
            "T" => Some(FamilyMember::TangentT),
            "psiC" => Some(FamilyMember::BdcfPsiC),
            _ => None,
        }
    }

    /// Closed-form total mass of the representing measure.
    pub fn reference_mass(self) -> f64 {
        match self {
            FamilyMember::CosineC => FRAC_PI_2 - 1.0,
            FamilyMember::SineS => EULER_GAMMA + LN_2 - 1.0,
            FamilyMember::TangentT => FRAC_PI_2 - EULER_GAMMA - LN_2,
            FamilyMember::BdcfPsiC => 2.0 * CATALAN - 1.0,
        }
    }
}

/// A characteristic-function sample (argument, value). All four members
/// have symmetric measures, so the value is real; at s = 0 it equals the
/// member's total mass.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CharFnValue {
    pub s: f64,
    pub value: f64,
}

impl CharFnValue {
    /// Closed-form sample m̂_member(s).
    pub fn closed(member: FamilyMember, s: f64) -> Self {
        CharFnValue {
            s,
            value: charfn_closed(member, s),
        }
    }
}

/// Imaginary-axis value V(it) of a member's transform.
///
/// The closed forms hold for t > 0; negative arguments go through the
/// conjugate-symmetric extension V(it) = conj(V(−it)). t = 0 is outside
/// the domain.
pub fn voiculescu_eval(member: FamilyMember, t: f64) -> Result<Complex64> {
    if t == 0.0 || t.is_nan() {
        return Err(Error::domain(
            "voiculescu_eval",
            format!("V(it) is defined for t != 0, got {t}"),
        ));
    }
    let a = t.abs();
    let g = match member {
        FamilyMember::CosineC => 1.0 - a * nielsen_beta(a / 2.0)?,
        FamilyMember::SineS => a * digamma(a / 2.0)? - a * (a / 2.0).ln() + 1.0,
        FamilyMember::TangentT => {
            a * ((a / 2.0).ln() - nielsen_beta(a / 2.0)? - digamma(a / 2.0)?)
        }
        FamilyMember::BdcfPsiC => {
            a * a / 2.0 * hurwitz_zeta2(a / 2.0)? - a * a / 4.0 * hurwitz_zeta2(a / 4.0)? + 1.0
        }
    };
    // V(it) = i·g(|t|) for t > 0; conj for t < 0 flips the sign.
    Ok(Complex64::new(0.0, t.signum() * g))
}

/// Shift and total mass read off at t = 1: (Re V(i), −Im V(i)).
pub fn extract_params<V>(v: V) -> Result<(f64, f64)>
where
    V: Fn(f64) -> Result<Complex64>,
{
    let at_i = v(1.0)?;
    Ok((at_i.re, -at_i.im))
}

/// Density of the representing (Khintchine) measure at x; even in x with
/// exponentially decaying tails. The x = 0 values are the removable
/// limits.
pub fn khintchine_density(member: FamilyMember, x: f64) -> f64 {
    let x = x.abs();
    match member {
        FamilyMember::CosineC => {
            if x == 0.0 {
                1.0 / PI
            } else {
                0.5 * x / (1.0 + x * x) / (FRAC_PI_2 * x).sinh()
            }
        }
        FamilyMember::SineS => {
            if x == 0.0 {
                1.0 / PI
            } else {
                x / (1.0 + x * x) / (PI * x).exp_m1()
            }
        }
        FamilyMember::TangentT => {
            let u = FRAC_PI_4 * x;
            0.5 * x / (1.0 + x * x) * (-u).exp() / u.cosh()
        }
        FamilyMember::BdcfPsiC => {
            if x == 0.0 {
                1.0 / PI
            } else {
                // cosh(u)/sinh²(u) written in exponentials so large u
                // neither overflows nor loses the leading 2e^{−u} decay
                let u = FRAC_PI_2 * x;
                let em = (-u).exp();
                let den = -(-2.0 * u).exp_m1(); // 1 − e^{−2u}
                FRAC_PI_4 * x * x / (1.0 + x * x) * 2.0 * em * (1.0 + em * em) / (den * den)
            }
        }
    }
}

// m̂_S(s) for |s| < 1e-3, from the even Taylor expansion of the closed
// form; the log s pieces of Ei(±s) and log(1−e^{−s}) cancel exactly.
fn charfn_sine_small(s: f64) -> f64 {
    -1.0 + (EULER_GAMMA + LN_2) * s.cosh() - (2.0 / 3.0) * s * s - 0.05 * s.powi(4)
}

fn charfn_cosine(s: f64) -> f64 {
    2.0 * s.sinh() * (-s).exp().atan() + FRAC_PI_2 * (-s).exp() - 1.0
}

fn charfn_sine(s: f64) -> f64 {
    if s < 1e-8 {
        return EULER_GAMMA + LN_2 - 1.0;
    }
    if s < 1e-3 {
        return charfn_sine_small(s);
    }
    let em = (-s).exp();
    // log(1±e^{−s}) via ln_1p keeps full relative accuracy at large s
    let log_ratio = em.ln_1p() - (-em).ln_1p();
    -1.0 + s.cosh() * log_ratio
        + 0.5 * em * expint_ei(s).expect("s > 0")
        + 0.5 * s.exp() * expint_ei(-s).expect("s > 0")
}

fn charfn_tangent(s: f64) -> f64 {
    if s < 1e-3 {
        return charfn_cosine(s) - charfn_sine(s);
    }
    let em = (-s).exp();
    let log_m = (-em).ln_1p(); // log(1 − e^{−s})
    FRAC_PI_2 * em + 2.0 * s.sinh() * em.atan()
        - s.cosh() * em.ln_1p()
        - 0.5 * em * (expint_ei(s).expect("s > 0") - log_m)
        - 0.5 * s.exp() * (expint_ei(-s).expect("s > 0") - log_m)
}

fn charfn_bdcf(s: f64) -> f64 {
    // −1 − s·tanh s − cosh(s)·(D(s) + 2s·arctan(e^s)) evaluated through
    // the identity D(s) + 2s·arctan(e^s) = D(−s) − 2s·arctan(e^{−s});
    // both regrouped terms are O(e^{−s}), which keeps cosh(s)·(...)
    // finite-precision instead of cancelling 2πs·cosh(s) at large s.
    let em = (-s).exp();
    -1.0 - s * s.tanh() - s.cosh() * (dilog_skew(-s) - 2.0 * s * em.atan())
}

/// Closed-form characteristic function m̂_member(s), extended to s < 0 by
/// evenness. s = 0 returns the analytic limit (the total mass).
pub fn charfn_closed(member: FamilyMember, s: f64) -> f64 {
    let s = s.abs();
    match member {
        FamilyMember::CosineC => charfn_cosine(s),
        FamilyMember::SineS => charfn_sine(s),
        FamilyMember::TangentT => charfn_tangent(s),
        FamilyMember::BdcfPsiC => charfn_bdcf(s),
    }
}

const CHARFN_QUAD_TOL: f64 = 1e-10;

/// m̂_member(s) by numeric integration: 2·∫₀^∞ cos(sx)·density(x) dx.
pub fn charfn_quadrature(member: FamilyMember, s: f64) -> Result<f64> {
    let r = quadrature::integrate_cos(
        move |x| khintchine_density(member, x),
        s.abs(),
        CHARFN_QUAD_TOL,
    );
    if r.converged {
        Ok(2.0 * r.value)
    } else {
        Err(Error::QuadratureNonConvergent {
            value: 2.0 * r.value,
            error_estimate: 2.0 * r.error_estimate,
            tolerance: CHARFN_QUAD_TOL,
        })
    }
}

/// The canonical-representation data (shift, total mass, measure density).
pub struct PickRepresentation {
    pub shift_a: f64,
    pub total_mass: f64,
    density: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl PickRepresentation {
    pub fn new(
        shift_a: f64,
        total_mass: f64,
        density: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if total_mass < 0.0 || total_mass.is_nan() {
            return Err(Error::domain(
                "PickRepresentation",
                format!("total mass must be non-negative, got {total_mass}"),
            ));
        }
        Ok(PickRepresentation {
            shift_a,
            total_mass,
            density: Box::new(density),
        })
    }

    /// Representation of a family member: zero shift, the closed-form
    /// mass, and the member's Khintchine density.
    pub fn for_member(member: FamilyMember) -> Self {
        PickRepresentation {
            shift_a: 0.0,
            total_mass: member.reference_mass(),
            density: Box::new(move |x| khintchine_density(member, x)),
        }
    }

    pub fn density(&self, x: f64) -> f64 {
        (self.density)(x)
    }

    /// Numeric check of ∫ density = total_mass (both half-lines).
    pub fn mass_residual(&self, tol: f64) -> QuadratureResult {
        let r = quadrature::integrate_halfline(|x| self.density(x), tol / 2.0);
        QuadratureResult {
            value: 2.0 * r.value - self.total_mass,
            error_estimate: 2.0 * r.error_estimate,
            evaluations: r.evaluations,
            converged: r.converged,
        }
    }
}

const CANONICAL_TOL: f64 = 1e-10;

/// Numeric evaluation of the canonical representation
/// a + ∫ (1+itx)/(it−x) m(dx) for an absolutely continuous even measure;
/// the independent oracle for the closed-form transforms.
pub fn canonical_v_from_density(rep: &PickRepresentation, t: f64) -> Result<Complex64> {
    if t == 0.0 || t.is_nan() {
        return Err(Error::domain(
            "canonical_v_from_density",
            format!("defined for t != 0, got {t}"),
        ));
    }
    let it = Complex64::new(0.0, t);
    // x and −x folded into one half-line integrand; the real parts cancel
    // pointwise for even densities, which the quadrature then verifies.
    let kernel = |x: f64| -> Complex64 {
        let plus = (1.0 + it * x) / (it - x);
        let minus = (1.0 - it * x) / (it + x);
        (plus + minus) * rep.density(x)
    };
    let re = quadrature::integrate_halfline(|x| kernel(x).re, CANONICAL_TOL);
    let im = quadrature::integrate_halfline(|x| kernel(x).im, CANONICAL_TOL);
    if !re.converged || !im.converged {
        return Err(Error::QuadratureNonConvergent {
            value: im.value,
            error_estimate: re.error_estimate + im.error_estimate,
            tolerance: CANONICAL_TOL,
        });
    }
    Ok(Complex64::new(rep.shift_a + re.value, im.value))
}

/// Khintchine density of the background-driving member obtained from a
/// spectral density h on (0,∞): n(x) = −x²/(1+x²)·(h(x) + x·h′(x)),
/// with h′ by central differences unless an analytic derivative is given.
pub fn levy_to_bdcf_khintchine<H>(
    h: H,
    h_prime: Option<&dyn Fn(f64) -> f64>,
    x: f64,
) -> Result<f64>
where
    H: Fn(f64) -> f64,
{
    if x <= 0.0 || x.is_nan() {
        return Err(Error::domain(
            "levy_to_bdcf_khintchine",
            format!("requires x > 0, got {x}"),
        ));
    }
    let dh = match h_prime {
        Some(d) => d(x),
        None => {
            let step = 1e-6 * x.max(1.0);
            (h(x + step) - h(x - step)) / (2.0 * step)
        }
    };
    Ok(-x * x / (1.0 + x * x) * (h(x) + x * dh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn transform_values_at_i() {
        // V_C(i) = i(1 − β(1/2)) = −i(π/2 − 1)
        let vc = voiculescu_eval(FamilyMember::CosineC, 1.0).unwrap();
        assert_abs_diff_eq!(vc.re, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(vc.im, -(FRAC_PI_2 - 1.0), epsilon = 1e-13);
        // V_S(i) = −i(γ + log 2 − 1)
        let vs = voiculescu_eval(FamilyMember::SineS, 1.0).unwrap();
        assert_abs_diff_eq!(vs.im, -(EULER_GAMMA + LN_2 - 1.0), epsilon = 1e-13);
    }

    #[test]
    fn tangent_is_cosine_minus_sine() {
        for t in [0.5, 1.0, 3.0] {
            let c = voiculescu_eval(FamilyMember::CosineC, t).unwrap();
            let s = voiculescu_eval(FamilyMember::SineS, t).unwrap();
            let tt = voiculescu_eval(FamilyMember::TangentT, t).unwrap();
            assert!((tt - (c - s)).norm() < 1e-13, "t = {t}");
        }
    }

    #[test]
    fn rejects_t_zero() {
        assert!(voiculescu_eval(FamilyMember::CosineC, 0.0).is_err());
    }

    #[test]
    fn extract_params_of_members() {
        let (a, m) =
            extract_params(|t| voiculescu_eval(FamilyMember::CosineC, t)).unwrap();
        assert_abs_diff_eq!(a, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(m, FRAC_PI_2 - 1.0, epsilon = 1e-13);
        let (_, m4) =
            extract_params(|t| voiculescu_eval(FamilyMember::BdcfPsiC, t)).unwrap();
        assert_abs_diff_eq!(m4, 2.0 * CATALAN - 1.0, epsilon = 1e-13);
        // degenerate evaluator: constant a has zero measure
        let (a, m) = extract_params(|_| Ok(Complex64::new(2.5, 0.0))).unwrap();
        assert_eq!((a, m), (2.5, 0.0));
    }

    #[test]
    fn density_limits_at_zero() {
        // Taylor oracles at the origin: x/sinh(πx/2) → 2/π gives the
        // cosine and BDCF limits 1/π (even, so quadratic approach), and
        // x/(e^{πx}−1) → 1/π with a |x| cusp of slope −1/2 for the sine.
        let x = 1e-7;
        for member in [FamilyMember::CosineC, FamilyMember::BdcfPsiC] {
            let limit = khintchine_density(member, 0.0);
            assert_abs_diff_eq!(limit, 1.0 / PI, epsilon = 1e-15);
            assert!(
                (khintchine_density(member, x) - limit).abs() < 1e-13,
                "{member:?}"
            );
        }
        assert_abs_diff_eq!(
            khintchine_density(FamilyMember::SineS, 0.0),
            1.0 / PI,
            epsilon = 1e-15
        );
        assert!(
            (khintchine_density(FamilyMember::SineS, x) - (1.0 / PI - 0.5 * x)).abs() < 1e-13
        );
        assert_eq!(khintchine_density(FamilyMember::TangentT, 0.0), 0.0);
    }

    #[test]
    fn density_additivity() {
        // m_C = m_S + m_T pointwise
        for x in [0.1, 1.0, 5.0] {
            let c = khintchine_density(FamilyMember::CosineC, x);
            let s = khintchine_density(FamilyMember::SineS, x);
            let t = khintchine_density(FamilyMember::TangentT, x);
            assert!((c - s - t).abs() < 1e-15, "x = {x}");
        }
    }

    #[test]
    fn charfn_values_at_zero_are_masses() {
        assert_abs_diff_eq!(
            charfn_closed(FamilyMember::CosineC, 0.0),
            FRAC_PI_2 - 1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            charfn_closed(FamilyMember::SineS, 0.0),
            EULER_GAMMA + LN_2 - 1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            charfn_closed(FamilyMember::TangentT, 0.0),
            FRAC_PI_2 - EULER_GAMMA - LN_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            charfn_closed(FamilyMember::BdcfPsiC, 0.0),
            2.0 * CATALAN - 1.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn sine_small_branch_is_continuous() {
        // series branch vs direct formula at the 1e-3 seam
        let seam = 1e-3;
        let series = charfn_sine_small(seam);
        let em = (-seam).exp();
        let direct = -1.0
            + seam.cosh() * (em.ln_1p() - (-em).ln_1p())
            + 0.5 * em * expint_ei(seam).unwrap()
            + 0.5 * seam.exp() * expint_ei(-seam).unwrap();
        assert!((series - direct).abs() < 1e-13, "{series} vs {direct}");
    }

    #[test]
    fn bdcf_original_grouping_matches_stabilized_form() {
        // −1 − t·tanh t − cosh(t)(D(t) + 2t·arctan(e^t)) evaluated as
        // printed, at moderate t where the cancellation is survivable.
        for t in [0.25f64, 0.5, 1.0, 2.0, 5.0] {
            let direct =
                -1.0 - t * t.tanh() - t.cosh() * (dilog_skew(t) + 2.0 * t * t.exp().atan());
            let stable = charfn_closed(FamilyMember::BdcfPsiC, t);
            assert!((direct - stable).abs() < 1e-10, "t = {t}");
        }
    }

    #[test]
    fn charfn_quadrature_matches_closed_forms() {
        // the module's central cross-check: independent computation paths
        for member in FamilyMember::ALL {
            for s in [0.25, 0.5, 1.0, 2.0, 4.0] {
                let q = charfn_quadrature(member, s).unwrap();
                let c = charfn_closed(member, s);
                assert!(
                    (q - c).abs() < 1e-8,
                    "{member:?} at s = {s}: {q} vs {c}"
                );
            }
        }
    }

    #[test]
    fn charfn_quadrature_mass_at_zero() {
        let q = charfn_quadrature(FamilyMember::CosineC, 0.0).unwrap();
        assert!((q - (FRAC_PI_2 - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn sine_charfn_tail_decays_quadratically() {
        // The sine density has a |x| cusp at the origin, so its
        // characteristic function decays like 1/s² (≈ 1.1e-3 at s = 30),
        // not exponentially; quadrature and closed form agree on that.
        let q = charfn_quadrature(FamilyMember::SineS, 30.0).unwrap();
        let c = charfn_closed(FamilyMember::SineS, 30.0);
        assert!((q - c).abs() < 1e-8, "{q} vs {c}");
        assert!(q.abs() < 2e-3);
        assert!((q - 1.0 / 900.0).abs() < 1e-4, "leading 1/s² term");
        // and it keeps shrinking
        let q10 = charfn_quadrature(FamilyMember::SineS, 10.0).unwrap();
        assert!(q.abs() < q10.abs());
    }

    #[test]
    fn charfn_value_at_zero_is_total_mass() {
        for member in FamilyMember::ALL {
            let sample = CharFnValue::closed(member, 0.0);
            assert_eq!(sample.s, 0.0);
            assert!((sample.value - member.reference_mass()).abs() < 1e-13);
        }
    }

    #[test]
    fn bdcf_proof_machinery_assembles_charfn() {
        // The background-driving characteristic function can also be
        // assembled from a convolution: (2C−1)cosh x + sinh x
        // + x(1−e^{2x})/sinh(2x) + (sinh ∗ u(1−e^{2u})/sinh(2u))(x).
        // The kernel simplifies exactly to −2u/(1+e^{−2u}), which is the
        // stable form used here.
        let kernel = |u: f64| -2.0 * u / (1.0 + (-2.0 * u).exp());
        for x in [0.5f64, 1.0, 2.0] {
            let h = crate::quadrature::convolve_halfline(|v| v.sinh(), kernel, x).unwrap();
            let assembled = (2.0 * CATALAN - 1.0) * x.cosh() + x.sinh() + kernel(x) + h;
            let closed = charfn_closed(FamilyMember::BdcfPsiC, x);
            assert!(
                (assembled - closed).abs() < 1e-9,
                "x = {x}: {assembled} vs {closed}"
            );
        }
    }

    #[test]
    fn charfn_additivity_of_closed_forms() {
        let mut s = 0.0;
        while s <= 6.0 {
            let c = charfn_closed(FamilyMember::CosineC, s);
            let sv = charfn_closed(FamilyMember::SineS, s);
            let t = charfn_closed(FamilyMember::TangentT, s);
            assert!((c - sv - t).abs() < 1e-10, "s = {s}");
            s += 0.5;
        }
    }

    #[test]
    fn canonical_representation_closes_the_loop() {
        for member in FamilyMember::ALL {
            let rep = PickRepresentation::for_member(member);
            for t in [0.5, 2.0] {
                let num = canonical_v_from_density(&rep, t).unwrap();
                let closed = voiculescu_eval(member, t).unwrap();
                assert!(
                    (num - closed).norm() < 1e-7,
                    "{member:?} at t = {t}: {num} vs {closed}"
                );
                // imaginary-axis evaluation with symmetric m gives Re = a
                assert!(num.re.abs() < 1e-9, "{member:?} at t = {t}");
            }
        }
    }

    #[test]
    fn canonical_representation_of_zero_measure() {
        let rep = PickRepresentation::new(0.0, 0.0, |_| 0.0).unwrap();
        let v = canonical_v_from_density(&rep, 1.7).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn mass_residuals_vanish() {
        for member in FamilyMember::ALL {
            let rep = PickRepresentation::for_member(member);
            let r = rep.mass_residual(1e-10);
            assert!(r.converged);
            assert!(r.value.abs() < 1e-9, "{member:?}: residual {}", r.value);
        }
    }

    #[test]
    fn bdcf_density_from_cosine_levy_density() {
        // k_C(x) = 1/(2x sinh(πx/2)); −(x k_C)′ = (π/4)cosh/sinh², so the
        // generic spectral-to-BDCF map must land on the BdcfPsiC density.
        let k_c = |x: f64| 0.5 / (x * (FRAC_PI_2 * x).sinh());
        for x in [0.5, 1.0, 2.0] {
            let n = levy_to_bdcf_khintchine(k_c, None, x).unwrap();
            let d = khintchine_density(FamilyMember::BdcfPsiC, x);
            assert!((n - d).abs() < 1e-6, "x = {x}: {n} vs {d}");
        }
        // analytic derivative route agrees even tighter
        let dk_c = |x: f64| {
            let u = FRAC_PI_2 * x;
            -(u.sinh() + x * FRAC_PI_2 * u.cosh()) / (2.0 * x * x * u.sinh() * u.sinh())
        };
        for x in [0.5, 1.0, 2.0] {
            let n = levy_to_bdcf_khintchine(k_c, Some(&dk_c), x).unwrap();
            let d = khintchine_density(FamilyMember::BdcfPsiC, x);
            assert!((n - d).abs() < 1e-12, "x = {x}: {n} vs {d}");
        }
    }

    #[test]
    fn sine_levy_density_gives_nonnegative_bdcf_density() {
        let k_s = |x: f64| 1.0 / (x * (PI * x).exp_m1());
        for i in 1..=40 {
            let x = 0.1 * i as f64;
            let n = levy_to_bdcf_khintchine(k_s, None, x).unwrap();
            assert!(n >= -1e-12, "x = {x}: {n}");
        }
    }

    #[test]
    fn constant_x_times_h_maps_to_zero() {
        // h = c/x makes x·h constant, so n ≡ 0 away from the support edges
        let h = |x: f64| 0.35 / x;
        for x in [0.2, 1.0, 3.0] {
            let n = levy_to_bdcf_khintchine(h, None, x).unwrap();
            assert!(n.abs() < 1e-9, "x = {x}: {n}");
        }
    }

    proptest! {
        // conjugate symmetry V(−it) = conj(V(it))
        #[test]
        fn conjugate_symmetry(t in 0.01f64..20.0, idx in 0usize..4) {
            let member = FamilyMember::ALL[idx];
            let plus = voiculescu_eval(member, t).unwrap();
            let minus = voiculescu_eval(member, -t).unwrap();
            prop_assert!((minus - plus.conj()).norm() < 1e-14);
        }

        // all four shift parameters vanish: V(it) purely imaginary
        #[test]
        fn purely_imaginary(t in 0.05f64..10.0, idx in 0usize..4) {
            let member = FamilyMember::ALL[idx];
            prop_assert!(voiculescu_eval(member, t).unwrap().re.abs() < 1e-12);
        }

        // evenness of the quadrature characteristic function
        #[test]
        fn charfn_quadrature_is_even(s in 0.1f64..4.0, idx in 0usize..4) {
            let member = FamilyMember::ALL[idx];
            let plus = charfn_quadrature(member, s).unwrap();
            let minus = charfn_quadrature(member, -s).unwrap();
            prop_assert_eq!(plus, minus);
        }
    }
}

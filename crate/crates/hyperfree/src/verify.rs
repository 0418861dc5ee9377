//! Machine verification of every identity the transform family
//! satisfies, each check comparing two computation paths that share no
//! code beyond the special-function primitives. Results are collected
//! into a serializable report; ambiguities (one printed sign, one
//! printed argument of a logarithm) are resolved numerically and
//! recorded as data rather than silently patched.

use crate::error::{Error, Result};
use crate::quadrature;
use crate::recovery::{rhs_laplace_from_v, verify_eq4_form};
use crate::transforms::{
    charfn_closed, charfn_quadrature, extract_params, khintchine_density, voiculescu_eval,
    FamilyMember,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

/// Grids and tolerances for a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Characteristic-function arguments (s and t grids).
    pub grid_s: Vec<f64>,
    /// Laplace-domain arguments, all > 1.
    pub grid_w: Vec<f64>,
    /// Real-line arguments for pointwise identities.
    pub grid_x: Vec<f64>,
    /// Quadrature-vs-closed-form tolerance.
    pub tol_quad: f64,
    /// Inversion-vs-closed-form tolerance.
    pub tol_inv: f64,
    /// Pure special-function identity tolerance.
    pub tol_specfun: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            grid_s: vec![0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0],
            grid_w: vec![1.1, 1.5, 2.0, 3.0, 5.0, 10.0],
            grid_x: vec![-3.0, -1.0, -0.1, 0.1, 1.0, 3.0],
            tol_quad: 1e-8,
            tol_inv: 1e-4,
            tol_specfun: 1e-12,
        }
    }
}

/// Outcome of a single named identity check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub description: String,
    pub grid: Vec<f64>,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Verdict text for the checks that resolve a printed ambiguity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign_resolution: Option<String>,
}

impl IdentityCheck {
    fn from_errors(
        id: &str,
        description: &str,
        grid: &[f64],
        errors: impl IntoIterator<Item = f64>,
        tolerance: f64,
    ) -> Self {
        let max_abs_error = errors.into_iter().fold(0.0f64, f64::max);
        IdentityCheck {
            id: id.to_string(),
            description: description.to_string(),
            grid: grid.to_vec(),
            max_abs_error,
            tolerance,
            passed: max_abs_error <= tolerance,
            sign_resolution: None,
        }
    }
}

/// Full verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: VerifyConfig,
    pub checks: Vec<IdentityCheck>,
    pub overall_passed: bool,
    /// Unix seconds; excluded from determinism comparisons.
    pub timestamp: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Registry order is fixed so reports are deterministic.
pub const CHECK_IDS: [&str; 8] = [
    "masses",
    "appendixD",
    "prop3_split",
    "remark1",
    "remark2",
    "remark3",
    "corollary1",
    "eq3_all",
];

/// Run one named check, optionally overriding its default grid.
pub fn run_check(id: &str, config: &VerifyConfig, grid: Option<&[f64]>) -> Result<IdentityCheck> {
    match id {
        "masses" => Ok(check_masses(config)),
        "appendixD" => Ok(check_appendix_d(config, grid)),
        "prop3_split" => Ok(check_split(config, grid)),
        "remark1" => check_remark1(config, grid),
        "remark2" => check_remark2(config, grid),
        "remark3" => check_remark3(config, grid),
        "corollary1" => check_corollary1(config, grid),
        "eq3_all" => check_eq3_all(config, grid),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Run the whole registry; failures are recorded in the report, never
/// raised. Deterministic for a fixed config.
pub fn run_all(config: &VerifyConfig) -> VerificationReport {
    let checks: Vec<IdentityCheck> = CHECK_IDS
        .iter()
        .map(|id| {
            run_check(id, config, None).unwrap_or_else(|e| IdentityCheck {
                id: id.to_string(),
                description: format!("check failed to run: {e}"),
                grid: vec![],
                max_abs_error: f64::INFINITY,
                tolerance: 0.0,
                passed: false,
                sign_resolution: None,
            })
        })
        .collect();
    let overall_passed = checks.iter().all(|c| c.passed);
    VerificationReport {
        config: config.clone(),
        checks,
        overall_passed,
        timestamp: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    }
}

fn member_evaluator(member: FamilyMember) -> impl Fn(f64) -> Result<Complex64> {
    move |t| voiculescu_eval(member, t)
}

/// Total masses −Im V(i) against their closed constants.
fn check_masses(config: &VerifyConfig) -> IdentityCheck {
    let mut errors = Vec::new();
    for member in FamilyMember::ALL {
        match extract_params(member_evaluator(member)) {
            Ok((a, mass)) => {
                errors.push(a.abs());
                errors.push((mass - member.reference_mass()).abs());
            }
            Err(_) => errors.push(f64::INFINITY),
        }
    }
    IdentityCheck::from_errors(
        "masses",
        "shift 0 and total masses π/2−1, γ+log2−1, π/2−γ−log2, 2C−1 from V(i)",
        &[1.0],
        errors,
        config.tol_specfun,
    )
}

/// i·log((1−ie^x)/(1+ie^x)) = 2·arctan(e^x) on the x grid.
fn check_appendix_d(config: &VerifyConfig, grid: Option<&[f64]>) -> IdentityCheck {
    let grid: Vec<f64> = grid
        .map(|g| g.to_vec())
        .unwrap_or_else(|| config.grid_x.clone());
    let errors = grid.iter().map(|&x| {
        let e = Complex64::new(0.0, x.exp());
        let lhs = Complex64::i() * ((1.0 - e) / (1.0 + e)).ln();
        (lhs - 2.0 * x.exp().atan()).norm()
    });
    IdentityCheck::from_errors(
        "appendixD",
        "i·log((1−i e^x)/(1+i e^x)) = 2 arctan(e^x)",
        &grid,
        errors,
        config.tol_specfun,
    )
}

/// V_T = V_C − V_S, m̂_C = m̂_S + m̂_T, and density additivity.
fn check_split(config: &VerifyConfig, grid: Option<&[f64]>) -> IdentityCheck {
    let grid: Vec<f64> = grid
        .map(|g| g.to_vec())
        .unwrap_or_else(|| config.grid_s.clone());
    let mut errors = Vec::new();
    for &t in &grid {
        if t != 0.0 {
            let c = voiculescu_eval(FamilyMember::CosineC, t);
            let s = voiculescu_eval(FamilyMember::SineS, t);
            let tt = voiculescu_eval(FamilyMember::TangentT, t);
            match (c, s, tt) {
                (Ok(c), Ok(s), Ok(tt)) => errors.push((tt - (c - s)).norm()),
                _ => errors.push(f64::INFINITY),
            }
        }
        errors.push(
            (charfn_closed(FamilyMember::CosineC, t)
                - charfn_closed(FamilyMember::SineS, t)
                - charfn_closed(FamilyMember::TangentT, t))
            .abs(),
        );
        errors.push(
            (khintchine_density(FamilyMember::CosineC, t)
                - khintchine_density(FamilyMember::SineS, t)
                - khintchine_density(FamilyMember::TangentT, t))
            .abs(),
        );
    }
    // closed-form m̂ additivity runs through genuinely different special
    // functions on each side, so it sits above pure-rounding level
    IdentityCheck::from_errors(
        "prop3_split",
        "V_T = V_C − V_S; m̂_C = m̂_S + m̂_T; density additivity",
        &grid,
        errors,
        100.0 * config.tol_specfun,
    )
}

/// Cosine-member integral identity: quadrature vs closed form.
fn check_remark1(config: &VerifyConfig, grid: Option<&[f64]>) -> Result<IdentityCheck> {
    let grid: Vec<f64> = grid
        .map(|g| g.to_vec())
        .unwrap_or_else(|| config.grid_s.clone());
    let mut errors = Vec::new();
    for &s in &grid {
        let q = charfn_quadrature(FamilyMember::CosineC, s)?;
        errors.push((q - charfn_closed(FamilyMember::CosineC, s)).abs());
    }
    Ok(IdentityCheck::from_errors(
        "remark1",
        "∫cos(sx)·x/((1+x²)sinh(πx/2))dx = 2 sinh(s)arctan(e^{−s}) + (π/2)e^{−s} − 1",
        &grid,
        errors,
        config.tol_quad,
    ))
}

/// Sine-member integral identity, plus the counter-check of the variant
/// with log(1+e^{s}) in place of log(1+e^{−s}), which must fail.
fn check_remark2(config: &VerifyConfig, grid: Option<&[f64]>) -> Result<IdentityCheck> {
    let grid: Vec<f64> = grid
        .map(|g| g.to_vec())
        .unwrap_or_else(|| config.grid_s.clone());
    let mut errors = Vec::new();
    let mut variant_errors = Vec::new();
    for &s in &grid {
        let q = charfn_quadrature(FamilyMember::SineS, s)?;
        errors.push((q - charfn_closed(FamilyMember::SineS, s)).abs());
        // log(1+e^{s}) = s + log(1+e^{−s}), so the printed variant is the
        // closed form plus s·cosh(s)
        let variant = charfn_closed(FamilyMember::SineS, s) + s.abs() * s.cosh();
        variant_errors.push((q - variant).abs());
    }
    let variant_min = variant_errors.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    let mut check = IdentityCheck::from_errors(
        "remark2",
        "2∫cos(sx)·x/((1+x²)(e^{πx}−1))dx vs closed form with the log(1+e^{−s}) reading",
        &grid,
        errors,
        config.tol_quad,
    );
    let reading_ok = check.passed;
    let variant_fails = variant_min > 1e3 * config.tol_quad;
    check.passed = reading_ok && variant_fails;
    check.sign_resolution = Some(format!(
        "log(1+e^-s) reading {} (max err {:.3e}); printed log(1+e^s) variant off by s·cosh(s) \
         (min abs deviation {:.3e}) — treated as a typo",
        if reading_ok { "confirmed" } else { "FAILED" },
        check.max_abs_error,
        variant_min,
    ));
    Ok(check)
}

/// BDCF-member integral identity: quadrature vs closed form on [0, 4].
fn check_remark3(config: &VerifyConfig, grid: Option<&[f64]>) -> Result<IdentityCheck> {
    let grid: Vec<f64> = grid.map(|g| g.to_vec()).unwrap_or_else(|| {
        config
            .grid_s
            .iter()
            .copied()
            .filter(|&t| t <= 4.0)
            .chain(std::iter::once(0.0))
            .collect()
    });
    let mut errors = Vec::new();
    for &t in &grid {
        let q = charfn_quadrature(FamilyMember::BdcfPsiC, t)?;
        errors.push((q - charfn_closed(FamilyMember::BdcfPsiC, t)).abs());
    }
    Ok(IdentityCheck::from_errors(
        "remark3",
        "(π/2)∫cos(tx)·x²/(1+x²)·cosh(πx/2)/sinh²(πx/2)dx vs the closed form",
        &grid,
        errors,
        10.0 * config.tol_quad,
    ))
}

/// d/dx of the cosine spectral density 1/(2x sinh(πx/2)).
fn cosine_levy_density_prime(x: f64) -> f64 {
    let u = FRAC_PI_2 * x;
    -(u.sinh() + x * FRAC_PI_2 * u.cosh()) / (2.0 * x * x * u.sinh() * u.sinh())
}

/// m̂_ψC̃ + m̂_C̃ vs ±2∫cos(tx)·x³/(1+x²)·k_C′(x)dx; exactly one sign can
/// hold, and the resolution is recorded.
fn check_corollary1(config: &VerifyConfig, grid: Option<&[f64]>) -> Result<IdentityCheck> {
    let grid: Vec<f64> = grid
        .map(|g| g.to_vec())
        .unwrap_or_else(|| config.grid_s.iter().copied().filter(|&t| t <= 4.0).collect());
    // x³/(1+x²)·k_C′(x) has the removable limit −2/π at the origin
    let integrand = |x: f64| {
        if x < 1e-6 {
            -2.0 / PI - PI / 6.0 * x * x
        } else {
            x.powi(3) / (1.0 + x * x) * cosine_levy_density_prime(x)
        }
    };
    let mut minus_errors = Vec::new();
    let mut plus_errors = Vec::new();
    for &t in &grid {
        let lhs = charfn_closed(FamilyMember::BdcfPsiC, t) + charfn_closed(FamilyMember::CosineC, t);
        let r = quadrature::integrate_cos(integrand, t, 1e-10);
        if !r.converged {
            return Err(Error::QuadratureNonConvergent {
                value: r.value,
                error_estimate: r.error_estimate,
                tolerance: 1e-10,
            });
        }
        minus_errors.push((lhs + 2.0 * r.value).abs());
        plus_errors.push((lhs - 2.0 * r.value).abs());
    }
    let minus_max = minus_errors.iter().fold(0.0f64, |a, &b| a.max(b));
    let plus_max = plus_errors.iter().fold(0.0f64, |a, &b| a.max(b));
    let tolerance = 100.0 * config.tol_quad;
    let (winner, max_abs_error, loser_min) = if minus_max <= plus_max {
        let loser = plus_errors.iter().fold(f64::INFINITY, |a, &b| a.min(b));
        ("minus", minus_max, loser)
    } else {
        let loser = minus_errors.iter().fold(f64::INFINITY, |a, &b| a.min(b));
        ("plus", plus_max, loser)
    };
    let exactly_one = max_abs_error <= tolerance && loser_min > 1e3 * tolerance;
    Ok(IdentityCheck {
        id: "corollary1".to_string(),
        description: "m̂_ψC̃ + m̂_C̃ = ∓2∫cos(tx)·x³/(1+x²)·k_C′(x)dx, both signs tested"
            .to_string(),
        grid,
        max_abs_error,
        tolerance,
        passed: exactly_one,
        sign_resolution: Some(format!(
            "{winner} sign holds (max err {max_abs_error:.3e}); opposite sign deviates by \
             ≥ {loser_min:.3e}; the printed corollary carries a plus"
        )),
    })
}

/// Laplace identity on the w grid: the cosh-shifted residual and the
/// bounded-form comparison against the forward transform of the closed
/// characteristic function.
fn check_eq3_all(config: &VerifyConfig, grid: Option<&[f64]>) -> Result<IdentityCheck> {
    let grid: Vec<f64> = grid
        .map(|g| g.to_vec())
        .unwrap_or_else(|| config.grid_w.clone());
    let mut errors = Vec::new();
    for member in FamilyMember::ALL {
        let v = member_evaluator(member);
        for &w in &grid {
            errors.push(verify_eq4_form(member, w)?);
            let rhs = rhs_laplace_from_v(&v, w)?;
            let lhs = quadrature::laplace_forward(move |x| charfn_closed(member, x), w)?;
            errors.push((lhs - rhs).abs());
        }
    }
    Ok(IdentityCheck::from_errors(
        "eq3_all",
        "cosh-shifted Laplace residual and bounded-form transform comparison, all members",
        &grid,
        errors,
        10.0 * config.tol_quad,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes_with_resolutions() {
        let report = run_all(&VerifyConfig::default());
        for check in &report.checks {
            assert!(
                check.passed,
                "{}: max err {:.3e} vs tol {:.3e} ({:?})",
                check.id, check.max_abs_error, check.tolerance, check.sign_resolution
            );
        }
        assert!(report.overall_passed);
        let corollary = report
            .checks
            .iter()
            .find(|c| c.id == "corollary1")
            .unwrap();
        assert!(corollary
            .sign_resolution
            .as_deref()
            .unwrap()
            .starts_with("minus"));
        let remark2 = report.checks.iter().find(|c| c.id == "remark2").unwrap();
        assert!(remark2
            .sign_resolution
            .as_deref()
            .unwrap()
            .contains("confirmed"));
    }

    #[test]
    fn reports_are_deterministic_modulo_timestamp() {
        let config = VerifyConfig::default();
        let mut a = run_all(&config);
        let mut b = run_all(&config);
        a.timestamp = 0;
        b.timestamp = 0;
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(matches!(
            run_check("nonsense", &VerifyConfig::default(), None),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn grid_override_narrows_a_check() {
        let check = run_check("appendixD", &VerifyConfig::default(), Some(&[0.0])).unwrap();
        assert_eq!(check.grid, vec![0.0]);
        assert!(check.passed);
    }

    #[test]
    fn masses_check_only_exercises_limits_on_zero_grid() {
        // grid override to s = 0: the split check reduces to the exact
        // constant identities
        let check = run_check("prop3_split", &VerifyConfig::default(), Some(&[0.0])).unwrap();
        assert!(check.passed);
        assert!(check.max_abs_error < 1e-14);
    }

    #[test]
    fn unreachable_tolerance_fails_and_is_recorded() {
        // the registry reaches ~2e-16 on its best checks, so 1e-17 sits
        // below the double-precision floor and must be reported as failure
        let config = VerifyConfig {
            tol_quad: 1e-17,
            ..VerifyConfig::default()
        };
        let report = run_all(&config);
        assert!(!report.overall_passed);
        assert!(report.checks.iter().any(|c| !c.passed));
    }

    #[test]
    fn passed_flag_matches_error_versus_tolerance() {
        let report = run_all(&VerifyConfig::default());
        for c in &report.checks {
            if c.id != "remark2" && c.id != "corollary1" {
                assert_eq!(c.passed, c.max_abs_error <= c.tolerance, "{}", c.id);
            }
        }
    }

    #[test]
    fn remark2_variant_counter_check_visible_in_report() {
        let check = run_check("remark2", &VerifyConfig::default(), None).unwrap();
        let text = check.sign_resolution.unwrap();
        assert!(text.contains("typo"));
    }

    #[test]
    fn specfun_targets_of_the_masses_check() {
        // the constants the masses check relies on, each against its
        // defining special-function identity
        use crate::specfun::{digamma, expint_ei, nielsen_beta};
        use std::f64::consts::LN_2;
        assert!((nielsen_beta(0.5).unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!(
            (digamma(0.5).unwrap() + crate::constants::EULER_GAMMA + 2.0 * LN_2).abs() < 1e-12
        );
        assert!((expint_ei(1e-11).unwrap() - (1e-11f64).ln() - crate::constants::EULER_GAMMA)
            .abs()
            < 1e-10);
    }
}

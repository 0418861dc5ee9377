//! Acceptance suite: every criterion the project is gated on, each as
//! one test printing a pass/fail line (run with `--nocapture` to see
//! them all). Criterion 5's order-agreement clause is implemented
//! exactly as stated and is expected to fail; see the test body for the
//! measured numbers and `recovery` module docs for the cause.

use hyperfree::constants::{CATALAN, EULER_GAMMA};
use hyperfree::quadrature::convolve_halfline;
use hyperfree::recovery::{
    recover_charfn, representation_residual, rhs_laplace_from_v, verify_eq4_form,
    InversionConfig,
};
use hyperfree::specfun::{digamma, dilog, dilog_skew, expint_ei, hurwitz_zeta2, nielsen_beta};
use hyperfree::transforms::{
    canonical_v_from_density, charfn_closed, charfn_quadrature, extract_params,
    voiculescu_eval, FamilyMember, PickRepresentation,
};
use hyperfree::verify::{run_all, VerifyConfig};
use hyperfree::Complex64;
use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::process::Command;
use std::time::Instant;

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let mut points = Vec::new();
    let mut k = 0u32;
    loop {
        let x = start + step * k as f64;
        if x > stop + step / 2.0 {
            return points;
        }
        points.push(x);
        k += 1;
    }
}

fn evaluator(member: FamilyMember) -> impl Fn(f64) -> hyperfree::Result<Complex64> {
    move |t| voiculescu_eval(member, t)
}

#[test]
fn criterion_1_masses() {
    let start = Instant::now();
    let expected = [
        (FamilyMember::CosineC, FRAC_PI_2 - 1.0),
        (FamilyMember::SineS, EULER_GAMMA + LN_2 - 1.0),
        (FamilyMember::TangentT, FRAC_PI_2 - EULER_GAMMA - LN_2),
        (FamilyMember::BdcfPsiC, 2.0 * CATALAN - 1.0),
    ];
    let mut worst = 0.0f64;
    for (member, want) in expected {
        let (shift, mass) = extract_params(evaluator(member)).unwrap();
        worst = worst.max(shift.abs()).max((mass - want).abs());
    }
    let elapsed = start.elapsed();
    let pass = worst < 1e-12 && elapsed.as_secs_f64() < 1.0;
    println!(
        "acceptance 1 (masses): {} — max deviation {worst:.3e}, {elapsed:?}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max deviation {worst:.3e}, elapsed {elapsed:?}");
}

#[test]
fn criterion_2_closed_vs_quadrature() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for member in FamilyMember::ALL {
        for s in grid(0.1, 5.0, 0.1) {
            let q = charfn_quadrature(member, s).unwrap();
            worst = worst.max((q - charfn_closed(member, s)).abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = worst < 1e-8 && elapsed.as_secs_f64() < 10.0;
    println!(
        "acceptance 2 (closed form vs quadrature): {} — max |Δ| {worst:.3e}, {elapsed:?}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max |Δ| {worst:.3e}, elapsed {elapsed:?}");
}

#[test]
fn criterion_3_canonical_representation_loop() {
    let mut worst = 0.0f64;
    for member in FamilyMember::ALL {
        let rep = PickRepresentation::for_member(member);
        for t in [0.5, 1.0, 2.0, 4.0] {
            let numeric = canonical_v_from_density(&rep, t).unwrap();
            let closed = voiculescu_eval(member, t).unwrap();
            worst = worst.max((numeric - closed).norm());
        }
    }
    let pass = worst < 1e-7;
    println!(
        "acceptance 3 (canonical-form loop): {} — max |Δ| {worst:.3e}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max |Δ| {worst:.3e}");
}

#[test]
fn criterion_4_laplace_identity() {
    let mut worst_residual = 0.0f64;
    let mut worst_numerator = 0.0f64;
    for member in FamilyMember::ALL {
        for w in [1.1, 1.5, 2.0, 3.0, 5.0, 10.0] {
            worst_residual = worst_residual.max(verify_eq4_form(member, w).unwrap());
        }
        worst_numerator =
            worst_numerator.max(representation_residual(&evaluator(member)).unwrap());
    }
    let pass = worst_residual < 1e-7 && worst_numerator < 1e-10;
    println!(
        "acceptance 4 (Laplace identity): {} — max residual {worst_residual:.3e}, \
         max numerator at w=1 {worst_numerator:.3e}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(
        pass,
        "residual {worst_residual:.3e}, numerator {worst_numerator:.3e}"
    );
}

#[test]
fn criterion_5_recovery_round_trip() {
    let cfg = InversionConfig::default();
    let mut worst = 0.0f64;
    for member in FamilyMember::ALL {
        let v = evaluator(member);
        for s in grid(0.1, 3.0, 0.1) {
            let rec = recover_charfn(&v, s, &cfg).unwrap();
            worst = worst.max((rec.value - charfn_closed(member, s)).abs());
        }
    }
    let pass = worst < 1e-4;
    println!(
        "acceptance 5a (recovery round trip): {} — max |Δ| {worst:.3e}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max |Δ| {worst:.3e}");
}

#[test]
fn criterion_5_order_12_vs_16_agreement() {
    // Stated target: order-12 and order-16 inversions agree within 1e-5
    // wherever the 1e-4 round trip holds. Measured reality: their gap is
    // order-12's own truncation, e.g. 6.3e-5 at s = 1 on the cosine
    // member (both orders inside the 1e-4 round trip there) and ~9e-4
    // near s = 2 on the BDCF member, because m̂_C and m̂_ψC̃ carry complex
    // singularities at distance π/2 from the real axis. The 60-digit
    // exact-weight computation reproduces the same gaps, so this is
    // method truncation, not rounding, and no faithful implementation of
    // the two classical orders can close it. Left failing deliberately.
    let mut worst_qualified = 0.0f64; // both orders within the round trip
    let mut worst_all = 0.0f64;
    for member in FamilyMember::ALL {
        let v = evaluator(member);
        let transform = |w: f64| rhs_laplace_from_v(&v, w);
        for s in grid(0.1, 3.0, 0.1) {
            let closed = charfn_closed(member, s);
            let lo = hyperfree::recovery::invert_laplace(
                &transform,
                s,
                hyperfree::recovery::InversionBackend::GaverStehfest,
                12,
            )
            .unwrap();
            let hi = hyperfree::recovery::invert_laplace(
                &transform,
                s,
                hyperfree::recovery::InversionBackend::GaverStehfest,
                16,
            )
            .unwrap();
            let gap = (lo - hi).abs();
            worst_all = worst_all.max(gap);
            if (lo - closed).abs() < 1e-4 && (hi - closed).abs() < 1e-4 {
                worst_qualified = worst_qualified.max(gap);
            }
        }
    }
    let pass = worst_qualified < 1e-5;
    println!(
        "acceptance 5b (orders 12 vs 16 within 1e-5): {} — max gap {worst_qualified:.3e} \
         where both orders meet the 1e-4 round trip ({worst_all:.3e} unrestricted); \
         the gap is order-12 truncation and cannot be reduced at these orders",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(
        pass,
        "order 12 vs 16 gap {worst_qualified:.3e} (unrestricted {worst_all:.3e}) exceeds 1e-5"
    );
}

#[test]
fn criterion_6_convolution_closed_forms() {
    let mut worst = 0.0f64;
    for x in [0.5, 1.0, 2.0] {
        let first = convolve_halfline(|v| v.cosh(), |u| 2.0 / (1.0 + (-2.0 * u).exp()), x)
            .unwrap();
        let first_closed = 2.0 * x.sinh() * (PI / 4.0 - (-x).exp().atan()) - (-x).exp() + 1.0;
        worst = worst.max((first - first_closed).abs());

        let kernel = |u: f64| {
            if u < 1e-3 {
                -1.0 - u / 3.0 + u * u * u / 45.0
            } else {
                1.0 / u - 2.0 / (-(-2.0 * u).exp_m1())
            }
        };
        let second = convolve_halfline(|v| v.cosh(), kernel, x).unwrap();
        let second_closed = (-x).exp() * expint_ei(x).unwrap() / 2.0
            + x.exp() * expint_ei(-x).unwrap() / 2.0
            - 1.0
            + (-x).exp()
            + x.cosh() * (((1.0 + (-x).exp()) / (1.0 - (-x).exp())).ln() - EULER_GAMMA - LN_2);
        worst = worst.max((second - second_closed).abs());
    }
    let pass = worst < 1e-8;
    println!(
        "acceptance 6 (proof convolutions): {} — max |Δ| {worst:.3e}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max |Δ| {worst:.3e}");
}

#[test]
fn criterion_7_identity_suite() {
    let report = run_all(&VerifyConfig::default());
    let check = |id: &str| report.checks.iter().find(|c| c.id == id).unwrap();
    for id in ["remark1", "remark3", "prop3_split", "appendixD", "masses"] {
        assert!(check(id).passed, "{id} failed: {:?}", check(id));
    }
    let remark2 = check("remark2");
    let note = remark2.sign_resolution.as_deref().unwrap();
    assert!(remark2.passed && note.contains("confirmed") && note.contains("typo"),
        "remark2: {note}");
    let corollary = check("corollary1");
    let sign = corollary.sign_resolution.as_deref().unwrap();
    assert!(corollary.passed && sign.starts_with("minus"), "corollary1: {sign}");
    println!(
        "acceptance 7 (identity suite): PASS — all checks green; remark2 records the \
         printed-variant failure; corollary1 resolves to the minus sign"
    );
}

#[test]
fn criterion_8_special_function_values() {
    let mut worst = 0.0f64;
    worst = worst.max((digamma(0.5).unwrap() - (-EULER_GAMMA - 2.0 * LN_2)).abs());
    worst = worst.max((nielsen_beta(0.5).unwrap() - FRAC_PI_2).abs());
    for k in 1..=100 {
        let x = 0.1 * k as f64;
        let via_psi = 0.5 * (digamma((x + 1.0) / 2.0).unwrap() - digamma(x / 2.0).unwrap());
        worst = worst.max((nielsen_beta(x).unwrap() - via_psi).abs());
    }
    worst = worst.max((hurwitz_zeta2(1.0).unwrap() - PI * PI / 6.0).abs());
    let skew = dilog(Complex64::new(0.0, 1.0)) - dilog(Complex64::new(0.0, -1.0));
    worst = worst.max((skew - Complex64::new(0.0, 2.0 * CATALAN)).norm());
    worst = worst.max((dilog_skew(0.0) + 2.0 * CATALAN).abs());
    let x = 1e-11;
    worst = worst.max((expint_ei(x).unwrap() - x.ln() - EULER_GAMMA).abs());
    let pass = worst < 1e-10;
    println!(
        "acceptance 8 (special-function values): {} — max deviation {worst:.3e}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max deviation {worst:.3e}");
}

#[test]
fn criterion_9_determinism_and_exit_codes() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hyperfree"))
            .args(args)
            .output()
            .expect("binary runs")
    };
    let strip_timestamp = |text: &str| -> String {
        text.lines()
            .filter(|l| !l.trim_start().starts_with("\"timestamp\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let first = run(&["verify", "--format", "json"]);
    let second = run(&["verify", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    let a = strip_timestamp(&String::from_utf8_lossy(&first.stdout));
    let b = strip_timestamp(&String::from_utf8_lossy(&second.stdout));
    let deterministic = a == b;

    let failing = run(&["verify", "--tol-quad", "1e-17"]);
    let usage = run(&["eval", "nonsense", "1"]);
    let domain = run(&["eval", "digamma", "0"]);
    let codes_ok = failing.status.code() == Some(1)
        && usage.status.code() == Some(2)
        && domain.status.code() == Some(3);

    let pass = deterministic && codes_ok;
    println!(
        "acceptance 9 (determinism + exit codes): {} — byte-identical reports {}, \
         exit codes (1,2,3) = ({:?},{:?},{:?})",
        if pass { "PASS" } else { "FAIL" },
        deterministic,
        failing.status.code(),
        usage.status.code(),
        domain.status.code()
    );
    assert!(pass);
}

use crate::output::{csv_quote, write_output, Table};
use crate::{BackendArg, Command, Format, OutputArgs};
use hyperfree::recovery::{recover_charfn, InversionBackend, InversionConfig};
use hyperfree::specfun::{digamma, dilog_skew, expint_ei, hurwitz_zeta2, nielsen_beta};
use hyperfree::transforms::{
    charfn_closed, khintchine_density, voiculescu_eval, CharFnValue, FamilyMember,
};
use hyperfree::verify::{run_all, run_check, IdentityCheck, VerifyConfig};
use rayon::prelude::*;
use serde_json::json;

pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<hyperfree::Error> for CliError {
    fn from(e: hyperfree::Error) -> Self {
        let code = match e {
            hyperfree::Error::UnknownCheck(_) | hyperfree::Error::InvalidConfig(_) => 2,
            _ => 3,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            message: e.to_string(),
            code: 3,
        }
    }
}

pub fn dispatch(cmd: Command) -> Result<u8, CliError> {
    match cmd {
        Command::Eval {
            target,
            points,
            grid,
            output,
        } => run_eval(&target, points, grid.as_deref(), &output),
        Command::Verify {
            only,
            tol_quad,
            tol_inv,
            tol_specfun,
            grid_s,
            grid_w,
            grid_x,
            output,
        } => {
            let mut config = VerifyConfig {
                tol_quad,
                tol_inv,
                tol_specfun,
                ..VerifyConfig::default()
            };
            if let Some(g) = grid_s.as_deref() {
                config.grid_s = parse_points(g)?;
            }
            if let Some(g) = grid_w.as_deref() {
                config.grid_w = parse_points(g)?;
            }
            if let Some(g) = grid_x.as_deref() {
                config.grid_x = parse_points(g)?;
            }
            run_verify(only.as_deref(), &config, &output)
        }
        Command::Recover {
            member,
            s,
            order,
            backend,
            output,
        } => run_recover(&member, &s, order, backend, &output),
    }
}

/// Inclusive `start:stop:step` grid (endpoints within half a step), a
/// comma-separated list, or a single number.
fn parse_points(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = |m: String| CliError::usage(m);
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad(format!("grid must be start:stop:step, got `{spec}`")));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(format!("invalid grid `{spec}`: {e}")))?;
        let (start, stop, step) = (nums[0], nums[1], nums[2]);
        if step <= 0.0 || step.is_nan() || !start.is_finite() || !stop.is_finite() || stop < start
        {
            return Err(bad(format!("invalid grid `{spec}`")));
        }
        let mut points = Vec::new();
        let mut k = 0u64;
        loop {
            let x = start + step * k as f64;
            if x > stop + step / 2.0 {
                break;
            }
            points.push(x);
            k += 1;
            if k > 10_000_000 {
                return Err(bad(format!("grid `{spec}` has too many points")));
            }
        }
        Ok(points)
    } else {
        spec.split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|e| bad(format!("invalid number `{p}`: {e}")))
            })
            .collect()
    }
}

fn member_from_key(key: &str) -> Result<FamilyMember, CliError> {
    FamilyMember::from_key(key)
        .ok_or_else(|| CliError::usage(format!("unknown member `{key}` (use C, S, T, psiC)")))
}

enum EvalTarget {
    Scalar(&'static str, fn(f64) -> hyperfree::Result<f64>),
    Transform(FamilyMember),
    Density(FamilyMember),
    CharFn(FamilyMember),
}

fn resolve_target(name: &str) -> Result<EvalTarget, CliError> {
    if let Some(key) = name.strip_prefix("V:") {
        return Ok(EvalTarget::Transform(member_from_key(key)?));
    }
    if let Some(key) = name.strip_prefix("density:") {
        return Ok(EvalTarget::Density(member_from_key(key)?));
    }
    if let Some(key) = name.strip_prefix("charfn:") {
        return Ok(EvalTarget::CharFn(member_from_key(key)?));
    }
    match name {
        "digamma" => Ok(EvalTarget::Scalar("x", digamma)),
        "beta" => Ok(EvalTarget::Scalar("x", nielsen_beta)),
        "ei" => Ok(EvalTarget::Scalar("x", expint_ei)),
        "zeta2" => Ok(EvalTarget::Scalar("a", hurwitz_zeta2)),
        "dilog_skew" => Ok(EvalTarget::Scalar("t", |t| Ok(dilog_skew(t)))),
        other => Err(CliError::usage(format!(
            "unknown target `{other}` (expected digamma, beta, ei, zeta2, dilog_skew, \
             V:{{C,S,T,psiC}}, density:{{...}}, charfn:{{...}})"
        ))),
    }
}

fn run_eval(
    target: &str,
    mut points: Vec<f64>,
    grid: Option<&str>,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let resolved = resolve_target(target)?;
    if let Some(g) = grid {
        points.extend(parse_points(g)?);
    }
    if points.is_empty() {
        return Err(CliError::usage(
            "no evaluation points given (positional values or --grid)",
        ));
    }
    let table = match resolved {
        EvalTarget::Scalar(arg, f) => {
            let rows = points
                .par_iter()
                .map(|&x| f(x).map(|v| vec![x, v]))
                .collect::<hyperfree::Result<Vec<_>>>()?;
            Table {
                columns: vec![arg, "value"],
                rows,
            }
        }
        EvalTarget::Transform(member) => {
            let rows = points
                .par_iter()
                .map(|&t| voiculescu_eval(member, t).map(|v| vec![t, v.re, v.im]))
                .collect::<hyperfree::Result<Vec<_>>>()?;
            Table {
                columns: vec!["t", "re", "im"],
                rows,
            }
        }
        EvalTarget::Density(member) => Table {
            columns: vec!["x", "value"],
            rows: points
                .par_iter()
                .map(|&x| vec![x, khintchine_density(member, x)])
                .collect(),
        },
        EvalTarget::CharFn(member) => Table {
            columns: vec!["s", "value"],
            rows: points
                .par_iter()
                .map(|&s| {
                    let sample = CharFnValue::closed(member, s);
                    vec![sample.s, sample.value]
                })
                .collect(),
        },
    };
    let rendered = match output.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json("eval", json!({ "target": target })),
    };
    write_output(output.out.as_deref(), &rendered)?;
    Ok(0)
}

fn checks_to_csv(checks: &[IdentityCheck]) -> String {
    let mut out = String::from("id,max_abs_error,tolerance,passed,sign_resolution\n");
    for c in checks {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{},{}\n",
            csv_quote(&c.id),
            c.max_abs_error,
            c.tolerance,
            c.passed,
            csv_quote(c.sign_resolution.as_deref().unwrap_or("")),
        ));
    }
    out
}

fn run_verify(
    only: Option<&str>,
    config: &VerifyConfig,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let (checks, overall_passed, timestamp) = match only {
        Some(id) => {
            let check = run_check(id, config, None)?;
            let passed = check.passed;
            let ts = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            (vec![check], passed, ts)
        }
        None => {
            let report = run_all(config);
            (report.checks, report.overall_passed, report.timestamp)
        }
    };
    let rendered = match output.format {
        Format::Csv => checks_to_csv(&checks),
        Format::Json => {
            let doc = json!({
                "command": "verify",
                "config": config,
                "rows": checks,
                "overall_passed": overall_passed,
                "timestamp": timestamp,
            });
            serde_json::to_string_pretty(&doc).expect("report serializes")
        }
    };
    write_output(output.out.as_deref(), &rendered)?;
    Ok(if overall_passed { 0 } else { 1 })
}

fn run_recover(
    member_key: &str,
    s_spec: &str,
    order: usize,
    backend: BackendArg,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let member = member_from_key(member_key)?;
    let points = parse_points(s_spec)?;
    let cfg = InversionConfig {
        backend: match backend {
            BackendArg::GaverStehfest => InversionBackend::GaverStehfest,
            BackendArg::TalbotContourFree => InversionBackend::TalbotContourFree,
        },
        order,
        ..InversionConfig::default()
    };
    cfg.validate()?;
    let rows = points
        .par_iter()
        .map(|&s| {
            let rec = recover_charfn(&|t| voiculescu_eval(member, t), s, &cfg)?;
            let closed = charfn_closed(member, s);
            Ok(vec![s, rec.value, closed, (rec.value - closed).abs()])
        })
        .collect::<hyperfree::Result<Vec<_>>>()?;
    let table = Table {
        columns: vec!["s", "recovered", "closed", "abs_error"],
        rows,
    };
    let rendered = match output.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(
            "recover",
            json!({
                "member": member.key(),
                "order": order,
                "backend": cfg.backend,
            }),
        ),
    };
    write_output(output.out.as_deref(), &rendered)?;
    Ok(0)
}

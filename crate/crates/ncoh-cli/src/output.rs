//! Report envelopes and serialization helpers shared by the subcommands.

use ncoh::{
    CochainError, CohomologyReport, Representative, RestrictedH2Report, TheoremCheck,
    VerificationReport,
};
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;

use crate::UsageError;

/// Standard JSON envelope: command, prime, parameters, results, expectations,
/// mismatches. serde_json orders object keys, so output is deterministic.
pub fn envelope(
    command: &str,
    p: u32,
    parameters: Value,
    results: Value,
    expectations: Value,
    mismatches: Vec<String>,
) -> Value {
    json!({
        "command": command,
        "p": p,
        "parameters": parameters,
        "results": results,
        "expectations": expectations,
        "mismatches": mismatches,
    })
}

pub fn parameters_json(mu: Option<&[i64]>, lambda: Option<&[i64]>, seed: Option<u64>) -> Value {
    json!({
        "mu": mu,
        "lambda": lambda,
        "seed": seed,
    })
}

pub fn checks_json(checks: &[TheoremCheck]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "expected": c.expected,
                    "computed": c.computed,
                    "matches": c.matches,
                })
            })
            .collect(),
    )
}

pub fn mismatch_names(checks: &[TheoremCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.matches)
        .map(|c| c.name.clone())
        .collect()
}

pub fn verification_json(report: &VerificationReport) -> Value {
    json!({
        "all_passed": report.all_passed(),
        "seed": report.seed,
        "samples": report.samples,
        "checks": report.checks.iter().map(|c| json!({
            "axiom": c.axiom,
            "passed": c.passed,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    })
}

fn representative_json(rep: &Representative) -> Value {
    match rep {
        Representative::One(c) => Value::Array(
            c.support()
                .iter()
                .map(|(k, v)| json!([format!("e^{k}"), v.value()]))
                .collect(),
        ),
        Representative::Two(c) => Value::Array(
            c.support()
                .iter()
                .map(|((i, j), v)| json!([format!("e^{{{i},{j}}}"), v.value()]))
                .collect(),
        ),
    }
}

pub fn cohomology_json(report: &CohomologyReport) -> Value {
    json!({
        "degree": report.degree,
        "dimension": report.dimension,
        "kernel_dim": report.kernel_dim,
        "image_dim": report.image_dim,
        "graded": report.graded.iter().map(|&(k, d)| json!([k, d])).collect::<Vec<_>>(),
        "representatives": report.representatives.iter().map(representative_json).collect::<Vec<_>>(),
    })
}

pub fn restricted_h2_json(report: &RestrictedH2Report) -> Value {
    json!({
        "dimension": report.dimension,
        "kernel_dim": report.kernel_dim,
        "image_dim": report.image_dim,
        "regime": report.regime.label(),
        "labels": report.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "representatives": report.representatives.iter().map(|r| {
            let sigma: Vec<Value> = r.sigma.support().iter()
                .map(|((i, j), v)| json!([format!("e^{{{i},{j}}}"), v.value()]))
                .collect();
            let tau: Vec<Value> = (1..=report.p as usize)
                .filter(|&k| !r.tau(k).is_zero())
                .map(|k| json!([format!("ebar^{k}"), r.tau(k).value()]))
                .collect();
            json!({"sigma": sigma, "tau": tau})
        }).collect::<Vec<_>>(),
    })
}

/// Write `text` to the chosen sink with a trailing newline.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), UsageError> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
        }
        Some(path) => {
            std::fs::write(path, format!("{text}\n"))?;
        }
    }
    Ok(())
}

pub fn emit_json(out: Option<&Path>, value: &Value) -> Result<(), UsageError> {
    emit(
        out,
        &serde_json::to_string_pretty(value).expect("valid JSON"),
    )
}

impl From<CochainError> for UsageError {
    fn from(e: CochainError) -> Self {
        UsageError(e.to_string())
    }
}

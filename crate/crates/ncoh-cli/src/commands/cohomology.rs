use ncoh::cohomology::expectations;
use ncoh::{graded_kernel2, ordinary_h1, ordinary_h2};
use serde_json::json;

use crate::args::{CohomologyArgs, Format};
use crate::output::{
    checks_json, cohomology_json, emit, emit_json, envelope, mismatch_names, parameters_json,
};
use crate::params::resolve_prime;
use crate::{Outcome, UsageError};

pub fn run(args: &CohomologyArgs) -> Result<Outcome, UsageError> {
    let p = resolve_prime(args.p)?;
    if args.degree != 1 && args.degree != 2 {
        return Err(UsageError(format!(
            "--degree must be 1 or 2, got {}",
            args.degree
        )));
    }
    if args.k.is_some() && args.degree != 2 {
        return Err(UsageError("--k only applies to --degree 2".into()));
    }

    let (results, checks) = if let Some(k) = args.k {
        let basis = graded_kernel2(p, k)?;
        let reps: Vec<serde_json::Value> = basis
            .iter()
            .map(|c| {
                serde_json::Value::Array(
                    c.support()
                        .iter()
                        .map(|((i, j), v)| json!([format!("e^{{{i},{j}}}"), v.value()]))
                        .collect(),
                )
            })
            .collect();
        let expected = expectations::graded_kernel2_basis(p, k);
        let checks = vec![ncoh::TheoremCheck::compare(
            format!("dim ker d^2_{k}"),
            expected.len(),
            basis.len(),
        )];
        (
            json!({"k": k, "kernel_dim": basis.len(), "kernel_basis": reps}),
            checks,
        )
    } else {
        let report = if args.degree == 1 {
            ordinary_h1(p)
        } else {
            ordinary_h2(p)
        };
        let checks = expectations::check_ordinary(&report);
        (cohomology_json(&report), checks)
    };

    let mismatches = mismatch_names(&checks);
    let expectation_value = if args.expect_theorems {
        json!({"checks": checks_json(&checks)})
    } else {
        json!({})
    };
    let value = envelope(
        "cohomology",
        p.get(),
        parameters_json(None, None, None),
        results,
        expectation_value,
        if args.expect_theorems {
            mismatches.clone()
        } else {
            Vec::new()
        },
    );
    match args.out.format {
        Format::Json => emit_json(args.out.out.as_deref(), &value)?,
        Format::Text | Format::Csv => emit(
            args.out.out.as_deref(),
            &serde_json::to_string_pretty(&value).expect("valid JSON"),
        )?,
    }
    Ok(if args.expect_theorems && !mismatches.is_empty() {
        Outcome::Mismatch
    } else {
        Outcome::Ok
    })
}

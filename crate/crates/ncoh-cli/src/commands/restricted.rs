use ncoh::restricted::expectations;
use ncoh::{restricted_h1, restricted_h2};
use serde_json::json;

use crate::args::{Format, RestrictedArgs};
use crate::output::{
    checks_json, cohomology_json, emit, emit_json, envelope, mismatch_names, parameters_json,
    restricted_h2_json,
};
use crate::params::resolve_structure;
use crate::{Outcome, UsageError};

pub fn run(args: &RestrictedArgs) -> Result<Outcome, UsageError> {
    let resolved = resolve_structure(&args.structure)?;
    let s = &resolved.structure;
    let p = s.prime();

    let h1 = restricted_h1(s);
    let h2 = restricted_h2(s);
    let mut checks = expectations::check_restricted_h1(&h1);
    checks.extend(expectations::check_restricted_h2(&h2));
    let mismatches = mismatch_names(&checks);

    let mu: Vec<i64> = (1..=p.get() as usize)
        .map(|k| s.mu(k).value() as i64)
        .collect();
    let lambda: Vec<i64> = (1..=p.get() as usize)
        .map(|k| s.lambda(k).value() as i64)
        .collect();
    let value = envelope(
        "restricted",
        p.get(),
        parameters_json(Some(&mu), Some(&lambda), resolved.seed),
        json!({
            "h1": cohomology_json(&h1),
            "h2": restricted_h2_json(&h2),
        }),
        json!({"checks": checks_json(&checks)}),
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

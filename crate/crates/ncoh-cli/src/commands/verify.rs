use ncoh::{verify_restricted, DEFAULT_SEED};
use serde_json::json;

use crate::args::{Format, VerifyArgs};
use crate::output::{emit, emit_json, envelope, parameters_json, verification_json};
use crate::params::resolve_structure;
use crate::{Outcome, UsageError};

pub fn run(args: &VerifyArgs) -> Result<Outcome, UsageError> {
    let resolved = resolve_structure(&args.structure)?;
    let s = &resolved.structure;
    let p = s.prime();
    let seed = resolved.seed.unwrap_or(DEFAULT_SEED);
    let report = verify_restricted(s, args.samples, seed);

    let mu: Vec<i64> = (1..=p.get() as usize)
        .map(|k| s.mu(k).value() as i64)
        .collect();
    let lambda: Vec<i64> = (1..=p.get() as usize)
        .map(|k| s.lambda(k).value() as i64)
        .collect();
    let value = envelope(
        "verify",
        p.get(),
        parameters_json(Some(&mu), Some(&lambda), resolved.seed),
        json!({"verification": verification_json(&report)}),
        json!({}),
        report.failures().iter().map(|c| c.axiom.clone()).collect(),
    );
    match args.out.format {
        Format::Json => emit_json(args.out.out.as_deref(), &value)?,
        Format::Text | Format::Csv => emit(args.out.out.as_deref(), &report.to_string())?,
    }
    Ok(if report.all_passed() {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

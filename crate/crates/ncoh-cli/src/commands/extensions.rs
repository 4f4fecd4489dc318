use ncoh::{
    build_extension, cocycle_for_label, render_extension_table, verify_extension, CocycleLabel,
    ExtensionRow, Prime, RestrictedCochain2, DEFAULT_SEED,
};
use serde_json::{json, Value};

use crate::args::{ExtensionsArgs, Format};
use crate::output::{emit, emit_json, envelope, parameters_json, verification_json};
use crate::params::resolve_structure;
use crate::{Outcome, UsageError};

fn parse_cocycle(p: Prime, text: &str) -> Result<(CocycleLabel, RestrictedCochain2), UsageError> {
    let pv = p.get() as usize;
    let label = match text {
        "e14" => CocycleLabel::E14,
        "e25" => CocycleLabel::E25,
        "phi_p1" => CocycleLabel::PhiP1,
        other => {
            if let Some(k) = other.strip_prefix("bar:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| UsageError(format!("bad bar index in `{other}`")))?;
                if k == 0 || k > pv {
                    return Err(UsageError(format!("bar index {k} out of 1..={pv}")));
                }
                CocycleLabel::Bar(k)
            } else if let Some(k) = other.strip_prefix("phi:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| UsageError(format!("bad degree in `{other}`")))?;
                let sigma = ncoh::phi_k(p, k).map_err(|e| UsageError(e.to_string()))?;
                return Ok((
                    CocycleLabel::Other(format!("phi_{k}")),
                    RestrictedCochain2::from_sigma(sigma),
                ));
            } else {
                return Err(UsageError(format!(
                    "unknown cocycle `{other}` (use e14 | e25 | phi_p1 | phi:<k> | bar:<k>)"
                )));
            }
        }
    };
    let cocycle = cocycle_for_label(p, &label)
        .ok_or_else(|| UsageError(format!("cocycle `{text}` undefined at p = {p}")))?;
    Ok((label, cocycle))
}

fn row_json(row: &ExtensionRow) -> Value {
    json!({
        "label": row.label.to_string(),
        "bracket_delta": row.bracket_delta_string(),
        "bracket_terms": row.bracket_delta.iter()
            .map(|(c, i, j)| json!([c.value(), i, j]))
            .collect::<Vec<_>>(),
        "pmap_delta": row.pmap_delta_string(),
        "pmap_terms": row.pmap_delta.iter()
            .map(|(c, k)| json!([c.value(), k]))
            .collect::<Vec<_>>(),
    })
}

pub fn run(args: &ExtensionsArgs) -> Result<Outcome, UsageError> {
    let resolved = resolve_structure(&args.structure)?;
    let s = &resolved.structure;
    let p = s.prime();
    let seed = resolved.seed.unwrap_or(DEFAULT_SEED);

    let mut all_passed = true;
    let results = if let Some(spec) = &args.cocycle {
        let (label, cocycle) = parse_cocycle(p, spec)?;
        let row = single_row(&label, &cocycle);
        let mut value = row_json(&row);
        if args.verify {
            let ext = build_extension(s, &cocycle, args.bruteforce_cap)
                .map_err(|e| UsageError(e.to_string()))?;
            let report = verify_extension(&ext, args.samples, seed);
            all_passed &= report.all_passed();
            value["verification"] = verification_json(&report);
        }
        json!({"cocycle": value})
    } else {
        let table = render_extension_table(s);
        let mut rows = Vec::new();
        for row in &table.rows {
            let mut value = row_json(row);
            if args.verify {
                let cocycle =
                    cocycle_for_label(p, &row.label).unwrap_or_else(|| reconstruct(p, row));
                let ext = build_extension(s, &cocycle, args.bruteforce_cap)
                    .map_err(|e| UsageError(e.to_string()))?;
                let report = verify_extension(&ext, args.samples, seed);
                all_passed &= report.all_passed();
                value["verification"] = verification_json(&report);
            }
            rows.push(value);
        }
        json!({"regime": table.regime_label, "rows": rows})
    };

    let mu: Vec<i64> = (1..=p.get() as usize)
        .map(|k| s.mu(k).value() as i64)
        .collect();
    let lambda: Vec<i64> = (1..=p.get() as usize)
        .map(|k| s.lambda(k).value() as i64)
        .collect();
    let value = envelope(
        "extensions",
        p.get(),
        parameters_json(Some(&mu), Some(&lambda), resolved.seed),
        results,
        json!({}),
        if all_passed {
            Vec::new()
        } else {
            vec!["extension verification".into()]
        },
    );
    match args.out.format {
        Format::Json => emit_json(args.out.out.as_deref(), &value)?,
        Format::Text | Format::Csv => {
            let text = serde_json::to_string_pretty(&value).expect("valid JSON");
            emit(args.out.out.as_deref(), &text)?;
        }
    }
    Ok(if all_passed {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

fn single_row(label: &CocycleLabel, cocycle: &RestrictedCochain2) -> ExtensionRow {
    let p = cocycle.prime();
    ExtensionRow {
        label: label.clone(),
        bracket_delta: cocycle
            .sigma
            .support()
            .into_iter()
            .map(|((i, j), c)| (c, i, j))
            .collect(),
        pmap_delta: (1..=p.get() as usize)
            .filter(|&k| !cocycle.tau(k).is_zero())
            .map(|k| (cocycle.tau(k), k))
            .collect(),
    }
}

fn reconstruct(p: Prime, row: &ExtensionRow) -> RestrictedCochain2 {
    let sigma_terms: Vec<(usize, usize, i64)> = row
        .bracket_delta
        .iter()
        .map(|&(c, i, j)| (i, j, c.value() as i64))
        .collect();
    let mut tau = vec![0i64; p.get() as usize];
    for &(c, k) in &row.pmap_delta {
        tau[k - 1] = c.value() as i64;
    }
    RestrictedCochain2::new(
        ncoh::Cochain2::from_pairs(p, &sigma_terms).expect("row pairs are stored pairs"),
        &tau,
    )
    .expect("tau has length p")
}

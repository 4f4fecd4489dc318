use ncoh::cohomology::expectations as ordinary_expect;
use ncoh::restricted::expectations as restricted_expect;
use ncoh::{
    ordinary_h1, ordinary_h2, restricted_h1, restricted_h2, Prime, RestrictedStructure,
    StructureRegime, DEFAULT_SEED,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::args::{Format, SweepArgs};
use crate::output::{emit, emit_json};
use crate::params::VectorSpec;
use crate::{Outcome, UsageError};

struct SweepRow {
    p: u32,
    p_mod_3: u32,
    regime: String,
    dim_h1: usize,
    dim_ker_d2: usize,
    dim_h2: usize,
    dim_h1_star: usize,
    dim_h2_star: usize,
    expected_h2_star: usize,
    matches: bool,
}

fn sweep_prime(
    v: u32,
    lambda_spec: &VectorSpec,
    mu_spec: &VectorSpec,
    seed: u64,
) -> Result<SweepRow, UsageError> {
    let p = Prime::new_at_least_5(v).expect("validated upstream");
    // Derive a per-prime stream so primes are independent of list order.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (v as u64) << 32);
    let structure = {
        use rand::Rng;
        let dim = v as usize;
        let lambda: Vec<i64> = match lambda_spec {
            VectorSpec::Zero => vec![0; dim],
            VectorSpec::Random => (0..dim).map(|_| rng.gen_range(0..v) as i64).collect(),
            VectorSpec::Explicit(_) => {
                return Err(UsageError(
                    "sweep takes `zero` or `random` for --lambda".into(),
                ))
            }
        };
        let mu: Vec<i64> = match mu_spec {
            VectorSpec::Zero => vec![0; dim],
            VectorSpec::Random if v % 3 == 2 => {
                (0..dim).map(|_| rng.gen_range(0..v) as i64).collect()
            }
            VectorSpec::Random => vec![0; dim],
            VectorSpec::Explicit(_) => {
                return Err(UsageError("sweep takes `zero` or `random` for --mu".into()))
            }
        };
        RestrictedStructure::new(p, &mu, &lambda).expect("mu admissible by construction")
    };

    let h1 = ordinary_h1(p);
    let h2 = ordinary_h2(p);
    let h1s = restricted_h1(&structure);
    let h2s = restricted_h2(&structure);
    let regime = StructureRegime::of(&structure);
    let expected_h2_star = restricted_expect::h2_dim(&regime, v);
    let matches = h1.dimension == ordinary_expect::h1_dim()
        && h2.kernel_dim == ordinary_expect::ker_d2_dim(p)
        && h2.dimension == ordinary_expect::h2_dim()
        && h1s.dimension == restricted_expect::h1_dim()
        && h2s.dimension == expected_h2_star;
    Ok(SweepRow {
        p: v,
        p_mod_3: v % 3,
        regime: regime.label(),
        dim_h1: h1.dimension,
        dim_ker_d2: h2.kernel_dim,
        dim_h2: h2.dimension,
        dim_h1_star: h1s.dimension,
        dim_h2_star: h2s.dimension,
        expected_h2_star,
        matches,
    })
}

pub fn run(args: &SweepArgs) -> Result<Outcome, UsageError> {
    let primes = crate::params::parse_primes(&args.primes)?;
    let lambda_spec = VectorSpec::parse(&args.lambda)?;
    let mu_spec = VectorSpec::parse(&args.mu)?;
    let seed = args.seed.unwrap_or(DEFAULT_SEED);

    // Primes are independent computations; run them in parallel and reorder.
    let mut rows: Vec<SweepRow> = primes
        .par_iter()
        .map(|&v| sweep_prime(v, &lambda_spec, &mu_spec, seed))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(|r| r.p);

    let all_match = rows.iter().all(|r| r.matches);
    match args.out.format {
        Format::Json => {
            let value = json!({
                "command": "sweep",
                "seed": seed,
                "rows": rows.iter().map(|r| json!({
                    "p": r.p,
                    "p_mod_3": r.p_mod_3,
                    "regime": r.regime,
                    "dim_h1": r.dim_h1,
                    "dim_ker_d2": r.dim_ker_d2,
                    "dim_h2": r.dim_h2,
                    "dim_h1_star": r.dim_h1_star,
                    "dim_h2_star": r.dim_h2_star,
                    "expected_h2_star": r.expected_h2_star,
                    "match": r.matches,
                })).collect::<Vec<_>>(),
                "all_match": all_match,
            });
            emit_json(args.out.out.as_deref(), &value)?;
        }
        Format::Csv | Format::Text => {
            let mut lines = vec![
                "p,p_mod_3,regime,dim_h1,dim_ker_d2,dim_h2,dim_h1_star,dim_h2_star,expected_h2_star,match"
                    .to_string(),
            ];
            for r in &rows {
                lines.push(format!(
                    "{},{},\"{}\",{},{},{},{},{},{},{}",
                    r.p,
                    r.p_mod_3,
                    r.regime,
                    r.dim_h1,
                    r.dim_ker_d2,
                    r.dim_h2,
                    r.dim_h1_star,
                    r.dim_h2_star,
                    r.expected_h2_star,
                    r.matches
                ));
            }
            emit(args.out.out.as_deref(), &lines.join("\n"))?;
        }
    }
    Ok(if all_match {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

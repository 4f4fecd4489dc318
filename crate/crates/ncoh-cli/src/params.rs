//! Parameter resolution: prime validation, lambda/mu specs, prime lists.

use ncoh::{Prime, RestrictedStructure, DEFAULT_SEED};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::StructureOpts;
use crate::UsageError;

/// How a coefficient vector was requested on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VectorSpec {
    Zero,
    Random,
    Explicit(Vec<i64>),
}

impl VectorSpec {
    pub fn parse(text: &str) -> Result<VectorSpec, UsageError> {
        match text {
            "zero" => Ok(VectorSpec::Zero),
            "random" => Ok(VectorSpec::Random),
            list => {
                let entries: Result<Vec<i64>, _> =
                    list.split(',').map(|t| t.trim().parse::<i64>()).collect();
                entries
                    .map(VectorSpec::Explicit)
                    .map_err(|_| UsageError(format!("cannot parse coefficient list `{list}`")))
            }
        }
    }

    fn realize(&self, p: Prime, rng: &mut ChaCha8Rng) -> Result<Vec<i64>, UsageError> {
        let dim = p.get() as usize;
        match self {
            VectorSpec::Zero => Ok(vec![0; dim]),
            VectorSpec::Random => Ok((0..dim).map(|_| rng.gen_range(0..p.get()) as i64).collect()),
            VectorSpec::Explicit(v) => {
                if v.len() != dim {
                    return Err(UsageError(format!(
                        "coefficient list has {} entries, expected p = {}",
                        v.len(),
                        dim
                    )));
                }
                Ok(v.clone())
            }
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, VectorSpec::Random)
    }
}

/// A fully resolved structure plus the seed that produced any random parts.
pub struct ResolvedStructure {
    pub structure: RestrictedStructure,
    pub seed: Option<u64>,
}

pub fn resolve_prime(p: u32) -> Result<Prime, UsageError> {
    Prime::new_at_least_5(p).map_err(UsageError::from)
}

pub fn resolve_structure(opts: &StructureOpts) -> Result<ResolvedStructure, UsageError> {
    let p = resolve_prime(opts.p)?;
    let lambda_spec = VectorSpec::parse(&opts.lambda)?;
    let mu_spec = VectorSpec::parse(&opts.mu)?;
    let uses_rng = lambda_spec.is_random() || mu_spec.is_random();
    let seed = if uses_rng {
        Some(opts.seed.unwrap_or(DEFAULT_SEED))
    } else {
        opts.seed
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(DEFAULT_SEED));
    let lambda = lambda_spec.realize(p, &mut rng)?;
    // `random` mu quietly stays zero when mu is not admissible, so sweeps can
    // pass one flag across both prime classes; explicit lists still error.
    let mu = if mu_spec.is_random() && p.get() % 3 != 2 {
        vec![0; p.get() as usize]
    } else {
        mu_spec.realize(p, &mut rng)?
    };
    let structure = RestrictedStructure::new(p, &mu, &lambda).map_err(UsageError::from)?;
    Ok(ResolvedStructure { structure, seed })
}

/// Parse `5..31` (inclusive, primes within) or a comma list of primes.
pub fn parse_primes(text: &str) -> Result<Vec<u32>, UsageError> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("bad range start in `{text}`")))?;
        let hi: u32 = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| UsageError(format!("bad range end in `{text}`")))?;
        let primes: Vec<u32> = (lo..=hi)
            .filter(|&n| Prime::new_at_least_5(n).is_ok())
            .collect();
        if primes.is_empty() {
            return Err(UsageError(format!("no primes >= 5 in range `{text}`")));
        }
        return Ok(primes);
    }
    let mut primes = Vec::new();
    for tok in text.split(',') {
        let n: u32 = tok
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("cannot parse prime `{tok}`")))?;
        resolve_prime(n)?;
        primes.push(n);
    }
    Ok(primes)
}

//! Ordinary H^1 and H^2 of g(p) with trivial coefficients, total and graded,
//! with canonical (image-reduced) representatives, plus the closed-form
//! expectations the computed values are checked against.
//!
//! The graded route is the default: the differentials preserve degree, so
//! kernels and images are computed block by block and summed. Full matrices
//! are only assembled on demand (see `crate::cochain::d_matrix`).

use crate::cochain::{d1, d_matrix, pair_basis_graded, phi_k, Cochain1, Cochain2, CochainError};
use crate::fp::Prime;
use crate::matrix::{quotient_basis, FpVec};
use crate::report::TheoremCheck;

/// A cohomology class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representative {
    One(Cochain1),
    Two(Cochain2),
}

/// Dimensions and representatives of one cohomology space. The graded list
/// carries only degrees with a non-zero component.
#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub p: u32,
    pub degree: u8,
    pub dimension: usize,
    pub graded: Vec<(usize, usize)>,
    pub representatives: Vec<Representative>,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

/// H^1 = ker d1 (the image of d0 is zero). The kernel comes out of the d1
/// matrix by rank-nullity; for this family it is spanned by e^1 and e^2.
pub fn ordinary_h1(p: Prime) -> CohomologyReport {
    let m = d_matrix(1, p, None);
    let kernel = m.kernel_basis();
    let quotient = quotient_basis(&kernel, &[]).expect("zero image is contained in any kernel");
    let reps: Vec<Representative> = quotient
        .representatives
        .iter()
        .map(|v| {
            let coeffs: Vec<i64> = (0..v.len()).map(|i| v.get(i).value() as i64).collect();
            Representative::One(Cochain1::from_signed(p, &coeffs))
        })
        .collect();
    let mut graded: Vec<(usize, usize)> = Vec::new();
    for r in &quotient.representatives {
        for (idx, _) in r.support() {
            let k = idx + 1;
            match graded.iter_mut().find(|(deg, _)| *deg == k) {
                Some((_, d)) => *d += 1,
                None => graded.push((k, 1)),
            }
        }
    }
    graded.sort_unstable();
    CohomologyReport {
        p: p.get(),
        degree: 1,
        dimension: quotient.dimension,
        graded,
        representatives: reps,
        kernel_dim: kernel.len(),
        image_dim: 0,
    }
}

fn cochain2_from_graded(p: Prime, k: usize, v: &FpVec) -> Cochain2 {
    let pairs = pair_basis_graded(p, k);
    let terms: Vec<(usize, usize, i64)> = pairs
        .iter()
        .enumerate()
        .filter(|(col, _)| !v.get(*col).is_zero())
        .map(|(col, &(i, j))| (i, j, v.get(col).value() as i64))
        .collect();
    Cochain2::from_pairs(p, &terms).expect("graded pairs are stored pairs")
}

fn cochain2_to_graded(p: Prime, k: usize, phi: &Cochain2) -> FpVec {
    let pairs = pair_basis_graded(p, k);
    let entries: Vec<i64> = pairs
        .iter()
        .map(|&(i, j)| phi.coeff(i, j).value() as i64)
        .collect();
    FpVec::from_signed(p, &entries)
}

/// Basis of ker d2_k in degree k, for 3 <= k <= 2p-1.
pub fn graded_kernel2(p: Prime, k: usize) -> Result<Vec<Cochain2>, CochainError> {
    let pv = p.get() as usize;
    if !(3..=2 * pv - 1).contains(&k) {
        return Err(CochainError::DegreeOutOfRange {
            what: "ker d2",
            k,
            lo: 3,
            hi: 2 * pv - 1,
        });
    }
    let m = d_matrix(2, p, Some(k));
    Ok(m.kernel_basis()
        .iter()
        .map(|v| cochain2_from_graded(p, k, v))
        .collect())
}

/// H^2 computed degree by degree: in each degree k the kernel of d2_k modulo
/// the span of d1(e^k). Representatives are canonical (reduced against the
/// image) and recorded per degree.
pub fn ordinary_h2(p: Prime) -> CohomologyReport {
    let pv = p.get() as usize;
    let mut dimension = 0usize;
    let mut kernel_dim = 0usize;
    let mut image_dim = 0usize;
    let mut graded = Vec::new();
    let mut representatives = Vec::new();
    for k in 3..=(2 * pv - 1) {
        let m = d_matrix(2, p, Some(k));
        let kernel = m.kernel_basis();
        kernel_dim += kernel.len();
        let mut image = Vec::new();
        if k <= pv {
            let image_cochain = d1(&Cochain1::basis(p, k));
            let vec = cochain2_to_graded(p, k, &image_cochain);
            if !vec.is_zero() {
                image.push(vec);
            }
        }
        let q = quotient_basis(&kernel, &image)
            .expect("d1 image lies in the d2 kernel (complex property)");
        image_dim += image.len();
        if q.dimension > 0 {
            graded.push((k, q.dimension));
            dimension += q.dimension;
            for v in &q.representatives {
                representatives.push(Representative::Two(cochain2_from_graded(p, k, v)));
            }
        }
    }
    CohomologyReport {
        p: p.get(),
        degree: 2,
        dimension,
        graded,
        representatives,
        kernel_dim,
        image_dim,
    }
}

/// Closed-form expectations for the ordinary cohomology of this family, used
/// by reports and the theorem-checking mode. The computation never assumes
/// them.
pub mod expectations {
    use super::*;

    pub fn h1_dim() -> usize {
        2
    }

    pub fn ker_d2_dim(p: Prime) -> usize {
        p.get() as usize + 1
    }

    pub fn h2_dim() -> usize {
        3
    }

    /// Degrees where H^2_k is non-zero: 5, 7 and p+1 (each of dimension 1).
    pub fn h2_degrees(p: Prime) -> Vec<usize> {
        let mut ks = vec![5usize, 7, p.get() as usize + 1];
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    /// Expected basis of ker d2_k by degree:
    /// {e^{1,4}, phi_5} at k = 5; {e^{2,5}} at k = 7 for p = 5 and
    /// {e^{2,5}, phi_7} for p > 5; {phi_k} for the other k <= p+1; empty for
    /// k >= p+2.
    pub fn graded_kernel2_basis(p: Prime, k: usize) -> Vec<Cochain2> {
        let pv = p.get() as usize;
        if k == 5 {
            return vec![Cochain2::basis(p, 1, 4).unwrap(), phi_k(p, 5).unwrap()];
        }
        if k == 7 {
            let e25 = Cochain2::basis(p, 2, 5).unwrap();
            return if pv == 5 {
                vec![e25]
            } else {
                vec![e25, phi_k(p, 7).unwrap()]
            };
        }
        if (3..pv + 2).contains(&k) {
            return vec![phi_k(p, k).unwrap()];
        }
        Vec::new()
    }

    /// Expected representatives of the three H^2 classes.
    pub fn h2_class_representatives(p: Prime) -> Vec<Cochain2> {
        vec![
            Cochain2::basis(p, 1, 4).unwrap(),
            Cochain2::basis(p, 2, 5).unwrap(),
            phi_k(p, p.get() as usize + 1).unwrap(),
        ]
    }

    /// Structured expected-vs-computed checks for an ordinary report.
    pub fn check_ordinary(report: &CohomologyReport) -> Vec<TheoremCheck> {
        let p = Prime::new(report.p).expect("report carries a prime");
        match report.degree {
            1 => vec![TheoremCheck::compare("dim H^1", h1_dim(), report.dimension)],
            2 => {
                let mut checks = vec![
                    TheoremCheck::compare("dim ker d^2", ker_d2_dim(p), report.kernel_dim),
                    TheoremCheck::compare("dim H^2", h2_dim(), report.dimension),
                ];
                let degrees: Vec<usize> = report.graded.iter().map(|&(k, _)| k).collect();
                checks.push(TheoremCheck::compare(
                    "degrees with H^2_k != 0",
                    format!("{:?}", h2_degrees(p)),
                    format!("{degrees:?}"),
                ));
                checks
            }
            _ => Vec::new(),
        }
    }
}

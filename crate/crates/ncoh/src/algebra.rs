//! The truncated graded nilpotent algebra g(p) with basis e_1..e_p, its
//! bracket, the family of restricted structures (mu, lambda), and verification
//! of the restricted axioms via Jacobson's formula.
//!
//! Basis indices are 1-based everywhere in the public API, matching the usual
//! mathematical indexing; storage is 0-based internally.

use rand::Rng;
use thiserror::Error;

use crate::fp::{raw, FieldError, Fp, Prime};
use crate::report::{AxiomCheck, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("basis index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("n-fold bracket needs at least 2 arguments, got {0}")]
    TooFewArguments(usize),
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("nonzero mu requires p = 2 (mod 3); e_{{p-1}} is not central for p = {0}")]
    MuNotCentral(u32),
}

/// Default seed for randomized verification; echoed in reports so runs are
/// reproducible.
pub const DEFAULT_SEED: u64 = 0x6e636f68;

/// The structure constant a_{i,j} = [j - i]_3 embedded in GF(p) as one of
/// {-1, 0, 1}. Governs [e_i, e_j] = a_{i,j} e_{i+j}.
pub fn structure_constant(p: Prime, i: usize, j: usize) -> Fp {
    assert!(i >= 1 && j >= 1, "basis indices are 1-based");
    let r = (j as i64 - i as i64).rem_euclid(3);
    match r {
        0 => Fp::zero(p),
        1 => Fp::one(p),
        2 => -Fp::one(p),
        _ => unreachable!(),
    }
}

pub(crate) fn structure_constant_raw(p: u32, i: usize, j: usize) -> u32 {
    let r = (j as i64 - i as i64).rem_euclid(3);
    match r {
        0 => 0,
        1 => 1,
        2 => p - 1,
        _ => unreachable!(),
    }
}

/// An element sum_i alpha_i e_i of g(p); `coeffs[i]` is the coefficient of
/// e_{i+1}.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    p: Prime,
    coeffs: Vec<u32>,
}

impl AlgebraElement {
    pub fn zero(p: Prime) -> AlgebraElement {
        AlgebraElement {
            p,
            coeffs: vec![0; p.get() as usize],
        }
    }

    /// The basis element e_k (1-based).
    pub fn basis(p: Prime, k: usize) -> Result<AlgebraElement, AlgebraError> {
        let dim = p.get() as usize;
        if k == 0 || k > dim {
            return Err(AlgebraError::IndexOutOfRange { index: k, max: dim });
        }
        let mut e = AlgebraElement::zero(p);
        e.coeffs[k - 1] = 1;
        Ok(e)
    }

    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Result<AlgebraElement, AlgebraError> {
        let dim = p.get() as usize;
        if coeffs.len() != dim {
            return Err(AlgebraError::BadLength {
                expected: dim,
                got: coeffs.len(),
            });
        }
        Ok(AlgebraElement {
            p,
            coeffs: coeffs.iter().map(|&c| p.residue(c)).collect(),
        })
    }

    pub(crate) fn from_raw(p: Prime, coeffs: Vec<u32>) -> AlgebraElement {
        debug_assert_eq!(coeffs.len(), p.get() as usize);
        debug_assert!(coeffs.iter().all(|&c| c < p.get()));
        AlgebraElement { p, coeffs }
    }

    pub fn random<R: Rng>(p: Prime, rng: &mut R) -> AlgebraElement {
        let coeffs = (0..p.get()).map(|_| rng.gen_range(0..p.get())).collect();
        AlgebraElement { p, coeffs }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Coefficient of e_k (1-based).
    pub fn coeff(&self, k: usize) -> Fp {
        assert!(k >= 1 && k <= self.coeffs.len(), "1-based index {k}");
        Fp::from_raw(self.coeffs[k - 1], self.p.get())
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if self.p != other.p {
            return Err(AlgebraError::ModulusMismatch(self.p.get(), other.p.get()));
        }
        let p = self.p.get();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| raw::add(a, b, p))
            .collect();
        Ok(AlgebraElement { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if self.p != other.p {
            return Err(AlgebraError::ModulusMismatch(self.p.get(), other.p.get()));
        }
        let p = self.p.get();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| raw::sub(a, b, p))
            .collect();
        Ok(AlgebraElement { p: self.p, coeffs })
    }

    pub fn scale(&self, factor: Fp) -> AlgebraElement {
        assert_eq!(factor.modulus(), self.p.get());
        let p = self.p.get();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| raw::mul(a, factor.value(), p))
            .collect();
        AlgebraElement { p: self.p, coeffs }
    }

    /// (basis index, coefficient) pairs of the support, 1-based.
    pub fn support(&self) -> Vec<(usize, Fp)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, Fp::from_raw(c, self.p.get())))
            .collect()
    }
}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.value() == 1 {
                write!(f, "e{k}")?;
            } else {
                write!(f, "{}*e{k}", c.value())?;
            }
        }
        Ok(())
    }
}

/// [g, h] expanded over the graded basis; degrees above p are truncated away.
pub fn bracket(g: &AlgebraElement, h: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    if g.p != h.p {
        return Err(AlgebraError::ModulusMismatch(g.p.get(), h.p.get()));
    }
    let p = g.p.get();
    let dim = p as usize;
    let mut out = vec![0u32; dim];
    for i in 1..=dim {
        let (gi, hi) = (g.coeffs[i - 1], h.coeffs[i - 1]);
        if gi == 0 && hi == 0 {
            continue;
        }
        for j in (i + 1)..=(dim - i).min(dim) {
            let a = structure_constant_raw(p, i, j);
            if a == 0 {
                continue;
            }
            let (gj, hj) = (g.coeffs[j - 1], h.coeffs[j - 1]);
            // a_{i,j} (alpha_i beta_j - beta_i alpha_j) e_{i+j}
            let cross = raw::sub(raw::mul(gi, hj, p), raw::mul(hi, gj, p), p);
            if cross == 0 {
                continue;
            }
            let term = raw::mul(a, cross, p);
            let idx = i + j - 1;
            out[idx] = raw::add(out[idx], term, p);
        }
    }
    Ok(AlgebraElement {
        p: g.p,
        coeffs: out,
    })
}

/// The left-normed iterated bracket [[..[g1,g2],g3]..,gn].
pub fn nfold_bracket(args: &[AlgebraElement]) -> Result<AlgebraElement, AlgebraError> {
    if args.len() < 2 {
        return Err(AlgebraError::TooFewArguments(args.len()));
    }
    let mut acc = bracket(&args[0], &args[1])?;
    for g in &args[2..] {
        acc = bracket(&acc, g)?;
    }
    Ok(acc)
}

/// The center of g(p), computed by brute force: those basis elements whose
/// bracket with every basis element vanishes. Comes out to {e_p} for
/// p != 2 (mod 3) and {e_{p-1}, e_p} for p = 2 (mod 3).
pub fn center(p: Prime) -> Vec<AlgebraElement> {
    let dim = p.get() as usize;
    let mut members = Vec::new();
    'outer: for k in 1..=dim {
        let ek = AlgebraElement::basis(p, k).unwrap();
        for j in 1..=dim {
            let ej = AlgebraElement::basis(p, j).unwrap();
            if !bracket(&ek, &ej).unwrap().is_zero() {
                continue 'outer;
            }
        }
        members.push(ek);
    }
    members
}

/// A choice of restricted structure: e_k^[p] = mu_k e_{p-1} + lambda_k e_p.
///
/// The mu component is only admissible when e_{p-1} is central, i.e. when
/// p = 2 (mod 3); construction rejects nonzero mu otherwise.
#[derive(Clone, PartialEq, Eq)]
pub struct RestrictedStructure {
    p: Prime,
    mu: Vec<u32>,
    lambda: Vec<u32>,
}

impl RestrictedStructure {
    pub fn new(p: Prime, mu: &[i64], lambda: &[i64]) -> Result<RestrictedStructure, AlgebraError> {
        let dim = p.get() as usize;
        if mu.len() != dim {
            return Err(AlgebraError::BadLength {
                expected: dim,
                got: mu.len(),
            });
        }
        if lambda.len() != dim {
            return Err(AlgebraError::BadLength {
                expected: dim,
                got: lambda.len(),
            });
        }
        let mu: Vec<u32> = mu.iter().map(|&c| p.residue(c)).collect();
        let lambda: Vec<u32> = lambda.iter().map(|&c| p.residue(c)).collect();
        if p.get() % 3 != 2 && mu.iter().any(|&c| c != 0) {
            return Err(AlgebraError::MuNotCentral(p.get()));
        }
        Ok(RestrictedStructure { p, mu, lambda })
    }

    /// The structure with identically zero p-map.
    pub fn zero(p: Prime) -> RestrictedStructure {
        let dim = p.get() as usize;
        RestrictedStructure {
            p,
            mu: vec![0; dim],
            lambda: vec![0; dim],
        }
    }

    /// Random lambda (and random mu when `with_mu` and p = 2 mod 3).
    pub fn random<R: Rng>(p: Prime, with_mu: bool, rng: &mut R) -> RestrictedStructure {
        let dim = p.get() as usize;
        let lambda = (0..dim).map(|_| rng.gen_range(0..p.get())).collect();
        let mu = if with_mu && p.get() % 3 == 2 {
            (0..dim).map(|_| rng.gen_range(0..p.get())).collect()
        } else {
            vec![0; dim]
        };
        RestrictedStructure { p, mu, lambda }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// mu_k (1-based).
    pub fn mu(&self, k: usize) -> Fp {
        Fp::from_raw(self.mu[k - 1], self.p.get())
    }

    /// lambda_k (1-based).
    pub fn lambda(&self, k: usize) -> Fp {
        Fp::from_raw(self.lambda[k - 1], self.p.get())
    }

    pub(crate) fn mu_raw(&self) -> &[u32] {
        &self.mu
    }

    pub(crate) fn lambda_raw(&self) -> &[u32] {
        &self.lambda
    }

    pub fn mu_is_zero(&self) -> bool {
        self.mu.iter().all(|&c| c == 0)
    }

    pub fn lambda_is_zero(&self) -> bool {
        self.lambda.iter().all(|&c| c == 0)
    }

    /// Whether mu + lambda = 0 as a vector.
    pub fn mu_plus_lambda_is_zero(&self) -> bool {
        let p = self.p.get();
        self.mu
            .iter()
            .zip(&self.lambda)
            .all(|(&m, &l)| raw::add(m, l, p) == 0)
    }

    /// g^[p] = (sum_i alpha_i^p mu_i) e_{p-1} + (sum_i alpha_i^p lambda_i) e_p.
    pub fn p_operator(&self, g: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if g.p != self.p {
            return Err(AlgebraError::ModulusMismatch(self.p.get(), g.p.get()));
        }
        let p = self.p.get();
        let dim = p as usize;
        let mut mu_sum = 0u32;
        let mut lambda_sum = 0u32;
        for (i, &alpha) in g.coeffs.iter().enumerate() {
            if alpha == 0 {
                continue;
            }
            let ap = raw::pow(alpha, p as u64, p);
            mu_sum = raw::add(mu_sum, raw::mul(ap, self.mu[i], p), p);
            lambda_sum = raw::add(lambda_sum, raw::mul(ap, self.lambda[i], p), p);
        }
        let mut out = vec![0u32; dim];
        out[dim - 2] = mu_sum;
        out[dim - 1] = lambda_sum;
        Ok(AlgebraElement {
            p: self.p,
            coeffs: out,
        })
    }
}

impl std::fmt::Debug for RestrictedStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "mu={:?} lambda={:?} (mod {})",
            self.mu, self.lambda, self.p
        )
    }
}

/// Structure constants of an algebra with a distinguished ordered basis.
/// Implemented by g(p) itself and by its one-dimensional central extensions,
/// so Jacobson-term extraction and axiom checks run in either.
pub trait LieAlgebra {
    fn prime(&self) -> Prime;
    fn dim(&self) -> usize;
    /// [b_i, b_j] as a sparse list of (0-based index, coefficient).
    fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, u32)>;
    /// b_i^[p] as a dense coefficient vector.
    fn p_map_basis(&self, i: usize) -> Vec<u32>;

    /// Bracket of dense coefficient vectors, expanded bilinearly.
    fn bracket_vec(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.prime().get();
        let mut out = vec![0u32; self.dim()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = raw::mul(xi, yj, p);
                for (k, b) in self.bracket_basis(i, j) {
                    out[k] = raw::add(out[k], raw::mul(c, b, p), p);
                }
            }
        }
        out
    }

    /// p-map of a dense vector, using additivity and Frobenius scaling
    /// (valid here because the p-map is central-valued and p-fold brackets
    /// vanish). Central extension implementations override the correction
    /// term handling as needed.
    fn p_map_vec(&self, x: &[u32]) -> Vec<u32> {
        let p = self.prime().get();
        let mut out = vec![0u32; self.dim()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let c = raw::pow(xi, p as u64, p);
            for (k, &b) in self.p_map_basis(i).iter().enumerate() {
                if b != 0 {
                    out[k] = raw::add(out[k], raw::mul(c, b, p), p);
                }
            }
        }
        out
    }
}

/// g(p) with a fixed restricted structure, as a `LieAlgebra`.
#[derive(Clone)]
pub struct GAlgebra {
    structure: RestrictedStructure,
}

impl GAlgebra {
    pub fn new(structure: RestrictedStructure) -> GAlgebra {
        GAlgebra { structure }
    }

    pub fn structure(&self) -> &RestrictedStructure {
        &self.structure
    }
}

impl LieAlgebra for GAlgebra {
    fn prime(&self) -> Prime {
        self.structure.p
    }

    fn dim(&self) -> usize {
        self.structure.p.get() as usize
    }

    fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        let p = self.structure.p.get();
        let (bi, bj) = (i + 1, j + 1); // 1-based degrees
        if bi + bj > p as usize {
            return Vec::new();
        }
        let a = structure_constant_raw(p, bi, bj);
        if a == 0 {
            Vec::new()
        } else {
            vec![(bi + bj - 1, a)]
        }
    }

    fn p_map_basis(&self, i: usize) -> Vec<u32> {
        let dim = self.dim();
        let mut out = vec![0u32; dim];
        out[dim - 2] = self.structure.mu[i];
        out[dim - 1] = self.structure.lambda[i];
        out
    }
}

/// Polynomials in t over GF(p), used for Jacobson term extraction. Degree is
/// capped at p-1, which is exactly what ad(tg+h)^{p-1} can reach.
mod tpoly {
    use super::raw;

    pub type Poly = Vec<u32>; // coefficient of t^d at index d

    pub fn zero(cap: usize) -> Poly {
        vec![0; cap]
    }

    pub fn add_assign(a: &mut Poly, b: &Poly, p: u32) {
        for (x, &y) in a.iter_mut().zip(b) {
            *x = raw::add(*x, y, p);
        }
    }

    /// a * (c0 + c1 t), truncated at the cap.
    pub fn mul_linear(a: &Poly, c0: u32, c1: u32, p: u32) -> Poly {
        let cap = a.len();
        let mut out = zero(cap);
        for (d, &ad) in a.iter().enumerate() {
            if ad == 0 {
                continue;
            }
            if c0 != 0 {
                out[d] = raw::add(out[d], raw::mul(ad, c0, p), p);
            }
            if c1 != 0 && d + 1 < cap {
                out[d + 1] = raw::add(out[d + 1], raw::mul(ad, c1, p), p);
            }
        }
        out
    }
}

/// The Jacobson terms s_1..s_{p-1} for a pair (g, h): i * s_i(g, h) is the
/// coefficient of t^{i-1} in ad(t g + h)^{p-1}(g), computed with exact
/// polynomial coefficients in t. Returned as dense coefficient vectors in
/// the ambient algebra's basis.
pub fn jacobson_terms<A: LieAlgebra>(alg: &A, g: &[u32], h: &[u32]) -> Vec<Vec<u32>> {
    let p = alg.prime().get();
    let dim = alg.dim();
    assert_eq!(g.len(), dim, "g has wrong length");
    assert_eq!(h.len(), dim, "h has wrong length");
    let cap = p as usize; // t-degrees 0..=p-1

    // State: coefficient vector of polynomials, x[k][d] = coeff of t^d on b_k.
    let mut x: Vec<tpoly::Poly> = (0..dim)
        .map(|k| {
            let mut poly = tpoly::zero(cap);
            poly[0] = g[k];
            poly
        })
        .collect();

    // Apply ad(tg + h) a total of p-1 times: x <- [tg + h, x].
    for _ in 0..(p - 1) {
        let mut next: Vec<tpoly::Poly> = (0..dim).map(|_| tpoly::zero(cap)).collect();
        for i in 0..dim {
            let (gi, hi) = (g[i], h[i]);
            if gi == 0 && hi == 0 {
                continue;
            }
            for (j, xj) in x.iter().enumerate() {
                if xj.iter().all(|&c| c == 0) {
                    continue;
                }
                let targets = alg.bracket_basis(i, j);
                if targets.is_empty() {
                    continue;
                }
                // (t gi + hi) * xj(t), then distribute over [b_i, b_j].
                let scaled = tpoly::mul_linear(xj, hi, gi, p);
                for (k, b) in targets {
                    let term: tpoly::Poly = scaled.iter().map(|&c| raw::mul(c, b, p)).collect();
                    tpoly::add_assign(&mut next[k], &term, p);
                }
            }
        }
        x = next;
    }

    // i * s_i = coefficient of t^{i-1}; divide by i (invertible, i < p).
    (1..p as usize)
        .map(|i| {
            let inv_i = raw::inv(i as u32 % p, p);
            (0..dim).map(|k| raw::mul(x[k][i - 1], inv_i, p)).collect()
        })
        .collect()
}

/// Jacobson terms in g(p) itself, as algebra elements.
pub fn jacobson_s(
    structure: &RestrictedStructure,
    g: &AlgebraElement,
    h: &AlgebraElement,
) -> Result<Vec<AlgebraElement>, AlgebraError> {
    if g.p != structure.p || h.p != structure.p {
        return Err(AlgebraError::ModulusMismatch(structure.p.get(), g.p.get()));
    }
    let alg = GAlgebra::new(structure.clone());
    Ok(jacobson_terms(&alg, g.raw(), h.raw())
        .into_iter()
        .map(|v| AlgebraElement::from_raw(structure.p, v))
        .collect())
}

fn vec_add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| raw::add(x, y, p)).collect()
}

fn vec_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| raw::sub(x, y, p)).collect()
}

fn vec_scale(a: &[u32], c: u32, p: u32) -> Vec<u32> {
    a.iter().map(|&x| raw::mul(x, c, p)).collect()
}

fn is_zero_vec(a: &[u32]) -> bool {
    a.iter().all(|&x| x == 0)
}

fn fmt_vec(a: &[u32]) -> String {
    let terms: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| format!("{}*b{}", c, i + 1))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Check the Lie and restricted axioms of an algebra given by structure
/// constants: antisymmetry and Jacobi on all basis triples, nilpotency of ad,
/// ad-compatibility of the p-map, Jacobson additivity, and Frobenius scaling.
/// Basis cases are exhaustive; `samples` extra random elements/pairs are
/// drawn from a seeded generator. Failures carry witnesses.
pub fn verify_lie_algebra<A: LieAlgebra, R: Rng>(
    alg: &A,
    samples: u32,
    seed: u64,
    rng: &mut R,
) -> VerificationReport {
    let p = alg.prime().get();
    let dim = alg.dim();
    let mut checks = Vec::new();

    let basis_vec = |i: usize| -> Vec<u32> {
        let mut v = vec![0u32; dim];
        v[i] = 1;
        v
    };
    let random_vec = |rng: &mut R| -> Vec<u32> { (0..dim).map(|_| rng.gen_range(0..p)).collect() };

    // Antisymmetry on basis pairs.
    let mut witness = None;
    'anti: for i in 0..dim {
        for j in 0..dim {
            let xy = alg.bracket_vec(&basis_vec(i), &basis_vec(j));
            let yx = alg.bracket_vec(&basis_vec(j), &basis_vec(i));
            if !is_zero_vec(&vec_add(&xy, &yx, p)) {
                witness = Some(format!(
                    "[b{},b{}] + [b{},b{}] != 0",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                ));
                break 'anti;
            }
        }
    }
    checks.push(match witness {
        None => AxiomCheck::pass("antisymmetry on basis pairs"),
        Some(w) => AxiomCheck::fail("antisymmetry on basis pairs", w),
    });

    // Jacobi on all basis triples.
    let mut witness = None;
    'jacobi: for i in 0..dim {
        let bi = basis_vec(i);
        for j in (i + 1)..dim {
            let bj = basis_vec(j);
            let bij = alg.bracket_vec(&bi, &bj);
            for k in (j + 1)..dim {
                let bk = basis_vec(k);
                let t1 = alg.bracket_vec(&bij, &bk);
                let t2 = alg.bracket_vec(&alg.bracket_vec(&bj, &bk), &bi);
                let t3 = alg.bracket_vec(&alg.bracket_vec(&bk, &bi), &bj);
                let total = vec_add(&vec_add(&t1, &t2, p), &t3, p);
                if !is_zero_vec(&total) {
                    witness = Some(format!("triple (b{},b{},b{})", i + 1, j + 1, k + 1));
                    break 'jacobi;
                }
            }
        }
    }
    checks.push(match witness {
        None => AxiomCheck::pass("Jacobi identity on all basis triples"),
        Some(w) => AxiomCheck::fail("Jacobi identity on all basis triples", w),
    });

    // (ad x)^p = 0 and ad(x^[p]) = 0-compatible: ad(x^[p]) y = (ad x)^p y.
    let mut elements: Vec<(String, Vec<u32>)> = (0..dim)
        .map(|i| (format!("b{}", i + 1), basis_vec(i)))
        .collect();
    for s in 0..samples {
        elements.push((format!("random#{s}"), random_vec(rng)));
    }

    let mut witness = None;
    for (name, x) in &elements {
        let xp = alg.p_map_vec(x);
        for j in 0..dim {
            let y = basis_vec(j);
            // (ad x)^p y by iteration.
            let mut acc = y.clone();
            for _ in 0..p {
                acc = alg.bracket_vec(x, &acc);
            }
            let lhs = alg.bracket_vec(&xp, &y);
            if !is_zero_vec(&vec_sub(&lhs, &acc, p)) {
                witness = Some(format!(
                    "x={name}, y=b{}: ad(x^[p]) y = {} but (ad x)^p y = {}",
                    j + 1,
                    fmt_vec(&lhs),
                    fmt_vec(&acc)
                ));
                break;
            }
        }
        if witness.is_some() {
            break;
        }
    }
    checks.push(match witness {
        None => AxiomCheck::pass("ad(x^[p]) = (ad x)^p on basis and random elements"),
        Some(w) => AxiomCheck::fail("ad(x^[p]) = (ad x)^p on basis and random elements", w),
    });

    // Jacobson additivity: (x+y)^[p] = x^[p] + y^[p] + sum_i s_i(x,y),
    // on all basis pairs plus random pairs.
    let mut pairs: Vec<(String, Vec<u32>, Vec<u32>)> = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                pairs.push((
                    format!("(b{},b{})", i + 1, j + 1),
                    basis_vec(i),
                    basis_vec(j),
                ));
            }
        }
    }
    for s in 0..samples {
        pairs.push((format!("random-pair#{s}"), random_vec(rng), random_vec(rng)));
    }
    let mut witness = None;
    for (name, x, y) in &pairs {
        let lhs = alg.p_map_vec(&vec_add(x, y, p));
        let mut rhs = vec_add(&alg.p_map_vec(x), &alg.p_map_vec(y), p);
        for s in jacobson_terms(alg, x, y) {
            rhs = vec_add(&rhs, &s, p);
        }
        if !is_zero_vec(&vec_sub(&lhs, &rhs, p)) {
            witness = Some(format!(
                "{name}: (x+y)^[p] = {} but x^[p]+y^[p]+sum s_i = {}",
                fmt_vec(&lhs),
                fmt_vec(&rhs)
            ));
            break;
        }
    }
    checks.push(match witness {
        None => AxiomCheck::pass("(x+y)^[p] = x^[p] + y^[p] + sum s_i(x,y)"),
        Some(w) => AxiomCheck::fail("(x+y)^[p] = x^[p] + y^[p] + sum s_i(x,y)", w),
    });

    // Frobenius scaling of the p-map on random (scalar, element) pairs.
    let mut witness = None;
    for s in 0..samples.max(1) {
        let c = rng.gen_range(0..p);
        let x = random_vec(rng);
        let lhs = alg.p_map_vec(&vec_scale(&x, c, p));
        let rhs = vec_scale(&alg.p_map_vec(&x), raw::pow(c, p as u64, p), p);
        if !is_zero_vec(&vec_sub(&lhs, &rhs, p)) {
            witness = Some(format!("sample#{s}: (c x)^[p] != c^p x^[p]"));
            break;
        }
    }
    checks.push(match witness {
        None => AxiomCheck::pass("(c x)^[p] = c^p x^[p] on random samples"),
        Some(w) => AxiomCheck::fail("(c x)^[p] = c^p x^[p] on random samples", w),
    });

    VerificationReport {
        p,
        seed,
        samples,
        checks,
    }
}

/// Verify the restricted axioms of g(p) with the given structure.
pub fn verify_restricted(
    structure: &RestrictedStructure,
    samples: u32,
    seed: u64,
) -> VerificationReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let alg = GAlgebra::new(structure.clone());
    verify_lie_algebra(&alg, samples, seed, &mut rng)
}

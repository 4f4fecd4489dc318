//! Graded cochain spaces of g(p) with trivial coefficients, in lexicographic
//! dual bases, together with the differentials d1 and d2.
//!
//! d2 is implemented twice on purpose: once straight from the definition on
//! basis triples (the authoritative route) and once from the expanded index
//! formula (`d2_closed_form`). Tests require the two to agree; where the
//! expanded formula's summation limits would name an index outside the basis,
//! the term denotes the zero vector and is dropped.

use thiserror::Error;

use crate::algebra::structure_constant_raw;
use crate::fp::{raw, Fp, Prime};
use crate::matrix::FpMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainError {
    #[error("degree {k} out of range {lo}..={hi} for {what}")]
    DegreeOutOfRange {
        what: &'static str,
        k: usize,
        lo: usize,
        hi: usize,
    },
    #[error("basis index ({0}, {1}) is not a stored pair")]
    BadPair(usize, usize),
    #[error("row (u, v) = ({u}, {v}) out of range for degree {k}")]
    RowOutOfRange { u: usize, v: usize, k: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
}

// ---- index helpers ----

/// Total version of s: the number of pairs i < j with i + j = k, j unbounded
/// above by k only. Meaningful for k >= 1.
pub(crate) fn s_int(k: usize) -> usize {
    if k.is_multiple_of(2) {
        (k / 2).saturating_sub(1)
    } else {
        (k - 1) / 2
    }
}

/// s(k) = k/2 - 1 for even k, (k-1)/2 for odd k. Defined for k >= 3.
pub fn s_of(k: usize) -> Result<usize, CochainError> {
    if k < 3 {
        return Err(CochainError::DegreeOutOfRange {
            what: "s",
            k,
            lo: 3,
            hi: usize::MAX,
        });
    }
    Ok(s_int(k))
}

/// M(p, k): first pair index of the degree-k slice; 1 for 3 <= k <= p+1 and
/// k - p for p+2 <= k <= 2p-1.
pub fn m_of(p: Prime, k: usize) -> Result<usize, CochainError> {
    let pv = p.get() as usize;
    if !(3..=2 * pv - 1).contains(&k) {
        return Err(CochainError::DegreeOutOfRange {
            what: "M",
            k,
            lo: 3,
            hi: 2 * pv - 1,
        });
    }
    Ok(if k <= pv + 1 { 1 } else { k - pv })
}

/// G(p, k): least first index of a degree-k triple; 1 for 6 <= k <= 2p and
/// 1 + k - 2p for 2p+1 <= k <= 3p-3.
pub fn g_of(p: Prime, k: usize) -> Result<usize, CochainError> {
    let pv = p.get() as usize;
    if !(6..=3 * pv - 3).contains(&k) {
        return Err(CochainError::DegreeOutOfRange {
            what: "G",
            k,
            lo: 6,
            hi: 3 * pv - 3,
        });
    }
    Ok(if k <= 2 * pv { 1 } else { 1 + k - 2 * pv })
}

/// F(p, k): greatest first index of a degree-k triple; floor((k - r)/3) - 1
/// where r = k mod 3.
pub fn f_of(p: Prime, k: usize) -> Result<usize, CochainError> {
    let pv = p.get() as usize;
    if !(6..=3 * pv - 3).contains(&k) {
        return Err(CochainError::DegreeOutOfRange {
            what: "F",
            k,
            lo: 6,
            hi: 3 * pv - 3,
        });
    }
    Ok(match k % 3 {
        0 => k / 3 - 1,
        1 => (k - 1) / 3 - 1,
        _ => (k - 2) / 3 - 1,
    })
}

// ---- basis enumeration ----

/// All pairs 1 <= i < j <= p in lexicographic order.
pub fn pair_basis(p: Prime) -> Vec<(usize, usize)> {
    let pv = p.get() as usize;
    let mut out = Vec::with_capacity(pv * (pv - 1) / 2);
    for i in 1..=pv {
        for j in (i + 1)..=pv {
            out.push((i, j));
        }
    }
    out
}

/// Degree-k slice of the pair basis: (i, k-i) for max(1, k-p) <= i <= s(k).
/// Empty outside 3 <= k <= 2p-1.
pub fn pair_basis_graded(p: Prime, k: usize) -> Vec<(usize, usize)> {
    let pv = p.get() as usize;
    if !(3..=2 * pv - 1).contains(&k) {
        return Vec::new();
    }
    let lo = if k > pv { k - pv } else { 1 };
    (lo..=s_int(k)).map(|i| (i, k - i)).collect()
}

/// Lexicographic position of the pair (i, j), or None if not stored.
pub fn pair_index(p: Prime, i: usize, j: usize) -> Option<usize> {
    let pv = p.get() as usize;
    if i == 0 || !(i < j && j <= pv) {
        return None;
    }
    // Pairs with first component < i, then the offset within first = i.
    Some((i - 1) * pv - i * (i - 1) / 2 + (j - i - 1))
}

/// All triples 1 <= u < v < w <= p in lexicographic order.
pub fn triple_basis(p: Prime) -> Vec<(usize, usize, usize)> {
    let pv = p.get() as usize;
    let mut out = Vec::new();
    for u in 1..=pv {
        for v in (u + 1)..=pv {
            for w in (v + 1)..=pv {
                out.push((u, v, w));
            }
        }
    }
    out
}

/// Degree-k slice of the triple basis in lexicographic order. Empty outside
/// 6 <= k <= 3p-3.
pub fn triple_basis_graded(p: Prime, k: usize) -> Vec<(usize, usize, usize)> {
    let pv = p.get() as usize;
    if !(6..=3 * pv - 3).contains(&k) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let g = if k <= 2 * pv { 1 } else { 1 + k - 2 * pv };
    let f = match k % 3 {
        0 => k / 3 - 1,
        1 => (k - 1) / 3 - 1,
        _ => (k - 2) / 3 - 1,
    };
    for u in g..=f {
        let rest = k - u;
        let v_lo = (u + 1).max(rest.saturating_sub(pv));
        for v in v_lo..=s_int(rest) {
            out.push((u, v, rest - v));
        }
    }
    out
}

/// Lexicographic position of the triple (u, v, w), or None if not stored.
pub fn triple_index(p: Prime, u: usize, v: usize, w: usize) -> Option<usize> {
    let pv = p.get() as usize;
    if u == 0 || !(u < v && v < w && w <= pv) {
        return None;
    }
    let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
    let mut idx = 0usize;
    for a in 1..u {
        idx += choose2(pv - a);
    }
    // Within first = u: pairs (v, w) from (u+1..=p).
    let m = pv - u; // size of the remaining range
    let vi = v - u; // 1-based position of v in that range
    idx += (vi - 1) * m - vi * (vi - 1) / 2 + (w - v - 1);
    Some(idx)
}

// ---- cochain types ----

/// A 1-cochain sum_k gamma_k e^k; `coeffs[k-1]` is gamma_k.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain1 {
    p: Prime,
    coeffs: Vec<u32>,
}

impl Cochain1 {
    pub fn zero(p: Prime) -> Cochain1 {
        Cochain1 {
            p,
            coeffs: vec![0; p.get() as usize],
        }
    }

    /// The dual basis vector e^k (1-based).
    pub fn basis(p: Prime, k: usize) -> Cochain1 {
        assert!(k >= 1 && k <= p.get() as usize, "1-based index {k}");
        let mut c = Cochain1::zero(p);
        c.coeffs[k - 1] = 1;
        c
    }

    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Cochain1 {
        assert_eq!(coeffs.len(), p.get() as usize);
        Cochain1 {
            p,
            coeffs: coeffs.iter().map(|&c| p.residue(c)).collect(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// gamma_k (1-based).
    pub fn coeff(&self, k: usize) -> Fp {
        Fp::from_raw(self.coeffs[k - 1], self.p.get())
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<(usize, Fp)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, Fp::from_raw(c, self.p.get())))
            .collect()
    }
}

impl std::fmt::Debug for Cochain1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_support(
            f,
            self.support().iter().map(|(k, c)| (format!("e^{k}"), *c)),
        )
    }
}

/// A 2-cochain sum sigma_{i,j} e^{i,j} over the lexicographic pair basis.
/// Evaluation on wedges with out-of-order indices picks up the permutation
/// sign; repeated indices evaluate to zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain2 {
    p: Prime,
    coeffs: Vec<u32>,
}

impl Cochain2 {
    pub fn zero(p: Prime) -> Cochain2 {
        let pv = p.get() as usize;
        Cochain2 {
            p,
            coeffs: vec![0; pv * (pv - 1) / 2],
        }
    }

    /// The dual basis vector e^{i,j}, i < j.
    pub fn basis(p: Prime, i: usize, j: usize) -> Result<Cochain2, CochainError> {
        let idx = pair_index(p, i, j).ok_or(CochainError::BadPair(i, j))?;
        let mut c = Cochain2::zero(p);
        c.coeffs[idx] = 1;
        Ok(c)
    }

    pub fn from_pairs(p: Prime, terms: &[(usize, usize, i64)]) -> Result<Cochain2, CochainError> {
        let mut c = Cochain2::zero(p);
        for &(i, j, v) in terms {
            let idx = pair_index(p, i, j).ok_or(CochainError::BadPair(i, j))?;
            c.coeffs[idx] = raw::add(c.coeffs[idx], p.residue(v), p.get());
        }
        Ok(c)
    }

    pub(crate) fn from_raw(p: Prime, coeffs: Vec<u32>) -> Cochain2 {
        let pv = p.get() as usize;
        debug_assert_eq!(coeffs.len(), pv * (pv - 1) / 2);
        Cochain2 { p, coeffs }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// sigma_{i,j} for a stored pair i < j.
    pub fn coeff(&self, i: usize, j: usize) -> Fp {
        let idx =
            pair_index(self.p, i, j).unwrap_or_else(|| panic!("({i},{j}) is not a stored pair"));
        Fp::from_raw(self.coeffs[idx], self.p.get())
    }

    /// Value on e_i wedge e_j for any 1 <= i, j <= p, with the sign of the
    /// sorting permutation; zero when i = j.
    pub fn eval_wedge(&self, i: usize, j: usize) -> Fp {
        let pv = self.p.get();
        assert!(i >= 1 && j >= 1 && i <= pv as usize && j <= pv as usize);
        if i == j {
            return Fp::zero(self.p);
        }
        if i < j {
            self.coeff(i, j)
        } else {
            -self.coeff(j, i)
        }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Cochain2) -> Result<Cochain2, CochainError> {
        if self.p != other.p {
            return Err(CochainError::ModulusMismatch(self.p.get(), other.p.get()));
        }
        let p = self.p.get();
        Ok(Cochain2 {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| raw::add(a, b, p))
                .collect(),
        })
    }

    pub fn scale(&self, factor: Fp) -> Cochain2 {
        assert_eq!(factor.modulus(), self.p.get());
        let p = self.p.get();
        Cochain2 {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| raw::mul(a, factor.value(), p))
                .collect(),
        }
    }

    /// ((i, j), sigma_{i,j}) over the support, in lexicographic order.
    pub fn support(&self) -> Vec<((usize, usize), Fp)> {
        let basis = pair_basis(self.p);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| (basis[idx], Fp::from_raw(c, self.p.get())))
            .collect()
    }

    /// Degrees k = i + j with a non-zero coefficient.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.support().iter().map(|((i, j), _)| i + j).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }
}

impl std::fmt::Debug for Cochain2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_support(
            f,
            self.support()
                .iter()
                .map(|((i, j), c)| (format!("e^{{{i},{j}}}"), *c)),
        )
    }
}

/// A 3-cochain over the lexicographic triple basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain3 {
    p: Prime,
    coeffs: Vec<u32>,
}

impl Cochain3 {
    pub fn zero(p: Prime) -> Cochain3 {
        let pv = p.get() as usize;
        Cochain3 {
            p,
            coeffs: vec![0; pv * (pv - 1) * (pv - 2) / 6],
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeff(&self, u: usize, v: usize, w: usize) -> Fp {
        let idx = triple_index(self.p, u, v, w)
            .unwrap_or_else(|| panic!("({u},{v},{w}) is not a stored triple"));
        Fp::from_raw(self.coeffs[idx], self.p.get())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<((usize, usize, usize), Fp)> {
        let basis = triple_basis(self.p);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| (basis[idx], Fp::from_raw(c, self.p.get())))
            .collect()
    }

    fn add_term(&mut self, u: usize, v: usize, w: usize, value: u32) {
        if value == 0 {
            return;
        }
        // Terms whose label is not a strictly increasing triple within 1..=p
        // denote the zero vector.
        let Some(idx) = triple_index(self.p, u, v, w) else {
            return;
        };
        self.coeffs[idx] = raw::add(self.coeffs[idx], value, self.p.get());
    }
}

impl std::fmt::Debug for Cochain3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_support(
            f,
            self.support()
                .iter()
                .map(|((u, v, w), c)| (format!("e^{{{u},{v},{w}}}"), *c)),
        )
    }
}

fn fmt_support<I: Iterator<Item = (String, Fp)>>(
    f: &mut std::fmt::Formatter<'_>,
    terms: I,
) -> std::fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        if c.value() == 1 {
            write!(f, "{label}")?;
        } else {
            write!(f, "{}*{label}", c.value())?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

// ---- differentials ----

/// d1(psi)(g ^ h) = psi([g, h]); on the basis, d1(e^k) = sum a_{i,k-i} e^{i,k-i}.
pub fn d1(psi: &Cochain1) -> Cochain2 {
    let p = psi.prime();
    let pv = p.get() as usize;
    let mut out = Cochain2::zero(p);
    for k in 3..=pv {
        let gamma = psi.raw()[k - 1];
        if gamma == 0 {
            continue;
        }
        for i in 1..=s_int(k) {
            let a = structure_constant_raw(p.get(), i, k - i);
            if a == 0 {
                continue;
            }
            let idx = pair_index(p, i, k - i).unwrap();
            out.coeffs[idx] = raw::add(out.coeffs[idx], raw::mul(gamma, a, p.get()), p.get());
        }
    }
    out
}

/// d2 from the definition: the e^{u,v,w} coefficient of d2(phi) is
/// phi([e_u,e_v] ^ e_w) - phi([e_u,e_w] ^ e_v) + phi([e_v,e_w] ^ e_u), with
/// brackets that leave the algebra truncated away. This is the authoritative
/// implementation.
pub fn d2(phi: &Cochain2) -> Cochain3 {
    let p = phi.prime();
    let pv = p.get() as usize;
    let mut out = Cochain3::zero(p);
    for k in phi.degrees() {
        for (u, v, w) in triple_basis_graded(p, k) {
            let mut acc = Fp::zero(p);
            if u + v <= pv {
                let a = structure_constant_raw(p.get(), u, v);
                if a != 0 {
                    acc = acc + Fp::from_raw(a, p.get()) * phi.eval_wedge(u + v, w);
                }
            }
            if u + w <= pv {
                let a = structure_constant_raw(p.get(), u, w);
                if a != 0 {
                    acc = acc - Fp::from_raw(a, p.get()) * phi.eval_wedge(u + w, v);
                }
            }
            if v + w <= pv {
                let a = structure_constant_raw(p.get(), v, w);
                if a != 0 {
                    acc = acc + Fp::from_raw(a, p.get()) * phi.eval_wedge(v + w, u);
                }
            }
            out.add_term(u, v, w, acc.value());
        }
    }
    out
}

/// d2 from the expanded per-basis index formula. Summation limits are taken
/// literally; any term naming an index outside the stored triple basis is a
/// zero vector and contributes nothing.
pub fn d2_closed_form(phi: &Cochain2) -> Cochain3 {
    let p = phi.prime();
    let pv = p.get() as usize;
    let pr = p.get();
    let mut out = Cochain3::zero(p);
    for ((i, j), sigma) in phi.support() {
        let k = i + j;
        if k < 6 {
            // No degree-k triples below 6.
            continue;
        }
        let s = sigma.value();
        // sum_{n=1}^{s(i)} a_{n,i-n} e^{n, i-n, k-i}
        for n in 1..=s_int(i) {
            let a = structure_constant_raw(pr, n, i - n);
            out.add_term(n, i - n, k - i, raw::mul(s, a, pr));
        }
        // - sum_{n=k-2i+1}^{s(k-i)} a_{n,k-i-n} e^{n, k-i-n, i}
        if k > 2 * i {
            for n in (k - 2 * i + 1)..=s_int(k - i) {
                let a = structure_constant_raw(pr, n, k - i - n);
                out.add_term(n, k - i - n, i, raw::neg(raw::mul(s, a, pr), pr));
            }
        }
        // + sum_{n=1}^{i-1} a_{n,k-i-n} e^{n, i, k-i-n}
        for n in 1..i {
            let a = structure_constant_raw(pr, n, k - i - n);
            out.add_term(n, i, k - i - n, raw::mul(s, a, pr));
        }
        // - sum_{n=i+1}^{p-2} a_{n,k-i-n} e^{i, n, k-i-n}
        for n in (i + 1)..=(pv - 2) {
            if k < i + n + 1 {
                break; // third index would drop below 1
            }
            let a = structure_constant_raw(pr, n, k - i - n);
            out.add_term(i, n, k - i - n, raw::neg(raw::mul(s, a, pr), pr));
        }
    }
    out
}

/// The distinguished degree-k 2-cochain phi_k = sum_{i=M(p,k)}^{s(k)}
/// a_{i,k-i} e^{i,k-i}, defined for 3 <= k <= 2p-1. A coboundary for k <= p
/// and a non-trivial cocycle at k = p+1.
pub fn phi_k(p: Prime, k: usize) -> Result<Cochain2, CochainError> {
    let m = m_of(p, k)?;
    let mut out = Cochain2::zero(p);
    for i in m..=s_int(k) {
        let a = structure_constant_raw(p.get(), i, k - i);
        if a == 0 {
            continue;
        }
        let idx = pair_index(p, i, k - i).expect("phi_k pair in range");
        out.coeffs[idx] = a;
    }
    Ok(out)
}

/// Terms of one matrix row, keyed by pair index.
pub type RowTerms = Vec<((usize, usize), Fp)>;

/// The four-term linear relation among {sigma_{i,j} : i + j = k} carried by
/// the e^{u, v, k-u-v} row of the degree-k d2 matrix. Each term appears only
/// when its index pair is a stored basis pair; returned entries are keyed by
/// pair in lexicographic order and may carry the value zero.
pub fn basic_equation_row(
    p: Prime,
    k: usize,
    u: usize,
    v: usize,
) -> Result<RowTerms, CochainError> {
    let pv = p.get() as usize;
    let g = g_of(p, k)?;
    let f = f_of(p, k)?;
    let row_err = CochainError::RowOutOfRange { u, v, k };
    if !(g..=f).contains(&u) {
        return Err(row_err);
    }
    if !((u + 1)..=s_int(k - u)).contains(&v) {
        return Err(row_err);
    }
    let w = k - u - v;
    if w > pv {
        // e^{u,v,w} is not a stored triple; the row does not exist.
        return Err(row_err);
    }

    let mut terms: RowTerms = Vec::with_capacity(4);
    let a = |i: usize, j: usize| Fp::from_raw(structure_constant_raw(p.get(), i, j), p.get());
    // -sigma_{u,k-u} a_{v,k-v-u}            (present when k-u <= p)
    if k - u <= pv {
        terms.push(((u, k - u), -a(v, k - v - u)));
    }
    // +sigma_{v,k-v} a_{u,k-v-u}            (present when k-v <= p)
    if k - v <= pv {
        terms.push(((v, k - v), a(u, k - v - u)));
    }
    // +sigma_{u+v,w} a_{u,v}                (present when u+v < w <= p)
    // -sigma_{w,u+v} a_{u,v}                (present when w < u+v <= p)
    // Never both: the two cases are disjoint in (u+v) vs w.
    if u + v < w {
        terms.push(((u + v, w), a(u, v)));
    } else if w < u + v && u + v <= pv {
        terms.push(((w, u + v), -a(u, v)));
    }
    terms.sort_by_key(|&((i, j), _)| (i, j));
    Ok(terms)
}

/// The matrix of d^q in the lexicographic bases: rows indexed by the codomain
/// basis, columns by the domain basis, column j holding the coordinates of
/// d^q applied to the j-th domain basis cochain. With `k` given, only the
/// degree-k graded slice is assembled (the differentials preserve degree).
pub fn d_matrix(q: u8, p: Prime, k: Option<usize>) -> FpMatrix {
    assert!(q == 1 || q == 2, "only d1 and d2 have matrices here");
    match (q, k) {
        (1, None) => {
            let pv = p.get() as usize;
            let pairs = pair_basis(p);
            let mut m = FpMatrix::zeros(p, pairs.len(), pv);
            for col in 0..pv {
                let image = d1(&Cochain1::basis(p, col + 1));
                for (row, &(i, j)) in pairs.iter().enumerate() {
                    m.set_raw(row, col, image.coeff(i, j).value());
                }
            }
            m
        }
        (1, Some(k)) => {
            let pairs = pair_basis_graded(p, k);
            let cols = if k >= 1 && k <= p.get() as usize {
                1
            } else {
                0
            };
            let mut m = FpMatrix::zeros(p, pairs.len(), cols);
            if cols == 1 {
                let image = d1(&Cochain1::basis(p, k));
                for (row, &(i, j)) in pairs.iter().enumerate() {
                    m.set_raw(row, 0, image.coeff(i, j).value());
                }
            }
            m
        }
        (2, None) => {
            let pairs = pair_basis(p);
            let triples = triple_basis(p);
            let mut m = FpMatrix::zeros(p, triples.len(), pairs.len());
            for (col, &(i, j)) in pairs.iter().enumerate() {
                let image = d2(&Cochain2::basis(p, i, j).unwrap());
                for ((u, v, w), c) in image.support() {
                    let row = triple_index(p, u, v, w).unwrap();
                    m.set_raw(row, col, c.value());
                }
            }
            m
        }
        (2, Some(k)) => {
            let pairs = pair_basis_graded(p, k);
            let triples = triple_basis_graded(p, k);
            let mut m = FpMatrix::zeros(p, triples.len(), pairs.len());
            for (col, &(i, j)) in pairs.iter().enumerate() {
                let image = d2(&Cochain2::basis(p, i, j).unwrap());
                for (row, &(u, v, w)) in triples.iter().enumerate() {
                    m.set_raw(row, col, image.coeff(u, v, w).value());
                }
            }
            m
        }
        _ => unreachable!(),
    }
}

/// The four index helpers evaluated at one degree, for reports; a field is
/// None where the helper is undefined at k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexHelpers {
    pub s: Option<usize>,
    pub m: Option<usize>,
    pub g: Option<usize>,
    pub f: Option<usize>,
}

impl IndexHelpers {
    pub fn at(p: Prime, k: usize) -> IndexHelpers {
        IndexHelpers {
            s: s_of(k).ok(),
            m: m_of(p, k).ok(),
            g: g_of(p, k).ok(),
            f: f_of(p, k).ok(),
        }
    }
}

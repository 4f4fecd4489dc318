//! Dense linear algebra over GF(p): row reduction, kernel bases, and
//! kernel-modulo-image quotients.
//!
//! Matrices are dense row-major grids of reduced residues. Pivot selection is
//! deterministic (first non-zero entry in column order) so every basis this
//! module produces is reproducible across runs.

use thiserror::Error;

use crate::fp::{raw, Fp, Prime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("image is not contained in the kernel span (broken complex)")]
    ImageNotInKernel,
}

/// A coefficient vector over GF(p).
#[derive(Clone, PartialEq, Eq)]
pub struct FpVec {
    p: Prime,
    data: Vec<u32>,
}

impl FpVec {
    pub fn zeros(p: Prime, len: usize) -> FpVec {
        FpVec {
            p,
            data: vec![0; len],
        }
    }

    pub fn from_signed(p: Prime, entries: &[i64]) -> FpVec {
        FpVec {
            p,
            data: entries.iter().map(|&x| p.residue(x)).collect(),
        }
    }

    pub(crate) fn from_raw(p: Prime, data: Vec<u32>) -> FpVec {
        debug_assert!(data.iter().all(|&x| x < p.get()));
        FpVec { p, data }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> Fp {
        Fp::from_raw(self.data[i], self.p.get())
    }

    pub fn set(&mut self, i: usize, value: Fp) {
        assert_eq!(value.modulus(), self.p.get());
        self.data[i] = value.value();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.data
    }

    /// (index, value) pairs of the non-zero coordinates.
    pub fn support(&self) -> Vec<(usize, Fp)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i, Fp::from_raw(v, self.p.get())))
            .collect()
    }
}

impl std::fmt::Debug for FpVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FpVec(mod {}) {:?}", self.p, self.data)
    }
}

/// A dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(p: Prime, rows: &[FpVec]) -> Result<FpMatrix, LinalgError> {
        let cols = rows.first().map_or(0, FpVec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.prime() != p {
                return Err(LinalgError::ModulusMismatch(p.get(), r.prime().get()));
            }
            if r.len() != cols {
                return Err(LinalgError::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r.raw());
        }
        Ok(FpMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_signed(p: Prime, entries: &[&[i64]]) -> FpMatrix {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut m = FpMatrix::zeros(p, rows, cols);
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = p.residue(v);
            }
        }
        m
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Fp {
        assert!(row < self.rows && col < self.cols);
        Fp::from_raw(self.data[row * self.cols + col], self.p.get())
    }

    pub fn set(&mut self, row: usize, col: usize, value: Fp) {
        assert!(row < self.rows && col < self.cols);
        assert_eq!(value.modulus(), self.p.get());
        self.data[row * self.cols + col] = value.value();
    }

    pub(crate) fn set_raw(&mut self, row: usize, col: usize, value: u32) {
        debug_assert!(value < self.p.get());
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> FpVec {
        assert!(row < self.rows);
        FpVec::from_raw(
            self.p,
            self.data[row * self.cols..(row + 1) * self.cols].to_vec(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch(self.p.get(), other.p.get()));
        }
        if self.cols != other.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &FpVec) -> Result<FpVec, LinalgError> {
        if v.prime() != self.p {
            return Err(LinalgError::ModulusMismatch(self.p.get(), v.prime().get()));
        }
        if v.len() != self.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let p = self.p.get();
        let mut out = vec![0u32; self.rows];
        for (i, chunk) in self.data.chunks_exact(self.cols).enumerate() {
            let mut acc = 0u64;
            for (a, b) in chunk.iter().zip(v.raw()) {
                acc += *a as u64 * *b as u64;
                // Stay well below u64 overflow for desk-scale primes.
                if acc >= 1 << 62 {
                    acc %= p as u64;
                }
            }
            out[i] = (acc % p as u64) as u32;
        }
        Ok(FpVec::from_raw(self.p, out))
    }

    /// Reduced row echelon form with deterministic pivoting.
    pub fn rref(&self) -> Rref {
        let p = self.p.get();
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            // First non-zero entry at or below the current rank row.
            let Some(pivot_row) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pivot_row != rank {
                for j in 0..cols {
                    m.swap(rank * cols + j, pivot_row * cols + j);
                }
            }
            let inv = raw::inv(m[rank * cols + col], p);
            if inv != 1 {
                for j in col..cols {
                    m[rank * cols + j] = raw::mul(m[rank * cols + j], inv, p);
                }
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = m[r * cols + col];
                if factor == 0 {
                    continue;
                }
                // Split borrows: copy the pivot row slice head once per row.
                for j in col..cols {
                    let sub = raw::mul(factor, m[rank * cols + j], p);
                    m[r * cols + j] = raw::sub(m[r * cols + j], sub, p);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Rref {
            matrix: FpMatrix {
                p: self.p,
                rows,
                cols,
                data: m,
            },
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the right kernel {v : M v = 0}, one vector per free column,
    /// ordered by free column index.
    pub fn kernel_basis(&self) -> Vec<FpVec> {
        let red = self.rref();
        let p = self.p.get();
        let cols = self.cols;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut map = vec![None; cols];
            for (row, &col) in red.pivots.iter().enumerate() {
                map[col] = Some(row);
            }
            map
        };
        let mut basis = Vec::with_capacity(cols - red.rank);
        for free in 0..cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (row, &col) in red.pivots.iter().enumerate() {
                let entry = red.matrix.data[row * cols + free];
                v[col] = raw::neg(entry, p);
            }
            basis.push(FpVec::from_raw(self.p, v));
        }
        basis
    }
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} (mod {})", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// Result of `FpMatrix::rref`.
pub struct Rref {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A quotient space dim + canonical representatives.
#[derive(Debug)]
pub struct Quotient {
    pub dimension: usize,
    pub representatives: Vec<FpVec>,
}

/// Fully reduce `v` against the rows of a reduced echelon form.
fn reduce_against(red: &Rref, v: &FpVec) -> FpVec {
    let p = red.matrix.prime().get();
    let cols = red.matrix.cols();
    let mut w = v.raw().to_vec();
    for (row, &pc) in red.pivots.iter().enumerate() {
        let factor = w[pc];
        if factor == 0 {
            continue;
        }
        let pivot_row = &red.matrix.data[row * cols..(row + 1) * cols];
        for (wj, &rj) in w.iter_mut().zip(pivot_row) {
            *wj = raw::sub(*wj, raw::mul(factor, rj, p), p);
        }
    }
    FpVec::from_raw(red.matrix.prime(), w)
}

/// Dimension and canonical representatives of span(kernel) / span(image).
///
/// Representatives extend an image basis to a kernel basis: they are the
/// echelon rows of the kernel span whose pivot column is not an image pivot,
/// each reduced against the image span. Both echelon forms depend only on
/// the spans, so the output is deterministic and diffable regardless of how
/// the input bases are presented.
///
/// Errors if some image vector is not in the kernel span (a broken complex).
pub fn quotient_basis(kernel: &[FpVec], image: &[FpVec]) -> Result<Quotient, LinalgError> {
    let Some(first) = kernel.first().or(image.first()) else {
        return Ok(Quotient {
            dimension: 0,
            representatives: Vec::new(),
        });
    };
    let p = first.prime();
    let cols = first.len();
    for v in kernel.iter().chain(image) {
        if v.prime() != p {
            return Err(LinalgError::ModulusMismatch(p.get(), v.prime().get()));
        }
        if v.len() != cols {
            return Err(LinalgError::LengthMismatch {
                expected: cols,
                got: v.len(),
            });
        }
    }

    let kernel_red = if kernel.is_empty() {
        FpMatrix::zeros(p, 0, cols).rref()
    } else {
        FpMatrix::from_rows(p, kernel)?.rref()
    };
    let image_red = if image.is_empty() {
        FpMatrix::zeros(p, 0, cols).rref()
    } else {
        FpMatrix::from_rows(p, image)?.rref()
    };
    for v in image {
        if !reduce_against(&kernel_red, v).is_zero() {
            return Err(LinalgError::ImageNotInKernel);
        }
    }

    let mut representatives = Vec::new();
    for (row, &pc) in kernel_red.pivots.iter().enumerate() {
        if image_red.pivots.contains(&pc) {
            continue;
        }
        let rep = reduce_against(&image_red, &kernel_red.matrix.row(row));
        debug_assert!(!rep.is_zero());
        representatives.push(rep);
    }
    debug_assert_eq!(representatives.len(), kernel_red.rank - image_red.rank);
    Ok(Quotient {
        dimension: kernel_red.rank - image_red.rank,
        representatives,
    })
}

//! Prime field scalars.
//!
//! Everything downstream computes in GF(p) for a single runtime prime p, so
//! elements carry their modulus and arithmetic stays closed. Desk-scale primes
//! only (p fits comfortably in a `u32`; products are widened through `u64`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {0} is below the supported minimum {1}")]
    PrimeTooSmall(u32, u32),
    #[error("inverse of zero in GF({0})")]
    ZeroInverse(u32),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A validated prime modulus.
///
/// Constructing a `Prime` is the single place primality is checked; the rest
/// of the crate passes the witness around instead of re-testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Prime, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    /// The truncated algebras are only defined for p >= 5 (smaller primes
    /// collapse onto filiform algebras with different structure constants).
    pub fn new_at_least_5(p: u32) -> Result<Prime, FieldError> {
        let prime = Prime::new(p)?;
        if p < 5 {
            return Err(FieldError::PrimeTooSmall(p, 5));
        }
        Ok(prime)
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn residue(self, n: i64) -> u32 {
        let p = self.0 as i64;
        (n.rem_euclid(p)) as u32
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Raw residue arithmetic used by the dense inner loops, where carrying a
/// `Fp` per entry would be wasteful. All inputs must already be reduced.
pub(crate) mod raw {
    #[inline(always)]
    pub fn add(a: u32, b: u32, p: u32) -> u32 {
        let s = a + b;
        if s >= p {
            s - p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(a: u32, b: u32, p: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + p - b
        }
    }

    #[inline(always)]
    pub fn neg(a: u32, p: u32) -> u32 {
        if a == 0 {
            0
        } else {
            p - a
        }
    }

    #[inline(always)]
    pub fn mul(a: u32, b: u32, p: u32) -> u32 {
        ((a as u64 * b as u64) % p as u64) as u32
    }

    pub fn pow(mut base: u32, mut exp: u64, p: u32) -> u32 {
        let mut acc = 1u32 % p;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base, p);
            }
            base = mul(base, base, p);
            exp >>= 1;
        }
        acc
    }

    /// Fermat inversion; caller guarantees a != 0.
    pub fn inv(a: u32, p: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(p));
        pow(a, p as u64 - 2, p)
    }
}

/// An element of GF(p), stored as the least non-negative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, p: Prime) -> Fp {
        Fp {
            value: p.residue(value),
            modulus: p.get(),
        }
    }

    #[inline]
    pub(crate) fn from_raw(value: u32, p: u32) -> Fp {
        debug_assert!(value < p);
        Fp { value, modulus: p }
    }

    pub fn zero(p: Prime) -> Fp {
        Fp::new(0, p)
    }

    pub fn one(p: Prime) -> Fp {
        Fp::new(1, p)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Signed representative in (-p/2, p/2]; handy for printing small values.
    pub fn signed(self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v * 2 > p {
            v - p
        } else {
            v
        }
    }

    pub fn inv(self) -> Result<Fp, FieldError> {
        if self.value == 0 {
            return Err(FieldError::ZeroInverse(self.modulus));
        }
        Ok(Fp::from_raw(
            raw::inv(self.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn pow(self, exp: u64) -> Fp {
        Fp::from_raw(raw::pow(self.value, exp, self.modulus), self.modulus)
    }

    #[inline]
    fn check_modulus(self, other: Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "GF(p) elements with mismatched moduli: {} vs {}",
            self.modulus, other.modulus
        );
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check_modulus(rhs);
        Fp::from_raw(raw::add(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check_modulus(rhs);
        Fp::from_raw(raw::sub(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check_modulus(rhs);
        Fp::from_raw(raw::mul(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::from_raw(raw::neg(self.value, self.modulus), self.modulus)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

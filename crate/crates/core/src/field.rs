//! Arithmetic in the prime field `F_p`.
//!
//! Elements are plain residues in `[0, p)`; the modulus lives in a
//! [`PrimeField`] context that performs all operations. The modulus is
//! bounded by `2^31` so that a product of two residues fits a `u64`
//! intermediate without multi-precision arithmetic.

use std::fmt;

use crate::arith;

/// A residue in `[0, p)`, reduced with respect to some [`PrimeField`].
pub type FieldElement = u64;

/// Largest supported modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldError {
    NotPrime(u64),
    ModulusTooLarge(u64),
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "modulus {} is not prime", p),
            FieldError::ModulusTooLarge(p) => {
                write!(f, "modulus {} exceeds the supported bound 2^31", p)
            }
            FieldError::DivisionByZero => write!(f, "division by zero in F_p"),
        }
    }
}

impl std::error::Error for FieldError {}

impl PrimeField {
    /// Validates primality (deterministic Miller-Rabin for this range) and
    /// the word-size bound at construction; every later operation may then
    /// assume a well-formed modulus.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn add(self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.p && b < self.p);
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: FieldElement) -> FieldElement {
        debug_assert!(a < self.p);
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.p && b < self.p);
        // a, b < 2^31, so the product fits u64.
        a * b % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        debug_assert!(a < self.p);
        let (mut r0, mut r1) = (a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, so gcd(a, p) = 1");
        Ok(self.reduce_i128(s0 as i128))
    }

    pub fn pow(self, a: FieldElement, mut e: u64) -> FieldElement {
        debug_assert!(a < self.p);
        let mut base = a;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    pub fn reduce_i128(self, v: i128) -> FieldElement {
        let m = self.p as i128;
        (((v % m) + m) % m) as u64
    }

    /// Reduce an arbitrary unsigned integer into `[0, p)`.
    pub fn reduce_u64(self, v: u64) -> FieldElement {
        v % self.p
    }
}

//! Exact arithmetic in ℤ\[ξ\]/Φ_p(ξ) for a prime p, with ξ a primitive p-th
//! root of unity.
//!
//! Elements are stored canonically as integer coordinates in the basis
//! {ξ^0, …, ξ^{p-2}}; the power ξ^{p-1} is always eliminated through
//! ξ^{p-1} = -(1 + ξ + … + ξ^{p-2}), so equality is coefficient-wise.
//! Coefficients are arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of ℤ\[ξ\]/Φ_p in canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u64,
    // Length p-1: coefficient of ξ^k at position k.
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// The arithmetic suite for a fixed prime p. Constructing the ring checks
/// primality once; the operations themselves are total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycRing {
    p: u64,
}

impl CycRing {
    pub fn new(p: u64) -> Result<CycRing, CycError> {
        if is_prime(p) {
            Ok(CycRing { p })
        } else {
            Err(CycError::NotPrime(p))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn dim(&self) -> usize {
        (self.p - 1) as usize
    }

    pub fn zero(&self) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: vec![BigInt::zero(); self.dim()],
        }
    }

    pub fn one(&self) -> CycInt {
        self.from_power(0)
    }

    /// ξ^{e mod p}.
    pub fn from_power(&self, e: i64) -> CycInt {
        let e = e.rem_euclid(self.p as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); self.dim()];
        if e == self.dim() {
            // ξ^{p-1} = -(1 + ξ + … + ξ^{p-2})
            for c in &mut coeffs {
                *c = -BigInt::one();
            }
        } else {
            coeffs[e] = BigInt::one();
        }
        CycInt { p: self.p, coeffs }
    }

    /// ξ^e + ξ^{-e}, the scalar of a singular fusing string.
    pub fn plus_inverse_power(&self, e: i64) -> CycInt {
        self.add(&self.from_power(e), &self.from_power(-e))
    }

    fn check(&self, a: &CycInt) {
        assert_eq!(a.p, self.p, "cyclotomic element from a different ring");
    }

    pub fn add(&self, a: &CycInt, b: &CycInt) -> CycInt {
        self.check(a);
        self.check(b);
        CycInt {
            p: self.p,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn negate(&self, a: &CycInt) -> CycInt {
        self.check(a);
        CycInt {
            p: self.p,
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    // Fold a coefficient vector over {ξ^0, …, ξ^{p-1}} into the canonical
    // basis by eliminating ξ^{p-1}.
    fn reduce(&self, full: Vec<BigInt>) -> CycInt {
        debug_assert_eq!(full.len(), self.p as usize);
        let top = &full[self.dim()];
        CycInt {
            p: self.p,
            coeffs: full[..self.dim()].iter().map(|c| c - top).collect(),
        }
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        self.check(a);
        self.check(b);
        let mut full = vec![BigInt::zero(); self.p as usize];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % self.p as usize;
                full[k] += x * y;
            }
        }
        self.reduce(full)
    }

    /// Multiplication by the unit ξ^e: a cyclic exponent shift.
    pub fn mul_by_power(&self, a: &CycInt, e: i64) -> CycInt {
        self.check(a);
        let e = e.rem_euclid(self.p as i64) as usize;
        let mut full = vec![BigInt::zero(); self.p as usize];
        for (i, x) in a.coeffs.iter().enumerate() {
            full[(i + e) % self.p as usize] = x.clone();
        }
        self.reduce(full)
    }

    /// Coefficient-wise equality (canonical form makes this exact equality
    /// in the ring).
    pub fn equal(&self, a: &CycInt, b: &CycInt) -> bool {
        self.check(a);
        self.check(b);
        a == b
    }
}

//! Exact scalar fields.
//!
//! Every computation in the crate is generic over [`Field`], a field
//! *instance* that owns whatever context its elements need (the modulus of a
//! prime field, the non-residue of a quadratic extension). Elements are plain
//! immutable values.

mod prime;
mod quad;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use prime::{PrimeField, PrimeFieldElement};
pub use quad::{QuadExtElement, QuadExtField};
pub use rational::{Rational, RationalField};

/// Primes used by the finite-field search backends unless overridden.
pub const DEFAULT_PRIMES: [u64; 4] = [2, 3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no quadratic non-residue exists modulo {0}")]
    NoNonResidue(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("{value} is not defined modulo {modulus}")]
    NotIntegral { value: String, modulus: u64 },
}

/// Serializable identity of a field, used by the JSON algebra format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    Prime(u64),
    #[serde(rename = "Fp2")]
    QuadExt(u64),
}

impl std::fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "F_{p}"),
            FieldDescriptor::QuadExt(p) => write!(f, "F_{p}^2"),
        }
    }
}

pub trait Field: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Image of a rational number, or `None` when its denominator is not
    /// invertible in this field.
    fn from_rational(&self, q: &Rational) -> Option<Self::Elem>;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    fn descriptor(&self) -> FieldDescriptor;

    fn format(&self, a: &Self::Elem) -> String;

    fn parse(&self, s: &str) -> Result<Self::Elem, FieldError>;

    /// Whether `a` stays a unit after reduction modulo `p`. Only meaningful
    /// for the rationals; finite fields answer `true`.
    fn is_unit_mod(&self, _a: &Self::Elem, _p: u64) -> bool {
        true
    }

    /// Rescale a coefficient list in place to a canonical representative of
    /// its projective class and return the factor applied. The default makes
    /// the first nonzero entry 1.
    fn normalize_coefficients(&self, coeffs: &mut [Self::Elem]) -> Self::Elem {
        let Some(lead) = coeffs.iter().find(|c| !self.is_zero(c)) else {
            return self.one();
        };
        let s = self.inv(lead).expect("nonzero lead");
        for c in coeffs.iter_mut() {
            *c = self.mul(c, &s);
        }
        s
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// A field with finitely many elements that can be listed.
pub trait FiniteField: Field {
    fn order(&self) -> u64;

    /// All elements, zero first, in a fixed order.
    fn elements(&self) -> Vec<Self::Elem>;
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest quadratic non-residue modulo an odd prime.
pub fn smallest_non_residue(p: u64) -> Result<u64, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if p == 2 {
        return Err(FieldError::NoNonResidue(p));
    }
    (2..p).find(|&d| (1..p).all(|x| (x * x) % p != d)).ok_or(FieldError::NoNonResidue(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn non_residues() {
        assert_eq!(smallest_non_residue(3), Ok(2));
        assert_eq!(smallest_non_residue(5), Ok(2));
        assert_eq!(smallest_non_residue(7), Ok(3));
        assert_eq!(smallest_non_residue(2), Err(FieldError::NoNonResidue(2)));
        assert_eq!(smallest_non_residue(9), Err(FieldError::NotPrime(9)));
    }
}

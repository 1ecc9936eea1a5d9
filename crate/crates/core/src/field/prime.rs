use std::fmt;

use super::{is_prime, Field, FieldDescriptor, FieldError, FiniteField, Rational};

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Residue class modulo a prime. Carries its modulus so that mixing elements
/// of different prime fields is detected.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn same_field(&self, other: &Self) -> Result<u64, FieldError> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(FieldError::ModulusMismatch(self.modulus, other.modulus))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        let p = self.same_field(other)?;
        Ok(Self { residue: (self.residue + other.residue) % p, modulus: p })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        let p = self.same_field(other)?;
        Ok(Self { residue: (self.residue + p - other.residue) % p, modulus: p })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        let p = self.same_field(other)?;
        let r = (self.residue as u128 * other.residue as u128) % p as u128;
        Ok(Self { residue: r as u64, modulus: p })
    }

    pub fn neg(&self) -> Self {
        Self { residue: (self.modulus - self.residue) % self.modulus, modulus: self.modulus }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.residue == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let r = inv_mod(self.residue, self.modulus).ok_or(FieldError::DivisionByZero)?;
        Ok(Self { residue: r, modulus: self.modulus })
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// The prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement { residue: v.rem_euclid(self.p as i64) as u64, modulus: self.p }
    }

    fn check(&self, a: &PrimeFieldElement) {
        assert_eq!(a.modulus, self.p, "element of F_{} used in F_{}", a.modulus, self.p);
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.elem(0)
    }
    fn one(&self) -> PrimeFieldElement {
        self.elem(1)
    }
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        a.checked_add(b).expect("modulus mismatch")
    }
    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        a.checked_sub(b).expect("modulus mismatch")
    }
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        a.checked_mul(b).expect("modulus mismatch")
    }
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        a.neg()
    }
    fn inv(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement, FieldError> {
        if a.modulus != self.p {
            return Err(FieldError::ModulusMismatch(a.modulus, self.p));
        }
        a.inv()
    }
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.residue == 0
    }
    fn from_i64(&self, v: i64) -> PrimeFieldElement {
        self.elem(v)
    }
    fn from_rational(&self, q: &Rational) -> Option<PrimeFieldElement> {
        q.mod_p(self.p).map(|r| PrimeFieldElement { residue: r, modulus: self.p })
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
    fn format(&self, a: &PrimeFieldElement) -> String {
        a.residue.to_string()
    }
    fn parse(&self, s: &str) -> Result<PrimeFieldElement, FieldError> {
        let q: Rational = s.parse()?;
        self.from_rational(&q).ok_or(FieldError::NotIntegral { value: s.to_string(), modulus: self.p })
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }

    fn elements(&self) -> Vec<PrimeFieldElement> {
        (0..self.p).map(|r| PrimeFieldElement { residue: r, modulus: self.p }).collect()
    }
}

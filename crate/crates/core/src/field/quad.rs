use std::fmt;

use super::prime::inv_mod;
use super::{smallest_non_residue, Field, FieldDescriptor, FieldError, FiniteField, Rational};

/// Element `a + b·w` of F_{p²} = F_p(w), where `w² = d` for the fixed
/// non-residue `d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadExtElement {
    a: u64,
    b: u64,
    modulus: u64,
}

impl QuadExtElement {
    pub fn parts(&self) -> (u64, u64) {
        (self.a, self.b)
    }
}

impl fmt::Debug for QuadExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

/// Quadratic extension F_{p²} of an odd prime field, built with the smallest
/// quadratic non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadExtField {
    p: u64,
    d: u64,
}

impl QuadExtField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        let d = smallest_non_residue(p)?;
        Ok(Self { p, d })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn non_residue(&self) -> u64 {
        self.d
    }

    pub fn elem(&self, a: i64, b: i64) -> QuadExtElement {
        let p = self.p as i64;
        QuadExtElement { a: a.rem_euclid(p) as u64, b: b.rem_euclid(p) as u64, modulus: self.p }
    }

    fn check(&self, x: &QuadExtElement) {
        assert_eq!(x.modulus, self.p, "element of F_{}^2 used in F_{}^2", x.modulus, self.p);
    }
}

impl Field for QuadExtField {
    type Elem = QuadExtElement;

    fn zero(&self) -> QuadExtElement {
        self.elem(0, 0)
    }
    fn one(&self) -> QuadExtElement {
        self.elem(1, 0)
    }
    fn add(&self, x: &QuadExtElement, y: &QuadExtElement) -> QuadExtElement {
        self.check(x);
        self.check(y);
        let p = self.p;
        QuadExtElement { a: (x.a + y.a) % p, b: (x.b + y.b) % p, modulus: p }
    }
    fn sub(&self, x: &QuadExtElement, y: &QuadExtElement) -> QuadExtElement {
        self.add(x, &self.neg(y))
    }
    fn mul(&self, x: &QuadExtElement, y: &QuadExtElement) -> QuadExtElement {
        self.check(x);
        self.check(y);
        let p = self.p as u128;
        let (xa, xb, ya, yb) = (x.a as u128, x.b as u128, y.a as u128, y.b as u128);
        let a = (xa * ya + (xb * yb % p) * self.d as u128) % p;
        let b = (xa * yb + xb * ya) % p;
        QuadExtElement { a: a as u64, b: b as u64, modulus: self.p }
    }
    fn neg(&self, x: &QuadExtElement) -> QuadExtElement {
        self.check(x);
        let p = self.p;
        QuadExtElement { a: (p - x.a) % p, b: (p - x.b) % p, modulus: p }
    }
    fn inv(&self, x: &QuadExtElement) -> Result<QuadExtElement, FieldError> {
        if x.modulus != self.p {
            return Err(FieldError::ModulusMismatch(x.modulus, self.p));
        }
        // (a + bw)^-1 = (a - bw) / (a² - d b²); the norm vanishes only at 0.
        let p = self.p as u128;
        let norm = ((x.a as u128 * x.a as u128) % p + p - (self.d as u128 * ((x.b as u128 * x.b as u128) % p)) % p) % p;
        let ninv = inv_mod(norm as u64, self.p).ok_or(FieldError::DivisionByZero)?;
        let conj = self.elem(x.a as i64, -(x.b as i64));
        Ok(self.mul(&conj, &self.elem(ninv as i64, 0)))
    }
    fn is_zero(&self, x: &QuadExtElement) -> bool {
        x.a == 0 && x.b == 0
    }
    fn from_i64(&self, v: i64) -> QuadExtElement {
        self.elem(v, 0)
    }
    fn from_rational(&self, q: &Rational) -> Option<QuadExtElement> {
        q.mod_p(self.p).map(|r| self.elem(r as i64, 0))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::QuadExt(self.p)
    }
    fn format(&self, x: &QuadExtElement) -> String {
        format!("{x:?}")
    }

    /// Accepts `a`, `bw`, `a+bw` (the coefficients may be rationals).
    fn parse(&self, s: &str) -> Result<QuadExtElement, FieldError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || FieldError::Parse(s.to_string());
        let coeff = |part: &str| -> Result<QuadExtElement, FieldError> {
            let q: Rational = part.parse().map_err(|_| bad())?;
            self.from_rational(&q).ok_or(FieldError::NotIntegral { value: s.to_string(), modulus: self.p })
        };
        let w = |part: &str| -> Result<QuadExtElement, FieldError> {
            let c = match part.strip_suffix('w').ok_or_else(bad)? {
                "" | "+" => "1",
                "-" => "-1",
                c => c.strip_suffix('*').unwrap_or(c),
            };
            Ok(self.mul(&coeff(c)?, &self.elem(0, 1)))
        };
        if !t.ends_with('w') {
            return coeff(&t);
        }
        // split at the last sign that is not the leading one
        match t[1..].rfind(['+', '-']).map(|i| i + 1) {
            Some(i) => Ok(self.add(&coeff(&t[..i])?, &w(&t[i..])?)),
            None => w(&t),
        }
    }
}

impl FiniteField for QuadExtField {
    fn order(&self) -> u64 {
        self.p * self.p
    }

    fn elements(&self) -> Vec<QuadExtElement> {
        let mut out = Vec::with_capacity((self.p * self.p) as usize);
        for b in 0..self.p {
            for a in 0..self.p {
                out.push(QuadExtElement { a, b, modulus: self.p });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_in_f9_matches_exhaustive_search() {
        let f = QuadExtField::new(3).unwrap();
        assert_eq!(f.non_residue(), 2);
        let x = f.elem(1, 1);
        let oracle: Vec<_> = f.elements().into_iter().filter(|y| f.mul(&x, y) == f.one()).collect();
        assert_eq!(oracle.len(), 1);
        assert_eq!(f.inv(&x).unwrap(), oracle[0]);
        assert_eq!(oracle[0], f.elem(2, 1));
    }

    #[test]
    fn p_two_has_no_quadratic_extension_of_this_form() {
        assert_eq!(QuadExtField::new(2), Err(FieldError::NoNonResidue(2)));
    }

    #[test]
    fn parsing() {
        let f = QuadExtField::new(5).unwrap();
        assert_eq!(f.parse("3").unwrap(), f.elem(3, 0));
        assert_eq!(f.parse("2+3w").unwrap(), f.elem(2, 3));
        assert_eq!(f.parse("-w").unwrap(), f.elem(0, -1));
        assert_eq!(f.parse("1-2*w").unwrap(), f.elem(1, -2));
        assert_eq!(f.format(&f.elem(2, 3)), "2+3w");
        for x in f.elements() {
            assert_eq!(f.parse(&f.format(&x)).unwrap(), x);
        }
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for p in [3u64, 5, 7] {
            let f = QuadExtField::new(p).unwrap();
            for x in f.elements().into_iter().skip(1) {
                assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
            }
            assert_eq!(f.inv(&f.zero()), Err(FieldError::DivisionByZero));
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0i64..25, b in 0i64..25, c in 0i64..25, d in 0i64..25) {
            let f = QuadExtField::new(5).unwrap();
            let (x, y, z) = (f.elem(a, b), f.elem(c, d), f.elem(a + c, b * d));
            prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
            prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
            prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
            prop_assert!(f.is_zero(&f.add(&x, &f.neg(&x))));
        }
    }
}

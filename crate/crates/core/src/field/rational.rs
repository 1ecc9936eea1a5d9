use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, FieldDescriptor, FieldError};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    /// Residue modulo `p`, or `None` when `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let d = self.denom().mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        let n = self.numer().mod_floor(&pb).to_u64()?;
        let dinv = super::prime::inv_mod(d, p)?;
        Some(((n as u128 * dinv as u128) % p as u128) as u64)
    }

    /// Neither numerator nor denominator is divisible by `p`.
    pub fn is_unit_mod(&self, p: u64) -> bool {
        let pb = BigInt::from(p);
        !self.is_zero() && !self.numer().is_multiple_of(&pb) && !self.denom().is_multiple_of(&pb)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let parse_int = |x: &str| BigInt::from_str(x.trim()).map_err(|_| FieldError::Parse(s.to_string()));
        match t.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(Rational::from_bigints(parse_int(n)?, d))
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(t)?))),
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(v) => Ok(Rational::integer(v)),
        }
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Result<Rational, FieldError> {
        a.recip()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::integer(v)
    }
    fn from_rational(&self, q: &Rational) -> Option<Rational> {
        Some(q.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<Rational, FieldError> {
        s.parse()
    }
    fn is_unit_mod(&self, a: &Rational, p: u64) -> bool {
        a.is_unit_mod(p)
    }

    /// Primitive integer representative: clear denominators, divide by the
    /// gcd of the numerators, make the leading entry positive.
    fn normalize_coefficients(&self, coeffs: &mut [Rational]) -> Rational {
        let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) else {
            return Rational::one();
        };
        let negative = lead.0.is_negative();
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        let mut scale = Rational::from_bigints(lcm, gcd);
        if negative {
            scale = -scale;
        }
        for c in coeffs.iter_mut() {
            *c = &*c * &scale;
        }
        scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sums_and_inverses() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(q(2, 3).recip().unwrap(), q(3, 2));
        assert_eq!(Rational::zero().recip(), Err(FieldError::DivisionByZero));
        assert_eq!(q(0, 7), Rational::zero());
        assert_eq!(q(0, 7).denom(), &BigInt::one());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(q(-6, 4).to_string(), "-3/2");
        assert_eq!(q(4, 2).to_string(), "2");
        assert_eq!("3/-6".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!(" 7 ".parse::<Rational>().unwrap(), q(7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let v = vec![q(1, 2), q(-3, 1)];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["1/2","-3"]"#);
        let back: Vec<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        let ints: Vec<Rational> = serde_json::from_str("[2, \"5\"]").unwrap();
        assert_eq!(ints, vec![q(2, 1), q(5, 1)]);
    }

    #[test]
    fn reduction_mod_p() {
        assert_eq!(q(1, 2).mod_p(5), Some(3));
        assert_eq!(q(-1, 3).mod_p(7), Some(2));
        assert_eq!(q(1, 2).mod_p(2), None);
        assert!(!q(3, 2).is_unit_mod(3));
        assert!(q(3, 2).is_unit_mod(5));
    }

    #[test]
    fn primitive_normalization() {
        let mut cs = vec![q(-1, 2), q(0, 1), q(3, 4)];
        let s = RationalField.normalize_coefficients(&mut cs);
        assert_eq!(cs, vec![q(2, 1), q(0, 1), q(-3, 1)]);
        assert_eq!(s, q(-4, 1));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn canonical(x: &Rational) -> bool {
        use num_integer::Integer;
        x.denom() > &BigInt::zero() && x.numer().gcd(x.denom()) == BigInt::one()
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            let f = RationalField;
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
            for x in [f.add(&a, &b), f.sub(&a, &b), f.mul(&a, &b)] {
                prop_assert!(canonical(&x));
            }
        }

        #[test]
        fn reduction_is_a_homomorphism(a in arb_rational(), b in arb_rational(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            if let (Some(x), Some(y)) = (a.mod_p(p), b.mod_p(p)) {
                prop_assert_eq!((&a + &b).mod_p(p), Some((x + y) % p));
                prop_assert_eq!((&a * &b).mod_p(p), Some((x * y) % p));
            }
        }
    }
}

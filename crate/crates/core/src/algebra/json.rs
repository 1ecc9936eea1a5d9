use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError};
use crate::field::{Field, FieldDescriptor, PrimeField, QuadExtField, RationalField};

/// One nonzero product `[e_i, e_j] = Σ_k coeffs[k] e_k`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Coeff>,
}

/// Coefficients are written as strings; bare integers are accepted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Str(String),
    Int(i64),
}

impl Coeff {
    fn text(&self) -> String {
        match self {
            Coeff::Str(s) => s.clone(),
            Coeff::Int(v) => v.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub field: FieldDescriptor,
    #[serde(default)]
    pub products: Vec<ProductJson>,
}

impl AlgebraJson {
    pub fn from_algebra<F: Field>(alg: &Algebra<F>) -> Self {
        let f = alg.field();
        let mut grouped: BTreeMap<(usize, usize), BTreeMap<usize, Coeff>> = BTreeMap::new();
        for (i, j, k, c) in alg.nonzero_products() {
            grouped.entry((i, j)).or_default().insert(k, Coeff::Str(f.format(&c)));
        }
        AlgebraJson {
            name: alg.name().map(str::to_string),
            dim: alg.dim(),
            field: f.descriptor(),
            products: grouped.into_iter().map(|((i, j), coeffs)| ProductJson { i, j, coeffs }).collect(),
        }
    }

    pub fn to_algebra<F: Field>(&self, field: F) -> Result<Algebra<F>, AlgebraError> {
        let mut prods = Vec::new();
        for p in &self.products {
            for (&k, c) in &p.coeffs {
                prods.push((p.i, p.j, k, field.parse(&c.text())?));
            }
        }
        let alg = Algebra::from_products(field, self.dim, &prods)?;
        Ok(match &self.name {
            Some(n) => alg.with_name(n.clone()),
            None => alg,
        })
    }
}

/// An algebra over whichever field its JSON description names.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Rational(Algebra<RationalField>),
    Prime(Algebra<PrimeField>),
    QuadExt(Algebra<QuadExtField>),
}

impl AnyAlgebra {
    pub fn from_json_str(s: &str) -> Result<Self, AlgebraError> {
        let j: AlgebraJson = serde_json::from_str(s).map_err(|e| AlgebraError::Json(e.to_string()))?;
        Self::from_json(&j)
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self, AlgebraError> {
        Ok(match j.field {
            FieldDescriptor::Rationals => AnyAlgebra::Rational(j.to_algebra(RationalField)?),
            FieldDescriptor::Prime(p) => AnyAlgebra::Prime(j.to_algebra(PrimeField::new(p)?)?),
            FieldDescriptor::QuadExt(p) => AnyAlgebra::QuadExt(j.to_algebra(QuadExtField::new(p)?)?),
        })
    }

    pub fn to_json(&self) -> AlgebraJson {
        match self {
            AnyAlgebra::Rational(a) => AlgebraJson::from_algebra(a),
            AnyAlgebra::Prime(a) => AlgebraJson::from_algebra(a),
            AnyAlgebra::QuadExt(a) => AlgebraJson::from_algebra(a),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Rational(a) => a.dim(),
            AnyAlgebra::Prime(a) => a.dim(),
            AnyAlgebra::QuadExt(a) => a.dim(),
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            AnyAlgebra::Rational(a) => a.name(),
            AnyAlgebra::Prime(a) => a.name(),
            AnyAlgebra::QuadExt(a) => a.name(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn roundtrip_rational() {
        let a = Algebra::from_products(
            RationalField,
            3,
            &[(1, 1, 2, Rational::integer(1)), (1, 2, 3, Rational::new(1, 2)), (2, 1, 3, Rational::integer(1))],
        )
        .unwrap()
        .with_name("Z3_1");
        let j = AlgebraJson::from_algebra(&a);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"name":"Z3_1","dim":3,"field":"Q","products":[{"i":1,"j":1,"coeffs":{"2":"1"}},{"i":1,"j":2,"coeffs":{"3":"1/2"}},{"i":2,"j":1,"coeffs":{"3":"1"}}]}"#
        );
        let AnyAlgebra::Rational(b) = AnyAlgebra::from_json_str(&text).unwrap() else {
            panic!("wrong field");
        };
        assert_eq!(b.nonzero_products(), a.nonzero_products());
        assert_eq!(serde_json::to_string(&AlgebraJson::from_algebra(&b)).unwrap(), text);
    }

    #[test]
    fn prime_field_input_and_errors() {
        let text = r#"{"dim":2,"field":{"Fp":5},"products":[{"i":1,"j":1,"coeffs":{"2":"1/2"}}]}"#;
        let AnyAlgebra::Prime(a) = AnyAlgebra::from_json_str(text).unwrap() else {
            panic!("wrong field");
        };
        assert_eq!(a.constant(1, 1, 2).residue(), 3);
        let bad = r#"{"dim":2,"field":{"Fp":5},"products":[{"i":1,"j":3,"coeffs":{"2":1}}]}"#;
        assert!(matches!(AnyAlgebra::from_json_str(bad), Err(AlgebraError::IndexOutOfRange { .. })));
        assert!(matches!(AnyAlgebra::from_json_str("{"), Err(AlgebraError::Json(_))));
        let fp2 = r#"{"dim":1,"field":{"Fp2":3},"products":[]}"#;
        assert!(matches!(AnyAlgebra::from_json_str(fp2).unwrap(), AnyAlgebra::QuadExt(_)));
    }
}

//! Finite-dimensional algebras given by structure constants, with the
//! Zinbiel identity check and the structural operations built on top of it.
//!
//! Basis indices are 1-based wherever they cross the API boundary (product
//! lists, violation reports, JSON); coordinate vectors are plain slices.

mod json;
mod structure;
mod subspace;

use thiserror::Error;

use crate::field::{Field, FieldError, PrimeField, Rational, RationalField};

pub use json::{AlgebraJson, AnyAlgebra, Coeff, ProductJson};
pub use structure::{Quotient, SeriesKind, SeriesReport};
pub use subspace::{nullspace, rref, solve_affine, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("structure tensor has {got} entries, expected {expected}")]
    TensorShape { expected: usize, got: usize },
    #[error("not a Zinbiel algebra: {0}")]
    NotZinbiel(String),
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("supersolvability is only supported for nilpotent algebras")]
    NotNilpotent,
    #[error("structure constant {value} has no image modulo {p}")]
    BadPrime { p: u64, value: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid algebra JSON: {0}")]
    Json(String),
}

/// First basis triple `(i, j, k)` (1-based) where
/// `[[e_i,e_j],e_k] = [e_i,[e_j,e_k]] + [e_i,[e_k,e_j]]` fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZinbielViolation<F: Field> {
    pub triple: (usize, usize, usize),
    pub lhs: Vec<F::Elem>,
    pub rhs: Vec<F::Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Term<F: Field> {
    i: usize,
    j: usize,
    k: usize,
    c: F::Elem,
}

/// A finite-dimensional algebra `[e_i, e_j] = Σ_k c_{ij}^k e_k`.
///
/// Construction always runs the Zinbiel identity check. An algebra that
/// fails it can still be inspected, but [`Algebra::require_zinbiel`] (and
/// therefore every invariant computation) refuses it.
#[derive(Debug, Clone)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    constants: Vec<F::Elem>,
    terms: Vec<Term<F>>,
    name: Option<String>,
    params: Vec<(String, String)>,
    violation: Option<ZinbielViolation<F>>,
}

impl<F: Field> Algebra<F> {
    /// Build from the full `n³` tensor, indexed `(i * n + j) * n + k` with
    /// 0-based `i, j, k`.
    pub fn new(field: F, dim: usize, constants: Vec<F::Elem>) -> Result<Self, AlgebraError> {
        if constants.len() != dim * dim * dim {
            return Err(AlgebraError::TensorShape { expected: dim * dim * dim, got: constants.len() });
        }
        let mut terms = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let c = &constants[(i * dim + j) * dim + k];
                    if !field.is_zero(c) {
                        terms.push(Term { i, j, k, c: c.clone() });
                    }
                }
            }
        }
        let mut alg = Self { field, dim, constants, terms, name: None, params: Vec::new(), violation: None };
        alg.violation = alg.find_violation();
        Ok(alg)
    }

    /// Build from sparse products `(i, j, k, c)` meaning `[e_i, e_j] += c e_k`
    /// with 1-based indices. Absent products are zero.
    pub fn from_products(
        field: F,
        dim: usize,
        products: &[(usize, usize, usize, F::Elem)],
    ) -> Result<Self, AlgebraError> {
        let mut constants = vec![field.zero(); dim * dim * dim];
        for (i, j, k, c) in products {
            for &idx in [i, j, k] {
                if idx == 0 || idx > dim {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, dim });
                }
            }
            let slot = &mut constants[((i - 1) * dim + (j - 1)) * dim + (k - 1)];
            *slot = field.add(slot, c);
        }
        Self::new(field, dim, constants)
    }

    pub fn zero_algebra(field: F, dim: usize) -> Self {
        let constants = vec![field.zero(); dim * dim * dim];
        Self::new(field, dim, constants).expect("shape is correct")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_params(mut self, params: Vec<(String, String)>) -> Self {
        self.params = params;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn params(&self) -> &[(String, String)] {
        &self.params
    }

    /// `c_{ij}^k` with 1-based indices.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        let n = self.dim;
        &self.constants[((i - 1) * n + (j - 1)) * n + (k - 1)]
    }

    /// Nonzero products as `(i, j, k, c)`, 1-based, in lexicographic order.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, usize, F::Elem)> {
        self.terms.iter().map(|t| (t.i + 1, t.j + 1, t.k + 1, t.c.clone())).collect()
    }

    pub fn is_abelian_algebra(&self) -> bool {
        self.terms.is_empty()
    }

    /// The basis vector `e_i`, 1-based.
    pub fn e(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i - 1] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    /// `[x, y]`, with `z_k = Σ_{i,j} x_i y_j c_{ij}^k`.
    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>, AlgebraError> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: v.len() });
            }
        }
        Ok(self.mul(x, y))
    }

    /// Unchecked bilinear product; slices must have length `dim`.
    pub(crate) fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for t in &self.terms {
            let (a, b) = (&x[t.i], &y[t.j]);
            if f.is_zero(a) || f.is_zero(b) {
                continue;
            }
            out[t.k] = f.add(&out[t.k], &f.mul(&f.mul(a, b), &t.c));
        }
        out
    }

    pub fn is_zero_vector(&self, v: &[F::Elem]) -> bool {
        v.iter().all(|x| self.field.is_zero(x))
    }

    pub fn add_vectors(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn scale_vector(&self, c: &F::Elem, x: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    fn find_violation(&self) -> Option<ZinbielViolation<F>> {
        let n = self.dim;
        let basis: Vec<Vec<F::Elem>> = (1..=n).map(|i| self.e(i)).collect();
        let prods: Vec<Vec<Vec<F::Elem>>> =
            (0..n).map(|i| (0..n).map(|j| self.mul(&basis[i], &basis[j])).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(&prods[i][j], &basis[k]);
                    let rhs = self.add_vectors(&self.mul(&basis[i], &prods[j][k]), &self.mul(&basis[i], &prods[k][j]));
                    if lhs != rhs {
                        return Some(ZinbielViolation { triple: (i + 1, j + 1, k + 1), lhs, rhs });
                    }
                }
            }
        }
        None
    }

    /// Whether the Zinbiel identity holds on all basis triples (which
    /// suffices by trilinearity), with the first violation otherwise.
    pub fn check_zinbiel(&self) -> Result<(), ZinbielViolation<F>> {
        match &self.violation {
            None => Ok(()),
            Some(v) => Err(v.clone()),
        }
    }

    pub fn is_zinbiel(&self) -> bool {
        self.violation.is_none()
    }

    pub fn require_zinbiel(&self) -> Result<(), AlgebraError> {
        match &self.violation {
            None => Ok(()),
            Some(v) => Err(AlgebraError::NotZinbiel(self.describe_violation(v))),
        }
    }

    pub fn describe_violation(&self, v: &ZinbielViolation<F>) -> String {
        let (i, j, k) = v.triple;
        format!(
            "[[e{i},e{j}],e{k}] = {} but [e{i},[e{j},e{k}]] + [e{i},[e{k},e{j}]] = {}",
            self.format_vector(&v.lhs),
            self.format_vector(&v.rhs)
        )
    }

    /// Human-readable `a e1 + b e2 ...` form.
    pub fn format_vector(&self, v: &[F::Elem]) -> String {
        let f = &self.field;
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| if f.is_one(c) { format!("e{}", i + 1) } else { format!("({})e{}", f.format(c), i + 1) })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Image of the algebra under a coefficient map, keeping name and
    /// parameters.
    pub fn map_field<G: Field>(
        &self,
        target: G,
        f: impl Fn(&F::Elem) -> Option<G::Elem>,
    ) -> Result<Algebra<G>, AlgebraError> {
        let mut constants = Vec::with_capacity(self.constants.len());
        for c in &self.constants {
            match f(c) {
                Some(x) => constants.push(x),
                None => return Err(AlgebraError::BadPrime { p: target.characteristic(), value: self.field.format(c) }),
            }
        }
        let mut alg = Algebra::new(target, self.dim, constants)?;
        alg.name = self.name.clone();
        alg.params = self.params.clone();
        Ok(alg)
    }
}

impl Algebra<RationalField> {
    /// Reduction modulo `p`; fails when `p` divides a denominator.
    pub fn reduce_mod(&self, p: u64) -> Result<Algebra<PrimeField>, AlgebraError> {
        let fp = PrimeField::new(p)?;
        self.map_field(fp, |q| fp.from_rational(q))
    }

    /// Reduction into any field that accepts rationals (F_p, F_{p²}).
    pub fn reduce_into<G: Field>(&self, target: G) -> Result<Algebra<G>, AlgebraError> {
        let t = target.clone();
        self.map_field(target, move |q: &Rational| t.from_rational(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn z31() -> Algebra<RationalField> {
        Algebra::from_products(RationalField, 3, &[(1, 1, 2, q(1)), (1, 2, 3, Rational::new(1, 2)), (2, 1, 3, q(1))])
            .unwrap()
    }

    #[test]
    fn products_follow_structure_constants() {
        let a = z31();
        assert_eq!(a.product(&a.e(1), &a.e(2)).unwrap(), vec![q(0), q(0), Rational::new(1, 2)]);
        assert_eq!(a.product(&a.zero_vector(), &a.e(1)).unwrap(), a.zero_vector());
        assert_eq!(a.product(&a.e(1), &[q(1)]), Err(AlgebraError::DimensionMismatch { expected: 3, got: 1 }));
    }

    #[test]
    fn zinbiel_identity_check() {
        assert!(z31().is_zinbiel());
        assert!(Algebra::zero_algebra(RationalField, 4).is_zinbiel());
        let bad = Algebra::from_products(RationalField, 1, &[(1, 1, 1, q(1))]).unwrap();
        let v = bad.check_zinbiel().unwrap_err();
        assert_eq!(v.triple, (1, 1, 1));
        assert_eq!(v.lhs, vec![q(1)]);
        assert_eq!(v.rhs, vec![q(2)]);
        assert!(matches!(bad.require_zinbiel(), Err(AlgebraError::NotZinbiel(_))));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Algebra::from_products(RationalField, 2, &[(1, 3, 1, q(1))]),
            Err(AlgebraError::IndexOutOfRange { index: 3, dim: 2 })
        ));
        assert!(matches!(
            Algebra::new(RationalField, 2, vec![q(0); 7]),
            Err(AlgebraError::TensorShape { expected: 8, got: 7 })
        ));
    }

    #[test]
    fn reduction_mod_p() {
        let a = z31();
        assert!(matches!(a.reduce_mod(2), Err(AlgebraError::BadPrime { p: 2, .. })));
        let a5 = a.reduce_mod(5).unwrap();
        assert_eq!(a5.constant(1, 2, 3).residue(), 3);
        assert!(a5.is_zinbiel());
    }
}

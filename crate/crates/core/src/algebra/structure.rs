use serde::Serialize;

use super::{Algebra, AlgebraError, Subspace};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// `Z¹ ⊇ Z² ⊇ …` (or the derived terms) up to stabilization. When the series
/// stops at a nonzero term, that term appears twice at the end.
#[derive(Debug, Clone)]
pub struct SeriesReport<F: Field> {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace<F>>,
    pub stabilized: bool,
    /// Smallest `k` with the `k`-th term zero.
    pub index: Option<usize>,
}

impl<F: Field> SeriesReport<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    pub fn reaches_zero(&self) -> bool {
        self.index.is_some()
    }
}

/// `Z / I` on the complement spanned by the standard coordinates outside
/// the pivot set of `I`.
#[derive(Debug, Clone)]
pub struct Quotient<F: Field> {
    pub algebra: Algebra<F>,
    pub ideal: Subspace<F>,
    /// 0-based coordinates of the parent algebra kept by the quotient.
    pub complement: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn project(&self, parent_field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.ideal.reduce(parent_field, v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    /// Coset representative supported on the complement coordinates.
    pub fn lift(&self, parent_field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![parent_field.zero(); self.ideal.ambient_dim()];
        for (x, &c) in v.iter().zip(&self.complement) {
            out[c] = x.clone();
        }
        out
    }
}

impl<F: Field> Algebra<F> {
    pub fn subspace(&self, vectors: &[Vec<F::Elem>]) -> Subspace<F> {
        Subspace::from_vectors(self.field(), self.dim(), vectors)
    }

    pub fn whole(&self) -> Subspace<F> {
        Subspace::full(self.field(), self.dim())
    }

    /// `[U, V]`, the span of all products of basis vectors.
    pub fn subspace_product(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut prods = Vec::with_capacity(u.dim() * v.dim());
        for a in u.rows() {
            for b in v.rows() {
                let p = self.mul(a, b);
                if !self.is_zero_vector(&p) {
                    prods.push(p);
                }
            }
        }
        self.subspace(&prods)
    }

    fn series(&self, kind: SeriesKind) -> SeriesReport<F> {
        let whole = self.whole();
        let mut terms = vec![whole.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::LowerCentral => self.subspace_product(&whole, last),
                SeriesKind::Derived => self.subspace_product(last, last),
            };
            let repeated = &next == last;
            terms.push(next);
            if repeated {
                break;
            }
        }
        let index = terms.iter().position(|t| t.is_zero()).map(|i| i + 1);
        SeriesReport { kind, terms, stabilized: true, index }
    }

    /// `Z¹ = Z`, `Z^{k+1} = [Z, Z^k]`.
    pub fn lower_central_series(&self) -> SeriesReport<F> {
        self.series(SeriesKind::LowerCentral)
    }

    /// `Z^{(1)} = Z`, `Z^{(k+1)} = [Z^{(k)}, Z^{(k)}]`.
    pub fn derived_series(&self) -> SeriesReport<F> {
        self.series(SeriesKind::Derived)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().reaches_zero()
    }

    /// `{x : [x, e_j] = [e_j, x] = 0 for all j}`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        let f = self.field();
        // x ↦ [x, e_j] and x ↦ [e_j, x] are linear; one equation per output
        // coordinate k.
        let mut eqs = Vec::with_capacity(2 * n * n);
        for j in 1..=n {
            for k in 1..=n {
                eqs.push((1..=n).map(|i| self.constant(i, j, k).clone()).collect::<Vec<_>>());
                eqs.push((1..=n).map(|i| self.constant(j, i, k).clone()).collect::<Vec<_>>());
            }
        }
        eqs.retain(|r: &Vec<F::Elem>| r.iter().any(|x| !f.is_zero(x)));
        let basis = super::nullspace(f, eqs, n);
        self.subspace(&basis)
    }

    pub fn is_subalgebra(&self, u: &Subspace<F>) -> bool {
        let f = self.field();
        u.rows().iter().all(|a| u.rows().iter().all(|b| u.contains(f, &self.mul(a, b))))
    }

    pub fn is_ideal(&self, u: &Subspace<F>) -> bool {
        let f = self.field();
        u.rows().iter().all(|a| {
            (1..=self.dim()).all(|j| {
                let e = self.e(j);
                u.contains(f, &self.mul(a, &e)) && u.contains(f, &self.mul(&e, a))
            })
        })
    }

    pub fn is_abelian(&self, u: &Subspace<F>) -> bool {
        u.rows().iter().all(|a| u.rows().iter().all(|b| self.is_zero_vector(&self.mul(a, b))))
    }

    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>, AlgebraError> {
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotIdeal);
        }
        let f = self.field();
        let complement: Vec<usize> = (0..self.dim()).filter(|c| !ideal.pivots().contains(c)).collect();
        let m = complement.len();
        let mut constants = vec![f.zero(); m * m * m];
        let mut q = Quotient { algebra: Algebra::zero_algebra(f.clone(), 0), ideal: ideal.clone(), complement };
        for a in 0..m {
            for b in 0..m {
                let x = self.e(q.complement[a] + 1);
                let y = self.e(q.complement[b] + 1);
                let z = q.project(f, &self.mul(&x, &y));
                for (k, c) in z.into_iter().enumerate() {
                    constants[(a * m + b) * m + k] = c;
                }
            }
        }
        let mut alg = Algebra::new(f.clone(), m, constants)?;
        if let Some(name) = self.name() {
            alg = alg.with_name(format!("{name}/I"));
        }
        q.algebra = alg;
        Ok(q)
    }

    /// A full flag `0 = Z_0 ⊂ Z_1 ⊂ … ⊂ Z_n = Z` of ideals, built by adjoining
    /// a central element of `Z / Z_i` at each step. Only nilpotent algebras
    /// are accepted. `None` means the greedy construction got stuck.
    pub fn supersolvable_flag(&self) -> Result<Option<Vec<Subspace<F>>>, AlgebraError> {
        if !self.is_nilpotent() {
            return Err(AlgebraError::NotNilpotent);
        }
        let f = self.field();
        let mut flag = vec![Subspace::zero(self.dim())];
        while flag.last().expect("nonempty").dim() < self.dim() {
            let cur = flag.last().expect("nonempty").clone();
            let q = self.quotient(&cur)?;
            let cen = q.algebra.center();
            let Some(v) = cen.rows().last() else {
                return Ok(None);
            };
            let next = cur.with_vector(f, &q.lift(f, v));
            debug_assert!(self.is_ideal(&next));
            flag.push(next);
        }
        Ok(Some(flag))
    }

    pub fn is_supersolvable(&self) -> Result<bool, AlgebraError> {
        Ok(self.supersolvable_flag()?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn qv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn nf(n: usize) -> Algebra<RationalField> {
        let binom = |a: usize, b: usize| (0..b).fold(1i64, |acc, t| acc * (a - t) as i64 / (t + 1) as i64);
        let mut prods = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i + j <= n {
                    prods.push((i, j, i + j, q(binom(i + j - 1, j))));
                }
            }
        }
        Algebra::from_products(RationalField, n, &prods).unwrap()
    }

    fn z31() -> Algebra<RationalField> {
        Algebra::from_products(RationalField, 3, &[(1, 1, 2, q(1)), (1, 2, 3, Rational::new(1, 2)), (2, 1, 3, q(1))])
            .unwrap()
    }

    #[test]
    fn derived_algebra_of_z31() {
        let a = z31();
        let d = a.subspace_product(&a.whole(), &a.whole());
        assert_eq!(d, a.subspace(&[a.e(2), a.e(3)]));
        assert!(a.subspace_product(&a.whole(), &Subspace::zero(3)).is_zero());
    }

    #[test]
    fn null_filiform_series() {
        let a = nf(5);
        assert!(a.is_zinbiel());
        let s = a.lower_central_series();
        assert_eq!(s.dims(), vec![5, 4, 3, 2, 1, 0]);
        assert_eq!(s.index, Some(6));
        assert_eq!(a.center(), a.subspace(&[a.e(5)]));
        let flag = a.supersolvable_flag().unwrap().unwrap();
        for (i, term) in flag.iter().enumerate() {
            assert_eq!(term.dim(), i);
            assert!(a.is_ideal(term));
            let tail: Vec<_> = (5 - i + 1..=5).map(|k| a.e(k)).collect();
            assert_eq!(term, &a.subspace(&tail));
        }
    }

    #[test]
    fn abelian_algebra() {
        let a = Algebra::zero_algebra(RationalField, 3);
        assert_eq!(a.lower_central_series().dims(), vec![3, 0]);
        assert_eq!(a.center(), a.whole());
        assert!(a.is_abelian(&a.whole()));
        assert!(a.is_supersolvable().unwrap());
    }

    #[test]
    fn non_nilpotent_is_refused() {
        // e1² = e1 is not nilpotent, so the flag construction refuses it
        let a = Algebra::from_products(RationalField, 1, &[(1, 1, 1, q(1))]).unwrap();
        assert_eq!(a.lower_central_series().dims(), vec![1, 1]);
        assert_eq!(a.lower_central_series().index, None);
        assert!(matches!(a.supersolvable_flag(), Err(AlgebraError::NotNilpotent)));
    }

    #[test]
    fn quotient_of_nf4() {
        let a = nf(4);
        let z3 = a.lower_central_series().terms[2].clone();
        let q4 = a.quotient(&z3).unwrap();
        assert_eq!(q4.complement, vec![0, 1]);
        assert_eq!(q4.algebra.nonzero_products(), vec![(1, 1, 2, q(1))]);
        assert!(a.quotient(&a.whole()).unwrap().algebra.dim() == 0);
        let line = a.subspace(&[qv(&[1, 0, 0, 0])]);
        assert!(matches!(a.quotient(&line), Err(AlgebraError::NotIdeal)));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let a = nf(5);
        let i = a.subspace(&[a.e(4), a.e(5)]);
        let qt = a.quotient(&i).unwrap();
        let f = RationalField;
        for x in 1..=5 {
            for y in 1..=5 {
                let lhs = qt.project(&f, &a.mul(&a.e(x), &a.e(y)));
                let rhs = qt.algebra.mul(&qt.project(&f, &a.e(x)), &qt.project(&f, &a.e(y)));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

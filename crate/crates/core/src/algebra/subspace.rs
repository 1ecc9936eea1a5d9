//! Exact Gaussian elimination and canonical (RREF) subspaces.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::field::Field;

/// Reduce `rows` to reduced row-echelon form, dropping zero rows. Returns the
/// nonzero rows and their pivot columns.
pub fn rref<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(src) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, src);
        let inv = field.inv(&rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&f, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : A x = 0}` for the equation rows `A` (each of length `ncols`).
/// The basis vectors are the standard ones attached to the free columns.
pub fn nullspace<F: Field>(field: &F, equations: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let (rows, pivots) = rref(field, equations, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect()
}

/// Solution set `{particular + span(directions)}` of `A x = b`, or `None` if
/// the system is inconsistent.
pub fn solve_affine<F: Field>(
    field: &F,
    equations: &[Vec<F::Elem>],
    rhs: &[F::Elem],
    ncols: usize,
) -> Option<(Vec<F::Elem>, Vec<Vec<F::Elem>>)> {
    let augmented: Vec<Vec<F::Elem>> = equations
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (rows, pivots) = rref(field, augmented, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut particular = vec![field.zero(); ncols];
    for (row, &pc) in rows.iter().zip(&pivots) {
        particular[pc] = row[ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let directions = free
        .iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect();
    Some((particular, directions))
}

/// A linear subspace of F^n stored by its reduced row-echelon basis, which is
/// a canonical representative: two subspaces are equal iff their bases are.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Hash for Subspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rows.hash(state);
    }
}

/// Lexicographic order on the RREF basis matrices (fewer rows first).
impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.rows.len(), &self.rows).cmp(&(other.ambient, other.rows.len(), &other.rows))
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Self { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length differs from ambient dimension");
        let (rows, pivots) = rref(field, vectors.to_vec(), ambient);
        Self { ambient, rows, pivots }
    }

    /// Span of the standard basis vectors at the given 0-based coordinates.
    pub fn coordinate(field: &F, ambient: usize, coords: &[usize]) -> Self {
        let vs: Vec<Vec<F::Elem>> = coords
            .iter()
            .map(|&c| (0..ambient).map(|j| if j == c { field.one() } else { field.zero() }).collect())
            .collect();
        Self::from_vectors(field, ambient, &vs)
    }

    /// Wrap rows that are already in reduced row-echelon form.
    pub(crate) fn from_rref_unchecked(ambient: usize, rows: Vec<Vec<F::Elem>>, pivots: Vec<usize>) -> Self {
        Self { ambient, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// 0-based pivot columns, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if field.is_zero(&out[pc]) {
                continue;
            }
            let f = out[pc].clone();
            for (x, r) in out.iter_mut().zip(row).skip(pc) {
                if !field.is_zero(r) {
                    *x = field.sub(x, &field.mul(&f, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    pub fn is_subspace_of(&self, field: &F, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(field, r))
    }

    pub fn sum(&self, field: &F, other: &Self) -> Self {
        let mut vs = self.rows.clone();
        vs.extend(other.rows.iter().cloned());
        Self::from_vectors(field, self.ambient, &vs)
    }

    pub fn with_vector(&self, field: &F, v: &[F::Elem]) -> Self {
        let mut vs = self.rows.clone();
        vs.push(v.to_vec());
        Self::from_vectors(field, self.ambient, &vs)
    }

    /// Coordinates of `v` in the RREF basis (read off the pivot entries), or
    /// `None` if `v` is not in the subspace.
    pub fn coordinates(&self, field: &F, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(field, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Image under a coefficient map (e.g. reduction mod p). Returns `None` if
    /// some entry has no image. The result is re-reduced, so it may have
    /// smaller dimension when pivots collapse.
    pub fn map_field<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Subspace<G>> {
        let rows: Option<Vec<Vec<G::Elem>>> =
            self.rows.iter().map(|r| r.iter().map(&f).collect::<Option<Vec<_>>>()).collect();
        Some(Subspace::from_vectors(target, self.ambient, &rows?))
    }

    pub fn format(&self, field: &F) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(|x| field.format(x)).collect::<Vec<_>>().join(",")))
            .collect();
        format!("span{{{}}}", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rational, RationalField};
    use proptest::prelude::*;

    fn qv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::integer(x)).collect()
    }

    fn is_rref(s: &Subspace<RationalField>) -> bool {
        let f = RationalField;
        s.pivots.windows(2).all(|w| w[0] < w[1])
            && s.rows.iter().zip(&s.pivots).all(|(row, &p)| f.is_one(&row[p]) && row[..p].iter().all(|x| x.is_zero()))
            && s.pivots
                .iter()
                .enumerate()
                .all(|(i, &p)| s.rows.iter().enumerate().all(|(j, r)| i == j || r[p].is_zero()))
    }

    #[test]
    fn span_examples() {
        let f = RationalField;
        let s = Subspace::from_vectors(&f, 3, &[qv(&[1, 0, 0]), qv(&[1, 1, 0])]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.rows(), &[qv(&[1, 0, 0]), qv(&[0, 1, 0])]);

        let z = Subspace::from_vectors(&f, 3, &[qv(&[0, 0, 0])]);
        assert_eq!(z.dim(), 0);

        let d = Subspace::from_vectors(&f, 3, &[qv(&[1, 2, 3]), qv(&[2, 4, 6])]);
        assert_eq!(d.dim(), 1);
        assert_eq!(d.rows(), &[qv(&[1, 2, 3])]);
    }

    #[test]
    fn nullspace_and_affine_solutions() {
        let f = RationalField;
        let ns = nullspace(&f, vec![qv(&[1, 1, 0]), qv(&[0, 0, 1])], 3);
        assert_eq!(ns, vec![qv(&[-1, 1, 0])]);
        let (x0, dirs) = solve_affine(&f, &[qv(&[1, 1, 0])], &qv(&[2]), 3).unwrap();
        assert_eq!(x0, qv(&[2, 0, 0]));
        assert_eq!(dirs.len(), 2);
        assert!(solve_affine(&f, &[qv(&[1, 1]), qv(&[2, 2])], &qv(&[1, 3]), 2).is_none());
    }

    #[test]
    fn membership_over_prime_field() {
        let f = PrimeField::new(3).unwrap();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.elem(x)).collect::<Vec<_>>();
        let s = Subspace::from_vectors(&f, 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        assert!(s.contains(&f, &v(&[1, 2, 1])));
        assert!(!s.contains(&f, &v(&[1, 0, 0])));
    }

    proptest! {
        #[test]
        fn canonical_and_order_independent(
            raw in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 0..5)
        ) {
            let f = RationalField;
            let vs: Vec<Vec<Rational>> = raw.iter().map(|r| qv(r)).collect();
            let s = Subspace::from_vectors(&f, 4, &vs);
            prop_assert!(is_rref(&s));
            let mut rev = vs.clone();
            rev.reverse();
            prop_assert_eq!(&Subspace::from_vectors(&f, 4, &rev), &s);
            prop_assert_eq!(&Subspace::from_vectors(&f, 4, s.rows()), &s);
            for v in &vs {
                prop_assert!(s.contains(&f, v));
            }
        }
    }
}

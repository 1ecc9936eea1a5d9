use crate::algebra::Subspace;
use crate::field::FiniteField;

use super::InvariantError;

/// Default refusal threshold for exhaustive subspace enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// `[n choose d]_q`, the number of `d`-dimensional subspaces of F_q^n, by the
/// q-Pascal recurrence `[n,k] = [n−1,k−1] + q^k [n−1,k]`. Saturates at
/// `u128::MAX`.
pub fn gaussian_binomial(n: usize, d: usize, q: u64) -> u128 {
    if d > n {
        return 0;
    }
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        let mut qk = 1u128;
        for k in 1..m {
            qk = qk.saturating_mul(q as u128);
            next[k] = row[k - 1].saturating_add(qk.saturating_mul(row[k]));
        }
        row = next;
    }
    row[d]
}

/// Pivot columns (0-based, increasing) of a reduced row-echelon basis of a
/// `d`-dimensional subspace of an `ncols`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EchelonPattern {
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl EchelonPattern {
    /// `(row, column)` positions that are free in this pattern: right of the
    /// row's pivot and not a pivot column.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.ncols {
                if !self.pivots.contains(&c) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    pub fn num_free(&self) -> usize {
        self.free_positions().len()
    }
}

/// All `C(ncols, d)` patterns in lexicographic order of pivot sets.
pub fn echelon_patterns(ncols: usize, d: usize) -> Vec<EchelonPattern> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, ncols: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<EchelonPattern>) {
        if cur.len() == d {
            out.push(EchelonPattern { pivots: cur.clone(), ncols });
            return;
        }
        for c in start..ncols {
            if ncols - c < d - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, ncols, d, cur, out);
            cur.pop();
        }
    }
    if d <= ncols {
        rec(0, ncols, d, &mut cur, &mut out);
    }
    out
}

/// Assignments of `k` entries from `elems`, odometer order (last entry
/// fastest).
pub(crate) fn assignments<E: Clone>(elems: Vec<E>, k: usize) -> impl Iterator<Item = Vec<E>> {
    let q = elems.len();
    let mut idx = vec![0usize; k];
    let mut done = q == 0 && k > 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: Vec<E> = idx.iter().map(|&i| elems[i].clone()).collect();
        // advance
        let mut pos = k;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < q {
                break;
            }
            idx[pos] = 0;
        }
        Some(out)
    })
}

fn pattern_subspaces<F: FiniteField>(field: F, pat: EchelonPattern) -> impl Iterator<Item = Subspace<F>> {
    let free = pat.free_positions();
    let elems = field.elements();
    let n = pat.ncols;
    assignments(elems, free.len()).map(move |vals| {
        let mut rows: Vec<Vec<F::Elem>> = pat
            .pivots
            .iter()
            .map(|&p| {
                let mut r = vec![field.zero(); n];
                r[p] = field.one();
                r
            })
            .collect();
        for (&(r, c), v) in free.iter().zip(vals) {
            rows[r][c] = v;
        }
        Subspace::from_rref_unchecked(n, rows, pat.pivots.clone())
    })
}

/// Every `d`-dimensional subspace of F^n exactly once, pattern by pattern.
/// Refuses when the Gaussian binomial exceeds `cap`.
pub fn enumerate_subspaces_fp<F: FiniteField>(
    field: &F,
    n: usize,
    d: usize,
    cap: u128,
) -> Result<impl Iterator<Item = Subspace<F>>, InvariantError> {
    let count = gaussian_binomial(n, d, field.order());
    if count > cap {
        return Err(InvariantError::EnumerationTooLarge { n, d, q: field.order(), count, cap });
    }
    let f = field.clone();
    Ok(echelon_patterns(n, d).into_iter().flat_map(move |pat| pattern_subspaces(f.clone(), pat)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, QuadExtField};
    use num_bigint::BigUint;
    use std::collections::HashSet;

    /// Product formula `Π_{i<d} (q^{n−i} − 1) / (q^{i+1} − 1)`.
    fn product_formula(n: usize, d: usize, q: u64) -> BigUint {
        let q = BigUint::from(q);
        let one = BigUint::from(1u32);
        let mut num = one.clone();
        let mut den = one.clone();
        for i in 0..d {
            num *= q.pow((n - i) as u32) - &one;
            den *= q.pow((i + 1) as u32) - &one;
        }
        num / den
    }

    #[test]
    fn binomial_values() {
        assert_eq!(gaussian_binomial(5, 4, 2), 31);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(3, 3, 7), 1);
        assert_eq!(gaussian_binomial(3, 4, 7), 0);
        for n in 0..=9 {
            for d in 0..=n {
                for q in [2u64, 3, 5, 7, 11] {
                    assert_eq!(BigUint::from(gaussian_binomial(n, d, q)), product_formula(n, d, q));
                }
            }
        }
    }

    #[test]
    fn pattern_counts() {
        assert_eq!(echelon_patterns(6, 4).len(), 15);
        assert_eq!(echelon_patterns(5, 0).len(), 1);
        let p = EchelonPattern { pivots: vec![0, 2], ncols: 4 };
        assert_eq!(p.free_positions(), vec![(0, 1), (0, 3), (1, 3)]);
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        for p in [2u64, 3] {
            let f = PrimeField::new(p).unwrap();
            for n in 0..=4 {
                for d in 0..=n {
                    let all: Vec<_> = enumerate_subspaces_fp(&f, n, d, DEFAULT_ENUMERATION_CAP).unwrap().collect();
                    let distinct: HashSet<_> = all.iter().cloned().collect();
                    assert_eq!(all.len() as u128, gaussian_binomial(n, d, p));
                    assert_eq!(distinct.len(), all.len());
                    assert!(all.iter().all(|s| s.dim() == d));
                    // stored basis really is the canonical one
                    assert!(all.iter().all(|s| Subspace::from_vectors(&f, n, s.rows()) == *s));
                }
            }
        }
        let f9 = QuadExtField::new(3).unwrap();
        assert_eq!(enumerate_subspaces_fp(&f9, 3, 1, DEFAULT_ENUMERATION_CAP).unwrap().count(), 91);
    }

    #[test]
    fn cap_is_enforced() {
        let f = PrimeField::new(5).unwrap();
        match enumerate_subspaces_fp(&f, 8, 4, 1000) {
            Err(InvariantError::EnumerationTooLarge { count, .. }) => assert_eq!(count, gaussian_binomial(8, 4, 5)),
            _ => panic!("expected refusal"),
        }
    }
}

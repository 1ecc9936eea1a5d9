//! Exhaustive searches over finite fields.
//!
//! Abelian subalgebras are found by backtracking over reduced row-echelon
//! bases, choosing rows from the largest pivot down. A new row must
//! commute (both ways) with the rows already chosen, which is a linear
//! condition, and square to zero.
//!
//! Abelian ideals are found level by level: in a nilpotent algebra every
//! ideal `I'` has an ideal `I ⊂ I'` of codimension one, and `I'/I` is then a
//! central line of `Z/I`.

use std::collections::BTreeSet;

use crate::algebra::{solve_affine, Algebra, Subspace};
use crate::field::FiniteField;

use super::enumerate::assignments;
use super::InvariantError;

/// Default limit on backtracking nodes per search.
pub const DEFAULT_NODE_CAP: u64 = 20_000_000;

/// Default limit on the number of ideals held in one level of the ideal
/// search.
pub const DEFAULT_LEVEL_CAP: usize = 2_000_000;

pub struct SubalgebraSearch<'a, F: FiniteField> {
    alg: &'a Algebra<F>,
    base: Subspace<F>,
    complement: Vec<usize>,
    elems: Vec<F::Elem>,
    node_cap: u64,
}

impl<'a, F: FiniteField> SubalgebraSearch<'a, F> {
    /// Searches abelian subspaces containing `base`, which must be central.
    pub fn new(alg: &'a Algebra<F>, base: Subspace<F>, node_cap: u64) -> Self {
        let complement = (0..alg.dim()).filter(|c| !base.pivots().contains(c)).collect();
        let elems = alg.field().elements();
        Self { alg, base, complement, elems, node_cap }
    }

    /// Abelian subspaces of dimension `d` containing the base, in search
    /// order, stopping after `limit` of them (`None` = all).
    pub fn find(&self, d: usize, limit: Option<usize>) -> Result<Vec<Subspace<F>>, InvariantError> {
        let mut out = Vec::new();
        if d < self.base.dim() || d > self.alg.dim() {
            return Ok(out);
        }
        let mut nodes = 0u64;
        self.dfs(
            &mut Vec::new(),
            &mut Vec::new(),
            self.complement.len(),
            d - self.base.dim(),
            limit,
            &mut out,
            &mut nodes,
        )?;
        Ok(out)
    }

    pub fn exists(&self, d: usize) -> Result<bool, InvariantError> {
        Ok(!self.find(d, Some(1))?.is_empty())
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        rows: &mut Vec<Vec<F::Elem>>,
        chosen: &mut Vec<usize>,
        upper: usize,
        need: usize,
        limit: Option<usize>,
        out: &mut Vec<Subspace<F>>,
        nodes: &mut u64,
    ) -> Result<bool, InvariantError> {
        let f = self.alg.field();
        let n = self.alg.dim();
        if need == 0 {
            let mut vs = self.base.rows().to_vec();
            vs.extend(rows.iter().cloned());
            out.push(Subspace::from_vectors(f, n, &vs));
            return Ok(limit.is_some_and(|l| out.len() >= l));
        }
        for q in (need - 1..upper).rev() {
            *nodes += 1;
            if *nodes > self.node_cap {
                return Err(InvariantError::SearchBudget { nodes: *nodes });
            }
            let free: Vec<usize> = (q + 1..self.complement.len()).filter(|j| !chosen.contains(j)).collect();
            let basis_vec = |pos: usize| self.alg.e(self.complement[pos] + 1);
            let pivot = basis_vec(q);
            // [x, s] = 0 and [s, x] = 0 for every chosen s, as equations in the
            // free entries y of x = e_pivot + Σ y_j e_j
            let mut eqs = Vec::new();
            let mut rhs = Vec::new();
            for s in rows.iter() {
                let lp = self.alg.mul(&pivot, s);
                let rp = self.alg.mul(s, &pivot);
                let lcols: Vec<Vec<F::Elem>> = free.iter().map(|&j| self.alg.mul(&basis_vec(j), s)).collect();
                let rcols: Vec<Vec<F::Elem>> = free.iter().map(|&j| self.alg.mul(s, &basis_vec(j))).collect();
                for k in 0..n {
                    let lrow: Vec<F::Elem> = lcols.iter().map(|c| c[k].clone()).collect();
                    if !f.is_zero(&lp[k]) || lrow.iter().any(|x| !f.is_zero(x)) {
                        eqs.push(lrow);
                        rhs.push(f.neg(&lp[k]));
                    }
                    let rrow: Vec<F::Elem> = rcols.iter().map(|c| c[k].clone()).collect();
                    if !f.is_zero(&rp[k]) || rrow.iter().any(|x| !f.is_zero(x)) {
                        eqs.push(rrow);
                        rhs.push(f.neg(&rp[k]));
                    }
                }
            }
            let Some((y0, dirs)) = solve_affine(f, &eqs, &rhs, free.len()) else {
                continue;
            };
            for coeffs in assignments(self.elems.clone(), dirs.len()) {
                let mut y = y0.clone();
                for (c, d) in coeffs.iter().zip(&dirs) {
                    if f.is_zero(c) {
                        continue;
                    }
                    for (yi, di) in y.iter_mut().zip(d) {
                        *yi = f.add(yi, &f.mul(c, di));
                    }
                }
                let mut x = pivot.clone();
                for (&j, yj) in free.iter().zip(&y) {
                    x[self.complement[j]] = yj.clone();
                }
                if !self.alg.is_zero_vector(&self.alg.mul(&x, &x)) {
                    continue;
                }
                rows.push(x);
                chosen.push(q);
                let stop = self.dfs(rows, chosen, q, need - 1, limit, out, nodes)?;
                rows.pop();
                chosen.pop();
                if stop {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Abelian ideals grouped by dimension, starting from the abelian ideal
/// `start` and adjoining central lines of the quotient. Level `k` holds the
/// abelian ideals of dimension `start.dim() + k` that contain `start`,
/// sorted. Stops after `max_dim` or at the first empty level.
pub fn abelian_ideal_levels<F: FiniteField>(
    alg: &Algebra<F>,
    start: Subspace<F>,
    max_dim: Option<usize>,
    level_cap: usize,
) -> Result<Vec<Vec<Subspace<F>>>, InvariantError> {
    let f = alg.field();
    let elems = f.elements();
    let mut levels = vec![vec![start]];
    loop {
        let cur = levels.last().expect("nonempty");
        let dim = cur[0].dim();
        if max_dim.is_some_and(|m| dim >= m) || dim == alg.dim() {
            break;
        }
        let mut next = BTreeSet::new();
        for ideal in cur {
            let q = alg.quotient(ideal)?;
            let cen = q.algebra.center();
            let c = cen.dim();
            // projective points of the quotient's center: coefficient vectors
            // whose first nonzero entry is 1
            for lead in 0..c {
                for tail in assignments(elems.clone(), c - lead - 1) {
                    let mut v = vec![f.zero(); q.algebra.dim()];
                    let mut add = |coef: &F::Elem, row: &Vec<F::Elem>| {
                        for (vi, ri) in v.iter_mut().zip(row) {
                            *vi = f.add(vi, &f.mul(coef, ri));
                        }
                    };
                    add(&f.one(), &cen.rows()[lead]);
                    for (coef, row) in tail.iter().zip(&cen.rows()[lead + 1..]) {
                        add(coef, row);
                    }
                    let w = q.lift(f, &v);
                    if !alg.is_zero_vector(&alg.mul(&w, &w)) {
                        continue;
                    }
                    let commutes = ideal
                        .rows()
                        .iter()
                        .all(|r| alg.is_zero_vector(&alg.mul(&w, r)) && alg.is_zero_vector(&alg.mul(r, &w)));
                    if commutes {
                        next.insert(ideal.with_vector(f, &w));
                        if next.len() > level_cap {
                            return Err(InvariantError::LevelTooLarge { dim: dim + 1, cap: level_cap });
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

/// Largest dimension of an abelian subalgebra (or ideal) over a finite
/// field, with the witnesses of that dimension: all of them when
/// `all_witnesses`, otherwise one.
#[derive(Debug, Clone)]
pub struct FpMaximum<F: FiniteField> {
    pub dim: usize,
    pub witnesses: Vec<Subspace<F>>,
}

pub fn max_abelian_dim_fp<F: FiniteField>(
    alg: &Algebra<F>,
    require_ideal: bool,
    all_witnesses: bool,
) -> Result<FpMaximum<F>, InvariantError> {
    alg.require_zinbiel()?;
    // every abelian subalgebra (ideal) of maximal dimension contains the
    // center, since adding the center keeps it abelian (and an ideal)
    let center = alg.center();
    if require_ideal {
        let levels = abelian_ideal_levels(alg, center, None, DEFAULT_LEVEL_CAP)?;
        let top = levels.last().expect("nonempty").clone();
        let dim = top[0].dim();
        let witnesses = if all_witnesses { top } else { top.into_iter().take(1).collect() };
        return Ok(FpMaximum { dim, witnesses });
    }
    let search = SubalgebraSearch::new(alg, center.clone(), DEFAULT_NODE_CAP);
    for d in (center.dim() + 1..=alg.dim()).rev() {
        let found = search.find(d, if all_witnesses { None } else { Some(1) })?;
        if !found.is_empty() {
            let mut witnesses = found;
            witnesses.sort();
            return Ok(FpMaximum { dim: d, witnesses });
        }
    }
    Ok(FpMaximum { dim: center.dim(), witnesses: vec![center] })
}

/// All abelian ideals of dimension `d` (not only those containing the
/// center), sorted.
pub fn abelian_ideals_of_dim<F: FiniteField>(alg: &Algebra<F>, d: usize) -> Result<Vec<Subspace<F>>, InvariantError> {
    alg.require_zinbiel()?;
    let levels = abelian_ideal_levels(alg, Subspace::zero(alg.dim()), Some(d), DEFAULT_LEVEL_CAP)?;
    Ok(levels.get(d).cloned().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rational, RationalField};
    use crate::invariants::enumerate::{enumerate_subspaces_fp, DEFAULT_ENUMERATION_CAP};

    fn nf(n: usize) -> Algebra<RationalField> {
        let binom = |a: usize, b: usize| (0..b).fold(1i64, |acc, t| acc * (a - t) as i64 / (t + 1) as i64);
        let mut prods = Vec::new();
        for i in 1..=n {
            for j in 1..=n - i {
                prods.push((i, j, i + j, Rational::integer(binom(i + j - 1, j))));
            }
        }
        Algebra::from_products(RationalField, n, &prods).unwrap()
    }

    /// Brute force over all subspaces.
    fn oracle<F: FiniteField>(alg: &Algebra<F>, ideal: bool) -> (usize, usize) {
        let mut best = (0, 1);
        for d in 0..=alg.dim() {
            let count = enumerate_subspaces_fp(alg.field(), alg.dim(), d, DEFAULT_ENUMERATION_CAP)
                .unwrap()
                .filter(|s| alg.is_abelian(s) && (!ideal || alg.is_ideal(s)))
                .count();
            if count > 0 {
                best = (d, count);
            }
        }
        best
    }

    #[test]
    fn agrees_with_brute_force_on_null_filiform() {
        for (n, p) in [(4usize, 5u64), (5, 7), (4, 3), (5, 2)] {
            let a = nf(n).reduce_mod(p).unwrap();
            for ideal in [false, true] {
                let (d, count) = oracle(&a, ideal);
                let got = max_abelian_dim_fp(&a, ideal, true).unwrap();
                assert_eq!(got.dim, d, "n={n} p={p} ideal={ideal}");
                assert_eq!(got.witnesses.len(), count, "n={n} p={p} ideal={ideal}");
            }
        }
    }

    #[test]
    fn abelian_algebra_is_its_own_maximum() {
        let a = Algebra::zero_algebra(PrimeField::new(3).unwrap(), 3);
        assert_eq!(max_abelian_dim_fp(&a, false, false).unwrap().dim, 3);
        assert_eq!(max_abelian_dim_fp(&a, true, false).unwrap().dim, 3);
    }

    #[test]
    fn ideals_of_fixed_dimension() {
        let a = nf(5).reduce_mod(7).unwrap();
        let all = abelian_ideals_of_dim(&a, 3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], a.subspace(&[a.e(3), a.e(4), a.e(5)]));
    }
}

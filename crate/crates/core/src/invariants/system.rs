//! Polynomial systems saying "some `d`-dimensional subspace with this
//! echelon pattern is an abelian subalgebra (ideal)", and the Gröbner
//! upper-bound certificate built from them.
//!
//! A pattern fixes the pivot columns of the reduced row-echelon basis; the
//! remaining entries right of each pivot (outside pivot columns) are the
//! unknowns. Subalgebra mode asks `[r_a, r_b] = 0` for all basis rows.
//! Ideal mode additionally asks `[e_i, r_a]` and `[r_a, e_i]` to lie in the
//! span, written as `v − Σ_a v[pivot_a] r_a = 0`, which is quadratic in the
//! unknowns.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Algebra, Subspace};
use crate::field::{Field, RationalField};
use crate::groebner::{is_infeasible, Budget, Feasibility, Polynomial, TRACKED_PRIMES};

use super::enumerate::{echelon_patterns, EchelonPattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Subalgebra,
    Ideal,
}

impl Mode {
    pub fn requires_ideal(self) -> bool {
        self == Mode::Ideal
    }
}

/// Which subspaces the patterns range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternSpace {
    /// All `C(n, d)` patterns of F^n.
    Full,
    /// Only subspaces containing the center, patterned in the coordinates
    /// outside the center's pivots: `C(n − c, d − c)` patterns. Valid for
    /// maximal dimensions since adding central elements keeps a subspace
    /// abelian (and an ideal).
    ContainingCenter,
}

impl PatternSpace {
    /// Full patterns up to dimension 6, center-reduced above.
    pub fn auto(n: usize) -> Self {
        if n <= 6 {
            PatternSpace::Full
        } else {
            PatternSpace::ContainingCenter
        }
    }
}

type PolyVec<F> = Vec<Polynomial<F>>;

/// One pattern's system together with what is needed to turn a solution
/// back into a subspace.
#[derive(Debug, Clone)]
pub struct PatternSystem<F: Field> {
    /// Pivot columns in the ambient space (0-based).
    pub pivots: Vec<usize>,
    /// Ambient `(row, column)` of each unknown; rows index `pivots`.
    pub vars: Vec<(usize, usize)>,
    pub polys: Vec<Polynomial<F>>,
    /// Tracked primes dividing the content of some equation before it was
    /// made primitive; the equation vanishes there.
    pub bad_primes: BTreeSet<u64>,
    /// Fixed central rows (empty for [`PatternSpace::Full`]).
    base: Vec<Vec<F::Elem>>,
    ambient: usize,
}

impl<F: Field> PatternSystem<F> {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// The subspace obtained by substituting `point` for the unknowns.
    pub fn subspace_at(&self, field: &F, point: &[F::Elem]) -> Subspace<F> {
        let mut rows: Vec<Vec<F::Elem>> = self
            .pivots
            .iter()
            .map(|&p| {
                let mut r = vec![field.zero(); self.ambient];
                r[p] = field.one();
                r
            })
            .collect();
        for (&(r, c), v) in self.vars.iter().zip(point) {
            rows[r][c] = v.clone();
        }
        rows.extend(self.base.iter().cloned());
        Subspace::from_vectors(field, self.ambient, &rows)
    }
}

fn const_vec<F: Field>(field: &F, nvars: usize, v: &[F::Elem]) -> PolyVec<F> {
    v.iter().map(|c| Polynomial::constant(field, nvars, c.clone())).collect()
}

/// `[u, v]` for vectors of polynomials.
fn bracket<F: Field>(
    field: &F,
    products: &[(usize, usize, usize, F::Elem)],
    n: usize,
    u: &PolyVec<F>,
    v: &PolyVec<F>,
) -> PolyVec<F> {
    let nvars = u[0].nvars();
    let mut out = vec![Polynomial::zero(nvars); n];
    for (i, j, k, c) in products {
        let (a, b) = (&u[i - 1], &v[j - 1]);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        out[k - 1] = out[k - 1].add(field, &a.mul(field, b).scale(field, c));
    }
    out
}

fn sub_scaled_vec<F: Field>(field: &F, v: &mut PolyVec<F>, coef: &Polynomial<F>, row: &PolyVec<F>) {
    if coef.is_zero() {
        return;
    }
    for (vi, ri) in v.iter_mut().zip(row) {
        if !ri.is_zero() {
            *vi = vi.add(field, &coef.mul(field, ri).scale(field, &field.neg(&field.one())));
        }
    }
}

struct Builder<'a, F: Field> {
    field: &'a F,
    n: usize,
    products: Vec<(usize, usize, usize, F::Elem)>,
    base: Vec<Vec<F::Elem>>,
    base_pivots: Vec<usize>,
}

impl<F: Field> Builder<'_, F> {
    fn system(&self, pattern: &EchelonPattern, coords: &[usize], mode: Mode) -> PatternSystem<F> {
        let f = self.field;
        let n = self.n;
        let pivots: Vec<usize> = pattern.pivots.iter().map(|&p| coords[p]).collect();
        let vars: Vec<(usize, usize)> = pattern.free_positions().into_iter().map(|(r, c)| (r, coords[c])).collect();
        let nvars = vars.len();
        let mut rows: Vec<PolyVec<F>> = pivots
            .iter()
            .map(|&p| {
                let mut r = vec![Polynomial::zero(nvars); n];
                r[p] = Polynomial::constant(f, nvars, f.one());
                r
            })
            .collect();
        for (x, &(r, c)) in vars.iter().enumerate() {
            rows[r][c] = Polynomial::var(f, nvars, x);
        }

        let mut eqs: Vec<Polynomial<F>> = Vec::new();
        let mut bad_primes = BTreeSet::new();
        let mut push_all = |v: PolyVec<F>, eqs: &mut Vec<Polynomial<F>>| {
            for mut p in v {
                if p.is_zero() {
                    continue;
                }
                let s = p.normalize(f);
                bad_primes.extend(TRACKED_PRIMES.iter().filter(|&&q| !f.is_unit_mod(&s, q)));
                if !eqs.contains(&p) {
                    eqs.push(p);
                }
            }
        };
        for a in 0..rows.len() {
            for b in a..rows.len() {
                push_all(bracket(f, &self.products, n, &rows[a], &rows[b]), &mut eqs);
                if a != b {
                    push_all(bracket(f, &self.products, n, &rows[b], &rows[a]), &mut eqs);
                }
            }
        }
        if mode == Mode::Ideal {
            let base_rows: Vec<PolyVec<F>> = self.base.iter().map(|r| const_vec(f, nvars, r)).collect();
            for i in 0..n {
                let mut e = vec![f.zero(); n];
                e[i] = f.one();
                let e = const_vec(f, nvars, &e);
                for r in &rows {
                    for mut v in [bracket(f, &self.products, n, &e, r), bracket(f, &self.products, n, r, &e)] {
                        for (br, &bp) in base_rows.iter().zip(&self.base_pivots) {
                            let coef = v[bp].clone();
                            sub_scaled_vec(f, &mut v, &coef, br);
                        }
                        for (pr, &pp) in rows.iter().zip(&pivots) {
                            let coef = v[pp].clone();
                            sub_scaled_vec(f, &mut v, &coef, pr);
                        }
                        push_all(v, &mut eqs);
                    }
                }
            }
        }
        PatternSystem { pivots, vars, polys: eqs, bad_primes, base: self.base.clone(), ambient: n }
    }
}

/// All pattern systems for dimension `d`. With
/// [`PatternSpace::ContainingCenter`] and `d` at most the center's
/// dimension the list is empty (the center itself answers the question).
pub fn pattern_systems<F: Field>(alg: &Algebra<F>, d: usize, mode: Mode, space: PatternSpace) -> Vec<PatternSystem<F>> {
    let n = alg.dim();
    let f = alg.field();
    let (base, base_pivots, coords, dd) = match space {
        PatternSpace::Full => (Vec::new(), Vec::new(), (0..n).collect::<Vec<_>>(), d),
        PatternSpace::ContainingCenter => {
            let c = alg.center();
            if d <= c.dim() {
                return Vec::new();
            }
            let coords: Vec<usize> = (0..n).filter(|i| !c.pivots().contains(i)).collect();
            (c.rows().to_vec(), c.pivots().to_vec(), coords, d - c.dim())
        }
    };
    if dd > coords.len() {
        return Vec::new();
    }
    let builder = Builder { field: f, n, products: alg.nonzero_products(), base, base_pivots };
    echelon_patterns(coords.len(), dd).iter().map(|p| builder.system(p, &coords, mode)).collect()
}

/// Outcome of [`certify_upper_bound`].
#[derive(Debug, Clone)]
pub enum UpperBound {
    /// Every pattern system has Gröbner basis `{1}`: no such subspace over
    /// any extension field. `bad_primes` are the tracked primes for which
    /// some run does not specialize.
    Infeasible { patterns: usize, bad_primes: BTreeSet<u64> },
    /// Some pattern system has a common zero over the algebraic closure.
    /// `witness` is set when a rational zero was found.
    Feasible { pivots: Vec<usize>, witness: Option<Subspace<RationalField>> },
    /// A Gröbner run hit its budget before any feasible pattern was seen.
    Unknown { pivots: Vec<usize>, reason: String },
}

impl UpperBound {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, UpperBound::Infeasible { .. })
    }
}

/// Decide whether a `d`-dimensional abelian subalgebra (ideal) exists over
/// ℂ, pattern by pattern. Stops at the first pattern with a rational point.
pub fn certify_upper_bound(
    alg: &Algebra<RationalField>,
    d: usize,
    mode: Mode,
    space: PatternSpace,
    budget: Budget,
) -> UpperBound {
    let f = RationalField;
    let center = alg.center();
    if space == PatternSpace::ContainingCenter && d <= center.dim() {
        let rows: Vec<_> = center.rows()[..d].to_vec();
        return UpperBound::Feasible { pivots: center.pivots()[..d].to_vec(), witness: Some(alg.subspace(&rows)) };
    }
    let systems = pattern_systems(alg, d, mode, space);
    let mut bad_primes = BTreeSet::new();
    let mut feasible: Option<Vec<usize>> = None;
    let mut unknown: Option<(Vec<usize>, String)> = None;
    for sys in &systems {
        if sys.polys.is_empty() {
            let point = vec![f.zero(); sys.nvars()];
            return UpperBound::Feasible { pivots: sys.pivots.clone(), witness: Some(sys.subspace_at(&f, &point)) };
        }
        match is_infeasible(&f, &sys.polys, budget) {
            Feasibility::Infeasible(gb) => {
                bad_primes.extend(gb.bad_primes().iter().copied());
                bad_primes.extend(sys.bad_primes.iter().copied());
            }
            Feasibility::Feasible { point: Some(pt), .. } => {
                let w = sys.subspace_at(&f, &pt);
                debug_assert!(w.dim() == d && alg.is_abelian(&w) && (mode == Mode::Subalgebra || alg.is_ideal(&w)));
                return UpperBound::Feasible { pivots: sys.pivots.clone(), witness: Some(w) };
            }
            Feasibility::Feasible { point: None, .. } => {
                feasible.get_or_insert_with(|| sys.pivots.clone());
            }
            Feasibility::Unknown(e) => {
                unknown.get_or_insert_with(|| (sys.pivots.clone(), e.to_string()));
            }
        }
    }
    if let Some(pivots) = feasible {
        return UpperBound::Feasible { pivots, witness: None };
    }
    if let Some((pivots, reason)) = unknown {
        return UpperBound::Unknown { pivots, reason };
    }
    UpperBound::Infeasible { patterns: systems.len(), bad_primes }
}

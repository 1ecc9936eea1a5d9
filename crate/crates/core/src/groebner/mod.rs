//! Buchberger's algorithm (degrevlex, normal strategy, both classical
//! criteria) and the weak-Nullstellensatz feasibility test built on it.

mod poly;

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use serde::Deserialize;
use thiserror::Error;

use crate::field::Field;

pub use poly::{default_names, parse_polynomial, Monomial, Polynomial};

/// Primes for which a run records whether every scalar it divided by stays a
/// unit. Reduction mod a prime outside this list is never claimed to be
/// faithful.
pub const TRACKED_PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("budget exhausted after {pairs} pairs and {elapsed_ms} ms")]
    BudgetExhausted { pairs: usize, elapsed_ms: u128 },
    #[error("basis failed post-hoc verification: {0}")]
    Verification(String),
    #[error("cannot parse polynomial {text:?}: {message}")]
    Parse { text: String, message: String },
    #[error("invalid system: {0}")]
    System(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_pairs: 50_000, max_time: Duration::from_secs(60) }
    }
}

impl Budget {
    pub fn with_secs(secs: u64) -> Self {
        Self { max_time: Duration::from_secs(secs), ..Self::default() }
    }
}

/// Reduced Gröbner basis together with the bookkeeping needed to decide
/// whether the same computation is valid modulo a small prime.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    pub polys: Vec<Polynomial<F>>,
    pub nvars: usize,
    pub pairs_processed: usize,
    /// Tracked primes dividing some scalar that the run divided by (leading
    /// coefficients of reducers, normalization factors).
    bad_primes: BTreeSet<u64>,
}

impl<F: Field> GroebnerBasis<F> {
    /// The ideal is the whole ring.
    pub fn is_one(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_unit()
    }

    /// Whether reducing every scalar of the run modulo `p` yields a valid run
    /// over F_p. In that case a basis `{1}` here means the reduced system has
    /// no solution over the algebraic closure of F_p.
    pub fn specializes_mod(&self, p: u64) -> bool {
        TRACKED_PRIMES.contains(&p) && !self.bad_primes.contains(&p)
    }

    pub fn bad_primes(&self) -> &BTreeSet<u64> {
        &self.bad_primes
    }
}

struct Run<'a, F: Field> {
    field: &'a F,
    bad_primes: BTreeSet<u64>,
}

impl<F: Field> Run<'_, F> {
    fn note_divisor(&mut self, c: &F::Elem) {
        for &p in &TRACKED_PRIMES {
            if !self.bad_primes.contains(&p) && !self.field.is_unit_mod(c, p) {
                self.bad_primes.insert(p);
            }
        }
    }

    fn normalize(&mut self, f: &mut Polynomial<F>) {
        let s = f.normalize(self.field);
        self.note_divisor(&s);
    }
}

/// Normal form of `f` modulo `g`: no remaining term is divisible by a
/// leading monomial of `g`.
pub fn reduce<F: Field>(field: &F, f: &Polynomial<F>, g: &[Polynomial<F>]) -> Polynomial<F> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((m, c)) = p.leading().cloned() {
        match g.iter().find(|h| !h.is_zero() && h.lm().divides(&m)) {
            Some(h) => {
                let q = field.div(&c, h.lc()).expect("nonzero leading coefficient");
                p = p.sub_scaled(field, &q, &h.lm().quotient_of(&m), h);
            }
            None => {
                p.drop_leading();
                rem.push((m, c));
            }
        }
    }
    Polynomial::from_terms(field, f.nvars(), rem)
}

fn s_polynomial<F: Field>(field: &F, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let l = f.lm().lcm(g.lm());
    let a = f.scale(field, &field.inv(f.lc()).expect("nonzero"));
    let b = g.scale(field, &field.inv(g.lc()).expect("nonzero"));
    let left = Polynomial::zero(f.nvars()).sub_scaled(field, &field.neg(&field.one()), &f.lm().quotient_of(&l), &a);
    left.sub_scaled(field, &field.one(), &g.lm().quotient_of(&l), &b)
}

/// Buchberger's algorithm. Pairs are taken in order of `(deg lcm, lcm, i, j)`
/// and skipped by the coprime-leading-monomial criterion and the chain
/// criterion. The returned basis is reduced and has been checked: every
/// S-polynomial and every input reduces to zero.
pub fn buchberger<F: Field>(
    field: &F,
    input: &[Polynomial<F>],
    budget: Budget,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    let nvars = input.first().map(|p| p.nvars()).ok_or_else(|| GroebnerError::System("empty system".into()))?;
    if input.iter().any(|p| p.nvars() != nvars) {
        return Err(GroebnerError::System("polynomials over different variable sets".into()));
    }
    let start = Instant::now();
    let mut run = Run { field, bad_primes: BTreeSet::new() };
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut pairs: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut processed = 0usize;

    let add = |h: Polynomial<F>, basis: &mut Vec<Polynomial<F>>, pairs: &mut BTreeSet<_>, run: &mut Run<F>| {
        run.note_divisor(h.lc());
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.lm().lcm(h.lm());
            pairs.insert((l.degree(), l, i, k));
        }
        basis.push(h);
    };

    for f in input {
        let mut h = f.clone();
        run.normalize(&mut h);
        let mut h = reduce(field, &h, &basis);
        if h.is_zero() {
            continue;
        }
        run.normalize(&mut h);
        let unit = h.is_unit();
        add(h, &mut basis, &mut pairs, &mut run);
        if unit {
            return finish(field, input, basis, processed, run.bad_primes);
        }
    }

    while let Some(key) = pairs.pop_first() {
        let (_, l, i, j) = key;
        processed += 1;
        if processed > budget.max_pairs || start.elapsed() > budget.max_time {
            return Err(GroebnerError::BudgetExhausted { pairs: processed, elapsed_ms: start.elapsed().as_millis() });
        }
        done.insert((i, j));
        if basis[i].lm().coprime(basis[j].lm()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(field, &basis[i], &basis[j]);
        let mut h = reduce(field, &s, &basis);
        if h.is_zero() {
            continue;
        }
        run.normalize(&mut h);
        let unit = h.is_unit();
        add(h, &mut basis, &mut pairs, &mut run);
        if unit {
            break;
        }
    }
    finish(field, input, basis, processed, run.bad_primes)
}

fn finish<F: Field>(
    field: &F,
    input: &[Polynomial<F>],
    basis: Vec<Polynomial<F>>,
    processed: usize,
    bad_primes: BTreeSet<u64>,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    let nvars = input[0].nvars();
    let mut run = Run { field, bad_primes };
    let polys = if let Some(u) = basis.iter().find(|p| p.is_unit()) {
        let mut one = u.clone();
        run.normalize(&mut one);
        vec![one]
    } else {
        // minimal basis: drop elements whose leading monomial is divisible by
        // another's (ties keep the earlier one), then tail-reduce
        let mut minimal: Vec<Polynomial<F>> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let redundant =
                basis.iter().enumerate().any(|(k, h)| k != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < i));
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Polynomial<F>> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
            let mut r = reduce(field, &minimal[i], &others);
            run.normalize(&mut r);
            reduced.push(r);
        }
        reduced.sort_by(|a, b| a.lm().cmp(b.lm()));
        reduced
    };
    let gb = GroebnerBasis { polys, nvars, pairs_processed: processed, bad_primes: run.bad_primes };
    verify(field, input, &gb)?;
    Ok(gb)
}

/// Post-hoc check: all S-polynomials and all inputs reduce to zero.
pub fn verify<F: Field>(field: &F, input: &[Polynomial<F>], gb: &GroebnerBasis<F>) -> Result<(), GroebnerError> {
    for (i, f) in input.iter().enumerate() {
        if !reduce(field, f, &gb.polys).is_zero() {
            return Err(GroebnerError::Verification(format!("input {i} does not reduce to zero")));
        }
    }
    for i in 0..gb.polys.len() {
        for j in i + 1..gb.polys.len() {
            let s = s_polynomial(field, &gb.polys[i], &gb.polys[j]);
            if !reduce(field, &s, &gb.polys).is_zero() {
                return Err(GroebnerError::Verification(format!("S({i},{j}) does not reduce to zero")));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub enum Feasibility<F: Field> {
    /// The basis is `{1}`: no common zero over the algebraic closure.
    Infeasible(GroebnerBasis<F>),
    /// The basis is not `{1}`, so a common zero exists over the algebraic
    /// closure; `point` is a zero with coordinates in the base field when
    /// one was found.
    Feasible {
        basis: GroebnerBasis<F>,
        point: Option<Vec<F::Elem>>,
    },
    Unknown(GroebnerError),
}

impl<F: Field> Feasibility<F> {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Feasibility::Infeasible(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Feasibility::Infeasible(_) => "infeasible",
            Feasibility::Feasible { .. } => "feasible",
            Feasibility::Unknown(_) => "unknown",
        }
    }
}

/// Values tried for a free variable during the base-field point search.
const TRIAL_VALUES: [i64; 5] = [0, 1, -1, 2, -2];

/// Feasibility of `F = 0` with a bounded search for a base-field point.
pub fn is_infeasible<F: Field>(field: &F, system: &[Polynomial<F>], budget: Budget) -> Feasibility<F> {
    let gb = match buchberger(field, system, budget) {
        Ok(gb) => gb,
        Err(e) => return Feasibility::Unknown(e),
    };
    if gb.is_one() {
        return Feasibility::Infeasible(gb);
    }
    let mut calls = 0usize;
    let nvars = gb.nvars;
    let point = find_point(field, &gb.polys, vec![None; nvars], budget, &mut calls);
    Feasibility::Feasible { basis: gb, point }
}

/// Base-field zero of the (Gröbner) system `g`, by fixing one variable at a
/// time: forced values from univariate linear elements first, then small
/// trial values. Bounded by a fixed number of Gröbner calls.
pub fn find_point<F: Field>(
    field: &F,
    g: &[Polynomial<F>],
    assigned: Vec<Option<F::Elem>>,
    budget: Budget,
    calls: &mut usize,
) -> Option<Vec<F::Elem>> {
    const MAX_CALLS: usize = 200;
    let live: Vec<&Polynomial<F>> = g.iter().filter(|p| !p.is_zero()).collect();
    if live.iter().any(|p| p.is_unit()) {
        return None;
    }
    if live.is_empty() {
        return Some(assigned.into_iter().map(|v| v.unwrap_or_else(|| field.zero())).collect());
    }
    let forced = live.iter().find_map(|p| {
        let vars = p.variables();
        if vars.len() == 1 && p.degree() == 1 {
            let v = vars[0];
            let a = p.terms()[0].1.clone();
            let b = p.terms().get(1).map(|t| t.1.clone()).unwrap_or_else(|| field.zero());
            Some((v, field.neg(&field.div(&b, &a).expect("nonzero"))))
        } else {
            None
        }
    });
    let candidates: Vec<(usize, F::Elem)> = match forced {
        Some(fv) => vec![fv],
        None => {
            let v = live.iter().flat_map(|p| p.variables()).min().expect("nonconstant polynomial");
            TRIAL_VALUES.iter().map(|&t| (v, field.from_i64(t))).collect()
        }
    };
    for (v, val) in candidates {
        if *calls >= MAX_CALLS {
            return None;
        }
        *calls += 1;
        let sub: Vec<Polynomial<F>> =
            live.iter().map(|p| p.substitute(field, v, &val)).filter(|p| !p.is_zero()).collect();
        let mut next = assigned.clone();
        next[v] = Some(val);
        if sub.is_empty() {
            return find_point(field, &sub, next, budget, calls);
        }
        let Ok(gb) = buchberger(field, &sub, budget) else {
            continue;
        };
        if gb.is_one() {
            continue;
        }
        if let Some(p) = find_point(field, &gb.polys, next, budget, calls) {
            return Some(p);
        }
    }
    None
}

/// `{"vars": ["x", "y"], "polys": ["x^2 - 1", "x*y"]}`.
#[derive(Debug, Clone, Deserialize)]
pub struct SystemJson {
    pub vars: Vec<String>,
    pub polys: Vec<String>,
}

impl SystemJson {
    pub fn parse<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>, GroebnerError> {
        if self.polys.is_empty() {
            return Err(GroebnerError::System("no polynomials".into()));
        }
        self.polys.iter().map(|p| parse_polynomial(field, &self.vars, p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rational, RationalField};

    fn sys(vars: &[&str], polys: &[&str]) -> Vec<Polynomial<RationalField>> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        polys.iter().map(|p| parse_polynomial(&RationalField, &names, p).unwrap()).collect()
    }

    fn show(gb: &GroebnerBasis<RationalField>, vars: &[&str]) -> Vec<String> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        gb.polys.iter().map(|p| p.format(&RationalField, &names)).collect()
    }

    #[test]
    fn reduction() {
        let f = RationalField;
        let g = sys(&["x", "y"], &["x"]);
        assert!(reduce(&f, &sys(&["x", "y"], &["x^2"])[0], &g).is_zero());
        let r = reduce(&f, &sys(&["x", "y"], &["x*y + 1"])[0], &g);
        assert!(r.is_unit());
    }

    #[test]
    fn small_bases() {
        let f = RationalField;
        let gb = buchberger(&f, &sys(&["x"], &["x^2 - 1", "x - 1"]), Budget::default()).unwrap();
        assert_eq!(show(&gb, &["x"]), vec!["x - 1"]);
        let gb = buchberger(&f, &sys(&["x", "y"], &["x^2", "x*y", "y^2 - x"]), Budget::default()).unwrap();
        assert_eq!(show(&gb, &["x", "y"]), vec!["y^2 - x", "x*y", "x^2"]);
        let gb = buchberger(&f, &sys(&["x"], &["x", "1 - x"]), Budget::default()).unwrap();
        assert!(gb.is_one());
    }

    #[test]
    fn feasibility_classes() {
        let f = RationalField;
        match is_infeasible(&f, &sys(&["x", "y"], &["x^2 + 1", "x - y"]), Budget::default()) {
            Feasibility::Feasible { point, .. } => assert!(point.is_none()),
            other => panic!("expected feasible, got {}", other.label()),
        }
        assert!(is_infeasible(&f, &sys(&["x"], &["x", "1 - x"]), Budget::default()).is_infeasible());
        match is_infeasible(&f, &sys(&["x", "y"], &["x*y - 2", "x - 2*y"]), Budget::default()) {
            Feasibility::Feasible { point: Some(p), .. } => {
                assert_eq!(&p[0] * &p[1], Rational::integer(2));
            }
            other => panic!("expected a rational point, got {}", other.label()),
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let f = RationalField;
        let tiny = Budget { max_pairs: 0, max_time: Duration::from_secs(60) };
        let r = buchberger(&f, &sys(&["x", "y"], &["x^2 - y", "x*y - 1"]), tiny);
        assert!(matches!(r, Err(GroebnerError::BudgetExhausted { .. })));
    }

    #[test]
    fn prime_tracking() {
        let f = RationalField;
        // 3x - 1 = 0 and x = 0 are inconsistent over Q, but consistent mod 3
        let gb = buchberger(&f, &sys(&["x"], &["3*x - 1", "x"]), Budget::default()).unwrap();
        assert!(gb.is_one());
        assert!(!gb.specializes_mod(3));
        assert!(gb.specializes_mod(5));
        assert!(!gb.specializes_mod(37));
    }

    #[test]
    fn works_over_prime_fields() {
        let f = PrimeField::new(5).unwrap();
        let names = vec!["x".to_string()];
        let p = parse_polynomial(&f, &names, "x^2 + 1").unwrap();
        match is_infeasible(&f, &[p], Budget::default()) {
            Feasibility::Feasible { point: Some(pt), .. } => {
                assert_eq!(f.add(&f.mul(&pt[0], &pt[0]), &f.one()), f.zero())
            }
            other => panic!("x^2 + 1 has roots mod 5, got {}", other.label()),
        }
    }
}

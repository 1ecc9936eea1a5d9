//! Structural statements about α and β checked on concrete algebras.
//!
//! - `codim-one`: an abelian subalgebra of codimension one is an ideal, so
//!   α = n − 1 forces β = n − 1.
//! - `codim-two`: a supersolvable algebra with α = n − 2 has β ∈ {n − 2, n − 3}.
//! - `maximal-subalgebras`: in a supersolvable algebra every maximal
//!   subalgebra has codimension one.
//! - `filiform`: α = β and the maximal abelian ideal is unique for the
//!   null-filiform and filiform families, with the stated ideal.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, Subspace};
use crate::catalog;
use crate::field::{FiniteField, PrimeField, RationalField};

use super::alpha_beta::{alpha_beta, prime_quality, AlphaBetaOptions, AlphaBetaResult, PrimeQuality};
use super::enumerate::{enumerate_subspaces_fp, DEFAULT_ENUMERATION_CAP};
use super::InvariantError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    CodimOne,
    CodimTwo,
    MaximalSubalgebras,
    Filiform,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::CodimOne, Check::CodimTwo, Check::MaximalSubalgebras, Check::Filiform];

    pub fn name(&self) -> &'static str {
        match self {
            Check::CodimOne => "codim-one",
            Check::CodimTwo => "codim-two",
            Check::MaximalSubalgebras => "maximal-subalgebras",
            Check::Filiform => "filiform",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Violated,
    /// Hypotheses fail; nothing to check.
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub algebra: String,
    pub status: Status,
    pub details: Vec<String>,
}

impl CheckReport {
    fn new(check: Check, alg: &Algebra<RationalField>) -> Self {
        Self {
            check,
            algebra: alg.name().unwrap_or("algebra").to_string(),
            status: Status::Verified,
            details: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.status = Status::Violated;
        self.details.push(msg);
    }

    fn note(&mut self, msg: String) {
        self.details.push(msg);
    }

    fn not_applicable(mut self, msg: String) -> Self {
        self.status = Status::NotApplicable;
        self.details.push(msg);
        self
    }
}

fn integral_primes(alg: &Algebra<RationalField>, primes: &[u64]) -> Vec<u64> {
    primes.iter().copied().filter(|&p| prime_quality(alg, p) != PrimeQuality::NonIntegral).collect()
}

/// Abelian subalgebras of codimension one over a finite field.
pub fn abelian_hyperplanes<F: FiniteField>(alg: &Algebra<F>) -> Result<Vec<Subspace<F>>, InvariantError> {
    let n = alg.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(enumerate_subspaces_fp(alg.field(), n, n - 1, DEFAULT_ENUMERATION_CAP)?.filter(|s| alg.is_abelian(s)).collect())
}

/// Codimension-one abelian subalgebras are ideals: the rational witness, and
/// every abelian hyperplane over F_p at each p-integral prime.
pub fn check_codim_one(
    alg: &Algebra<RationalField>,
    result: &AlphaBetaResult,
    primes: &[u64],
) -> Result<CheckReport, InvariantError> {
    let n = alg.dim();
    let r = CheckReport::new(Check::CodimOne, alg);
    if n == 0 || result.alpha.value != n - 1 {
        return Ok(r.not_applicable(format!("α = {} ≠ n − 1 = {}", result.alpha.value, n.saturating_sub(1))));
    }
    let mut r = r;
    if let Some(w) = &result.alpha.witness.subspace {
        if w.dim() == n - 1 && !alg.is_ideal(w) {
            r.fail(format!("rational witness {} is not an ideal", result.alpha.witness.display));
        }
    }
    for p in integral_primes(alg, primes) {
        let ap: Algebra<PrimeField> = alg.reduce_mod(p)?;
        let planes = abelian_hyperplanes(&ap)?;
        let bad: Vec<_> = planes.iter().filter(|s| !ap.is_ideal(s)).collect();
        if let Some(s) = bad.first() {
            r.fail(format!("over F_{p}: {} is abelian of codimension one but not an ideal", s.format(ap.field())));
        } else {
            r.note(format!("F_{p}: {} abelian hyperplanes, all ideals", planes.len()));
        }
    }
    if result.beta.value != n - 1 {
        r.fail(format!("β = {} ≠ n − 1", result.beta.value));
    } else {
        r.note(format!("β = {}", result.beta.value));
    }
    Ok(r)
}

/// α = n − 2 in a supersolvable algebra gives β ∈ {n − 2, n − 3}.
pub fn check_codim_two(alg: &Algebra<RationalField>, result: &AlphaBetaResult) -> Result<CheckReport, InvariantError> {
    let n = alg.dim();
    let r = CheckReport::new(Check::CodimTwo, alg);
    if !alg.is_nilpotent() || !alg.is_supersolvable()? {
        return Ok(r.not_applicable("not supersolvable".into()));
    }
    if n < 2 || result.alpha.value != n - 2 {
        return Ok(r.not_applicable(format!("α = {} ≠ n − 2", result.alpha.value)));
    }
    let mut r = r;
    let b = result.beta.value;
    if b + 2 == n || b + 3 == n {
        r.note(format!("β = {b} = n − {}", n - b));
    } else {
        r.fail(format!("β = {b} ∉ {{n − 2, n − 3}}"));
    }
    Ok(r)
}

/// Inclusion-maximal proper subalgebras over a finite field, by exhaustive
/// enumeration of all subspaces.
pub fn maximal_subalgebras_fp<F: FiniteField>(alg: &Algebra<F>) -> Result<Vec<Subspace<F>>, InvariantError> {
    let n = alg.dim();
    let f = alg.field();
    let mut by_dim: Vec<Vec<Subspace<F>>> = Vec::new();
    for d in 0..n {
        by_dim
            .push(enumerate_subspaces_fp(f, n, d, DEFAULT_ENUMERATION_CAP)?.filter(|s| alg.is_subalgebra(s)).collect());
    }
    let mut out = Vec::new();
    for d in 0..n {
        for s in &by_dim[d] {
            if !by_dim[d + 1..].iter().flatten().any(|t| s.is_subspace_of(f, t)) {
                out.push(s.clone());
            }
        }
    }
    Ok(out)
}

/// Every maximal subalgebra has codimension one, over each F_p with p
/// integral. Exhaustive, so limited to `max_dim`.
pub fn check_maximal_subalgebras(
    alg: &Algebra<RationalField>,
    primes: &[u64],
    max_dim: usize,
) -> Result<CheckReport, InvariantError> {
    let n = alg.dim();
    let r = CheckReport::new(Check::MaximalSubalgebras, alg);
    if !alg.is_nilpotent() || !alg.is_supersolvable()? {
        return Ok(r.not_applicable("not supersolvable".into()));
    }
    if n > max_dim {
        return Ok(r.not_applicable(format!("dimension {n} above the enumeration limit {max_dim}")));
    }
    let mut r = r;
    for p in integral_primes(alg, primes) {
        let ap = alg.reduce_mod(p)?;
        let max = maximal_subalgebras_fp(&ap)?;
        match max.iter().find(|s| s.dim() + 1 != n) {
            Some(s) => {
                r.fail(format!("over F_{p}: maximal subalgebra {} has dimension {}", s.format(ap.field()), s.dim()))
            }
            None => {
                r.note(format!("F_{p}: {} maximal subalgebras, all of dimension {}", max.len(), n.saturating_sub(1)))
            }
        }
    }
    Ok(r)
}

/// Which family member: `None` for null-filiform, `Some(v)` for variant v.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiliformKind {
    Null,
    Variant(u8),
}

/// Expected maximal abelian ideal as 1-based index range.
pub fn stated_ideal(n: usize, kind: FiliformKind) -> (usize, usize) {
    match kind {
        FiliformKind::Null => (n / 2 + 1, n),
        FiliformKind::Variant(3) => (n.div_ceil(2), n - 1),
        FiliformKind::Variant(_) => (n.div_ceil(2), n),
    }
}

/// Value sets for the two ways of reading the filiform formula: literally
/// `{N, N − 1}` with `N = n − ⌊(n+1)/2⌋`, and as the dimensions of the
/// stated ideals, `{N + 1, N}`.
pub fn filiform_readings(n: usize) -> ([usize; 2], [usize; 2]) {
    let big_n = n - n.div_ceil(2);
    ([big_n, big_n - 1], [big_n + 1, big_n])
}

fn coordinate_span(n: usize, lo: usize, hi: usize) -> Subspace<RationalField> {
    let cols: Vec<usize> = (lo - 1..hi).collect();
    Subspace::coordinate(&RationalField, n, &cols)
}

/// α = β, a unique maximal abelian ideal (over F_p and F_{p²}, lifted to ℚ)
/// and agreement with the stated ideal.
pub fn check_filiform_member(
    n: usize,
    kind: FiliformKind,
    opts: &AlphaBetaOptions,
) -> Result<(CheckReport, AlphaBetaResult), InvariantError> {
    let alg = match kind {
        FiliformKind::Null => catalog::null_filiform(n),
        FiliformKind::Variant(v) => catalog::filiform(n, v),
    }
    .map_err(|e| InvariantError::Inconsistent(e.to_string()))?;
    let opts = AlphaBetaOptions { enumerate_ideals: true, ..opts.clone() };
    let res = alpha_beta(&alg, &opts)?;
    let mut r = CheckReport::new(Check::Filiform, &alg);
    let (a, b) = (res.alpha.value, res.beta.value);
    if a != b {
        r.fail(format!("α = {a} ≠ β = {b}"));
    } else {
        r.note(format!("α = β = {a} ({:?})", res.grade()));
    }
    if kind == FiliformKind::Null && a != n - n / 2 {
        r.fail(format!("α = {a}, expected n − ⌊n/2⌋ = {}", n - n / 2));
    }
    let (lo, hi) = stated_ideal(n, kind);
    let stated = coordinate_span(n, lo, hi);
    let en = res.maximal_abelian_ideals.as_ref().expect("requested");
    let fp: Vec<String> = en.per_prime.iter().map(|c| format!("{}:{}", c.field, c.count)).collect();
    let quad: Vec<String> = en.quadratic.iter().map(|c| format!("{}:{}", c.field, c.count)).collect();
    r.note(format!("maximal abelian ideals per field [{}] [{}]", fp.join(", "), quad.join(", ")));
    let unique = en.count_over_closure == Some(1) && en.resolved && en.counts_agree();
    if !unique {
        r.fail(format!(
            "maximal abelian ideal not unique: {} over the closure estimate, {} rational",
            en.count_over_closure.map_or("?".into(), |c| c.to_string()),
            en.rational.len()
        ));
    }
    let is_stated = alg.is_ideal(&stated) && alg.is_abelian(&stated);
    if !is_stated {
        r.fail(format!("span{{e{lo}..e{hi}}} is not an abelian ideal"));
    } else if stated.dim() != b {
        r.fail(format!("span{{e{lo}..e{hi}}} has dimension {} but β = {b}", stated.dim()));
    } else if unique && en.rational[0] != stated {
        r.fail(format!("unique maximal ideal is {}, not span{{e{lo}..e{hi}}}", en.ideals[0]));
    } else {
        r.note(format!("β attained by span{{e{lo}..e{hi}}}"));
    }
    if kind != FiliformKind::Null {
        let (literal, dims) = filiform_readings(n);
        r.note(format!(
            "β = {b}: literal reading {{{}, {}}} {}, ideal-dimension reading {{{}, {}}} {}",
            literal[0],
            literal[1],
            if literal.contains(&b) { "contains it" } else { "does not" },
            dims[0],
            dims[1],
            if dims.contains(&b) { "contains it" } else { "does not" },
        ));
    }
    Ok((r, res))
}

/// NF_n and F_n^1..F_n^3 (the latter for n ≥ 4).
pub fn check_filiform(n: usize, opts: &AlphaBetaOptions) -> Result<Vec<CheckReport>, InvariantError> {
    let mut kinds = vec![FiliformKind::Null];
    if n >= 4 {
        kinds.extend((1..=3).map(FiliformKind::Variant));
    }
    kinds.into_iter().map(|k| check_filiform_member(n, k, opts).map(|(r, _)| r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ab(alg: &Algebra<RationalField>) -> AlphaBetaResult {
        alpha_beta(alg, &AlphaBetaOptions::default()).unwrap()
    }

    #[test]
    fn codim_one_on_small_entries() {
        for id in ["Z2_1", "Z4_2", "Z3_2"] {
            let z = catalog::resolve(id).unwrap().algebra;
            let r = check_codim_one(&z, &ab(&z), &[2, 3, 5]).unwrap();
            assert_eq!(r.status, Status::Verified, "{id}: {:?}", r.details);
        }
        let z = catalog::resolve("Z4_1").unwrap().algebra;
        assert_eq!(check_codim_one(&z, &ab(&z), &[2]).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn codim_two_realizations() {
        let z = catalog::resolve("Z5_12").unwrap().algebra;
        let r = check_codim_two(&z, &ab(&z)).unwrap();
        assert_eq!(r.status, Status::Verified);
        let z = catalog::six_dim();
        let res =
            alpha_beta(&z, &AlphaBetaOptions { groebner: crate::invariants::GroebnerMode::On, ..Default::default() })
                .unwrap();
        assert_eq!((res.alpha.value, res.beta.value), (4, 3));
        assert_eq!(check_codim_two(&z, &res).unwrap().status, Status::Verified);
        let z = catalog::resolve("Z3_2").unwrap().algebra;
        assert_eq!(check_codim_two(&z, &ab(&z)).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn maximal_subalgebras_small() {
        let z = catalog::resolve("Z3_1").unwrap().algebra;
        let r = check_maximal_subalgebras(&z, &[3, 5], 5).unwrap();
        assert_eq!(r.status, Status::Verified, "{:?}", r.details);
        // a 1-dim algebra: the only maximal subalgebra is 0, of codimension one
        let one = Algebra::zero_algebra(RationalField, 1);
        let r = check_maximal_subalgebras(&one, &[2], 5).unwrap();
        assert_eq!(r.status, Status::Verified);
    }

    #[test]
    fn stated_ideals_and_readings() {
        assert_eq!(stated_ideal(6, FiliformKind::Null), (4, 6));
        assert_eq!(stated_ideal(5, FiliformKind::Variant(1)), (3, 5));
        assert_eq!(stated_ideal(5, FiliformKind::Variant(3)), (3, 4));
        assert_eq!(filiform_readings(5), ([2, 1], [3, 2]));
    }
}

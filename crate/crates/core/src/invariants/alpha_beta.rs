//! α(Z) and β(Z) over ℂ for algebras with rational structure constants.
//!
//! Lower bounds are exact witnesses: a rational subspace verified abelian
//! (and an ideal), or a Gröbner-feasible pattern system, whose common zero
//! over the algebraic closure is a witness by the Nullstellensatz.
//! Upper bounds come from Gröbner infeasibility at one dimension above the
//! value. One dimension suffices: an abelian subalgebra of dimension `d+1`
//! contains abelian subalgebras of every smaller dimension, and in a
//! nilpotent algebra an abelian ideal of dimension `d+1` contains an ideal of
//! dimension `d`. Without Gröbner the upper bound is an exhaustive scan over
//! finite fields, labelled probabilistic.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Algebra, Subspace};
use crate::field::{Field, FiniteField, PrimeField, QuadExtField, Rational, RationalField, DEFAULT_PRIMES};
use crate::groebner::{Budget, TRACKED_PRIMES};

use super::search::{abelian_ideal_levels, max_abelian_dim_fp, SubalgebraSearch, DEFAULT_LEVEL_CAP, DEFAULT_NODE_CAP};
use super::system::{certify_upper_bound, Mode, PatternSpace, UpperBound};
use super::InvariantError;

/// How a prime relates to an algebra's structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeQuality {
    /// Every nonzero constant is a unit mod p: the reduction has the same
    /// nonzero pattern as the rational algebra.
    Faithful,
    /// Constants are p-integral but some vanish mod p.
    Integral,
    /// Some denominator is divisible by p; the prime is skipped.
    NonIntegral,
}

pub fn prime_quality(alg: &Algebra<RationalField>, p: u64) -> PrimeQuality {
    let products = alg.nonzero_products();
    if products.iter().any(|(_, _, _, c)| c.mod_p(p).is_none()) {
        PrimeQuality::NonIntegral
    } else if products.iter().all(|(_, _, _, c)| c.is_unit_mod(p)) {
        PrimeQuality::Faithful
    } else {
        PrimeQuality::Integral
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroebnerMode {
    /// On for dimension ≤ 5.
    Auto,
    On,
    Off,
}

#[derive(Debug, Clone)]
pub struct AlphaBetaOptions {
    pub primes: Vec<u64>,
    pub groebner: GroebnerMode,
    pub budget: Budget,
    pub enumerate_ideals: bool,
    /// Pattern space for Gröbner certificates; `None` picks
    /// [`PatternSpace::auto`].
    pub space: Option<PatternSpace>,
}

impl Default for AlphaBetaOptions {
    fn default() -> Self {
        Self {
            primes: DEFAULT_PRIMES.to_vec(),
            groebner: GroebnerMode::Auto,
            budget: Budget::default(),
            enumerate_ideals: false,
            space: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grade {
    /// Witness exists over ℂ and the upper bound is a Gröbner certificate.
    Certified,
    /// Upper bound rests on finite-field scans only.
    Probabilistic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum Method {
    /// All pattern systems have Gröbner basis {1}.
    GroebnerInfeasible {
        patterns: usize,
        space: PatternSpace,
    },
    /// No witness over any of the listed fields.
    ExhaustiveFp {
        fields: Vec<String>,
    },
    /// Follows from the α bound (an abelian ideal is an abelian subalgebra).
    ImpliedByAlpha,
    None,
}

/// Upper-bound evidence at one dimension.
#[derive(Debug, Clone, Serialize)]
pub struct DimCertificate {
    pub dim: usize,
    #[serde(flatten)]
    pub method: Method,
    pub status: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Exact basis over ℚ.
    Rational,
    /// A Gröbner-feasible pattern with no rational zero found; the witness
    /// lives over a finite extension of ℚ.
    Algebraic,
    /// Finite-field witnesses only (probabilistic runs).
    FiniteField,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    /// RREF basis for rational witnesses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Rational>>>,
    /// Pivot columns (1-based) of the feasible pattern for algebraic
    /// witnesses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Vec<usize>>,
    pub display: String,
    #[serde(skip)]
    pub subspace: Option<Subspace<RationalField>>,
}

impl Witness {
    fn rational(s: Subspace<RationalField>) -> Self {
        Self {
            kind: WitnessKind::Rational,
            basis: Some(s.rows().to_vec()),
            pattern: None,
            display: s.format(&RationalField),
            subspace: Some(s),
        }
    }

    fn algebraic(pivots: &[usize], note: String) -> Self {
        let pattern: Vec<usize> = pivots.iter().map(|p| p + 1).collect();
        Self {
            kind: WitnessKind::Algebraic,
            basis: None,
            display: format!("pattern with pivots {pattern:?} is feasible over the algebraic closure{note}"),
            pattern: Some(pattern),
            subspace: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantValue {
    pub value: usize,
    pub grade: Grade,
    pub witness: Witness,
    pub certificates: Vec<DimCertificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeEvidence {
    pub p: u64,
    pub quality: PrimeQuality,
    /// Largest abelian subalgebra / ideal over F_p.
    pub alpha: Option<usize>,
    pub beta: Option<usize>,
    /// Added because none of the requested primes was faithful.
    pub auto_added: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldCount {
    /// "F_7" or "F_49".
    pub field: String,
    pub p: u64,
    pub quality: PrimeQuality,
    pub count: usize,
}

/// Inclusion-maximal abelian ideals, counted over finite fields and lifted
/// to ℚ.
#[derive(Debug, Clone, Serialize)]
pub struct IdealEnumeration {
    /// Counts over F_p for every p-integral prime.
    pub per_prime: Vec<FieldCount>,
    /// Counts over F_{p²} for the faithful odd primes; conjugate pairs of
    /// ideals defined over a quadratic field show up here and not over F_p.
    pub quadratic: Vec<FieldCount>,
    /// The F_{p²} count when all of them agree.
    pub count_over_closure: Option<usize>,
    /// Every maximal ideal was found over ℚ: the rational list has
    /// `count_over_closure` entries and reduces into each faithful prime's
    /// F_p list.
    pub resolved: bool,
    pub ideals: Vec<String>,
    /// Dimension of each entry of `ideals`.
    pub dims: Vec<usize>,
    #[serde(skip)]
    pub rational: Vec<Subspace<RationalField>>,
}

impl IdealEnumeration {
    /// Whether the F_p counts agree across all primes scanned.
    pub fn counts_agree(&self) -> bool {
        self.per_prime.windows(2).all(|w| w[0].count == w[1].count)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaBetaResult {
    pub algebra: String,
    pub dim: usize,
    pub center_dim: usize,
    pub groebner: bool,
    pub alpha: InvariantValue,
    pub beta: InvariantValue,
    pub evidence: Vec<PrimeEvidence>,
    /// Some Gröbner run hit its budget and a certificate was downgraded.
    pub budget_exhausted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_abelian_ideals: Option<IdealEnumeration>,
}

impl AlphaBetaResult {
    pub fn grade(&self) -> Grade {
        if self.alpha.grade == Grade::Certified && self.beta.grade == Grade::Certified {
            Grade::Certified
        } else {
            Grade::Probabilistic
        }
    }
}

/// Rationals `a/b` with `|a| ≤ bound`, `1 ≤ b ≤ 4`, reducing to `r` mod `p`,
/// simplest first.
fn lift_residue(r: u64, p: u64, bound: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for b in 1..=4i64 {
        if (b as u64).is_multiple_of(p) {
            continue;
        }
        for a in (0..=bound).flat_map(|a| if a == 0 { vec![0] } else { vec![a, -a] }) {
            let q = Rational::new(a, b);
            if q.mod_p(p) == Some(r) && !out.contains(&q) {
                out.push(q);
            }
        }
    }
    out
}

const LIFT_COMBINATIONS: usize = 4096;

/// Rational lifts of an F_p subspace with small entries that are abelian
/// (ideals) over ℚ; at most `limit` of them.
pub fn lift_subspace(
    alg: &Algebra<RationalField>,
    w: &Subspace<PrimeField>,
    p: u64,
    mode: Mode,
    limit: usize,
) -> Vec<Subspace<RationalField>> {
    let n = alg.dim();
    let mut found = BTreeSet::new();
    for bound in [2i64, 5] {
        // free entries: outside pivot columns, right of the row's pivot
        let mut slots = Vec::new();
        let mut options = Vec::new();
        for (r, (row, &pv)) in w.rows().iter().zip(w.pivots()).enumerate() {
            for c in pv + 1..n {
                if w.pivots().contains(&c) {
                    continue;
                }
                let lifts = lift_residue(row[c].residue(), p, bound);
                if lifts.is_empty() {
                    return found.into_iter().collect();
                }
                slots.push((r, c));
                options.push(lifts);
            }
        }
        let total = options.iter().try_fold(1usize, |acc, o| acc.checked_mul(o.len()));
        if total.is_none_or(|t| t > LIFT_COMBINATIONS) {
            continue;
        }
        let index_lists: Vec<Vec<usize>> = options.iter().map(|o| (0..o.len()).collect()).collect();
        for pick in product_indices(&index_lists) {
            let mut rows: Vec<Vec<Rational>> = w
                .pivots()
                .iter()
                .map(|&pv| {
                    let mut v = vec![Rational::zero(); n];
                    v[pv] = Rational::one();
                    v
                })
                .collect();
            for (k, &(r, c)) in slots.iter().enumerate() {
                rows[r][c] = options[k][pick[k]].clone();
            }
            let s = alg.subspace(&rows);
            if alg.is_abelian(&s) && (mode == Mode::Subalgebra || alg.is_ideal(&s)) {
                found.insert(s);
                if found.len() >= limit {
                    return found.into_iter().collect();
                }
            }
        }
        if !found.is_empty() {
            break;
        }
    }
    found.into_iter().collect()
}

fn product_indices(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        out = out.into_iter().flat_map(|pre| l.iter().map(move |&i| [pre.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Reduction of a rational subspace mod p, when its basis is p-integral.
fn reduce_subspace(s: &Subspace<RationalField>, p: u64) -> Option<Subspace<PrimeField>> {
    let fp = PrimeField::new(p).ok()?;
    s.map_field(&fp, |q| fp.from_rational(q))
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

struct Reduction {
    p: u64,
    quality: PrimeQuality,
    auto_added: bool,
    alg: Algebra<PrimeField>,
    alpha: Option<usize>,
    beta: Option<usize>,
}

struct Ctx<'a> {
    alg: &'a Algebra<RationalField>,
    center: Subspace<RationalField>,
    groebner: bool,
    space: PatternSpace,
    budget: Budget,
    reductions: Vec<Reduction>,
    budget_exhausted: bool,
}

impl Ctx<'_> {
    fn fp_max(&mut self, mode: Mode) -> Result<(), InvariantError> {
        for r in &mut self.reductions {
            let m = max_abelian_dim_fp(&r.alg, mode.requires_ideal(), false)?.dim;
            match mode {
                Mode::Subalgebra => r.alpha = Some(m),
                Mode::Ideal => r.beta = Some(m),
            }
        }
        Ok(())
    }

    fn fp_value(r: &Reduction, mode: Mode) -> usize {
        match mode {
            Mode::Subalgebra => r.alpha.expect("computed"),
            Mode::Ideal => r.beta.expect("computed"),
        }
    }

    /// Primes used for estimates: faithful ones if any, else all integral.
    fn estimating(&self) -> Vec<&Reduction> {
        let faithful: Vec<&Reduction> =
            self.reductions.iter().filter(|r| r.quality == PrimeQuality::Faithful).collect();
        if faithful.is_empty() {
            self.reductions.iter().collect()
        } else {
            faithful
        }
    }

    fn is_witness(&self, s: &Subspace<RationalField>, mode: Mode) -> bool {
        self.alg.is_abelian(s) && (mode == Mode::Subalgebra || self.alg.is_ideal(s))
    }

    /// Cheap rational witnesses of dimension `d`: coordinate subspaces,
    /// center plus coordinates, and small lifts of finite-field witnesses.
    /// Returns the smallest one found.
    fn quick_witness(&self, d: usize, mode: Mode) -> Result<Option<Subspace<RationalField>>, InvariantError> {
        let n = self.alg.dim();
        let f = RationalField;
        let mut found: BTreeSet<Subspace<RationalField>> = BTreeSet::new();
        let all: Vec<usize> = (0..n).collect();
        for cols in combinations(&all, d) {
            let s = Subspace::coordinate(&f, n, &cols);
            if self.is_witness(&s, mode) {
                found.insert(s);
            }
        }
        let c = self.center.dim();
        if d > c {
            let rest: Vec<usize> = (0..n).filter(|i| !self.center.pivots().contains(i)).collect();
            for cols in combinations(&rest, d - c) {
                let s = self.center.sum(&f, &Subspace::coordinate(&f, n, &cols));
                if s.dim() == d && self.is_witness(&s, mode) {
                    found.insert(s);
                }
            }
        }
        if !found.is_empty() {
            return Ok(found.into_iter().next());
        }
        for r in self.estimating() {
            if Self::fp_value(r, mode) < d {
                continue;
            }
            let cen = r.alg.center();
            let candidates: Vec<Subspace<PrimeField>> = match mode {
                Mode::Subalgebra => SubalgebraSearch::new(&r.alg, cen, DEFAULT_NODE_CAP).find(d, Some(64))?,
                Mode::Ideal => {
                    if cen.dim() > d {
                        continue;
                    }
                    let levels = abelian_ideal_levels(&r.alg, cen.clone(), Some(d), DEFAULT_LEVEL_CAP)?;
                    levels.get(d - cen.dim()).map(|l| l.iter().take(64).cloned().collect()).unwrap_or_default()
                }
            };
            for w in &candidates {
                found.extend(lift_subspace(self.alg, w, r.p, mode, 1));
            }
            if !found.is_empty() {
                break;
            }
        }
        Ok(found.into_iter().next())
    }

    /// A rational witness meets ℤ_(p)^n in a lattice whose reduction is a
    /// witness over F_p, so every integral prime must reach its dimension.
    fn check_lower(&self, d: usize, mode: Mode, w: Option<&Subspace<RationalField>>) -> Result<(), InvariantError> {
        for r in &self.reductions {
            let m = Self::fp_value(r, mode);
            if m < d {
                return Err(InvariantError::Inconsistent(format!(
                    "{} has a rational {:?} witness of dimension {d} but only {m} over F_{}",
                    self.alg.name().unwrap_or("algebra"),
                    mode,
                    r.p
                )));
            }
            if let Some(w) = w {
                if let Some(wp) = reduce_subspace(w, r.p) {
                    let ok = r.alg.is_abelian(&wp) && (mode == Mode::Subalgebra || r.alg.is_ideal(&wp));
                    if !ok {
                        return Err(InvariantError::Inconsistent(format!(
                            "rational witness does not reduce to a witness mod {}",
                            r.p
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// No F_p witness may exist where a specializing Gröbner run proved
    /// infeasibility.
    fn check_infeasible(&self, d: usize, mode: Mode, bad: &BTreeSet<u64>) -> Result<(), InvariantError> {
        if self.space != PatternSpace::Full {
            return Ok(());
        }
        for r in &self.reductions {
            if TRACKED_PRIMES.contains(&r.p) && !bad.contains(&r.p) && Self::fp_value(r, mode) >= d {
                return Err(InvariantError::Inconsistent(format!(
                    "no {mode:?} of dimension {d} over ℂ, yet one exists over F_{} where the certificate specializes",
                    r.p
                )));
            }
        }
        Ok(())
    }

    fn fp_sample(&self, d: usize, mode: Mode) -> String {
        for r in &self.reductions {
            if Self::fp_value(r, mode) < d {
                continue;
            }
            let cen = r.alg.center();
            let w = match mode {
                Mode::Subalgebra => SubalgebraSearch::new(&r.alg, cen, DEFAULT_NODE_CAP)
                    .find(d, Some(1))
                    .ok()
                    .and_then(|v| v.into_iter().next()),
                Mode::Ideal if cen.dim() <= d => abelian_ideal_levels(&r.alg, cen.clone(), Some(d), DEFAULT_LEVEL_CAP)
                    .ok()
                    .and_then(|l| l.get(d - cen.dim()).and_then(|l| l.first().cloned())),
                Mode::Ideal => None,
            };
            if let Some(w) = w {
                return format!("; over F_{}: {}", r.p, w.format(r.alg.field()));
            }
        }
        String::new()
    }

    /// Smallest faithful odd prime up to 7, whose F_{p²} catches witnesses
    /// defined over a quadratic field that F_p misses.
    fn quad_prime(&self) -> Option<u64> {
        self.reductions.iter().filter(|r| r.quality == PrimeQuality::Faithful && r.p > 2 && r.p <= 7).map(|r| r.p).min()
    }

    fn quad_has(&self, p: u64, d: usize, mode: Mode) -> Result<bool, InvariantError> {
        let fq = QuadExtField::new(p).map_err(|e| InvariantError::Algebra(e.into()))?;
        let aq = self.alg.reduce_into(fq)?;
        let cen = aq.center();
        match mode {
            Mode::Subalgebra => SubalgebraSearch::new(&aq, cen, DEFAULT_NODE_CAP).exists(d),
            Mode::Ideal => {
                if cen.dim() >= d {
                    return Ok(true);
                }
                let levels = abelian_ideal_levels(&aq, cen.clone(), Some(d), DEFAULT_LEVEL_CAP)?;
                Ok(levels.get(d - cen.dim()).is_some_and(|l| !l.is_empty()))
            }
        }
    }

    fn compute(&mut self, mode: Mode, alpha: Option<&InvariantValue>) -> Result<InvariantValue, InvariantError> {
        let n = self.alg.dim();
        let c = self.center.dim();
        if self.alg.is_abelian_algebra() {
            self.fp_max(mode)?;
            return Ok(InvariantValue {
                value: n,
                grade: Grade::Certified,
                witness: Witness::rational(self.alg.whole()),
                certificates: Vec::new(),
            });
        }
        self.fp_max(mode)?;
        let est: Vec<usize> = self.estimating().iter().map(|r| Self::fp_value(r, mode)).collect();
        let mut hi = est.iter().copied().max().unwrap_or(n - 1).min(n - 1);
        if let Some(a) = alpha {
            hi = hi.min(a.value);
        }

        let mut lower = c;
        let mut witness = Witness::rational(self.center.clone());
        for d in (c + 1..=hi).rev() {
            if let Some(w) = self.quick_witness(d, mode)? {
                lower = d;
                witness = Witness::rational(w);
                break;
            }
        }
        self.check_lower(lower, mode, witness.subspace.as_ref())?;

        let mut certificates = Vec::new();
        let mut grade = Grade::Certified;
        let value;
        if self.groebner {
            let mut d = lower + 1;
            loop {
                if alpha.is_some_and(|a| a.grade == Grade::Certified && d > a.value) {
                    certificates.push(DimCertificate {
                        dim: d,
                        method: Method::ImpliedByAlpha,
                        status: "no abelian subalgebra of this dimension".into(),
                    });
                    value = d - 1;
                    break;
                }
                match certify_upper_bound(self.alg, d, mode, self.space, self.budget) {
                    UpperBound::Infeasible { patterns, bad_primes } => {
                        self.check_infeasible(d, mode, &bad_primes)?;
                        certificates.push(DimCertificate {
                            dim: d,
                            method: Method::GroebnerInfeasible { patterns, space: self.space },
                            status: format!("all {patterns} pattern systems have basis {{1}}"),
                        });
                        value = d - 1;
                        break;
                    }
                    UpperBound::Feasible { witness: Some(w), .. } => {
                        self.check_lower(d, mode, Some(&w))?;
                        witness = Witness::rational(w);
                        d += 1;
                    }
                    UpperBound::Feasible { pivots, witness: None } => {
                        witness = Witness::algebraic(&pivots, self.fp_sample(d, mode));
                        d += 1;
                    }
                    UpperBound::Unknown { pivots, reason } => {
                        self.budget_exhausted = true;
                        grade = Grade::Probabilistic;
                        let u = est.iter().copied().min().unwrap_or(lower).max(lower);
                        certificates.push(DimCertificate {
                            dim: d,
                            method: Method::None,
                            status: format!("Gröbner run on pattern {pivots:?} stopped: {reason}"),
                        });
                        certificates.push(self.fp_certificate(u + 1));
                        if u > witness_dim(&witness, lower) {
                            witness = self.fp_only_witness(u, mode);
                        }
                        value = u;
                        break;
                    }
                }
            }
        } else {
            grade = Grade::Probabilistic;
            let mut u = est.iter().copied().min().unwrap_or(lower).max(lower);
            let mut fields: Vec<String> = self.estimating().iter().map(|r| format!("F_{}", r.p)).collect();
            if let Some(p) = self.quad_prime() {
                fields.push(format!("F_{}", p * p));
                while u < n - 1 && self.quad_has(p, u + 1, mode)? && alpha.is_none_or(|a| u < a.value) {
                    u += 1;
                }
            }
            if u > lower {
                witness = self.fp_only_witness(u, mode);
            }
            certificates.push(DimCertificate {
                dim: u + 1,
                method: Method::ExhaustiveFp { fields },
                status: "no witness found".into(),
            });
            value = u;
        }
        Ok(InvariantValue { value, grade, witness, certificates })
    }

    fn fp_certificate(&self, d: usize) -> DimCertificate {
        let fields = self.estimating().iter().map(|r| format!("F_{}", r.p)).collect();
        DimCertificate { dim: d, method: Method::ExhaustiveFp { fields }, status: "no witness found".into() }
    }

    fn fp_only_witness(&self, d: usize, mode: Mode) -> Witness {
        Witness {
            kind: WitnessKind::FiniteField,
            basis: None,
            pattern: None,
            display: format!("no exact witness found{}", self.fp_sample(d, mode)),
            subspace: None,
        }
    }
}

fn witness_dim(w: &Witness, lower: usize) -> usize {
    w.subspace.as_ref().map(|s| s.dim()).unwrap_or(lower)
}

/// Primes to scan: the requested integral ones, plus the smallest faithful
/// tracked prime when none of them is faithful.
fn reductions(alg: &Algebra<RationalField>, primes: &[u64]) -> Result<Vec<Reduction>, InvariantError> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &p in primes {
        if !seen.insert(p) {
            continue;
        }
        let quality = prime_quality(alg, p);
        if quality == PrimeQuality::NonIntegral {
            continue;
        }
        out.push(Reduction { p, quality, auto_added: false, alg: alg.reduce_mod(p)?, alpha: None, beta: None });
    }
    if !out.iter().any(|r| r.quality == PrimeQuality::Faithful) {
        if let Some(&p) = TRACKED_PRIMES.iter().find(|&&p| prime_quality(alg, p) == PrimeQuality::Faithful) {
            if !seen.contains(&p) {
                out.push(Reduction {
                    p,
                    quality: PrimeQuality::Faithful,
                    auto_added: true,
                    alg: alg.reduce_mod(p)?,
                    alpha: None,
                    beta: None,
                });
            }
        }
    }
    Ok(out)
}

pub fn alpha_beta(alg: &Algebra<RationalField>, opts: &AlphaBetaOptions) -> Result<AlphaBetaResult, InvariantError> {
    alg.require_zinbiel()?;
    let n = alg.dim();
    let groebner = match opts.groebner {
        GroebnerMode::Auto => n <= 5,
        GroebnerMode::On => true,
        GroebnerMode::Off => false,
    };
    let mut ctx = Ctx {
        alg,
        center: alg.center(),
        groebner,
        space: opts.space.unwrap_or(PatternSpace::auto(n)),
        budget: opts.budget,
        reductions: reductions(alg, &opts.primes)?,
        budget_exhausted: false,
    };
    let alpha = ctx.compute(Mode::Subalgebra, None)?;
    let beta = ctx.compute(Mode::Ideal, Some(&alpha))?;
    if beta.value > alpha.value {
        return Err(InvariantError::Inconsistent(format!("β = {} exceeds α = {}", beta.value, alpha.value)));
    }
    let enumeration = if opts.enumerate_ideals {
        let primes: Vec<u64> = ctx.reductions.iter().map(|r| r.p).collect();
        Some(enumerate_maximal_abelian_ideals(alg, &primes)?)
    } else {
        None
    };
    Ok(AlphaBetaResult {
        algebra: alg.name().unwrap_or("algebra").to_string(),
        dim: n,
        center_dim: ctx.center.dim(),
        groebner,
        alpha,
        beta,
        evidence: ctx
            .reductions
            .iter()
            .map(|r| PrimeEvidence {
                p: r.p,
                quality: r.quality,
                alpha: r.alpha,
                beta: r.beta,
                auto_added: r.auto_added,
            })
            .collect(),
        budget_exhausted: ctx.budget_exhausted,
        maximal_abelian_ideals: enumeration,
    })
}

/// Inclusion-maximal abelian ideals over each F_p (p-integral primes only)
/// and each F_{p²} (faithful odd primes), with rational lifts of the list
/// from the first faithful prime.
///
/// Every maximal abelian ideal contains the center, and in a nilpotent
/// algebra an abelian ideal properly inside another gains a central line of
/// the quotient, so the maximal ones are the ideals of the level scan from
/// the center that no ideal of the next level contains.
pub fn enumerate_maximal_abelian_ideals(
    alg: &Algebra<RationalField>,
    primes: &[u64],
) -> Result<IdealEnumeration, InvariantError> {
    alg.require_zinbiel()?;
    let mut per_prime = Vec::new();
    let mut quadratic = Vec::new();
    let mut lists: Vec<(u64, PrimeQuality, Vec<Subspace<PrimeField>>)> = Vec::new();
    for &p in primes {
        let quality = prime_quality(alg, p);
        if quality == PrimeQuality::NonIntegral {
            continue;
        }
        let list = maximal_abelian_ideals_fp(&alg.reduce_mod(p)?)?;
        per_prime.push(FieldCount { field: format!("F_{p}"), p, quality, count: list.len() });
        if quality == PrimeQuality::Faithful && p > 2 {
            let f = QuadExtField::new(p).map_err(|e| InvariantError::Algebra(e.into()))?;
            let count = maximal_abelian_ideals_fp(&alg.reduce_into(f)?)?.len();
            quadratic.push(FieldCount { field: format!("F_{}", p * p), p, quality, count });
        }
        lists.push((p, quality, list));
    }
    let mut rational: BTreeSet<Subspace<RationalField>> = BTreeSet::new();
    let mut all_lifted = true;
    if let Some((p, _, list)) = lists.iter().find(|(_, q, _)| *q == PrimeQuality::Faithful) {
        for w in list {
            match lift_subspace(alg, w, *p, Mode::Ideal, 1).into_iter().next() {
                Some(s) => {
                    rational.insert(s);
                }
                None => all_lifted = false,
            }
        }
    }
    let count_over_closure = match quadratic.first() {
        Some(c) if quadratic.iter().all(|d| d.count == c.count) => Some(c.count),
        _ => None,
    };
    let reduces = rational.iter().all(|s| {
        lists
            .iter()
            .filter(|(_, q, _)| *q == PrimeQuality::Faithful)
            .all(|(p, _, list)| reduce_subspace(s, *p).is_some_and(|sp| list.contains(&sp)))
    });
    let resolved = all_lifted && reduces && count_over_closure == Some(rational.len());
    let rational: Vec<_> = rational.into_iter().collect();
    Ok(IdealEnumeration {
        per_prime,
        quadratic,
        count_over_closure,
        resolved,
        ideals: rational.iter().map(|s| s.format(&RationalField)).collect(),
        dims: rational.iter().map(|s| s.dim()).collect(),
        rational,
    })
}

pub fn maximal_abelian_ideals_fp<F: FiniteField>(alg: &Algebra<F>) -> Result<Vec<Subspace<F>>, InvariantError> {
    let levels = abelian_ideal_levels(alg, alg.center(), None, DEFAULT_LEVEL_CAP)?;
    let f = alg.field();
    let mut out = Vec::new();
    for (k, level) in levels.iter().enumerate() {
        let next = levels.get(k + 1);
        for s in level {
            if !next.is_some_and(|nx| nx.iter().any(|t| s.is_subspace_of(f, t))) {
                out.push(s.clone());
            }
        }
    }
    Ok(out)
}

//! Acceptance criteria 1–12. Each test prints one `criterion N: PASS|FAIL`
//! line (written straight to stderr so it shows without `--nocapture`) and
//! then asserts.

use std::collections::HashMap;
use std::io::Write;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zinbiel::algebra::{Algebra, Subspace};
use zinbiel::catalog::{self, CatalogEntry};
use zinbiel::cli::{verify_tables, Scope, TableReport};
use zinbiel::field::{Field, PrimeField, Rational, RationalField};
use zinbiel::groebner::{is_infeasible, parse_polynomial, verify, Budget, Feasibility};
use zinbiel::invariants::{
    alpha_beta, certify_upper_bound, check_codim_one, check_codim_two, check_filiform_member, enumerate_subspaces_fp,
    filiform_readings, gaussian_binomial, maximal_subalgebras_fp, AlphaBetaOptions, AlphaBetaResult, FiliformKind,
    Grade, GroebnerMode, Mode, PatternSpace, Status, UpperBound, DEFAULT_ENUMERATION_CAP,
};
use zinbiel::rewriter::{enumerate_bracketings, evaluate, evaluate_combo, left_normalize};

fn report(n: usize, pass: bool, detail: &str) {
    let line = format!("criterion {n:>2}: {} {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(pass, "criterion {n} failed: {detail}");
}

fn instances(max_dim: usize) -> Vec<(&'static CatalogEntry, Option<Rational>, Algebra<RationalField>)> {
    let mut out = Vec::new();
    for e in catalog::all_entries().iter().filter(|e| e.dim <= max_dim) {
        for p in e.samples() {
            let a = e.instance(p.as_ref()).unwrap().with_name(e.label(p.as_ref()));
            out.push((e, p, a));
        }
    }
    out
}

fn table_verdict(r: &TableReport, limit: Duration) -> (bool, String) {
    let bad: Vec<String> = r
        .rows
        .iter()
        .filter(|x| x.mismatch || x.error.is_some() || x.grade != Some(Grade::Certified))
        .map(|x| match (x.published, x.alpha, x.beta) {
            (Some((pa, pb)), Some(a), Some(b)) => format!("{} published ({pa},{pb}) computed ({a},{b})", x.label),
            _ => format!("{} {}", x.label, x.error.as_deref().unwrap_or("not certified")),
        })
        .collect();
    let pass = bad.is_empty() && r.elapsed <= limit;
    let detail = format!(
        "{} entries, {} instances, {} mismatches, {} errors, {:.1?} (limit {:?}){}{}",
        r.entries,
        r.rows.len(),
        r.mismatches,
        r.errors,
        r.elapsed,
        limit,
        if bad.is_empty() { "" } else { "; " },
        bad.join("; ")
    );
    (pass, detail)
}

#[test]
fn criterion_01_small_table() {
    let r = verify_tables(Scope::Small, &AlphaBetaOptions::default());
    let labels: Vec<&str> = r.rows.iter().map(|x| x.label.as_str()).collect();
    let cases = ["Z3_3(alpha=0)", "Z3_3(alpha=1)", "Z4_8(alpha=1)", "Z4_8(alpha=0)"].iter().all(|l| labels.contains(l));
    let (pass, detail) = table_verdict(&r, Duration::from_secs(120));
    report(1, pass && cases && r.entries == 21, &detail);
}

#[test]
fn criterion_02_dim5_tables() {
    let r = verify_tables(Scope::Dim5, &AlphaBetaOptions::default());
    let (pass, detail) = table_verdict(&r, Duration::from_secs(30 * 60));
    report(2, pass && r.entries == 82, &detail);
}

#[test]
fn criterion_03_six_dim_algebra() {
    let z = catalog::six_dim();
    let opts = AlphaBetaOptions {
        groebner: GroebnerMode::On,
        primes: vec![5, 7],
        enumerate_ideals: true,
        ..Default::default()
    };
    let r = alpha_beta(&z, &opts).unwrap();
    let mut fails = Vec::new();
    let q = |v: i64| Rational::integer(v);
    let stated = Subspace::coordinate(&RationalField, 6, &[2, 3, 4, 5]);
    assert!(z.is_abelian(&stated));
    if r.alpha.value != 4 || r.alpha.grade != Grade::Certified || r.alpha.witness.subspace.as_ref() != Some(&stated) {
        fails.push(format!("α = {} witness {}", r.alpha.value, r.alpha.witness.display));
    }
    if r.beta.value != 3 || r.beta.grade != Grade::Certified {
        fails.push(format!("β = {}", r.beta.value));
    }
    let lcs = z.lower_central_series();
    let center = z.center();
    let e4 = z.e(4);
    let e56 = vec![q(0), q(0), q(0), q(0), q(1), q(-1)];
    if lcs.dims() != vec![6, 3, 2, 0] || lcs.terms[2] != center || center != z.subspace(&[e4, e56]) {
        fails.push(format!("series dims {:?}", lcs.dims()));
    }
    let en = r.maximal_abelian_ideals.as_ref().unwrap();
    let counts: Vec<usize> = en.per_prime.iter().map(|c| c.count).collect();
    if !(en.counts_agree() && counts.first() == Some(&3)) {
        fails.push(format!(
            "maximal abelian ideals over F_5, F_7: {counts:?} (expected 3), closure {:?}, rational [{}]",
            en.count_over_closure,
            en.ideals.join(" | ")
        ));
    }
    match certify_upper_bound(&z, 4, Mode::Ideal, PatternSpace::Full, Budget::default()) {
        UpperBound::Infeasible { patterns: 15, .. } => {}
        other => fails.push(format!("dim-4 ideal certificate: {other:?}")),
    }
    let detail = if fails.is_empty() {
        "α = 4 via span{e3,e4,e5,e6}, β = 3, series 6 ⊃ 3 ⊃ 2 = center ⊃ 0, 3 maximal ideals, 15 patterns infeasible"
            .to_string()
    } else {
        fails.join("; ")
    };
    report(3, fails.is_empty(), &detail);
}

fn catalog_values() -> Vec<(String, Algebra<RationalField>, AlphaBetaResult)> {
    let mut out: Vec<_> = instances(5)
        .into_iter()
        .map(|(_, _, a)| {
            let r = alpha_beta(&a, &AlphaBetaOptions::default()).unwrap();
            (a.name().unwrap().to_string(), a, r)
        })
        .collect();
    let z = catalog::six_dim();
    let r = alpha_beta(&z, &AlphaBetaOptions { groebner: GroebnerMode::On, ..Default::default() }).unwrap();
    out.push(("six-dim".into(), z, r));
    out
}

#[test]
fn criterion_04_codim_one() {
    let mut applicable = 0;
    let mut fails = Vec::new();
    for (name, a, r) in catalog_values() {
        let rep = check_codim_one(&a, &r, &[2, 3, 5, 7]).unwrap();
        match rep.status {
            Status::Verified => applicable += 1,
            Status::Violated => fails.push(format!("{name}: {}", rep.details.join(", "))),
            Status::NotApplicable => {}
        }
    }
    let pass = fails.is_empty() && applicable > 0;
    report(
        4,
        pass,
        &format!("{applicable} algebras with α = n − 1, all witnesses ideals and β = n − 1{}", fails.join("; ")),
    );
}

#[test]
fn criterion_05_codim_two() {
    let mut applicable = 0;
    let mut fails = Vec::new();
    let mut realized = (false, false);
    for (name, a, r) in catalog_values() {
        let rep = check_codim_two(&a, &r).unwrap();
        match rep.status {
            Status::Verified => {
                applicable += 1;
                let n = a.dim();
                if name == "Z5_12" && r.beta.value + 2 == n {
                    realized.0 = true;
                }
                if name == "six-dim" && r.beta.value + 3 == n {
                    realized.1 = true;
                }
            }
            Status::Violated => fails.push(format!("{name}: {}", rep.details.join(", "))),
            Status::NotApplicable => {}
        }
    }
    let pass = fails.is_empty() && realized == (true, true);
    report(
        5,
        pass,
        &format!(
            "{applicable} supersolvable algebras with α = n − 2; n − 2 realized by Z5_12: {}, n − 3 by six-dim: {}{}",
            realized.0,
            realized.1,
            fails.join("; ")
        ),
    );
}

#[test]
fn criterion_06_null_filiform() {
    let mut fails = Vec::new();
    let opts = AlphaBetaOptions { primes: vec![2, 3, 5], ..Default::default() };
    for n in 3..=9 {
        let (rep, r) = check_filiform_member(n, FiliformKind::Null, &opts).unwrap();
        let en = r.maximal_abelian_ideals.as_ref().unwrap();
        let small: Vec<usize> = en.per_prime.iter().filter(|c| [2, 3, 5].contains(&c.p)).map(|c| c.count).collect();
        if small.len() != 3 || small.iter().any(|&c| c != 1) {
            fails.push(format!("NF_{n}: counts at 2, 3, 5 = {small:?}"));
        }
        if n <= 5 && r.grade() != Grade::Certified {
            fails.push(format!("NF_{n} not Gröbner-certified"));
        }
        if rep.status != Status::Verified {
            fails.push(format!("NF_{n}: {}", rep.details.join(", ")));
        }
    }
    let detail = if fails.is_empty() {
        "n = 3..9: α = β = n − ⌊n/2⌋, unique ideal span{e_(⌊n/2⌋+1)..e_n}, counts 1 at p = 2, 3, 5, certified for n ≤ 5"
            .into()
    } else {
        fails.join("; ")
    };
    report(6, fails.is_empty(), &detail);
}

#[test]
fn criterion_07_filiform() {
    let mut fails = Vec::new();
    let mut lines = Vec::new();
    let opts = AlphaBetaOptions { primes: vec![2, 3, 5], ..Default::default() };
    for n in 4..=8 {
        let (literal, dims) = filiform_readings(n);
        for v in 1..=3u8 {
            let (rep, r) = check_filiform_member(n, FiliformKind::Variant(v), &opts).unwrap();
            let b = r.beta.value;
            lines.push(format!(
                "F{n}^{v} β={b} literal{}{literal:?} ideal-dim{}{dims:?}",
                if literal.contains(&b) { "∋" } else { "∌" },
                if dims.contains(&b) { "∋" } else { "∌" }
            ));
            if rep.status != Status::Verified {
                fails.push(format!("F{n}^{v}: {}", rep.details.join(", ")));
            }
        }
    }
    let _ = std::io::stderr().write_all(format!("  readings: {}\n", lines.join(", ")).as_bytes());
    let detail = if fails.is_empty() {
        "n = 4..8, variants 1–3: α = β, unique ideal A or B".into()
    } else {
        fails.join("; ")
    };
    report(7, fails.is_empty(), &detail);
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| Rational::integer(rng.gen_range(-3..=3))).collect()
}

#[test]
fn criterion_08_left_normalize() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0usize;
    let mut fails = Vec::new();
    let exprs: Vec<_> = (3..=5).flat_map(|m| enumerate_bracketings(m).unwrap()).collect();
    assert_eq!(exprs.len(), 2 + 5 + 14);
    let combos: Vec<_> = exprs.iter().map(left_normalize).collect();
    for (_, _, a) in instances(5) {
        for _ in 0..10 {
            let env: HashMap<String, Vec<Rational>> =
                (1..=5).map(|i| (format!("g{i}"), random_vector(&mut rng, a.dim()))).collect();
            for (e, c) in exprs.iter().zip(&combos) {
                checked += 1;
                if evaluate(e, &a, &env).unwrap() != evaluate_combo(c, &a, &env).unwrap() {
                    fails.push(format!("{} on {}", e, a.name().unwrap()));
                }
            }
        }
    }
    report(
        8,
        fails.is_empty(),
        &format!("{checked} evaluations{}", fails.iter().take(5).cloned().collect::<Vec<_>>().join("; ")),
    );
}

fn tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out.into_iter().flat_map(|t| (1..=n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

#[test]
fn criterion_09_nilpotent_bracketings() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut algebras = 0;
    let mut evaluations = 0usize;
    let mut fails = Vec::new();
    for (_, _, a) in instances(5) {
        let Some(m) = a.lower_central_series().index else { continue };
        if !(2..=5).contains(&m) {
            continue;
        }
        algebras += 1;
        let n = a.dim();
        let exprs = enumerate_bracketings(m).unwrap();
        let all: Vec<Vec<usize>> = if n <= 4 {
            tuples(n, m)
        } else {
            (0..500).map(|_| (0..m).map(|_| rng.gen_range(1..=n)).collect()).collect()
        };
        for t in &all {
            let env: HashMap<String, Vec<Rational>> =
                t.iter().enumerate().map(|(i, &b)| (format!("g{}", i + 1), a.e(b))).collect();
            for e in &exprs {
                evaluations += 1;
                if !a.is_zero_vector(&evaluate(e, &a, &env).unwrap()) {
                    fails.push(format!("{} {e} at {t:?}", a.name().unwrap()));
                }
            }
        }
    }
    report(
        9,
        fails.is_empty() && algebras > 0,
        &format!(
            "{algebras} algebras, {evaluations} evaluations{}",
            fails.iter().take(5).cloned().collect::<Vec<_>>().join("; ")
        ),
    );
}

/// `Π_{i<d} (q^{n−i} − 1) / (q^{i+1} − 1)`, independently of the library.
fn gaussian_product(n: usize, d: usize, q: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow(i as u32 + 1) - 1;
    }
    num / den
}

#[test]
fn criterion_10_subspace_counts() {
    let mut fails = Vec::new();
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        let f = PrimeField::new(p).unwrap();
        for n in 0..=6 {
            for d in 0..=n {
                cases += 1;
                let expected = gaussian_product(n, d, p as u128);
                let counted = enumerate_subspaces_fp(&f, n, d, DEFAULT_ENUMERATION_CAP).unwrap().count() as u128;
                if counted != expected || gaussian_binomial(n, d, p) != expected {
                    fails.push(format!("n={n} d={d} p={p}: {counted} vs {expected}"));
                }
            }
        }
    }
    report(10, fails.is_empty(), &format!("{cases} (n, d, p) cases{}", fails.join("; ")));
}

fn random_system(rng: &mut ChaCha8Rng, nvars: usize) -> Vec<String> {
    let vars = ["x", "y", "z"];
    let npolys = rng.gen_range(1..=3);
    (0..npolys)
        .map(|_| {
            let nterms = rng.gen_range(1..=3);
            let mut terms = Vec::new();
            for _ in 0..nterms {
                let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let deg = rng.gen_range(1..=2);
                let mon: Vec<&str> = (0..deg).map(|_| vars[rng.gen_range(0..nvars)]).collect();
                terms.push(format!("{c}*{}", mon.join("*")));
            }
            if rng.gen_bool(0.6) {
                terms.push(format!("{}", rng.gen_range(-3..=3)));
            }
            terms.join(" + ").replace("+ -", "- ")
        })
        .collect()
}

fn has_point_mod(p: u64, names: &[String], polys: &[String]) -> bool {
    let f = PrimeField::new(p).unwrap();
    let ps: Vec<_> = polys.iter().map(|s| parse_polynomial(&f, names, s).unwrap()).collect();
    let k = names.len();
    let total = (p as usize).pow(k as u32);
    (0..total).any(|mut idx| {
        let pt: Vec<_> = (0..k)
            .map(|_| {
                let v = f.from_i64((idx % p as usize) as i64);
                idx /= p as usize;
                v
            })
            .collect();
        ps.iter().all(|q| f.is_zero(&q.eval(&f, &pt)))
    })
}

#[test]
fn criterion_11_groebner_self_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut fails = Vec::new();
    let (mut infeasible, mut feasible, mut compared) = (0, 0, 0);
    for _ in 0..50 {
        let nvars = rng.gen_range(1..=3);
        let names: Vec<String> = ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect();
        let polys = random_system(&mut rng, nvars);
        let q: Vec<_> = polys.iter().map(|s| parse_polynomial(&RationalField, &names, s).unwrap()).collect();
        match is_infeasible(&RationalField, &q, Budget::default()) {
            Feasibility::Infeasible(gb) => {
                infeasible += 1;
                if verify(&RationalField, &q, &gb).is_err() {
                    fails.push(format!("{polys:?}: basis fails post-hoc verification"));
                }
                for p in [5u64, 7] {
                    if gb.specializes_mod(p) {
                        compared += 1;
                        if has_point_mod(p, &names, &polys) {
                            fails.push(format!("{polys:?}: infeasible over ℚ, solution mod {p}"));
                        }
                    }
                }
            }
            Feasibility::Feasible { basis, point } => {
                feasible += 1;
                if verify(&RationalField, &q, &basis).is_err() {
                    fails.push(format!("{polys:?}: basis fails post-hoc verification"));
                }
                if let Some(pt) = point {
                    if q.iter().any(|f| !f.eval(&RationalField, &pt).is_zero()) {
                        fails.push(format!("{polys:?}: returned point is not a zero"));
                    }
                }
            }
            Feasibility::Unknown(e) => fails.push(format!("{polys:?}: {e}")),
        }
    }
    report(
        11,
        fails.is_empty() && infeasible > 0 && feasible > 0,
        &format!(
            "50 systems: {infeasible} infeasible, {feasible} feasible, {compared} mod-p comparisons{}",
            fails.join("; ")
        ),
    );
}

#[test]
fn criterion_12_maximal_subalgebras() {
    let mut fails = Vec::new();
    let mut scanned = 0;
    let mut skipped = Vec::new();
    for (_, _, a) in instances(4) {
        for p in [2u64, 3] {
            let Ok(ap) = a.reduce_mod(p) else {
                skipped.push(format!("{} mod {p}", a.name().unwrap()));
                continue;
            };
            scanned += 1;
            for s in maximal_subalgebras_fp(&ap).unwrap() {
                if s.dim() + 1 != a.dim() {
                    fails.push(format!("{} mod {p}: maximal subalgebra of dim {}", a.name().unwrap(), s.dim()));
                }
            }
        }
    }
    let detail = format!(
        "{scanned} (algebra, p) lattices scanned, skipped (non-integral) [{}]{}",
        skipped.join(", "),
        fails.join("; ")
    );
    report(12, fails.is_empty() && scanned > 0, &detail);
}

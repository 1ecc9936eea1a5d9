//! Command-line front end. `run` returns the process exit code:
//! 0 all checks passed, 1 mathematical mismatch, 2 input error,
//! 3 budget exhausted (some certificate downgraded).

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, AlgebraJson, AnyAlgebra};
use crate::catalog::{self, CatalogError, Group};
use crate::field::{Field, RationalField};
use crate::groebner::{is_infeasible, Budget, Feasibility, GroebnerError, SystemJson};
use crate::invariants::{
    alpha_beta, check_codim_one, check_codim_two, check_filiform, check_maximal_subalgebras, AlphaBetaOptions,
    AlphaBetaResult, Check, CheckReport, Grade, GroebnerMode, InvariantError, Status,
};
use crate::rewriter::{self, RewriteError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Overrides the per-pattern Gröbner time budget, in seconds.
pub const BUDGET_ENV: &str = "ZINBIEL_BUDGET_SECS";

/// `println!` that exits quietly once stdout is closed (`| head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(EXIT_OK);
        }
    }};
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(InvariantError::Inconsistent(_)) => EXIT_MISMATCH,
            CliError::Invariant(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "zinbiel", version, about = "Abelian subalgebras and ideals of Zinbiel algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Recompute α and β for catalog entries and compare with the published values
    VerifyTables {
        #[arg(long, default_value = "all")]
        scope: String,
        #[command(flatten)]
        common: Common,
    },
    /// α and β of one algebra (JSON file or catalog selector)
    AlphaBeta {
        input: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        enumerate_ideals: bool,
    },
    /// Lower central and derived series
    Series {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Center (two-sided annihilator)
    Center {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a structural statement across a scope of algebras
    Check {
        /// Comma-separated: codim-one, codim-two, maximal-subalgebras, filiform, or all
        which: String,
        #[arg(long, default_value = "all")]
        scope: String,
        /// Largest n for the filiform families
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rewrite a bracket expression as a sum of left-normed words
    Normalize { expr: String },
    /// Catalog access
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Feasibility of a polynomial system over ℚ ({"vars": [...], "polys": [...]})
    Groebner {
        system: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Show {
        id: String,
    },
    Export {
        id: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OnOff {
    On,
    Off,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Comma-separated primes for the finite-field scans
    #[arg(long, value_delimiter = ',', default_values_t = crate::field::DEFAULT_PRIMES.to_vec())]
    pub primes: Vec<u64>,
    /// Gröbner certificates (default: on for dimension ≤ 5)
    #[arg(long, value_enum)]
    pub groebner: Option<OnOff>,
    #[arg(long)]
    pub json: bool,
}

impl Common {
    pub fn options(&self) -> AlphaBetaOptions {
        let budget =
            std::env::var(BUDGET_ENV).ok().and_then(|s| s.parse().ok()).map(Budget::with_secs).unwrap_or_default();
        AlphaBetaOptions {
            primes: self.primes.clone(),
            groebner: match self.groebner {
                None => GroebnerMode::Auto,
                Some(OnOff::On) => GroebnerMode::On,
                Some(OnOff::Off) => GroebnerMode::Off,
            },
            budget,
            ..Default::default()
        }
    }
}

/// Catalog groups selected by `--scope`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Small,
    Dim5,
    All,
}

impl Scope {
    pub fn parse(s: &str) -> Result<Scope, CliError> {
        match s.replace(' ', "").as_str() {
            "dim<=4" | "dim≤4" | "small" => Ok(Scope::Small),
            "dim5" | "dim=5" => Ok(Scope::Dim5),
            "all" => Ok(Scope::All),
            other => Err(CliError::Usage(format!("unknown scope {other:?} (dim<=4, dim5, all)"))),
        }
    }

    pub fn contains(&self, g: Group) -> bool {
        match self {
            Scope::Small => g == Group::Small,
            Scope::Dim5 => g != Group::Small,
            Scope::All => true,
        }
    }
}

fn load(input: &str) -> Result<AnyAlgebra, CliError> {
    let path = Path::new(input);
    if path.extension().is_some_and(|e| e == "json") || path.is_file() {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        return Ok(AnyAlgebra::from_json_str(&text)?);
    }
    Ok(AnyAlgebra::Rational(catalog::resolve(input)?.algebra))
}

fn load_rational(input: &str) -> Result<Algebra<RationalField>, CliError> {
    match load(input)? {
        AnyAlgebra::Rational(a) => Ok(a),
        _ => Err(CliError::Usage("α and β are computed for algebras over ℚ only".into())),
    }
}

fn print_json<T: Serialize>(v: &T) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// One catalog instance in a table run.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub label: String,
    pub id: String,
    pub group: &'static str,
    pub published: Option<(usize, usize)>,
    pub alpha: Option<usize>,
    pub beta: Option<usize>,
    pub grade: Option<Grade>,
    pub witness: Option<String>,
    pub mismatch: bool,
    pub error: Option<String>,
    pub budget_exhausted: bool,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub scope: String,
    pub rows: Vec<TableRow>,
    pub entries: usize,
    pub mismatches: usize,
    pub errors: usize,
    #[serde(with = "millis")]
    pub elapsed: Duration,
}

mod millis {
    use serde::Serializer;
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u128(d.as_millis())
    }
}

impl TableReport {
    pub fn exit_code(&self) -> i32 {
        if self.mismatches > 0 || self.rows.iter().any(|r| r.error.as_ref().is_some_and(|_| !r.budget_exhausted)) {
            EXIT_MISMATCH
        } else if self.rows.iter().any(|r| r.budget_exhausted) {
            EXIT_BUDGET
        } else {
            EXIT_OK
        }
    }
}

pub fn verify_tables(scope: Scope, opts: &AlphaBetaOptions) -> TableReport {
    let start = Instant::now();
    let mut rows = Vec::new();
    let entries: Vec<_> = catalog::all_entries().iter().filter(|e| scope.contains(e.group)).collect();
    for e in &entries {
        for p in e.samples() {
            let t = Instant::now();
            let label = e.label(p.as_ref());
            let published = e.published_at(p.as_ref());
            let res = e.instance(p.as_ref()).map_err(CliError::from).and_then(|a| Ok(alpha_beta(&a, opts)?));
            let row = match res {
                Ok(r) => TableRow {
                    label,
                    id: e.id.clone(),
                    group: e.group.label(),
                    published,
                    alpha: Some(r.alpha.value),
                    beta: Some(r.beta.value),
                    grade: Some(r.grade()),
                    witness: Some(r.beta.witness.display.clone()),
                    mismatch: published != Some((r.alpha.value, r.beta.value)),
                    error: None,
                    budget_exhausted: r.budget_exhausted,
                    millis: t.elapsed().as_millis(),
                },
                Err(err) => TableRow {
                    label,
                    id: e.id.clone(),
                    group: e.group.label(),
                    published,
                    alpha: None,
                    beta: None,
                    grade: None,
                    witness: None,
                    mismatch: false,
                    budget_exhausted: matches!(err, CliError::Invariant(InvariantError::SearchBudget { .. })),
                    error: Some(err.to_string()),
                    millis: t.elapsed().as_millis(),
                },
            };
            rows.push(row);
        }
    }
    TableReport {
        scope: format!("{scope:?}"),
        entries: entries.len(),
        mismatches: rows.iter().filter(|r| r.mismatch).count(),
        errors: rows.iter().filter(|r| r.error.is_some()).count(),
        rows,
        elapsed: start.elapsed(),
    }
}

fn show_value(v: Option<usize>) -> String {
    v.map_or("-".into(), |x| x.to_string())
}

fn print_table(report: &TableReport) {
    out!("{:<22} {:>5} {:>5} {:>5} {:>5}  {:<13} status", "algebra", "α pub", "α", "β pub", "β", "grade");
    let mut group = "";
    for r in &report.rows {
        if r.group != group {
            group = r.group;
            out!("-- {group}");
        }
        let status = match (&r.error, r.mismatch) {
            (Some(e), _) => format!("ERROR {e}"),
            (None, true) => "MISMATCH".into(),
            (None, false) => "ok".into(),
        };
        out!(
            "{:<22} {:>5} {:>5} {:>5} {:>5}  {:<13} {status}",
            r.label,
            show_value(r.published.map(|p| p.0)),
            show_value(r.alpha),
            show_value(r.published.map(|p| p.1)),
            show_value(r.beta),
            r.grade.map_or("-".into(), |g| format!("{g:?}").to_lowercase()),
        );
    }
    out!(
        "{} entries, {} instances, {} mismatches, {} errors in {:.1?}",
        report.entries,
        report.rows.len(),
        report.mismatches,
        report.errors,
        report.elapsed
    );
}

fn print_alpha_beta(r: &AlphaBetaResult) {
    out!("{} (dim {}, center dim {})", r.algebra, r.dim, r.center_dim);
    for (name, v) in [("α", &r.alpha), ("β", &r.beta)] {
        out!("  {name} = {} [{:?}]", v.value, v.grade);
        out!("    witness ({:?}): {}", v.witness.kind, v.witness.display);
        for c in &v.certificates {
            out!("    dim {}: {}", c.dim, c.status);
        }
    }
    let ev: Vec<String> = r
        .evidence
        .iter()
        .map(|e| {
            format!(
                "F_{} ({:?}{}): α={} β={}",
                e.p,
                e.quality,
                if e.auto_added { ", added" } else { "" },
                show_value(e.alpha),
                show_value(e.beta)
            )
        })
        .collect();
    out!("  finite fields: {}", ev.join("; "));
    if let Some(en) = &r.maximal_abelian_ideals {
        let counts: Vec<String> =
            en.per_prime.iter().chain(&en.quadratic).map(|c| format!("{} {}", c.field, c.count)).collect();
        out!(
            "  maximal abelian ideals: {} ({}){}",
            en.count_over_closure.map_or("?".into(), |c| c.to_string()),
            counts.join(", "),
            if en.resolved { "" } else { " [unresolved]" }
        );
        for (s, d) in en.ideals.iter().zip(&en.dims) {
            out!("    dim {d}: {s}");
        }
    }
}

fn selected_checks(which: &str) -> Result<Vec<Check>, CliError> {
    if which == "all" {
        return Ok(Check::ALL.to_vec());
    }
    which
        .split(',')
        .map(|w| {
            Check::parse(w.trim()).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown check {w:?} (codim-one, codim-two, maximal-subalgebras, filiform, all)"
                ))
            })
        })
        .collect()
}

pub fn run_checks(
    checks: &[Check],
    scope: Scope,
    max_n: usize,
    opts: &AlphaBetaOptions,
) -> Result<Vec<CheckReport>, CliError> {
    let mut out = Vec::new();
    let needs_values = checks.iter().any(|c| matches!(c, Check::CodimOne | Check::CodimTwo));
    let mut algebras: Vec<Algebra<RationalField>> = Vec::new();
    for e in catalog::all_entries().iter().filter(|e| scope.contains(e.group)) {
        for p in e.samples() {
            algebras.push(e.instance(p.as_ref())?.with_name(e.label(p.as_ref())));
        }
    }
    if scope == Scope::All {
        algebras.push(catalog::six_dim());
    }
    for a in &algebras {
        let values = if needs_values { Some(alpha_beta(a, opts)?) } else { None };
        for c in checks {
            match c {
                Check::CodimOne => out.push(check_codim_one(a, values.as_ref().expect("computed"), &opts.primes)?),
                Check::CodimTwo => out.push(check_codim_two(a, values.as_ref().expect("computed"))?),
                Check::MaximalSubalgebras => out.push(check_maximal_subalgebras(a, &[2, 3], 4)?),
                Check::Filiform => {}
            }
        }
    }
    if checks.contains(&Check::Filiform) {
        for n in 3..=max_n {
            out.extend(check_filiform(n, opts)?);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct SeriesJson {
    name: Option<String>,
    field: String,
    lower_central: Vec<usize>,
    nilpotency_index: Option<usize>,
    derived: Vec<usize>,
    solvability_index: Option<usize>,
    terms: Vec<String>,
}

fn series_of<F: Field>(a: &Algebra<F>) -> SeriesJson {
    let lcs = a.lower_central_series();
    let der = a.derived_series();
    SeriesJson {
        name: a.name().map(str::to_string),
        field: a.field().descriptor().to_string(),
        lower_central: lcs.dims(),
        nilpotency_index: lcs.index,
        derived: der.dims(),
        solvability_index: der.index,
        terms: lcs.terms.iter().map(|t| t.format(a.field())).collect(),
    }
}

#[derive(Serialize)]
struct CenterJson {
    name: Option<String>,
    dim: usize,
    basis: String,
}

fn center_of<F: Field>(a: &Algebra<F>) -> CenterJson {
    let c = a.center();
    CenterJson { name: a.name().map(str::to_string), dim: c.dim(), basis: c.format(a.field()) }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::VerifyTables { scope, common } => {
            let report = verify_tables(Scope::parse(&scope)?, &common.options());
            if common.json {
                print_json(&report);
            } else {
                print_table(&report);
            }
            Ok(report.exit_code())
        }
        Command::AlphaBeta { input, common, enumerate_ideals } => {
            let a = load_rational(&input)?;
            a.require_zinbiel()?;
            let opts = AlphaBetaOptions { enumerate_ideals, ..common.options() };
            let r = alpha_beta(&a, &opts)?;
            if common.json {
                print_json(&r);
            } else {
                print_alpha_beta(&r);
            }
            Ok(if r.budget_exhausted { EXIT_BUDGET } else { EXIT_OK })
        }
        Command::Series { input, json } => {
            let s = match load(&input)? {
                AnyAlgebra::Rational(a) => series_of(&a),
                AnyAlgebra::Prime(a) => series_of(&a),
                AnyAlgebra::QuadExt(a) => series_of(&a),
            };
            if json {
                print_json(&s);
            } else {
                out!("lower central series dims {:?}", s.lower_central);
                match s.nilpotency_index {
                    Some(k) => out!("nilpotent, Z^{k} = 0"),
                    None => out!("not nilpotent"),
                }
                out!("derived series dims {:?}", s.derived);
                for (i, t) in s.terms.iter().enumerate() {
                    out!("  Z^{}: {t}", i + 1);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Center { input, json } => {
            let c = match load(&input)? {
                AnyAlgebra::Rational(a) => center_of(&a),
                AnyAlgebra::Prime(a) => center_of(&a),
                AnyAlgebra::QuadExt(a) => center_of(&a),
            };
            if json {
                print_json(&c);
            } else {
                out!("center: dim {}, {}", c.dim, c.basis);
            }
            Ok(EXIT_OK)
        }
        Command::Check { which, scope, max_n, common } => {
            let reports = run_checks(&selected_checks(&which)?, Scope::parse(&scope)?, max_n, &common.options())?;
            let violated = reports.iter().filter(|r| r.status == Status::Violated).count();
            if common.json {
                print_json(&reports);
            } else {
                for r in &reports {
                    out!("{:<20} {:<28} {:?}: {}", r.check.name(), r.algebra, r.status, r.details.join("; "));
                }
                let verified = reports.iter().filter(|r| r.status == Status::Verified).count();
                out!(
                    "{} reports: {verified} verified, {violated} violated, {} not applicable",
                    reports.len(),
                    reports.len() - verified - violated
                );
            }
            Ok(if violated > 0 { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Normalize { expr } => {
            let e = rewriter::parse(&expr)?;
            out!("{}", rewriter::left_normalize(&e));
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for e in catalog::all_entries() {
                        let param = e.parameter.as_ref().map_or(String::new(), |p| format!(" ({})", p.name));
                        out!("{:<7} dim {}  {}{param}", e.id, e.dim, e.group.label());
                    }
                }
                CatalogAction::Show { id } => {
                    let r = catalog::resolve(&id)?;
                    let a = &r.algebra;
                    out!("{} (dim {})", a.name().unwrap_or(&id), a.dim());
                    for (i, j, k, c) in a.nonzero_products() {
                        out!("  [e{i},e{j}] = {c} e{k}");
                    }
                    if let Some(e) = r.entry {
                        out!("  published: {:?}", e.published);
                    }
                }
                CatalogAction::Export { id, output } => {
                    let a = catalog::resolve(&id)?.algebra;
                    let json = serde_json::to_string_pretty(&AlgebraJson::from_algebra(&a)).expect("serializable");
                    fs::write(&output, json).map_err(|source| CliError::Io { path: output.clone(), source })?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Groebner { system, json } => {
            let text = fs::read_to_string(&system).map_err(|source| CliError::Io { path: system.clone(), source })?;
            let sys: SystemJson =
                serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", system.display())))?;
            let polys = sys.parse(&RationalField)?;
            let budget =
                std::env::var(BUDGET_ENV).ok().and_then(|s| s.parse().ok()).map(Budget::with_secs).unwrap_or_default();
            let res = is_infeasible(&RationalField, &polys, budget);
            let (label, basis, point) = match &res {
                Feasibility::Infeasible(_) => ("infeasible", vec!["1".to_string()], None),
                Feasibility::Feasible { basis, point } => (
                    "feasible",
                    basis.polys.iter().map(|p| p.format(&RationalField, &sys.vars)).collect(),
                    point.as_ref().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                ),
                Feasibility::Unknown(e) => ("unknown", vec![e.to_string()], None),
            };
            if json {
                print_json(&serde_json::json!({ "result": label, "basis": basis, "point": point }));
            } else {
                out!("{label}");
                for b in &basis {
                    out!("  {b}");
                }
                if let Some(p) = point {
                    out!("  rational point: ({})", p.join(", "));
                }
            }
            Ok(match res {
                Feasibility::Unknown(_) => EXIT_BUDGET,
                _ => EXIT_OK,
            })
        }
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

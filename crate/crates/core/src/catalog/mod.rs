//! Built-in algebras: the classified non-split complex Zinbiel algebras of
//! dimension ≤ 5 with published α/β values, the six-dimensional algebra
//! with α = 4, β = 3, and the null-filiform and filiform families.
//!
//! Catalog identifiers accepted by [`resolve`]:
//! `Z5_30`, `Z4_8:alpha=1`, `six-dim`, `NF:7`, `F:5:2`.

mod notation;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::field::{Rational, RationalField};

use tables::{Domain, Pub, ROWS};

pub(crate) use notation::parse_products;

/// Parameter values tried for every one-parameter family (minus excluded
/// values).
pub const SAMPLE_VALUES: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (-1, 1), (1, 2)];

pub const PARAMETER_NAME: &str = "alpha";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("{id} needs a value for parameter {name}")]
    MissingParameter { id: String, name: String },
    #[error("{id} has no parameter {name}")]
    UnexpectedParameter { id: String, name: String },
    #[error("{id} is not defined at {name} = {value}")]
    ExcludedParameter { id: String, name: String, value: String },
    #[error("malformed catalog id {0:?}")]
    BadSelector(String),
    #[error("family parameter out of range: {0}")]
    FamilyRange(String),
    #[error("bad product list: {0}")]
    Transcription(String),
    #[error("division by zero in product list {0:?}")]
    DivisionByZero(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which published list an entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    /// Dimension 2 to 4.
    Small,
    /// Dimension 5 with 2-dimensional annihilator.
    Ann2,
    /// Dimension 5 with 1-dimensional annihilator.
    Ann1,
}

impl Group {
    pub fn label(&self) -> &'static str {
        match self {
            Group::Small => "dim<=4",
            Group::Ann2 => "dim 5, 2-dim annihilator",
            Group::Ann1 => "dim 5, 1-dim annihilator",
        }
    }

    /// Center dimension stated for the group, if any.
    pub fn center_dim(&self) -> Option<usize> {
        match self {
            Group::Small => None,
            Group::Ann2 => Some(2),
            Group::Ann1 => Some(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "op", content = "value", rename_all = "kebab-case")]
pub enum Predicate {
    Eq(Rational),
    Ne(Rational),
}

impl Predicate {
    pub fn matches(&self, v: &Rational) -> bool {
        match self {
            Predicate::Eq(x) => v == x,
            Predicate::Ne(x) => v != x,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Eq(x) => write!(f, "{PARAMETER_NAME} = {x}"),
            Predicate::Ne(x) => write!(f, "{PARAMETER_NAME} != {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterCase {
    pub predicate: Predicate,
    pub alpha: usize,
    pub beta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Published {
    Values { alpha: usize, beta: usize },
    Cases(Vec<ParameterCase>),
}

impl Published {
    /// Published `(α, β)` at a parameter value.
    pub fn at(&self, param: Option<&Rational>) -> Option<(usize, usize)> {
        match self {
            Published::Values { alpha, beta } => Some((*alpha, *beta)),
            Published::Cases(cases) => {
                let v = param?;
                cases.iter().find(|c| c.predicate.matches(v)).map(|c| (c.alpha, c.beta))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameter {
    pub name: String,
    pub excluded: Vec<Rational>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub dim: usize,
    pub group: Group,
    pub parameter: Option<Parameter>,
    pub products: String,
    pub published: Published,
}

impl CatalogEntry {
    fn from_row(r: &tables::Row) -> Self {
        let parameter = match r.domain {
            Domain::Fixed => None,
            Domain::Any => Some(Parameter { name: PARAMETER_NAME.into(), excluded: vec![] }),
            Domain::Except(x) => Some(Parameter { name: PARAMETER_NAME.into(), excluded: vec![Rational::integer(x)] }),
        };
        let published = match r.published {
            Pub::Const(alpha, beta) => Published::Values { alpha, beta },
            Pub::Split { at, eq, ne } => Published::Cases(vec![
                ParameterCase { predicate: Predicate::Eq(Rational::integer(at)), alpha: eq.0, beta: eq.1 },
                ParameterCase { predicate: Predicate::Ne(Rational::integer(at)), alpha: ne.0, beta: ne.1 },
            ]),
        };
        Self { id: r.id.into(), dim: r.dim, group: r.group, parameter, products: r.products.into(), published }
    }

    pub fn source(&self) -> &'static str {
        self.group.label()
    }

    pub fn is_parametric(&self) -> bool {
        self.parameter.is_some()
    }

    /// Parameter values to test: `[None]` for a fixed algebra, otherwise the
    /// sample set minus excluded values.
    pub fn samples(&self) -> Vec<Option<Rational>> {
        match &self.parameter {
            None => vec![None],
            Some(p) => SAMPLE_VALUES
                .iter()
                .map(|&(n, d)| Rational::new(n, d))
                .filter(|v| !p.excluded.contains(v))
                .map(Some)
                .collect(),
        }
    }

    pub fn published_at(&self, param: Option<&Rational>) -> Option<(usize, usize)> {
        self.published.at(param)
    }

    /// Instance label, e.g. `Z4_8(alpha=1/2)`.
    pub fn label(&self, param: Option<&Rational>) -> String {
        match param {
            Some(v) => format!("{}({PARAMETER_NAME}={v})", self.id),
            None => self.id.clone(),
        }
    }

    pub fn instance(&self, param: Option<&Rational>) -> Result<Algebra<RationalField>, CatalogError> {
        match (&self.parameter, param) {
            (Some(p), None) => {
                return Err(CatalogError::MissingParameter { id: self.id.clone(), name: p.name.clone() })
            }
            (None, Some(_)) => {
                return Err(CatalogError::UnexpectedParameter { id: self.id.clone(), name: PARAMETER_NAME.into() })
            }
            (Some(p), Some(v)) if p.excluded.contains(v) => {
                return Err(CatalogError::ExcludedParameter {
                    id: self.id.clone(),
                    name: p.name.clone(),
                    value: v.to_string(),
                })
            }
            _ => {}
        }
        let products = parse_products(&self.products, param)?;
        let mut alg = Algebra::from_products(RationalField, self.dim, &products)?.with_name(self.label(param));
        if let Some(v) = param {
            alg = alg.with_params(vec![(PARAMETER_NAME.into(), v.to_string())]);
        }
        Ok(alg)
    }
}

/// Every table entry, in table order: 21 of dimension ≤ 4, then 82 of
/// dimension 5.
pub fn all_entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| ROWS.iter().map(CatalogEntry::from_row).collect())
}

pub fn entry(id: &str) -> Option<&'static CatalogEntry> {
    all_entries().iter().find(|e| e.id == id)
}

/// Table algebra by id, with parameters given by name.
pub fn get(id: &str, params: &BTreeMap<String, Rational>) -> Result<Algebra<RationalField>, CatalogError> {
    let e = entry(id).ok_or_else(|| CatalogError::UnknownId(id.into()))?;
    if let Some(name) = params.keys().find(|k| k.as_str() != PARAMETER_NAME || e.parameter.is_none()) {
        return Err(CatalogError::UnexpectedParameter { id: id.into(), name: name.clone() });
    }
    e.instance(params.get(PARAMETER_NAME))
}

/// Six-dimensional algebra with α = 4 and β = 3 = n − 3: its abelian
/// subalgebra span{e3, e4, e5, e6} is not contained in any abelian ideal of
/// the same dimension.
pub fn six_dim() -> Algebra<RationalField> {
    let products = parse_products(tables::SIX_DIM, None).expect("static product list");
    Algebra::from_products(RationalField, 6, &products).expect("indices in range").with_name("six-dim")
}

fn binomial_products(n: usize, bound: usize) -> Vec<(usize, usize, usize, Rational)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i + j <= bound {
                let c = num_integer::binomial((i + j - 1) as u64, j as u64);
                out.push((i, j, i + j, Rational::integer(c as i64)));
            }
        }
    }
    out
}

/// Null-filiform `NF_n`: `[e_i, e_j] = C(i+j−1, j) e_{i+j}` for `i + j ≤ n`.
pub fn null_filiform(n: usize) -> Result<Algebra<RationalField>, CatalogError> {
    if n < 2 {
        return Err(CatalogError::FamilyRange(format!("null-filiform needs n >= 2, got {n}")));
    }
    let alg = Algebra::from_products(RationalField, n, &binomial_products(n, n))?;
    Ok(alg.with_name(format!("NF_{n}")))
}

/// Filiform `F_n^v`: binomial products with `i + j ≤ n − 1`; variant 2 adds
/// `[e_n, e_1] = e_{n−1}`, variant 3 adds `[e_n, e_n] = e_{n−1}`.
pub fn filiform(n: usize, variant: u8) -> Result<Algebra<RationalField>, CatalogError> {
    if n < 4 {
        return Err(CatalogError::FamilyRange(format!("filiform needs n >= 4, got {n}")));
    }
    let mut products = binomial_products(n, n - 1);
    match variant {
        1 => {}
        2 => products.push((n, 1, n - 1, Rational::one())),
        3 => products.push((n, n, n - 1, Rational::one())),
        v => return Err(CatalogError::FamilyRange(format!("filiform variant must be 1, 2 or 3, got {v}"))),
    }
    let alg = Algebra::from_products(RationalField, n, &products)?;
    Ok(alg.with_name(format!("F{n}^{variant}")))
}

/// A catalog algebra picked by a textual selector.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub algebra: Algebra<RationalField>,
    pub entry: Option<&'static CatalogEntry>,
    pub param: Option<Rational>,
}

impl Resolved {
    /// Published `(α, β)` when known.
    pub fn published(&self) -> Option<(usize, usize)> {
        match self.entry {
            Some(e) => e.published_at(self.param.as_ref()),
            None => None,
        }
    }
}

fn parse_usize(sel: &str, s: &str) -> Result<usize, CatalogError> {
    s.parse().map_err(|_| CatalogError::BadSelector(sel.into()))
}

/// Parse `Z4_8:alpha=1`, `six-dim`, `NF:7` or `F:5:2`.
pub fn resolve(sel: &str) -> Result<Resolved, CatalogError> {
    let sel = sel.trim();
    if sel == "six-dim" {
        return Ok(Resolved { algebra: six_dim(), entry: None, param: None });
    }
    let parts: Vec<&str> = sel.split(':').collect();
    match parts.as_slice() {
        ["NF", n] => Ok(Resolved { algebra: null_filiform(parse_usize(sel, n)?)?, entry: None, param: None }),
        ["F", n, v] => {
            let v: u8 = v.parse().map_err(|_| CatalogError::BadSelector(sel.into()))?;
            Ok(Resolved { algebra: filiform(parse_usize(sel, n)?, v)?, entry: None, param: None })
        }
        [id, rest @ ..] => {
            let e = entry(id).ok_or_else(|| CatalogError::UnknownId((*id).into()))?;
            let mut params = BTreeMap::new();
            for kv in rest {
                let (k, v) = kv.split_once('=').ok_or_else(|| CatalogError::BadSelector(sel.into()))?;
                let v: Rational = v.parse().map_err(|_| CatalogError::BadSelector(sel.into()))?;
                params.insert(k.trim().to_string(), v);
            }
            let algebra = get(id, &params)?;
            Ok(Resolved { algebra, entry: Some(e), param: params.get(PARAMETER_NAME).cloned() })
        }
        [] => Err(CatalogError::BadSelector(sel.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let all = all_entries();
        assert_eq!(all.iter().filter(|e| e.dim <= 4).count(), 21);
        assert_eq!(all.iter().filter(|e| e.dim == 5).count(), 82);
        assert_eq!(all.last().unwrap().id, "Z5_82");
        for (k, e) in all.iter().filter(|e| e.dim == 5).enumerate() {
            assert_eq!(e.id, format!("Z5_{}", k + 1));
        }
    }

    #[test]
    fn lookup_and_parameters() {
        let z = get("Z2_1", &BTreeMap::new()).unwrap();
        assert_eq!(z.nonzero_products(), vec![(1, 1, 2, Rational::one())]);
        let r = resolve("Z4_8:alpha=1").unwrap();
        assert_eq!(r.published(), Some((3, 3)));
        assert_eq!(resolve("Z4_8:alpha=2").unwrap().published(), Some((2, 2)));
        assert!(matches!(resolve("Z4_15:alpha=1"), Err(CatalogError::ExcludedParameter { .. })));
        assert!(matches!(resolve("Z5_53:alpha=-1"), Err(CatalogError::ExcludedParameter { .. })));
        assert!(matches!(resolve("Z4_8"), Err(CatalogError::MissingParameter { .. })));
        assert!(matches!(resolve("Z2_1:alpha=1"), Err(CatalogError::UnexpectedParameter { .. })));
        assert!(matches!(resolve("Z9_1"), Err(CatalogError::UnknownId(_))));
        assert_eq!(entry("Z5_60").unwrap().published_at(None), Some((4, 4)));
        assert_eq!(entry("Z4_15").unwrap().samples().len(), 4);
        assert_eq!(resolve("NF:7").unwrap().algebra.dim(), 7);
        assert!(resolve("F:5:4").is_err());
    }

    #[test]
    fn filiform_products() {
        let q = |v| Rational::integer(v);
        let f1 = filiform(5, 1).unwrap();
        assert_eq!(f1.constant(2, 2, 4), &q(3));
        assert_eq!(f1.constant(2, 3, 5), &q(0));
        assert_eq!(filiform(5, 2).unwrap().constant(5, 1, 4), &q(1));
        assert_eq!(filiform(5, 3).unwrap().constant(5, 5, 4), &q(1));
        let nf4 = null_filiform(4).unwrap();
        let z41 = get("Z4_1", &BTreeMap::new()).unwrap();
        assert_eq!(nf4.nonzero_products(), z41.nonzero_products());
    }
}

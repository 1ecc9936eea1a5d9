//! α (largest abelian subalgebra) and β (largest abelian ideal), with exact
//! witnesses and upper-bound certificates, plus the structural
//! checks built on them.

mod alpha_beta;
mod checks;
mod enumerate;
mod search;
mod system;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::groebner::GroebnerError;

pub use alpha_beta::{
    alpha_beta, enumerate_maximal_abelian_ideals, lift_subspace, maximal_abelian_ideals_fp, prime_quality,
    AlphaBetaOptions, AlphaBetaResult, DimCertificate, FieldCount, Grade, GroebnerMode, IdealEnumeration,
    InvariantValue, Method, PrimeEvidence, PrimeQuality, Witness, WitnessKind,
};
pub use enumerate::{
    echelon_patterns, enumerate_subspaces_fp, gaussian_binomial, EchelonPattern, DEFAULT_ENUMERATION_CAP,
};
pub use search::{
    abelian_ideal_levels, abelian_ideals_of_dim, max_abelian_dim_fp, FpMaximum, SubalgebraSearch, DEFAULT_LEVEL_CAP,
    DEFAULT_NODE_CAP,
};

pub use checks::{
    abelian_hyperplanes, check_codim_one, check_codim_two, check_filiform, check_filiform_member,
    check_maximal_subalgebras, filiform_readings, maximal_subalgebras_fp, stated_ideal, Check, CheckReport,
    FiliformKind, Status,
};
pub use system::{certify_upper_bound, pattern_systems, Mode, PatternSpace, PatternSystem, UpperBound};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("refusing to enumerate {count} subspaces of dimension {d} in F_{q}^{n} (cap {cap})")]
    EnumerationTooLarge { n: usize, d: usize, q: u64, count: u128, cap: u128 },
    #[error("search stopped after {nodes} nodes")]
    SearchBudget { nodes: u64 },
    #[error("more than {cap} abelian ideals of dimension {dim}")]
    LevelTooLarge { dim: usize, cap: usize },
    #[error("inconsistent evidence: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

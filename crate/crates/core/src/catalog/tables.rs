//! Non-split, non-trivial complex Zinbiel algebras of dimension 2 to 5 with
//! their published α and β values. Only nonzero products are listed.

use super::Group::{self, *};

#[derive(Debug, Clone, Copy)]
pub(crate) enum Domain {
    Fixed,
    Any,
    Except(i64),
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Pub {
    Const(usize, usize),
    /// `(α, β)` when the parameter equals `at`, and otherwise.
    Split {
        at: i64,
        eq: (usize, usize),
        ne: (usize, usize),
    },
}

pub(crate) struct Row {
    pub id: &'static str,
    pub dim: usize,
    pub group: Group,
    pub domain: Domain,
    pub products: &'static str,
    pub published: Pub,
}

const fn row(id: &'static str, dim: usize, group: Group, products: &'static str, a: usize, b: usize) -> Row {
    Row { id, dim, group, domain: Domain::Fixed, products, published: Pub::Const(a, b) }
}

const fn fam(
    id: &'static str,
    dim: usize,
    group: Group,
    domain: Domain,
    products: &'static str,
    published: Pub,
) -> Row {
    Row { id, dim, group, domain, products, published }
}

pub(crate) const ROWS: &[Row] = &[
    row("Z2_1", 2, Small, "e1e1=e2", 1, 1),
    row("Z3_1", 3, Small, "e1e1=e2, e1e2=1/2e3, e2e1=e3", 2, 2),
    row("Z3_2", 3, Small, "e1e2=e3, e2e1=-e3", 2, 2),
    fam("Z3_3", 3, Small, Domain::Any, "e1e1=e3, e1e2=e3, e2e2=a e3", Pub::Split { at: 0, eq: (2, 2), ne: (1, 1) }),
    row("Z3_4", 3, Small, "e1e1=e3, e1e2=e3, e2e1=e3", 2, 2),
    row("Z4_1", 4, Small, "e1e1=e2, e1e2=e3, e2e1=2e3, e1e3=e4, e2e2=3e4, e3e1=3e4", 2, 2),
    row("Z4_2", 4, Small, "e1e1=e3, e1e2=e4, e1e3=e4, e3e1=2e4", 3, 3),
    row("Z4_3", 4, Small, "e1e1=e3, e1e3=e4, e2e2=e4, e3e1=2e4", 2, 2),
    row("Z4_4", 4, Small, "e1e2=e3, e1e3=e4, e2e1=-e3", 3, 3),
    row("Z4_5", 4, Small, "e1e2=e3, e1e3=e4, e2e1=-e3, e2e2=e4", 2, 2),
    row("Z4_6", 4, Small, "e1e1=e4, e1e2=e3, e2e1=-e3, e2e2=-2e3+e4", 2, 2),
    row("Z4_7", 4, Small, "e1e2=e3, e2e1=e4, e2e2=-e3", 3, 3),
    fam(
        "Z4_8",
        4,
        Small,
        Domain::Any,
        "e1e1=e3, e1e2=e4, e2e1=-a e3, e2e2=-e4",
        Pub::Split { at: 1, eq: (3, 3), ne: (2, 2) },
    ),
    fam("Z4_9", 4, Small, Domain::Any, "e1e1=e4, e1e2=a e4, e2e1=-a e4, e2e2=e4, e3e3=e4", Pub::Const(1, 1)),
    row("Z4_10", 4, Small, "e1e2=e4, e1e3=e4, e2e1=-e4, e2e2=e4, e3e1=e4", 2, 2),
    row("Z4_11", 4, Small, "e1e1=e4, e1e2=e4, e2e1=-e4, e3e3=e4", 2, 2),
    row("Z4_12", 4, Small, "e1e2=e3, e2e1=e4", 3, 3),
    row("Z4_13", 4, Small, "e1e2=e3, e2e1=-e3, e2e2=e4", 3, 3),
    row("Z4_14", 4, Small, "e2e1=e4, e3e1=e4", 3, 3),
    fam("Z4_15", 4, Small, Domain::Except(1), "e1e2=e4, e2e2=e3, e2e1=(1+a)/(1-a)e4", Pub::Const(3, 3)),
    row("Z4_16", 4, Small, "e1e2=e4, e2e1=-e4, e3e3=e4", 2, 2),
    // dimension 5, 2-dimensional annihilator
    row("Z5_1", 5, Ann2, "e1e1=e2, e1e2=e4, e2e1=2e4, e3e3=e4", 3, 3),
    row("Z5_2", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e4, e2e1=2e4", 3, 3),
    row("Z5_3", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4", 4, 4),
    fam("Z5_4", 5, Ann2, Domain::Any, "e1e1=e2, e1e2=e4, e1e3=a e5, e2e1=2e4, e3e1=e5", Pub::Const(4, 4)),
    row("Z5_5", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_6", 5, Ann2, "e1e1=e2, e1e2=e4, e3e3=e5, e2e1=2e4", 3, 3),
    row("Z5_7", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e4, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_8", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e4+e5, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_9", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4, e3e1=e4+2e5", 4, 4),
    row("Z5_10", 5, Ann2, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4, e3e3=e4", 3, 3),
    fam("Z5_11", 5, Ann2, Domain::Any, "e1e1=e2, e1e2=e4, e1e3=a e5, e2e1=2e4, e3e1=e5, e3e3=e4", Pub::Const(3, 3)),
    row("Z5_12", 5, Ann2, "e1e2=e3, e1e3=e4, e2e1=-e3, e2e2=e4", 3, 3),
    row("Z5_13", 5, Ann2, "e1e2=e3, e1e3=e4, e2e1=-e3", 4, 4),
    row("Z5_14", 5, Ann2, "e1e1=e4, e1e2=e3, e1e3=e5, e2e1=-e3", 4, 4),
    row("Z5_15", 5, Ann2, "e1e2=e3+e4, e1e3=e5, e2e1=-e3", 4, 4),
    row("Z5_16", 5, Ann2, "e1e2=e3, e2e1=-e3, e1e3=e5, e2e2=e4", 3, 3),
    row("Z5_17", 5, Ann2, "e1e1=e4, e1e2=e3, e2e1=-e3, e1e3=e5, e2e2=e4", 3, 3),
    row("Z5_18", 5, Ann2, "e1e2=e3, e2e1=-e3, e1e3=e5, e2e3=e4", 3, 3),
    row("Z5_19", 5, Ann2, "e1e1=e4, e1e2=e3, e2e1=-e3, e1e3=e5, e2e3=e4", 3, 3),
    row("Z5_20", 5, Ann2, "e1e2=e3+e4, e1e3=e5, e2e1=-e3, e2e3=e4", 3, 3),
    row("Z5_21", 5, Ann2, "e1e1=e4, e1e2=e3, e2e1=-e3, e1e3=e5, e2e2=e4, e2e3=e4", 3, 3),
    row("Z5_22", 5, Ann2, "e1e1=e4, e1e2=e3, e2e1=-e3, e1e3=e5, e2e2=e5", 3, 3),
    row("Z5_23", 5, Ann2, "e1e2=e3+e4, e1e3=e5, e2e1=-e3, e2e2=e5", 3, 3),
    // dimension 5, 1-dimensional annihilator
    row("Z5_24", 5, Ann1, "e1e1=e2, e1e2=e5, e1e3=e5, e2e1=2e5, e4e4=e5", 3, 3),
    fam("Z5_25", 5, Ann1, Domain::Any, "e1e1=e2, e1e2=e5, e2e1=2e5, e3e4=e5, e4e3=a e5", Pub::Const(3, 3)),
    row("Z5_26", 5, Ann1, "e1e1=e2, e1e2=e5, e2e1=2e5, e3e3=e5, e3e4=e5, e4e3=-e5", 3, 3),
    row("Z5_27", 5, Ann1, "e1e1=e2, e1e2=e5, e1e4=e5, e2e1=2e5, e3e4=e5, e4e3=2e5", 3, 3),
    row("Z5_28", 5, Ann1, "e1e1=e3, e1e3=e5, e2e2=e4, e2e4=e5, e3e1=2e5, e4e2=2e5", 3, 3),
    row("Z5_29", 5, Ann1, "e1e2=e3, e1e3=e5, e2e1=-e3, e2e4=e5", 3, 3),
    row("Z5_30", 5, Ann1, "e1e2=e3, e1e3=e5, e2e1=-e3, e4e1=e5", 4, 4),
    row("Z5_31", 5, Ann1, "e1e2=e3, e1e3=e5, e2e1=-e3, e2e2=e5, e4e1=e5", 3, 3),
    row("Z5_32", 5, Ann1, "e1e2=e3, e1e3=e5, e2e1=-e3, e2e4=e5, e4e1=e5", 3, 3),
    fam("Z5_33", 5, Ann1, Domain::Any, "e1e2=e3, e1e4=a e5, e2e1=-e3, e2e3=e5, e4e1=e5", Pub::Const(3, 3)),
    row("Z5_34", 5, Ann1, "e1e1=e5, e1e2=e3, e1e4=-e5, e2e1=-e3, e2e3=e5, e4e1=e5", 3, 3),
    row("Z5_35", 5, Ann1, "e1e2=e3, e2e1=-e3, e2e3=e5, e2e4=e5", 4, 4),
    row("Z5_36", 5, Ann1, "e1e1=e5, e1e2=e3, e2e1=-e3, e2e3=e5, e4e4=e5", 3, 3),
    fam("Z5_37", 5, Ann1, Domain::Any, "e1e1=a e5, e1e2=e3, e1e4=e5, e2e1=-e3, e2e3=e5, e4e4=e5", Pub::Const(3, 3)),
    row("Z5_38", 5, Ann1, "e1e2=e3, e2e1=-e3, e4e3=e5", 3, 3),
    row("Z5_39", 5, Ann1, "e1e1=e5, e1e2=e3, e2e1=-e3, e4e3=e5", 3, 3),
    row("Z5_40", 5, Ann1, "e1e2=e3+e5, e2e1=-e3, e4e3=e5", 3, 3),
    row("Z5_41", 5, Ann1, "e1e2=e3, e2e1=-e3, e2e4=e5, e4e3=e5", 3, 3),
    row("Z5_42", 5, Ann1, "e1e1=e5, e1e2=e3, e2e1=-e3, e2e4=e5, e4e3=e5", 3, 3),
    row("Z5_43", 5, Ann1, "e1e2=e3+e5, e2e1=-e3, e2e4=e5, e4e3=e5", 3, 3),
    row("Z5_44", 5, Ann1, "e1e2=e3, e2e1=-e3, e2e2=e5, e2e4=e5, e4e3=e5", 3, 3),
    row("Z5_45", 5, Ann1, "e1e1=e5, e1e2=e3, e2e1=-e3, e2e2=e5, e2e4=e5, e4e3=e5", 3, 3),
    row("Z5_46", 5, Ann1, "e1e2=e3, e1e3=e5, e1e4=-e5, e2e1=e4, e2e2=-e3, e2e3=-e5, e2e4=e5, e3e2=-2e5", 3, 3),
    row(
        "Z5_47",
        5,
        Ann1,
        "e1e1=e3, e1e2=e4, e1e4=-e5, e2e1=-e3, e2e2=-e4, e2e4=e5, e3e2=-e5, e4e1=-e5, e4e2=2e5",
        3,
        3,
    ),
    row(
        "Z5_48",
        5,
        Ann1,
        "e1e1=e3+e5, e1e2=e4, e1e3=-e5, e1e4=e5, e2e1=-e3, e2e2=-e4, e2e3=e5, e2e4=-e5, \
         e3e1=-2e5, e3e2=2e5, e4e1=2e5, e4e2=-2e5",
        3,
        3,
    ),
    row(
        "Z5_49",
        5,
        Ann1,
        "e1e1=e3, e1e2=e4, e1e3=-e5, e1e4=e5, e2e1=-e3, e2e2=-e4, e2e3=e5, e2e4=-e5, \
         e3e1=-2e5, e3e2=2e5, e4e1=2e5, e4e2=-2e5",
        3,
        3,
    ),
    row("Z5_50", 5, Ann1, "e1e2=e3, e1e3=-e5, e1e4=e5, e2e1=e4, e2e3=-e5, e2e4=e5", 3, 3),
    row("Z5_51", 5, Ann1, "e1e2=e3, e1e3=-e5, e1e4=e5, e2e1=e4, e2e2=e5", 3, 3),
    row("Z5_52", 5, Ann1, "e1e2=e3, e1e3=-e5, e1e4=e5, e2e1=e4", 4, 4),
    fam(
        "Z5_53",
        5,
        Ann1,
        Domain::Except(-1),
        "e1e2=e4, e1e3=(a+1)e5, e2e1=a e4, e2e2=e3, e2e4=2a e5, e3e1=2a(a+1)e5, e4e2=2(a+1)e5",
        Pub::Const(3, 3),
    ),
    row("Z5_54", 5, Ann1, "e1e2=e4, e1e3=e5, e2e1=e5, e2e2=e3, e4e2=2e5", 3, 3),
    row("Z5_55", 5, Ann1, "e1e1=e5, e1e2=e4, e1e3=1/2e5, e2e1=-1/2e4, e2e2=e3, e2e4=-e5, e3e1=-1/2e5, e4e2=e5", 3, 3),
    row(
        "Z5_56",
        5,
        Ann1,
        "e1e2=e4, e1e3=1/2e5, e2e1=-1/2e4, e2e2=e3, e2e3=e5, e2e4=-e5, e3e1=-1/2e5, e3e2=2e5, e4e2=e5",
        3,
        3,
    ),
    row(
        "Z5_57",
        5,
        Ann1,
        "e1e1=e5, e1e2=e4, e1e3=1/2e5, e2e1=-1/2e4, e2e2=e3, e2e3=e5, e2e4=-e5, e3e1=-1/2e5, \
         e3e2=2e5, e4e2=e5",
        3,
        3,
    ),
    row("Z5_58", 5, Ann1, "e1e2=e4, e1e4=e5, e2e1=-e4, e2e2=e3, e2e3=e5, e3e2=2e5", 3, 3),
    row("Z5_59", 5, Ann1, "e1e1=e5, e1e2=e4, e2e1=-e4, e2e2=e3, e2e3=e5, e2e4=e5, e3e2=2e5", 3, 3),
    row("Z5_60", 5, Ann1, "e1e2=e4, e2e1=-e4, e2e2=e3, e2e3=e5, e2e4=e5, e3e2=2e5", 4, 4),
    row("Z5_61", 5, Ann1, "e1e1=e2, e1e2=e3, e1e3=e5, e2e1=2e3, e2e2=3e5, e3e1=3e5, e4e4=e5", 3, 3),
    row("Z5_62", 5, Ann1, "e1e1=e2, e1e2=e3, e1e3=e5, e1e4=e5, e2e1=2e3, e2e2=3e5, e3e1=3e5", 3, 3),
    row(
        "Z5_63",
        5,
        Ann1,
        "e1e1=e2, e1e2=1/2e3, e1e3=2e4, e1e4=e5, e2e1=e3, e2e2=3e4, e2e3=8e5, e3e1=6e4, e3e2=12e5, e4e1=4e5",
        3,
        3,
    ),
    row("Z5_64", 5, Ann1, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4", 4, 4),
    fam("Z5_65", 5, Ann1, Domain::Any, "e1e1=e2, e1e2=e4, e1e3=a e5, e2e1=2e4, e3e1=e5", Pub::Const(4, 4)),
    row("Z5_66", 5, Ann1, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_67", 5, Ann1, "e1e1=e2, e1e2=e4, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_68", 5, Ann1, "e1e1=e2, e1e2=e4, e1e3=e4, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_69", 5, Ann1, "e1e1=e2, e1e2=e4, e1e3=e4+e5, e2e1=2e4, e3e3=e5", 3, 3),
    row("Z5_70", 5, Ann1, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4, e3e1=e4+2e5", 4, 4),
    row("Z5_71", 5, Ann1, "e1e1=e2, e1e2=e4, e1e3=e5, e2e1=2e4, e3e3=e4", 3, 3),
    fam("Z5_72", 5, Ann1, Domain::Any, "e1e1=e2, e1e2=e4, e1e3=a e5, e2e1=2e4, e3e1=e5, e3e3=e4", Pub::Const(3, 3)),
    row("Z5_73", 5, Ann1, "e1e1=e4, e1e2=e3, e1e3=e5, e2e1=-e3", 4, 4),
    row("Z5_74", 5, Ann1, "e1e2=e3+e4, e1e3=e5, e2e1=-e3", 4, 4),
    row("Z5_75", 5, Ann1, "e1e2=e3, e1e3=e5, e2e1=-e3, e2e2=e4", 3, 3),
    row("Z5_76", 5, Ann1, "e1e1=e4, e1e2=e3, e1e3=e5, e2e1=-e3, e2e2=e4", 3, 3),
    row("Z5_77", 5, Ann1, "e1e2=e3, e1e3=e5, e2e1=-e3, e2e3=e4", 3, 3),
    row("Z5_78", 5, Ann1, "e1e1=e4, e1e2=e3, e1e3=e5, e2e1=-e3, e2e3=e4", 3, 3),
    row("Z5_79", 5, Ann1, "e1e2=e3+e4, e1e3=e5, e2e1=-e3, e2e3=e4", 3, 3),
    row("Z5_80", 5, Ann1, "e1e1=e4, e1e2=e3, e1e3=e5, e2e1=-e3, e2e2=e4, e2e3=e4", 3, 3),
    row("Z5_81", 5, Ann1, "e1e1=e4, e1e2=e3, e1e3=e5, e2e1=-e3, e2e2=e5", 3, 3),
    row("Z5_82", 5, Ann1, "e1e2=e3+e4, e1e3=e5, e2e1=-e3, e2e2=e5", 3, 3),
];

/// The six-dimensional algebra with α = 4 and β = 3.
pub(crate) const SIX_DIM: &str = "e1e1=e5-e6, e1e2=e4+e5-e6, e3e2=e4+e5-e6, \
    e1e3=e2, e1e5=e2, e1e6=e2, e3e1=-e2, e5e2=e4, e6e2=e4, e5e1=-e2+2e4, e6e1=-e2+2e4";

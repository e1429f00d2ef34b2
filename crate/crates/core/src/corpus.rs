//! The shipped data files, embedded at compile time.

use crate::constructors::{GroupTable, GroupoidData, Involution, TableAlgebraData};
use crate::error::Result;
use crate::io::{parse, AlgebraFile, CoalgebraFile, GroupFile, GroupoidFile, InvolutionFile, SchemeFile};

macro_rules! data {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../data/", $name, ".json")))),*]
    };
}

pub const GROUPS: &[(&str, &str)] = data!(
    "groups/z1",
    "groups/z2",
    "groups/z3",
    "groups/z4",
    "groups/z5",
    "groups/z6",
    "groups/z7",
    "groups/z8",
    "groups/s3",
    "groups/s4",
    "groups/d4",
    "groups/q8",
);

pub const SCHEMES: &[(&str, &str)] = data!("schemes/c5", "schemes/c5_p", "schemes/petersen", "schemes/broken");

pub const GROUPOIDS: &[(&str, &str)] = data!(
    "groupoids/pair1",
    "groupoids/pair2",
    "groupoids/pair3",
    "groupoids/pair4",
    "groupoids/z2_disjoint_z2",
    "groupoids/z3_single",
);

/// `(path, group it acts on, file)`.
pub const INVOLUTIONS: &[(&str, &str, &str)] = &[
    ("involutions/z3_inversion", "z3", include_str!("../../../data/involutions/z3_inversion.json")),
    ("involutions/z4_inversion", "z4", include_str!("../../../data/involutions/z4_inversion.json")),
    ("involutions/z5_inversion", "z5", include_str!("../../../data/involutions/z5_inversion.json")),
    ("involutions/s3_conj_transposition", "s3", include_str!("../../../data/involutions/s3_conj_transposition.json")),
    ("involutions/q8_conj_i", "q8", include_str!("../../../data/involutions/q8_conj_i.json")),
];

pub const ALGEBRAS: &[(&str, &str)] =
    data!("algebras/m2", "algebras/m2_quaternionic", "algebras/m2_twisted", "algebras/dual_numbers");

pub const COALGEBRAS: &[(&str, &str)] = data!("coalgebras/m2c");

fn find<'a>(set: &[(&str, &'a str)], dir: &str, name: &str) -> &'a str {
    let key = format!("{dir}/{name}");
    set.iter().find(|(k, _)| *k == key).unwrap_or_else(|| panic!("no corpus file {key}")).1
}

/// Panics on an unknown name; corpus files are fixed at compile time.
pub fn group(name: &str) -> Result<GroupTable> {
    parse::<GroupFile>(find(GROUPS, "groups", name))?.build()
}

pub fn scheme(name: &str) -> Result<TableAlgebraData> {
    parse::<SchemeFile>(find(SCHEMES, "schemes", name))?.build()
}

pub fn groupoid(name: &str) -> Result<GroupoidData> {
    parse::<GroupoidFile>(find(GROUPOIDS, "groupoids", name))?.build()
}

pub fn involution(name: &str) -> Result<(GroupTable, Involution)> {
    let (_, g, text) = INVOLUTIONS
        .iter()
        .find(|(k, _, _)| *k == format!("involutions/{name}"))
        .unwrap_or_else(|| panic!("no corpus involution {name}"));
    let g = group(g)?;
    let inv = parse::<InvolutionFile>(text)?.build(&g)?;
    Ok((g, inv))
}

pub fn algebra(name: &str) -> Result<AlgebraFile> {
    parse(find(ALGEBRAS, "algebras", name))
}

pub fn coalgebra(name: &str) -> Result<CoalgebraFile> {
    parse(find(COALGEBRAS, "coalgebras", name))
}

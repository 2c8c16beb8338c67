//! Tables recomputed from lattice enumeration.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::h1::count_line_classes;
use crate::lattice::build_lattice;
use crate::mapping_class::{mods_group_structure, PhiMap};
use crate::mod2::strata_profile;
use crate::report::Report;
use crate::tritangent::{enumerate_tritangents, type_counts, TritangentType};
use crate::types::{SexticType, SurfaceTopology};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableSelector {
    Tritangents,
    Lattices,
    Mw,
    LineClasses,
    All,
}

impl FromStr for TableSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tritangents" => Ok(TableSelector::Tritangents),
            "lattices" => Ok(TableSelector::Lattices),
            "mw" => Ok(TableSelector::Mw),
            "line-classes" => Ok(TableSelector::LineClasses),
            "all" => Ok(TableSelector::All),
            _ => Err(Error::Parse(format!("unknown table {s:?}"))),
        }
    }
}

/// Column order of the tritangent count table.
pub const CENSUS_ORDER: [SexticType; 11] = [
    SexticType::PQ(4, 0),
    SexticType::PQ(3, 0),
    SexticType::PQ(2, 0),
    SexticType::PQ(1, 0),
    SexticType::PQ(0, 0),
    SexticType::PQ(1, 1),
    SexticType::ThreeJ,
    SexticType::PQ(0, 1),
    SexticType::PQ(0, 2),
    SexticType::PQ(0, 3),
    SexticType::PQ(0, 4),
];

/// Column order of the lattice and surface tables.
pub const LATTICE_ORDER: [SexticType; 11] = [
    SexticType::PQ(4, 0),
    SexticType::PQ(3, 0),
    SexticType::PQ(2, 0),
    SexticType::PQ(1, 0),
    SexticType::PQ(1, 1),
    SexticType::ThreeJ,
    SexticType::PQ(0, 0),
    SexticType::PQ(0, 1),
    SexticType::PQ(0, 2),
    SexticType::PQ(0, 3),
    SexticType::PQ(0, 4),
];

fn header(first: &str, cols: impl Iterator<Item = String>) -> Vec<String> {
    std::iter::once(first.to_string()).chain(cols).collect()
}

fn with_header(title: &str, columns: Vec<String>, seed: u64) -> Report {
    let mut r = Report::new(title, &[], seed);
    r.columns = columns;
    r
}

pub fn tritangent_table(seed: u64) -> Report {
    let cols = header("type", CENSUS_ORDER.iter().map(|s| format!("<{s}>")));
    let mut r = with_header("Positive tritangents by type", cols, seed);
    let counts: Vec<[usize; 5]> = CENSUS_ORDER.iter().map(|&s| type_counts(&enumerate_tritangents(s))).collect();
    for t in TritangentType::ALL {
        let mut row = vec![json!(t.to_string())];
        row.extend(counts.iter().map(|c| json!(c[t.index()])));
        r.push(row);
    }
    r
}

pub fn lattice_table(seed: u64) -> Report {
    let cols = header("", LATTICE_ORDER.iter().map(|s| format!("<{s}>")));
    let mut r = with_header("Lattices and mod-2 strata", cols, seed);
    let lattices: Vec<_> = LATTICE_ORDER.iter().map(|&s| build_lattice(s)).collect();
    let profiles: Vec<_> = lattices.iter().map(strata_profile).collect();
    let mut push = |name: &str, f: &dyn Fn(usize) -> Value| {
        let mut row = vec![json!(name)];
        row.extend((0..lattices.len()).map(f));
        r.push(row);
    };
    push("Lambda", &|i| json!(lattices[i].name.to_string()));
    push("|V|", &|i| json!(profiles[i].size_v));
    push("|R|", &|i| json!(profiles[i].size_r));
    push("|V1|", &|i| json!(profiles[i].size_v1));
    push("|R1|", &|i| json!(profiles[i].size_r1));
    push("|V1\\R1|", &|i| json!(profiles[i].size_v1_minus_r1));
    r
}

pub fn mw_table(seed: u64) -> Report {
    let surfaces: Vec<SurfaceTopology> = LATTICE_ORDER.iter().map(|s| s.surface()).collect();
    let cols = header("", surfaces.iter().map(ToString::to_string));
    let mut r = with_header("Image and kernel of Phi", cols, seed);
    let analyses: Vec<_> = surfaces.iter().map(|&s| PhiMap::new(s).analysis()).collect();
    let mut push = |name: &str, f: &dyn Fn(usize) -> String| {
        let mut row = vec![json!(name)];
        row.extend((0..surfaces.len()).map(|i| json!(f(i))));
        r.push(row);
    };
    push("MW", &|i| build_lattice(LATTICE_ORDER[i]).name.to_string());
    push("Mod^s", &|i| mods_group_structure(surfaces[i]).to_string());
    push("Im", &|i| analyses[i].image.to_string());
    push("Ker", &|i| {
        let k = analyses[i].kernel_rank;
        if k == 0 { "0".into() } else if k == 1 { "Z".into() } else { format!("Z^{k}") }
    });
    push("Coker", &|i| analyses[i].cokernel.to_string());
    r
}

pub fn line_class_table(seed: u64) -> Report {
    let surfaces: Vec<SurfaceTopology> = LATTICE_ORDER.iter().map(|s| s.surface()).collect();
    let cols = header("", surfaces.iter().map(ToString::to_string));
    let mut r = with_header("Classes realized by real lines", cols, seed);
    let mut row = vec![json!("N")];
    row.extend(surfaces.iter().map(|&s| json!(count_line_classes(s).to_string())));
    r.push(row);
    r
}

pub fn tables(which: TableSelector, seed: u64) -> Vec<Report> {
    match which {
        TableSelector::Tritangents => vec![tritangent_table(seed)],
        TableSelector::Lattices => vec![lattice_table(seed)],
        TableSelector::Mw => vec![mw_table(seed)],
        TableSelector::LineClasses => vec![line_class_table(seed)],
        TableSelector::All => vec![tritangent_table(seed), lattice_table(seed), mw_table(seed), line_class_table(seed)],
    }
}

//! Bundled reference graphs.
//!
//! Each entry is a `ddmog 1` file under `data/v1/`, embedded at compile time
//! and parsed on first access. Loading checks every entry that claims a DDM
//! labeling and every stated imbalance.

use once_cell::sync::Lazy;

use crate::algebra::{imbalance_vector, verify_ddm, Labeling};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::io::{parse, GraphDocument};
use crate::labeled::{LabeledGraph, Provenance};

pub const DATA_VERSION: &str = "v1";

struct Source {
    name: &'static str,
    text: &'static str,
    claims_ddm: bool,
    imbalance: i64,
}

macro_rules! source {
    ($name:literal, $ddm:expr, $imb:expr) => {
        Source {
            name: $name,
            text: include_str!(concat!("../data/v1/", $name, ".ddmog")),
            claims_ddm: $ddm,
            imbalance: $imb,
        }
    };
}

const SOURCES: &[Source] = &[
    source!("AUGMENTED_R5", true, 0),
    source!("C6_REVERSED", true, 0),
    source!("H4", false, 2),
    source!("H4_WSUM_C6", true, 1),
    source!("IMBALANCE_DEMO", false, 2),
    source!("K1", true, 0),
    source!("K1_WSUM_WINDMILL_2", true, 0),
    source!("R5", true, 1),
    source!("R5_CHAIN_R6", true, 1),
    source!("R5_CHAIN_R6_CHAIN_R6", true, 1),
    source!("R5_UNION_2C6", true, 1),
    source!("R6", true, 0),
    source!("R6_FIG6", true, 0),
    source!("R7", true, 1),
    source!("R7_ORNAMENTS_3", true, 1),
    source!("R8", true, 2),
    source!("R9", true, 1),
    source!("W4_NONDDM_LABELING", false, 1),
    source!("W4_NO_LABELING_ORIENTATION", false, 4),
    source!("WINDMILL_3", true, 1),
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: OrientedGraph,
    pub labeling: Option<Labeling>,
    /// First comment line of the data file.
    pub source: String,
    pub expected_imbalance: i64,
    pub document: GraphDocument,
}

impl CatalogEntry {
    pub fn labeled(&self) -> Option<LabeledGraph> {
        let labeling = self.labeling.clone()?;
        LabeledGraph::new(self.graph.clone(), labeling, Provenance::leaf("catalog", self.name)).ok()
    }

    pub fn is_ddm(&self) -> bool {
        self.labeling
            .as_ref()
            .is_some_and(|f| verify_ddm(&self.graph, f).is_ok_and(|v| v.is_ddm))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogSummary {
    pub name: &'static str,
    pub order: usize,
    pub edge_count: usize,
    pub is_ddm: bool,
    pub imbalance: i64,
}

fn load(src: &Source) -> CatalogEntry {
    let document = parse(src.text).unwrap_or_else(|e| panic!("catalog {}: {e}", src.name));
    let labeling = document
        .labeling()
        .unwrap_or_else(|e| panic!("catalog {}: {e}", src.name));
    let entry = CatalogEntry {
        name: src.name,
        graph: document.graph.clone(),
        labeling,
        source: document.comments.first().cloned().unwrap_or_default(),
        expected_imbalance: src.imbalance,
        document,
    };
    assert_eq!(
        entry.is_ddm(),
        src.claims_ddm,
        "catalog {}: DDM status disagrees with the data file",
        src.name
    );
    assert_eq!(
        imbalance_vector(&entry.graph).graph_imbalance,
        src.imbalance,
        "catalog {}: imbalance",
        src.name
    );
    entry
}

static ENTRIES: Lazy<Vec<CatalogEntry>> = Lazy::new(|| SOURCES.iter().map(load).collect());

pub fn get(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// The entry as a labeled graph; unlabeled entries report `MissingLabel`.
pub fn labeled(name: &str) -> Result<LabeledGraph> {
    get(name)?.labeled().ok_or(Error::MissingLabel(0))
}

/// The bundled file exactly as shipped.
pub fn source_text(name: &str) -> Result<&'static str> {
    SOURCES
        .iter()
        .find(|s| s.name == name)
        .map(|s| s.text)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Alphabetical summary; DDM status is recomputed on every call.
pub fn list() -> Vec<CatalogSummary> {
    let mut out: Vec<_> = ENTRIES
        .iter()
        .map(|e| CatalogSummary {
            name: e.name,
            order: e.graph.order(),
            edge_count: e.graph.edge_count(),
            is_ddm: e.is_ddm(),
            imbalance: imbalance_vector(&e.graph).graph_imbalance,
        })
        .collect();
    out.sort_by_key(|s| s.name);
    out
}

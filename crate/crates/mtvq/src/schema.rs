//! JSON problem files.
//!
//! A problem file fully describes one placement problem:
//!
//! ```json
//! {
//!   "n_sites": 2,
//!   "alpha": 0.1,
//!   "edges": [{"i": 0, "j": 1, "d": 3.0, "kind": "topological"}],
//!   "linkers": [{"label": "A", "length": 1.0}, {"label": "B", "length": 2.0}],
//!   "ratio": {"A": 1, "B": 1},
//!   "c_ratio": 200.0,
//!   "c_occ": 300.0,
//!   "reconstructed": false
//! }
//! ```
//!
//! `kind` is `"topological"` or `"spatial"`; `ratio` maps every linker label
//! to its target site count; `reconstructed` is optional and defaults to
//! false. Malformed JSON, schema mismatches, and problems that fail
//! validation are reported as distinct errors.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::hamiltonian::{ProblemSpec, RatioSpec};
use crate::topology::{Edge, EdgeKind, LinkerCatalog, LinkerType, SiteGraph};

#[derive(Debug, Serialize, Deserialize)]
struct FileEdge {
    i: usize,
    j: usize,
    d: f64,
    kind: EdgeKind,
}

#[derive(Debug, Serialize, Deserialize)]
struct FileLinker {
    label: String,
    length: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    n_sites: usize,
    alpha: f64,
    edges: Vec<FileEdge>,
    linkers: Vec<FileLinker>,
    ratio: BTreeMap<String, u32>,
    c_ratio: f64,
    c_occ: f64,
    #[serde(default)]
    reconstructed: bool,
}

/// Build a problem from JSON text. `origin` names the source in errors
/// (a path, a preset name, ...).
pub fn problem_from_json(text: &str, origin: &str) -> Result<ProblemSpec> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        let origin = origin.to_string();
        match e.classify() {
            serde_json::error::Category::Data => Error::FileSchema { origin, message },
            _ => Error::FileParse { origin, message },
        }
    })?;

    let edges = file
        .edges
        .iter()
        .map(|e| Edge::new(e.i, e.j, e.d, e.kind))
        .collect();
    let graph = SiteGraph::new(file.n_sites, edges, file.alpha)?;

    let catalog = LinkerCatalog::new(
        file.linkers
            .iter()
            .map(|l| LinkerType::new(l.label.clone(), l.length))
            .collect(),
    )?;

    // The ratio map must cover the linker labels exactly.
    for label in file.ratio.keys() {
        if catalog.position(label).is_none() {
            return Err(Error::UnknownRatioLabel {
                label: label.clone(),
            });
        }
    }
    let counts = catalog
        .types()
        .iter()
        .map(|t| {
            file.ratio
                .get(&t.label)
                .copied()
                .ok_or_else(|| Error::MissingRatioLabel {
                    label: t.label.clone(),
                })
        })
        .collect::<Result<Vec<u32>>>()?;

    Ok(ProblemSpec::new(
        graph,
        catalog,
        RatioSpec::new(counts),
        file.c_ratio,
        file.c_occ,
    )?
    .with_reconstructed(file.reconstructed))
}

/// Load a problem file from disk.
pub fn load_problem(path: impl AsRef<Path>) -> Result<ProblemSpec> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::FileRead {
        path: path.display().to_string(),
        source,
    })?;
    problem_from_json(&text, &path.display().to_string())
}

/// Serialize a problem back into the file schema.
pub fn problem_to_json(spec: &ProblemSpec) -> String {
    let file = ProblemFile {
        n_sites: spec.n_sites(),
        alpha: spec.graph().alpha(),
        edges: spec
            .graph()
            .edges()
            .iter()
            .map(|e| FileEdge {
                i: e.i,
                j: e.j,
                d: e.distance,
                kind: e.kind,
            })
            .collect(),
        linkers: spec
            .catalog()
            .types()
            .iter()
            .map(|t| FileLinker {
                label: t.label.clone(),
                length: t.characteristic_length,
            })
            .collect(),
        ratio: spec
            .catalog()
            .types()
            .iter()
            .zip(spec.ratio().counts())
            .map(|(t, &c)| (t.label.clone(), c))
            .collect(),
        c_ratio: spec.c_ratio(),
        c_occ: spec.c_occ(),
        reconstructed: spec.reconstructed(),
    };
    serde_json::to_string_pretty(&file).expect("problem files always serialize")
}

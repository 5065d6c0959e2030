//! Site graphs for linker placement.
//!
//! A framework's linker sites form an undirected graph. Edges record the
//! inter-site distance and whether the pair is bonded through the net
//! (`Topological`) or merely nearby in space (`Spatial`). Edge weights are
//! `d` for topological pairs and `d^alpha` for spatial ones, with a single
//! exponent `alpha` shared by the whole graph.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::error::{Error, Result};

/// How two linker sites are related in the framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// Directly bonded through the net.
    Topological,
    /// Not bonded, but close enough in space to matter.
    Spatial,
}

/// An undirected edge between two linker sites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    /// Inter-site distance in angstroms.
    pub distance: f64,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn new(i: usize, j: usize, distance: f64, kind: EdgeKind) -> Self {
        Edge {
            i,
            j,
            distance,
            kind,
        }
    }
}

/// One linker species: a label and its characteristic length in angstroms.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkerType {
    pub label: String,
    pub characteristic_length: f64,
}

impl LinkerType {
    pub fn new(label: impl Into<String>, characteristic_length: f64) -> Self {
        LinkerType {
            label: label.into(),
            characteristic_length,
        }
    }
}

/// The ordered set of linker species available to a problem.
///
/// Order matters: type index `t` here is the same `t` used by the qubit
/// layout and by ratio counts.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkerCatalog {
    types: Vec<LinkerType>,
}

impl LinkerCatalog {
    pub fn new(types: Vec<LinkerType>) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::EmptyCatalog);
        }
        let mut seen = HashSet::new();
        for t in &types {
            if !(t.characteristic_length > 0.0 && t.characteristic_length.is_finite()) {
                return Err(Error::BadLinkerLength {
                    label: t.label.clone(),
                    length: t.characteristic_length,
                });
            }
            if !seen.insert(t.label.clone()) {
                return Err(Error::DuplicateLabel(t.label.clone()));
            }
        }
        Ok(LinkerCatalog { types })
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[LinkerType] {
        &self.types
    }

    pub fn get(&self, index: usize) -> Option<&LinkerType> {
        self.types.get(index)
    }

    /// Type index for a label, if present.
    pub fn position(&self, label: &str) -> Option<usize> {
        self.types.iter().position(|t| t.label == label)
    }

    /// Characteristic length of type `t`. Panics on a bad index; callers
    /// obtain valid indices from this catalog.
    pub fn length(&self, t: usize) -> f64 {
        self.types[t].characteristic_length
    }
}

/// Weight of an edge: `d` when topological, `d^alpha` when spatial.
pub fn edge_weight(distance: f64, kind: EdgeKind, alpha: f64) -> Result<f64> {
    if !(distance > 0.0 && distance.is_finite()) {
        return Err(Error::BadDistance(distance));
    }
    check_alpha(alpha)?;
    Ok(match kind {
        EdgeKind::Topological => distance,
        EdgeKind::Spatial => distance.powf(alpha),
    })
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && (0.0..=1.0).contains(&alpha)) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    Ok(())
}

/// A validated linker-site graph with precomputed edge weights.
///
/// Edges are stored canonically with `i < j`; duplicates and self-loops are
/// rejected at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SiteGraph {
    n_sites: usize,
    alpha: f64,
    edges: Vec<Edge>,
    weights: Vec<f64>,
}

impl SiteGraph {
    pub fn new(n_sites: usize, edges: Vec<Edge>, alpha: f64) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::TooFewSites(n_sites));
        }
        if edges.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        check_alpha(alpha)?;

        let mut canon = Vec::with_capacity(edges.len());
        let mut seen = HashSet::new();
        for e in edges {
            if e.i >= n_sites || e.j >= n_sites {
                return Err(Error::SiteOutOfRange {
                    i: e.i,
                    j: e.j,
                    n_sites,
                });
            }
            if e.i == e.j {
                return Err(Error::SelfLoop { i: e.i, j: e.j });
            }
            let (i, j) = if e.i < e.j { (e.i, e.j) } else { (e.j, e.i) };
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateEdge { i, j });
            }
            canon.push(Edge::new(i, j, e.distance, e.kind));
        }

        let weights = canon
            .iter()
            .map(|e| edge_weight(e.distance, e.kind, alpha))
            .collect::<Result<Vec<_>>>()?;

        Ok(SiteGraph {
            n_sites,
            alpha,
            edges: canon,
            weights,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Edges paired with their precomputed weights.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (&Edge, f64)> {
        self.edges.iter().zip(self.weights.iter().copied())
    }

    /// Number of edges (of either kind) incident to `site`.
    pub fn degree(&self, site: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.i == site || e.j == site)
            .count()
    }

    /// Same edges, different spatial exponent; weights are recomputed.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        SiteGraph::new(self.n_sites, self.edges.clone(), alpha)
    }
}

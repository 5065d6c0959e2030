//! The placement cost function.
//!
//! A candidate structure assigns each linker site a subset of linker types
//! via binary variables: bit `site * n_types + t` says "type `t` sits on
//! `site`". The cost of an assignment `q` is
//!
//! ```text
//! H(q) = c_ratio * sum_t (count_t(q) - n_t)^2
//!      + c_occ   * sum_i (occupancy_i(q) - 1)^2
//!      + sum_edges w_ij * (L(q, ij) - L_mean)^2
//! ```
//!
//! The first two terms penalize breaking the target linker ratio and
//! multiple/vacant occupancy; the third rewards assignments whose per-edge
//! combined linker length stays close to the composition-wide mean. Valid
//! assignments (exact ratio, one linker per site) zero the penalty terms, so
//! their cost is the balance term alone.

use crate::error::{Error, Result};
use crate::topology::{Edge, LinkerCatalog, SiteGraph};
use std::fmt;

/// Flat bit position for (site, linker type): `site * n_types + t`.
///
/// Bit positions are site-major, type-minor, and double as qubit indices and
/// as character positions in configuration strings (position 0 leftmost).
pub fn qubit_index(site: usize, type_index: usize, n_types: usize) -> usize {
    debug_assert!(type_index < n_types);
    site * n_types + type_index
}

/// Target number of sites per linker type, aligned with the catalog order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSpec {
    counts: Vec<u32>,
}

impl RatioSpec {
    pub fn new(counts: Vec<u32>) -> Self {
        RatioSpec { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

/// How the combined length of an edge's two endpoints is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LengthForm {
    /// Sum of the characteristic lengths selected on the two endpoints.
    #[default]
    EndpointSum,
    /// Endpoint sum multiplied by the number of linker types. Produces the
    /// same minimizers (the balance term just picks up a constant factor of
    /// `n_types^2`) but shifts reported values; kept for comparison against
    /// conventions that carry the type count through the length expression.
    TypeScaled,
}

/// One linker-placement assignment: a bit per (site, type) pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    bits: Vec<bool>,
}

impl Configuration {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Configuration { bits }
    }

    /// Parse a string of '0'/'1' characters, leftmost character = bit 0.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::BadConfigChar(other)),
            }
        }
        Ok(Configuration { bits })
    }

    /// Expand a basis index into `n_bits` bits. Bit `k` of the configuration
    /// is bit `n_bits - 1 - k` of the integer, so printing the integer as a
    /// binary string (most significant digit first) matches `to_string`.
    pub fn from_index(index: u64, n_bits: usize) -> Self {
        assert!(n_bits <= 64, "basis index form supports at most 64 bits");
        let bits = (0..n_bits)
            .map(|k| (index >> (n_bits - 1 - k)) & 1 == 1)
            .collect();
        Configuration { bits }
    }

    /// Inverse of `from_index`; `None` when wider than 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        let mut idx = 0u64;
        for &b in &self.bits {
            idx = (idx << 1) | b as u64;
        }
        Some(idx)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, k: usize) -> bool {
        self.bits[k]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Read-only view of an assignment's bits. Lets the cost functions run both
/// on materialized `Configuration`s and directly on enumeration indices
/// without building one `Vec<bool>` per candidate.
pub(crate) trait BitSource {
    fn bit(&self, k: usize) -> bool;
}

impl BitSource for Configuration {
    #[inline]
    fn bit(&self, k: usize) -> bool {
        self.bits[k]
    }
}

/// A basis index interpreted as a configuration of `n` bits.
#[derive(Debug, Clone, Copy)]
pub(crate) struct IndexBits {
    pub index: u64,
    pub n: usize,
}

impl BitSource for IndexBits {
    #[inline]
    fn bit(&self, k: usize) -> bool {
        (self.index >> (self.n - 1 - k)) & 1 == 1
    }
}

/// Per-term cost values for one assignment. `ratio` and `occupancy` are the
/// raw (unweighted) penalty sums; `total` applies the penalty weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TermBreakdown {
    pub ratio: f64,
    pub occupancy: f64,
    pub balance: f64,
    pub total: f64,
}

/// A complete placement problem: graph, linker catalog, target ratio, and
/// penalty weights.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    graph: SiteGraph,
    catalog: LinkerCatalog,
    ratio: RatioSpec,
    c_ratio: f64,
    c_occ: f64,
    length_form: LengthForm,
    /// Set when the edge list was reconstructed from net geometry rather
    /// than taken verbatim from a structure file.
    reconstructed: bool,
}

impl ProblemSpec {
    pub fn new(
        graph: SiteGraph,
        catalog: LinkerCatalog,
        ratio: RatioSpec,
        c_ratio: f64,
        c_occ: f64,
    ) -> Result<Self> {
        if ratio.len() != catalog.len() {
            return Err(Error::RatioArityMismatch {
                got: ratio.len(),
                expected: catalog.len(),
            });
        }
        if ratio.total() != graph.n_sites() as u64 {
            return Err(Error::RatioSumMismatch {
                got: ratio.total(),
                expected: graph.n_sites() as u64,
            });
        }
        for &c in &[c_ratio, c_occ] {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::BadPenaltyWeight(c));
            }
        }
        Ok(ProblemSpec {
            graph,
            catalog,
            ratio,
            c_ratio,
            c_occ,
            length_form: LengthForm::default(),
            reconstructed: false,
        })
    }

    pub fn with_length_form(mut self, form: LengthForm) -> Self {
        self.length_form = form;
        self
    }

    pub fn with_reconstructed(mut self, flag: bool) -> Self {
        self.reconstructed = flag;
        self
    }

    /// Same problem, different spatial exponent.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Ok(ProblemSpec {
            graph: self.graph.with_alpha(alpha)?,
            ..self.clone()
        })
    }

    pub fn graph(&self) -> &SiteGraph {
        &self.graph
    }

    pub fn catalog(&self) -> &LinkerCatalog {
        &self.catalog
    }

    pub fn ratio(&self) -> &RatioSpec {
        &self.ratio
    }

    pub fn c_ratio(&self) -> f64 {
        self.c_ratio
    }

    pub fn c_occ(&self) -> f64 {
        self.c_occ
    }

    pub fn length_form(&self) -> LengthForm {
        self.length_form
    }

    pub fn reconstructed(&self) -> bool {
        self.reconstructed
    }

    pub fn n_sites(&self) -> usize {
        self.graph.n_sites()
    }

    pub fn n_types(&self) -> usize {
        self.catalog.len()
    }

    /// One binary variable per (site, type) pair.
    pub fn n_qubits(&self) -> usize {
        self.n_sites() * self.n_types()
    }

    /// Checked version of [`qubit_index`] against this problem's bounds.
    pub fn qubit_for(&self, site: usize, type_index: usize) -> Result<usize> {
        if site >= self.n_sites() {
            return Err(Error::BadSite {
                site,
                n_sites: self.n_sites(),
            });
        }
        if type_index >= self.n_types() {
            return Err(Error::BadTypeIndex {
                ty: type_index,
                n_types: self.n_types(),
            });
        }
        Ok(qubit_index(site, type_index, self.n_types()))
    }

    /// Parse a configuration string and check its length against this
    /// problem.
    pub fn parse_config(&self, s: &str) -> Result<Configuration> {
        let config = Configuration::parse(s)?;
        self.check_len(&config)?;
        Ok(config)
    }

    fn check_len(&self, config: &Configuration) -> Result<()> {
        if config.len() != self.n_qubits() {
            return Err(Error::ConfigLenMismatch {
                got: config.len(),
                expected: self.n_qubits(),
            });
        }
        Ok(())
    }

    /// Composition-wide mean combined edge length:
    /// `(2 / n_sites) * sum_t n_t * l_t`, scaled by the type count under
    /// `LengthForm::TypeScaled`. On degree-regular graphs this equals the
    /// average of the per-edge length over any valid assignment.
    pub fn mean_edge_length(&self) -> f64 {
        let base: f64 = self
            .ratio
            .counts()
            .iter()
            .enumerate()
            .map(|(t, &n)| n as f64 * self.catalog.length(t))
            .sum::<f64>()
            * 2.0
            / self.n_sites() as f64;
        base * self.length_scale()
    }

    fn length_scale(&self) -> f64 {
        match self.length_form {
            LengthForm::EndpointSum => 1.0,
            LengthForm::TypeScaled => self.n_types() as f64,
        }
    }

    #[inline]
    fn site_length<B: BitSource>(&self, q: &B, site: usize) -> f64 {
        let n_types = self.n_types();
        let mut acc = 0.0;
        for t in 0..n_types {
            if q.bit(qubit_index(site, t, n_types)) {
                acc += self.catalog.length(t);
            }
        }
        acc
    }

    pub(crate) fn ratio_cost_bits<B: BitSource>(&self, q: &B) -> f64 {
        let n_types = self.n_types();
        let mut cost = 0i64;
        for (t, &target) in self.ratio.counts().iter().enumerate() {
            let mut count = 0i64;
            for site in 0..self.n_sites() {
                count += q.bit(qubit_index(site, t, n_types)) as i64;
            }
            let dev = count - target as i64;
            cost += dev * dev;
        }
        cost as f64
    }

    pub(crate) fn occupancy_cost_bits<B: BitSource>(&self, q: &B) -> f64 {
        let n_types = self.n_types();
        let mut cost = 0i64;
        for site in 0..self.n_sites() {
            let mut occ = 0i64;
            for t in 0..n_types {
                occ += q.bit(qubit_index(site, t, n_types)) as i64;
            }
            let dev = occ - 1;
            cost += dev * dev;
        }
        cost as f64
    }

    pub(crate) fn balance_cost_bits<B: BitSource>(&self, q: &B) -> f64 {
        let target = self.mean_edge_length();
        let scale = self.length_scale();
        let mut cost = 0.0;
        for (edge, weight) in self.graph.weighted_edges() {
            let len = scale * (self.site_length(q, edge.i) + self.site_length(q, edge.j));
            let dev = len - target;
            cost += weight * dev * dev;
        }
        cost
    }

    pub(crate) fn total_cost_bits<B: BitSource>(&self, q: &B) -> f64 {
        self.c_ratio * self.ratio_cost_bits(q)
            + self.c_occ * self.occupancy_cost_bits(q)
            + self.balance_cost_bits(q)
    }

    /// Raw ratio penalty `sum_t (count_t - n_t)^2` (no weight applied).
    pub fn ratio_cost(&self, config: &Configuration) -> Result<f64> {
        self.check_len(config)?;
        Ok(self.ratio_cost_bits(config))
    }

    /// Raw occupancy penalty `sum_i (occ_i - 1)^2` (no weight applied).
    pub fn occupancy_cost(&self, config: &Configuration) -> Result<f64> {
        self.check_len(config)?;
        Ok(self.occupancy_cost_bits(config))
    }

    /// Combined linker length across one edge for this assignment.
    pub fn edge_length(&self, config: &Configuration, edge: &Edge) -> Result<f64> {
        self.check_len(config)?;
        let n_sites = self.n_sites();
        if edge.i >= n_sites || edge.j >= n_sites {
            return Err(Error::SiteOutOfRange {
                i: edge.i,
                j: edge.j,
                n_sites,
            });
        }
        Ok(self.length_scale()
            * (self.site_length(config, edge.i) + self.site_length(config, edge.j)))
    }

    /// Weighted squared deviation of every edge length from the mean.
    pub fn balance_cost(&self, config: &Configuration) -> Result<f64> {
        self.check_len(config)?;
        Ok(self.balance_cost_bits(config))
    }

    /// Full cost: weighted penalties plus balance.
    pub fn total_cost(&self, config: &Configuration) -> Result<f64> {
        self.check_len(config)?;
        Ok(self.total_cost_bits(config))
    }

    /// All three terms at once, plus the weighted total.
    pub fn term_breakdown(&self, config: &Configuration) -> Result<TermBreakdown> {
        self.check_len(config)?;
        let ratio = self.ratio_cost_bits(config);
        let occupancy = self.occupancy_cost_bits(config);
        let balance = self.balance_cost_bits(config);
        Ok(TermBreakdown {
            ratio,
            occupancy,
            balance,
            total: self.c_ratio * ratio + self.c_occ * occupancy + balance,
        })
    }

    /// Cost of every basis index, i.e. the full diagonal of the Hamiltonian.
    /// Bounded to keep the table in memory; used by the samplers.
    pub fn cost_table(&self, max_qubits: usize) -> Result<Vec<f64>> {
        let n = self.n_qubits();
        if n > max_qubits || n >= usize::BITS as usize {
            return Err(Error::EnumerationBound {
                qubits: n,
                limit: max_qubits,
            });
        }
        Ok((0..1u64 << n)
            .map(|index| self.total_cost_bits(&IndexBits { index, n }))
            .collect())
    }
}

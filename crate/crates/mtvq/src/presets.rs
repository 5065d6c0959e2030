//! Built-in problems for four reported multivariate frameworks.
//!
//! Each preset models one unit cell of the material's net. Distances and
//! linker lengths follow the reported structures; the explicit per-cell edge
//! lists are reconstructed from the net geometry under periodic wrap, and
//! every preset file is marked `"reconstructed": true` to say so.
//!
//! * `cu-thq-hhtp` — honeycomb cell, 8 tritopic sites, THQ/HHTP at 4:4.
//!   Bonded neighbors at 3.0 A plus same-sublattice spatial pairs at 5.2 A
//!   (only the second-closest shell is kept), alpha = 0.01.
//! * `py-mv-dba-cof` — the same honeycomb cell with DBA[12]/DBA[18] at 4:4
//!   and alpha = 0.1.
//! * `muf-7` — 6-site cell, BDC/BPDC at 3:3, all pair distances 3.92 A;
//!   bonded ring plus three spatial cross-cell pairs, alpha = 0.1.
//! * `sioc-cof2` — kagome cell, 6 ditopic sites on the edge midpoints,
//!   BPDA/TPDA at 3:3. All pairs are treated as bonded (alpha = 1), with
//!   the three distance shells 1.5 / 2.6 / 3.0 A of the midpoint lattice.

use crate::error::{Error, Result};
use crate::hamiltonian::ProblemSpec;
use crate::schema::problem_from_json;

/// Names accepted by [`preset`], in display order.
pub const PRESET_NAMES: [&str; 4] = ["cu-thq-hhtp", "py-mv-dba-cof", "muf-7", "sioc-cof2"];

/// Look up a built-in problem by name. Names are case-sensitive.
pub fn preset(name: &str) -> Result<ProblemSpec> {
    let text = match name {
        "cu-thq-hhtp" => include_str!("../presets/cu-thq-hhtp.json"),
        "py-mv-dba-cof" => include_str!("../presets/py-mv-dba-cof.json"),
        "muf-7" => include_str!("../presets/muf-7.json"),
        "sioc-cof2" => include_str!("../presets/sioc-cof2.json"),
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    problem_from_json(text, name)
}

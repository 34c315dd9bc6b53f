//! Local 6-largeness: every vertex link is simple, flag, and free of 4- and
//! 5-cycles without diagonals.

use rayon::prelude::*;

use super::certificate::Certificate;
use super::cycles::chordless_cycles;
use super::flag::{check_flag, check_simple, link_graph, DEFAULT_CLIQUE_CAP};
use crate::delta::{Cell, DeltaComplex, LinkComplex};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SixLargeOptions {
    pub clique_cap: usize,
    /// Also check the links of all higher simplices.
    pub all_simplices: bool,
}

impl Default for SixLargeOptions {
    fn default() -> Self {
        SixLargeOptions { clique_cap: DEFAULT_CLIQUE_CAP, all_simplices: false }
    }
}

/// Certificates grouped by the simplex whose link failed, in simplex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SixLargeReport {
    pub checked: usize,
    pub certificates: Vec<Certificate>,
}

impl SixLargeReport {
    pub fn pass(&self) -> bool {
        self.certificates.is_empty()
    }
}

/// Runs the simple → flag → chordless-cycle pipeline on one link.
pub fn check_link(link: &LinkComplex, base: &str, cap: usize) -> Result<Vec<Certificate>> {
    if let Some(c) = check_simple(link, base) {
        return Ok(vec![c]);
    }
    let mut out = Vec::new();
    if let Some(c) = check_flag(link, base, cap)? {
        out.push(c);
    }
    let g = link_graph(link);
    for cycle in chordless_cycles(&g, &[4, 5]) {
        out.push(Certificate::ChordlessCycle {
            base: base.to_string(),
            cycle: cycle.iter().map(|&v| link.vertex_label(v).to_string()).collect(),
        });
    }
    Ok(out)
}

pub fn check_locally_6_large(x: &DeltaComplex, options: SixLargeOptions) -> Result<SixLargeReport> {
    let mut bases: Vec<Cell> = (0..x.count(0)).map(|v| Cell::new(0, v)).collect();
    if options.all_simplices {
        bases.extend(x.cells().filter(|c| c.dim > 0));
    }
    let per_base: Vec<Result<Vec<Certificate>>> = bases
        .par_iter()
        .map(|&b| {
            let link = x.simplex_link(b);
            check_link(&link, x.id(b), options.clique_cap)
        })
        .collect();
    let mut certificates = Vec::new();
    for r in per_base {
        certificates.extend(r?);
    }
    Ok(SixLargeReport { checked: bases.len(), certificates })
}

//! Nonpositive curvature of square complexes: no embedded cycle of length
//! less than 4 in any vertex link.

use std::collections::HashMap;

use super::certificate::{Certificate, CornerRef};
use crate::square::{LinkGraph, SquareComplex};

/// An embedded cycle in a link multigraph: `edges[i]` joins `vertices[i]`
/// and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCycle {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl LinkCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn unordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Loops and parallel pairs only: the cycles of length 1 and 2.
pub fn loop_or_parallel(link: &LinkGraph) -> Option<LinkCycle> {
    if let Some(i) = link.edges.iter().position(|e| e.ends.0 == e.ends.1) {
        return Some(LinkCycle { edges: vec![i], vertices: vec![link.edges[i].ends.0] });
    }
    let mut first: HashMap<(usize, usize), usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, e) in link.edges.iter().enumerate() {
        match first.get(&unordered(e.ends.0, e.ends.1)) {
            Some(&i) => {
                if best.is_none_or(|b| (i, j) < b) {
                    best = Some((i, j));
                }
            }
            None => {
                first.insert(unordered(e.ends.0, e.ends.1), j);
            }
        }
    }
    best.map(|(i, j)| {
        let (p, q) = link.edges[i].ends;
        LinkCycle { edges: vec![i, j], vertices: vec![p, q] }
    })
}

/// Shortest embedded cycle of length at most 3, lexicographically least by
/// sorted edge indices among those of minimal length.
pub fn short_cycle_search(link: &LinkGraph) -> Option<LinkCycle> {
    if let Some(c) = loop_or_parallel(link) {
        return Some(c);
    }
    let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); link.vertices.len()];
    for (i, e) in link.edges.iter().enumerate() {
        by_pair.entry(unordered(e.ends.0, e.ends.1)).or_default().push(i);
        incident[e.ends.0].push(i);
        incident[e.ends.1].push(i);
    }
    for (i, ei) in link.edges.iter().enumerate() {
        let (p, q) = ei.ends;
        let mut candidates: Vec<(usize, usize, usize, usize)> = Vec::new();
        for (shared, other) in [(q, p), (p, q)] {
            for &j in &incident[shared] {
                if j <= i {
                    continue;
                }
                let ej = link.edges[j].ends;
                let r = if ej.0 == shared { ej.1 } else { ej.0 };
                if let Some(ks) = by_pair.get(&unordered(r, other)) {
                    if let Some(&k) = ks.iter().find(|&&k| k > j) {
                        candidates.push((j, k, shared, r));
                    }
                }
            }
        }
        if let Some(&(j, k, shared, r)) = candidates.iter().min() {
            let other = if shared == q { p } else { q };
            return Some(LinkCycle { edges: vec![i, j, k], vertices: vec![other, shared, r] });
        }
    }
    None
}

/// Outcome of a per-vertex check: pass iff no certificates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub certificates: Vec<Certificate>,
}

impl Verdict {
    pub fn pass(&self) -> bool {
        self.certificates.is_empty()
    }
}

fn cycle_certificate(x: &SquareComplex, link: &LinkGraph, cycle: &LinkCycle) -> Certificate {
    Certificate::ShortLinkCycle {
        vertex: x.vertices()[link.base].clone(),
        corners: cycle
            .edges
            .iter()
            .map(|&e| CornerRef {
                square: x.squares()[link.edges[e].square].id.clone(),
                corner: link.edges[e].corner,
            })
            .collect(),
        ends: cycle.vertices.iter().map(|&v| link.vertex_label(x, v)).collect(),
    }
}

/// One `ShortLinkCycle` certificate per vertex whose link has girth < 4.
pub fn check_npc(x: &SquareComplex) -> Verdict {
    let certificates = (0..x.vertices().len())
        .filter_map(|v| {
            let link = x.vertex_link(v);
            short_cycle_search(&link).map(|c| cycle_certificate(x, &link, &c))
        })
        .collect();
    Verdict { certificates }
}

/// For VH complexes links are bipartite, so nonpositive curvature reduces to
/// the absence of loops and double edges in the links.
pub fn check_npc_vh_reduced(x: &SquareComplex) -> Verdict {
    let certificates = (0..x.vertices().len())
        .filter_map(|v| {
            let link = x.vertex_link(v);
            loop_or_parallel(&link).map(|c| cycle_certificate(x, &link, &c))
        })
        .collect();
    Verdict { certificates }
}

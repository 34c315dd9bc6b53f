//! Simplicity and flagness of occurrence-indexed links.

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};

use super::certificate::Certificate;
use super::graph::{BitSet, SimpleGraph};
use crate::delta::{Cell, LinkComplex};
use crate::error::{Error, Result};
use crate::skeleton::CellComplex;

/// Default cap on the number of maximal cliques examined per link.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// Fails on a simplex with a repeated vertex occurrence, or on two simplices
/// of one dimension with the same vertex-occurrence set.
pub fn check_simple(link: &LinkComplex, base: &str) -> Option<Certificate> {
    let x = &link.complex;
    let top = x.top_dimension()?;
    for k in 1..=top {
        for i in 0..x.count(k) {
            let cell = Cell::new(k, i);
            let verts = x.vertices_of(cell);
            let mut sorted = verts.to_vec();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Some(Certificate::NotSimple {
                    base: base.to_string(),
                    cells: vec![x.id(cell).to_string()],
                });
            }
        }
    }
    for k in 1..=top {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::default();
        for i in 0..x.count(k) {
            let mut key = x.vertices_of(Cell::new(k, i)).to_vec();
            key.sort_unstable();
            if let Some(&j) = seen.get(&key) {
                return Some(Certificate::NotSimple {
                    base: base.to_string(),
                    cells: vec![x.id(Cell::new(k, j)).to_string(), x.id(Cell::new(k, i)).to_string()],
                });
            }
            seen.insert(key, i);
        }
    }
    None
}

/// 1-skeleton of a link as a simple graph on its vertices.
pub fn link_graph(link: &LinkComplex) -> SimpleGraph {
    let x = &link.complex;
    SimpleGraph::new(x.count(0), x.one_skeleton())
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, in a deterministic
/// order. Stops with an error once more than `cap` cliques are produced, and
/// early when `visit` returns `false`.
pub fn maximal_cliques(
    g: &SimpleGraph,
    cap: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    let n = g.order();
    let mut p = BitSet::new(n);
    for v in 0..n {
        p.insert(v);
    }
    let mut count = 0usize;
    let mut clique = Vec::new();
    let mut stop = false;
    expand(g, &mut clique, p, BitSet::new(n), cap, &mut count, &mut visit, &mut stop)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn expand(
    g: &SimpleGraph,
    clique: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    cap: usize,
    count: &mut usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
    stop: &mut bool,
) -> Result<()> {
    if *stop {
        return Ok(());
    }
    if p.is_empty() {
        if x.is_empty() {
            *count += 1;
            if *count > cap {
                return Err(Error::CliqueBudgetExceeded(cap));
            }
            let mut sorted = clique.clone();
            sorted.sort_unstable();
            if !visit(&sorted) {
                *stop = true;
            }
        }
        return Ok(());
    }
    let pivot = p
        .or(&x)
        .iter()
        .max_by_key(|&u| (p.and(g.neighbours(u)).len(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let candidates: Vec<usize> = p.and_not(g.neighbours(pivot)).iter().collect();
    for v in candidates {
        clique.push(v);
        expand(g, clique, p.and(g.neighbours(v)), x.and(g.neighbours(v)), cap, count, visit, stop)?;
        clique.pop();
        if *stop {
            return Ok(());
        }
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Sorted vertex sets of every simplex of the link.
fn spanned_sets(link: &LinkComplex) -> HashSet<Vec<usize>> {
    link.complex
        .cells()
        .map(|c| {
            let mut v = link.complex.vertices_of(c).to_vec();
            v.sort_unstable();
            v
        })
        .collect()
}

/// Passes iff every clique of the link 1-skeleton spans a simplex. Assumes
/// [`check_simple`] passed. Spanned sets are closed under subsets, so it is
/// enough to look at maximal cliques; a failing one is shrunk to a minimal
/// unspanned clique.
pub fn check_flag(link: &LinkComplex, base: &str, cap: usize) -> Result<Option<Certificate>> {
    let g = link_graph(link);
    let spanned = spanned_sets(link);
    let mut missing: Option<Vec<usize>> = None;
    maximal_cliques(&g, cap, |c| {
        if c.is_empty() || spanned.contains(c) {
            true
        } else {
            missing = Some(c.to_vec());
            false
        }
    })?;
    Ok(missing.map(|clique| {
        let minimal = shrink_unspanned(clique, &spanned);
        Certificate::MissingCliqueSimplex {
            base: base.to_string(),
            clique: minimal.iter().map(|&v| link.vertex_label(v).to_string()).collect(),
        }
    }))
}

/// Drops vertices while the set stays unspanned; the result has every proper
/// subset spanned.
fn shrink_unspanned(mut clique: Vec<usize>, spanned: &HashSet<Vec<usize>>) -> Vec<usize> {
    let mut i = 0;
    while i < clique.len() {
        let mut smaller = clique.clone();
        smaller.remove(i);
        if !smaller.is_empty() && !spanned.contains(&smaller) {
            clique = smaller;
        } else {
            i += 1;
        }
    }
    clique
}

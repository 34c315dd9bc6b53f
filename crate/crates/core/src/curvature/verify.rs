//! Independent re-verification of certificates against the input complex.

use std::collections::{HashMap, HashSet};

use super::certificate::{Certificate, ConstraintKind};
use super::cycles::is_chordless_cycle;
use super::flag::link_graph;
use crate::delta::{Cell, DeltaComplex, LinkComplex};
use crate::square::{Side, SquareComplex};

/// The complex a certificate refers to.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Square(&'a SquareComplex),
    Delta(&'a DeltaComplex),
}

pub type Verification = std::result::Result<(), String>;

pub fn verify_certificate(subject: Subject<'_>, cert: &Certificate) -> Verification {
    match (subject, cert) {
        (Subject::Square(x), Certificate::ShortLinkCycle { vertex, corners, ends }) => {
            verify_short_cycle(x, vertex, corners, ends)
        }
        (Subject::Square(x), Certificate::VhContradiction { steps }) => verify_vh(x, steps),
        (Subject::Delta(x), Certificate::NotSimple { base, cells }) => {
            let link = link_at(x, base)?;
            verify_not_simple(&link, cells)
        }
        (Subject::Delta(x), Certificate::MissingCliqueSimplex { base, clique }) => {
            let link = link_at(x, base)?;
            verify_missing_clique(&link, clique)
        }
        (Subject::Delta(x), Certificate::ChordlessCycle { base, cycle }) => {
            let link = link_at(x, base)?;
            let idx = vertex_indices(&link, cycle)?;
            if !(4..=5).contains(&idx.len()) {
                return Err(format!("cycle length {} is not 4 or 5", idx.len()));
            }
            if is_chordless_cycle(&link_graph(&link), &idx) {
                Ok(())
            } else {
                Err("not an embedded cycle without diagonals".into())
            }
        }
        (_, c) => Err(format!("{} certificate does not apply to this kind of complex", c.kind())),
    }
}

fn end_label(x: &SquareComplex, side: Side, initial: bool) -> String {
    let end = if initial { side.initial_end() } else { side.terminal_end() };
    format!("{}@{}", x.edges()[side.edge].id, end.letter())
}

fn verify_short_cycle(
    x: &SquareComplex,
    vertex: &str,
    corners: &[super::certificate::CornerRef],
    ends: &[String],
) -> Verification {
    let v = x.vertex_id(vertex).map_err(|e| e.to_string())?;
    let n = corners.len();
    if n == 0 || n > 3 || ends.len() != n {
        return Err(format!("cycle of length {n} with {} ends", ends.len()));
    }
    let distinct: HashSet<&String> = ends.iter().collect();
    if distinct.len() != n {
        return Err("link cycle repeats a vertex".into());
    }
    let mut seen = HashSet::new();
    for (i, c) in corners.iter().enumerate() {
        if !seen.insert((c.square.clone(), c.corner)) {
            return Err("link cycle repeats an edge".into());
        }
        let s = x.square_id(&c.square).map_err(|e| e.to_string())?;
        if c.corner > 3 || x.corner(s, c.corner) != v {
            return Err(format!("corner {} of `{}` is not at `{vertex}`", c.corner, c.square));
        }
        let sides = x.squares()[s].sides;
        let a = end_label(x, sides[(c.corner + 3) % 4], false);
        let b = end_label(x, sides[c.corner], true);
        let (p, q) = (&ends[i], &ends[(i + 1) % n]);
        if !((a == *p && b == *q) || (a == *q && b == *p)) {
            return Err(format!("corner {}@{} does not join {p} and {q}", c.square, c.corner));
        }
    }
    Ok(())
}

fn verify_vh(x: &SquareComplex, steps: &[super::certificate::ConstraintStep]) -> Verification {
    if steps.is_empty() {
        return Err("empty constraint cycle".into());
    }
    let mut differ = 0;
    for (i, st) in steps.iter().enumerate() {
        let s = x.square_id(&st.square).map_err(|e| e.to_string())?;
        if st.from_side > 3 || st.to_side > 3 || st.from_side == st.to_side {
            return Err("bad side indices".into());
        }
        let sides = x.squares()[s].sides;
        if x.edges()[sides[st.from_side].edge].id != st.from
            || x.edges()[sides[st.to_side].edge].id != st.to
        {
            return Err(format!("square `{}` does not carry the named sides", st.square));
        }
        let opposite = (st.from_side + 2) % 4 == st.to_side;
        let kind = if opposite { ConstraintKind::Same } else { ConstraintKind::Differ };
        if kind != st.kind {
            return Err(format!("step {i} has the wrong constraint kind"));
        }
        if kind == ConstraintKind::Differ {
            differ += 1;
        }
        if steps[(i + 1) % steps.len()].from != st.to {
            return Err(format!("steps {i} and {} do not chain", (i + 1) % steps.len()));
        }
    }
    if differ % 2 == 1 {
        Ok(())
    } else {
        Err("constraint cycle is consistent (even number of Differ steps)".into())
    }
}

fn link_at(x: &DeltaComplex, base: &str) -> std::result::Result<LinkComplex, String> {
    let cell = x.lookup(base).map_err(|e| e.to_string())?;
    Ok(x.simplex_link(cell))
}

fn vertex_indices(link: &LinkComplex, labels: &[String]) -> std::result::Result<Vec<usize>, String> {
    let index: HashMap<&str, usize> =
        (0..link.complex.count(0)).map(|v| (link.vertex_label(v), v)).collect();
    labels
        .iter()
        .map(|l| index.get(l.as_str()).copied().ok_or_else(|| format!("no link vertex `{l}`")))
        .collect()
}

fn sorted_vertices(link: &LinkComplex, cell: Cell) -> Vec<usize> {
    let mut v = link.complex.vertices_of(cell).to_vec();
    v.sort_unstable();
    v
}

fn verify_not_simple(link: &LinkComplex, cells: &[String]) -> Verification {
    let lookup = |name: &String| link.complex.lookup(name).map_err(|e| e.to_string());
    match cells {
        [one] => {
            let c = lookup(one)?;
            let v = sorted_vertices(link, c);
            if v.windows(2).any(|w| w[0] == w[1]) {
                Ok(())
            } else {
                Err(format!("`{one}` has distinct vertices"))
            }
        }
        [a, b] => {
            let (ca, cb) = (lookup(a)?, lookup(b)?);
            if ca == cb || ca.dim != cb.dim {
                return Err("cells must be distinct and of equal dimension".into());
            }
            if sorted_vertices(link, ca) == sorted_vertices(link, cb) {
                Ok(())
            } else {
                Err("cells have different vertex sets".into())
            }
        }
        _ => Err("NotSimple names one or two cells".into()),
    }
}

fn verify_missing_clique(link: &LinkComplex, clique: &[String]) -> Verification {
    let mut idx = vertex_indices(link, clique)?;
    idx.sort_unstable();
    if idx.windows(2).any(|w| w[0] == w[1]) || idx.is_empty() {
        return Err("clique must list distinct vertices".into());
    }
    let g = link_graph(link);
    for (i, &a) in idx.iter().enumerate() {
        for &b in &idx[i + 1..] {
            if !g.adjacent(a, b) {
                return Err("listed vertices are not pairwise adjacent".into());
            }
        }
    }
    let spanned: HashSet<Vec<usize>> =
        link.complex.cells().map(|c| sorted_vertices(link, c)).collect();
    if spanned.contains(&idx) {
        return Err("clique spans a simplex".into());
    }
    for i in 0..idx.len() {
        let mut sub = idx.clone();
        sub.remove(i);
        if !sub.is_empty() && !spanned.contains(&sub) {
            return Err("clique is not minimal".into());
        }
    }
    Ok(())
}

//! Structural checks on the links of midpoints and centers in X*.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{Origin, SigmaPart, Simplexification};
use crate::delta::{Cell, LinkComplex};
use crate::error::{Error, Result};
use crate::square::{Sign, SquareComplex};

/// Outcome of comparing the link of e* with the suspension of an
/// (n−1)-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuspensionCheck {
    pub edge: String,
    pub n: usize,
    pub pass: bool,
    pub reason: Option<String>,
    /// Link vertex ↦ `S`, `N` or `x<i>`.
    pub vertex_map: Vec<(String, String)>,
    /// Link simplex ↦ its vertex set in the model.
    pub simplex_map: Vec<(String, Vec<String>)>,
}

/// Outcome of comparing the link of s* with two suspensions joined by two
/// pole-to-pole edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareLinkCheck {
    pub square: String,
    /// Vertical side index and occurrence count of each piece.
    pub pieces: Vec<(usize, usize)>,
    pub pass: bool,
    pub reason: Option<String>,
    pub vertex_map: Vec<(String, String)>,
}

/// Model vertices are numbered `0..count`; `expected` lists the sorted vertex
/// sets of the model's simplices.
struct Model {
    names: Vec<String>,
    expected: BTreeSet<Vec<usize>>,
}

impl Model {
    fn new() -> Model {
        Model { names: Vec::new(), expected: BTreeSet::new() }
    }

    /// Adds the suspension of an (n−1)-simplex; returns (first equator
    /// vertex, south pole, north pole).
    fn suspension(&mut self, n: usize, prefix: &str) -> (usize, usize, usize) {
        let base = self.names.len();
        self.names.extend((0..n).map(|i| format!("{prefix}x{i}")));
        let (south, north) = (base + n, base + n + 1);
        self.names.push(format!("{prefix}S"));
        self.names.push(format!("{prefix}N"));
        for mask in 0u64..(1u64 << n) {
            let eq: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| base + i).collect();
            if !eq.is_empty() {
                self.expected.insert(eq.clone());
            }
            for pole in [south, north] {
                let mut face = eq.clone();
                face.push(pole);
                self.expected.insert(face);
            }
        }
        (base, south, north)
    }

    /// Compares the link, with vertices labeled by `label`, against the model.
    fn compare(&self, link: &LinkComplex, label: &[usize]) -> std::result::Result<(), String> {
        let lx = &link.complex;
        let mut seen_vertex = vec![false; self.names.len()];
        for (v, &m) in label.iter().enumerate() {
            if std::mem::replace(&mut seen_vertex[m], true) {
                return Err(format!("two link vertices model `{}` ({})", self.names[m], link.vertex_label(v)));
            }
        }
        if let Some(m) = seen_vertex.iter().position(|s| !s) {
            return Err(format!("no link vertex models `{}`", self.names[m]));
        }
        let mut found = BTreeSet::new();
        for cell in lx.cells() {
            let mut set: Vec<usize> = lx.vertices_of(cell).iter().map(|&v| label[v]).collect();
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(format!("`{}` has a repeated vertex", lx.id(cell)));
            }
            if !self.expected.contains(&set) {
                return Err(format!("`{}` is not a simplex of the model", lx.id(cell)));
            }
            if !found.insert(set) {
                return Err(format!("`{}` duplicates another simplex", lx.id(cell)));
            }
        }
        if let Some(missing) = self.expected.difference(&found).next() {
            let names: Vec<&str> = missing.iter().map(|&m| self.names[m].as_str()).collect();
            return Err(format!("model simplex {{{}}} is missing", names.join(", ")));
        }
        Ok(())
    }

    fn vertex_map(&self, link: &LinkComplex, label: &[usize]) -> Vec<(String, String)> {
        label
            .iter()
            .enumerate()
            .map(|(v, &m)| (link.vertex_label(v).to_string(), self.names[m].clone()))
            .collect()
    }
}

/// Checks that the link of the midpoint of `edge` is the suspension of an
/// (n−1)-simplex, where n is the number of square sides on `edge`.
pub fn verify_link_suspension(xs: &Simplexification, x: &SquareComplex, edge: usize) -> Result<SuspensionCheck> {
    let name = x.edges().get(edge).map(|e| e.id.clone()).ok_or_else(|| Error::UnknownIdentifier(edge.to_string()))?;
    let mid = xs
        .provenance
        .cell_of(&Origin::Midpoint(edge))
        .ok_or_else(|| Error::NotSimplexified(format!("`{name}` has no midpoint")))?;
    let n = xs.occurrences.multiplicity(edge);
    let link = xs.complex.vertex_link(mid.index);
    let mut model = Model::new();
    let (base, south, north) = model.suspension(n, "");
    let mut check = SuspensionCheck {
        edge: name,
        n,
        pass: false,
        reason: None,
        vertex_map: Vec::new(),
        simplex_map: Vec::new(),
    };

    let mut label = Vec::with_capacity(link.complex.count(0));
    for v in 0..link.complex.count(0) {
        let (cell, _) = link.origin(Cell::new(0, v));
        let m = match xs.provenance.origin(*cell) {
            Origin::HalfEdge { half: Sign::Minus, .. } => Some(south),
            Origin::HalfEdge { half: Sign::Plus, .. } => Some(north),
            Origin::MidpointSpoke { square, side } => {
                xs.occurrences.position(edge, *square, *side).map(|t| base + t)
            }
            _ => None,
        };
        match m {
            Some(m) => label.push(m),
            None => {
                check.reason = Some(format!("unexpected link vertex `{}`", link.vertex_label(v)));
                return Ok(check);
            }
        }
    }
    check.vertex_map = model.vertex_map(&link, &label);
    let equator_edges = (0..link.complex.count(1))
        .filter(|&i| link.complex.vertices_of(Cell::new(1, i)).iter().all(|&v| label[v] < south))
        .count();
    if n >= 2 && equator_edges == 0 {
        check.reason = Some(format!("equator is {n} isolated points"));
        return Ok(check);
    }
    if let Err(reason) = model.compare(&link, &label) {
        check.reason = Some(reason);
        return Ok(check);
    }
    check.simplex_map = link
        .complex
        .cells()
        .map(|c| {
            let names = link.complex.vertices_of(c).iter().map(|&v| model.names[label[v]].clone()).collect();
            (link.complex.id(c).to_string(), names)
        })
        .collect();
    check.pass = true;
    Ok(check)
}

/// Checks that the link of the center of `square` consists of two
/// suspensions, one per vertical side, joined by the two edges coming from
/// the horizontal triangles.
pub fn verify_square_link(xs: &Simplexification, x: &SquareComplex, square: usize) -> Result<SquareLinkCheck> {
    let sq = x.squares().get(square).ok_or_else(|| Error::UnknownIdentifier(square.to_string()))?;
    let center = xs
        .provenance
        .cell_of(&Origin::Center(square))
        .ok_or_else(|| Error::NotSimplexified(format!("`{}` has no center", sq.id)))?;
    let vertical: Vec<usize> = (0..4)
        .filter(|&j| xs.provenance.cell_of(&Origin::MidpointSpoke { square, side: j }).is_some())
        .collect();
    let mut check = SquareLinkCheck {
        square: sq.id.clone(),
        pieces: Vec::new(),
        pass: false,
        reason: None,
        vertex_map: Vec::new(),
    };
    if vertical.len() != 2 {
        check.reason = Some(format!("{} vertical sides", vertical.len()));
        return Ok(check);
    }
    let mut model = Model::new();
    // per piece: (side, edge, own position, first equator vertex, tail pole, head pole)
    let mut pieces = Vec::new();
    for &j in &vertical {
        let e = sq.sides[j].edge;
        let n = xs.occurrences.multiplicity(e);
        let own = xs.occurrences.position(e, square, j).expect("vertical side is an occurrence");
        let (base, south, north) = model.suspension(n, &format!("{}@{j}:", x.edges()[e].id));
        check.pieces.push((j, n));
        pieces.push((j, e, own, base, south, north));
    }
    let piece_of_side = |j: usize| pieces.iter().find(|p| p.0 == j).copied();
    let mut pole_of_corner = HashMap::new();
    for &(j, _, _, _, south, north) in &pieces {
        let o = xs.occurrences.of(sq.sides[j].edge)[pieces.iter().find(|p| p.0 == j).unwrap().2];
        pole_of_corner.insert(o.tail_corner(), south);
        pole_of_corner.insert(o.head_corner(), north);
    }
    for h in (0..4).filter(|h| !vertical.contains(h)) {
        let mut edge = vec![pole_of_corner[&h], pole_of_corner[&((h + 1) % 4)]];
        edge.sort_unstable();
        model.expected.insert(edge);
    }

    let link = xs.complex.vertex_link(center.index);
    let mut label = Vec::with_capacity(link.complex.count(0));
    for v in 0..link.complex.count(0) {
        let (cell, slots) = link.origin(Cell::new(0, v));
        let m = match xs.provenance.origin(*cell) {
            Origin::CornerSpoke { corner, .. } => pole_of_corner.get(corner).copied(),
            Origin::MidpointSpoke { side, .. } => piece_of_side(*side).map(|p| p.3 + p.2),
            Origin::SigmaFace { edge, part: SigmaPart::Shared, with_midpoint: false, occurrences }
                if occurrences.len() == 2 =>
            {
                let at = occurrences[slots[0]];
                let other = occurrences[1 - slots[0]];
                let o = xs.occurrences.of(*edge)[at];
                piece_of_side(o.side).filter(|_| o.square == square).map(|p| p.3 + other)
            }
            _ => None,
        };
        match m {
            Some(m) => label.push(m),
            None => {
                check.reason = Some(format!("unexpected link vertex `{}`", link.vertex_label(v)));
                return Ok(check);
            }
        }
    }
    check.vertex_map = model.vertex_map(&link, &label);
    match model.compare(&link, &label) {
        Ok(()) => check.pass = true,
        Err(reason) => check.reason = Some(reason),
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::VhPartition;
    use crate::simplexify::{simplexify, triangulate_vh};
    use crate::square::RawSquareComplex;

    fn torus() -> (SquareComplex, VhPartition) {
        let mut raw = RawSquareComplex::default();
        raw.vertex("v").edge("a", "v", "v").edge("b", "v", "v");
        raw.square("q", ["a", "b", "-a", "-b"]);
        let t = SquareComplex::validate(&raw).unwrap();
        let p = VhPartition::from_vertical(&t, &["b"]).unwrap();
        (t, p)
    }

    #[test]
    fn torus_midpoint_link_is_a_suspension() {
        let (t, p) = torus();
        let star = simplexify(&t, &p).unwrap();
        let check = verify_link_suspension(&star, &t, t.edge_id("b").unwrap()).unwrap();
        assert!(check.pass, "{:?}", check.reason);
        assert_eq!(check.n, 2);
        assert_eq!(check.simplex_map.len(), 4 + 5 + 2);
    }

    #[test]
    fn triangulation_has_a_discrete_equator() {
        let (t, p) = torus();
        let hat = triangulate_vh(&t, &p).unwrap();
        let check = verify_link_suspension(&hat, &t, t.edge_id("b").unwrap()).unwrap();
        assert!(!check.pass);
        assert_eq!(check.reason.as_deref(), Some("equator is 2 isolated points"));
    }

    #[test]
    fn horizontal_edge_has_no_midpoint() {
        let (t, p) = torus();
        let star = simplexify(&t, &p).unwrap();
        assert!(matches!(
            verify_link_suspension(&star, &t, t.edge_id("a").unwrap()),
            Err(Error::NotSimplexified(_))
        ));
    }

    #[test]
    fn torus_center_link() {
        let (t, p) = torus();
        let star = simplexify(&t, &p).unwrap();
        let check = verify_square_link(&star, &t, 0).unwrap();
        assert!(check.pass, "{:?}", check.reason);
        assert_eq!(check.pieces, vec![(1, 2), (3, 2)]);
    }
}

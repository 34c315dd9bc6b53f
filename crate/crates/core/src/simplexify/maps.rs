//! Combinatorial maps of square complexes and the simplicial maps they induce
//! on simplexifications.

use std::collections::HashSet;

use super::{Origin, SigmaPart, Simplexification};
use crate::curvature::VhPartition;
use crate::delta::{Cell, DeltaComplex};
use crate::error::{Error, Result};
use crate::square::{End, Sign, SquareComplex};

/// Element of the symmetry group of a square, acting on side and corner
/// indices. Unreflected: side `j ↦ j + r`. Reflected: side `j ↦ 3 − j − r`,
/// traversed backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dihedral {
    pub rotation: usize,
    pub reflected: bool,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral { rotation: 0, reflected: false };

    /// The eight elements, rotations first.
    pub fn all() -> impl Iterator<Item = Dihedral> {
        [false, true]
            .into_iter()
            .flat_map(|reflected| (0..4).map(move |rotation| Dihedral { rotation, reflected }))
    }

    pub fn side(self, j: usize) -> usize {
        if self.reflected {
            (7 - j - self.rotation) % 4
        } else {
            (j + self.rotation) % 4
        }
    }

    pub fn corner(self, k: usize) -> usize {
        if self.reflected {
            (8 - k - self.rotation) % 4
        } else {
            (k + self.rotation) % 4
        }
    }

    /// Orientation change of every side.
    pub fn side_sign(self) -> Sign {
        if self.reflected {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `after ∘ self`.
    pub fn then(self, after: Dihedral) -> Dihedral {
        let reflected = self.reflected != after.reflected;
        let s0 = after.side(self.side(0));
        let rotation = if reflected { (7 - s0) % 4 } else { s0 };
        Dihedral { rotation, reflected }
    }
}

/// A map of square complexes sending cells to cells of the same dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    pub vertices: Vec<usize>,
    /// Image edge and whether its orientation is reversed.
    pub edges: Vec<(usize, Sign)>,
    pub squares: Vec<(usize, Dihedral)>,
}

impl CombinatorialMap {
    /// Checks that the data is a well-defined cellular map from `x` to `y`.
    pub fn new(
        x: &SquareComplex,
        y: &SquareComplex,
        vertices: Vec<usize>,
        edges: Vec<(usize, Sign)>,
        squares: Vec<(usize, Dihedral)>,
    ) -> Result<CombinatorialMap> {
        let bad = |m: String| Err(Error::NotCombinatorial(m));
        if vertices.len() != x.vertices().len()
            || edges.len() != x.edges().len()
            || squares.len() != x.squares().len()
        {
            return bad("map does not cover every cell".into());
        }
        if vertices.iter().any(|&v| v >= y.vertices().len())
            || edges.iter().any(|&(e, _)| e >= y.edges().len())
            || squares.iter().any(|&(s, d)| s >= y.squares().len() || d.rotation > 3)
        {
            return bad("image index out of range".into());
        }
        for (i, e) in x.edges().iter().enumerate() {
            let (fe, sign) = edges[i];
            let target = &y.edges()[fe];
            if target.endpoint(End::Tail.under(sign)) != vertices[e.tail]
                || target.endpoint(End::Head.under(sign)) != vertices[e.head]
            {
                return bad(format!("edge `{}` does not map onto `{}`", e.id, target.id));
            }
        }
        for (s, sq) in x.squares().iter().enumerate() {
            let (fs, d) = squares[s];
            for (j, side) in sq.sides.iter().enumerate() {
                let (fe, sign) = edges[side.edge];
                let target = y.squares()[fs].sides[d.side(j)];
                if target.edge != fe || target.sign != side.sign.times(sign).times(d.side_sign()) {
                    return bad(format!(
                        "side {j} of `{}` does not match `{}`",
                        sq.id,
                        y.squares()[fs].id
                    ));
                }
            }
        }
        Ok(CombinatorialMap { vertices, edges, squares })
    }

    /// Like [`CombinatorialMap::new`], choosing for each square the first
    /// symmetry (rotations before reflections) under which its sides match.
    pub fn infer(
        x: &SquareComplex,
        y: &SquareComplex,
        vertices: Vec<usize>,
        edges: Vec<(usize, Sign)>,
        squares: Vec<usize>,
    ) -> Result<CombinatorialMap> {
        if squares.len() != x.squares().len() || edges.len() != x.edges().len() {
            return Err(Error::NotCombinatorial("map does not cover every cell".into()));
        }
        let mut adjusted = Vec::with_capacity(squares.len());
        for (s, sq) in x.squares().iter().enumerate() {
            let fs = squares[s];
            if fs >= y.squares().len() || sq.sides.iter().any(|side| side.edge >= edges.len()) {
                return Err(Error::NotCombinatorial("image index out of range".into()));
            }
            let fits = |d: &Dihedral| {
                sq.sides.iter().enumerate().all(|(j, side)| {
                    let (fe, sign) = edges[side.edge];
                    let t = y.squares()[fs].sides[d.side(j)];
                    t.edge == fe && t.sign == side.sign.times(sign).times(d.side_sign())
                })
            };
            match Dihedral::all().find(fits) {
                Some(d) => adjusted.push((fs, d)),
                None => {
                    return Err(Error::NotCombinatorial(format!(
                        "no symmetry carries `{}` onto `{}`",
                        sq.id,
                        y.squares()[fs].id
                    )))
                }
            }
        }
        CombinatorialMap::new(x, y, vertices, edges, adjusted)
    }

    pub fn identity(x: &SquareComplex) -> CombinatorialMap {
        CombinatorialMap {
            vertices: (0..x.vertices().len()).collect(),
            edges: (0..x.edges().len()).map(|e| (e, Sign::Plus)).collect(),
            squares: (0..x.squares().len()).map(|s| (s, Dihedral::IDENTITY)).collect(),
        }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &CombinatorialMap) -> CombinatorialMap {
        CombinatorialMap {
            vertices: g.vertices.iter().map(|&v| self.vertices[v]).collect(),
            edges: g
                .edges
                .iter()
                .map(|&(e, s)| {
                    let (fe, fs) = self.edges[e];
                    (fe, s.times(fs))
                })
                .collect(),
            squares: g
                .squares
                .iter()
                .map(|&(s, d)| {
                    let (fs, fd) = self.squares[s];
                    (fs, d.then(fd))
                })
                .collect(),
        }
    }

    pub fn check_vh(
        &self,
        x: &SquareComplex,
        px: &VhPartition,
        y: &SquareComplex,
        py: &VhPartition,
    ) -> Result<()> {
        for (i, &(fe, _)) in self.edges.iter().enumerate() {
            if px.class(i) != py.class(fe) {
                return Err(Error::NotVhPreserving(format!(
                    "`{}` and its image `{}` lie in different classes",
                    x.edges()[i].id,
                    y.edges()[fe].id
                )));
            }
        }
        Ok(())
    }

    /// Distinct edge ends and distinct corners at each vertex must stay
    /// distinct.
    pub fn check_locally_injective(&self, x: &SquareComplex) -> Result<()> {
        for v in 0..x.vertices().len() {
            let mut ends = HashSet::new();
            for end in x.ends_at(v) {
                let (fe, sign) = self.edges[end.edge];
                if !ends.insert((fe, end.end.under(sign))) {
                    return Err(Error::NotLocallyInjective(x.vertices()[v].clone()));
                }
            }
            let mut corners = HashSet::new();
            for s in 0..x.squares().len() {
                let (fs, d) = self.squares[s];
                for c in (0..4).filter(|&c| x.corner(s, c) == v) {
                    if !corners.insert((fs, d.corner(c))) {
                        return Err(Error::NotLocallyInjective(x.vertices()[v].clone()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A map of generalized simplicial complexes: each simplex goes to a simplex
/// of the same dimension, slot `i` landing on slot `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    images: Vec<Vec<(usize, Vec<usize>)>>,
}

impl SimplicialMap {
    pub fn from_images(images: Vec<Vec<(usize, Vec<usize>)>>) -> SimplicialMap {
        SimplicialMap { images }
    }

    pub fn identity(x: &DeltaComplex) -> SimplicialMap {
        let images = (0..levels(x))
            .map(|k| (0..x.count(k)).map(|i| (i, (0..=k).collect())).collect())
            .collect();
        SimplicialMap { images }
    }

    pub fn image(&self, cell: Cell) -> (Cell, &[usize]) {
        let (i, perm) = &self.images[cell.dim][cell.index];
        (Cell::new(cell.dim, *i), perm)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &SimplicialMap) -> SimplicialMap {
        let images = g
            .images
            .iter()
            .enumerate()
            .map(|(k, level)| {
                level
                    .iter()
                    .map(|(i, perm)| {
                        let (j, outer) = &self.images[k][*i];
                        (*j, perm.iter().map(|&p| outer[p]).collect())
                    })
                    .collect()
            })
            .collect();
        SimplicialMap { images }
    }

    /// Checks that images are simplices and that the map commutes with every
    /// facet map.
    pub fn check(&self, src: &DeltaComplex, tgt: &DeltaComplex) -> std::result::Result<(), String> {
        for cell in src.cells() {
            let (img, perm) = self.image(cell);
            if img.index >= tgt.count(img.dim) {
                return Err(format!("`{}` maps outside the target", src.id(cell)));
            }
            let mut sorted = perm.to_vec();
            sorted.sort_unstable();
            if sorted != (0..cell.slots()).collect::<Vec<_>>() {
                return Err(format!("slot assignment of `{}` is not a bijection", src.id(cell)));
            }
            if cell.dim == 0 {
                continue;
            }
            for i in 0..cell.slots() {
                let (face_img, face_perm) = self.image(src.facet(cell, i));
                if tgt.facet(img, perm[i]) != face_img {
                    return Err(format!("facet {i} of `{}` is not respected", src.id(cell)));
                }
                for (j, &fp) in face_perm.iter().enumerate() {
                    let p = perm[if j < i { j } else { j + 1 }];
                    let expected = if p > perm[i] { p - 1 } else { p };
                    if fp != expected {
                        return Err(format!("facet {i} of `{}` is permuted", src.id(cell)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of preimages of every target simplex, per dimension.
    pub fn fiber_sizes(&self, tgt: &DeltaComplex) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..levels(tgt)).map(|k| vec![0; tgt.count(k)]).collect();
        for (k, level) in self.images.iter().enumerate() {
            for (i, _) in level {
                out[k][*i] += 1;
            }
        }
        out
    }
}

fn levels(x: &DeltaComplex) -> usize {
    x.top_dimension().map_or(0, |t| t + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    V(usize),
    M(usize),
    C(usize),
    End(usize, End),
    Corner(usize, usize),
    Occ(usize, usize),
}

/// The element of X each slot of a simplex with this origin stands for.
fn roles(origin: &Origin, x: &SquareComplex, s: &Simplexification) -> Vec<Role> {
    let side_edge = |sq: usize, j: usize| x.squares()[sq].sides[j].edge;
    match origin {
        Origin::VertexStar(v) => vec![Role::V(*v)],
        Origin::Midpoint(e) => vec![Role::M(*e)],
        Origin::Center(q) => vec![Role::C(*q)],
        Origin::HalfEdge { edge, half: Sign::Minus } => {
            vec![Role::End(*edge, End::Tail), Role::M(*edge)]
        }
        Origin::HalfEdge { edge, half: Sign::Plus } => {
            vec![Role::M(*edge), Role::End(*edge, End::Head)]
        }
        Origin::HorizontalEdge(e) => vec![Role::End(*e, End::Tail), Role::End(*e, End::Head)],
        Origin::CornerSpoke { square, corner } => {
            vec![Role::Corner(*square, *corner), Role::C(*square)]
        }
        Origin::MidpointSpoke { square, side } => {
            vec![Role::M(side_edge(*square, *side)), Role::Occ(*square, *side)]
        }
        Origin::HorizontalTriangle { square, side } => {
            let e = side_edge(*square, *side);
            vec![Role::End(e, End::Tail), Role::End(e, End::Head), Role::C(*square)]
        }
        Origin::QuarterTriangle { square, side, half } => {
            let e = side_edge(*square, *side);
            let occ = Role::Occ(*square, *side);
            match half {
                Sign::Minus => vec![Role::End(e, End::Tail), Role::M(e), occ],
                Sign::Plus => vec![Role::M(e), Role::End(e, End::Head), occ],
            }
        }
        Origin::SigmaFace { edge, part, with_midpoint, occurrences } => {
            let mid = with_midpoint.then_some(Role::M(*edge));
            let mut out: Vec<Role> = match part {
                SigmaPart::Minus => {
                    [Some(Role::End(*edge, End::Tail)), mid].into_iter().flatten().collect()
                }
                SigmaPart::Plus => {
                    [mid, Some(Role::End(*edge, End::Head))].into_iter().flatten().collect()
                }
                SigmaPart::Shared => mid.into_iter().collect(),
            };
            let list = s.occurrences.of(*edge);
            out.extend(occurrences.iter().map(|&t| Role::Occ(list[t].square, list[t].side)));
            out
        }
    }
}

struct Imager<'a> {
    f: &'a CombinatorialMap,
    x: &'a SquareComplex,
    ys: &'a Simplexification,
}

impl Imager<'_> {
    fn role(&self, r: Role) -> Role {
        let f = self.f;
        match r {
            Role::V(v) => Role::V(f.vertices[v]),
            Role::M(e) => Role::M(f.edges[e].0),
            Role::C(s) => Role::C(f.squares[s].0),
            Role::End(e, end) => Role::End(f.edges[e].0, end.under(f.edges[e].1)),
            Role::Corner(s, c) => Role::Corner(f.squares[s].0, f.squares[s].1.corner(c)),
            Role::Occ(s, j) => Role::Occ(f.squares[s].0, f.squares[s].1.side(j)),
        }
    }

    fn side(&self, s: usize, j: usize) -> (usize, usize) {
        let (fs, d) = self.f.squares[s];
        (fs, d.side(j))
    }

    fn origin(&self, o: &Origin, xs: &Simplexification) -> Result<Origin> {
        let f = self.f;
        let sign_of = |s: usize, j: usize| f.edges[self.x.squares()[s].sides[j].edge].1;
        Ok(match o {
            Origin::VertexStar(v) => Origin::VertexStar(f.vertices[*v]),
            Origin::Midpoint(e) => Origin::Midpoint(f.edges[*e].0),
            Origin::Center(s) => Origin::Center(f.squares[*s].0),
            Origin::HalfEdge { edge, half } => {
                let (fe, sign) = f.edges[*edge];
                Origin::HalfEdge { edge: fe, half: half.times(sign) }
            }
            Origin::HorizontalEdge(e) => Origin::HorizontalEdge(f.edges[*e].0),
            Origin::CornerSpoke { square, corner } => {
                let (fs, d) = f.squares[*square];
                Origin::CornerSpoke { square: fs, corner: d.corner(*corner) }
            }
            Origin::MidpointSpoke { square, side } => {
                let (fs, fj) = self.side(*square, *side);
                Origin::MidpointSpoke { square: fs, side: fj }
            }
            Origin::HorizontalTriangle { square, side } => {
                let (fs, fj) = self.side(*square, *side);
                Origin::HorizontalTriangle { square: fs, side: fj }
            }
            Origin::QuarterTriangle { square, side, half } => {
                let (fs, fj) = self.side(*square, *side);
                Origin::QuarterTriangle { square: fs, side: fj, half: half.times(sign_of(*square, *side)) }
            }
            Origin::SigmaFace { edge, part, with_midpoint, occurrences } => {
                let (fe, sign) = f.edges[*edge];
                let list = xs.occurrences.of(*edge);
                let mut image = Vec::with_capacity(occurrences.len());
                for &t in occurrences {
                    let (fs, fj) = self.side(list[t].square, list[t].side);
                    let pos = self.ys.occurrences.position(fe, fs, fj).ok_or_else(|| {
                        Error::NotSimplexified(format!("no occurrence of side {fj} of square {fs}"))
                    })?;
                    image.push(pos);
                }
                image.sort_unstable();
                if image.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::NotLocallyInjective(self.x.edges()[*edge].id.clone()));
                }
                Origin::SigmaFace {
                    edge: fe,
                    part: part.under(sign),
                    with_midpoint: *with_midpoint,
                    occurrences: image,
                }
            }
        })
    }
}

/// The simplicial map f* between simplexifications (or between
/// triangulations) induced by a VH-preserving, locally injective map f.
pub fn induced_map(
    f: &CombinatorialMap,
    x: &SquareComplex,
    px: &VhPartition,
    xs: &Simplexification,
    y: &SquareComplex,
    py: &VhPartition,
    ys: &Simplexification,
) -> Result<SimplicialMap> {
    f.check_vh(x, px, y, py)?;
    f.check_locally_injective(x)?;
    let imager = Imager { f, x, ys };
    let mut images = Vec::new();
    for k in 0..levels(&xs.complex) {
        let mut level = Vec::with_capacity(xs.complex.count(k));
        for i in 0..xs.complex.count(k) {
            let origin = xs.provenance.origin(Cell::new(k, i));
            let target = imager.origin(origin, xs)?;
            let cell = ys.provenance.cell_of(&target).ok_or_else(|| {
                Error::NotSimplexified(format!("target has no simplex for {target:?}"))
            })?;
            let src_roles = roles(origin, x, xs);
            let tgt_roles = roles(&target, y, ys);
            let perm = src_roles
                .iter()
                .map(|&r| {
                    let r = imager.role(r);
                    tgt_roles.iter().position(|&t| t == r)
                })
                .collect::<Option<Vec<usize>>>()
                .ok_or_else(|| {
                    Error::NotCombinatorial(format!("slots of `{}` have no image", xs.complex.id(Cell::new(k, i))))
                })?;
            level.push((cell.index, perm));
        }
        images.push(level);
    }
    let map = SimplicialMap { images };
    map.check(&xs.complex, &ys.complex).map_err(Error::NotCombinatorial)?;
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplexify::simplexify;
    use crate::square::RawSquareComplex;

    #[test]
    fn dihedral_group_laws() {
        for a in Dihedral::all() {
            assert_eq!(a.then(Dihedral::IDENTITY), a);
            assert_eq!(Dihedral::IDENTITY.then(a), a);
            for b in Dihedral::all() {
                let ab = a.then(b);
                for j in 0..4 {
                    assert_eq!(ab.side(j), b.side(a.side(j)));
                    assert_eq!(ab.corner(j), b.corner(a.corner(j)));
                }
            }
        }
    }

    #[test]
    fn reflection_respects_corners() {
        // corner k is the start of side k; reflected, it becomes the end of
        // the image of side k
        for d in Dihedral::all().filter(|d| d.reflected) {
            for k in 0..4 {
                assert_eq!(d.corner(k), (d.side(k) + 1) % 4);
            }
        }
    }

    fn torus() -> SquareComplex {
        let mut raw = RawSquareComplex::default();
        raw.vertex("v").edge("a", "v", "v").edge("b", "v", "v");
        raw.square("q", ["a", "b", "-a", "-b"]);
        SquareComplex::validate(&raw).unwrap()
    }

    #[test]
    fn identity_induces_identity() {
        let t = torus();
        let p = VhPartition::from_vertical(&t, &["b"]).unwrap();
        let ts = simplexify(&t, &p).unwrap();
        let id = CombinatorialMap::identity(&t);
        let star = induced_map(&id, &t, &p, &ts, &t, &p, &ts).unwrap();
        assert_eq!(star, SimplicialMap::identity(&ts.complex));
    }

    #[test]
    fn torus_reflection_induces_a_map() {
        // a ↦ a⁻¹ with the square reflected: (a, b, −a, −b) read backwards
        let t = torus();
        let p = VhPartition::from_vertical(&t, &["b"]).unwrap();
        let ts = simplexify(&t, &p).unwrap();
        let f = CombinatorialMap::infer(&t, &t, vec![0], vec![(0, Sign::Minus), (1, Sign::Plus)], vec![0])
            .unwrap();
        assert!(f.squares[0].1.reflected);
        let star = induced_map(&f, &t, &p, &ts, &t, &p, &ts).unwrap();
        assert_eq!(star.compose(&star), SimplicialMap::identity(&ts.complex));
    }

    #[test]
    fn folding_is_not_locally_injective() {
        // both edges of a two-edge path onto one edge
        let mut raw = RawSquareComplex::default();
        raw.vertex("a").vertex("b").vertex("c").edge("x", "a", "b").edge("y", "c", "b");
        let x = SquareComplex::validate(&raw).unwrap();
        let mut raw = RawSquareComplex::default();
        raw.vertex("a").vertex("b").edge("x", "a", "b");
        let y = SquareComplex::validate(&raw).unwrap();
        let f = CombinatorialMap::new(&x, &y, vec![0, 1, 0], vec![(0, Sign::Plus), (0, Sign::Plus)], vec![])
            .unwrap();
        assert!(matches!(f.check_locally_injective(&x), Err(Error::NotLocallyInjective(v)) if v == "b"));
    }

    #[test]
    fn mismatched_square_is_rejected() {
        let t = torus();
        let r = CombinatorialMap::new(&t, &t, vec![0], vec![(1, Sign::Plus), (0, Sign::Plus)], vec![(0, Dihedral::IDENTITY)]);
        assert!(matches!(r, Err(Error::NotCombinatorial(_))));
    }

    #[test]
    fn class_swap_is_not_vh_preserving() {
        let t = torus();
        let p = VhPartition::from_vertical(&t, &["b"]).unwrap();
        let f = CombinatorialMap::infer(&t, &t, vec![0], vec![(1, Sign::Plus), (0, Sign::Plus)], vec![0])
            .unwrap();
        assert!(matches!(f.check_vh(&t, &p, &t, &p), Err(Error::NotVhPreserving(_))));
    }
}

//! The triangulation X̂ and the simplexification X* of a VH square complex.
//!
//! Every vertical edge is cut at a midpoint, every square is coned from a
//! center into two horizontal triangles and four quarter triangles, and for
//! each vertical edge `e` with square occurrences `o_1..o_n` two simplices
//! `(v_-, e, o_1..o_n)` and `(e, v_+, o_1..o_n)` are glued in along their
//! faces already present in X̂.
//!
//! Simplex names are dot-separated tags built from the square-complex names,
//! which never contain dots:
//!
//! | name             | cell                                   | slot order          |
//! |------------------|----------------------------------------|---------------------|
//! | `v.x`            | vertex x                               |                     |
//! | `m.e`            | midpoint of vertical edge e            |                     |
//! | `c.s`            | center of square s                     |                     |
//! | `h.e`            | horizontal edge e                      | (tail, head)        |
//! | `hm.e`, `hp.e`   | lower and upper halves of vertical e   | (tail, m), (m, head)|
//! | `k.s.i`          | spoke from corner i to the center      | (corner, c)         |
//! | `p.s.j`          | spoke from the midpoint of side j      | (m, c)              |
//! | `t.s.j`          | triangle on horizontal side j          | (tail, head, c)     |
//! | `qm.s.j`, `qp.s.j` | quarter triangles on vertical side j | (tail, m, c), (m, head, c) |
//! | `g.e.P.E.i-j-..` | face of σ± spanning occurrences i, j.. | see [`SigmaPart`]   |

mod maps;
mod structure;

use rustc_hash::FxHashMap as HashMap;

use serde::{Deserialize, Serialize};

pub use maps::{induced_map, CombinatorialMap, Dihedral, SimplicialMap};
pub use structure::{verify_link_suspension, verify_square_link, SquareLinkCheck, SuspensionCheck};

use crate::curvature::VhPartition;
use crate::delta::{Cell, DeltaComplex, RawDeltaComplex};
use crate::error::Result;
use crate::square::{Sign, SquareComplex};

/// A vertical side of a square, recorded against its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub square: usize,
    pub side: usize,
    pub sign: Sign,
}

impl Occurrence {
    /// Corner of the square at the tail of the edge.
    pub fn tail_corner(&self) -> usize {
        match self.sign {
            Sign::Plus => self.side,
            Sign::Minus => (self.side + 1) % 4,
        }
    }

    pub fn head_corner(&self) -> usize {
        match self.sign {
            Sign::Plus => (self.side + 1) % 4,
            Sign::Minus => self.side,
        }
    }
}

/// For every vertical edge, its occurrences as square sides, ordered by
/// (square, side). Horizontal edges have empty lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceList {
    per_edge: Vec<Vec<Occurrence>>,
}

impl OccurrenceList {
    pub fn new(x: &SquareComplex, p: &VhPartition) -> Self {
        let mut per_edge = vec![Vec::new(); x.edges().len()];
        for (s, sq) in x.squares().iter().enumerate() {
            for (j, side) in sq.sides.iter().enumerate() {
                if p.is_vertical(side.edge) {
                    per_edge[side.edge].push(Occurrence { square: s, side: j, sign: side.sign });
                }
            }
        }
        OccurrenceList { per_edge }
    }

    pub fn of(&self, edge: usize) -> &[Occurrence] {
        &self.per_edge[edge]
    }

    /// n(e): number of square sides on `edge`, with multiplicity.
    pub fn multiplicity(&self, edge: usize) -> usize {
        self.per_edge[edge].len()
    }

    pub fn position(&self, edge: usize, square: usize, side: usize) -> Option<usize> {
        self.per_edge[edge].iter().position(|o| o.square == square && o.side == side)
    }
}

/// Which of the two attached simplices a face belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SigmaPart {
    /// Face of σ⁻ containing the tail vertex: slots (v_-, [m], o..).
    Minus,
    /// Face of σ⁺ containing the head vertex: slots ([m], v_+, o..).
    Plus,
    /// Face common to both: slots ([m], o..).
    Shared,
}

impl SigmaPart {
    fn letter(self) -> char {
        match self {
            SigmaPart::Minus => 'm',
            SigmaPart::Plus => 'p',
            SigmaPart::Shared => 's',
        }
    }

    fn under(self, sign: Sign) -> SigmaPart {
        match (self, sign) {
            (SigmaPart::Shared, _) | (_, Sign::Plus) => self,
            (SigmaPart::Minus, Sign::Minus) => SigmaPart::Plus,
            (SigmaPart::Plus, Sign::Minus) => SigmaPart::Minus,
        }
    }
}

/// What a simplex of X̂ or X* comes from. Indices refer to the square
/// complex; `half` is `Minus` for the tail half and `Plus` for the head half.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    VertexStar(usize),
    Midpoint(usize),
    Center(usize),
    HalfEdge { edge: usize, half: Sign },
    HorizontalEdge(usize),
    CornerSpoke { square: usize, corner: usize },
    MidpointSpoke { square: usize, side: usize },
    HorizontalTriangle { square: usize, side: usize },
    QuarterTriangle { square: usize, side: usize, half: Sign },
    SigmaFace { edge: usize, part: SigmaPart, with_midpoint: bool, occurrences: Vec<usize> },
}

/// Serializable form of an [`Origin`], with names in place of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum OriginRecord {
    VertexStar { vertex: String },
    Midpoint { edge: String },
    Center { square: String },
    HalfEdge { edge: String, half: Sign },
    HorizontalEdge { edge: String },
    CornerSpoke { square: String, corner: usize },
    MidpointSpoke { square: String, side: usize },
    HorizontalTriangle { square: String, side: usize },
    QuarterTriangle { square: String, side: usize, half: Sign },
    SigmaFace { edge: String, part: SigmaPart, with_midpoint: bool, occurrences: Vec<usize> },
}

impl Origin {
    pub fn record(&self, x: &SquareComplex) -> OriginRecord {
        let v = |i: usize| x.vertices()[i].clone();
        let e = |i: usize| x.edges()[i].id.clone();
        let s = |i: usize| x.squares()[i].id.clone();
        match self.clone() {
            Origin::VertexStar(i) => OriginRecord::VertexStar { vertex: v(i) },
            Origin::Midpoint(i) => OriginRecord::Midpoint { edge: e(i) },
            Origin::Center(i) => OriginRecord::Center { square: s(i) },
            Origin::HalfEdge { edge, half } => OriginRecord::HalfEdge { edge: e(edge), half },
            Origin::HorizontalEdge(i) => OriginRecord::HorizontalEdge { edge: e(i) },
            Origin::CornerSpoke { square, corner } => {
                OriginRecord::CornerSpoke { square: s(square), corner }
            }
            Origin::MidpointSpoke { square, side } => {
                OriginRecord::MidpointSpoke { square: s(square), side }
            }
            Origin::HorizontalTriangle { square, side } => {
                OriginRecord::HorizontalTriangle { square: s(square), side }
            }
            Origin::QuarterTriangle { square, side, half } => {
                OriginRecord::QuarterTriangle { square: s(square), side, half }
            }
            Origin::SigmaFace { edge, part, with_midpoint, occurrences } => {
                OriginRecord::SigmaFace { edge: e(edge), part, with_midpoint, occurrences }
            }
        }
    }
}

/// Origin of every simplex, aligned with the cells of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    origins: Vec<Vec<Origin>>,
    cells: HashMap<Origin, Cell>,
}

impl Provenance {
    pub fn origin(&self, cell: Cell) -> &Origin {
        &self.origins[cell.dim][cell.index]
    }

    pub fn cell_of(&self, origin: &Origin) -> Option<Cell> {
        self.cells.get(origin).copied()
    }

    /// `(simplex name, record)` pairs in simplex order.
    pub fn records(&self, complex: &DeltaComplex, x: &SquareComplex) -> Vec<(String, OriginRecord)> {
        complex
            .cells()
            .map(|c| (complex.id(c).to_string(), self.origin(c).record(x)))
            .collect()
    }
}

/// X̂ or X* together with the data needed to interpret it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplexification {
    pub complex: DeltaComplex,
    pub provenance: Provenance,
    pub occurrences: OccurrenceList,
    /// `true` for X*, `false` for the triangulation X̂.
    pub attached: bool,
}

struct Builder<'a> {
    x: &'a SquareComplex,
    occ: &'a OccurrenceList,
    raw: RawDeltaComplex,
    origins: HashMap<String, Origin>,
}

impl Builder<'_> {
    fn add(&mut self, dim: usize, name: String, facets: Vec<String>, origin: Origin) {
        self.raw.add(dim, name.clone(), facets);
        self.origins.insert(name, origin);
    }

    fn vname(&self, v: usize) -> String {
        format!("v.{}", self.x.vertices()[v])
    }

    fn ename(&self, e: usize) -> &str {
        &self.x.edges()[e].id
    }

    fn sname(&self, s: usize) -> &str {
        &self.x.squares()[s].id
    }

    fn triangulate(&mut self, p: &VhPartition) {
        let x = self.x;
        for v in 0..x.vertices().len() {
            self.add(0, self.vname(v), vec![], Origin::VertexStar(v));
        }
        for (i, e) in x.edges().iter().enumerate() {
            let (tail, head) = (self.vname(e.tail), self.vname(e.head));
            let name = self.ename(i).to_string();
            if p.is_vertical(i) {
                let mid = format!("m.{name}");
                self.add(0, mid.clone(), vec![], Origin::Midpoint(i));
                self.add(
                    1,
                    format!("hm.{name}"),
                    vec![mid.clone(), tail],
                    Origin::HalfEdge { edge: i, half: Sign::Minus },
                );
                self.add(
                    1,
                    format!("hp.{name}"),
                    vec![head, mid],
                    Origin::HalfEdge { edge: i, half: Sign::Plus },
                );
            } else {
                self.add(1, format!("h.{name}"), vec![head, tail], Origin::HorizontalEdge(i));
            }
        }
        for (s, sq) in x.squares().iter().enumerate() {
            let sn = self.sname(s).to_string();
            let center = format!("c.{sn}");
            self.add(0, center.clone(), vec![], Origin::Center(s));
            for corner in 0..4 {
                let v = self.vname(x.corner(s, corner));
                self.add(
                    1,
                    format!("k.{sn}.{corner}"),
                    vec![center.clone(), v],
                    Origin::CornerSpoke { square: s, corner },
                );
            }
            for (j, side) in sq.sides.iter().enumerate() {
                let o = Occurrence { square: s, side: j, sign: side.sign };
                let tail_spoke = format!("k.{sn}.{}", o.tail_corner());
                let head_spoke = format!("k.{sn}.{}", o.head_corner());
                let en = self.ename(side.edge).to_string();
                if p.is_vertical(side.edge) {
                    let spoke = format!("p.{sn}.{j}");
                    self.add(
                        1,
                        spoke.clone(),
                        vec![center.clone(), format!("m.{en}")],
                        Origin::MidpointSpoke { square: s, side: j },
                    );
                    self.add(
                        2,
                        format!("qm.{sn}.{j}"),
                        vec![spoke.clone(), tail_spoke, format!("hm.{en}")],
                        Origin::QuarterTriangle { square: s, side: j, half: Sign::Minus },
                    );
                    self.add(
                        2,
                        format!("qp.{sn}.{j}"),
                        vec![head_spoke, spoke, format!("hp.{en}")],
                        Origin::QuarterTriangle { square: s, side: j, half: Sign::Plus },
                    );
                } else {
                    self.add(
                        2,
                        format!("t.{sn}.{j}"),
                        vec![head_spoke, tail_spoke, format!("h.{en}")],
                        Origin::HorizontalTriangle { square: s, side: j },
                    );
                }
            }
        }
    }

    /// Name of the face of σ± over `edge` given by part, midpoint flag and
    /// a sorted set of occurrence positions. Faces with fewer than two
    /// occurrences already exist in X̂.
    fn face_name(&self, edge: usize, part: SigmaPart, with_mid: bool, occ: &[usize]) -> String {
        let e = self.ename(edge);
        let list = self.occ.of(edge);
        match occ {
            [] => match (part, with_mid) {
                (SigmaPart::Minus, true) => format!("hm.{e}"),
                (SigmaPart::Minus, false) => self.vname(self.x.edges()[edge].tail),
                (SigmaPart::Plus, true) => format!("hp.{e}"),
                (SigmaPart::Plus, false) => self.vname(self.x.edges()[edge].head),
                (SigmaPart::Shared, true) => format!("m.{e}"),
                (SigmaPart::Shared, false) => unreachable!("empty face"),
            },
            [i] => {
                let o = list[*i];
                let s = self.sname(o.square);
                match (part, with_mid) {
                    (SigmaPart::Minus, true) => format!("qm.{s}.{}", o.side),
                    (SigmaPart::Minus, false) => format!("k.{s}.{}", o.tail_corner()),
                    (SigmaPart::Plus, true) => format!("qp.{s}.{}", o.side),
                    (SigmaPart::Plus, false) => format!("k.{s}.{}", o.head_corner()),
                    (SigmaPart::Shared, true) => format!("p.{s}.{}", o.side),
                    (SigmaPart::Shared, false) => format!("c.{s}"),
                }
            }
            _ => {
                let idx: Vec<String> = occ.iter().map(|i| i.to_string()).collect();
                format!(
                    "g.{e}.{}.{}.{}",
                    part.letter(),
                    if with_mid { 1 } else { 0 },
                    idx.join("-")
                )
            }
        }
    }

    fn attach(&mut self, edge: usize) {
        let n = self.occ.multiplicity(edge);
        if n < 2 {
            return;
        }
        let parts = [SigmaPart::Shared, SigmaPart::Minus, SigmaPart::Plus];
        let slot = |mask: u64, part: SigmaPart, with_mid: bool| {
            let p = parts.iter().position(|&q| q == part).expect("known part");
            (mask as usize) * 6 + p * 2 + usize::from(with_mid)
        };
        let subset = |mask: u64| -> Vec<usize> { (0..n).filter(|i| mask >> i & 1 == 1).collect() };
        let mut names = vec![String::new(); 6 << n];
        for mask in 0u64..(1u64 << n) {
            let occ = subset(mask);
            for part in parts {
                for with_mid in [false, true] {
                    if mask != 0 || part != SigmaPart::Shared || with_mid {
                        names[slot(mask, part, with_mid)] = self.face_name(edge, part, with_mid, &occ);
                    }
                }
            }
        }
        for mask in 1u64..(1u64 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let occ = subset(mask);
            for part in parts {
                for with_mid in [false, true] {
                    // slot layout: leading v/m slots in the fixed order, then occurrences
                    let lead: &[(SigmaPart, bool)] = match (part, with_mid) {
                        (SigmaPart::Minus, true) => &[(SigmaPart::Shared, true), (SigmaPart::Minus, false)],
                        (SigmaPart::Minus, false) => &[(SigmaPart::Shared, false)],
                        (SigmaPart::Plus, true) => &[(SigmaPart::Plus, false), (SigmaPart::Shared, true)],
                        (SigmaPart::Plus, false) => &[(SigmaPart::Shared, false)],
                        (SigmaPart::Shared, true) => &[(SigmaPart::Shared, false)],
                        (SigmaPart::Shared, false) => &[],
                    };
                    let mut facets: Vec<String> =
                        lead.iter().map(|&(p, m)| names[slot(mask, p, m)].clone()).collect();
                    for &i in &occ {
                        facets.push(names[slot(mask & !(1 << i), part, with_mid)].clone());
                    }
                    let dim = facets.len() - 1;
                    self.add(
                        dim,
                        names[slot(mask, part, with_mid)].clone(),
                        facets,
                        Origin::SigmaFace { edge, part, with_midpoint: with_mid, occurrences: occ.clone() },
                    );
                }
            }
        }
    }

    fn finish(self, attached: bool) -> Simplexification {
        let complex = DeltaComplex::validate(&self.raw)
            .expect("simplexification satisfies the simplicial identities");
        let mut origins = Vec::new();
        let mut cells = HashMap::default();
        for k in 0..=complex.top_dimension().unwrap_or(0) {
            let mut level = Vec::with_capacity(complex.count(k));
            for i in 0..complex.count(k) {
                let cell = Cell::new(k, i);
                let o = self.origins[complex.id(cell)].clone();
                cells.insert(o.clone(), cell);
                level.push(o);
            }
            origins.push(level);
        }
        Simplexification {
            complex,
            provenance: Provenance { origins, cells },
            occurrences: self.occ.clone(),
            attached,
        }
    }
}

/// The triangulation X̂: vertical edges halved, squares cut into six
/// triangles around their centers.
pub fn triangulate_vh(x: &SquareComplex, p: &VhPartition) -> Result<Simplexification> {
    p.check(x)?;
    let occ = OccurrenceList::new(x, p);
    let mut b = Builder { x, occ: &occ, raw: RawDeltaComplex::default(), origins: HashMap::default() };
    b.triangulate(p);
    Ok(b.finish(false))
}

/// The simplexification X*: X̂ with σ⁻ and σ⁺ glued in over every vertical
/// edge lying on at least one square.
pub fn simplexify(x: &SquareComplex, p: &VhPartition) -> Result<Simplexification> {
    p.check(x)?;
    let occ = OccurrenceList::new(x, p);
    let mut b = Builder { x, occ: &occ, raw: RawDeltaComplex::default(), origins: HashMap::default() };
    b.triangulate(p);
    for e in 0..x.edges().len() {
        if p.is_vertical(e) {
            b.attach(e);
        }
    }
    Ok(b.finish(true))
}

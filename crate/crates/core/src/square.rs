//! Generalized square complexes and their vertex links.
//!
//! Cells need not be embedded: loops, an edge repeated in one boundary word,
//! and squares glued to themselves are all legal. A square is given by four
//! signed sides; corner `i` sits at the initial vertex of side `i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::skeleton::CellComplex;

/// Traversal direction of an edge along a square boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

/// One of the two ends of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }

    /// The end reached after applying an orientation change.
    pub fn under(self, sign: Sign) -> End {
        if sign.is_plus() {
            self
        } else {
            self.opposite()
        }
    }

    pub fn letter(self) -> char {
        match self {
            End::Tail => 't',
            End::Head => 'h',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn endpoint(&self, end: End) -> usize {
        match end {
            End::Tail => self.tail,
            End::Head => self.head,
        }
    }
}

/// A signed reference to an edge, as it appears in a boundary word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub edge: usize,
    pub sign: Sign,
}

impl Side {
    /// The edge end where the traversal starts.
    pub fn initial_end(self) -> End {
        End::Tail.under(self.sign)
    }

    pub fn terminal_end(self) -> End {
        End::Head.under(self.sign)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub id: String,
    pub sides: [Side; 4],
}

/// Unvalidated description of a square complex, as produced by a parser or
/// a builder. Sides reference edges by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawSquareComplex {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, String)>,
    pub squares: Vec<(String, [(String, Sign); 4])>,
}

impl RawSquareComplex {
    pub fn vertex(&mut self, name: impl Into<String>) -> &mut Self {
        self.vertices.push(name.into());
        self
    }

    pub fn edge(
        &mut self,
        name: impl Into<String>,
        tail: impl Into<String>,
        head: impl Into<String>,
    ) -> &mut Self {
        self.edges.push((name.into(), tail.into(), head.into()));
        self
    }

    /// Adds a square from four side tokens, each an edge name optionally
    /// prefixed with `-`.
    pub fn square(&mut self, name: impl Into<String>, sides: [&str; 4]) -> &mut Self {
        let sides = sides.map(|s| match s.strip_prefix('-') {
            Some(rest) => (rest.to_string(), Sign::Minus),
            None => (s.to_string(), Sign::Plus),
        });
        self.squares.push((name.into(), sides));
        self
    }
}

/// A validated generalized square complex. Vertices, edges and squares are
/// stored sorted by identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareComplex {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    squares: Vec<Square>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    square_index: HashMap<String, usize>,
}

fn index_of(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateIdentifier(n.clone()));
        }
    }
    Ok(map)
}

impl SquareComplex {
    /// Validates a raw description: identifiers unique and resolvable, and the
    /// corner chain `terminal(side_i) = initial(side_{i+1})` closes up in
    /// every square.
    pub fn validate(raw: &RawSquareComplex) -> Result<SquareComplex> {
        let mut vertices = raw.vertices.clone();
        vertices.sort();
        let vertex_index = index_of(&vertices)?;

        let mut raw_edges = raw.edges.clone();
        raw_edges.sort();
        let edge_names: Vec<String> = raw_edges.iter().map(|e| e.0.clone()).collect();
        let edge_index = index_of(&edge_names)?;
        let lookup_vertex = |name: &String| {
            vertex_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownIdentifier(name.clone()))
        };
        let edges = raw_edges
            .iter()
            .map(|(id, t, h)| {
                Ok(Edge {
                    id: id.clone(),
                    tail: lookup_vertex(t)?,
                    head: lookup_vertex(h)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let mut raw_squares = raw.squares.clone();
        raw_squares.sort_by(|a, b| a.0.cmp(&b.0));
        let square_names: Vec<String> = raw_squares.iter().map(|s| s.0.clone()).collect();
        let square_index = index_of(&square_names)?;
        let mut squares = Vec::with_capacity(raw_squares.len());
        for (id, words) in &raw_squares {
            let mut sides = [Side { edge: 0, sign: Sign::Plus }; 4];
            for (slot, (name, sign)) in words.iter().enumerate() {
                let edge = edge_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::UnknownIdentifier(name.clone()))?;
                sides[slot] = Side { edge, sign: *sign };
            }
            squares.push(Square { id: id.clone(), sides });
        }

        let complex = SquareComplex {
            vertices,
            edges,
            squares,
            vertex_index,
            edge_index,
            square_index,
        };
        for sq in &complex.squares {
            for i in 0..4 {
                let next = sq.sides[(i + 1) % 4];
                if complex.terminal(sq.sides[i]) != complex.initial(next) {
                    return Err(Error::CornerMismatch {
                        square: sq.id.clone(),
                        corner: (i + 1) % 4,
                    });
                }
            }
        }
        Ok(complex)
    }

    /// Converts back to a raw description (sorted order).
    pub fn to_raw(&self) -> RawSquareComplex {
        RawSquareComplex {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    (
                        e.id.clone(),
                        self.vertices[e.tail].clone(),
                        self.vertices[e.head].clone(),
                    )
                })
                .collect(),
            squares: self
                .squares
                .iter()
                .map(|s| {
                    (
                        s.id.clone(),
                        s.sides.map(|side| (self.edges[side.edge].id.clone(), side.sign)),
                    )
                })
                .collect(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn vertex_id(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<usize> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn square_id(&self, name: &str) -> Result<usize> {
        self.square_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn initial(&self, side: Side) -> usize {
        self.edges[side.edge].endpoint(side.initial_end())
    }

    pub fn terminal(&self, side: Side) -> usize {
        self.edges[side.edge].endpoint(side.terminal_end())
    }

    /// Vertex at corner `i` of square `s`.
    pub fn corner(&self, s: usize, i: usize) -> usize {
        self.initial(self.squares[s].sides[i % 4])
    }

    /// Side rendered as it appears in a boundary word (`a` or `-a`).
    pub fn side_label(&self, side: Side) -> String {
        let name = &self.edges[side.edge].id;
        match side.sign {
            Sign::Plus => name.clone(),
            Sign::Minus => format!("-{name}"),
        }
    }

    /// Edge ends located at `v`, ordered by (edge, end).
    pub fn ends_at(&self, v: usize) -> Vec<EdgeEnd> {
        let mut ends = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.tail == v {
                ends.push(EdgeEnd { edge: i, end: End::Tail });
            }
            if e.head == v {
                ends.push(EdgeEnd { edge: i, end: End::Head });
            }
        }
        ends
    }

    /// The occurrence-indexed link multigraph at `v`.
    pub fn vertex_link(&self, v: usize) -> LinkGraph {
        let vertices = self.ends_at(v);
        let position: HashMap<EdgeEnd, usize> =
            vertices.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut edges = Vec::new();
        for (s, sq) in self.squares.iter().enumerate() {
            for corner in 0..4 {
                if self.corner(s, corner) != v {
                    continue;
                }
                let before = sq.sides[(corner + 3) % 4];
                let after = sq.sides[corner];
                let a = EdgeEnd { edge: before.edge, end: before.terminal_end() };
                let b = EdgeEnd { edge: after.edge, end: after.initial_end() };
                edges.push(LinkEdge {
                    square: s,
                    corner,
                    ends: (position[&a], position[&b]),
                });
            }
        }
        LinkGraph { base: v, vertices, edges }
    }

    pub fn vertex_link_by_name(&self, v: &str) -> Result<LinkGraph> {
        Ok(self.vertex_link(self.vertex_id(v)?))
    }

    /// Disjoint union with `other`, names prefixed to keep them apart.
    pub fn disjoint_union(&self, other: &SquareComplex, left: &str, right: &str) -> SquareComplex {
        let mut raw = RawSquareComplex::default();
        for (prefix, x) in [(left, self), (right, other)] {
            let r = x.to_raw();
            for v in r.vertices {
                raw.vertex(format!("{prefix}{v}"));
            }
            for (e, t, h) in r.edges {
                raw.edge(format!("{prefix}{e}"), format!("{prefix}{t}"), format!("{prefix}{h}"));
            }
            for (s, sides) in r.squares {
                let sides = sides.map(|(e, sign)| (format!("{prefix}{e}"), sign));
                raw.squares.push((format!("{prefix}{s}"), sides));
            }
        }
        SquareComplex::validate(&raw).expect("prefixes keep the union well formed")
    }
}

impl CellComplex for SquareComplex {
    fn f_vector(&self) -> Vec<usize> {
        if self.squares.is_empty() && self.edges.is_empty() {
            vec![self.vertices.len()]
        } else if self.squares.is_empty() {
            vec![self.vertices.len(), self.edges.len()]
        } else {
            vec![self.vertices.len(), self.edges.len(), self.squares.len()]
        }
    }

    fn vertex_names(&self) -> Vec<String> {
        self.vertices.clone()
    }

    fn one_skeleton(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.tail, e.head)).collect()
    }
}

/// An edge end at a vertex: a vertex of the link graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: End,
}

/// A square corner at the base vertex: an edge of the link graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkEdge {
    pub square: usize,
    pub corner: usize,
    /// Indices into [`LinkGraph::vertices`]: the terminal end of side
    /// `corner - 1` and the initial end of side `corner`.
    pub ends: (usize, usize),
}

/// Link of a square complex at a vertex, as a multigraph on edge ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub base: usize,
    pub vertices: Vec<EdgeEnd>,
    pub edges: Vec<LinkEdge>,
}

impl LinkGraph {
    pub fn vertex_label(&self, x: &SquareComplex, i: usize) -> String {
        let end = self.vertices[i];
        format!("{}@{}", x.edges()[end.edge].id, end.end.letter())
    }

    pub fn edge_label(&self, x: &SquareComplex, i: usize) -> String {
        let e = self.edges[i];
        format!("{}@{}", x.squares()[e.square].id, e.corner)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    /// Endpoint pairs as plain index pairs.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| e.ends).collect()
    }

    /// Length of the shortest embedded cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        if self.edges.iter().any(|e| e.ends.0 == e.ends.1) {
            return Some(1);
        }
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            let key = (e.ends.0.min(e.ends.1), e.ends.0.max(e.ends.1));
            if !pairs.insert(key) {
                return Some(2);
            }
        }
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            adj[a].push(b);
            adj[b].push(a);
        }
        // BFS from each vertex; a non-tree edge closes a cycle through the root
        // of length at most dist(u) + dist(w) + 1, and the minimum over roots
        // is exact.
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> SquareComplex {
        let mut raw = RawSquareComplex::default();
        raw.vertex("v").edge("a", "v", "v").edge("b", "v", "v");
        raw.square("q", ["a", "b", "-a", "-b"]);
        SquareComplex::validate(&raw).unwrap()
    }

    fn disk() -> SquareComplex {
        let mut raw = RawSquareComplex::default();
        raw.vertex("p").vertex("q").vertex("r").vertex("s");
        raw.edge("a", "p", "q").edge("b", "q", "r").edge("c", "r", "s").edge("d", "s", "p");
        raw.square("x", ["a", "b", "c", "d"]);
        SquareComplex::validate(&raw).unwrap()
    }

    #[test]
    fn torus_and_disk_validate() {
        let t = torus();
        assert_eq!(t.f_vector(), vec![1, 2, 1]);
        let d = disk();
        assert_eq!(d.f_vector(), vec![4, 4, 1]);
    }

    #[test]
    fn broken_chain_is_reported_at_the_corner() {
        // head(b) = w, but side 2 (-a) starts at v: corner 2 does not close.
        let mut raw = RawSquareComplex::default();
        raw.vertex("v").vertex("w");
        raw.edge("a", "v", "v").edge("b", "v", "w");
        raw.square("q", ["a", "b", "-a", "-b"]);
        let err = SquareComplex::validate(&raw).unwrap_err();
        assert_eq!(err, Error::CornerMismatch { square: "q".into(), corner: 2 });
    }

    #[test]
    fn unknown_and_duplicate_identifiers() {
        let mut raw = RawSquareComplex::default();
        raw.vertex("v").edge("a", "v", "v");
        raw.square("q", ["a", "b", "-a", "-b"]);
        assert_eq!(
            SquareComplex::validate(&raw).unwrap_err(),
            Error::UnknownIdentifier("b".into())
        );
        let mut raw = RawSquareComplex::default();
        raw.vertex("v").vertex("v");
        assert_eq!(
            SquareComplex::validate(&raw).unwrap_err(),
            Error::DuplicateIdentifier("v".into())
        );
    }

    #[test]
    fn torus_link_is_a_four_cycle() {
        let t = torus();
        let link = t.vertex_link(0);
        assert_eq!(link.vertices.len(), 4);
        assert_eq!(link.edges.len(), 4);
        assert_eq!(link.girth(), Some(4));
        // a_t, a_h, b_t, b_h = 0, 1, 2, 3
        let pairs = link.edge_pairs();
        assert_eq!(pairs, vec![(2, 0), (1, 2), (3, 1), (0, 3)]);
    }

    #[test]
    fn disk_corner_link_is_one_edge() {
        let d = disk();
        for v in 0..4 {
            let link = d.vertex_link(v);
            assert_eq!(link.vertices.len(), 2);
            assert_eq!(link.edges.len(), 1);
            assert_eq!(link.girth(), None);
            assert_eq!(link.euler_characteristic(), 1);
        }
    }

    #[test]
    fn link_counts_sum_to_cell_incidences() {
        let t = torus();
        let total_edges: usize = (0..t.vertices().len()).map(|v| t.vertex_link(v).edges.len()).sum();
        let total_vertices: usize =
            (0..t.vertices().len()).map(|v| t.vertex_link(v).vertices.len()).sum();
        assert_eq!(total_edges, 4 * t.squares().len());
        assert_eq!(total_vertices, 2 * t.edges().len());
    }
}

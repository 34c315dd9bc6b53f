//! Generalized simplicial complexes as semi-simplicial sets.
//!
//! Each k-simplex carries an ordered tuple of k+1 facets; facet `i` is the
//! face opposite slot `i`. Simplices need not be embedded, so two slots of one
//! simplex may land on the same vertex.

use std::fmt::Write;

use rustc_hash::FxHashMap as HashMap;

use crate::error::{Error, Result};
use crate::skeleton::CellComplex;

/// A simplex addressed by dimension and position within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub dim: usize,
    pub index: usize,
}

impl Cell {
    pub fn new(dim: usize, index: usize) -> Self {
        Cell { dim, index }
    }

    pub fn slots(&self) -> usize {
        self.dim + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub id: String,
    /// Positions of the facets within dimension `dim - 1`.
    pub facets: Vec<usize>,
}

/// Unvalidated list of `(dimension, name, facet names)` records.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDeltaComplex {
    pub simplices: Vec<(usize, String, Vec<String>)>,
}

impl RawDeltaComplex {
    pub fn add(&mut self, dim: usize, name: impl Into<String>, facets: Vec<String>) -> &mut Self {
        self.simplices.push((dim, name.into(), facets));
        self
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> &mut Self {
        self.add(0, name, Vec::new())
    }

    pub fn simplex(&mut self, name: impl Into<String>, facets: &[&str]) -> &mut Self {
        let dim = facets.len().saturating_sub(1);
        self.add(dim, name, facets.iter().map(|f| f.to_string()).collect())
    }
}

/// A validated semi-simplicial complex; within each dimension simplices are
/// sorted by identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaComplex {
    dims: Vec<Vec<Simplex>>,
    index: HashMap<String, Cell>,
    /// vertex(σ, i) for every simplex, computed once.
    vertex_tuples: Vec<Vec<Vec<usize>>>,
}

impl DeltaComplex {
    /// Validates a raw description, checking arities, facet references and
    /// every simplicial identity.
    pub fn validate(raw: &RawDeltaComplex) -> Result<DeltaComplex> {
        let top = raw.simplices.iter().map(|s| s.0).max();
        let Some(top) = top else {
            return Ok(DeltaComplex {
                dims: Vec::new(),
                index: HashMap::default(),
                vertex_tuples: Vec::new(),
            });
        };
        let mut by_dim: Vec<Vec<&(usize, String, Vec<String>)>> = vec![Vec::new(); top + 1];
        let mut index = HashMap::with_capacity_and_hasher(raw.simplices.len(), Default::default());
        for rec in &raw.simplices {
            let (dim, name, facets) = rec;
            let expected = if *dim == 0 { 0 } else { dim + 1 };
            if facets.len() != expected {
                return Err(Error::BadArity {
                    simplex: name.clone(),
                    dim: *dim,
                    found: facets.len(),
                });
            }
            if index.insert(name.clone(), Cell::new(*dim, 0)).is_some() {
                return Err(Error::DuplicateIdentifier(name.clone()));
            }
            by_dim[*dim].push(rec);
        }
        for group in &mut by_dim {
            group.sort_by(|a, b| a.1.cmp(&b.1));
        }
        for (dim, group) in by_dim.iter().enumerate() {
            for (i, rec) in group.iter().enumerate() {
                index.insert(rec.1.clone(), Cell::new(dim, i));
            }
        }
        let mut dims = Vec::with_capacity(top + 1);
        for (dim, group) in by_dim.iter().enumerate() {
            let mut level = Vec::with_capacity(group.len());
            for (_, name, facet_names) in group {
                let mut facets = Vec::with_capacity(facet_names.len());
                for f in facet_names {
                    let cell = index.get(f).ok_or_else(|| Error::MissingFacet {
                        simplex: name.clone(),
                        facet: f.clone(),
                    })?;
                    if cell.dim + 1 != dim {
                        return Err(Error::DimensionGap {
                            simplex: name.clone(),
                            dim,
                            facet: f.clone(),
                            facet_dim: cell.dim,
                        });
                    }
                    facets.push(cell.index);
                }
                level.push(Simplex { id: name.clone(), facets });
            }
            dims.push(level);
        }
        let mut complex = DeltaComplex { dims, index, vertex_tuples: Vec::new() };
        complex.check_identities()?;
        complex.vertex_tuples = complex.compute_vertex_tuples();
        Ok(complex)
    }

    fn check_identities(&self) -> Result<()> {
        for k in 2..self.dims.len() {
            for s in &self.dims[k] {
                for j in 1..=k {
                    let fj = &self.dims[k - 1][s.facets[j]];
                    for i in 0..j {
                        let fi = &self.dims[k - 1][s.facets[i]];
                        if fj.facets[i] != fi.facets[j - 1] {
                            return Err(Error::IdentityViolation { simplex: s.id.clone(), i, j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_vertex_tuples(&self) -> Vec<Vec<Vec<usize>>> {
        let mut tuples: Vec<Vec<Vec<usize>>> = Vec::with_capacity(self.dims.len());
        for (k, level) in self.dims.iter().enumerate() {
            let mut here = Vec::with_capacity(level.len());
            for (i, s) in level.iter().enumerate() {
                if k == 0 {
                    here.push(vec![i]);
                    continue;
                }
                // Deleting the last slot keeps slots 0..k; deleting slot 0
                // shifts slot k down to k-1.
                let mut t = tuples[k - 1][s.facets[k]].clone();
                t.push(tuples[k - 1][s.facets[0]][k - 1]);
                here.push(t);
            }
            tuples.push(here);
        }
        tuples
    }

    pub fn to_raw(&self) -> RawDeltaComplex {
        let mut raw = RawDeltaComplex::default();
        for (k, level) in self.dims.iter().enumerate() {
            for s in level {
                let facets = if k == 0 {
                    Vec::new()
                } else {
                    s.facets.iter().map(|&f| self.dims[k - 1][f].id.clone()).collect()
                };
                raw.add(k, s.id.clone(), facets);
            }
        }
        raw
    }

    /// Highest dimension with a simplex, `None` for the empty complex.
    pub fn top_dimension(&self) -> Option<usize> {
        self.dims.iter().rposition(|l| !l.is_empty())
    }

    pub fn level(&self, dim: usize) -> &[Simplex] {
        self.dims.get(dim).map(|l| l.as_slice()).unwrap_or(&[])
    }

    pub fn count(&self, dim: usize) -> usize {
        self.level(dim).len()
    }

    pub fn simplex(&self, cell: Cell) -> &Simplex {
        &self.dims[cell.dim][cell.index]
    }

    pub fn id(&self, cell: Cell) -> &str {
        &self.simplex(cell).id
    }

    pub fn lookup(&self, name: &str) -> Result<Cell> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.dims
            .iter()
            .enumerate()
            .flat_map(|(k, l)| (0..l.len()).map(move |i| Cell::new(k, i)))
    }

    pub fn total_cells(&self) -> usize {
        self.dims.iter().map(|l| l.len()).sum()
    }

    /// The face opposite slot `i`.
    pub fn facet(&self, cell: Cell, i: usize) -> Cell {
        Cell::new(cell.dim - 1, self.simplex(cell).facets[i])
    }

    /// vertex(σ, i) as a vertex index.
    pub fn vertex_of(&self, cell: Cell, slot: usize) -> usize {
        self.vertex_tuples[cell.dim][cell.index][slot]
    }

    /// The vertices at every slot of `cell`, repetitions included.
    pub fn vertices_of(&self, cell: Cell) -> &[usize] {
        &self.vertex_tuples[cell.dim][cell.index]
    }

    /// Face spanned by the slots in `keep`, reached by deleting the other
    /// slots in descending order.
    pub fn iterated_face(&self, cell: Cell, keep: &[usize]) -> Result<Cell> {
        let slots = cell.slots();
        let mut mask = vec![false; slots];
        for &s in keep {
            if s >= slots {
                return Err(Error::InvalidSlot { slot: s, slots });
            }
            mask[s] = true;
        }
        if !mask.iter().any(|&m| m) {
            return Err(Error::InvalidSlot { slot: 0, slots: 0 });
        }
        let mut current = cell;
        for s in (0..slots).rev() {
            if !mask[s] {
                current = self.facet(current, s);
            }
        }
        Ok(current)
    }

    /// Deletes the listed original slots one at a time, in the given order,
    /// re-indexing the surviving slots after each deletion.
    pub fn delete_slots_in_order(&self, cell: Cell, order: &[usize]) -> Result<Cell> {
        let mut remaining: Vec<usize> = (0..cell.slots()).collect();
        let mut current = cell;
        for &s in order {
            let pos = remaining
                .iter()
                .position(|&r| r == s)
                .ok_or(Error::InvalidSlot { slot: s, slots: cell.slots() })?;
            if remaining.len() == 1 {
                return Err(Error::InvalidSlot { slot: s, slots: cell.slots() });
            }
            current = self.facet(current, pos);
            remaining.remove(pos);
        }
        Ok(current)
    }

    /// Occurrence-indexed link at a vertex.
    pub fn vertex_link(&self, v: usize) -> LinkComplex {
        let mut occurrences = Vec::new();
        for k in 1..self.dims.len() {
            for idx in 0..self.dims[k].len() {
                let cell = Cell::new(k, idx);
                for (slot, &w) in self.vertices_of(cell).iter().enumerate() {
                    if w == v {
                        occurrences.push((cell, vec![slot]));
                    }
                }
            }
        }
        self.assemble_link(Cell::new(0, v), occurrences)
    }

    pub fn vertex_link_by_name(&self, name: &str) -> Result<LinkComplex> {
        let cell = self.lookup(name)?;
        if cell.dim != 0 {
            return Err(Error::UnknownIdentifier(name.to_string()));
        }
        Ok(self.vertex_link(cell.index))
    }

    /// Occurrence-indexed link of an arbitrary simplex: one link simplex per
    /// pair (σ, S) where S is a set of slots of σ spanning `base`.
    pub fn simplex_link(&self, base: Cell) -> LinkComplex {
        if base.dim == 0 {
            return self.vertex_link(base.index);
        }
        let want = self.vertices_of(base).to_vec();
        let m = want.len();
        let mut occurrences = Vec::new();
        for k in base.dim + 1..self.dims.len() {
            for idx in 0..self.dims[k].len() {
                let cell = Cell::new(k, idx);
                let verts = self.vertices_of(cell);
                for subset in ordered_subsets(k + 1, m) {
                    if subset.iter().zip(&want).all(|(&s, &w)| verts[s] == w)
                        && self.iterated_face(cell, &subset).ok() == Some(base)
                    {
                        occurrences.push((cell, subset));
                    }
                }
            }
        }
        self.assemble_link(base, occurrences)
    }

    fn assemble_link(&self, base: Cell, occurrences: Vec<(Cell, Vec<usize>)>) -> LinkComplex {
        // occurrences arrive sorted by ambient cell; `ranges[k][i]..ranges[k][i + 1]`
        // are those of Cell(k, i)
        let mut ranges: Vec<Vec<usize>> = self.dims.iter().map(|l| vec![0; l.len() + 1]).collect();
        for (cell, _) in &occurrences {
            ranges[cell.dim][cell.index + 1] += 1;
        }
        let mut total = 0;
        for r in &mut ranges {
            r[0] = total;
            for i in 1..r.len() {
                r[i] += r[i - 1];
            }
            total = r[r.len() - 1];
        }
        let find = |cell: Cell, slots: &[usize]| -> usize {
            let (lo, hi) = (ranges[cell.dim][cell.index], ranges[cell.dim][cell.index + 1]);
            (lo..hi).find(|&o| occurrences[o].1 == slots).expect("facet occurrence is present")
        };
        let names: Vec<String> = occurrences
            .iter()
            .map(|(cell, slots)| {
                let mut name = String::with_capacity(self.id(*cell).len() + 2 * slots.len() + 1);
                name.push_str(self.id(*cell));
                name.push('@');
                for (i, s) in slots.iter().enumerate() {
                    if i > 0 {
                        name.push(',');
                    }
                    let _ = write!(name, "{s}");
                }
                name
            })
            .collect();
        let link_dim = |o: usize| occurrences[o].0.dim - occurrences[o].1.len();
        let top = (0..occurrences.len()).map(link_dim).max();
        let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); top.map_or(0, |t| t + 1)];
        for o in 0..occurrences.len() {
            by_dim[link_dim(o)].push(o);
        }
        let mut position = vec![0; occurrences.len()];
        for group in &mut by_dim {
            group.sort_unstable_by(|&a, &b| names[a].cmp(&names[b]));
            for (i, &o) in group.iter().enumerate() {
                position[o] = i;
            }
        }
        let mut dims = Vec::with_capacity(by_dim.len());
        let mut occurrence = Vec::with_capacity(by_dim.len());
        for (k, group) in by_dim.iter().enumerate() {
            let mut level = Vec::with_capacity(group.len());
            for &o in group {
                let (cell, slots) = &occurrences[o];
                let mut facets = Vec::with_capacity(if k == 0 { 0 } else { k + 1 });
                if k > 0 {
                    let mut shifted = Vec::with_capacity(slots.len());
                    for j in (0..cell.slots()).filter(|s| !slots.contains(s)) {
                        shifted.clear();
                        shifted.extend(slots.iter().map(|&s| if s > j { s - 1 } else { s }));
                        facets.push(position[find(self.facet(*cell, j), &shifted)]);
                    }
                }
                level.push(Simplex { id: names[o].clone(), facets });
            }
            dims.push(level);
            occurrence.push(group.iter().map(|&o| occurrences[o].clone()).collect());
        }
        let complex = DeltaComplex::from_levels(dims);
        debug_assert!(complex.check_identities().is_ok(), "link of a valid complex is a valid complex");
        LinkComplex { base, complex, occurrence }
    }

    /// Builds a complex from levels already sorted by identifier whose facet
    /// indices are known to satisfy the simplicial identities.
    fn from_levels(dims: Vec<Vec<Simplex>>) -> DeltaComplex {
        let mut index = HashMap::with_capacity_and_hasher(dims.iter().map(Vec::len).sum(), Default::default());
        for (k, level) in dims.iter().enumerate() {
            for (i, s) in level.iter().enumerate() {
                index.insert(s.id.clone(), Cell::new(k, i));
            }
        }
        let mut complex = DeltaComplex { dims, index, vertex_tuples: Vec::new() };
        complex.vertex_tuples = complex.compute_vertex_tuples();
        complex
    }
}

/// Increasing `size`-subsets of `0..n`, lexicographic.
pub(crate) fn ordered_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

impl CellComplex for DeltaComplex {
    fn f_vector(&self) -> Vec<usize> {
        match self.top_dimension() {
            Some(top) => (0..=top).map(|k| self.count(k)).collect(),
            None => Vec::new(),
        }
    }

    fn vertex_names(&self) -> Vec<String> {
        self.level(0).iter().map(|s| s.id.clone()).collect()
    }

    fn one_skeleton(&self) -> Vec<(usize, usize)> {
        (0..self.count(1))
            .map(|i| {
                let v = self.vertices_of(Cell::new(1, i));
                (v[0], v[1])
            })
            .collect()
    }
}

/// The link of a simplex, together with the ambient occurrence behind each of
/// its simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkComplex {
    pub base: Cell,
    pub complex: DeltaComplex,
    /// For every link simplex (indexed like `complex`), the ambient simplex and
    /// the slots occupied by the base.
    pub occurrence: Vec<Vec<(Cell, Vec<usize>)>>,
}

impl LinkComplex {
    pub fn origin(&self, cell: Cell) -> &(Cell, Vec<usize>) {
        &self.occurrence[cell.dim][cell.index]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        self.complex.id(Cell::new(0, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn boundary_of_tetrahedron() -> DeltaComplex {
        let mut raw = RawDeltaComplex::default();
        for v in ["0", "1", "2", "3"] {
            raw.vertex(v);
        }
        // edge ab has facets (b, a)
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (a, b) in pairs {
            raw.simplex(format!("e{a}{b}"), &[&b.to_string(), &a.to_string()]);
        }
        let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
        for (a, b, c) in triples {
            raw.simplex(
                format!("t{a}{b}{c}"),
                &[&format!("e{b}{c}"), &format!("e{a}{c}"), &format!("e{a}{b}")],
            );
        }
        DeltaComplex::validate(&raw).unwrap()
    }

    fn triangle() -> RawDeltaComplex {
        let mut raw = RawDeltaComplex::default();
        raw.vertex("a").vertex("b").vertex("c");
        raw.simplex("ab", &["b", "a"]).simplex("bc", &["c", "b"]).simplex("ac", &["c", "a"]);
        raw.simplex("abc", &["bc", "ac", "ab"]);
        raw
    }

    #[test]
    fn single_triangle() {
        let x = DeltaComplex::validate(&triangle()).unwrap();
        assert_eq!(x.top_dimension(), Some(2));
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        let t = x.lookup("abc").unwrap();
        assert_eq!(x.vertices_of(t), &[0, 1, 2]);
    }

    #[test]
    fn violated_identity() {
        let mut raw = triangle();
        // swap two facets: facet_0 = ac breaks facet_0(facet_2) = facet_1(facet_0)
        raw.simplices.last_mut().unwrap().2 = vec!["ac".into(), "bc".into(), "ab".into()];
        match DeltaComplex::validate(&raw) {
            Err(Error::IdentityViolation { simplex, .. }) => assert_eq!(simplex, "abc"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_facet_and_arity() {
        let mut raw = RawDeltaComplex::default();
        raw.vertex("a").simplex("e", &["a", "zz"]);
        assert!(matches!(DeltaComplex::validate(&raw), Err(Error::MissingFacet { .. })));
        let mut raw = RawDeltaComplex::default();
        raw.vertex("a").add(2, "t", vec!["a".into(), "a".into(), "a".into()]);
        assert!(matches!(DeltaComplex::validate(&raw), Err(Error::DimensionGap { .. })));
        let mut raw = RawDeltaComplex::default();
        raw.vertex("a").add(1, "e", vec!["a".into()]);
        assert!(matches!(DeltaComplex::validate(&raw), Err(Error::BadArity { .. })));
    }

    #[test]
    fn cone_on_a_loop_has_repeated_vertex() {
        let mut raw = RawDeltaComplex::default();
        raw.vertex("p").vertex("c");
        raw.simplex("loop", &["p", "p"]).simplex("s", &["c", "p"]);
        raw.simplex("t", &["s", "s", "loop"]);
        let x = DeltaComplex::validate(&raw).unwrap();
        let t = x.lookup("t").unwrap();
        let v0 = x.iterated_face(t, &[0]).unwrap();
        let v1 = x.iterated_face(t, &[1]).unwrap();
        assert_eq!(v0, v1);
        assert_eq!(x.vertex_of(t, 0), x.vertex_of(t, 1));
        assert_eq!(x.id(v0), "p");
        assert_eq!(x.id(x.iterated_face(t, &[2]).unwrap()), "c");
    }

    #[test]
    fn iterated_face_edge_cases() {
        let x = DeltaComplex::validate(&triangle()).unwrap();
        let t = x.lookup("abc").unwrap();
        assert_eq!(x.iterated_face(t, &[0, 1, 2]).unwrap(), t);
        assert_eq!(x.id(x.iterated_face(t, &[0, 2]).unwrap()), "ac");
        assert!(matches!(x.iterated_face(t, &[3]), Err(Error::InvalidSlot { .. })));
        assert_eq!(x.delete_slots_in_order(t, &[1]).unwrap(), x.lookup("ac").unwrap());
        assert_eq!(
            x.delete_slots_in_order(t, &[0, 1]).unwrap(),
            x.delete_slots_in_order(t, &[1, 0]).unwrap()
        );
    }

    #[test]
    fn tetrahedron_boundary_vertex_link_is_hollow_triangle() {
        let x = boundary_of_tetrahedron();
        for v in 0..4 {
            let link = x.vertex_link(v);
            assert_eq!(link.complex.f_vector(), vec![3, 3]);
        }
        assert_eq!(x.euler_characteristic(), 2);
        assert_eq!(x.components().len(), 1);
    }

    #[test]
    fn edge_link_in_tetrahedron_boundary() {
        let x = boundary_of_tetrahedron();
        let e = x.lookup("e01").unwrap();
        let link = x.simplex_link(e);
        // two triangles contain the edge: link is two points
        assert_eq!(link.complex.f_vector(), vec![2]);
    }
}

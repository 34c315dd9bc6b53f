//! Vertical/horizontal edge partitions.
//!
//! Opposite sides of a square must share a class and adjacent sides must
//! differ. These constraints form a signed graph on the edges; a partition
//! exists iff every constraint cycle has an even number of `Differ` steps.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, ConstraintKind, ConstraintStep};
use crate::error::{Error, Result};
use crate::square::SquareComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeClass {
    V,
    H,
}

impl EdgeClass {
    pub fn other(self) -> EdgeClass {
        match self {
            EdgeClass::V => EdgeClass::H,
            EdgeClass::H => EdgeClass::V,
        }
    }
}

/// Class of every edge, indexed like [`SquareComplex::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VhPartition {
    classes: Vec<EdgeClass>,
}

impl VhPartition {
    /// Builds a partition from the set of vertical edge names and checks the
    /// alternation constraints.
    pub fn from_vertical<S: AsRef<str>>(x: &SquareComplex, vertical: &[S]) -> Result<VhPartition> {
        let mut classes = vec![EdgeClass::H; x.edges().len()];
        for name in vertical {
            classes[x.edge_id(name.as_ref())?] = EdgeClass::V;
        }
        let p = VhPartition { classes };
        p.check(x)?;
        Ok(p)
    }

    pub fn from_classes(x: &SquareComplex, classes: Vec<EdgeClass>) -> Result<VhPartition> {
        if classes.len() != x.edges().len() {
            return Err(Error::PartitionMismatch(format!(
                "{} classes for {} edges",
                classes.len(),
                x.edges().len()
            )));
        }
        let p = VhPartition { classes };
        p.check(x)?;
        Ok(p)
    }

    /// Checks that every square alternates between the classes.
    pub fn check(&self, x: &SquareComplex) -> Result<()> {
        if self.classes.len() != x.edges().len() {
            return Err(Error::PartitionMismatch("edge count differs".into()));
        }
        for sq in x.squares() {
            let c: Vec<EdgeClass> = sq.sides.iter().map(|s| self.classes[s.edge]).collect();
            if c[0] != c[2] || c[1] != c[3] || c[0] == c[1] {
                return Err(Error::PartitionMismatch(format!(
                    "square `{}` does not alternate",
                    sq.id
                )));
            }
        }
        Ok(())
    }

    pub fn class(&self, edge: usize) -> EdgeClass {
        self.classes[edge]
    }

    pub fn is_vertical(&self, edge: usize) -> bool {
        self.classes[edge] == EdgeClass::V
    }

    pub fn classes(&self) -> &[EdgeClass] {
        &self.classes
    }

    pub fn swapped(&self) -> VhPartition {
        VhPartition { classes: self.classes.iter().map(|c| c.other()).collect() }
    }

    /// Names of the vertical edges, in edge order.
    pub fn vertical_names(&self, x: &SquareComplex) -> Vec<String> {
        x.edges()
            .iter()
            .zip(&self.classes)
            .filter(|(_, c)| **c == EdgeClass::V)
            .map(|(e, _)| e.id.clone())
            .collect()
    }

    /// Index of the first vertical side of a square (0 or 1).
    pub fn vertical_offset(&self, x: &SquareComplex, square: usize) -> usize {
        if self.is_vertical(x.squares()[square].sides[0].edge) {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Constraint {
    square: usize,
    kind: ConstraintKind,
    sides: (usize, usize),
    edges: (usize, usize),
}

fn constraints(x: &SquareComplex) -> Vec<Constraint> {
    let mut out = Vec::with_capacity(6 * x.squares().len());
    for (s, sq) in x.squares().iter().enumerate() {
        let pairs = [
            (ConstraintKind::Same, 0, 2),
            (ConstraintKind::Same, 1, 3),
            (ConstraintKind::Differ, 0, 1),
            (ConstraintKind::Differ, 1, 2),
            (ConstraintKind::Differ, 2, 3),
            (ConstraintKind::Differ, 3, 0),
        ];
        for (kind, i, j) in pairs {
            out.push(Constraint {
                square: s,
                kind,
                sides: (i, j),
                edges: (sq.sides[i].edge, sq.sides[j].edge),
            });
        }
    }
    out
}

/// Result of a successful VH detection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VhDetection {
    pub partition: VhPartition,
    /// Number of connected components of the constraint graph; each can be
    /// flipped independently.
    pub free_components: usize,
}

/// Two-colours the constraint graph breadth-first in edge order. The least
/// edge of each component is vertical.
pub fn detect_vh(x: &SquareComplex) -> std::result::Result<VhDetection, Certificate> {
    let cons = constraints(x);
    let n = x.edges().len();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, con) in cons.iter().enumerate() {
        let (a, b) = con.edges;
        if a == b {
            if con.kind == ConstraintKind::Differ {
                return Err(contradiction(x, &cons, &[(c, a)]));
            }
            continue;
        }
        adjacency[a].push(c);
        adjacency[b].push(c);
    }

    let mut color: Vec<Option<EdgeClass>> = vec![None; n];
    // (constraint, parent edge) through which each edge was reached
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut components = 0;
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        components += 1;
        color[root] = Some(EdgeClass::V);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &c in &adjacency[u] {
                let con = cons[c];
                let w = if con.edges.0 == u { con.edges.1 } else { con.edges.0 };
                let want = match con.kind {
                    ConstraintKind::Same => cu,
                    ConstraintKind::Differ => cu.other(),
                };
                match color[w] {
                    None => {
                        color[w] = Some(want);
                        parent[w] = Some((c, u));
                        queue.push_back(w);
                    }
                    Some(cw) if cw != want => {
                        let cycle = close_cycle(&parent, u, w, c);
                        return Err(contradiction(x, &cons, &cycle));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(VhDetection {
        partition: VhPartition { classes: color.into_iter().map(Option::unwrap).collect() },
        free_components: components,
    })
}

/// Builds the cycle root..lca..u -c-> w..lca as (constraint, edge entered
/// from) steps, starting at the lowest common ancestor.
fn close_cycle(parent: &[Option<(usize, usize)>], u: usize, w: usize, closing: usize) -> Vec<(usize, usize)> {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while let Some((_, p)) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    let lca = *pu.iter().find(|v| pw.contains(v)).expect("same BFS tree");
    let mut steps = Vec::new();
    // lca down to u
    let down: Vec<usize> = pu[..pu.iter().position(|&v| v == lca).unwrap()].to_vec();
    for &v in down.iter().rev() {
        let (c, p) = parent[v].unwrap();
        steps.push((c, p));
    }
    steps.push((closing, u));
    // w up to lca
    for &v in &pw[..pw.iter().position(|&v| v == lca).unwrap()] {
        let (c, _) = parent[v].unwrap();
        steps.push((c, v));
    }
    steps
}

fn contradiction(x: &SquareComplex, cons: &[Constraint], steps: &[(usize, usize)]) -> Certificate {
    let name = |e: usize| x.edges()[e].id.clone();
    let steps = steps
        .iter()
        .map(|&(c, from)| {
            let con = cons[c];
            let (from_side, to_side, to) = if con.edges.0 == from {
                (con.sides.0, con.sides.1, con.edges.1)
            } else {
                (con.sides.1, con.sides.0, con.edges.0)
            };
            ConstraintStep {
                square: x.squares()[con.square].id.clone(),
                kind: con.kind,
                from_side,
                to_side,
                from: name(from),
                to: name(to),
            }
        })
        .collect();
    Certificate::VhContradiction { steps }
}

use rayon::prelude::*;
use serde::Serialize;

use crate::curvature::detect_vh;
use crate::error::{Error, Result};
use crate::simplexify::{CombinatorialMap, Dihedral};
use crate::skeleton::CellComplex;
use crate::square::{RawSquareComplex, Sign, SquareComplex};

/// Largest edge count accepted by [`enumerate_z2_covers`].
pub const Z2_EDGE_CAP: usize = 20;

/// A permutation of `0..fiber` for every edge, indexed like the edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    pub fiber: usize,
    pub perms: Vec<Vec<usize>>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

impl EdgeLabeling {
    pub fn identity(x: &SquareComplex, fiber: usize) -> Self {
        EdgeLabeling { fiber, perms: vec![(0..fiber).collect(); x.edges().len()] }
    }

    /// Labels from Z/2: `true` swaps the two sheets.
    pub fn z2(flips: &[bool]) -> Self {
        let perms = flips.iter().map(|&f| if f { vec![1, 0] } else { vec![0, 1] }).collect();
        EdgeLabeling { fiber: 2, perms }
    }

    /// Sheet reached after walking once around `square` from sheet `i` at
    /// corner 0.
    fn holonomy(&self, x: &SquareComplex, square: usize, i: usize) -> usize {
        let mut cur = i;
        for side in x.squares()[square].sides {
            let p = &self.perms[side.edge];
            cur = match side.sign {
                Sign::Plus => p[cur],
                Sign::Minus => p.iter().position(|&j| j == cur).expect("permutation"),
            };
        }
        cur
    }

    pub fn check(&self, x: &SquareComplex) -> Result<()> {
        if self.perms.len() != x.edges().len() {
            return Err(Error::BadLabel(format!("{} labels for {} edges", self.perms.len(), x.edges().len())));
        }
        for (e, p) in self.perms.iter().enumerate() {
            if p.len() != self.fiber || !is_permutation(p) {
                return Err(Error::BadLabel(format!(
                    "label of `{}` is not a permutation of 0..{}",
                    x.edges()[e].id,
                    self.fiber
                )));
            }
        }
        for (s, sq) in x.squares().iter().enumerate() {
            if (0..self.fiber).any(|i| self.holonomy(x, s, i) != i) {
                return Err(Error::InvalidLabeling(sq.id.clone()));
            }
        }
        Ok(())
    }
}

/// Parses `label <edge> <image of 0> ... <image of d-1>` lines; unlisted
/// edges get the identity. `#` starts a comment.
pub fn parse_labeling(text: &str, x: &SquareComplex, fiber: usize) -> Result<EdgeLabeling> {
    if fiber == 0 {
        return Err(Error::BadLabel("fiber size must be positive".into()));
    }
    let mut labeling = EdgeLabeling::identity(x, fiber);
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = full.split('#').next().unwrap_or("").split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        let syntax = |message: String| Error::Syntax { line, message };
        if keyword != "label" {
            return Err(syntax(format!("unknown keyword `{keyword}`")));
        }
        let [edge, images @ ..] = args else {
            return Err(syntax("expected `label <edge> <images>`".into()));
        };
        let e = x.edge_id(edge)?;
        if images.len() != fiber {
            return Err(syntax(format!("`{edge}` needs {fiber} images, found {}", images.len())));
        }
        let perm = images
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| syntax(format!("bad sheet `{t}`"))))
            .collect::<Result<Vec<usize>>>()?;
        labeling.perms[e] = perm;
    }
    labeling.check(x)?;
    Ok(labeling)
}

/// The d-sheeted cover with vertices `<v>_<i>`, edges `<e>_<i>` from
/// `(tail, i)` to `(head, L(e)(i))` and squares `<q>_<i>` lifted from sheet
/// i at corner 0, with the covering map onto `x`.
pub fn finite_cover(x: &SquareComplex, labeling: &EdgeLabeling) -> Result<(SquareComplex, CombinatorialMap)> {
    labeling.check(x)?;
    let d = labeling.fiber;
    let mut raw = RawSquareComplex::default();
    for v in x.vertices() {
        for i in 0..d {
            raw.vertex(format!("{v}_{i}"));
        }
    }
    for (k, e) in x.edges().iter().enumerate() {
        for i in 0..d {
            raw.edge(
                format!("{}_{i}", e.id),
                format!("{}_{i}", x.vertices()[e.tail]),
                format!("{}_{}", x.vertices()[e.head], labeling.perms[k][i]),
            );
        }
    }
    let inverses: Vec<Vec<usize>> = labeling.perms.iter().map(|p| invert(p)).collect();
    for sq in x.squares() {
        for i in 0..d {
            let mut cur = i;
            let mut words = Vec::with_capacity(4);
            for side in sq.sides {
                let id = &x.edges()[side.edge].id;
                match side.sign {
                    Sign::Plus => {
                        words.push(format!("{id}_{cur}"));
                        cur = labeling.perms[side.edge][cur];
                    }
                    Sign::Minus => {
                        cur = inverses[side.edge][cur];
                        words.push(format!("-{id}_{cur}"));
                    }
                }
            }
            raw.square(format!("{}_{i}", sq.id), [&words[0], &words[1], &words[2], &words[3]]);
        }
    }
    let cover = SquareComplex::validate(&raw)?;
    let base_of = |name: &str| name.rsplit_once('_').expect("sheet suffix").0.to_string();
    let vertices = cover.vertices().iter().map(|v| x.vertex_id(&base_of(v))).collect::<Result<Vec<_>>>()?;
    let edges = cover
        .edges()
        .iter()
        .map(|e| Ok((x.edge_id(&base_of(&e.id))?, Sign::Plus)))
        .collect::<Result<Vec<_>>>()?;
    let squares = cover
        .squares()
        .iter()
        .map(|s| Ok((x.square_id(&base_of(&s.id))?, Dihedral::IDENTITY)))
        .collect::<Result<Vec<_>>>()?;
    let map = CombinatorialMap::new(&cover, x, vertices, edges, squares)?;
    Ok((cover, map))
}

/// A valid Z/2 labeling and what its cover looks like.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Z2Cover {
    /// Sheet swap per edge, in edge order.
    pub flips: Vec<bool>,
    pub connected: bool,
    pub vh: bool,
}

/// All valid Z/2 labelings, ordered lexicographically with the first edge
/// most significant.
pub fn enumerate_z2_covers(x: &SquareComplex) -> Result<Vec<Z2Cover>> {
    let m = x.edges().len();
    if m > Z2_EDGE_CAP {
        return Err(Error::TooManyEdges { edges: m, cap: Z2_EDGE_CAP });
    }
    let found: Vec<Option<Z2Cover>> = (0u32..(1u32 << m))
        .into_par_iter()
        .map(|mask| {
            let flips: Vec<bool> = (0..m).map(|e| mask >> (m - 1 - e) & 1 == 1).collect();
            let valid = x
                .squares()
                .iter()
                .all(|sq| sq.sides.iter().filter(|s| flips[s.edge]).count() % 2 == 0);
            if !valid {
                return None;
            }
            let (cover, _) = finite_cover(x, &EdgeLabeling::z2(&flips)).expect("valid labeling");
            Some(Z2Cover { connected: cover.is_connected(), vh: detect_vh(&cover).is_ok(), flips })
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::standard_complex;

    #[test]
    fn k_double_cover() {
        let (k, _) = standard_complex("K").unwrap();
        // swapping sheets along c: q1 lifts pair a_i with b_i, q2 lifts pair
        // a_i with b_(1-i), and the classes a_0 = b_1 = c_1 = V close up
        let (cover, map) = finite_cover(&k, &EdgeLabeling::z2(&[false, false, true])).unwrap();
        assert_eq!((cover.vertices().len(), cover.edges().len(), cover.squares().len()), (2, 6, 4));
        assert!(cover.is_connected());
        let vh = detect_vh(&cover).unwrap();
        assert_eq!(vh.partition.vertical_names(&cover), vec!["a_0", "b_1", "c_1"]);
        map.check_locally_injective(&cover).unwrap();

        // swapping along a and b: q1_0 = (b_0, a_1, b_0, -a_0) forces a_0 ~ a_1
        // and b_0 !~ a_1, while q2_0 = (a_0, c_1, -b_0, -c_0) forces a_0 ~ b_0
        let (cover, _) = finite_cover(&k, &EdgeLabeling::z2(&[true, true, false])).unwrap();
        assert!(cover.is_connected());
        assert!(detect_vh(&cover).is_err());
    }

    #[test]
    fn k_invalid_labeling() {
        let (k, _) = standard_complex("K").unwrap();
        let r = finite_cover(&k, &EdgeLabeling::z2(&[true, false, false]));
        assert_eq!(r.unwrap_err(), Error::InvalidLabeling("q2".into()));
    }

    #[test]
    fn trivial_cover_is_two_copies() {
        let (t, _) = standard_complex("torus").unwrap();
        let (cover, _) = finite_cover(&t, &EdgeLabeling::identity(&t, 2)).unwrap();
        assert_eq!(cover.components().len(), 2);
    }

    #[test]
    fn enumerations() {
        let (k, _) = standard_complex("K").unwrap();
        let all = enumerate_z2_covers(&k).unwrap();
        let flips: Vec<Vec<bool>> = all.iter().map(|c| c.flips.clone()).collect();
        assert_eq!(
            flips,
            vec![
                vec![false, false, false],
                vec![false, false, true],
                vec![true, true, false],
                vec![true, true, true]
            ]
        );
        let (t, _) = standard_complex("torus").unwrap();
        assert_eq!(enumerate_z2_covers(&t).unwrap().len(), 4);
    }

    #[test]
    fn label_file() {
        let (k, _) = standard_complex("K").unwrap();
        let l = parse_labeling("# swap a and b\nlabel a 1 0\nlabel b 1 0\n", &k, 2).unwrap();
        assert_eq!(l, EdgeLabeling::z2(&[true, true, false]));
        assert!(matches!(parse_labeling("label a 1 1\n", &k, 2), Err(Error::BadLabel(_))));
        assert!(matches!(parse_labeling("label a 1\n", &k, 2), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_labeling("label z 1 0\n", &k, 2), Err(Error::UnknownIdentifier(_))));
    }
}

//! Presentations of the fundamental group of a square complex, their
//! abelianization, and finite covers built from edge labelings.

mod cover;

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use cover::{enumerate_z2_covers, finite_cover, parse_labeling, EdgeLabeling, Z2Cover, Z2_EDGE_CAP};

use crate::error::{Error, Result};
use crate::homology::{smith_normal_form, IntegerMatrix};
use crate::skeleton::CellComplex;
use crate::square::SquareComplex;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<Letter>>,
}

impl Presentation {
    pub fn word(&self, relator: &[Letter]) -> String {
        let letters: Vec<String> = relator
            .iter()
            .map(|l| {
                let g = &self.generators[l.generator];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect();
        if letters.is_empty() {
            "1".to_string()
        } else {
            letters.join(" ")
        }
    }

    pub fn relator_words(&self) -> Vec<String> {
        self.relators.iter().map(|r| self.word(r)).collect()
    }
}

/// `<generators> | <relators>`, both comma separated.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.generators.join(", "), self.relator_words().join(", "))
    }
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            generators: &'a [String],
            relators: Vec<String>,
        }
        Json { generators: &self.generators, relators: self.relator_words() }.serialize(s)
    }
}

/// Edges of a breadth-first spanning tree from `base`, scanning incident
/// edges in edge order.
fn spanning_tree(x: &SquareComplex, base: usize) -> Result<Vec<bool>> {
    let n = x.vertices().len();
    let mut incident = vec![Vec::new(); n];
    for (i, e) in x.edges().iter().enumerate() {
        incident[e.tail].push(i);
        if e.head != e.tail {
            incident[e.head].push(i);
        }
    }
    let mut seen = vec![false; n];
    let mut tree = vec![false; x.edges().len()];
    let mut queue = VecDeque::from([base]);
    seen[base] = true;
    while let Some(u) = queue.pop_front() {
        for &i in &incident[u] {
            let e = &x.edges()[i];
            let w = if e.tail == u { e.head } else { e.tail };
            if !seen[w] {
                seen[w] = true;
                tree[i] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().all(|&s| s) {
        Ok(tree)
    } else {
        Err(Error::NotConnected)
    }
}

/// Generators are the edges outside a breadth-first spanning tree; each
/// square contributes its boundary word read from corner 0, with tree edges
/// dropped.
pub fn pi1_presentation(x: &SquareComplex, basepoint: &str) -> Result<Presentation> {
    let base = x.vertex_id(basepoint)?;
    if !x.is_connected() {
        return Err(Error::NotConnected);
    }
    let tree = spanning_tree(x, base)?;
    let mut generator_of = vec![None; x.edges().len()];
    let mut generators = Vec::new();
    for (i, e) in x.edges().iter().enumerate() {
        if !tree[i] {
            generator_of[i] = Some(generators.len());
            generators.push(e.id.clone());
        }
    }
    let relators = x
        .squares()
        .iter()
        .map(|sq| {
            sq.sides
                .iter()
                .filter_map(|side| {
                    generator_of[side.edge]
                        .map(|generator| Letter { generator, inverse: !side.sign.is_plus() })
                })
                .collect()
        })
        .collect();
    Ok(Presentation { generators, relators })
}

/// `Z^free_rank ⊕ Z/t_1 ⊕ ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for Abelianization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            free_rank: usize,
            torsion: Vec<String>,
        }
        Json { free_rank: self.free_rank, torsion: self.torsion.iter().map(|t| t.to_string()).collect() }
            .serialize(s)
    }
}

/// Smith normal form of the relator exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let mut m = IntegerMatrix::zeros(p.relators.len(), p.generators.len());
    for (r, word) in p.relators.iter().enumerate() {
        for l in word {
            let v = if l.inverse { -BigInt::one() } else { BigInt::one() };
            m.add(r, l.generator, &v);
        }
    }
    let snf = smith_normal_form(&m);
    Abelianization {
        free_rank: p.generators.len() - snf.rank,
        torsion: snf.factors.into_iter().filter(|d| !d.is_one() && !d.is_zero()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::standard_complex;

    #[test]
    fn presentation_of_k() {
        let (k, _) = standard_complex("K").unwrap();
        let p = pi1_presentation(&k, "v").unwrap();
        assert_eq!(p.generators, vec!["a", "b", "c"]);
        assert_eq!(p.relator_words(), vec!["b a b a^-1", "a c b^-1 c^-1"]);
        assert_eq!(p.to_string(), "a, b, c | b a b a^-1, a c b^-1 c^-1");
        let ab = abelianization(&p);
        assert_eq!(ab.free_rank, 1);
        assert_eq!(ab.torsion, vec![BigInt::from(2)]);
        assert_eq!(ab.to_string(), "Z + Z/2");
    }

    #[test]
    fn torus_and_disk() {
        let (t, _) = standard_complex("torus").unwrap();
        let p = pi1_presentation(&t, "v").unwrap();
        assert_eq!(p.relator_words(), vec!["a b a^-1 b^-1"]);
        assert_eq!(abelianization(&p), Abelianization { free_rank: 2, torsion: vec![] });

        let (d, _) = standard_complex("disk").unwrap();
        let p = pi1_presentation(&d, "p").unwrap();
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.relators[0].len(), 1);
        assert_eq!(abelianization(&p).to_string(), "0");
    }

    #[test]
    fn cyclic_group_of_order_two() {
        let p = Presentation {
            generators: vec!["x".into()],
            relators: vec![vec![Letter { generator: 0, inverse: false }; 2]],
        };
        assert_eq!(abelianization(&p), Abelianization { free_rank: 0, torsion: vec![BigInt::from(2)] });
    }

    #[test]
    fn disconnected_and_unknown_basepoint() {
        let x = crate::corpus::graph(2, &[]);
        assert_eq!(pi1_presentation(&x, "g0"), Err(Error::NotConnected));
        assert!(matches!(pi1_presentation(&x, "nope"), Err(Error::UnknownIdentifier(_))));
    }
}

//! Integral homology of generalized simplicial complexes.

mod matrix;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

pub use matrix::{smith_normal_form, IntegerMatrix, SnfResult};

use crate::delta::{Cell, DeltaComplex};

/// `∂_k` for `k = 0..=top`; `∂_k σ = Σ (−1)^i facet_i σ`, one column per
/// k-simplex. `∂_0` has no rows.
pub fn boundary_matrices(x: &DeltaComplex) -> Vec<IntegerMatrix> {
    let Some(top) = x.top_dimension() else {
        return Vec::new();
    };
    let mut out = vec![IntegerMatrix::zeros(0, x.count(0))];
    for k in 1..=top {
        let mut m = IntegerMatrix::zeros(x.count(k - 1), x.count(k));
        let (plus, minus) = (BigInt::one(), -BigInt::one());
        for j in 0..x.count(k) {
            for i in 0..=k {
                let f = x.facet(Cell::new(k, j), i);
                m.add(f.index, j, if i % 2 == 0 { &plus } else { &minus });
            }
        }
        out.push(m);
    }
    out
}

/// Betti numbers and torsion coefficients per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl std::fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, b) in self.betti.iter().enumerate() {
            let mut parts = Vec::new();
            if *b > 0 {
                parts.push(if *b == 1 { "Z".to_string() } else { format!("Z^{b}") });
            }
            parts.extend(self.torsion[k].iter().map(|t| format!("Z/{t}")));
            if parts.is_empty() {
                parts.push("0".into());
            }
            writeln!(f, "H_{k} = {}", parts.join(" + "))?;
        }
        Ok(())
    }
}

struct Coefficient<'a>(&'a BigInt);

impl Serialize for Coefficient<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<Vec<Coefficient>> =
            self.torsion.iter().map(|t| t.iter().map(Coefficient).collect()).collect();
        let mut st = s.serialize_struct("HomologyProfile", 2)?;
        st.serialize_field("betti", &self.betti)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

pub fn homology_groups(x: &DeltaComplex) -> HomologyProfile {
    let boundaries = boundary_matrices(x);
    let snf: Vec<SnfResult> = boundaries.par_iter().map(smith_normal_form).collect();
    let top = boundaries.len();
    let rank = |k: usize| if k < top { snf[k].rank } else { 0 };
    let mut betti = Vec::with_capacity(top);
    let mut torsion = Vec::with_capacity(top);
    for k in 0..top {
        betti.push(x.count(k) - rank(k) - rank(k + 1));
        let t = if k + 1 < top {
            snf[k + 1].factors.iter().filter(|d| !d.is_one()).cloned().collect()
        } else {
            Vec::new()
        };
        torsion.push(t);
    }
    HomologyProfile { betti, torsion }
}

/// Betti numbers over the field with `p` elements.
pub fn betti_mod_p(x: &DeltaComplex, p: u64) -> Vec<usize> {
    let boundaries = boundary_matrices(x);
    let ranks: Vec<usize> = boundaries.par_iter().map(|m| m.rank_mod_p(p)).collect();
    let top = boundaries.len();
    (0..top)
        .map(|k| x.count(k) - ranks[k] - if k + 1 < top { ranks[k + 1] } else { 0 })
        .collect()
}

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A sparse matrix of arbitrary-precision integers, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BTreeMap::new(); rows] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = IntegerMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.add(i, j, &BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries[r].get(&c).cloned().unwrap_or_default()
    }

    /// Adds `v` to entry (r, c).
    pub fn add(&mut self, r: usize, c: usize, v: &BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let slot = self.entries[r].entry(c).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries[r].remove(&c);
        }
    }

    /// Nonzero entries of row `r`, by column.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.entries[r].iter().map(|(&c, v)| (c, v))
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.is_empty())
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &other.entries[k] {
                    out.add(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect()
    }

    /// Rank over the field with `p` elements; `p` must be prime.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let pb = BigInt::from(p);
        let reduce = |v: &BigInt| v.mod_floor(&pb).to_u64().expect("residue fits");
        let mut rows: Vec<BTreeMap<usize, u64>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|(&c, v)| (c, reduce(v))).filter(|&(_, v)| v != 0).collect())
            .collect();
        let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let inv = |a: u64| {
            // Fermat
            let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul(acc, base);
                }
                base = mul(base, base);
                e >>= 1;
            }
            acc
        };
        let mut rank = 0;
        let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for row in rows.iter_mut() {
            let mut row = std::mem::take(row);
            while let Some((&c, &v)) = row.iter().next() {
                match pivots.get(&c) {
                    Some(prow) => {
                        let f = mul(v, inv(prow[&c]));
                        for (&pc, &pv) in prow {
                            let cur = row.get(&pc).copied().unwrap_or(0);
                            let next = (cur + p - mul(f, pv)) % p;
                            if next == 0 {
                                row.remove(&pc);
                            } else {
                                row.insert(pc, next);
                            }
                        }
                    }
                    None => {
                        pivots.insert(c, row);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

struct Work {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Work {
    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// row `t` -= q * row `s`.
    fn row_sub(&mut self, t: usize, s: usize, q: &BigInt) {
        let src: Vec<(usize, BigInt)> = self.rows[s].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            let cur = self.rows[t].get(&c).cloned().unwrap_or_default();
            self.set(t, c, cur - q * v);
        }
    }

    /// Clears column `c` below and above the pivot at (r, c), then row `r`.
    /// Returns the pivot value once row and column are both cleared.
    fn eliminate(&mut self, r: usize, c: usize) -> Option<BigInt> {
        let p = self.rows[r][&c].clone();
        let others: Vec<usize> = self.cols[c].iter().copied().filter(|&t| t != r).collect();
        let mut clean = true;
        for t in others {
            let q = self.rows[t][&c].div_floor(&p);
            self.row_sub(t, r, &q);
            clean &= !self.cols[c].contains(&t);
        }
        if !clean {
            return None;
        }
        // the column now holds only the pivot, so column operations only
        // change row r
        let rest: Vec<(usize, BigInt)> = self.rows[r]
            .iter()
            .filter(|&(&j, _)| j != c)
            .map(|(&j, v)| (j, v.mod_floor(&p)))
            .collect();
        let done = rest.iter().all(|(_, v)| v.is_zero());
        for (j, v) in rest {
            self.set(r, j, v);
        }
        if done {
            self.set(r, c, BigInt::zero());
            Some(p.abs())
        } else {
            None
        }
    }

    fn smallest_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                let a = v.abs();
                let cost = row.len() * self.cols[c].len();
                let better = match &best {
                    None => true,
                    Some((ba, bc, _, _)) => a < *ba || (a == *ba && cost < *bc),
                };
                if better {
                    best = Some((a, cost, r, c));
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let mut w = Work { rows: m.entries.clone(), cols: vec![BTreeSet::new(); m.cols] };
    for (r, row) in w.rows.iter().enumerate() {
        for &c in row.keys() {
            w.cols[c].insert(r);
        }
    }
    let mut diagonal = Vec::new();
    // unit pivots first: no remainders, little fill-in
    for c in 0..m.cols {
        let unit = w.cols[c]
            .iter()
            .copied()
            .filter(|&r| w.rows[r][&c].abs().is_one())
            .min_by_key(|&r| w.rows[r].len());
        if let Some(r) = unit {
            let d = w.eliminate(r, c).expect("unit pivots clear in one step");
            diagonal.push(d);
        }
    }
    while let Some((r, c)) = w.smallest_pivot() {
        if let Some(d) = w.eliminate(r, c) {
            diagonal.push(d);
        }
    }
    let rank = diagonal.len();
    SnfResult { factors: divisibility_chain(diagonal), rank }
}

/// Turns a diagonal into invariant factors by replacing pairs with their gcd
/// and lcm.
fn divisibility_chain(diagonal: Vec<BigInt>) -> Vec<BigInt> {
    let ones = diagonal.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigInt> = diagonal.into_iter().filter(|d| !d.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let (g, l) = (rest[i].gcd(&rest[j]), rest[i].lcm(&rest[j]));
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigInt::one(); ones];
    out.extend(rest);
    out.sort();
    out
}

//! Queries shared by square and simplicial complexes.

/// Anything with cell counts and a 1-skeleton.
pub trait CellComplex {
    /// Cell counts per dimension, up to the top nonempty dimension.
    fn f_vector(&self) -> Vec<usize>;

    fn vertex_names(&self) -> Vec<String>;

    /// Endpoints of every 1-cell, as vertex indices.
    fn one_skeleton(&self) -> Vec<(usize, usize)>;

    fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Connected components of the 1-skeleton, each sorted, ordered by their
    /// least vertex index.
    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_names().len();
        let mut dsu = Dsu::new(n);
        for (a, b) in self.one_skeleton() {
            dsu.union(a, b);
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = dsu.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    fn component_names(&self) -> Vec<Vec<String>> {
        let names = self.vertex_names();
        self.components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| names[v].clone()).collect())
            .collect()
    }

    fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

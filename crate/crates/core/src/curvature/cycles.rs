//! Embedded cycles without diagonals.

use super::graph::SimpleGraph;

/// All embedded cycles of the requested lengths (each ≥ 4) with no edge
/// joining two nonconsecutive cycle vertices.
///
/// Every cycle is returned once, in canonical form: rotated to start at its
/// least vertex and oriented so the second vertex is less than the last.
/// The list is sorted.
pub fn chordless_cycles(g: &SimpleGraph, lengths: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let Some(&longest) = lengths.iter().max() else {
        return out;
    };
    let mut path = Vec::with_capacity(longest);
    for start in 0..g.order() {
        path.push(start);
        extend(g, lengths, longest, &mut path, &mut out);
        path.pop();
    }
    out.sort();
    out
}

fn extend(
    g: &SimpleGraph,
    lengths: &[usize],
    longest: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let start = path[0];
    let t = path.len();
    let last = path[t - 1];
    for w in g.neighbours(last).iter() {
        if w <= start || path.contains(&w) {
            continue;
        }
        // w may touch only its predecessor among p_1..p_{t-2}
        if t >= 2 && path[1..t - 1].iter().any(|&p| g.adjacent(p, w)) {
            continue;
        }
        let closes = g.adjacent(start, w);
        let len = t + 1;
        if closes {
            // closing back to the start is a chord unless the cycle ends here
            if len >= 4 && lengths.contains(&len) && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            if t > 1 {
                continue;
            }
        }
        if len < longest {
            path.push(w);
            extend(g, lengths, longest, path, out);
            path.pop();
        }
    }
}

/// Checks that `cycle` is embedded, consecutive vertices are adjacent and
/// nonconsecutive ones are not.
pub fn is_chordless_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    if n < 4 {
        return false;
    }
    for i in 0..n {
        if cycle[i] >= g.order() || cycle[i + 1..].contains(&cycle[i]) {
            return false;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if g.adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn four_cycle() {
        let g = SimpleGraph::new(4, cycle_graph(4));
        assert_eq!(chordless_cycles(&g, &[4, 5]), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn four_cycle_with_diagonal() {
        let mut e = cycle_graph(4);
        e.push((0, 2));
        let g = SimpleGraph::new(4, e);
        assert!(chordless_cycles(&g, &[4, 5]).is_empty());
    }

    #[test]
    fn wheel_rim_is_chordless() {
        let mut e = cycle_graph(5);
        e.extend((0..5).map(|i| (i, 5)));
        let g = SimpleGraph::new(6, e);
        assert_eq!(chordless_cycles(&g, &[4, 5]), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn six_cycle_is_long_enough() {
        let g = SimpleGraph::new(6, cycle_graph(6));
        assert!(chordless_cycles(&g, &[4, 5]).is_empty());
        assert_eq!(chordless_cycles(&g, &[6]).len(), 1);
    }

    #[test]
    fn complete_bipartite_k23() {
        // three chordless 4-cycles, one per pair of the 3-side
        let e = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];
        let g = SimpleGraph::new(5, e);
        let found = chordless_cycles(&g, &[4, 5]);
        assert_eq!(found, vec![vec![0, 2, 1, 3], vec![0, 2, 1, 4], vec![0, 3, 1, 4]]);
        assert!(found.iter().all(|c| is_chordless_cycle(&g, c)));
    }
}

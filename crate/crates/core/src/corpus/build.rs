use crate::curvature::VhPartition;
use crate::delta::{DeltaComplex, RawDeltaComplex};
use crate::error::{Error, Result};
use crate::square::{RawSquareComplex, SquareComplex};

/// Names accepted by [`standard_complex`]; `rose_product(m,n)` takes two
/// positive integers.
pub const STANDARD_NAMES: [&str; 5] = ["K", "torus", "klein", "disk", "rose_product(m,n)"];

/// A graph as a square complex without squares: vertices `g<i>`, edges
/// `e<k>` from `edges[k].0` to `edges[k].1`.
pub fn graph(vertices: usize, edges: &[(usize, usize)]) -> SquareComplex {
    let mut raw = RawSquareComplex::default();
    for v in 0..vertices {
        raw.vertex(format!("g{v}"));
    }
    for (k, &(t, h)) in edges.iter().enumerate() {
        raw.edge(format!("e{k}"), format!("g{t}"), format!("g{h}"));
    }
    SquareComplex::validate(&raw).expect("edge endpoints are in range")
}

/// One vertex with `m` loops.
pub fn rose(m: usize) -> SquareComplex {
    graph(1, &vec![(0, 0); m])
}

/// A path on `n` vertices.
pub fn path(n: usize) -> SquareComplex {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    graph(n, &edges)
}

/// The product of the 1-skeleta of two complexes. Vertices `u<i>_<j>`,
/// vertical edges `a<k>_<j>` (edge k of the first factor at vertex j of the
/// second), horizontal edges `b<i>_<l>`, squares `q<k>_<l>`. The vertical
/// edges are exactly those from the first factor.
pub fn graph_product(g1: &SquareComplex, g2: &SquareComplex) -> (SquareComplex, VhPartition) {
    let u = |i: usize, j: usize| format!("u{i}_{j}");
    let a = |k: usize, j: usize| format!("a{k}_{j}");
    let b = |i: usize, l: usize| format!("b{i}_{l}");
    let mut raw = RawSquareComplex::default();
    for i in 0..g1.vertices().len() {
        for j in 0..g2.vertices().len() {
            raw.vertex(u(i, j));
        }
    }
    let mut vertical = Vec::new();
    for (k, e) in g1.edges().iter().enumerate() {
        for j in 0..g2.vertices().len() {
            raw.edge(a(k, j), u(e.tail, j), u(e.head, j));
            vertical.push(a(k, j));
        }
    }
    for i in 0..g1.vertices().len() {
        for (l, e) in g2.edges().iter().enumerate() {
            raw.edge(b(i, l), u(i, e.tail), u(i, e.head));
        }
    }
    for (k, e1) in g1.edges().iter().enumerate() {
        for (l, e2) in g2.edges().iter().enumerate() {
            let sides = [
                a(k, e2.tail),
                b(e1.head, l),
                format!("-{}", a(k, e2.head)),
                format!("-{}", b(e1.tail, l)),
            ];
            raw.square(format!("q{k}_{l}"), [&sides[0], &sides[1], &sides[2], &sides[3]]);
        }
    }
    let x = SquareComplex::validate(&raw).expect("product squares close up");
    let p = VhPartition::from_vertical(&x, &vertical).expect("factor edges alternate");
    (x, p)
}

fn one_vertex(edges: &[&str], squares: &[(&str, [&str; 4])]) -> SquareComplex {
    let mut raw = RawSquareComplex::default();
    raw.vertex("v");
    for e in edges {
        raw.edge(*e, "v", "v");
    }
    for (name, word) in squares {
        raw.square(*name, *word);
    }
    SquareComplex::validate(&raw).expect("standard complex is valid")
}

fn parse_rose_product(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("rose_product(")?.strip_suffix(')')?;
    let (m, n) = inner.split_once(',')?;
    let m: usize = m.trim().parse().ok()?;
    let n: usize = n.trim().parse().ok()?;
    (m > 0 && n > 0).then_some((m, n))
}

/// Builds a named example together with its VH partition, if it has one.
pub fn standard_complex(name: &str) -> Result<(SquareComplex, Option<VhPartition>)> {
    let vertical = |x: &SquareComplex, v: &[&str]| {
        Some(VhPartition::from_vertical(x, v).expect("standard partition is consistent"))
    };
    match name {
        "K" => Ok((
            one_vertex(&["a", "b", "c"], &[("q1", ["b", "a", "b", "-a"]), ("q2", ["a", "c", "-b", "-c"])]),
            None,
        )),
        "torus" => {
            let x = one_vertex(&["a", "b"], &[("q", ["a", "b", "-a", "-b"])]);
            let p = vertical(&x, &["b"]);
            Ok((x, p))
        }
        "klein" => {
            let x = one_vertex(&["a", "b"], &[("q", ["b", "a", "b", "-a"])]);
            let p = vertical(&x, &["b"]);
            Ok((x, p))
        }
        "disk" => {
            let mut raw = RawSquareComplex::default();
            raw.vertex("p").vertex("q").vertex("r").vertex("s");
            raw.edge("w", "p", "q").edge("x", "q", "r").edge("y", "s", "r").edge("z", "p", "s");
            raw.square("d", ["w", "x", "-y", "-z"]);
            let x = SquareComplex::validate(&raw).expect("disk is valid");
            let p = vertical(&x, &["w", "y"]);
            Ok((x, p))
        }
        _ => match parse_rose_product(name) {
            Some((m, n)) => {
                let (x, p) = graph_product(&rose(m), &rose(n));
                Ok((x, Some(p)))
            }
            None => Err(Error::UnknownName(name.to_string())),
        },
    }
}

/// Cones every square off to a center: vertices `v.<x>` and `c.<s>`, edges
/// `e.<e>` and corner spokes `k.<s>.<i>`, triangles `t.<s>.<j>` on side j
/// with slots (tail, head, center).
pub fn generic_triangulation(x: &SquareComplex) -> DeltaComplex {
    let v = |i: usize| format!("v.{}", x.vertices()[i]);
    let mut raw = RawDeltaComplex::default();
    for i in 0..x.vertices().len() {
        raw.vertex(v(i));
    }
    for e in x.edges() {
        raw.add(1, format!("e.{}", e.id), vec![v(e.head), v(e.tail)]);
    }
    for (s, sq) in x.squares().iter().enumerate() {
        let center = format!("c.{}", sq.id);
        raw.vertex(center.clone());
        for corner in 0..4 {
            raw.add(1, format!("k.{}.{corner}", sq.id), vec![center.clone(), v(x.corner(s, corner))]);
        }
        for (j, side) in sq.sides.iter().enumerate() {
            let (tail_corner, head_corner) =
                if side.sign.is_plus() { (j, (j + 1) % 4) } else { ((j + 1) % 4, j) };
            raw.add(
                2,
                format!("t.{}.{j}", sq.id),
                vec![
                    format!("k.{}.{head_corner}", sq.id),
                    format!("k.{}.{tail_corner}", sq.id),
                    format!("e.{}", x.edges()[side.edge].id),
                ],
            );
        }
    }
    DeltaComplex::validate(&raw).expect("cone subdivision satisfies the identities")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{check_npc, detect_vh};
    use crate::skeleton::CellComplex;

    #[test]
    fn rose_products() {
        let (t, p) = graph_product(&rose(1), &rose(1));
        assert_eq!((t.vertices().len(), t.edges().len(), t.squares().len()), (1, 2, 1));
        assert_eq!(p.vertical_names(&t), vec!["a0_0"]);
        let (x, _) = standard_complex("rose_product(2,2)").unwrap();
        assert_eq!((x.vertices().len(), x.edges().len(), x.squares().len()), (1, 4, 4));
        assert_eq!(x.euler_characteristic(), 1);
    }

    #[test]
    fn path_product_is_a_square() {
        let (d, _) = graph_product(&path(2), &path(2));
        assert_eq!((d.vertices().len(), d.edges().len(), d.squares().len()), (4, 4, 1));
        assert_eq!(d.euler_characteristic(), 1);
    }

    #[test]
    fn k_is_npc_but_not_vh() {
        let (k, p) = standard_complex("K").unwrap();
        assert!(p.is_none());
        assert!(check_npc(&k).pass());
        assert!(detect_vh(&k).is_err());
    }

    #[test]
    fn unknown_names() {
        for bad in ["k", "rose_product(0,2)", "rose_product(2)", "sphere"] {
            assert_eq!(standard_complex(bad).unwrap_err(), Error::UnknownName(bad.into()));
        }
    }

    #[test]
    fn generic_counts() {
        let (d, _) = standard_complex("disk").unwrap();
        let g = generic_triangulation(&d);
        assert_eq!(g.f_vector(), vec![5, 8, 4]);
        let (k, _) = standard_complex("K").unwrap();
        let g = generic_triangulation(&k);
        assert_eq!(g.f_vector(), vec![3, 11, 8]);
        assert_eq!(g.euler_characteristic(), 0);
    }
}

use cxcore::corpus::{
    generic_triangulation, parse_dsc, parse_sqc, serialize_dsc, serialize_sqc, standard_complex,
};
use cxcore::curvature::{check_npc, detect_vh, verify_certificate, Certificate, SixLargeOptions, Subject, VhPartition};
use cxcore::fundamental::{abelianization, enumerate_z2_covers, finite_cover, pi1_presentation, EdgeLabeling};
use cxcore::homology::{homology_groups, HomologyProfile};
use cxcore::simplexify::{
    induced_map, simplexify, triangulate_vh, verify_link_suspension, verify_square_link, CombinatorialMap,
    SimplicialMap,
};
use cxcore::{CellComplex, RawSquareComplex, Sign, SquareComplex};
use num_bigint::BigInt;

fn vh_corpus() -> Vec<(&'static str, SquareComplex, VhPartition)> {
    ["torus", "klein", "disk", "rose_product(1,1)", "rose_product(2,2)", "rose_product(1,3)"]
        .into_iter()
        .map(|n| {
            let (x, p) = standard_complex(n).unwrap();
            (n, x, p.unwrap())
        })
        .collect()
}

fn all_corpus() -> Vec<SquareComplex> {
    let mut out: Vec<SquareComplex> = vh_corpus().into_iter().map(|(_, x, _)| x).collect();
    out.push(standard_complex("K").unwrap().0);
    out
}

fn trimmed(h: &HomologyProfile) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let (mut b, mut t) = (h.betti.clone(), h.torsion.clone());
    while b.last() == Some(&0) && t.last().is_some_and(Vec::is_empty) {
        b.pop();
        t.pop();
    }
    (b, t)
}

/// Two torus squares on the same boundary word: every link has a bigon.
fn doubled_torus() -> SquareComplex {
    let mut raw = RawSquareComplex::default();
    raw.vertex("v").edge("a", "v", "v").edge("b", "v", "v");
    raw.square("q1", ["a", "b", "-a", "-b"]).square("q2", ["a", "b", "-a", "-b"]);
    SquareComplex::validate(&raw).unwrap()
}

#[test]
fn triangulation_counts_follow_the_cell_formula() {
    for (name, x, p) in vh_corpus() {
        let ev = (0..x.edges().len()).filter(|&e| p.is_vertical(e)).count();
        let eh = x.edges().len() - ev;
        let (v, s) = (x.vertices().len(), x.squares().len());
        let hat = triangulate_vh(&x, &p).unwrap().complex;
        let mut expected = vec![v + ev + s, eh + 2 * ev + 6 * s, 6 * s];
        if s == 0 {
            expected.pop();
        }
        assert_eq!(hat.f_vector(), expected, "{name}");
    }
}

#[test]
fn euler_characteristic_is_preserved() {
    for (name, x, p) in vh_corpus() {
        let chi = x.euler_characteristic();
        assert_eq!(triangulate_vh(&x, &p).unwrap().complex.euler_characteristic(), chi, "{name}");
        assert_eq!(simplexify(&x, &p).unwrap().complex.euler_characteristic(), chi, "{name}");
        assert_eq!(generic_triangulation(&x).euler_characteristic(), chi, "{name}");
    }
}

#[test]
fn homology_is_independent_of_the_model() {
    for (name, x, p) in vh_corpus() {
        let star = trimmed(&homology_groups(&simplexify(&x, &p).unwrap().complex));
        let hat = trimmed(&homology_groups(&triangulate_vh(&x, &p).unwrap().complex));
        let generic = trimmed(&homology_groups(&generic_triangulation(&x)));
        assert_eq!(star, hat, "{name}");
        assert_eq!(hat, generic, "{name}");
    }
}

#[test]
fn known_homology() {
    let h = |name: &str| homology_groups(&generic_triangulation(&standard_complex(name).unwrap().0));
    let torus = h("torus");
    assert_eq!(torus.betti, vec![1, 2, 1]);
    assert!(torus.torsion.iter().all(Vec::is_empty));
    for name in ["klein", "K"] {
        let x = h(name);
        assert_eq!(&x.betti[..2], &[1, 1], "{name}");
        assert_eq!(x.betti.get(2).copied().unwrap_or(0), 0, "{name}");
        assert_eq!(x.torsion[1], vec![BigInt::from(2)], "{name}");
        assert_eq!(x.to_string().lines().nth(1), Some("H_1 = Z + Z/2"));
    }
}

#[test]
fn abelianized_fundamental_group_is_first_homology() {
    for x in all_corpus() {
        let p = pi1_presentation(&x, &x.vertices()[0]).unwrap();
        let ab = abelianization(&p);
        let h = homology_groups(&generic_triangulation(&x));
        assert_eq!(ab.free_rank, h.betti[1]);
        assert_eq!(ab.torsion, h.torsion[1]);
    }
}

#[test]
fn double_covers_double_euler_characteristic_and_keep_curvature() {
    let mut bases = all_corpus();
    bases.push(doubled_torus());
    for x in bases {
        let npc = check_npc(&x).pass();
        for c in enumerate_z2_covers(&x).unwrap() {
            let (cover, f) = finite_cover(&x, &EdgeLabeling::z2(&c.flips)).unwrap();
            assert_eq!(cover.euler_characteristic(), 2 * x.euler_characteristic());
            assert_eq!(check_npc(&cover).pass(), npc);
            f.check_locally_injective(&cover).unwrap();
        }
    }
    assert!(!check_npc(&doubled_torus()).pass());
}

#[test]
fn text_formats_round_trip() {
    for x in all_corpus() {
        let p = detect_vh(&x).ok().map(|d| d.partition);
        let text = serialize_sqc(&x, p.as_ref());
        let doc = parse_sqc(&text).unwrap();
        assert_eq!(serialize_sqc(&doc.complex, doc.partition.as_ref()), text);
        assert_eq!(doc.complex.f_vector(), x.f_vector());
        let d = generic_triangulation(&x);
        let dsc = serialize_dsc(&d);
        assert_eq!(parse_dsc(&dsc).unwrap(), d);
    }
    for (_, x, p) in vh_corpus() {
        let star = simplexify(&x, &p).unwrap().complex;
        assert_eq!(parse_dsc(&serialize_dsc(&star)).unwrap(), star);
    }
}

#[test]
fn links_in_the_simplexification_have_the_model_shape() {
    for (name, x, p) in vh_corpus() {
        let xs = simplexify(&x, &p).unwrap();
        for e in (0..x.edges().len()).filter(|&e| p.is_vertical(e)) {
            let c = verify_link_suspension(&xs, &x, e).unwrap();
            assert!(c.pass, "{name} {}: {:?}", c.edge, c.reason);
        }
        for s in 0..x.squares().len() {
            let c = verify_square_link(&xs, &x, s).unwrap();
            assert!(c.pass, "{name} {}: {:?}", c.square, c.reason);
        }
    }
}

#[test]
fn suspension_fails_without_attachments() {
    let (x, p) = standard_complex("torus").unwrap();
    let hat = triangulate_vh(&x, &p.unwrap()).unwrap();
    let c = verify_link_suspension(&hat, &x, x.edge_id("b").unwrap()).unwrap();
    assert!(!c.pass);
}

#[test]
fn induced_maps_respect_identity_and_composition() {
    let (x, p) = standard_complex("rose_product(2,2)").unwrap();
    let p = p.unwrap();
    let xs = simplexify(&x, &p).unwrap();
    let id = induced_map(&CombinatorialMap::identity(&x), &x, &p, &xs, &x, &p, &xs).unwrap();
    assert_eq!(id, SimplicialMap::identity(&xs.complex));

    let swap = |name: &str| -> String {
        match name.as_bytes()[1] {
            b'0' => format!("{}1{}", &name[..1], &name[2..]),
            b'1' => format!("{}0{}", &name[..1], &name[2..]),
            _ => unreachable!(),
        }
    };
    let vertices = (0..x.vertices().len()).collect();
    let edges = x
        .edges()
        .iter()
        .map(|e| {
            let image = if e.id.starts_with('a') { swap(&e.id) } else { e.id.clone() };
            (x.edge_id(&image).unwrap(), Sign::Plus)
        })
        .collect();
    let squares = x.squares().iter().map(|s| x.square_id(&swap(&s.id)).unwrap()).collect();
    let g = CombinatorialMap::infer(&x, &x, vertices, edges, squares).unwrap();
    let gg = g.compose(&g);
    assert_eq!(gg, CombinatorialMap::identity(&x));
    let g_star = induced_map(&g, &x, &p, &xs, &x, &p, &xs).unwrap();
    let gg_star = induced_map(&gg, &x, &p, &xs, &x, &p, &xs).unwrap();
    assert_ne!(g_star, id);
    assert_eq!(g_star.compose(&g_star), gg_star);
    g_star.check(&xs.complex, &xs.complex).unwrap();
}

#[test]
fn emitted_certificates_verify() {
    let bigon = doubled_torus();
    let certs = check_npc(&bigon).certificates;
    assert!(!certs.is_empty());
    for c in &certs {
        verify_certificate(Subject::Square(&bigon), c).unwrap();
    }
    let (k, _) = standard_complex("K").unwrap();
    let cert = detect_vh(&k).unwrap_err();
    verify_certificate(Subject::Square(&k), &cert).unwrap();
    let (t, _) = standard_complex("torus").unwrap();
    assert!(verify_certificate(Subject::Square(&t), &cert).is_err());

    let (x, p) = standard_complex("torus").unwrap();
    let hat = triangulate_vh(&x, &p.unwrap()).unwrap().complex;
    let report = cxcore::curvature::check_locally_6_large(&hat, SixLargeOptions::default()).unwrap();
    assert!(!report.pass());
    for c in &report.certificates {
        verify_certificate(Subject::Delta(&hat), c).unwrap();
        if let Certificate::ChordlessCycle { base, cycle } = c {
            let mut bad = cycle.clone();
            bad.swap(0, 1);
            let forged = Certificate::ChordlessCycle { base: base.clone(), cycle: bad };
            assert!(verify_certificate(Subject::Delta(&hat), &forged).is_err());
        }
    }
}

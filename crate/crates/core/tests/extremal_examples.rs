mod common;

use indpath::bench::build_instance;
use indpath::extremal::{
    gen_chordal_tower, gen_ktree_universal, gen_outerplanar_doubling, gen_planar_substitution,
    gen_stacked_triangulation, Family,
};
use indpath::graph::{chordal_elimination, io::write_graph};
use indpath::ktree::recognize_ktree;
use indpath::oracle::{longest_induced_path_exact, SearchBudget};
use indpath::Graph;

#[test]
fn doubling_family() {
    let f = gen_outerplanar_doubling(0).unwrap();
    assert_eq!((f.graph.clone(), f.predicted_lip), (Graph::complete(3), 2.0));
    let f = gen_outerplanar_doubling(2).unwrap();
    assert_eq!((f.graph.n(), f.predicted_lip), (12, 6.0));
    let f = gen_outerplanar_doubling(3).unwrap();
    assert_eq!(common::naive_lip(&f.graph), 8);
    for i in 0..6 {
        let f = gen_outerplanar_doubling(i).unwrap();
        f.check().unwrap();
        assert!(recognize_ktree(&f.graph, 2, None).is_ok());
    }
}

#[test]
fn universal_vertices() {
    let a = gen_ktree_universal(1, 2).unwrap();
    assert_eq!(a.graph, gen_outerplanar_doubling(1).unwrap().graph);
    let b = gen_ktree_universal(2, 3).unwrap();
    b.check().unwrap();
    assert_eq!(b.graph.n(), 13);
    assert!(recognize_ktree(&b.graph, 3, None).is_ok());
    let c = gen_ktree_universal(2, 4).unwrap();
    assert_eq!(c.graph.n(), 14);
    assert!(common::naive_lip(&c.graph) as f64 <= 2.0 * 14f64.log2());
}

#[test]
fn stacked_triangulations() {
    assert_eq!(gen_stacked_triangulation(1).unwrap().graph, Graph::complete(4));
    let f = gen_stacked_triangulation(2).unwrap();
    f.check().unwrap();
    assert_eq!(f.graph.n(), 7);
    // measured value; the family is claimed to have i+1 = 3 here
    assert_eq!(common::naive_lip(&f.graph), 4);
    assert_eq!(f.graph.m(), 3 * 7 - 6, "planar triangulation");
}

#[test]
fn planar_substitution() {
    let f = gen_planar_substitution(4, 1).unwrap();
    f.check().unwrap();
    assert_eq!((f.graph.n(), f.predicted_lip), (6, 4.0));
    assert_eq!(common::naive_lip(&f.graph), 4);
    let f = gen_planar_substitution(4, 2).unwrap();
    f.check().unwrap();
    assert_eq!(f.predicted_lip, 6.0);
    // the construction only guarantees at most 2i + (k-2); measured 5
    assert_eq!(common::naive_lip(&f.graph), 5);
    let f = gen_planar_substitution(3, 1).unwrap();
    assert_eq!(f.predicted_lip, 3.0);
    assert_eq!(common::naive_lip(&f.graph), 3);
}

#[test]
fn chordal_towers() {
    let f = gen_chordal_tower(2, 1, 1).unwrap();
    f.check().unwrap();
    assert_eq!(f.graph.n(), 8);
    assert_eq!(chordal_elimination(&f.graph).unwrap().omega, 5);
    assert_eq!(common::naive_omega(&f.graph), 5);
    let f = gen_chordal_tower(2, 2, 1).unwrap();
    f.check().unwrap();
    // 50 vertices: too many for subset enumeration, so use the exact search
    let lip = longest_induced_path_exact(&f.graph, SearchBudget::default());
    assert!(lip.optimal && lip.witness.size() as f64 <= 2.0 * (6f64.log2() + 1.0));
    let f = gen_chordal_tower(3, 1, 1).unwrap();
    f.check().unwrap();
    assert_eq!(chordal_elimination(&f.graph).unwrap().omega, 7);
}

#[test]
fn generation_is_byte_stable() {
    for (name, params) in [("doubling", vec![("i", 3)]), ("tower", vec![("t", 2), ("k", 1)])] {
        let p = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let a = build_instance(name, &p, 0).unwrap();
        let b = build_instance(name, &p, 0).unwrap();
        assert_eq!(write_graph(&a.graph), write_graph(&b.graph));
        assert_eq!(a.sidecar, b.sidecar);
    }
    let f = gen_outerplanar_doubling(3).unwrap();
    assert_eq!(
        f.sidecar_json(),
        r#"{"family":"outerplanar_doubling","params":{"i":3},"n":24,"m":45,"predicted_lip":8.0,"has_ham":true}"#
    );
    assert_eq!(Family::parse("chordal_tower"), Some(Family::ChordalTower));
}

#[test]
fn oversized_requests_are_refused() {
    assert!(gen_outerplanar_doubling(40).is_err());
    assert!(gen_stacked_triangulation(30).is_err());
    assert!(gen_planar_substitution(10, 10).is_err());
    assert!(gen_planar_substitution(2, 1).is_err());
}

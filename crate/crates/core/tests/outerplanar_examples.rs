mod common;

use indpath::bounds;
use indpath::extremal::{gen_outerplanar_doubling, glue_chain};
use indpath::graph::{tree_longest_path, verify_path_witness};
use indpath::outerplanar::{extract_bracelet, extract_outerplanar, outer_cycle, triangulate_outerplanar, Bracelet};
use indpath::{Error, Graph};

/// Independent check: `cycle` is a Hamiltonian cycle of `g` and no two
/// chords cross. Returns the number of chords.
fn non_crossing_chords(g: &Graph, cycle: &[usize]) -> usize {
    let n = cycle.len();
    assert_eq!(n, g.n());
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    assert!(pos.iter().all(|&p| p < n));
    for i in 0..n {
        assert!(g.has_edge(cycle[i], cycle[(i + 1) % n]));
    }
    let chords: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .filter(|&(a, b)| b - a != 1 && b - a != n - 1)
        .collect();
    for &(a, b) in &chords {
        for &(c, d) in &chords {
            assert!(!(a < c && c < b && b < d), "chords {a}-{b} and {c}-{d} cross");
        }
    }
    chords.len()
}

#[test]
fn outer_cycles() {
    let c = outer_cycle(&Graph::cycle(5)).unwrap();
    assert_eq!(non_crossing_chords(&Graph::cycle(5), &c), 0);
    assert!(matches!(
        outer_cycle(&Graph::complete(4)),
        Err(Error::NotOuterplanar(_))
    ));
    let g = gen_outerplanar_doubling(2).unwrap().graph;
    let c = outer_cycle(&g).unwrap();
    assert_eq!(c.len(), 12);
    assert_eq!(non_crossing_chords(&g, &c), 9);
}

#[test]
fn triangulations() {
    let tp = triangulate_outerplanar(&Graph::cycle(4)).unwrap();
    assert_eq!((tp.added_edges.len(), tp.triangles.len(), tp.weak_dual.m()), (1, 2, 1));
    let tp = triangulate_outerplanar(&Graph::cycle(6)).unwrap();
    assert_eq!((tp.added_edges.len(), tp.triangles.len()), (3, 4));
    assert_eq!(tree_longest_path(&tp.weak_dual).unwrap().size(), 4);
    let g = gen_outerplanar_doubling(3).unwrap().graph;
    let tp = triangulate_outerplanar(&g).unwrap();
    assert!(tp.added_edges.is_empty());
    assert_eq!(tp.completed(&g), g);
    assert_eq!(tp.weak_dual.n(), 22);
}

#[test]
fn outerplanar_extraction() {
    let g = gen_outerplanar_doubling(4).unwrap().graph;
    let w = extract_outerplanar(&g).unwrap();
    assert!(verify_path_witness(&g, &w).is_ok() && w.claims_induced);
    assert!(bounds::meets(w.size(), bounds::outerplanar(48)) && w.size() >= 3 && w.size() <= 10);

    let c8 = Graph::cycle(8);
    let w = extract_outerplanar(&c8).unwrap();
    assert!(verify_path_witness(&c8, &w).is_ok());
    assert!(w.size() >= 2 && w.size() <= common::naive_lip(&c8));

    let c4 = Graph::cycle(4);
    let w = extract_outerplanar(&c4).unwrap();
    assert!(verify_path_witness(&c4, &w).is_ok() && w.size() >= 2);
}

#[test]
fn single_block_bracelet_delegates() {
    let g = gen_outerplanar_doubling(3).unwrap().graph;
    let b = Bracelet::recognize(&g).unwrap();
    assert_eq!(b.blocks.len(), 1);
    assert_eq!(extract_bracelet(&b).unwrap(), extract_outerplanar(&g).unwrap());
}

#[test]
fn chain_of_twenty_triangles() {
    let tri = Graph::complete(3);
    let parts: Vec<(&Graph, &[usize])> = (0..20).map(|_| (&tri, &[0usize, 1, 2][..])).collect();
    let (g, _) = glue_chain(&parts);
    let b = Bracelet::recognize(&g).unwrap();
    assert_eq!((b.blocks.len(), b.cuts.len()), (20, 19));
    let w = extract_bracelet(&b).unwrap();
    assert!(verify_path_witness(&g, &w).is_ok());
    assert!(w.size() >= 21);
}

#[test]
fn two_doubling_blocks() {
    let d = gen_outerplanar_doubling(3).unwrap();
    let h = d.ham_path.unwrap().vertices;
    let (g, _) = glue_chain(&[(&d.graph, &h), (&d.graph, &h)]);
    let b = Bracelet::recognize(&g).unwrap();
    let w = extract_bracelet(&b).unwrap();
    assert!(verify_path_witness(&g, &w).is_ok());
    let n = g.n() as f64;
    assert!(w.size() as f64 >= 0.5 * (n.log2() - n.log2().log2()));
}

#[test]
fn bracelet_rejections() {
    // three triangles sharing one vertex: that cut vertex lies in three blocks
    let g = Graph::from_edges(
        7,
        &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
    )
    .unwrap();
    assert!(matches!(Bracelet::recognize(&g), Err(Error::NotBracelet(_))));
    let mut k4_chain = Graph::complete(4);
    let x = k4_chain.add_vertex();
    k4_chain.add_edge(3, x);
    assert!(Bracelet::recognize(&k4_chain).is_err());
}

mod common;

use std::collections::BTreeSet;

use indpath::bounds;
use indpath::extremal::{gen_ktree_universal, gen_outerplanar_doubling};
use indpath::graph::verify_path_witness;
use indpath::ktree::{build_labeled_tree, extract_induced_path_ktree, prune_to_minimal, recognize_ktree};
use indpath::{Error, Graph, PathWitness};

/// Path 0..n-1 plus vertex n adjacent to all of it.
fn fan(path_len: usize) -> Graph {
    let mut g = Graph::path(path_len);
    let hub = g.add_vertex();
    for v in 0..hub {
        g.add_edge(v, hub);
    }
    g
}

/// Independent check of a k-simplicial ordering.
fn check_ordering(g: &Graph, k: usize, order: &[usize]) {
    assert_eq!(order.iter().collect::<BTreeSet<_>>().len(), g.n());
    assert!(g.is_clique(&order[..k]));
    for i in k..order.len() {
        let earlier: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, order[i]))
            .collect();
        assert_eq!(
            earlier.len(),
            k,
            "vertex {} has {} earlier neighbours",
            order[i],
            earlier.len()
        );
        assert!(g.is_clique(&earlier));
    }
}

#[test]
fn recognition_examples() {
    let k3 = recognize_ktree(&Graph::complete(3), 3, None).unwrap();
    assert_eq!(k3.order.iter().collect::<BTreeSet<_>>(), BTreeSet::from([&0, &1, &2]));
    assert!(matches!(
        recognize_ktree(&Graph::cycle(4), 2, None),
        Err(Error::NotKTree { .. })
    ));
    let g = gen_outerplanar_doubling(2).unwrap().graph;
    let o = recognize_ktree(&g, 2, Some(&[0, 1])).unwrap();
    assert_eq!(o.basis(), &[0, 1]);
    assert_eq!(o.order.len(), 12);
    check_ordering(&g, 2, &o.order);
    assert!(recognize_ktree(&g, 2, Some(&[0, 6])).is_err() || g.has_edge(0, 6));
}

#[test]
fn every_edge_can_be_a_basis() {
    let g = gen_outerplanar_doubling(2).unwrap().graph;
    for (u, v) in g.edges() {
        let o = recognize_ktree(&g, 2, Some(&[u, v])).unwrap();
        check_ordering(&g, 2, &o.order);
    }
}

/// No vertex off the path is k-simplicial (removable while staying a k-tree).
fn assert_minimal(g: &Graph, k: usize, on_path: &[usize]) {
    for v in 0..g.n() {
        if on_path.contains(&v) {
            continue;
        }
        let nb = g.neighbors(v);
        assert!(!(nb.len() == k && g.is_clique(nb)), "vertex {v} could still be removed");
    }
}

#[test]
fn pruning_examples() {
    let g = fan(9);
    let p = PathWitness::plain((0..9).collect());
    let pr = prune_to_minimal(&g, 2, &p).unwrap();
    let h = &pr.sub.graph;
    assert!(recognize_ktree(h, 2, None).is_ok());
    assert!(verify_path_witness(h, &pr.path).is_ok());
    assert_minimal(h, 2, &pr.path.vertices);
    // the hub is not simplicial, so nothing goes
    assert_eq!(h.n(), 10);

    let d = gen_outerplanar_doubling(3).unwrap();
    let pr = prune_to_minimal(&d.graph, 2, d.ham_path.as_ref().unwrap()).unwrap();
    assert_eq!(pr.sub.graph, d.graph);

    // K_3 plus a vertex simplicial to it, path on an edge of the K_3
    let k4 = Graph::complete(4);
    let pr = prune_to_minimal(&k4, 3, &PathWitness::plain(vec![0, 1])).unwrap();
    assert_eq!(pr.sub.to_host, vec![0, 1, 2]);
    assert!(matches!(
        prune_to_minimal(&Graph::cycle(4), 2, &PathWitness::plain(vec![0, 2])),
        Err(Error::InvalidWitness(_))
    ));
}

#[test]
fn labeled_tree_examples() {
    let t = build_labeled_tree(&Graph::complete(4), 4, &[0, 1, 2, 3]).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.labels[0], vec![vec![0, 1, 2, 3]]);

    let t = build_labeled_tree(&Graph::complete(3), 2, &[0, 1]).unwrap();
    assert_eq!(t.len(), 2);
    let mut child = t.labels[1].clone();
    child.sort();
    assert_eq!(child, vec![vec![0, 2], vec![1, 2]]);

    let g = gen_outerplanar_doubling(1).unwrap().graph;
    let t = build_labeled_tree(&g, 2, &[0, 1]).unwrap();
    t.verify(&g).unwrap();
    assert_eq!(t.len(), 5);
    let mut all: Vec<Vec<usize>> = t.labels.concat();
    all.sort();
    assert_eq!(all, common::k_cliques(&g, 2));
    assert_eq!(all.len(), 9);
    assert!(t.to_debug_text().starts_with("node r parent - label {0,1}"));

    assert!(build_labeled_tree(&g, 2, &[0, 4]).is_err());
}

#[test]
fn extraction_examples() {
    let g = fan(9);
    let w = extract_induced_path_ktree(&g, 2, &PathWitness::plain((0..9).collect::<Vec<_>>())).unwrap();
    assert!(w.claims_induced && verify_path_witness(&g, &w).is_ok());
    assert!(w.size() >= 2);

    let d = gen_outerplanar_doubling(4).unwrap();
    let w = extract_induced_path_ktree(&d.graph, 2, d.ham_path.as_ref().unwrap()).unwrap();
    assert!(verify_path_witness(&d.graph, &w).is_ok());
    assert!(bounds::meets(w.size(), bounds::ktree(48, 2)));
    assert!(w.size() >= 3 && w.size() <= 10);

    let u = gen_ktree_universal(2, 3).unwrap();
    assert_eq!(u.graph.n(), 13);
    let w = extract_induced_path_ktree(&u.graph, 3, u.ham_path.as_ref().unwrap()).unwrap();
    assert!(verify_path_witness(&u.graph, &w).is_ok());
    assert!(w.size() >= 2);
    assert!(w.size() <= common::naive_lip(&u.graph));
}

#[test]
fn extraction_rejects_bad_inputs() {
    let c = Graph::cycle(6);
    assert!(extract_induced_path_ktree(&c, 2, &PathWitness::plain((0..6).collect())).is_err());
    let d = gen_outerplanar_doubling(2).unwrap().graph;
    let far = (1..d.n()).find(|&v| !d.has_edge(0, v)).unwrap();
    assert!(matches!(
        extract_induced_path_ktree(&d, 2, &PathWitness::plain(vec![0, far])),
        Err(Error::InvalidWitness(_))
    ));
}

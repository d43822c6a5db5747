mod common;

use indpath::extremal::gen_outerplanar_doubling;
use indpath::graph::io::{parse_graph, parse_path_witness, write_graph};
use indpath::graph::{block_tree, chordal_elimination, shortest_path_avoiding, tree_longest_path, verify_path_witness};
use indpath::{Error, Graph, PathWitness};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn doubling(i: usize) -> Graph {
    gen_outerplanar_doubling(i).unwrap().graph
}

#[test]
fn parse_triangle_and_reject_self_loop() {
    let g = parse_graph("p 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
    assert_eq!(g, Graph::complete(3));
    assert!(matches!(
        parse_graph("p 2 1\ne 0 0\n"),
        Err(Error::Parse { line: 2, .. })
    ));
}

#[test]
fn doubling_level_two_round_trips_with_counted_edges() {
    // each step adds one vertex and two edges per edge of the current outer cycle
    let (mut n, mut m, mut outer) = (3usize, 3usize, 3usize);
    for _ in 0..2 {
        n += outer;
        m += 2 * outer;
        outer *= 2;
    }
    let g = parse_graph(&write_graph(&doubling(2))).unwrap();
    assert_eq!((g.n(), g.m()), (n, m));
    assert_eq!((n, m), (12, 21));
}

#[test]
fn witness_checks() {
    let t = Graph::complete(3);
    let err = verify_path_witness(&t, &PathWitness::induced(vec![0, 1, 2])).unwrap_err();
    assert!(err.contains('0') && err.contains('2'), "reason names the chord: {err}");
    assert!(verify_path_witness(&t, &PathWitness::induced(vec![0, 1])).is_ok());
    assert!(verify_path_witness(&t, &PathWitness::plain(vec![0, 1, 2])).is_ok());
    assert!(verify_path_witness(&t, &PathWitness::plain(vec![0, 1, 0])).is_err());
}

#[test]
fn four_vertex_induced_path_in_level_one_is_maximum() {
    let g = doubling(1);
    // outer cycle a x b y c z with corners a b c: x b c z skips the corner a
    let c = gen_outerplanar_doubling(1).unwrap().ham_path.unwrap().vertices;
    let w = PathWitness::induced(vec![c[1], c[2], c[4], c[5]]);
    assert!(verify_path_witness(&g, &w).is_ok());
    assert!(verify_path_witness(&g, &PathWitness::induced(c[0..4].to_vec())).is_err());
    assert_eq!(common::naive_lip(&g), 4);
}

#[test]
fn shortest_paths_with_forbidden_vertices() {
    let t = Graph::complete(3);
    assert_eq!(shortest_path_avoiding(&t, 0, 2, &[1]).unwrap().vertices, vec![0, 2]);
    let c4 = Graph::cycle(4);
    let w = shortest_path_avoiding(&c4, 0, 2, &[1]).unwrap();
    assert_eq!(w.vertices, vec![0, 3, 2]);
    assert!(w.claims_induced && verify_path_witness(&c4, &w).is_ok());
    assert!(shortest_path_avoiding(&c4, 0, 2, &[1, 3]).is_none());
}

#[test]
fn block_trees() {
    let t = block_tree(&Graph::complete(3)).unwrap();
    assert_eq!((t.blocks.len(), t.cut_vertices.len()), (1, 0));
    let p = block_tree(&Graph::path(4)).unwrap();
    assert_eq!((p.blocks.len(), p.cut_vertices.clone()), (3, vec![1, 2]));
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    let b = block_tree(&bowtie).unwrap();
    assert_eq!(b.blocks.len(), 2);
    assert_eq!(b.cut_vertices, common::naive_cut_vertices(&bowtie));
    assert!(matches!(block_tree(&Graph::new(2)), Err(Error::Disconnected)));
}

#[test]
fn chordality() {
    assert!(chordal_elimination(&Graph::cycle(4)).is_none());
    for k in 1..6 {
        assert_eq!(chordal_elimination(&Graph::complete(k)).unwrap().omega, k);
    }
    let g = doubling(2);
    assert_eq!(chordal_elimination(&g).unwrap().omega, common::naive_omega(&g));
    assert_eq!(common::naive_omega(&g), 3);
}

#[test]
fn tree_diameters() {
    assert_eq!(tree_longest_path(&Graph::new(1)).unwrap().size(), 1);
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert_eq!(tree_longest_path(&star).unwrap().size(), 3);
    assert!(matches!(tree_longest_path(&Graph::cycle(3)), Err(Error::NotTree(_))));
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..5 {
        let t = common::random_tree(50, &mut rng);
        let diam = (0..50)
            .map(|s| common::distances(&t, s).into_iter().max().unwrap())
            .max()
            .unwrap();
        let w = tree_longest_path(&t).unwrap();
        assert_eq!(w.size(), diam + 1);
        assert!(verify_path_witness(&t, &w).is_ok());
    }
}

#[test]
fn path_file_round_trip() {
    let w = PathWitness::induced(vec![4, 0, 7]);
    assert_eq!(parse_path_witness(&format!("{w}\n")).unwrap(), w);
}

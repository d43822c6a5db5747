//! The exact solver against naive subset enumeration, and every extractor
//! against the exact solver.

mod common;

use indpath::extract::{self, Algorithm};
use indpath::extremal::{drop_chords, gen_outerplanar_doubling, random_ktree};
use indpath::graph::{verify_path_witness, Graph};
use indpath::oracle::{longest_induced_path_exact, longest_path_exact, SearchBudget};
use indpath::PathWitness;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn exact(g: &Graph) -> usize {
    let r = longest_induced_path_exact(g, SearchBudget::default());
    assert!(r.optimal);
    if g.n() > 0 {
        assert!(verify_path_witness(g, &r.witness).is_ok() && r.witness.claims_induced);
    }
    r.witness.size()
}

#[test]
fn spec_examples() {
    assert_eq!(
        longest_induced_path_exact(&Graph::complete(3), SearchBudget::default()).to_string(),
        "lip 2 optimal"
    );
    assert_eq!(exact(&Graph::cycle(8)), 7);
    assert_eq!(exact(&Graph::cycle(8)), common::naive_lip(&Graph::cycle(8)));
    assert_eq!(exact(&gen_outerplanar_doubling(3).unwrap().graph), 8);

    let lp = |g: &Graph| {
        let r = longest_path_exact(g, SearchBudget::default());
        assert!(r.optimal && verify_path_witness(g, &r.witness).is_ok());
        r.witness.size()
    };
    assert_eq!(lp(&Graph::complete(4)), 4);
    assert_eq!(lp(&Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()), 3);
    assert_eq!(lp(&gen_outerplanar_doubling(2).unwrap().graph), 12);
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = gen_outerplanar_doubling(5).unwrap().graph;
    let r = longest_induced_path_exact(
        &g,
        SearchBudget {
            max_nodes: 10,
            max_millis: 60_000,
        },
    );
    assert!(!r.optimal);
    assert!(verify_path_witness(&g, &r.witness).is_ok());
    assert!(r.to_string().ends_with(" budget"));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn induced_oracle_matches_enumeration(g in arb_graph(10)) {
        prop_assert_eq!(exact(&g), common::naive_lip(&g));
    }

    #[test]
    fn path_oracle_matches_enumeration(g in arb_graph(8)) {
        let r = longest_path_exact(&g, SearchBudget::default());
        prop_assert!(r.optimal);
        prop_assert_eq!(r.witness.size(), common::naive_longest_path(&g));
    }
}

/// Every applicable extractor stays at or below the exact optimum.
fn check_all(g: &Graph, p: &PathWitness) {
    let best = exact(g);
    for algo in Algorithm::ALL {
        if let Ok(x) = extract::run(algo, g, p, None) {
            assert!(verify_path_witness(g, &x.witness).is_ok());
            assert!(x.witness.size() <= best, "{algo}: {} > {best}", x.witness.size());
        }
    }
}

#[test]
fn extractors_never_exceed_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 5..=13 {
        for k in 2..=3 {
            let g = random_ktree(n, k, &mut rng);
            let p = longest_path_exact(&g, SearchBudget::default()).witness;
            check_all(&g, &p);
        }
    }
    for i in 1..=2 {
        let d = gen_outerplanar_doubling(i).unwrap();
        let ham = d.ham_path.unwrap();
        for _ in 0..5 {
            let g = drop_chords(&d.graph, &ham.vertices, &mut rng);
            check_all(&g, &ham);
        }
    }
}

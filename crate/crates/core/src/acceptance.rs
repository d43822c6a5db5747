//! The acceptance suite: eleven end-to-end checks with time limits, shared
//! by the `verify` subcommand and the acceptance test target.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::error::Result;
use crate::extract::{self, Algorithm};
use crate::extremal::{
    drop_chords, gen_chordal_tower, gen_ktree_universal, gen_outerplanar_doubling, gen_planar_substitution,
    gen_stacked_triangulation, glue_chain, random_ktree,
};
use crate::graph::{chordal_elimination, is_connected, verify_path_witness, Graph, PathWitness};
use crate::interval::{interval_pipeline, random_successor_adjacent, staircase, IntervalRep};
use crate::ktree::extract_induced_path_ktree;
use crate::oracle::{longest_induced_path_exact, longest_path_exact, SearchBudget};
use crate::outerplanar::{extract_bracelet, extract_outerplanar, triangulate_outerplanar, Bracelet};
use crate::tw2::{compose_over_blocks, extract_partial_2tree, BlockBranch, PartialTwoTree};

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
    pub limit_millis: u128,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<34} {} ({} ms, limit {} ms) {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.millis,
            self.limit_millis,
            self.detail
        )
    }
}

pub const NAMES: [&str; 11] = [
    "doubling family exactness",
    "k-tree extraction bound",
    "partial 2-tree bound",
    "outerplanar bound",
    "bracelet bound",
    "interval pipeline",
    "planar substitution exactness",
    "stacked triangulation exactness",
    "chordal tower",
    "block composition",
    "universal soundness sweep",
];

const LIMITS_SECS: [u128; 11] = [60, 30, 60, 10, 10, 120, 120, 60, 60, 10, 120];

/// Failure message builder: every check returns `Err(description)`.
type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>, ctx: impl FnOnce() -> String) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{}: {e}", ctx()))
}

fn exact_lip(g: &Graph) -> std::result::Result<usize, String> {
    let r = longest_induced_path_exact(g, SearchBudget::default());
    ensure(r.optimal, || {
        format!("oracle hit its budget on n={} (best {})", g.n(), r.witness.size())
    })?;
    Ok(r.witness.size())
}

fn ham(f: &crate::extremal::FamilyInstance) -> PathWitness {
    f.ham_path.clone().expect("family carries a Hamiltonian path")
}

fn c1_doubling() -> Check {
    let mut sizes = Vec::new();
    for i in 0..=4 {
        let f = lift(gen_outerplanar_doubling(i), || format!("i={i}"))?;
        ensure(f.graph.n() == 3 << i, || format!("i={i}: n={}", f.graph.n()))?;
        let lip = exact_lip(&f.graph)?;
        ensure(lip == 2 * (i + 1), || {
            format!("i={i}: oracle {lip}, expected {}", 2 * (i + 1))
        })?;
        sizes.push(lip);
    }
    Ok(format!("lip {sizes:?}"))
}

fn c2_ktree() -> Check {
    let mut sizes = Vec::new();
    for i in 0..=10 {
        let f = lift(gen_outerplanar_doubling(i), || format!("i={i}"))?;
        let n = f.graph.n();
        let w = lift(extract_induced_path_ktree(&f.graph, 2, &ham(&f)), || format!("i={i}"))?;
        ensure(w.is_valid_in(&f.graph), || format!("i={i}: invalid witness"))?;
        let b = bounds::ktree(n, 2);
        ensure(bounds::meets(w.size(), b) && w.size() <= 2 * (i + 1), || {
            format!("i={i}: size {} outside [{b:.3}, {}]", w.size(), 2 * (i + 1))
        })?;
        sizes.push(w.size());
    }
    Ok(format!("sizes {sizes:?}"))
}

fn c3_partial_2tree() -> Check {
    let mut checked = 0;
    let mut min_slack = f64::INFINITY;
    for seed in 0..60u64 {
        let i = 1 + (seed % 6) as usize;
        let f = lift(gen_outerplanar_doubling(i), || format!("i={i}"))?;
        let p = ham(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = drop_chords(&f.graph, &p.vertices, &mut rng);
        let w = lift(extract_partial_2tree(&g, &p), || format!("seed {seed}"))?;
        ensure(w.is_valid_in(&g), || format!("seed {seed}: invalid witness"))?;
        let b = bounds::partial_2tree(g.n());
        ensure(bounds::meets(w.size(), b), || {
            format!("seed {seed}: {} < {b:.3}", w.size())
        })?;
        min_slack = min_slack.min(w.size() as f64 - b);
        if g.n() <= 14 {
            let lip = exact_lip(&g)?;
            ensure(w.size() <= lip, || format!("seed {seed}: {} > oracle {lip}", w.size()))?;
            checked += 1;
        }
    }
    Ok(format!(
        "60 instances, {checked} oracle-checked, min slack {min_slack:.2}"
    ))
}

fn c4_outerplanar() -> Check {
    let mut sizes = Vec::new();
    for i in 1..=6 {
        let f = lift(gen_outerplanar_doubling(i), || format!("i={i}"))?;
        let n = f.graph.n();
        let tp = lift(triangulate_outerplanar(&f.graph), || format!("i={i}"))?;
        let d = &tp.weak_dual;
        ensure(d.n() == n - 2 && (0..d.n()).all(|t| d.degree(t) <= 3), || {
            format!("i={i}: weak dual shape")
        })?;
        let w = lift(extract_outerplanar(&f.graph), || format!("i={i}"))?;
        ensure(w.is_valid_in(&f.graph), || format!("i={i}: invalid witness"))?;
        let b = bounds::outerplanar(n);
        ensure(bounds::meets(w.size(), b), || format!("i={i}: {} < {b:.3}", w.size()))?;
        sizes.push(w.size());
    }
    Ok(format!("sizes {sizes:?}"))
}

fn doubling_chain(blocks: usize, i: usize) -> (Graph, Vec<usize>) {
    let f = gen_outerplanar_doubling(i).expect("small i");
    let h = ham(&f).vertices;
    let parts: Vec<(&Graph, &[usize])> = (0..blocks).map(|_| (&f.graph, h.as_slice())).collect();
    glue_chain(&parts)
}

fn c5_bracelet() -> Check {
    let mut out = Vec::new();
    for b in [2, 5, 20] {
        let (g, _) = doubling_chain(b, 3);
        let n = g.n();
        let br = lift(Bracelet::recognize(&g), || format!("b={b}"))?;
        let w = lift(extract_bracelet(&br), || format!("b={b}"))?;
        ensure(w.is_valid_in(&g), || format!("b={b}: invalid witness"))?;
        let (bound, branch) = if (b as f64) <= (n as f64).log2() {
            (bounds::bracelet_few_blocks(n), "one-block")
        } else {
            (bounds::bracelet_many_blocks(n), "chain")
        };
        ensure(bounds::meets(w.size(), bound), || {
            format!("b={b}: {} < {bound:.3}", w.size())
        })?;
        out.push(format!("b={b} {branch} {}>={bound:.2}", w.size()));
    }
    Ok(out.join(", "))
}

fn c6_interval() -> Check {
    let mut out = Vec::new();
    for n in [5, 50, 500] {
        let rep = staircase(n, 2);
        let g = rep.graph();
        let p = PathWitness::plain((0..n).collect());
        let r = lift(interval_pipeline(&g, &rep, &p), || format!("k=2 n={n}"))?;
        ensure(r.path.size() == n, || format!("k=2 n={n}: size {}", r.path.size()))?;
    }
    out.push("k=2 full paths".to_string());
    for n in [100, 1_000, 10_000] {
        let rep = staircase(n, 3);
        let g = rep.graph();
        let p = PathWitness::plain((0..n).collect());
        let r = lift(interval_pipeline(&g, &rep, &p), || format!("k=3 n={n}"))?;
        let f1_bound = ((n as f64) / 120.0).log(5.0);
        let f2_bound = (r.f1.len() as f64).sqrt();
        let f3_bound = (r.f2.len() as f64 / 3.0).sqrt();
        ensure(bounds::meets(r.f1.len(), f1_bound), || {
            format!("n={n}: f1 {} < {f1_bound:.3}", r.f1.len())
        })?;
        ensure(bounds::meets(r.f2.len(), f2_bound), || {
            format!("n={n}: f2 {} < {f2_bound:.3}", r.f2.len())
        })?;
        ensure(bounds::meets(r.f3.path.size(), f3_bound), || {
            format!("n={n}: f3 {} < {f3_bound:.3}", r.f3.path.size())
        })?;
        ensure(r.path.is_valid_in(&g), || format!("n={n}: invalid witness"))?;
        out.push(format!(
            "n={n}: f1={} f2={} f3={}",
            r.f1.len(),
            r.f2.len(),
            r.f3.path.size()
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for s in 0..100 {
        let n = rng.gen_range(4..=16);
        let rep = random_successor_adjacent(n, rng.gen_range(1..=4), &mut rng);
        let g = rep.graph();
        let p = PathWitness::plain(rep.left_ordering().order);
        let r = lift(interval_pipeline(&g, &rep, &p), || format!("random #{s}"))?;
        let lip = exact_lip(&g)?;
        ensure(r.path.size() <= lip, || {
            format!("random #{s}: {} > oracle {lip}", r.path.size())
        })?;
    }
    out.push("100 random <= oracle".to_string());
    Ok(out.join("; "))
}

fn c7_substitution() -> Check {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for (k, i) in [(4, 1), (4, 2), (5, 1)] {
        let f = lift(gen_planar_substitution(k, i), || format!("k={k} i={i}"))?;
        lift(f.check(), || format!("k={k} i={i}"))?;
        let lip = exact_lip(&f.graph)?;
        let want = 2 * i + k - 2;
        out.push(format!("(k={k},i={i},n={}) {lip}", f.graph.n()));
        if lip != want {
            bad.push(format!("k={k} i={i} n={}: oracle {lip}, predicted {want}", f.graph.n()));
        }
    }
    ensure(bad.is_empty(), || {
        format!("{}; measured {}", bad.join("; "), out.join(", "))
    })?;
    Ok(out.join(", "))
}

fn c8_stacked() -> Check {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for i in [2, 3] {
        let f = lift(gen_stacked_triangulation(i), || format!("i={i}"))?;
        lift(f.check(), || format!("i={i}"))?;
        let lip = exact_lip(&f.graph)?;
        out.push(format!("i={i} n={} lip={lip}", f.graph.n()));
        if lip != i + 1 {
            bad.push(format!("i={i} n={}: oracle {lip}, predicted {}", f.graph.n(), i + 1));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(out.join(", "))
}

fn c9_tower() -> Check {
    let mut out = Vec::new();
    for k in [1, 2] {
        let f = lift(gen_chordal_tower(2, k, 1), || format!("k={k}"))?;
        lift(f.check(), || format!("k={k}"))?;
        let omega = chordal_elimination(&f.graph).map(|e| e.omega);
        ensure(omega == Some(5), || format!("k={k}: clique number {omega:?}"))?;
        let lip = exact_lip(&f.graph)?;
        let cap = 2.0 * (6f64.log2() + k as f64 - 1.0);
        ensure(lip as f64 <= cap + 1e-9, || format!("k={k}: oracle {lip} > {cap:.3}"))?;
        out.push(format!("k={k} n={} lip={lip}<={cap:.2}", f.graph.n()));
    }
    Ok(out.join(", "))
}

fn c10_composition() -> Check {
    let mut out = Vec::new();
    for i in [2, 3] {
        for blocks in [1, 2, 3, 5, 8, 12, 20] {
            let (g, h) = doubling_chain(blocks, i);
            let p = PathWitness::plain(h);
            let n = p.size();
            let (w, branch) = lift(compose_over_blocks(&g, &p, &PartialTwoTree), || {
                format!("i={i} b={blocks}")
            })?;
            ensure(w.is_valid_in(&g), || format!("i={i} b={blocks}: invalid witness"))?;
            let bound = match branch {
                BlockBranch::SingleBlock => bounds::blocks_single_branch(n, 0.5, 1.0),
                BlockBranch::BlockChain => bounds::blocks_threshold(n, 0.5, 1.0),
            };
            ensure(bounds::meets(w.size(), bound), || {
                format!("i={i} b={blocks} {branch:?}: {} < {bound:.3}", w.size())
            })?;
            out.push(format!("{blocks}x{}:{}", 3 << i, w.size()));
        }
    }
    Ok(out.join(" "))
}

/// A sweep instance: graph, a path in it, optional interval representation.
struct SweepCase {
    label: String,
    graph: Graph,
    path: PathWitness,
    rep: Option<IntervalRep>,
}

fn sweep_case(seed: u64) -> SweepCase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = seed % 7;
    let (label, graph, rep) = match kind {
        0 => {
            let i = rng.gen_range(0..=2);
            let f = gen_outerplanar_doubling(i).unwrap();
            let g = drop_chords(&f.graph, &ham(&f).vertices, &mut rng);
            (format!("doubling i={i} thinned"), g, None)
        }
        1 => {
            let k = rng.gen_range(2..=4);
            let i = rng.gen_range(0..=1);
            let f = gen_ktree_universal(i, k).unwrap();
            (f.label(), f.graph, None)
        }
        2 => {
            let k = rng.gen_range(2..=3);
            let n = rng.gen_range(k + 1..=12);
            (format!("random {k}-tree n={n}"), random_ktree(n, k, &mut rng), None)
        }
        3 => {
            let n = rng.gen_range(3..=12);
            let mut g = random_ktree(n, 2, &mut rng);
            for (u, v) in g.clone().edges() {
                if rng.gen_bool(0.3) {
                    g.remove_edge(u, v);
                    if !is_connected(&g) {
                        g.add_edge(u, v);
                    }
                }
            }
            (format!("random partial 2-tree n={n}"), g, None)
        }
        4 => {
            let n = rng.gen_range(2..=12);
            let rep = random_successor_adjacent(n, rng.gen_range(1..=4), &mut rng);
            (format!("random intervals n={n}"), rep.graph(), Some(rep))
        }
        5 => {
            // at most 12 vertices: two hexagons or up to five triangles
            let (blocks, i) = if rng.gen_bool(0.5) {
                (2, 1)
            } else {
                (rng.gen_range(2..=5), 0)
            };
            let (g, _) = doubling_chain(blocks, i);
            let g = drop_chords(
                &g,
                &longest_path_exact(&g, SearchBudget::default()).witness.vertices,
                &mut rng,
            );
            (format!("chain of {blocks} doubling blocks i={i}"), g, None)
        }
        _ => {
            let choice = rng.gen_range(0..3);
            let f = match choice {
                0 => gen_stacked_triangulation(rng.gen_range(0..=2)).unwrap(),
                1 => gen_planar_substitution(rng.gen_range(3..=6), 1).unwrap(),
                _ => gen_chordal_tower(2, 1, 0).unwrap(),
            };
            (f.label(), f.graph, None)
        }
    };
    let path = longest_path_exact(&graph, SearchBudget::default()).witness;
    SweepCase {
        label: format!("#{seed} {label}"),
        graph,
        path,
        rep,
    }
}

fn c11_sweep() -> Check {
    let mut runs = 0;
    let mut skipped = 0;
    for seed in 0..500u64 {
        let case = sweep_case(seed);
        let g = &case.graph;
        ensure(g.n() <= 12, || format!("{}: n={} exceeds 12", case.label, g.n()))?;
        let lip = exact_lip(g)?;
        for algo in Algorithm::ALL {
            if algo == Algorithm::Auto {
                continue;
            }
            match extract::run(algo, g, &case.path, case.rep.as_ref()) {
                Ok(x) => {
                    verify_path_witness(g, &x.witness).map_err(|e| format!("{} {algo}: {e}", case.label))?;
                    ensure(x.witness.size() <= lip, || {
                        format!("{} {algo}: {} > oracle {lip}", case.label, x.witness.size())
                    })?;
                    ensure(x.meets_bound(), || {
                        format!("{} {algo}: {} < bound {:.3}", case.label, x.witness.size(), x.bound)
                    })?;
                    runs += 1;
                }
                // a recognizer rejecting the input is expected; a failed certificate is not
                Err(crate::Error::Certificate(e)) => return Err(format!("{} {algo}: {e}", case.label)),
                Err(_) => skipped += 1,
            }
        }
    }
    Ok(format!(
        "500 graphs, {runs} extractor runs verified, {skipped} inapplicable"
    ))
}

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => c1_doubling(),
        2 => c2_ktree(),
        3 => c3_partial_2tree(),
        4 => c4_outerplanar(),
        5 => c5_bracelet(),
        6 => c6_interval(),
        7 => c7_substitution(),
        8 => c8_stacked(),
        9 => c9_tower(),
        10 => c10_composition(),
        11 => c11_sweep(),
        _ => Err(format!("no criterion {id}")),
    };
    let millis = start.elapsed().as_millis();
    let limit_millis = LIMITS_SECS.get(id.wrapping_sub(1)).map_or(0, |s| s * 1000);
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    if passed && millis > limit_millis {
        passed = false;
        detail = format!("over time limit; {detail}");
    }
    Outcome {
        id,
        name: NAMES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        millis,
        limit_millis,
    }
}

/// All criteria in order.
pub fn run_all() -> Vec<Outcome> {
    (1..=NAMES.len()).map(run_criterion).collect()
}

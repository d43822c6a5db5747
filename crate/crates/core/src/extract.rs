//! One entry point for every extractor, with the size each one guarantees.

use std::fmt;
use std::str::FromStr;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{is_connected, is_two_connected, verify_path_witness, Graph, PathWitness};
use crate::interval::{interval_pipeline, IntervalRep};
use crate::ktree::{extract_induced_path_ktree, recognize_ktree};
use crate::outerplanar::{extract_bracelet, extract_outerplanar, outer_cycle, Bracelet};
use crate::tw2::{compose_over_blocks, extract_partial_2tree, recognize_and_complete_tw2, BlockBranch, PartialTwoTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ktree,
    Tw2,
    Tw2Connected,
    Outerplanar,
    Bracelet,
    Interval,
    Auto,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Ktree,
        Algorithm::Tw2,
        Algorithm::Tw2Connected,
        Algorithm::Outerplanar,
        Algorithm::Bracelet,
        Algorithm::Interval,
        Algorithm::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ktree => "ktree",
            Algorithm::Tw2 => "tw2",
            Algorithm::Tw2Connected => "tw2-connected",
            Algorithm::Outerplanar => "outerplanar",
            Algorithm::Bracelet => "bracelet",
            Algorithm::Interval => "interval",
            Algorithm::Auto => "auto",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown algorithm `{s}`")))
    }
}

/// A certified extractor output with the size it was guaranteed to reach.
#[derive(Clone, Debug)]
pub struct Extraction {
    /// The algorithm that actually ran (never `Auto`).
    pub algorithm: Algorithm,
    pub witness: PathWitness,
    pub bound: f64,
    /// Parameters the run settled on, e.g. `k=3` or `branch=chain`.
    pub detail: String,
}

impl Extraction {
    pub fn meets_bound(&self) -> bool {
        bounds::meets(self.witness.size(), self.bound)
    }
}

/// Smallest `k >= 2` for which `g` is a k-tree, if any.
pub fn ktree_width(g: &Graph) -> Option<usize> {
    let (n, m) = (g.n(), g.m());
    (2..=n).find(|&k| k * n >= k * (k + 1) / 2 && k * n - k * (k + 1) / 2 == m && recognize_ktree(g, k, None).is_ok())
}

fn is_outerplanar_2c(g: &Graph) -> bool {
    outer_cycle(g).is_ok()
}

/// Picks an algorithm from what the input is recognized as.
pub fn choose(g: &Graph, rep: Option<&IntervalRep>) -> Option<Algorithm> {
    if ktree_width(g).is_some() {
        return Some(Algorithm::Ktree);
    }
    if g.n() >= 3 && is_connected(g) && recognize_and_complete_tw2(g).is_ok() {
        return Some(if is_two_connected(g) {
            Algorithm::Tw2
        } else {
            Algorithm::Tw2Connected
        });
    }
    if is_outerplanar_2c(g) {
        return Some(Algorithm::Outerplanar);
    }
    rep.map(|_| Algorithm::Interval)
}

/// Runs `algo` on `g` with the path `p` (and the representation for
/// intervals); the output is re-verified before it is returned.
pub fn run(algo: Algorithm, g: &Graph, p: &PathWitness, rep: Option<&IntervalRep>) -> Result<Extraction> {
    let n = p.size();
    let (algorithm, witness, bound, detail) = match algo {
        Algorithm::Auto => {
            let chosen =
                choose(g, rep).ok_or_else(|| Error::Precondition("no extractor recognizes this graph".into()))?;
            return run(chosen, g, p, rep);
        }
        Algorithm::Ktree => {
            let k = ktree_width(g).ok_or_else(|| Error::NotKTree {
                k: 0,
                reason: "not a k-tree for any k >= 2".into(),
            })?;
            let w = extract_induced_path_ktree(g, k, p)?;
            (algo, w, bounds::ktree(n, k), format!("k={k}"))
        }
        Algorithm::Tw2 => {
            let w = extract_partial_2tree(g, p)?;
            (algo, w, bounds::partial_2tree(n), String::new())
        }
        Algorithm::Tw2Connected => {
            let (w, branch) = compose_over_blocks(g, p, &PartialTwoTree)?;
            let (bound, tag) = match branch {
                BlockBranch::SingleBlock => (bounds::blocks_single_branch(n, 0.5, 1.0), "single-block"),
                BlockBranch::BlockChain => (bounds::blocks_threshold(n, 0.5, 1.0), "chain"),
            };
            (algo, w, bound, format!("branch={tag}"))
        }
        Algorithm::Outerplanar => {
            let w = extract_outerplanar(g)?;
            (algo, w, bounds::outerplanar(g.n()), String::new())
        }
        Algorithm::Bracelet => {
            let b = Bracelet::recognize(g)?;
            let w = extract_bracelet(&b)?;
            let nb = b.blocks.len();
            let few = (nb as f64) <= (g.n() as f64).log2();
            let bound = if few {
                bounds::bracelet_few_blocks(g.n())
            } else {
                bounds::bracelet_many_blocks(g.n())
            };
            (algo, w, bound, format!("blocks={nb}"))
        }
        Algorithm::Interval => {
            let rep = rep.ok_or_else(|| Error::Precondition("interval extraction needs a representation".into()))?;
            let run = interval_pipeline(g, rep, p)?;
            let raw = bounds::interval_pipeline(n, run.k);
            let bound = if n >= 2 { raw.max(2.0) } else { raw };
            let detail = format!("k={} f1={} f2={}", run.k, run.f1.len(), run.f2.len());
            (algo, run.path, bound, detail)
        }
    };
    verify_path_witness(g, &witness).map_err(Error::Certificate)?;
    // tiny inputs can make the formulas negative or -inf; size 0 is always met
    let bound = bound.max(0.0);
    Ok(Extraction {
        algorithm,
        witness,
        bound,
        detail,
    })
}

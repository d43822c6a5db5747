//! Named instance sources and declarative benchmark suites: each suite
//! entry expands to concrete instances, each instance is run through the
//! requested extractors (and optionally the oracle), one CSV row per run.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extract::{self, Algorithm};
use crate::extremal::{self, FamilyInstance};
use crate::graph::{Graph, PathWitness};
use crate::interval::{random_successor_adjacent, staircase, IntervalRep};
use crate::oracle::{longest_induced_path_exact, longest_path_exact, SearchBudget};

/// A graph to run on, with its Hamiltonian path and interval
/// representation when known.
#[derive(Clone, Debug)]
pub struct Instance {
    pub source: String,
    pub params: BTreeMap<String, usize>,
    pub graph: Graph,
    pub path: Option<PathWitness>,
    pub rep: Option<IntervalRep>,
    /// Metadata line for generated families.
    pub sidecar: Option<String>,
}

impl Instance {
    /// `k=v` pairs joined by `;`, in key order.
    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    fn from_family(f: FamilyInstance) -> Self {
        Instance {
            source: f.family.name().to_string(),
            params: f.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            sidecar: Some(f.sidecar_json()),
            graph: f.graph,
            path: f.ham_path,
            rep: None,
        }
    }

    fn from_rep(source: &str, params: BTreeMap<String, usize>, rep: IntervalRep) -> Self {
        let n = rep.len();
        Instance {
            source: source.to_string(),
            params,
            graph: rep.graph(),
            path: Some(PathWitness::plain((0..n).collect())),
            rep: Some(rep),
            sidecar: None,
        }
    }
}

/// Source names accepted by [`build_instance`], with their parameters.
pub const SOURCES: [(&str, &str); 8] = [
    ("outerplanar_doubling", "i"),
    ("ktree_universal", "i k"),
    ("stacked_triangulation", "i"),
    ("planar_substitution", "k i"),
    ("chordal_tower", "t k i(seed graph, default 1)"),
    ("doubling_chain", "blocks i"),
    ("staircase", "n k"),
    ("random_interval", "n reach (uses the seed)"),
];

fn canonical(name: &str) -> Option<&'static str> {
    let full = match name {
        "doubling" => "outerplanar_doubling",
        "universal" => "ktree_universal",
        "stacked" => "stacked_triangulation",
        "substitution" => "planar_substitution",
        "tower" => "chordal_tower",
        "chain" => "doubling_chain",
        other => other,
    };
    SOURCES.iter().map(|(s, _)| *s).find(|s| *s == full)
}

/// Builds the named instance. Missing parameters and unknown names are
/// reported as `Precondition` errors.
pub fn build_instance(name: &str, params: &BTreeMap<String, usize>, seed: u64) -> Result<Instance> {
    let source = canonical(name).ok_or_else(|| {
        let known: Vec<&str> = SOURCES.iter().map(|(s, _)| *s).collect();
        Error::Precondition(format!("unknown family `{name}` (known: {})", known.join(", ")))
    })?;
    let get = |key: &str| {
        params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{source} needs parameter `{key}`")))
    };
    let inst = match source {
        "outerplanar_doubling" => Instance::from_family(extremal::gen_outerplanar_doubling(get("i")?)?),
        "ktree_universal" => Instance::from_family(extremal::gen_ktree_universal(get("i")?, get("k")?)?),
        "stacked_triangulation" => Instance::from_family(extremal::gen_stacked_triangulation(get("i")?)?),
        "planar_substitution" => Instance::from_family(extremal::gen_planar_substitution(get("k")?, get("i")?)?),
        "chordal_tower" => {
            let i = params.get("i").copied().unwrap_or(1);
            Instance::from_family(extremal::gen_chordal_tower(get("t")?, get("k")?, i)?)
        }
        "doubling_chain" => {
            let (blocks, i) = (get("blocks")?, get("i")?);
            if blocks == 0 {
                return Err(Error::Precondition("doubling_chain needs blocks >= 1".into()));
            }
            let f = extremal::gen_outerplanar_doubling(i)?;
            if blocks.saturating_mul(f.graph.n()) > extremal::MAX_VERTICES {
                return Err(Error::TooLarge(format!("{blocks} blocks of {} vertices", f.graph.n())));
            }
            let h = f
                .ham_path
                .as_ref()
                .expect("doubling graphs are Hamiltonian")
                .vertices
                .clone();
            let parts: Vec<(&Graph, &[usize])> = (0..blocks).map(|_| (&f.graph, h.as_slice())).collect();
            let (graph, path) = extremal::glue_chain(&parts);
            Instance {
                source: source.to_string(),
                params: BTreeMap::from([("blocks".to_string(), blocks), ("i".to_string(), i)]),
                graph,
                path: Some(PathWitness::plain(path)),
                rep: None,
                sidecar: None,
            }
        }
        "staircase" => {
            let (n, k) = (get("n")?, get("k")?);
            if k == 0 || n > extremal::MAX_VERTICES {
                return Err(Error::Precondition("staircase needs k >= 1 and n <= 10^6".into()));
            }
            let p = BTreeMap::from([("k".to_string(), k), ("n".to_string(), n)]);
            Instance::from_rep(source, p, staircase(n, k))
        }
        "random_interval" => {
            let (n, reach) = (get("n")?, get("reach")?);
            if !(2..=extremal::MAX_VERTICES).contains(&n) {
                return Err(Error::Precondition("random_interval needs 2 <= n <= 10^6".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rep = random_successor_adjacent(n, reach, &mut rng);
            let p = BTreeMap::from([("n".to_string(), n), ("reach".to_string(), reach)]);
            Instance::from_rep(source, p, rep)
        }
        _ => unreachable!("canonical names are exhaustive"),
    };
    Ok(inst)
}

/// A parameter given as a single value or an inclusive `[lo, hi]` range.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    One(usize),
    Range([usize; 2]),
}

fn default_algorithms() -> Vec<String> {
    vec!["auto".into()]
}

/// One suite entry as written in the suite file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteEntry {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, ParamValue>,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<String>,
    /// Also run the exact oracle on every instance of this entry.
    #[serde(default)]
    pub oracle: bool,
    /// Delete random chords that are not on the Hamiltonian path.
    #[serde(default)]
    pub drop_chords: bool,
}

/// Parses a suite file: a JSON array of entries.
pub fn parse_suite(text: &str) -> Result<Vec<SuiteEntry>> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

/// One output row; the field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub extracted_size: Option<usize>,
    pub bound_value: Option<f64>,
    pub oracle_size: Option<usize>,
    pub oracle_optimal: Option<bool>,
    pub millis: u64,
}

/// A row together with what went wrong, if anything.
#[derive(Clone, Debug)]
pub struct BenchOutcome {
    pub row: BenchRow,
    /// The extractor declined the input (its preconditions do not hold).
    pub skipped: Option<String>,
    /// An invariant broke: bound missed, oracle exceeded, or certificate failure.
    pub failure: Option<String>,
}

struct Task {
    entry: usize,
    family: String,
    params: BTreeMap<String, usize>,
    drop_chords: bool,
    oracle: bool,
    algorithms: Vec<Algorithm>,
}

fn expand(entries: &[SuiteEntry]) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for (idx, e) in entries.iter().enumerate() {
        let algorithms = e
            .algorithms
            .iter()
            .map(|a| a.parse::<Algorithm>())
            .collect::<Result<Vec<_>>>()?;
        let mut combos = vec![BTreeMap::new()];
        for (key, value) in &e.params {
            let (lo, hi) = match *value {
                ParamValue::One(x) => (x, x),
                ParamValue::Range([lo, hi]) => (lo, hi),
            };
            if lo > hi {
                return Err(Error::Precondition(format!("entry {idx}: empty range for `{key}`")));
            }
            combos = combos
                .into_iter()
                .flat_map(|c: BTreeMap<String, usize>| {
                    (lo..=hi).map(move |x| {
                        let mut c = c.clone();
                        c.insert(key.clone(), x);
                        c
                    })
                })
                .collect();
        }
        for params in combos {
            tasks.push(Task {
                entry: idx,
                family: e.family.clone(),
                params,
                drop_chords: e.drop_chords,
                oracle: e.oracle,
                algorithms: algorithms.clone(),
            });
        }
    }
    Ok(tasks)
}

fn instance_seed(seed: u64, task: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(task as u64)
}

/// A Hamiltonian path when one is known, else the oracle's longest path.
pub fn path_for(inst: &Instance, budget: SearchBudget) -> PathWitness {
    match &inst.path {
        Some(p) => p.clone(),
        None => longest_path_exact(&inst.graph, budget).witness,
    }
}

fn run_task(task: &Task, index: usize, seed: u64, budget: SearchBudget) -> Vec<BenchOutcome> {
    let s = instance_seed(seed, index);
    let mut inst = match build_instance(&task.family, &task.params, s) {
        Ok(i) => i,
        Err(e) => {
            let row = BenchRow {
                family: task.family.clone(),
                params: task
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(";"),
                n: 0,
                m: 0,
                algorithm: String::new(),
                extracted_size: None,
                bound_value: None,
                oracle_size: None,
                oracle_optimal: None,
                millis: 0,
            };
            return vec![BenchOutcome {
                row,
                skipped: None,
                failure: Some(format!("entry {}: {e}", task.entry)),
            }];
        }
    };
    if task.drop_chords {
        if let Some(p) = &inst.path {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            inst.graph = extremal::drop_chords(&inst.graph, &p.vertices, &mut rng);
            inst.rep = None;
        }
    }
    let oracle = task.oracle.then(|| longest_induced_path_exact(&inst.graph, budget));
    let path = path_for(&inst, budget);
    task.algorithms
        .iter()
        .map(|&algo| {
            let start = Instant::now();
            let res = extract::run(algo, &inst.graph, &path, inst.rep.as_ref());
            let millis = start.elapsed().as_millis() as u64;
            let mut row = BenchRow {
                family: inst.source.clone(),
                params: inst.params_text(),
                n: inst.graph.n(),
                m: inst.graph.m(),
                algorithm: algo.name().to_string(),
                extracted_size: None,
                bound_value: None,
                oracle_size: oracle.as_ref().map(|o| o.witness.size()),
                oracle_optimal: oracle.as_ref().map(|o| o.optimal),
                millis,
            };
            let (mut skipped, mut failure) = (None, None);
            match res {
                Ok(x) => {
                    row.algorithm = x.algorithm.name().to_string();
                    row.extracted_size = Some(x.witness.size());
                    row.bound_value = Some(x.bound);
                    if !x.meets_bound() {
                        failure = Some(format!("size {} below bound {:.4}", x.witness.size(), x.bound));
                    }
                    if let Some(o) = oracle.as_ref().filter(|o| o.optimal) {
                        if x.witness.size() > o.witness.size() {
                            failure = Some(format!("size {} exceeds oracle {}", x.witness.size(), o.witness.size()));
                        }
                    }
                }
                Err(e @ Error::Certificate(_)) => failure = Some(e.to_string()),
                Err(e) => skipped = Some(e.to_string()),
            }
            BenchOutcome { row, skipped, failure }
        })
        .collect()
}

/// Runs the suite on the current rayon pool. Rows come back in suite
/// order (entry, then parameter combination, then algorithm).
pub fn run_suite(entries: &[SuiteEntry], seed: u64, budget: SearchBudget) -> Result<Vec<BenchOutcome>> {
    let tasks = expand(entries)?;
    let per_task: Vec<Vec<BenchOutcome>> = tasks
        .par_iter()
        .enumerate()
        .map(|(i, t)| run_task(t, i, seed, budget))
        .collect();
    Ok(per_task.into_iter().flatten().collect())
}

/// Renders rows as CSV with a header line.
pub fn to_csv(rows: &[BenchRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record([
        "family",
        "params",
        "n",
        "m",
        "algorithm",
        "extracted_size",
        "bound_value",
        "oracle_size",
        "oracle_optimal",
        "millis",
    ])
    .and_then(|_| rows.iter().try_for_each(|r| w.serialize(r)))
    .map_err(|e| Error::Precondition(format!("csv: {e}")))?;
    let bytes = w.into_inner().map_err(|e| Error::Precondition(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_and_missing_params() {
        let p = BTreeMap::from([("i".to_string(), 2)]);
        let a = build_instance("doubling", &p, 0).unwrap();
        assert_eq!((a.source.as_str(), a.graph.n()), ("outerplanar_doubling", 12));
        assert!(matches!(
            build_instance("stacked", &BTreeMap::new(), 0),
            Err(Error::Precondition(_))
        ));
        assert!(build_instance("nope", &p, 0).is_err());
    }

    #[test]
    fn ranges_expand_in_order() {
        let suite = parse_suite(r#"[{"family":"doubling","params":{"i":[0,2]},"algorithms":["ktree","outerplanar"]}]"#)
            .unwrap();
        let out = run_suite(&suite, 0, SearchBudget::default()).unwrap();
        let got: Vec<(String, String)> = out
            .iter()
            .map(|o| (o.row.params.clone(), o.row.algorithm.clone()))
            .collect();
        let want = ["i=0", "i=0", "i=1", "i=1", "i=2", "i=2"]
            .iter()
            .zip(["ktree", "outerplanar"].iter().cycle())
            .map(|(p, a)| (p.to_string(), a.to_string()))
            .collect::<Vec<_>>();
        assert_eq!(got, want);
        assert!(out.iter().all(|o| o.failure.is_none() && o.skipped.is_none()));
    }

    #[test]
    fn header_only_for_empty_suite() {
        let out = run_suite(&parse_suite("[]").unwrap(), 0, SearchBudget::default()).unwrap();
        let csv = to_csv(&out.into_iter().map(|o| o.row).collect::<Vec<_>>()).unwrap();
        assert_eq!(
            csv,
            "family,params,n,m,algorithm,extracted_size,bound_value,oracle_size,oracle_optimal,millis\n"
        );
    }

    #[test]
    fn bad_suites_are_parse_errors() {
        assert!(matches!(parse_suite("{"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_suite(r#"[{"family":"x","bogus":1}]"#),
            Err(Error::Parse { .. })
        ));
    }
}

//! Exact longest induced path and longest path by branch and bound, for
//! checking constructive results on small graphs.

use std::fmt;
use std::time::{Duration, Instant};

use crate::graph::{Graph, PathWitness};

/// Caps on search effort; hitting either makes the result non-optimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 10_000_000,
            max_millis: 60_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub witness: PathWitness,
    /// The search finished, so `witness` is a longest one.
    pub optimal: bool,
    pub nodes: u64,
    pub millis: u64,
}

impl fmt::Display for OracleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.optimal { "optimal" } else { "budget" };
        write!(f, "lip {} {}", self.witness.size(), status)
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    closed_nbhd: Vec<Bits>,
    induced: bool,
    best: Vec<usize>,
    path: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    out_of_budget: bool,
    // scratch for the reachability bound
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

impl Search<'_> {
    fn new(g: &Graph, induced: bool, budget: SearchBudget) -> Search<'_> {
        let n = g.n();
        let closed_nbhd = (0..n)
            .map(|v| {
                let mut b = Bits::new(n);
                b.set(v);
                for &w in g.neighbors(v) {
                    b.set(w);
                }
                b
            })
            .collect();
        Search {
            g,
            closed_nbhd,
            induced,
            best: Vec::new(),
            path: Vec::new(),
            nodes: 0,
            budget,
            start: Instant::now(),
            out_of_budget: false,
            seen: vec![0; n],
            stamp: 0,
            queue: Vec::new(),
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > Duration::from_millis(self.budget.max_millis))
        {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    /// Vertices reachable from `head` through vertices not in `blocked`.
    fn reachable(&mut self, head: usize, blocked: &Bits) -> usize {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(head);
        self.seen[head] = stamp;
        let mut idx = 0;
        while idx < self.queue.len() {
            let x = self.queue[idx];
            idx += 1;
            for &w in self.g.neighbors(x) {
                if self.seen[w] != stamp && !blocked.get(w) {
                    self.seen[w] = stamp;
                    self.queue.push(w);
                }
            }
        }
        self.queue.len() - 1
    }

    /// `blocked` holds every vertex the path may not use next: the path
    /// itself and, for induced search, neighbours of non-head vertices.
    fn extend(&mut self, blocked: &Bits) {
        if !self.tick() {
            return;
        }
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
            if self.best.len() == self.g.n() {
                return;
            }
        }
        let head = *self.path.last().unwrap();
        if self.path.len() + self.reachable(head, blocked) <= self.best.len() {
            return;
        }
        let next: Vec<usize> = self
            .g
            .neighbors(head)
            .iter()
            .copied()
            .filter(|&w| !blocked.get(w))
            .collect();
        for w in next {
            let mut b = blocked.clone();
            if self.induced {
                b.or(&self.closed_nbhd[head]);
            }
            b.set(w);
            self.path.push(w);
            self.extend(&b);
            self.path.pop();
            if self.out_of_budget || self.best.len() == self.g.n() {
                return;
            }
        }
    }

    fn run(mut self) -> OracleResult {
        let n = self.g.n();
        let mut roots: Vec<usize> = (0..n).collect();
        roots.sort_by_key(|&v| (std::cmp::Reverse(self.g.degree(v)), v));
        for r in roots {
            let mut b = Bits::new(n);
            b.set(r);
            self.path = vec![r];
            self.extend(&b);
            if self.out_of_budget || self.best.len() == n {
                break;
            }
        }
        let witness = if self.induced {
            PathWitness::induced(self.best)
        } else {
            PathWitness::plain(self.best)
        };
        OracleResult {
            witness,
            optimal: !self.out_of_budget,
            nodes: self.nodes,
            millis: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// Longest induced path, exact when `optimal` is set.
pub fn longest_induced_path_exact(g: &Graph, budget: SearchBudget) -> OracleResult {
    Search::new(g, true, budget).run()
}

/// Longest (not necessarily induced) path, exact when `optimal` is set.
pub fn longest_path_exact(g: &Graph, budget: SearchBudget) -> OracleResult {
    Search::new(g, false, budget).run()
}

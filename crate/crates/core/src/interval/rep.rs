use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed integer intervals, one per vertex, with all endpoints distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    l: Vec<i64>,
    r: Vec<i64>,
}

/// Vertices sorted by increasing left endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftOrdering {
    pub order: Vec<usize>,
}

impl IntervalRep {
    /// Validates that every `l < r` and all 2n endpoints are distinct.
    pub fn new(intervals: &[(i64, i64)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(2 * intervals.len());
        for (v, &(l, r)) in intervals.iter().enumerate() {
            if l >= r {
                return Err(Error::InvalidIntervals(format!(
                    "vertex {v}: [{l}, {r}] is empty or a point"
                )));
            }
            for x in [l, r] {
                if !seen.insert(x) {
                    return Err(Error::InvalidIntervals(format!("endpoint {x} used twice")));
                }
            }
        }
        Ok(IntervalRep {
            l: intervals.iter().map(|p| p.0).collect(),
            r: intervals.iter().map(|p| p.1).collect(),
        })
    }

    /// Replaces endpoints by their ranks, breaking ties so that the
    /// intersection graph is unchanged: lefts before rights at equal values,
    /// then order of appearance.
    pub fn normalized(intervals: &[(i64, i64)]) -> Result<Self> {
        let mut events = Vec::with_capacity(2 * intervals.len());
        for (v, &(l, r)) in intervals.iter().enumerate() {
            if l > r {
                return Err(Error::InvalidIntervals(format!("vertex {v}: [{l}, {r}] has l > r")));
            }
            events.push((l, 0u8, v));
            events.push((r, 1u8, v));
        }
        events.sort_unstable();
        let mut out = vec![(0i64, 0i64); intervals.len()];
        for (rank, &(_, side, v)) in events.iter().enumerate() {
            if side == 0 {
                out[v].0 = rank as i64;
            } else {
                out[v].1 = rank as i64;
            }
        }
        IntervalRep::new(&out)
    }

    pub fn len(&self) -> usize {
        self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l.is_empty()
    }

    pub fn left(&self, v: usize) -> i64 {
        self.l[v]
    }

    pub fn right(&self, v: usize) -> i64 {
        self.r[v]
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        self.l[u] <= self.r[v] && self.l[v] <= self.r[u]
    }

    /// `vertices` sorted by left endpoint.
    pub fn left_sorted(&self, vertices: &[usize]) -> Vec<usize> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable_by_key(|&v| self.l[v]);
        vs
    }

    pub fn left_ordering(&self) -> LeftOrdering {
        LeftOrdering {
            order: self.left_sorted(&(0..self.len()).collect::<Vec<_>>()),
        }
    }

    /// Largest clique among `vertices`, by sweeping left endpoints.
    pub fn clique_number(&self, vertices: &[usize]) -> usize {
        let mut open: BinaryHeap<Reverse<i64>> = BinaryHeap::new();
        let mut best = 0;
        for v in self.left_sorted(vertices) {
            while open.peek().is_some_and(|&Reverse(r)| r < self.l[v]) {
                open.pop();
            }
            open.push(Reverse(self.r[v]));
            best = best.max(open.len());
        }
        best
    }

    /// Intersection graph.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        let mut active: Vec<usize> = Vec::new();
        for v in self.left_ordering().order {
            active.retain(|&u| self.r[u] >= self.l[v]);
            for &u in &active {
                g.add_edge(u, v);
            }
            active.push(v);
        }
        g
    }

    /// Checks that `g` is exactly the intersection graph.
    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.n() != self.len() {
            return Err(Error::InvalidIntervals(format!(
                "{} intervals for a graph on {} vertices",
                self.len(),
                g.n()
            )));
        }
        let h = self.graph();
        if let Some((u, v)) = h.edges().find(|&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidIntervals(format!(
                "intervals {u} and {v} meet but are not adjacent"
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(u, v)) {
            return Err(Error::InvalidIntervals(format!(
                "{u} and {v} are adjacent but their intervals are disjoint"
            )));
        }
        Ok(())
    }

    /// Serializes as `i <n>` followed by `v <id> <l> <r>` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("i {}\n", self.len());
        for v in 0..self.len() {
            out.push_str(&format!("v {v} {} {}\n", self.l[v], self.r[v]));
        }
        out
    }
}

/// Parses the interval format and builds the intersection graph.
pub fn parse_intervals(text: &str) -> Result<(Graph, IntervalRep, LeftOrdering)> {
    let mut slots: Option<Vec<Option<(i64, i64)>>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let ints = |from: usize| -> Result<Vec<i64>> {
            fields[from..]
                .iter()
                .map(|f| f.parse::<i64>().map_err(|_| err(format!("not an integer: {f}"))))
                .collect()
        };
        match fields[0] {
            "i" => {
                if slots.is_some() {
                    return Err(err("duplicate header".into()));
                }
                let nums = ints(1)?;
                if nums.len() != 1 || nums[0] < 0 {
                    return Err(err("header must be `i <n>`".into()));
                }
                slots = Some(vec![None; nums[0] as usize]);
            }
            "v" => {
                let s = slots.as_mut().ok_or_else(|| err("interval before header".into()))?;
                let nums = ints(1)?;
                if nums.len() != 3 {
                    return Err(err("interval line must be `v <id> <l> <r>`".into()));
                }
                let id = usize::try_from(nums[0])
                    .ok()
                    .filter(|&id| id < s.len())
                    .ok_or_else(|| err(format!("vertex {} out of range", nums[0])))?;
                if s[id].is_some() {
                    return Err(err(format!("vertex {id} given twice")));
                }
                s[id] = Some((nums[1], nums[2]));
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    let slots = slots.ok_or(Error::Parse {
        line: 0,
        msg: "missing `i <n>` header".into(),
    })?;
    let intervals = slots
        .iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::InvalidIntervals(format!("no interval for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let rep = IntervalRep::new(&intervals)?;
    let g = rep.graph();
    let order = rep.left_ordering();
    Ok((g, rep, order))
}

use std::collections::HashMap;

use super::rep::IntervalRep;
use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{chordal_elimination, shortest_path_avoiding, verify_path_witness, Graph, PathWitness};

fn successor_adjacent(rep: &IntervalRep, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| rep.intersects(w[0], w[1]))
}

fn below(stage: &str, size: usize, bound: f64) -> Error {
    Error::Certificate(format!("{stage}: size {size} below the guaranteed {bound:.3}"))
}

/// Successor-adjacent induced subgraph containing the last vertex, of size
/// at least `log_{k+2}(n/(k+2)!)`, from a Hamiltonian interval graph given
/// by its Hamiltonian path `path`.
pub fn stage_f1(rep: &IntervalRep, path: &[usize]) -> Result<Vec<usize>> {
    let n = path.len();
    if n == 0 {
        return Err(Error::Precondition("empty path".into()));
    }
    if !path.windows(2).all(|w| rep.intersects(w[0], w[1])) {
        return Err(Error::InvalidWitness(
            "consecutive path vertices do not intersect".into(),
        ));
    }
    let k = rep.clique_number(path);
    let mut cur: Vec<usize> = path.to_vec();
    // vertices to append, innermost level last
    let mut tail: Vec<usize> = Vec::new();
    let head = loop {
        let order = rep.left_sorted(&cur);
        let m = order.len();
        let omega = rep.clique_number(&cur);
        if omega <= 2 || m <= 3 {
            if successor_adjacent(rep, &order) {
                break order;
            }
            break vec![order[m - 1]];
        }
        let vn = order[m - 1];
        let vi = *order[..m - 1]
            .iter()
            .rev()
            .find(|&&v| rep.intersects(v, vn))
            .ok_or_else(|| Error::Certificate("last vertex has no neighbour".into()))?;
        let li = rep.left(vi);
        let in_l = |v: usize| rep.right(v) < li;
        let rk_count = cur.iter().filter(|&&v| !in_l(v) && v != vi).count();
        if (rk_count as f64) >= m as f64 / (omega + 2) as f64 {
            // consecutive runs outside L, joined through the clique K
            let stitched: Vec<usize> = cur.iter().copied().filter(|&v| !in_l(v)).collect();
            let at = stitched.iter().position(|&v| v == vi).unwrap();
            let mut a = stitched[..at].to_vec();
            let mut b = stitched[at + 1..].to_vec();
            cur = join_pieces(rep, &mut a, &mut b, vn);
        } else {
            let mut runs: Vec<(usize, usize)> = Vec::new();
            let mut start = None;
            for (idx, &v) in cur.iter().enumerate() {
                match (in_l(v), start) {
                    (true, None) => start = Some(idx),
                    (false, Some(s)) => {
                        runs.push((s, idx));
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some(s) = start {
                runs.push((s, cur.len()));
            }
            let &(s, e) = runs
                .iter()
                .max_by_key(|&&(s, e)| (e - s, std::cmp::Reverse(s)))
                .ok_or_else(|| Error::Certificate("no vertex left of the last neighbour".into()))?;
            let mut piece = cur[s..e].to_vec();
            // neighbour along the path of a run end, necessarily in K
            let connector = if e < cur.len() {
                cur[e]
            } else {
                piece.reverse();
                cur[s - 1]
            };
            if connector != vi {
                piece.push(connector);
            }
            piece.push(vi);
            tail.push(vn);
            cur = piece;
        }
    };
    let mut h = head;
    h.extend(tail.iter().rev());
    let last = rep.left_sorted(path)[n - 1];
    if h.last() != Some(&last) || !successor_adjacent(rep, &h) || rep.left_sorted(&h) != h {
        return Err(Error::Certificate(
            "f1 output must be successor-adjacent and end at the last vertex".into(),
        ));
    }
    let bound = bounds::interval_f1(n, k);
    if !bounds::meets(h.len(), bound) {
        return Err(below("f1", h.len(), bound));
    }
    Ok(h)
}

/// Splits a stitched path at the removed vertex and rejoins the two pieces
/// when their ends meet; otherwise keeps the piece holding `keep`.
fn join_pieces(rep: &IntervalRep, a: &mut Vec<usize>, b: &mut Vec<usize>, keep: usize) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return if a.is_empty() {
            std::mem::take(b)
        } else {
            std::mem::take(a)
        };
    }
    for _ in 0..2 {
        for _ in 0..2 {
            if rep.intersects(*a.last().unwrap(), b[0]) {
                let mut out = std::mem::take(a);
                out.append(b);
                return out;
            }
            b.reverse();
        }
        a.reverse();
    }
    if a.contains(&keep) {
        std::mem::take(a)
    } else {
        std::mem::take(b)
    }
}

/// Induced subgraph without internal simplicial vertices, keeping successor
/// adjacency, of size at least `n^{1/(k-1)}`.
pub fn stage_f2(rep: &IntervalRep, h: &[usize]) -> Result<Vec<usize>> {
    let n = h.len();
    let k = rep.clique_number(h);
    if rep.left_sorted(h) != h || !successor_adjacent(rep, h) {
        return Err(Error::Precondition(
            "f2 input must be successor-adjacent in left order".into(),
        ));
    }
    let mut cur = h.to_vec();
    loop {
        let m = cur.len();
        let omega = rep.clique_number(&cur);
        if omega <= 2 || m <= 2 {
            break;
        }
        let first = first_neighbours(rep, &cur);
        let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
        for (idx, &w) in first.iter().enumerate().skip(1) {
            classes.entry(w).or_default().push(idx);
        }
        let threshold = (m as f64).powf((omega - 2) as f64 / (omega - 1) as f64);
        let heavy = classes
            .iter()
            .max_by_key(|(&w, s)| (s.len(), std::cmp::Reverse(w)))
            .map(|(_, s)| s.clone());
        match heavy {
            Some(s) if s.len() as f64 >= threshold && s.len() < m => {
                cur = s.into_iter().map(|i| cur[i]).collect();
            }
            _ => {
                cur = prune_simplicial(rep, &cur, &first)?;
                break;
            }
        }
    }
    if !successor_adjacent(rep, &cur) {
        return Err(Error::Certificate("f2 broke successor adjacency".into()));
    }
    if let Some(v) = internal_simplicial(rep, &cur) {
        return Err(Error::Certificate(format!("f2 left internal simplicial vertex {v}")));
    }
    let bound = bounds::interval_f2(n, k);
    if !bounds::meets(cur.len(), bound) {
        return Err(below("f2", cur.len(), bound));
    }
    Ok(cur)
}

/// Index in `seq` (left-sorted) of each vertex's earliest neighbour; the
/// first vertex gets its successor, an isolated one itself.
fn first_neighbours(rep: &IntervalRep, seq: &[usize]) -> Vec<usize> {
    let mut prefix_max = Vec::with_capacity(seq.len());
    let mut best = i64::MIN;
    for &v in seq {
        best = best.max(rep.right(v));
        prefix_max.push(best);
    }
    (0..seq.len())
        .map(|i| {
            // an earlier interval meets v iff it reaches l(v)
            let j = prefix_max[..i].partition_point(|&r| r < rep.left(seq[i]));
            if j < i {
                j
            } else if i + 1 < seq.len() && rep.intersects(seq[i], seq[i + 1]) {
                i + 1
            } else {
                i
            }
        })
        .collect()
}

/// Intersection graph of `seq`, vertex `i` standing for `seq[i]`.
fn local_graph(rep: &IntervalRep, seq: &[usize]) -> Graph {
    let mut g = Graph::new(seq.len());
    for (i, nbrs) in local_adjacency(rep, seq).iter().enumerate() {
        for &j in nbrs {
            g.add_edge(i, j);
        }
    }
    g
}

/// Neighbour lists (as indices) within `seq`, by sweeping left endpoints.
fn local_adjacency(rep: &IntervalRep, seq: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); seq.len()];
    let mut active: Vec<usize> = Vec::new();
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    idx.sort_unstable_by_key(|&i| rep.left(seq[i]));
    for i in idx {
        active.retain(|&j| rep.right(seq[j]) >= rep.left(seq[i]));
        for &j in &active {
            adj[i].push(j);
            adj[j].push(i);
        }
        active.push(i);
    }
    adj
}

fn is_simplicial_among(rep: &IntervalRep, seq: &[usize], nbrs: impl Iterator<Item = usize>) -> bool {
    let mut max_l = i64::MIN;
    let mut min_r = i64::MAX;
    for j in nbrs {
        max_l = max_l.max(rep.left(seq[j]));
        min_r = min_r.min(rep.right(seq[j]));
    }
    max_l <= min_r
}

fn internal_simplicial(rep: &IntervalRep, seq: &[usize]) -> Option<usize> {
    let adj = local_adjacency(rep, seq);
    (1..seq.len().saturating_sub(1))
        .find(|&i| is_simplicial_among(rep, seq, adj[i].iter().copied()))
        .map(|i| seq[i])
}

/// Removes internal simplicial vertices to a fixed point, checking that the
/// first neighbour of every removed vertex survives.
fn prune_simplicial(rep: &IntervalRep, seq: &[usize], first: &[usize]) -> Result<Vec<usize>> {
    let m = seq.len();
    let adj = local_adjacency(rep, seq);
    let mut alive = vec![true; m];
    let mut stack: Vec<usize> = (1..m - 1).rev().collect();
    let mut removed = Vec::new();
    while let Some(i) = stack.pop() {
        if !alive[i] {
            continue;
        }
        let nbrs = adj[i].iter().copied().filter(|&j| alive[j]);
        if is_simplicial_among(rep, seq, nbrs) {
            alive[i] = false;
            removed.push(i);
            for &j in &adj[i] {
                if alive[j] && j != 0 && j != m - 1 {
                    stack.push(j);
                }
            }
        }
    }
    for &i in &removed {
        if !alive[first[i]] {
            return Err(Error::Certificate(format!(
                "first neighbour {} of removed vertex {} was removed too",
                seq[first[i]], seq[i]
            )));
        }
    }
    Ok((0..m).filter(|&i| alive[i]).map(|i| seq[i]).collect())
}

/// Stable set of inclusion-minimal intervals with connectors between
/// consecutive members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableScaffold {
    pub stable: Vec<usize>,
    /// `connectors[i]` meets both `stable[i]` and `stable[i + 1]` and covers
    /// the gap between them.
    pub connectors: Vec<usize>,
}

impl StableScaffold {
    /// Distinct vertices of the scaffold.
    pub fn vertices(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.stable.iter().chain(&self.connectors).copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }
}

/// Greedy scaffold over the vertices `h` (already in left order).
pub fn build_scaffold(rep: &IntervalRep, h: &[usize]) -> Result<StableScaffold> {
    // minimal by inclusion: no interval starting later ends earlier
    let mut minimal = vec![false; h.len()];
    let mut min_r = i64::MAX;
    for i in (0..h.len()).rev() {
        minimal[i] = rep.right(h[i]) < min_r;
        min_r = min_r.min(rep.right(h[i]));
    }
    let mut stable: Vec<usize> = Vec::new();
    for (i, &v) in h.iter().enumerate() {
        if minimal[i] && stable.last().is_none_or(|&s| rep.left(v) > rep.right(s)) {
            stable.push(v);
        }
    }
    // each interval contains a minimal one, so greedy exhaustion is maximal
    if let Some(&v) = h
        .iter()
        .find(|&&v| !stable.iter().any(|&s| s == v || rep.intersects(s, v)))
    {
        return Err(Error::Certificate(format!("vertex {v} misses the stable set")));
    }
    let mut connectors = Vec::with_capacity(stable.len().saturating_sub(1));
    let mut active: Vec<usize> = Vec::new();
    let mut next = 0;
    for pair in stable.windows(2) {
        let (gap_l, gap_r) = (rep.right(pair[0]), rep.left(pair[1]));
        while next < h.len() && rep.left(h[next]) <= gap_l {
            active.push(h[next]);
            next += 1;
        }
        active.retain(|&t| rep.right(t) >= gap_l);
        let t = active
            .iter()
            .copied()
            .filter(|&t| rep.right(t) >= gap_r)
            .min_by_key(|&t| (rep.right(t) - rep.left(t), rep.left(t)))
            .ok_or_else(|| {
                Error::Certificate(format!(
                    "no interval covers the gap between stable vertices {} and {}",
                    pair[0], pair[1]
                ))
            })?;
        connectors.push(t);
    }
    Ok(StableScaffold { stable, connectors })
}

/// Result of the stable-set stage.
#[derive(Clone, Debug)]
pub struct ZigzagRun {
    pub path: PathWitness,
    pub scaffold: StableScaffold,
    /// The zigzag had a chord and was replaced by a shortest path.
    pub shortcut: bool,
}

/// Induced path of size at least `(n/k)^{1/(k-1)}` via a stable scaffold.
pub fn stage_f3(rep: &IntervalRep, h: &[usize]) -> Result<ZigzagRun> {
    let n = h.len();
    if n == 0 {
        return Err(Error::Precondition("empty input".into()));
    }
    let k = rep.clique_number(h);
    if rep.left_sorted(h) != h || !successor_adjacent(rep, h) {
        return Err(Error::Precondition(
            "f3 input must be successor-adjacent in left order".into(),
        ));
    }
    if let Some(v) = internal_simplicial(rep, h) {
        return Err(Error::Precondition(format!("internal vertex {v} is simplicial")));
    }
    if k <= 2 {
        // successor adjacency with no triangle makes the left order a path
        let path = PathWitness::induced(h.to_vec());
        let scaffold = StableScaffold {
            stable: Vec::new(),
            connectors: Vec::new(),
        };
        return Ok(ZigzagRun {
            path,
            scaffold,
            shortcut: false,
        });
    }
    let scaffold = build_scaffold(rep, h)?;
    let mut level = scaffold.clone();
    loop {
        let u = level.vertices();
        let omega = rep.clique_number(&u);
        if omega <= 2 || level.stable.len() <= 1 {
            break;
        }
        let big_n = u.len() as f64;
        let threshold = big_n.powf((omega - 2) as f64 / (omega - 1) as f64);
        let mut heavy: Option<(usize, usize)> = None;
        for &t in &level.connectors {
            let deg = u.iter().filter(|&&x| x != t && rep.intersects(x, t)).count();
            if deg as f64 > threshold && heavy.is_none_or(|(_, d)| deg > d) {
                heavy = Some((t, deg));
            }
        }
        let Some((t, _)) = heavy else { break };
        match restrict_scaffold(rep, &level, t) {
            Some(sub) if sub.vertices().len() < u.len() => level = sub,
            _ => break,
        }
    }
    let (path, shortcut) = zigzag(rep, &level)?;
    let bound = bounds::interval_f3(n, k);
    if !bounds::meets(path.size(), bound) {
        return Err(below("f3", path.size(), bound));
    }
    Ok(ZigzagRun {
        path,
        scaffold,
        shortcut,
    })
}

/// Part of the scaffold inside the neighbourhood of `t`: the stable vertices
/// meeting `t` with their connectors, split where `t` was the only
/// connector; the largest part is kept.
fn restrict_scaffold(rep: &IntervalRep, level: &StableScaffold, t: usize) -> Option<StableScaffold> {
    let idx: Vec<usize> = (0..level.stable.len())
        .filter(|&i| rep.intersects(level.stable[i], t))
        .collect();
    let (&a, &b) = (idx.first()?, idx.last()?);
    let mut best: Option<StableScaffold> = None;
    let mut run = StableScaffold {
        stable: vec![level.stable[a]],
        connectors: Vec::new(),
    };
    for j in a..b {
        if level.connectors[j] == t {
            let done = std::mem::replace(
                &mut run,
                StableScaffold {
                    stable: Vec::new(),
                    connectors: Vec::new(),
                },
            );
            if best.as_ref().is_none_or(|x| done.vertices().len() > x.vertices().len()) {
                best = Some(done);
            }
        } else {
            run.connectors.push(level.connectors[j]);
        }
        run.stable.push(level.stable[j + 1]);
    }
    if best.as_ref().is_none_or(|x| run.vertices().len() > x.vertices().len()) {
        best = Some(run);
    }
    best
}

/// Walks from the last stable vertex back to the first, alternating
/// connectors and the earliest stable vertex each connector meets.
fn zigzag(rep: &IntervalRep, level: &StableScaffold) -> Result<(PathWitness, bool)> {
    let s = &level.stable;
    let q = s.len();
    let mut walk = vec![s[q - 1]];
    let mut i = q - 1;
    while i > 0 {
        let t = level.connectors[i - 1];
        walk.push(t);
        let j = (0..i).find(|&j| rep.intersects(s[j], t)).unwrap();
        walk.push(s[j]);
        i = j;
    }
    let mut vs = walk.clone();
    vs.sort_unstable();
    vs.dedup();
    let g = local_graph(rep, &vs);
    let local = |v: usize| vs.binary_search(&v).unwrap();
    let w = PathWitness::induced(walk.iter().map(|&v| local(v)).collect());
    if vs.len() == walk.len() && verify_path_witness(&g, &w).is_ok() {
        return Ok((PathWitness::induced(walk), false));
    }
    let p = shortest_path_avoiding(&g, local(walk[0]), local(*walk.last().unwrap()), &[])
        .ok_or_else(|| Error::Certificate("zigzag vertices are disconnected".into()))?;
    Ok((PathWitness::induced(p.vertices.iter().map(|&i| vs[i]).collect()), true))
}

/// Per-stage outputs of the interval pipeline.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub k: usize,
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
    pub f3: ZigzagRun,
    pub path: PathWitness,
}

/// Restricts to the vertices of `p`, then runs the three stages.
pub fn interval_pipeline(g: &Graph, rep: &IntervalRep, p: &PathWitness) -> Result<PipelineRun> {
    rep.check_graph(g)?;
    verify_path_witness(g, &PathWitness::plain(p.vertices.clone())).map_err(Error::InvalidWitness)?;
    let n = p.size();
    let sub = g.induced(&p.vertices);
    let k = chordal_elimination(&sub.graph)
        .ok_or_else(|| Error::Certificate("interval graph is not chordal".into()))?
        .omega;
    let f1 = stage_f1(rep, &p.vertices)?;
    let f2 = stage_f2(rep, &f1)?;
    let f3 = stage_f3(rep, &f2)?;
    let path = if f3.path.size() >= 2 || n < 2 {
        f3.path.clone()
    } else {
        PathWitness::induced(p.vertices[..2].to_vec())
    };
    verify_path_witness(g, &path).map_err(|e| Error::Certificate(format!("pipeline output: {e}")))?;
    let bound = bounds::interval_pipeline(n, k);
    if bound >= 2.0 && !bounds::meets(path.size(), bound) {
        return Err(below("pipeline", path.size(), bound));
    }
    Ok(PipelineRun { k, f1, f2, f3, path })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::staircase;

    fn run(rep: &IntervalRep) -> PipelineRun {
        let g = rep.graph();
        let p = PathWitness::plain((0..rep.len()).collect());
        interval_pipeline(&g, rep, &p).unwrap()
    }

    #[test]
    fn paths_pass_through_unchanged() {
        for n in [5, 50, 500] {
            let r = run(&staircase(n, 2));
            assert_eq!(r.path.size(), n);
        }
    }

    #[test]
    fn triangle_staircases() {
        for n in [100, 1000, 10000] {
            let r = run(&staircase(n, 3));
            assert!(r.path.size() >= 2);
            assert_eq!(r.k, 3);
        }
    }

    #[test]
    fn f2_drops_hanging_simplicial_vertex() {
        // path 0-1-2-3 with vertex 4 bridging 1 and 2 as a simplicial triangle tip
        let rep = IntervalRep::new(&[(0, 3), (2, 9), (8, 13), (12, 15), (7, 10)]).unwrap();
        let h = rep.left_sorted(&[0, 1, 2, 3, 4]);
        let out = stage_f2(&rep, &h).unwrap();
        assert!(!out.contains(&4));
        assert_eq!(out.first(), Some(&0));
        assert_eq!(out.last(), Some(&3));
    }

    #[test]
    fn f3_rejects_a_clique() {
        let rep = IntervalRep::new(&[(0, 10), (1, 11), (2, 12)]).unwrap();
        assert!(matches!(stage_f3(&rep, &[0, 1, 2]), Err(Error::Precondition(_))));
    }

    #[test]
    fn f3_on_path_is_whole_path() {
        let rep = staircase(9, 2);
        let h: Vec<usize> = (0..9).collect();
        let z = stage_f3(&rep, &h).unwrap();
        assert_eq!(z.path.vertices, h);
        assert_eq!(build_scaffold(&rep, &h).unwrap().stable, vec![0, 2, 4, 6, 8]);
    }
}

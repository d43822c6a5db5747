//! Outer cycles and fan triangulations of 2-connected outerplanar graphs,
//! induced-path extraction through the weak dual, and bracelets.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, block_tree, is_two_connected, shortest_path_avoiding, tree_longest_path, verify_path_witness, Graph,
    PathWitness,
};

fn not_op(msg: impl Into<String>) -> Error {
    Error::NotOuterplanar(msg.into())
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// The Hamiltonian cycle bounding the outer face, starting at the lowest id
/// and heading toward its smaller cycle neighbour.
pub fn outer_cycle(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    // edges standing for a stretch of the outer cycle rather than a graph edge
    let mut composite: HashSet<(usize, usize)> = HashSet::new();
    let mut alive = n;
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).rev().filter(|&v| adj[v].len() == 2).collect();
    let mut eliminated: Vec<(usize, usize, usize)> = Vec::new();
    while alive > 3 {
        let Some(v) = stack.pop() else {
            return Err(not_op(format!("{alive} vertices left and none of degree 2")));
        };
        if removed[v] || adj[v].len() != 2 {
            continue;
        }
        let mut it = adj[v].iter();
        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
        if adj[a].contains(&b) && composite.contains(&key(a, b)) {
            return Err(not_op(format!("two outer stretches join {a} and {b}")));
        }
        removed[v] = true;
        alive -= 1;
        adj[a].remove(&v);
        adj[b].remove(&v);
        composite.remove(&key(a, v));
        composite.remove(&key(b, v));
        adj[a].insert(b);
        adj[b].insert(a);
        composite.insert(key(a, b));
        eliminated.push((v, a, b));
        for x in [a, b] {
            if adj[x].len() == 2 {
                stack.push(x);
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if rest.len() != 3 || !rest.iter().all(|&v| adj[v].len() == 2) {
        return Err(not_op("reduction does not end in a triangle"));
    }
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for i in 0..3 {
        let (x, y) = (rest[i], rest[(i + 1) % 3]);
        next[x] = y;
        prev[y] = x;
    }
    for &(v, a, b) in eliminated.iter().rev() {
        let (x, y) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return Err(not_op(format!("{a} and {b} are not consecutive when restoring {v}")));
        };
        next[x] = v;
        prev[v] = x;
        next[v] = y;
        prev[y] = v;
    }
    let start = 0;
    let forward = next[start] < prev[start];
    let mut cycle = Vec::with_capacity(n);
    let mut x = start;
    for _ in 0..n {
        cycle.push(x);
        x = if forward { next[x] } else { prev[x] };
    }
    check_outer_cycle(g, &cycle)?;
    Ok(cycle)
}

/// Verifies `cycle` is Hamiltonian in `g` and the remaining edges do not cross.
pub fn check_outer_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    let n = g.n();
    if cycle.len() != n {
        return Err(not_op("cycle is not Hamiltonian"));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(not_op("cycle repeats or leaves the vertex set"));
        }
        pos[v] = i;
    }
    for i in 0..n {
        if !g.has_edge(cycle[i], cycle[(i + 1) % n]) {
            return Err(not_op(format!(
                "{} and {} are not adjacent",
                cycle[i],
                cycle[(i + 1) % n]
            )));
        }
    }
    let mut chords: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| key(pos[u], pos[v]))
        .filter(|&(i, j)| j - i != 1 && !(i == 0 && j == n - 1))
        .collect();
    chords.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut open: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in &chords {
        while open.last().is_some_and(|&(_, e)| e <= i) {
            open.pop();
        }
        if let Some(&(a, e)) = open.last() {
            if e < j {
                return Err(not_op(format!(
                    "chords {} {} and {} {} cross",
                    cycle[a], cycle[e], cycle[i], cycle[j]
                )));
            }
        }
        open.push((i, j));
    }
    Ok(())
}

/// A 2-connected outerplanar graph completed to a maximal one by fans.
#[derive(Clone, Debug)]
pub struct TriangulatedPolygon {
    pub outer_cycle: Vec<usize>,
    /// Sorted edges of the input that are not on the outer cycle.
    pub chords: Vec<(usize, usize)>,
    /// Sorted edges introduced by the triangulation.
    pub added_edges: Vec<(usize, usize)>,
    /// Inner faces of the input, each in outer-cycle order.
    pub faces: Vec<Vec<usize>>,
    pub triangles: Vec<[usize; 3]>,
    pub face_of_triangle: Vec<usize>,
    /// Tree on triangles; adjacent when they share an edge.
    pub weak_dual: Graph,
}

impl TriangulatedPolygon {
    /// Diagnostic text: `cycle v0 v1 ...` then one `chord u v` line per chord.
    pub fn to_debug_text(&self) -> String {
        let mut out = String::from("cycle");
        for v in &self.outer_cycle {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
        for (u, v) in &self.chords {
            writeln!(out, "chord {u} {v}").unwrap();
        }
        out
    }

    /// The input plus every added edge.
    pub fn completed(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        for &(u, v) in &self.added_edges {
            h.add_edge(u, v);
        }
        h
    }
}

/// Inner faces as position sequences along the outer cycle.
fn inner_faces(cycle: &[usize], g: &Graph) -> Vec<Vec<usize>> {
    let n = cycle.len();
    let mut pos = vec![0; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut higher: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut intervals = vec![(0, n - 1)];
    for (u, v) in g.edges() {
        let (i, j) = key(pos[u], pos[v]);
        if j - i > 1 && !(i == 0 && j == n - 1) {
            higher[i].push(j);
            intervals.push((i, j));
        }
    }
    for h in &mut higher {
        h.sort_unstable();
    }
    intervals.sort_unstable();
    let mut faces = Vec::with_capacity(intervals.len());
    for &(i, j) in &intervals {
        let mut face = vec![i];
        let mut x = i;
        while x != j {
            let h = &higher[x];
            let mut idx = h.partition_point(|&y| y <= j);
            if x == i && idx > 0 && h[idx - 1] == j {
                idx -= 1;
            }
            x = if idx > 0 { h[idx - 1] } else { x + 1 };
            face.push(x);
        }
        faces.push(face.into_iter().map(|p| cycle[p]).collect());
    }
    faces
}

/// Fan-triangulates each inner face from its lowest-id vertex.
pub fn triangulate_outerplanar(g: &Graph) -> Result<TriangulatedPolygon> {
    let cycle = outer_cycle(g)?;
    let n = g.n();
    let mut on_cycle: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..n {
        on_cycle.insert(key(cycle[i], cycle[(i + 1) % n]));
    }
    let chords: Vec<(usize, usize)> = g.edges().filter(|e| !on_cycle.contains(e)).collect();
    let faces = inner_faces(&cycle, g);
    let mut triangles = Vec::with_capacity(n - 2);
    let mut face_of_triangle = Vec::with_capacity(n - 2);
    let mut added_edges = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        let m = face.len();
        let apex = (0..m).min_by_key(|&t| face[t]).unwrap();
        let f: Vec<usize> = (0..m).map(|t| face[(apex + t) % m]).collect();
        for t in 1..m - 1 {
            triangles.push([f[0], f[t], f[t + 1]]);
            face_of_triangle.push(fi);
            if t >= 2 {
                added_edges.push(key(f[0], f[t]));
            }
        }
    }
    added_edges.sort_unstable();
    if triangles.len() != n - 2 {
        return Err(Error::Certificate(format!(
            "{} triangles for {n} vertices",
            triangles.len()
        )));
    }
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (t, tri) in triangles.iter().enumerate() {
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            by_edge.entry(key(tri[a], tri[b])).or_default().push(t);
        }
    }
    let mut weak_dual = Graph::new(triangles.len());
    for ts in by_edge.values() {
        match ts.as_slice() {
            [_] => {}
            [s, t] => {
                weak_dual.add_edge(*s, *t);
            }
            _ => return Err(Error::Certificate("edge shared by three triangles".into())),
        }
    }
    if weak_dual.m() + 1 != weak_dual.n() || (0..weak_dual.n()).any(|t| weak_dual.degree(t) > 3) {
        return Err(Error::Certificate("weak dual is not a tree of degree at most 3".into()));
    }
    Ok(TriangulatedPolygon {
        outer_cycle: cycle,
        chords,
        added_edges,
        faces,
        triangles,
        face_of_triangle,
        weak_dual,
    })
}

/// Induced path of size at least `log n / 2` in a 2-connected outerplanar
/// graph, read off a longest path of the weak dual.
pub fn extract_outerplanar(g: &Graph) -> Result<PathWitness> {
    let n = g.n();
    let tp = triangulate_outerplanar(g)?;
    if n == 3 {
        return Ok(PathWitness::induced(vec![0, 1]));
    }
    let dual_path = tree_longest_path(&tp.weak_dual)?;
    let mut face_path: Vec<usize> = Vec::new();
    for &t in &dual_path.vertices {
        let f = tp.face_of_triangle[t];
        if face_path.last() != Some(&f) {
            if face_path.contains(&f) {
                return Err(Error::Certificate(format!(
                    "face {:?} visited twice by the projected dual path",
                    tp.faces[f]
                )));
            }
            face_path.push(f);
        }
    }
    let weight: usize = face_path.iter().map(|&f| tp.faces[f].len() - 2).sum();
    if weight < dual_path.size() {
        return Err(Error::Certificate(format!(
            "face path weight {weight} below dual path size {}",
            dual_path.size()
        )));
    }
    let mut in_h = vec![false; n];
    for &f in &face_path {
        for &v in &tp.faces[f] {
            in_h[v] = true;
        }
    }
    let boundary: Vec<usize> = tp.outer_cycle.iter().copied().filter(|&v| in_h[v]).collect();
    let s = face_path.len();
    let w = if s == 1 {
        // a lone face is an induced cycle; dropping one vertex leaves a path
        let face = &boundary;
        if face.len() == 3 {
            vec![face[0], face[1]]
        } else {
            face[1..].to_vec()
        }
    } else {
        let shared = |a: usize, b: usize| -> Vec<usize> {
            tp.faces[a]
                .iter()
                .copied()
                .filter(|v| tp.faces[b].contains(v))
                .collect()
        };
        let e_first = shared(face_path[0], face_path[1]);
        let e_last = shared(face_path[s - 1], face_path[s - 2]);
        let xs: Vec<usize> = tp.faces[face_path[0]]
            .iter()
            .copied()
            .filter(|v| !e_first.contains(v))
            .collect();
        let ys: Vec<usize> = tp.faces[face_path[s - 1]]
            .iter()
            .copied()
            .filter(|v| !e_last.contains(v))
            .collect();
        let h = boundary.len();
        let mut pos = HashMap::new();
        for (i, &v) in boundary.iter().enumerate() {
            pos.insert(v, i);
        }
        // (arc length, start position, end position) of the best arc
        let mut best = (0, 0, 0);
        for &x in &xs {
            for &y in &ys {
                let (px, py) = (pos[&x], pos[&y]);
                let forward = (py + h - px - 1) % h;
                let backward = h - 2 - forward;
                if forward > best.0 {
                    best = (forward, (px + 1) % h, forward);
                }
                if backward > best.0 {
                    best = (backward, (py + 1) % h, backward);
                }
            }
        }
        (0..best.2).map(|t| boundary[(best.1 + t) % h]).collect()
    };
    let w = PathWitness::induced(w);
    verify_path_witness(g, &w).map_err(|e| Error::Certificate(format!("boundary arc: {e}")))?;
    let bound = bounds::outerplanar(n);
    if !bounds::meets(w.size(), bound) {
        return Err(Error::Certificate(format!(
            "size {} below the guaranteed {bound:.3}",
            w.size()
        )));
    }
    Ok(w)
}

/// A connected outerplanar graph whose blocks form a chain.
#[derive(Clone, Debug)]
pub struct Bracelet {
    pub graph: Graph,
    /// Sorted vertex sets of the blocks, in chain order.
    pub blocks: Vec<Vec<usize>>,
    /// `cuts[i]` is shared by `blocks[i]` and `blocks[i + 1]`.
    pub cuts: Vec<usize>,
}

impl Bracelet {
    /// Checks the chain structure and outerplanarity of every block.
    pub fn recognize(g: &Graph) -> Result<Self> {
        let bad = |m: String| Err(Error::NotBracelet(m));
        let bt = block_tree(g).map_err(|_| Error::NotBracelet("graph is disconnected".into()))?;
        for &c in &bt.cut_vertices {
            if bt.vertex_blocks[c].len() != 2 {
                return bad(format!("cut vertex {c} lies in {} blocks", bt.vertex_blocks[c].len()));
            }
        }
        let nb = bt.blocks.len();
        for b in 0..nb {
            if bt.cuts_of_block(b).len() > 2 {
                return bad(format!("block {:?} has more than two cut vertices", bt.blocks[b]));
            }
            if bt.blocks[b].len() >= 3 {
                let sub = g.induced(&bt.blocks[b]);
                outer_cycle(&sub.graph).map_err(|e| Error::NotBracelet(format!("block {:?}: {e}", bt.blocks[b])))?;
            }
        }
        let mut order = Vec::with_capacity(nb);
        let mut cuts = Vec::with_capacity(nb.saturating_sub(1));
        let mut cur = (0..nb).find(|&b| bt.cuts_of_block(b).len() <= 1).unwrap_or(0);
        let mut came_from = usize::MAX;
        loop {
            order.push(cur);
            let next = bt.cuts_of_block(cur).into_iter().find(|&c| c != came_from);
            let Some(c) = next else { break };
            let b = *bt.vertex_blocks[c].iter().find(|&&b| b != cur).unwrap();
            cuts.push(c);
            came_from = c;
            cur = b;
        }
        if order.len() != nb {
            return bad("blocks do not form a chain".into());
        }
        Ok(Bracelet {
            graph: g.clone(),
            blocks: order.into_iter().map(|b| bt.blocks[b].clone()).collect(),
            cuts,
        })
    }
}

/// Shortest path inside the subgraph induced by `block`, in host ids.
fn path_in_block(g: &Graph, block: &[usize], u: usize, v: usize) -> Result<Vec<usize>> {
    let sub = g.induced(block);
    let (lu, lv) = (sub.local(u).unwrap(), sub.local(v).unwrap());
    let p = shortest_path_avoiding(&sub.graph, lu, lv, &[])
        .ok_or_else(|| Error::Certificate(format!("no path {u}-{v} inside its block")))?;
    Ok(sub.lift(&p).vertices)
}

/// Vertex of `block` farthest from `from` inside the block (lowest id on ties).
fn farthest_in_block(g: &Graph, block: &[usize], from: usize) -> usize {
    let sub = g.induced(block);
    let d = bfs_distances(&sub.graph, sub.local(from).unwrap());
    let far = (0..block.len())
        .max_by_key(|&i| (d[i], std::cmp::Reverse(block[i])))
        .unwrap();
    block[far]
}

/// Chains shortest paths through consecutive blocks, from a farthest vertex
/// of the first block to a farthest vertex of the last.
pub(crate) fn chain_through_blocks(g: &Graph, blocks: &[Vec<usize>], cuts: &[usize]) -> Result<PathWitness> {
    let k = blocks.len();
    if k == 1 {
        let end = farthest_in_block(g, &blocks[0], blocks[0][0]);
        let w = PathWitness::induced(path_in_block(g, &blocks[0], blocks[0][0], end)?);
        verify_path_witness(g, &w).map_err(|e| Error::Certificate(format!("block chain: {e}")))?;
        return Ok(w);
    }
    let start = farthest_in_block(g, &blocks[0], cuts[0]);
    let end = farthest_in_block(g, &blocks[k - 1], cuts[k - 2]);
    let mut stops = vec![start];
    stops.extend_from_slice(cuts);
    stops.push(end);
    let mut path = vec![start];
    for i in 0..k {
        let seg = path_in_block(g, &blocks[i], stops[i], stops[i + 1])?;
        path.extend_from_slice(&seg[1..]);
    }
    let w = PathWitness::induced(path);
    verify_path_witness(g, &w).map_err(|e| Error::Certificate(format!("block chain: {e}")))?;
    Ok(w)
}

/// Induced path of size at least `(log n - log log n) / 2` in a bracelet.
pub fn extract_bracelet(b: &Bracelet) -> Result<PathWitness> {
    let g = &b.graph;
    let n = g.n();
    if n < 4 {
        return Err(Error::Precondition(format!("bracelet has {n} < 4 vertices")));
    }
    let k = b.blocks.len();
    let w = if (k as f64) <= (n as f64).log2() {
        let largest = (0..k)
            .max_by_key(|&i| (b.blocks[i].len(), std::cmp::Reverse(i)))
            .unwrap();
        let block = &b.blocks[largest];
        if block.len() < 4 {
            PathWitness::induced(block[..2].to_vec())
        } else {
            let sub = g.induced(block);
            sub.lift(&extract_outerplanar(&sub.graph)?)
        }
    } else {
        chain_through_blocks(g, &b.blocks, &b.cuts)?
    };
    verify_path_witness(g, &w).map_err(Error::Certificate)?;
    let bound = if (k as f64) <= (n as f64).log2() {
        bounds::bracelet_few_blocks(n)
    } else {
        bounds::bracelet_many_blocks(n)
    };
    if !bounds::meets(w.size(), bound) {
        return Err(Error::Certificate(format!(
            "size {} below the guaranteed {bound:.3}",
            w.size()
        )));
    }
    Ok(w)
}

//! k-tree recognition, the labelled clique tree of a k-tree, and extraction
//! of an induced path by sliding a k-clique along a longest path of that tree.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{tree_longest_path, verify_path_witness, Graph, PathWitness, Subgraph};

fn not_ktree(k: usize, reason: impl Into<String>) -> Error {
    Error::NotKTree {
        k,
        reason: reason.into(),
    }
}

/// Construction order of a k-tree: a basis clique followed by vertices that
/// are each k-simplicial in the prefix ending at them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialOrdering {
    pub k: usize,
    pub order: Vec<usize>,
    /// Indexed by vertex: sorted earlier neighbourhood, empty for the basis.
    pub parent_clique: Vec<Vec<usize>>,
}

impl SimplicialOrdering {
    pub fn basis(&self) -> &[usize] {
        &self.order[..self.k]
    }
}

/// Peels k-simplicial vertices outside `keep` until `stop_at` vertices remain.
/// Returns the removal order and each removed vertex's neighbourhood at the
/// time of removal.
fn peel(g: &Graph, k: usize, keep: &[bool], stop_at: usize) -> (Vec<usize>, Vec<Vec<usize>>, Vec<bool>) {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    // highest id first, so the most recently attached vertices go first
    let mut queue: Vec<usize> = (0..n).filter(|&v| !keep[v] && deg[v] == k).collect();
    let mut order = Vec::new();
    let mut cliques = Vec::new();
    let mut remaining = n;
    while remaining > stop_at {
        let Some(v) = queue.pop() else { break };
        if removed[v] || deg[v] != k {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect();
        // a degree-k vertex that is not simplicial now never becomes so
        if !g.is_clique(&nbrs) {
            continue;
        }
        removed[v] = true;
        remaining -= 1;
        for &w in &nbrs {
            deg[w] -= 1;
            if !keep[w] && deg[w] == k {
                queue.push(w);
            }
        }
        order.push(v);
        cliques.push(nbrs);
    }
    (order, cliques, removed)
}

/// Recognizes a k-tree, returning a k-simplicial ordering (with the given
/// basis when one is supplied).
pub fn recognize_ktree(g: &Graph, k: usize, basis: Option<&[usize]>) -> Result<SimplicialOrdering> {
    let n = g.n();
    if k == 0 {
        return Err(not_ktree(k, "k must be at least 1"));
    }
    if n < k {
        return Err(not_ktree(k, format!("only {n} vertices")));
    }
    let expected_m = k * n - k * (k + 1) / 2;
    if g.m() != expected_m {
        return Err(not_ktree(
            k,
            format!("has {} edges, a {k}-tree on {n} vertices has {expected_m}", g.m()),
        ));
    }
    let mut keep = vec![false; n];
    if let Some(b) = basis {
        if b.len() != k || b.iter().any(|&v| v >= n) {
            return Err(not_ktree(k, format!("basis {b:?} is not a {k}-set of vertices")));
        }
        for &v in b {
            if keep[v] {
                return Err(not_ktree(k, format!("basis {b:?} repeats a vertex")));
            }
            keep[v] = true;
        }
        if !g.is_clique(b) {
            return Err(not_ktree(k, format!("basis {b:?} is not a clique")));
        }
    }
    let (peeled, cliques, removed) = peel(g, k, &keep, k);
    if peeled.len() != n - k {
        return Err(not_ktree(
            k,
            format!(
                "stuck with {} vertices and no k-simplicial vertex to remove",
                n - peeled.len()
            ),
        ));
    }
    let rest: Vec<usize> = match basis {
        Some(b) => b.to_vec(),
        None => (0..n).filter(|&v| !removed[v]).collect(),
    };
    if !g.is_clique(&rest) {
        return Err(not_ktree(k, format!("remaining vertices {rest:?} are not a clique")));
    }
    let mut parent_clique = vec![Vec::new(); n];
    for (&v, mut c) in peeled.iter().zip(cliques) {
        c.sort_unstable();
        parent_clique[v] = c;
    }
    let mut order = rest;
    order.extend(peeled.iter().rev());
    Ok(SimplicialOrdering {
        k,
        order,
        parent_clique,
    })
}

/// A k-tree restricted to what survives pruning, with the path in local ids.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub sub: Subgraph,
    pub path: PathWitness,
}

/// Removes k-simplicial vertices off `p` until none is left.
pub fn prune_to_minimal(g: &Graph, k: usize, p: &PathWitness) -> Result<Pruned> {
    verify_path_witness(g, p).map_err(Error::InvalidWitness)?;
    recognize_ktree(g, k, None)?;
    let mut keep = vec![false; g.n()];
    for &v in &p.vertices {
        keep[v] = true;
    }
    let (_, _, removed) = peel(g, k, &keep, k);
    let alive: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let sub = g.induced(&alive);
    let path = sub.restrict(p).expect("path vertices are never removed");
    Ok(Pruned { sub, path })
}

/// Rooted tree over `V(G) \ K0` plus a synthetic root, whose labels
/// partition the k-cliques of the k-tree. Node 0 is the root.
#[derive(Clone, Debug)]
pub struct LabeledTree {
    pub k: usize,
    pub root_clique: Vec<usize>,
    /// Graph vertex of each node; `None` for the root.
    pub vertex: Vec<Option<usize>>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Sorted k-cliques per node.
    pub labels: Vec<Vec<Vec<usize>>>,
    /// For non-root nodes the neighbourhood the vertex was attached to;
    /// `K0` for the root.
    pub attach: Vec<Vec<usize>>,
    pub node_of_vertex: Vec<Option<usize>>,
}

impl LabeledTree {
    pub fn len(&self) -> usize {
        self.vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex.is_empty()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.children[node].len() + usize::from(self.parent[node].is_some())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn as_graph(&self) -> Graph {
        let mut t = Graph::new(self.len());
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                t.add_edge(p, v);
            }
        }
        t
    }

    pub fn label_contains(&self, node: usize, clique: &[usize]) -> bool {
        self.labels[node].iter().any(|c| c == clique)
    }

    /// Checks the structural properties of the tree against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fail = |m: String| Err(Error::Certificate(m));
        let k = self.k;
        if self.labels[0] != vec![self.root_clique.clone()] {
            return fail("root label is not {K0}".into());
        }
        if self.len() != g.n() - k + 1 {
            return fail(format!("{} nodes, expected {}", self.len(), g.n() - k + 1));
        }
        let mut owner: HashMap<&[usize], usize> = HashMap::new();
        for node in 0..self.len() {
            for c in &self.labels[node] {
                if c.len() != k || !g.is_clique(c) {
                    return fail(format!("node {node}: label entry {c:?} is not a k-clique"));
                }
                if owner.insert(c.as_slice(), node).is_some() {
                    return fail(format!("clique {c:?} appears in two labels"));
                }
            }
            if node == 0 {
                continue;
            }
            let x = self.vertex[node].unwrap();
            if self.labels[node].len() != k || self.labels[node].iter().any(|c| !c.contains(&x)) {
                return fail(format!("node {node}: label must be k cliques containing {x}"));
            }
            let p = self.parent[node].unwrap();
            let a = &self.attach[node];
            if !self.label_contains(p, a) || a.iter().any(|&y| !g.has_edge(x, y)) {
                return fail(format!("node {node}: not complete to a clique of its parent"));
            }
            if self.labels[node]
                .iter()
                .any(|c| c.iter().any(|&y| y != x && !a.contains(&y)))
            {
                return fail(format!("node {node}: label leaves K ∪ {{{x}}}"));
            }
        }
        let expected = 1 + (g.n() - k) * k;
        if owner.len() != expected {
            return fail(format!("{} cliques in labels, expected {expected}", owner.len()));
        }
        Ok(())
    }

    /// Diagnostic dump: one `node <id> parent <id> label {..;..}` line per node.
    pub fn to_debug_text(&self) -> String {
        let mut out = String::new();
        let name = |node: usize| match self.vertex[node] {
            Some(v) => v.to_string(),
            None => "r".to_string(),
        };
        for node in 0..self.len() {
            let parent = self.parent[node].map_or("-".to_string(), name);
            let label: Vec<String> = self.labels[node]
                .iter()
                .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .collect();
            writeln!(
                out,
                "node {} parent {} label {{{}}}",
                name(node),
                parent,
                label.join(";")
            )
            .unwrap();
        }
        out
    }
}

/// Builds `T(G)` by attaching vertices in k-simplicial order with basis `k0`.
pub fn build_labeled_tree(g: &Graph, k: usize, k0: &[usize]) -> Result<LabeledTree> {
    if k0.len() != k || !g.is_clique(k0) {
        return Err(Error::Precondition(format!("{k0:?} is not a {k}-clique")));
    }
    let ordering = recognize_ktree(g, k, Some(k0))?;
    let mut root_clique = k0.to_vec();
    root_clique.sort_unstable();
    let mut tree = LabeledTree {
        k,
        root_clique: root_clique.clone(),
        vertex: vec![None],
        parent: vec![None],
        children: vec![Vec::new()],
        labels: vec![vec![root_clique.clone()]],
        attach: vec![root_clique.clone()],
        node_of_vertex: vec![None; g.n()],
    };
    let mut owner: HashMap<Vec<usize>, usize> = HashMap::new();
    owner.insert(root_clique, 0);
    for &x in &ordering.order[k..] {
        let clique = ordering.parent_clique[x].clone();
        let u = *owner
            .get(&clique)
            .ok_or_else(|| Error::Certificate(format!("no label holds the neighbourhood {clique:?} of {x}")))?;
        let node = tree.vertex.len();
        let mut label = Vec::with_capacity(k);
        for &y in &clique {
            let mut c: Vec<usize> = clique.iter().copied().filter(|&z| z != y).collect();
            let pos = c.binary_search(&x).unwrap_err();
            c.insert(pos, x);
            if owner.insert(c.clone(), node).is_some() {
                return Err(Error::Certificate(format!("clique {c:?} labelled twice")));
            }
            label.push(c);
        }
        tree.vertex.push(Some(x));
        tree.parent.push(Some(u));
        tree.children.push(Vec::new());
        tree.children[u].push(node);
        tree.labels.push(label);
        tree.attach.push(clique);
        tree.node_of_vertex[x] = Some(node);
    }
    Ok(tree)
}

/// Outcome of sliding k heads along a path of `T(G)`.
#[derive(Clone, Debug)]
pub struct SlidingRun {
    /// The k vertex-disjoint induced paths, in local ids of `tree`'s graph.
    pub paths: Vec<Vec<usize>>,
    /// Every clique the heads occupied, in order.
    pub cliques: Vec<Vec<usize>>,
    /// Tree nodes visited (a longest path of `T(G)`).
    pub tree_path: Vec<usize>,
}

impl SlidingRun {
    /// Longest of the k paths, lowest index on ties.
    pub fn best(&self) -> &[usize] {
        let mut best = 0;
        for (j, p) in self.paths.iter().enumerate() {
            if p.len() > self.paths[best].len() {
                best = j;
            }
        }
        &self.paths[best]
    }
}

struct Slider<'a> {
    g: &'a Graph,
    heads: Vec<usize>,
    paths: Vec<Vec<usize>>,
    used: Vec<bool>,
    cliques: Vec<Vec<usize>>,
}

impl Slider<'_> {
    fn head_set(&self) -> Vec<usize> {
        let mut h = self.heads.clone();
        h.sort_unstable();
        h
    }

    /// `y` may only touch the current heads among vertices already placed.
    fn check_fresh(&self, y: usize) -> Result<()> {
        if self.used[y] {
            return Err(Error::Certificate(format!("vertex {y} placed twice")));
        }
        for &w in self.g.neighbors(y) {
            if self.used[w] && !self.heads.contains(&w) {
                return Err(Error::Certificate(format!("new vertex {y} sees placed non-head {w}")));
            }
        }
        if self.heads.iter().any(|&h| !self.g.has_edge(h, y)) {
            return Err(Error::Certificate(format!("new vertex {y} not complete to heads")));
        }
        Ok(())
    }

    /// Moves the heads onto `target`, which must differ from them in one vertex.
    fn swap_to(&mut self, target: &[usize]) -> Result<()> {
        let out: Vec<usize> = (0..self.heads.len())
            .filter(|&j| !target.contains(&self.heads[j]))
            .collect();
        let inn: Vec<usize> = target.iter().copied().filter(|v| !self.heads.contains(v)).collect();
        if out.len() != 1 || inn.len() != 1 {
            return Err(Error::Certificate(format!(
                "cliques {:?} and {target:?} do not share k-1 vertices",
                self.head_set()
            )));
        }
        let (j, y) = (out[0], inn[0]);
        self.check_fresh(y)?;
        self.used[y] = true;
        self.paths[j].push(y);
        self.heads[j] = y;
        self.cliques.push(self.head_set());
        Ok(())
    }

    fn append_to_longest(&mut self, x: usize) -> Result<()> {
        self.check_fresh(x)?;
        let mut j = 0;
        for (a, p) in self.paths.iter().enumerate() {
            if p.len() > self.paths[j].len() {
                j = a;
            }
        }
        self.used[x] = true;
        self.paths[j].push(x);
        self.heads[j] = x;
        Ok(())
    }
}

/// Runs the sliding-clique construction along `tree_path` (a path of node
/// ids in `tree`). Every step is checked; a failed check is an error.
pub fn slide_cliques(g: &Graph, tree: &LabeledTree, tree_path: &[usize]) -> Result<SlidingRun> {
    let l = tree_path.len();
    assert!(l >= 1);
    let first = tree_path[0];
    let k1 = if l >= 2 && tree.parent[tree_path[1]] == Some(first) {
        tree.attach[tree_path[1]].clone()
    } else {
        tree.labels[first][0].clone()
    };
    let mut s = Slider {
        g,
        heads: k1.clone(),
        paths: k1.iter().map(|&v| vec![v]).collect(),
        used: vec![false; g.n()],
        cliques: vec![k1.clone()],
    };
    for &v in &k1 {
        s.used[v] = true;
    }
    for i in 1..l {
        let (a, b) = (tree_path[i - 1], tree_path[i]);
        if !tree.label_contains(a, &s.head_set()) {
            return Err(Error::Certificate(format!(
                "heads {:?} not in the label of node {a}",
                s.head_set()
            )));
        }
        if tree.parent[a] == Some(b) {
            s.swap_to(&tree.attach[a])?;
        } else if tree.parent[b] == Some(a) {
            // at the topmost node the heads may sit on a sibling clique
            if s.head_set() != tree.attach[b] {
                s.swap_to(&tree.attach[b])?;
            }
            let x = tree.vertex[b].expect("child is not the root");
            if i == l - 1 {
                s.append_to_longest(x)?;
            } else {
                let c = tree_path[i + 1];
                if tree.parent[c] != Some(b) {
                    return Err(Error::Certificate("tree path turns upward twice".into()));
                }
                s.swap_to(&tree.attach[c])?;
            }
        } else {
            return Err(Error::Certificate(format!("nodes {a},{b} are not adjacent in T(G)")));
        }
    }
    for p in &s.paths {
        verify_path_witness(g, &PathWitness::induced(p.clone()))
            .map_err(|e| Error::Certificate(format!("sliding path {p:?}: {e}")))?;
    }
    Ok(SlidingRun {
        paths: s.paths,
        cliques: s.cliques,
        tree_path: tree_path.to_vec(),
    })
}

/// Everything the k-tree pipeline produced, in the pruned graph's ids.
#[derive(Clone, Debug)]
pub struct KTreeRun {
    pub pruned: Pruned,
    pub tree: LabeledTree,
    pub sliding: SlidingRun,
}

/// Prune, build `T(G)`, take its longest path and slide cliques along it.
pub fn run_ktree_pipeline(g: &Graph, k: usize, p: &PathWitness) -> Result<KTreeRun> {
    if k < 2 {
        return Err(Error::Precondition("k must be at least 2".into()));
    }
    let pruned = prune_to_minimal(g, k, p)?;
    let h = &pruned.sub.graph;
    let basis = recognize_ktree(h, k, None)?.basis().to_vec();
    let tree = build_labeled_tree(h, k, &basis)?;
    let max_deg = tree.max_degree();
    if max_deg > k * k + 1 {
        return Err(Error::Certificate(format!(
            "T(G) has a node of degree {max_deg} > k^2+1 after pruning"
        )));
    }
    let tpath = tree_longest_path(&tree.as_graph())?;
    let sliding = slide_cliques(h, &tree, &tpath.vertices)?;
    Ok(KTreeRun { pruned, tree, sliding })
}

/// Certified induced path of size at least `log(n-k-1)/(k log k)` in a
/// k-tree containing the path `p` of size n.
pub fn extract_induced_path_ktree(g: &Graph, k: usize, p: &PathWitness) -> Result<PathWitness> {
    let run = run_ktree_pipeline(g, k, p)?;
    let best = run.sliding.best();
    let local = if best.len() >= 2 {
        best.to_vec()
    } else {
        run.sliding.cliques[0][..2].to_vec()
    };
    let w = run.pruned.sub.lift(&PathWitness::induced(local));
    verify_path_witness(g, &w).map_err(Error::Certificate)?;
    let bound = bounds::ktree(p.size(), k);
    if !bounds::meets(w.size(), bound) {
        return Err(Error::Certificate(format!(
            "size {} below the guaranteed {bound:.3}",
            w.size()
        )));
    }
    Ok(w)
}

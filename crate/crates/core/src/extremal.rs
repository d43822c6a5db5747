//! Deterministic generators for the graph families that show the bounds are
//! tight or nearly so, each with its Hamiltonian path (when one is known)
//! and its predicted longest induced path.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{verify_path_witness, Graph, PathWitness};

/// Vertex-count cap for the recursive constructions.
pub const MAX_VERTICES: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    OuterplanarDoubling,
    KtreeUniversal,
    StackedTriangulation,
    PlanarSubstitution,
    ChordalTower,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::OuterplanarDoubling => "outerplanar_doubling",
            Family::KtreeUniversal => "ktree_universal",
            Family::StackedTriangulation => "stacked_triangulation",
            Family::PlanarSubstitution => "planar_substitution",
            Family::ChordalTower => "chordal_tower",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Family::OuterplanarDoubling,
            Family::KtreeUniversal,
            Family::StackedTriangulation,
            Family::PlanarSubstitution,
            Family::ChordalTower,
        ]
        .into_iter()
        .find(|f| f.name() == s)
    }
}

/// One generated graph with what is known about it.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: BTreeMap<&'static str, usize>,
    pub graph: Graph,
    pub ham_path: Option<PathWitness>,
    /// Predicted size of a longest induced path.
    pub predicted_lip: f64,
    /// Whether `predicted_lip` is claimed exact rather than an upper bound.
    pub lip_exact: bool,
    pub predicted_n: usize,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    family: &'static str,
    params: &'a BTreeMap<&'static str, usize>,
    n: usize,
    m: usize,
    predicted_lip: f64,
    has_ham: bool,
}

impl FamilyInstance {
    /// One JSON line of metadata.
    pub fn sidecar_json(&self) -> String {
        serde_json::to_string(&Sidecar {
            family: self.family.name(),
            params: &self.params,
            n: self.graph.n(),
            m: self.graph.m(),
            predicted_lip: self.predicted_lip,
            has_ham: self.ham_path.is_some(),
        })
        .expect("plain data serializes")
    }

    /// Checks the vertex count and the Hamiltonian witness.
    pub fn check(&self) -> Result<()> {
        if self.graph.n() != self.predicted_n {
            return Err(Error::Certificate(format!(
                "{} vertices, predicted {}",
                self.graph.n(),
                self.predicted_n
            )));
        }
        if let Some(h) = &self.ham_path {
            if h.size() != self.graph.n() {
                return Err(Error::Certificate("witness is not Hamiltonian".into()));
            }
            verify_path_witness(&self.graph, h).map_err(Error::Certificate)?;
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.family.name(), params.join(","))
    }
}

fn too_large(n: usize) -> Error {
    Error::TooLarge(format!(
        "construction would exceed {MAX_VERTICES} vertices (at least {n})"
    ))
}

/// The doubling construction as its outer cycle: every edge of the current
/// cycle gets a new vertex, numbered in cycle order.
fn doubling_graph(i: usize) -> (Graph, Vec<usize>) {
    let mut g = Graph::complete(3);
    let mut cycle = vec![0, 1, 2];
    for _ in 0..i {
        let mut next = Vec::with_capacity(2 * cycle.len());
        for idx in 0..cycle.len() {
            let (a, b) = (cycle[idx], cycle[(idx + 1) % cycle.len()]);
            let w = g.add_vertex();
            g.add_edge(a, w);
            g.add_edge(w, b);
            next.push(a);
            next.push(w);
        }
        cycle = next;
    }
    (g, cycle)
}

/// Triangle, then repeatedly a new vertex on every edge of the outer cycle.
pub fn gen_outerplanar_doubling(i: usize) -> Result<FamilyInstance> {
    if i > 18 {
        return Err(too_large(3 << i.min(40)));
    }
    let (graph, cycle) = doubling_graph(i);
    Ok(FamilyInstance {
        family: Family::OuterplanarDoubling,
        params: BTreeMap::from([("i", i)]),
        graph,
        ham_path: Some(PathWitness::plain(cycle)),
        predicted_lip: 2.0 * (i + 1) as f64,
        lip_exact: true,
        predicted_n: 3 << i,
    })
}

/// Doubling graph plus `k - 2` universal vertices (a Hamiltonian k-tree).
pub fn gen_ktree_universal(i: usize, k: usize) -> Result<FamilyInstance> {
    if k < 2 {
        return Err(Error::Precondition("k must be at least 2".into()));
    }
    let base = gen_outerplanar_doubling(i)?;
    let mut g = base.graph;
    let n0 = g.n();
    let mut ham: Vec<usize> = Vec::with_capacity(n0 + k - 2);
    for _ in 0..k - 2 {
        let x = g.add_vertex();
        for y in 0..x {
            g.add_edge(x, y);
        }
        ham.push(x);
    }
    ham.extend(base.ham_path.unwrap().vertices);
    let n = g.n();
    Ok(FamilyInstance {
        family: Family::KtreeUniversal,
        params: BTreeMap::from([("i", i), ("k", k)]),
        graph: g,
        ham_path: Some(PathWitness::plain(ham)),
        predicted_lip: 2.0 * (n as f64).log2(),
        lip_exact: false,
        predicted_n: n0 + k - 2,
    })
}

/// Triangle, then a new vertex inside every face created in the last step.
pub fn gen_stacked_triangulation(i: usize) -> Result<FamilyInstance> {
    let predicted_n = 3 + (3usize.checked_pow(i as u32).ok_or_else(|| too_large(usize::MAX))? - 1) / 2;
    if predicted_n > MAX_VERTICES {
        return Err(too_large(predicted_n));
    }
    let mut g = Graph::complete(3);
    let mut fresh = vec![[0, 1, 2]];
    for _ in 0..i {
        let mut next = Vec::with_capacity(3 * fresh.len());
        for &[a, b, c] in &fresh {
            let w = g.add_vertex();
            for x in [a, b, c] {
                g.add_edge(x, w);
            }
            next.extend([[a, b, w], [b, c, w], [a, c, w]]);
        }
        fresh = next;
    }
    Ok(FamilyInstance {
        family: Family::StackedTriangulation,
        params: BTreeMap::from([("i", i)]),
        graph: g,
        ham_path: None,
        predicted_lip: (i + 1) as f64,
        lip_exact: true,
        predicted_n,
    })
}

/// Replaces every edge `a b` of the Hamiltonian path `ham` of `outer` by a
/// copy of `inner`, whose first and last Hamiltonian vertices are glued to
/// `a` and `b`. Returns the graph and its Hamiltonian path.
fn substitute_along(
    outer: &Graph,
    ham: &[usize],
    inner: &Graph,
    inner_ham: &[usize],
    edges: std::ops::Range<usize>,
) -> Result<(Graph, Vec<usize>)> {
    let (iu, iv) = (inner_ham[0], *inner_ham.last().unwrap());
    let total = outer.n() + edges.len() * (inner.n() - 2);
    if total > MAX_VERTICES {
        return Err(too_large(total));
    }
    let mut g = outer.clone();
    let mut path = ham[..=edges.start].to_vec();
    for j in edges.clone() {
        let (a, b) = (ham[j], ham[j + 1]);
        let mut map = vec![usize::MAX; inner.n()];
        map[iu] = a;
        map[iv] = b;
        for &x in &inner_ham[1..inner_ham.len() - 1] {
            map[x] = g.add_vertex();
        }
        for (x, y) in inner.edges() {
            g.add_edge(map[x], map[y]);
        }
        path.extend(inner_ham[1..].iter().map(|&x| map[x]));
    }
    path.extend_from_slice(&ham[edges.end + 1..]);
    Ok((g, path))
}

/// Path `p_1..p_k` plus adjacent apexes `u`, `v`, with path edges
/// recursively replaced by copies of the previous level.
pub fn gen_planar_substitution(k: usize, i: usize) -> Result<FamilyInstance> {
    if k < 3 || i < 1 {
        return Err(Error::Precondition("need k >= 3 and i >= 1".into()));
    }
    let mut predicted_n = k + 2;
    for _ in 1..i {
        predicted_n = (k - 1)
            .checked_mul(predicted_n - 2)
            .and_then(|x| x.checked_add(k + 2))
            .filter(|&x| x <= MAX_VERTICES)
            .ok_or_else(|| too_large(predicted_n))?;
    }
    let (u, v) = (0, k + 1);
    let mut g1 = Graph::new(k + 2);
    g1.add_edge(u, v);
    for p in 1..=k {
        g1.add_edge(u, p);
        g1.add_edge(v, p);
        if p > 1 {
            g1.add_edge(p - 1, p);
        }
    }
    let ham1: Vec<usize> = (0..k + 2).collect();
    let (mut g, mut ham) = (g1.clone(), ham1.clone());
    for _ in 1..i {
        // path edges p_j p_{j+1} sit at positions 1..k-1 of u, p_1..p_k, v
        (g, ham) = substitute_along(&g1, &ham1, &g, &ham, 1..k)?;
    }
    Ok(FamilyInstance {
        family: Family::PlanarSubstitution,
        params: BTreeMap::from([("i", i), ("k", k)]),
        graph: g,
        ham_path: Some(PathWitness::plain(ham)),
        predicted_lip: (2 * i + k - 2) as f64,
        lip_exact: true,
        predicted_n,
    })
}

/// Adds two adjacent vertices complete to `g`, placing them at the ends of
/// the Hamiltonian path.
fn add_apex_pair(g: &Graph, ham: &[usize]) -> (Graph, Vec<usize>) {
    let mut h = g.clone();
    let u = h.add_vertex();
    let v = h.add_vertex();
    for x in 0..u {
        h.add_edge(u, x);
        h.add_edge(v, x);
    }
    h.add_edge(u, v);
    let mut path = vec![u];
    path.extend_from_slice(ham);
    path.push(v);
    (h, path)
}

/// Level-`t` tower of depth `k`, as graph and Hamiltonian path.
fn tower(t: usize, k: usize, seed: usize) -> Result<(Graph, Vec<usize>)> {
    let (base, base_ham) = if t == 2 {
        let d = gen_outerplanar_doubling(seed)?;
        (d.graph, d.ham_path.unwrap().vertices)
    } else {
        tower(t - 1, k, seed)?
    };
    let (g1, ham1) = add_apex_pair(&base, &base_ham);
    let (mut g, mut ham) = (g1.clone(), ham1.clone());
    for _ in 1..k {
        (g, ham) = substitute_along(&g1, &ham1, &g, &ham, 0..ham1.len() - 1)?;
    }
    Ok((g, ham))
}

/// Hamiltonian chordal graphs of clique number `2t + 1` built by repeated
/// apex pairs and substitution along the Hamiltonian path.
pub fn gen_chordal_tower(t: usize, k: usize, seed: usize) -> Result<FamilyInstance> {
    if t < 2 || k < 1 {
        return Err(Error::Precondition("need t >= 2 and k >= 1".into()));
    }
    let (g, ham) = tower(t, k, seed)?;
    let n_seed = (3usize << seed) as f64;
    let predicted_lip = if t == 2 {
        2.0 * (n_seed.log2() + k as f64 - 1.0)
    } else {
        2.0 * (k as f64 + t as f64 * n_seed.log2().powf(1.0 / t as f64))
    };
    let n = g.n();
    Ok(FamilyInstance {
        family: Family::ChordalTower,
        params: BTreeMap::from([("k", k), ("seed", seed), ("t", t)]),
        graph: g,
        ham_path: Some(PathWitness::plain(ham)),
        predicted_lip,
        lip_exact: false,
        predicted_n: n,
    })
}

/// Glues graphs into a chain: the last Hamiltonian vertex of each part is
/// identified with the first of the next. Returns graph and Hamiltonian path.
pub fn glue_chain(parts: &[(&Graph, &[usize])]) -> (Graph, Vec<usize>) {
    let mut g = Graph::new(0);
    let mut path: Vec<usize> = Vec::new();
    for &(part, ham) in parts {
        let mut map = vec![usize::MAX; part.n()];
        for (idx, &x) in ham.iter().enumerate() {
            map[x] = match path.last() {
                Some(&last) if idx == 0 => last,
                _ => g.add_vertex(),
            };
        }
        for (x, y) in part.edges() {
            g.add_edge(map[x], map[y]);
        }
        let skip = usize::from(!path.is_empty());
        path.extend(ham[skip..].iter().map(|&x| map[x]));
    }
    (g, path)
}

/// Removes each edge off the Hamiltonian path, and not closing it into a
/// cycle, with probability one half.
pub fn drop_chords<R: Rng>(g: &Graph, ham: &[usize], rng: &mut R) -> Graph {
    let n = ham.len();
    let mut keep = std::collections::HashSet::new();
    for w in ham.windows(2) {
        keep.insert((w[0].min(w[1]), w[0].max(w[1])));
    }
    if n >= 3 {
        keep.insert((ham[0].min(ham[n - 1]), ham[0].max(ham[n - 1])));
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        if !keep.contains(&(u, v)) && rng.gen_bool(0.5) {
            h.remove_edge(u, v);
        }
    }
    h
}

/// Random k-tree on `n >= k` vertices: each new vertex is joined to a
/// uniformly chosen existing k-clique.
pub fn random_ktree<R: Rng>(n: usize, k: usize, rng: &mut R) -> Graph {
    assert!(k >= 1 && n >= k);
    let mut g = Graph::complete(k);
    let mut cliques: Vec<Vec<usize>> = vec![(0..k).collect()];
    while g.n() < n {
        let c = cliques[rng.gen_range(0..cliques.len())].clone();
        let x = g.add_vertex();
        for &y in &c {
            g.add_edge(x, y);
        }
        for skip in 0..k {
            let mut d: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &y)| y)
                .collect();
            d.push(x);
            cliques.push(d);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::chordal_elimination;
    use crate::ktree::recognize_ktree;

    #[test]
    fn doubling_counts() {
        for i in 0..8 {
            let f = gen_outerplanar_doubling(i).unwrap();
            f.check().unwrap();
            assert_eq!(f.graph.m(), 2 * f.graph.n() - 3);
            recognize_ktree(&f.graph, 2, None).unwrap();
        }
        assert_eq!(gen_outerplanar_doubling(2).unwrap().predicted_lip, 6.0);
    }

    #[test]
    fn universal_vertices() {
        let a = gen_ktree_universal(1, 2).unwrap();
        assert_eq!(a.graph, gen_outerplanar_doubling(1).unwrap().graph);
        let b = gen_ktree_universal(2, 3).unwrap();
        b.check().unwrap();
        assert_eq!(b.graph.n(), 13);
        recognize_ktree(&b.graph, 3, None).unwrap();
    }

    #[test]
    fn stacked_counts() {
        assert_eq!(gen_stacked_triangulation(1).unwrap().graph, Graph::complete(4));
        for i in 0..6 {
            gen_stacked_triangulation(i).unwrap().check().unwrap();
        }
        assert_eq!(gen_stacked_triangulation(2).unwrap().graph.n(), 7);
    }

    #[test]
    fn substitution_counts() {
        for (k, i) in [(3, 1), (4, 1), (4, 2), (5, 2), (4, 3)] {
            let f = gen_planar_substitution(k, i).unwrap();
            f.check().unwrap();
        }
        assert_eq!(gen_planar_substitution(4, 1).unwrap().graph.n(), 6);
        assert!(gen_planar_substitution(10, 9).is_err());
    }

    #[test]
    fn tower_clique_numbers() {
        for (t, k, omega) in [(2, 1, 5), (2, 2, 5), (3, 1, 7)] {
            let f = gen_chordal_tower(t, k, 1).unwrap();
            f.check().unwrap();
            assert_eq!(chordal_elimination(&f.graph).unwrap().omega, omega);
        }
        assert_eq!(gen_chordal_tower(2, 1, 1).unwrap().graph.n(), 8);
    }

    #[test]
    fn chains_and_sidecar() {
        let d = gen_outerplanar_doubling(1).unwrap();
        let ham = d.ham_path.as_ref().unwrap().vertices.as_slice();
        let (g, path) = glue_chain(&[(&d.graph, ham), (&d.graph, ham)]);
        assert_eq!(g.n(), 11);
        assert!(PathWitness::plain(path).is_valid_in(&g));
        assert_eq!(
            d.sidecar_json(),
            r#"{"family":"outerplanar_doubling","params":{"i":1},"n":6,"m":9,"predicted_lip":4.0,"has_ham":true}"#
        );
    }
}

//! Independent reference computations and random inputs for the
//! integration tests. Everything here is deliberately naive.

#![allow(dead_code)]

use indpath::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

fn mask_adj(g: &Graph, v: usize) -> u64 {
    g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)
}

fn connected_mask(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

/// Largest vertex subset whose induced subgraph is a path, by trying every
/// subset. Returns the size (0 for the empty graph).
pub fn naive_lip(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24, "naive enumeration is for small graphs");
    let adj: Vec<u64> = (0..n).map(|v| mask_adj(g, v)).collect();
    let mut best = 0;
    for mask in 1u64..(1u64 << n) {
        let c = mask.count_ones() as usize;
        if c <= best {
            continue;
        }
        let mut edges2 = 0;
        let mut ok = true;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & mask).count_ones();
            if d > 2 {
                ok = false;
                break;
            }
            edges2 += d as usize;
        }
        if ok && edges2 / 2 == c - 1 && connected_mask(&adj, mask) {
            best = c;
        }
    }
    best
}

/// Longest (not necessarily induced) path size by DFS over all simple paths.
pub fn naive_longest_path(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, used: &mut Vec<bool>, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                go(g, u, used, len + 1, best);
                used[u] = false;
            }
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[s] = true;
        go(g, s, &mut used, 1, &mut best);
    }
    best
}

/// All cliques of exactly `k` vertices.
pub fn k_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..g.n() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                go(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Clique number by brute force.
pub fn naive_omega(g: &Graph) -> usize {
    (1..=g.n())
        .take_while(|&k| !k_cliques(g, k).is_empty())
        .last()
        .unwrap_or(0)
}

/// Whether some vertex subset of size >= 4 induces a cycle.
pub fn has_induced_long_cycle(g: &Graph) -> bool {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| mask_adj(g, v)).collect();
    (1u64..(1u64 << n)).any(|mask| {
        mask.count_ones() >= 4
            && (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .all(|v| (adj[v] & mask).count_ones() == 2)
            && connected_mask(&adj, mask)
    })
}

/// Whether `g` has a K_4 minor: four disjoint connected branch sets,
/// pairwise joined by an edge. Tries all 5^n labelings.
pub fn has_k4_minor(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 9);
    let adj: Vec<u64> = (0..n).map(|v| mask_adj(g, v)).collect();
    let total = 5usize.pow(n as u32);
    for code in 0..total {
        let mut sets = [0u64; 4];
        let mut c = code;
        for v in 0..n {
            let l = c % 5;
            c /= 5;
            if l < 4 {
                sets[l] |= 1 << v;
            }
        }
        // symmetry: require nonempty sets with increasing lowest vertex
        if sets.contains(&0) || !sets.windows(2).all(|w| w[0].trailing_zeros() < w[1].trailing_zeros()) {
            continue;
        }
        if !sets.iter().all(|&s| connected_mask(&adj, s)) {
            continue;
        }
        let touches = |a: u64, b: u64| (0..n).any(|v| a >> v & 1 == 1 && adj[v] & b != 0);
        if (0..4).all(|i| (i + 1..4).all(|j| touches(sets[i], sets[j]))) {
            return true;
        }
    }
    false
}

/// Articulation points by deleting each vertex and testing connectivity.
pub fn naive_cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| mask_adj(g, v)).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..n).filter(|&v| !connected_mask(&adj, all & !(1 << v))).collect()
}

/// BFS distances from `s`.
pub fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[s] = 0;
    let mut q = std::collections::VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &u in g.neighbors(v) {
            if d[u] == usize::MAX {
                d[u] = d[v] + 1;
                q.push_back(u);
            }
        }
    }
    d
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v, rng.gen_range(0..v));
    }
    g
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random triangulation of the polygon `0..n` (in cycle order), built by
/// recursive ear splitting.
pub fn random_maximal_outerplanar<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::cycle(n);
    let mut stack = vec![(0usize, n - 1)];
    while let Some((a, b)) = stack.pop() {
        if b - a < 2 {
            continue;
        }
        let c = rng.gen_range(a + 1..b);
        g.add_edge(a, c);
        g.add_edge(c, b);
        stack.push((a, c));
        stack.push((c, b));
    }
    g
}

/// Random 2-connected outerplanar graph on `0..n` with outer cycle in
/// id order: a random triangulation with some chords deleted.
pub fn random_outerplanar_2c<R: Rng>(n: usize, keep: f64, rng: &mut R) -> Graph {
    let full = random_maximal_outerplanar(n, rng);
    let mut g = Graph::cycle(n);
    for (u, v) in full.edges() {
        if rng.gen_bool(keep) {
            g.add_edge(u, v);
        }
    }
    g
}

/// Random 2-tree with a Hamiltonian path: a random triangulated polygon
/// plus a random relabeling. Returns graph and Hamiltonian path.
pub fn random_ham_2tree<R: Rng>(n: usize, rng: &mut R) -> (Graph, Vec<usize>) {
    let base = random_maximal_outerplanar(n, rng);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in base.edges() {
        g.add_edge(perm[u], perm[v]);
    }
    (g, (0..n).map(|i| perm[i]).collect())
}

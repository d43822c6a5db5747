//! Simple undirected graphs on dense vertex ids, plus the structural
//! routines every extractor leans on.

mod blocks;
mod chordal;
pub mod io;
mod traverse;
mod witness;

pub use blocks::{block_tree, BlockTree};
pub use chordal::{chordal_elimination, EliminationOrdering};
pub use traverse::{
    bfs_distances, connected_components, is_connected, is_two_connected, shortest_path_avoiding, tree_longest_path,
};
pub use witness::{verify_path_witness, PathWitness};

use crate::error::{Error, Result};

/// Undirected simple graph with vertices `0..n` and sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and ids `>= n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge #{idx} ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(Error::Precondition(format!("duplicate edge ({u},{v})")));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Inserts `uv`; returns false if it was already present. Panics on a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "self-loop");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced by `vertices`; new id `i` stands for `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    if j > i {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        Subgraph {
            graph: Graph { adj, m },
            to_host: vertices.to_vec(),
            from_host: local,
        }
    }
}

/// An induced subgraph together with its vertex correspondence to the host.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_host: Vec<usize>,
    from_host: Vec<usize>,
}

impl Subgraph {
    pub fn local(&self, host_vertex: usize) -> Option<usize> {
        self.from_host.get(host_vertex).copied().filter(|&i| i != usize::MAX)
    }

    pub fn lift(&self, w: &PathWitness) -> PathWitness {
        PathWitness {
            vertices: w.vertices.iter().map(|&v| self.to_host[v]).collect(),
            claims_induced: w.claims_induced,
        }
    }

    /// Maps a host witness into local ids; `None` if it leaves the subgraph.
    pub fn restrict(&self, w: &PathWitness) -> Option<PathWitness> {
        let vertices = w.vertices.iter().map(|&v| self.local(v)).collect::<Option<Vec<_>>>()?;
        Some(PathWitness {
            vertices,
            claims_induced: w.claims_induced,
        })
    }
}

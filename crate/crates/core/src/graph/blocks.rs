use std::collections::HashMap;

use super::{is_connected, Graph};
use crate::error::{Error, Result};

type EdgeList = Vec<(usize, usize)>;

/// Blocks (maximal 2-connected subgraphs, bridges included) and cut vertices
/// of a connected graph.
#[derive(Clone, Debug)]
pub struct BlockTree {
    /// Sorted vertex set of each block; blocks sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// For every vertex, the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
    edge_block: HashMap<(usize, usize), usize>,
}

impl BlockTree {
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_block.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// Cut vertices lying in block `b`.
    pub fn cuts_of_block(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Bipartite block/cut-vertex tree: nodes `0..B` are blocks, node
    /// `B + i` is `cut_vertices[i]`.
    pub fn tree_graph(&self) -> Graph {
        let nb = self.blocks.len();
        let mut t = Graph::new(nb + self.cut_vertices.len());
        for (i, &c) in self.cut_vertices.iter().enumerate() {
            for &b in &self.vertex_blocks[c] {
                t.add_edge(b, nb + i);
            }
        }
        t
    }
}

/// Biconnected-component decomposition (iterative Hopcroft–Tarjan).
pub fn block_tree(g: &Graph) -> Result<BlockTree> {
    let n = g.n();
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    if n == 1 {
        raw_blocks.push(Vec::new());
    } else {
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        // frames: (vertex, parent, next neighbor index)
        let mut frames: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some(&mut (v, parent, ref mut idx)) = frames.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        raw_blocks.push(block);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<(Vec<usize>, EdgeList)> = raw_blocks
        .into_iter()
        .map(|edges| {
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            if vs.is_empty() {
                vs.push(0);
            }
            vs.sort_unstable();
            vs.dedup();
            (vs, edges)
        })
        .collect();
    blocks.sort_by(|a, b| a.0.cmp(&b.0));

    let mut vertex_blocks = vec![Vec::new(); n];
    let mut edge_block = HashMap::new();
    for (i, (vs, edges)) in blocks.iter().enumerate() {
        for &v in vs {
            vertex_blocks[v].push(i);
        }
        for &(a, b) in edges {
            edge_block.insert((a.min(b), a.max(b)), i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
    Ok(BlockTree {
        blocks: blocks.into_iter().map(|(vs, _)| vs).collect(),
        cut_vertices,
        vertex_blocks,
        edge_block,
    })
}

//! Partial 2-trees: completion to a 2-tree, induced paths through a path of
//! triangles, and lifting 2-connected extractors to connected graphs.

use std::collections::BTreeSet;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{
    block_tree, is_connected, is_two_connected, shortest_path_avoiding, verify_path_witness, Graph, PathWitness,
};
use crate::ktree::{recognize_ktree, run_ktree_pipeline};
use crate::outerplanar::{chain_through_blocks, outer_cycle};

/// A 2-tree containing the input as a spanning subgraph.
#[derive(Clone, Debug)]
pub struct TwoTreeCompletion {
    pub completed: Graph,
    /// Sorted edges of `completed` absent from the input.
    pub added_edges: Vec<(usize, usize)>,
}

/// Eliminates lowest-id vertices of degree at most 2, filling their
/// neighbourhoods; fails exactly when tree-width exceeds 2.
pub fn recognize_and_complete_tw2(g: &Graph) -> Result<TwoTreeCompletion> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("need at least 3 vertices, got {n}")));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut low: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    let mut completed = g.clone();
    let mut added = Vec::new();
    let mut alive = n;
    while alive > 2 {
        let Some(&v) = low.iter().next() else {
            return Err(Error::TreewidthTooLarge(format!(
                "{alive} vertices left, all of degree at least 3"
            )));
        };
        low.remove(&v);
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        let (a, b) = match nbrs.as_slice() {
            [a, b] => (*a, *b),
            [a] => {
                // give v a second neighbour so that it becomes 2-simplicial
                let b = *adj[*a].iter().find(|&&x| x != v).expect("connected with 3+ vertices");
                completed.add_edge(v, b);
                added.push((v.min(b), v.max(b)));
                (*a, b)
            }
            _ => unreachable!("connectivity keeps degrees positive"),
        };
        if completed.add_edge(a, b) {
            added.push((a.min(b), a.max(b)));
        }
        for x in [a, b] {
            adj[x].remove(&v);
        }
        adj[a].insert(b);
        adj[b].insert(a);
        for x in [a, b] {
            if adj[x].len() <= 2 {
                low.insert(x);
            } else {
                low.remove(&x);
            }
        }
        adj[v].clear();
        alive -= 1;
    }
    added.sort_unstable();
    recognize_ktree(&completed, 2, None).map_err(|e| Error::Certificate(format!("completion is not a 2-tree: {e}")))?;
    Ok(TwoTreeCompletion {
        completed,
        added_edges: added,
    })
}

/// Returns the two `a`–`b` boundary paths of a path of triangles.
fn boundary_paths(h: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    let cycle = outer_cycle(h).map_err(|e| Error::Certificate(format!("path of triangles: {e}")))?;
    let ends: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 2).collect();
    if ends.len() != 2 || !ends.iter().all(|&v| h.is_clique(h.neighbors(v))) {
        return Err(Error::Certificate(format!(
            "path of triangles must have two simplicial ends, found {ends:?}"
        )));
    }
    let len = cycle.len();
    let ia = cycle.iter().position(|&v| v == ends[0]).unwrap();
    let ib = cycle.iter().position(|&v| v == ends[1]).unwrap();
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let steps = (to + len - from) % len;
        (0..=steps).map(|t| cycle[(from + t) % len]).collect()
    };
    let one = arc(ia, ib);
    let mut other = arc(ib, ia);
    other.reverse();
    Ok((one, other))
}

/// Induced path of size at least `log(n-3)/2` in a 2-connected partial
/// 2-tree containing the path `p` of size n.
pub fn extract_partial_2tree(g: &Graph, p: &PathWitness) -> Result<PathWitness> {
    verify_path_witness(g, &PathWitness::plain(p.vertices.clone())).map_err(Error::InvalidWitness)?;
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let completion = recognize_and_complete_tw2(g)?;
    let n = p.size();
    if n < 5 {
        let (u, v) = g.edges().next().unwrap();
        return Ok(PathWitness::induced(vec![u, v]));
    }
    let gp = &completion.completed;
    let run = run_ktree_pipeline(gp, 2, &PathWitness::plain(p.vertices.clone()))?;
    let local = &run.pruned.sub;
    let mut u_set: Vec<usize> = run.sliding.paths.iter().flatten().map(|&v| local.to_host[v]).collect();
    u_set.sort_unstable();
    let strip = gp.induced(&u_set);
    let spine = if u_set.len() < 4 {
        u_set[..2].to_vec()
    } else {
        let (a, b) = boundary_paths(&strip.graph)?;
        let longer = if b.len() > a.len() { b } else { a };
        longer.into_iter().map(|v| strip.to_host[v]).collect()
    };
    verify_path_witness(gp, &PathWitness::induced(spine.clone()))
        .map_err(|e| Error::Certificate(format!("boundary path in the completion: {e}")))?;

    let mut out = vec![spine[0]];
    let mut detour_interior: Vec<bool> = vec![false; g.n()];
    for pair in spine.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        if g.has_edge(u, v) {
            out.push(v);
            continue;
        }
        let (lu, lv) = (strip.local(u).unwrap(), strip.local(v).unwrap());
        let w = strip
            .graph
            .neighbors(lu)
            .iter()
            .copied()
            .find(|&x| strip.graph.has_edge(x, lv))
            .map(|x| strip.to_host[x])
            .ok_or_else(|| Error::Certificate(format!("missing edge {u} {v} has no inner triangle")))?;
        let mut forbidden: Vec<usize> = spine.iter().copied().filter(|&x| x != u && x != v).collect();
        forbidden.push(w);
        let detour = shortest_path_avoiding(g, u, v, &forbidden)
            .ok_or_else(|| Error::Certificate(format!("no {u}-{v} detour avoiding {w} and the boundary path")))?;
        for &x in &detour.vertices[1..detour.size() - 1] {
            if detour_interior[x] {
                return Err(Error::Certificate(format!("detours for two missing edges share {x}")));
            }
            detour_interior[x] = true;
        }
        out.extend_from_slice(&detour.vertices[1..]);
    }
    let w = PathWitness::induced(out);
    verify_path_witness(g, &w).map_err(|e| Error::Certificate(format!("spliced path: {e}")))?;
    let bound = bounds::partial_2tree(n);
    if !bounds::meets(w.size(), bound) {
        return Err(Error::Certificate(format!(
            "size {} below the guaranteed {bound:.3}",
            w.size()
        )));
    }
    Ok(w)
}

/// An induced-path procedure for 2-connected graphs of some hereditary class
/// guaranteeing size `alpha * (log2 n)^beta` from an n-vertex path.
pub trait Extractor: Sync {
    fn alpha(&self) -> f64;
    fn beta(&self) -> f64;
    fn extract(&self, g: &Graph, p: &PathWitness) -> Result<PathWitness>;
}

/// [`extract_partial_2tree`] as an [`Extractor`].
pub struct PartialTwoTree;

impl Extractor for PartialTwoTree {
    fn alpha(&self) -> f64 {
        0.5
    }

    fn beta(&self) -> f64 {
        1.0
    }

    fn extract(&self, g: &Graph, p: &PathWitness) -> Result<PathWitness> {
        extract_partial_2tree(g, p)
    }
}

/// Which argument produced a composed path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockBranch {
    /// The extractor ran inside one block.
    SingleBlock,
    /// Shortest paths were chained through the blocks met by the path.
    BlockChain,
}

/// Runs `extractor` inside one block or chains through many, depending on
/// how many blocks the path `p` meets.
pub fn compose_over_blocks(
    g: &Graph,
    p: &PathWitness,
    extractor: &dyn Extractor,
) -> Result<(PathWitness, BlockBranch)> {
    verify_path_witness(g, &PathWitness::plain(p.vertices.clone())).map_err(Error::InvalidWitness)?;
    let bt = block_tree(g)?;
    let n = p.size();
    if n < 2 {
        return Err(Error::Precondition("path needs at least 2 vertices".into()));
    }
    // maximal runs of consecutive path edges inside one block
    let mut runs: Vec<(usize, Vec<usize>)> = Vec::new();
    for (u, v) in p.edges() {
        let b = bt.block_of_edge(u, v).expect("path edge is a graph edge");
        match runs.last_mut() {
            Some((last, seg)) if *last == b => seg.push(v),
            _ => runs.push((b, vec![u, v])),
        }
    }
    let threshold = bounds::blocks_threshold(n, extractor.alpha(), extractor.beta());
    if (runs.len() as f64) <= threshold {
        let (b, seg) = runs.iter().max_by_key(|(_, s)| s.len()).unwrap();
        let block = &bt.blocks[*b];
        let w = if block.len() == 2 {
            PathWitness::induced(block.clone())
        } else {
            let sub = g.induced(block);
            let local = sub.restrict(&PathWitness::plain(seg.clone())).unwrap();
            sub.lift(&extractor.extract(&sub.graph, &local)?)
        };
        verify_path_witness(g, &w).map_err(Error::Certificate)?;
        Ok((w, BlockBranch::SingleBlock))
    } else {
        let blocks: Vec<Vec<usize>> = runs.iter().map(|(b, _)| bt.blocks[*b].clone()).collect();
        let cuts: Vec<usize> = runs[1..].iter().map(|(_, s)| s[0]).collect();
        let w = chain_through_blocks(g, &blocks, &cuts)?;
        Ok((w, BlockBranch::BlockChain))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_gets_one_chord() {
        let c = recognize_and_complete_tw2(&Graph::cycle(4)).unwrap();
        assert_eq!(c.added_edges.len(), 1);
        assert_eq!(c.completed.m(), 5);
    }

    #[test]
    fn k4_is_rejected() {
        assert!(matches!(
            recognize_and_complete_tw2(&Graph::complete(4)),
            Err(Error::TreewidthTooLarge(_))
        ));
    }

    #[test]
    fn trees_complete() {
        let c = recognize_and_complete_tw2(&Graph::path(6)).unwrap();
        assert_eq!(c.completed.m(), 2 * 6 - 3);
    }

    #[test]
    fn even_cycle_extraction() {
        let g = Graph::cycle(8);
        let p = PathWitness::plain((0..8).collect());
        let w = extract_partial_2tree(&g, &p).unwrap();
        assert!(w.is_valid_in(&g));
        // C_8 minus a vertex is an induced P_7
        assert!(w.size() >= 2 && w.size() <= 7);
    }

    #[test]
    fn two_connected_input_is_one_block() {
        let g = Graph::cycle(8);
        let p = PathWitness::plain((0..8).collect());
        let (w, branch) = compose_over_blocks(&g, &p, &PartialTwoTree).unwrap();
        assert_eq!(branch, BlockBranch::SingleBlock);
        assert_eq!(w, extract_partial_2tree(&g, &p).unwrap());
    }
}

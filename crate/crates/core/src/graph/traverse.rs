use std::collections::VecDeque;

use super::{block_tree, Graph, PathWitness};
use crate::error::{Error, Result};

pub const UNREACHED: usize = usize::MAX;

/// Hop distances from `source`; unreachable vertices get `UNREACHED`.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Component id per vertex, ids numbered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<usize> {
    let mut comp = vec![UNREACHED; g.n()];
    let mut next = 0;
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if comp[s] != UNREACHED {
            continue;
        }
        comp[s] = next;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if comp[w] == UNREACHED {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && connected_components(g).iter().all(|&c| c == 0)
}

/// At least three vertices, connected, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && block_tree(g).map(|bt| bt.blocks.len() == 1).unwrap_or(false)
}

/// Shortest `u`–`v` path in `g` minus `forbidden`. A shortest path is induced
/// in the subgraph searched, so the witness claims induced.
pub fn shortest_path_avoiding(g: &Graph, u: usize, v: usize, forbidden: &[usize]) -> Option<PathWitness> {
    let mut parent = vec![UNREACHED; g.n()];
    let mut blocked = vec![false; g.n()];
    for &f in forbidden {
        blocked[f] = true;
    }
    if blocked[u] || blocked[v] {
        return None;
    }
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &w in g.neighbors(x) {
            if !blocked[w] && parent[w] == UNREACHED {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    if parent[v] == UNREACHED {
        return None;
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    Some(PathWitness::induced(path))
}

/// Diameter path of a tree by two breadth-first sweeps.
pub fn tree_longest_path(tree: &Graph) -> Result<PathWitness> {
    let n = tree.n();
    if n == 0 {
        return Err(Error::NotTree("empty graph".into()));
    }
    if tree.m() != n - 1 || !is_connected(tree) {
        return Err(Error::NotTree(format!(
            "n={n}, m={}, connected={}",
            tree.m(),
            is_connected(tree)
        )));
    }
    let far = |d: &[usize]| (0..n).max_by_key(|&v| (d[v], std::cmp::Reverse(v))).unwrap();
    let a = far(&bfs_distances(tree, 0));
    let da = bfs_distances(tree, a);
    let b = far(&da);
    // walk back from b towards a along decreasing distance
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = *tree
            .neighbors(x)
            .iter()
            .find(|&&w| da[w] + 1 == da[x])
            .expect("bfs parent");
        path.push(x);
    }
    path.reverse();
    Ok(PathWitness::induced(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn avoiding_examples() {
        let tri = Graph::complete(3);
        assert_eq!(shortest_path_avoiding(&tri, 0, 2, &[1]).unwrap().vertices, vec![0, 2]);
        let c4 = Graph::cycle(4);
        assert_eq!(shortest_path_avoiding(&c4, 0, 2, &[1]).unwrap().vertices, vec![0, 3, 2]);
        assert!(shortest_path_avoiding(&c4, 0, 2, &[1, 3]).is_none());
    }

    #[test]
    fn tree_paths() {
        assert_eq!(tree_longest_path(&Graph::new(1)).unwrap().size(), 1);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(tree_longest_path(&star).unwrap().size(), 3);
        assert_eq!(tree_longest_path(&Graph::path(7)).unwrap().size(), 7);
        assert!(tree_longest_path(&Graph::cycle(4)).is_err());
        assert!(tree_longest_path(&Graph::new(2)).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(is_two_connected(&Graph::cycle(5)));
        assert!(!is_two_connected(&Graph::path(5)));
        assert!(!is_two_connected(&Graph::complete(2)));
        assert!(!is_connected(&Graph::new(2)));
        assert_eq!(connected_components(&Graph::new(3)), vec![0, 1, 2]);
    }
}

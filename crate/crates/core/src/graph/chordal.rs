use super::Graph;

/// A perfect elimination ordering: every vertex's later neighbours form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
    /// Clique number, read off the ordering as max later-degree + 1.
    pub omega: usize,
}

impl EliminationOrdering {
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Maximum cardinality search, visit order.
fn mcs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    buckets[0] = (0..n).rev().collect();
    let mut top = 0usize;
    let mut visit = Vec::with_capacity(n);
    while visit.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !done[v] && weight[v] == top => break v,
                Some(_) => continue,
                None => top -= 1,
            }
        };
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    visit
}

/// Perfect elimination ordering via MCS, or `None` if `g` is not chordal.
pub fn chordal_elimination(g: &Graph) -> Option<EliminationOrdering> {
    let n = g.n();
    let mut order = mcs(g);
    order.reverse();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut omega = usize::from(n > 0);
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        omega = omega.max(later.len() + 1);
        // earliest later neighbour must see all the others
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return None;
            }
        }
    }
    Some(EliminationOrdering { order, omega })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(chordal_elimination(&Graph::cycle(4)).is_none());
        assert!(chordal_elimination(&Graph::cycle(7)).is_none());
    }

    #[test]
    fn cliques_and_trees() {
        for k in 1..6 {
            assert_eq!(chordal_elimination(&Graph::complete(k)).unwrap().omega, k);
        }
        assert_eq!(chordal_elimination(&Graph::path(6)).unwrap().omega, 2);
        assert_eq!(chordal_elimination(&Graph::new(3)).unwrap().omega, 1);
        assert_eq!(chordal_elimination(&Graph::new(0)).unwrap().omega, 0);
    }

    #[test]
    fn ordering_is_perfect() {
        // fan: path 1..5 plus apex 0
        let mut g = Graph::path(6);
        g.remove_edge(0, 1);
        for v in 1..6 {
            g.add_edge(0, v);
        }
        let eo = chordal_elimination(&g).unwrap();
        assert_eq!(eo.omega, 3);
        let pos = eo.positions();
        for &v in &eo.order {
            let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            assert!(g.is_clique(&later));
        }
    }
}

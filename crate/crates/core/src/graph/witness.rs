use std::fmt;

use super::Graph;

/// An ordered vertex sequence claimed to be a path (optionally induced).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub claims_induced: bool,
}

impl PathWitness {
    pub fn induced(vertices: Vec<usize>) -> Self {
        PathWitness {
            vertices,
            claims_induced: true,
        }
    }

    pub fn plain(vertices: Vec<usize>) -> Self {
        PathWitness {
            vertices,
            claims_induced: false,
        }
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        verify_path_witness(g, self).is_ok()
    }
}

impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.claims_induced { "induced" } else { "plain" };
        write!(f, "path {kind}")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Checks `w` against `g`. On failure the error names the first violation.
pub fn verify_path_witness(g: &Graph, w: &PathWitness) -> Result<(), String> {
    if w.vertices.is_empty() {
        return Err("empty path".into());
    }
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in w.vertices.iter().enumerate() {
        if v >= n {
            return Err(format!("vertex {v} out of range (n={n})"));
        }
        if pos[v] != usize::MAX {
            return Err(format!("vertex {v} repeated at positions {} and {i}", pos[v]));
        }
        pos[v] = i;
    }
    for (i, (u, v)) in w.edges().enumerate() {
        if !g.has_edge(u, v) {
            return Err(format!("consecutive vertices {u},{v} (position {i}) not adjacent"));
        }
    }
    if w.claims_induced {
        for (i, &u) in w.vertices.iter().enumerate() {
            for &x in g.neighbors(u) {
                let j = pos[x];
                if j != usize::MAX && j > i + 1 {
                    return Err(format!("chord {u}-{x} between positions {i} and {j}"));
                }
            }
        }
    }
    Ok(())
}

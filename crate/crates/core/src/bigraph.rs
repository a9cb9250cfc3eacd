//! Bipartite inclusion graph of a subring pair.
//!
//! White vertices (bottom row) are the `S`-simples, black vertices (top row)
//! the `R`-simples, with an edge wherever the inclusion matrix is positive.
//! Depth is read off from distances: the minimum odd depth is one more than
//! the largest distance between two white vertices, and the minimum even
//! depth is two more than the largest distance from a black vertex's
//! identified white neighbourhood to another white vertex. Distances between
//! different components never count.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::depth::{self, DepthError, DepthReport};
use crate::matrix::NonNegMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionGraph {
    white: usize,
    black: usize,
    edges: BTreeSet<(usize, usize)>,
    white_adj: Vec<Vec<usize>>,
    black_adj: Vec<Vec<usize>>,
}

/// JSON form of a graph: 1-based `[white, black]` edge pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub white: usize,
    pub black: usize,
    pub edges: Vec<[usize; 2]>,
}

impl InclusionGraph {
    pub fn from_matrix(m: &NonNegMatrix) -> Result<Self, DepthError> {
        depth::validate_inclusion(m)?;
        let edges = m.support().ones().collect();
        Ok(InclusionGraph::from_edges(m.rows(), m.cols(), edges))
    }

    fn from_edges(white: usize, black: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut white_adj = vec![Vec::new(); white];
        let mut black_adj = vec![Vec::new(); black];
        for &(w, b) in &edges {
            white_adj[w].push(b);
            black_adj[b].push(w);
        }
        InclusionGraph {
            white,
            black,
            edges,
            white_adj,
            black_adj,
        }
    }

    pub fn white(&self) -> usize {
        self.white
    }

    pub fn black(&self) -> usize {
        self.black
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            white: self.white,
            black: self.black,
            edges: self.edges().map(|(w, b)| [w + 1, b + 1]).collect(),
        }
    }

    /// Edge distances from a set of white sources to every white vertex
    /// (`None` when unreachable).
    fn white_distances(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist_w = vec![None; self.white];
        let mut seen_b = vec![false; self.black];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist_w[s].is_none() {
                dist_w[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(w) = queue.pop_front() {
            let d = dist_w[w].expect("queued vertices have distances");
            for &b in &self.white_adj[w] {
                if std::mem::replace(&mut seen_b[b], true) {
                    continue;
                }
                for &next in &self.black_adj[b] {
                    if dist_w[next].is_none() {
                        dist_w[next] = Some(d + 2);
                        queue.push_back(next);
                    }
                }
            }
        }
        dist_w
    }

    /// Largest white-to-white distance within a component.
    pub fn white_diameter(&self) -> usize {
        (0..self.white)
            .flat_map(|w| self.white_distances(&[w]))
            .flatten()
            .max()
            .unwrap_or(0)
    }

    /// For a black vertex, the largest distance from its (identified) white
    /// neighbourhood to any white vertex of the same component.
    pub fn identified_eccentricity(&self, black: usize) -> usize {
        self.white_distances(&self.black_adj[black])
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }

    pub fn odd_depth(&self) -> usize {
        1 + self.white_diameter()
    }

    pub fn even_depth(&self) -> usize {
        2 + (0..self.black)
            .map(|b| self.identified_eccentricity(b))
            .max()
            .unwrap_or(0)
    }

    pub fn min_depth(&self) -> usize {
        self.odd_depth().min(self.even_depth())
    }

    /// Graphviz rendering; black vertices filled on the top rank, white
    /// vertices hollow on the bottom rank.
    pub fn to_dot(&self, labels: Option<&DegreeLabels>) -> String {
        let label = |names: Option<&Vec<String>>, i: usize| -> String {
            names
                .and_then(|v| v.get(i).cloned())
                .unwrap_or_else(|| (i + 1).to_string())
        };
        let mut out = String::new();
        out.push_str("graph inclusion {\n");
        out.push_str("  node [shape=circle];\n");
        out.push_str("  { rank=min;");
        for b in 0..self.black {
            let l = label(labels.map(|l| &l.black), b);
            let _ = write!(
                out,
                " b{} [label=\"{}\", style=filled, fillcolor=black, fontcolor=white];",
                b + 1,
                l
            );
        }
        out.push_str(" }\n");
        out.push_str("  { rank=max;");
        for w in 0..self.white {
            let l = label(labels.map(|l| &l.white), w);
            let _ = write!(out, " w{} [label=\"{}\"];", w + 1, l);
        }
        out.push_str(" }\n");
        for (w, b) in self.edges() {
            let _ = writeln!(out, "  b{} -- w{};", b + 1, w + 1);
        }
        out.push_str("}\n");
        out
    }
}

/// Vertex labels for DOT output, e.g. dimensions of the simples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeLabels {
    pub white: Vec<String>,
    pub black: Vec<String>,
}

impl DegreeLabels {
    pub fn from_numbers(white: &[u64], black: &[u64]) -> Self {
        DegreeLabels {
            white: white.iter().map(u64::to_string).collect(),
            black: black.iter().map(u64::to_string).collect(),
        }
    }
}

/// Matrix depths together with the graph-method values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub matrix: DepthReport,
    pub graph_odd_depth: usize,
    pub graph_even_depth: usize,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.graph_odd_depth == self.matrix.min_odd_depth
            && self.graph_even_depth == self.matrix.min_even_depth
    }
}

/// Runs both methods. The matrix report is authoritative; callers flag a
/// disagreement rather than failing on it.
pub fn cross_check(m: &NonNegMatrix) -> Result<CrossCheck, DepthError> {
    let matrix = depth::min_depth(m)?;
    let graph = InclusionGraph::from_matrix(m)?;
    Ok(CrossCheck {
        matrix,
        graph_odd_depth: graph.odd_depth(),
        graph_even_depth: graph.even_depth(),
    })
}

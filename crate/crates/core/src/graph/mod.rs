//! Immutable simple graphs plus the girth-cycle census that certifies
//! edge-girth-regularity.

mod census;
mod format;
mod oracle;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use census::{
    edge_girth_count, girth, girth_profile, girth_profile_with, CensusOptions, Classification,
    GirthProfile, ProfileReport,
};
pub use format::{export, parse_edgelist, parse_graph6, parse_json, ExportFormat};
pub use oracle::{census_oracle, for_each_girth_cycle, OracleCensus, DEFAULT_ORACLE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(u32, u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    MultiEdge(u32, u32),
    #[error("tag list has length {tags}, expected {n}")]
    TagCount { tags: usize, n: usize },
    #[error("graph is acyclic")]
    Acyclic,
    #[error("graph is not regular (degrees range over {min}..={max})")]
    Irregular { min: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(u32, u32),
    #[error("requested girth {requested} but the graph has girth {actual}")]
    GirthMismatch { requested: u32, actual: u32 },
    #[error("oracle cap exceeded: {n} vertices > {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("cannot export a graph with no vertices")]
    EmptyGraph,
    #[error("unknown export format {0:?}")]
    UnknownFormat(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

/// Where a vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexTag {
    Point,
    Line,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
    tags: Vec<VertexTag>,
}

impl Graph {
    /// Builds a simple graph; edges may be given in any order and orientation.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
        tags: Vec<VertexTag>,
    ) -> Result<Self, GraphError> {
        if tags.len() != n {
            return Err(GraphError::TagCount {
                tags: tags.len(),
                n,
            });
        }
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::MultiEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges: canon,
            tags,
        })
    }

    /// Untagged graph.
    pub fn plain(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        Self::from_edges(n, edges, vec![VertexTag::Plain; n])
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn tag(&self, v: u32) -> VertexTag {
        self.tags[v as usize]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_id(&self, a: u32, b: u32) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn degree_range(&self) -> (usize, usize) {
        let min = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        (min, max)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    }

    /// Subgraph induced by the vertices with `keep[v]`, renumbered in order.
    pub fn induced_subgraph(&self, keep: &[bool]) -> Graph {
        assert_eq!(keep.len(), self.order());
        let mut new_id = vec![u32::MAX; self.order()];
        let mut tags = Vec::new();
        for (v, _) in keep.iter().enumerate().filter(|(_, &k)| k) {
            new_id[v] = tags.len() as u32;
            tags.push(self.tags[v]);
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a as usize] && keep[b as usize])
            .map(|&(a, b)| (new_id[a as usize], new_id[b as usize]));
        Graph::from_edges(tags.len(), edges, tags).expect("induced subgraph of a simple graph")
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, a: u32, b: u32) -> Result<Graph, GraphError> {
        let id = self.edge_id(a, b).ok_or(GraphError::NotAnEdge(a, b))?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, &e)| e);
        Graph::from_edges(self.order(), edges, self.tags.clone())
    }
}

/// Small named graphs used throughout the tests.
pub mod named {
    use super::Graph;

    pub fn cycle(n: u32) -> Graph {
        Graph::plain(n as usize, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: u32) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::plain(n as usize, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::plain(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Incidence graph of the Fano plane.
    pub fn heawood() -> Graph {
        let lines = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 0], [5, 6, 1], [6, 0, 2]];
        let edges = lines
            .iter()
            .enumerate()
            .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, 7 + l as u32)));
        Graph::plain(14, edges).unwrap()
    }

    /// K3 x K2.
    pub fn prism() -> Graph {
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
        Graph::plain(6, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::plain(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::plain(3, [(0, 1), (1, 0)]),
            Err(GraphError::MultiEdge(0, 1))
        );
        assert_eq!(
            Graph::plain(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange(0, 3, 3))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 1)], vec![]),
            Err(GraphError::TagCount { .. })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = named::petersen();
        for v in 0..10 {
            let nb = g.neighbors(v);
            assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &w in nb {
                assert!(g.has_edge(w, v));
            }
        }
        assert_eq!(g.size(), 15);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_connected());
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = named::cycle(6);
        let h = g.induced_subgraph(&[true, true, false, true, true, true]);
        assert_eq!(h.order(), 5);
        assert_eq!(h.edges(), &[(0, 1), (0, 4), (2, 3), (3, 4)]);
        assert!(h.is_connected());
    }

    #[test]
    fn edge_removal() {
        let g = named::cycle(5);
        let h = g.without_edge(4, 0).unwrap();
        assert_eq!(h.size(), 4);
        assert_eq!(h.regular_degree(), None);
        assert_eq!(g.without_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }
}

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

const FAR: u32 = u32::MAX;

/// Knobs shared by the census routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}


impl CensusOptions {
    pub fn serial() -> Self {
        CensusOptions { workers: Some(1) }
    }

    pub(crate) fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            None => job(),
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(job),
        }
    }
}

/// Length of a shortest cycle.
pub fn girth(g: &Graph) -> Result<u32, GraphError> {
    girth_with(g, CensusOptions::default())
}

pub(crate) fn girth_with(g: &Graph, opts: CensusOptions) -> Result<u32, GraphError> {
    let n = g.order();
    let best = opts.run(|| {
        (0..n as u32)
            .into_par_iter()
            .map_init(
                || (vec![FAR; n], vec![FAR; n], VecDeque::new()),
                |(dist, parent, queue), root| shortest_cycle_from(g, root, dist, parent, queue),
            )
            .min()
    });
    match best.flatten() {
        Some(len) => Ok(len),
        None => Err(GraphError::Acyclic),
    }
}

/// BFS from `root`, excluding the tree edge back to each vertex's parent.
/// The minimum over all roots is the girth.
fn shortest_cycle_from(
    g: &Graph,
    root: u32,
    dist: &mut [u32],
    parent: &mut [u32],
    queue: &mut VecDeque<u32>,
) -> Option<u32> {
    let mut touched = vec![root];
    dist[root as usize] = 0;
    queue.clear();
    queue.push_back(root);
    let mut best: Option<u32> = None;
    'bfs: while let Some(x) = queue.pop_front() {
        let dx = dist[x as usize];
        // any cycle closed from depth dx has length at least 2 dx
        if best.is_some_and(|b| 2 * dx >= b) {
            break;
        }
        for &y in g.neighbors(x) {
            if dist[y as usize] == FAR {
                dist[y as usize] = dx + 1;
                parent[y as usize] = x;
                touched.push(y);
                queue.push_back(y);
            } else if parent[x as usize] != y {
                let len = dx + dist[y as usize] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
                if len == 3 {
                    break 'bfs;
                }
            }
        }
    }
    for v in touched {
        dist[v as usize] = FAR;
        parent[v as usize] = FAR;
    }
    best
}

/// Per-thread buffers for the path search.
struct PathScratch {
    dist: Vec<u32>,
    touched: Vec<u32>,
    queue: VecDeque<u32>,
    visited: Vec<u64>,
}

impl PathScratch {
    fn new(n: usize) -> Self {
        PathScratch {
            dist: vec![FAR; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
            visited: vec![0; n.div_ceil(64)],
        }
    }
}

/// Number of `len`-cycles through the edge `(u, v)`, i.e. simple `u`-`v`
/// paths of length `len - 1` that avoid the edge itself.
fn cycles_through_edge(g: &Graph, u: u32, v: u32, len: u32, s: &mut PathScratch) -> u64 {
    let steps = len - 1;

    // distance layers from v in G - uv, out to depth `steps`
    s.dist[v as usize] = 0;
    s.touched.push(v);
    s.queue.clear();
    s.queue.push_back(v);
    while let Some(x) = s.queue.pop_front() {
        let dx = s.dist[x as usize];
        if dx == steps {
            continue;
        }
        for &y in g.neighbors(x) {
            if (x == v && y == u) || s.dist[y as usize] != FAR {
                continue;
            }
            s.dist[y as usize] = dx + 1;
            s.touched.push(y);
            s.queue.push_back(y);
        }
    }

    let count = if s.dist[u as usize] <= steps {
        set_bit(&mut s.visited, u);
        let c = extend_path(g, u, v, steps, &s.dist, &mut s.visited);
        clear_bit(&mut s.visited, u);
        c
    } else {
        0
    };

    for &x in &s.touched {
        s.dist[x as usize] = FAR;
    }
    s.touched.clear();
    count
}

fn extend_path(g: &Graph, x: u32, target: u32, remaining: u32, dist: &[u32], visited: &mut [u64]) -> u64 {
    if remaining == 1 {
        // the edge into the target must not be the edge being counted
        return u64::from(dist[x as usize] == 1);
    }
    let mut total = 0;
    for &y in g.neighbors(x) {
        if y == target || dist[y as usize] > remaining - 1 || test_bit(visited, y) {
            continue;
        }
        set_bit(visited, y);
        total += extend_path(g, y, target, remaining - 1, dist, visited);
        clear_bit(visited, y);
    }
    total
}

#[inline]
fn test_bit(bits: &[u64], i: u32) -> bool {
    bits[(i >> 6) as usize] >> (i & 63) & 1 == 1
}

#[inline]
fn set_bit(bits: &mut [u64], i: u32) {
    bits[(i >> 6) as usize] |= 1 << (i & 63);
}

#[inline]
fn clear_bit(bits: &mut [u64], i: u32) {
    bits[(i >> 6) as usize] &= !(1 << (i & 63));
}

/// Number of girth cycles through one edge. `g` must equal the girth.
pub fn edge_girth_count(graph: &Graph, edge: (u32, u32), g: u32) -> Result<u64, GraphError> {
    let (u, v) = edge;
    if graph.edge_id(u, v).is_none() {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let actual = girth(graph)?;
    if actual != g {
        return Err(GraphError::GirthMismatch {
            requested: g,
            actual,
        });
    }
    let mut scratch = PathScratch::new(graph.order());
    Ok(cycles_through_edge(graph, u, v, g, &mut scratch))
}

/// Girth-cycle count of every edge, indexed like [`Graph::edges`].
pub(crate) fn edge_counts(graph: &Graph, g: u32, opts: CensusOptions) -> Vec<u64> {
    let n = graph.order();
    opts.run(|| {
        graph
            .edges()
            .par_iter()
            .map_init(
                || PathScratch::new(n),
                |scratch, &(u, v)| cycles_through_edge(graph, u, v, g, scratch),
            )
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Classification {
    /// Every edge lies on `lambda` girth cycles.
    Egr { lambda: u64 },
    /// Common signature with exactly two values: `a` (`k1` times) below `b` (`k2` times).
    Agr { a: u64, k1: usize, b: u64, k2: usize },
    /// Common signature with three or more values.
    GirthRegular { signature: Vec<u64> },
    NotGirthRegular,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Egr { .. } => "egr",
            Classification::Agr { .. } => "agr",
            Classification::GirthRegular { .. } => "girth-regular",
            Classification::NotGirthRegular => "none",
        }
    }

    pub fn is_girth_regular(&self) -> bool {
        !matches!(self, Classification::NotGirthRegular)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthProfile {
    pub girth: u32,
    pub degree: usize,
    /// Indexed like [`Graph::edges`].
    pub edge_counts: Vec<u64>,
    /// Ascending count sequence of the edges at each vertex.
    pub signatures: Vec<Vec<u64>>,
    pub classification: Classification,
    pub total_cycles: u64,
}

impl GirthProfile {
    /// The signature shared by all vertices, if there is one.
    pub fn common_signature(&self) -> Option<&[u64]> {
        let first = self.signatures.first()?;
        self.signatures
            .iter()
            .all(|s| s == first)
            .then_some(first.as_slice())
    }

    /// Number of girth cycles through each vertex.
    pub fn cycles_through_vertices(&self) -> Vec<u64> {
        self.signatures
            .iter()
            .map(|s| s.iter().sum::<u64>() / 2)
            .collect()
    }

    pub fn report(&self, n: usize) -> ProfileReport {
        let signature = match &self.classification {
            Classification::NotGirthRegular => None,
            _ => self.common_signature().map(<[u64]>::to_vec),
        };
        let multiplicities = signature.as_ref().map(|s| {
            let mut m = BTreeMap::new();
            for &x in s {
                *m.entry(x).or_insert(0u64) += 1;
            }
            m.into_iter().map(|(v, c)| [v, c]).collect()
        });
        ProfileReport {
            n,
            k: self.degree,
            girth: self.girth,
            classification: self.classification.label().to_string(),
            lambda: match self.classification {
                Classification::Egr { lambda } => Some(lambda),
                _ => None,
            },
            signature,
            signature_multiplicities: multiplicities,
            total_girth_cycles: self.total_cycles,
        }
    }
}

/// Stable JSON summary of a profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub n: usize,
    pub k: usize,
    pub girth: u32,
    pub classification: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signature: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signature_multiplicities: Option<Vec<[u64; 2]>>,
    pub total_girth_cycles: u64,
}

pub fn girth_profile(graph: &Graph) -> Result<GirthProfile, GraphError> {
    girth_profile_with(graph, CensusOptions::default())
}

pub fn girth_profile_with(graph: &Graph, opts: CensusOptions) -> Result<GirthProfile, GraphError> {
    let degree = match graph.regular_degree() {
        Some(k) => k,
        None => {
            let (min, max) = graph.degree_range();
            return Err(GraphError::Irregular { min, max });
        }
    };
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let g = girth_with(graph, opts)?;
    let edge_counts = edge_counts(graph, g, opts);

    let mut signatures = vec![Vec::with_capacity(degree); graph.order()];
    for (&(a, b), &c) in graph.edges().iter().zip(&edge_counts) {
        signatures[a as usize].push(c);
        signatures[b as usize].push(c);
    }
    for s in &mut signatures {
        s.sort_unstable();
    }

    let total: u64 = edge_counts.iter().sum();
    debug_assert_eq!(total % u64::from(g), 0);

    let mut distinct: Vec<u64> = edge_counts.clone();
    distinct.sort_unstable();
    distinct.dedup();

    let profile = GirthProfile {
        girth: g,
        degree,
        total_cycles: total / u64::from(g),
        classification: Classification::NotGirthRegular,
        edge_counts,
        signatures,
    };
    let classification = if distinct.len() == 1 {
        Classification::Egr {
            lambda: distinct[0],
        }
    } else {
        match profile.common_signature() {
            None => Classification::NotGirthRegular,
            Some(sig) if distinct.len() == 2 => {
                let (a, b) = (distinct[0], distinct[1]);
                Classification::Agr {
                    a,
                    k1: sig.iter().filter(|&&x| x == a).count(),
                    b,
                    k2: sig.iter().filter(|&&x| x == b).count(),
                }
            }
            Some(sig) => Classification::GirthRegular {
                signature: sig.to_vec(),
            },
        }
    };
    Ok(GirthProfile {
        classification,
        ..profile
    })
}

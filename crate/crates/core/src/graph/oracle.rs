//! Independent cycle census: every girth cycle is enumerated exactly once
//! from its smallest vertex, then its edges are tallied. Shares nothing with
//! the per-edge path search it is used to check.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::{CensusOptions, Graph, GraphError};

pub const DEFAULT_ORACLE_CAP: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCensus {
    /// Indexed like [`Graph::edges`].
    pub edge_counts: Vec<u64>,
    pub total_cycles: u64,
}

/// Calls `visit` once per cycle of length `len`, passing the vertex sequence
/// starting at its minimum vertex and with `cycle[1] < cycle[len - 1]`.
/// Assumes no cycle shorter than `len` needs to be reported.
pub fn for_each_girth_cycle(g: &Graph, len: u32, mut visit: impl FnMut(&[u32])) {
    let mut walker = RootWalker::new(g.order());
    for root in 0..g.order() as u32 {
        walker.walk(g, root, len, &mut visit);
    }
}

pub fn census_oracle(
    g: &Graph,
    len: u32,
    cap: usize,
    opts: CensusOptions,
) -> Result<OracleCensus, GraphError> {
    if g.order() > cap {
        return Err(GraphError::OracleCapExceeded { n: g.order(), cap });
    }
    let m = g.size();
    let edge_counts: Vec<u64> = opts.run(|| {
        (0..g.order() as u32)
            .into_par_iter()
            .fold(
                || (RootWalker::new(g.order()), vec![0u64; m]),
                |(mut walker, mut counts), root| {
                    walker.walk(g, root, len, &mut |cycle: &[u32]| {
                        let k = cycle.len();
                        for i in 0..k {
                            let id = g.edge_id(cycle[i], cycle[(i + 1) % k]).expect("cycle edge");
                            counts[id] += 1;
                        }
                    });
                    (walker, counts)
                },
            )
            .map(|(_, counts)| counts)
            .reduce(
                || vec![0u64; m],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    });
    let total_cycles = edge_counts.iter().sum::<u64>() / u64::from(len);
    Ok(OracleCensus {
        edge_counts,
        total_cycles,
    })
}

struct RootWalker {
    dist: Vec<u32>,
    on_path: Vec<bool>,
    path: Vec<u32>,
}

impl RootWalker {
    fn new(n: usize) -> Self {
        RootWalker {
            dist: vec![u32::MAX; n],
            on_path: vec![false; n],
            path: Vec::new(),
        }
    }

    fn walk(&mut self, g: &Graph, root: u32, len: u32, visit: &mut impl FnMut(&[u32])) {
        // distances from root inside the vertices >= root, to bound the depth
        let reach = len / 2;
        let mut seen = vec![root];
        self.dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let d = self.dist[x as usize];
            if d == reach {
                continue;
            }
            for &y in g.neighbors(x) {
                if y > root && self.dist[y as usize] == u32::MAX {
                    self.dist[y as usize] = d + 1;
                    seen.push(y);
                    queue.push_back(y);
                }
            }
        }

        self.path.clear();
        self.path.push(root);
        self.on_path[root as usize] = true;
        self.extend(g, root, len, visit);
        self.on_path[root as usize] = false;

        for v in seen {
            self.dist[v as usize] = u32::MAX;
        }
    }

    fn extend(&mut self, g: &Graph, root: u32, len: u32, visit: &mut impl FnMut(&[u32])) {
        let depth = self.path.len() as u32;
        let last = *self.path.last().unwrap();
        if depth == len {
            if g.has_edge(last, root) && self.path[1] < last {
                visit(&self.path);
            }
            return;
        }
        for &y in g.neighbors(last) {
            if y <= root || self.on_path[y as usize] {
                continue;
            }
            // y must be able to get back to root in the steps that remain
            if self.dist[y as usize] > len - depth {
                continue;
            }
            self.on_path[y as usize] = true;
            self.path.push(y);
            self.extend(g, root, len, visit);
            self.path.pop();
            self.on_path[y as usize] = false;
        }
    }
}

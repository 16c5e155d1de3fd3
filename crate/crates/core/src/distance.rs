//! Unweighted shortest-path distances by breadth-first search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const UNREACHED: u32 = u32::MAX;

/// All-pairs hop distances of a connected graph, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: Vertex) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.n == g.order() {
            Ok(())
        } else {
            Err(Error::MatrixMismatch {
                expected: g.order(),
                found: self.n,
            })
        }
    }
}

fn bfs_into(g: &Graph, source: Vertex, dist: &mut [u32], queue: &mut VecDeque<Vertex>) -> usize {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached
}

/// Distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<u32>> {
    g.check_vertex(source)?;
    let mut dist = vec![0; g.order()];
    let mut queue = VecDeque::with_capacity(g.order());
    if bfs_into(g, source, &mut dist, &mut queue) != g.order() {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// One BFS per vertex. Fails on disconnected graphs.
pub fn all_pairs(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut d = vec![0; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for (source, row) in d.chunks_exact_mut(n).enumerate() {
        if bfs_into(g, source, row, &mut queue) != n {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Runs `f(source, row)` for every source vertex, reusing one row buffer.
///
/// Memory stays linear in the order of the graph, for callers that only need
/// one row at a time.
pub fn for_each_row<F>(g: &Graph, mut f: F) -> Result<()>
where
    F: FnMut(Vertex, &[u32]),
{
    let n = g.order();
    let mut row = vec![0; n];
    let mut queue = VecDeque::with_capacity(n);
    for source in g.vertices() {
        if bfs_into(g, source, &mut row, &mut queue) != n {
            return Err(Error::Disconnected);
        }
        f(source, &row);
    }
    Ok(())
}

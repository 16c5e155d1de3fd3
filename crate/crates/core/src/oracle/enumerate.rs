use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{numbered_graph, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Connectivity of the graph on `0..n` with the given edges, by bitmask BFS.
pub(crate) fn edges_connected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> bool {
    let mut adj = [0u32; 32];
    for (u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let all = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & all == all
}

/// Every connected labeled graph on `v0..v{n-1}`, one per edge subset, in
/// increasing order of the edge-subset bitmask.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn selected(&self, mask: u64) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if edges_connected(self.n, self.selected(mask)) {
                let edges: Vec<_> = self.selected(mask).collect();
                return Some(numbered_graph(self.n, &edges).expect("enumerated graph is valid"));
            }
        }
        None
    }
}

pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange(n, 1, MAX_ENUMERATION_ORDER));
    }
    let pairs = vertex_pairs(n);
    Ok(ConnectedGraphs {
        n,
        end: 1 << pairs.len(),
        pairs,
        next_mask: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected_graphs(n).unwrap().count())
            .collect();
        assert_eq!(counts, [1, 1, 4, 38, 728]);
    }

    #[test]
    fn order_two_is_the_edge() {
        let graphs: Vec<_> = enumerate_connected_graphs(2).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].size(), 1);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(8).is_err());
    }
}

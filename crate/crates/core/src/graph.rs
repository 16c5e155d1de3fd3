//! Immutable simple undirected graphs with string labels.
//!
//! Vertices are addressed by index. Indices are the positions of the labels in
//! sorted order, so two graphs built from the same labels and edges are
//! identical regardless of the order in which they were declared.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Index of a vertex in a [`Graph`].
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and index pairs into `labels`.
    ///
    /// Returns the graph and, for each input position, the index the label
    /// received in the graph. Parallel edges collapse to one.
    pub fn from_indexed(
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<(Graph, Vec<Vertex>)> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        for w in order.windows(2) {
            if labels[w[0]] == labels[w[1]] {
                return Err(Error::DuplicateLabel(labels[w[0]].clone()));
            }
        }
        let mut position = vec![0; n];
        for (idx, &orig) in order.iter().enumerate() {
            position[orig] = idx;
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            for &end in &[a, b] {
                if end >= n {
                    return Err(Error::VertexOutOfRange { index: end, order: n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(labels[a].clone()));
            }
            let (u, v) = (position[a], position[b]);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }

        let mut sorted_labels = Vec::with_capacity(n);
        let mut labels: Vec<Option<String>> = labels.into_iter().map(Some).collect();
        for &orig in &order {
            sorted_labels.push(labels[orig].take().unwrap_or_default());
        }

        let graph = Graph {
            labels: sorted_labels,
            adjacency,
            edge_count: edge_count / 2,
        };
        Ok((graph, position))
    }

    /// Builds a graph from labeled edges plus any extra (possibly isolated)
    /// vertices.
    pub fn from_labeled<'a, V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = &'a str>,
        E: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut builder = GraphBuilder::new();
        for v in vertices {
            builder.add_vertex(v);
        }
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        builder.build()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.labels
            .binary_search_by(|probe| probe.as_str().cmp(label))
            .ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                order: self.order(),
            })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.order() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.order(),
                found: s.universe(),
            })
        }
    }

    /// True iff a breadth-first search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    pub fn is_simplicial(&self, v: Vertex) -> bool {
        let nbrs = &self.adjacency[v];
        nbrs.iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Vertices whose neighborhood induces a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_sorted_unchecked(
            self.order(),
            self.vertices().filter(|&v| self.is_simplicial(v)).collect(),
        )
    }
}

/// Accumulates labeled vertices and edges, then builds a [`Graph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: BTreeMap<String, usize>,
    names: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&id) = self.labels.get(label) {
            return id;
        }
        let id = self.names.len();
        self.labels.insert(String::from(label), id);
        self.names.push(String::from(label));
        id
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(String::from(u)));
        }
        let a = self.add_vertex(u);
        let b = self.add_vertex(v);
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn build(self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.into_iter().collect();
        Graph::from_indexed(self.names, &edges).map(|(g, _)| g)
    }
}

/// Labels `v0, v1, ...` zero-padded so that label order equals numeric order.
pub fn numbered_labels(n: usize) -> Vec<String> {
    let width = if n <= 1 {
        1
    } else {
        let mut w = 0;
        let mut m = n - 1;
        while m > 0 {
            w += 1;
            m /= 10;
        }
        w
    };
    (0..n).map(|i| format!("v{:0width$}", i, width = width)).collect()
}

/// Graph on `numbered_labels(n)` whose vertex `i` is the `i`-th label.
pub fn numbered_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_indexed(numbered_labels(n), edges).map(|(g, _)| g)
}

/// Small named families used throughout tests and examples.
pub mod families {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        numbered_graph(n, &edges).expect("path is a valid graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        numbered_graph(n, &edges).expect("cycle is a valid graph")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        numbered_graph(n, &edges).expect("complete graph is valid")
    }

    /// Star with center `v0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        numbered_graph(leaves + 1, &edges).expect("star is a valid graph")
    }

    /// Path whose vertices carry the given labels in path order.
    pub fn labeled_path(labels: &[&str]) -> Graph {
        let edges = labels.windows(2).map(|w| (w[0], w[1]));
        Graph::from_labeled(labels.iter().copied(), edges).expect("labeled path is valid")
    }
}

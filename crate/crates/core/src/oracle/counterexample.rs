use alloc::vec::Vec;
use core::ops::ControlFlow;

use rand::Rng;

use super::enumerate::{edges_connected, vertex_pairs, MAX_ENUMERATION_ORDER};
use super::for_each_combination;
use super::random::{derive_seed, random_connected_graph, rng_from_seed, GraphGenSpec};
use crate::distance::all_pairs;
use crate::domination::is_x_geodominating;
use crate::graph::{numbered_graph, Graph};
use crate::set::VertexSet;

/// A connected graph whose simplicial vertices fail to x-geodominate from
/// every base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub simplicial: VertexSet,
}

/// Returns the simplicial set of `g` if it is nonempty, has at least
/// `min_simplicial` members and is not z-geodominating for any vertex `z`.
pub fn simplicial_counterexample_check(g: &Graph, min_simplicial: usize) -> Option<VertexSet> {
    let s = g.simplicial_vertices();
    if s.is_empty() || s.len() < min_simplicial {
        return None;
    }
    let dm = all_pairs(g).ok()?;
    let fails_everywhere = g.vertices().all(|z| {
        !is_x_geodominating(g, &dm, z, &s)
            .expect("inputs come from the same graph")
            .is_geodominating
    });
    fails_everywhere.then_some(s)
}

fn mask_simplicial_count(n: usize, adj: &[u32]) -> usize {
    (0..n)
        .filter(|&v| {
            let mut nb = adj[v];
            while nb != 0 {
                let a = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if adj[v] & !(1 << a) & !adj[a] != 0 {
                    return false;
                }
            }
            true
        })
        .count()
}

/// Deterministic search for a [`Counterexample`].
///
/// Orders up to [`MAX_ENUMERATION_ORDER`] are searched exhaustively, by order,
/// then edge count, then lexicographic edge list. Larger orders (up to
/// `max_n`) are sampled with seeded random connected graphs.
#[derive(Debug, Clone)]
pub struct CounterexampleSearch {
    pub max_n: usize,
    pub min_simplicial: usize,
    pub random_attempts: u64,
    pub seed: u64,
}

impl CounterexampleSearch {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            min_simplicial: 1,
            random_attempts: 20_000,
            seed: 0,
        }
    }

    pub fn min_simplicial(mut self, k: usize) -> Self {
        self.min_simplicial = k.max(1);
        self
    }

    pub fn run(&self) -> Option<Counterexample> {
        for n in 2..=self.max_n.min(MAX_ENUMERATION_ORDER) {
            if let Some(found) = self.exhaustive(n) {
                return Some(found);
            }
        }
        for n in MAX_ENUMERATION_ORDER + 1..=self.max_n {
            if let Some(found) = self.sampled(n) {
                return Some(found);
            }
        }
        None
    }

    fn exhaustive(&self, n: usize) -> Option<Counterexample> {
        if n < self.min_simplicial {
            return None;
        }
        let pairs = vertex_pairs(n);
        let mut hit = None;
        for m in n - 1..=pairs.len() {
            let _ = for_each_combination(pairs.len(), m, |pick| {
                let edges = pick.iter().map(|&i| pairs[i]);
                let mut adj = [0u32; MAX_ENUMERATION_ORDER];
                for (u, v) in edges.clone() {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                if mask_simplicial_count(n, &adj) < self.min_simplicial || !edges_connected(n, edges.clone()) {
                    return ControlFlow::Continue(());
                }
                let edges: Vec<_> = edges.collect();
                let g = numbered_graph(n, &edges).expect("enumerated graph is valid");
                match simplicial_counterexample_check(&g, self.min_simplicial) {
                    Some(simplicial) => {
                        hit = Some(Counterexample { graph: g, simplicial });
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                }
            });
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    fn sampled(&self, n: usize) -> Option<Counterexample> {
        let mut rng = rng_from_seed(derive_seed(self.seed, n as u64));
        (0..self.random_attempts).find_map(|i| {
            let p = rng.gen_range(0.05..0.6);
            let spec = GraphGenSpec::random(n, p, derive_seed(self.seed ^ n as u64, i));
            let g = random_connected_graph(&spec).ok()?;
            let simplicial = simplicial_counterexample_check(&g, self.min_simplicial)?;
            Some(Counterexample { graph: g, simplicial })
        })
    }
}

pub fn find_simplicial_counterexample(max_n: usize) -> Option<Counterexample> {
    CounterexampleSearch::new(max_n).run()
}

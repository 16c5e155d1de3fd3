use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{numbered_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphGenSpec {
    pub mode: GenMode,
    pub n: usize,
    /// Probability of each non-tree edge, in `[0, 1]`.
    pub edge_probability: f64,
    pub seed: u64,
}

impl GraphGenSpec {
    pub fn random(n: usize, edge_probability: f64, seed: u64) -> Self {
        Self {
            mode: GenMode::Random,
            n,
            edge_probability,
            seed,
        }
    }
}

/// Seed of the `index`-th task derived from a base seed (splitmix64 step).
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labeled spanning tree on `0..n` via a random Prüfer sequence.
pub fn random_tree_edges<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer decode always has a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u.min(v), u.max(v)));
    edges
}

/// Random spanning tree plus each other vertex pair with probability `p`.
pub fn random_connected_graph(spec: &GraphGenSpec) -> Result<Graph> {
    if spec.mode != GenMode::Random {
        return Err(Error::NotRandomMode);
    }
    let p = spec.edge_probability;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if spec.n < 2 {
        return Err(Error::Degenerate(spec.n));
    }
    let n = spec.n;
    let mut rng = rng_from_seed(spec.seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let tree: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    if p > 0.0 {
        for u in 0..n {
            for v in u + 1..n {
                if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
    }
    numbered_graph(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_only() {
        for seed in 0..20 {
            let g = random_connected_graph(&GraphGenSpec::random(10, 0.0, seed)).unwrap();
            assert_eq!(g.size(), 9);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn deterministic() {
        let spec = GraphGenSpec::random(9, 0.3, 7);
        assert_eq!(random_connected_graph(&spec), random_connected_graph(&spec));
    }

    #[test]
    fn validity_scan() {
        for i in 0..100 {
            let g = random_connected_graph(&GraphGenSpec::random(9, 0.3, derive_seed(1, i))).unwrap();
            assert_eq!(g.order(), 9);
            assert!(g.is_connected());
            for v in g.vertices() {
                assert!(!g.neighbors(v).contains(&v));
                assert!(g.neighbors(v).windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn bad_specs() {
        assert_eq!(
            random_connected_graph(&GraphGenSpec::random(5, 1.5, 0)),
            Err(Error::InvalidProbability(1.5))
        );
        assert!(random_connected_graph(&GraphGenSpec::random(5, f64::NAN, 0)).is_err());
        let mut spec = GraphGenSpec::random(5, 0.5, 0);
        spec.mode = GenMode::Exhaustive;
        assert_eq!(random_connected_graph(&spec), Err(Error::NotRandomMode));
    }

    #[test]
    fn full_probability_gives_complete_graph() {
        let g = random_connected_graph(&GraphGenSpec::random(6, 1.0, 3)).unwrap();
        assert_eq!(g.size(), 15);
    }
}

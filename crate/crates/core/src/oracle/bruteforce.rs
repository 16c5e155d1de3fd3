use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::for_each_combination;
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::set::VertexSet;

pub const DEFAULT_GX_CAP: usize = 12;
pub const DEFAULT_GEODETIC_CAP: usize = 10;
/// Bitmask width; caps can be raised up to this but not past it.
pub const MAX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub minimum_size: usize,
    /// Every minimum set, in lexicographic order of members.
    pub minimum_sets: Vec<VertexSet>,
    pub exhausted: bool,
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1)).expect("mask within order")
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `I[u,v]` as a bitmask, from the distance-sum test.
fn interval_mask(dm: &DistanceMatrix, u: Vertex, v: Vertex) -> u64 {
    let duv = dm.get(u, v);
    (0..dm.order())
        .filter(|&w| dm.get(u, w) + dm.get(w, v) == duv)
        .fold(0, |m, w| m | 1 << w)
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_CAP);
    if g.order() > cap {
        Err(Error::TooLarge { order: g.order(), cap })
    } else {
        Ok(())
    }
}

pub fn min_x_geodominating_bruteforce(g: &Graph, dm: &DistanceMatrix, x: Vertex) -> Result<OracleResult> {
    min_x_geodominating_bruteforce_capped(g, dm, x, DEFAULT_GX_CAP)
}

/// Smallest x-geodominating sets by size-ordered subset enumeration.
///
/// Candidates never include `x`: `I[x,x] = {x}` and `x` is covered by every
/// `I[x,y]` anyway.
pub fn min_x_geodominating_bruteforce_capped(
    g: &Graph,
    dm: &DistanceMatrix,
    x: Vertex,
    cap: usize,
) -> Result<OracleResult> {
    dm.check_graph(g)?;
    g.check_vertex(x)?;
    if g.order() < 2 {
        return Err(Error::Degenerate(g.order()));
    }
    check_cap(g, cap)?;
    let n = g.order();
    let full = full_mask(n);
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| v != x).collect();
    let masks: Vec<u64> = candidates.iter().map(|&y| interval_mask(dm, x, y)).collect();

    for k in 1..=candidates.len() {
        let mut found = Vec::new();
        let _ = for_each_combination(candidates.len(), k, |pick| {
            let cover = pick.iter().fold(0, |m, &i| m | masks[i]);
            if cover == full {
                let chosen = pick.iter().fold(0u64, |m, &i| m | 1 << candidates[i]);
                found.push(mask_to_set(n, chosen));
            }
            ControlFlow::Continue(())
        });
        if !found.is_empty() {
            return Ok(OracleResult {
                minimum_size: k,
                minimum_sets: found,
                exhausted: true,
            });
        }
    }
    unreachable!("V minus x always geodominates a connected graph")
}

pub fn geodetic_number_bruteforce(g: &Graph, dm: &DistanceMatrix) -> Result<(usize, VertexSet)> {
    geodetic_number_bruteforce_capped(g, dm, DEFAULT_GEODETIC_CAP)
}

/// Geodetic number with the lexicographically first minimum geodetic set.
pub fn geodetic_number_bruteforce_capped(
    g: &Graph,
    dm: &DistanceMatrix,
    cap: usize,
) -> Result<(usize, VertexSet)> {
    dm.check_graph(g)?;
    check_cap(g, cap)?;
    let n = g.order();
    let full = full_mask(n);
    let pair: Vec<u64> = (0..n * n).map(|i| interval_mask(dm, i / n, i % n)).collect();

    for k in 1..=n {
        let mut hit = None;
        let _ = for_each_combination(n, k, |pick| {
            let mut cover = 0u64;
            for (i, &u) in pick.iter().enumerate() {
                for &v in &pick[i..] {
                    cover |= pair[u * n + v];
                }
            }
            if cover == full {
                hit = Some(pick.iter().fold(0u64, |m, &v| m | 1 << v));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(mask) = hit {
            return Ok((k, mask_to_set(n, mask)));
        }
    }
    unreachable!("the whole vertex set is geodetic")
}

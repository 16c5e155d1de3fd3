//! Boundary vertices and x-geodomination.
//!
//! The boundary of `x` is the set of vertices `v` such that no neighbor of `v`
//! is farther from `x` than `v` itself. A set `S` is x-geodominating (every
//! vertex lies on a shortest path from `x` to some member of `S`) exactly when
//! it contains the boundary of `x`, so the boundary is the unique minimum
//! x-geodominating set.

use alloc::vec;
use alloc::vec::Vec;

use crate::distance::{for_each_row, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::interval::mark_interval;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryResult {
    pub source: Vertex,
    pub boundary: VertexSet,
    /// Size of the boundary, which is the x-geodomination number.
    pub gx: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodominationCheck {
    pub source: Vertex,
    pub candidate: VertexSet,
    /// Union of the intervals between `source` and each candidate.
    pub covered: VertexSet,
    pub is_geodominating: bool,
    /// Smallest vertex not covered, present only on failure.
    pub witness_uncovered: Option<Vertex>,
}

/// Boundary of `x` given the distance row of `x`.
pub fn boundary_from_row(g: &Graph, row: &[u32]) -> VertexSet {
    let members = g
        .vertices()
        .filter(|&v| g.neighbors(v).iter().all(|&w| row[w] <= row[v]))
        .collect();
    VertexSet::from_sorted_unchecked(g.order(), members)
}

fn check_metric_input(g: &Graph, dm: &DistanceMatrix) -> Result<()> {
    dm.check_graph(g)?;
    if g.order() < 2 {
        return Err(Error::Degenerate(g.order()));
    }
    Ok(())
}

pub fn boundary(g: &Graph, dm: &DistanceMatrix, x: Vertex) -> Result<BoundaryResult> {
    g.check_vertex(x)?;
    check_metric_input(g, dm)?;
    let boundary = boundary_from_row(g, dm.row(x));
    Ok(BoundaryResult {
        source: x,
        gx: boundary.len(),
        boundary,
    })
}

/// Boundaries of every vertex, one BFS at a time.
///
/// Needs only linear extra memory; the whole distance matrix is never held.
pub fn all_boundaries(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.order() < 2 {
        return Err(Error::Degenerate(g.order()));
    }
    let mut out = Vec::with_capacity(g.order());
    for_each_row(g, |_, row| out.push(boundary_from_row(g, row)))?;
    Ok(out)
}

pub fn is_x_geodominating(
    g: &Graph,
    dm: &DistanceMatrix,
    x: Vertex,
    s: &VertexSet,
) -> Result<GeodominationCheck> {
    dm.check_graph(g)?;
    g.check_vertex(x)?;
    g.check_set(s)?;
    let mut mask = vec![false; g.order()];
    for y in s {
        mark_interval(dm, x, y, &mut mask);
    }
    let witness_uncovered = mask.iter().position(|&on| !on);
    Ok(GeodominationCheck {
        source: x,
        candidate: s.clone(),
        covered: VertexSet::from_mask(&mask),
        is_geodominating: witness_uncovered.is_none(),
        witness_uncovered,
    })
}

/// The unique minimum x-geodominating set.
pub fn gx_set(g: &Graph, dm: &DistanceMatrix, x: Vertex) -> Result<VertexSet> {
    boundary(g, dm, x).map(|b| b.boundary)
}

/// Evaluates "`s` is x-geodominating" and "boundary of `x` is a subset of
/// `s`" independently and reports whether they agree.
pub fn theorem_check(g: &Graph, dm: &DistanceMatrix, x: Vertex, s: &VertexSet) -> Result<bool> {
    let dominating = is_x_geodominating(g, dm, x, s)?.is_geodominating;
    let contains_boundary = boundary(g, dm, x)?.boundary.is_subset(s);
    Ok(dominating == contains_boundary)
}

/// Smallest-index vertex minimizing the boundary size, with that size.
pub fn min_gx_vertex(g: &Graph, dm: &DistanceMatrix) -> Result<(Vertex, usize)> {
    check_metric_input(g, dm)?;
    let mut best = (0, usize::MAX);
    for x in g.vertices() {
        let row = dm.row(x);
        let gx = g
            .vertices()
            .filter(|&v| g.neighbors(v).iter().all(|&w| row[w] <= row[v]))
            .count();
        if gx < best.1 {
            best = (x, gx);
        }
    }
    Ok(best)
}

/// Boundary of the best vertex together with that vertex; always geodetic.
pub fn geodetic_from_boundary(g: &Graph, dm: &DistanceMatrix) -> Result<VertexSet> {
    let (x, _) = min_gx_vertex(g, dm)?;
    boundary(g, dm, x)?.boundary.with(x)
}

//! Geodesic intervals and geodetic closure.
//!
//! `w` lies on some shortest `u`-`v` path exactly when
//! `d(u,w) + d(w,v) = d(u,v)`, so intervals are read off the distance matrix.

use alloc::vec;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::set::VertexSet;

pub(crate) fn mark_interval(dm: &DistanceMatrix, u: Vertex, v: Vertex, mask: &mut [bool]) {
    let duv = dm.get(u, v);
    let (ru, rv) = (dm.row(u), dm.row(v));
    for (w, slot) in mask.iter_mut().enumerate() {
        if ru[w] + rv[w] == duv {
            *slot = true;
        }
    }
}

/// The vertices on at least one shortest `u`-`v` path.
pub fn interval(g: &Graph, dm: &DistanceMatrix, u: Vertex, v: Vertex) -> Result<VertexSet> {
    dm.check_graph(g)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut mask = vec![false; g.order()];
    mark_interval(dm, u, v, &mut mask);
    Ok(VertexSet::from_mask(&mask))
}

/// Union of `interval(u, v)` over all pairs in `s`.
pub fn geodetic_closure(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> Result<VertexSet> {
    dm.check_graph(g)?;
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut mask = vec![false; g.order()];
    let members = s.as_slice();
    for (i, &u) in members.iter().enumerate() {
        mask[u] = true;
        for &v in &members[i + 1..] {
            mark_interval(dm, u, v, &mut mask);
        }
    }
    Ok(VertexSet::from_mask(&mask))
}

pub fn is_geodetic(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> Result<bool> {
    geodetic_closure(g, dm, s).map(|c| c.is_full())
}

//! Boundary vertices, x-geodominating sets and graph products on connected
//! unweighted graphs.
//!
//! For a vertex `x`, a set `S` is *x-geodominating* when every vertex lies on
//! a shortest path from `x` to some member of `S`. The smallest such set is
//! the *boundary* of `x`: the vertices none of whose neighbors is farther from
//! `x`. This crate computes boundaries directly from BFS distances and ships
//! exhaustive-search oracles that check the characterization independently.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

mod error;

pub mod distance;
pub mod domination;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod product;
pub mod set;
pub mod verify;

pub use distance::{all_pairs, bfs_distances, DistanceMatrix};
pub use error::{Error, Factor, Result};
pub use domination::{
    all_boundaries, boundary, geodetic_from_boundary, gx_set, is_x_geodominating, min_gx_vertex,
    theorem_check, BoundaryResult, GeodominationCheck,
};
pub use graph::{Graph, GraphBuilder, Vertex};
pub use interval::{geodetic_closure, interval, is_geodetic};
pub use product::{
    product, product_boundary_report, product_distance, product_gx_report, ProductAnalysis,
    ProductBoundaryReport, ProductGraph, ProductGxReport, ProductKind,
};
pub use set::VertexSet;

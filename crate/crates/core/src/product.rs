//! Cartesian, lexicographic and strong products, their closed-form distances,
//! and checks of how boundaries behave under each product.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::distance::{all_pairs, DistanceMatrix};
use crate::error::{Error, Factor, Result};
use crate::domination::boundary;
use crate::graph::{Graph, Vertex};
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [
        ProductKind::Cartesian,
        ProductKind::Lexicographic,
        ProductKind::Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Strong => "strong",
        }
    }
}

impl core::fmt::Display for ProductKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProductKind;

impl core::fmt::Display for UnknownProductKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("expected one of cartesian, lexicographic, strong")
    }
}

impl core::str::FromStr for ProductKind {
    type Err = UnknownProductKind;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(UnknownProductKind)
    }
}

/// Edge rule of each product, evaluated directly on a pair of pair-vertices.
pub fn edge_rule(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    (g1, h1): (Vertex, Vertex),
    (g2, h2): (Vertex, Vertex),
) -> bool {
    let g_edge = g.has_edge(g1, g2);
    let h_edge = h.has_edge(h1, h2);
    let cartesian = (g_edge && h1 == h2) || (g1 == g2 && h_edge);
    match kind {
        ProductKind::Cartesian => cartesian,
        ProductKind::Lexicographic => g_edge || (g1 == g2 && h_edge),
        ProductKind::Strong => cartesian || (g_edge && h_edge),
    }
}

/// A product graph together with its factors and the pair coordinates of
/// each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub kind: ProductKind,
    pub factor_g: Graph,
    pub factor_h: Graph,
    pub graph: Graph,
    pair_to_vertex: Vec<Vertex>,
    vertex_to_pair: Vec<(Vertex, Vertex)>,
}

impl ProductGraph {
    pub fn vertex(&self, g: Vertex, h: Vertex) -> Vertex {
        self.pair_to_vertex[g * self.factor_h.order() + h]
    }

    pub fn pair(&self, v: Vertex) -> (Vertex, Vertex) {
        self.vertex_to_pair[v]
    }

    /// Set of product vertices `{(g, h) : g in gs, h in hs}`.
    pub fn cross(&self, gs: &VertexSet, hs: &VertexSet) -> VertexSet {
        let members = gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h)));
        VertexSet::from_members(self.graph.order(), members.map(|(g, h)| self.vertex(g, h)))
            .expect("pair vertices are in range")
    }

    /// Members ordered by (first factor label, second factor label).
    pub fn pair_order(&self, s: &VertexSet) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = s.iter().collect();
        out.sort_by_key(|&v| self.pair(v));
        out
    }
}

pub fn pair_label(g: &str, h: &str) -> String {
    format!("({},{})", g, h)
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if !g.is_connected() {
        return Err(Error::DisconnectedFactor { which: Factor::First });
    }
    if !h.is_connected() {
        return Err(Error::DisconnectedFactor { which: Factor::Second });
    }
    let (ng, nh) = (g.order(), h.order());
    let id = |a: Vertex, b: Vertex| a * nh + b;

    let mut labels = Vec::with_capacity(ng * nh);
    for a in g.vertices() {
        for b in h.vertices() {
            labels.push(pair_label(g.label(a), h.label(b)));
        }
    }

    let mut edges = Vec::new();
    for a in g.vertices() {
        for b in h.vertices() {
            let here = id(a, b);
            for &b2 in h.neighbors(b) {
                edges.push((here, id(a, b2)));
            }
            for &a2 in g.neighbors(a) {
                match kind {
                    ProductKind::Cartesian => edges.push((here, id(a2, b))),
                    ProductKind::Lexicographic => {
                        edges.extend(h.vertices().map(|b2| (here, id(a2, b2))));
                    }
                    ProductKind::Strong => {
                        edges.push((here, id(a2, b)));
                        edges.extend(h.neighbors(b).iter().map(|&b2| (here, id(a2, b2))));
                    }
                }
            }
        }
    }
    edges.retain(|&(u, v)| u < v);

    let (graph, pair_to_vertex) = Graph::from_indexed(labels, &edges)?;
    let mut vertex_to_pair = alloc::vec![(0, 0); ng * nh];
    for a in g.vertices() {
        for b in h.vertices() {
            vertex_to_pair[pair_to_vertex[id(a, b)]] = (a, b);
        }
    }
    Ok(ProductGraph {
        kind,
        factor_g: g.clone(),
        factor_h: h.clone(),
        graph,
        pair_to_vertex,
        vertex_to_pair,
    })
}

/// Distance in the product from the factor distances alone.
pub fn product_distance(
    kind: ProductKind,
    dmg: &DistanceMatrix,
    dmh: &DistanceMatrix,
    (g1, h1): (Vertex, Vertex),
    (g2, h2): (Vertex, Vertex),
) -> Result<u32> {
    for (v, n) in [(g1, dmg.order()), (g2, dmg.order()), (h1, dmh.order()), (h2, dmh.order())] {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, order: n });
        }
    }
    let (dg, dh) = (dmg.get(g1, g2), dmh.get(h1, h2));
    Ok(match kind {
        ProductKind::Cartesian => dg + dh,
        ProductKind::Strong => dg.max(dh),
        ProductKind::Lexicographic if g1 != g2 => dg,
        // Within a layer, any neighbor of g gives a two-step detour.
        ProductKind::Lexicographic if dmg.order() >= 2 => dh.min(2),
        ProductKind::Lexicographic => dh,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBoundaryReport {
    pub kind: ProductKind,
    pub base: Vertex,
    pub base_pair: (Vertex, Vertex),
    pub actual_boundary: VertexSet,
    pub lower_bound: VertexSet,
    pub upper_bound: VertexSet,
    pub containments_hold: bool,
    /// Lower-bound members missing from the boundary, then boundary members
    /// outside the upper bound.
    pub witnesses: Vec<Vertex>,
    /// Upper-bound members not in the boundary (nonempty when the upper
    /// containment is strict).
    pub upper_slack: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGxReport {
    pub kind: ProductKind,
    pub base_pair: (Vertex, Vertex),
    pub gx_product: usize,
    pub gx_first: usize,
    pub gx_second: usize,
    pub order_first: usize,
    pub order_second: usize,
    pub lower: usize,
    pub upper: usize,
    pub holds: bool,
}

/// A product with the distance matrices of the product and both factors,
/// ready for boundary queries at many base vertices.
#[derive(Debug, Clone)]
pub struct ProductAnalysis {
    pub product: ProductGraph,
    pub dm: DistanceMatrix,
    pub dm_g: DistanceMatrix,
    pub dm_h: DistanceMatrix,
}

impl ProductAnalysis {
    pub fn new(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Self> {
        let product = product(kind, g, h)?;
        for f in [g, h] {
            if f.order() < 2 {
                return Err(Error::Degenerate(f.order()));
            }
        }
        Ok(Self {
            dm: all_pairs(&product.graph)?,
            dm_g: all_pairs(g)?,
            dm_h: all_pairs(h)?,
            product,
        })
    }

    fn check_base(&self, base_g: Vertex, base_h: Vertex) -> Result<()> {
        self.product.factor_g.check_vertex(base_g)?;
        self.product.factor_h.check_vertex(base_h)
    }

    pub fn boundary_report(&self, base_g: Vertex, base_h: Vertex) -> Result<ProductBoundaryReport> {
        self.check_base(base_g, base_h)?;
        let p = &self.product;
        let (g, h) = (&p.factor_g, &p.factor_h);
        let base = p.vertex(base_g, base_h);
        let actual = boundary(&p.graph, &self.dm, base)?.boundary;
        let bg = boundary(g, &self.dm_g, base_g)?.boundary;
        let bh = boundary(h, &self.dm_h, base_h)?.boundary;
        let all_g = VertexSet::full(g.order());
        let all_h = VertexSet::full(h.order());
        let only_g = VertexSet::singleton(g.order(), base_g)?;

        let (lower, upper) = match p.kind {
            ProductKind::Cartesian => {
                let exact = p.cross(&bg, &bh);
                (exact.clone(), exact)
            }
            ProductKind::Lexicographic => {
                let lower = p.cross(&only_g, &bh);
                let upper = p.cross(&bg, &all_h).union(&lower);
                (lower, upper)
            }
            ProductKind::Strong => (
                p.cross(&bg, &bh),
                p.cross(&bg, &all_h).union(&p.cross(&all_g, &bh)),
            ),
        };

        let mut witnesses: Vec<Vertex> = lower.difference(&actual).iter().collect();
        witnesses.extend(actual.difference(&upper).iter());
        Ok(ProductBoundaryReport {
            kind: p.kind,
            base,
            base_pair: (base_g, base_h),
            containments_hold: witnesses.is_empty(),
            upper_slack: upper.difference(&actual),
            actual_boundary: actual,
            lower_bound: lower,
            upper_bound: upper,
            witnesses,
        })
    }

    pub fn gx_report(&self, base_g: Vertex, base_h: Vertex) -> Result<ProductGxReport> {
        self.check_base(base_g, base_h)?;
        let p = &self.product;
        let (g, h) = (&p.factor_g, &p.factor_h);
        let gx_product = boundary(&p.graph, &self.dm, p.vertex(base_g, base_h))?.gx;
        let gx_first = boundary(g, &self.dm_g, base_g)?.gx;
        let gx_second = boundary(h, &self.dm_h, base_h)?.gx;
        let (order_first, order_second) = (g.order(), h.order());
        let (lower, upper) = match p.kind {
            ProductKind::Cartesian => (gx_first * gx_second, gx_first * gx_second),
            ProductKind::Lexicographic => (gx_second, gx_first * order_second + gx_second),
            ProductKind::Strong => (
                gx_first * gx_second,
                gx_first * order_second + order_first * gx_second,
            ),
        };
        Ok(ProductGxReport {
            kind: p.kind,
            base_pair: (base_g, base_h),
            gx_product,
            gx_first,
            gx_second,
            order_first,
            order_second,
            lower,
            upper,
            holds: lower <= gx_product && gx_product <= upper,
        })
    }
}

pub fn product_boundary_report(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    base_g: Vertex,
    base_h: Vertex,
) -> Result<ProductBoundaryReport> {
    ProductAnalysis::new(kind, g, h)?.boundary_report(base_g, base_h)
}

pub fn product_gx_report(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    base_g: Vertex,
    base_h: Vertex,
) -> Result<ProductGxReport> {
    ProductAnalysis::new(kind, g, h)?.gx_report(base_g, base_h)
}

use geodom::graph::numbered_graph;
use geodom::oracle::{min_x_geodominating_bruteforce, random_connected_graph, GraphGenSpec};
use geodom::product::edge_rule;
use geodom::*;
use proptest::prelude::*;

/// Random recursive tree plus an arbitrary extra edge subset: always connected.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<_> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            edges.extend(pairs.zip(extra).filter(|(_, on)| *on).map(|(e, _)| e));
            numbered_graph(n, &edges).unwrap()
        })
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Vertices on a shortest u-v path, found by enumerating every simple path.
fn interval_by_paths(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    fn walk(g: &Graph, at: usize, target: usize, path: &mut Vec<usize>, best: &mut (usize, Vec<bool>)) {
        if at == target {
            let len = path.len() - 1;
            if len < best.0 {
                *best = (len, vec![false; g.order()]);
            }
            if len == best.0 {
                for &w in path.iter() {
                    best.1[w] = true;
                }
            }
            return;
        }
        for &w in g.neighbors(at) {
            if !path.contains(&w) {
                path.push(w);
                walk(g, w, target, path, best);
                path.pop();
            }
        }
    }
    let mut best = (usize::MAX, vec![false; g.order()]);
    walk(g, u, v, &mut vec![u], &mut best);
    (0..g.order()).filter(|&w| best.1[w]).collect()
}

proptest! {
    #[test]
    fn all_pairs_matches_floyd_warshall(g in connected_graph(8)) {
        let dm = all_pairs(&g).unwrap();
        let fw = floyd_warshall(&g);
        for u in g.vertices() {
            prop_assert_eq!(dm.row(u), &fw[u][..]);
        }
    }

    #[test]
    fn distance_matrix_invariants(g in connected_graph(8)) {
        let dm = all_pairs(&g).unwrap();
        for u in g.vertices() {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in g.vertices() {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in g.vertices() {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
    }

    #[test]
    fn bfs_rows_satisfy_recurrence(g in connected_graph(8), s in 0usize..8) {
        let s = s % g.order();
        let row = bfs_distances(&g, s).unwrap();
        for v in g.vertices().filter(|&v| v != s) {
            let best = g.neighbors(v).iter().map(|&w| row[w]).min().unwrap();
            prop_assert_eq!(row[v], best + 1);
        }
    }

    #[test]
    fn intervals_match_path_enumeration(g in connected_graph(7)) {
        let dm = all_pairs(&g).unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                let i = interval(&g, &dm, u, v).unwrap();
                prop_assert!(i.contains(u) && i.contains(v));
                prop_assert_eq!(&i, &interval(&g, &dm, v, u).unwrap());
                prop_assert_eq!(i.as_slice(), &interval_by_paths(&g, u, v)[..]);
            }
        }
    }

    #[test]
    fn closure_is_monotone(g in connected_graph(8), a in any::<u8>(), b in any::<u8>()) {
        let n = g.order();
        let dm = all_pairs(&g).unwrap();
        let small = VertexSet::from_members(n, (0..n).filter(|&v| a >> v & 1 == 1 || v == 0)).unwrap();
        let big = VertexSet::from_members(n, small.iter().chain((0..n).filter(|&v| b >> v & 1 == 1))).unwrap();
        let cs = geodetic_closure(&g, &dm, &small).unwrap();
        let cb = geodetic_closure(&g, &dm, &big).unwrap();
        prop_assert!(small.is_subset(&cs));
        prop_assert!(cs.is_subset(&cb));
    }

    #[test]
    fn theorem_holds_for_every_subset(g in connected_graph(6)) {
        let n = g.order();
        let dm = all_pairs(&g).unwrap();
        for x in g.vertices() {
            let b = boundary(&g, &dm, x).unwrap().boundary;
            for mask in 0u32..1 << n {
                let s = VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap();
                let check = is_x_geodominating(&g, &dm, x, &s).unwrap();
                prop_assert_eq!(check.is_geodominating, b.is_subset(&s));
                prop_assert_eq!(check.is_geodominating, check.covered.is_full());
                if let Some(w) = check.witness_uncovered {
                    prop_assert!(!check.covered.contains(w));
                }
            }
        }
    }

    #[test]
    fn boundary_structure(g in connected_graph(9)) {
        let dm = all_pairs(&g).unwrap();
        let simplicial = g.simplicial_vertices();
        for x in g.vertices() {
            let b = boundary(&g, &dm, x).unwrap();
            prop_assert_eq!(b.gx, b.boundary.len());
            prop_assert!(!b.boundary.contains(x));
            let ecc = dm.eccentricity(x);
            for v in g.vertices().filter(|&v| dm.get(x, v) == ecc) {
                prop_assert!(b.boundary.contains(v));
            }
            for v in simplicial.iter().filter(|&v| v != x) {
                prop_assert!(b.boundary.contains(v));
            }
        }
    }

    #[test]
    fn oracle_agrees_with_boundary(g in connected_graph(8)) {
        let dm = all_pairs(&g).unwrap();
        for x in g.vertices() {
            let r = min_x_geodominating_bruteforce(&g, &dm, x).unwrap();
            prop_assert_eq!(r.minimum_sets, vec![gx_set(&g, &dm, x).unwrap()]);
        }
    }

    #[test]
    fn geodetic_heuristic_is_geodetic(g in connected_graph(9)) {
        let dm = all_pairs(&g).unwrap();
        let (_, k) = min_gx_vertex(&g, &dm).unwrap();
        let s = geodetic_from_boundary(&g, &dm).unwrap();
        prop_assert_eq!(s.len(), k + 1);
        prop_assert!(is_geodetic(&g, &dm, &s).unwrap());
    }

    #[test]
    fn product_edges_and_distances(g in connected_graph(5), h in connected_graph(5)) {
        let (dg, dh) = (all_pairs(&g).unwrap(), all_pairs(&h).unwrap());
        let mut edge_sets = Vec::new();
        for kind in ProductKind::ALL {
            let p = product(kind, &g, &h).unwrap();
            prop_assert_eq!(p.graph.order(), g.order() * h.order());
            let dm = all_pairs(&p.graph).unwrap();
            for u in p.graph.vertices() {
                for v in p.graph.vertices() {
                    prop_assert_eq!(p.graph.has_edge(u, v), u != v && edge_rule(kind, &g, &h, p.pair(u), p.pair(v)));
                    prop_assert_eq!(product_distance(kind, &dg, &dh, p.pair(u), p.pair(v)).unwrap(), dm.get(u, v));
                }
            }
            let mut edges: Vec<_> = p.graph.edges().map(|(u, v)| (p.pair(u), p.pair(v))).map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort();
            edge_sets.push(edges);
        }
        let (cart, lex, strong) = (&edge_sets[0], &edge_sets[1], &edge_sets[2]);
        prop_assert!(cart.iter().all(|e| strong.binary_search(e).is_ok()));
        prop_assert!(cart.iter().all(|e| lex.binary_search(e).is_ok()));
        prop_assert!(strong.iter().all(|e| lex.binary_search(e).is_ok()));
    }

    #[test]
    fn generator_is_deterministic_and_valid(n in 2usize..12, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let spec = GraphGenSpec::random(n, p, seed);
        let g = random_connected_graph(&spec).unwrap();
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.order(), n);
        prop_assert_eq!(Some(g), random_connected_graph(&spec).ok());
    }
}

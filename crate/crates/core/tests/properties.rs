use proptest::prelude::*;

use cfconn::generate::{all_connected, random_connected};
use cfconn::graph::EdgeKind;
use cfconn::io::{parse_graph, write_graph};
use cfconn::oracle::{oracle_rainbow_connected, oracle_scfc};
use cfconn::solve::{solve_cfc, solve_rc_small, solve_scfc};
use cfconn::verify::{verify_cfc_edge, verify_cfc_vertex, verify_scfc, verify_scfc_subset};
use cfconn::{EdgeColoring, Graph, PairSet, VertexColoring};

/// Connected graph on `2..=max_n` vertices with a density in `[0, 1]`.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, density, seed)| {
        let extra = n * (n - 1) / 2 - (n - 1);
        let m = n - 1 + (density * extra as f64).round() as usize;
        random_connected(n, m, seed).unwrap()
    })
}

/// Graph with a coloring of its edges using at most `k` colors.
fn colored(max_n: usize, k: u32) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    connected(max_n).prop_flat_map(move |g| {
        let m = g.m();
        (Just(g), prop::collection::vec(1..=k, m)).prop_map(move |(g, c)| (g, EdgeColoring::new(c, k).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bfs_distances_step_by_at_most_one(g in connected(12), root in 0usize..12) {
        let root = root % g.n();
        let d = g.bfs_distances(root, &[]).unwrap();
        for &(u, v) in g.edges() {
            let (a, b) = (d.get(u).unwrap(), d.get(v).unwrap());
            prop_assert!(a.abs_diff(b) <= 1);
        }
    }

    #[test]
    fn dfs_reaches_everything_iff_connected(n in 1usize..9, p in 0.0..=1.0f64, seed: u64) {
        let g = cfconn::generate::gnp(n, p, seed).unwrap();
        let reached = g.dfs_component(0, &[], &[]).unwrap();
        prop_assert_eq!(reached.len() == n, g.is_connected());
    }

    #[test]
    fn incident_edges_are_vertical(g in connected(10), u in 0usize..10) {
        let u = u % g.n();
        for &(_, e) in g.neighbors(u) {
            prop_assert_eq!(g.classify_edge(u, e).unwrap(), EdgeKind::Vertical);
        }
    }

    #[test]
    fn graph_text_round_trips(g in connected(10)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn verdicts_ignore_color_names((g, c) in colored(7, 3), perm in Just([1u32, 2, 3]).prop_shuffle()) {
        let r = c.relabeled(&perm).unwrap();
        prop_assert_eq!(verify_cfc_edge(&g, &c).unwrap().ok, verify_cfc_edge(&g, &r).unwrap().ok);
        prop_assert_eq!(verify_scfc(&g, &c).unwrap().ok, verify_scfc(&g, &r).unwrap().ok);
    }

    #[test]
    fn fresh_colors_keep_a_passing_coloring_passing((g, c) in colored(7, 2), e in 0usize..64) {
        // a color occurring once on a path still occurs once after splitting its class
        let e = e % g.m();
        let mut colors = c.colors().to_vec();
        colors[e] = 3;
        let split = EdgeColoring::new(colors, 3).unwrap();
        if verify_cfc_edge(&g, &c).unwrap().ok {
            prop_assert!(verify_cfc_edge(&g, &split).unwrap().ok);
        }
        if verify_scfc(&g, &c).unwrap().ok {
            prop_assert!(verify_scfc(&g, &split).unwrap().ok);
        }
    }

    #[test]
    fn subsets_are_consistent((g, c) in colored(7, 3), mask: u64) {
        let all = PairSet::all(g.n());
        let whole = verify_scfc(&g, &c).unwrap();
        prop_assert_eq!(&verify_scfc_subset(&g, &c, &all).unwrap(), &whole);
        let some: PairSet = all.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, p)| p).collect();
        let sub = verify_scfc_subset(&g, &c, &some).unwrap();
        if whole.ok {
            prop_assert!(sub.ok);
        }
        if let Some((u, v)) = sub.witness_pair {
            prop_assert!(some.contains(u, v));
            prop_assert!(!whole.ok);
        }
    }

    #[test]
    fn rainbow_colorings_always_pass(g in connected(12)) {
        prop_assert!(verify_cfc_edge(&g, &EdgeColoring::rainbow(g.m())).unwrap().ok);
        prop_assert!(verify_scfc(&g, &EdgeColoring::rainbow(g.m())).unwrap().ok);
        prop_assert!(verify_cfc_vertex(&g, &VertexColoring::rainbow(g.n())).unwrap().ok);
    }

    #[test]
    fn strong_verifier_matches_oracle((g, c) in colored(8, 3)) {
        prop_assert_eq!(verify_scfc(&g, &c).unwrap().ok, oracle_scfc(&g, &c).unwrap());
    }

    #[test]
    fn solver_values_ignore_vertex_names(g in connected(6), perm_seed: u64) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::new(g.n(), &edges).unwrap();
        prop_assert_eq!(solve_cfc(&g).unwrap().value, solve_cfc(&h).unwrap().value);
        prop_assert_eq!(solve_scfc(&g).unwrap().value, solve_scfc(&h).unwrap().value);
    }
}

#[test]
fn cut_vertices_match_recomputation() {
    for n in 2..=6 {
        for g in all_connected(n).unwrap() {
            let bd = g.cut_vertices_and_blocks().unwrap();
            for v in 0..n {
                let splits = g.component_count_without(Some(v)) > 1;
                assert_eq!(bd.cut_vertices.contains(&v), splits, "{g:?} vertex {v}");
            }
            let mut owner = vec![0; g.m()];
            for block in &bd.blocks {
                for &e in block {
                    owner[e] += 1;
                }
            }
            assert!(owner.iter().all(|&c| c == 1), "{g:?}");
        }
    }
}

#[test]
fn conflict_free_number_is_the_smallest() {
    for n in 2..=6 {
        for g in all_connected(n).unwrap() {
            let cfc = solve_cfc(&g).unwrap().value;
            let scfc = solve_scfc(&g).unwrap().value;
            let rc = solve_rc_small(&g).unwrap().value;
            assert!(cfc <= scfc && cfc <= rc, "{g:?}: {cfc} {scfc} {rc}");
        }
    }
}

/// Triangle with three pendants on one corner: strong needs 4 colors, rainbow needs 3,
/// so strong conflict-free and rainbow connection numbers are not ordered.
#[test]
fn strong_can_exceed_rainbow() {
    let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]).unwrap();
    let all = |k: u32| {
        (0..k.pow(g.m() as u32)).map(move |mut code| {
            let colors = (0..6).map(|_| { let c = code % k + 1; code /= k; c }).collect();
            EdgeColoring::new(colors, k).unwrap()
        })
    };
    assert!(all(3).all(|c| !oracle_scfc(&g, &c).unwrap()));
    assert!(all(4).any(|c| oracle_scfc(&g, &c).unwrap()));
    assert!(all(3).any(|c| oracle_rainbow_connected(&g, &c).unwrap()));
    assert_eq!((solve_scfc(&g).unwrap().value, solve_rc_small(&g).unwrap().value), (4, 3));
}

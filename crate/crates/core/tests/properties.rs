mod common;

use common::{bellman_ford, rng, small_graph};
use proptest::prelude::*;
use rand::Rng;
use vsdo_core::baseline::exact_ssrp;
use vsdo_core::dimacs::{parse_dimacs, write_dimacs};
use vsdo_core::graphcore::{build_spt, centroid_bipartition, SpTree};
use vsdo_core::pathfault::{build_sz_table, DpOracle};
use vsdo_core::progdijk::run_progressive;
use vsdo_core::{BuildConfig, Digraph, Distance, SzProvider, Vsdo};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        let edge = (0..n, 0..n, 1u64..=20);
        prop::collection::vec(edge, 0..4 * n).prop_map(move |mut edges| {
            // backbone so the source reaches something
            edges.extend((1..n).map(|v| (v / 2, v, 7)));
            Digraph::new(n, edges).unwrap()
        })
    })
}

fn naive_is_ancestor(t: &SpTree, a: usize, b: usize) -> bool {
    let mut cur = Some(b);
    while let Some(v) = cur {
        if v == a {
            return true;
        }
        cur = t.parent(v);
    }
    false
}

fn check_sandwich(g: &Digraph, s: usize, eps: f64, provider: SzProvider) {
    let o = Vsdo::build(g, s, eps, provider).unwrap();
    let exact = exact_ssrp(g, s).unwrap();
    for x in (0..g.n()).filter(|&x| x != s) {
        for t in 0..g.n() {
            let got = o.query(x, t).unwrap();
            let want = exact.get(x, t);
            assert!(
                got.within_factor(want, 1.0 + eps),
                "x={x} t={t} got {got} want {want}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich_small(g in arb_graph(40), eps in prop::sample::select(vec![1.0, 0.5, 0.1])) {
        check_sandwich(&g, 0, eps, SzProvider::Exact);
    }

    #[test]
    fn sandwich_fast_provider(g in arb_graph(40), eps in prop::sample::select(vec![1.0, 0.3])) {
        check_sandwich(&g, 0, eps, SzProvider::Fast);
    }

    #[test]
    fn round_trip_answers(g in arb_graph(30)) {
        let o = Vsdo::build(&g, 0, 0.5, SzProvider::Exact).unwrap();
        let back = Vsdo::from_bytes(&o.to_bytes()).unwrap();
        for x in 1..g.n() {
            for t in 0..g.n() {
                prop_assert_eq!(o.query(x, t).unwrap(), back.query(x, t).unwrap());
            }
        }
    }

    #[test]
    fn ancestor_matches_parent_walk(g in arb_graph(30)) {
        let t = build_spt(&g, 0).unwrap();
        for a in 0..g.n() {
            for b in 0..g.n() {
                if t.is_covered(a) && t.is_covered(b) {
                    prop_assert_eq!(t.is_ancestor(a, b), naive_is_ancestor(&t, a, b));
                }
            }
        }
    }

    #[test]
    fn spt_distances_match_bellman_ford(g in arb_graph(30)) {
        let t = build_spt(&g, 0).unwrap();
        prop_assert_eq!(t.dists().to_vec(), bellman_ford(&g, 0, None));
    }

    #[test]
    fn centroid_split_invariants(g in arb_graph(60)) {
        let tree = build_spt(&g, 0).unwrap();
        let k = tree.covered_count();
        prop_assume!(k > 6);
        let split = centroid_bipartition(&tree).unwrap();
        let z = split.centroid();
        let covered: Vec<_> = (0..g.n()).filter(|&v| tree.is_covered(v)).collect();
        // sides share exactly z
        for &v in &covered {
            prop_assert!(split.in_t1(v) || split.in_t2(v));
            prop_assert_eq!(split.in_t1(v) && split.in_t2(v), v == z);
        }
        // every tree edge lies in exactly one side
        for &v in &covered {
            if let Some(p) = tree.parent(v) {
                let e1 = split.in_t1(p) && split.in_t1(v);
                let e2 = split.in_t2(p) && split.in_t2(v);
                prop_assert!(e1 ^ e2);
            }
        }
        prop_assert!(split.in_t1(tree.root()));
        prop_assert!(3 * split.t1_size() <= 2 * k + 1 && 3 * split.t2_size() <= 2 * k + 1);
        prop_assert!(3 * split.t1_size() >= k && 3 * split.t2_size() >= k);
        prop_assert_eq!(split.t1_size() + split.t2_size(), k + 1);
        let path = split.root_path();
        prop_assert_eq!(path.to_vec(), tree.path_from_root(z));
        for w in path.windows(2) {
            prop_assert!(tree.dist(w[0]) < tree.dist(w[1]));
        }
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(30)) {
        let mut buf = Vec::new();
        write_dimacs(&g, &mut buf).unwrap();
        let back = parse_dimacs(buf.as_slice()).unwrap();
        let mut a = g.edges().to_vec();
        let mut b = back.edges().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert_eq!(back.n(), g.n());
    }
}

#[test]
fn fast_provider_tracks_exact_within_eps1() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 40 {
        let n = r.gen_range(10..80);
        let g = small_graph(&mut r, n, 3 * n, 100);
        let tree = build_spt(&g, 0).unwrap();
        let Ok(split) = centroid_bipartition(&tree) else {
            continue;
        };
        let cfg = BuildConfig::new(n, 0.5, SzProvider::Fast).unwrap();
        let table = run_progressive(&g, &tree, &split, cfg.eps2);
        let dp = DpOracle::new(table, split.root_path().to_vec(), n);
        let exact = build_sz_table(&g, &tree, &split, SzProvider::Exact, &dp).unwrap();
        let fast = build_sz_table(&g, &tree, &split, SzProvider::Fast, &dp).unwrap();
        for f in 1..split.path_len() {
            assert!(
                fast.get(f).within_factor(exact.get(f), 1.0 + cfg.eps1),
                "f={f}"
            );
        }
        checked += 1;
    }
}

#[test]
fn unknown_vertices_and_source_fault_are_errors() {
    let g = Digraph::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
    let o = Vsdo::build(&g, 0, 1.0, SzProvider::Exact).unwrap();
    assert!(o.query(0, 2).is_err());
    assert!(o.query(5, 2).is_err());
    assert!(o.query(1, 9).is_err());
    assert_eq!(o.query(1, 2).unwrap(), Distance::Unreachable);
}

#[test]
fn build_rejects_bad_input() {
    let g = Digraph::new(3, [(0, 1, 0)]).unwrap();
    assert!(Vsdo::build(&g, 0, 0.5, SzProvider::Exact).is_err());
    let g = Digraph::new(3, [(0, 1, 1)]).unwrap();
    assert!(Vsdo::build(&g, 0, 0.0, SzProvider::Exact).is_err());
    assert!(Vsdo::build(&g, 3, 0.5, SzProvider::Exact).is_err());
    let g = Digraph::new(3, [(0, 1, u64::MAX / 2)]).unwrap();
    assert!(Vsdo::build(&g, 0, 0.5, SzProvider::Exact).is_err());
}

//! Property tests across modules, checked against the oracles in `common`.

mod common;

use proptest::prelude::*;
use proptest::sample::{select, subsequence};

use common::*;
use fulkerson_core::ffamily::{covering_from_ffamily, find_ffamily, verify_ffamily};
use fulkerson_core::fulkerson::{
    are_compatible, covering_from_compatible, find_fulkerson_covering, fr_triple_from_matchings, t_partition,
};
use fulkerson_core::generators::{self, dot_product};
use fulkerson_core::matchcolor::{enumerate_perfect_matchings, three_edge_coloring_within};
use fulkerson_core::{
    Budget, CubicGraph, DotProductSpec, EdgeId, FRTriple, Matching, PerfectMatching, SearchOutcome, Strategy as Search,
};

fn named(i: usize) -> (String, CubicGraph) {
    match i {
        0 => ("K4".into(), generators::k4()),
        1 => ("K3,3".into(), generators::k33()),
        2 => ("Q3".into(), generators::cube_q3()),
        3 => ("Petersen".into(), generators::petersen()),
        4 => ("J3".into(), generators::flower_snark(3).unwrap()),
        5 => ("J5".into(), generators::flower_snark(5).unwrap()),
        6 => ("ten-vertex".into(), generators::ten_vertex_c5_example()),
        _ => ("doubled(8)".into(), generators::doubled_matching_cycle(8).unwrap()),
    }
}

/// `g` with vertices renamed by `vp` and edges listed in the order `ep`.
fn relabel(g: &CubicGraph, vp: &[usize], ep: &[EdgeId]) -> CubicGraph {
    let edges = ep.iter().map(|&e| {
        let (u, v) = g.endpoints(e);
        (vp[u], vp[v])
    });
    CubicGraph::from_edges(g.vertex_count(), edges).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn graph_and_perms() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0usize..8).prop_flat_map(|i| {
        let g = named(i).1;
        (Just(i), permutation(g.vertex_count()), permutation(g.edge_count()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matching_count_is_relabelling_invariant((i, vp, ep) in graph_and_perms()) {
        let (name, g) = named(i);
        let h = relabel(&g, &vp, &ep);
        let a = enumerate_perfect_matchings(&g, None).matchings.len();
        let b = enumerate_perfect_matchings(&h, None).matchings.len();
        prop_assert_eq!(a, b, "{}", name);
        prop_assert_eq!(b, brute_force_perfect_matchings(&h).len());
    }

    #[test]
    fn coverings_found_after_relabelling_verify((i, vp, ep) in graph_and_perms()) {
        let (name, g) = named(i);
        let h = relabel(&g, &vp, &ep);
        for s in [Search::Exact2Cover, Search::A1A2, Search::Auto] {
            let r = find_fulkerson_covering(&h, s, &Budget::unlimited());
            let f = r.found();
            prop_assert!(f.is_some(), "{} {}", name, s);
            let f = f.unwrap();
            prop_assert!(is_fulkerson_covering(&h, &covering_ids(&f)), "{} {}", name, s);
            let (t, u) = f.split().unwrap();
            prop_assert!(are_compatible(&h, &t, &u).unwrap());
            let back = covering_from_compatible(&h, &t, &u).unwrap();
            prop_assert!(is_fulkerson_covering(&h, &covering_ids(&back)));
        }
    }

    #[test]
    fn colouring_search_agrees_with_oracle((i, vp, ep) in graph_and_perms()) {
        let (_, g) = named(i);
        let h = relabel(&g, &vp, &ep);
        let lib = three_edge_coloring_within(&h, &Budget::unlimited());
        prop_assert_eq!(lib.is_found(), is_three_edge_colourable(&h));
        prop_assert!(!matches!(lib, SearchOutcome::Unknown));
    }

    #[test]
    fn any_three_matchings_of_j5(pick in subsequence((0usize..76).collect::<Vec<_>>(), 3)) {
        let j5 = generators::flower_snark(5).unwrap();
        let pms = enumerate_perfect_matchings(&j5, None).matchings;
        prop_assume!(pick.iter().all(|&k| k < pms.len()));
        let sets: Vec<Vec<EdgeId>> = pick.iter().map(|&k| ids(&pms[k])).collect();
        let [t0, t1, t2] = t_classes(&j5, &sets);
        let t = FRTriple::new(pms[pick[0]].clone(), pms[pick[1]].clone(), pms[pick[2]].clone());
        let oracle_fr = t0.len() + t1.len() + t2.len() == j5.edge_count();
        prop_assert_eq!(t.is_ok(), oracle_fr);
        if let Ok(t) = t {
            prop_assert!(is_matching(&j5, &t0) && is_matching(&j5, &t2));
            prop_assert!(t0.iter().all(|e| !t2.contains(e)));
            let p = t_partition(&j5, &t).unwrap();
            let a1 = Matching::new(&j5, p.t2.clone()).unwrap();
            let a2 = Matching::new(&j5, p.t0.clone()).unwrap();
            let r = fr_triple_from_matchings(&j5, &a1, &a2).unwrap();
            prop_assert_eq!(t_partition(&j5, &r).unwrap(), p);
        }
    }

    #[test]
    fn small_budgets_never_lie(nodes in 1u64..2_000, i in 0usize..8) {
        let (name, g) = named(i);
        let full = find_fulkerson_covering(&g, Search::Exact2Cover, &Budget::unlimited()).is_found();
        match find_fulkerson_covering(&g, Search::Exact2Cover, &Budget::new(nodes)) {
            SearchOutcome::Found(f) => prop_assert!(is_fulkerson_covering(&g, &covering_ids(&f))),
            SearchOutcome::NotFound => prop_assert!(!full, "{}", name),
            SearchOutcome::Unknown => {}
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn petersen_dot_products_stay_snarks(k in 0usize..4_500) {
        let p = generators::petersen();
        let specs = DotProductSpec::enumerate(&p, &p);
        let s = specs[k % specs.len()];
        let d = dot_product(&p, &p, &s).unwrap();
        prop_assert_eq!(d.graph.vertex_count(), 18);
        prop_assert!(d.graph.is_bridgeless().unwrap());
        prop_assert!(!is_three_edge_colourable(&d.graph), "{:?}", s);
    }

    #[test]
    fn families_for_each_matching_give_proper_coverings(g in select(vec![3usize, 5, 6]), k in 0usize..100) {
        let (name, g) = named(g);
        let pms: Vec<PerfectMatching> = enumerate_perfect_matchings(&g, None).matchings;
        let m = &pms[k % pms.len()];
        if let SearchOutcome::Found(fam) = find_ffamily(&g, Some(m), &Budget::unlimited()) {
            prop_assert_eq!(fam.m(), m);
            prop_assert!(verify_ffamily(&g, &fam).unwrap().is_valid(), "{}", name);
            let f = covering_from_ffamily(&g, &fam).unwrap();
            let sets = covering_ids(&f);
            prop_assert!(is_fulkerson_covering(&g, &sets));
            prop_assert!(pairwise_distinct(&sets));
        }
    }
}

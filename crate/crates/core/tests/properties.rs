mod common;

use common::*;
use proptest::prelude::*;
use ryser::bounds::{kwise_bound, upper_bound};
use ryser::cli::InstanceFile;
use ryser::covers::{general_cover, kwise_cover, trivial_cover};
use ryser::generators::{blowup, h_r_ell, random_rt_graph, RandomOptions};
use ryser::solvers::{nu_exact, tau_s_exact, SolveOptions, SolveStatus};
use ryser::{Error, PartitionedHypergraph, VertexSet};

const BUDGET: u64 = 5_000_000;

fn instance(r: usize, t: usize, target: usize, seed: u64, part_size: usize) -> PartitionedHypergraph {
    random_rt_graph(r, t, target, seed, RandomOptions { part_size: Some(part_size) })
        .expect("parameters are in range")
        .0
}

/// `(r, t, hypergraph)` with `1 <= t <= r <= 6` and at most 14 edges.
fn rt_graph() -> impl Strategy<Value = (usize, usize, PartitionedHypergraph)> {
    (2usize..=6)
        .prop_flat_map(|r| (Just(r), 1..=r, 2usize..=14, any::<u64>(), 2usize..=4))
        .prop_map(|(r, t, target, seed, size)| (r, t, instance(r, t, target, seed, size)))
}

fn exact_tau(h: &PartitionedHypergraph, s: usize) -> usize {
    let sol = tau_s_exact(h, s, SolveOptions::with_budget(BUDGET)).unwrap();
    assert_eq!(sol.status, SolveStatus::Exact);
    sol.value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn level_construction_is_valid(r in 1usize..=8, ell in 0usize..=3) {
        prop_assume!(2 * ell < r);
        let (h, meta) = h_r_ell(r, ell).unwrap();
        prop_assert!(h.validate().is_empty());
        prop_assert_eq!(meta.guaranteed_t, r - 2 * ell);
        if h.edge_count() >= 2 {
            prop_assert!(h.min_pairwise_intersection().unwrap().0 >= r - 2 * ell);
        }
    }

    #[test]
    fn random_instances_meet_their_guarantee((_r, t, h) in rt_graph()) {
        prop_assert!(h.validate().is_empty());
        prop_assert!(h.is_t_intersecting(t));
        if h.edge_count() >= 2 {
            prop_assert!(h.min_pairwise_intersection().unwrap().0 >= t);
            prop_assert_eq!(h.min_pairwise_intersection().unwrap().0, brute_min_pairwise(&h));
        }
    }

    #[test]
    fn same_seed_same_instance(r in 2usize..=6, target in 1usize..=20, seed in any::<u64>()) {
        let a = instance(r, 1, target, seed, 3);
        let b = instance(r, 1, target, seed, 3);
        prop_assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn intersection_size_is_symmetric((_r, _t, h) in rt_graph(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let m = h.edge_count();
        let (e, f) = (i.index(m), j.index(m));
        prop_assert_eq!(h.intersection_size(e, f).unwrap(), h.intersection_size(f, e).unwrap());
        if e == f {
            prop_assert_eq!(h.intersection_size(e, f).unwrap(), h.r());
        }
    }

    #[test]
    fn kwise_minimum_is_nonincreasing_in_k((_r, _t, h) in rt_graph()) {
        let m = h.edge_count().min(5);
        let mut last = usize::MAX;
        for k in 2..=m {
            let value = h.kwise_min_intersection(k).unwrap();
            prop_assert_eq!(value, brute_kwise_min(&h, k));
            prop_assert_eq!(value, h.kwise_min_intersection_parallel(k).unwrap());
            prop_assert!(value <= last);
            last = value;
        }
    }

    #[test]
    fn delta_matches_per_part_oracle((_r, _t, h) in rt_graph(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3), drop in prop::collection::vec(any::<prop::sample::Index>(), 0..=4)) {
        let es: Vec<usize> = picks.iter().map(|i| i.index(h.edge_count())).collect();
        let cover: Vec<usize> = drop.iter().map(|i| i.index(h.vertex_count())).collect();
        let set = VertexSet::from_ids(h.vertex_count(), cover.iter().copied());
        let exhausted = |r: &ryser::Result<usize>| matches!(r, Err(Error::PartExhausted { .. }));
        let ours = h.delta_h(&set, &es);
        match brute_delta(&h, &cover, &es, 4096) {
            Some(expected) => prop_assert_eq!(ours.unwrap(), expected),
            None => prop_assert!(exhausted(&ours)),
        }
    }

    #[test]
    fn delta_is_monotone_in_the_cover((_r, _t, h) in rt_graph(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3), grow in prop::collection::vec(any::<prop::sample::Index>(), 1..=6)) {
        let es: Vec<usize> = picks.iter().map(|i| i.index(h.edge_count())).collect();
        let mut set = h.empty_set();
        let mut last = h.delta_h(&set, &es).unwrap();
        for g in grow {
            set.insert(g.index(h.vertex_count()));
            match h.delta_h(&set, &es) {
                Ok(d) => {
                    prop_assert!(d <= last);
                    last = d;
                }
                Err(Error::PartExhausted { .. }) => break,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn degree_sum_check_never_returns_an_invalid_cover((_r, t, h) in rt_graph(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3), chosen in prop::collection::vec(any::<prop::sample::Index>(), 0..=8)) {
        let es: Vec<usize> = picks.iter().map(|i| i.index(h.edge_count())).collect();
        let set = VertexSet::from_ids(h.vertex_count(), chosen.iter().map(|i| i.index(h.vertex_count())));
        match h.observation_cover_check(t, &set, &es) {
            Ok(Some(cert)) => prop_assert!(cert.is_valid_for(&h)),
            Ok(None) | Err(Error::PartExhausted { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn dual_transposes_incidence((_r, _t, h) in rt_graph()) {
        let d = h.dual();
        prop_assert_eq!(d.vertex_count(), h.edge_count());
        let used = h.degrees().iter().filter(|&&x| x > 0).count();
        prop_assert_eq!(d.edge_count(), used);
        let incidences: usize = d.edges().iter().map(Vec::len).sum();
        prop_assert_eq!(incidences, h.edge_count() * h.r());
        prop_assert!(d.degrees().iter().all(|&x| x == h.r()));
    }

    #[test]
    fn blowup_multiplies_intersections((_r, _t, h) in rt_graph(), factor in 1usize..=3) {
        let b = blowup(&h, factor).unwrap();
        prop_assert_eq!(b.r(), h.r() * factor);
        prop_assert_eq!(b.edge_count(), h.edge_count());
        for e in 0..h.edge_count() {
            for f in e..h.edge_count() {
                prop_assert_eq!(b.intersection_size(e, f).unwrap(), factor * h.intersection_size(e, f).unwrap());
            }
        }
    }

    #[test]
    fn canonical_json_round_trips((_r, _t, h) in rt_graph()) {
        let file = InstanceFile::from_hypergraph(&h, None);
        let text = file.to_canonical_json();
        let back = InstanceFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_canonical_json(), text);
        let (loaded, canonical) = (back.to_hypergraph().unwrap(), h.canonical());
        prop_assert_eq!(loaded.edges(), canonical.edges());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exact_values_match_brute_force((r, _t, h) in rt_graph()) {
        prop_assume!(h.vertex_count() <= 18);
        for s in 1..=r.min(2) {
            prop_assert_eq!(exact_tau(&h, s), brute_tau_s(&h, s));
        }
        let nu = nu_exact(&h, SolveOptions::with_budget(BUDGET)).unwrap();
        prop_assert_eq!(nu.value, brute_nu(&h));
    }

    #[test]
    fn tau_is_monotone_in_s((r, _t, h) in rt_graph()) {
        let mut last = 0;
        for s in 1..=r {
            let value = exact_tau(&h, s);
            prop_assert!(value >= last);
            last = value;
        }
    }

    #[test]
    fn bipartite_graphs_satisfy_konig(size in 2usize..=5, target in 1usize..=12, seed in any::<u64>()) {
        let h = instance(2, 0, target, seed, size);
        let nu = nu_exact(&h, SolveOptions::with_budget(BUDGET)).unwrap();
        prop_assert_eq!(nu.status, SolveStatus::Exact);
        prop_assert_eq!(exact_tau(&h, 1), nu.value);
    }

    #[test]
    fn parallel_search_agrees_with_serial((r, _t, h) in rt_graph(), s in 1usize..=2) {
        prop_assume!(s <= r);
        let serial = tau_s_exact(&h, s, SolveOptions::with_budget(BUDGET)).unwrap();
        let parallel = tau_s_exact(&h, s, SolveOptions { parallel: true, ..SolveOptions::with_budget(BUDGET) }).unwrap();
        prop_assert_eq!(serial.value, parallel.value);
        prop_assert_eq!(serial.status, parallel.status);
        prop_assert!(parallel.witness.is_valid_for(&h));
    }

    #[test]
    fn certificates_validate_and_respect_bounds((r, t, h) in rt_graph()) {
        let tau = exact_tau(&h, 1);
        let trivial = trivial_cover(&h, t).unwrap();
        let general = general_cover(&h, t).unwrap();
        for cert in [&trivial, &general] {
            prop_assert!(cert.is_valid_for(&h));
            let ids: Vec<usize> = cert.vertices.iter().map(|&v| h.vertex_id(v)).collect();
            prop_assert!(covers(&h, &ids, 1));
            prop_assert!(tau <= cert.size());
        }
        prop_assert!(general.size() <= trivial.size());
        if t < r {
            prop_assert!(general.size() as i64 <= upper_bound(r as i64, t as i64).unwrap().value);
        }
    }

    #[test]
    fn kwise_cover_respects_its_bound((r, _t, h) in rt_graph(), k in 3usize..=4) {
        let m = h.edge_count().min(k);
        let kt = if m >= 2 { h.kwise_min_intersection(m).unwrap() } else { r };
        prop_assume!(kt >= 1 && m == k);
        let cert = kwise_cover(&h, k, kt).unwrap();
        prop_assert!(cert.is_valid_for(&h));
        let bound = kwise_bound(r as i64, kt as i64, k as i64).unwrap().value;
        prop_assert!(cert.size() as i64 <= bound);
    }
}

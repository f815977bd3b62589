//! Documented example values, each checked against a brute-force oracle or
//! plain arithmetic.

mod common;

use common::*;
use itertools::Itertools;
use num_rational::Ratio;
use ryser::bounds::{
    asymptotics_csv, asymptotics_grid, asymptotics_report, conjecture_status, degree_bound, kwise_bound,
    lower_bound, regular_bound, scover_bounds, strict_bound, upper_bound, upper_bound_cases, BoundKind,
    BoundSource, ConjectureStatus,
};
use ryser::covers::{
    general_cover, kwise_cover, small_r_cover, three_edge_pipeline_cover, trivial_cover, two_edge_cover,
    two_edge_dichotomy_check,
};
use ryser::generators::{
    affine_lines, affine_lines_dual, blowup, complete_partite, delete_parts, h_r_ell, projective_plane,
    random_rt_graph, shared_vertex_extension, truncated_projective_plane, RandomOptions,
};
use ryser::solvers::{is_2_design, is_resolvable, nu_exact, tau_s_exact, SolveOptions, SolveStatus};
use ryser::{GeneralHypergraph, PartitionedHypergraph, Provenance, Violation};

fn tau(h: &PartitionedHypergraph, s: usize) -> usize {
    let sol = tau_s_exact(h, s, SolveOptions::default()).unwrap();
    assert_eq!(sol.status, SolveStatus::Exact);
    assert!(sol.witness.is_valid_for(h));
    sol.value
}

fn tpp_blowup(q: usize, t: usize) -> PartitionedHypergraph {
    blowup(&truncated_projective_plane(q).unwrap().0, t).unwrap()
}

fn hrl(r: usize, ell: usize) -> PartitionedHypergraph {
    h_r_ell(r, ell).unwrap().0
}

#[test]
fn validation_reports_each_defect() {
    assert!(hrl(5, 1).validate().is_empty());
    let out_of_range = ryser::hypergraph::validate_parts(&[2, 2], &[vec![0, 2]]);
    assert_eq!(out_of_range.len(), 1);
    assert!(matches!(out_of_range[0], Violation::OutOfRange { .. }));
    let duplicate = ryser::hypergraph::validate_parts(&[2, 2], &[vec![0, 1], vec![0, 1]]);
    assert_eq!(duplicate.len(), 1);
    assert!(matches!(duplicate[0], Violation::DuplicateEdge { .. }));
}

#[test]
fn pairwise_intersections() {
    let h = hrl(5, 1);
    assert_eq!(h.intersection_size(0, 0).unwrap(), 5);
    assert_eq!(h.intersection_size(0, 1).unwrap(), 3);
    assert_eq!(brute_min_pairwise(&h), 3);
    let b = tpp_blowup(2, 2);
    assert_eq!(b.intersection_size(0, 1).unwrap(), 2);
    assert_eq!(hrl(6, 2).min_pairwise_intersection().unwrap().0, 2);
    assert_eq!(brute_min_pairwise(&hrl(6, 2)), 2);
    assert_eq!(tpp_blowup(3, 2).min_pairwise_intersection().unwrap().0, 2);
    let single = PartitionedHypergraph::new(vec![2; 3], vec![vec![0, 0, 0]]).unwrap();
    assert!(single.min_pairwise_intersection().is_err());
}

#[test]
fn kwise_intersections() {
    assert_eq!(hrl(7, 2).kwise_min_intersection(3).unwrap(), 1);
    assert_eq!(brute_kwise_min(&hrl(7, 2), 3), 1);
    assert_eq!(hrl(6, 2).kwise_min_intersection(3).unwrap(), 0);
    assert_eq!(brute_kwise_min(&hrl(6, 2), 3), 0);
    for h in [hrl(5, 1), tpp_blowup(2, 2)] {
        assert_eq!(h.kwise_min_intersection(2).unwrap(), h.min_pairwise_intersection().unwrap().0);
    }
}

#[test]
fn strict_intersection() {
    assert_eq!(tpp_blowup(2, 2).is_strictly_intersecting(), Some(2));
    assert_eq!(hrl(6, 2).is_strictly_intersecting(), None);
    let pair = PartitionedHypergraph::new(vec![2; 4], vec![vec![0, 0, 0, 0], vec![0, 1, 1, 0]]).unwrap();
    assert_eq!(pair.is_strictly_intersecting(), Some(2));
    for q in [2, 3] {
        assert_eq!(truncated_projective_plane(q).unwrap().0.is_strictly_intersecting(), Some(1));
    }
}

#[test]
fn degree_profiles() {
    let p = tpp_blowup(2, 2).degree_profile();
    assert_eq!((p.min, p.max, p.regular), (2, 2, true));
    let h = hrl(5, 1);
    let p = h.degree_profile();
    assert_eq!((p.min, p.max, p.regular), (0, 4, false));
    // Row 0 of part j lies in every edge whose level-0 set contains j.
    let row0: Vec<usize> = (0..5).map(|j| h.edges().iter().filter(|e| e[j] == 0).count()).collect();
    assert_eq!(row0, vec![4; 5]);
}

#[test]
fn delta_examples() {
    let h = hrl(6, 2);
    let empty = h.empty_set();
    assert_eq!(h.delta_h(&empty, &[0]).unwrap(), 6);
    for (e, f) in (0..h.edge_count()).tuple_combinations().take(30) {
        let expected = 6 + h.intersection_size(e, f).unwrap();
        assert_eq!(h.delta_h(&empty, &[e, f]).unwrap(), expected);
        assert_eq!(brute_delta(&h, &[], &[e, f], 1 << 20), Some(expected));
    }
}

#[test]
fn two_edge_examples() {
    let h = hrl(5, 1);
    let (cert, trace) = two_edge_cover(&h, 3, 0, 1).unwrap();
    assert_eq!((trace.case, cert.size()), (1, 2));
    assert!(cert.is_valid_for(&h));
    assert_eq!(tau(&h, 1), 2);

    let b = tpp_blowup(2, 2);
    let (cert, trace) = two_edge_cover(&b, 2, 0, 1).unwrap();
    assert_eq!((trace.case, cert.size()), (2, 4));
    assert!(cert.is_valid_for(&b));
    let ids: Vec<usize> = cert.vertices.iter().map(|&v| b.vertex_id(v)).collect();
    // Either some part is used up or every remaining transversal is short.
    assert!(brute_delta(&b, &ids, &[0, 1], 1 << 20).is_none_or(|d| d <= 3));
    assert_eq!(tau(&b, 1), 2);

    assert!(two_edge_cover(&b, 2, 1, 1).is_err());
}

#[test]
fn degree_sum_check_examples() {
    let h = hrl(5, 1);
    assert!(h.observation_cover_check(1, &h.empty_set(), &[0]).unwrap().is_none());
    let (cert, _) = two_edge_cover(&h, 3, 0, 1).unwrap();
    let set = cert.to_set(&h);
    let found = h.observation_cover_check(3, &set, &[0, 1]).unwrap().expect("delta is at most 2t-1");
    assert!(found.is_valid_for(&h));
    assert_eq!(found.provenance, Provenance::DegreeSum);
}

#[test]
fn dual_and_designs() {
    let b = tpp_blowup(2, 2);
    let d = b.dual();
    assert_eq!(d.vertex_count(), 4);
    let cod = d.codegrees();
    for (x, y) in (0..4).tuple_combinations() {
        assert_eq!(cod[x * 4 + y], 2);
    }
    assert!(is_2_design(&d, 2).is_design);

    let ag = affine_lines(3, 2).unwrap().design;
    let check = is_2_design(&ag, 1);
    assert!(check.is_design);
    assert_eq!((check.v, check.block_size), (9, Some(3)));
    let again = ag.dual().dual();
    assert_eq!(again.sorted_edges(), ag.sorted_edges());

    let uneven = GeneralHypergraph::new(3, vec![vec![0, 1], vec![0, 1], vec![1, 2]]).unwrap();
    assert!(!is_2_design(&uneven, 1).is_design);
}

#[test]
fn resolvability() {
    for (q, classes) in [(2, 3), (3, 4)] {
        let ag = affine_lines(q, 2).unwrap().design;
        let found = is_resolvable(&ag, SolveOptions::default()).unwrap().expect("affine planes are resolvable");
        assert_eq!(found.len(), classes);
        let mut seen = vec![false; ag.edge_count()];
        for class in &found {
            let mut hit = vec![0; ag.vertex_count()];
            for &e in class {
                assert!(!std::mem::replace(&mut seen[e], true));
                ag.edges()[e].iter().for_each(|&v| hit[v] += 1);
            }
            assert!(hit.iter().all(|&c| c == 1));
        }
        assert!(seen.iter().all(|&s| s));
    }
    let fano = projective_plane(2).unwrap();
    assert_eq!((fano.vertex_count(), fano.edge_count()), (7, 7));
    assert_eq!(is_resolvable(&fano, SolveOptions::default()).unwrap(), None);
}

#[test]
fn level_construction_examples() {
    let (h, meta) = h_r_ell(5, 1).unwrap();
    assert_eq!(h.part_sizes(), &[6; 5]);
    assert_eq!(h.edge_count(), 5);
    assert_eq!(meta.claimed_tau, Some(2));
    let single = hrl(4, 0);
    assert_eq!(single.edge_count(), 1);
    assert_eq!(tau(&single, 1), 1);
    assert_eq!(hrl(6, 2).edge_count(), 15);
    assert_eq!(tau(&hrl(6, 2), 1), 3);
}

#[test]
fn projective_examples() {
    let b = tpp_blowup(2, 2);
    assert_eq!((b.r(), b.edge_count()), (6, 4));
    assert!(b.degree_profile().regular);
    assert_eq!(b.min_pairwise_intersection().unwrap().0, 2);
    for (q, r, m, t) in [(2, 3, 4, 2), (3, 4, 9, 3)] {
        let (h, meta) = truncated_projective_plane(q).unwrap();
        assert_eq!((h.r(), h.edge_count()), (r, m));
        assert!(h.part_sizes().iter().all(|&s| s == q));
        assert_eq!(tau(&h, 1), t);
        assert_eq!(brute_tau_s(&h, 1), t);
        assert_eq!(meta.claimed_tau, Some(q));
    }
}

#[test]
fn affine_dual_examples() {
    let (small, _) = affine_lines_dual(2, 2).unwrap();
    let (tp, _) = truncated_projective_plane(2).unwrap();
    assert_eq!(small.r(), tp.r());
    assert_eq!(small.edge_count(), tp.edge_count());
    let sorted_degrees = |h: &PartitionedHypergraph| h.degrees().into_iter().sorted().collect_vec();
    assert_eq!(sorted_degrees(&small), sorted_degrees(&tp));
    assert_eq!(small.is_strictly_intersecting(), tp.is_strictly_intersecting());

    let (h, _) = affine_lines_dual(2, 3).unwrap();
    assert_eq!((h.r(), h.edge_count()), (7, 8));
    let p = h.degree_profile();
    assert_eq!((p.min, p.max, p.regular), (2, 2, true));
    assert_eq!(h.is_strictly_intersecting(), Some(1));
    let value = tau(&h, 1);
    assert_eq!(value, brute_tau_s(&h, 1));
    assert!(value <= 4);
    assert_eq!(regular_bound(7, 1, 2).unwrap().value, 4);
    assert_eq!(degree_bound(7, 1, 2, 2).unwrap().value, 4);
}

#[test]
fn complete_partite_examples() {
    let h = complete_partite(&[1, 1, 2, 2]).unwrap();
    assert_eq!(h.min_pairwise_intersection().unwrap().0, 2);
    assert_eq!(tau(&h, 3), 4);
    assert_eq!(brute_tau_s(&h, 3), 4);
    assert_eq!(complete_partite(&[1, 1, 1]).unwrap().edge_count(), 1);
    let h = complete_partite(&[1, 1, 1, 2]).unwrap();
    assert_eq!(h.min_pairwise_intersection().unwrap().0, 3);
    let nu = nu_exact(&complete_partite(&[2, 2]).unwrap(), SolveOptions::default()).unwrap();
    assert_eq!(nu.value, 2);
}

#[test]
fn extension_examples() {
    let h = hrl(5, 1);
    for a in 1..=2 {
        let ext = shared_vertex_extension(&h, a).unwrap();
        assert_eq!(ext.r(), 5 + a);
        assert_eq!(ext.min_pairwise_intersection().unwrap().0, brute_min_pairwise(&h) + a);
        assert_eq!(tau(&ext, 1), 1);
    }
    let ext = shared_vertex_extension(&h, 1).unwrap();
    let lifted = brute_tau_s(&ext, 2);
    assert_eq!(tau(&ext, 2), lifted);
    assert!(lifted > brute_tau_s(&h, 1));
    assert!(shared_vertex_extension(&h, 0).is_err());
}

#[test]
fn restriction_examples() {
    let h = hrl(6, 2);
    let all: Vec<usize> = (0..6).collect();
    assert_eq!(delete_parts(&h, &all).unwrap().edges(), h.edges());
    let dropped = delete_parts(&h, &all[1..]).unwrap();
    assert_eq!(dropped.r(), 5);
    assert!(brute_min_pairwise(&dropped) >= 1);
}

#[test]
fn random_examples() {
    let opts = RandomOptions::default();
    let (a, meta) = random_rt_graph(6, 2, 20, 1, opts).unwrap();
    let (b, _) = random_rt_graph(6, 2, 20, 1, opts).unwrap();
    assert_eq!(a.edges(), b.edges());
    assert_eq!(meta.requested_edges, Some(20));
    assert!(a.is_t_intersecting(2));
    for cert in [general_cover(&a, 2).unwrap(), trivial_cover(&a, 2).unwrap()] {
        assert!(cert.is_valid_for(&a));
        assert!(tau(&a, 1) <= cert.size());
    }
}

#[test]
fn solver_examples() {
    assert_eq!(tau(&hrl(6, 2), 1), 3);
    assert_eq!(tau(&truncated_projective_plane(3).unwrap().0, 1), 3);
    let b = tpp_blowup(2, 2);
    assert_eq!(tau(&b, 2), 4);
    assert_eq!(brute_tau_s(&b, 2), 4);
    for h in [hrl(6, 2), b, hrl(5, 1)] {
        assert_eq!(nu_exact(&h, SolveOptions::default()).unwrap().value, 1);
    }
    let empty = PartitionedHypergraph::new(vec![2, 2], vec![]).unwrap();
    assert_eq!(nu_exact(&empty, SolveOptions::default()).unwrap().value, 0);
}

#[test]
fn exhausted_budget_is_reported_not_guessed() {
    let h = hrl(7, 3);
    let sol = tau_s_exact(&h, 1, SolveOptions::with_budget(3)).unwrap();
    assert_eq!(sol.status, SolveStatus::Unknown);
    assert!(sol.witness.is_valid_for(&h));
    assert!(sol.lower_bound <= tau(&h, 1));
    assert!(tau(&h, 1) <= sol.value);
}

#[test]
fn small_r_examples() {
    let single = PartitionedHypergraph::new(vec![2; 4], vec![vec![1, 0, 1, 0]]).unwrap();
    assert_eq!(small_r_cover(&single, 4).unwrap().size(), 1);
    let h = hrl(5, 1);
    let cert = small_r_cover(&h, 3).unwrap();
    assert!(cert.size() <= 2 && cert.is_valid_for(&h));
    let h = hrl(6, 2);
    assert_eq!(trivial_cover(&h, 2).unwrap().size(), 5);
    assert_eq!(trivial_cover(&h, 1).unwrap().size(), 6);
}

#[test]
fn pipeline_parameters_at_seven_two() {
    let (h, _) = random_rt_graph(7, 2, 24, 11, RandomOptions { part_size: Some(3) }).unwrap();
    let result = three_edge_pipeline_cover(&h, 2).unwrap();
    assert_eq!((result.params.x, result.params.z), (5, 1));
    assert!(result.certificate.size() <= 6);
    assert!(result.certificate.is_valid_for(&h));
}

#[test]
fn kwise_examples() {
    let h = hrl(7, 2);
    let cert = kwise_cover(&h, 3, 1).unwrap();
    assert_eq!(cert.size(), 3);
    assert_eq!(tau(&h, 1), 3);
    let single = PartitionedHypergraph::new(vec![2; 5], vec![vec![0; 5]]).unwrap();
    assert_eq!(kwise_cover(&single, 3, 5).unwrap().size(), 1);
}

#[test]
fn general_cover_examples() {
    let h = hrl(6, 2);
    let cert = general_cover(&h, 2).unwrap();
    assert!(cert.is_valid_for(&h));
    assert!((3..=4).contains(&cert.size()));
}

#[test]
fn dichotomy_examples() {
    let h = hrl(6, 2);
    let report = two_edge_dichotomy_check(&h, 2, 0);
    assert!(report.violations.is_empty());
    let report = two_edge_dichotomy_check(&h, 2, 5);
    assert!(!report.violations.is_empty());
    for &(e, f, s) in &report.violations {
        assert_eq!(h.edge(e).iter().zip(h.edge(f)).filter(|(x, y)| x == y).count(), s);
        assert!(s as i64 > report.at_most && (s as i64) < report.at_least);
    }
    assert!(tau(&h, 1) <= 5);
}

#[test]
fn bound_examples() {
    assert_eq!(lower_bound(5, 2).unwrap().value, 2);
    assert_eq!(lower_bound(7, 7).unwrap().value, 1);
    assert_eq!(lower_bound(10, 3).unwrap().value, 4);

    let ub = upper_bound(5, 2).unwrap();
    assert_eq!((ub.value, ub.source), (2, BoundSource::TwoEdgeShared));
    assert_eq!(upper_bound(26, 7).unwrap().value, 19);
    let cases = upper_bound_cases(26, 7).unwrap();
    assert!(cases[1].applicable && cases[2].applicable);
    assert_eq!((cases[1].value, cases[2].value), (19, 19));
    let ub = upper_bound(100, 3).unwrap();
    assert_eq!((ub.value, ub.source), (98, BoundSource::Trivial));
    for r in 1..40 {
        for t in 1..=r {
            assert_eq!(upper_bound(r, t).unwrap().value, oracle_upper(r, t));
        }
    }

    assert_eq!(kwise_bound(7, 1, 3).unwrap().value, 3);
    assert_eq!(kwise_bound(6, 6, 4).unwrap().value, 1);
    assert_eq!(kwise_bound(8, 2, 3).unwrap().value, 3);

    for (q, t) in [(2, 1), (2, 2), (3, 2), (4, 3)] {
        assert_eq!(regular_bound(t * (q + 1), t, q).unwrap().value, q);
        assert_eq!(degree_bound(t * (q + 1), t, q, q).unwrap().value, q);
    }
    assert_eq!(regular_bound(7, 1, 1).unwrap().value, 1);

    assert_eq!(strict_bound(9, 2).unwrap().map(|b| b.value), Some(7));
    assert!(strict_bound(10, 2).unwrap().is_none());
    assert!(strict_bound(5, 1).unwrap().is_none());
}

#[test]
fn scover_examples() {
    let at = |r, t, s, source| scover_bounds(r, t, s).unwrap().into_iter().find(|b| b.source == source);
    assert!(at(7, 3, 2, BoundSource::ScoverExact).is_none());
    let lift = at(7, 3, 2, BoundSource::ScoverLift).unwrap();
    assert_eq!((lift.kind, lift.value), (BoundKind::Lower, 4));
    assert!(lift.value > lower_bound(6, 2).unwrap().value);
    let exact = at(6, 3, 1, BoundSource::ScoverExact).unwrap();
    assert_eq!(exact.value, 2);
    assert_eq!(at(6, 2, 2, BoundSource::ScoverProjective).unwrap().value, 4);
    for r in 3..=30 {
        for t in 1..=r {
            if r <= 3 * t - 2 {
                assert_eq!(at(r, t, 1, BoundSource::ScoverExact).unwrap().value, oracle_upper(r, t).min(floor_div(r - t, 2) + 1));
            }
        }
    }
}

#[test]
fn status_examples() {
    assert_eq!(conjecture_status(5, 2).unwrap().status, ConjectureStatus::Proved);
    assert_eq!(conjecture_status(12, 3).unwrap().status, ConjectureStatus::OpenExceptional);
    assert_eq!(conjecture_status(4, 3).unwrap().status, ConjectureStatus::ProvedTight);
    for r in 2..=120 {
        for t in 1..r {
            let report = conjecture_status(r, t).unwrap();
            if report.status == ConjectureStatus::Proved {
                assert!(report.upper <= r - t || r < 4 * t);
            }
        }
    }
}

#[test]
fn asymptotics_examples() {
    let rows = asymptotics_report(&[Ratio::new(1, 3), Ratio::new(1, 1), Ratio::new(7, 36)]).unwrap();
    assert_eq!((rows[0].lower, rows[0].upper), (Ratio::new(1, 3), Ratio::new(1, 3)));
    assert_eq!((rows[1].lower, rows[1].upper), (Ratio::new(0, 1), Ratio::new(0, 1)));
    assert_eq!(rows[2].upper, Ratio::new(29, 36));

    let grid = asymptotics_report(&asymptotics_grid(360).unwrap()).unwrap();
    assert!(grid.windows(2).all(|w| w[0].upper >= w[1].upper));
    assert!(grid.iter().all(|row| row.lower <= row.upper));
    let csv = asymptotics_csv(&grid);
    assert!(csv.starts_with("alpha,lower,upper\n"));
    assert!(csv.contains("0.333333,0.333333,0.333333\n"));
    assert!(csv.ends_with("1.000000,0.000000,0.000000\n"));
    assert!(asymptotics_report(&[Ratio::new(0, 1)]).is_err());
}

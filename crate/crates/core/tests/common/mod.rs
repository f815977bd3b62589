//! Brute-force oracles and instance suites shared by the integration tests.
//! Nothing here calls the library's search or bound code.

#![allow(dead_code)]

use itertools::Itertools;
use ryser::generators::{random_rt_graph, RandomOptions};
use ryser::PartitionedHypergraph;

pub fn edge_ids(h: &PartitionedHypergraph) -> Vec<Vec<usize>> {
    (0..h.edge_count())
        .map(|e| (0..h.r()).map(|j| h.edge_vertex_id(e, j)).collect())
        .collect()
}

/// Smallest set meeting every edge in at least `s` vertices, by enumerating
/// subsets of the used vertices in increasing size.
pub fn brute_tau_s(h: &PartitionedHypergraph, s: usize) -> usize {
    let edges = edge_ids(h);
    if edges.is_empty() {
        return 0;
    }
    let used: Vec<usize> = edges.iter().flatten().copied().sorted().dedup().collect();
    let mut member = vec![false; h.vertex_count()];
    for k in 0..=used.len() {
        for pick in used.iter().combinations(k) {
            pick.iter().for_each(|&&v| member[v] = true);
            let ok = edges.iter().all(|e| e.iter().filter(|&&v| member[v]).count() >= s);
            pick.iter().for_each(|&&v| member[v] = false);
            if ok {
                return k;
            }
        }
    }
    unreachable!("the set of all used vertices covers every edge {s} times only if s <= r")
}

pub fn brute_nu(h: &PartitionedHypergraph) -> usize {
    let edges = edge_ids(h);
    let m = edges.len();
    let disjoint = |a: &[usize], b: &[usize]| a.iter().all(|v| !b.contains(v));
    let mut best = 0;
    fn grow(i: usize, chosen: &mut Vec<usize>, edges: &[Vec<usize>], best: &mut usize, disjoint: &dyn Fn(&[usize], &[usize]) -> bool) {
        *best = (*best).max(chosen.len());
        for j in i..edges.len() {
            if chosen.iter().all(|&c| disjoint(&edges[c], &edges[j])) {
                chosen.push(j);
                grow(j + 1, chosen, edges, best, disjoint);
                chosen.pop();
            }
        }
    }
    if m > 0 {
        grow(0, &mut Vec::new(), &edges, &mut best, &disjoint);
    }
    best
}

pub fn brute_min_pairwise(h: &PartitionedHypergraph) -> usize {
    let edges = edge_ids(h);
    edges
        .iter()
        .tuple_combinations()
        .map(|(a, b)| a.iter().filter(|v| b.contains(v)).count())
        .min()
        .unwrap_or(h.r())
}

pub fn brute_kwise_min(h: &PartitionedHypergraph, k: usize) -> usize {
    let edges = edge_ids(h);
    edges
        .iter()
        .combinations(k)
        .map(|es| es[0].iter().filter(|v| es[1..].iter().all(|e| e.contains(v))).count())
        .min()
        .unwrap_or(h.r())
}

/// Largest total incidence `Σ |f ∩ e_i|` over transversals `f` avoiding
/// `cover`, by enumerating the transversals when there are at most
/// `enumerate_limit` of them, and part by part otherwise. `None` when some
/// part lies inside `cover`.
pub fn brute_delta(h: &PartitionedHypergraph, cover: &[usize], es: &[usize], enumerate_limit: usize) -> Option<usize> {
    let edges = edge_ids(h);
    let choices: Vec<Vec<usize>> = (0..h.r())
        .map(|j| h.part_ids(j).filter(|v| !cover.contains(v)).collect())
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return None;
    }
    let weight = |v: usize| es.iter().filter(|&&e| edges[e].contains(&v)).count();
    let product: usize = choices.iter().map(Vec::len).product();
    if product <= enumerate_limit {
        choices
            .iter()
            .multi_cartesian_product()
            .map(|f| f.into_iter().map(|&v| weight(v)).sum())
            .max()
    } else {
        Some(choices.iter().map(|c| c.iter().map(|&v| weight(v)).max().unwrap()).sum())
    }
}

/// Every edge meets `cover` in at least `s` vertices.
pub fn covers(h: &PartitionedHypergraph, cover: &[usize], s: usize) -> bool {
    edge_ids(h).iter().all(|e| e.iter().filter(|v| cover.contains(v)).count() >= s)
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// The four-case upper bound restated from its definition, with range
/// endpoints compared by cross-multiplication, and the trivial bound.
pub fn oracle_upper(r: i64, t: i64) -> i64 {
    let mut best = r - t + 1;
    if t <= r && r < 3 * t {
        best = best.min(floor_div(r - t, 2) + 1);
    }
    if 3 * t <= r && 7 * r <= 26 * t {
        best = best.min(2 * r - 5 * t + 2);
    }
    if 26 * t <= 7 * r && r <= 5 * t - 2 {
        best = best.min(floor_div(9 * r - 14 * t, 8) + 2);
    }
    if 5 * t - 1 <= r && 9 * r <= 52 * t - 13 {
        best = best.min(floor_div(15 * r - 44 * t, 8) + 3);
    }
    best
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Seeds are spread so that different `(r, t)` never share a stream.
pub fn seed_for(r: usize, t: usize, i: usize) -> u64 {
    (r as u64) * 1_000_003 + (t as u64) * 10_007 + i as u64
}

/// `n` seeded random `(r,t)`-graphs with a spread of part sizes and edge
/// targets. Instances with fewer than two edges are skipped.
pub fn random_suite(r: usize, t: usize, n: usize) -> Vec<PartitionedHypergraph> {
    let sizes = [2, 3, r / 2 + 2, r, r + 2];
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while out.len() < n {
        let part_size = sizes[i % sizes.len()].max(2);
        let target = 6 + (i * 7) % 28;
        let (h, _) = random_rt_graph(r, t, target, seed_for(r, t, i), RandomOptions { part_size: Some(part_size) })
            .expect("valid parameters");
        i += 1;
        if h.edge_count() >= 2 {
            out.push(h);
        }
        assert!(i < 50 * n + 100, "random_rt_graph keeps returning single edges at ({r},{t})");
    }
    out
}

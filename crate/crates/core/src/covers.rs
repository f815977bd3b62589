//! Constructive covers built from two or three edges.
//!
//! Each routine picks a vertex set `C` from the chosen edges so that no
//! transversal avoiding `C` can meet those `k` edges in `k*t` vertices in
//! total; `t`-intersection then forces every edge to meet `C`. The
//! degree-sum value [`PartitionedHypergraph::delta_h`] is recorded in the
//! trace, and every certificate is confirmed by a full scan before it is
//! returned. Arbitrary choices are resolved lowest global id first.

use serde::Serialize;

use crate::bounds::{pipeline_parameters, PipelineParameters};
use crate::certificate::{CoverCertificate, Provenance};
use crate::hypergraph::{IntersectionProfile, PartitionedHypergraph, Vertex};
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Default node budget for the k-wise subset search.
pub const DEFAULT_KWISE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChosenSets {
    /// Vertices on all chosen edges (`e1 ∩ e2` for two edges, `T` for three).
    pub core: Vec<Vertex>,
    /// Three edges: vertices in exactly two of them (`D`).
    pub doubles: Vec<Vertex>,
    /// Three edges: the third edge's vertex in each part of `D` (`D'`).
    pub singles: Vec<Vertex>,
    /// The subset or extra vertices selected by the case.
    pub selected: Vec<Vertex>,
}

/// How a two- or three-edge cover was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeTrace {
    pub edges: Vec<usize>,
    pub case: u8,
    /// The case's size parameter (`s`, `s1`..`s4`).
    pub s_value: usize,
    pub chosen: ChosenSets,
    pub profile: Option<IntersectionProfile>,
    /// `None` when the cover contains a whole part, which makes it a cover
    /// outright.
    pub delta: Option<usize>,
    /// `k*t - 1`.
    pub delta_limit: usize,
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn check_edges(h: &PartitionedHypergraph, es: &[usize]) -> Result<()> {
    for &e in es {
        if e >= h.edge_count() {
            return Err(Error::EdgeIndex { index: e, count: h.edge_count() });
        }
    }
    for (i, &e) in es.iter().enumerate() {
        require(!es[..i].contains(&e), || format!("edge {e} chosen twice"))?;
    }
    Ok(())
}

fn ids_to_vertices(h: &PartitionedHypergraph, ids: &[usize]) -> Vec<Vertex> {
    ids.iter().map(|&id| h.vertex_at(id)).collect()
}

/// Degree-sum check against `limit`, then a full scan.
fn certify(
    h: &PartitionedHypergraph,
    set: &VertexSet,
    es: &[usize],
    limit: usize,
    provenance: Provenance,
    claim: usize,
) -> Result<(CoverCertificate, Option<usize>)> {
    let delta = match h.delta_h(set, es) {
        Ok(d) if d > limit => {
            return Err(Error::Internal(format!(
                "{provenance}: degree sum {d} exceeds {limit}"
            )))
        }
        Ok(d) => Some(d),
        Err(Error::PartExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    if set.len() > claim {
        return Err(Error::Internal(format!(
            "{provenance}: size {} exceeds the case bound {claim}",
            set.len()
        )));
    }
    let cert = CoverCertificate::from_set(h, set, 1, provenance, Some(claim));
    if let Some(e) = cert.first_uncovered(h) {
        return Err(Error::CertificateRejected(format!(
            "{} (edge {e} is missed; the input is not intersecting enough)",
            cert.provenance
        )));
    }
    Ok((cert, delta))
}

fn single_edge(h: &PartitionedHypergraph) -> Option<CoverCertificate> {
    match h.edge_count() {
        0 => Some(CoverCertificate::from_set(h, &h.empty_set(), 1, Provenance::Empty, Some(0))),
        1 => {
            let set = VertexSet::from_ids(h.vertex_count(), [h.edge_vertex_id(0, 0)]);
            Some(CoverCertificate::from_set(h, &set, 1, Provenance::SingleEdge, Some(1)))
        }
        _ => None,
    }
}

fn check_t(h: &PartitionedHypergraph, t: usize) -> Result<()> {
    require(t >= 1 && t <= h.r(), || format!("need 1 <= t <= r = {}, got t = {t}", h.r()))
}

/// `r - t + 1` vertices of edge 0, from its first parts.
pub fn trivial_cover(h: &PartitionedHypergraph, t: usize) -> Result<CoverCertificate> {
    check_t(h, t)?;
    if h.edge_count() == 0 {
        return Err(Error::TooFewEdges { needed: 1, found: 0 });
    }
    let r = h.r();
    let ids: Vec<usize> = (0..r - t + 1).map(|j| h.edge_vertex_id(0, j)).collect();
    let set = VertexSet::from_ids(h.vertex_count(), ids);
    let cert = CoverCertificate::from_set(h, &set, 1, Provenance::Trivial, Some(r - t + 1));
    if !cert.is_valid_for(h) {
        return Err(Error::CertificateRejected(format!("trivial cover (is the input {t}-intersecting?)")));
    }
    Ok(cert)
}

/// Cover from two edges meeting in `t' >= t` vertices.
///
/// * `t' >= r - 2t + 1`: `⌊(r-t')/2⌋ + t' - t + 1` vertices of `e1 ∩ e2`.
/// * otherwise: `e1 ∩ e2` plus both edge vertices in the first
///   `r - 2t + 1 - t'` parts where the edges differ, `2r - 4t - t' + 2` in all.
pub fn two_edge_cover(
    h: &PartitionedHypergraph,
    t: usize,
    e1: usize,
    e2: usize,
) -> Result<(CoverCertificate, EdgeTrace)> {
    check_t(h, t)?;
    check_edges(h, &[e1, e2])?;
    let r = h.r() as i64;
    let ti = t as i64;
    let shared: Vec<usize> = (0..h.r()).filter(|&j| h.edge(e1)[j] == h.edge(e2)[j]).collect();
    let tp = shared.len() as i64;
    require(tp >= ti, || format!("edges {e1} and {e2} share {tp} < t = {t} vertices"))?;
    let shared_ids: Vec<usize> = shared.iter().map(|&j| h.edge_vertex_id(e1, j)).collect();
    let mut set = h.empty_set();
    let (case, s_value, selected, claim) = if tp > r - 2 * ti {
        let s = ((r - tp) / 2 + tp - ti + 1) as usize;
        for &id in &shared_ids[..s] {
            set.insert(id);
        }
        (1, s, shared_ids[..s].to_vec(), s)
    } else {
        let pairs = (r - 2 * ti + 1 - tp) as usize;
        for &id in &shared_ids {
            set.insert(id);
        }
        let mut extra = Vec::new();
        for j in (0..h.r()).filter(|j| !shared.contains(j)).take(pairs) {
            extra.push(h.edge_vertex_id(e1, j));
            extra.push(h.edge_vertex_id(e2, j));
        }
        for &id in &extra {
            set.insert(id);
        }
        (2, pairs, extra, (2 * r - 4 * ti - tp + 2) as usize)
    };
    let (cert, delta) = certify(h, &set, &[e1, e2], 2 * t - 1, Provenance::TwoEdge { case }, claim)?;
    let trace = EdgeTrace {
        edges: vec![e1, e2],
        case,
        s_value,
        chosen: ChosenSets {
            core: ids_to_vertices(h, &shared_ids),
            doubles: Vec::new(),
            singles: Vec::new(),
            selected: ids_to_vertices(h, &selected),
        },
        profile: None,
        delta,
        delta_limit: 2 * t - 1,
    };
    Ok((cert, trace))
}

/// Cover from three edges, for `r >= 3t`.
///
/// With `t1` vertices in all three edges (`T`) and `t2` in exactly two
/// (`D`, with `D'` the third edge's vertices in those parts):
///
/// 1. `t1 >= r-3t+1+t2`: `s1 = t1 - ⌊(t1-t2-r+3t-1)/3⌋` vertices of `T`.
/// 2. `r-3t+1 <= t1`: `T` plus `s2 = r-3t+1+t2-t1` vertices of `D`.
/// 3. `r-3t+1-t2 <= t1`: `T ∪ D` plus `s3 = r-3t+1-t1` vertices of `D'`.
/// 4. otherwise: `T ∪ D ∪ D'` plus all three edge vertices in the first
///    `s4 = r-3t+1-t1-t2` parts where the edges are pairwise different.
pub fn three_edge_cover(
    h: &PartitionedHypergraph,
    t: usize,
    e1: usize,
    e2: usize,
    e3: usize,
) -> Result<(CoverCertificate, EdgeTrace)> {
    check_t(h, t)?;
    require(h.r() >= 3 * t, || format!("three-edge cover needs r >= 3t (r = {}, t = {t})", h.r()))?;
    check_edges(h, &[e1, e2, e3])?;
    let profile = h.intersection_profile(e1, e2, e3)?;
    let mut core = Vec::new();
    let mut doubles = Vec::new();
    let mut singles = Vec::new();
    let mut distinct_parts = Vec::new();
    for j in 0..h.r() {
        let (x, y, z) = (h.edge(e1)[j], h.edge(e2)[j], h.edge(e3)[j]);
        let id = |e| h.edge_vertex_id(e, j);
        match (x == y, x == z, y == z) {
            (true, true, _) => core.push(id(e1)),
            (true, false, _) => {
                doubles.push(id(e1));
                singles.push(id(e3));
            }
            (false, true, _) => {
                doubles.push(id(e1));
                singles.push(id(e2));
            }
            (false, false, true) => {
                doubles.push(id(e2));
                singles.push(id(e1));
            }
            _ => distinct_parts.push(j),
        }
    }
    singles.sort_unstable();
    let (r, ti) = (h.r() as i64, t as i64);
    let (t1, t2) = (profile.t1 as i64, profile.t2 as i64);
    let base = r - 3 * ti + 1;
    let mut set = h.empty_set();
    let mut selected: Vec<usize> = Vec::new();
    let (case, s_value, claim) = if t1 >= base + t2 {
        let s1 = (t1 - (t1 - t2 - r + 3 * ti - 1).div_euclid(3)) as usize;
        selected.extend(&core[..s1]);
        (1, s1, (2 * t1 + t2 + r - 3 * ti + 3).div_euclid(3))
    } else if t1 >= base {
        let s2 = (base + t2 - t1) as usize;
        selected.extend(&doubles[..s2]);
        selected.iter().chain(&core).for_each(|&id| {
            set.insert(id);
        });
        (2, s2, base + t2)
    } else if t1 >= base - t2 {
        let s3 = (base - t1) as usize;
        selected.extend(&singles[..s3]);
        (3, s3, base + t2)
    } else {
        let s4 = (base - t1 - t2) as usize;
        for &j in &distinct_parts[..s4] {
            for e in [e1, e2, e3] {
                selected.push(h.edge_vertex_id(e, j));
            }
        }
        (4, s4, 3 * r - 2 * t1 - t2 - 9 * ti + 3)
    };
    match case {
        1 => {}
        2 => {}
        3 => core.iter().chain(&doubles).for_each(|&id| {
            set.insert(id);
        }),
        _ => core.iter().chain(&doubles).chain(&singles).for_each(|&id| {
            set.insert(id);
        }),
    }
    for &id in &selected {
        set.insert(id);
    }
    let claim = claim as usize;
    if case > 1 && set.len() != claim {
        return Err(Error::Internal(format!(
            "three-edge case {case}: built {} vertices, expected {claim}",
            set.len()
        )));
    }
    let limit = 3 * t - 1;
    let (cert, delta) = certify(h, &set, &[e1, e2, e3], limit, Provenance::ThreeEdge { case }, claim)?;
    if case > 1 && delta.is_some_and(|d| d != limit) {
        return Err(Error::Internal(format!(
            "three-edge case {case}: degree sum {delta:?} differs from {limit}"
        )));
    }
    let trace = EdgeTrace {
        edges: vec![e1, e2, e3],
        case,
        s_value,
        chosen: ChosenSets {
            core: ids_to_vertices(h, &core),
            doubles: ids_to_vertices(h, &doubles),
            singles: ids_to_vertices(h, &singles),
            selected: ids_to_vertices(h, &selected),
        },
        profile: Some(profile),
        delta,
        delta_limit: limit,
    };
    Ok((cert, trace))
}

fn min_pair(h: &PartitionedHypergraph, t: usize) -> Result<(usize, (usize, usize))> {
    let (tp, pair) = h.min_pairwise_intersection()?;
    require(tp >= t, || {
        format!("edges {} and {} share only {tp} < t = {t} vertices", pair.0, pair.1)
    })?;
    Ok((tp, pair))
}

/// Cover of size at most `⌊(r-t)/2⌋ + 1` when `r <= 3t - 1`: the shared-core
/// two-edge cover on a pair of edges with the smallest intersection.
pub fn small_r_cover(h: &PartitionedHypergraph, t: usize) -> Result<CoverCertificate> {
    check_t(h, t)?;
    let r = h.r();
    require(r < 3 * t, || format!("small-r cover needs r <= 3t - 1 (r = {r}, t = {t})"))?;
    if let Some(c) = single_edge(h) {
        return Ok(c);
    }
    let (tp, (e1, e2)) = min_pair(h, t)?;
    let (cert, _) = two_edge_cover(h, tp, e1, e2)?;
    debug_assert_eq!(cert.provenance, Provenance::TwoEdge { case: 1 });
    let claim = (r - t) / 2 + 1;
    if cert.size() > claim {
        return Err(Error::Internal(format!("small-r cover of size {} exceeds {claim}", cert.size())));
    }
    Ok(cert.with_claim(Some(claim)))
}

/// Result of [`three_edge_pipeline_cover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub certificate: CoverCertificate,
    pub params: PipelineParameters,
    /// Smallest pairwise intersection actually found (at least `t`).
    pub effective_t: usize,
    pub pair: Option<(usize, usize)>,
    /// The edge avoiding `X ∪ Z`, when one exists.
    pub third: Option<usize>,
    pub trace: Option<EdgeTrace>,
}

/// Cover of size at most `x + z` for `3t <= r <= (52t-13)/9`.
///
/// Takes a pair `e1, e2` with `|e1 ∩ e2| = t` (re-running with the larger
/// value when the minimum intersection exceeds `t`), a seed set of `z`
/// shared and `x` private vertices of `e1`, and returns the seed if it is
/// already a cover. Otherwise some edge `e3` avoids it, and the smaller of
/// the three-edge cover on `e1, e2, e3` and the two-edge cover on `e2, e3`
/// has at most `x + z` vertices.
pub fn three_edge_pipeline_cover(h: &PartitionedHypergraph, t: usize) -> Result<PipelineResult> {
    check_t(h, t)?;
    let r = h.r();
    let params = pipeline_parameters(r as i64, t as i64)?;
    let bound = params.bound() as usize;
    let plain = |certificate: CoverCertificate| PipelineResult {
        certificate,
        params: params.clone(),
        effective_t: t,
        pair: None,
        third: None,
        trace: None,
    };
    if let Some(c) = single_edge(h) {
        return Ok(plain(c));
    }
    let (tp, (e1, e2)) = min_pair(h, t)?;
    if tp > t {
        let inner = if r < 3 * tp {
            small_r_cover(h, tp)?
        } else {
            three_edge_pipeline_cover(h, tp)?.certificate
        };
        if inner.size() > bound {
            return Err(Error::Internal(format!(
                "pipeline at t' = {tp} gave {} vertices, above {bound}",
                inner.size()
            )));
        }
        let provenance = match &inner.provenance {
            Provenance::Pipeline(_) | Provenance::YCover => inner.provenance.clone(),
            other => Provenance::Pipeline(Box::new(other.clone())),
        };
        return Ok(PipelineResult {
            certificate: inner.with_provenance(provenance).with_claim(Some(bound)),
            effective_t: tp,
            pair: Some((e1, e2)),
            ..plain(CoverCertificate::from_set(h, &h.empty_set(), 1, Provenance::Empty, None))
        });
    }
    let shared: Vec<usize> = (0..r)
        .filter(|&j| h.edge(e1)[j] == h.edge(e2)[j])
        .map(|j| h.edge_vertex_id(e1, j))
        .collect();
    let private: Vec<usize> = (0..r)
        .filter(|&j| h.edge(e1)[j] != h.edge(e2)[j])
        .map(|j| h.edge_vertex_id(e1, j))
        .collect();
    let (x, z) = (params.x as usize, params.z as usize);
    if z > shared.len() || x > private.len() {
        return Err(Error::Internal(format!(
            "seed sizes x = {x}, z = {z} do not fit edges sharing {} vertices",
            shared.len()
        )));
    }
    let seed = VertexSet::from_ids(
        h.vertex_count(),
        private[..x].iter().chain(&shared[..z]).copied(),
    );
    let third = (0..h.edge_count()).find(|&e| h.edge_set(e).is_disjoint(&seed));
    let Some(e3) = third else {
        let cert = CoverCertificate::from_set(h, &seed, 1, Provenance::YCover, Some(bound));
        if let Some(e) = cert.first_uncovered(h) {
            return Err(Error::Internal(format!("seed set misses edge {e} after the scan")));
        }
        return Ok(PipelineResult { pair: Some((e1, e2)), ..plain(cert) });
    };
    let (three, trace) = three_edge_cover(h, t, e1, e2, e3)?;
    let (two, _) = two_edge_cover(h, t, e2, e3)?;
    let best = if two.size() < three.size() { two } else { three };
    if best.size() > bound {
        return Err(Error::Internal(format!(
            "pipeline on edges {e1}, {e2}, {e3} gave {} vertices, above x + z = {bound}",
            best.size()
        )));
    }
    let provenance = Provenance::Pipeline(Box::new(best.provenance.clone()));
    Ok(PipelineResult {
        certificate: best.with_provenance(provenance).with_claim(Some(bound)),
        params,
        effective_t: t,
        pair: Some((e1, e2)),
        third: Some(e3),
        trace: Some(trace),
    })
}

/// Cover of size at most `⌊(r-t)/k⌋ + 1` for k-wise t-intersecting
/// instances, using [`DEFAULT_KWISE_BUDGET`].
pub fn kwise_cover(h: &PartitionedHypergraph, k: usize, t: usize) -> Result<CoverCertificate> {
    kwise_cover_with_budget(h, k, t, Some(DEFAULT_KWISE_BUDGET))
}

/// As [`kwise_cover`]. Looks for `k-1` edges whose common intersection `U`
/// has at most `⌊(r-t)/k⌋ + t` vertices and returns `U` minus its `t-1`
/// lowest vertices; failing that, the instance is `(k-1)`-wise
/// `(⌊(r-t)/k⌋ + t + 1)`-intersecting and the search recurses down to the
/// two-edge cover at `k = 2`. If the subset search runs out of budget the
/// trivial cover is returned with provenance [`Provenance::KwiseFallback`].
pub fn kwise_cover_with_budget(
    h: &PartitionedHypergraph,
    k: usize,
    t: usize,
    budget: Option<u64>,
) -> Result<CoverCertificate> {
    check_t(h, t)?;
    let r = h.r();
    require(k >= 2, || "k must be at least 2".into())?;
    require(k >= 3 || 3 * t > r, || format!("k = 2 needs 3t > r (r = {r}, t = {t})"))?;
    if let Some(c) = single_edge(h) {
        return Ok(c);
    }
    let claim = (r - t) / k + 1;
    let cert = match kwise_step(h, k, t, budget)? {
        Some(c) => c,
        None => return trivial_cover(h, t).map(|c| c.with_provenance(Provenance::KwiseFallback)),
    };
    if cert.size() > claim {
        return Err(Error::Internal(format!("k-wise cover of size {} exceeds {claim}", cert.size())));
    }
    let cert = cert.with_claim(Some(claim));
    if let Some(e) = cert.first_uncovered(h) {
        return Err(Error::CertificateRejected(format!(
            "{} (edge {e} is missed; is the input {k}-wise {t}-intersecting?)",
            cert.provenance
        )));
    }
    Ok(cert)
}

fn kwise_step(
    h: &PartitionedHypergraph,
    k: usize,
    t: usize,
    budget: Option<u64>,
) -> Result<Option<CoverCertificate>> {
    if k == 2 {
        let inner = small_r_cover(h, t)?;
        let p = Provenance::Kwise(Box::new(inner.provenance.clone()));
        return Ok(Some(inner.with_provenance(p)));
    }
    let threshold = (h.r() - t) / k + t;
    let size = (k - 1).min(h.edge_count());
    match h.find_kwise_at_most(size, threshold, budget) {
        Ok(Some(es)) => {
            let mut common = h.edge_set(es[0]).clone();
            for &e in &es[1..] {
                common.intersect_with(h.edge_set(e));
            }
            let ids: Vec<usize> = common.iter().skip(t - 1).collect();
            let set = VertexSet::from_ids(h.vertex_count(), ids);
            Ok(Some(CoverCertificate::from_set(h, &set, 1, Provenance::KwiseCommon { k }, None)))
        }
        Ok(None) => kwise_step(h, k - 1, threshold + 1, budget),
        Err(Error::BudgetExhausted) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Smallest validated cover among the routes that apply at `(r, t)`:
/// small-r cover (`r <= 3t-1`), three-edge pipeline
/// (`3t <= r <= (52t-13)/9`), the two-edge cover on a minimum pair, and the
/// trivial cover. Earlier routes win ties.
pub fn general_cover(h: &PartitionedHypergraph, t: usize) -> Result<CoverCertificate> {
    check_t(h, t)?;
    if let Some(c) = single_edge(h) {
        return Ok(c);
    }
    let r = h.r();
    let (_, (e1, e2)) = min_pair(h, t)?;
    let mut candidates = Vec::new();
    if r < 3 * t {
        candidates.push(small_r_cover(h, t)?);
    }
    if 3 * t <= r && 9 * r + 13 <= 52 * t {
        candidates.push(three_edge_pipeline_cover(h, t)?.certificate);
    }
    candidates.push(two_edge_cover(h, t, e1, e2)?.0);
    candidates.push(trivial_cover(h, t)?);
    Ok(candidates
        .into_iter()
        .reduce(|best, c| if c.size() < best.size() { c } else { best })
        .expect("trivial route always present"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    pub pairs_checked: usize,
    /// Intersections must be at least this ...
    pub at_least: i64,
    /// ... or at most this.
    pub at_most: i64,
    /// `(e, f, |e ∩ f|)` for pairs in neither range.
    pub violations: Vec<(usize, usize, usize)>,
}

/// If `τ(H) >= eta + 1`, every pair of edges satisfies
/// `|e ∩ f| >= 2eta + 2t - r` or `|e ∩ f| <= 2r - 4t - eta + 1`. Pairs that
/// do neither are reported; any such pair means `τ(H) <= eta`.
pub fn two_edge_dichotomy_check(h: &PartitionedHypergraph, t: usize, eta: usize) -> DichotomyReport {
    let (r, t, eta) = (h.r() as i64, t as i64, eta as i64);
    let at_least = 2 * eta + 2 * t - r;
    let at_most = 2 * r - 4 * t - eta + 1;
    let mut violations = Vec::new();
    let mut pairs = 0;
    for e in 0..h.edge_count() {
        for f in e + 1..h.edge_count() {
            pairs += 1;
            let s = h.intersection_unchecked(e, f);
            let si = s as i64;
            if si < at_least && si > at_most {
                violations.push((e, f, s));
            }
        }
    }
    DichotomyReport { pairs_checked: pairs, at_least, at_most, violations }
}

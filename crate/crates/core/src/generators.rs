//! Hypergraph families: level constructions, finite-geometry planes and their
//! blowups, affine duals, complete partite graphs and random instances.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::is_prime;
use crate::general::GeneralHypergraph;
use crate::hypergraph::PartitionedHypergraph;
use crate::{Error, Result};

/// Product of part sizes allowed for [`complete_partite`].
pub const COMPLETE_PARTITE_LIMIT: usize = 100_000;
/// Largest point count allowed for the affine constructions.
pub const AFFINE_POINT_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Hrl,
    Tpp,
    Blowup,
    AffineDual,
    Complete,
    Extend,
    Restrict,
    Random,
    Loaded,
}

/// Parameters a generator guarantees for its output. Every claim can be
/// re-derived from the instance with the checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorMetadata {
    pub family: Family,
    pub r: usize,
    pub guaranteed_t: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub guaranteed_kwise: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_tau: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_regular_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub requested_edges: Option<usize>,
}

impl GeneratorMetadata {
    pub fn new(family: Family, r: usize, guaranteed_t: usize) -> Self {
        GeneratorMetadata {
            family,
            r,
            guaranteed_t,
            guaranteed_kwise: Vec::new(),
            claimed_tau: None,
            claimed_regular_degree: None,
            requested_edges: None,
        }
    }
}

/// The level construction: parts of size `m + 1` with `m = C(r, ell)`, and
/// one edge per `(r - ell)`-subset `S` of the parts. Edge `i` takes row 0 on
/// the parts in `S_i` and row `i` everywhere else. Subsets are enumerated in
/// lexicographic order.
pub fn h_r_ell(r: usize, ell: usize) -> Result<(PartitionedHypergraph, GeneratorMetadata)> {
    if r == 0 || ell >= r {
        return Err(Error::InvalidArgument(format!("need 0 <= ell < r, got r={r}, ell={ell}")));
    }
    let subsets: Vec<Vec<usize>> = (0..r).combinations(r - ell).collect();
    let m = subsets.len();
    let edges = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut e = vec![i + 1; r];
            for &j in s {
                e[j] = 0;
            }
            e
        })
        .collect();
    let h = PartitionedHypergraph::new(vec![m + 1; r], edges)?;
    let mut meta = GeneratorMetadata::new(Family::Hrl, r, r.saturating_sub(2 * ell));
    meta.guaranteed_kwise = (2..=4)
        .filter(|&k| r > k * ell)
        .map(|k| (k, r - k * ell))
        .collect();
    meta.claimed_tau = Some(ell + 1);
    Ok((h, meta))
}

/// Replaces every vertex by `t` clones, one in each of `t` new parts; part
/// `j` becomes parts `j*t .. (j+1)*t`.
pub fn blowup(h: &PartitionedHypergraph, t: usize) -> Result<PartitionedHypergraph> {
    if t == 0 {
        return Err(Error::InvalidArgument("blowup factor must be at least 1".into()));
    }
    let part_sizes = h.part_sizes().iter().flat_map(|&s| std::iter::repeat_n(s, t)).collect();
    let edges = h
        .edges()
        .iter()
        .map(|e| e.iter().flat_map(|&i| std::iter::repeat_n(i, t)).collect())
        .collect();
    PartitionedHypergraph::new(part_sizes, edges)
}

fn normalized_vectors(q: usize, dim: usize) -> Vec<Vec<usize>> {
    (0..dim)
        .map(|_| 0..q)
        .multi_cartesian_product()
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

fn dot(a: &[usize], b: &[usize], q: usize) -> usize {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<usize>() % q
}

fn check_prime(q: usize) -> Result<()> {
    if is_prime(q as u64) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{q} is not prime (only prime fields are supported)")))
    }
}

/// Lines of the projective plane over `F_q` as point-index sets. Points and
/// lines are the normalized nonzero vectors of `F_q^3` in lexicographic order.
pub fn projective_plane(q: usize) -> Result<GeneralHypergraph> {
    check_prime(q)?;
    let pts = normalized_vectors(q, 3);
    let lines = pts
        .iter()
        .map(|n| (0..pts.len()).filter(|&p| dot(n, &pts[p], q) == 0).collect())
        .collect();
    GeneralHypergraph::new(pts.len(), lines)
}

/// Projective plane of prime order `q` with its first point and the `q + 1`
/// lines through it removed. The removed lines become the parts; the `q²`
/// remaining lines become the edges.
pub fn truncated_projective_plane(q: usize) -> Result<(PartitionedHypergraph, GeneratorMetadata)> {
    check_prime(q)?;
    let pts = normalized_vectors(q, 3);
    let removed = &pts[0];
    let (through, kept): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) =
        pts.iter().partition(|n| dot(n, removed, q) == 0);
    // Local index of each point inside the removed line (part) holding it.
    let mut part_of = vec![(usize::MAX, usize::MAX); pts.len()];
    for (j, n) in through.iter().enumerate() {
        for (local, p) in (1..pts.len()).filter(|&p| dot(n, &pts[p], q) == 0).enumerate() {
            part_of[p] = (j, local);
        }
    }
    let edges = kept
        .iter()
        .map(|n| {
            let mut e = vec![usize::MAX; through.len()];
            for p in (1..pts.len()).filter(|&p| dot(n, &pts[p], q) == 0) {
                let (j, local) = part_of[p];
                e[j] = local;
            }
            e
        })
        .collect();
    let h = PartitionedHypergraph::new(vec![q; q + 1], edges)?;
    let mut meta = GeneratorMetadata::new(Family::Tpp, q + 1, 1);
    meta.claimed_tau = Some(q);
    meta.claimed_regular_degree = Some(q);
    Ok((h, meta))
}

/// Lines of the affine space `F_q^n`, grouped into parallel classes.
///
/// Points are indexed by their coordinate vector read as a base-`q` number
/// (first coordinate most significant). Classes follow the lexicographic
/// order of normalized directions; within a class, lines are numbered by
/// their smallest point.
pub struct AffineLines {
    pub design: GeneralHypergraph,
    /// `classes[c]` lists the edge indices of parallel class `c`.
    pub classes: Vec<Vec<usize>>,
    /// `line_of[c][p]` is the position inside class `c` of the line through `p`.
    pub line_of: Vec<Vec<usize>>,
}

pub fn affine_lines(q: usize, n: usize) -> Result<AffineLines> {
    check_prime(q)?;
    if n < 2 {
        return Err(Error::InvalidArgument("dimension must be at least 2".into()));
    }
    let points = q
        .checked_pow(n as u32)
        .filter(|&v| v <= AFFINE_POINT_LIMIT)
        .ok_or_else(|| Error::InvalidArgument(format!("q^n exceeds {AFFINE_POINT_LIMIT}")))?;
    let coords = |p: usize| -> Vec<usize> {
        let mut v = vec![0; n];
        let mut x = p;
        for slot in v.iter_mut().rev() {
            *slot = x % q;
            x /= q;
        }
        v
    };
    let index = |v: &[usize]| v.iter().fold(0, |acc, &x| acc * q + x);
    let mut edges = Vec::new();
    let mut classes = Vec::new();
    let mut line_of = Vec::new();
    for dir in normalized_vectors(q, n) {
        let mut assigned = vec![usize::MAX; points];
        let mut class = Vec::new();
        for p in 0..points {
            if assigned[p] != usize::MAX {
                continue;
            }
            let base = coords(p);
            let line: Vec<usize> = (0..q)
                .map(|lambda| {
                    let v: Vec<usize> =
                        base.iter().zip(&dir).map(|(b, d)| (b + lambda * d) % q).collect();
                    index(&v)
                })
                .collect();
            for &x in &line {
                assigned[x] = class.len();
            }
            class.push(edges.len());
            edges.push(line);
        }
        classes.push(class);
        line_of.push(assigned);
    }
    Ok(AffineLines { design: GeneralHypergraph::new(points, edges)?, classes, line_of })
}

/// Dual of the affine line design of `F_q^n`: one part per parallel class,
/// one edge per point, `q`-regular and strictly 1-intersecting.
pub fn affine_lines_dual(q: usize, n: usize) -> Result<(PartitionedHypergraph, GeneratorMetadata)> {
    let lines = affine_lines(q, n)?;
    let points = lines.design.vertex_count();
    let part_sizes = lines.classes.iter().map(Vec::len).collect::<Vec<_>>();
    let edges = (0..points)
        .map(|p| lines.line_of.iter().map(|class| class[p]).collect())
        .collect();
    let r = part_sizes.len();
    let h = PartitionedHypergraph::new(part_sizes, edges)?;
    let mut meta = GeneratorMetadata::new(Family::AffineDual, r, 1);
    meta.claimed_regular_degree = Some(q);
    meta.claimed_tau = Some(points / q);
    Ok((h, meta))
}

/// All transversals of the given parts, in lexicographic order.
pub fn complete_partite(part_sizes: &[usize]) -> Result<PartitionedHypergraph> {
    if part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(Error::InvalidArgument("part sizes must be positive".into()));
    }
    let total = part_sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s))
        .filter(|&p| p <= COMPLETE_PARTITE_LIMIT)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("more than {COMPLETE_PARTITE_LIMIT} transversals"))
        })?;
    let edges: Vec<Vec<usize>> =
        part_sizes.iter().map(|&s| 0..s).multi_cartesian_product().collect();
    debug_assert_eq!(edges.len(), total);
    PartitionedHypergraph::new(part_sizes.to_vec(), edges)
}

/// Appends `a` singleton parts whose vertex lies in every edge.
pub fn shared_vertex_extension(h: &PartitionedHypergraph, a: usize) -> Result<PartitionedHypergraph> {
    if a == 0 {
        return Err(Error::InvalidArgument("extension needs a >= 1".into()));
    }
    let mut parts = h.part_sizes().to_vec();
    parts.extend(std::iter::repeat_n(1, a));
    let edges = h
        .edges()
        .iter()
        .map(|e| e.iter().copied().chain(std::iter::repeat_n(0, a)).collect())
        .collect();
    PartitionedHypergraph::new(parts, edges)
}

/// Restriction to the listed parts (in increasing order); edges that become
/// equal are merged, keeping the first.
pub fn delete_parts(h: &PartitionedHypergraph, keep_parts: &[usize]) -> Result<PartitionedHypergraph> {
    let mut keep = keep_parts.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() {
        return Err(Error::InvalidArgument("at least one part must be kept".into()));
    }
    if let Some(&bad) = keep.iter().find(|&&j| j >= h.r()) {
        return Err(Error::InvalidArgument(format!("part {bad} does not exist")));
    }
    let parts = keep.iter().map(|&j| h.part_sizes()[j]).collect();
    let edges = h
        .edges()
        .iter()
        .map(|e| keep.iter().map(|&j| e[j]).collect())
        .collect();
    PartitionedHypergraph::new_dedup(parts, edges)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RandomOptions {
    /// Size of every part; defaults to `r`.
    pub part_size: Option<usize>,
}

/// Rejection sampler for `t`-intersecting instances.
///
/// Proposals are random transversals: the first is uniform, later ones copy
/// a random accepted edge and resample each part with a random probability.
/// A proposal is accepted iff it is new and meets every accepted edge in at
/// least `t` vertices. Sampling stops at `target_edges` or after
/// `1000 * target_edges` proposals; `requested_edges` in the metadata records
/// the target so shortfalls are visible.
pub fn random_rt_graph(
    r: usize,
    t: usize,
    target_edges: usize,
    seed: u64,
    opts: RandomOptions,
) -> Result<(PartitionedHypergraph, GeneratorMetadata)> {
    if r == 0 || t > r {
        return Err(Error::InvalidArgument(format!("need 0 <= t <= r and r >= 1, got r={r}, t={t}")));
    }
    let size = opts.part_size.unwrap_or(r);
    if size == 0 {
        return Err(Error::InvalidArgument("part size must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Vec<Vec<usize>> = Vec::new();
    let cap = target_edges.saturating_mul(1000);
    let mut proposals = 0;
    while accepted.len() < target_edges && proposals < cap {
        proposals += 1;
        let candidate: Vec<usize> = if accepted.is_empty() || rng.gen_ratio(1, 8) {
            (0..r).map(|_| rng.gen_range(0..size)).collect()
        } else {
            let template = &accepted[rng.gen_range(0..accepted.len())];
            let resample: f64 = rng.gen_range(0.1..0.9);
            template
                .iter()
                .map(|&x| if rng.gen_bool(resample) { rng.gen_range(0..size) } else { x })
                .collect()
        };
        let ok = accepted.iter().all(|f| {
            f != &candidate && f.iter().zip(&candidate).filter(|(a, b)| a == b).count() >= t
        });
        if ok {
            accepted.push(candidate);
        }
    }
    let h = PartitionedHypergraph::new(vec![size; r], accepted)?;
    let mut meta = GeneratorMetadata::new(Family::Random, r, t);
    meta.requested_edges = Some(target_edges);
    Ok((h, meta))
}

//! Closed-form bounds on cover numbers of `(r,t)`-graphs.
//!
//! Everything here is exact integer arithmetic; rational range endpoints are
//! compared by cross-multiplication. The only floating point is the CSV
//! rendering of [`asymptotics_report`].

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// Level construction lower bound.
    LevelConstruction,
    /// Two-edge cover on a minimum pair, shared-core case (`r <= 3t-1`).
    TwoEdgeShared,
    /// Two-edge cover, paired-parts case (`3t <= r <= 26t/7`).
    TwoEdgePaired,
    /// Three-edge pipeline, first parameter range (`26t/7 <= r <= 5t-2`).
    ThreeEdgeLow,
    /// Three-edge pipeline, second parameter range (`5t-1 <= r <= (52t-13)/9`).
    ThreeEdgeHigh,
    /// Any `r - t + 1` vertices of one edge.
    Trivial,
    Kwise,
    DegreeCount,
    Regular,
    Strict,
    ScoverExact,
    ScoverLift,
    ScoverProjective,
    /// The conjecture was already known for `r <= 4t - 1`.
    PriorWork,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(s.as_str().unwrap_or_default())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub value: i64,
    pub kind: BoundKind,
    pub source: BoundSource,
    pub applicable: bool,
    /// The range condition, as text.
    pub condition: String,
}

impl BoundResult {
    fn new(value: i64, kind: BoundKind, source: BoundSource, condition: impl Into<String>) -> Self {
        BoundResult { value, kind, source, applicable: true, condition: condition.into() }
    }
}

fn check_rt(r: i64, t: i64) -> Result<()> {
    if t < 1 || t > r {
        return Err(Error::InvalidArgument(format!("need 1 <= t <= r, got r={r}, t={t}")));
    }
    Ok(())
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` with `n = p^k`, `p` prime, `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Level-construction lower bound `⌊(r-t)/2⌋ + 1`.
pub fn lower_bound(r: i64, t: i64) -> Result<BoundResult> {
    check_rt(r, t)?;
    Ok(BoundResult::new(
        floor_div(r - t, 2) + 1,
        BoundKind::Lower,
        BoundSource::LevelConstruction,
        "1 <= t <= r",
    ))
}

/// Every piecewise upper bound with its applicability flag, followed by the
/// trivial bound.
pub fn upper_bound_cases(r: i64, t: i64) -> Result<Vec<BoundResult>> {
    check_rt(r, t)?;
    let mut cases = vec![
        BoundResult::new(floor_div(r - t, 2) + 1, BoundKind::Upper, BoundSource::TwoEdgeShared, "t <= r <= 3t-1"),
        BoundResult::new(2 * r - 5 * t + 2, BoundKind::Upper, BoundSource::TwoEdgePaired, "3t <= r <= 26t/7"),
        BoundResult::new(floor_div(9 * r - 14 * t, 8) + 2, BoundKind::Upper, BoundSource::ThreeEdgeLow, "26t/7 <= r <= 5t-2"),
        BoundResult::new(floor_div(15 * r - 44 * t, 8) + 3, BoundKind::Upper, BoundSource::ThreeEdgeHigh, "5t-1 <= r <= (52t-13)/9"),
        BoundResult::new(r - t + 1, BoundKind::Upper, BoundSource::Trivial, "1 <= t <= r"),
    ];
    let applicable = [
        r < 3 * t,
        3 * t <= r && 7 * r <= 26 * t,
        7 * r >= 26 * t && r <= 5 * t - 2,
        5 * t - 1 <= r && 9 * r <= 52 * t - 13,
        true,
    ];
    for (c, a) in cases.iter_mut().zip(applicable) {
        c.applicable = a;
    }
    Ok(cases)
}

/// Smallest applicable upper bound (earlier cases win ties).
pub fn upper_bound(r: i64, t: i64) -> Result<BoundResult> {
    let cases = upper_bound_cases(r, t)?;
    Ok(cases
        .into_iter()
        .filter(|c| c.applicable)
        .reduce(|best, c| if c.value < best.value { c } else { best })
        .expect("trivial bound always applies"))
}

/// `⌊(r-t)/k⌋ + 1` for k-wise t-intersecting instances; tight.
pub fn kwise_bound(r: i64, t: i64, k: i64) -> Result<BoundResult> {
    check_rt(r, t)?;
    if !(k >= 3 || (k == 2 && 3 * t > r)) {
        return Err(Error::InvalidArgument(format!(
            "k-wise bound needs k >= 3, or k = 2 with 3t > r (k={k}, r={r}, t={t})"
        )));
    }
    Ok(BoundResult::new(
        floor_div(r - t, k) + 1,
        BoundKind::Exact,
        BoundSource::Kwise,
        "k >= 3, or k = 2 and 3t > r",
    ))
}

/// Degree counting: `τ <= ((Δ-1)/δ)(r/t) - (Δ-δ-1)/δ`, floored.
pub fn degree_bound(r: i64, t: i64, min_degree: i64, max_degree: i64) -> Result<BoundResult> {
    if t < 1 || r < 1 || min_degree < 1 || max_degree < min_degree {
        return Err(Error::InvalidArgument(format!(
            "need t >= 1, r >= 1, 1 <= delta <= Delta (got delta={min_degree}, Delta={max_degree})"
        )));
    }
    let num = (max_degree - 1) * r - (max_degree - min_degree - 1) * t;
    Ok(BoundResult::new(
        floor_div(num, min_degree * t),
        BoundKind::Upper,
        BoundSource::DegreeCount,
        "1 <= delta <= Delta",
    ))
}

/// `τ <= r/t - r/(dt) + 1/d` for d-regular instances, floored. Equality holds
/// exactly for duals of resolvable 2-(v,d,t) designs.
pub fn regular_bound(r: i64, t: i64, d: i64) -> Result<BoundResult> {
    if t < 1 || r < 1 || d < 1 {
        return Err(Error::InvalidArgument("need r, t, d >= 1".into()));
    }
    let cond = if d == 1 {
        "d = 1 (degenerate: a single edge)"
    } else {
        "d-regular; equality iff dual of a resolvable 2-(v,d,t) design"
    };
    Ok(BoundResult::new(floor_div(d * r - r + t, d * t), BoundKind::Upper, BoundSource::Regular, cond))
}

/// `r - t` for strictly t-intersecting instances when `t < r <= t² + 3t - 1`.
pub fn strict_bound(r: i64, t: i64) -> Result<Option<BoundResult>> {
    if t < 1 {
        return Err(Error::InvalidArgument("need t >= 1".into()));
    }
    Ok((t < r && r < t * t + 3 * t).then(|| {
        BoundResult::new(r - t, BoundKind::Upper, BoundSource::Strict, "t < r <= t^2 + 3t - 1")
    }))
}

/// Bounds on the maximum s-cover number over `(r,t)`-graphs.
pub fn scover_bounds(r: i64, t: i64, s: i64) -> Result<Vec<BoundResult>> {
    if !(1 <= s && s <= t && t <= r) {
        return Err(Error::InvalidArgument(format!("need 1 <= s <= t <= r (r={r}, t={t}, s={s})")));
    }
    let base = floor_div(r - t, 2) + s;
    let mut out = Vec::new();
    if r <= 3 * t - 2 * s {
        out.push(BoundResult::new(base, BoundKind::Exact, BoundSource::ScoverExact, "r <= 3t - 2s"));
    }
    out.push(BoundResult::new(base, BoundKind::Lower, BoundSource::ScoverLift, "1 <= s <= t <= r"));
    if r % t == 0 && r / t >= 3 && prime_power((r / t - 1) as u64).is_some() {
        out.push(BoundResult::new(
            s * (r / t - 1),
            BoundKind::Lower,
            BoundSource::ScoverProjective,
            "r = t(q+1), q a prime power",
        ));
    }
    out.push(BoundResult::new(r, BoundKind::Upper, BoundSource::Trivial, "s <= t: any edge is an s-cover"));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureStatus {
    ProvedTight,
    Proved,
    OpenExceptional,
    Open,
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureStatus::ProvedTight => "proved_tight",
            ConjectureStatus::Proved => "proved",
            ConjectureStatus::OpenExceptional => "open_exceptional",
            ConjectureStatus::Open => "open",
        })
    }
}

/// Pairs inside `r <= (36t-17)/7` where `r - t` is still not established.
pub const EXCEPTIONAL_PAIRS: [(i64, i64); 8] =
    [(12, 3), (13, 3), (16, 4), (17, 4), (18, 4), (22, 5), (23, 5), (28, 6)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub status: ConjectureStatus,
    /// What settles the status, if anything.
    pub source: Option<BoundSource>,
    pub upper: i64,
    /// `upper <= r - t - 1`.
    pub not_tight: bool,
}

/// Status of the bound `τ <= r - t` at `(r, t)`.
pub fn conjecture_status(r: i64, t: i64) -> Result<ConjectureReport> {
    if t < 1 || t > r - 1 {
        return Err(Error::InvalidArgument(format!("need 1 <= t <= r-1, got r={r}, t={t}")));
    }
    let ub = upper_bound(r, t)?;
    let (status, source) = if t == r - 1 {
        (ConjectureStatus::ProvedTight, Some(BoundSource::Trivial))
    } else if t == r - 2 {
        (ConjectureStatus::ProvedTight, Some(BoundSource::PriorWork))
    } else if EXCEPTIONAL_PAIRS.contains(&(r, t)) {
        (ConjectureStatus::OpenExceptional, None)
    } else if ub.value <= r - t {
        (ConjectureStatus::Proved, Some(ub.source))
    } else if r < 4 * t {
        (ConjectureStatus::Proved, Some(BoundSource::PriorWork))
    } else {
        (ConjectureStatus::Open, None)
    };
    Ok(ConjectureReport { status, source, upper: ub.value, not_tight: ub.value < r - t })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineRange {
    /// `3t <= r <= 5t - 2`
    Low,
    /// `5t - 1 <= r <= (52t - 13)/9`
    High,
}

/// Seed-set sizes of the three-edge pipeline and the inequalities its
/// argument depends on, each evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineParameters {
    pub range: PipelineRange,
    pub x: i64,
    pub z: i64,
    pub checks: Vec<(&'static str, bool)>,
}

impl PipelineParameters {
    pub fn bound(&self) -> i64 {
        self.x + self.z
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }
}

pub fn pipeline_parameters(r: i64, t: i64) -> Result<PipelineParameters> {
    if t < 1 || r < 3 * t || 9 * r > 52 * t - 13 {
        return Err(Error::Precondition(format!(
            "pipeline needs t >= 1 and 3t <= r <= (52t-13)/9, got r={r}, t={t}"
        )));
    }
    let (range, x, z) = if r <= 5 * t - 2 {
        (PipelineRange::Low, ceil_div(5 * r - 10 * t + 2, 4), ceil_div(6 * t - r - 1, 8))
    } else {
        (PipelineRange::High, ceil_div(3 * r - 1, 4), ceil_div(9 * r - 44 * t + 13, 8))
    };
    let checks = vec![
        ("z-in-range", 1 <= z && z <= t),
        ("x-in-range", 0 <= x && x <= r - t),
        ("no-large-intersection", 2 * x + 2 * z + 2 * t - r > r - 2 * z),
        ("first-case", 3 * (x + z) >= 3 * t + 2),
        ("second-case", 5 * x + 2 * z >= 6 * r - 11 * t + 2),
        ("third-case", x + 2 * z >= 3 * r - 11 * t + 3),
    ];
    Ok(PipelineParameters { range, x, z, checks })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticsRow {
    pub alpha: Ratio<i64>,
    pub lower: Ratio<i64>,
    pub upper: Ratio<i64>,
}

/// Normalized limits of the lower and upper bounds at `t = αr`, with the
/// floor/ceiling constants dropped.
pub fn asymptotics_report(alphas: &[Ratio<i64>]) -> Result<Vec<AsymptoticsRow>> {
    let r = Ratio::from_integer;
    let one = r(1);
    alphas
        .iter()
        .map(|&a| {
            if a <= r(0) || a > one {
                return Err(Error::InvalidArgument(format!("alpha = {a} is outside (0, 1]")));
            }
            let lower = (one - a) / 2;
            let pieces = [
                (a >= Ratio::new(1, 3), lower),
                (Ratio::new(7, 26) <= a && a <= Ratio::new(1, 3), r(2) - a * 5),
                (Ratio::new(1, 5) <= a && a <= Ratio::new(7, 26), (r(9) - a * 14) / 8),
                (Ratio::new(9, 52) <= a && a <= Ratio::new(1, 5), (r(15) - a * 44) / 8),
                (true, one - a),
            ];
            let upper = pieces.iter().filter(|p| p.0).map(|p| p.1).min().expect("trivial piece");
            Ok(AsymptoticsRow { alpha: a, lower, upper })
        })
        .collect()
}

/// `i/steps` for `i = 1..=steps`.
pub fn asymptotics_grid(steps: i64) -> Result<Vec<Ratio<i64>>> {
    if steps < 1 {
        return Err(Error::InvalidArgument("steps must be positive".into()));
    }
    Ok((1..=steps).map(|i| Ratio::new(i, steps)).collect())
}

fn render(x: Ratio<i64>) -> String {
    format!("{:.6}", *x.numer() as f64 / *x.denom() as f64)
}

/// CSV with header `alpha,lower,upper` and six decimals.
pub fn asymptotics_csv(rows: &[AsymptoticsRow]) -> String {
    let mut out = String::from("alpha,lower,upper\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", render(row.alpha), render(row.lower), render(row.upper)));
    }
    out
}

//! The inequality filters of the case analysis, all in exact integer
//! arithmetic. Square roots are removed by squaring after a sign split.

use serde::{Deserialize, Serialize};

use crate::homrank::{ActionRecord, PrincipalIsotropyData};
use crate::lie::{enumerate_weights, fs_indicator, GroupSpec, HighestWeight, Reality, SimpleType};
use crate::repcalc::{full_image, min_degree_quaternionic, min_degree_real, FullImage, RepError};

/// `dim G + rk G` for a simple type: the `r` of the tensor filters.
pub fn dim_plus_rank(t: SimpleType) -> u64 {
    t.dim() + t.rank() as u64
}

/// Vanishing homogeneity rank forces `dim V ≤ dim G + rk G`. `true` means
/// the candidate survives.
pub fn dim_rank_prune(g: &GroupSpec, d: u64) -> bool {
    d <= g.dim() + g.rank()
}

/// Whether a connected subgroup `sub` with the same homogeneity rank as
/// `rec` must be all of `rec.group`. This holds when the principal isotropy
/// is finite (the two groups are then orbit equivalent with finite
/// isotropy, so they share a Lie algebra), and trivially when `sub` already
/// has full dimension.
pub fn remark_b_rigidity(rec: &ActionRecord, sub: &GroupSpec) -> bool {
    rec.princ.is_finite() || sub.dim() >= rec.group.dim()
}

/// A subgroup `sub ⊂ g` keeping the homogeneity rank satisfies
/// `rk sub ≥ rk g - rk g_princ`.
pub fn rank_defect_bound(g: &GroupSpec, sub: &GroupSpec, princ: &PrincipalIsotropyData) -> bool {
    sub.rank() + princ.rank >= g.rank()
}

/// The rank bound for `SO(m) × Sp(p) × Sp(q)` inside `SO(m) × SO(4pq)` on
/// `R^m ⊗ R^4pq`, evaluated exactly from the principal isotropy of the
/// larger group.
pub fn sosp_rank_bound(m: u64, p: u64, q: u64) -> bool {
    let n = 4 * p * q;
    // SO(m) × SO(n) on R^m ⊗ R^n has principal isotropy SO(|m - n|)
    let princ_rank = m.abs_diff(n) / 2;
    m / 2 + p + q + princ_rank >= m / 2 + n / 2
}

/// The weaker form used with the odd equation: `[m/2] ≤ p + q`.
pub fn sosp_half_rank_bound(m: u64, p: u64, q: u64) -> bool {
    m / 2 <= p + q
}

// ---- SO(p) × K1 with K1 simple of real degree q ----

/// `p² < 2r`.
pub fn square_bound(p: u64, r: u64) -> bool {
    p * p < 2 * r
}

/// `p² - 2qp + 2r ≥ 0`.
pub fn quadratic_bound(p: u64, q: u64, r: u64) -> bool {
    p * p + 2 * r >= 2 * q * p
}

/// `q ≤ r/3 + 3/2`.
pub fn degree_bound(q: u64, r: u64) -> bool {
    6 * q <= 2 * r + 9
}

/// `s > r/3 + 3/2`: no proper real representation passes the degree bound.
pub fn knockout(s: u64, r: u64) -> bool {
    6 * s > 2 * r + 9
}

/// One real-type representation of `K1` in the simple-factor tensor case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub weight: HighestWeight,
    pub q: u64,
    pub degree_bound: bool,
    /// `p` with `3 ≤ p < q` passing the square and quadratic bounds
    pub survivors: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoTensorSimpleReport {
    pub ty: SimpleType,
    pub r: u64,
    /// least degree of a proper absolutely irreducible representation
    pub s: u64,
    pub knockout: bool,
    /// proper real-type representations with `q ≤ r/3 + 3/2`
    pub rows: Vec<DegreeRow>,
}

impl SoTensorSimpleReport {
    pub fn surviving_p(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.rows.iter().flat_map(|r| r.survivors.clone()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// `p` values surviving the square and quadratic bounds for given `q`, `r`.
pub fn so_tensor_survivors(q: u64, r: u64) -> Vec<u64> {
    (3..q)
        .filter(|&p| square_bound(p, r) && quadratic_bound(p, q, r))
        .collect()
}

/// Runs the filters for `SO(p) × μ(K1)` over every proper real-type
/// representation of `K1` that passes the degree bound.
pub fn so_tensor_simple_filter(t: SimpleType) -> Result<SoTensorSimpleReport, RepError> {
    let r = dim_plus_rank(t);
    let s = min_degree_real(t, true)?;
    let qmax = (2 * r + 9) / 6;
    let mut rows: Vec<DegreeRow> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (w, q) in enumerate_weights(t, qmax) {
        let w = w.canonical(t);
        if w.is_zero()
            || fs_indicator(t, &w) != Reality::Real
            || full_image(t, &w) == Some(FullImage::Orthogonal)
            || !seen.insert(w.clone())
        {
            continue;
        }
        rows.push(DegreeRow {
            survivors: so_tensor_survivors(q, r),
            weight: w,
            q,
            degree_bound: degree_bound(q, r),
        });
    }
    Ok(SoTensorSimpleReport {
        ty: t,
        r,
        s,
        knockout: knockout(s, r),
        rows,
    })
}

// ---- SO(p) × μ(SO(k) × SO(l)) ----

/// Why a `SO(p) × SO(k) × SO(l)` candidate fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SosoRule {
    /// `k² + l² - 6kl + 2θ + 9 ≥ 0` fails
    DegreeBound,
    /// `pk ≤ l`: the same action as `μ'(SO(p) × SO(k)) × SO(l)`
    RegroupsFactors,
    /// `p² - 2qp + 2r ≥ 0` fails
    QuadraticBound,
    /// `p² < 2r` fails
    SquareBound,
}

/// `2r = k² + l² + 2θ` with `2θ = -(k mod 2) - (l mod 2)`.
pub fn soso_two_r(k: u64, l: u64) -> i64 {
    (k * k + l * l) as i64 - (k % 2) as i64 - (l % 2) as i64
}

/// Applies the degree bound, the regrouping reduction and the bounds on `p`
/// to `SO(p) × μ(SO(k) × SO(l))` on `R^p ⊗ R^kl`. `Ok` means survival.
pub fn so_tensor_soso_filter(k: u64, l: u64, p: u64) -> Result<(), SosoRule> {
    let two_r = soso_two_r(k, l);
    let q = (k * l) as i64;
    let p = p as i64;
    if 6 * q > two_r + 9 {
        return Err(SosoRule::DegreeBound);
    }
    if p * k as i64 <= l as i64 {
        return Err(SosoRule::RegroupsFactors);
    }
    if p * p + two_r < 2 * q * p {
        return Err(SosoRule::QuadraticBound);
    }
    if p * p >= two_r {
        return Err(SosoRule::SquareBound);
    }
    Ok(())
}

/// With `θ = 0` and `m = l - k`, the lower bound `2k + √(8k² - 9) ≤ m` and
/// the upper bound `m < k(k/√(k² - 1) - 1)` have no common integer solution.
pub fn soso_bounds_incompatible(k: u64) -> bool {
    let k = k as i128;
    // upper bound: (m + k)² (k² - 1) < k⁴
    let upper_ok = |m: i128| (m + k) * (m + k) * (k * k - 1) < k * k * k * k;
    // lower bound: m ≥ 2k and (m - 2k)² ≥ 8k² - 9
    let lower_ok = |m: i128| m >= 2 * k && (m - 2 * k) * (m - 2 * k) >= 8 * k * k - 9;
    (0..).take_while(|&m| upper_ok(m)).all(|m| !lower_ok(m))
}

// ---- Sp(p) × Sp(q) and its subgroups ----

/// `2p² - 2p ≤ dim K + rk K`, for `K ⊂ Sp(p)`.
pub fn first_factor_bound(p: u64, r: u64) -> bool {
    2 * p * p <= r + 2 * p
}

/// `q ≤ r/4 + 1`.
pub fn sp_degree_bound(q: u64, r: u64) -> bool {
    4 * q <= r + 4
}

/// `p < (1 + √(1 + 2r))/2`.
pub fn sp_square_bound(p: u64, r: u64) -> bool {
    let t = 2 * p as i128 - 1;
    t * t < 1 + 2 * r as i128
}

/// If `q ≥ (1 + √(1 + 2r))/2` then `p ≤ q - 1/2 - √((2q - 1)² - 2r)/2`.
pub fn sp_second_bound(p: u64, q: u64, r: u64) -> bool {
    let (p, q, r) = (p as i128, q as i128, r as i128);
    let t = 2 * q - 1;
    if t * t < 1 + 2 * r {
        return true;
    }
    let x = t * t - 2 * r;
    let room = 2 * q - 1 - 2 * p;
    room >= 0 && x <= room * room
}

/// Survivors `(K1, p)` of the first-factor bound, where `2p` is the least
/// degree of a proper quaternionic representation of `K1`.
pub fn sp_tensor_k_filter(t: SimpleType) -> Result<Vec<(SimpleType, u64)>, RepError> {
    let Some(p) = min_degree_quaternionic(t, true)? else {
        return Ok(Vec::new());
    };
    Ok(if first_factor_bound(p, dim_plus_rank(t)) {
        vec![(t, p)]
    } else {
        Vec::new()
    })
}

/// One admissible `Sp(p) × μ(K1)` with `μ` quaternionic of degree `2q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpSecondFactor {
    pub ty: SimpleType,
    pub weight: HighestWeight,
    pub p: u64,
    pub q: u64,
}

/// Every `(p, μ)` with `p < q` passing both second-factor bounds, for the
/// proper quaternionic representations `μ` of `t`.
pub fn sp_tensor_q_filter(t: SimpleType) -> Result<Vec<SpSecondFactor>, RepError> {
    let r = dim_plus_rank(t);
    let qmax = r / 4 + 1;
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (w, deg) in enumerate_weights(t, 2 * qmax) {
        let w = w.canonical(t);
        if fs_indicator(t, &w) != Reality::Quaternionic
            || full_image(t, &w) == Some(FullImage::Symplectic)
            || !seen.insert(w.clone())
        {
            continue;
        }
        let q = deg / 2;
        for p in 1..q {
            if sp_square_bound(p, r) && sp_second_bound(p, q, r) && sp_degree_bound(q, r) {
                out.push(SpSecondFactor {
                    ty: t,
                    weight: w.clone(),
                    p,
                    q,
                });
            }
        }
    }
    Ok(out)
}

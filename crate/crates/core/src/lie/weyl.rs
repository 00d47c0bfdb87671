use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{HighestWeight, RootSystem, SimpleType};

/// Frobenius–Schur type of a complex irreducible representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Reality {
    Quaternionic,
    Complex,
    Real,
}

impl Reality {
    pub fn indicator(self) -> i8 {
        match self {
            Reality::Real => 1,
            Reality::Complex => 0,
            Reality::Quaternionic => -1,
        }
    }

    /// Reality type of an outer tensor product: the product of indicators,
    /// with complex absorbing.
    pub fn tensor(self, other: Reality) -> Reality {
        Reality::try_from(self.indicator() * other.indicator()).expect("closed under products")
    }
}

impl From<Reality> for i8 {
    fn from(r: Reality) -> i8 {
        r.indicator()
    }
}

impl TryFrom<i8> for Reality {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Reality::Real),
            0 => Ok(Reality::Complex),
            -1 => Ok(Reality::Quaternionic),
            _ => Err(format!("indicator must be -1, 0 or 1, got {v}")),
        }
    }
}

impl fmt::Display for Reality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reality::Real => "real",
            Reality::Complex => "complex",
            Reality::Quaternionic => "quaternionic",
        })
    }
}

pub fn simple_dim(t: SimpleType) -> u64 {
    t.dim()
}

/// `(<λ+ρ, α^∨>, <ρ, α^∨>)` for every positive root with `<λ, α^∨> != 0`.
/// All other roots contribute a factor of one.
fn nontrivial_factors(rs: &RootSystem, lambda: &HighestWeight) -> Vec<(u64, u64)> {
    let heights = rs.heights();
    let mut extra = vec![0u64; heights.len()];
    let mut touched = Vec::new();
    for (i, &c) in lambda.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        for &(root, coef) in &rs.by_node()[i] {
            let e = &mut extra[root as usize];
            if *e == 0 {
                touched.push(root as usize);
            }
            *e += coef as u64 * c as u64;
        }
    }
    touched.sort_unstable();
    touched
        .into_iter()
        .map(|r| (heights[r] + extra[r], heights[r]))
        .collect()
}

/// Weyl dimension formula `Π <λ+ρ, α^∨> / Π <ρ, α^∨>` over positive roots,
/// evaluated exactly.
///
/// Panics if `lambda` has the wrong length; callers validate weights with
/// [`HighestWeight::check`].
pub fn weyl_dim(t: SimpleType, lambda: &HighestWeight) -> BigUint {
    lambda.check(t).expect("weight length");
    let rs = RootSystem::get(t);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut acc_n: u128 = 1;
    let mut acc_d: u128 = 1;
    for (a, b) in nontrivial_factors(&rs, lambda) {
        match (acc_n.checked_mul(a as u128), acc_d.checked_mul(b as u128)) {
            (Some(x), Some(y)) => {
                acc_n = x;
                acc_d = y;
            }
            _ => {
                num *= acc_n;
                den *= acc_d;
                acc_n = a as u128;
                acc_d = b as u128;
            }
        }
    }
    num *= acc_n;
    den *= acc_d;
    let (q, r) = num.div_rem(&den);
    debug_assert!(r == BigUint::default(), "Weyl dimension must be integral");
    q
}

/// `Some(dim)` when the dimension is at most `cap`, `None` otherwise. Every
/// factor of the product formula is at least one, so evaluation stops as
/// soon as the partial product passes the cap.
pub fn weyl_dim_capped(t: SimpleType, lambda: &HighestWeight, cap: u64) -> Option<u64> {
    lambda.check(t).expect("weight length");
    let rs = RootSystem::get(t);
    let cap = cap as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (a, b) in nontrivial_factors(&rs, lambda) {
        let (Some(n2), Some(d2)) = (num.checked_mul(a as u128), den.checked_mul(b as u128)) else {
            let d = weyl_dim(t, lambda);
            return d.to_u64().filter(|&d| d as u128 <= cap);
        };
        let g = n2.gcd(&d2);
        num = n2 / g;
        den = d2 / g;
        if num > cap.saturating_mul(den) {
            return None;
        }
    }
    debug_assert_eq!(den, 1);
    Some((num / den) as u64)
}

/// `λ = -w0(λ)`.
pub fn self_dual(t: SimpleType, lambda: &HighestWeight) -> bool {
    lambda.permuted(&t.minus_w0()) == *lambda
}

/// Frobenius–Schur indicator: complex unless self-dual, otherwise real or
/// quaternionic according to the parity of `<λ, 2ρ^∨>`.
pub fn fs_indicator(t: SimpleType, lambda: &HighestWeight) -> Reality {
    if !self_dual(t, lambda) {
        return Reality::Complex;
    }
    let rs = RootSystem::get(t);
    let pairing: u64 = lambda
        .coords()
        .iter()
        .zip(rs.two_rho_check())
        .map(|(&l, &c)| l as u64 * c)
        .sum();
    if pairing % 2 == 0 {
        Reality::Real
    } else {
        Reality::Quaternionic
    }
}

/// Highest weight of the adjoint representation.
pub fn highest_root_weight(t: SimpleType) -> HighestWeight {
    let theta = RootSystem::get(t).highest_root();
    let a = t.cartan();
    let n = t.n();
    HighestWeight(
        (0..n)
            .map(|i| {
                let v: i64 = (0..n).map(|j| theta[j] as i64 * a[j][i]).sum();
                v as u32
            })
            .collect(),
    )
}

/// All dominant weights of `t` whose irreducible representation has
/// dimension at most `cap`, sorted by `(dimension, weight)`.
///
/// Exhaustive: the dimension strictly increases when any fundamental weight
/// is added, so the search only ever extends weights that are within the cap.
pub fn enumerate_weights(t: SimpleType, cap: u64) -> Vec<(HighestWeight, u64)> {
    let n = t.n();
    let zero = HighestWeight::zero(n);
    let mut seen: HashSet<HighestWeight> = HashSet::new();
    let mut out = vec![(zero.clone(), 1u64)];
    let mut frontier = vec![zero.clone()];
    seen.insert(zero);
    if cap == 0 {
        return Vec::new();
    }
    while let Some(w) = frontier.pop() {
        for i in 0..n {
            let mut next = w.clone();
            next.0[i] += 1;
            if !seen.insert(next.clone()) {
                continue;
            }
            if let Some(d) = weyl_dim_capped(t, &next, cap) {
                out.push((next.clone(), d));
                frontier.push(next);
            }
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}

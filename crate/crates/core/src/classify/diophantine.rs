use num_integer::Roots;
use serde::{Deserialize, Serialize};

/// Which of the two equations a solution satisfies. `Even` is
/// `l² - 4pql + p² + q² + p + q = 0` with `m = 2l`; `Odd` is
/// `l² - (4pq-1)l + p² + q² - 2pq + p + q = 0` with `m = 2l + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Equation {
    Even,
    Odd,
}

/// Which root of the quadratic in `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiophantineSolution {
    pub p: u64,
    pub q: u64,
    pub l: u64,
    pub m: u64,
    pub equation: Equation,
    pub branch: Branch,
}

/// Side conditions for the even equation, with `l ≥ l_min`.
fn even_ok(p: i128, q: i128, l: i128, l_min: i128) -> bool {
    // q/(2p) ≤ l ≤ 2pq
    l >= l_min && q <= 2 * p * l && l <= 2 * p * q
}

/// Side conditions for the odd equation, optionally with the rank bound
/// `[m/2] ≤ p + q`.
fn odd_ok(p: i128, q: i128, l: i128, rank_bound: bool) -> bool {
    // q/(2p) - 1/2 ≤ l  ⇔  q ≤ p(2l + 1)
    l >= 1 && q <= p * (2 * l + 1) && l <= 2 * p * q && (!rank_bound || l <= p + q)
}

fn exact_sqrt(x: i128) -> Option<i128> {
    if x < 0 {
        return None;
    }
    let s = x.sqrt();
    (s * s == x).then_some(s)
}

/// All solutions of the even equation with `p ≤ q`, `p ≤ p_max`,
/// `q ≤ q_max`, `l ≥ l_min` (the constraint set uses `l_min = 2`).
pub fn solve_even_with(p_max: u64, q_max: u64, l_min: u64) -> Vec<DiophantineSolution> {
    let mut out = Vec::new();
    for p in 1..=p_max as i128 {
        for q in p..=q_max as i128 {
            // l = 2pq ± √Δ
            let delta = 4 * p * p * q * q - p * p - q * q - p - q;
            let Some(s) = exact_sqrt(delta) else { continue };
            for (branch, l) in [
                (Branch::Plus, 2 * p * q + s),
                (Branch::Minus, 2 * p * q - s),
            ] {
                if branch == Branch::Minus && s == 0 {
                    continue;
                }
                debug_assert_eq!(l * l - 4 * p * q * l + p * p + q * q + p + q, 0);
                if even_ok(p, q, l, l_min as i128) {
                    out.push(DiophantineSolution {
                        p: p as u64,
                        q: q as u64,
                        l: l as u64,
                        m: 2 * l as u64,
                        equation: Equation::Even,
                        branch,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// All solutions of the odd equation with `p ≤ q` in the box, with or
/// without the rank bound.
pub fn solve_odd_with(p_max: u64, q_max: u64, rank_bound: bool) -> Vec<DiophantineSolution> {
    let mut out = Vec::new();
    for p in 1..=p_max as i128 {
        for q in p..=q_max as i128 {
            // 2l = 4pq - 1 ± √Δ1
            let d1 = 16 * p * p * q * q - 4 * p * p - 4 * p - 4 * q * q - 4 * q + 1;
            let Some(s) = exact_sqrt(d1) else { continue };
            for (branch, two_l) in [
                (Branch::Plus, 4 * p * q - 1 + s),
                (Branch::Minus, 4 * p * q - 1 - s),
            ] {
                if (branch == Branch::Minus && s == 0) || two_l % 2 != 0 {
                    continue;
                }
                let l = two_l / 2;
                debug_assert_eq!(
                    l * l - (4 * p * q - 1) * l + p * p + q * q - 2 * p * q + p + q,
                    0
                );
                if odd_ok(p, q, l, rank_bound) {
                    out.push(DiophantineSolution {
                        p: p as u64,
                        q: q as u64,
                        l: l as u64,
                        m: 2 * l as u64 + 1,
                        equation: Equation::Odd,
                        branch,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Solutions of `l² - 4pql + p² + q² + p + q = 0` under
/// `q/(2p) ≤ l ≤ 2pq`, `p ≤ q`, `l ≥ 2`.
pub fn solve_eq9(p_max: u64, q_max: u64) -> Vec<DiophantineSolution> {
    solve_even_with(p_max, q_max, 2)
}

/// Solutions of `l² - (4pq-1)l + p² + q² - 2pq + p + q = 0` under
/// `q/(2p) - 1/2 ≤ l ≤ 2pq`, `p ≤ q`, `l ≥ 1` and `[m/2] ≤ p + q`.
pub fn solve_eq10(p_max: u64, q_max: u64) -> Vec<DiophantineSolution> {
    solve_odd_with(p_max, q_max, true)
}

//! Brute-force oracle for the Weyl dimension formula: positive roots come
//! from Weyl-group orbits of the simple roots, multiplicities from the
//! Freudenthal recursion over dominant weights, and the dimension is the sum
//! of multiplicities times Weyl-orbit sizes.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use homrk_core::lie::{Family, SimpleType};

pub struct Oracle {
    pub n: usize,
    pub cartan: Vec<Vec<i64>>,
    pub lens: Vec<i64>,
    /// positive roots in simple-root coordinates
    pub roots: Vec<Vec<i64>>,
}

impl Oracle {
    pub fn new(ty: SimpleType) -> Self {
        let n = ty.n();
        let cartan = ty.cartan();
        let lens = ty.root_lengths();
        // orbit of the simple roots under simple reflections
        // s_i(β) = β - <β, α_i^∨> α_i
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            seen.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| b[j] * cartan[j][i]).sum();
                let mut r = b.clone();
                r[i] -= pairing;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let roots = seen
            .into_iter()
            .filter(|r| r.iter().all(|&x| x >= 0))
            .collect();
        Oracle {
            n,
            cartan,
            lens,
            roots,
        }
    }

    /// A root in fundamental-weight coordinates.
    fn root_fund(&self, r: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| r[j] * self.cartan[j][i]).sum())
            .collect()
    }

    /// Inner product of a weight (fundamental coordinates) with a
    /// root (simple-root coordinates), in the scaled form.
    fn ip(&self, weight: &[i64], root: &[i64]) -> i64 {
        (0..self.n)
            .map(|i| root[i] * weight[i] * self.lens[i])
            .sum::<i64>()
            / 2
    }

    fn to_dominant(&self, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        loop {
            let Some(i) = (0..self.n).find(|&i| v[i] < 0) else {
                return v;
            };
            let c = v[i];
            for j in 0..self.n {
                v[j] -= c * self.cartan[i][j];
            }
        }
    }

    fn orbit_size(&self, w: &[i64]) -> u64 {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut q = VecDeque::new();
        seen.insert(w.to_vec());
        q.push_back(w.to_vec());
        while let Some(v) = q.pop_front() {
            for i in 0..self.n {
                let c = v[i];
                if c == 0 {
                    continue;
                }
                let r: Vec<i64> = (0..self.n).map(|j| v[j] - c * self.cartan[i][j]).collect();
                if seen.insert(r.clone()) {
                    q.push_back(r);
                }
            }
        }
        seen.len() as u64
    }

    pub fn dimension(&self, lambda: &[i64]) -> u64 {
        let roots_f: Vec<Vec<i64>> = self.roots.iter().map(|r| self.root_fund(r)).collect();
        // dominant weights below λ, keyed by depth, with λ - μ in root coordinates
        let mut depth: BTreeMap<i64, Vec<(Vec<i64>, Vec<i64>)>> = BTreeMap::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut q = VecDeque::new();
        q.push_back((lambda.to_vec(), vec![0i64; self.n]));
        seen.insert(lambda.to_vec());
        while let Some((mu, diff)) = q.pop_front() {
            depth
                .entry(diff.iter().sum())
                .or_default()
                .push((mu.clone(), diff.clone()));
            for (r, rf) in self.roots.iter().zip(&roots_f) {
                let next: Vec<i64> = mu.iter().zip(rf).map(|(a, b)| a - b).collect();
                if next.iter().all(|&x| x >= 0) && seen.insert(next.clone()) {
                    let d: Vec<i64> = diff.iter().zip(r).map(|(a, b)| a + b).collect();
                    q.push_back((next, d));
                }
            }
        }
        let two_rho = vec![2i64; self.n];
        let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
        let mut total = 0u64;
        for (_, level) in depth {
            for (mu, diff) in level {
                let m = if diff.iter().all(|&x| x == 0) {
                    1
                } else {
                    let mut rhs = 0i64;
                    for (r, rf) in self.roots.iter().zip(&roots_f) {
                        let mut k = 1;
                        loop {
                            let nu: Vec<i64> = (0..self.n).map(|i| mu[i] + k * rf[i]).collect();
                            let Some(&mn) = mult.get(&self.to_dominant(&nu)) else {
                                break;
                            };
                            rhs += mn * 2 * self.ip(&nu, r);
                            k += 1;
                        }
                    }
                    let s: Vec<i64> = (0..self.n)
                        .map(|i| lambda[i] + mu[i] + two_rho[i])
                        .collect();
                    let denom = self.ip(&s, &diff);
                    assert_eq!(rhs % denom, 0);
                    rhs / denom
                };
                assert!(m > 0, "dominant weight {mu:?} must occur");
                mult.insert(mu.clone(), m);
                total += m as u64 * self.orbit_size(&mu);
            }
        }
        total
    }
}

pub fn low_rank_types() -> Vec<SimpleType> {
    let mut out = Vec::new();
    for (f, lo) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 2),
        (Family::D, 4),
    ] {
        for r in lo..=4 {
            out.push(SimpleType::new(f, r).unwrap());
        }
    }
    out.push(SimpleType::new(Family::G, 2).unwrap());
    out.push(SimpleType::new(Family::F, 4).unwrap());
    out
}

pub fn all_weights(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::{Family, SimpleType};

/// Sparse coordinate vector: `(node, coefficient)` pairs with nonzero coefficients.
pub(crate) type Sparse = Vec<(usize, u32)>;

/// Positive roots of a simple type with the coroot data the dimension
/// formula consumes.
#[derive(Debug)]
pub struct RootSystem {
    ty: SimpleType,
    /// simple-root coordinates of each positive root
    roots: Vec<Sparse>,
    /// simple-coroot coordinates of the matching coroot
    coroots: Vec<Sparse>,
    /// `<ρ, α^∨>`, the height of the coroot
    heights: Vec<u64>,
    /// node -> (root index, coroot coefficient at that node)
    by_node: Vec<Vec<(u32, u32)>>,
    /// coordinates of `2ρ^∨` in the simple-coroot basis
    two_rho_check: Vec<u64>,
}

/// Root systems up to this rank are memoized.
const CACHE_RANK: u32 = 32;

static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();

impl RootSystem {
    /// Root system of `ty`, memoized for small ranks.
    pub fn get(ty: SimpleType) -> Arc<RootSystem> {
        if ty.rank() > CACHE_RANK {
            return Arc::new(RootSystem::build(ty));
        }
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rs) = cache.lock().unwrap().get(&ty) {
            return rs.clone();
        }
        // built outside the lock; a racing thread computes the same value
        let rs = Arc::new(RootSystem::build(ty));
        cache.lock().unwrap().entry(ty).or_insert(rs).clone()
    }

    pub fn build(ty: SimpleType) -> RootSystem {
        let roots = match ty.family() {
            Family::A | Family::B | Family::C | Family::D => classical_roots(ty),
            _ => cartan_closure(ty)
                .into_iter()
                .map(|r| to_sparse(&r))
                .collect(),
        };
        let n = ty.n();
        let lens = ty.root_lengths();
        let form = ty.form();
        let mut scratch = vec![0i64; n];
        let mut coroots = Vec::with_capacity(roots.len());
        let mut heights = Vec::with_capacity(roots.len());
        let mut by_node = vec![Vec::new(); n];
        let mut two_rho_check = vec![0u64; n];
        for (idx, root) in roots.iter().enumerate() {
            for &(i, k) in root {
                scratch[i] = k as i64;
            }
            let len = root_length(root, &scratch, &form, ty);
            for &(i, _) in root {
                scratch[i] = 0;
            }
            let mut co = Vec::with_capacity(root.len());
            let mut h = 0u64;
            for &(i, k) in root {
                let num = k as i64 * lens[i];
                debug_assert_eq!(num % len, 0);
                let c = (num / len) as u32;
                co.push((i, c));
                h += c as u64;
                by_node[i].push((idx as u32, c));
                two_rho_check[i] += c as u64;
            }
            coroots.push(co);
            heights.push(h);
        }
        RootSystem {
            ty,
            roots,
            coroots,
            heights,
            by_node,
            two_rho_check,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Dense simple-root coordinates of every positive root.
    pub fn dense_roots(&self) -> Vec<Vec<u32>> {
        self.roots
            .iter()
            .map(|r| to_dense(r, self.ty.n()))
            .collect()
    }

    pub fn dense_coroots(&self) -> Vec<Vec<u32>> {
        self.coroots
            .iter()
            .map(|r| to_dense(r, self.ty.n()))
            .collect()
    }

    pub(crate) fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub(crate) fn by_node(&self) -> &[Vec<(u32, u32)>] {
        &self.by_node
    }

    pub fn two_rho_check(&self) -> &[u64] {
        &self.two_rho_check
    }

    /// The highest root in simple-root coordinates.
    pub fn highest_root(&self) -> Vec<u32> {
        let best = self
            .roots
            .iter()
            .max_by_key(|r| r.iter().map(|&(_, k)| k as u64).sum::<u64>())
            .expect("nonempty root system");
        to_dense(best, self.ty.n())
    }
}

/// Positive roots of `ty` in simple-root coordinates.
pub fn positive_roots(ty: SimpleType) -> Vec<Vec<u32>> {
    RootSystem::get(ty).dense_roots()
}

/// `(α, α)` for a root given both sparse and as a dense scratch vector.
/// Dynkin edges only join nodes at most two indices apart.
fn root_length(root: &Sparse, dense: &[i64], form: &[Vec<i64>], ty: SimpleType) -> i64 {
    let n = ty.n();
    root.iter()
        .map(|&(i, k)| {
            let row = &form[i];
            let s: i64 = (i.saturating_sub(2)..(i + 3).min(n))
                .map(|j| row[j] * dense[j])
                .sum();
            k as i64 * s
        })
        .sum()
}

fn to_sparse(v: &[u32]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| (i, k))
        .collect()
}

fn to_dense(s: &Sparse, n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for &(i, k) in s {
        v[i] = k;
    }
    v
}

fn ones(range: std::ops::Range<usize>, k: u32, out: &mut Sparse) {
    out.extend(range.map(|i| (i, k)));
}

/// Closed-form positive roots of the classical families, written from the
/// ε-basis descriptions `e_a ± e_b`, `e_a`, `2e_a`.
fn classical_roots(ty: SimpleType) -> Vec<Sparse> {
    let r = ty.n();
    let mut out = Vec::new();
    // e_a - e_b, a < b  (for A this is all of them with r + 1 coordinates)
    let m = if ty.family() == Family::A { r + 1 } else { r };
    for a in 0..m {
        for b in a + 1..m {
            let mut s = Vec::new();
            ones(a..b, 1, &mut s);
            out.push(s);
        }
    }
    match ty.family() {
        Family::A => {}
        Family::B => {
            for a in 0..r {
                let mut s = Vec::new();
                ones(a..r, 1, &mut s);
                out.push(s);
                for b in a + 1..r {
                    let mut s = Vec::new();
                    ones(a..b, 1, &mut s);
                    ones(b..r, 2, &mut s);
                    out.push(s);
                }
            }
        }
        Family::C => {
            for a in 0..r {
                // 2e_a
                let mut s = Vec::new();
                ones(a..r - 1, 2, &mut s);
                s.push((r - 1, 1));
                out.push(s);
                for b in a + 1..r {
                    let mut s = Vec::new();
                    ones(a..b, 1, &mut s);
                    ones(b..r - 1, 2, &mut s);
                    s.push((r - 1, 1));
                    out.push(s);
                }
            }
        }
        Family::D => {
            for a in 0..r {
                for b in a + 1..r {
                    let mut s = Vec::new();
                    if b == r - 1 {
                        ones(a..r - 2, 1, &mut s);
                        s.push((r - 1, 1));
                    } else {
                        ones(a..b, 1, &mut s);
                        ones(b..r - 2, 2, &mut s);
                        s.push((r - 2, 1));
                        s.push((r - 1, 1));
                    }
                    out.push(s);
                }
            }
        }
        _ => unreachable!("exceptional roots come from the Cartan closure"),
    }
    out
}

/// Positive roots generated from the Cartan matrix by root strings: starting
/// from the simple roots, `β + α_i` is a root iff `p - <β, α_i^∨> > 0`, where
/// `p` is the length of the `α_i`-string below `β`.
pub fn cartan_closure(ty: SimpleType) -> Vec<Vec<u32>> {
    let n = ty.n();
    let a = ty.cartan();
    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut level: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for r in &level {
        seen.insert(r.clone());
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                // <β, α_i^∨> = Σ_j k_j a_ji
                let pairing: i64 = (0..n).map(|j| beta[j] as i64 * a[j][i]).sum();
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    if down[i] == 0 {
                        break;
                    }
                    down[i] -= 1;
                    if down.iter().all(|&x| x == 0) || !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut level);
        next.sort();
        level = next;
    }
    all
}

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Ambient, AmbientKind, CandidateCase, ChainLink, ClassifyError};
use crate::lie::{enumerate_weights, fs_indicator, Family, HighestWeight, Reality, SimpleType};
use crate::repcalc::{canonical_types, full_image, FullImage, IrrepSpec, RepError};

/// One irreducible representation of a simple group, weight canonical up
/// to diagram automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepEntry {
    pub ty: SimpleType,
    pub weight: HighestWeight,
    pub degree: u64,
    pub reality: Reality,
    pub full_image: Option<FullImage>,
}

impl IrrepEntry {
    pub fn irrep(&self) -> IrrepSpec {
        IrrepSpec::simple(self.ty, self.weight.clone()).expect("indexed weights are valid")
    }

    /// Image is the whole of `SU(degree)`.
    pub fn full_unitary(&self) -> bool {
        self.ty.family() == Family::A
            && self.degree == self.ty.rank() as u64 + 1
            && self.weight == HighestWeight::fundamental(self.ty.n(), 1).canonical(self.ty)
    }
}

/// Least degree of a nontrivial irreducible representation of a classical
/// type of rank at least 5 other than its defining ones (and their duals).
fn second_degree(t: SimpleType) -> u64 {
    let r = t.rank() as u64;
    match t.family() {
        Family::A => r * (r + 1) / 2,
        Family::B => (1u64 << r.min(63)).min(r * (2 * r + 1)),
        Family::C => 2 * r * r - r - 1,
        Family::D => (1u64 << (r - 1).min(63)).min(r * (2 * r - 1)),
        _ => 0,
    }
}

/// Rank up to which every type is enumerated in full.
const FULL_RANK: u32 = 8;

/// Every nontrivial irreducible representation of degree at most `cap`
/// of every simple type, except the defining representations of classical
/// types of rank above 8 whose other representations all exceed the cap.
/// Those have full image and never give a proper subgroup.
#[derive(Debug, Clone)]
pub struct IrrepIndex {
    pub cap: u64,
    entries: Vec<IrrepEntry>,
}

impl IrrepIndex {
    pub fn build(cap: u64) -> Self {
        let mut types = canonical_types(FULL_RANK);
        for r in FULL_RANK + 1.. {
            let extra: Vec<SimpleType> = [Family::A, Family::B, Family::C, Family::D]
                .into_iter()
                .map(|f| SimpleType::new(f, r).expect("classical rank above 8"))
                .filter(|&t| second_degree(t) <= cap)
                .collect();
            if extra.is_empty() {
                break;
            }
            types.extend(extra);
        }
        let mut entries = Vec::new();
        for t in types {
            let mut seen = BTreeSet::new();
            for (w, degree) in enumerate_weights(t, cap) {
                let w = w.canonical(t);
                if w.is_zero() || !seen.insert(w.clone()) {
                    continue;
                }
                entries.push(IrrepEntry {
                    ty: t,
                    reality: fs_indicator(t, &w),
                    full_image: full_image(t, &w),
                    weight: w,
                    degree,
                });
            }
        }
        entries.sort_by(|a, b| (a.degree, a.ty, &a.weight).cmp(&(b.degree, b.ty, &b.weight)));
        IrrepIndex { cap, entries }
    }

    pub fn entries(&self) -> &[IrrepEntry] {
        &self.entries
    }

    pub fn of_degree(&self, degree: u64, reality: Reality) -> impl Iterator<Item = &IrrepEntry> {
        let lo = self.entries.partition_point(|e| e.degree < degree);
        self.entries[lo..]
            .iter()
            .take_while(move |e| e.degree == degree)
            .filter(move |e| e.reality == reality)
    }

    /// Representations of degree `n` with proper image in the ambient group
    /// of the matching kind: real type in `SO(n)`, complex type in `SU(n)`,
    /// quaternionic type in `Sp(n/2)`.
    pub fn proper_in(&self, kind: AmbientKind, n: u64) -> Vec<&IrrepEntry> {
        let (reality, full) = match kind {
            AmbientKind::SO => (Reality::Real, Some(FullImage::Orthogonal)),
            AmbientKind::SU => (Reality::Complex, None),
            AmbientKind::Sp => (Reality::Quaternionic, Some(FullImage::Symplectic)),
        };
        self.of_degree(n, reality)
            .filter(|e| full.is_none() || e.full_image != full)
            .filter(|e| !(kind == AmbientKind::SU && e.full_unitary()))
            .collect()
    }
}

/// The classes of maximal connected subgroups of a classical group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum DynkinClass {
    /// `SO(k) × SO(n-k)`, `S(U(k) × U(n-k))` or `Sp(k) × Sp(n-k)`
    Reducible { k: u64 },
    /// `U(k)` in `SO(2k)` or `Sp(k)`
    Unitary { k: u64 },
    /// `SO(p) × SO(q)` on `R^p ⊗ R^q`
    SoTensor { p: u64, q: u64 },
    /// `Sp(p) × Sp(q)` on `C^2p ⊗_H C^2q`
    SpTensor { p: u64, q: u64 },
    /// `SO(p) × Sp(q)` on `R^p ⊗ C^2q`, inside `Sp(pq)`
    SoSp { p: u64, q: u64 },
    /// `SU(p) × SU(q)` on `C^p ⊗ C^q`
    SuTensor { p: u64, q: u64 },
    /// `SO(n) ⊂ SU(n)`
    Orthogonal { n: u64 },
    /// `Sp(k) ⊂ SU(2k)`
    Symplectic { k: u64 },
    /// a simple group through an irreducible representation
    Simple {
        ty: SimpleType,
        weight: HighestWeight,
        degree: u64,
    },
}

impl DynkinClass {
    pub fn group_name(&self) -> String {
        match self {
            DynkinClass::Reducible { k } => format!("reducible, k = {k}"),
            DynkinClass::Unitary { k } => format!("U({k})"),
            DynkinClass::SoTensor { p, q } => format!("SO({p})×SO({q})"),
            DynkinClass::SpTensor { p, q } => format!("Sp({p})×Sp({q})"),
            DynkinClass::SoSp { p, q } => format!("SO({p})×Sp({q})"),
            DynkinClass::SuTensor { p, q } => format!("SU({p})×SU({q})"),
            DynkinClass::Orthogonal { n } => format!("SO({n})"),
            DynkinClass::Symplectic { k } => format!("Sp({k})"),
            DynkinClass::Simple { ty, .. } => ty.group_name(),
        }
    }

    pub fn abs_irreducible(&self, kind: AmbientKind) -> bool {
        match self {
            DynkinClass::Reducible { .. } => false,
            DynkinClass::Unitary { .. } => kind == AmbientKind::SU,
            _ => true,
        }
    }
}

fn factor_pairs(n: u64, p_min: u64, q_min: u64) -> Vec<(u64, u64)> {
    (p_min..)
        .take_while(|p| p * p <= n)
        .filter(|p| n % p == 0 && n / p >= q_min.max(*p))
        .map(|p| (p, n / p))
        .collect()
}

fn reducible_name(kind: AmbientKind, n: u64, k: u64) -> String {
    match kind {
        AmbientKind::SO => format!("SO({k})×SO({})", n - k),
        AmbientKind::SU => format!("S(U({k})×U({}))", n - k),
        AmbientKind::Sp => format!("Sp({k})×Sp({})", n - k),
    }
}

/// Maximal connected subgroups of `SO(n)`, `SU(n)` or `Sp(n)`, simple ones
/// read off `index`. Reducible classes, and `U(k)` in `SO(2k)` or `Sp(k)`,
/// are marked not absolutely irreducible and pruned.
pub fn dynkin_candidates_in(
    ambient: Ambient,
    index: &IrrepIndex,
) -> Result<Vec<CandidateCase>, ClassifyError> {
    let n = ambient.degree;
    let kind = ambient.kind;
    if n < 2 && !(kind == AmbientKind::Sp && n == 1) {
        return Err(ClassifyError::DegreeTooSmall(n));
    }
    let simple_degree = if kind == AmbientKind::Sp { 2 * n } else { n };
    if simple_degree > index.cap {
        return Err(RepError::CapExceeded {
            ty: SimpleType::a(1),
            cap: index.cap,
        }
        .into());
    }
    let mut classes = Vec::new();
    for k in 1..=n / 2 {
        classes.push(DynkinClass::Reducible { k });
    }
    match kind {
        AmbientKind::SO => {
            for (p, q) in factor_pairs(n, 3, 3) {
                classes.push(DynkinClass::SoTensor { p, q });
            }
            if n % 2 == 0 {
                classes.push(DynkinClass::Unitary { k: n / 2 });
            }
            if n % 4 == 0 && n != 4 {
                for (p, q) in factor_pairs(n / 4, 1, 1) {
                    classes.push(DynkinClass::SpTensor { p, q });
                }
            }
        }
        AmbientKind::SU => {
            classes.push(DynkinClass::Orthogonal { n });
            if n % 2 == 0 {
                classes.push(DynkinClass::Symplectic { k: n / 2 });
            }
            // p ≥ q; SU(2) × SU(2) ⊂ SU(4) is SO(4)
            for p in 3..n {
                if n % p == 0 && n / p >= 2 && n / p <= p {
                    classes.push(DynkinClass::SuTensor { p, q: n / p });
                }
            }
        }
        AmbientKind::Sp => {
            classes.push(DynkinClass::Unitary { k: n });
            for p in 3..=n {
                if n % p == 0 {
                    classes.push(DynkinClass::SoSp { p, q: n / p });
                }
            }
        }
    }
    for e in index.proper_in(kind, simple_degree) {
        classes.push(DynkinClass::Simple {
            ty: e.ty,
            weight: e.weight.clone(),
            degree: e.degree,
        });
    }
    let top = ChainLink::new(ambient.to_string(), None);
    Ok(classes
        .into_iter()
        .map(|class| {
            let (name, rep) = match &class {
                DynkinClass::Reducible { k } => (reducible_name(kind, n, *k), None),
                DynkinClass::Simple { ty, weight, .. } => (
                    ty.group_name(),
                    Some(
                        IrrepSpec::simple(*ty, weight.clone())
                            .expect("valid")
                            .to_string(),
                    ),
                ),
                c => (c.group_name(), None),
            };
            let mut c = CandidateCase::new(
                ambient,
                vec![top.clone(), ChainLink::new(name, rep)],
                "maximal",
                n,
            );
            c.abs_irreducible = class.abs_irreducible(kind);
            c.class = Some(class);
            if c.abs_irreducible {
                c
            } else {
                c.prune(
                    "not-absolutely-irreducible",
                    "reducible, or preserves a complex structure",
                )
            }
        })
        .collect())
}

/// [`dynkin_candidates_in`] with a fresh index of the given cap.
pub fn dynkin_candidates(
    kind: AmbientKind,
    n: u64,
    degree_cap: u64,
) -> Result<Vec<CandidateCase>, ClassifyError> {
    dynkin_candidates_in(Ambient { kind, degree: n }, &IrrepIndex::build(degree_cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn second_degree_formula() {
        for r in 5..=11u32 {
            for f in [Family::A, Family::B, Family::C, Family::D] {
                let ty = SimpleType::new(f, r).unwrap();
                let s = second_degree(ty);
                let defining = HighestWeight::fundamental(ty.n(), 1).canonical(ty);
                let least = enumerate_weights(ty, s)
                    .into_iter()
                    .map(|(w, d)| (w.canonical(ty), d))
                    .filter(|(w, _)| !w.is_zero() && *w != defining)
                    .map(|(_, d)| d)
                    .min();
                assert_eq!(least, Some(s), "{ty}");
            }
        }
    }

    fn simple_names(c: &[CandidateCase]) -> Vec<String> {
        c.iter()
            .filter_map(|c| match &c.class {
                Some(DynkinClass::Simple { ty, weight, .. }) => {
                    Some(format!("{ty} {:?}", weight.0))
                }
                _ => None,
            })
            .collect()
    }

    #[test]
    fn so8_has_spin7() {
        let c = dynkin_candidates(AmbientKind::SO, 8, 64).unwrap();
        // the adjoint of SU(3) and the spin representation of Spin(7)
        assert_eq!(simple_names(&c), ["A2 [1, 1]", "B3 [0, 0, 1]"]);
        assert!(c
            .iter()
            .any(|c| c.class == Some(DynkinClass::Unitary { k: 4 })));
        // 8 = 4 · 1 · 2 gives Sp(1) × Sp(2)
        assert!(c
            .iter()
            .any(|c| c.class == Some(DynkinClass::SpTensor { p: 1, q: 2 })));
        assert_eq!(c.iter().filter(|c| !c.abs_irreducible).count(), 5);
    }

    #[test]
    fn sp2_has_cubic_sp1() {
        let c = dynkin_candidates(AmbientKind::Sp, 2, 64).unwrap();
        assert_eq!(simple_names(&c), ["A1 [3]"]);
    }

    #[test]
    fn so12_tensor_classes() {
        let c = dynkin_candidates(AmbientKind::SO, 12, 64).unwrap();
        assert!(c
            .iter()
            .any(|c| c.class == Some(DynkinClass::SoTensor { p: 3, q: 4 })));
        assert!(c
            .iter()
            .any(|c| c.class == Some(DynkinClass::SpTensor { p: 1, q: 3 })));
    }

    #[test]
    fn su_classes() {
        let c = dynkin_candidates(AmbientKind::SU, 12, 300).unwrap();
        let tensors: Vec<_> = c
            .iter()
            .filter_map(|c| match c.class {
                Some(DynkinClass::SuTensor { p, q }) => Some((p, q)),
                _ => None,
            })
            .collect();
        assert_eq!(tensors, [(4, 3), (6, 2)]);
        let c = dynkin_candidates(AmbientKind::SU, 6, 64).unwrap();
        assert!(c
            .iter()
            .any(|c| c.class == Some(DynkinClass::SuTensor { p: 3, q: 2 })));
        // SU(3) on S²C³ and Λ² of SU(4) is real; the complex ones of degree 6
        assert_eq!(simple_names(&c), ["A2 [0, 2]"]);
        assert!(dynkin_candidates(AmbientKind::SU, 600, 64).is_err());
    }

    #[test]
    fn index_covers_exceptional_minimal() {
        let idx = IrrepIndex::build(60);
        let reals: Vec<_> = idx.of_degree(26, Reality::Real).map(|e| e.ty).collect();
        assert_eq!(reals, [t("F4")]);
        let quats: Vec<_> = idx
            .of_degree(56, Reality::Quaternionic)
            .map(|e| e.ty)
            .collect();
        assert_eq!(quats, [t("A1"), t("C2"), t("C3"), t("E7")]);
    }
}

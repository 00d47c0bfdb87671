//! Representations of product groups: reality composition, realification
//! and the minimal-degree searches behind the pruning inequalities.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{
    enumerate_weights, fs_indicator, weyl_dim, Family, GroupSpec, HighestWeight, LieError, Reality,
    RootSystem, SimpleType,
};

/// Degree cap for the minimal-degree searches.
pub const DEFAULT_DEGREE_CAP: u64 = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{group} has {expected} simple factors but {got} weights were given")]
    WeightCount {
        group: String,
        expected: usize,
        got: usize,
    },
    #[error("{group} has torus rank {expected} but {got} charges were given")]
    ChargeCount {
        group: String,
        expected: usize,
        got: usize,
    },
    #[error("representation is of {reality} type, not absolutely irreducible")]
    NotAbsolutelyIrreducible { reality: Reality },
    #[error("no qualifying weight of {ty} found up to degree {cap}")]
    CapExceeded { ty: SimpleType, cap: u64 },
    #[error("dimension does not fit in 64 bits")]
    Overflow,
}

/// An irreducible complex representation of a product group: one highest
/// weight per simple factor and one character per torus coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrrepSpec {
    pub group: GroupSpec,
    pub weights: Vec<HighestWeight>,
    #[serde(default)]
    pub torus_charges: Vec<i64>,
}

impl IrrepSpec {
    pub fn new(
        group: GroupSpec,
        weights: Vec<HighestWeight>,
        torus_charges: Vec<i64>,
    ) -> Result<Self, RepError> {
        if weights.len() != group.simple_factors.len() {
            return Err(RepError::WeightCount {
                group: group.name(),
                expected: group.simple_factors.len(),
                got: weights.len(),
            });
        }
        if torus_charges.len() != group.torus_rank as usize {
            return Err(RepError::ChargeCount {
                group: group.name(),
                expected: group.torus_rank as usize,
                got: torus_charges.len(),
            });
        }
        for (t, w) in group.simple_factors.iter().zip(&weights) {
            w.check(*t)?;
        }
        Ok(IrrepSpec {
            group,
            weights,
            torus_charges,
        })
    }

    /// Irrep of a single simple factor.
    pub fn simple(t: SimpleType, weight: HighestWeight) -> Result<Self, RepError> {
        IrrepSpec::new(GroupSpec::simple(t), vec![weight], Vec::new())
    }

    pub fn factors(&self) -> impl Iterator<Item = (SimpleType, &HighestWeight)> {
        self.group.simple_factors.iter().copied().zip(&self.weights)
    }

    pub fn complex_degree(&self) -> Result<u64, RepError> {
        self.factors().try_fold(1u64, |acc, (t, w)| {
            let d = weyl_dim(t, w).to_u64().ok_or(RepError::Overflow)?;
            acc.checked_mul(d).ok_or(RepError::Overflow)
        })
    }

    /// Frobenius–Schur type of the outer tensor product. A nonzero torus
    /// character makes the representation complex.
    pub fn reality(&self) -> Reality {
        if self.torus_charges.iter().any(|&c| c != 0) {
            return Reality::Complex;
        }
        let inds: Vec<Reality> = self.factors().map(|(t, w)| fs_indicator(t, w)).collect();
        tensor_indicator(&inds)
    }
}

/// The real representation underlying an irreducible complex one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealRepSpec {
    pub source: IrrepSpec,
    pub real_dim: u64,
    pub abs_irred: bool,
    pub reality: Reality,
}

/// Product of indicators, complex absorbing.
pub fn tensor_indicator(indicators: &[Reality]) -> Reality {
    indicators.iter().fold(Reality::Real, |a, &b| a.tensor(b))
}

/// Real form (real type) or underlying real space (otherwise).
pub fn realify(irrep: &IrrepSpec) -> Result<RealRepSpec, RepError> {
    let degree = irrep.complex_degree()?;
    let reality = irrep.reality();
    let real_dim = match reality {
        Reality::Real => degree,
        _ => degree.checked_mul(2).ok_or(RepError::Overflow)?,
    };
    Ok(RealRepSpec {
        source: irrep.clone(),
        real_dim,
        abs_irred: reality == Reality::Real,
        reality,
    })
}

/// [`realify`], insisting on an absolutely irreducible result.
pub fn realify_abs(irrep: &IrrepSpec) -> Result<RealRepSpec, RepError> {
    let r = realify(irrep)?;
    if !r.abs_irred {
        return Err(RepError::NotAbsolutelyIrreducible { reality: r.reality });
    }
    Ok(r)
}

/// Which full classical group an irreducible representation fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FullImage {
    Orthogonal,
    Symplectic,
}

/// Representations whose image is the whole of SO(d) or Sp(d/2). Weights
/// are compared up to diagram automorphism, so the D4 entry covers both
/// half-spin representations (triality).
const FULL_IMAGE_RULES: &[(Family, Option<u32>, &[u32], FullImage, &str)] = &[
    (
        Family::A,
        Some(1),
        &[2],
        FullImage::Orthogonal,
        "SO(3) = SU(2)/Z2",
    ),
    (
        Family::A,
        Some(1),
        &[1],
        FullImage::Symplectic,
        "Sp(1) = SU(2)",
    ),
    (
        Family::A,
        Some(3),
        &[0, 1, 0],
        FullImage::Orthogonal,
        "SO(6) = SU(4)/Z2",
    ),
    (
        Family::B,
        Some(2),
        &[0, 1],
        FullImage::Symplectic,
        "Sp(2) = Spin(5)",
    ),
    (
        Family::C,
        Some(2),
        &[0, 1],
        FullImage::Orthogonal,
        "SO(5) = Sp(2)/Z2",
    ),
    (
        Family::B,
        None,
        &[1],
        FullImage::Orthogonal,
        "vector representation",
    ),
    (
        Family::D,
        None,
        &[1],
        FullImage::Orthogonal,
        "vector representation",
    ),
    (
        Family::C,
        None,
        &[1],
        FullImage::Symplectic,
        "vector representation",
    ),
];

/// Rule-table lookup: `Some` when the image of `λ` is a full SO or Sp.
pub fn full_image(t: SimpleType, lambda: &HighestWeight) -> Option<FullImage> {
    let canon = lambda.canonical(t);
    FULL_IMAGE_RULES
        .iter()
        .find_map(|&(fam, rank, w, kind, _)| {
            if fam != t.family() || rank.is_some_and(|r| r != t.rank()) {
                return None;
            }
            // rank-generic entries name the first fundamental weight
            let target = if rank.is_some() {
                HighestWeight(w.to_vec())
            } else {
                HighestWeight::fundamental(t.n(), 1)
            };
            (target.canonical(t) == canon).then_some(kind)
        })
}

/// Minimal degree `s` of an absolutely irreducible nontrivial representation
/// of `t`, optionally skipping those whose image is a full SO(s).
pub fn min_degree_real(t: SimpleType, exclude_full_orthogonal: bool) -> Result<u64, RepError> {
    min_degree_real_capped(t, exclude_full_orthogonal, DEFAULT_DEGREE_CAP)
}

pub fn min_degree_real_capped(
    t: SimpleType,
    exclude_full_orthogonal: bool,
    cap: u64,
) -> Result<u64, RepError> {
    enumerate_weights(t, cap)
        .into_iter()
        .filter(|(w, _)| !w.is_zero() && fs_indicator(t, w) == Reality::Real)
        .find(|(w, _)| {
            !(exclude_full_orthogonal && full_image(t, w) == Some(FullImage::Orthogonal))
        })
        .map(|(_, d)| d)
        .ok_or(RepError::CapExceeded { ty: t, cap })
}

/// Whether `t` has any irreducible representation of quaternionic type.
///
/// For a self-dual weight the coordinates on each swapped pair of nodes
/// agree, and so do the `2ρ^∨` coefficients, so the parity of `<λ, 2ρ^∨>`
/// only sees the nodes fixed by `-w0`.
pub fn admits_quaternionic(t: SimpleType) -> bool {
    let perm = t.minus_w0();
    let rs = RootSystem::get(t);
    (0..t.n()).any(|i| perm[i] == i && rs.two_rho_check()[i] % 2 == 1)
}

/// Half the minimal degree of a quaternionic-type irreducible representation
/// of `t`, optionally skipping those whose image is a full Sp. `None` when
/// `t` has no quaternionic representations at all.
pub fn min_degree_quaternionic(
    t: SimpleType,
    exclude_full_symplectic: bool,
) -> Result<Option<u64>, RepError> {
    min_degree_quaternionic_capped(t, exclude_full_symplectic, DEFAULT_DEGREE_CAP)
}

pub fn min_degree_quaternionic_capped(
    t: SimpleType,
    exclude_full_symplectic: bool,
    cap: u64,
) -> Result<Option<u64>, RepError> {
    if !admits_quaternionic(t) {
        return Ok(None);
    }
    enumerate_weights(t, cap)
        .into_iter()
        .filter(|(w, _)| fs_indicator(t, w) == Reality::Quaternionic)
        .find(|(w, _)| {
            !(exclude_full_symplectic && full_image(t, w) == Some(FullImage::Symplectic))
        })
        .map(|(_, d)| Some(d / 2))
        .ok_or(RepError::CapExceeded { ty: t, cap })
}

/// Canonical simple types up to a rank bound, without low-rank repeats
/// (B2 = C2, D3 = A3 are reached through C2 and A3).
pub fn canonical_types(max_rank: u32) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(SimpleType::a(r));
        if r >= 3 {
            out.push(SimpleType::new(Family::B, r).expect("valid"));
        }
        if r >= 2 {
            out.push(SimpleType::new(Family::C, r).expect("valid"));
        }
        if r >= 4 {
            out.push(SimpleType::new(Family::D, r).expect("valid"));
        }
    }
    for (f, r) in [
        (Family::G, 2),
        (Family::F, 4),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
    ] {
        if r <= max_rank {
            out.push(SimpleType::new(f, r).expect("valid"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn w(v: &[u32]) -> HighestWeight {
        HighestWeight(v.to_vec())
    }

    fn irrep(types: &[&str], weights: &[&[u32]]) -> IrrepSpec {
        let g = GroupSpec::new(types.iter().map(|s| t(s)).collect(), 0);
        IrrepSpec::new(g, weights.iter().map(|v| w(v)).collect(), vec![]).unwrap()
    }

    #[test]
    fn tensor_indicator_rules() {
        use Reality::*;
        assert_eq!(tensor_indicator(&[Quaternionic, Quaternionic]), Real);
        assert_eq!(tensor_indicator(&[Real, Quaternionic]), Quaternionic);
        assert_eq!(tensor_indicator(&[Real, Real]), Real);
        assert_eq!(tensor_indicator(&[Complex, Quaternionic]), Complex);
        assert_eq!(tensor_indicator(&[]), Real);
    }

    #[test]
    fn realify_theorem_rows() {
        for n in 2..=6u32 {
            let mut c = vec![0; n as usize];
            c[0] = 1;
            let g = GroupSpec::new(vec![t("A1"), SimpleType::new(Family::C, n).unwrap()], 0);
            let x = IrrepSpec::new(g, vec![w(&[3]), HighestWeight(c)], vec![]).unwrap();
            let r = realify_abs(&x).unwrap();
            assert_eq!(r.real_dim, 8 * n as u64);
        }
        let r = realify_abs(&irrep(&["A1", "B5"], &[&[1], &[0, 0, 0, 0, 1]])).unwrap();
        assert_eq!(r.real_dim, 64);
        let r = realify_abs(&irrep(&["A1", "A1", "B3"], &[&[1], &[1], &[0, 0, 1]])).unwrap();
        assert_eq!(r.real_dim, 32);
        let r = realify_abs(&irrep(&["A7"], &[&[0, 0, 0, 1, 0, 0, 0]])).unwrap();
        assert_eq!(r.real_dim, 70);
    }

    #[test]
    fn realify_rejects_non_absolute() {
        let x = irrep(&["A1"], &[&[1]]);
        assert_eq!(realify(&x).unwrap().real_dim, 4);
        assert_eq!(
            realify_abs(&x),
            Err(RepError::NotAbsolutelyIrreducible {
                reality: Reality::Quaternionic
            })
        );
        let x = irrep(&["A2"], &[&[1, 0]]);
        assert!(matches!(
            realify_abs(&x),
            Err(RepError::NotAbsolutelyIrreducible {
                reality: Reality::Complex
            })
        ));
    }

    #[test]
    fn torus_character_makes_complex() {
        let g = GroupSpec::new(vec![t("A1")], 1);
        let x = IrrepSpec::new(g.clone(), vec![w(&[2])], vec![1]).unwrap();
        assert_eq!(x.reality(), Reality::Complex);
        assert_eq!(realify(&x).unwrap().real_dim, 6);
        let x = IrrepSpec::new(g, vec![w(&[2])], vec![0]).unwrap();
        assert_eq!(x.reality(), Reality::Real);
    }

    #[test]
    fn shape_errors() {
        let g = GroupSpec::new(vec![t("A1"), t("A2")], 0);
        assert!(matches!(
            IrrepSpec::new(g.clone(), vec![w(&[1])], vec![]),
            Err(RepError::WeightCount {
                expected: 2,
                got: 1,
                ..
            })
        ));
        assert!(matches!(
            IrrepSpec::new(g.clone(), vec![w(&[1]), w(&[1])], vec![]),
            Err(RepError::Lie(LieError::WeightLength { .. }))
        ));
        assert!(matches!(
            IrrepSpec::new(g, vec![w(&[1]), w(&[1, 0])], vec![3]),
            Err(RepError::ChargeCount {
                expected: 0,
                got: 1,
                ..
            })
        ));
    }

    #[test]
    fn full_image_table() {
        assert_eq!(
            full_image(t("B4"), &w(&[1, 0, 0, 0])),
            Some(FullImage::Orthogonal)
        );
        assert_eq!(full_image(t("B4"), &w(&[0, 0, 0, 1])), None);
        assert_eq!(
            full_image(t("D4"), &w(&[0, 0, 1, 0])),
            Some(FullImage::Orthogonal)
        );
        assert_eq!(
            full_image(t("D4"), &w(&[0, 0, 0, 1])),
            Some(FullImage::Orthogonal)
        );
        assert_eq!(full_image(t("D5"), &w(&[0, 0, 0, 0, 1])), None);
        assert_eq!(
            full_image(t("C3"), &w(&[1, 0, 0])),
            Some(FullImage::Symplectic)
        );
        assert_eq!(full_image(t("A1"), &w(&[2])), Some(FullImage::Orthogonal));
        assert_eq!(full_image(t("A1"), &w(&[4])), None);
        assert_eq!(full_image(t("G2"), &w(&[1, 0])), None);
    }

    #[test]
    fn min_real_degrees() {
        assert_eq!(min_degree_real(t("A1"), true).unwrap(), 5);
        assert_eq!(min_degree_real(t("A1"), false).unwrap(), 3);
        for m in 3..=8u32 {
            assert_eq!(
                min_degree_real(SimpleType::a(m - 1), true).unwrap(),
                (m * m - 1) as u64
            );
        }
        assert_eq!(min_degree_real(t("C2"), true).unwrap(), 10);
        for m in 3..=6u64 {
            let ty = SimpleType::new(Family::C, m as u32).unwrap();
            assert_eq!(min_degree_real(ty, true).unwrap(), 2 * m * m - m - 1);
        }
        assert_eq!(min_degree_real(t("B3"), true).unwrap(), 8);
        assert_eq!(min_degree_real(t("D4"), true).unwrap(), 28);
    }

    #[test]
    fn min_real_cap_is_an_error() {
        assert_eq!(
            min_degree_real_capped(t("E8"), true, 100),
            Err(RepError::CapExceeded {
                ty: t("E8"),
                cap: 100
            })
        );
    }

    #[test]
    fn quaternionic_degrees() {
        assert_eq!(min_degree_quaternionic(t("A1"), true).unwrap(), Some(2));
        assert_eq!(min_degree_quaternionic(t("A1"), false).unwrap(), Some(1));
        assert_eq!(min_degree_quaternionic(t("C2"), true).unwrap(), Some(8));
        assert_eq!(min_degree_quaternionic(t("C3"), true).unwrap(), Some(7));
        assert_eq!(min_degree_quaternionic(t("A5"), true).unwrap(), Some(10));
        assert_eq!(min_degree_quaternionic(t("B5"), true).unwrap(), Some(16));
        assert_eq!(min_degree_quaternionic(t("D6"), true).unwrap(), Some(16));
        assert_eq!(min_degree_quaternionic(t("B6"), true).unwrap(), Some(32));
        assert_eq!(min_degree_quaternionic(t("E7"), true).unwrap(), Some(28));
        for s in ["D4", "G2", "F4", "E6", "E8", "A2", "B3", "B4", "D5", "D8"] {
            assert_eq!(min_degree_quaternionic(t(s), true).unwrap(), None, "{s}");
        }
    }

    #[test]
    fn quaternionic_cap_is_an_error() {
        assert!(matches!(
            min_degree_quaternionic_capped(t("B6"), true, 40),
            Err(RepError::CapExceeded { .. })
        ));
    }

    #[test]
    fn canonical_type_list() {
        let ts = canonical_types(4);
        let names: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            names,
            ["A1", "A2", "C2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "G2", "F4"]
        );
    }
}

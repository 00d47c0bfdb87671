use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ActionRecord, HomrankError, PrincipalIsotropyData, Provenance};
use crate::lie::{Family, GroupSpec, SimpleType};
use crate::parse::{parse_group, parse_rep};
use crate::repcalc::{realify, IrrepSpec};

/// Principal isotropy rules for the tensor-product actions the
/// classification meets. Each rule is valid only on its stated regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum IsotropyRule {
    /// SO(p) × SO(q) on R^p ⊗ R^q, p ≤ q: SO(q-p)
    SoTensor { p: u64, q: u64 },
    /// Sp(p) × Sp(q) on C^2p ⊗_H C^2q, p ≤ q: Sp(1)^p × Sp(q-p)
    SpTensor { p: u64, q: u64 },
    /// SO(m) × Sp(p) × Sp(q) on R^m ⊗ R^4pq, p ≤ q
    SoSpSp { m: u64, p: u64, q: u64 },
    /// Sp(1) × Sp(q) on S^3(C^2) ⊗_H C^2q, q ≥ 2: Sp(q-2)
    Sp1Cubic { q: u64 },
    /// SO(4) × Spin(7) on R^4 ⊗ R^8: trivial
    So4Spin7,
    /// Sp(1) × Spin(11) on C^2 ⊗_H C^32: trivial
    Sp1Spin11,
    /// SO(n) on R^n: SO(n-1)
    SoVector { n: u64 },
}

/// The three regimes of the SO(m) × Sp(p) × Sp(q) rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SospRegime {
    /// m ≥ 4pq + 2: SO(m - 4pq)
    LargeM,
    /// q ≥ mp + 1: Sp(q - mp)
    LargeQ,
    /// otherwise trivial
    Generic,
}

pub fn sosp_regime(m: u64, p: u64, q: u64) -> SospRegime {
    if m >= 4 * p * q + 2 {
        SospRegime::LargeM
    } else if q > m * p {
        SospRegime::LargeQ
    } else {
        SospRegime::Generic
    }
}

/// Weight text for the vector representation of SO(n), as the parser
/// expands `SO{n}`.
pub(crate) fn so_vector_weight(n: u64) -> String {
    match n {
        2 => "[1]".into(),
        3 => "[2]".into(),
        4 => "[1]x[1]".into(),
        _ => first_fundamental(n / 2),
    }
}

pub(crate) fn first_fundamental(rank: u64) -> String {
    let mut v = vec!["0"; rank as usize];
    v[0] = "1";
    format!("[{}]", v.join(","))
}

pub(crate) fn so_group(k: u64) -> GroupSpec {
    match k {
        0 | 1 => GroupSpec::finite(),
        _ => parse_group(&format!("SO{k}")).expect("valid SO"),
    }
}

pub(crate) fn sp_group(k: u64) -> GroupSpec {
    match k {
        0 => GroupSpec::finite(),
        _ => parse_group(&format!("Sp{k}")).expect("valid Sp"),
    }
}

fn sp1_power_times_sp(p: u64, k: u64) -> GroupSpec {
    let mut factors = vec![SimpleType::a(1); p as usize];
    match k {
        0 => {}
        1 => factors.push(SimpleType::a(1)),
        _ => factors.push(SimpleType::new(Family::C, k as u32).expect("valid C")),
    }
    let name = match k {
        0 => format!("Sp(1)^{p}"),
        _ => format!("Sp(1)^{p}×Sp({k})"),
    };
    if factors.is_empty() {
        GroupSpec::finite()
    } else {
        GroupSpec::new(factors, 0).named(name)
    }
}

impl IsotropyRule {
    pub fn from_parts(id: &str, params: &[u64]) -> Result<Self, HomrankError> {
        let unknown = || HomrankError::UnknownRegime {
            rule: id.to_string(),
            params: params.to_vec(),
        };
        Ok(match (id, params) {
            ("so_tensor", &[p, q]) => IsotropyRule::SoTensor { p, q },
            ("sp_tensor", &[p, q]) => IsotropyRule::SpTensor { p, q },
            ("sosp", &[m, p, q]) => IsotropyRule::SoSpSp { m, p, q },
            ("sp1_cubic", &[q]) => IsotropyRule::Sp1Cubic { q },
            ("so4_spin7", &[]) => IsotropyRule::So4Spin7,
            ("sp1_spin11", &[]) => IsotropyRule::Sp1Spin11,
            ("so_vector", &[n]) => IsotropyRule::SoVector { n },
            _ => return Err(unknown()),
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            IsotropyRule::SoTensor { .. } => "so_tensor",
            IsotropyRule::SpTensor { .. } => "sp_tensor",
            IsotropyRule::SoSpSp { .. } => "sosp",
            IsotropyRule::Sp1Cubic { .. } => "sp1_cubic",
            IsotropyRule::So4Spin7 => "so4_spin7",
            IsotropyRule::Sp1Spin11 => "sp1_spin11",
            IsotropyRule::SoVector { .. } => "so_vector",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            IsotropyRule::SoTensor { p, q } | IsotropyRule::SpTensor { p, q } => vec![p, q],
            IsotropyRule::SoSpSp { m, p, q } => vec![m, p, q],
            IsotropyRule::Sp1Cubic { q } => vec![q],
            IsotropyRule::So4Spin7 | IsotropyRule::Sp1Spin11 => vec![],
            IsotropyRule::SoVector { n } => vec![n],
        }
    }

    fn unknown(&self) -> HomrankError {
        HomrankError::UnknownRegime {
            rule: self.id().to_string(),
            params: self.params(),
        }
    }

    fn in_regime(&self) -> bool {
        match *self {
            // p = q = 2 splits into two planes
            IsotropyRule::SoTensor { p, q } => 1 <= p && p <= q && q >= 2 && (p, q) != (2, 2),
            IsotropyRule::SpTensor { p, q } => 1 <= p && p <= q,
            IsotropyRule::SoSpSp { m, p, q } => m >= 3 && 1 <= p && p <= q,
            IsotropyRule::Sp1Cubic { q } => q >= 2,
            IsotropyRule::So4Spin7 | IsotropyRule::Sp1Spin11 => true,
            IsotropyRule::SoVector { n } => n >= 2,
        }
    }

    pub fn principal_isotropy(&self) -> Result<PrincipalIsotropyData, HomrankError> {
        if !self.in_regime() {
            return Err(self.unknown());
        }
        let g = match *self {
            IsotropyRule::SoTensor { p, q } => so_group(q - p),
            IsotropyRule::SpTensor { p, q } => sp1_power_times_sp(p, q - p),
            IsotropyRule::SoSpSp { m, p, q } => match sosp_regime(m, p, q) {
                SospRegime::LargeM => so_group(m - 4 * p * q),
                SospRegime::LargeQ => sp_group(q - m * p),
                SospRegime::Generic => GroupSpec::finite(),
            },
            IsotropyRule::Sp1Cubic { q } => sp_group(q - 2),
            IsotropyRule::So4Spin7 | IsotropyRule::Sp1Spin11 => GroupSpec::finite(),
            IsotropyRule::SoVector { n } => so_group(n - 1),
        };
        Ok(PrincipalIsotropyData::of_group(g, Provenance::Primary))
    }

    pub fn representation(&self) -> Result<IrrepSpec, HomrankError> {
        if !self.in_regime() {
            return Err(self.unknown());
        }
        let text = match *self {
            IsotropyRule::SoTensor { p: 1, q } => format!("SO{q} {}", so_vector_weight(q)),
            IsotropyRule::SoTensor { p, q } => format!(
                "SO{p}*SO{q} {}x{}",
                so_vector_weight(p),
                so_vector_weight(q)
            ),
            IsotropyRule::SpTensor { p, q } => format!(
                "Sp{p}*Sp{q} {}x{}",
                first_fundamental(p),
                first_fundamental(q)
            ),
            IsotropyRule::SoSpSp { m, p, q } => format!(
                "SO{m}*Sp{p}*Sp{q} {}x{}x{}",
                so_vector_weight(m),
                first_fundamental(p),
                first_fundamental(q)
            ),
            IsotropyRule::Sp1Cubic { q } => format!("Sp1*Sp{q} [3]x{}", first_fundamental(q)),
            IsotropyRule::So4Spin7 => "SO4*Spin7 [1]x[1]x[0,0,1]".into(),
            IsotropyRule::Sp1Spin11 => "Sp1*Spin11 [1]x[0,0,0,0,1]".into(),
            IsotropyRule::SoVector { n } => format!("SO{n} {}", so_vector_weight(n)),
        };
        Ok(parse_rep(&text)?)
    }

    /// The action with cohomogeneity read off from
    /// `dim V = dim G - dim G_princ + cohom`.
    pub fn action(&self) -> Result<ActionRecord, HomrankError> {
        let rep = realify(&self.representation()?)?;
        let princ = self.principal_isotropy()?;
        let cohom = rep.real_dim as i128 + princ.dim as i128 - rep.source.group.dim() as i128;
        if cohom < 0 {
            return Err(HomrankError::Inconsistent {
                id: self.to_string(),
                detail: format!("negative cohomogeneity {cohom}"),
            });
        }
        let mut princ = princ;
        princ.provenance = Provenance::Derived;
        ActionRecord::new(
            self.to_string(),
            rep,
            cohom as u64,
            princ,
            format!("principal isotropy rule {}", self.id()),
        )
    }
}

impl fmt::Display for IsotropyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.id(), ps.join(","))
    }
}

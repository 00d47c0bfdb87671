use serde::{Deserialize, Serialize};

use super::rules::{first_fundamental, so_group, sp_group};
use super::{ActionRecord, HomrankError, IsotropyRule, PrincipalIsotropyData, Provenance};
use crate::lie::{highest_root_weight, GroupSpec, SimpleType};
use crate::parse::parse_rep;
use crate::repcalc::{canonical_types, realify, RealRepSpec};

/// An irreducible compact symmetric space `L/G` with its isotropy
/// representation and the data of a maximal abelian subspace: the rank of
/// the space and the centralizer `𝔪` of that subspace in `𝔤`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricSpaceRecord {
    pub label: String,
    pub family: String,
    pub l: GroupSpec,
    pub g: GroupSpec,
    pub hermitian: bool,
    pub isotropy: RealRepSpec,
    pub rank: u64,
    pub m_dim: u64,
    pub m_rank: u64,
    pub provenance: Provenance,
}

impl SymmetricSpaceRecord {
    /// `rk L = rk G`, always computed.
    pub fn inner_type(&self) -> bool {
        self.l.rank() == self.g.rank()
    }

    pub fn symmetric_homrank(&self) -> i64 {
        self.g.rank() as i64 - self.l.rank() as i64
    }

    /// The isotropy representation as an action: cohomogeneity is the rank of
    /// the space and the principal isotropy algebra is `𝔪`.
    pub fn isotropy_action(&self) -> Result<ActionRecord, HomrankError> {
        let princ = PrincipalIsotropyData::new(self.m_dim, self.m_rank, None, self.provenance)?;
        ActionRecord::new(
            format!("isotropy of {}", self.label),
            self.isotropy.clone(),
            self.rank,
            princ,
            format!("symmetric space {}", self.label),
        )
    }
}

/// `SO(n)` on traceless symmetric matrices.
fn so_sym2_weight(n: u64) -> String {
    match n {
        3 => "[4]".into(),
        4 => "[2]x[2]".into(),
        _ => first_fundamental(n / 2).replacen('1', "2", 1),
    }
}

fn second_fundamental(rank: u64) -> String {
    let mut v = vec!["0"; rank as usize];
    v[1] = "1";
    format!("[{}]", v.join(","))
}

#[allow(clippy::too_many_arguments)]
fn record(
    label: String,
    family: &str,
    l: GroupSpec,
    rep: &str,
    hermitian: bool,
    rank: u64,
    m_dim: u64,
    m_rank: u64,
) -> Result<SymmetricSpaceRecord, HomrankError> {
    let isotropy = realify(&parse_rep(rep)?)?;
    Ok(SymmetricSpaceRecord {
        label,
        family: family.into(),
        l,
        g: isotropy.source.group.clone(),
        hermitian,
        isotropy,
        rank,
        m_dim,
        m_rank,
        provenance: Provenance::External,
    })
}

fn su(n: u64) -> GroupSpec {
    GroupSpec::simple(SimpleType::a(n as u32 - 1)).named(format!("SU({n})"))
}

/// The classical irreducible symmetric spaces with `rk L ≤ max_rank`,
/// type II spaces `K × K / K` included.
pub fn classical_symmetric_spaces(
    max_rank: u64,
) -> Result<Vec<SymmetricSpaceRecord>, HomrankError> {
    let mut out = Vec::new();
    let r = max_rank;
    // SU(n)/SO(n)
    for n in 3..=r + 1 {
        out.push(record(
            format!("AI({n})"),
            "AI",
            su(n),
            &format!("SO{n} {}", so_sym2_weight(n)),
            false,
            n - 1,
            0,
            0,
        )?);
    }
    // SU(2n)/Sp(n)
    for n in (2..).take_while(|n| 2 * n - 1 <= r) {
        out.push(record(
            format!("AII({n})"),
            "AII",
            su(2 * n),
            &format!("Sp{n} {}", second_fundamental(n)),
            false,
            n - 1,
            3 * n,
            n,
        )?);
    }
    // SU(p+q)/S(U(p)×U(q))
    for p in 1..=r {
        for q in p..=r + 1 - p {
            let mut terms = Vec::new();
            let mut weights = Vec::new();
            for k in [p, q] {
                if k >= 2 {
                    terms.push(format!("SU{k}"));
                    weights.push(first_fundamental(k - 1));
                }
            }
            terms.push("T1".into());
            weights.push("[1]".into());
            let d = q - p;
            out.push(record(
                format!("AIII({p},{q})"),
                "AIII",
                su(p + q),
                &format!("{} {}", terms.join("*"), weights.join("x")),
                true,
                p,
                d * d + p - 1,
                q - 1,
            )?);
        }
    }
    // SO(p+q)/SO(p)×SO(q)
    for p in 1..=2 * r + 1 {
        for q in p..=2 * r + 1 {
            let n = p + q;
            if n < 3 || n == 4 || n / 2 > r {
                continue;
            }
            let rep = IsotropyRule::SoTensor { p, q }.representation()?;
            let d = q - p;
            out.push(record(
                format!("BDI({p},{q})"),
                "BDI",
                so_group(n).named(format!("SO({n})")),
                &rep.to_string(),
                p == 2 || q == 2,
                p,
                d * d.saturating_sub(1) / 2,
                d / 2,
            )?);
        }
    }
    // SO(2n)/U(n)
    for n in 3..=r {
        out.push(record(
            format!("DIII({n})"),
            "DIII",
            so_group(2 * n).named(format!("SO({})", 2 * n)),
            &format!("U{n} {}x[1]", second_fundamental(n - 1)),
            true,
            n / 2,
            n + n / 2,
            n - n / 2,
        )?);
    }
    // Sp(n)/U(n)
    for n in 1..=r {
        let rep = if n == 1 {
            "U1 [1]".to_string()
        } else {
            format!(
                "U{n} {}x[1]",
                first_fundamental(n - 1).replacen('1', "2", 1)
            )
        };
        out.push(record(
            format!("CI({n})"),
            "CI",
            sp_group(n).named(format!("Sp({n})")),
            &rep,
            true,
            n,
            0,
            0,
        )?);
    }
    // Sp(p+q)/Sp(p)×Sp(q)
    for p in 1..=r {
        for q in p..=r - p {
            let rep = IsotropyRule::SpTensor { p, q }.representation()?;
            let d = q - p;
            out.push(record(
                format!("CII({p},{q})"),
                "CII",
                sp_group(p + q).named(format!("Sp({})", p + q)),
                &rep.to_string(),
                false,
                p,
                3 * p + d * (2 * d + 1),
                q,
            )?);
        }
    }
    // K×K/K
    for k in canonical_types((r / 2) as u32) {
        let rk = k.rank() as u64;
        let rep = format!("{k} {}", highest_root_weight(k));
        let l =
            GroupSpec::new(vec![k, k], 0).named(format!("{}×{}", k.group_name(), k.group_name()));
        out.push(record(
            format!("II({k})"),
            "II",
            l,
            &rep,
            false,
            rk,
            rk,
            rk,
        )?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homrank::homogeneity_rank;

    #[test]
    fn isotropy_dimension_is_codimension() {
        for s in classical_symmetric_spaces(8).unwrap() {
            assert_eq!(s.isotropy.real_dim, s.l.dim() - s.g.dim(), "{}", s.label);
            s.isotropy_action().unwrap();
        }
    }

    #[test]
    fn lemma_rank_equivalence_small() {
        for s in classical_symmetric_spaces(6).unwrap() {
            let a = s.isotropy_action().unwrap();
            assert_eq!(
                homogeneity_rank(&a).unwrap(),
                s.symmetric_homrank(),
                "{}",
                s.label
            );
        }
    }

    #[test]
    fn inner_type_examples() {
        let all = classical_symmetric_spaces(7).unwrap();
        let get = |l: &str| all.iter().find(|s| s.label == l).unwrap();
        assert!(!get("AI(6)").inner_type());
        assert!(get("BDI(3,8)").inner_type());
        assert!(!get("BDI(3,5)").inner_type());
        assert_eq!(get("BDI(3,5)").symmetric_homrank(), -1);
        assert!(get("CII(2,5)").inner_type());
        assert!(!get("II(A2)").inner_type());
        assert!(get("DIII(5)").hermitian);
        assert!(!get("AII(3)").inner_type());
    }

    #[test]
    fn bdi_inner_iff_not_both_odd() {
        for s in classical_symmetric_spaces(10).unwrap() {
            if s.family != "BDI" {
                continue;
            }
            let p = s.rank;
            let q = s.isotropy.real_dim / p;
            assert_eq!(s.inner_type(), p % 2 == 0 || q % 2 == 0, "{}", s.label);
        }
    }

    #[test]
    fn isotropy_reality_matches_hermitian_flag() {
        for s in classical_symmetric_spaces(8).unwrap() {
            assert_eq!(!s.isotropy.abs_irred, s.hermitian, "{}", s.label);
        }
    }
}

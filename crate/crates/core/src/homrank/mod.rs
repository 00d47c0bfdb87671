//! Homogeneity rank of linear actions, evaluated from orbit data:
//! `homrk = rk G - rk G_princ - cohom`.

mod catalog;
mod rules;
mod symmetric;

pub(crate) use catalog::{check_tags, Tagged};
pub use catalog::{Catalog, TheoremFamily, CATALOG_ENV};
pub(crate) use rules::{first_fundamental, so_vector_weight};
pub use rules::{sosp_regime, IsotropyRule, SospRegime};
pub use symmetric::{classical_symmetric_spaces, SymmetricSpaceRecord};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::GroupSpec;
use crate::parse::ParseError;
use crate::repcalc::{RealRepSpec, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomrankError {
    #[error("{id}: {detail}")]
    Inconsistent { id: String, detail: String },
    #[error("rule {rule} has no known principal isotropy at {params:?}")]
    UnknownRegime { rule: String, params: Vec<u64> },
    #[error("{sub} acts on R^{sub_dim} but {sup} acts on R^{sup_dim}")]
    DimensionMismatch {
        sub: String,
        sup: String,
        sub_dim: u64,
        sup_dim: u64,
    },
    #[error("catalog: {0}")]
    Catalog(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Where a recorded number comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// stated in the primary source of the classification
    Primary,
    /// computed from other recorded facts
    Derived,
    /// imported from the wider literature
    External,
}

/// Connected principal isotropy data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrincipalIsotropyData {
    pub dim: u64,
    pub rank: u64,
    pub name: Option<GroupSpec>,
    pub provenance: Provenance,
}

impl PrincipalIsotropyData {
    pub fn new(
        dim: u64,
        rank: u64,
        name: Option<GroupSpec>,
        provenance: Provenance,
    ) -> Result<Self, HomrankError> {
        let bad = |detail: String| HomrankError::Inconsistent {
            id: "principal isotropy".into(),
            detail,
        };
        if rank > dim {
            return Err(bad(format!("rank {rank} exceeds dimension {dim}")));
        }
        if let Some(g) = &name {
            if g.dim() != dim || g.rank() != rank {
                return Err(bad(format!(
                    "{} has dim {} and rank {}, recorded {dim} and {rank}",
                    g.name(),
                    g.dim(),
                    g.rank()
                )));
            }
        }
        Ok(PrincipalIsotropyData {
            dim,
            rank,
            name,
            provenance,
        })
    }

    pub fn of_group(g: GroupSpec, provenance: Provenance) -> Self {
        PrincipalIsotropyData {
            dim: g.dim(),
            rank: g.rank(),
            name: Some(g),
            provenance,
        }
    }

    pub fn trivial(provenance: Provenance) -> Self {
        PrincipalIsotropyData::of_group(GroupSpec::finite(), provenance)
    }

    pub fn is_finite(&self) -> bool {
        self.dim == 0
    }
}

/// A linear action together with its orbit data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionRecord {
    pub id: String,
    pub group: GroupSpec,
    pub rep: RealRepSpec,
    pub cohom: u64,
    pub princ: PrincipalIsotropyData,
    pub source: String,
}

impl ActionRecord {
    /// Checks `dim V = dim G - dim G_princ + cohom`.
    pub fn new(
        id: impl Into<String>,
        rep: RealRepSpec,
        cohom: u64,
        princ: PrincipalIsotropyData,
        source: impl Into<String>,
    ) -> Result<Self, HomrankError> {
        let rec = ActionRecord {
            id: id.into(),
            group: rep.source.group.clone(),
            rep,
            cohom,
            princ,
            source: source.into(),
        };
        let orbit = rec.group.dim() as i128 - rec.princ.dim as i128;
        if orbit < 0 || orbit + cohom as i128 != rec.rep.real_dim as i128 {
            return Err(HomrankError::Inconsistent {
                id: rec.id,
                detail: format!(
                    "dim V = {} but dim G - dim G_princ + cohom = {} - {} + {}",
                    rec.rep.real_dim,
                    rec.group.dim(),
                    rec.princ.dim,
                    cohom
                ),
            });
        }
        Ok(rec)
    }

    pub fn dim_v(&self) -> u64 {
        self.rep.real_dim
    }
}

/// `rk G - rk G_princ - cohom`, cross-checked against
/// `rk G - rk G_princ + dim G - dim G_princ - dim V`.
pub fn homogeneity_rank(rec: &ActionRecord) -> Result<i64, HomrankError> {
    let rk = rec.group.rank() as i64 - rec.princ.rank as i64;
    let first = rk - rec.cohom as i64;
    let second = rk + rec.group.dim() as i64 - rec.princ.dim as i64 - rec.rep.real_dim as i64;
    if first != second {
        return Err(HomrankError::Inconsistent {
            id: rec.id.clone(),
            detail: format!("homogeneity rank forms disagree: {first} vs {second}"),
        });
    }
    Ok(first)
}

/// Püttmann's estimate at a point `x` with isotropy rank `iso_rank`:
/// `dim ν_x(Gx)^{G_x} ≤ cohom - (rk G_x - rk G_princ)`.
pub fn puttmann_bound(rec: &ActionRecord, fixed_normal_dim: i64, iso_rank: i64) -> bool {
    fixed_normal_dim <= rec.cohom as i64 - (iso_rank - rec.princ.rank as i64)
}

/// Homogeneity rank can only drop on passing to a subgroup.
pub fn monotonicity_check(sub: &ActionRecord, sup: &ActionRecord) -> Result<bool, HomrankError> {
    if sub.dim_v() != sup.dim_v() {
        return Err(HomrankError::DimensionMismatch {
            sub: sub.id.clone(),
            sup: sup.id.clone(),
            sub_dim: sub.dim_v(),
            sup_dim: sup.dim_v(),
        });
    }
    Ok(homogeneity_rank(sub)? <= homogeneity_rank(sup)?)
}

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::symmetric::classical_symmetric_spaces;
use super::{
    ActionRecord, HomrankError, IsotropyRule, PrincipalIsotropyData, Provenance,
    SymmetricSpaceRecord,
};
use crate::lie::GroupSpec;
use crate::parse::{parse_group, parse_rep};
use crate::repcalc::realify;

/// Environment variable naming a catalog file to use instead of the
/// built-in one.
pub const CATALOG_ENV: &str = "HOMRK_CATALOG";

const EMBEDDED: &str = include_str!("../../data/catalog.json");

/// Keys whose numbers are parameters rather than recorded facts.
const UNTAGGED_OK: &[&str] = &["value", "params", "from", "version"];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct Tagged {
    pub(crate) value: u64,
    pub(crate) provenance: Provenance,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPrinc {
    dim: Tagged,
    rank: Tagged,
    #[serde(default)]
    name: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    id: String,
    #[serde(default)]
    display: Option<String>,
    #[serde(default)]
    rep: Option<String>,
    #[serde(default)]
    cohom: Option<Tagged>,
    #[serde(default)]
    princ: Option<RawPrinc>,
    #[serde(default)]
    rule: Option<String>,
    #[serde(default)]
    params: Vec<u64>,
    source: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    id: String,
    label: String,
    rule: String,
    from: u64,
    cohom: Tagged,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTheorem {
    families: Vec<RawFamily>,
    isolated: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    label: String,
    l: String,
    isotropy: String,
    hermitian: bool,
    rank: Tagged,
    m_dim: Tagged,
    m_rank: Tagged,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    #[serde(alias = "a")]
    sub: String,
    #[serde(alias = "b")]
    sup: String,
    #[serde(default)]
    note: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    version: u64,
    actions: Vec<RawAction>,
    inner_type_table: Vec<String>,
    theorem: RawTheorem,
    symmetric_spaces: Vec<RawSpace>,
    subgroup_pairs: Vec<RawPair>,
    orbit_equivalent_pairs: Vec<RawPair>,
}

/// An infinite family of examples given by a principal isotropy rule with a
/// single size parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremFamily {
    pub id: String,
    pub label: String,
    pub rule: String,
    pub from: u64,
    pub cohom: u64,
    pub cohom_provenance: Provenance,
}

impl TheoremFamily {
    /// The member with parameter `n`; its cohomogeneity must match the
    /// recorded one.
    pub fn instance(&self, n: u64) -> Result<ActionRecord, HomrankError> {
        let mut rec = IsotropyRule::from_parts(&self.rule, &[n])?.action()?;
        if rec.cohom != self.cohom {
            return Err(HomrankError::Inconsistent {
                id: self.id.clone(),
                detail: format!(
                    "rule gives cohomogeneity {} at n = {n}, recorded {}",
                    rec.cohom, self.cohom
                ),
            });
        }
        rec.id = format!("{}({n})", self.id);
        rec.source = format!("{} family", self.label);
        Ok(rec)
    }
}

/// Validated orbit data: action records, the exceptional symmetric spaces,
/// and the pairs the property suites quantify over.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub version: u64,
    actions: Vec<ActionRecord>,
    index: HashMap<String, usize>,
    inner_type_table: Vec<String>,
    families: Vec<TheoremFamily>,
    isolated: Vec<String>,
    exceptional: Vec<SymmetricSpaceRecord>,
    subgroup_pairs: Vec<(String, String, String)>,
    orbit_pairs: Vec<(String, String, String)>,
}

pub(crate) fn check_tags(v: &Value, path: &str, key: &str) -> Result<(), HomrankError> {
    match v {
        Value::Number(_) if !UNTAGGED_OK.contains(&key) => Err(HomrankError::Catalog(format!(
            "untagged numeric at {path}; write {{\"value\": .., \"provenance\": ..}}"
        ))),
        Value::Array(items) => items
            .iter()
            .enumerate()
            .try_for_each(|(i, x)| check_tags(x, &format!("{path}[{i}]"), key)),
        Value::Object(map) => map
            .iter()
            .try_for_each(|(k, x)| check_tags(x, &format!("{path}.{k}"), k)),
        _ => Ok(()),
    }
}

fn bad(msg: impl Into<String>) -> HomrankError {
    HomrankError::Catalog(msg.into())
}

fn build_action(raw: RawAction) -> Result<ActionRecord, HomrankError> {
    let ctx = |e: HomrankError| bad(format!("action {}: {e}", raw.id));
    let mut rec = match (&raw.rule, &raw.rep) {
        (Some(rule), None) => {
            if raw.cohom.is_some() || raw.princ.is_some() {
                return Err(bad(format!(
                    "action {}: a rule entry carries no orbit data",
                    raw.id
                )));
            }
            IsotropyRule::from_parts(rule, &raw.params)
                .and_then(|r| r.action())
                .map_err(ctx)?
        }
        (None, Some(rep)) => {
            let (Some(cohom), Some(princ)) = (&raw.cohom, &raw.princ) else {
                return Err(bad(format!("action {}: needs cohom and princ", raw.id)));
            };
            let rep =
                realify(&parse_rep(rep).map_err(|e| ctx(e.into()))?).map_err(|e| ctx(e.into()))?;
            let name = princ
                .name
                .as_deref()
                .map(parse_group)
                .transpose()
                .map_err(|e| ctx(e.into()))?;
            let prov = princ.dim.provenance.min(princ.rank.provenance);
            let pi = PrincipalIsotropyData::new(princ.dim.value, princ.rank.value, name, prov)
                .map_err(ctx)?;
            ActionRecord::new(raw.id.clone(), rep, cohom.value, pi, raw.source.clone())
                .map_err(ctx)?
        }
        _ => {
            return Err(bad(format!(
                "action {}: give exactly one of rule and rep",
                raw.id
            )));
        }
    };
    rec.id = raw.id;
    rec.source = raw.source;
    if let Some(d) = raw.display {
        rec.group.display_name = Some(d.clone());
        rec.rep.source.group.display_name = Some(d);
    }
    Ok(rec)
}

fn build_space(raw: RawSpace) -> Result<SymmetricSpaceRecord, HomrankError> {
    let ctx = |e: HomrankError| bad(format!("symmetric space {}: {e}", raw.label));
    let l: GroupSpec = parse_group(&raw.l).map_err(|e| ctx(e.into()))?;
    let isotropy = realify(&parse_rep(&raw.isotropy).map_err(|e| ctx(e.into()))?)
        .map_err(|e| ctx(e.into()))?;
    let rec = SymmetricSpaceRecord {
        label: raw.label.clone(),
        family: raw.label.clone(),
        g: isotropy.source.group.clone(),
        l,
        hermitian: raw.hermitian,
        isotropy,
        rank: raw.rank.value,
        m_dim: raw.m_dim.value,
        m_rank: raw.m_rank.value,
        provenance: raw.rank.provenance,
    };
    if rec.l.dim() != rec.g.dim() + rec.isotropy.real_dim {
        return Err(ctx(HomrankError::Inconsistent {
            id: rec.label.clone(),
            detail: "isotropy dimension is not dim L - dim G".into(),
        }));
    }
    rec.isotropy_action().map_err(ctx)?;
    Ok(rec)
}

impl Catalog {
    pub fn embedded() -> Result<Catalog, HomrankError> {
        Catalog::from_json(EMBEDDED)
    }

    pub fn load(path: &Path) -> Result<Catalog, HomrankError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
        Catalog::from_json(&text)
    }

    /// The catalog named by [`CATALOG_ENV`], or the built-in one.
    pub fn from_env() -> Result<Catalog, HomrankError> {
        match std::env::var_os(CATALOG_ENV) {
            Some(p) => Catalog::load(Path::new(&p)),
            None => Catalog::embedded(),
        }
    }

    pub fn from_json(text: &str) -> Result<Catalog, HomrankError> {
        let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        check_tags(&value, "$", "")?;
        let raw: RawCatalog = serde_json::from_value(value).map_err(|e| bad(e.to_string()))?;
        if raw.version != 1 {
            return Err(bad(format!("unsupported version {}", raw.version)));
        }
        let mut actions = Vec::new();
        let mut index = HashMap::new();
        for a in raw.actions {
            let rec = build_action(a)?;
            if index.insert(rec.id.clone(), actions.len()).is_some() {
                return Err(bad(format!("duplicate action id {}", rec.id)));
            }
            actions.push(rec);
        }
        let known = |id: &str| -> Result<(), HomrankError> {
            if index.contains_key(id) {
                Ok(())
            } else {
                Err(bad(format!("unknown action id {id}")))
            }
        };
        for id in raw.inner_type_table.iter().chain(&raw.theorem.isolated) {
            known(id)?;
        }
        let pairs = |list: Vec<RawPair>| -> Result<Vec<(String, String, String)>, HomrankError> {
            list.into_iter()
                .map(|p| {
                    known(&p.sub)?;
                    known(&p.sup)?;
                    Ok((p.sub, p.sup, p.note))
                })
                .collect()
        };
        let subgroup_pairs = pairs(raw.subgroup_pairs)?;
        let orbit_pairs = pairs(raw.orbit_equivalent_pairs)?;
        let families = raw
            .theorem
            .families
            .into_iter()
            .map(|f| {
                let fam = TheoremFamily {
                    id: f.id,
                    label: f.label,
                    rule: f.rule,
                    from: f.from,
                    cohom: f.cohom.value,
                    cohom_provenance: f.cohom.provenance,
                };
                fam.instance(fam.from)?;
                Ok(fam)
            })
            .collect::<Result<Vec<_>, HomrankError>>()?;
        let exceptional = raw
            .symmetric_spaces
            .into_iter()
            .map(build_space)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Catalog {
            version: raw.version,
            actions,
            index,
            inner_type_table: raw.inner_type_table,
            families,
            isolated: raw.theorem.isolated,
            exceptional,
            subgroup_pairs,
            orbit_pairs,
        })
    }

    pub fn action(&self, id: &str) -> Option<&ActionRecord> {
        self.index.get(id).map(|&i| &self.actions[i])
    }

    pub fn actions(&self) -> &[ActionRecord] {
        &self.actions
    }

    pub fn inner_type_table(&self) -> Vec<&ActionRecord> {
        self.inner_type_table
            .iter()
            .map(|id| self.action(id).expect("validated"))
            .collect()
    }

    pub fn theorem_families(&self) -> &[TheoremFamily] {
        &self.families
    }

    pub fn theorem_isolated(&self) -> Vec<&ActionRecord> {
        self.isolated
            .iter()
            .map(|id| self.action(id).expect("validated"))
            .collect()
    }

    /// Every main-theorem example acting on a space of dimension at most
    /// `max_dim`, family members first.
    pub fn theorem_examples(&self, max_dim: u64) -> Result<Vec<ActionRecord>, HomrankError> {
        let mut out = Vec::new();
        for fam in &self.families {
            let mut n = fam.from;
            loop {
                let rec = fam.instance(n)?;
                if rec.dim_v() > max_dim {
                    break;
                }
                out.push(rec);
                n += 1;
            }
        }
        out.extend(
            self.theorem_isolated()
                .into_iter()
                .filter(|r| r.dim_v() <= max_dim)
                .cloned(),
        );
        Ok(out)
    }

    pub fn exceptional_spaces(&self) -> &[SymmetricSpaceRecord] {
        &self.exceptional
    }

    /// Classical spaces with `rk L ≤ max_rank` followed by the exceptional
    /// ones.
    pub fn symmetric_spaces(
        &self,
        max_rank: u64,
    ) -> Result<Vec<SymmetricSpaceRecord>, HomrankError> {
        let mut out = classical_symmetric_spaces(max_rank)?;
        out.extend(self.exceptional.iter().cloned());
        Ok(out)
    }

    pub fn subgroup_pairs(&self) -> Vec<(&ActionRecord, &ActionRecord, &str)> {
        self.resolve(&self.subgroup_pairs)
    }

    pub fn orbit_equivalent_pairs(&self) -> Vec<(&ActionRecord, &ActionRecord, &str)> {
        self.resolve(&self.orbit_pairs)
    }

    fn resolve<'a>(
        &'a self,
        pairs: &'a [(String, String, String)],
    ) -> Vec<(&'a ActionRecord, &'a ActionRecord, &'a str)> {
        pairs
            .iter()
            .map(|(a, b, n)| {
                (
                    self.action(a).expect("validated"),
                    self.action(b).expect("validated"),
                    n.as_str(),
                )
            })
            .collect()
    }
}

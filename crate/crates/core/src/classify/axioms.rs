use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::ClassifyError;
use crate::homrank::{check_tags, Provenance, Tagged};

/// Environment variable naming a rules file to use instead of the built-in
/// one.
pub const RULES_ENV: &str = "HOMRK_RULES";

const EMBEDDED: &str = include_str!("../../data/rules.json");

/// An external fact the search relies on without proving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axiom {
    pub id: String,
    pub statement: String,
    pub citation: String,
    pub provenance: Provenance,
}

/// How the subgroups of a known example are ruled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum RigidityMethod {
    /// finite principal isotropy: no proper subgroup keeps the homogeneity
    /// rank
    FinitePrincipalIsotropy,
    /// `dim G'' + rk G''` is forced so high that `factor/G''` would be too
    /// small to carry an effective action of `factor`
    QuotientDimension { factor: String },
    /// a subgroup of `factor` not of full rank, acting on the space through
    /// a real representation of degree `via_degree`, must also have an
    /// irreducible representation of degree `dim V`
    RestrictedDegree { factor: String, via_degree: u64 },
    /// decided by the cited axioms alone; `yields` names the one subgroup
    /// they leave
    Axiom { yields: Option<String> },
    /// every maximal subgroup lies in a candidate already pruned in the
    /// same ambient group
    ContainedInPruned,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityRule {
    pub record: String,
    pub method: RigidityMethod,
    pub axioms: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRule {
    record: String,
    method: String,
    #[serde(default)]
    factor: Option<String>,
    #[serde(default)]
    via_degree: Option<Tagged>,
    #[serde(default)]
    yields: Option<String>,
    axioms: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBook {
    version: u64,
    axioms: Vec<Axiom>,
    rigidity: Vec<RawRule>,
}

/// The cited axioms and the per-example rigidity rules.
#[derive(Debug, Clone)]
pub struct RuleBook {
    pub version: u64,
    axioms: BTreeMap<String, Axiom>,
    rigidity: BTreeMap<String, RigidityRule>,
}

fn bad(msg: impl Into<String>) -> ClassifyError {
    ClassifyError::Rules(msg.into())
}

impl RuleBook {
    pub fn embedded() -> Result<RuleBook, ClassifyError> {
        RuleBook::from_json(EMBEDDED)
    }

    pub fn load(path: &Path) -> Result<RuleBook, ClassifyError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
        RuleBook::from_json(&text)
    }

    pub fn from_env() -> Result<RuleBook, ClassifyError> {
        match std::env::var_os(RULES_ENV) {
            Some(p) => RuleBook::load(Path::new(&p)),
            None => RuleBook::embedded(),
        }
    }

    pub fn from_json(text: &str) -> Result<RuleBook, ClassifyError> {
        let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        check_tags(&value, "$", "").map_err(|e| bad(e.to_string()))?;
        let raw: RawBook = serde_json::from_value(value).map_err(|e| bad(e.to_string()))?;
        if raw.version != 1 {
            return Err(bad(format!("unsupported version {}", raw.version)));
        }
        let mut axioms = BTreeMap::new();
        for a in raw.axioms {
            if axioms.insert(a.id.clone(), a).is_some() {
                return Err(bad("duplicate axiom id"));
            }
        }
        let mut rigidity = BTreeMap::new();
        for r in raw.rigidity {
            for a in &r.axioms {
                if !axioms.contains_key(a) {
                    return Err(bad(format!("{}: unknown axiom {a}", r.record)));
                }
            }
            let need = |x: Option<String>, what: &str| {
                x.ok_or_else(|| bad(format!("{}: method {} needs {what}", r.record, r.method)))
            };
            let method = match r.method.as_str() {
                "finite-principal-isotropy" => RigidityMethod::FinitePrincipalIsotropy,
                "quotient-dimension" => RigidityMethod::QuotientDimension {
                    factor: need(r.factor.clone(), "factor")?,
                },
                "restricted-degree" => RigidityMethod::RestrictedDegree {
                    factor: need(r.factor.clone(), "factor")?,
                    via_degree: r
                        .via_degree
                        .as_ref()
                        .map(|t| t.value)
                        .ok_or_else(|| bad(format!("{}: needs via_degree", r.record)))?,
                },
                "axiom" => RigidityMethod::Axiom {
                    yields: r.yields.clone(),
                },
                "contained-in-pruned" => RigidityMethod::ContainedInPruned,
                m => return Err(bad(format!("{}: unknown method {m}", r.record))),
            };
            let rule = RigidityRule {
                record: r.record.clone(),
                method,
                axioms: r.axioms,
            };
            if rigidity.insert(r.record.clone(), rule).is_some() {
                return Err(bad(format!("duplicate rigidity rule for {}", r.record)));
            }
        }
        Ok(RuleBook {
            version: raw.version,
            axioms,
            rigidity,
        })
    }

    pub fn axiom(&self, id: &str) -> Option<&Axiom> {
        self.axioms.get(id)
    }

    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms.values()
    }

    pub fn rigidity_for(&self, record: &str) -> Option<&RigidityRule> {
        self.rigidity.get(record)
    }

    pub fn rigidity_rules(&self) -> impl Iterator<Item = &RigidityRule> {
        self.rigidity.values()
    }

    /// Citations of the named axioms joined for a report line.
    pub fn cite(&self, ids: &[&str]) -> String {
        ids.iter()
            .map(|id| match self.axioms.get(*id) {
                Some(a) => format!("{} [{}]", a.id, a.citation),
                None => format!("{id} [missing]"),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

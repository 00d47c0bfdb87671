//! The end-to-end search: every connected subgroup of `SO(d)`, `d ≤ max_dim`,
//! acting absolutely irreducibly on `R^d`, reached by descending through
//! maximal subgroups until a filter prunes the branch or known orbit data
//! decides it.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::axioms::{RigidityMethod, RuleBook};
use super::diophantine::{solve_even_with, solve_odd_with};
use super::dynkin::{dynkin_candidates_in, DynkinClass, IrrepIndex};
use super::filters::*;
use super::{Ambient, AmbientKind, CandidateCase, ChainLink, ClassifyError, ExampleTag, Verdict};
use crate::homrank::{
    first_fundamental, homogeneity_rank, so_vector_weight, sosp_regime, ActionRecord, Catalog,
    IsotropyRule, SospRegime, SymmetricSpaceRecord,
};
use crate::lie::{enumerate_weights, fs_indicator, GroupSpec, HighestWeight, Reality, SimpleType};
use crate::parse::{parse_group, parse_rep};
use crate::repcalc::{canonical_types, IrrepSpec};

pub const REPORT_VERSION: u64 = 1;

/// JSON Schema (draft 2020-12) of the serialized report.
pub const REPORT_SCHEMA: &str = include_str!("../../data/report.schema.json");

/// The filters that can be switched off. Switching one off may only turn
/// pruned candidates into deferred ones, never change an example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    DimRank,
    DegreeBound,
    SquareBound,
    QuadraticBound,
    SosoBounds,
    FirstFactorBound,
    SpDegreeBound,
    SpSquareBound,
    SpSecondBound,
    InnerType,
}

impl Filter {
    pub const ALL: [Filter; 10] = [
        Filter::DimRank,
        Filter::DegreeBound,
        Filter::SquareBound,
        Filter::QuadraticBound,
        Filter::SosoBounds,
        Filter::FirstFactorBound,
        Filter::SpDegreeBound,
        Filter::SpSquareBound,
        Filter::SpSecondBound,
        Filter::InnerType,
    ];
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    pub disabled: BTreeSet<Filter>,
}

impl ClassifyOptions {
    pub fn without(filters: &[Filter]) -> Self {
        ClassifyOptions {
            disabled: filters.iter().copied().collect(),
        }
    }

    fn on(&self, f: Filter) -> bool {
        !self.disabled.contains(&f)
    }
}

/// One example in the summary of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportExample {
    pub record: String,
    pub group: String,
    pub rep: String,
    pub d: u64,
    pub cohom: u64,
    pub princ_dim: u64,
    pub princ_rank: u64,
    pub homrank: i64,
    pub tag: ExampleTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_space: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCounts {
    pub example: u64,
    pub pruned: u64,
    pub deferred: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub version: u64,
    pub max_dim: u64,
    pub completeness: String,
    pub exceptional: Vec<ReportExample>,
    pub symmetric: Vec<ReportExample>,
    pub counts: CaseCounts,
    pub candidates: Vec<CandidateCase>,
}

impl ClassificationReport {
    pub fn deferred(&self) -> impl Iterator<Item = &CandidateCase> {
        self.candidates
            .iter()
            .filter(|c| c.verdict == Verdict::Deferred)
    }
}

/// Key identifying a representation up to automorphisms of each factor and
/// complex conjugation.
pub fn rep_key(ir: &IrrepSpec) -> String {
    let mut parts: Vec<String> = ir
        .factors()
        .map(|(t, w)| format!("{t} {}", w.canonical(t)))
        .collect();
    parts.sort();
    let mut charges: Vec<i64> = ir.torus_charges.iter().map(|c| c.abs()).collect();
    charges.sort_unstable();
    format!("{}|{charges:?}", parts.join("*"))
}

#[derive(Debug, Clone)]
struct Known {
    rec: ActionRecord,
    homrank: i64,
    exceptional: bool,
    /// record id, or family id for a family member
    rule_id: String,
}

struct Ctx<'a> {
    rules: &'a RuleBook,
    opts: &'a ClassifyOptions,
    index: IrrepIndex,
    known: HashMap<String, Known>,
    by_id: HashMap<String, Known>,
    symmetric: HashMap<String, SymmetricSpaceRecord>,
    orbit_partner: HashMap<String, String>,
    /// `(m, p, q)`, `p ≤ q`, with `SO(m) × Sp(p) × Sp(q)` of vanishing
    /// homogeneity rank in the generic regime
    sosp_zero: HashSet<(u64, u64, u64)>,
}

impl<'a> Ctx<'a> {
    fn new(
        max_dim: u64,
        catalog: &Catalog,
        rules: &'a RuleBook,
        opts: &'a ClassifyOptions,
    ) -> Result<Self, ClassifyError> {
        let index = IrrepIndex::build(max_dim);
        let mut known = HashMap::new();
        let mut by_id = HashMap::new();
        let isolated: HashSet<&str> = catalog
            .theorem_isolated()
            .into_iter()
            .map(|r| r.id.as_str())
            .collect();
        let mut add =
            |rec: ActionRecord, exceptional: bool, rule_id: String| -> Result<(), ClassifyError> {
                let k = Known {
                    homrank: homogeneity_rank(&rec)?,
                    rec,
                    exceptional,
                    rule_id,
                };
                known.insert(rep_key(&k.rec.rep.source), k.clone());
                by_id.insert(k.rec.id.clone(), k);
                Ok(())
            };
        for rec in catalog.actions() {
            add(
                rec.clone(),
                isolated.contains(rec.id.as_str()),
                rec.id.clone(),
            )?;
        }
        for fam in catalog.theorem_families() {
            for n in fam.from.. {
                let rec = fam.instance(n)?;
                if rec.dim_v() > max_dim {
                    break;
                }
                add(rec, true, fam.id.clone())?;
            }
        }
        let max_rank = index
            .entries()
            .iter()
            .filter(|e| {
                e.reality == Reality::Real && dim_rank_prune(&GroupSpec::simple(e.ty), e.degree)
            })
            .map(|e| e.ty.rank() as u64)
            .max()
            .unwrap_or(1);
        let mut symmetric = HashMap::new();
        for s in catalog.symmetric_spaces(2 * max_rank + 1)? {
            symmetric.entry(rep_key(&s.isotropy.source)).or_insert(s);
        }
        let mut orbit_partner = HashMap::new();
        for (a, b, _) in catalog.orbit_equivalent_pairs() {
            orbit_partner.insert(a.id.clone(), rep_key(&b.rep.source));
            orbit_partner.insert(b.id.clone(), rep_key(&a.rep.source));
        }
        let bound = (max_dim / 4 + 1).max(100);
        let sosp_zero = solve_even_with(bound, bound, 2)
            .into_iter()
            .chain(solve_odd_with(bound, bound, true))
            .map(|s| (s.m, s.p.min(s.q), s.p.max(s.q)))
            .collect();
        Ok(Ctx {
            rules,
            opts,
            index,
            known,
            by_id,
            symmetric,
            orbit_partner,
            sosp_zero,
        })
    }

    fn symmetric_label(&self, key: &str, record: &str) -> Option<String> {
        let inner = |k: &str| {
            self.symmetric
                .get(k)
                .filter(|s| s.inner_type())
                .map(|s| s.label.clone())
        };
        inner(key).or_else(|| self.orbit_partner.get(record).and_then(|k| inner(k)))
    }
}

fn sp_name(q: u64) -> String {
    if q == 1 {
        "SU(2)".into()
    } else {
        format!("Sp({q})")
    }
}

fn link(group: String, text: &str) -> Result<(ChainLink, IrrepSpec), ClassifyError> {
    let ir = parse_rep(text)?;
    Ok((ChainLink::new(group, Some(ir.to_string())), ir))
}

fn with(chain: &[ChainLink], l: ChainLink) -> Vec<ChainLink> {
    let mut v = chain.to_vec();
    v.push(l);
    v
}

fn inconsistent(candidate: &str, detail: impl Into<String>) -> ClassifyError {
    ClassifyError::Inconsistent {
        candidate: candidate.into(),
        detail: detail.into(),
    }
}

const DIM_RANK: &str = "vanishing homogeneity rank needs dim V ≤ dim G + rk G";
const NOT_ABS: &str = "reducible, or preserves a complex structure";

struct Walk<'c, 'a> {
    ctx: &'c Ctx<'a>,
    amb: Ambient,
    d: u64,
    top: ChainLink,
    out: Vec<CandidateCase>,
    examples: Vec<(String, ReportExample)>,
}

impl<'c, 'a> Walk<'c, 'a> {
    fn new(ctx: &'c Ctx<'a>, d: u64) -> Self {
        let amb = Ambient {
            kind: AmbientKind::SO,
            degree: d,
        };
        Walk {
            ctx,
            amb,
            d,
            top: ChainLink::new(amb.to_string(), None),
            out: Vec::new(),
            examples: Vec::new(),
        }
    }

    fn case(&self, chain: Vec<ChainLink>, step: &str) -> CandidateCase {
        CandidateCase::new(self.amb, chain, step, self.d)
    }

    fn on(&self, f: Filter) -> bool {
        self.ctx.opts.on(f)
    }

    /// Marks `c` an example given by `rec` and records it.
    fn example(
        &mut self,
        mut c: CandidateCase,
        rec: &ActionRecord,
        tag: ExampleTag,
        label: Option<String>,
        rule: &str,
        citation: String,
    ) -> Result<(), ClassifyError> {
        let h = homogeneity_rank(rec)?;
        if h != 0 || rec.dim_v() != self.d {
            return Err(inconsistent(
                &rec.id,
                format!("example with homogeneity rank {h} on R^{}", rec.dim_v()),
            ));
        }
        c.verdict = Verdict::Example;
        c.rule_fired = rule.into();
        c.citation = citation;
        c.record = Some(rec.id.clone());
        c.homrank = Some(0);
        c.tag = Some(tag);
        c.symmetric_space = label.clone();
        self.examples.push((
            rep_key(&rec.rep.source),
            ReportExample {
                record: rec.id.clone(),
                group: rec.group.name(),
                rep: rec.rep.source.to_string(),
                d: self.d,
                cohom: rec.cohom,
                princ_dim: rec.princ.dim,
                princ_rank: rec.princ.rank,
                homrank: 0,
                tag,
                symmetric_space: label,
            },
        ));
        self.out.push(c);
        Ok(())
    }

    /// A candidate that passed every filter: decided by orbit data if there
    /// is any.
    fn known_case(&mut self, mut c: CandidateCase, ir: &IrrepSpec) -> Result<(), ClassifyError> {
        let key = rep_key(ir);
        let Some(k) = self.ctx.known.get(&key).cloned() else {
            self.out
                .push(c.noted("passes every filter and has no recorded orbit data"));
            return Ok(());
        };
        if k.homrank != 0 {
            c.homrank = Some(k.homrank);
            self.out.push(c.prune(
                "recorded-homogeneity-rank",
                format!("{}: homogeneity rank {}", k.rec.source, k.homrank),
            ));
            return Ok(());
        }
        self.known_example(c, &k, &key)
    }

    fn known_example(
        &mut self,
        c: CandidateCase,
        k: &Known,
        key: &str,
    ) -> Result<(), ClassifyError> {
        let chain = c.chain.clone();
        let (tag, label) = if k.exceptional {
            (ExampleTag::Exceptional, None)
        } else {
            let label = self.ctx.symmetric_label(key, &k.rec.id);
            (ExampleTag::SymmetricOrbitEquivalent, label)
        };
        self.example(
            c,
            &k.rec,
            tag,
            label,
            "recorded-orbit-data",
            k.rec.source.clone(),
        )?;
        self.rigidity(&chain, k)
    }

    fn ambient_root(&mut self) -> Result<(), ClassifyError> {
        let c = self.case(vec![self.top.clone()], "ambient");
        if self.d % 2 == 1 {
            self.out.push(c.prune(
                "parity",
                "dim V - cohom = dim G/H ≡ rk G - rk H = cohom (mod 2) when the homogeneity rank vanishes, so dim V is even",
            ));
            return Ok(());
        }
        let rec = IsotropyRule::SoVector { n: self.d }.action()?;
        self.example(
            c,
            &rec,
            ExampleTag::SymmetricOrbitEquivalent,
            Some(format!("SO({})/SO({})", self.d + 1, self.d)),
            "sphere",
            "transitive on the unit sphere".into(),
        )
    }

    fn maximal(&mut self) -> Result<(), ClassifyError> {
        if self.d % 2 == 1 {
            return Ok(());
        }
        let mut reducible = 0;
        for c in dynkin_candidates_in(self.amb, &self.ctx.index)? {
            match c.class.clone() {
                Some(DynkinClass::Reducible { .. }) => reducible += 1,
                Some(DynkinClass::SoTensor { p, q }) => self.so_tensor(p, q)?,
                Some(DynkinClass::SpTensor { p, q }) => self.sp_tensor(p, q)?,
                Some(DynkinClass::Simple { ty, weight, .. }) => self.simple(c, ty, weight)?,
                _ => self.out.push(c),
            }
        }
        let mut c = self.case(
            vec![
                self.top.clone(),
                ChainLink::new(format!("SO(k)×SO({}-k)", self.d), None),
            ],
            "maximal",
        );
        c.abs_irreducible = false;
        self.out.push(
            c.prune(
                "not-absolutely-irreducible",
                "leaves a proper subspace invariant",
            )
            .noted(format!("{reducible} classes, 1 ≤ k ≤ {}", self.d / 2)),
        );
        Ok(())
    }

    /// A simple group on `R^d` through an irreducible representation.
    fn simple(
        &mut self,
        c: CandidateCase,
        ty: SimpleType,
        w: HighestWeight,
    ) -> Result<(), ClassifyError> {
        let g = GroupSpec::simple(ty);
        let ir = IrrepSpec::simple(ty, w)?;
        let key = rep_key(&ir);
        if self.on(Filter::DimRank) && !dim_rank_prune(&g, self.d) {
            self.out.push(
                c.prune("dim-rank", DIM_RANK)
                    .noted(format!("dim G + rk G = {}", g.dim() + g.rank())),
            );
            return Ok(());
        }
        if let Some(s) = self.ctx.symmetric.get(&key) {
            if s.inner_type() {
                if let Some(k) = self.ctx.known.get(&key).filter(|k| k.homrank == 0).cloned() {
                    return self.known_example(c, &k, &key);
                }
                let rec = s.isotropy_action()?;
                let chain = c.chain.clone();
                self.example(
                    c,
                    &rec,
                    ExampleTag::SymmetricOrbitEquivalent,
                    Some(s.label.clone()),
                    "symmetric-isotropy",
                    "isotropy representation of an inner symmetric space".into(),
                )?;
                self.out.push(
                    self.case(
                        with(&chain, ChainLink::new("proper subgroups", None)),
                        "subgroups",
                    )
                    .noted("no rigidity rule recorded"),
                );
                return Ok(());
            }
            if self.on(Filter::InnerType) {
                let mut c = c.prune(
                    "outer-type",
                    format!(
                        "isotropy representation of {}, which has rk L > rk G; homogeneity rank rk G - rk L",
                        s.label
                    ),
                );
                c.homrank = Some(s.symmetric_homrank());
                self.out.push(c);
                return Ok(());
            }
        }
        self.known_case(c, &ir)
    }

    fn so_tensor(&mut self, p: u64, q: u64) -> Result<(), ClassifyError> {
        let rule = IsotropyRule::SoTensor { p, q };
        let rec = rule.action()?;
        let l1 = ChainLink::new(format!("SO({p})×SO({q})"), Some(rec.rep.source.to_string()));
        let chain = vec![self.top.clone(), l1];
        let mut c = self.case(chain.clone(), "maximal");
        c.class = Some(DynkinClass::SoTensor { p, q });
        self.example(
            c,
            &rec,
            ExampleTag::SymmetricOrbitEquivalent,
            Some(format!("SO({})/SO({p})×SO({q})", p + q)),
            "symmetric-isotropy",
            "isotropy representation of an inner symmetric space".into(),
        )?;

        // K × SO(q): at a regular point of SO(p) × SO(q) the normal space
        // is fixed by the isotropy, so Püttmann's estimate gives
        // rk K + rk SO(p) ≥ p ≥ 2 rk SO(p)
        let least = p - p / 2;
        self.out.push(
            self.case(
                with(
                    &chain,
                    ChainLink::new(format!("K×SO({q}), K ⊊ SO({p})"), None),
                ),
                "so-tensor/first-factor",
            )
            .prune(
                "full-rank-factor",
                self.ctx.rules.cite(&["maximal-rank-orthogonal"]),
            )
            .noted(format!(
                "rk K ≥ {p} - rk SO({p}) = {least} ≥ rk SO({p}), and K is irreducible of real type"
            )),
        );

        if p == q {
            self.out.push(
                self.case(
                    with(
                        &chain,
                        ChainLink::new(format!("SO({p})×K, K ⊊ SO({q})"), None),
                    ),
                    "so-tensor/second-factor",
                )
                .prune(
                    "factor-symmetry",
                    "the first-factor case with the factors exchanged",
                ),
            );
            let g = parse_group(&format!("SO{p}"))?;
            let c = self.case(
                with(&chain, ChainLink::new(format!("SO({p}) diagonal"), None)),
                "so-tensor/diagonal",
            );
            self.out
                .push(if !self.on(Filter::DimRank) || dim_rank_prune(&g, self.d) {
                    c.noted("passes the dim/rank bound")
                } else {
                    c.prune("dim-rank", DIM_RANK)
                });
            return Ok(());
        }

        let mut merged = 0;
        let inner = Ambient {
            kind: AmbientKind::SO,
            degree: q,
        };
        for k in dynkin_candidates_in(inner, &self.ctx.index)? {
            match k.class.clone() {
                Some(DynkinClass::SoTensor { p: a, q: b }) => self.soso(&chain, p, a, b)?,
                Some(DynkinClass::SpTensor { p: a, q: b }) => self.sosp(
                    &chain,
                    "so-tensor/second-factor",
                    format!("SO({p})×{}×{}", sp_name(a), sp_name(b)),
                    p,
                    a,
                    b,
                )?,
                Some(DynkinClass::Simple { ty, weight, .. }) => {
                    self.so_simple(&chain, p, q, ty, weight)?
                }
                _ => merged += 1,
            }
        }
        let mut c = self.case(
            with(
                &chain,
                ChainLink::new(format!("SO({p})×K, K ⊊ SO({q}) reducible or unitary"), None),
            ),
            "so-tensor/second-factor",
        );
        c.abs_irreducible = false;
        self.out.push(
            c.prune("not-absolutely-irreducible", NOT_ABS)
                .noted(format!("{merged} classes")),
        );
        Ok(())
    }

    fn soso(&mut self, chain: &[ChainLink], p: u64, k: u64, l: u64) -> Result<(), ClassifyError> {
        let (lk, ir) = link(
            format!("SO({p})×SO({k})×SO({l})"),
            &format!(
                "SO{p}*SO{k}*SO{l} {}x{}x{}",
                so_vector_weight(p),
                so_vector_weight(k),
                so_vector_weight(l)
            ),
        )?;
        let c = self.case(with(chain, lk), "so-tensor/second-factor");
        if self.on(Filter::SosoBounds) {
            if let Err(rule) = so_tensor_soso_filter(k, l, p) {
                let (name, text) = match rule {
                    SosoRule::DegreeBound => ("degree-bound", "k² + l² - 6kl + 2θ + 9 ≥ 0"),
                    SosoRule::RegroupsFactors => (
                        "regroups-factors",
                        "pk ≤ l: lies in SO(pk)×SO(l) inside its first factor",
                    ),
                    SosoRule::QuadraticBound => ("quadratic-bound", "p² - 2qp + 2r ≥ 0"),
                    SosoRule::SquareBound => ("square-bound", "p² < 2r"),
                };
                self.out.push(c.prune(name, text));
                return Ok(());
            }
        }
        self.known_case(c, &ir)
    }

    fn so_simple(
        &mut self,
        chain: &[ChainLink],
        p: u64,
        q: u64,
        ty: SimpleType,
        w: HighestWeight,
    ) -> Result<(), ClassifyError> {
        let (lk, ir) = link(
            format!("SO({p})×{}", ty.group_name()),
            &format!("SO{p}*{ty} {}x{w}", so_vector_weight(p)),
        )?;
        let c = self.case(with(chain, lk), "so-tensor/second-factor");
        let r = dim_plus_rank(ty);
        let checks = [
            (
                Filter::DegreeBound,
                degree_bound(q, r),
                "degree-bound",
                "q ≤ r/3 + 3/2",
            ),
            (
                Filter::SquareBound,
                square_bound(p, r),
                "square-bound",
                "p² < 2r",
            ),
            (
                Filter::QuadraticBound,
                quadratic_bound(p, q, r),
                "quadratic-bound",
                "p² - 2qp + 2r ≥ 0",
            ),
        ];
        for (f, ok, name, text) in checks {
            if self.on(f) && !ok {
                self.out
                    .push(c.prune(name, text).noted(format!("r = dim K + rk K = {r}")));
                return Ok(());
            }
        }
        self.known_case(c, &ir)
    }

    /// `SO(m) × Sp(a) × Sp(b)` on `R^m ⊗ R^4ab`, decided by its principal
    /// isotropy and cross-checked against the Diophantine solutions.
    fn sosp(
        &mut self,
        chain: &[ChainLink],
        step: &str,
        group: String,
        m: u64,
        a: u64,
        b: u64,
    ) -> Result<(), ClassifyError> {
        let (a, b) = (a.min(b), a.max(b));
        let rule = IsotropyRule::SoSpSp { m, p: a, q: b };
        let rec = rule.action()?;
        let h = homogeneity_rank(&rec)?;
        let regime = sosp_regime(m, a, b);
        let expected = match regime {
            SospRegime::LargeM => a == 1 && b == 1,
            SospRegime::LargeQ => false,
            SospRegime::Generic => self.ctx.sosp_zero.contains(&(m, a, b)),
        };
        if (h == 0) != expected {
            return Err(inconsistent(
                &rec.id,
                format!("homogeneity rank {h} disagrees with the Diophantine solutions in regime {regime:?}"),
            ));
        }
        let c = self.case(
            with(
                chain,
                ChainLink::new(group, Some(rec.rep.source.to_string())),
            ),
            step,
        );
        if h == 0 {
            return self.example(
                c.noted(format!(
                    "the same group as SO({m})×SO(4); its subgroups are searched under that candidate"
                )),
                &rec,
                ExampleTag::SymmetricOrbitEquivalent,
                Some(format!("SO({})/SO({m})×SO(4)", m + 4)),
                "symmetric-isotropy",
                "isotropy representation of an inner symmetric space".into(),
            );
        }
        let mut c = c
            .prune(
                "principal-isotropy",
                self.ctx.rules.cite(&["tensor-principal-isotropy"]),
            )
            .noted(format!("regime {regime:?}; no Diophantine solution"));
        c.homrank = Some(h);
        self.out.push(c);
        Ok(())
    }

    fn sp_tensor(&mut self, p: u64, q: u64) -> Result<(), ClassifyError> {
        let rule = IsotropyRule::SpTensor { p, q };
        let rec = rule.action()?;
        let l1 = ChainLink::new(format!("Sp({p})×Sp({q})"), Some(rec.rep.source.to_string()));
        let chain = vec![self.top.clone(), l1];
        let mut c = self.case(chain.clone(), "maximal");
        c.class = Some(DynkinClass::SpTensor { p, q });
        self.example(
            c,
            &rec,
            ExampleTag::SymmetricOrbitEquivalent,
            Some(format!("Sp({})/Sp({p})×Sp({q})", p + q)),
            "symmetric-isotropy",
            "isotropy representation of an inner symmetric space".into(),
        )?;

        // the second factor first: the first-factor examples refer back to it
        if p == q {
            self.out.push(
                self.case(
                    with(
                        &chain,
                        ChainLink::new(format!("Sp({p})×K, K ⊊ Sp({q})"), None),
                    ),
                    "sp-tensor/second-factor",
                )
                .prune(
                    "factor-symmetry",
                    "the first-factor case with the factors exchanged",
                ),
            );
            let g = parse_group(&format!("Sp{p}"))?;
            let c = self.case(
                with(&chain, ChainLink::new(format!("Sp({p}) diagonal"), None)),
                "sp-tensor/diagonal",
            );
            self.out
                .push(if !self.on(Filter::DimRank) || dim_rank_prune(&g, self.d) {
                    c.noted("passes the dim/rank bound")
                } else {
                    c.prune("dim-rank", DIM_RANK)
                });
        } else {
            let mut merged = 0;
            let inner = Ambient {
                kind: AmbientKind::Sp,
                degree: q,
            };
            for k in dynkin_candidates_in(inner, &self.ctx.index)? {
                match k.class.clone() {
                    Some(DynkinClass::SoSp { p: a, q: b }) => self.sosp(
                        &chain,
                        "sp-tensor/second-factor",
                        format!("{}×SO({a})×{}", sp_name(p), sp_name(b)),
                        a,
                        p,
                        b,
                    )?,
                    Some(DynkinClass::Simple { ty, weight, .. }) => {
                        self.sp_second(&chain, p, q, ty, weight)?
                    }
                    _ => merged += 1,
                }
            }
            self.merged_node(
                &chain,
                format!("Sp({p})×K, K ⊊ Sp({q}) reducible or unitary"),
                "sp-tensor/second-factor",
                merged,
            );
        }

        let mut merged = 0;
        let inner = Ambient {
            kind: AmbientKind::Sp,
            degree: p,
        };
        for k in dynkin_candidates_in(inner, &self.ctx.index)? {
            match k.class.clone() {
                Some(DynkinClass::SoSp { p: a, q: b }) => self.sosp(
                    &chain,
                    "sp-tensor/first-factor",
                    format!("SO({a})×{}×{}", sp_name(b), sp_name(q)),
                    a,
                    b,
                    q,
                )?,
                Some(DynkinClass::Simple { ty, weight, .. }) => {
                    let (lk, ir) = link(
                        format!("{}×{}", ty.group_name(), sp_name(q)),
                        &format!("{ty}*Sp{q} {weight}x{}", first_fundamental(q)),
                    )?;
                    let c = self.case(with(&chain, lk), "sp-tensor/first-factor");
                    let r = dim_plus_rank(ty);
                    if self.on(Filter::FirstFactorBound) && !first_factor_bound(p, r) {
                        self.out.push(
                            c.prune("first-factor-bound", "2p² - 2p ≤ dim K + rk K")
                                .noted(format!("r = {r}")),
                        );
                    } else {
                        self.known_case(c, &ir)?;
                    }
                }
                _ => merged += 1,
            }
        }
        self.merged_node(
            &chain,
            format!("K×Sp({q}), K ⊊ Sp({p}) reducible or unitary"),
            "sp-tensor/first-factor",
            merged,
        );
        Ok(())
    }

    fn merged_node(&mut self, chain: &[ChainLink], name: String, step: &str, n: usize) {
        let mut c = self.case(with(chain, ChainLink::new(name, None)), step);
        c.abs_irreducible = false;
        self.out.push(
            c.prune("not-absolutely-irreducible", NOT_ABS)
                .noted(format!("{n} classes")),
        );
    }

    fn sp_second(
        &mut self,
        chain: &[ChainLink],
        p: u64,
        q: u64,
        ty: SimpleType,
        w: HighestWeight,
    ) -> Result<(), ClassifyError> {
        let (lk, ir) = link(
            format!("{}×{}", sp_name(p), ty.group_name()),
            &format!("Sp{p}*{ty} {}x{w}", first_fundamental(p)),
        )?;
        let c = self.case(with(chain, lk), "sp-tensor/second-factor");
        let r = dim_plus_rank(ty);
        let checks = [
            (
                Filter::SpDegreeBound,
                sp_degree_bound(q, r),
                "degree-bound",
                "q ≤ r/4 + 1",
            ),
            (
                Filter::SpSquareBound,
                sp_square_bound(p, r),
                "square-bound",
                "p < (1 + √(1 + 2r))/2",
            ),
            (
                Filter::SpSecondBound,
                sp_second_bound(p, q, r),
                "second-bound",
                "p ≤ q - 1/2 - √((2q - 1)² - 2r)/2",
            ),
        ];
        for (f, ok, name, text) in checks {
            if self.on(f) && !ok {
                self.out
                    .push(c.prune(name, text).noted(format!("r = dim K + rk K = {r}")));
                return Ok(());
            }
        }
        self.known_case(c, &ir)
    }

    /// Rules out the proper subgroups of an example with recorded orbit data.
    fn rigidity(&mut self, chain: &[ChainLink], k: &Known) -> Result<(), ClassifyError> {
        let sub = |name: &str| with(chain, ChainLink::new(name, None));
        let Some(rule) = self.ctx.rules.rigidity_for(&k.rule_id).cloned() else {
            self.out.push(
                self.case(sub("proper subgroups"), "subgroups")
                    .noted("no rigidity rule recorded"),
            );
            return Ok(());
        };
        let axioms: Vec<&str> = rule.axioms.iter().map(String::as_str).collect();
        let cite = self.ctx.rules.cite(&axioms);
        match &rule.method {
            RigidityMethod::FinitePrincipalIsotropy => {
                if !k.rec.princ.is_finite() {
                    return Err(inconsistent(
                        &k.rec.id,
                        "rigidity rule needs finite principal isotropy",
                    ));
                }
                self.out.push(self.case(sub("proper subgroups"), "subgroups").prune(
                    "finite-principal-isotropy",
                    "a subgroup keeping the homogeneity rank is orbit equivalent with finite principal isotropy, so it has the same Lie algebra",
                ));
            }
            RigidityMethod::QuotientDimension { factor } => {
                let big = single_factor(factor)?;
                let g = &k.rec.group;
                let other = g.dim() + g.rank() - dim_plus_rank(big);
                let others = other_factors(g, big);
                self.out.push(
                    self.case(sub(&format!("K×{}, K ⊊ {others}", big.group_name())), "subgroups")
                        .prune("torus-factor", "the maximal connected subgroups of SO(3) and Sp(1) are circles, which fix a line or preserve a complex structure"),
                );
                // dim G'' + rk G'' ≥ d - other and rk G'' ≤ rk factor
                let min_dim = self.d.saturating_sub(other + big.rank() as u64);
                let codim = big.dim().saturating_sub(min_dim);
                let c = self.case(
                    sub(&format!("{others}×G'', G'' ⊊ {}", big.group_name())),
                    "subgroups",
                );
                let iso = codim * (codim + 1) / 2;
                let notes = format!(
                    "dim G'' ≥ {min_dim}, so dim {}/G'' ≤ {codim}, whose isometry group has dimension ≤ {iso}; dim {} = {}",
                    big.group_name(),
                    big.group_name(),
                    big.dim()
                );
                self.out.push(if iso < big.dim() {
                    c.prune("quotient-dimension", cite).noted(notes)
                } else {
                    c.noted(notes)
                });
            }
            RigidityMethod::RestrictedDegree { factor, via_degree } => {
                let big = single_factor(factor)?;
                let g = &k.rec.group;
                let need = self
                    .d
                    .saturating_sub(g.dim() + g.rank() - dim_plus_rank(big));
                let has_real = |t: SimpleType, deg: u64| {
                    enumerate_weights(t, deg)
                        .into_iter()
                        .any(|(w, n)| n == deg && fs_indicator(t, &w) == Reality::Real)
                };
                let cands: Vec<SimpleType> = canonical_types(big.rank() - 1)
                    .into_iter()
                    .filter(|t| dim_plus_rank(*t) >= need && has_real(*t, *via_degree))
                    .collect();
                let survivors: Vec<String> = cands
                    .iter()
                    .filter(|t| has_real(**t, self.d))
                    .map(|t| t.to_string())
                    .collect();
                let names: Vec<String> = cands.iter().map(|t| t.to_string()).collect();
                let c = self.case(sub(&format!("K ⊊ {}", big.group_name())), "subgroups");
                let notes = format!(
                    "simple K of lower rank with dim K + rk K ≥ {need} and a real representation of degree {via_degree}: [{}]; of these with one of degree {}: [{}]",
                    names.join(", "),
                    self.d,
                    survivors.join(", ")
                );
                self.out.push(if survivors.is_empty() {
                    c.prune("restricted-degree", cite).noted(notes)
                } else {
                    c.noted(notes)
                });
            }
            RigidityMethod::Axiom { yields } => {
                self.out.push(
                    self.case(sub("proper subgroups"), "subgroups")
                        .prune("axiom", cite)
                        .noted(match yields {
                            Some(y) => format!("the only survivor is {y}"),
                            None => "no survivor".into(),
                        }),
                );
                if let Some(y) = yields {
                    let yk = self.ctx.by_id.get(y).cloned().ok_or_else(|| {
                        inconsistent(&k.rec.id, format!("yields unknown record {y}"))
                    })?;
                    let l =
                        ChainLink::new(yk.rec.group.name(), Some(yk.rec.rep.source.to_string()));
                    let c = self.case(with(chain, l), "subgroups");
                    if yk.homrank == 0 {
                        let key = rep_key(&yk.rec.rep.source);
                        self.known_example(c, &yk, &key)?;
                    } else {
                        return Err(inconsistent(
                            y,
                            "yielded record has nonzero homogeneity rank",
                        ));
                    }
                }
            }
            RigidityMethod::ContainedInPruned => self.contained_in_pruned(chain, k, &cite)?,
        }
        Ok(())
    }

    /// `Sp(1) × Sp(q)` through the cubic: a maximal `Sp(1) × K` lies in
    /// `Sp(2) × K`, pruned earlier in the same ambient group.
    fn contained_in_pruned(
        &mut self,
        chain: &[ChainLink],
        k: &Known,
        cite: &str,
    ) -> Result<(), ClassifyError> {
        let q = self.d / 8;
        if 8 * q != self.d {
            return Err(inconsistent(&k.rec.id, "containment rule needs dim V = 8q"));
        }
        let sub = |name: String| with(chain, ChainLink::new(name, None));
        let mut c = self.case(sub(format!("U(1)×Sp({q})")), "subgroups");
        c.abs_irreducible = false;
        self.out
            .push(c.prune("not-absolutely-irreducible", cite.to_string()));
        let parent = format!("Sp(2)×Sp({q})");
        let mut merged = 0;
        let inner = Ambient {
            kind: AmbientKind::Sp,
            degree: q,
        };
        for kc in dynkin_candidates_in(inner, &self.ctx.index)? {
            let (kname, kgroup) = match kc.class.clone() {
                Some(DynkinClass::Simple { ty, .. }) => (ty.group_name(), GroupSpec::simple(ty)),
                Some(DynkinClass::SoSp { p: a, q: b }) => (
                    format!("SO({a})×{}", sp_name(b)),
                    parse_group(&format!("SO{a}*Sp{b}"))?,
                ),
                _ => {
                    merged += 1;
                    continue;
                }
            };
            let g = GroupSpec::simple(SimpleType::a(1)).product(&kgroup);
            let c = self.case(sub(format!("SU(2)×{kname}")), "subgroups");
            if !dim_rank_prune(&g, self.d) {
                self.out.push(c.prune("dim-rank", DIM_RANK));
                continue;
            }
            let target = match kc.class {
                Some(DynkinClass::SoSp { p: a, q: b }) => format!("Sp(2)×SO({a})×{}", sp_name(b)),
                _ => format!("Sp(2)×{kname}"),
            };
            let pruned = self.out.iter().any(|o| {
                o.chain.get(1).map(|l| l.group.as_str()) == Some(parent.as_str())
                    && o.step == "sp-tensor/second-factor"
                    && o.group() == target
                    && o.verdict == Verdict::Pruned
            });
            self.out.push(if pruned {
                c.prune("contained-in-pruned", cite.to_string())
                    .noted(format!("lies in {target}, pruned under {parent}"))
            } else {
                c.noted(format!("lies in {target}, which is not pruned"))
            });
        }
        let mut c = self.case(
            sub(format!("SU(2)×K, K ⊊ Sp({q}) reducible or unitary")),
            "subgroups",
        );
        c.abs_irreducible = false;
        self.out.push(
            c.prune("not-absolutely-irreducible", NOT_ABS)
                .noted(format!("{merged} classes")),
        );
        Ok(())
    }
}

fn single_factor(name: &str) -> Result<SimpleType, ClassifyError> {
    let g = parse_group(name)?;
    match g.simple_factors.as_slice() {
        [t] if g.torus_rank == 0 => Ok(*t),
        _ => Err(ClassifyError::Rules(format!("{name} is not simple"))),
    }
}

fn other_factors(g: &GroupSpec, big: SimpleType) -> String {
    let mut rest = g.simple_factors.clone();
    if let Some(i) = rest.iter().position(|t| *t == big) {
        rest.remove(i);
    }
    rest.iter()
        .map(|t| t.group_name())
        .collect::<Vec<_>>()
        .join("×")
}

/// The search with the built-in (or environment-selected) catalog and rules.
pub fn run_classification(max_dim: u64) -> Result<ClassificationReport, ClassifyError> {
    let catalog = Catalog::from_env()?;
    let rules = RuleBook::from_env()?;
    run_classification_with(max_dim, &ClassifyOptions::default(), &catalog, &rules)
}

pub fn run_classification_with(
    max_dim: u64,
    opts: &ClassifyOptions,
    catalog: &Catalog,
    rules: &RuleBook,
) -> Result<ClassificationReport, ClassifyError> {
    if max_dim < 8 {
        return Err(ClassifyError::MaxDimTooSmall(max_dim));
    }
    let ctx = Ctx::new(max_dim, catalog, rules, opts)?;
    let walks: Vec<(Vec<CandidateCase>, Vec<(String, ReportExample)>)> = (3..=max_dim)
        .into_par_iter()
        .map(|d| {
            let mut w = Walk::new(&ctx, d);
            w.ambient_root()?;
            w.maximal()?;
            Ok((w.out, w.examples))
        })
        .collect::<Result<_, ClassifyError>>()?;

    let mut candidates = Vec::new();
    let mut examples = Vec::new();
    for (c, e) in walks {
        candidates.extend(c);
        examples.extend(e);
    }
    candidates.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    for c in &candidates {
        if c.verdict != Verdict::Pruned {
            continue;
        }
        let Some(rep) = c.rep() else { continue };
        let key = rep_key(&parse_rep(rep)?);
        let zero = ctx.known.get(&key).is_some_and(|k| k.homrank == 0)
            || ctx.symmetric.get(&key).is_some_and(|s| s.inner_type());
        if zero {
            return Err(inconsistent(
                rep,
                format!(
                    "pruned by {} but recorded with vanishing homogeneity rank",
                    c.rule_fired
                ),
            ));
        }
    }

    examples.sort_by(|a, b| (a.1.d, &a.1.record, &a.0).cmp(&(b.1.d, &b.1.record, &b.0)));
    let mut seen = HashSet::new();
    let mut exceptional = Vec::new();
    let mut symmetric = Vec::new();
    for (key, e) in examples {
        if !seen.insert(key) {
            continue;
        }
        match e.tag {
            ExampleTag::Exceptional => exceptional.push(e),
            ExampleTag::SymmetricOrbitEquivalent => symmetric.push(e),
        }
    }

    let mut counts = CaseCounts::default();
    for c in &candidates {
        match c.verdict {
            Verdict::Example => counts.example += 1,
            Verdict::Pruned => counts.pruned += 1,
            Verdict::Deferred => counts.deferred += 1,
        }
    }
    let completeness = if counts.deferred == 0 {
        format!("exhaustive for dim V ≤ {max_dim}; not exhaustively verified above cap")
    } else {
        format!(
            "{} candidates deferred for dim V ≤ {max_dim}; not exhaustively verified above cap",
            counts.deferred
        )
    };
    Ok(ClassificationReport {
        version: REPORT_VERSION,
        max_dim,
        completeness,
        exceptional,
        symmetric,
        counts,
        candidates,
    })
}

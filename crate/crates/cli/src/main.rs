mod error;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homrk_core::classify::{
    rep_key, run_classification, solve_eq10, solve_eq9, ClassificationReport, DiophantineSolution,
};
use homrk_core::homrank::{homogeneity_rank, ActionRecord, Catalog};
use homrk_core::parse::parse_rep;
use homrk_core::repcalc::realify;
use homrk_core::verify::{verify, Suite};
use serde::Serialize;

use error::{CliError, Exit};
use render::Format;

/// Homogeneity rank of linear actions and the search for representations
/// where it vanishes.
#[derive(Parser)]
#[command(name = "homrk", version)]
struct Cli {
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// complex degree and real dimension of an irreducible representation
    RepDim {
        /// e.g. "B3 [0,0,1]" or "Sp1*Spin11 [1]x[0,0,0,0,1]"
        #[arg(required = true, num_args = 1..)]
        rep: Vec<String>,
    },
    /// reality type and Frobenius-Schur indicator
    RepType {
        #[arg(required = true, num_args = 1..)]
        rep: Vec<String>,
    },
    /// homogeneity rank of a catalog action, a theorem family member, a
    /// symmetric-space isotropy representation, or all catalog actions
    Homrank {
        /// record id, family id or representation text
        #[arg(num_args = 0..)]
        target: Vec<String>,
        /// family parameter when the target is a family id
        #[arg(long)]
        n: Option<u64>,
    },
    /// symmetric spaces with their isotropy homogeneity rank
    Symmspace {
        /// only the space with this label
        label: Option<String>,
        /// largest rank of the isometry group among classical spaces
        #[arg(long, default_value_t = 12)]
        max_rank: u64,
    },
    /// solutions of the two Diophantine equations of the tensor case
    Solve {
        /// bound on p and q
        #[arg(long, default_value_t = 100)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        equation: Which,
    },
    /// run the classification search
    Classify {
        #[arg(long, default_value_t = 256)]
        max_dim: u64,
        /// write the report here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// check the built-in fixtures
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Even,
    Odd,
    Both,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: homrk_core::verify::VerifyError| e.to_string())
}

fn rep_text(words: &[String]) -> String {
    words.join(" ")
}

#[derive(Serialize)]
struct DimRow {
    rep: String,
    degree: u64,
    real_dim: u64,
}

#[derive(Serialize)]
struct TypeRow {
    rep: String,
    degree: u64,
    reality: String,
    indicator: i8,
    real_dim: u64,
    abs_irreducible: bool,
}

#[derive(Serialize)]
struct HomrankRow {
    id: String,
    group: String,
    rep: String,
    d: u64,
    cohom: u64,
    princ_dim: u64,
    princ_rank: u64,
    homrank: i64,
}

impl HomrankRow {
    fn of(rec: &ActionRecord) -> Result<Self, CliError> {
        Ok(HomrankRow {
            id: rec.id.clone(),
            group: rec.group.name(),
            rep: rec.rep.source.to_string(),
            d: rec.dim_v(),
            cohom: rec.cohom,
            princ_dim: rec.princ.dim,
            princ_rank: rec.princ.rank,
            homrank: homogeneity_rank(rec)?,
        })
    }
}

#[derive(Serialize)]
struct SymmRow {
    label: String,
    family: String,
    l: String,
    g: String,
    d: u64,
    rank: u64,
    inner_type: bool,
    homrank: i64,
}

#[derive(Serialize)]
struct SolveRow {
    equation: String,
    p: u64,
    q: u64,
    l: u64,
    m: u64,
    branch: String,
}

/// One line of a classification report in CSV or table form: an example
/// (section exceptional or symmetric) or a node of the search.
#[derive(Serialize)]
struct ClassifyRow {
    section: &'static str,
    ambient: String,
    step: String,
    group: String,
    rep: String,
    d: u64,
    verdict: String,
    rule: String,
    record: String,
    cohom: Option<u64>,
    princ_dim: Option<u64>,
    princ_rank: Option<u64>,
    homrank: Option<i64>,
    symmetric_space: String,
}

fn name<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::new(),
    }
}

fn classify_rows(r: &ClassificationReport) -> Vec<ClassifyRow> {
    let mut out = Vec::new();
    for (section, list) in [("exceptional", &r.exceptional), ("symmetric", &r.symmetric)] {
        for e in list {
            out.push(ClassifyRow {
                section,
                ambient: String::new(),
                step: String::new(),
                group: e.group.clone(),
                rep: e.rep.clone(),
                d: e.d,
                verdict: "example".into(),
                rule: name(&e.tag),
                record: e.record.clone(),
                cohom: Some(e.cohom),
                princ_dim: Some(e.princ_dim),
                princ_rank: Some(e.princ_rank),
                homrank: Some(e.homrank),
                symmetric_space: e.symmetric_space.clone().unwrap_or_default(),
            });
        }
    }
    for c in &r.candidates {
        let last = c.chain.last();
        out.push(ClassifyRow {
            section: "candidate",
            ambient: c.ambient.to_string(),
            step: c.step.clone(),
            group: last.map(|l| l.group.clone()).unwrap_or_default(),
            rep: last.and_then(|l| l.rep.clone()).unwrap_or_default(),
            d: c.d,
            verdict: c.verdict.to_string(),
            rule: c.rule_fired.clone(),
            record: c.record.clone().unwrap_or_default(),
            cohom: None,
            princ_dim: None,
            princ_rank: None,
            homrank: c.homrank,
            symmetric_space: c.symmetric_space.clone().unwrap_or_default(),
        });
    }
    out
}

fn solve_rows(sols: &[DiophantineSolution]) -> Vec<SolveRow> {
    sols.iter()
        .map(|s| SolveRow {
            equation: name(&s.equation),
            p: s.p,
            q: s.q,
            l: s.l,
            m: s.m,
            branch: name(&s.branch),
        })
        .collect()
}

/// Catalog actions, family members and isotropy representations whose
/// representation matches `text`.
fn lookup_rep(catalog: &Catalog, text: &str) -> Result<Vec<ActionRecord>, CliError> {
    let ir = parse_rep(text)?;
    let d = realify(&ir)?.real_dim;
    let key = rep_key(&ir);
    let mut pool: Vec<ActionRecord> = catalog.actions().to_vec();
    pool.extend(catalog.theorem_examples(d)?);
    let max_rank = 2 * ir.group.rank() + 1;
    for s in catalog.symmetric_spaces(max_rank)? {
        pool.push(s.isotropy_action()?);
    }
    let mut out: Vec<ActionRecord> = pool
        .into_iter()
        .filter(|r| r.dim_v() == d && rep_key(&r.rep.source) == key)
        .collect();
    out.dedup_by(|a, b| a.id == b.id);
    Ok(out)
}

fn homrank_rows(catalog: &Catalog, target: &[String], n: Option<u64>) -> Result<Vec<HomrankRow>, CliError> {
    if target.is_empty() {
        let mut recs: Vec<ActionRecord> = catalog.actions().to_vec();
        for fam in catalog.theorem_families() {
            recs.push(fam.instance(n.unwrap_or(fam.from))?);
        }
        return recs.iter().map(HomrankRow::of).collect();
    }
    let text = rep_text(target);
    if let Some(rec) = catalog.action(&text) {
        return Ok(vec![HomrankRow::of(rec)?]);
    }
    if let Some(fam) = catalog.theorem_families().iter().find(|f| f.id == text) {
        let n = n.unwrap_or(fam.from);
        if n < fam.from {
            return Err(CliError::Domain(format!("{} starts at n = {}", fam.id, fam.from)));
        }
        return Ok(vec![HomrankRow::of(&fam.instance(n)?)?]);
    }
    let found = lookup_rep(catalog, &text)?;
    if found.is_empty() {
        return Err(CliError::Domain(format!(
            "no orbit data for {text}: cohomogeneity and principal isotropy are recorded \
             only for catalog actions, theorem families and symmetric spaces"
        )));
    }
    found.iter().map(HomrankRow::of).collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    let out = match cli.verb {
        Verb::RepDim { rep } => {
            let text = rep_text(&rep);
            let ir = parse_rep(&text)?;
            let row = DimRow {
                rep: ir.to_string(),
                degree: ir.complex_degree()?,
                real_dim: realify(&ir)?.real_dim,
            };
            render::rows(&[row], format)?
        }
        Verb::RepType { rep } => {
            let text = rep_text(&rep);
            let ir = parse_rep(&text)?;
            let real = realify(&ir)?;
            let row = TypeRow {
                rep: ir.to_string(),
                degree: ir.complex_degree()?,
                reality: real.reality.to_string(),
                indicator: real.reality.indicator(),
                real_dim: real.real_dim,
                abs_irreducible: real.abs_irred,
            };
            render::rows(&[row], format)?
        }
        Verb::Homrank { target, n } => {
            let catalog = Catalog::from_env()?;
            render::rows(&homrank_rows(&catalog, &target, n)?, format)?
        }
        Verb::Symmspace { label, max_rank } => {
            let catalog = Catalog::from_env()?;
            let mut rows = Vec::new();
            for s in catalog.symmetric_spaces(max_rank)? {
                if label.as_deref().is_some_and(|l| l != s.label) {
                    continue;
                }
                rows.push(SymmRow {
                    label: s.label.clone(),
                    family: s.family.clone(),
                    l: s.l.name(),
                    g: s.g.name(),
                    d: s.isotropy.real_dim,
                    rank: s.rank,
                    inner_type: s.inner_type(),
                    homrank: homogeneity_rank(&s.isotropy_action()?)?,
                });
            }
            if let (Some(l), true) = (&label, rows.is_empty()) {
                return Err(CliError::Domain(format!("no symmetric space labelled {l:?}")));
            }
            render::rows(&rows, format)?
        }
        Verb::Solve { bound, equation } => {
            let mut sols = Vec::new();
            if equation != Which::Odd {
                sols.extend(solve_eq9(bound, bound));
            }
            if equation != Which::Even {
                sols.extend(solve_eq10(bound, bound));
            }
            sols.sort();
            render::rows(&solve_rows(&sols), format)?
        }
        Verb::Classify { max_dim, output } => {
            let report = run_classification(max_dim)?;
            let text = match format {
                Format::Json => render::json(&report)?,
                Format::Csv => render::csv(&classify_rows(&report))?,
                Format::Table => {
                    let c = report.counts;
                    format!(
                        "max_dim {}: {} examples, {} pruned, {} deferred\n{}\n\n{}",
                        report.max_dim,
                        c.example,
                        c.pruned,
                        c.deferred,
                        report.completeness,
                        render::table(&classify_rows(&report))?
                    )
                }
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, text)?;
                    eprintln!(
                        "{} exceptional, {} symmetric, {} deferred; report in {}",
                        report.exceptional.len(),
                        report.symmetric.len(),
                        report.counts.deferred,
                        path.display()
                    );
                    String::new()
                }
                None => text,
            }
        }
        Verb::Verify { suite } => {
            let catalog = Catalog::from_env()?;
            let report = verify(suite, &catalog)?;
            print!("{}", render::rows(&report.rows, format)?);
            let bad: Vec<_> = report.failures().collect();
            if !bad.is_empty() {
                for r in &bad {
                    eprintln!("{} {}\n- {}\n+ {}", r.suite, r.item, r.expected, r.got);
                }
                return Err(CliError::VerifyFailed(bad.len(), report.rows.len()));
            }
            String::new()
        }
    };
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Parse as u8 } else { Exit::Ok as u8 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::from(Exit::Ok as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}

use std::collections::BTreeSet;

use homrk_core::classify::{
    run_classification, run_classification_with, ClassificationReport, ClassifyError,
    ClassifyOptions, ExampleTag, Filter, RuleBook, Verdict,
};
use homrk_core::homrank::Catalog;

fn records(r: &ClassificationReport, tag: ExampleTag) -> BTreeSet<String> {
    r.candidates
        .iter()
        .filter(|c| c.verdict == Verdict::Example && c.tag == Some(tag))
        .filter_map(|c| c.record.clone())
        .collect()
}

#[test]
fn up_to_128_nothing_deferred_and_exceptional_list_is_the_theorem() {
    let r = run_classification(128).unwrap();
    assert_eq!(
        r.counts.deferred,
        0,
        "{:?}",
        r.deferred().collect::<Vec<_>>()
    );
    let want: BTreeSet<String> = Catalog::embedded()
        .unwrap()
        .theorem_examples(128)
        .unwrap()
        .into_iter()
        .map(|e| e.id)
        .collect();
    let got: BTreeSet<String> = r.exceptional.iter().map(|e| e.record.clone()).collect();
    assert_eq!(got, want);
    assert!(r.symmetric.iter().all(|e| e.symmetric_space.is_some()));
    assert!(r
        .completeness
        .contains("not exhaustively verified above cap"));
}

#[test]
fn inner_type_table_entries_appear_as_symmetric_examples() {
    let r = run_classification(128).unwrap();
    let got: BTreeSet<&str> = r.symmetric.iter().map(|e| e.record.as_str()).collect();
    for id in (1..=10).map(|i| format!("table-{i}")) {
        assert!(got.contains(id.as_str()), "{id} missing");
    }
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let runs: Vec<String> = (0..3)
        .map(|_| serde_json::to_string(&run_classification(96).unwrap()).unwrap())
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let back: ClassificationReport = serde_json::from_str(&runs[0]).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), runs[0]);
}

#[test]
fn disabling_a_filter_never_changes_the_examples() {
    let catalog = Catalog::embedded().unwrap();
    let rules = RuleBook::embedded().unwrap();
    let base = run_classification_with(64, &ClassifyOptions::default(), &catalog, &rules).unwrap();
    for f in Filter::ALL {
        let r =
            run_classification_with(64, &ClassifyOptions::without(&[f]), &catalog, &rules).unwrap();
        for tag in [
            ExampleTag::Exceptional,
            ExampleTag::SymmetricOrbitEquivalent,
        ] {
            assert_eq!(records(&r, tag), records(&base, tag), "{f:?}");
        }
        assert!(r.counts.pruned <= base.counts.pruned, "{f:?}");
    }
}

#[test]
fn tiny_cap_rejected() {
    assert_eq!(
        run_classification(4).unwrap_err(),
        ClassifyError::MaxDimTooSmall(4)
    );
}

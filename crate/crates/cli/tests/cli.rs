use std::process::Command;

use homrk_core::classify::{ClassificationReport, REPORT_SCHEMA};
use serde_json::Value;

fn homrk(args: &[&str]) -> (i32, String, String) {
    homrk_env(args, &[])
}

fn homrk_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_homrk"));
    cmd.args(args).env_remove("HOMRK_CATALOG").env_remove("HOMRK_RULES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let (code, out, err) = homrk(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn spin_representation_of_b3() {
    let v = json(&["rep-type", "B3 [0,0,1]"]);
    assert_eq!(v[0]["degree"], 8);
    assert_eq!(v[0]["reality"], "real");
    assert_eq!(v[0]["real_dim"], 8);
}

#[test]
fn e7_minuscule_is_quaternionic() {
    let v = json(&["rep-type", "E7", "[0,0,0,0,0,0,1]"]);
    assert_eq!(v[0]["degree"], 56);
    assert_eq!(v[0]["reality"], "quaternionic");
    assert_eq!(v[0]["indicator"], -1);
}

#[test]
fn cubic_family_has_real_dimension_8n() {
    for n in 2..=6usize {
        let mut w = vec!["0"; n];
        w[0] = "1";
        let text = format!("A1 [3] * C_{n} [{}]", w.join(","));
        let v = json(&["rep-dim", &text]);
        assert_eq!(v[0]["real_dim"], 8 * n as u64, "{text}");
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = homrk(&["rep-dim", "B3 [0,0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains('^'), "{err}");
    assert_eq!(homrk(&["rep-dim", "B3 [0,0]"]).0, 3);
    assert_eq!(homrk(&["homrank", "no-such-record"]).0, 2);
    assert_eq!(homrk(&["homrank", "SU3 [1,0]"]).0, 3);
    assert_eq!(homrk(&["classify", "--max-dim", "7"]).0, 3);
    let missing = [("HOMRK_CATALOG", "/nonexistent/catalog.json")];
    assert_eq!(homrk_env(&["verify", "table36"], &missing).0, 4);
    let missing = [("HOMRK_RULES", "/nonexistent/rules.json")];
    assert_eq!(homrk_env(&["classify", "--max-dim", "8"], &missing).0, 4);
    assert_eq!(homrk(&["verify", "all"]).0, 0);
}

#[test]
fn unknown_verbs_and_flags_print_usage() {
    for args in [&["frobnicate"][..], &["rep-dim", "--bogus", "x"], &["verify", "nope"], &[]] {
        let (code, out, err) = homrk(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("Usage") || err.contains("--help"), "{args:?}: {err}");
    }
}

#[test]
fn inconsistent_verification_exits_5() {
    let good = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/catalog.json"))
        .unwrap();
    // table-9: Spin(7) on R^8 with cohomogeneity 1 and G_princ = G2; record
    // a wrong principal isotropy that still satisfies the dimension count
    let needle = r#""id": "table-9""#;
    assert!(good.contains(needle));
    let dir = std::env::temp_dir().join(format!("homrk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.json");
    let mut v: Value = serde_json::from_str(&good).unwrap();
    let rec = v["actions"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|a| a["id"] == "table-9")
        .unwrap();
    rec["princ"]["rank"]["value"] = 1.into();
    rec["princ"].as_object_mut().unwrap().remove("name");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let (code, _, err) = homrk_env(&["verify", "table36"], &[("HOMRK_CATALOG", path.to_str().unwrap())]);
    assert_eq!(code, 5, "{err}");
    assert!(err.contains("table-9"), "{err}");
}

#[test]
fn verify_suites_report_expected_rows() {
    let v = json(&["verify", "theorem1"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == true));
    let v = json(&["verify", "table36"]);
    assert_eq!(v.as_array().unwrap().len(), 10);
    let v = json(&["verify", "diophantine"]);
    assert_eq!(v[0]["got"], "{(1,1,2,4)}");
    assert_eq!(v[1]["got"], "{(1,1,1,3),(1,1,2,5)}");
}

fn exceptional_families(r: &Value) -> Vec<String> {
    let mut f: Vec<String> = r["exceptional"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["record"].as_str().unwrap().split('(').next().unwrap().to_string())
        .collect();
    f.sort();
    f.dedup();
    f
}

#[test]
fn classify_small_caps() {
    let r = json(&["classify", "--max-dim", "64"]);
    assert_eq!(exceptional_families(&r), ["so4-spin7", "sp1-spin11", "sp1-spn-cubic"]);
    assert_eq!(r["counts"]["deferred"], 0);
    let r = json(&["classify", "--max-dim", "8"]);
    assert!(r["exceptional"].as_array().unwrap().is_empty());
}

#[test]
fn report_matches_schema_and_round_trips() {
    let (code, out, _) = homrk(&["--format", "json", "classify", "--max-dim", "300"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).take(5).collect();
    assert!(errors.is_empty(), "{errors:?}");
    let report: ClassificationReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", out);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("homrk-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = homrk(&["--format", "json", "classify", "--max-dim", "24", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let (_, direct, _) = homrk(&["--format", "json", "classify", "--max-dim", "24"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

/// Every CSV row appears, cell by cell and in order, on the matching table
/// line.
fn table_carries_csv(table: &str, csv: &str) {
    let rows = csv_rows(csv);
    let lines: Vec<&str> = table.lines().filter(|l| !l.starts_with("--")).collect();
    let start = lines.len() - rows.len();
    for (row, line) in rows.iter().zip(&lines[start..]) {
        let mut rest = *line;
        for cell in row {
            let at = rest.find(cell.as_str()).unwrap_or_else(|| panic!("{cell:?} not in {line:?}"));
            rest = &rest[at + cell.len()..];
        }
    }
}

#[test]
fn formats_carry_the_same_numbers() {
    let args = ["classify", "--max-dim", "40"];
    let run = |f: &str| {
        let mut a = vec!["--format", f];
        a.extend_from_slice(&args);
        let (code, out, _) = homrk(&a);
        assert_eq!(code, 0);
        out
    };
    let (j, c, t) = (run("json"), run("csv"), run("table"));
    let report: ClassificationReport = serde_json::from_str(&j).unwrap();
    let rows = csv_rows(&c);
    let head = &rows[0];
    let col = |name: &str| head.iter().position(|h| h == name).unwrap();
    let body = &rows[1..];
    assert_eq!(
        body.len(),
        report.exceptional.len() + report.symmetric.len() + report.candidates.len()
    );
    for (e, row) in report.exceptional.iter().chain(&report.symmetric).zip(body) {
        assert_eq!(row[col("record")], e.record);
        for (name, n) in [
            ("d", e.d as i64),
            ("cohom", e.cohom as i64),
            ("princ_dim", e.princ_dim as i64),
            ("princ_rank", e.princ_rank as i64),
            ("homrank", e.homrank),
        ] {
            assert_eq!(row[col(name)], n.to_string(), "{} {name}", e.record);
        }
    }
    let cand = &body[report.exceptional.len() + report.symmetric.len()..];
    for (k, row) in report.candidates.iter().zip(cand) {
        assert_eq!(row[col("d")], k.d.to_string());
        assert_eq!(row[col("verdict")], k.verdict.to_string());
        assert_eq!(row[col("rule")], k.rule_fired);
    }
    let verdicts = |v: &str| cand.iter().filter(|r| r[col("verdict")] == v).count() as u64;
    assert_eq!(verdicts("example"), report.counts.example);
    assert_eq!(verdicts("pruned"), report.counts.pruned);
    assert_eq!(verdicts("deferred"), report.counts.deferred);
    assert!(t.starts_with(&format!(
        "max_dim 40: {} examples, {} pruned, {} deferred\n",
        report.counts.example, report.counts.pruned, report.counts.deferred
    )));
    table_carries_csv(&t, &c);

    for args in [&["rep-type", "Sp1*Spin11 [1]x[0,0,0,0,1]"][..], &["solve"], &["homrank"], &["symmspace", "--max-rank", "4"]] {
        let f = |fmt: &str| {
            let mut a = vec!["--format", fmt];
            a.extend_from_slice(args);
            homrk(&a).1
        };
        let (j, c, t) = (f("json"), f("csv"), f("table"));
        table_carries_csv(&t, &c);
        let rows = csv_rows(&c);
        let v: Value = serde_json::from_str(&j).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len() + 1, rows.len(), "{args:?}");
        for (obj, row) in arr.iter().zip(&rows[1..]) {
            for (h, cell) in rows[0].iter().zip(row) {
                let want = match &obj[h] {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                assert_eq!(&want, cell, "{args:?} {h}");
            }
        }
    }
}

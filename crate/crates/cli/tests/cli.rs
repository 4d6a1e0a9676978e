use std::process::{Command, Output};

use sdfa_core::report::ReportDocument;
use serde_json::Value;

fn sdfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdfa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = sdfa(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn ideal<'a>(doc: &'a Value, gens: &str) -> &'a Value {
    doc["ideals"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect::<Vec<_>>().join(",") == gens)
        .unwrap_or_else(|| panic!("no ideal generated by {gens}"))
}

#[test]
fn classify_z12() {
    let doc = json(&["classify", "zn(12)"]);
    assert_eq!(doc["ideals"].as_array().unwrap().len(), 6);
    assert_eq!(doc["format_version"], 1);
    for g in ["2", "3"] {
        assert_eq!(ideal(&doc, g)["prime"], true);
    }
    assert_eq!(ideal(&doc, "6")["sdf"], true);
    assert_eq!(ideal(&doc, "6")["prime"], false);
    for g in ["4", ""] {
        assert_eq!(ideal(&doc, g)["radical"], false);
        assert_eq!(ideal(&doc, g)["fast_criteria"]["comaximal-decomposition"], "inapplicable");
    }
}

#[test]
fn classify_fixtures() {
    let doc = json(&["classify", "prod(zn(2),zn(2))"]);
    for i in doc["ideals"].as_array().unwrap().iter().filter(|i| i["proper"] == true) {
        assert_eq!(i["sdf"], true);
    }
    let doc = json(&["classify", "polyq(3,[0,0,1])"]);
    assert_eq!(ideal(&doc, "")["sdf"], true);
    let doc = json(&["classify", "polyq(5,[0,0,1])"]);
    assert_eq!(ideal(&doc, "")["sdf"], false);
    assert!(ideal(&doc, "")["witnesses"]["sdf"]["a"].is_string());
}

#[test]
fn json_output_round_trips_byte_identically() {
    for raw in [false, true] {
        let mut args = vec!["classify", "idealize(zn(4);mod=0)"];
        if raw {
            args.push("--raw");
        }
        let text = stdout(&sdfa(&args));
        let doc = ReportDocument::from_json(&text).unwrap();
        assert_eq!(doc.to_json().unwrap(), text);
    }
}

#[test]
fn elements_are_rendered_and_raw_indices_are_opt_in() {
    let plain = json(&["classify", "prod(zn(2),zn(3))"]);
    assert_eq!(ideal(&plain, "(1,0)")["members"][1], "(1,0)");
    assert!(ideal(&plain, "(1,0)").get("member_indices").is_none());
    let raw = json(&["classify", "prod(zn(2),zn(3))", "--raw"]);
    assert!(ideal(&raw, "(1,0)")["member_indices"].is_array());
}

#[test]
fn formats_agree_on_verdicts() {
    let doc = json(&["classify", "prod(zn(4),zn(3))"]);
    let csv = stdout(&sdfa(&["classify", "prod(zn(4),zn(3))", "--format", "csv"]));
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let sdf_col = header.iter().position(|h| *h == "sdf").unwrap();
    let rows: Vec<String> = lines.map(|l| l.to_string()).collect();
    let ideals = doc["ideals"].as_array().unwrap();
    assert_eq!(rows.len(), ideals.len());
    let csv_sdf: usize = rows.iter().filter(|r| split_csv(r)[sdf_col] == "true").count();
    let json_sdf = ideals.iter().filter(|i| i["sdf"] == true).count();
    assert_eq!(csv_sdf, json_sdf);
    let text = stdout(&sdfa(&["classify", "prod(zn(4),zn(3))", "--format", "text"]));
    let text_failing = text.matches(" !sdf ").count();
    assert_eq!(text_failing, ideals.iter().filter(|i| i["proper"] == true && i["sdf"] == false).count());
}

/// Splits a CSV row, honouring double quotes.
fn split_csv(row: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut quoted = false;
    for c in row.chars() {
        match c {
            '"' => quoted = !quoted,
            ',' if !quoted => out.push(String::new()),
            c => out.last_mut().unwrap().push(c),
        }
    }
    out
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("sdfa-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z6.json");
    let o = sdfa(&["classify", "zn(6)", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&sdfa(&["classify", "zn(6)"])));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn witness_command() {
    let o = sdfa(&["witness", "prod(zn(3),zn(3),zn(3))", "--gens", "[(0,0,1)]", "--property", "sdf"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("witness a="));
    let o = sdfa(&[
        "witness", "prod(zn(3),zn(3),zn(3))", "--gens", "[(0,0,1)]", "--property", "sdf", "--pair", "(2,1,0)", "(1,1,0)",
    ]);
    assert_eq!(stdout(&o).trim(), "certified a=(2,1,0), b=(1,1,0)");
    let o = sdfa(&["witness", "prod(zn(4),zn(4))", "--gens", "[(0,2)]", "--property", "weakly-prime", "--pair", "(2,2)", "(0,1)"]);
    assert!(o.status.success());
    let o = sdfa(&["witness", "prod(zn(4),zn(4))", "--gens", "[(0,2)]", "--property", "weakly-sdf"]);
    assert_eq!(stdout(&o).trim(), "holds");
    let o = sdfa(&["witness", "gf(2,[1,1,0,1])", "--gens", "[]", "--property", "sdf"]);
    assert_eq!(stdout(&o).trim(), "holds");
    let o = sdfa(&["witness", "zn(9)", "--gens", "[]", "--property", "prime", "--pair", "1", "2"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "not a witness"));
}

#[test]
fn printed_witness_reverifies() {
    let o = sdfa(&["witness", "prod(zn(4),zn(4))", "--gens", "[(0,2)]", "--property", "weakly-prime"]);
    let line = stdout(&o);
    let rest = line.trim().strip_prefix("witness a=").unwrap();
    let (a, b) = rest.split_once(", b=").unwrap();
    let o = sdfa(&["witness", "prod(zn(4),zn(4))", "--gens", "[(0,2)]", "--property", "weakly-prime", "--pair", a, b]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_small_corpus_and_single_property() {
    let doc = json(&["verify", "--zn-max", "60"]);
    assert_eq!(doc["summary"]["failed"], 0);
    let doc = json(&["verify", "--zn-max", "60", "--only", "zn-zero-ideal-closed-form"]);
    let props = doc["properties"].as_array().unwrap();
    assert_eq!(props.len(), 1);
    assert_eq!(props[0]["status"], "pass");
    assert_eq!(props[0]["checked_instances"], 59);
}

#[test]
fn sampled_property_is_labelled() {
    let doc = json(&["verify", "--zn-max", "12", "--only", "polynomial-sampled", "ring-axioms"]);
    let props = doc["properties"].as_array().unwrap();
    assert_eq!(props[0]["sampled"], true);
    assert_eq!(props[1]["sampled"], false);
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("sdfa-cli-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"zn_max\": [}").unwrap();
    assert_eq!(sdfa(&["verify", "--corpus", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();

    let o = sdfa(&["classify", "prod(zn(4),"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 11"));
    assert_eq!(sdfa(&["verify", "--only", "no-such-property"]).status.code(), Some(2));
    assert_eq!(sdfa(&["witness", "zn(4)", "--gens", "[1]", "--property", "sdf"]).status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_sdfa"))
        .args(["classify", "zn(64)"])
        .env("SDFA_ORDER_CAP", "32")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

use serde_json::Value;
use torelli::cli::run_with;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("torelli").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn doc(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn every_subcommand_emits_a_report() {
    let cases: &[&[&str]] = &[
        &["table", "--genus", "3", "--boundaries", "1"],
        &["enumerate", "--genus", "3"],
        &["rewrite", "--twist", "b", "--sign", "1", "--chain", "4567"],
        &["tau", "--chain", "β567"],
        &["sigma", "--chain", "23'67"],
        &["verify", "--relation", "lantern"],
        &["rank", "--genus", "3", "--boundaries", "1"],
        &["span", "--what", "tau"],
        &["graph", "--genus", "7", "--m", "3"],
    ];
    for args in cases {
        let v = doc(args);
        assert_eq!(v["command"], args[0]);
        for key in ["inputs", "outputs", "verdict"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
    }
}

#[test]
fn table_lists_the_basis() {
    let v = doc(&["table", "--genus", "2", "--json-indent", "0"]);
    assert_eq!(v["outputs"]["basis"][0], "x1");
    assert_eq!(v["outputs"]["rank"], 6);
    assert_eq!(v["outputs"]["curves"]["c1"], serde_json::json!([0, 0, 0, 1, 0, 0]));
}

#[test]
fn beta_rewrite_through_b() {
    let v = doc(&["rewrite", "--twist", "b", "--sign", "1", "--chain", "4567"]);
    assert_eq!(v["outputs"]["word"], serde_json::json!(["[β567]"]));
}

#[test]
fn indentation_is_configurable_and_output_is_stable() {
    let compact = call(&["tau", "--chain", "1234", "--json-indent", "0"]).1;
    assert_eq!(compact.lines().count(), 1);
    let wide = call(&["tau", "--chain", "1234", "--json-indent", "4"]).1;
    assert!(wide.contains("\n    \"command\""));
    let a: Value = serde_json::from_str(&compact).unwrap();
    let b: Value = serde_json::from_str(&wide).unwrap();
    assert_eq!(a, b);
    assert_eq!(wide, call(&["tau", "--chain", "1234", "--json-indent", "4"]).1);
}

#[test]
fn elapsed_time_stays_on_stderr() {
    let (_, out, err) = call(&["rank"]);
    assert!(!out.contains("elapsed"));
    assert!(err.contains(" ms"));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(call(&["graph", "--genus", "4", "--m", "3"]).0, 0);
    assert_eq!(call(&["verify", "--relation", "j1", "--k", "4", "--genus", "4"]).0, 1);
    assert_eq!(call(&["verify", "--relation", "j1", "--k", "9"]).0, 2);
    assert_eq!(call(&["tau", "--chain", "[12x]"]).0, 2);
    assert_eq!(call(&["table", "--genus", "8", "--max-dim", "100"]).0, 2);
    assert_eq!(call(&["table", "--boundaries", "3"]).0, 2);
    assert_eq!(call(&["span", "--what", "nothing"]).0, 2);
}

#[test]
fn all_checks_at_genus_three_reports_the_wedge_sign() {
    let (code, out, _) = call(&["all-checks", "--genus", "3"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let criteria = v["outputs"]["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 11);
    assert_eq!(criteria[1]["verdict"], "fail");
    assert_eq!(code, 1);
}

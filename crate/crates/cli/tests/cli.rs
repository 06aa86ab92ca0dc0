use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pglspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, String, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (v, text, o.status.code().unwrap())
}

#[test]
fn ppd_7_5() {
    let o = run(&["ppd", "7", "5"]);
    assert_eq!(stdout(&o), "2801\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn ppd_upto_lists_every_exponent() {
    let o = run(&["ppd", "7", "4", "--upto"]);
    assert_eq!(stdout(&o), "1     [ 2, 3 ]\n2     [  ]\n3     [ 19 ]\n4     [ 5 ]\n");
}

#[test]
fn ppd_above_reports_the_known_gap() {
    let o = run(&["ppd-above", "17", "6", "19"]);
    assert!(stdout(&o).starts_with("exists: false\n"));
    let o = run(&["ppd-above", "73", "45", "127"]);
    assert!(stdout(&o).starts_with("exists: true\n"));
}

#[test]
fn mu_pgl2_7_1() {
    let o = run(&["mu", "pgl2", "7", "1"]);
    assert_eq!(stdout(&o), "label: PGL(2,7)\nmu: 6 7 8\n");
}

#[test]
fn omega_of_pgl2_9() {
    let o = run(&["omega", "pgl2", "3", "2"]);
    assert!(stdout(&o).ends_with("omega: 1 2 3 4 5 8 10\n"));
}

#[test]
fn factor_dotted() {
    assert_eq!(stdout(&run(&["factor", "47045880"])), "2^3.3^3.5.7^3.127\n");
}

#[test]
fn verify_table1_all_cells() {
    let o = run(&["verify", "table1"]);
    assert!(stdout(&o).ends_with("table1: 54/54 passed\n"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_cases_reports_erratum_and_succeeds() {
    let o = run(&["verify", "cases"]);
    let text = stdout(&o);
    assert!(text.contains("[ERRATUM] 19^6 - 1: printed 2^3.3^3.5.7.127, computed 2^3.3^3.5.7^3.127\n"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_lemma1_fails_on_the_counterexample() {
    let o = run(&["verify", "lemma1", "--n-max", "20"]);
    assert!(stdout(&o).contains("[FAIL] p=17 m=4 q=19: no primitive divisor > 19 for n in [6]\n"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn graph_text_and_dot() {
    let o = run(&["graph", "pgl2", "7", "2"]);
    assert_eq!(
        stdout(&o),
        "label: PGL(2,7^2)\nvertices: 2 3 5 7\nedges: 2-3 2-5\nt: 2\npi_1: 2 3 5 | mu_1: 48 50\npi_2: 7 | mu_2: 7\n"
    );
    let dot = stdout(&run(&["graph", "pgl2", "7", "1", "--dot"]));
    assert!(dot.starts_with("graph \"PGL(2,7)\" {\n  subgraph cluster_1 {\n    label=\"pi_1\";\n    \"2\";\n    \"3\";\n"));
    assert!(dot.contains("  \"2\" -- \"3\";\n"));
}

#[test]
fn oracle_agrees() {
    let o = run(&["oracle", "psl2", "2", "3"]);
    assert!(stdout(&o).ends_with("equal: yes\n"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn catalan_small_bound() {
    let text = stdout(&run(&["catalan", "100"]));
    assert!(text.contains("3^2 = 2^3 + 1  exceptional\n"));
    assert!(text.ends_with("7 solutions up to 100\n"));
}

#[test]
fn witness_is_seeded() {
    let a = stdout(&run(&["witness", "2s4"]));
    assert!(a.contains("size: 48\n"));
    assert!(a.contains("mu: 6 8\n"));
    assert_eq!(a, stdout(&run(&["witness", "2s4"])));
}

#[test]
fn table2_fermat_row() {
    let text = stdout(&run(&["table2", "257"]));
    assert!(text.starts_with("p = 257 = 2^8.3^0 + 1\nFermat prime: m = 8, s = 3\n"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["ppd", "13", "7"][..],
        &["mu", "psl2", "7", "3"],
        &["graph", "metacyclic", "5", "8", "2"],
        &["verify", "cases"],
        &["witness", "sl23"],
        &["table2", "109"],
    ] {
        let (v, text, _) = json(args);
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(again, text, "{args:?}");
        assert_eq!(v["schema_version"], "1");
        assert_eq!(json(args).1, text, "rerun of {args:?}");
    }
}

#[test]
fn json_payloads() {
    let (v, _, code) = json(&["ppd", "7", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "ppd");
    assert_eq!(v["inputs"]["a"], "7");
    assert_eq!(v["result"]["primitive_primes"], serde_json::json!(["2801"]));

    let (v, _, _) = json(&["mu", "pgl2", "7", "1"]);
    assert_eq!(v["result"]["mu"], serde_json::json!(["6", "7", "8"]));

    let (v, _, _) = json(&["verify", "table1"]);
    assert_eq!(v["command"], "verify table1");
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 54);
}

#[test]
fn text_and_json_share_exit_status() {
    for args in [
        &["verify", "lemma1", "--n-max", "10"][..],
        &["verify", "cases"],
        &["mu", "pgl2", "9", "1"],
        &["factor", "1000000016000000063", "--budget", "5"],
    ] {
        let text_code = run(args).status.code().unwrap();
        let (_, _, json_code) = json(args);
        assert_eq!(text_code, json_code, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["ppd", "seven", "5"]).status.code(), Some(2));

    let o = run(&["mu", "pgl2", "9", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8(o.stderr).unwrap(), "error: 9 is not prime\n");

    let o = run(&["mu", "pgl2", "7"]);
    assert_eq!(o.status.code(), Some(2));

    // 1000000007 * 1000000009 with almost no rho budget
    let o = run(&["factor", "1000000016000000063", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "(1000000016000000063)\n");

    let (v, _, code) = json(&["oracle", "pgl2", "101", "1"]);
    assert_eq!(code, 3);
    assert!(v["result"].is_null());
    assert!(v["diagnostics"][0].as_str().unwrap().starts_with("error: "));
}

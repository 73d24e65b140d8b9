use assert_cmd::Command;

fn qschur(args: &[&str]) -> assert_cmd::assert::Assert {
    Command::cargo_bin("qschur").unwrap().args(args).assert()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(qschur(args).success().get_output().stdout.clone()).unwrap()
}

#[test]
fn qfun_text() {
    assert_eq!(stdout(&["qfun", "--lambda", "1", "--n", "2", "--format", "text"]), "2*x1 + 2*x2\n");
}

#[test]
fn qfun_json_uses_grevlex_and_fraction_strings() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["qfun", "--lambda", "2,1", "--n", "2"])).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"n": 2, "terms": [{"exp": [2, 1], "coeff": "4"}, {"exp": [1, 2], "coeff": "4"}]})
    );
}

#[test]
fn eigen_report() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["eigen", "--lambda", "2,1", "--op", "omega3", "--n", "3"])).unwrap();
    assert_eq!(v["eigenvalue"], "0");
    assert_eq!(v["isEigen"], true);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["eigen", "--lambda", "3", "--op", "omega3", "--n", "2"])).unwrap();
    assert_eq!(v["eigenvalue"], "18");
}

#[test]
fn tableaux_count() {
    assert_eq!(stdout(&["tableaux", "--lambda", "3,2,1"]), "2\n");
    assert_eq!(stdout(&["tableaux", "--lambda", "2,1", "--format", "text"]), "1\n");
}

#[test]
fn expand_and_char_map() {
    assert_eq!(stdout(&["expand", "--lambda", "3", "--max", "3"]), "{\"3\":\"2/3\",\"1,1,1\":\"4/3\"}\n");
    assert_eq!(stdout(&["char-map", "--nu", "1", "--n", "2", "--format", "text"]), "2*x1 + 2*x2\n");
}

#[test]
fn qk_lists_series() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["qk", "--n", "1", "--max", "3"])).unwrap();
    assert_eq!(v["q"].as_array().unwrap().len(), 4);
    assert_eq!(v["q"][3], serde_json::json!({"n": 1, "terms": [{"exp": [3], "coeff": "2"}]}));
}

#[test]
fn apply_reports_image() {
    assert_eq!(
        stdout(&["apply", "--op", "omega1", "--lambda", "1", "--n", "2", "--format", "text"]),
        "2*x1 + 2*x2\n"
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "lemma123iii", "--n", "2", "--max", "5"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_exit_codes() {
    qschur(&["verify", "--suite", "aux35", "--n", "3", "--max", "0"]).code(0);
    qschur(&["verify", "--suite", "lemma121", "--n", "2", "--max", "4", "--inject-failure"]).code(1);
    qschur(&["verify", "--suite", "skew", "--n", "2", "--max", "3", "--inject-failure", "--format", "text"]).code(1);
}

#[test]
fn usage_errors_exit_two() {
    qschur(&["qfun", "--lambda", "2,2", "--n", "2"]).code(2);
    qschur(&["qfun", "--lambda", "2", "--n", "2", "--bogus"]).code(2);
    qschur(&["verify", "--suite", "nope", "--n", "2", "--max", "2"]).code(2);
    qschur(&["eigen", "--lambda", "3,2,1", "--op", "omega3", "--n", "2"]).code(2);
    qschur(&["eigen", "--lambda", "2", "--op", "omega2", "--n", "2"]).code(2);
    qschur(&["frobnicate"]).code(2);
}

#[test]
fn guardrail_needs_force() {
    qschur(&["qfun", "--lambda", "1", "--n", "7"]).code(2);
    qschur(&["qk", "--n", "1", "--max", "13"]).code(2);
    qschur(&["qk", "--n", "1", "--max", "13", "--force"]).code(0);
}

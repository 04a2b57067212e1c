use omega_power_web::{analyze_lasso, classify_dictionary, dictionary_report, encode_tree, lasso_report, tree_report};
use serde_json::Value;

const RANK_TWO: &str = "alphabet 2\nmain = {00} | ext(1) | ext(001) | ext(00001) | ext(00000)\n";

#[test]
fn lasso_rank_and_membership() {
    let v = lasso_report(RANK_TWO, "000(1)").unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(v["rank"]["value"], 2);
    assert!(v["chunks"].is_null());

    let v = lasso_report("alphabet 2\nmain = {0, 1}\n", "1(01)").unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["chunks"].as_array().unwrap().len(), 8);
}

#[test]
fn dictionary_classification() {
    let v = dictionary_report("alphabet 2\nmain = {0, 01, 11, 111}\n").unwrap();
    assert_eq!(v["class"], "Clopen");
    let v = dictionary_report("alphabet 2\nmain = {0, 01, 001}\n").unwrap();
    assert_eq!(v["minimal"], serde_json::json!(["0", "01"]));
    assert!(dictionary_report("alphabet 2\nmain = ext(0)\n").is_err());
}

#[test]
fn tree_encoding() {
    let v = tree_report("()\n0\n0,1\n1\n").unwrap();
    assert_eq!(v["tree_rank"], 3);
    assert_eq!(v["alpha0_rank"], 4);
    assert_eq!(v["alpha0_death_step"], "788");
    assert_eq!(tree_report("()\n").unwrap()["words"].as_array().unwrap().len(), 1);
}

#[test]
fn exports_report_errors_as_json() {
    for out in [analyze_lasso("alphabet 2\nmain = {0}\n", "(2)"), classify_dictionary("main ="), encode_tree("0,x")] {
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"].is_string(), "{out}");
    }
    let v: Value = serde_json::from_str(&classify_dictionary("alphabet 2\nmain = {0, 1}\n")).unwrap();
    assert_eq!(v["class"], "Full");
}

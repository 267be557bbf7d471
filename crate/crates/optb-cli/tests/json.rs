use std::process::Command;

use optb_cli::report::{to_json, FamilyReport, Report};
use proptest::prelude::*;

fn run(args: &[&str]) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_optb")).args(args).output().expect("run optb");
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

const COMMANDS: &[&[&str]] = &[
    &["analyze", "RL", "--json", "--canonical", "--evidence", "A=present,B=absent,C=absent", "--bound", "50"],
    &["analyze", "i L^2 R^2", "--json", "--field", "Q(i)", "--bound", "30", "--twisted-scan"],
    &["analyze", "(RL)^3", "--json", "--field", "Q(zeta_4)"],
    &["alexander", "R L^4", "--all-twists", "--json"],
    &["alexander", "R L^3", "--all-twists", "--modp", "7", "--json"],
    &["reps", "R L^6", "--json"],
    &["primes", "(RL)^2", "--bound", "60", "--twisted-scan", "--json"],
];

const TOP_LEVEL: [&str; 8] =
    ["schema_version", "input", "bundle", "conditions", "representations", "verdict", "primes", "citations"];

#[test]
fn reports_round_trip() {
    for args in COMMANDS {
        let text = run(args);
        let report: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&report), text, "{args:?}");
        let again: Report = serde_json::from_str(&to_json(&report)).unwrap();
        assert_eq!(again, report);
    }
}

#[test]
fn schema_keys_are_stable() {
    for args in COMMANDS {
        let v: serde_json::Value = serde_json::from_str(&run(args)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = TOP_LEVEL.to_vec();
        expected.sort_unstable();
        let mut got = keys.clone();
        got.sort_unstable();
        assert_eq!(got, expected, "{args:?}");
        assert_eq!(v["schema_version"], "1");
    }
}

/// No JSON numbers anywhere: exact values are strings.
fn no_numbers(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(_) => false,
        serde_json::Value::Array(a) => a.iter().all(no_numbers),
        serde_json::Value::Object(o) => o.values().all(no_numbers),
        _ => true,
    }
}

#[test]
fn numbers_are_strings() {
    for args in COMMANDS {
        let v: serde_json::Value = serde_json::from_str(&run(args)).unwrap();
        assert!(no_numbers(&v), "{args:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in COMMANDS {
        assert_eq!(run(args), run(args), "{args:?}");
    }
    let fam = ["family", "fib_cover", "--range", "1..4", "--check", "--json"];
    let a = run(&fam);
    assert_eq!(a, run(&fam));
    let r: FamilyReport = serde_json::from_str(&a).unwrap();
    assert_eq!(r.pass, Some(true));
    assert_eq!(to_json(&r), a);
}

#[test]
fn cyclotomic_elements_carry_conductor() {
    let v: serde_json::Value = serde_json::from_str(&run(COMMANDS[3])).unwrap();
    let x = &v["bundle"]["alexander"][1]["twist"]["y"];
    assert_eq!(x["kind"], "cyclotomic");
    assert_eq!(x["conductor"], "4");
    assert_eq!(x["coefficients"], serde_json::json!(["0", "1"]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_words_round_trip(letters in proptest::collection::vec((0u8..2, 1i64..4), 1..5)) {
        let word: String = letters
            .iter()
            .map(|(l, e)| format!("{}^{e} ", if *l == 0 { "R" } else { "L" }))
            .collect();
        let o = Command::new(env!("CARGO_BIN_EXE_optb"))
            .args(["analyze", word.trim(), "--json", "--max-n", "12"])
            .output()
            .unwrap();
        if o.status.code() == Some(3) {
            return Ok(());
        }
        prop_assert!(o.status.success());
        let text = String::from_utf8(o.stdout).unwrap();
        let r: Report = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(to_json(&r), text);
    }
}

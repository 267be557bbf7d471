use std::process::{Command, Output};

use optb_cli::report::Report;

fn optb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_optb")).args(args).output().expect("run optb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_report(args: &[&str]) -> Report {
    let mut a = args.to_vec();
    a.push("--json");
    let o = optb(&a);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_figure_eight_extends() {
    let r = json_report(&["analyze", "RL", "--canonical", "--evidence", "A=present,B=absent,C=absent"]);
    assert_eq!(r.verdict.unwrap().outcome, "Extends");
    let s: Vec<String> = r.primes.unwrap().candidate_set.into_iter().map(|e| e.prime).collect();
    assert_eq!(s, ["2"]);
}

#[test]
fn analyze_double_cover_does_not_extend() {
    let r = json_report(&["analyze", "(RL)^2", "--canonical", "--evidence", "A=present,B=present,C=absent"]);
    assert_eq!(r.verdict.unwrap().outcome, "DoesNotExtend");
}

#[test]
fn default_evidence_is_unknown() {
    let r = json_report(&["analyze", "R L^2"]);
    let c = r.conditions.unwrap();
    assert_eq!((c.evidence.type_a.as_str(), c.evidence.type_b.as_str()), ("unknown", "unknown"));
    assert_eq!(r.verdict.unwrap().outcome, "Conditional");
}

#[test]
fn analyze_human_output() {
    let o = optb(&["analyze", "RL", "--canonical", "--evidence", "A=present,B=absent,C=absent"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("verdict: Extends"), "{out}");
    assert!(out.contains("S = {2}"), "{out}");
}

#[test]
fn non_hyperbolic_exit_code() {
    let o = optb(&["analyze", "R"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not hyperbolic: |Tr| = 2"), "{}", stderr(&o));
}

#[test]
fn parse_error_exit_code() {
    let o = optb(&["analyze", "R Q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("syntax error"));
    assert_eq!(optb(&["analyze", "RL", "--evidence", "A=maybe"]).status.code(), Some(2));
    assert_eq!(optb(&["analyze"]).status.code(), Some(2));
    assert_eq!(optb(&["analyze", "RL", "--field", "Q(sqrt(4))"]).status.code(), Some(2));
}

#[test]
fn invalid_twist_exit_code() {
    // x has order 1 in H1 of R L^4
    let o = optb(&["alexander", "R L^4", "--twist", "x=zeta(2)^1,y=1"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("!= 1"), "{}", stderr(&o));
}

#[test]
fn unsupported_exit_code() {
    // n = 11 and 2 has order 10 mod 11: F_{2^10} is beyond the finite-field support
    let o = optb(&["alexander", "(RL)^5", "--all-twists", "--modp", "2"]);
    assert_eq!(o.status.code(), Some(5), "{}", stderr(&o));
}

#[test]
fn alexander_examples() {
    let r = json_report(&["alexander", "R L^4", "--twist", "trivial"]);
    let rows = r.bundle.unwrap().alexander.unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].delta0.text, "z^2 - 6*z + 1");
    assert_eq!(rows[0].delta1.text, "1");

    let r = json_report(&["alexander", "RL", "--modp", "7", "--twist", "trivial"]);
    let rows = r.bundle.unwrap().alexander.unwrap();
    assert_eq!(rows[0].delta0.text, "z^2 - 3*z + 1");
    assert_eq!(rows[0].field, "F_7");
}

#[test]
fn alexander_all_twists_of_r_l4() {
    let r = json_report(&["alexander", "R L^4", "--all-twists"]);
    let rows = r.bundle.unwrap().alexander.unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0].twist.label, "trivial");
    assert_eq!(rows[0].delta0.text, "z^2 - 6*z + 1");
    for row in &rows[1..] {
        // the Jacobian's minors (z-1)^2, (z-1)(1-eta^i), 0 have gcd z - 1
        assert_eq!(row.delta0.text, "z - 1", "{}", row.twist.label);
        assert_eq!(row.delta1.text, "1");
    }
}

#[test]
fn explicit_twist_matches_all_twists_row() {
    let all = json_report(&["alexander", "R L^4", "--all-twists"]).bundle.unwrap().alexander.unwrap();
    let one = json_report(&["alexander", "R L^4", "--twist", "x=1,y=zeta(4)^3"]).bundle.unwrap().alexander.unwrap();
    assert_eq!(one[0].twist.label, "x=zeta(4)^0,y=zeta(4)^3");
    assert_eq!(one[0].delta0, all[3].delta0);
    // zeta(2) = zeta(4)^2
    let half = json_report(&["alexander", "R L^4", "--twist", "y=-1"]).bundle.unwrap().alexander.unwrap();
    assert_eq!(half[0].twist.label, "x=zeta(2)^0,y=zeta(2)^1");
}

#[test]
fn primes_example() {
    let r = json_report(&["primes", "RL", "--bound", "100"]);
    let p = r.primes.unwrap();
    let flags: Vec<String> = p.scan.unwrap().flagged.into_iter().map(|e| e.prime).collect();
    assert_eq!(flags, ["2"]);
    assert_eq!(p.candidate_set.len(), 1);
}

#[test]
fn reps_type_c_of_triple_cover() {
    let r = json_report(&["reps", "(RL)^3", "--type", "C"]);
    let reps = r.representations.unwrap();
    let rows = reps.type_bc.unwrap();
    assert!(rows.iter().all(|s| s.kind == "C" && s.verification.ok));
    // α = β = i with t central
    let found = rows.iter().any(|s| {
        s.conductor == "4" && s.alpha_exponent == "1" && s.beta_exponent == "1" && s.delta == "1"
    });
    assert!(found);
    assert!(reps.type_a.is_none());
}

#[test]
fn family_check_passes() {
    let o = optb(&["family", "tunnel_one", "--range", "1..10", "--check"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("10/10 fixtures pass"));
    let o = optb(&["family", "census_m135", "--check", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
}

#[test]
fn family_bad_range() {
    assert_eq!(optb(&["family", "fib_cover", "--range", "3..1"]).status.code(), Some(2));
    assert_eq!(optb(&["family", "fib_cover", "--range", "0..2"]).status.code(), Some(2));
    assert_eq!(optb(&["family", "nope"]).status.code(), Some(2));
}

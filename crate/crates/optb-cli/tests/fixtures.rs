//! Golden comparison against the stored fixture files.
//!
//! Regenerate with `optb family NAME --emit crates/optb-cli/fixtures` after an
//! intentional change to the report format.

use std::path::PathBuf;
use std::process::Command;

use optb_cli::commands::{fixture_file, fixture_file_name};
use optb_cli::report::{to_json, FixtureFile, Report};
use optb_core::families::{fixtures, Family};
use serde_json::Value;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn all() -> Vec<optb_core::families::FamilyFixture> {
    let mut v = fixtures(Family::TunnelOne, 1..=20).unwrap();
    v.extend(fixtures(Family::FibCover, 1..=12).unwrap());
    v.extend(fixtures(Family::CensusM135, 1..=1).unwrap());
    v
}

fn load(name: &str) -> (String, FixtureFile) {
    let path = dir().join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let parsed = serde_json::from_str(&text).unwrap();
    (text, parsed)
}

#[test]
fn stored_fixtures_are_reproduced_exactly() {
    let fx = all();
    let stored = std::fs::read_dir(dir()).unwrap().count();
    assert_eq!(stored, fx.len(), "one file per fixture");
    for f in &fx {
        let name = fixture_file_name(f);
        let (text, _) = load(&name);
        assert_eq!(to_json(&fixture_file(f).unwrap()), text, "{name} differs from the recomputed report");
    }
}

fn strings(v: &[String]) -> Value {
    Value::Array(v.iter().cloned().map(Value::String).collect())
}

/// The cited expectations agree with the computed report they are stored with.
#[test]
fn expectations_match_their_reports() {
    for f in all() {
        let name = fixture_file_name(&f);
        let (_, file) = load(&name);
        let r = &file.report;
        let e = |k: &str| file.expected.get(k).map(|x| x.value.clone()).unwrap_or_else(|| panic!("{name}: {k}"));
        let b = r.bundle.as_ref().unwrap();
        let c = r.conditions.as_ref().unwrap();
        let p = r.primes.as_ref().unwrap();
        let phi: Vec<String> = b.phi.iter().flatten().cloned().collect();
        assert_eq!(e("phi"), strings(&phi), "{name}");
        assert_eq!(e("trace"), Value::String(b.trace.clone()), "{name}");
        assert_eq!(e("torsion_invariants"), strings(&b.torsion_invariants), "{name}");
        assert_eq!(e("n"), Value::String(b.n.clone()), "{name}");
        assert_eq!(e("star1"), Value::Bool(c.star1.holds), "{name}");
        assert_eq!(e("star2"), Value::Bool(c.star2.holds), "{name}");
        assert_eq!(e("verdict"), Value::String(r.verdict.as_ref().unwrap().outcome.clone()), "{name}");
        let s: Vec<String> = p.candidate_set.iter().map(|x| x.prime.clone()).collect();
        assert_eq!(e("candidate_primes"), strings(&s), "{name}");
        if let Some(scan) = file.expected.get("scan_condition2") {
            assert_eq!(scan.value, strings(&p.scan.as_ref().unwrap().condition2), "{name}");
        }
        let ev = e("evidence");
        assert_eq!(ev["type_a"], Value::String(c.evidence.type_a.clone()), "{name}");
        assert_eq!(ev["type_b"], Value::String(c.evidence.type_b.clone()), "{name}");
        assert_eq!(ev["type_c"], Value::String(c.evidence.type_c.clone()), "{name}");
        for (k, x) in &file.expected {
            assert!(!x.citation.is_empty(), "{name}: {k} has no citation");
            assert!(file.report.citations.contains(&x.citation), "{name}: {k}");
        }
        if let Some(ok) = r.representations.as_ref().unwrap().type_bc_all_verified {
            assert!(ok, "{name}");
        }
    }
}

/// Re-running the stored input through the binary yields the stored report.
#[test]
fn stored_inputs_replay_through_the_binary() {
    for name in ["tunnel_one_04.json", "fib_cover_03.json", "census_m135.json"] {
        let (_, file) = load(name);
        let input = &file.report.input;
        let mut args = vec!["analyze".to_string(), input.word.clone().unwrap(), "--json".to_string()];
        for (k, v) in &input.args {
            match v.as_str() {
                "true" => args.push(format!("--{k}")),
                "false" => {}
                _ => {
                    args.push(format!("--{k}"));
                    args.push(v.clone());
                }
            }
        }
        let o = Command::new(env!("CARGO_BIN_EXE_optb")).args(&args).output().unwrap();
        assert!(o.status.success(), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let mut replay: Report = serde_json::from_str(&String::from_utf8(o.stdout).unwrap()).unwrap();
        let mut stored = file.report.clone();
        // the fixture adds the expectation citations
        replay.citations.clear();
        stored.citations.clear();
        assert_eq!(replay, stored, "{name}");
    }
}

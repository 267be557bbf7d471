//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{
    BundleSummary, ConditionsReport, Element, FamilyReport, Matrix, PrimeEntry, PrimesReport, Report,
    RepresentationsReport, VerdictReport,
};

pub fn element_text(e: &Element) -> &str {
    match e {
        Element::Rational { value } => value,
        Element::Quadratic { text, .. }
        | Element::Cyclotomic { text, .. }
        | Element::NumberField { text, .. }
        | Element::Finite { text, .. } => text,
    }
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(element_text).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn set_text(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

fn entries_text(v: &[PrimeEntry]) -> String {
    set_text(&v.iter().map(|e| e.prime.clone()).collect::<Vec<_>>())
}

fn bundle(out: &mut String, b: &BundleSummary) {
    let phi: Vec<String> = b.phi.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    let _ = writeln!(out, "word: {} (canonical: {})", b.word, b.canonical_word);
    let _ = writeln!(out, "Phi = [{}], Tr = {}", phi.join(", "), b.trace);
    let _ = writeln!(out, "characteristic polynomial: {}", b.characteristic_polynomial.text);
    let torsion = if b.torsion_invariants.is_empty() {
        String::new()
    } else {
        b.torsion_invariants.iter().map(|d| format!(" + Z/{d}")).collect()
    };
    let _ = writeln!(out, "H1 = Z^{}{torsion}, |F| = {}", b.free_rank, b.torsion_order);
    let _ = writeln!(out, "ord x = {}, ord y = {}, n = {}", b.order_x, b.order_y, b.n);
    if let Some(rows) = &b.alexander {
        for r in rows {
            let _ = writeln!(
                out,
                "twist {} over {}: Delta0 = {}, Delta1 = {}",
                r.twist.label, r.field, r.delta0.text, r.delta1.text
            );
        }
    }
}

fn conditions(out: &mut String, c: &ConditionsReport) {
    let s1 = &c.star1;
    let _ = writeln!(
        out,
        "(star1) over {}: {} (Tr - 2 = {}, square class {})",
        c.field,
        if s1.holds { "holds" } else { "fails" },
        s1.value,
        s1.square_class
    );
    for j in &s1.justification {
        let _ = writeln!(out, "  {j}");
    }
    let s2 = &c.star2;
    let _ = writeln!(out, "(star2) over {}: {} (n = {})", c.field, if s2.holds { "holds" } else { "fails" }, s2.n);
    if let Some(p) = &s2.minimal_polynomial {
        let _ = writeln!(out, "  minimal polynomial of eta - 1/eta: {}", p.text);
    }
    let _ = writeln!(out, "  {}", s2.note);
    let e = &c.evidence;
    let _ = writeln!(
        out,
        "evidence on C: A={}, B={}, C={}{}{}",
        e.type_a,
        e.type_b,
        e.type_c,
        if e.canonical_component { ", canonical component" } else { "" },
        if e.irreducibility_asserted { ", irreducibility asserted" } else { "" }
    );
}

fn representations(out: &mut String, r: &RepresentationsReport, detailed: bool) {
    let counts: Vec<String> = r.counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let _ = writeln!(out, "representations ({})", counts.join(", "));
    if let Some(a) = &r.type_a {
        for d in a {
            let _ = writeln!(out, "  Type A: eigenvalue {}, w satisfies {}", element_text(&d.eigenvalue), d.w_minimal_polynomial.text);
            for s in &d.representations {
                let status = if s.verification.ok { "verified" } else { "FAILED" };
                let _ = writeln!(out, "    signs ({}): {status}", s.signs.join(", "));
                if detailed {
                    let _ = writeln!(out, "      x = {}", matrix_text(&s.x));
                    let _ = writeln!(out, "      y = {}", matrix_text(&s.y));
                    let _ = writeln!(out, "      t = {}", matrix_text(&s.t));
                }
            }
        }
    }
    if let (None, Some(ok)) = (&r.type_bc, r.type_bc_all_verified) {
        let status = if ok { "all verified" } else { "some FAILED verification" };
        let _ = writeln!(out, "  Type B/C over {}: {status}", r.type_bc_field.as_deref().unwrap_or("?"));
    }
    if let Some(why) = &r.type_bc_skipped {
        let _ = writeln!(out, "  Type B/C enumeration skipped: {why}");
    }
    if let Some(rows) = &r.type_bc {
        for s in rows {
            let status = if s.verification.ok { "verified" } else { "FAILED" };
            let alpha = element_text(&s.alpha);
            let beta = element_text(&s.beta);
            let _ = writeln!(
                out,
                "  Type {}: alpha = {alpha}, beta = {beta}, delta = {}{}: {status}",
                s.kind,
                s.delta,
                if s.parametric { " (parametric)" } else { "" }
            );
            if detailed {
                let _ = writeln!(out, "      x = {}", matrix_text(&s.x));
                let _ = writeln!(out, "      y = {}", matrix_text(&s.y));
                let _ = writeln!(out, "      t = {}", matrix_text(&s.t));
            }
        }
    }
}

fn verdict(out: &mut String, v: &VerdictReport) {
    let _ = writeln!(out, "verdict: {}", v.outcome);
    let _ = writeln!(out, "  rule: {}", v.rule);
    for e in &v.explanation {
        let _ = writeln!(
            out,
            "  Type {} ({}), {} {}: {}",
            e.kind,
            e.evidence,
            e.condition,
            if e.condition_holds { "holds" } else { "fails" },
            e.effect
        );
    }
    for r in &v.resolutions {
        let _ = writeln!(out, "  to resolve: {r}");
    }
}

fn primes(out: &mut String, p: &PrimesReport) {
    let _ = writeln!(out, "S = {}", entries_text(&p.candidate_set));
    for e in &p.candidate_set {
        let _ = writeln!(out, "  {}: {}", e.prime, e.provenance.join("; "));
    }
    if let Some(s) = &p.scan {
        let _ = writeln!(out, "scan flags up to {} = {}", s.bound, entries_text(&s.flagged));
        let _ = writeln!(out, "  condition (1): {}", set_text(&s.condition1));
        let _ = writeln!(out, "  condition (2): {}", set_text(&s.condition2));
        if s.twisted {
            let _ = writeln!(out, "  twisted: {} ({} cases skipped)", set_text(&s.twisted_flags), s.skipped.len());
        }
    }
    if let Some(c) = &p.closed_form {
        let _ = writeln!(out, "closed form for Tr = a^2 + 2: {}", set_text(c));
    }
}

/// `detailed` prints every representation matrix.
pub fn report(r: &Report, detailed: bool) -> String {
    let mut out = String::new();
    if let Some(b) = &r.bundle {
        bundle(&mut out, b);
    }
    if let Some(c) = &r.conditions {
        conditions(&mut out, c);
    }
    if let Some(rep) = &r.representations {
        representations(&mut out, rep, detailed);
    }
    if let Some(v) = &r.verdict {
        verdict(&mut out, v);
    }
    if let Some(p) = &r.primes {
        primes(&mut out, p);
    }
    out
}

pub fn family(r: &FamilyReport) -> String {
    let mut out = String::new();
    for f in &r.fixtures {
        let label = match &f.j {
            Some(j) => format!("{} j={j}", f.family),
            None => f.family.clone(),
        };
        let verdict = f.expected.get("verdict").and_then(|e| e.value.as_str()).unwrap_or("?");
        match (f.pass, &f.checks) {
            (Some(pass), Some(items)) => {
                let _ = writeln!(out, "{label}: {} ({}) {}", f.word, verdict, if pass { "pass" } else { "FAIL" });
                for i in items.iter().filter(|i| !i.pass) {
                    let _ = writeln!(out, "  {}: expected {}, got {} [{}]", i.name, i.expected, i.actual, i.citation);
                }
            }
            _ => {
                let _ = writeln!(out, "{label}: {} over {}, expected verdict {verdict}", f.word, f.field);
            }
        }
    }
    if let Some(pass) = r.pass {
        let n = r.fixtures.len();
        let ok = r.fixtures.iter().filter(|f| f.pass == Some(true)).count();
        let _ = writeln!(out, "{ok}/{n} fixtures pass{}", if pass { "" } else { "; FAILURES above" });
    }
    out
}

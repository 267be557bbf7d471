//! The acceptance gate: eight criteria, each with a time limit. Run with
//! `cargo test -p optb-core --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use optb_core::alexander::{alexander_invariants, all_twists};
use optb_core::arith::cyclotomic::{Cyclotomic, CyclotomicField};
use optb_core::arith::intfns::{divisors, primes_up_to};
use optb_core::arith::matrix::Mat2;
use optb_core::arith::{q, Field, Ring};
use optb_core::conditions::{
    star1_from_trace, star1_via_factorization, star_conditions, verdict, verdict_from_values, ComponentEvidence,
    DefinitionField, Evidence, Outcome,
};
use optb_core::families::{fibonacci, fixture, lucas, Family};
use optb_core::integral::{
    candidate_prime_set, characteristic_obstructions, finite_field_scan, lemma_finfield_closed_form, PrimeSet,
    Provenance,
};
use optb_core::monodromy::{char_poly, monodromy_matrix, TorusBundle};
use optb_core::reps::{enumerate_type_bc, verify_representation, RepType, TypeBcSolution};
use optb_core::words::{parse_monodromy, MonodromyWord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn int_matrix(a: i64, b: i64, c: i64, d: i64) -> Mat2<BigInt> {
    Mat2::new(a.into(), b.into(), c.into(), d.into())
}

fn criterion_1() -> String {
    for j in 1..=50i64 {
        let m = monodromy_matrix(&parse_monodromy(&format!("R L^{j}")).unwrap());
        assert_eq!(m, int_matrix(j + 1, 1, j, 1), "R L^{j}");
    }
    for j in 1..=20u64 {
        let m = monodromy_matrix(&parse_monodromy(&format!("(RL)^{j}")).unwrap());
        let expected = Mat2::new(fibonacci(2 * j + 1), fibonacci(2 * j), fibonacci(2 * j), fibonacci(2 * j - 1));
        assert_eq!(m, expected, "(RL)^{j}");
    }
    "Phi(R L^j) for j <= 50, Phi((RL)^j) for j <= 20".into()
}

fn criterion_2() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..500 {
        let b = random_hyperbolic(&mut rng, 30);
        let phi = b.phi();
        let det = phi.sub_identity().det();
        let tr2 = (b.trace() - BigInt::from(2)).abs();
        assert_eq!(b.torsion_order(), tr2, "{}", b.word().source());
        assert_eq!(det.abs(), tr2, "{}", b.word().source());
        let inv = b.torsion_invariants();
        assert!(inv.iter().all(|d| d > &BigInt::one()), "{}", b.word().source());
        assert!(inv.windows(2).all(|w| w[1].is_multiple_of(&w[0])), "{}: {inv:?}", b.word().source());
    }
    for j in 1..=20u64 {
        let b = bundle(&format!("(RL)^{j}"));
        let expected = if j % 2 == 0 {
            vec![fibonacci(j), fibonacci(j) * 5]
        } else {
            vec![lucas(j), lucas(j)]
        };
        let expected: Vec<BigInt> = expected.into_iter().filter(|d| !d.is_one()).collect();
        assert_eq!(b.torsion_invariants(), expected.as_slice(), "(RL)^{j}");
    }
    "500 random words, (RL)^j for j <= 20".into()
}

fn delta_is_one(p: &optb_core::arith::laurent::LaurentPoly<Cyclotomic>) -> bool {
    p.terms().len() == 1 && p.coeff(0).is_one()
}

fn check_twists(b: &TorusBundle, max_order: u64) -> usize {
    let n = b.n_u64().unwrap();
    let cp = char_poly(b);
    let mut count = 0;
    for m in divisors(n).into_iter().filter(|&m| m <= max_order) {
        for (p, qq, s) in all_twists(b, m) {
            // exact order m, so each twist is seen once
            if m / m.gcd(&p).gcd(&qq) != m {
                continue;
            }
            let w = b.word().source();
            let inv = alexander_invariants(b, &s).unwrap_or_else(|e| panic!("{w} ({p}, {qq}) mod {m}: {e}"));
            let (shift, d0) = inv.delta0.to_poly();
            assert_eq!(shift, 0, "{w}");
            if m == 1 {
                let f = s.x.field().clone();
                assert_eq!(d0, cp.map(|c| Cyclotomic::rational(&f, c)), "{w}");
            } else {
                assert!(d0.degree().is_some_and(|d| d <= 1), "{w} ({p}, {qq}) mod {m}: {:?}", d0);
            }
            assert!(delta_is_one(&inv.delta1), "{w} ({p}, {qq}) mod {m}");
            count += 1;
        }
    }
    count
}

fn criterion_3() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut twists = 0;
    for _ in 0..200 {
        twists += check_twists(&random_hyperbolic(&mut rng, 30), 12);
    }
    for j in 2..=8i64 {
        let b = bundle(&format!("R L^{j}"));
        let f = CyclotomicField::new(j as u64);
        let one = Cyclotomic::rational(&f, &q(1));
        for i in 0..j {
            let (_, _, s) = all_twists(&b, j as u64).into_iter().find(|(p, qq, _)| *p == 0 && *qq == i as u64).unwrap();
            let jac = optb_core::alexander::fox_jacobian(&b, &s).unwrap();
            let eta = |k: i64| Cyclotomic::zeta_pow(&f, k);
            let tail = (1..=j).fold(one.int_like(0), |acc, k| acc + eta(-k * i));
            let z = |c0: Cyclotomic| {
                optb_core::arith::laurent::LaurentPoly::from_terms([(1, one.clone()), (0, c0)])
            };
            let constant = optb_core::arith::laurent::LaurentPoly::constant;
            assert_eq!(jac[0][0], z(-(one.clone() + tail.clone())), "R L^{j}, i = {i}");
            assert_eq!(jac[0][1], constant(-tail.clone()), "R L^{j}, i = {i}");
            assert!(jac[0][2].is_zero());
            assert_eq!(jac[1][0], constant(-eta(i)));
            assert_eq!(jac[1][1], z(-one.clone()));
            assert_eq!(jac[1][2], constant(one.clone() - eta(i)));
            let inv = alexander_invariants(&b, &s).unwrap();
            if i != 0 {
                assert_eq!(inv.delta0, z(-one.clone()), "R L^{j}, i = {i}");
            }
            assert!(delta_is_one(&inv.delta1));
        }
    }
    format!("{twists} twists on 200 random words, R L^j table for 2 <= j <= 8")
}

fn find(sols: &[TypeBcSolution], kind: RepType, a: u64, b: u64, delta: i8) -> &TypeBcSolution {
    sols.iter()
        .find(|s| s.kind() == kind && s.alpha_exp == a && s.beta_exp == b && s.delta == delta)
        .unwrap_or_else(|| panic!("no Type {kind} solution at ({a}, {b}), delta = {delta}"))
}

fn criterion_4() -> String {
    let mut seen = std::collections::BTreeSet::new();
    let mut words: Vec<MonodromyWord> = all_short_words(6);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    words.extend((0..200).map(|_| random_word(&mut rng, 12)));
    let mut compared = 0;
    let mut solutions = 0;
    for w in words {
        let Ok(b) = optb_core::monodromy::build_bundle(&w) else { continue };
        let big_n = b.torsion_order_u64().unwrap();
        if big_n > 12 || !seen.insert(w.canonical()) {
            continue;
        }
        let sols = enumerate_type_bc(&b).unwrap();
        for s in &sols {
            let v = verify_representation(&s.rep, &b);
            assert!(v.ok, "{}: {:?}", w.source(), v.failure);
            assert!(s.rep.is_non_abelian() && s.rep.is_upper_triangular_sl2());
        }
        assert_eq!(embed_solutions(&sols, big_n), brute_force_type_bc(&w, big_n), "{}", w.source());
        compared += 1;
        solutions += sols.len();
    }

    for j in 3..=8u64 {
        let b = bundle(&format!("R L^{j}"));
        let sols = enumerate_type_bc(&b).unwrap();
        let f = CyclotomicField::new(b.n_u64().unwrap());
        assert_eq!(f.conductor(), j);
        for k in (1..j).filter(|k| (2 * k) % j != 0) {
            let s = find(&sols, RepType::B, 0, k, 1);
            let eta = Cyclotomic::zeta_pow(&f, k as i64);
            assert_eq!(s.rep.x.b, eta.inv().unwrap().pow_u64(2) - eta.int_like(1), "R L^{j}, k = {k}");
            assert!(s.rep.y.b.is_zero() && !s.parametric);
            assert_eq!(s.rep.t, Mat2::new(eta.int_like(1), eta.int_like(1), eta.int_like(0), eta.int_like(1)));
        }
    }
    for m in 1..=3u64 {
        let b = bundle(&format!("(RL)^{}", 2 * m));
        let n = b.n_u64().unwrap();
        let sols = enumerate_type_bc(&b).unwrap();
        let f = CyclotomicField::new(n);
        let a = n / 5;
        let s = find(&sols, RepType::B, a, 2 * a, 1);
        let alpha = Cyclotomic::zeta_pow(&f, a as i64);
        let expected = (alpha.int_like(1) - alpha.inv().unwrap()) * Cyclotomic::rational(&f, &optb_core::arith::qq(1, m as i64));
        assert!(s.rep.x.b.is_zero());
        assert_eq!(s.rep.y.b, expected, "(RL)^{}", 2 * m);
        assert!(!s.parametric);
    }
    for (j, a) in [(3u64, 1u64), (6, 10)] {
        let b = bundle(&format!("(RL)^{j}"));
        let n = b.n_u64().unwrap();
        let sols = enumerate_type_bc(&b).unwrap();
        let s = find(&sols, RepType::C, a, a, 1);
        let f = CyclotomicField::new(n);
        let i = Cyclotomic::zeta_pow(&f, (n / 4) as i64);
        let (z, o) = (i.int_like(0), i.int_like(1));
        assert_eq!(s.rep.x, Mat2::new(i.clone(), z.clone(), z.clone(), -i.clone()), "(RL)^{j}");
        assert_eq!(s.rep.y, Mat2::new(i.clone(), o, z, -i.clone()), "(RL)^{j}");
        assert!(s.rep.t.is_identity() && s.parametric);
        assert!(verify_representation(&s.rep, &b).ok);
    }
    format!("oracle agrees on {compared} words ({solutions} solutions); listed examples found")
}

fn criterion_5() -> String {
    let mut checked = 0;
    for c in 3..=500i64 {
        for t in [c, -c] {
            let t = BigInt::from(t);
            let direct = star1_from_trace(&t, &DefinitionField::Rational).unwrap().holds;
            assert_eq!(direct, star1_via_factorization(&t), "Tr = {t}");
            checked += 1;
        }
    }
    format!("{checked} traces")
}

fn fixture_verdict(family: Family, j: Option<u64>) -> Outcome {
    let f = fixture(family, j).unwrap();
    let b = bundle(&f.word);
    let stars = star_conditions(&b, &f.field).unwrap();
    verdict(&stars, &f.expected.evidence.value, false).outcome
}

fn criterion_6() -> String {
    for j in 1..=20u64 {
        let expected = if j == 1 || j == 4 { Outcome::Extends } else { Outcome::DoesNotExtend };
        assert_eq!(fixture_verdict(Family::TunnelOne, Some(j)), expected, "R L^{j}");
    }
    for j in 1..=12u64 {
        let got = fixture_verdict(Family::FibCover, Some(j));
        assert_eq!(got == Outcome::Extends, j % 2 == 1, "(RL)^{j}: {got}");
    }
    assert_eq!(fixture_verdict(Family::CensusM135, None), Outcome::DoesNotExtend);
    "tunnel_one j <= 20, fib_cover j <= 12, m135 over Q(i)".into()
}

fn criterion_7() -> String {
    let fig8 = bundle("RL");
    assert_eq!(candidate_prime_set(&fig8).unwrap().primes(), vec![2]);
    assert_eq!(finite_field_scan(&fig8, 1000, false).unwrap().flagged.primes(), vec![2]);
    let primes = primes_up_to(1000);
    for a in 1..=30i64 {
        let b = bundle(&format!("R L^{}", a * a));
        assert_eq!(b.trace(), &BigInt::from(a * a + 2));
        let closed = lemma_finfield_closed_form(b.trace()).unwrap();
        let mut scanned = PrimeSet::new();
        for &l in &primes {
            for degree in characteristic_obstructions(b.trace(), l).unwrap() {
                scanned.insert(l, Provenance::CharacteristicPolynomial { degree });
            }
        }
        assert_eq!(scanned.primes(), closed.primes(), "a = {a}");
    }
    assert!(finite_field_scan(&bundle("R L^4"), 1000, false).unwrap().condition2().is_empty());
    "figure-eight S = {2}, closed form for a <= 30 up to 1000".into()
}

fn criterion_8() -> String {
    let pairs = [(true, true), (true, false), (false, true), (false, false)];
    let mut cases = 0;
    for (code, row) in TRUTH_TABLE {
        for (canonical, asserted) in pairs {
            let ev = evidence_code(code, canonical);
            for (k, &(s1, s2)) in pairs.iter().enumerate() {
                let v = verdict_from_values(s1, s2, &ev, asserted);
                let expected = match row[k] {
                    Outcome::DoesNotExtend if !(canonical || asserted) => Outcome::Conditional,
                    o => o,
                };
                assert_eq!(v.outcome, expected, "{code} s1={s1} s2={s2} canonical={canonical} asserted={asserted}");
                assert_eq!(v.resolutions.is_empty(), v.outcome != Outcome::Conditional, "{code}");
                cases += 1;
            }
        }
    }
    // learning that a type is absent never overturns a settled verdict
    let all = |c: bool| -> Vec<ComponentEvidence> {
        let e = Evidence::ALL;
        let mut v = Vec::new();
        for a in e {
            for b in e {
                for cc in e {
                    v.push(ComponentEvidence::new(a, b, cc, c));
                }
            }
        }
        v
    };
    for canonical in [true, false] {
        for ev in all(canonical) {
            for kind in [RepType::A, RepType::B, RepType::C] {
                if ev.get(kind) != Evidence::Unknown {
                    continue;
                }
                let mut more = ev;
                match kind {
                    RepType::A => more.type_a_on_c = Evidence::Absent,
                    RepType::B => more.type_b_on_c = Evidence::Absent,
                    RepType::C => more.type_c_on_c = Evidence::Absent,
                }
                for (s1, s2) in pairs {
                    for asserted in [true, false] {
                        let before = verdict_from_values(s1, s2, &ev, asserted).outcome;
                        let after = verdict_from_values(s1, s2, &more, asserted).outcome;
                        match before {
                            Outcome::Extends | Outcome::DoesNotExtend => assert_eq!(after, before, "{ev:?} {kind}"),
                            Outcome::Conditional => assert_ne!(after, Outcome::DoesNotExtend, "{ev:?} {kind}"),
                        }
                    }
                }
            }
        }
    }
    format!("{cases} table cases, Unknown to Absent monotone")
}

type Criterion = (u32, fn() -> String, u64);

#[test]
fn acceptance() {
    // (number, check, time limit in seconds)
    let criteria: [Criterion; 8] = [
        (1, criterion_1, 1),
        (2, criterion_2, 5),
        (3, criterion_3, 60),
        (4, criterion_4, 120),
        (5, criterion_5, 1),
        (6, criterion_6, 5),
        (7, criterion_7, 30),
        (8, criterion_8, 1),
    ];
    let mut failures = Vec::new();
    for (k, run, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(limit);
        let line = match &result {
            Ok(detail) if within => format!("criterion {k}: PASS ({:.2} s, limit {limit} s) {detail}", elapsed.as_secs_f64()),
            Ok(detail) => format!("criterion {k}: FAIL ({:.2} s, over the {limit} s limit) {detail}", elapsed.as_secs_f64()),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("criterion {k}: FAIL ({:.2} s) {msg}", elapsed.as_secs_f64())
            }
        };
        println!("{line}");
        if !(result.is_ok() && within) {
            failures.push(line);
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}


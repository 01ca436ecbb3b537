//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::Value;

use transpoly::checks::family_bruteforce;
use transpoly::commands::{sweep, SweepOptions};
use transpoly::report::{Instance, Outcome};
use transpoly_core::canonical::{enumerate_m, type_formula};
use transpoly_core::cone::{build_cone, certificate_matrix, det_closed_form, verify_irreducible_representation};
use transpoly_core::hilbert::{
    ehrhart_count_family, full_numerator, hilbert_function, hilbert_values, iterated_differences, HilbertSummary,
};
use transpoly_core::linalg::bareiss_determinant;
use transpoly_core::presentation::{build_family_presentation, check_exchange_property, enumerate_base};
use transpoly_core::{ExponentVector, FamilyParams};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { failures: Vec::new(), notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.require(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:.0?}"));
    }
}

fn report_json(n: &str, i: &str, j: &str) -> (Value, Duration) {
    let start = Instant::now();
    // the same entry point the binary uses, run in-process
    let out = transpoly::run(["transpoly", "report", "--n", n, "--i", i, "--j", j, "--format", "json"]);
    let elapsed = start.elapsed();
    assert_eq!(out.code, 0, "{}", out.stderr);
    (serde_json::from_str(&out.stdout).unwrap(), elapsed)
}

fn numbers(v: &Value) -> Vec<i64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_i64).collect()).unwrap_or_default()
}

fn golden(n: &str, i: &str, j: &str, ty: i64, a: i64, numerator: &[i64], identity: impl Fn(&[i64]) -> i64) -> Verdict {
    let mut v = Verdict::new();
    let (report, elapsed) = report_json(n, i, j);
    let got = numbers(&report["numerator"]);
    v.require(report["type_value"] == ty, || format!("type {}", report["type_value"]));
    v.require(report["a_invariant"] == a, || format!("a-invariant {}", report["a_invariant"]));
    v.require(got == numerator, || format!("numerator {got:?}"));
    if got.len() == numerator.len() {
        let id = identity(&got);
        v.require(id == ty, || format!("h-vector identity gives {id}"));
    }
    v.within(elapsed, Duration::from_secs(1));
    v.notes.push(format!("{elapsed:.2?}"));
    v
}

fn criterion_1() -> Verdict {
    golden("7", "3", "2", 113, -1, &[1, 1561, 24795, 57023, 25571, 1673, 1], |h| 1 + h[5] - h[1])
}

fn criterion_2() -> Verdict {
    golden("7", "4", "5", 540, -3, &[1, 351, 2835, 3297, 540], |h| h[4])
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let grid = FamilyParams::grid(7);
    let problems: Vec<String> = grid
        .par_iter()
        .flat_map_iter(|p| {
            let mut out = Vec::new();
            let base = enumerate_base(&build_family_presentation(p));
            let cone = build_cone(p);
            let check = verify_irreducible_representation(&base, &cone);
            if !check.holds() {
                out.push(format!(
                    "{p}: {}",
                    check.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")
                ));
            }
            let expected = (p.i() + 1) * (p.n() - p.i());
            if cone.rays.len() != expected {
                out.push(format!("{p}: {} rays, expected {expected}", cone.rays.len()));
            }
            if let Some(r) = cone.rays.iter().find(|r| base.binary_search(r).is_err()) {
                out.push(format!("{p}: ray {r} outside the base set"));
            }
            match bareiss_determinant(&certificate_matrix(p)) {
                Ok(d) if d.abs() == det_closed_form(p) => {}
                Ok(d) => out.push(format!("{p}: |det C| = {}, closed form {}", d.abs(), det_closed_form(p))),
                Err(e) => out.push(format!("{p}: {e}")),
            }
            out
        })
        .collect();
    v.failures.extend(problems);
    let elapsed = start.elapsed();
    v.within(elapsed, Duration::from_secs(30));
    v.notes.push(format!("{} instances, {elapsed:.2?}", grid.len()));
    v
}

fn criterion_4() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut instances = FamilyParams::grid(6);
    instances.push(FamilyParams::new(7, 3, 2).unwrap());
    instances.push(FamilyParams::new(7, 4, 5).unwrap());
    let problems: Vec<String> = instances
        .par_iter()
        .filter_map(|p| {
            let found = match family_bruteforce(p) {
                Ok(f) => f,
                Err(e) => return Some(format!("{p}: {e}")),
            };
            let closed = enumerate_m(p);
            let formula = type_formula(p);
            let g = &found.generators;
            if *g == closed && BigInt::from(g.len()) == formula {
                return None;
            }
            let missing: Vec<String> = g
                .generators()
                .iter()
                .filter(|x| closed.generators().binary_search(x).is_err())
                .take(3)
                .map(|x: &ExponentVector| format!("{x} (degree {})", g.degree_of(x)))
                .collect();
            Some(format!(
                "{p}: brute force {} generators, enumerate_m {}, formula {formula}; missing {}",
                g.len(),
                closed.len(),
                missing.join(", ")
            ))
        })
        .collect();
    v.failures.extend(problems);
    let elapsed = start.elapsed();
    v.within(elapsed, Duration::from_secs(300));
    v.notes.push(format!("{} instances, {elapsed:.2?}", instances.len()));
    v
}

fn criterion_5() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let grid = FamilyParams::grid(7);
    let problems: Vec<String> = grid
        .par_iter()
        .flat_map_iter(|p| {
            let mut out = Vec::new();
            for t in 0..=3u32 {
                let closed = hilbert_function(p, t as i64).unwrap();
                match ehrhart_count_family(p, t) {
                    Ok(e) if BigInt::from(e) == closed => {}
                    Ok(e) => out.push(format!("{p} t={t}: h = {closed}, Ehrhart {e}")),
                    Err(e) => out.push(format!("{p} t={t}: {e}")),
                }
            }
            let base = enumerate_base(&build_family_presentation(p)).len();
            if BigInt::from(base) != hilbert_function(p, 1).unwrap() {
                out.push(format!("{p}: h(1) differs from |base| = {base}"));
            }
            out
        })
        .collect();
    v.failures.extend(problems);
    let elapsed = start.elapsed();
    v.within(elapsed, Duration::from_secs(300));
    v.notes.push(format!("{} instances x 4 dilations, {elapsed:.2?}", grid.len()));
    v
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    let grid = FamilyParams::grid(8);
    let mut gorenstein = 0;
    for p in &grid {
        let one = type_formula(p) == BigInt::from(1);
        gorenstein += one as usize;
        v.require(one == (p.j() == p.n() - p.i() - 1), || format!("{p}: type {}", type_formula(p)));
    }
    v.notes.push(format!("{} instances, {gorenstein} Gorenstein", grid.len()));
    v
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let small = FamilyParams::grid(6);
    let problems: Vec<String> = small
        .par_iter()
        .filter_map(|p| match family_bruteforce(p) {
            Ok(f) if f.generators.min_degree() == Some(p.r() as u64) => None,
            Ok(f) => Some(format!("{p}: least generator degree {:?}, r = {}", f.generators.min_degree(), p.r())),
            Err(e) => Some(format!("{p}: {e}")),
        })
        .collect();
    v.failures.extend(problems);
    let grid = FamilyParams::grid(8);
    for p in &grid {
        match HilbertSummary::for_family(p) {
            Ok(s) => v.require(s.numerator.len() == p.n() - p.r() + 1 && -s.a_invariant == p.r() as i64, || {
                format!("{p}: numerator degree {}", s.numerator.len() - 1)
            }),
            Err(e) => v.failures.push(format!("{p}: {e}")),
        }
    }
    v.notes.push(format!("{} brute-force instances, {} numerator degrees", small.len(), grid.len()));
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let opts = SweepOptions { max_n: 7, random: 200, seed: 1, brute_force: false };
    let start = Instant::now();
    let first = sweep(&opts).unwrap();
    let elapsed = start.elapsed();
    let second = sweep(&opts).unwrap();
    v.require(first.to_json() == second.to_json(), || "two runs with the same seed differ".into());

    let rows = first.sweep.as_ref().unwrap();
    let counterexamples = first.counterexamples.as_ref().unwrap();
    let family: Vec<_> = rows.iter().filter(|r| matches!(r.instance, Instance::Family { .. })).collect();
    let random: Vec<_> = rows.iter().filter(|r| matches!(r.instance, Instance::Presentation { .. })).collect();
    v.require(family.len() == FamilyParams::grid(7).len(), || format!("{} family rows", family.len()));
    for row in &family {
        v.require(row.outcome == Outcome::Holds, || format!("family row {} does not hold", row.instance.label()));
    }
    v.require(random.len() >= 200, || format!("only {} random rows", random.len()));
    for row in &random {
        let n = match row.instance {
            Instance::Presentation { n, .. } => n,
            Instance::Family { n, .. } => n,
        };
        v.require(n == 4 || n == 5, || format!("random row with n = {n}"));
        match row.outcome {
            Outcome::Holds => {}
            Outcome::Skipped => {
                v.require(row.reason.is_some(), || format!("{} skipped silently", row.instance.label()))
            }
            Outcome::Violated => v.require(counterexamples.contains(row), || {
                format!("violation at {} not surfaced", row.instance.label())
            }),
        }
    }
    let count = |o: Outcome| random.iter().filter(|r| r.outcome == o).count();
    v.notes.push(format!(
        "{} family rows hold; random: {} hold, {} skipped, {} counterexamples; {elapsed:.2?}",
        family.len(),
        count(Outcome::Holds),
        count(Outcome::Skipped),
        count(Outcome::Violated)
    ));
    for row in counterexamples {
        v.notes.push(format!(
            "counterexample {}: type {} predicted {}",
            row.instance.label(),
            row.type_value.as_ref().map_or("-".into(), |t| t.to_string()),
            row.predicted.as_ref().map_or("-".into(), |t| t.to_string())
        ));
    }
    v
}

fn criterion_9() -> Verdict {
    let mut v = Verdict::new();
    let grid = FamilyParams::grid(6);
    let bad: Vec<String> = grid
        .par_iter()
        .filter(|p| !check_exchange_property(&enumerate_base(&build_family_presentation(p))))
        .map(|p| p.to_string())
        .collect();
    v.require(bad.is_empty(), || format!("exchange fails on {}", bad.join(" ")));
    let non_base = [ExponentVector::new(vec![2, 0, 1]), ExponentVector::new(vec![0, 2, 1])];
    v.require(!check_exchange_property(&non_base), || "accepted {(2,0,1),(0,2,1)}".into());
    v.notes.push(format!("{} family bases", grid.len()));
    v
}

fn criterion_10() -> Verdict {
    let mut v = Verdict::new();
    let grid = FamilyParams::grid(6);
    for p in &grid {
        let n = p.n();
        let closed = full_numerator(p);
        let differenced = iterated_differences(&hilbert_values(p, n), n);
        v.require(closed == differenced, || format!("{p}: {closed:?} vs {differenced:?}"));
    }
    v.notes.push(format!("{} instances", grid.len()));
    v
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden instance (7,3,2)", criterion_1),
        ("golden instance (7,4,5)", criterion_2),
        ("facets, rays and determinant certificate, n <= 7", criterion_3),
        ("canonical generators equal the closed-form set, n <= 6 and golden", criterion_4),
        ("Hilbert function equals Ehrhart count, n <= 7, t <= 3", criterion_5),
        ("Gorenstein iff j = n - i - 1, n <= 8", criterion_6),
        ("a-invariant and numerator degree", criterion_7),
        ("conjecture sweep and determinism", criterion_8),
        ("exchange axiom", criterion_9),
        ("numerator equals iterated differences, n <= 6", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let status = if verdict.failures.is_empty() { "PASS" } else { "FAIL" };
        failed += !verdict.failures.is_empty() as usize;
        println!("criterion {:>2} {status}: {name} ({:.2?})", k + 1, start.elapsed());
        for note in &verdict.notes {
            println!("    {note}");
        }
        for failure in &verdict.failures {
            println!("    failure: {failure}");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

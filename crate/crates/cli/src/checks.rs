//! Formula-against-oracle checks for one family instance.

use num_bigint::BigInt;
use rayon::prelude::*;

use transpoly_core::canonical::{
    canonical_generators_bruteforce, canonical_generators_complete, enumerate_m, family_degree_cap, type_formula,
};
use transpoly_core::cone::{build_cone, det_certificate, verify_irreducible_representation};
use transpoly_core::hilbert::{ehrhart_count_family, hilbert_function, HilbertSummary};
use transpoly_core::presentation::{
    build_family_presentation, enumerate_base, family_base_closed_form, find_exchange_violation,
};
use transpoly_core::{CanonicalGenerators, Error, FamilyParams};

use crate::report::{OracleCheck, Status};

/// Check names accepted by `--only`.
pub const CHECK_NAMES: [&str; 8] = ["base", "exchange", "cone", "rays", "det", "type", "a-invariant", "hilbert"];

/// Largest `n` for which the exchange axiom and the canonical-module brute
/// force are run.
pub const BRUTE_FORCE_MAX_N: usize = 6;

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub only: Option<String>,
    pub max_t: u32,
}

impl CheckOptions {
    fn wants(&self, name: &str) -> bool {
        self.only.as_deref().is_none_or(|o| o == name)
    }
}

/// Outcome of the canonical-module brute force for a family instance.
pub struct BruteForceOutcome {
    pub generators: CanonicalGenerators,
    /// Whether the default cap already settled the search.
    pub default_cap_conclusive: bool,
    pub default_cap: u32,
}

/// Brute force at the default cap, then the complete search if the default
/// cap turned out to be inconclusive.
pub fn family_bruteforce(p: &FamilyParams) -> Result<BruteForceOutcome, Error> {
    let pres = build_family_presentation(p);
    let cap = family_degree_cap(p);
    match canonical_generators_bruteforce(&pres, cap) {
        Ok(generators) => Ok(BruteForceOutcome { generators, default_cap_conclusive: true, default_cap: cap }),
        Err(Error::Inconclusive { .. }) => {
            let (generators, _) = canonical_generators_complete(&pres)?;
            Ok(BruteForceOutcome { generators, default_cap_conclusive: false, default_cap: cap })
        }
        Err(e) => Err(e),
    }
}

fn check_name(name: &str, p: &FamilyParams) -> String {
    format!("{name} ({},{},{})", p.n(), p.i(), p.j())
}

/// Every requested check for one instance, in the order of [`CHECK_NAMES`].
pub fn family_checks(p: &FamilyParams, opts: &CheckOptions) -> Vec<OracleCheck> {
    let mut out = Vec::new();
    let pres = build_family_presentation(p);
    let base = enumerate_base(&pres);
    let n = p.n();

    if opts.wants("base") {
        let closed = family_base_closed_form(p);
        let h1 = hilbert_function(p, 1).expect("t >= 0");
        let ok = base == closed && BigInt::from(base.len()) == h1;
        out.push(OracleCheck::from_bool(
            check_name("base", p),
            ok,
            format!("{} base vectors; prefix-sum description gives {}; h(1) = {h1}", base.len(), closed.len()),
        ));
    }

    if opts.wants("exchange") {
        out.push(if n > BRUTE_FORCE_MAX_N {
            OracleCheck::new(check_name("exchange", p), Status::Skipped, format!("n > {BRUTE_FORCE_MAX_N}"))
        } else {
            match find_exchange_violation(&base) {
                None => OracleCheck::new(check_name("exchange", p), Status::Pass, "base axiom holds"),
                Some(v) => OracleCheck::new(check_name("exchange", p), Status::Fail, v.to_string()),
            }
        });
    }

    let cone = build_cone(p);
    if opts.wants("cone") {
        let check = verify_irreducible_representation(&base, &cone);
        let detail = if check.holds() {
            format!(
                "{} normals irredundant, {} extreme rays",
                check.irredundancy_witnesses.len(),
                check.halfspace_rays.len()
            )
        } else {
            check.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")
        };
        out.push(OracleCheck::from_bool(check_name("cone", p), check.holds(), detail));
    }

    if opts.wants("rays") {
        let expected = (p.i() + 1) * (n - p.i());
        let outside: Vec<String> =
            cone.rays.iter().filter(|r| base.binary_search(r).is_err()).map(|r| r.to_string()).collect();
        let ok = cone.rays.len() == expected && outside.is_empty();
        let detail = if outside.is_empty() {
            format!("{} rays, expected {expected}, all in the base set", cone.rays.len())
        } else {
            format!("{} rays, expected {expected}; not in base: {}", cone.rays.len(), outside.join(" "))
        };
        out.push(OracleCheck::from_bool(check_name("rays", p), ok, detail));
    }

    if opts.wants("det") {
        out.push(match det_certificate(p) {
            Ok(d) => OracleCheck::new(check_name("det", p), Status::Pass, format!("|det C| = {d}")),
            Err(e) => OracleCheck::new(check_name("det", p), Status::Fail, e.to_string()),
        });
    }

    if opts.wants("type") || opts.wants("a-invariant") {
        if n > BRUTE_FORCE_MAX_N {
            for name in ["type", "a-invariant"] {
                if opts.wants(name) {
                    out.push(OracleCheck::new(
                        check_name(name, p),
                        Status::Skipped,
                        format!("n > {BRUTE_FORCE_MAX_N}"),
                    ));
                }
            }
        } else {
            match family_bruteforce(p) {
                Ok(found) => {
                    if opts.wants("type") {
                        out.push(type_check(p, &found));
                    }
                    if opts.wants("a-invariant") {
                        let min = found.generators.min_degree().unwrap_or(0);
                        out.push(OracleCheck::from_bool(
                            check_name("a-invariant", p),
                            min == p.r() as u64,
                            format!("least generator degree {min}, r = {}", p.r()),
                        ));
                    }
                }
                Err(e) => {
                    for name in ["type", "a-invariant"] {
                        if opts.wants(name) {
                            out.push(OracleCheck::new(check_name(name, p), Status::Fail, e.to_string()));
                        }
                    }
                }
            }
        }
    }

    if opts.wants("hilbert") {
        let mut mismatches = Vec::new();
        for t in 0..=opts.max_t {
            let closed = hilbert_function(p, t as i64).expect("t >= 0");
            match ehrhart_count_family(p, t) {
                Ok(e) if BigInt::from(e) == closed => {}
                Ok(e) => mismatches.push(format!("t={t}: h = {closed}, Ehrhart = {e}")),
                Err(err) => mismatches.push(format!("t={t}: {err}")),
            }
        }
        if let Err(e) = HilbertSummary::for_family(p) {
            mismatches.push(e.to_string());
        }
        let detail = if mismatches.is_empty() {
            format!("h(t) = Ehrhart count for t <= {}; numerator degree n - r = {}", opts.max_t, n - p.r())
        } else {
            mismatches.join("; ")
        };
        out.push(OracleCheck::from_bool(check_name("hilbert", p), mismatches.is_empty(), detail));
    }
    out
}

fn type_check(p: &FamilyParams, found: &BruteForceOutcome) -> OracleCheck {
    let closed = enumerate_m(p);
    let formula = type_formula(p);
    let g = &found.generators;
    let ok = *g == closed && BigInt::from(g.len()) == formula;
    let degrees: Vec<String> = g.degree_histogram().iter().map(|(d, c)| format!("{c} in degree {d}")).collect();
    let mut detail = format!("brute force {} generators ({}); formula {formula}", g.len(), degrees.join(", "));
    if !found.default_cap_conclusive {
        detail.push_str(&format!("; default cap {} was inconclusive, searched to the degree bound", found.default_cap));
    }
    if !ok {
        let missing: Vec<String> = g
            .generators()
            .iter()
            .filter(|x| closed.generators().binary_search(x).is_err())
            .take(5)
            .map(|x| x.to_string())
            .collect();
        if !missing.is_empty() {
            detail.push_str(&format!("; not in the closed-form set: {}", missing.join(" ")));
        }
        let extra: Vec<String> = closed
            .generators()
            .iter()
            .filter(|x| g.generators().binary_search(x).is_err())
            .take(5)
            .map(|x| x.to_string())
            .collect();
        if !extra.is_empty() {
            detail.push_str(&format!("; closed form only: {}", extra.join(" ")));
        }
    }
    OracleCheck::from_bool(check_name("type", p), ok, detail)
}

/// Checks over the grid `3 <= n <= max_n`, computed in parallel and
/// returned in grid order.
pub fn grid_checks(max_n: usize, opts: &CheckOptions) -> Vec<OracleCheck> {
    let grid = FamilyParams::grid(max_n);
    let per_point: Vec<Vec<OracleCheck>> = grid.par_iter().map(|p| family_checks(p, opts)).collect();
    per_point.into_iter().flatten().collect()
}

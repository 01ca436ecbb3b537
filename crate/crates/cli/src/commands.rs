//! The five subcommands, each turning parsed arguments into a [`Report`].

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use transpoly_core::canonical::{
    canonical_generators_bruteforce, canonical_generators_complete, enumerate_m, TypeReport,
};
use transpoly_core::cone::{build_cone, det_certificate};
use transpoly_core::hilbert::{
    conjecture_check, hilbert_series_render, numerator_from_values, ConjectureMode, HilbertSummary,
};
use transpoly_core::presentation::{build_family_presentation, find_exchange_violation};
use transpoly_core::{CanonicalGenerators, Error, FamilyParams, Presentation};

use crate::checks::{family_checks, grid_checks, CheckOptions, BRUTE_FORCE_MAX_N, CHECK_NAMES};
use crate::num::{nums, Num};
use crate::random::{random_presentation, Lcg};
use crate::report::{ConeSummary, ConjectureRow, GeneratorSummary, Instance, OracleCheck, Outcome, Report, Status};

/// Either a family instance or a presentation read from a file.
#[derive(Debug, Clone)]
pub enum Target {
    Family(FamilyParams),
    Presentation(Presentation),
}

/// A usage problem: bad flags, bad parameters, unreadable input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

pub struct ReportOptions {
    pub verify: bool,
    pub max_t: u32,
    pub degree_cap: Option<u32>,
    pub full: bool,
}

pub fn report(target: &Target, opts: &ReportOptions) -> Result<Report, UsageError> {
    let mut out = Report::new("report");
    match target {
        Target::Family(p) => {
            family_closed_forms(&mut out, p, opts.full)?;
            if opts.verify {
                let check_opts = CheckOptions { only: None, max_t: opts.max_t };
                for check in family_checks(p, &check_opts) {
                    out.push_check(check);
                }
            }
        }
        Target::Presentation(pres) => presentation_bruteforce(&mut out, pres, opts.degree_cap, opts.full),
    }
    Ok(out)
}

fn family_closed_forms(out: &mut Report, p: &FamilyParams, full: bool) -> Result<(), UsageError> {
    let summary = HilbertSummary::for_family(p)?;
    let types = TypeReport::for_family(p);
    let cone = build_cone(p);
    let det = det_certificate(p)?;
    out.instance = Some(Instance::family(p));
    out.cone = Some(ConeSummary::new(&cone, Some(Num(det))));
    out.type_value = Some(Num(types.type_value));
    out.a_invariant = Some(types.a_invariant);
    out.gorenstein = Some(types.gorenstein);
    out.h_values = Some(nums(&summary.h_values));
    out.numerator = Some(nums(&summary.numerator));
    out.hilbert_series = Some(summary.render());
    out.canonical = Some(GeneratorSummary::new("closed_form", &enumerate_m(p), full));
    let pres = build_family_presentation(p);
    let conj = conjecture_check(&pres, &ConjectureMode::FamilyClosedForm(*p))?;
    out.conjecture = Some(ConjectureRow::new(Instance::family(p), "closed_form", &conj));
    Ok(())
}

/// Brute-force report for a presentation. Problems with the instance itself
/// (a base that does not span, an inconclusive cap) are reported as checks.
fn presentation_bruteforce(out: &mut Report, pres: &Presentation, degree_cap: Option<u32>, full: bool) {
    let n = pres.n();
    out.instance = Some(Instance::presentation(pres));
    let base = transpoly_core::presentation::enumerate_base(pres);
    out.push_check(if n > BRUTE_FORCE_MAX_N {
        OracleCheck::new("exchange", Status::Skipped, format!("n > {BRUTE_FORCE_MAX_N}"))
    } else {
        match find_exchange_violation(&base) {
            None => OracleCheck::new(
                "exchange",
                Status::Pass,
                format!("{} base vectors satisfy the base axiom", base.len()),
            ),
            Some(v) => OracleCheck::new("exchange", Status::Fail, v.to_string()),
        }
    });

    let searched = match degree_cap {
        Some(cap) => canonical_generators_bruteforce(pres, cap).map(|g| (g, None)),
        None => canonical_generators_complete(pres).map(|(g, s)| (g, Some(s.slice_sizes().to_vec()))),
    };
    let (generators, slices) = match searched {
        Ok(found) => found,
        Err(Error::Degenerate { rank, n }) => {
            out.push_check(OracleCheck::new(
                "canonical",
                Status::Skipped,
                format!("base vectors have rank {rank} < {n}; the ring has smaller dimension"),
            ));
            return;
        }
        Err(e) => {
            out.push_check(OracleCheck::new("canonical", Status::Fail, e.to_string()));
            return;
        }
    };
    let detail = match degree_cap {
        Some(cap) => format!("no generator at the degree cap {cap}"),
        None => "searched every degree a generator can occupy".to_string(),
    };
    out.push_check(OracleCheck::new("canonical", Status::Pass, detail));
    fill_bruteforce_invariants(out, &generators, full);

    let slices = match slices {
        Some(s) => s,
        None => match canonical_generators_complete(pres) {
            Ok((_, s)) => s.slice_sizes().to_vec(),
            Err(e) => {
                out.push_check(OracleCheck::new("hilbert", Status::Fail, e.to_string()));
                return;
            }
        },
    };
    let r = generators.min_degree().unwrap_or(0) as usize;
    let values: Vec<BigInt> = slices.iter().map(|&v| BigInt::from(v)).collect();
    if (1..=n).contains(&r) {
        let degree = n - r;
        out.h_values = Some(nums(&values[..=degree]));
        if let Ok(numerator) = numerator_from_values(&values, n, degree) {
            out.hilbert_series = Some(hilbert_series_render(&numerator, n));
            out.numerator = Some(nums(&numerator));
        }
    }
    let row = match conjecture_check(pres, &ConjectureMode::BruteForce { max_n: BRUTE_FORCE_MAX_N.max(n) }) {
        Ok(report) => ConjectureRow::new(Instance::presentation(pres), "brute_force", &report),
        Err(e) => ConjectureRow::skipped(Instance::presentation(pres), "brute_force", e.to_string()),
    };
    out.conjecture = Some(row);
}

fn fill_bruteforce_invariants(out: &mut Report, generators: &CanonicalGenerators, full: bool) {
    out.type_value = Some(Num::from(generators.len()));
    out.a_invariant = generators.min_degree().map(|d| -(d as i64));
    out.gorenstein = Some(BigInt::from(generators.len()).is_one());
    out.canonical = Some(GeneratorSummary::new("brute_force", generators, full));
}

pub struct VerifyOptions {
    pub max_n: usize,
    pub max_t: u32,
    pub only: Option<String>,
}

pub fn verify(opts: &VerifyOptions) -> Result<Report, UsageError> {
    if opts.max_n < 3 {
        return Err(UsageError(format!("--max-n {} is below the smallest family size n = 3", opts.max_n)));
    }
    if let Some(only) = &opts.only {
        if !CHECK_NAMES.contains(&only.as_str()) {
            return Err(UsageError(format!("unknown check {only:?}; expected one of {}", CHECK_NAMES.join(", "))));
        }
    }
    let mut out = Report::new("verify");
    let check_opts = CheckOptions { only: opts.only.clone(), max_t: opts.max_t };
    for check in grid_checks(opts.max_n, &check_opts) {
        out.push_check(check);
    }
    Ok(out)
}

pub struct SweepOptions {
    pub max_n: usize,
    pub random: usize,
    pub seed: u64,
    pub brute_force: bool,
}

/// Smallest and largest `n` of random presentations.
pub const RANDOM_MIN_N: usize = 4;
pub const RANDOM_MAX_N: usize = 5;

pub fn sweep(opts: &SweepOptions) -> Result<Report, UsageError> {
    if opts.max_n < 3 {
        return Err(UsageError(format!("--max-n {} is below the smallest family size n = 3", opts.max_n)));
    }
    if opts.random > 0 && opts.max_n < RANDOM_MIN_N {
        return Err(UsageError(format!("random presentations need --max-n >= {RANDOM_MIN_N}")));
    }
    let grid = FamilyParams::grid(opts.max_n);
    let mut rows: Vec<ConjectureRow> = grid
        .par_iter()
        .map(|p| {
            let pres = build_family_presentation(p);
            match conjecture_check(&pres, &ConjectureMode::FamilyClosedForm(*p)) {
                Ok(r) => ConjectureRow::new(Instance::family(p), "closed_form", &r),
                Err(e) => ConjectureRow::skipped(Instance::family(p), "closed_form", e.to_string()),
            }
        })
        .collect();
    if opts.brute_force {
        let small: Vec<&FamilyParams> = grid.iter().filter(|p| p.n() <= BRUTE_FORCE_MAX_N).collect();
        let brute: Vec<ConjectureRow> =
            small.par_iter().map(|p| brute_force_row(Instance::family(p), &build_family_presentation(p))).collect();
        rows.extend(brute);
    }
    let mut rng = Lcg::new(opts.seed);
    let top = opts.max_n.min(RANDOM_MAX_N);
    let span = top - RANDOM_MIN_N + 1;
    let presentations: Vec<Presentation> =
        (0..opts.random).map(|k| random_presentation(RANDOM_MIN_N + k % span, &mut rng)).collect();
    let random_rows: Vec<ConjectureRow> =
        presentations.par_iter().map(|pres| brute_force_row(Instance::presentation(pres), pres)).collect();
    rows.extend(random_rows);

    let counterexamples: Vec<ConjectureRow> = rows.iter().filter(|r| r.outcome == Outcome::Violated).cloned().collect();
    let mut out = Report::new("sweep");
    out.sweep = Some(rows);
    out.counterexamples = Some(counterexamples);
    Ok(out)
}

fn brute_force_row(instance: Instance, pres: &Presentation) -> ConjectureRow {
    match conjecture_check(pres, &ConjectureMode::BruteForce { max_n: BRUTE_FORCE_MAX_N }) {
        Ok(r) => ConjectureRow::new(instance, "brute_force", &r),
        Err(e) => ConjectureRow::skipped(instance, "brute_force", e.to_string()),
    }
}

pub fn rays(p: &FamilyParams) -> Result<Report, UsageError> {
    let mut out = Report::new("rays");
    let det = det_certificate(p)?;
    out.instance = Some(Instance::family(p));
    out.cone = Some(ConeSummary::new(&build_cone(p), Some(Num(det))));
    Ok(out)
}

pub fn canonical(target: &Target, opts: &ReportOptions) -> Result<Report, UsageError> {
    let mut out = Report::new("canonical");
    match target {
        Target::Family(p) => {
            let types = TypeReport::for_family(p);
            out.instance = Some(Instance::family(p));
            out.type_value = Some(Num(types.type_value));
            out.a_invariant = Some(types.a_invariant);
            out.gorenstein = Some(types.gorenstein);
            out.canonical = Some(GeneratorSummary::new("closed_form", &enumerate_m(p), opts.full));
            if opts.verify {
                let check_opts = CheckOptions { only: Some("type".into()), max_t: 0 };
                for check in family_checks(p, &check_opts) {
                    out.push_check(check);
                }
            }
        }
        Target::Presentation(pres) => {
            out.instance = Some(Instance::presentation(pres));
            let searched = match opts.degree_cap {
                Some(cap) => canonical_generators_bruteforce(pres, cap),
                None => canonical_generators_complete(pres).map(|(g, _)| g),
            };
            match searched {
                Ok(g) => {
                    out.push_check(OracleCheck::new("canonical", Status::Pass, "search settled"));
                    fill_bruteforce_invariants(&mut out, &g, opts.full);
                }
                Err(e @ Error::Degenerate { .. }) => {
                    out.push_check(OracleCheck::new("canonical", Status::Skipped, e.to_string()));
                }
                Err(e) => out.push_check(OracleCheck::new("canonical", Status::Fail, e.to_string())),
            }
        }
    }
    Ok(out)
}

//! Hilbert function and Hilbert series numerator of the family, an Ehrhart
//! lattice-point oracle, and a check of the conjectured relation between
//! the type and the h-vector.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::canonical::{canonical_generators_complete, type_formula, CanonicalGenerators, CanonicalSearch};
use crate::combinat::{binomial, for_each_composition};
use crate::feasibility::in_dilated_hull;
use crate::linalg::{hermite_basis, lattice_contains, to_bigint_vec, LatticeBasis};
use crate::presentation::{build_family_presentation, enumerate_base, FamilyParams, Presentation};
use crate::{Error, Result};

/// `h(t) = sum_{k=0}^{(n-j)t} C(k+i-1, k) C(nt-k+n-i-1, nt-k)`.
pub fn hilbert_function(params: &FamilyParams, t: i64) -> Result<BigInt> {
    if t < 0 {
        return Err(Error::Domain(format!("Hilbert function at negative degree t = {t}")));
    }
    let (n, i, j) = (params.n() as i64, params.i() as i64, params.j() as i64);
    let nt = n * t;
    Ok((0..=(n - j) * t).map(|k| binomial(k + i - 1, k) * binomial(nt - k + n - i - 1, nt - k)).sum())
}

/// Lattice generated by the base vectors of a presentation.
pub fn base_lattice(pres: &Presentation) -> Result<LatticeBasis> {
    let vectors: Vec<Vec<BigInt>> = enumerate_base(pres).iter().map(|b| to_bigint_vec(b.coords())).collect();
    hermite_basis(pres.n(), &vectors)
}

/// The dilated family polytope `t P = {x >= 0 : |x| = nt, x_1 + ... + x_i <= (n-j)t}`
/// together with the lattice its points are counted in.
#[derive(Debug, Clone)]
pub struct LatticePolytopeSlice {
    pub t: u32,
    pub n: usize,
    pub prefix_len: usize,
    pub prefix_bound: u32,
    pub lattice: LatticeBasis,
}

impl LatticePolytopeSlice {
    pub fn new(params: &FamilyParams, t: u32) -> Result<Self> {
        let lattice = base_lattice(&build_family_presentation(params))?;
        Ok(LatticePolytopeSlice {
            t,
            n: params.n(),
            prefix_len: params.i(),
            prefix_bound: (params.n() - params.j()) as u32 * t,
            lattice,
        })
    }

    /// Lattice points, enumerated as a prefix of sum at most the bound
    /// followed by a suffix taking up the rest of the degree.
    pub fn count(&self) -> Result<u64> {
        let total = self.n as u32 * self.t;
        let mut count = 0u64;
        let mut failure = None;
        let mut x: Vec<BigInt> = alloc::vec![BigInt::zero(); self.n];
        for prefix_sum in 0..=self.prefix_bound.min(total) {
            for_each_composition(prefix_sum, self.prefix_len, 0, |head| {
                for_each_composition(total - prefix_sum, self.n - self.prefix_len, 0, |tail| {
                    for (slot, &v) in x.iter_mut().zip(head.iter().chain(tail)) {
                        *slot = BigInt::from(v);
                    }
                    match lattice_contains(&self.lattice, &x) {
                        Ok(true) => count += 1,
                        Ok(false) => {}
                        Err(e) => failure = Some(e),
                    }
                });
            });
        }
        match failure {
            Some(e) => Err(e),
            None => Ok(count),
        }
    }
}

/// Ehrhart count of the family polytope at dilation `t`.
pub fn ehrhart_count_family(params: &FamilyParams, t: u32) -> Result<u64> {
    LatticePolytopeSlice::new(params, t)?.count()
}

/// Ehrhart count for any presentation: points `x >= 0` with `|x| = nt` in
/// the base lattice and in `t conv(B)`, decided by exact linear
/// feasibility. Slow; meant for small instances.
pub fn ehrhart_count(pres: &Presentation, t: u32) -> Result<u64> {
    let n = pres.n();
    let lattice = base_lattice(pres)?;
    let points: Vec<Vec<i64>> =
        enumerate_base(pres).iter().map(|b| b.coords().iter().map(|&c| c as i64).collect()).collect();
    let mut count = 0u64;
    let mut failure = None;
    for_each_composition(n as u32 * t, n, 0, |x| {
        let big = to_bigint_vec(x);
        match lattice_contains(&lattice, &big) {
            Ok(false) => {}
            Ok(true) => {
                let target: Vec<i64> = x.iter().map(|&c| c as i64).collect();
                if in_dilated_hull(&points, t as i64, &target) {
                    count += 1;
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// `h_j = sum_{s=0}^{j} (-1)^s h(j-s) C(n, s)` for `j = 0..=upto`, given
/// `h(0), h(1), ...` (missing values are an error).
pub fn numerator_from_values(values: &[BigInt], n: usize, upto: usize) -> Result<Vec<BigInt>> {
    if values.len() <= upto {
        return Err(Error::Shape(format!("need h(0..={upto}), got {} values", values.len())));
    }
    Ok((0..=upto).map(|j| delta_closed_form(values, n, j)).collect())
}

/// `sum_{s=0}^{min(k, j)} (-1)^s h(j-s) C(k, s)`: the `k`-th difference at `j`.
pub fn delta_closed_form(values: &[BigInt], k: usize, j: usize) -> BigInt {
    (0..=k.min(j))
        .map(|s| {
            let term = &values[j - s] * binomial(k as i64, s as i64);
            if s % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `k` rounds of `g(j) <- g(j) - g(j-1)` with `g(-1) = 0`.
pub fn iterated_differences(values: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut g = values.to_vec();
    for _ in 0..k {
        for j in (1..g.len()).rev() {
            let prev = g[j - 1].clone();
            g[j] -= prev;
        }
    }
    g
}

/// `h(0..=upto)` from the closed form.
pub fn hilbert_values(params: &FamilyParams, upto: usize) -> Vec<BigInt> {
    (0..=upto as i64).map(|t| hilbert_function(params, t).expect("t >= 0")).collect()
}

/// Numerator coefficients `h_0..h_n`, including the ones past the degree.
pub fn full_numerator(params: &FamilyParams) -> Vec<BigInt> {
    let n = params.n();
    numerator_from_values(&hilbert_values(params, n), n, n).expect("enough values")
}

/// `h_0..h_{n-r}`, the numerator of the Hilbert series over `(1-t)^n`.
pub fn h_vector(params: &FamilyParams) -> Vec<BigInt> {
    let mut full = full_numerator(params);
    full.truncate(params.n() - params.r() + 1);
    full
}

/// Hilbert data of a family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSummary {
    pub n: usize,
    /// `h(0..=n-r)`.
    pub h_values: Vec<BigInt>,
    pub numerator: Vec<BigInt>,
    pub a_invariant: i64,
    pub type_value: BigInt,
    pub conjecture_holds: bool,
}

impl HilbertSummary {
    /// Closed forms only. Fails if the numerator does not end exactly at
    /// degree `n - r`.
    pub fn for_family(params: &FamilyParams) -> Result<Self> {
        let n = params.n();
        let r = params.r();
        let full = full_numerator(params);
        let degree = n - r;
        if full[degree].is_zero() || full[degree + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InternalConsistency(format!(
                "numerator of {params} does not have degree {degree}: {full:?}"
            )));
        }
        let numerator = full[..=degree].to_vec();
        let type_value = type_formula(params);
        let predicted = predicted_type(r, &numerator, n);
        Ok(HilbertSummary {
            n,
            h_values: hilbert_values(params, degree),
            conjecture_holds: predicted.as_ref() == Some(&type_value),
            numerator,
            a_invariant: -(r as i64),
            type_value,
        })
    }

    pub fn render(&self) -> String {
        hilbert_series_render(&self.numerator, self.n)
    }
}

/// `(1 + 6t + t^2)/(1-t)^3`; zero terms are left out.
pub fn hilbert_series_render(numerator: &[BigInt], n: usize) -> String {
    let mut terms = String::new();
    let mut count = 0;
    for (k, c) in numerator.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        let coefficient = if magnitude.is_one() && k > 0 { String::new() } else { format!("{magnitude}") };
        let power = match k {
            0 => String::new(),
            1 => String::from("t"),
            _ => format!("t^{k}"),
        };
        if count == 0 {
            if c.is_negative() {
                terms.push('-');
            }
        } else {
            terms.push_str(if c.is_negative() { " - " } else { " + " });
        }
        terms.push_str(&coefficient);
        terms.push_str(&power);
        count += 1;
    }
    if count == 0 {
        terms.push('0');
    }
    if count == 1 {
        format!("{terms}/(1-t)^{n}")
    } else {
        format!("({terms})/(1-t)^{n}")
    }
}

/// `1 + h_{n-2} - h_1` when `r = 1`, `h_{n-r}` when `r >= 2`.
pub fn predicted_type(r: usize, numerator: &[BigInt], n: usize) -> Option<BigInt> {
    if r == 0 || r > n {
        return None;
    }
    if r == 1 {
        let high = numerator.get(n.checked_sub(2)?)?;
        let low = numerator.get(1)?;
        Some(BigInt::one() + high - low)
    } else {
        numerator.get(n - r).cloned()
    }
}

/// How to obtain the type, `r` and the h-vector for the conjecture check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureMode {
    /// Closed forms for the family instance.
    FamilyClosedForm(FamilyParams),
    /// Brute force on the semigroup: generators of the canonical module and
    /// slice sizes. Presentations with more than `max_n` sets are skipped.
    BruteForce { max_n: usize },
}

impl ConjectureMode {
    pub fn brute_force() -> Self {
        ConjectureMode::BruteForce { max_n: 6 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureOutcome {
    Holds,
    Violated,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub r: Option<usize>,
    pub type_value: Option<BigInt>,
    pub predicted: Option<BigInt>,
    pub h_vector: Vec<BigInt>,
    pub outcome: ConjectureOutcome,
    /// Generators found in brute-force mode.
    pub generators: Option<CanonicalGenerators>,
}

impl ConjectureReport {
    fn skipped(reason: String) -> Self {
        ConjectureReport {
            r: None,
            type_value: None,
            predicted: None,
            h_vector: Vec::new(),
            outcome: ConjectureOutcome::Skipped(reason),
            generators: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.outcome == ConjectureOutcome::Holds
    }
}

/// Compares the type with the value predicted from the h-vector.
///
/// In brute-force mode `r` is the least generator degree, the type is the
/// generator count and the h-vector comes from the semigroup slice sizes.
/// Presentations whose base vectors do not span are skipped.
pub fn conjecture_check(pres: &Presentation, mode: &ConjectureMode) -> Result<ConjectureReport> {
    let n = pres.n();
    let (r, type_value, h_vector, generators) = match mode {
        ConjectureMode::FamilyClosedForm(params) => {
            if *pres != build_family_presentation(params) {
                return Err(Error::Domain(format!("presentation is not the family presentation of {params}")));
            }
            let summary = HilbertSummary::for_family(params)?;
            (params.r(), summary.type_value, summary.numerator, None)
        }
        ConjectureMode::BruteForce { max_n } => {
            if n > *max_n {
                return Ok(ConjectureReport::skipped(format!("n = {n} exceeds the brute-force limit {max_n}")));
            }
            let (generators, search) = match canonical_generators_complete(pres) {
                Ok(found) => found,
                Err(Error::Degenerate { rank, n }) => {
                    return Ok(ConjectureReport::skipped(format!("base vectors have rank {rank} < {n}")));
                }
                Err(e) => return Err(e),
            };
            let r = generators
                .min_degree()
                .ok_or_else(|| Error::InternalConsistency(format!("no canonical generators found for {pres}")))?
                as usize;
            let numerator = brute_force_numerator(&search, n, r)?;
            (r, BigInt::from(generators.len()), numerator, Some(generators))
        }
    };
    let predicted = predicted_type(r, &h_vector, n);
    let outcome = match &predicted {
        None => ConjectureOutcome::Skipped(format!("r = {r} outside 1..={n}")),
        Some(p) if *p == type_value => ConjectureOutcome::Holds,
        Some(_) => ConjectureOutcome::Violated,
    };
    Ok(ConjectureReport { r: Some(r), type_value: Some(type_value), predicted, h_vector, outcome, generators })
}

/// `h_0..h_{n-r}` from slice sizes, after checking that every coefficient
/// the slices determine past `n - r` vanishes.
fn brute_force_numerator(search: &CanonicalSearch, n: usize, r: usize) -> Result<Vec<BigInt>> {
    let values: Vec<BigInt> = search.slice_sizes().iter().map(|&v| BigInt::from(v)).collect();
    let degree = n - r;
    let known = (values.len() - 1).min(n);
    if known < degree {
        return Err(Error::InternalConsistency(format!(
            "slices up to {known} cannot fix a numerator of degree {degree}"
        )));
    }
    let full = numerator_from_values(&values, n, known)?;
    if full[degree + 1..].iter().any(|c| !c.is_zero()) || full[degree].is_zero() {
        return Err(Error::InternalConsistency(format!("numerator {full:?} does not have degree {degree} = n - r")));
    }
    Ok(full[..=degree].to_vec())
}

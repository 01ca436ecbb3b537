//! Canonical module of the base ring: closed-form generator sets and type,
//! a-invariant, and a brute-force search over the affine semigroup.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{binomial, for_each_composition};
use crate::linalg::{integer_rank, IntegerMatrix};
use crate::presentation::{enumerate_base, ExponentVector, FamilyCase, FamilyParams, Presentation};
use crate::{Error, Result};

/// Minimal monomial generators of the canonical module, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGenerators {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl CanonicalGenerators {
    pub fn new(n: usize, mut generators: Vec<ExponentVector>) -> Self {
        generators.sort_unstable();
        generators.dedup();
        CanonicalGenerators { n, generators }
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `|g| / n`.
    pub fn degree_of(&self, g: &ExponentVector) -> u64 {
        g.total() / self.n as u64
    }

    pub fn degrees(&self) -> BTreeMap<ExponentVector, u64> {
        self.generators.iter().map(|g| (g.clone(), self.degree_of(g))).collect()
    }

    /// Number of generators in each degree.
    pub fn degree_histogram(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            *out.entry(self.degree_of(g)).or_insert(0) += 1;
        }
        out
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.generators.iter().map(|g| self.degree_of(g)).min()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.generators.iter().map(|g| self.degree_of(g)).max()
    }
}

/// Type, `r`, a-invariant and Gorenstein flag of a family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeReport {
    pub type_value: BigInt,
    pub r: usize,
    pub a_invariant: i64,
    pub gorenstein: bool,
}

impl TypeReport {
    pub fn for_family(params: &FamilyParams) -> Self {
        TypeReport {
            type_value: type_formula(params),
            r: params.r(),
            a_invariant: a_invariant(params),
            gorenstein: is_gorenstein(params),
        }
    }
}

/// Range of the summation index `t` and the split `(u_t, v_t)` of the
/// generator coordinates between the first `i` and the last `n - i`.
fn split_sequence(params: &FamilyParams) -> Vec<(i64, i64)> {
    let (n, i, j) = (params.n() as i64, params.i() as i64, params.j() as i64);
    match params.case() {
        FamilyCase::LowSum => (1..=n - i - j - 1).map(|t| (n + i - j + t, n - i + j - t)).collect(),
        FamilyCase::HighSum => {
            let r = params.r() as i64;
            (1..=r * (n - j) - i).map(|t| (r * (n - j) - t, r * j + t)).collect()
        }
    }
}

/// Cohen-Macaulay type from the closed form. Each summand counts the
/// positive solutions of the prefix and suffix sums.
pub fn type_formula(params: &FamilyParams) -> BigInt {
    let (n, i) = (params.n() as i64, params.i() as i64);
    let sum: BigInt =
        split_sequence(params).into_iter().map(|(u, v)| binomial(u - 1, i - 1) * binomial(v - 1, n - i - 1)).sum();
    match params.case() {
        FamilyCase::LowSum => sum + BigInt::one(),
        FamilyCase::HighSum => sum,
    }
}

/// The sets `{(1,...,1)} ∪ M` (low sum) or `M'` (high sum), enumerated.
pub fn enumerate_m(params: &FamilyParams) -> CanonicalGenerators {
    let (n, i) = (params.n(), params.i());
    let mut out = Vec::new();
    if params.case() == FamilyCase::LowSum {
        out.push(ExponentVector::new(alloc::vec![1; n]));
    }
    for (u, v) in split_sequence(params) {
        let mut prefixes = Vec::new();
        for_each_composition(u as u32, i, 1, |c| prefixes.push(c.to_vec()));
        let mut suffixes = Vec::new();
        for_each_composition(v as u32, n - i, 1, |c| suffixes.push(c.to_vec()));
        for p in &prefixes {
            for s in &suffixes {
                let mut coords = p.clone();
                coords.extend_from_slice(s);
                out.push(ExponentVector::new(coords));
            }
        }
    }
    CanonicalGenerators::new(n, out)
}

pub fn a_invariant(params: &FamilyParams) -> i64 {
    -(params.r() as i64)
}

pub fn is_gorenstein(params: &FamilyParams) -> bool {
    params.j() + params.i() + 1 == params.n()
}

/// `(beta_1 + ... + beta_i, beta_{i+1} + ... + beta_n)` for a vector whose
/// pairing with `nu` has the form `n(n-i-j-t)`, `1 <= t <= n-i-j-1` (low
/// sum) or `n t`, `t >= 1` (high sum). The degree identities relating the
/// split to `s = |beta| / n` and `t` are checked.
pub fn degree_split(beta: &ExponentVector, params: &FamilyParams) -> Result<(u64, u64)> {
    let (n, i, j) = (params.n() as i64, params.i() as i64, params.j() as i64);
    if beta.len() != params.n() {
        return Err(Error::Shape(format!("beta has {} coordinates, expected {n}", beta.len())));
    }
    let total = beta.total() as i64;
    if total % n != 0 {
        return Err(Error::Domain(format!("n = {n} does not divide |beta| = {total}")));
    }
    let s = total / n;
    let prefix = beta.prefix_sum(params.i()) as i64;
    let suffix = total - prefix;
    let pairing = -j * prefix + (n - j) * suffix;
    if pairing % n != 0 {
        return Err(Error::Domain(format!("<beta, nu> = {pairing} is not a multiple of n = {n}")));
    }
    let (expect_prefix, expect_suffix) = match params.case() {
        FamilyCase::LowSum => {
            let t = n - i - j - pairing / n;
            if !(1..=n - i - j - 1).contains(&t) {
                return Err(Error::Domain(format!(
                    "<beta, nu> = {pairing} is not n(n-i-j-t) with 1 <= t <= {}",
                    n - i - j - 1
                )));
            }
            ((n - j) * (s - 1) + i + t, n + j * (s - 1) - i - t)
        }
        FamilyCase::HighSum => {
            let t = pairing / n;
            if t < 1 {
                return Err(Error::Domain(format!("<beta, nu> = {pairing} is not n t with t >= 1")));
            }
            ((n - j) * s - t, j * s + t)
        }
    };
    if (prefix, suffix) != (expect_prefix, expect_suffix) {
        return Err(Error::InternalConsistency(format!(
            "split ({prefix}, {suffix}) of {beta} disagrees with ({expect_prefix}, {expect_suffix})"
        )));
    }
    Ok((prefix as u64, suffix as u64))
}

/// Membership in the affine semigroup generated by a base set, by memoized
/// descent: `x` is in it iff `x = 0` or `x - b` is for some base vector
/// `b <= x`.
#[derive(Debug, Clone)]
pub struct Semigroup {
    base: Vec<ExponentVector>,
    degree: u64,
    memo: HashMap<ExponentVector, bool>,
}

impl Semigroup {
    pub fn new(base: &[ExponentVector]) -> Self {
        let degree = base.first().map_or(0, ExponentVector::total);
        Semigroup { base: base.to_vec(), degree, memo: HashMap::new() }
    }

    pub fn contains(&mut self, x: &ExponentVector) -> bool {
        if x.coords().iter().all(|&c| c == 0) {
            return true;
        }
        if self.degree == 0 || !x.total().is_multiple_of(self.degree) {
            return false;
        }
        if let Some(&known) = self.memo.get(x) {
            return known;
        }
        let mut found = false;
        for k in 0..self.base.len() {
            if let Some(rest) = x.checked_sub(&self.base[k]) {
                if self.contains(&rest) {
                    found = true;
                    break;
                }
            }
        }
        self.memo.insert(x.clone(), found);
        found
    }
}

pub fn semigroup_contains(base: &[ExponentVector], x: &ExponentVector) -> bool {
    Semigroup::new(base).contains(x)
}

/// `max(r, 2) + 1`: one degree past the last one where a family generator
/// can occur.
pub fn family_degree_cap(params: &FamilyParams) -> u32 {
    params.r().max(2) as u32 + 1
}

/// Highest degree in which a minimal generator of the canonical module can
/// occur: `n - 1`, or `n` when the `n` base vectors are independent and the
/// ring is a polynomial ring.
///
/// The base ring is normal, hence Cohen-Macaulay of dimension `n` (when the
/// base spans), and the generator degrees of its canonical module are `n`
/// minus the socle degrees of an Artinian reduction. Those are positive
/// unless the reduction is the field itself.
pub fn generator_degree_bound(n: usize, base_len: usize) -> u32 {
    if base_len > n {
        n as u32 - 1
    } else {
        n as u32
    }
}

/// One past [`generator_degree_bound`]: a default cap that never reports
/// inconclusive on a spanning presentation.
pub fn general_degree_cap(pres: &Presentation) -> u32 {
    generator_degree_bound(pres.n(), enumerate_base(pres).len()) + 1
}

/// Vectors packed into a `u128`, `bits` bits per coordinate. Addition of
/// packed values is coordinatewise as long as no coordinate overflows.
#[derive(Debug, Clone, Copy)]
struct Packing {
    n: usize,
    bits: u32,
}

impl Packing {
    fn new(n: usize, max_coord: u64) -> Option<Self> {
        let bits = 64 - max_coord.leading_zeros();
        let bits = bits.max(1);
        (n as u32 * bits <= 128).then_some(Packing { n, bits })
    }

    fn pack(&self, x: &[u32]) -> u128 {
        x.iter().enumerate().fold(0u128, |acc, (k, &c)| acc | (c as u128) << (k as u32 * self.bits))
    }

    fn unpack_into(&self, v: u128, out: &mut [u32]) {
        let mask = (1u128 << self.bits) - 1;
        for (k, slot) in out.iter_mut().enumerate().take(self.n) {
            *slot = (v >> (k as u32 * self.bits) & mask) as u32;
        }
    }
}

/// Degree-by-degree search for minimal generators of the ideal spanned by
/// the interior lattice points of the semigroup.
///
/// Degree `s` of the semigroup is built as the Minkowski sum of degree
/// `s - 1` with the base set, so membership is never assumed from the cone.
/// Interior means strict inequality on every polymatroid inequality, which
/// for a full-dimensional cone is strict on every facet.
pub struct CanonicalSearch {
    n: usize,
    base: Vec<ExponentVector>,
    packed_base: Vec<u128>,
    normals: Vec<Vec<i64>>,
    packing: Packing,
    max_degree: u32,
    degree: u32,
    /// Elements of the current degree, each with the least index `k` such
    /// that it is a sum of base vectors whose largest index is `k`.
    slice: Vec<(u128, u32)>,
    interior: HashSet<u128>,
    generators: Vec<ExponentVector>,
    by_degree: Vec<usize>,
    slice_sizes: Vec<usize>,
}

impl CanonicalSearch {
    /// Prepares a search up to degree `max_degree`.
    pub fn new(pres: &Presentation, max_degree: u32) -> Result<Self> {
        let n = pres.n();
        let base = enumerate_base(pres);
        let rows: Vec<&[u32]> = base.iter().map(|b| b.coords()).collect();
        let rank = integer_rank(&IntegerMatrix::from_u32_rows(&rows)?);
        if rank < n {
            return Err(Error::Degenerate { rank, n });
        }
        let packing = Packing::new(n, max_degree as u64 * n as u64)
            .ok_or_else(|| Error::Domain(format!("degree cap {max_degree} is too large to search for n = {n}")))?;
        let packed_base = base.iter().map(|b| packing.pack(b.coords())).collect();
        Ok(CanonicalSearch {
            n,
            base,
            packed_base,
            normals: pres.polymatroid_inequalities(),
            packing,
            max_degree,
            degree: 0,
            slice: alloc::vec![(0, 0)],
            interior: HashSet::new(),
            generators: Vec::new(),
            by_degree: alloc::vec![0],
            slice_sizes: alloc::vec![1],
        })
    }

    pub fn base(&self) -> &[ExponentVector] {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of semigroup elements in degrees `0..=degree()`: the Hilbert
    /// function of the base ring.
    pub fn slice_sizes(&self) -> &[usize] {
        &self.slice_sizes
    }

    /// Generators found so far, sorted within each degree.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Generators found in degree `s`.
    pub fn generators_in_degree(&self, s: u32) -> &[ExponentVector] {
        let s = s as usize;
        if s == 0 || s >= self.by_degree.len() {
            return &[];
        }
        &self.generators[self.by_degree[s - 1]..self.by_degree[s]]
    }

    /// Computes the next degree. Returns the number of semigroup elements in
    /// it, or `None` once `max_degree` is reached.
    pub fn advance(&mut self) -> Option<usize> {
        if self.degree >= self.max_degree {
            return None;
        }
        // Every sum can be written with nondecreasing base indices, so it
        // suffices to extend an element by base vectors at or past its index.
        let mut next: HashMap<u128, u32> = HashMap::with_capacity(self.slice.len() * 4);
        for &(x, from) in &self.slice {
            for (k, &b) in self.packed_base.iter().enumerate().skip(from as usize) {
                let k = k as u32;
                next.entry(x + b).and_modify(|m| *m = (*m).min(k)).or_insert(k);
            }
        }
        let mut coords = alloc::vec![0u32; self.n];
        let mut probe = alloc::vec![0u32; self.n];
        let mut interior = HashSet::new();
        let mut fresh = Vec::new();
        for &x in next.keys() {
            self.packing.unpack_into(x, &mut coords);
            if !self.is_interior(&coords) {
                continue;
            }
            interior.insert(x);
            let reducible = self.base.iter().any(|b| {
                let fits = coords.iter().zip(b.coords()).all(|(&c, &d)| c >= d);
                if !fits {
                    return false;
                }
                for (p, (&c, &d)) in probe.iter_mut().zip(coords.iter().zip(b.coords())) {
                    *p = c - d;
                }
                self.interior.contains(&self.packing.pack(&probe))
            });
            if !reducible {
                fresh.push(ExponentVector::new(coords.clone()));
            }
        }
        fresh.sort_unstable();
        self.generators.extend(fresh);
        self.by_degree.push(self.generators.len());
        self.interior = interior;
        self.slice = next.into_iter().collect();
        self.slice_sizes.push(self.slice.len());
        self.degree += 1;
        Some(self.slice.len())
    }

    fn is_interior(&self, x: &[u32]) -> bool {
        self.normals.iter().all(|a| a.iter().zip(x).map(|(&c, &v)| c * v as i64).sum::<i64>() > 0)
    }
}

/// Minimal generators of the canonical module in degrees `1..=degree_cap`.
///
/// Fails with [`Error::Inconclusive`] if a generator shows up in degree
/// `degree_cap` itself, since more may follow.
pub fn canonical_generators_bruteforce(pres: &Presentation, degree_cap: u32) -> Result<CanonicalGenerators> {
    if degree_cap == 0 {
        return Err(Error::Domain("degree cap must be at least 1".into()));
    }
    let mut search = CanonicalSearch::new(pres, degree_cap)?;
    while search.advance().is_some() {}
    let at_cap = search.generators_in_degree(degree_cap).len();
    if at_cap > 0 {
        return Err(Error::Inconclusive { degree_cap, generators_at_cap: at_cap });
    }
    Ok(CanonicalGenerators::new(pres.n(), search.generators().to_vec()))
}

/// Like [`canonical_generators_bruteforce`] but keeps going past
/// `start_cap` until a degree without new generators appears, giving up at
/// `max_cap`. Returns the generators and the cap that settled the search.
pub fn canonical_generators_saturating(
    pres: &Presentation,
    start_cap: u32,
    max_cap: u32,
) -> Result<(CanonicalGenerators, u32)> {
    let max_cap = max_cap.max(start_cap);
    let mut search = CanonicalSearch::new(pres, max_cap)?;
    while search.advance().is_some() {
        let s = search.degree();
        if s >= start_cap && search.generators_in_degree(s).is_empty() {
            return Ok((CanonicalGenerators::new(pres.n(), search.generators().to_vec()), s));
        }
    }
    Err(Error::Inconclusive { degree_cap: max_cap, generators_at_cap: search.generators_in_degree(max_cap).len() })
}

/// Every minimal generator, searching exactly up to
/// [`generator_degree_bound`]. The finished search is returned as well for
/// its slice sizes.
pub fn canonical_generators_complete(pres: &Presentation) -> Result<(CanonicalGenerators, CanonicalSearch)> {
    let base_len = enumerate_base(pres).len();
    let bound = generator_degree_bound(pres.n(), base_len);
    let mut search = CanonicalSearch::new(pres, bound)?;
    while search.advance().is_some() {}
    let generators = CanonicalGenerators::new(pres.n(), search.generators().to_vec());
    Ok((generators, search))
}

//! Transversal presentations, their base sets and the discrete-polymatroid
//! exchange axiom.
//!
//! Ground-set elements and set positions are 1-indexed in every public
//! constructor and in `Display` output; internally they are 0-indexed and
//! sets are bitmasks over `[n]`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::combinat::for_each_composition;
use crate::{Error, Result};

/// Largest ground set a bitmask presentation can hold.
pub const MAX_N: usize = 32;

/// Nonnegative integer vector: base elements, canonical-module generators,
/// extremal rays.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(alloc::vec![0; n])
    }

    /// `scale * e_k` (0-indexed `k`).
    pub fn axis(n: usize, k: usize, scale: u32) -> Self {
        let mut v = Self::zero(n);
        v.0[k] = scale;
        v
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate sum `|x|`.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    /// Sum of the first `len` coordinates.
    pub fn prefix_sum(&self, len: usize) -> u64 {
        self.0[..len].iter().map(|&c| c as u64).sum()
    }

    pub fn dot(&self, normal: &[i64]) -> i64 {
        debug_assert_eq!(self.0.len(), normal.len());
        self.0.iter().zip(normal).map(|(&x, &a)| x as i64 * a).sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(ExponentVector)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn min_coord(&self) -> u32 {
        self.0.iter().copied().min().unwrap_or(0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Which of the two layouts a parameter triple uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyCase {
    /// `i + j <= n - 1`
    LowSum,
    /// `i + j >= n`
    HighSum,
}

/// Parameters `(n, i, j)` of the presentation family with
/// `n >= 3`, `1 <= i <= n - 2`, `1 <= j <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyParams {
    n: usize,
    i: usize,
    j: usize,
}

impl FamilyParams {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParameterDomain(format!("n = {n} violates n >= 3")));
        }
        if n > MAX_N {
            return Err(Error::ParameterDomain(format!("n = {n} violates n <= {MAX_N}")));
        }
        if i < 1 || i > n - 2 {
            return Err(Error::ParameterDomain(format!("i = {i} violates 1 <= i <= n - 2 = {}", n - 2)));
        }
        if j < 1 || j > n - 1 {
            return Err(Error::ParameterDomain(format!("j = {j} violates 1 <= j <= n - 1 = {}", n - 1)));
        }
        Ok(FamilyParams { n, i, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn case(&self) -> FamilyCase {
        if self.i + self.j < self.n {
            FamilyCase::LowSum
        } else {
            FamilyCase::HighSum
        }
    }

    /// `r = ceil((i + 1) / (n - j))`; equals 1 exactly in the low-sum case.
    pub fn r(&self) -> usize {
        (self.i + 1).div_ceil(self.n - self.j)
    }

    /// Every valid triple with `3 <= n <= max_n`, ordered by `(n, i, j)`.
    pub fn grid(max_n: usize) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for n in 3..=max_n.min(MAX_N) {
            for i in 1..=n - 2 {
                for j in 1..=n - 1 {
                    out.push(FamilyParams { n, i, j });
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, i={}, j={})", self.n, self.i, self.j)
    }
}

/// An ordered list of `n` nonempty subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    n: usize,
    sets: Vec<u32>,
}

impl Presentation {
    /// Builds a presentation from bitmasks (bit `k` stands for element `k + 1`).
    pub fn from_masks(n: usize, sets: Vec<u32>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::ParameterDomain(format!("n = {n} must lie in 1..={MAX_N}")));
        }
        if sets.len() != n {
            return Err(Error::ParameterDomain(format!("expected {n} sets, got {}", sets.len())));
        }
        let full = full_mask(n);
        for (pos, &s) in sets.iter().enumerate() {
            if s == 0 {
                return Err(Error::ParameterDomain(format!("set A{} is empty", pos + 1)));
            }
            if s & !full != 0 {
                return Err(Error::ParameterDomain(format!("set A{} has elements outside [{n}]", pos + 1)));
            }
        }
        Ok(Presentation { n, sets })
    }

    /// Builds a presentation from 1-indexed element lists.
    pub fn from_sets(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(sets.len());
        for (pos, set) in sets.iter().enumerate() {
            let mut mask = 0u32;
            for &e in set {
                if e < 1 || e > n || n > MAX_N {
                    return Err(Error::ParameterDomain(format!("element {e} of set A{} is outside [{n}]", pos + 1)));
                }
                mask |= 1 << (e - 1);
            }
            masks.push(mask);
        }
        Self::from_masks(n, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> &[u32] {
        &self.sets
    }

    /// Elements of the set at 0-indexed position `pos`, 1-indexed, ascending.
    pub fn set_elements(&self, pos: usize) -> Vec<usize> {
        (0..self.n).filter(|&e| self.sets[pos] >> e & 1 == 1).map(|e| e + 1).collect()
    }

    /// Polymatroid rank of `subset`: the number of sets meeting it.
    pub fn rank_of(&self, subset: u32) -> usize {
        self.sets.iter().filter(|&&s| s & subset != 0).count()
    }

    /// Valid inequalities `<x, a> >= 0` describing the cone over the base
    /// polytope: `n x(S) <= rank(S) |x|` for every nonempty proper subset `S`,
    /// and `x_k >= 0`. Zero normals are dropped; duplicates removed.
    ///
    /// The list is complete but generally redundant. For a full-dimensional
    /// cone a point is interior iff it satisfies every listed inequality
    /// strictly.
    pub fn polymatroid_inequalities(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let m = self.sets.len() as i64;
        let mut out = BTreeSet::new();
        for k in 0..n {
            let mut e = alloc::vec![0i64; n];
            e[k] = 1;
            out.insert(e);
        }
        let full = full_mask(n);
        for subset in 1..full {
            let rank = self.rank_of(subset) as i64;
            let normal: Vec<i64> = (0..n).map(|k| if subset >> k & 1 == 1 { rank - m } else { rank }).collect();
            if normal.iter().any(|&c| c != 0) {
                out.insert(normal);
            }
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 0..self.n {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "A{}={{", pos + 1)?;
            let elems = self.set_elements(pos);
            for (k, e) in elems.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// The family presentation: restricted sets `[n] \ [i]` at `j` positions,
/// `[n]` elsewhere.
///
/// Low-sum layout restricts positions `i+1..=i+j`; high-sum layout restricts
/// positions `1..=i+j-n` and `i+1..=n`.
pub fn build_family_presentation(params: &FamilyParams) -> Presentation {
    let (n, i, j) = (params.n, params.i, params.j);
    let full = full_mask(n);
    let restricted = full & !((1u32 << i) - 1);
    let sets = (1..=n)
        .map(|pos| {
            let is_restricted = match params.case() {
                FamilyCase::LowSum => pos > i && pos <= i + j,
                FamilyCase::HighSum => pos <= i + j - n || pos > i,
            };
            if is_restricted {
                restricted
            } else {
                full
            }
        })
        .collect();
    Presentation { n, sets }
}

/// Distinct vectors `sum_k e_{j_k}` with `j_k` in `A_k`, sorted.
///
/// Partial sums are deduplicated after each set, which prunes the full
/// Cartesian product.
pub fn enumerate_base(pres: &Presentation) -> Vec<ExponentVector> {
    let n = pres.n;
    let mut layer: HashSet<Vec<u32>> = HashSet::new();
    layer.insert(alloc::vec![0; n]);
    for &set in &pres.sets {
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for partial in &layer {
            for e in 0..n {
                if set >> e & 1 == 1 {
                    let mut v = partial.clone();
                    v[e] += 1;
                    next.insert(v);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<ExponentVector> = layer.into_iter().map(ExponentVector).collect();
    out.sort_unstable();
    out
}

/// Closed description of the family base set:
/// `{x in N^n : |x| = n, x_1 + ... + x_i <= n - j}`, sorted.
pub fn family_base_closed_form(params: &FamilyParams) -> Vec<ExponentVector> {
    let (n, i, j) = (params.n, params.i, params.j);
    let mut out = Vec::new();
    for_each_composition(n as u32, n, 0, |c| {
        if c[..i].iter().sum::<u32>() as usize <= n - j {
            out.push(ExponentVector(c.to_vec()));
        }
    });
    out
}

/// A failed instance of the exchange axiom (0-indexed coordinate).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExchangeViolation {
    UnequalDegree { u: ExponentVector, v: ExponentVector },
    NoExchange { u: ExponentVector, v: ExponentVector, index: usize },
}

impl fmt::Display for ExchangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExchangeViolation::UnequalDegree { u, v } => write!(f, "|{u}| != |{v}|"),
            ExchangeViolation::NoExchange { u, v, index } => {
                write!(f, "u={u}, v={v}: no b with u_b < v_b and u + e_b - e_{} in the set", index + 1)
            }
        }
    }
}

/// First violation of the discrete-polymatroid base axiom, if any.
pub fn find_exchange_violation(base: &[ExponentVector]) -> Option<ExchangeViolation> {
    let first = base.first()?;
    let degree = first.total();
    if let Some(v) = base.iter().find(|v| v.total() != degree) {
        return Some(ExchangeViolation::UnequalDegree { u: first.clone(), v: v.clone() });
    }
    let members: HashSet<&[u32]> = base.iter().map(|v| v.coords()).collect();
    let mut probe: Vec<u32> = Vec::new();
    for u in base {
        for v in base {
            for a in 0..u.len() {
                if u.0[a] <= v.0[a] {
                    continue;
                }
                let found = (0..u.len()).any(|b| {
                    if u.0[b] >= v.0[b] {
                        return false;
                    }
                    probe.clear();
                    probe.extend_from_slice(&u.0);
                    probe[b] += 1;
                    probe[a] -= 1;
                    members.contains(probe.as_slice())
                });
                if !found {
                    return Some(ExchangeViolation::NoExchange { u: u.clone(), v: v.clone(), index: a });
                }
            }
        }
    }
    None
}

pub fn check_exchange_property(base: &[ExponentVector]) -> bool {
    find_exchange_violation(base).is_none()
}

/// Applies `sigma^t` with `sigma = (1 2 ... n)` to set positions and set
/// contents: the set at position `k` moves to `sigma^t(k)` and each element
/// `e` becomes `sigma^t(e)`. `t` is taken modulo `n`.
pub fn rotate_presentation(pres: &Presentation, t: usize) -> Presentation {
    let n = pres.n;
    let t = t % n;
    let mut sets = alloc::vec![0u32; n];
    for (pos, &s) in pres.sets.iter().enumerate() {
        sets[(pos + t) % n] = rotate_mask(s, n, t);
    }
    Presentation { n, sets }
}

/// Coordinate permutation induced by `sigma^t`: `y[sigma^t(a)] = x[a]`.
pub fn rotate_vector(x: &ExponentVector, t: usize) -> ExponentVector {
    let n = x.len();
    let mut out = alloc::vec![0u32; n];
    for (a, &c) in x.0.iter().enumerate() {
        out[(a + t) % n] = c;
    }
    ExponentVector(out)
}

fn rotate_mask(mask: u32, n: usize, t: usize) -> u32 {
    (0..n).filter(|&e| mask >> e & 1 == 1).fold(0, |acc, e| acc | 1 << ((e + t) % n))
}

/// Formats a mask as `{1,3}` using 1-indexed elements.
pub fn mask_to_string(mask: u32, n: usize) -> String {
    let elems: Vec<String> = (0..n).filter(|&e| mask >> e & 1 == 1).map(|e| format!("{}", e + 1)).collect();
    format!("{{{}}}", elems.join(","))
}

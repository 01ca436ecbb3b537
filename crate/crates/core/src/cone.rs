//! Facet normals and extremal rays of the cone spanned by a family base set,
//! with exact certificates that the halfspace description is irreducible.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::feasibility::{find_feasible_point, in_cone, LinearConstraint, Relation, VarDomain};
use crate::linalg::{bareiss_determinant, integer_rank, IntegerMatrix};
use crate::presentation::{rotate_vector, ExponentVector, FamilyParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalLabel {
    /// `nu^j_{sigma^t[i]}`
    Nu { j: usize, t: usize, i: usize },
    /// The standard unit vector `e_k`, `k` 1-indexed.
    CanonicalAxis(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalVector {
    pub coords: Vec<i64>,
    pub label: NormalLabel,
}

impl NormalVector {
    pub fn axis(n: usize, k: usize) -> Self {
        let mut coords = alloc::vec![0; n];
        coords[k] = 1;
        NormalVector { coords, label: NormalLabel::CanonicalAxis(k + 1) }
    }
}

impl fmt::Display for NormalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalLabel::Nu { j, t, i } => write!(f, "nu^{j}_{{sigma^{t}[{i}]}}"),
            NormalLabel::CanonicalAxis(k) => write!(f, "e_{k}"),
        }
    }
}

/// Halfspace description `N` and extremal rays `R` of a cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRepresentation {
    pub normals: Vec<NormalVector>,
    pub rays: Vec<ExponentVector>,
    pub dimension: usize,
}

/// `nu^j_{sigma^t[i]}`: `-j` on the cyclic window `t+1..=t+i` (mod n),
/// `n - j` elsewhere. `t` is taken modulo `n`.
pub fn nu_normal(params: &FamilyParams, t: usize) -> NormalVector {
    let (n, i, j) = (params.n(), params.i(), params.j());
    let t = t % n;
    let mut coords = alloc::vec![(n - j) as i64; n];
    for k in 0..i {
        coords[(k + t) % n] = -(j as i64);
    }
    NormalVector { coords, label: NormalLabel::Nu { j, t, i } }
}

/// Normals `{nu^j_{sigma^0[i]}, e_1, ..., e_n}` and rays
/// `{n e_k : k > i} ∪ {(n-j) e_r + j e_s : r <= i < s}`.
pub fn build_cone(params: &FamilyParams) -> ConeRepresentation {
    build_rotated_cone(params, 0)
}

/// The cone of the presentation rotated by `sigma^t`: normal
/// `nu^j_{sigma^t[i]}` with the axes, rays permuted by `sigma^t`.
pub fn build_rotated_cone(params: &FamilyParams, t: usize) -> ConeRepresentation {
    let (n, i, j) = (params.n(), params.i(), params.j());
    let mut normals = alloc::vec![nu_normal(params, t)];
    normals.extend((0..n).map(|k| NormalVector::axis(n, k)));
    let mut rays: Vec<ExponentVector> = (i..n).map(|k| ExponentVector::axis(n, k, n as u32)).collect();
    for r in 0..i {
        for s in i..n {
            let mut v = alloc::vec![0u32; n];
            v[r] = (n - j) as u32;
            v[s] = j as u32;
            rays.push(ExponentVector::new(v));
        }
    }
    let mut rays: Vec<ExponentVector> = rays.iter().map(|x| rotate_vector(x, t % n)).collect();
    rays.sort_unstable();
    ConeRepresentation { normals, rays, dimension: n }
}

/// One way a halfspace description fails to be the irreducible
/// representation of the cone over a base set. Normal indices refer to
/// `ConeRepresentation::normals`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepresentationFailure {
    BaseOutsideHalfspace {
        vector: ExponentVector,
        normal: usize,
    },
    RayNotInBase {
        ray: ExponentVector,
    },
    FacetRankDeficient {
        normal: usize,
        rank: usize,
    },
    /// No point violates this normal alone: it can be dropped.
    RedundantNormal {
        normal: usize,
    },
    /// The normals do not cut out a pointed cone.
    NotPointed {
        rank: usize,
    },
    /// An extreme ray of the halfspace intersection outside the cone over
    /// the base set, scaled to the smallest multiple with coordinate sum
    /// divisible by `n`.
    OutsideCone {
        witness: Vec<BigInt>,
    },
    /// The declared rays differ from the extreme rays of the intersection.
    RayMismatch {
        declared: usize,
        computed: usize,
    },
}

impl fmt::Display for RepresentationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepresentationFailure::BaseOutsideHalfspace { vector, normal } => {
                write!(f, "(1) base vector {vector} violates normal #{normal}")
            }
            RepresentationFailure::RayNotInBase { ray } => write!(f, "(2) ray {ray} is not a base vector"),
            RepresentationFailure::FacetRankDeficient { normal, rank } => {
                write!(f, "(3) base vectors on hyperplane #{normal} have rank {rank}")
            }
            RepresentationFailure::RedundantNormal { normal } => write!(f, "(4) normal #{normal} is redundant"),
            RepresentationFailure::NotPointed { rank } => write!(f, "normals have rank {rank}; cone not pointed"),
            RepresentationFailure::OutsideCone { witness } => {
                write!(f, "halfspaces admit {} outside the generated cone", fmt_big(witness))
            }
            RepresentationFailure::RayMismatch { declared, computed } => {
                write!(f, "{declared} declared rays vs {computed} extreme rays of the halfspaces")
            }
        }
    }
}

fn fmt_big(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(","))
}

/// Outcome of [`verify_irreducible_representation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationCheck {
    pub failures: Vec<RepresentationFailure>,
    /// For each irredundant normal, a rational point violating that normal
    /// and satisfying all others.
    pub irredundancy_witnesses: Vec<(usize, Vec<BigRational>)>,
    /// Extreme rays of the halfspace intersection, primitive.
    pub halfspace_rays: Vec<Vec<BigInt>>,
}

impl RepresentationCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `cone.normals` is the irreducible representation of the cone
/// over `base`:
///
/// 1. every base vector lies in every halfspace;
/// 2. every declared ray is a base vector;
/// 3. the base vectors on each hyperplane have rank `n - 1`;
/// 4. each normal is irredundant, with an exact witness point;
///
/// and additionally that the intersection is pointed, contained in the cone
/// over `base`, and has exactly the declared extreme rays.
pub fn verify_irreducible_representation(base: &[ExponentVector], cone: &ConeRepresentation) -> RepresentationCheck {
    let n = cone.dimension;
    let normals: Vec<Vec<i64>> = cone.normals.iter().map(|a| a.coords.clone()).collect();
    let mut failures = Vec::new();

    for (k, a) in normals.iter().enumerate() {
        if let Some(x) = base.iter().find(|x| x.dot(a) < 0) {
            failures.push(RepresentationFailure::BaseOutsideHalfspace { vector: x.clone(), normal: k });
        }
    }

    for ray in &cone.rays {
        if base.binary_search(ray).is_err() && !base.contains(ray) {
            failures.push(RepresentationFailure::RayNotInBase { ray: ray.clone() });
        }
    }

    for (k, a) in normals.iter().enumerate() {
        let on_facet: Vec<&[u32]> = base.iter().filter(|x| x.dot(a) == 0).map(|x| x.coords()).collect();
        let rank = if on_facet.is_empty() {
            0
        } else {
            integer_rank(&IntegerMatrix::from_u32_rows(&on_facet).expect("rectangular"))
        };
        if rank + 1 != n {
            failures.push(RepresentationFailure::FacetRankDeficient { normal: k, rank });
        }
    }

    let mut irredundancy_witnesses = Vec::new();
    for k in 0..normals.len() {
        match irredundancy_witness(&normals, k) {
            Some(w) => irredundancy_witnesses.push((k, w)),
            None => failures.push(RepresentationFailure::RedundantNormal { normal: k }),
        }
    }

    let mut halfspace_rays = Vec::new();
    match halfspace_extreme_rays(&normals, n) {
        Err(rank) => failures.push(RepresentationFailure::NotPointed { rank }),
        Ok(rays) => {
            let generators: Vec<Vec<i64>> =
                base.iter().map(|x| x.coords().iter().map(|&c| c as i64).collect()).collect();
            let declared: Vec<Vec<BigInt>> = cone
                .rays
                .iter()
                .map(|r| primitive(&r.coords().iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()))
                .collect();
            for d in &rays {
                let known = declared.contains(d) && cone.rays.iter().all(|r| base.contains(r));
                let member = known || in_base_cone(&generators, d);
                if !member {
                    failures.push(RepresentationFailure::OutsideCone { witness: degree_multiple(d, n) });
                }
            }
            let mut sorted_declared = declared.clone();
            sorted_declared.sort();
            sorted_declared.dedup();
            if sorted_declared != rays {
                failures.push(RepresentationFailure::RayMismatch { declared: cone.rays.len(), computed: rays.len() });
            }
            halfspace_rays = rays;
        }
    }

    RepresentationCheck { failures, irredundancy_witnesses, halfspace_rays }
}

/// Membership in the cone over nonnegative generators. Only generators
/// supported inside the support of `d` can take part in a combination, and
/// a vector with a negative coordinate is never reached.
fn in_base_cone(generators: &[Vec<i64>], d: &[BigInt]) -> bool {
    let Some(target) = d.iter().map(|v| v.to_i64()).collect::<Option<Vec<i64>>>() else {
        return false;
    };
    if target.iter().any(|&v| v < 0) {
        return false;
    }
    let usable: Vec<Vec<i64>> =
        generators.iter().filter(|g| g.iter().zip(&target).all(|(&c, &t)| c == 0 || t > 0)).cloned().collect();
    in_cone(&usable, &target)
}

/// A rational point with `<x, a_drop> = -1` and `<x, a_k> >= 0` otherwise.
fn irredundancy_witness(normals: &[Vec<i64>], drop: usize) -> Option<Vec<BigRational>> {
    let n = normals[drop].len();
    let constraints: Vec<LinearConstraint> = normals
        .iter()
        .enumerate()
        .map(|(k, a)| {
            if k == drop {
                LinearConstraint::from_ints(a, Relation::Eq, -1)
            } else {
                LinearConstraint::from_ints(a, Relation::Ge, 0)
            }
        })
        .collect();
    find_feasible_point(n, VarDomain::Free, &constraints)
}

/// Extreme rays (primitive, sorted) of `{x : <x, a> >= 0 for all a}`, found
/// from every `n - 1` normals of rank `n - 1`. Returns `Err(rank)` when the
/// normals have rank below `n`, i.e. the intersection contains a line.
pub fn halfspace_extreme_rays(normals: &[Vec<i64>], n: usize) -> core::result::Result<Vec<Vec<BigInt>>, usize> {
    let rank = integer_rank(&IntegerMatrix::from_i64_rows(normals).expect("rectangular"));
    if rank < n {
        return Err(rank);
    }
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for subset in index_subsets(normals.len(), n - 1) {
        let rows: Vec<&Vec<i64>> = subset.iter().map(|&k| &normals[k]).collect();
        let d = kernel_direction(&rows, n);
        if d.iter().all(Zero::is_zero) {
            continue;
        }
        for candidate in [d.clone(), d.iter().map(|v| -v).collect::<Vec<_>>()] {
            let ok = normals.iter().all(|a| {
                let s: BigInt = a.iter().zip(&candidate).map(|(&x, y)| y * x).sum();
                !s.is_negative()
            });
            if ok {
                rays.push(primitive(&candidate));
            }
        }
    }
    rays.sort();
    rays.dedup();
    Ok(rays)
}

/// Generalized cross product of `n - 1` vectors in dimension `n`.
fn kernel_direction(rows: &[&Vec<i64>], n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != skip).map(|(_, &v)| v).collect())
                .collect();
            let det = if minor.is_empty() {
                BigInt::one()
            } else {
                bareiss_determinant(&IntegerMatrix::from_i64_rows(&minor).expect("square")).expect("square")
            };
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

fn index_subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, len: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for s in start..len {
            if len - s < k - current.len() {
                break;
            }
            current.push(s);
            rec(s + 1, len, k, current, out);
            current.pop();
        }
    }
    rec(0, len, k, &mut current, &mut out);
    out
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Smallest positive multiple of `d` whose coordinate sum is divisible by `n`.
fn degree_multiple(d: &[BigInt], n: usize) -> Vec<BigInt> {
    let total: BigInt = d.iter().sum();
    let n = BigInt::from(n);
    let k = if total.is_zero() { BigInt::one() } else { &n / total.abs().gcd(&n) };
    d.iter().map(|x| x * &k).collect()
}

/// `|det C|` for the rows `J_1..J_i, J_{i+2}..J_n, J`, checked against the
/// closed form `n (n-j)^i j^(n-i-1)`.
pub fn det_certificate(params: &FamilyParams) -> Result<BigInt> {
    let c = certificate_matrix(params);
    let det = bareiss_determinant(&c)?.abs();
    let expected = det_closed_form(params);
    if det != expected {
        return Err(Error::InternalConsistency(format!(
            "certificate determinant for {params} is {det}, closed form gives {expected}"
        )));
    }
    Ok(det)
}

/// `J_k = (n-j) e_k + j e_{i+1}` for `k <= i`, `J_r = (n-j) e_1 + j e_r` for
/// `r >= i + 2`, and `J = n e_n`, as rows.
pub fn certificate_matrix(params: &FamilyParams) -> IntegerMatrix {
    let (n, i, j) = (params.n(), params.i(), params.j());
    let (nj, jj) = ((n - j) as i64, j as i64);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    for k in 0..i {
        let mut row = alloc::vec![0i64; n];
        row[k] += nj;
        row[i] += jj;
        rows.push(row);
    }
    for r in i + 1..n {
        let mut row = alloc::vec![0i64; n];
        row[0] += nj;
        row[r] += jj;
        rows.push(row);
    }
    let mut last = alloc::vec![0i64; n];
    last[n - 1] = n as i64;
    rows.push(last);
    IntegerMatrix::from_i64_rows(&rows).expect("rectangular")
}

pub fn det_closed_form(params: &FamilyParams) -> BigInt {
    let (n, i, j) = (params.n(), params.i(), params.j());
    BigInt::from(n) * num_traits::pow(BigInt::from(n - j), i) * num_traits::pow(BigInt::from(j), n - i - 1)
}

/// Strict positivity on every normal.
pub fn in_relative_interior(x: &ExponentVector, cone: &ConeRepresentation) -> bool {
    cone.normals.iter().all(|a| x.dot(&a.coords) > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{build_family_presentation, enumerate_base, rotate_presentation};
    use alloc::vec;

    fn fam(n: usize, i: usize, j: usize) -> FamilyParams {
        FamilyParams::new(n, i, j).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn cofactor(a: &[Vec<i64>]) -> i64 {
        if a.len() == 1 {
            return a[0][0];
        }
        (0..a.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &v)| v).collect())
                    .collect();
                (if c % 2 == 0 { 1 } else { -1 }) * a[0][c] * cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_normal(&fam(7, 3, 2), 0).coords, vec![-2, -2, -2, 5, 5, 5, 5]);
        assert_eq!(nu_normal(&fam(3, 1, 1), 1).coords, vec![2, -1, 2]);
        assert_eq!(nu_normal(&fam(4, 1, 2), 0).coords, vec![-2, 2, 2, 2]);
        // window wraps around
        assert_eq!(nu_normal(&fam(5, 2, 1), 4).coords, vec![-1, 4, 4, 4, -1]);
    }

    #[test]
    fn cone_of_3_1_1() {
        let cone = build_cone(&fam(3, 1, 1));
        let mut expect = vec![ev(&[0, 3, 0]), ev(&[0, 0, 3]), ev(&[2, 1, 0]), ev(&[2, 0, 1])];
        expect.sort();
        assert_eq!(cone.rays, expect);
        assert_eq!(cone.normals.len(), 4);
        assert_eq!(cone.dimension, 3);
    }

    #[test]
    fn counts_and_degrees() {
        for p in FamilyParams::grid(9) {
            let cone = build_cone(&p);
            assert_eq!(cone.rays.len(), (p.i() + 1) * (p.n() - p.i()), "{p}");
            assert_eq!(cone.normals.len(), p.n() + 1);
            assert!(cone.rays.iter().all(|r| r.total() == p.n() as u64));
        }
        let cone = build_cone(&fam(7, 3, 2));
        assert_eq!((cone.rays.len(), cone.normals.len()), (16, 8));
    }

    #[test]
    fn golden_representation_holds() {
        let p = fam(7, 3, 2);
        let base = enumerate_base(&build_family_presentation(&p));
        let check = verify_irreducible_representation(&base, &build_cone(&p));
        assert!(check.holds(), "{:?}", check.failures);
        assert_eq!(check.irredundancy_witnesses.len(), 8);
        assert_eq!(check.halfspace_rays.len(), 16);
    }

    #[test]
    fn dropping_an_axis_admits_negative_coordinates() {
        let p = fam(7, 3, 2);
        let base = enumerate_base(&build_family_presentation(&p));
        let mut cone = build_cone(&p);
        cone.normals.retain(|a| a.label != NormalLabel::CanonicalAxis(1));
        let check = verify_irreducible_representation(&base, &cone);
        assert!(!check.holds());
        let witness = check
            .failures
            .iter()
            .find_map(|f| match f {
                RepresentationFailure::OutsideCone { witness } => Some(witness.clone()),
                _ => None,
            })
            .expect("outside-cone witness");
        assert!(witness[0].is_negative());
    }

    #[test]
    fn dropping_nu_admits_the_first_axis() {
        let p = fam(7, 3, 2);
        let base = enumerate_base(&build_family_presentation(&p));
        let mut cone = build_cone(&p);
        cone.normals.remove(0);
        let check = verify_irreducible_representation(&base, &cone);
        assert!(!check.holds());
        let witnesses: Vec<Vec<BigInt>> = check
            .failures
            .iter()
            .filter_map(|f| match f {
                RepresentationFailure::OutsideCone { witness } => Some(witness.clone()),
                _ => None,
            })
            .collect();
        let seven_e1: Vec<BigInt> = [7, 0, 0, 0, 0, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert!(witnesses.contains(&seven_e1));
        // n e_1 violates nu and nothing else
        let nu = nu_normal(&p, 0);
        assert!(ExponentVector::axis(7, 0, 7).dot(&nu.coords) < 0);
    }

    #[test]
    fn an_extra_valid_normal_is_redundant() {
        let p = fam(4, 1, 1);
        let base = enumerate_base(&build_family_presentation(&p));
        let mut cone = build_cone(&p);
        // e_1 + e_2 is valid but implied by e_1 and e_2
        cone.normals.push(NormalVector { coords: vec![1, 1, 0, 0], label: NormalLabel::CanonicalAxis(99) });
        let check = verify_irreducible_representation(&base, &cone);
        assert!(check.failures.iter().any(|f| matches!(f, RepresentationFailure::RedundantNormal { normal: 5 })));
    }

    #[test]
    fn witnesses_violate_only_their_normal() {
        let p = fam(5, 2, 3);
        let base = enumerate_base(&build_family_presentation(&p));
        let cone = build_cone(&p);
        let check = verify_irreducible_representation(&base, &cone);
        assert!(check.holds());
        for (k, w) in &check.irredundancy_witnesses {
            for (m, a) in cone.normals.iter().enumerate() {
                let s: BigRational =
                    a.coords.iter().zip(w).map(|(&c, x)| x * BigRational::from_integer(c.into())).sum();
                assert_eq!(s.is_negative(), m == *k);
            }
        }
    }

    #[test]
    fn rotated_cones_verify() {
        for p in FamilyParams::grid(5) {
            let pres = build_family_presentation(&p);
            for t in 0..p.n() {
                let mut base = enumerate_base(&rotate_presentation(&pres, t));
                base.sort();
                let cone = build_rotated_cone(&p, t);
                assert_eq!(cone.normals[0], nu_normal(&p, t));
                let check = verify_irreducible_representation(&base, &cone);
                assert!(check.holds(), "{p} t={t}: {:?}", check.failures);
            }
        }
    }

    #[test]
    fn determinant_certificates() {
        assert_eq!(det_certificate(&fam(7, 3, 2)).unwrap(), BigInt::from(7000));
        assert_eq!(det_certificate(&fam(3, 1, 1)).unwrap(), BigInt::from(6));
        // cofactor expansion on the 7x7 instance
        let c = certificate_matrix(&fam(7, 3, 2));
        let rows: Vec<Vec<i64>> = c.rows().iter().map(|r| r.iter().map(|v| v.to_i64().unwrap()).collect()).collect();
        assert_eq!(cofactor(&rows).abs(), 7000);
    }

    #[test]
    fn certificate_rows_are_base_vectors_and_n_minus_1_lie_on_nu() {
        let p = fam(7, 3, 2);
        let base = enumerate_base(&build_family_presentation(&p));
        let c = certificate_matrix(&p);
        let rows: Vec<ExponentVector> =
            c.rows().iter().map(|r| ExponentVector::new(r.iter().map(|v| v.to_u32().unwrap()).collect())).collect();
        assert!(rows.iter().all(|r| base.contains(r)));
        let nu = nu_normal(&p, 0);
        let on_nu: Vec<&[u32]> = rows[..6].iter().map(|r| r.coords()).collect();
        assert!(rows[..6].iter().all(|r| r.dot(&nu.coords) == 0));
        assert_eq!(integer_rank(&IntegerMatrix::from_u32_rows(&on_nu).unwrap()), 6);
    }

    #[test]
    fn relative_interior_examples() {
        let ones7 = ev(&[1; 7]);
        let c = build_cone(&fam(7, 3, 2));
        assert_eq!(ones7.dot(&c.normals[0].coords), 14);
        assert!(in_relative_interior(&ones7, &c));
        let c = build_cone(&fam(7, 4, 5));
        assert_eq!(ones7.dot(&c.normals[0].coords), -14);
        assert!(!in_relative_interior(&ones7, &c));
        assert!(!in_relative_interior(&ev(&[3, 1, 1, 1, 0, 1, 1]), &build_cone(&fam(7, 3, 2))));
    }

    #[test]
    fn base_pairings_with_nu_are_nonnegative_multiples_of_n() {
        for p in FamilyParams::grid(6) {
            let base = enumerate_base(&build_family_presentation(&p));
            let nu = nu_normal(&p, 0);
            for x in &base {
                let v = x.dot(&nu.coords);
                assert!(v >= 0 && v % p.n() as i64 == 0, "{p} {x}");
                let prefix = x.prefix_sum(p.i()) as i64;
                assert_eq!(v, p.n() as i64 * (p.n() as i64 - p.j() as i64 - prefix));
            }
        }
    }
}

//! Exact rational linear feasibility by phase-one simplex with Bland's rule.
//!
//! Problems here have at most a few dozen rows, so a dense tableau over
//! `BigRational` is fast enough and never rounds.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs . x  (relation)  rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl LinearConstraint {
    pub fn from_ints(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        LinearConstraint {
            coeffs: coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
            relation,
            rhs: BigRational::from_integer(BigInt::from(rhs)),
        }
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarDomain {
    Free,
    NonNegative,
}

/// A point satisfying every constraint, or `None` if the system is
/// infeasible.
pub fn find_feasible_point(
    num_vars: usize,
    domain: VarDomain,
    constraints: &[LinearConstraint],
) -> Option<Vec<BigRational>> {
    let zero = BigRational::zero;
    let m = constraints.len();
    let split = domain == VarDomain::Free;
    let structural = if split { 2 * num_vars } else { num_vars };
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let artificial_start = structural + slack_count;
    let width = artificial_start + m;

    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    let mut slack = structural;
    for (r, c) in constraints.iter().enumerate() {
        debug_assert_eq!(c.coeffs.len(), num_vars);
        let mut row = alloc::vec![zero(); width];
        for (k, a) in c.coeffs.iter().enumerate() {
            row[k] = a.clone();
            if split {
                row[num_vars + k] = -a.clone();
            }
        }
        match c.relation {
            Relation::Le => {
                row[slack] = BigRational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -BigRational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -core::mem::take(v);
            }
            b = -b;
        }
        row[artificial_start + r] = BigRational::one();
        rows.push(row);
        rhs.push(b);
    }

    let mut basis: Vec<usize> = (artificial_start..width).collect();
    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<BigRational> = (0..width)
        .map(|k| if k >= artificial_start { zero() } else { -rows.iter().map(|r| r[k].clone()).sum::<BigRational>() })
        .collect();

    while let Some(enter) = (0..artificial_start).find(|&k| cost[k].is_negative()) {
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if !rows[r][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(r),
                Some(l) => {
                    let lhs = &rhs[r] * &rows[l][enter];
                    let rhs_l = &rhs[l] * &rows[r][enter];
                    if lhs < rhs_l || (lhs == rhs_l && basis[r] < basis[l]) {
                        Some(r)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        // Phase one is bounded below by zero, so a ratio row always exists.
        let l = leave.expect("phase-one objective is bounded");
        let pivot = rows[l][enter].clone();
        for v in rows[l].iter_mut() {
            *v /= &pivot;
        }
        rhs[l] /= &pivot;
        let pivot_row = rows[l].clone();
        let pivot_rhs = rhs[l].clone();
        for r in 0..m {
            if r == l || rows[r][enter].is_zero() {
                continue;
            }
            let f = rows[r][enter].clone();
            for (v, p) in rows[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            rhs[r] -= &f * &pivot_rhs;
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        basis[l] = enter;
    }

    let residual_artificial = basis.iter().zip(&rhs).any(|(&b, v)| b >= artificial_start && !v.is_zero());
    if residual_artificial {
        return None;
    }
    let mut values = alloc::vec![zero(); structural];
    for (r, &b) in basis.iter().enumerate() {
        if b < structural {
            values[b] = rhs[r].clone();
        }
    }
    let x: Vec<BigRational> =
        if split { (0..num_vars).map(|k| &values[k] - &values[num_vars + k]).collect() } else { values };
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&x)));
    Some(x)
}

/// Whether `target` is a nonnegative rational combination of `generators`.
pub fn in_cone(generators: &[Vec<i64>], target: &[i64]) -> bool {
    cone_combination(generators, target).is_some()
}

/// Nonnegative coefficients expressing `target` through `generators`.
pub fn cone_combination(generators: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let dim = target.len();
    let constraints: Vec<LinearConstraint> = (0..dim)
        .map(|row| LinearConstraint {
            coeffs: generators.iter().map(|g| BigRational::from_integer(BigInt::from(g[row]))).collect(),
            relation: Relation::Eq,
            rhs: BigRational::from_integer(BigInt::from(target[row])),
        })
        .collect();
    find_feasible_point(generators.len(), VarDomain::NonNegative, &constraints)
}

/// Whether `target` is a convex combination of `points` scaled by `scale`,
/// i.e. lies in `scale * conv(points)`.
pub fn in_dilated_hull(points: &[Vec<i64>], scale: i64, target: &[i64]) -> bool {
    let dim = target.len();
    let mut constraints: Vec<LinearConstraint> = (0..dim)
        .map(|row| LinearConstraint {
            coeffs: points.iter().map(|p| BigRational::from_integer(BigInt::from(p[row]))).collect(),
            relation: Relation::Eq,
            rhs: BigRational::from_integer(BigInt::from(target[row])),
        })
        .collect();
    constraints.push(LinearConstraint {
        coeffs: alloc::vec![BigRational::one(); points.len()],
        relation: Relation::Eq,
        rhs: BigRational::from_integer(BigInt::from(scale)),
    });
    find_feasible_point(points.len(), VarDomain::NonNegative, &constraints).is_some()
}

/// Whether `target` lies in the interior of the full-dimensional cone
/// spanned by `generators`: a positive multiple of it is a combination with
/// every coefficient at least one.
pub fn in_cone_interior(generators: &[Vec<i64>], target: &[i64]) -> bool {
    // variables: lambda_1..lambda_g, mu; sum lambda_k g_k - mu * target = 0,
    // lambda_k >= 1, mu >= 0 (mu > 0 is forced unless target is 0).
    let dim = target.len();
    let g = generators.len();
    let big = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut constraints: Vec<LinearConstraint> = (0..dim)
        .map(|row| {
            let mut coeffs: Vec<BigRational> = generators.iter().map(|gen| big(gen[row])).collect();
            coeffs.push(big(-target[row]));
            LinearConstraint { coeffs, relation: Relation::Eq, rhs: BigRational::zero() }
        })
        .collect();
    for k in 0..g {
        let mut coeffs = alloc::vec![BigRational::zero(); g + 1];
        coeffs[k] = BigRational::one();
        constraints.push(LinearConstraint { coeffs, relation: Relation::Ge, rhs: BigRational::one() });
    }
    find_feasible_point(g + 1, VarDomain::NonNegative, &constraints).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn simple_feasible_system() {
        // x + y = 1, x - y >= 1/2 (scaled), x, y >= 0
        let cs = vec![
            LinearConstraint::from_ints(&[1, 1], Relation::Eq, 1),
            LinearConstraint::from_ints(&[2, -2], Relation::Ge, 1),
        ];
        let x = find_feasible_point(2, VarDomain::NonNegative, &cs).unwrap();
        assert!(cs.iter().all(|c| c.is_satisfied_by(&x)));
        assert!(x[0] >= q(3, 4));
    }

    #[test]
    fn infeasible_system() {
        let cs = vec![
            LinearConstraint::from_ints(&[1, 1], Relation::Le, 1),
            LinearConstraint::from_ints(&[1, 1], Relation::Ge, 2),
        ];
        assert!(find_feasible_point(2, VarDomain::NonNegative, &cs).is_none());
    }

    #[test]
    fn free_variables_can_go_negative() {
        let cs = vec![
            LinearConstraint::from_ints(&[1, 0], Relation::Eq, -3),
            LinearConstraint::from_ints(&[0, 1], Relation::Le, -2),
        ];
        let x = find_feasible_point(2, VarDomain::Free, &cs).unwrap();
        assert_eq!(x[0], q(-3, 1));
        assert!(x[1] <= q(-2, 1));
        assert!(find_feasible_point(2, VarDomain::NonNegative, &cs).is_none());
    }

    #[test]
    fn cone_and_hull_membership() {
        let gens = vec![vec![1, 0], vec![1, 1]];
        assert!(in_cone(&gens, &[3, 1]));
        assert!(!in_cone(&gens, &[1, 2]));
        assert!(in_cone(&gens, &[0, 0]));
        assert!(in_cone_interior(&gens, &[3, 1]));
        assert!(!in_cone_interior(&gens, &[3, 0]));
        assert!(!in_cone_interior(&gens, &[1, 1]));
        let pts = vec![vec![2, 0], vec![0, 2]];
        assert!(in_dilated_hull(&pts, 2, &[1, 3]));
        assert!(!in_dilated_hull(&pts, 2, &[1, 2]));
        assert!(in_dilated_hull(&pts, 0, &[0, 0]));
    }

    #[test]
    fn degenerate_rows_do_not_cycle() {
        // Many redundant constraints through the origin.
        let mut cs = Vec::new();
        for a in -3..=3 {
            for b in -3..=3 {
                if a + b >= 0 {
                    cs.push(LinearConstraint::from_ints(&[a, b], Relation::Ge, 0));
                }
            }
        }
        cs.push(LinearConstraint::from_ints(&[1, 1], Relation::Eq, 1));
        let x = find_feasible_point(2, VarDomain::Free, &cs).unwrap();
        assert!(cs.iter().all(|c| c.is_satisfied_by(&x)));
    }
}

//! Binomial coefficients and composition enumeration.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` by the multiplicative formula; zero when `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc *= a - k;
        acc /= k + 1;
    }
    acc
}

/// Calls `visit` on every composition of `total` into `parts` nonnegative
/// parts with every part at least `min_part`, in lexicographic order.
///
/// The slice passed to `visit` is reused between calls.
pub fn for_each_composition<F: FnMut(&[u32])>(total: u32, parts: usize, min_part: u32, mut visit: F) {
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let floor = min_part as u64 * parts as u64;
    if (total as u64) < floor {
        return;
    }
    let mut buf = alloc::vec![0u32; parts];
    fill(&mut buf, 0, total, min_part, &mut visit);
}

fn fill<F: FnMut(&[u32])>(buf: &mut [u32], pos: usize, remaining: u32, min_part: u32, visit: &mut F) {
    let last = buf.len() - 1;
    if pos == last {
        buf[pos] = remaining;
        visit(buf);
        return;
    }
    let reserve = min_part * (last - pos) as u32;
    let mut v = min_part;
    while v + reserve <= remaining {
        buf[pos] = v;
        fill(buf, pos + 1, remaining - v, min_part, visit);
        v += 1;
    }
}

/// All compositions of `total` into `parts` parts, each `>= min_part`.
pub fn compositions(total: u32, parts: usize, min_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_composition(total, parts, min_part, |c| out.push(c.to_vec()));
    out
}

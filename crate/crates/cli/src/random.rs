//! Seeded random presentations, reproducible in any language.
//!
//! The generator is the 64-bit linear congruential recurrence
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//! ```
//!
//! started from `state = seed`. A draw advances the state once and keeps
//! bits 33..64, i.e. `state >> 33`. A value below `m` is obtained by
//! rejecting draws `>= m * floor(2^31 / m)` and reducing the rest mod `m`.
//! Each set `A_k`, `k = 1..n` in order, is the bitmask `1 + draw(2^n - 1)`,
//! so every nonempty subset of `[n]` is equally likely.

use transpoly_core::Presentation;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    /// The next 31-bit output.
    pub fn next_u31(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 33) as u32
    }

    /// Uniform in `0..m`, `1 <= m <= 2^31`.
    pub fn below(&mut self, m: u32) -> u32 {
        assert!((1..=1 << 31).contains(&m));
        let limit = ((1u64 << 31) / m as u64) * m as u64;
        loop {
            let v = self.next_u31() as u64;
            if v < limit {
                return (v % m as u64) as u32;
            }
        }
    }
}

pub fn random_presentation(n: usize, rng: &mut Lcg) -> Presentation {
    let subsets = (1u32 << n) - 1;
    let masks = (0..n).map(|_| 1 + rng.below(subsets)).collect();
    Presentation::from_masks(n, masks).expect("nonempty subsets of [n]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_outputs_for_seed_one() {
        let mut rng = Lcg::new(1);
        // 1 * a + c = 7806831264735756412, >> 33 = 908834774
        assert_eq!(rng.next_u31(), 908834774);
        let mut a = Lcg::new(42);
        let mut b = Lcg::new(42);
        assert_eq!(random_presentation(5, &mut a), random_presentation(5, &mut b));
    }

    #[test]
    fn draws_cover_every_subset() {
        let mut rng = Lcg::new(7);
        let mut seen = [false; 15];
        for _ in 0..2000 {
            let pres = random_presentation(4, &mut rng);
            for &m in pres.masks() {
                seen[m as usize - 1] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
}

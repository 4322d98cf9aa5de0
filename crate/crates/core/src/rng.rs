//! Deterministic 64-bit LCG used for every seeded draw.

use crate::rational::Rational;
use crate::scalar::ExtScalar;

const MUL: u64 = 6364136223846793005;
const INC: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    /// Derive an independent stream for a named sub-task.
    pub fn fork(&self, tag: &str) -> Rng {
        let mut h = self.state ^ 0x9e37_79b9_7f4a_7c15;
        for b in tag.bytes() {
            h = h.wrapping_mul(MUL).wrapping_add(b as u64 ^ INC);
        }
        Rng::new(h)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MUL).wrapping_add(INC);
        self.state
    }

    /// The high 32 bits of the next state.
    pub fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0);
        self.next_u32() % n
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.below(den) < num
    }

    /// Numerator in [−9, 9], denominator in {1, 2, 3}.
    pub fn rational(&mut self) -> Rational {
        let x = self.next_u32();
        let num = (x % 19) as i64 - 9;
        let den = ((x / 19) % 3) as i64 + 1;
        Rational::new(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn real(&mut self) -> ExtScalar {
        ExtScalar::from_rational(self.rational())
    }

    pub fn gaussian(&mut self) -> ExtScalar {
        ExtScalar::gaussian(self.rational(), self.rational())
    }

    pub fn nonzero_gaussian(&mut self) -> ExtScalar {
        loop {
            let g = self.gaussian();
            if !g.is_zero() {
                return g;
            }
        }
    }

    /// All four components random.
    pub fn ext(&mut self) -> ExtScalar {
        ExtScalar::new(self.rational(), self.rational(), self.rational(), self.rational())
    }

    pub fn gaussians(&mut self, n: usize) -> Vec<ExtScalar> {
        (0..n).map(|_| self.gaussian()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_states() {
        let mut r = Rng::new(0);
        assert_eq!(r.next_u64(), INC);
        assert_eq!(r.next_u64(), INC.wrapping_mul(MUL).wrapping_add(INC));
    }

    #[test]
    fn rational_range() {
        let mut r = Rng::new(7);
        let mut seen_den3 = false;
        for _ in 0..2000 {
            let q = r.rational();
            let (n, d) = q.as_small().unwrap();
            assert!(q.abs() <= Rational::from_int(9));
            assert!((1..=3).contains(&d) || n == 0);
            seen_den3 |= d == 3;
        }
        assert!(seen_den3);
    }

    #[test]
    fn forks_differ_and_repeat() {
        let r = Rng::new(42);
        let mut a = r.fork("a");
        let mut b = r.fork("b");
        assert_ne!(a.next_u64(), b.next_u64());
        assert_eq!(r.fork("a").next_u64(), Rng::new(42).fork("a").next_u64());
    }
}

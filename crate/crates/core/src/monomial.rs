//! Exponent vectors with weighted degrees.

/// Maximum number of ring variables supported by the packed representation.
pub const MAX_VARS: usize = 6;

/// A monomial as a fixed-width exponent vector. The ambient ring knows how
/// many of the slots are in use; unused slots stay zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub e: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { e: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.e[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Monomial::one();
        for (i, &x) in exps.iter().enumerate() {
            assert!(x <= u16::MAX as u32, "exponent overflow");
            m.e[i] = x as u16;
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.e[i] = m.e[i].checked_add(other.e[i]).expect("exponent overflow");
        }
        m
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            let v = (self.e[i] as u32).checked_mul(k).expect("exponent overflow");
            assert!(v <= u16::MAX as u32, "exponent overflow");
            m.e[i] = v as u16;
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.e[i] <= other.e[i])
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            if self.e[i] < other.e[i] {
                return None;
            }
            m.e[i] = self.e[i] - other.e[i];
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.e[i] = self.e[i].max(other.e[i]);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.e[i] = self.e[i].min(other.e[i]);
        }
        m
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        weights
            .iter()
            .enumerate()
            .map(|(i, &w)| self.e[i] as u64 * w as u64)
            .sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.e[i] as u32
    }
}

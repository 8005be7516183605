//! Graded degrees with `p`-power denominators.
//!
//! Pushing a module forward through a Frobenius step divides all degrees by
//! `q = p^n`, so gradings accumulate denominators `p^k`. All arithmetic here
//! is exact; values normalize to lowest terms (the denominator is always a
//! power of the characteristic, so plain gcd reduction preserves the shape).

use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Degree {
    num: i64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Degree {
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        if num == 0 {
            return Degree { num: 0, den: 1 };
        }
        let g = gcd(num.unsigned_abs(), den);
        Degree {
            num: num / g as i64,
            den: den / g,
        }
    }

    pub fn int(n: i64) -> Self {
        Degree { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Degree { num: 0, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        if self.den == 1 {
            Some(self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Degree) -> Degree {
        let den = self.den / gcd(self.den, other.den) * other.den;
        let num = self.num * (den / self.den) as i64 + other.num * (den / other.den) as i64;
        Degree::new(num, den)
    }

    pub fn sub(&self, other: &Degree) -> Degree {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Degree {
        Degree {
            num: -self.num,
            den: self.den,
        }
    }

    pub fn add_int(&self, n: i64) -> Degree {
        Degree::new(self.num + n * self.den as i64, self.den)
    }

    /// Divide by a Frobenius step `q` (a power of the characteristic).
    pub fn div_q(&self, q: u64) -> Degree {
        Degree::new(self.num, self.den * q)
    }

    /// Numerator after scaling to the common denominator `den`.
    pub fn scaled_num(&self, den: u64) -> i64 {
        debug_assert_eq!(den % self.den, 0);
        self.num * (den / self.den) as i64
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_order() {
        let a = Degree::new(6, 3); // 2
        assert_eq!(a, Degree::int(2));
        let b = Degree::int(1).div_q(3); // 1/3
        assert_eq!(a.add(&b), Degree::new(7, 3));
        assert_eq!(a.sub(&b), Degree::new(5, 3));
        assert!(b < a);
        assert_eq!(b.div_q(3), Degree::new(1, 9));
        assert_eq!(Degree::new(-2, 9).to_string(), "-2/9");
        assert_eq!(Degree::new(5, 3).scaled_num(9), 15);
    }
}

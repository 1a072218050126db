//! Minimal exact rational arithmetic for model endpoints. Endpoints only
//! ever need thirds of small integers, so i64 with normalization is ample.

use std::cmp::Ordering;
use std::fmt;

/// An exact rational `num/den`, always normalized with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    /// `n - 1/3`
    pub fn minus_third(n: i64) -> Self {
        Rational::new(3 * n - 1, 3)
    }

    /// `n + 1/3`
    pub fn plus_third(n: i64) -> Self {
        Rational::new(3 * n + 1, 3)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_order() {
        assert_eq!(Rational::new(2, 6), Rational::new(1, 3));
        assert_eq!(Rational::new(-2, -6), Rational::new(1, 3));
        assert_eq!(Rational::new(2, -6), Rational::new(-1, 3));
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        assert!(Rational::minus_third(2) < Rational::int(2));
        assert!(Rational::plus_third(2) > Rational::int(2));
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(Rational::minus_third(0).to_string(), "-1/3");
        assert_eq!(Rational::int(5).to_string(), "5/1");
    }
}

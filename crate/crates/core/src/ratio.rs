use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Exact non-negative rational `num/den`. Thickness thresholds and gap
/// factors are compared by cross-multiplication in integers; the 1/2
/// threshold produces exact ties that floating point would misjudge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub const HALF: Ratio = Ratio { num: 1, den: 2 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Invalid("ratio denominator must be nonzero".into()));
        }
        Ok(Ratio { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `a >= self * b`, exactly.
    pub fn le_scaled(self, a: usize, b: usize) -> bool {
        (self.den as u128) * (a as u128) >= (self.num as u128) * (b as u128)
    }

    /// `a > self * b`, exactly.
    pub fn lt_scaled(self, a: usize, b: usize) -> bool {
        (self.den as u128) * (a as u128) > (self.num as u128) * (b as u128)
    }

    /// True when `num/den <= 1`.
    pub fn at_most_one(self) -> bool {
        self.num <= self.den
    }

    /// True when `num/den >= 1`.
    pub fn at_least_one(self) -> bool {
        self.num >= self.den
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("expected a ratio like `p/q`, got `{s}`"));
        match s.split_once('/') {
            Some((p, q)) => {
                let num = p.trim().parse::<u64>().map_err(|_| bad())?;
                let den = q.trim().parse::<u64>().map_err(|_| bad())?;
                Ratio::new(num, den)
            }
            None => {
                let num = s.trim().parse::<u64>().map_err(|_| bad())?;
                Ratio::new(num, 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_threshold_ties_are_exact() {
        // 2 >= (1/2)*4 holds with equality; 1 >= (1/2)*3 does not.
        assert!(Ratio::HALF.le_scaled(2, 4));
        assert!(!Ratio::HALF.le_scaled(1, 3));
        assert!(Ratio::HALF.lt_scaled(2, 3));
        assert!(!Ratio::HALF.lt_scaled(2, 4));
    }

    #[test]
    fn parsing() {
        assert_eq!("1/2".parse::<Ratio>().unwrap(), Ratio::HALF);
        assert_eq!("4".parse::<Ratio>().unwrap(), Ratio::new(4, 1).unwrap());
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("x/2".parse::<Ratio>().is_err());
    }

    #[test]
    fn one_comparisons() {
        assert!(Ratio::new(3, 3).unwrap().at_most_one());
        assert!(Ratio::new(3, 3).unwrap().at_least_one());
        assert!(!Ratio::new(4, 3).unwrap().at_most_one());
        assert!(!Ratio::new(2, 3).unwrap().at_least_one());
    }
}

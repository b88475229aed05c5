//! Exact rational scores.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// An exact rational score. Always stored in lowest terms with a positive
/// denominator, so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Score(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScoreParseError {
    #[error("empty score")]
    Empty,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid score `{0}`")]
    Invalid(String),
}

impl Score {
    pub fn zero() -> Score {
        Score(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Score {
        Score(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Score {
        assert!(den != 0, "zero denominator");
        Score(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(value: BigRational) -> Score {
        Score(value)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Score {
        Score(self.0.abs())
    }

    pub fn min(self, other: Score) -> Score {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Score) -> Score {
        std::cmp::max(self, other)
    }
}

impl From<i64> for Score {
    fn from(n: i64) -> Score {
        Score::from_integer(n)
    }
}

impl Add for Score {
    type Output = Score;
    fn add(self, rhs: Score) -> Score {
        Score(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Score> for &'a Score {
    type Output = Score;
    fn add(self, rhs: &'a Score) -> Score {
        Score(&self.0 + &rhs.0)
    }
}

impl Sub for Score {
    type Output = Score;
    fn sub(self, rhs: Score) -> Score {
        Score(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Score> for &'a Score {
    type Output = Score;
    fn sub(self, rhs: &'a Score) -> Score {
        Score(&self.0 - &rhs.0)
    }
}

impl Neg for Score {
    type Output = Score;
    fn neg(self) -> Score {
        Score(-self.0)
    }
}

impl Neg for &Score {
    type Output = Score;
    fn neg(self) -> Score {
        Score(-&self.0)
    }
}

/// Integers print bare, everything else as `num/den`.
impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `n`, `-n`, `n/d` and finite decimals such as `-0.25`, all
/// converted exactly.
impl FromStr for Score {
    type Err = ScoreParseError;

    fn from_str(s: &str) -> Result<Score, ScoreParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScoreParseError::Empty);
        }
        let invalid = || ScoreParseError::Invalid(s.to_string());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());

        let value = if let Some((num, den)) = body.split_once('/') {
            if !digits(num) || !digits(den) {
                return Err(invalid());
            }
            let den: BigInt = den.parse().map_err(|_| invalid())?;
            if den.is_zero() {
                return Err(ScoreParseError::ZeroDenominator);
            }
            let num: BigInt = num.parse().map_err(|_| invalid())?;
            BigRational::new(num, den)
        } else if let Some((int, frac)) = body.split_once('.') {
            if !digits(int) || !digits(frac) {
                return Err(invalid());
            }
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let whole: BigInt = format!("{int}{frac}").parse().map_err(|_| invalid())?;
            BigRational::new(whole, scale)
        } else {
            if !digits(body) {
                return Err(invalid());
            }
            BigRational::from_integer(body.parse().map_err(|_| invalid())?)
        };
        Ok(Score(if negative { -value } else { value }))
    }
}

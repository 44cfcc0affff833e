use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Integer;
use crate::error::{domain, Error, Result};

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: Integer, denominator: Integer) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactRational(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer(value: Integer) -> Self {
        ExactRational(BigRational::from_integer(value))
    }

    pub fn from_i64(numerator: i64, denominator: i64) -> Result<Self> {
        Self::new(BigInt::from(numerator), BigInt::from(denominator))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numerator(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denominator(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Greatest integer not exceeding the value (rounds toward negative
    /// infinity for negative non-integers).
    pub fn floor(&self) -> Integer {
        self.numerator().div_floor(self.denominator())
    }
}

impl fmt::Display for ExactRational {
    /// Always `num/den`, including integers (`3/1`, `0/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional leading `-` on the numerator.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || domain(format!("not a rational number: {s:?}"));
        let parse_int = |t: &str| -> Result<Integer> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((n, d)) => {
                if d.starts_with('-') {
                    return Err(bad());
                }
                Self::new(parse_int(n)?, parse_int(d)?)
            }
            None => Ok(Self::from_integer(parse_int(s)?)),
        }
    }
}

impl From<Integer> for ExactRational {
    fn from(v: Integer) -> Self {
        Self::from_integer(v)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self::from_integer(BigInt::from(v))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_i64(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(0, -5).to_string(), "0/1");
        assert_eq!(ExactRational::from(7).to_string(), "7/1");
        assert_eq!(ExactRational::from_i64(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn floor_rounds_down() {
        assert_eq!(q(7, 2).floor(), BigInt::from(3));
        assert_eq!(q(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(q(-1, 3).floor(), BigInt::from(-1));
        assert_eq!(q(-4, 2).floor(), BigInt::from(-2));
    }

    #[test]
    fn parse() {
        assert_eq!("-1/6".parse::<ExactRational>().unwrap(), q(-1, 6));
        assert_eq!("12".parse::<ExactRational>().unwrap(), q(12, 1));
        assert!("1/-2".parse::<ExactRational>().is_err());
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("a/2".parse::<ExactRational>().is_err());
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_identity(
            p in -10_000i64..10_000, qd in 1i64..10_000,
            r in -10_000i64..10_000, s in 1i64..10_000,
        ) {
            let x = q(p, qd);
            let y = q(r, s);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            let g = num_integer::gcd(x.numerator().clone(), x.denominator().clone());
            prop_assert!(g.is_one());
            prop_assert!(x.denominator().is_positive());
        }
    }
}

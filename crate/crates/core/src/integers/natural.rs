use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Signed arbitrary-precision integer, used for Bezout coefficients and
/// matrix entries.
pub type Integer = BigInt;

/// A non-negative integer of unbounded size.
///
/// Arithmetic never wraps. Subtraction is only defined when the result is
/// non-negative: [`Natural::checked_sub`] reports underflow, the `-`
/// operator panics on it.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_integer(&self) -> Integer {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Converts a signed integer, failing on negative values.
    pub fn from_integer(value: &Integer) -> Result<Self> {
        value
            .to_biguint()
            .map(Natural)
            .ok_or_else(|| domain(format!("{value} is negative")))
    }

    pub fn checked_sub(&self, other: &Natural) -> Option<Natural> {
        if self.0 >= other.0 {
            Some(Natural(&self.0 - &other.0))
        } else {
            None
        }
    }

    pub fn pow(&self, exponent: u32) -> Natural {
        Natural(num_traits::pow(self.0.clone(), exponent as usize))
    }

    /// Quotient and remainder: the unique `(q, r)` with
    /// `self = divisor * q + r` and `0 <= r < divisor`.
    pub fn divmod(&self, divisor: &Natural) -> Result<(Natural, Natural)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        Ok((Natural(q), Natural(r)))
    }

    /// `divisor | self`. Zero divides only zero.
    pub fn is_multiple_of(&self, divisor: &Natural) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        (&self.0 % &divisor.0).is_zero()
    }

    /// Number of decimal digits; zero has one digit.
    pub fn decimal_digits(&self) -> u32 {
        self.0.to_str_radix(10).len() as u32
    }

    /// Greatest common divisor via the library routine; used where a gcd
    /// is needed as a side value rather than as the object of study.
    pub(crate) fn gcd_fast(&self, other: &Natural) -> Natural {
        Natural(self.0.gcd(&other.0))
    }

    pub fn sqrt_floor(&self) -> Natural {
        Natural(self.0.sqrt())
    }

    /// Number of trailing zero bits; `None` for zero.
    pub fn trailing_zeros(&self) -> Option<u64> {
        self.0.trailing_zeros()
    }

    pub(crate) fn shr(&self, bits: u64) -> Natural {
        Natural(&self.0 >> bits)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Natural {
    type Err = Error;

    /// Parses a plain decimal string (ASCII digits only, no sign).
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(domain(format!("not a natural number: {s:?}")));
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(Natural)
            .ok_or_else(|| domain(format!("not a natural number: {s:?}")))
    }
}

macro_rules! from_unsigned {
    ($($t:ty),*) => {$(
        impl From<$t> for Natural {
            fn from(v: $t) -> Self {
                Natural(BigUint::from(v))
            }
        }
    )*};
}
from_unsigned!(u8, u16, u32, u64, u128, usize);

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl From<Natural> for BigUint {
    fn from(v: Natural) -> Self {
        v.0
    }
}

impl PartialEq<u64> for Natural {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Natural> for &Natural {
            type Output = Natural;
            fn $method(self, rhs: &Natural) -> Natural {
                Natural($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Natural> for Natural {
            type Output = Natural;
            fn $method(self, rhs: Natural) -> Natural {
                Natural($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Natural> for Natural {
            type Output = Natural;
            fn $method(self, rhs: &Natural) -> Natural {
                Natural($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<u64> for &Natural {
            type Output = Natural;
            fn $method(self, rhs: u64) -> Natural {
                Natural($trait::$method(&self.0, rhs))
            }
        }
        impl $trait<u64> for Natural {
            type Output = Natural;
            fn $method(self, rhs: u64) -> Natural {
                Natural($trait::$method(self.0, rhs))
            }
        }
    };
}
binop!(Add, add);
binop!(Mul, mul);
// Panics on underflow, like `BigUint`.
binop!(Sub, sub);

impl AddAssign<&Natural> for Natural {
    fn add_assign(&mut self, rhs: &Natural) {
        self.0 += &rhs.0;
    }
}

impl MulAssign<&Natural> for Natural {
    fn mul_assign(&mut self, rhs: &Natural) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Self {
        iter.fold(Natural::zero(), |acc, x| acc + x)
    }
}

impl<'a> Product<&'a Natural> for Natural {
    fn product<I: Iterator<Item = &'a Natural>>(iter: I) -> Self {
        iter.fold(Natural::one(), |acc, x| acc * x)
    }
}

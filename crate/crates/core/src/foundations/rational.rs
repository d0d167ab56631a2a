use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact fraction over arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator, so `==` is
/// structural. Renders as `a/b`, or just `a` when the denominator is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms, carrying the sign on the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `1/2^exp`.
    pub fn inverse_power_of_two(exp: u32) -> Self {
        Rational(BigRational::new(
            BigInt::one(),
            BigInt::one() << exp as usize,
        ))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Re-reduces the stored fraction. A no-op on any value produced by this
    /// type; exists so callers can assert that.
    pub fn normalized(&self) -> Rational {
        Rational(BigRational::new(self.numer().clone(), self.denom().clone()))
    }

    /// Display-only decimal rendering, rounded half away from zero.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10u32), digits);
        let scaled = self.0.abs() * BigRational::from_integer(scale.clone());
        let half = BigRational::new(BigInt::one(), BigInt::from(2u32));
        let rounded = (scaled + half).floor().to_integer();
        let (int_part, frac_part) = rounded.div_rem(&scale);
        let sign = if self.is_negative() && !rounded.is_zero() {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part:0>digits$}")
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `a`, `-a`, `a/b` and `-a/b` with decimal digits only.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, d),
            None => (body, "1"),
        };
        if !digits(num) || !digits(den) {
            return Err(bad());
        }
        let num = BigUint::from_str(num).map_err(|_| bad())?;
        let den = BigUint::from_str(den).map_err(|_| bad())?;
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        Rational::new(BigInt::from_biguint(sign, num), BigInt::from(den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}

from_int!(i32, i64, u32, u64, usize, BigInt, BigUint);

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact rational power of `q`.
///
/// Always stored in lowest terms with a positive denominator, so equality and
/// hashing agree with rational equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QExponent(BigRational);

impl QExponent {
    pub fn zero() -> Self {
        QExponent(BigRational::zero())
    }

    pub fn one() -> Self {
        QExponent(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        QExponent(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in exponent");
        QExponent(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        QExponent(r)
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator in exponent");
        QExponent(BigRational::new(num, den))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// The exponent as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// `self * k` as an integer when `k` is a multiple of the denominator.
    pub(crate) fn scaled_by(&self, k: &BigInt) -> Option<BigInt> {
        let (q, r) = k.div_rem(self.0.denom());
        if r.is_zero() {
            Some(self.0.numer() * q)
        } else {
            None
        }
    }
}

impl Default for QExponent {
    fn default() -> Self {
        QExponent::zero()
    }
}

impl From<i64> for QExponent {
    fn from(n: i64) -> Self {
        QExponent::from_int(n)
    }
}

impl From<BigRational> for QExponent {
    fn from(r: BigRational) -> Self {
        QExponent(r)
    }
}

impl Add for &QExponent {
    type Output = QExponent;
    fn add(self, rhs: &QExponent) -> QExponent {
        QExponent(&self.0 + &rhs.0)
    }
}

impl Add for QExponent {
    type Output = QExponent;
    fn add(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 + rhs.0)
    }
}

impl Sub for &QExponent {
    type Output = QExponent;
    fn sub(self, rhs: &QExponent) -> QExponent {
        QExponent(&self.0 - &rhs.0)
    }
}

impl Sub for QExponent {
    type Output = QExponent;
    fn sub(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 - rhs.0)
    }
}

impl Neg for QExponent {
    type Output = QExponent;
    fn neg(self) -> QExponent {
        QExponent(-self.0)
    }
}

impl Neg for &QExponent {
    type Output = QExponent;
    fn neg(self) -> QExponent {
        QExponent(-&self.0)
    }
}

impl Mul<i64> for &QExponent {
    type Output = QExponent;
    fn mul(self, rhs: i64) -> QExponent {
        QExponent(&self.0 * BigRational::from_integer(BigInt::from(rhs)))
    }
}

impl fmt::Display for QExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for QExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid exponent `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(QExponent::from_big(n, d))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(QExponent(BigRational::from_integer(n)))
            }
        }
    }
}

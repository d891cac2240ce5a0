use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::exponent::QExponent;
use super::poly::QPoly;
use crate::error::{Error, Result};

/// A power series in `q` known exactly below `order`; everything at or above
/// `order` is unknown and not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    poly: QPoly,
    order: QExponent,
}

impl QSeries {
    /// Truncates `p` below `order`.
    pub fn from_poly(p: &QPoly, order: QExponent) -> Self {
        QSeries { poly: p.truncate(&order), order }
    }

    pub(crate) fn from_truncated(poly: QPoly, order: QExponent) -> Self {
        debug_assert!(poly.max_exponent().is_none_or(|e| e < &order));
        QSeries { poly, order }
    }

    pub fn zero(order: QExponent) -> Self {
        QSeries { poly: QPoly::zero(), order }
    }

    pub fn one(order: QExponent) -> Self {
        QSeries::from_poly(&QPoly::one(), order)
    }

    pub fn order(&self) -> &QExponent {
        &self.order
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn into_poly(self) -> QPoly {
        self.poly
    }

    pub fn coeff(&self, e: &QExponent) -> BigInt {
        self.poly.coeff(e)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowers the truncation order (never raises it).
    pub fn truncate(&self, order: &QExponent) -> QSeries {
        if order >= &self.order {
            return self.clone();
        }
        QSeries::from_poly(&self.poly, order.clone())
    }

    /// Multiplies by `q^r`; the known window moves with it.
    pub fn shift(&self, r: &QExponent) -> QSeries {
        QSeries { poly: self.poly.shift(r), order: &self.order + r }
    }

    pub fn scale(&self, k: &BigInt) -> QSeries {
        QSeries { poly: self.poly.scale(k), order: self.order.clone() }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order.clone().min(other.order.clone());
        QSeries::from_poly(&(&self.poly + &other.poly), order)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let order = self.order.clone().min(other.order.clone());
        QSeries::from_poly(&(&self.poly - &other.poly), order)
    }

    /// Truncated product. Both operands must be power series (no negative
    /// exponents) for the result window to be exact; for Laurent operands the
    /// known window shrinks by the lowest exponent of the other factor.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let low_a = self.poly.min_exponent().unwrap_or(&self.order);
        let low_b = other.poly.min_exponent().unwrap_or(&other.order);
        let order = self
            .order
            .clone()
            .min(other.order.clone())
            .min(&self.order + low_b)
            .min(&other.order + low_a);
        QSeries { poly: self.poly.mul_below(&other.poly, Some(&order)), order }
    }

    /// Multiplies by an exact polynomial.
    pub fn mul_poly(&self, p: &QPoly) -> QSeries {
        let order = match p.min_exponent() {
            Some(m) => &self.order + m,
            None => self.order.clone(),
        };
        QSeries { poly: self.poly.mul_below(p, Some(&order)), order }
    }

    /// Multiplicative inverse up to the truncation order. The series must be a
    /// power series whose constant term is `+1` or `-1`.
    pub fn inverse(&self) -> Result<QSeries> {
        if !self.order.is_positive() {
            return Ok(QSeries::zero(self.order.clone()));
        }
        if let Some(e) = self.poly.min_exponent() {
            if e.is_negative() {
                return Err(Error::NotAPowerSeries(e.to_string()));
            }
        }
        let a0 = self.poly.coeff(&QExponent::zero());
        if !(a0.is_one() || a0 == BigInt::from(-1)) {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut den = BigInt::one();
        for (e, _) in self.poly.terms() {
            den = den.lcm(e.denom());
        }
        let n_big = self.order.scaled_ceil(&den);
        let n = n_big.to_usize().ok_or_else(|| Error::InvalidArgument("series order too large".into()))?;
        let mut a: Vec<(usize, BigInt)> = Vec::new();
        for (e, c) in self.poly.terms() {
            let k = e.scaled_by(&den).and_then(|k| k.to_usize()).expect("denominator divides");
            if k > 0 && k < n {
                a.push((k, c.clone()));
            }
        }
        let mut b = vec![BigInt::zero(); n];
        if n > 0 {
            b[0] = a0.clone();
        }
        for i in 1..n {
            let mut acc = BigInt::zero();
            for (k, c) in &a {
                if *k > i {
                    break;
                }
                acc += c * &b[i - k];
            }
            b[i] = -(&a0 * acc);
        }
        let den_i = den.to_i64();
        let poly = QPoly::from_terms(b.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
            |(i, c)| {
                let e = match den_i {
                    Some(d) => QExponent::new(i as i64, d),
                    None => QExponent::from_big(BigInt::from(i), den.clone()),
                };
                (e, c)
            },
        ));
        Ok(QSeries::from_poly(&poly, self.order.clone()))
    }

    /// Compares the two series on their common known window.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let order = self.order.clone().min(other.order.clone());
        self.poly.truncate(&order) == other.poly.truncate(&order)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.poly.has_nonnegative_coeffs()
    }
}

impl QExponent {
    /// `ceil(self * k)` for a multiplier `k` that clears the denominator or not.
    pub(crate) fn scaled_ceil(&self, k: &BigInt) -> BigInt {
        let num = self.numer() * k;
        let (q, r) = num.div_mod_floor(self.denom());
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }
}

/// `(a; q^step)_n` with `a = sign * q^a_exponent`, i.e. the product of
/// `1 - sign * q^(a_exponent + j*step)` for `0 <= j < n`, truncated below
/// `order`. `n = None` means the infinite product.
pub fn pochhammer(
    a_exponent: &QExponent,
    a_sign: i8,
    step: &QExponent,
    n: Option<u64>,
    order: &QExponent,
) -> Result<QSeries> {
    if a_sign != 1 && a_sign != -1 {
        return Err(Error::InvalidArgument(format!("pochhammer sign must be +1 or -1, got {a_sign}")));
    }
    let factor = |e: QExponent| {
        let mut f = QPoly::one();
        f.add_term(e, BigInt::from(-a_sign));
        f
    };
    match n {
        None => {
            if !step.is_positive() || !a_exponent.is_positive() {
                return Err(Error::DivergentProduct(format!(
                    "infinite product needs positive base exponent and step, got a={a_exponent}, step={step}"
                )));
            }
            let mut acc = QSeries::one(order.clone());
            let mut e = a_exponent.clone();
            while &e < order {
                acc = acc.mul_poly(&factor(e.clone()));
                e = &e + step;
            }
            Ok(acc)
        }
        Some(n) => {
            let exps: Vec<QExponent> = (0..n).map(|j| a_exponent + &(step * j as i64)).collect();
            if exps.iter().all(|e| !e.is_negative()) {
                let mut acc = QSeries::one(order.clone());
                for e in exps {
                    if &e < order {
                        acc = acc.mul_poly(&factor(e));
                    }
                }
                Ok(acc)
            } else {
                let mut acc = QPoly::one();
                for e in exps {
                    acc = acc.mul(&factor(e));
                }
                Ok(QSeries::from_poly(&acc, order.clone()))
            }
        }
    }
}

/// `(q; q)_n` as an exact polynomial.
pub fn q_pochhammer_poly(n: u64) -> QPoly {
    let mut acc = QPoly::one();
    for j in 1..=n {
        let mut f = QPoly::one();
        f.add_term(QExponent::from_int(j as i64), BigInt::from(-1));
        acc = acc.mul(&f);
    }
    acc
}

/// `1/(q)_n` truncated below `order` (`n = None` for `1/(q)_∞`).
pub fn inverse_q_pochhammer(n: Option<u64>, order: &QExponent) -> QSeries {
    let one = QExponent::one();
    pochhammer(&one, 1, &one, n, order)
        .and_then(|s| s.inverse())
        .expect("(q)_n has unit constant term")
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { poly: -&self.poly, order: self.order.clone() }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            write!(f, "O(")?;
        } else {
            write!(f, "{} + O(", self.poly)?;
        }
        if self.order.is_integer() {
            write!(f, "q^{})", self.order)
        } else {
            write!(f, "q^({}))", self.order)
        }
    }
}

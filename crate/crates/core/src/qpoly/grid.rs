//! Dense truncated series on the lattice `q^{t/den}`, `0 <= t < len`.
//!
//! Used to accumulate sums of `q^e / (q)_n`-type terms, where multiplying by
//! `1/(1 - q^i)` becomes a strided prefix sum.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::dense::IntPoly;
use super::exponent::QExponent;
use super::poly::QPoly;
use super::series::QSeries;

#[derive(Clone, Debug)]
pub(crate) struct GridSeries {
    den: i64,
    order: QExponent,
    c: Vec<BigInt>,
}

impl GridSeries {
    /// Series truncated at `order`; exponents must be multiples of `1/den`.
    pub(crate) fn zero(den: i64, order: &QExponent) -> Self {
        let len = order.scaled_ceil_i64(den).max(0) as usize;
        GridSeries { den, order: order.clone(), c: vec![BigInt::zero(); len] }
    }

    pub(crate) fn len(&self) -> usize {
        self.c.len()
    }

    /// Lattice index of `e`, which must be a multiple of `1/den`.
    pub(crate) fn index(&self, e: &QExponent) -> i64 {
        e.scaled_exact_i64(self.den).expect("exponent off the series lattice")
    }

    /// A copy of `self` holding the single term `coeff q^e`.
    pub(crate) fn monomial_like(&self, t: i64, coeff: BigInt) -> Self {
        let mut out = GridSeries { den: self.den, order: self.order.clone(), c: vec![BigInt::zero(); self.c.len()] };
        if t >= 0 && (t as usize) < out.c.len() {
            out.c[t as usize] = coeff;
        }
        out
    }

    /// Multiplies by `1 / (1 - q^i)`, `i >= 1` integer.
    pub(crate) fn div_one_minus(&mut self, i: i64) {
        let step = (i * self.den) as usize;
        for t in step..self.c.len() {
            let (lo, hi) = self.c.split_at_mut(t);
            hi[0] += &lo[t - step];
        }
    }

    /// Multiplies by `1 / (q)_n`.
    pub(crate) fn div_pochhammer(&mut self, n: i64) {
        for i in 1..=n {
            if (i * self.den) as usize >= self.c.len() {
                break;
            }
            self.div_one_minus(i);
        }
    }

    /// Multiplies by an integer polynomial in `q`.
    pub(crate) fn mul_int_poly(&mut self, p: &IntPoly) {
        if p.coeffs.len() == 1 && p.coeffs[0] == BigInt::from(1) {
            return;
        }
        let mut out = vec![BigInt::zero(); self.c.len()];
        for (t, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in p.coeffs.iter().enumerate() {
                let u = t + j * self.den as usize;
                if u >= out.len() {
                    break;
                }
                if !y.is_zero() {
                    out[u] += x * y;
                }
            }
        }
        self.c = out;
    }

    /// Multiplies by a polynomial whose exponents lie on the lattice.
    pub(crate) fn mul_qpoly(&mut self, p: &QPoly) {
        let mut out = vec![BigInt::zero(); self.c.len()];
        let shifts: Vec<(i64, &BigInt)> = p.terms().map(|(e, c)| (self.index(e), c)).collect();
        for (t, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(s, y) in &shifts {
                let u = t as i64 + s;
                if u >= 0 && (u as usize) < out.len() {
                    out[u as usize] += x * y;
                }
            }
        }
        self.c = out;
    }

    pub(crate) fn add_at(&mut self, t: i64, coeff: &BigInt) {
        if t >= 0 && (t as usize) < self.c.len() {
            self.c[t as usize] += coeff;
        }
    }

    /// Adds the lattice terms of `p` that fall below the order.
    pub(crate) fn add_qpoly(&mut self, p: &QPoly) {
        for (e, c) in p.terms() {
            let t = self.index(e);
            self.add_at(t, c);
        }
    }

    /// `self += coeff * q^{t/den} * other`.
    pub(crate) fn add_shifted_scaled(&mut self, other: &GridSeries, t: i64, coeff: &BigInt) {
        assert_eq!(self.den, other.den);
        for (u, x) in other.c.iter().enumerate() {
            let v = u as i64 + t;
            if v < 0 || x.is_zero() {
                continue;
            }
            if v as usize >= self.c.len() {
                break;
            }
            self.c[v as usize] += coeff * x;
        }
    }

    pub(crate) fn add_assign(&mut self, other: &GridSeries) {
        assert_eq!(self.den, other.den);
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            *a += b;
        }
    }

    pub(crate) fn into_series(self) -> QSeries {
        let den = self.den;
        let poly = QPoly::from_terms(
            self.c
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| (QExponent::new(t as i64, den), c)),
        );
        QSeries::from_truncated(poly, self.order)
    }
}

impl QExponent {
    pub(crate) fn scaled_ceil_i64(&self, k: i64) -> i64 {
        let r = self.as_ratio() * BigInt::from(k);
        r.ceil().to_integer().to_i64().expect("truncation order out of range")
    }

    fn scaled_exact_i64(&self, k: i64) -> Option<i64> {
        let r = self.as_ratio() * BigInt::from(k);
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }
}

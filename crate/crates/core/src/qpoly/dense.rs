//! Integer-exponent convolution kernels shared by the sparse types.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::exponent::QExponent;
use super::poly::QPoly;

/// Convolves two sparse integer-exponent term lists (each sorted by exponent),
/// keeping only exponents `< limit` when a limit is given. Output is sorted and
/// free of zero coefficients.
pub(crate) fn convolve(
    a: &[(i64, BigInt)],
    b: &[(i64, BigInt)],
    limit: Option<i64>,
) -> Vec<(i64, BigInt)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let lo = a[0].0 + b[0].0;
    if limit.is_some_and(|l| lo >= l) {
        return Vec::new();
    }
    let mut hi = a[a.len() - 1].0 + b[b.len() - 1].0;
    if let Some(l) = limit {
        hi = hi.min(l - 1);
    }
    let span = (hi - lo + 1) as u128;
    let work = (a.len() as u128) * (b.len() as u128);
    let dense = span <= 4 * work + 1024;

    if fits_i128(a, b) {
        let a64: Vec<(i64, i128)> = a.iter().map(|(e, c)| (*e, c.to_i128().unwrap())).collect();
        let b64: Vec<(i64, i128)> = b.iter().map(|(e, c)| (*e, c.to_i128().unwrap())).collect();
        if dense {
            let mut acc = vec![0i128; span as usize];
            for &(ea, ca) in &a64 {
                for &(eb, cb) in &b64 {
                    let e = ea + eb;
                    if e > hi {
                        break;
                    }
                    acc[(e - lo) as usize] += ca * cb;
                }
            }
            acc.into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (lo + i as i64, BigInt::from(c)))
                .collect()
        } else {
            let mut acc: BTreeMap<i64, i128> = BTreeMap::new();
            for &(ea, ca) in &a64 {
                for &(eb, cb) in &b64 {
                    let e = ea + eb;
                    if e > hi {
                        break;
                    }
                    *acc.entry(e).or_insert(0) += ca * cb;
                }
            }
            acc.into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect()
        }
    } else if dense {
        let mut acc = vec![BigInt::zero(); span as usize];
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = ea + eb;
                if e > hi {
                    break;
                }
                acc[(e - lo) as usize] += ca * cb;
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect()
    } else {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = ea + eb;
                if e > hi {
                    break;
                }
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn max_bits(v: &[(i64, BigInt)]) -> u64 {
    v.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
}

fn fits_i128(a: &[(i64, BigInt)], b: &[(i64, BigInt)]) -> bool {
    let n = a.len().min(b.len()) as u64;
    let count_bits = 64 - n.leading_zeros() as u64;
    max_bits(a) + max_bits(b) + count_bits <= 125
}

/// Dense integer polynomial `c_0 + c_1 q + ...`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub(crate) coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub(crate) fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub(crate) fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::from(1)] }
    }

    pub(crate) fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn sparse(&self) -> Vec<(i64, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c.clone()))
            .collect()
    }

    pub(crate) fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let terms = convolve(&self.sparse(), &other.sparse(), None);
        let len = terms.last().map(|(e, _)| *e as usize + 1).unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); len];
        for (e, c) in terms {
            coeffs[e as usize] = c;
        }
        IntPoly { coeffs }
    }

    /// `self += sign * q^shift * other`.
    pub(crate) fn add_shifted(&mut self, other: &IntPoly, shift: usize, negate: bool) {
        if other.is_zero() {
            return;
        }
        let need = shift + other.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[shift + i] -= c;
            } else {
                self.coeffs[shift + i] += c;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

/// Accumulator for sums of `± q^e p(q)` with rational `e` and integer
/// polynomials `p`, kept dense per fractional part of `e`.
#[derive(Default)]
pub(crate) struct Grouped {
    classes: HashMap<QExponent, (i64, IntPoly)>,
}

impl Grouped {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, e: &QExponent, p: &IntPoly, negate: bool) {
        if p.is_zero() {
            return;
        }
        let fl = e.floor();
        let frac = e - &QExponent::from_big(fl.clone(), BigInt::from(1));
        let shift = fl.to_i64().expect("exponent out of range");
        let (base, acc) = self.classes.entry(frac).or_insert_with(|| (shift, IntPoly::zero()));
        if shift < *base {
            let mut rebased = IntPoly::zero();
            rebased.add_shifted(acc, (*base - shift) as usize, false);
            *acc = rebased;
            *base = shift;
        }
        acc.add_shifted(p, (shift - *base) as usize, negate);
    }

    pub(crate) fn into_poly(self) -> QPoly {
        let mut out = QPoly::zero();
        for (frac, (base, p)) in self.classes {
            out += QPoly::from_int_poly(&p, &(&frac + &QExponent::from_int(base)));
        }
        out
    }
}

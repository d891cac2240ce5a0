use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense::{convolve, IntPoly};
use super::exponent::QExponent;

/// Sparse Laurent polynomial in `q` with rational exponents and big-integer
/// coefficients. No stored coefficient is zero; the empty map is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QPoly {
    terms: BTreeMap<QExponent, BigInt>,
}

const SCALE_LIMIT: i64 = 1 << 60;

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(BigInt::one(), QExponent::zero())
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: QExponent) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        QPoly { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: QExponent) -> Self {
        QPoly::monomial(BigInt::one(), exp)
    }

    /// Builds from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (QExponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = QPoly::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense integer coefficients, `coeffs[i]` multiplying `q^i`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        QPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (QExponent::from_int(i as i64), c.clone().into())),
        )
    }

    pub(crate) fn from_int_poly(p: &IntPoly, base: &QExponent) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(base + &QExponent::from_int(i as i64), c.clone());
            }
        }
        QPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&QExponent, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &QExponent) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exponent(&self) -> Option<&QExponent> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&QExponent> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, exp: QExponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled_ref(&mut self, other: &QPoly, negate: bool) {
        for (e, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            self.add_term(e.clone(), c);
        }
    }

    pub fn scale(&self, k: &BigInt) -> QPoly {
        if k.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by `q^r`.
    pub fn shift(&self, r: &QExponent) -> QPoly {
        if r.is_zero() {
            return self.clone();
        }
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (e + r, c.clone())).collect(),
        }
    }

    /// `p(1/q)`: every exponent negated.
    pub fn substitute_qinv(&self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, the sum of all coefficients.
    pub fn eval_q1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Keeps the terms with exponent strictly below `order`.
    pub fn truncate(&self, order: &QExponent) -> QPoly {
        QPoly {
            terms: self
                .terms
                .range(..order.clone())
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Divides every coefficient by `k`; `None` unless all divisions are exact.
    pub fn div_exact_int(&self, k: &BigInt) -> Option<QPoly> {
        if k.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.insert(e.clone(), q);
        }
        Some(QPoly { terms })
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        self.mul_below(other, None)
    }

    /// Product restricted to exponents `< cutoff`.
    pub fn mul_below(&self, other: &QPoly, cutoff: Option<&QExponent>) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        if let Some(p) = self.mul_scaled(other, cutoff) {
            return p;
        }
        let mut out = QPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if cutoff.is_some_and(|c| &e >= c) {
                    break;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Exact product via a common denominator and an integer kernel. Returns
    /// `None` if the scaled exponents would not fit in machine integers.
    fn mul_scaled(&self, other: &QPoly, cutoff: Option<&QExponent>) -> Option<QPoly> {
        let mut den = BigInt::one();
        for e in self.terms.keys().chain(other.terms.keys()).chain(cutoff) {
            if !e.denom().is_one() {
                den = den.lcm(e.denom());
            }
        }
        let den_i = den.to_i64()?;
        let scale = |p: &QPoly| -> Option<Vec<(i64, BigInt)>> {
            p.terms
                .iter()
                .map(|(e, c)| {
                    let k = if den_i == 1 { e.numer().to_i64()? } else { e.scaled_by(&den)?.to_i64()? };
                    (k.abs() < SCALE_LIMIT).then(|| (k, c.clone()))
                })
                .collect()
        };
        let a = scale(self)?;
        let b = scale(other)?;
        let limit = match cutoff {
            Some(c) => {
                // e < c  <=>  e*den < c*den  <=>  e*den < ceil(c*den) for integral e*den
                let l = c.scaled_by(&den)?.to_i64()?;
                if l.abs() >= SCALE_LIMIT {
                    return None;
                }
                Some(l)
            }
            None => None,
        };
        let prod = convolve(&a, &b, limit);
        let terms = prod
            .into_iter()
            .map(|(k, c)| {
                let e = if den_i == 1 { QExponent::from_int(k) } else { QExponent::new(k, den_i) };
                (e, c)
            })
            .collect();
        Some(QPoly { terms })
    }

    pub fn pow(&self, n: u32) -> QPoly {
        let mut out = QPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_scaled_ref(rhs, false);
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_scaled_ref(rhs, false);
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_scaled_ref(rhs, true);
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.add_scaled_ref(rhs, true);
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -(self.clone())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        QPoly::mul(self, rhs)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::monomial(c, QExponent::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((&p("1 + q") + &p("-1 - q")).is_zero());
        let x = p("3 - 2*q^(1/2) + q^7");
        assert_eq!(&x + &QPoly::zero(), x);
        assert_eq!(&p("1 + q") + &p("q + q^2"), p("1 + 2*q + q^2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("1 + q") * &p("1 + q"), p("1 + 2*q + q^2"));
        let h = QPoly::q_pow(QExponent::new(1, 2));
        assert_eq!(&h * &h, p("q"));
        let x = p("-4*q^(-1/3) + q^(5/6)");
        assert_eq!(&x * &QPoly::one(), x);
    }

    #[test]
    fn mul_below_truncates() {
        let a = p("1 + q + q^2");
        assert_eq!(a.mul_below(&a, Some(&QExponent::from_int(2))), p("1 + 2*q"));
        let b = p("q^(1/2) + q^(3/2)");
        assert_eq!(b.mul_below(&b, Some(&QExponent::new(5, 2))), p("q + 2*q^2"));
    }

    #[test]
    fn huge_denominators_fall_back_to_generic_path() {
        let den = BigInt::from(10u64).pow(30);
        let e = QExponent::from_big(BigInt::one(), den.clone());
        let a = QPoly::q_pow(e.clone()) + QPoly::one();
        let sq = &a * &a;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&(&e + &e)), BigInt::one());
        assert_eq!(sq.coeff(&e), BigInt::from(2));
    }

    #[test]
    fn substitution_and_shift() {
        assert_eq!(p("1 + q").substitute_qinv(), p("q^-1 + 1"));
        assert!(QPoly::zero().substitute_qinv().is_zero());
        let half = QExponent::new(1, 2);
        assert_eq!(p("1 + q").shift(&half), p("q^(1/2) + q^(3/2)"));
        let x = p("2 - q^(4/3)");
        assert_eq!(x.shift(&QExponent::zero()), x);
        assert_eq!(x.shift(&half).shift(&-&half), x);
    }

    #[test]
    fn eval_at_one() {
        assert_eq!(QPoly::zero().eval_q1(), BigInt::zero());
        assert_eq!(p("1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6").eval_q1(), BigInt::from(10));
    }

    #[test]
    fn exact_integer_division() {
        assert_eq!(p("2 + 4*q").div_exact_int(&BigInt::from(2)), Some(p("1 + 2*q")));
        assert_eq!(p("2 + 3*q").div_exact_int(&BigInt::from(2)), None);
    }
}

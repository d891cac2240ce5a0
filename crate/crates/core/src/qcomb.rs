//! Gaussian polynomials, the two q-trinomial coefficients, and the refined
//! four-parameter coefficient `𝒯(L, M, a, b)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qpoly::dense::IntPoly;
use crate::qpoly::{QExponent, QPoly};

type GaussCache = RwLock<HashMap<(u32, u32), Arc<IntPoly>>>;

fn gauss_cache() -> &'static GaussCache {
    static CACHE: OnceLock<GaussCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `[n, k]` as a dense integer polynomial, zero outside `0 <= k <= n`.
pub(crate) fn gauss(n: i64, k: i64) -> Arc<IntPoly> {
    if k < 0 || n < 0 || k > n {
        return Arc::new(IntPoly::zero());
    }
    let k = k.min(n - k);
    let key = (n as u32, k as u32);
    if let Some(p) = gauss_cache().read().unwrap().get(&key) {
        return Arc::clone(p);
    }
    let p = Arc::new(gauss_uncached(n as usize, k as usize));
    gauss_cache().write().unwrap().entry(key).or_insert_with(|| Arc::clone(&p));
    p
}

// prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i), each division exact
fn gauss_uncached(n: usize, k: usize) -> IntPoly {
    let deg = k * (n - k);
    let mut c = vec![BigInt::zero(); deg + n + 1];
    c[0] = BigInt::from(1);
    let mut top = 0usize;
    for i in 1..=k {
        let s = n - k + i;
        for j in (s..=top + s).rev() {
            let t = c[j - s].clone();
            c[j] -= t;
        }
        top += s;
        for j in i..=top {
            let t = c[j - i].clone();
            c[j] += t;
        }
        top -= i;
    }
    c.truncate(deg + 1);
    IntPoly::from_coeffs(c)
}

/// Gaussian polynomial `[n, a] = (q)_n / ((q)_a (q)_{n-a})`, or zero unless
/// `0 <= a <= n`.
pub fn qbinomial(n: i64, a: i64) -> QPoly {
    QPoly::from_int_poly(&gauss(n, a), &QExponent::zero())
}

/// `prod_j [m_j + n_j, n_j]`.
pub fn qbinomial_vector(m: &[i64], n: &[i64]) -> Result<QPoly> {
    Ok(QPoly::from_int_poly(&qbinomial_vector_dense(m, n)?, &QExponent::zero()))
}

pub(crate) fn qbinomial_vector_dense(m: &[i64], n: &[i64]) -> Result<IntPoly> {
    if m.len() != n.len() {
        return Err(Error::DimensionMismatch { expected: m.len(), got: n.len() });
    }
    let mut acc = IntPoly::one();
    for (&mj, &nj) in m.iter().zip(n) {
        let g = gauss(mj + nj, nj);
        if g.is_zero() {
            return Ok(IntPoly::zero());
        }
        if g.degree() > 0 {
            acc = acc.mul(&g);
        }
    }
    Ok(acc)
}

/// The round-bracket q-trinomial `sum_k q^{k(k+a)} [L, k] [L-k, k+a]`.
pub fn qtrinomial2(l: i64, a: i64) -> QPoly {
    QPoly::from_int_poly(&qtrinomial2_dense(l, a), &QExponent::zero())
}

fn qtrinomial2_dense(l: i64, a: i64) -> IntPoly {
    let mut acc = IntPoly::zero();
    if l < 0 || a.abs() > l {
        return acc;
    }
    for k in 0.max(-a)..=l {
        let t = gauss(l, k).mul(&gauss(l - k, k + a));
        acc.add_shifted(&t, (k * (k + a)) as usize, false);
    }
    acc
}

/// `T(L, a)` from the parity-restricted explicit sum
/// `sum_n q^{n^2/2} (q)_L / ((q)_{(L-a-n)/2} (q)_{(L+a-n)/2} (q)_n)`.
pub fn qtrinomial_t_explicit(l: i64, a: i64) -> QPoly {
    if l < 0 || a.abs() > l {
        return QPoly::zero();
    }
    let parity = (l + a).rem_euclid(2);
    let mut acc = IntPoly::zero();
    let mut n = parity;
    while n <= l - a.abs() {
        let t = gauss(l, n).mul(&gauss(l - n, (l - a - n) / 2));
        acc.add_shifted(&t, ((n * n - parity) / 2) as usize, false);
        n += 2;
    }
    QPoly::from_int_poly(&acc, &QExponent::new(parity, 2))
}

/// `T(L, a) = q^{(L-a)(L+a)/2} (L; a)_2` evaluated at `1/q`.
pub fn qtrinomial_t_via_round(l: i64, a: i64) -> QPoly {
    qtrinomial2(l, a).substitute_qinv().shift(&QExponent::new((l - a) * (l + a), 2))
}

/// `T(L, a)`. Debug builds cross-check the two constructions.
pub fn qtrinomial_t(l: i64, a: i64) -> QPoly {
    let t = qtrinomial_t_explicit(l, a);
    debug_assert_eq!(t, qtrinomial_t_via_round(l, a), "T({l},{a}) routes disagree");
    t
}

/// Arguments of the refined coefficient `𝒯(L, M, a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RefinedArgs {
    pub l: i64,
    pub m: i64,
    pub a: i64,
    pub b: i64,
}

impl RefinedArgs {
    pub fn new(l: i64, m: i64, a: i64, b: i64) -> Self {
        RefinedArgs { l, m, a, b }
    }

    /// True when the defining sum is empty by the bounds `|a| <= L`, `|b| <= M`.
    pub fn trivially_zero(&self) -> bool {
        self.a.abs() > self.l || self.b.abs() > self.m
    }
}

impl fmt::Display for RefinedArgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.l, self.m, self.a, self.b)
    }
}

/// Refined q-trinomial coefficient
///
/// `𝒯(L,M,a,b) = sum_{n=0, n+a+L even}^{min(L-|a|, M)} q^{n^2/2} [M, n]
///   [M+b+(L-a-n)/2, M+b] [M-b+(L+a-n)/2, M-b]`.
///
/// All terms share the fractional exponent `((L+a) mod 2)/2`, so the sum is
/// built densely and shifted once.
pub fn refined_t(args: RefinedArgs) -> QPoly {
    let RefinedArgs { l, m, a, b } = args;
    match refined_t_dense(l, m, a, b) {
        Some((base, p)) => QPoly::from_int_poly(&p, &base),
        None => QPoly::zero(),
    }
}

pub(crate) fn refined_t_dense(l: i64, m: i64, a: i64, b: i64) -> Option<(QExponent, IntPoly)> {
    if l < 0 || m < 0 || a.abs() > l || b.abs() > m {
        return None;
    }
    let parity = (l + a).rem_euclid(2);
    let mut acc = IntPoly::zero();
    let mut n = parity;
    let top = (l - a.abs()).min(m);
    while n <= top {
        assert!((l - a - n) % 2 == 0 && (l + a - n) % 2 == 0, "half-integer index in 𝒯");
        let g1 = gauss(m, n);
        let g2 = gauss(m + b + (l - a - n) / 2, m + b);
        let g3 = gauss(m - b + (l + a - n) / 2, m - b);
        if !g1.is_zero() && !g2.is_zero() && !g3.is_zero() {
            let t = g1.mul(&g2).mul(&g3);
            acc.add_shifted(&t, ((n * n - parity) / 2) as usize, false);
        }
        n += 2;
    }
    if acc.is_zero() {
        None
    } else {
        Some((QExponent::new(parity, 2), acc))
    }
}

/// Executable duality: `𝒯(1/q) == q^{ab-ML} 𝒯(q)`.
pub fn refined_t_dual_check(args: RefinedArgs) -> bool {
    let t = refined_t(args);
    t.substitute_qinv() == t.shift(&QExponent::from_int(args.a * args.b - args.m * args.l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    // Independent oracle: exact long division of (q)_n by (q)_a (q)_{n-a}.
    fn pochhammer_dense(n: i64) -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for j in 1..=n as usize {
            let mut next = vec![BigInt::zero(); c.len() + j];
            for (i, x) in c.iter().enumerate() {
                next[i] += x;
                next[i + j] -= x;
            }
            c = next;
        }
        c
    }

    fn div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
        assert!(den[0].is_one());
        let mut rem = num.to_vec();
        let qlen = num.len() - den.len() + 1;
        let mut quo = vec![BigInt::zero(); qlen];
        for i in 0..qlen {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quo[i] = c;
        }
        assert!(rem.iter().all(|x| x.is_zero()), "inexact division");
        quo
    }

    fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn oracle_qbinomial(n: i64, a: i64) -> QPoly {
        let den = mul_dense(&pochhammer_dense(a), &pochhammer_dense(n - a));
        QPoly::from_coeffs(&div_exact(&pochhammer_dense(n), &den))
    }

    #[test]
    fn qbinomial_matches_pochhammer_quotient() {
        for n in 0..=14 {
            for a in 0..=n {
                assert_eq!(qbinomial(n, a), oracle_qbinomial(n, a), "[{n},{a}]");
            }
        }
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(2, 1), p("1 + q"));
        assert!(qbinomial(3, -1).is_zero());
        assert!(qbinomial(3, 4).is_zero());
        assert!(qbinomial(-1, 0).is_zero());
        for n in 0..6 {
            assert_eq!(qbinomial(n, 0), QPoly::one());
        }
    }

    #[test]
    fn qbinomial_vector_examples() {
        assert_eq!(qbinomial_vector(&[0, 0, 0], &[0, 0, 0]).unwrap(), QPoly::one());
        assert_eq!(qbinomial_vector(&[1], &[1]).unwrap(), qbinomial(2, 1));
        assert!(qbinomial_vector(&[-3, 1], &[1, 1]).unwrap().is_zero());
        assert_eq!(
            qbinomial_vector(&[1, 2], &[1]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
        assert_eq!(qbinomial_vector(&[2, 1], &[1, 2]).unwrap(), &qbinomial(3, 1) * &qbinomial(3, 2));
    }

    #[test]
    fn round_trinomial_examples() {
        assert_eq!(qtrinomial2(2, 0).eval_q1(), BigInt::from(3));
        assert_eq!(qtrinomial2(3, 0).eval_q1(), BigInt::from(7));
        assert_eq!(qtrinomial2(4, 3), qtrinomial2(4, -3));
        assert!(qtrinomial2(3, 4).is_zero());
        // row sums of the generalized Pascal triangle: 3^L
        for l in 0..7 {
            let s: BigInt = (-l..=l).map(|a| qtrinomial2(l, a).eval_q1()).sum();
            assert_eq!(s, BigInt::from(3i64.pow(l as u32)));
        }
    }

    #[test]
    fn t_examples() {
        assert_eq!(qtrinomial_t(4, 2), p("1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6"));
        assert_eq!(qtrinomial_t(5, 2), qtrinomial_t(5, -2));
        assert!(qtrinomial_t(3, 5).is_zero());
    }

    #[test]
    fn t_routes_agree() {
        for l in 0..=10 {
            for a in -l..=l {
                assert_eq!(qtrinomial_t_explicit(l, a), qtrinomial_t_via_round(l, a), "T({l},{a})");
            }
        }
    }

    #[test]
    fn refined_examples() {
        assert_eq!(refined_t(RefinedArgs::new(2, 2, 2, 0)), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(refined_t(RefinedArgs::new(1, 3, 1, 1)), p("1 + q + q^2"));
        assert_eq!(refined_t(RefinedArgs::new(0, 4, 0, 2)), QPoly::one());
        assert!(refined_t(RefinedArgs::new(5, 2, 6, 0)).is_zero());
        assert!(refined_t(RefinedArgs::new(3, 1, 0, 2)).is_zero());
    }

    #[test]
    fn duality_examples() {
        for (l, m, a, b) in [(4, 0, 2, 0), (2, 2, 2, 0), (3, 2, 1, 1)] {
            assert!(refined_t_dual_check(RefinedArgs::new(l, m, a, b)));
        }
        // 𝒯(3,2,1,1): q^{ab-ML} = q^{-5}
        let t = refined_t(RefinedArgs::new(3, 2, 1, 1));
        assert_eq!(t.substitute_qinv(), t.shift(&QExponent::from_int(-5)));
    }
}

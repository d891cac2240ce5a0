//! Bosonic sides: alternating theta sums of refined trinomials, Virasoro
//! characters, level-1 string functions and branching functions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fermionic::{Conjecture, FSumFamily, KFamily, KSeriesArgs, XFamily};
use crate::qcomb::{gauss, qbinomial, qtrinomial2, qtrinomial_t, refined_t, refined_t_dense, RefinedArgs};
use crate::qpoly::dense::Grouped;
use crate::qpoly::grid::GridSeries;
use crate::qpoly::{inverse_q_pochhammer, pochhammer, QExponent, QPoly, QSeries};

/// One alternating term `sign q^{(c2 j^2 + c1 j + c0)/2} 𝒯(L, M, a(j), b(j))`
/// with `a(j) = a.0 j + a.1` and `b(j) = b.0 j + b.1`.
#[derive(Clone, Copy, Debug)]
pub struct ThetaTerm {
    pub negate: bool,
    pub twice_exponent: [i64; 3],
    pub a: (i64, i64),
    pub b: (i64, i64),
}

impl ThetaTerm {
    fn exponent(&self, j: i64) -> QExponent {
        let [c2, c1, c0] = self.twice_exponent;
        QExponent::new(c2 * j * j + c1 * j + c0, 2)
    }

    /// Smallest interval of `j` outside which `|b(j)| > M`.
    fn j_range(&self, m: i64) -> (i64, i64) {
        let (b1, b0) = self.b;
        assert!(b1 > 0, "theta terms step b with j");
        (Integer::div_ceil(&(-m - b0), &b1), Integer::div_floor(&(m - b0), &b1))
    }
}

// (+, j(B A j + 2)/2, A j, B j) and (-, (B j + 1)(A j + c + 1)/2, A j + c + 1, B j + 1)
fn theta_pair(big_a: i64, big_b: i64, c: i64) -> [ThetaTerm; 2] {
    [
        ThetaTerm { negate: false, twice_exponent: [big_b * big_a, 2, 0], a: (big_a, 0), b: (big_b, 0) },
        ThetaTerm {
            negate: true,
            twice_exponent: [big_b * big_a, big_b * (c + 1) + big_a, c + 1],
            a: (big_a, c + 1),
            b: (big_b, 1),
        },
    ]
}

/// The E6-type second theta sum, `A = 8k + 6`, prefactor `q^{3(3k+2)/2}`.
fn monster_tail(k: i64) -> [ThetaTerm; 2] {
    let big_a = 8 * k + 6;
    let pre = 3 * (3 * k + 2);
    [
        ThetaTerm {
            negate: false,
            twice_exponent: [8 * big_a, 48 * k + 34, pre],
            a: (big_a, 3 * k + 2),
            b: (8, 3),
        },
        ThetaTerm {
            negate: true,
            // (8j + 7)(A j + k + 1)
            twice_exponent: [8 * big_a, 8 * (k + 1) + 7 * big_a, 7 * (k + 1) + pre],
            a: (big_a, 4 * k + 3),
            b: (8, 4),
        },
    ]
}

/// Theta terms of the left-hand side of a conjecture.
pub fn conj_terms(which: Conjecture) -> Vec<ThetaTerm> {
    match which {
        Conjecture::One => theta_pair(3, 5, 0).to_vec(),
        Conjecture::Two => theta_pair(4, 6, 0).to_vec(),
        Conjecture::Three => {
            let mut t = theta_pair(6, 8, 0).to_vec();
            // q^3 times the (6j+2, 8j+3) / (6j+3, 8j+4) pair
            t.push(ThetaTerm { negate: false, twice_exponent: [48, 34, 6], a: (6, 2), b: (8, 3) });
            t.push(ThetaTerm { negate: true, twice_exponent: [48, 50, 13], a: (6, 3), b: (8, 4) });
            t
        }
    }
}

/// Theta terms of the left-hand side of the k-th member of a family.
pub fn kseries_terms(family: KFamily, k: i64) -> Vec<ThetaTerm> {
    match family {
        KFamily::Flower => theta_pair(5 * k + 3, 5, k).to_vec(),
        KFamily::Flower2 => theta_pair(6 * k + 4, 6, k).to_vec(),
        KFamily::Monster => {
            let mut t = theta_pair(8 * k + 6, 8, k).to_vec();
            t.extend(monster_tail(k));
            t
        }
    }
}

/// `sum_j` over the terms, with the `j`-range widened by `extra` on each side
/// beyond the range where `𝒯` can be nonzero.
pub fn theta_lhs(l: i64, m: i64, terms: &[ThetaTerm], extra: i64) -> QPoly {
    let mut acc = Grouped::new();
    for t in terms {
        let (lo, hi) = t.j_range(m);
        for j in lo - extra..=hi + extra {
            let (a, b) = (t.a.0 * j + t.a.1, t.b.0 * j + t.b.1);
            if let Some((base, p)) = refined_t_dense(l, m, a, b) {
                acc.add(&(&t.exponent(j) + &base), &p, t.negate);
            }
        }
    }
    acc.into_poly()
}

pub fn conj_lhs(which: Conjecture, l: i64, m: i64) -> QPoly {
    theta_lhs(l, m, &conj_terms(which), 0)
}

pub fn kseries_lhs(args: KSeriesArgs) -> Result<QPoly> {
    if args.k < 1 {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {}", args.k)));
    }
    Ok(theta_lhs(args.l, args.m, &kseries_terms(args.family, args.k), 0))
}

/// Both sides of the 𝒯-invariance summation
/// `sum_{i=|b|}^{min(L-|a|, M)} q^{i^2/2} [L+M-i, L] 𝒯(L-i, i, a, b)
///   = q^{b^2/2} 𝒯(L, M, a+b, b)`.
pub fn theorem1_sides(l: i64, m: i64, a: i64, b: i64) -> Result<(QPoly, QPoly)> {
    if (a > 0 && b < 0) || (a < 0 && b > 0) {
        return Err(Error::PreconditionViolation(format!(
            "a and b must not have opposite signs, got a={a}, b={b}"
        )));
    }
    let mut acc = Grouped::new();
    for i in b.abs()..=(l - a.abs()).min(m) {
        if let Some((base, p)) = refined_t_dense(l - i, i, a, b) {
            let g = gauss(l + m - i, l);
            acc.add(&(&base + &QExponent::new(i * i, 2)), &g.mul(&p), false);
        }
    }
    let rhs = refined_t(RefinedArgs::new(l, m, a + b, b)).shift(&QExponent::new(b * b, 2));
    Ok((acc.into_poly(), rhs))
}

pub fn theorem1_check(l: i64, m: i64, a: i64, b: i64) -> Result<bool> {
    let (lhs, rhs) = theorem1_sides(l, m, a, b)?;
    Ok(lhs == rhs)
}

/// Both sides of `sum_{i=|b|}^{L-|a-b|} q^{(i^2-b^2)/2} 𝒯(L-i, i, a-b, b) = T(L, a)`.
pub fn refinement_to_t_sides(l: i64, a: i64, b: i64) -> (QPoly, QPoly) {
    let mut lhs = QPoly::zero();
    for i in b.abs()..=l - (a - b).abs() {
        let t = refined_t(RefinedArgs::new(l - i, i, a - b, b));
        lhs += t.shift(&QExponent::new(i * i - b * b, 2));
    }
    (lhs, qtrinomial_t(l, a))
}

/// Both sides of `sum_{i=|b|}^{L-|a-b|} q^{(i^2-b^2)/2} 𝒯(i, L-i, b, a-b) = (L; a)_2`.
pub fn refinement_to_round_sides(l: i64, a: i64, b: i64) -> (QPoly, QPoly) {
    let mut lhs = QPoly::zero();
    for i in b.abs()..=l - (a - b).abs() {
        let t = refined_t(RefinedArgs::new(i, l - i, b, a - b));
        lhs += t.shift(&QExponent::new(i * i - b * b, 2));
    }
    (lhs, qtrinomial2(l, a))
}

/// Both sides of `sum_i q^{i^2/2} [L, i] T(i, b) = q^{b^2/2} [2L, L-b]`.
pub fn con_sides(l: i64, b: i64) -> (QPoly, QPoly) {
    let mut lhs = QPoly::zero();
    for i in b.abs()..=l {
        lhs += (&qbinomial(l, i) * &qtrinomial_t(i, b)).shift(&QExponent::new(i * i, 2));
    }
    (lhs, qbinomial(2 * l, l - b).shift(&QExponent::new(b * b, 2)))
}

pub fn con_identity_check(l: i64, b: i64) -> bool {
    let (lhs, rhs) = con_sides(l, b);
    lhs == rhs
}

/// Both sides of `sum_i q^{i^2/2} T(i, b) / (q)_i = q^{b^2/2} / (q)_∞`,
/// summing `i` while `i^2/2 < order + margin`.
pub fn abp_sides(b: i64, order: &QExponent, margin: i64) -> (QSeries, QSeries) {
    let mut acc = GridSeries::zero(2, order);
    let mut i = b.abs();
    while QExponent::new(i * i, 2) < order + &QExponent::from_int(margin) {
        let t = qtrinomial_t(i, b).shift(&QExponent::new(i * i, 2));
        let mut g = acc.monomial_like(0, BigInt::zero());
        g.add_qpoly(&t);
        g.div_pochhammer(i);
        acc.add_assign(&g);
        i += 1;
    }
    let len = acc.len() as i64;
    let mut rhs = acc.monomial_like(b * b, BigInt::one());
    rhs.div_pochhammer(len);
    (acc.into_series(), rhs.into_series())
}

pub fn abp_series_check(b: i64, order: &QExponent) -> bool {
    let (lhs, rhs) = abp_sides(b, order, 0);
    lhs == rhs
}

/// `c_σ = (1/(q)_∞) sum_{n ≡ σ (2)} q^{n^2/2} / (q)_n`.
fn string_function_sum(sigma: u8, order: &QExponent) -> QSeries {
    let mut s = bare_string_sum(sigma, order);
    let len = s.len() as i64;
    s.div_pochhammer(len);
    s.into_series()
}

/// `sum_{n ≡ σ (2)} q^{n^2/2} / (q)_n` on the half-integer lattice.
fn bare_string_sum(sigma: u8, order: &QExponent) -> GridSeries {
    let mut acc = GridSeries::zero(2, order);
    let mut n = sigma as i64;
    while ((n * n) as usize) < acc.len() {
        let mut t = acc.monomial_like(n * n, BigInt::one());
        t.div_pochhammer(n);
        acc.add_assign(&t);
        n += 2;
    }
    acc
}

/// `((-q^{1/2}; q)_∞ + (-1)^σ (q^{1/2}; q)_∞) / (2 (q)_∞)`.
fn string_function_pochhammer(sigma: u8, order: &QExponent) -> Result<QSeries> {
    let half = QExponent::new(1, 2);
    let one = QExponent::one();
    let plus = pochhammer(&half, -1, &one, None, order)?;
    let minus = pochhammer(&half, 1, &one, None, order)?;
    let num = if sigma == 0 { plus.add(&minus) } else { plus.sub(&minus) };
    let halved = num
        .poly()
        .div_exact_int(&BigInt::from(2))
        .ok_or_else(|| Error::RepresentationMismatch { sigma, order: order.to_string() })?;
    Ok(QSeries::from_poly(&halved, num.order().clone()).mul(&inverse_q_pochhammer(None, order)))
}

/// `q^{σ/2} / ((q)_∞ (q^{3-2σ}, q^4, q^{5+2σ}; q^8)_∞ (q^{2+4σ}, q^{14-4σ}; q^{16})_∞)`.
fn string_function_product(sigma: u8, order: &QExponent) -> Result<QSeries> {
    let s = sigma as i64;
    let one = QExponent::one();
    let mut den = pochhammer(&one, 1, &one, None, order)?;
    for (a, step) in [(3 - 2 * s, 8), (4, 8), (5 + 2 * s, 8), (2 + 4 * s, 16), (14 - 4 * s, 16)] {
        let f = pochhammer(&QExponent::from_int(a), 1, &QExponent::from_int(step), None, order)?;
        den = den.mul(&f);
    }
    let inv = den.inverse()?;
    Ok(inv.shift(&QExponent::new(s, 2)).truncate(order))
}

/// Level-1 string function `c_σ` to `order`, computed three ways; a
/// disagreement is reported as [`Error::RepresentationMismatch`].
pub fn string_function(sigma: u8, order: &QExponent) -> Result<QSeries> {
    if sigma > 1 {
        return Err(Error::InvalidArgument(format!("sigma must be 0 or 1, got {sigma}")));
    }
    let a = string_function_sum(sigma, order);
    let b = string_function_pochhammer(sigma, order)?;
    let c = string_function_product(sigma, order)?;
    if a != b || a != c {
        return Err(Error::RepresentationMismatch { sigma, order: order.to_string() });
    }
    Ok(a)
}

/// Labels `(p, p', r, s)` of a minimal-model character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharParams {
    pub p: i64,
    pub pp: i64,
    pub r: i64,
    pub s: i64,
}

impl CharParams {
    /// Requires `2 <= p < p'`, `gcd(p, p') = 1`, `1 <= r < p`, `1 <= s < p'`.
    pub fn new(p: i64, pp: i64, r: i64, s: i64) -> Result<Self> {
        let bad = |why: &str| Error::InvalidCharLabel(format!("({p},{pp})_{{{r},{s}}}: {why}"));
        if !(2 <= p && p < pp) {
            return Err(bad("need 2 <= p < p'"));
        }
        if p.gcd(&pp) != 1 {
            return Err(bad("p and p' must be coprime"));
        }
        if !(1..p).contains(&r) || !(1..pp).contains(&s) {
            return Err(bad("r or s out of range"));
        }
        Ok(CharParams { p, pp, r, s })
    }

    /// Accepts `p > p'` by exchanging `(p, r)` with `(p', s)`, under which the
    /// character is invariant.
    pub fn normalized(p: i64, pp: i64, r: i64, s: i64) -> Result<Self> {
        if p > pp {
            Self::new(pp, p, s, r)
        } else {
            Self::new(p, pp, r, s)
        }
    }
}

/// Integer-exponent theta terms `(±, e)` whose `pre + e` lies below `bound`,
/// for `e_1(j) = j(p p' j + p' r - p s)`, `e_2(j) = (p j + r)(p' j + s)`,
/// scanning `extra` further values of `j` on each side.
fn char_theta(p: i64, pp: i64, r: i64, s: i64, bound: &QExponent, extra: i64) -> Vec<(i64, bool, i64)> {
    let e1 = |j: i64| j * (p * pp * j + pp * r - p * s);
    let e2 = |j: i64| (p * j + r) * (pp * j + s);
    let below = |e: i64| QExponent::from_int(e) < *bound;
    let mut out = Vec::new();
    for dir in [1i64, -1] {
        let mut j = if dir == 1 { 0 } else { -1 };
        let mut past = 0;
        loop {
            let (a, b) = (e1(j), e2(j));
            if below(a) {
                out.push((j, false, a));
            }
            if below(b) {
                out.push((j, true, b));
            }
            // both exponents grow with |j| once |j| >= 1
            if !below(a) && !below(b) && j.abs() >= 1 {
                past += 1;
                if past > extra {
                    break;
                }
            }
            j += dir;
        }
    }
    out
}

pub fn virasoro_char(params: CharParams, order: &QExponent) -> QSeries {
    virasoro_char_widened(params, order, 0)
}

/// `q^{((p'r - ps)^2 - 1)/(4pp')} / (q)_∞ sum_j (q^{e_1(j)} - q^{e_2(j)})`.
pub fn virasoro_char_widened(params: CharParams, order: &QExponent, extra: i64) -> QSeries {
    let CharParams { p, pp, r, s } = params;
    let d = pp * r - p * s;
    let pre = QExponent::new(d * d - 1, 4 * p * pp);
    let bound = order - &pre;
    let mut acc = GridSeries::zero(1, &bound);
    for (_, negate, e) in char_theta(p, pp, r, s, &bound, extra) {
        let sign = if negate { -1 } else { 1 };
        acc.add_at(e, &BigInt::from(sign));
    }
    let len = acc.len() as i64;
    acc.div_pochhammer(len);
    acc.into_series().shift(&pre)
}

/// Labels `(p, p', r, s; σ)` of a branching function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BranchParams {
    pub p: i64,
    pub pp: i64,
    pub r: i64,
    pub s: i64,
    pub sigma: u8,
}

impl BranchParams {
    /// Requires `2 <= p < p'`, `1 <= r < p`, `1 <= s < p'`, `p' - p` and
    /// `r - s` even, and `gcd((p'-p)/2, p') = 1`. `σ` is taken mod 2.
    pub fn new(p: i64, pp: i64, r: i64, s: i64, sigma: i64) -> Result<Self> {
        let bad = |why: &str| Error::InvalidBranchLabel(format!("({p},{pp})_{{{r},{s};{sigma}}}: {why}"));
        if !(2 <= p && p < pp) {
            return Err(bad("need 2 <= p < p'"));
        }
        if !(1..p).contains(&r) || !(1..pp).contains(&s) {
            return Err(bad("r or s out of range"));
        }
        if (pp - p) % 2 != 0 || (r - s) % 2 != 0 {
            return Err(bad("p'-p and r-s must be even"));
        }
        if ((pp - p) / 2).gcd(&pp) != 1 {
            return Err(bad("gcd((p'-p)/2, p') must be 1"));
        }
        Ok(BranchParams { p, pp, r, s, sigma: sigma.rem_euclid(2) as u8 })
    }
}

/// `q^{((p'r - ps)^2 - 4)/(8pp')} sum_j { q^{e_1(j)/2} c_{pj + (r-s)/2 + σ}
///   - q^{e_2(j)/2} c_{pj + (r+s)/2 + σ} }` with full string functions `c`.
pub fn branching_function(params: BranchParams, order: &QExponent) -> QSeries {
    branching_function_widened(params, order, 0)
}

pub fn branching_function_widened(params: BranchParams, order: &QExponent, extra: i64) -> QSeries {
    let BranchParams { p, pp, r, s, sigma } = params;
    let d = pp * r - p * s;
    let pre = QExponent::new(d * d - 4, 8 * p * pp);
    let bound = order - &pre;
    let bare = [bare_string_sum(0, &bound), bare_string_sum(1, &bound)];
    let mut acc = GridSeries::zero(2, &bound);
    // exponents e/2 < bound  <=>  e < 2 bound
    let twice = &bound + &bound;
    let sig = sigma as i64;
    for (j, negate, e) in char_theta(p, pp, r, s, &twice, extra) {
        let idx = if negate { p * j + (r + s) / 2 + sig } else { p * j + (r - s) / 2 + sig };
        let coeff = BigInt::from(if negate { -1 } else { 1 });
        acc.add_shifted_scaled(&bare[idx.rem_euclid(2) as usize], e, &coeff);
    }
    let len = acc.len() as i64;
    acc.div_pochhammer(len);
    acc.into_series().shift(&pre)
}

fn chi(p: i64, pp: i64, r: i64, s: i64, order: &QExponent) -> Result<QSeries> {
    Ok(virasoro_char(CharParams::normalized(p, pp, r, s)?, order))
}

fn branch(p: i64, pp: i64, r: i64, s: i64, sigma: i64, order: &QExponent) -> Result<QSeries> {
    Ok(branching_function(BranchParams::new(p, pp, r, s, sigma)?, order))
}

/// The character side of the F-sum family.
///
/// For the E7 family with `k` even the branching index is `σ + k/2`, as for
/// the other two families.
pub fn fsum_family_rhs(family: FSumFamily, k: i64, sigma: u8, order: &QExponent) -> Result<QSeries> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {k}")));
    }
    let s = sigma as i64;
    let odd = k % 2 == 1;
    let h = (k + 1) / 2;
    Ok(match (family, odd) {
        (FSumFamily::One, true) => chi(3, 4, s + 1, 1, order)?.mul(&chi(5, (5 * k + 3) / 2, 1, h, order)?),
        (FSumFamily::One, false) => branch(5, 5 * k + 3, 1, k + 1, s + k / 2, order)?,
        (FSumFamily::Two, true) => chi(3, 4, s + 1, 1, order)?.mul(&chi(6, 3 * k + 2, 1, h, order)?),
        (FSumFamily::Two, false) => branch(6, 6 * k + 4, 1, k + 1, s + k / 2, order)?,
        (FSumFamily::Three, true) => {
            let a = chi(3, 4, s + 1, 1, order)?.mul(&chi(8, 4 * k + 3, 1, h, order)?);
            let b = chi(3, 4, 2 - s, 1, order)?.mul(&chi(8, 4 * k + 3, 7, h, order)?);
            a.add(&b)
        }
        (FSumFamily::Three, false) => {
            let a = branch(8, 8 * k + 6, 1, k + 1, s + k / 2, order)?;
            let b = branch(8, 8 * k + 6, 7, k + 1, s + k / 2 + 1, order)?;
            a.add(&b)
        }
    })
}

/// The character side of the `q -> 1/q` limit identities (`k >= 2`).
pub fn x_series_rhs(family: XFamily, k: i64, order: &QExponent) -> Result<QSeries> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let odd = k % 2 == 1;
    Ok(match (family, odd) {
        (XFamily::One, true) => chi((5 * k + 3) / 2, 5 * k - 2, (k + 1) / 2, k, order)?,
        (XFamily::One, false) => chi(5 * k / 2 - 1, 5 * k + 3, k / 2, k + 1, order)?,
        (XFamily::Two, true) => chi(3 * k + 2, 6 * k - 2, (k + 1) / 2, k, order)?,
        (XFamily::Two, false) => chi(3 * k - 1, 6 * k + 4, k / 2, k + 1, order)?,
        (XFamily::Three, true) => chi(4 * k + 3, 8 * k - 2, (k + 1) / 2, k, order)?
            .add(&chi(4 * k + 3, 8 * k - 2, (k + 1) / 2, 7 * k - 2, order)?),
        (XFamily::Three, false) => chi(4 * k - 1, 8 * k + 6, k / 2, k + 1, order)?
            .add(&chi(4 * k - 1, 8 * k + 6, 7 * k / 2 - 1, k + 1, order)?),
    })
}

/// `1 / ((q^3, q^4, q^5; q^8)_∞ (q^2, q^14; q^16)_∞)`.
pub fn e8_product(order: &QExponent) -> QSeries {
    let mut den = QSeries::one(order.clone());
    for (a, step) in [(3, 8), (4, 8), (5, 8), (2, 16), (14, 16)] {
        let f = pochhammer(&QExponent::from_int(a), 1, &QExponent::from_int(step), None, order)
            .expect("convergent product");
        den = den.mul(&f);
    }
    den.inverse().expect("unit constant term")
}

/// The two closed forms of `B^{(4,6)}_{1,1;σ}`:
/// `(sum_{j>=0} (-q)^{j^2} + sum_{j>=1} q^{6j^2}) / (q)_∞` for `σ = 0` and
/// `q^{3/2} sum_{j>=0} q^{6j(j+1)} / (q)_∞` for `σ = 1`.
pub fn b46_closed_form(sigma: u8, order: &QExponent) -> QSeries {
    let mut acc = GridSeries::zero(2, order);
    let below = |e: i64| ((2 * e) as usize) < acc.len();
    let mut terms = Vec::new();
    if sigma == 0 {
        let mut j = 0;
        while below(j * j) {
            terms.push((2 * j * j, if j % 2 == 0 { 1 } else { -1 }));
            j += 1;
        }
        let mut j = 1;
        while below(6 * j * j) {
            terms.push((12 * j * j, 1));
            j += 1;
        }
    } else {
        let mut j = 0;
        while ((12 * j * (j + 1) + 3) as usize) < acc.len() {
            terms.push((12 * j * (j + 1) + 3, 1));
            j += 1;
        }
    }
    for (t, c) in terms {
        acc.add_at(t, &BigInt::from(c));
    }
    let len = acc.len() as i64;
    acc.div_pochhammer(len);
    acc.into_series()
}

/// `q^{3/2} (q^24; q^24)_∞ / ((q^12; q^24)_∞ (q)_∞)`.
pub fn b46_product(order: &QExponent) -> QSeries {
    let one = QExponent::one();
    let n = pochhammer(&QExponent::from_int(24), 1, &QExponent::from_int(24), None, order).unwrap();
    let d1 = pochhammer(&QExponent::from_int(12), 1, &QExponent::from_int(24), None, order).unwrap();
    let d2 = pochhammer(&one, 1, &one, None, order).unwrap();
    let inv = d1.mul(&d2).inverse().unwrap();
    n.mul(&inv).shift(&QExponent::new(3, 2)).truncate(order)
}

/// Large-`L` limits, checked as "no change under increment" at a truncation
/// order.
pub mod limits {
    use num_traits::ToPrimitive;

    use super::*;

    /// Largest `r` for which `(L; a)_2` and `1/(q)_∞` are known to agree
    /// through `q^r`: `L - max(|a|, 1)`, for `|a| <= L`.
    pub fn tlim_prefix(l: i64, a: i64) -> i64 {
        l - a.abs().max(1)
    }

    /// `(L; a)_2` and `1/(q)_∞` agree through `q^{tlim_prefix(L, a)}`.
    pub fn tlim_prefix_check(l: i64, a: i64) -> bool {
        if a.abs() > l {
            return false;
        }
        let order = QExponent::from_int(tlim_prefix(l, a) + 1);
        QSeries::from_poly(&qtrinomial2(l, a), order.clone()) == inverse_q_pochhammer(None, &order)
    }

    /// Length at which `(L; a)_2` has stabilized below `order`.
    pub fn tlim_length(a: i64, order: &QExponent) -> i64 {
        2 * order.ceil().to_i64().expect("small order") + a.abs()
    }

    /// `(L; a)_2 -> 1/(q)_∞`: returns the truncations at `L` and `L + 1` and
    /// the limit.
    pub fn tlim(a: i64, order: &QExponent) -> [QSeries; 3] {
        let l = tlim_length(a, order);
        [
            QSeries::from_poly(&qtrinomial2(l, a), order.clone()),
            QSeries::from_poly(&qtrinomial2(l + 1, a), order.clone()),
            inverse_q_pochhammer(None, order),
        ]
    }

    /// `T(L, a) -> c_σ` over `L + a + σ` even: truncations at `L`, `L + 2`,
    /// and the string function.
    pub fn t_lim(a: i64, sigma: u8, order: &QExponent) -> Result<[QSeries; 3]> {
        let mut l = tlim_length(a, order);
        if (l + a + sigma as i64) % 2 != 0 {
            l += 1;
        }
        Ok([
            QSeries::from_poly(&qtrinomial_t(l, a), order.clone()),
            QSeries::from_poly(&qtrinomial_t(l + 2, a), order.clone()),
            string_function(sigma, order)?,
        ])
    }

    /// `𝒯(L, M, a, b) -> T(L, a)/(q)_L`: truncations at `M`, `M + 1`, and the
    /// limit.
    pub fn m_t_lim(l: i64, a: i64, b: i64, order: &QExponent) -> [QSeries; 3] {
        let m = l + tlim_length(0, order) + b.abs();
        let t = |m| QSeries::from_poly(&refined_t(RefinedArgs::new(l, m, a, b)), order.clone());
        let limit = QSeries::from_poly(&qtrinomial_t(l, a), order.clone())
            .mul(&inverse_q_pochhammer(Some(l as u64), order));
        [t(m), t(m + 1), limit]
    }
}

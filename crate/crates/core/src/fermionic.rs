//! Fermionic sides: F-polynomials, the right-hand sides of the polynomial
//! identities and their k-series, and the fermionic q-series.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::liealg::{algebra, Algebra, LieAlgebra};
use crate::mnsys::{solve_mn_filtered, LinearCongruence, MNSolution, MNSystem};
use crate::qcomb::{gauss, qbinomial_vector_dense};
use crate::qpoly::dense::{Grouped, IntPoly};
use crate::qpoly::grid::GridSeries;
use crate::qpoly::{QExponent, QPoly, QSeries};

/// `n1+n4 ≡ n2+n5 (mod 3)` for A5 and E6.
fn mod3_filter(rank: usize) -> LinearCongruence {
    let mut c = vec![0; rank];
    c[0] = 1;
    c[3] = 1;
    c[1] = -1;
    c[4] = -1;
    LinearCongruence::new(c, 3, 0)
}

fn parity(rank: usize, vertices: &[usize], residue: i64) -> LinearCongruence {
    LinearCongruence::parity(rank, vertices, residue)
}

/// Restrictions on `n` for `F^g_{M;σ}`. A residue `σ` on a parity form means
/// `form + σ` is even.
pub fn f_filters(g: Algebra, sigma: i64) -> Result<Vec<LinearCongruence>> {
    match g {
        Algebra::A5 => Ok(vec![mod3_filter(5), parity(5, &[1, 3, 5], sigma)]),
        Algebra::D6 => Ok(vec![parity(6, &[1, 3, 6], 0), parity(6, &[1, 3, 5], sigma)]),
        Algebra::E7 => Ok(vec![parity(7, &[1, 3, 7], sigma)]),
        _ => Err(Error::InvalidArgument(format!("F-polynomials are defined for A5, D6, E7, not {g}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FPolyArgs {
    pub g: Algebra,
    pub m: i64,
    pub sigma: u8,
}

fn sigma_ok(sigma: u8) -> Result<()> {
    if sigma > 1 {
        return Err(Error::InvalidArgument(format!("sigma must be 0 or 1, got {sigma}")));
    }
    Ok(())
}

/// `q^{n C^{-1} n} [m+n, n]` for one solution, as a dense polynomial and the
/// exponent of its constant term.
fn solution_weight(g: &LieAlgebra, s: &MNSolution) -> (QExponent, IntPoly) {
    let e = g.quad_form_invcartan(&s.n).expect("rank-sized solution");
    let p = qbinomial_vector_dense(&s.m, &s.n).expect("rank-sized solution");
    (e, p)
}

/// `F^g_{M;σ} = sum q^{n C^{-1} n} [m+n, n]` over the system
/// `m + n = (I m + 2M e_p)/2` with the algebra's restrictions on `n`.
pub fn f_poly(args: FPolyArgs) -> Result<QPoly> {
    sigma_ok(args.sigma)?;
    let filters = f_filters(args.g, args.sigma as i64)?;
    let g = algebra(args.g);
    if args.m < 0 {
        return Ok(QPoly::zero());
    }
    let sys = MNSystem::new(g, 2 * args.m, g.p.expect("A5, D6 and E7 have p"))?;
    let mut out = QPoly::zero();
    for s in solve_mn_filtered(&sys, &filters) {
        let (e, p) = solution_weight(g, &s);
        out += QPoly::from_int_poly(&p, &e);
    }
    Ok(out)
}

/// Which of the three polynomial conjectures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// E7 with `p = 1`.
    One,
    /// D6 with `p = 5`.
    Two,
    /// A5 with `p = 3`.
    Three,
}

impl Conjecture {
    pub fn algebra(self) -> Algebra {
        match self {
            Conjecture::One => Algebra::E7,
            Conjecture::Two => Algebra::D6,
            Conjecture::Three => Algebra::A5,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Conjecture::One),
            2 => Ok(Conjecture::Two),
            3 => Ok(Conjecture::Three),
            _ => Err(Error::InvalidArgument(format!("conjecture index must be 1, 2 or 3, got {i}"))),
        }
    }
}

/// Right-hand side of a conjecture: the F-polynomial sum with the extra
/// `[(L+M+m_p)/2, 2M]` and the parity of `L` folded into `σ`.
pub fn conj_rhs(which: Conjecture, l: i64, m: i64) -> QPoly {
    if l < 0 || m < 0 {
        return QPoly::zero();
    }
    let g = algebra(which.algebra());
    let p = g.p.unwrap();
    let filters = f_filters(which.algebra(), l.rem_euclid(2)).unwrap();
    let sys = MNSystem::new(g, 2 * m, p).unwrap();
    let mut acc = Grouped::new();
    for s in solve_mn_filtered(&sys, &filters) {
        let top = l + m + s.m[p - 1];
        assert!(top % 2 == 0, "parity filter must make L+M+m_p even");
        let outer = gauss(top / 2, 2 * m);
        if outer.is_zero() {
            continue;
        }
        let (e, w) = solution_weight(g, &s);
        acc.add(&e, &outer.mul(&w), false);
    }
    acc.into_poly()
}

/// The three iterated families of polynomial identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KFamily {
    /// E8 inner sum, from the first conjecture.
    Flower,
    /// E7 inner sum, from the second conjecture.
    Flower2,
    /// E6 inner sum, from the third conjecture.
    Monster,
}

impl KFamily {
    pub const ALL: [KFamily; 3] = [KFamily::Flower, KFamily::Flower2, KFamily::Monster];

    pub fn name(self) -> &'static str {
        match self {
            KFamily::Flower => "flower",
            KFamily::Flower2 => "flower2",
            KFamily::Monster => "monster",
        }
    }

    /// Algebra, vertex carrying `r_{k-1}`, and restrictions on `n`.
    fn inner_system(self) -> (Algebra, usize, Vec<LinearCongruence>) {
        match self {
            KFamily::Flower => (Algebra::E8, 1, vec![]),
            KFamily::Flower2 => (Algebra::E7, 6, vec![parity(7, &[1, 3, 7], 0)]),
            KFamily::Monster => (Algebra::E6, 6, vec![mod3_filter(6)]),
        }
    }
}

impl fmt::Display for KFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "flower" | "e8" | "e8-flower" => Ok(KFamily::Flower),
            "flower2" | "e7" | "e7-flower2" => Ok(KFamily::Flower2),
            "monster" | "e6" | "e6-monster" => Ok(KFamily::Monster),
            _ => Err(Error::InvalidArgument(format!("unknown k-series family `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KSeriesArgs {
    pub family: KFamily,
    pub k: i64,
    pub l: i64,
    pub m: i64,
}

/// All `(r_{-1}, r_0, r_1, ..., r_{k-1})` with `r_{-1} = L+M`, `r_0 = L` that
/// can carry a nonzero term.
///
/// The last factor `[r_{k-2} - m/2, r_{k-1}]` forces `r_{k-1} <= r_{k-2}`, and
/// `[r_{a-1} - r_a + r_{a+1}, r_a] != 0` with `r_a > r_{a-1}` would force
/// `r_{a+1} > r_a`, propagating to a contradiction. So `r` is nonincreasing.
pub fn r_chains(l: i64, m: i64, k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![l + m, l];
    fn rec(cur: &mut Vec<i64>, len: usize, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for r in 0..=*cur.last().unwrap() {
            cur.push(r);
            rec(cur, len, out);
            cur.pop();
        }
    }
    rec(&mut cur, (k + 1) as usize, &mut out);
    out
}

/// Right-hand side of the k-th member of an iterated family.
pub fn kseries_rhs(args: KSeriesArgs) -> Result<QPoly> {
    let KSeriesArgs { family, k, l, m } = args;
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {k}")));
    }
    if l < 0 || m < 0 {
        return Ok(QPoly::zero());
    }
    let (alg, vertex, filters) = family.inner_system();
    let g = algebra(alg);
    let mut systems: HashMap<i64, Vec<(i64, IntPoly, i64)>> = HashMap::new();
    let mut acc = Grouped::new();
    for r in r_chains(l, m, k) {
        // r[0] = r_{-1}, r[a+1] = r_a
        let mut outer = IntPoly::one();
        let mut shift = 0i64;
        for a in 0..(k - 1) as usize {
            let (prev, cur, next) = (r[a], r[a + 1], r[a + 2]);
            let gq = gauss(prev - cur + next, cur);
            if gq.is_zero() {
                outer = IntPoly::zero();
                break;
            }
            outer = outer.mul(&gq);
            shift += (cur - next) * (cur - next);
        }
        if outer.is_zero() {
            continue;
        }
        let last = r[k as usize];
        let before = r[k as usize - 1];
        let inner = systems.entry(last).or_insert_with(|| {
            let sys = MNSystem::new(g, last, vertex).unwrap();
            solve_mn_filtered(&sys, &filters)
                .into_iter()
                .map(|s| {
                    let bullet = s.m[vertex - 1];
                    assert!(bullet % 2 == 0, "restriction must make m_{vertex} even");
                    let e = g.quad_form_cartan(&s.m).unwrap().to_i64().unwrap();
                    (bullet / 2, qbinomial_vector_dense(&s.m, &s.n).unwrap(), e)
                })
                .collect()
        });
        for (half_bullet, w, mcm) in inner.iter() {
            let gq = gauss(before - half_bullet, last);
            if gq.is_zero() {
                continue;
            }
            // q^{shift/2 + mCm/4}
            let e = QExponent::new(2 * shift + mcm, 4);
            acc.add(&e, &outer.mul(&gq).mul(w), false);
        }
    }
    Ok(acc.into_poly())
}

/// Families of fermionic q-series `sum q^{n C^{-1} n} / (q)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharFamily {
    E8,
    E7 { sigma: u8 },
    E6,
    D6B46 { sigma: u8 },
    A5B68 { sigma: u8 },
}

impl CharFamily {
    pub fn algebra(self) -> Algebra {
        match self {
            CharFamily::E8 => Algebra::E8,
            CharFamily::E7 { .. } => Algebra::E7,
            CharFamily::E6 => Algebra::E6,
            CharFamily::D6B46 { .. } => Algebra::D6,
            CharFamily::A5B68 { .. } => Algebra::A5,
        }
    }

    pub fn filters(self) -> Vec<LinearCongruence> {
        match self {
            CharFamily::E8 => vec![],
            CharFamily::E7 { sigma } => vec![parity(7, &[1, 3, 7], sigma as i64)],
            CharFamily::E6 => vec![mod3_filter(6)],
            CharFamily::D6B46 { sigma } => f_filters(Algebra::D6, sigma as i64).unwrap(),
            CharFamily::A5B68 { sigma } => f_filters(Algebra::A5, sigma as i64).unwrap(),
        }
    }
}

impl FromStr for CharFamily {
    type Err = Error;

    /// `E8`, `E6`, `E7:0`, `D6:1`, `A5:0` (the digit is σ).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown fermionic family `{s}`"));
        let (name, sigma) = match s.split_once(':') {
            Some((n, d)) => (n, Some(d.parse::<u8>().ok().filter(|&x| x <= 1).ok_or_else(bad)?)),
            None => (s, None),
        };
        match (name.to_ascii_uppercase().as_str(), sigma) {
            ("E8", None) => Ok(CharFamily::E8),
            ("E6", None) => Ok(CharFamily::E6),
            ("E7", Some(sigma)) => Ok(CharFamily::E7 { sigma }),
            ("D6", Some(sigma)) => Ok(CharFamily::D6B46 { sigma }),
            ("A5", Some(sigma)) => Ok(CharFamily::A5B68 { sigma }),
            _ => Err(bad()),
        }
    }
}

/// `sum q^{n C^{-1} n} / (q)_n` over the family's restricted `n`, truncated.
pub fn fermionic_char_sum(family: CharFamily, order: &QExponent) -> QSeries {
    fermionic_char_sum_boxed(family, order, 1)
}

/// As [`fermionic_char_sum`], with the per-coordinate box bound
/// `n_j^2 <= order / (C^{-1})_{jj}` scaled by `box_factor`. Any factor `>= 1`
/// gives the same series; larger factors only cost time.
pub fn fermionic_char_sum_boxed(family: CharFamily, order: &QExponent, box_factor: i64) -> QSeries {
    let g = algebra(family.algebra());
    let filters = family.filters();
    let (s, den) = g.inverse_cartan_scaled();
    let limit = order.scaled_ceil_i64(den);
    let r = g.rank;
    // n_j^2 s_jj < limit
    let bounds: Vec<i64> = (0..r)
        .map(|j| box_factor * ((limit - 1).max(0) / s[j][j]).sqrt())
        .collect();
    let mut acc = GridSeries::zero(den, order);
    let mut n = vec![0i64; r];
    lattice_dfs(s, &bounds, limit, 0, 0, &mut n, &mut |n, q| {
        if !filters.iter().all(|f| f.holds(n)) {
            return;
        }
        let mut t = acc.monomial_like(q, BigInt::from(1));
        for &x in n.iter() {
            t.div_pochhammer(x);
        }
        acc.add_assign(&t);
    });
    let out = acc.into_series();
    assert!(out.has_nonnegative_coeffs(), "fermionic sum with a negative coefficient");
    out
}

/// Visits every `n >= 0` inside `bounds` with `n S n < limit`, passing `n S n`.
/// All entries of `S` are positive, so partial forms bound the full one.
fn lattice_dfs(
    s: &[Vec<i64>],
    bounds: &[i64],
    limit: i64,
    k: usize,
    partial: i64,
    n: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64], i64),
) {
    if k == n.len() {
        visit(n, partial);
        return;
    }
    for v in 0..=bounds[k] {
        n[k] = v;
        // n S n restricted to the first k+1 coordinates
        let cross: i64 = (0..k).map(|j| s[j][k] * n[j]).sum();
        let q = partial + v * (2 * cross + s[k][k] * v);
        if q >= limit {
            break;
        }
        lattice_dfs(s, bounds, limit, k + 1, q, n, visit);
    }
    n[k] = 0;
}

/// The F-polynomial families of single-sum q-series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FSumFamily {
    /// `F^{E7}`.
    One,
    /// `F^{D6}`.
    Two,
    /// `F^{A5}`.
    Three,
}

impl FSumFamily {
    pub fn algebra(self) -> Algebra {
        match self {
            FSumFamily::One => Algebra::E7,
            FSumFamily::Two => Algebra::D6,
            FSumFamily::Three => Algebra::A5,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(FSumFamily::One),
            2 => Ok(FSumFamily::Two),
            3 => Ok(FSumFamily::Three),
            _ => Err(Error::InvalidArgument(format!("family index must be 1, 2 or 3, got {i}"))),
        }
    }
}

/// `sum_{n_1..n_k} q^{(N_1^2+...+N_k^2)/2} F_{n_k; m_σ}
///   / ((q)_{n_1} ... (q)_{n_{k-1}} (q)_{2 n_k})`
/// with `N_a = n_a + ... + n_k` and `m_σ ≡ σ + n_1 + n_3 + ...`.
pub fn fsum_family_lhs(family: FSumFamily, k: i64, sigma: u8, order: &QExponent) -> Result<QSeries> {
    sigma_ok(sigma)?;
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be at least 1, got {k}")));
    }
    let g = algebra(family.algebra());
    let den = g.inverse_cartan_scaled().1.lcm(&2);
    // (N_1^2 + ... + N_k^2) / 2 < order, in units of 1/2
    let limit = order.scaled_ceil_i64(2);
    let mut fcache: HashMap<(i64, u8), QPoly> = HashMap::new();
    let mut acc = GridSeries::zero(den, order);
    let mut n = vec![0i64; k as usize];
    // enumerate from n_k down to n_1 so that N_a is known incrementally
    fn rec(
        a: usize,
        tail: i64,
        partial: i64,
        limit: i64,
        n: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64], i64),
    ) {
        let mut v = 0;
        loop {
            let big_n = tail + v;
            let q = partial + big_n * big_n;
            if q >= limit {
                if big_n > 0 {
                    break;
                }
            } else {
                n[a] = v;
                if a == 0 {
                    visit(n, q);
                } else {
                    rec(a - 1, big_n, q, limit, n, visit);
                }
            }
            v += 1;
        }
        n[a] = 0;
    }
    let kk = k as usize;
    let mut visit = |n: &[i64], q: i64| {
        let nk = n[kk - 1];
        let odd_sum: i64 = n.iter().step_by(2).sum();
        let ms = ((sigma as i64 + odd_sum) % 2) as u8;
        let f = fcache
            .entry((nk, ms))
            .or_insert_with(|| f_poly(FPolyArgs { g: family.algebra(), m: nk, sigma: ms }).unwrap());
        let mut t = acc.monomial_like(q * den / 2, BigInt::from(1));
        t.mul_qpoly(f);
        for &x in &n[..kk - 1] {
            t.div_pochhammer(x);
        }
        t.div_pochhammer(2 * nk);
        acc.add_assign(&t);
    };
    rec(kk - 1, 0, 0, limit, &mut n, &mut visit);
    let out = acc.into_series();
    assert!(out.has_nonnegative_coeffs(), "fermionic sum with a negative coefficient");
    Ok(out)
}

/// The q -> 1/q, L -> infinity limits of the k-series (k >= 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XFamily {
    /// E8 inner sum.
    One,
    /// E7 inner sum.
    Two,
    /// E6 inner sum.
    Three,
}

impl XFamily {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(XFamily::One),
            2 => Ok(XFamily::Two),
            3 => Ok(XFamily::Three),
            _ => Err(Error::InvalidArgument(format!("family index must be 1, 2 or 3, got {i}"))),
        }
    }

    /// Algebra, vertex, and the 1-based components that must match `r_{k-1}`
    /// mod 2 (all others even).
    fn data(self) -> (Algebra, usize, &'static [usize]) {
        match self {
            XFamily::One => (Algebra::E8, 1, &[2, 4, 8]),
            XFamily::Two => (Algebra::E7, 6, &[1, 3, 5]),
            XFamily::Three => (Algebra::E6, 6, &[1, 3, 5]),
        }
    }
}

/// `sum_r sum'_m q^{(1/2) sum_a (r_a - r_{a-1})^2} / (q)_{r_1}
///   prod_{a=2}^{k-1} [r_{a-1} - r_a + r_{a+1}, r_a] q^{mCm/4} [m+n, m]`
/// with `r_0 = 0`, `r_k = r_{k-1} - m_•/2`.
pub fn x_series_lhs(family: XFamily, k: i64, order: &QExponent) -> Result<QSeries> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let (alg, vertex, odd) = family.data();
    let g = algebra(alg);
    // exponents are multiples of 1/2 (first part) and 1/2 (mCm/4, mCm even)
    let den = 2;
    let limit = order.scaled_ceil_i64(den);
    let mut msums: HashMap<i64, Vec<(i64, i64, IntPoly)>> = HashMap::new();
    let mut acc = GridSeries::zero(den, order);
    let kk = k as usize;
    // r[0] = r_0 = 0, r[1..k] = r_1..r_{k-1}
    let mut r = vec![0i64; kk];
    fn chains(a: usize, partial: i64, limit: i64, r: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64], i64)) {
        if a == r.len() {
            visit(r, partial);
            return;
        }
        let prev = r[a - 1];
        let mut v = 0;
        loop {
            let d = v - prev;
            let q = partial + d * d;
            if q >= limit {
                if v > prev {
                    break;
                }
            } else {
                r[a] = v;
                chains(a + 1, q, limit, r, visit);
            }
            v += 1;
        }
        r[a] = 0;
    }
    let mut visit = |r: &[i64], q0: i64| {
        let last = r[kk - 1];
        let sols = msums.entry(last).or_insert_with(|| {
            let sys = MNSystem::new(g, last, vertex).unwrap();
            solve_mn_filtered(&sys, &[])
                .into_iter()
                .filter(|s| {
                    s.m.iter().enumerate().all(|(i, &x)| {
                        let want = if odd.contains(&(i + 1)) { last } else { 0 };
                        (x - want) % 2 == 0
                    })
                })
                .map(|s| {
                    let mcm = g.quad_form_cartan(&s.m).unwrap().to_i64().unwrap();
                    (mcm / 2, s.m[vertex - 1] / 2, qbinomial_vector_dense(&s.m, &s.n).unwrap())
                })
                .collect()
        });
        for (half_mcm, half_bullet, w) in sols.iter() {
            // q0 in units of 1/2 is sum (r_a - r_{a-1})^2; mCm/4 = half_mcm/2
            let t0 = q0 + half_mcm;
            if t0 >= limit {
                continue;
            }
            let mut full = r.to_vec();
            full.push(last - half_bullet);
            let mut outer = IntPoly::one();
            for a in 2..kk {
                let gq = gauss(full[a - 1] - full[a] + full[a + 1], full[a]);
                if gq.is_zero() {
                    outer = IntPoly::zero();
                    break;
                }
                outer = outer.mul(&gq);
            }
            if outer.is_zero() {
                continue;
            }
            let mut t = acc.monomial_like(t0, BigInt::from(1));
            t.div_pochhammer(r[1]);
            t.mul_int_poly(&outer.mul(w));
            acc.add_assign(&t);
        }
    };
    chains(1, 0, limit, &mut r, &mut visit);
    let out = acc.into_series();
    assert!(out.has_nonnegative_coeffs(), "fermionic sum with a negative coefficient");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_chain_shapes() {
        assert_eq!(r_chains(2, 1, 1), vec![vec![3, 2]]);
        assert_eq!(r_chains(2, 1, 2), vec![vec![3, 2, 0], vec![3, 2, 1], vec![3, 2, 2]]);
        assert_eq!(r_chains(1, 0, 3).len(), 3);
    }

    #[test]
    fn f_poly_zero_level() {
        for g in [Algebra::A5, Algebra::D6, Algebra::E7] {
            assert_eq!(f_poly(FPolyArgs { g, m: 0, sigma: 0 }).unwrap(), QPoly::one());
            assert!(f_poly(FPolyArgs { g, m: 0, sigma: 1 }).unwrap().is_zero());
        }
        assert!(f_poly(FPolyArgs { g: Algebra::E8, m: 1, sigma: 0 }).is_err());
    }

    #[test]
    fn trivial_rhs() {
        assert_eq!(conj_rhs(Conjecture::One, 0, 0), QPoly::one());
        assert_eq!(conj_rhs(Conjecture::Three, 0, 0), QPoly::one());
        for family in KFamily::ALL {
            let args = KSeriesArgs { family, k: 1, l: 0, m: 0 };
            assert_eq!(kseries_rhs(args).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!("E7:1".parse::<CharFamily>().unwrap(), CharFamily::E7 { sigma: 1 });
        assert!("E7".parse::<CharFamily>().is_err());
        assert!("E8:0".parse::<CharFamily>().is_err());
        assert_eq!("monster".parse::<KFamily>().unwrap(), KFamily::Monster);
    }
}

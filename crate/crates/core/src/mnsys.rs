//! Solutions of `m + n = (I m + N e_i) / 2` in nonnegative integer vectors.
//!
//! Enumeration runs over `n` and recovers `m = C^{-1}(N e_i - 2n)`. Every entry
//! of `C^{-1}` is positive, so each partial assignment of `n` leaves a budget
//! per row of `m` that can only shrink; this bounds and prunes the search.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;

#[derive(Clone, Copy, Debug)]
pub struct MNSystem {
    pub g: &'static LieAlgebra,
    pub n_total: i64,
    /// 1-based vertex carrying `N e_i`.
    pub vertex: usize,
}

impl MNSystem {
    /// The vertex must be one of the marked vertices of `g`.
    pub fn new(g: &'static LieAlgebra, n_total: i64, vertex: usize) -> Result<Self> {
        if n_total < 0 {
            return Err(Error::InvalidArgument(format!("N must be nonnegative, got {n_total}")));
        }
        if !g.marked_vertices.contains(&vertex) {
            return Err(Error::InvalidArgument(format!(
                "vertex {vertex} is not a marked vertex of {}",
                g.name
            )));
        }
        Ok(MNSystem { g, n_total, vertex })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MNSolution {
    pub m: Vec<i64>,
    pub n: Vec<i64>,
}

impl fmt::Display for MNSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={}", EBasis(&self.m), EBasis(&self.n))
    }
}

/// Writes an integer vector as `5e1+4e2+e7`, or `0`.
pub struct EBasis<'a>(pub &'a [i64]);

impl fmt::Display for EBasis<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "e{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `sum_k coeffs[k] n_k ≡ residue (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCongruence {
    pub coeffs: Vec<i64>,
    pub modulus: i64,
    pub residue: i64,
}

impl LinearCongruence {
    pub fn new(coeffs: Vec<i64>, modulus: i64, residue: i64) -> Self {
        LinearCongruence { coeffs, modulus, residue: residue.rem_euclid(modulus) }
    }

    /// Parity of the sum of the listed 1-based components.
    pub fn parity(rank: usize, vertices: &[usize], residue: i64) -> Self {
        let mut coeffs = vec![0; rank];
        for &v in vertices {
            coeffs[v - 1] += 1;
        }
        Self::new(coeffs, 2, residue)
    }

    pub fn holds(&self, n: &[i64]) -> bool {
        let s: i64 = self.coeffs.iter().zip(n).map(|(c, x)| c * x).sum();
        (s - self.residue).rem_euclid(self.modulus) == 0
    }

    /// Parses a linear form such as `n1+n3+n7`, `n1+n4-n2-n5` or `n1+n3+2*n5+1`,
    /// optionally followed by `=r`. Constants move to the right-hand side.
    pub fn parse(expr: &str, rank: usize, modulus: i64) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("{m} in linear form `{expr}`"));
        let (lhs, rhs) = match expr.split_once('=') {
            Some((l, r)) => (l, r.trim().parse::<i64>().map_err(|_| bad("bad residue"))?),
            None => (expr, 0),
        };
        let mut coeffs = vec![0i64; rank];
        let mut constant = 0i64;
        let s: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty form"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        for t in terms {
            let (sign, body) = match t.as_bytes()[0] {
                b'-' => (-1, &t[1..]),
                b'+' => (1, &t[1..]),
                _ => (1, t),
            };
            let (k, var) = match body.split_once('*') {
                Some((k, v)) => (k.parse::<i64>().map_err(|_| bad("bad coefficient"))?, v),
                None if body.starts_with('n') => (1, body),
                None => {
                    constant += sign * body.parse::<i64>().map_err(|_| bad("bad term"))?;
                    continue;
                }
            };
            let idx: usize = var
                .strip_prefix('n')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| bad("expected n<index>"))?;
            if idx == 0 || idx > rank {
                return Err(bad("component index out of range"));
            }
            coeffs[idx - 1] += sign * k;
        }
        Ok(Self::new(coeffs, modulus, rhs - constant))
    }
}

/// All solutions with `m, n >= 0`, lexicographic in `n`.
pub fn solve_mn(sys: &MNSystem) -> Vec<MNSolution> {
    solve_mn_filtered(sys, &[])
}

/// `solve_mn` restricted to `n` satisfying every filter.
pub fn solve_mn_filtered(sys: &MNSystem, filters: &[LinearCongruence]) -> Vec<MNSolution> {
    let (s, den) = sys.g.inverse_cartan_scaled();
    let r = sys.g.rank;
    let i = sys.vertex - 1;
    let budget: Vec<i64> = (0..r).map(|j| sys.n_total * s[j][i]).collect();
    let mut out = Vec::new();
    let mut n = vec![0i64; r];
    dfs(s, den, 0, &mut n, budget, filters, &mut out);
    out
}

fn dfs(
    s: &[Vec<i64>],
    den: i64,
    k: usize,
    n: &mut Vec<i64>,
    budget: Vec<i64>,
    filters: &[LinearCongruence],
    out: &mut Vec<MNSolution>,
) {
    let r = n.len();
    if k == r {
        if budget.iter().all(|b| b % den == 0) && filters.iter().all(|f| f.holds(n)) {
            out.push(MNSolution { m: budget.iter().map(|b| b / den).collect(), n: n.clone() });
        }
        return;
    }
    let max = (0..r).map(|j| budget[j] / (2 * s[j][k])).min().unwrap();
    for v in 0..=max {
        n[k] = v;
        let b: Vec<i64> = (0..r).map(|j| budget[j] - 2 * v * s[j][k]).collect();
        dfs(s, den, k + 1, n, b, filters, out);
    }
    n[k] = 0;
}

impl FromStr for MNSolution {
    type Err = Error;

    /// Parses the `m=... n=...` display form; the rank comes from the largest index.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad solution `{s}`"));
        let mut parts = s.split_whitespace();
        let m = parts.next().and_then(|p| p.strip_prefix("m=")).ok_or_else(bad)?;
        let n = parts.next().and_then(|p| p.strip_prefix("n=")).ok_or_else(bad)?;
        let pm = parse_ebasis(m).ok_or_else(bad)?;
        let pn = parse_ebasis(n).ok_or_else(bad)?;
        let r = pm.iter().chain(&pn).map(|(i, _)| *i).max().unwrap_or(0);
        let dense = |v: Vec<(usize, i64)>| {
            let mut d = vec![0; r];
            for (i, c) in v {
                d[i - 1] += c;
            }
            d
        };
        Ok(MNSolution { m: dense(pm), n: dense(pn) })
    }
}

fn parse_ebasis(s: &str) -> Option<Vec<(usize, i64)>> {
    if s == "0" {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    for t in s.split('+') {
        let (c, i) = t.split_once('e')?;
        let c = if c.is_empty() { 1 } else { c.parse().ok()? };
        out.push((i.parse().ok()?, c));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{algebra, Algebra};

    #[test]
    fn ebasis_format() {
        assert_eq!(EBasis(&[5, 4, 3, 2, 0, 0, 1]).to_string(), "5e1+4e2+3e3+2e4+e7");
        assert_eq!(EBasis(&[0, 0]).to_string(), "0");
        assert_eq!(EBasis(&[0, -2, 1]).to_string(), "-2e2+e3");
    }

    #[test]
    fn zero_system() {
        for a in Algebra::ALL {
            let g = algebra(a);
            let sys = MNSystem::new(g, 0, g.marked_vertices[0]).unwrap();
            let sols = solve_mn(&sys);
            assert_eq!(sols, vec![MNSolution { m: vec![0; g.rank], n: vec![0; g.rank] }]);
            let odd = LinearCongruence::parity(g.rank, &[1], 1);
            assert!(solve_mn_filtered(&sys, &[odd]).is_empty());
        }
    }

    #[test]
    fn linear_form_parsing() {
        let f = LinearCongruence::parse("n1+n4-n2-n5", 5, 3).unwrap();
        assert_eq!(f.coeffs, vec![1, -1, 0, 1, -1]);
        assert_eq!(f.residue, 0);
        let f = LinearCongruence::parse("n1 + n3 + n5 + 1", 5, 2).unwrap();
        assert_eq!(f.residue, 1);
        let f = LinearCongruence::parse("n1+2*n3=1", 7, 2).unwrap();
        assert_eq!((f.coeffs[2], f.residue), (2, 1));
        assert!(LinearCongruence::parse("n9", 7, 2).is_err());
        assert!(LinearCongruence::parse("x1", 7, 2).is_err());
    }

    #[test]
    fn rejects_unmarked_vertex() {
        assert!(MNSystem::new(algebra(Algebra::E8), 2, 3).is_err());
        assert!(MNSystem::new(algebra(Algebra::E8), -1, 1).is_err());
    }
}

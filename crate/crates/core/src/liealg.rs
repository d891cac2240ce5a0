//! Incidence, Cartan and inverse Cartan matrices for the simply-laced algebras
//! A5, D6, E6, E7 and E8.
//!
//! Vertex labels are 1-based. The labelling below is fixed: the E7 table
//! reproduces the eleven solutions of the `N = 6`, `i = 1` system, and deleting
//! the marked vertex of E8, E7, E6 (vertices 1, 6, 6) leaves E7, D6, A5.
//!
//! ```text
//! A5  1-2-3-4-5            D6  1-2-3-4-5        E6  1-2-3-4-5
//!                                      |                |
//!                                      6                6
//!
//! E7  1-2-3-4-5-6          E8  1-2-3-4-5-6-7
//!           |                          |
//!           7                          8
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qpoly::QExponent;

/// Rank, edges, marked vertices, distinguished vertex.
type Shape = (usize, &'static [(usize, usize)], &'static [usize], Option<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    A5,
    D6,
    E6,
    E7,
    E8,
}

impl Algebra {
    pub const ALL: [Algebra; 5] = [Algebra::A5, Algebra::D6, Algebra::E6, Algebra::E7, Algebra::E8];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::A5 => "A5",
            Algebra::D6 => "D6",
            Algebra::E6 => "E6",
            Algebra::E7 => "E7",
            Algebra::E8 => "E8",
        }
    }

    fn spec(self) -> Shape {
        match self {
            Algebra::A5 => (5, &[(1, 2), (2, 3), (3, 4), (4, 5)], &[3], Some(3)),
            Algebra::D6 => (6, &[(1, 2), (2, 3), (3, 4), (4, 5), (4, 6)], &[5], Some(5)),
            Algebra::E6 => (6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)], &[6], None),
            Algebra::E7 => (7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)], &[1, 6], Some(1)),
            Algebra::E8 => (8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)], &[1], None),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A5" => Ok(Algebra::A5),
            "D6" => Ok(Algebra::D6),
            "E6" => Ok(Algebra::E6),
            "E7" => Ok(Algebra::E7),
            "E8" => Ok(Algebra::E8),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }
}

/// Validated matrix data for one algebra.
#[derive(Debug)]
pub struct LieAlgebra {
    pub name: Algebra,
    pub rank: usize,
    pub incidence: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    pub inverse_cartan: Vec<Vec<BigRational>>,
    /// Marked vertices, 1-based.
    pub marked_vertices: Vec<usize>,
    /// Distinguished marked vertex for A5, D6 and E7.
    pub p: Option<usize>,
    inv_scaled: Vec<Vec<i64>>,
    inv_den: i64,
}

impl LieAlgebra {
    fn build(name: Algebra) -> LieAlgebra {
        let (rank, edges, marked, p) = name.spec();
        let mut incidence = vec![vec![0i64; rank]; rank];
        for &(a, b) in edges {
            incidence[a - 1][b - 1] = 1;
            incidence[b - 1][a - 1] = 1;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { 2 } else { -incidence[i][j] }).collect())
            .collect();
        let inverse_cartan = invert(&cartan);
        let inv_den = inverse_cartan
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            .to_i64()
            .expect("small denominator");
        let inv_scaled = inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * BigInt::from(inv_den)).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        let g = LieAlgebra {
            name,
            rank,
            incidence,
            cartan,
            inverse_cartan,
            marked_vertices: marked.to_vec(),
            p,
            inv_scaled,
            inv_den,
        };
        g.validate();
        g
    }

    fn validate(&self) {
        let r = self.rank;
        for i in 0..r {
            assert_eq!(self.incidence[i][i], 0);
            for j in 0..r {
                assert_eq!(self.incidence[i][j], self.incidence[j][i]);
                let mut s = BigRational::zero();
                for k in 0..r {
                    s += &self.inverse_cartan[k][j] * BigInt::from(self.cartan[i][k]);
                }
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(s, want, "C * C^-1 != I for {}", self.name);
                assert!(self.inverse_cartan[i][j].is_positive());
            }
        }
    }

    /// `C^{-1}` scaled to integers, with the common denominator.
    pub fn inverse_cartan_scaled(&self) -> (&[Vec<i64>], i64) {
        (&self.inv_scaled, self.inv_den)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v - 1].iter().filter(|&&x| x == 1).count()
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: v.len() });
        }
        Ok(())
    }

    /// `n C^{-1} n`, exact.
    pub fn quad_form_invcartan(&self, n: &[i64]) -> Result<QExponent> {
        self.check_len(n)?;
        Ok(QExponent::new(quad(&self.inv_scaled, n), self.inv_den))
    }

    /// `m C m` (an even integer). Callers apply the factor 1/4.
    pub fn quad_form_cartan(&self, m: &[i64]) -> Result<QExponent> {
        self.check_len(m)?;
        Ok(QExponent::from_int(quad(&self.cartan, m)))
    }
}

fn quad(mat: &[Vec<i64>], v: &[i64]) -> i64 {
    let mut s = 0i64;
    for (i, row) in mat.iter().enumerate() {
        if v[i] == 0 {
            continue;
        }
        let mut t = 0i64;
        for (j, x) in row.iter().enumerate() {
            t += x * v[j];
        }
        s += v[i] * t;
    }
    s
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .chain((0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))))
                .collect()
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular Cartan matrix");
        a.swap(c, piv);
        let pv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &pv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// The validated table for `name`.
pub fn algebra(name: Algebra) -> &'static LieAlgebra {
    static TABLES: OnceLock<Vec<LieAlgebra>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Algebra::ALL.iter().map(|&a| LieAlgebra::build(a)).collect());
    &tables[Algebra::ALL.iter().position(|&a| a == name).unwrap()]
}

/// Looks up an algebra by name (`"E7"`, case-insensitive).
pub fn algebra_by_name(name: &str) -> Result<&'static LieAlgebra> {
    Ok(algebra(name.parse()?))
}

pub fn quad_form_invcartan(g: &LieAlgebra, n: &[i64]) -> Result<QExponent> {
    g.quad_form_invcartan(n)
}

pub fn quad_form_cartan(g: &LieAlgebra, m: &[i64]) -> Result<QExponent> {
    g.quad_form_cartan(m)
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = |f: &mut fmt::Formatter<'_>, m: Vec<Vec<String>>| -> fmt::Result {
            let w = m.iter().flatten().map(String::len).max().unwrap_or(1);
            for row in m {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
                writeln!(f, "  {}", cells.join(" "))?;
            }
            Ok(())
        };
        writeln!(f, "{} (rank {})", self.name, self.rank)?;
        writeln!(f, "incidence:")?;
        rows(f, self.incidence.iter().map(|r| r.iter().map(i64::to_string).collect()).collect())?;
        writeln!(f, "cartan:")?;
        rows(f, self.cartan.iter().map(|r| r.iter().map(i64::to_string).collect()).collect())?;
        writeln!(f, "inverse cartan:")?;
        rows(f, self.inverse_cartan.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect())?;
        let marked: Vec<String> = self.marked_vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "marked vertices: {}", marked.join(","))?;
        if let Some(p) = self.p {
            write!(f, "\np = {p}")?;
        }
        Ok(())
    }
}

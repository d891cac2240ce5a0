//! Identity registry and grid verification.
//!
//! Every registered identity is a pair of computable sides (or a short list of
//! pairs that must all agree) evaluated at each point of a parameter grid.
//! Polynomial identities compare exactly; series identities compare every
//! coefficient below the truncation order.

mod grid;
mod registry;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{QExponent, QPoly, QSeries};

pub use grid::{GridSpec, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "polynomial-exact")]
    PolynomialExact,
    #[serde(rename = "series-truncated")]
    SeriesTruncated,
}

/// How much the source establishes. A truncated check never upgrades a
/// conjecture to a theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "proved-in-paper")]
    Proved,
    #[serde(rename = "conjectured-in-paper")]
    Conjectured,
    /// Consequence of a conjecture through the 𝒯-invariance iteration or a limit.
    #[serde(rename = "derived-chain")]
    Derived,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::PolynomialExact => "polynomial-exact",
            Kind::SeriesTruncated => "series-truncated",
        }
    }
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Proved => "proved-in-paper",
            Status::Conjectured => "conjectured-in-paper",
            Status::Derived => "derived-chain",
        }
    }
}

/// One pair of sides to be compared.
#[derive(Clone, Debug)]
pub enum Sides {
    Poly(QPoly, QPoly),
    Series(QSeries, QSeries),
}

impl Sides {
    fn term_count(&self) -> usize {
        match self {
            Sides::Poly(l, r) => l.len().max(r.len()),
            Sides::Series(l, r) => l.poly().len().max(r.poly().len()),
        }
    }

    /// Adds one to the coefficient of the lowest term of the left side
    /// (of `q^0` when that side is zero).
    fn perturb(&mut self) {
        let bump = |p: &QPoly| {
            let e = p.min_exponent().cloned().unwrap_or_else(QExponent::zero);
            p + &QPoly::monomial(1, e)
        };
        match self {
            Sides::Poly(l, _) => *l = bump(l),
            Sides::Series(l, _) => *l = QSeries::from_poly(&bump(l.poly()), l.order().clone()),
        }
    }
}

/// First disagreement between two sides: `(exponent, lhs coefficient, rhs
/// coefficient)`, or `None` when they agree. Series are compared below the
/// smaller of the two orders.
pub fn first_difference(sides: &Sides) -> Option<(QExponent, String, String)> {
    let (l, r) = match sides {
        Sides::Poly(l, r) => (l.clone(), r.clone()),
        Sides::Series(l, r) => {
            let o = l.order().min(r.order()).clone();
            (l.truncate(&o).into_poly(), r.truncate(&o).into_poly())
        }
    };
    let diff = &l - &r;
    let e = diff.min_exponent()?.clone();
    Some((e.clone(), l.coeff(&e).to_string(), r.coeff(&e).to_string()))
}

/// A registered identity.
pub struct IdentityDescriptor {
    pub name: &'static str,
    pub kind: Kind,
    pub status: Status,
    /// One-line statement of what is compared.
    pub summary: &'static str,
    pub note: Option<&'static str>,
    pub quick_grid: &'static str,
    pub full_grid: &'static str,
    pub quick_order: Option<i64>,
    pub full_order: Option<i64>,
    admissible: fn(&Point) -> bool,
    eval: fn(&Point, Option<&QExponent>) -> Result<Vec<Sides>>,
}

impl IdentityDescriptor {
    pub fn grid(&self, level: Level) -> GridSpec {
        let s = match level {
            Level::Quick => self.quick_grid,
            Level::Full => self.full_grid,
        };
        s.parse().expect("registry grids are well formed")
    }

    pub fn order(&self, level: Level) -> Option<i64> {
        match level {
            Level::Quick => self.quick_order,
            Level::Full => self.full_order,
        }
    }

    /// Points of `grid` at which the identity is stated.
    pub fn admissible_points(&self, grid: &GridSpec) -> Vec<Point> {
        grid.points().into_iter().filter(|p| (self.admissible)(p)).collect()
    }

    /// Both sides at one point.
    pub fn evaluate(&self, point: &Point, order: Option<i64>) -> Result<Vec<Sides>> {
        let o = order.map(QExponent::from_int);
        (self.eval)(point, o.as_ref())
    }
}

/// The immutable registry, in a fixed order.
pub fn registry() -> &'static [IdentityDescriptor] {
    static REG: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    REG.get_or_init(registry::build)
}

pub fn descriptor(name: &str) -> Result<&'static IdentityDescriptor> {
    registry()
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    #[default]
    Full,
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::Parse(format!("level must be quick or full, got `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: String,
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub status: Status,
    pub kind: Kind,
    /// Grid ranges, followed by `order=N` for series identities.
    pub grid: String,
    pub points: u64,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One deterministic line; timing is left out so repeated runs print the
    /// same bytes.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let grid = if self.grid.is_empty() { "-" } else { &self.grid };
        format!(
            "{verdict} {} [{}, {}] grid {grid}: {} points, {} failures",
            self.identity,
            self.status.as_str(),
            self.kind.as_str(),
            self.points,
            self.failures.len()
        )
    }
}

pub const DEFAULT_TERM_CEILING: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub level: Level,
    /// Replaces the ranges of the named variables.
    pub grid: Option<GridSpec>,
    pub order: Option<i64>,
    /// Largest number of terms allowed on either side at a single point.
    pub term_ceiling: usize,
    /// Perturbs one coefficient of the left side at the first point; used to
    /// check that the comparison catches it.
    pub inject_mutation: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            level: Level::Full,
            grid: None,
            order: None,
            term_ceiling: DEFAULT_TERM_CEILING,
            inject_mutation: false,
        }
    }
}

/// Verifies one identity on its default grid, with optional overrides.
pub fn verify_identity(name: &str, grid: Option<GridSpec>, order: Option<i64>) -> Result<VerificationReport> {
    verify_identity_with(name, &VerifyOptions { grid, order, ..Default::default() })
}

pub fn verify_identity_with(name: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    run(descriptor(name)?, opts)
}

/// Runs the whole registry at `level`; reports come back in registry order.
pub fn verify_all(level: Level) -> Result<Vec<VerificationReport>> {
    verify_all_with(&VerifyOptions { level, ..Default::default() })
}

/// `verify_all` with shared options. Grid overrides apply only to identities
/// that have every overridden variable.
pub fn verify_all_with(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    registry()
        .par_iter()
        .map(|d| {
            let mut o = opts.clone();
            if let Some(g) = &opts.grid {
                let names = d.grid(opts.level);
                if !g.ranges.iter().all(|(v, _, _)| names.names().contains(&v.as_str())) {
                    o.grid = None;
                }
            }
            if d.kind == Kind::PolynomialExact {
                o.order = None;
            }
            run(d, &o)
        })
        .collect()
}

/// Pass when every identity passes; with `strict_conjectures` off only the
/// proved identities count.
pub fn aggregate_pass(reports: &[VerificationReport], strict_conjectures: bool) -> bool {
    reports.iter().all(|r| r.passed() || (!strict_conjectures && r.status != Status::Proved))
}

fn run(d: &IdentityDescriptor, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut grid = d.grid(opts.level);
    if let Some(g) = &opts.grid {
        grid = grid.with_override(g)?;
    }
    let order = match d.kind {
        Kind::PolynomialExact => {
            if opts.order.is_some() {
                return Err(Error::InvalidArgument(format!("{} is a polynomial identity and takes no order", d.name)));
            }
            None
        }
        Kind::SeriesTruncated => Some(opts.order.or(d.order(opts.level)).expect("series entries carry an order")),
    };
    if let Some(o) = order {
        if o < 1 {
            return Err(Error::InvalidArgument(format!("order must be positive, got {o}")));
        }
    }
    let points = d.admissible_points(&grid);
    let results: Vec<Result<Option<Failure>>> = points
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut sides = d.evaluate(p, order)?;
            if let Some(s) = sides.iter().find(|s| s.term_count() > opts.term_ceiling) {
                return Err(Error::TermCeiling {
                    point: format!("{} {p}", d.name),
                    terms: s.term_count(),
                    ceiling: opts.term_ceiling,
                });
            }
            if opts.inject_mutation && i == 0 {
                sides[0].perturb();
            }
            Ok(sides.iter().find_map(first_difference).map(|(e, l, r)| Failure {
                params: p.to_string(),
                exponent: e.to_string(),
                lhs: l,
                rhs: r,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    let mut desc = grid.to_string();
    if let Some(o) = order {
        if !desc.is_empty() {
            desc.push(',');
        }
        desc.push_str(&format!("order={o}"));
    }
    Ok(VerificationReport {
        identity: d.name.to_string(),
        status: d.status,
        kind: d.kind,
        grid: desc,
        points: points.len() as u64,
        failures,
        millis: start.elapsed().as_millis() as u64,
    })
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_from_json(s: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Runs `f` on a pool of `threads` workers (`0` picks the default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

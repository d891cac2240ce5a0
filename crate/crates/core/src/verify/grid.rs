//! Parameter grids such as `L=0..6,M=0..6` and the points they expand to.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Inclusive integer ranges, one per named variable. Expansion order is the
/// declaration order, first variable outermost.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridSpec {
    pub ranges: Vec<(String, i64, i64)>,
}

impl GridSpec {
    /// Replaces the ranges of variables named in `over`. Unknown names are
    /// rejected so that a typo cannot silently shrink a run.
    pub fn with_override(&self, over: &GridSpec) -> Result<GridSpec> {
        let mut out = self.clone();
        for (v, lo, hi) in &over.ranges {
            match out.ranges.iter_mut().find(|(w, _, _)| w == v) {
                Some(r) => *r = (v.clone(), *lo, *hi),
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "grid variable `{v}` is not a parameter here (expected one of: {})",
                        self.names().join(", ")
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn names(&self) -> Vec<&str> {
        self.ranges.iter().map(|(v, _, _)| v.as_str()).collect()
    }

    pub fn points(&self) -> Vec<Point> {
        let mut out = vec![Point::default()];
        for (v, lo, hi) in &self.ranges {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (*lo..=*hi).map(move |x| {
                        let mut q = p.clone();
                        q.0.push((v.clone(), x));
                        q
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranges.iter().map(|(v, lo, hi)| format!("{v}={lo}..{hi}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("{m} in grid `{s}`"));
        let mut ranges: Vec<(String, i64, i64)> = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, r) = part.split_once('=').ok_or_else(|| bad("expected var=lo..hi"))?;
            let v = v.trim();
            if v.is_empty() || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(bad("bad variable name"));
            }
            let (lo, hi) = match r.split_once("..") {
                Some((lo, hi)) => (lo.trim(), hi.trim()),
                None => (r.trim(), r.trim()),
            };
            let lo: i64 = lo.parse().map_err(|_| bad("bad lower bound"))?;
            let hi: i64 = hi.parse().map_err(|_| bad("bad upper bound"))?;
            if lo > hi {
                return Err(bad("empty range"));
            }
            if ranges.iter().any(|(w, _, _)| w == v) {
                return Err(bad("repeated variable"));
            }
            ranges.push((v.to_string(), lo, hi));
        }
        Ok(GridSpec { ranges })
    }
}

/// One assignment of grid variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Point(pub Vec<(String, i64)>);

impl Point {
    /// Value of `var`; registry entries only ask for variables of their own grid.
    pub fn get(&self, var: &str) -> i64 {
        self.0
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, x)| *x)
            .unwrap_or_else(|| panic!("grid point has no variable `{var}`"))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(|(v, x)| format!("{v}={x}")).collect();
        f.write_str(&parts.join(","))
    }
}

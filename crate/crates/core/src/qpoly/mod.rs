//! Exact arithmetic on sparse Laurent polynomials and truncated power series
//! in `q` with rational exponents.

pub(crate) mod dense;
pub(crate) mod grid;
mod exponent;
mod poly;
mod series;
mod text;

pub use exponent::QExponent;
pub use poly::QPoly;
pub use series::{inverse_q_pochhammer, pochhammer, q_pochhammer_poly, QSeries};

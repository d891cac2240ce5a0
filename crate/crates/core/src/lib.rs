//! Refined q-trinomial coefficients, the surrounding q-series objects, and an
//! engine that checks the identities relating them coefficient by coefficient.
//!
//! Everything is exact: exponents are rationals and coefficients are big
//! integers. Series are truncated power series with an explicit order.

pub mod bosonic;
pub mod error;
pub mod fermionic;
pub mod liealg;
pub mod mnsys;
pub mod qcomb;
pub mod qpoly;
pub mod verify;

pub use error::{Error, Result};
pub use qcomb::{qbinomial, qbinomial_vector, qtrinomial2, qtrinomial_t, refined_t, refined_t_dual_check, RefinedArgs};
pub use qpoly::{QExponent, QPoly, QSeries};

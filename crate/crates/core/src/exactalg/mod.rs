//! Exact arithmetic: rational scalars, polynomials in `q`, rational
//! functions, and dense matrices over the rational function field.

mod qmatrix;
mod qpoly;
mod ratfun;

pub use qmatrix::QMatrix;
pub use qpoly::{rat, rat_frac, BigRat, QPoly};
pub use ratfun::RatFun;

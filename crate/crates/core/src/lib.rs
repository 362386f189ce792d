//! Exact computation of a polynomial-valued map on Weyl group conjugacy classes.
//!
//! The pipeline factors the map as a product of three matrices over the field
//! of rational functions in `q`:
//!
//! * `A` records Iwahori-Hecke algebra character values at minimal-length
//!   class representatives, rescaled by a power of `q - 1`.
//! * `A'` is a constant block-diagonal matrix built from the nonabelian
//!   Fourier transform attached to each family of irreducible characters.
//! * `A''` averages classical character values against characteristic
//!   polynomials of the reflection representation.
//!
//! The row of the product indexed by a conjugacy class lists, per irreducible
//! character, a polynomial in `q` with integer coefficients.  A companion map
//! sends each such row to a unipotent class via the Springer correspondence.

pub mod coxeter;
pub mod cyclo;
pub mod data;
pub mod error;
pub mod exactalg;
pub mod families;
pub mod hecke;
pub mod psi;
pub mod springer;
pub mod wchars;

pub use error::Error;

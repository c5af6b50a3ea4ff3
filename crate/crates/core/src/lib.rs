//! Exact (h,q)-extensions of Euler numbers and polynomials of arbitrary
//! order, computed over the field Q(q) of rational functions, together with
//! a verifier that checks the complete-sum, distribution and addition
//! identities by equality of canonical forms.
//!
//! - [`arith`]: big rationals, dense polynomials in `q`, canonical rational
//!   functions [`QRat`].
//! - [`series`]: truncated exponential generating series.
//! - [`euler`]: the Euler numbers and polynomials, by a convolution route and
//!   by the multinomial complete-sum route.
//! - [`verify`]: identity checks, mutation hooks and the grid runner.
//! - [`cli`]: the `hq-euler` command line and its on-disk cache.

pub mod arith;
pub mod cli;
pub mod error;
pub mod euler;
pub mod series;
pub mod verify;

pub use arith::{BigRat, QPoly, QRat};
pub use error::{Error, Result};
pub use series::{EgfSeries, ZPoly};

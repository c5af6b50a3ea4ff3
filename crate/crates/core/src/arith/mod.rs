//! The coefficient field Q(q): big rationals, dense polynomials in `q`, and
//! canonical rational functions.

mod expr;
pub(crate) mod intpoly;
mod qpoly;
mod qrat;

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

pub use expr::parse_qrat;
pub use qpoly::QPoly;
pub use qrat::{ArithOp, QRat};

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` with decimal integers.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    BigRat::from_str(s).map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Canonical text form of a rational: `"p"` when integral, otherwise `"p/q"`.
pub fn rat_to_string(r: &BigRat) -> String {
    r.to_string()
}

/// LaTeX for a rational magnitude or signed value.
pub(crate) fn rat_latex(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

pub(crate) fn is_unit(r: &BigRat) -> bool {
    r.abs().is_one()
}

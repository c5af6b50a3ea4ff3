use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::IntPoly;
use super::{is_unit, parse_rat, rat_latex, rat_to_string, BigRat};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` over Q, lowest degree first.
///
/// There is never a trailing zero coefficient; the zero polynomial is the
/// empty sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRat, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRat> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides through by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Euclidean division over Q: `self = quot * divisor + rem`, `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(ds) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if ds < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn div_exact(&self, divisor: &QPoly) -> QPoly {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(divisor).expect("exact division by zero polynomial");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd over Q[q]; `gcd(0, 0) = 0`.
    ///
    /// Runs the primitive remainder sequence over Z[q] so that intermediate
    /// coefficients stay integral and content-free.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() || a.is_one() || b.is_one() {
            return if b.is_zero() { a.monic() } else { QPoly::one() };
        }
        if a.is_constant() || b.is_constant() {
            return QPoly::one();
        }
        let (ia, _) = IntPoly::from_qpoly(a, true);
        let (ib, _) = IntPoly::from_qpoly(b, true);
        IntPoly::gcd(&ia, &ib).to_qpoly().monic()
    }

    pub fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() || b.is_zero() {
            return QPoly::zero();
        }
        let g = QPoly::gcd(a, b);
        (&a.div_exact(&g) * b).monic()
    }

    /// Horner evaluation at `q = q0`.
    pub fn eval(&self, q0: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * q0 + c)
    }

    /// The polynomial with `q` replaced by `q^d`.
    pub fn subst_qpow(&self, d: usize) -> QPoly {
        assert!(d >= 1, "substitution exponent must be positive");
        if d == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![BigRat::zero(); (self.coeffs.len() - 1) * d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * d] = c.clone();
        }
        QPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Plain text, highest degree first, e.g. `q^2 + 2*q + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            match (k, is_unit(&mag)) {
                (0, _) => out.push_str(&rat_to_string(&mag)),
                (_, true) => {}
                (_, false) => {
                    out.push_str(&rat_to_string(&mag));
                    out.push('*');
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }

    pub fn render_latex(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 || !is_unit(&mag) {
                out.push_str(&rat_latex(&mag));
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{{{k}}}")),
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub(crate) fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_to_string).collect()
    }

    /// Parses a coefficient list. Trailing zeros are accepted and stripped.
    pub fn from_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<QPoly> {
        let parsed = coeffs
            .iter()
            .map(|s| parse_rat(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(QPoly::new(parsed))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        QPoly::from_strings(&raw).map_err(D::Error::custom)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (dst, src) in coeffs.iter_mut().zip(&short.coeffs) {
            *dst += src;
        }
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        // Multiply over Z and rescale once; much cheaper than normalizing a
        // rational at every inner step.
        let (ia, sa) = IntPoly::from_qpoly(self, false);
        let (ib, sb) = IntPoly::from_qpoly(rhs, false);
        let scale = sa * sb;
        QPoly::new(
            ia.mul(&ib)
                .coeffs
                .into_iter()
                .map(|c| BigRat::from_integer(c) * &scale)
                .collect(),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(q^2 - 1, q^2 + 2q + 1) = q + 1
        assert_eq!(QPoly::gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1])), p(&[1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = p(&[2, 4]);
        assert_eq!(QPoly::gcd(&a, &QPoly::zero()), QPoly::new(vec![rat(1, 2), rat(1, 1)]));
        assert_eq!(QPoly::gcd(&QPoly::zero(), &QPoly::zero()), QPoly::zero());
    }

    #[test]
    fn gcd_coprime_linear() {
        assert_eq!(QPoly::gcd(&p(&[1, 1]), &p(&[-1, 1])), QPoly::one());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        // (q/2 + 1/3)(q - 1) and (q/2 + 1/3)(q + 5)
        let f = QPoly::new(vec![rat(1, 3), rat(1, 2)]);
        let a = &f * &p(&[-1, 1]);
        let b = &f * &p(&[5, 1]);
        assert_eq!(QPoly::gcd(&a, &b), f.monic());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -2, 0, 5, 1]);
        let b = QPoly::new(vec![rat(1, 2), rat(0, 1), rat(3, 1)]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(a.div_rem(&QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn no_trailing_zeros() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.coeffs().len(), 2);
        assert!((&a - &a).coeffs().is_empty());
    }

    #[test]
    fn render_forms() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "q^2 + 2*q + 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2*q");
        assert_eq!(QPoly::new(vec![rat(-1, 2), rat(1, 3)]).to_string(), "1/3*q - 1/2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 1]).render_latex("q"), "q^{2} + 1");
    }

    #[test]
    fn subst_qpow_spreads_coefficients() {
        assert_eq!(p(&[1, 1]).subst_qpow(3), p(&[1, 0, 0, 1]));
    }
}

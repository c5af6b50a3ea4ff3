//! Truncated exponential generating series `sum c_n t^n / n!`, stored by
//! their coefficients `c_0..c_N` with the truncation order `N` fixed at
//! construction.

mod pascal;
mod zpoly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{BigRat, QRat};
use crate::error::{Error, Result};

pub use pascal::{binomials, Pascal};
pub use zpoly::ZPoly;

/// Coefficient ring of a series.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times_int(&self, k: &BigInt) -> Self;
}

/// A ring in which nonzero elements can be inverted.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Ring for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn times_int(&self, k: &BigInt) -> Self {
        self.scale_int(k)
    }
}

impl Field for QRat {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Ring for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times_int(&self, k: &BigInt) -> Self {
        self * BigRat::from_integer(k.clone())
    }
}

impl Field for BigRat {
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Truncated EGF with coefficients in `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> EgfSeries<R> {
    /// Series of order `coeffs.len() - 1`; panics on an empty vector.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        EgfSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    /// The multiplicative identity `1`.
    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `exp(t)`: every coefficient is one.
    pub fn exp(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![R::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.times(x))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> EgfSeries<S> {
        EgfSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// EGF product: `c_n = sum_k C(n,k) a_k b_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let pascal = binomials(order);
        let coeffs = (0..=order)
            .map(|n| {
                let row = pascal.row(n);
                (0..=n).fold(R::zero(), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.plus(&a.times(b).times_int(&row[k]))
                    }
                })
            })
            .collect();
        Ok(EgfSeries { coeffs })
    }

    /// `self^v` for `v >= 1` by square-and-multiply.
    pub fn pow(&self, v: u32) -> Self {
        assert!(v >= 1, "series power must be positive");
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = v;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base).expect("same order"),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base).expect("same order");
        }
        result.expect("v >= 1")
    }
}

impl<R: Field> EgfSeries<R> {
    /// Multiplicative inverse by the triangular recurrence
    /// `b_0 = 1/a_0`, `b_n = -(1/a_0) sum_{k=1}^n C(n,k) a_k b_{n-k}`.
    pub fn inv(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let order = self.order();
        let pascal = binomials(order);
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        out.push(a0_inv.clone());
        for n in 1..=order {
            let row = pascal.row(n);
            let s = (1..=n).fold(R::zero(), |acc, k| {
                let a = &self.coeffs[k];
                if a.is_zero() || out[n - k].is_zero() {
                    acc
                } else {
                    acc.plus(&a.times(&out[n - k]).times_int(&row[k]))
                }
            });
            out.push(s.times(&a0_inv).negated());
        }
        Ok(EgfSeries { coeffs: out })
    }
}

/// `exp(t z)` with a symbolic argument: coefficient `n` is `z^n`.
pub fn exp_linear(order: usize) -> EgfSeries<ZPoly> {
    EgfSeries {
        coeffs: (0..=order).map(ZPoly::monomial).collect(),
    }
}

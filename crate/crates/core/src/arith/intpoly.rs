//! Integer-coefficient polynomials used for fraction-free gcd and for
//! accumulating large sums without rational normalization at every step.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigRat, QPoly};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct IntPoly {
    pub(crate) coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub(crate) fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub(crate) fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Splits `p` as `scale * q` with `q` integral. Every coefficient of `p`
    /// becomes an integer after multiplying by `1/scale`; the integer part is
    /// primitive with positive leading coefficient when `primitive` is set.
    pub(crate) fn from_qpoly(p: &QPoly, primitive: bool) -> (IntPoly, BigRat) {
        if p.is_zero() {
            return (IntPoly::zero(), BigRat::one());
        }
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let ip = IntPoly::new(coeffs);
        if !primitive {
            return (ip, BigRat::new(BigInt::one(), lcm));
        }
        let content = ip.content();
        let pp = ip.div_scalar(&content);
        (pp, BigRat::new(content, lcm))
    }

    pub(crate) fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().cloned().map(BigRat::from_integer).collect())
    }

    /// Gcd of the coefficients, carrying the sign of the leading coefficient.
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    pub(crate) fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        self.div_scalar(&c)
    }

    fn div_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub(crate) fn add_scaled_assign(&mut self, other: &IntPoly, k: &BigInt) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src * k;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Pseudo-remainder of `self` by `b` (sparse variant: only the steps that
    /// actually eliminate a term multiply by the leading coefficient of `b`).
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let lr = r.last().cloned().unwrap();
            let shift = r.len() - 1 - db;
            if lr.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }

    /// Primitive-remainder-sequence gcd over Z[q]; the result is primitive
    /// with a positive leading coefficient.
    pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree() == Some(0) {
                return IntPoly::new(vec![BigInt::one()]);
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.primitive_part();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q+1)(q-2) and (q+1)^2
        let g = IntPoly::gcd(&ip(&[-2, -1, 1]), &ip(&[1, 2, 1]));
        assert_eq!(g, ip(&[1, 1]));
    }

    #[test]
    fn gcd_strips_content() {
        let g = IntPoly::gcd(&ip(&[6, 6]), &ip(&[-4, -4]));
        assert_eq!(g, ip(&[1, 1]));
    }

    #[test]
    fn pseudo_rem_is_exact_for_multiples() {
        let a = ip(&[1, 2, 1]).mul(&ip(&[3, 0, 5]));
        assert!(a.pseudo_rem(&ip(&[1, 2, 1])).is_zero());
    }
}

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Ring;
use crate::arith::{BigRat, QRat};

/// Polynomial in the argument variable `z` with coefficients in Q(q),
/// lowest power first and without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZPoly {
    coeffs: Vec<QRat>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(QRat::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![QRat::zero(); k + 1];
        coeffs[k] = QRat::one();
        ZPoly { coeffs }
    }

    pub fn constant(c: QRat) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.coeffs.get(k).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at `z = x`.
    pub fn eval(&self, x: &QRat) -> QRat {
        self.coeffs
            .iter()
            .rev()
            .fold(QRat::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Specializes `q = q0` in every coefficient.
    pub fn eval_q(&self, q0: &BigRat) -> crate::Result<Vec<BigRat>> {
        self.coeffs.iter().map(|c| c.eval(q0)).collect()
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let c = c.to_string();
                match k {
                    0 => format!("({c})"),
                    1 => format!("({c})*{var}"),
                    _ => format!("({c})*{var}^{k}"),
                }
            })
            .collect();
        terms.join(" + ")
    }

    pub fn render_latex(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let c = c.render_latex("q");
                match k {
                    0 => format!("\\left({c}\\right)"),
                    1 => format!("\\left({c}\\right){var}"),
                    _ => format!("\\left({c}\\right){var}^{{{k}}}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl Ring for ZPoly {
    fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(QRat::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        ZPoly::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        ZPoly::new(out)
    }

    fn negated(&self) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(QRat::neg).collect(),
        }
    }

    fn times_int(&self, k: &BigInt) -> Self {
        ZPoly::new(self.coeffs.iter().map(|c| c.scale_int(k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn eval_horner() {
        // 1 + 2z + 3z^2 at z = 1/2
        let p = ZPoly::new(vec![QRat::from_int(1), QRat::from_int(2), QRat::from_int(3)]);
        assert_eq!(p.eval(&QRat::from_rat(rat(1, 2))), QRat::from_rat(rat(11, 4)));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn product_degree_adds() {
        let a = ZPoly::monomial(2).plus(&ZPoly::one());
        let b = ZPoly::monomial(1).negated();
        assert_eq!(a.times(&b).degree(), Some(3));
    }
}

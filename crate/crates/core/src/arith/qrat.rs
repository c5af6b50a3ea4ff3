use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BigRat, QPoly};
use crate::error::{Error, Result};

/// A rational function in `q`, always held in canonical form: numerator and
/// denominator coprime over Q[q], denominator monic, zero as `0/1`.
///
/// Because the form is unique, `==` is structural equality of both parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl QRat {
    /// Builds the canonical representative of `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<QRat> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QPoly, den: QPoly) -> QRat {
        if num.is_zero() {
            return QRat::zero();
        }
        let g = QPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Self::fold_leading(num, den)
    }

    /// Moves the leading coefficient of the denominator into the numerator.
    fn fold_leading(num: QPoly, den: QPoly) -> QRat {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            QRat { num, den }
        } else {
            let inv = lc.recip();
            QRat {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Accepts the parts only if they already form the canonical
    /// representative.
    pub fn from_canonical_parts(num: QPoly, den: QPoly) -> Result<QRat> {
        let r = QRat::new(num.clone(), den.clone())?;
        if r.num != num || r.den != den {
            return Err(Error::Parse(format!(
                "rational function ({num})/({den}) is not in canonical form"
            )));
        }
        Ok(r)
    }

    pub fn zero() -> QRat {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> QRat {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> QRat {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rat(c: BigRat) -> QRat {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_int(n: i64) -> QRat {
        Self::from_rat(super::int(n))
    }

    pub fn q() -> QRat {
        Self::from_poly(QPoly::monomial(BigRat::one(), 1))
    }

    /// `q^h` for any integer `h`; negative powers are `1/q^|h|`.
    pub fn q_pow(h: i64) -> QRat {
        let mono = QPoly::monomial(BigRat::one(), h.unsigned_abs() as usize);
        if h >= 0 {
            Self::from_poly(mono)
        } else {
            QRat {
                num: QPoly::one(),
                den: mono,
            }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the value is a q-free constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Rechecks the canonical-form invariants from scratch.
    pub fn is_canonical(&self) -> bool {
        if self.den.is_zero() || !self.den.is_monic() {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one();
        }
        QPoly::gcd(&self.num, &self.den).is_one()
    }

    pub fn scale(&self, c: &BigRat) -> QRat {
        if c.is_zero() {
            return QRat::zero();
        }
        QRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> QRat {
        self.scale(&BigRat::from_integer(k.clone()))
    }

    pub fn add(&self, other: &QRat) -> QRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(&self.num + &other.num, self.den.clone());
        }
        // With g = gcd(b, d): a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), and any
        // common factor of that fraction already divides g.
        let g = QPoly::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            if num.is_zero() {
                return QRat::zero();
            }
            return QRat {
                num,
                den: &self.den * &other.den,
            };
        }
        let d_g = other.den.div_exact(&g);
        let b_g = self.den.div_exact(&g);
        let num = &(&self.num * &d_g) + &(&other.num * &b_g);
        if num.is_zero() {
            return QRat::zero();
        }
        let den = &self.den * &d_g;
        let g2 = QPoly::gcd(&num, &g);
        if g2.is_one() {
            QRat { num, den }
        } else {
            QRat {
                num: num.div_exact(&g2),
                den: den.div_exact(&g2),
            }
        }
    }

    pub fn sub(&self, other: &QRat) -> QRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &QRat) -> QRat {
        if self.is_zero() || other.is_zero() {
            return QRat::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let g1 = QPoly::gcd(&self.num, &other.den);
        let g2 = QPoly::gcd(&other.num, &self.den);
        let num = &self.num.div_exact(&g1) * &other.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &other.den.div_exact(&g1);
        Self::fold_leading(num, den)
    }

    pub fn inv(&self) -> Result<QRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fold_leading(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &QRat) -> Result<QRat> {
        Ok(self.mul(&other.inv()?))
    }

    /// Field operation selected at runtime.
    pub fn arith(op: ArithOp, a: &QRat, b: &QRat) -> Result<QRat> {
        Ok(match op {
            ArithOp::Add => a.add(b),
            ArithOp::Sub => a.sub(b),
            ArithOp::Mul => a.mul(b),
            ArithOp::Div => a.checked_div(b)?,
        })
    }

    pub fn pow(&self, e: i64) -> Result<QRat> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(QRat {
            num: base.num.pow(e.unsigned_abs() as u32),
            den: base.den.pow(e.unsigned_abs() as u32),
        })
    }

    /// Specializes `q = q0`.
    pub fn eval(&self, q0: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// The rational function with `q` replaced by `q^d`. Coprimality and a
    /// monic denominator survive the substitution, so the result is canonical.
    pub fn subst_qpow(&self, d: u32) -> QRat {
        assert!(d >= 1, "substitution exponent must be positive");
        QRat {
            num: self.num.subst_qpow(d as usize),
            den: self.den.subst_qpow(d as usize),
        }
    }

    /// Plain text such as `-2*q/(q^2 + 2*q + 1)`; parseable by
    /// [`parse_qrat`](super::parse_qrat).
    pub fn render(&self, var: &str) -> String {
        let num = self.num.render(var);
        if self.den.is_one() {
            return num;
        }
        let num = if self.num.term_count() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = self.den.render(var);
        if self.den.term_count() > 1 {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }

    pub fn render_latex(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.render_latex(var)
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.render_latex(var),
                self.den.render_latex(var)
            )
        }
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

#[derive(Serialize, Deserialize)]
struct QRatRepr {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QRatRepr {
            num: self.num.to_strings(),
            den: self.den.to_strings(),
        }
        .serialize(s)
    }
}

/// Deserialization is strict: the stored parts must already be canonical,
/// so that a value read back is bit-identical to the value written.
impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = QRatRepr::deserialize(d)?;
        let num = QPoly::from_strings(&repr.num).map_err(D::Error::custom)?;
        let den = QPoly::from_strings(&repr.den).map_err(D::Error::custom)?;
        if num.coeffs().len() != repr.num.len() || den.coeffs().len() != repr.den.len() {
            return Err(D::Error::custom("coefficient list has trailing zeros"));
        }
        if num.to_strings() != repr.num || den.to_strings() != repr.den {
            return Err(D::Error::custom("coefficients are not in canonical text form"));
        }
        QRat::from_canonical_parts(num, den).map_err(D::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                QRat::$m(self, rhs)
            }
        }
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                QRat::$m(&self, &rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for &QRat {
    type Output = QRat;
    /// Panics on division by zero; use [`QRat::checked_div`] to recover.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat::neg(self)
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat::neg(&self)
    }
}

impl From<BigRat> for QRat {
    fn from(c: BigRat) -> Self {
        QRat::from_rat(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn r(n: &[i64], d: &[i64]) -> QRat {
        QRat::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let x = r(&[2, 2], &[1, 2, 1]);
        assert_eq!(x.num(), &p(&[2]));
        assert_eq!(x.den(), &p(&[1, 1]));
    }

    #[test]
    fn normalize_zero_and_monic() {
        assert_eq!(r(&[], &[1, 1]), QRat::zero());
        assert_eq!(r(&[], &[1, 1]).den(), &QPoly::one());
        let x = r(&[0, 3], &[3]);
        assert_eq!(x.num(), &p(&[0, 1]));
        assert_eq!(x.den(), &QPoly::one());
        assert_eq!(QRat::new(p(&[1]), QPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arith_examples() {
        let one = QRat::one();
        assert_eq!(r(&[1], &[1, 1]) + r(&[0, 1], &[1, 1]), one);
        assert_eq!(r(&[2], &[1, 1]) * r(&[1, 1], &[2]), one);
        assert_eq!(
            QRat::arith(ArithOp::Div, &one, &QRat::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn add_with_shared_denominator_factor() {
        // 1/(q+1)^2 - 1/((q+1)(q-1)) = -2/((q+1)^2 (q-1))
        let a = r(&[1], &[1, 2, 1]);
        let b = r(&[1], &[-1, 0, 1]);
        let s = &a - &b;
        assert!(s.is_canonical());
        let expect = QRat::new(p(&[-2]), &p(&[1, 2, 1]) * &p(&[-1, 1])).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn eval_and_pole() {
        let x = r(&[2], &[1, 1]);
        assert_eq!(x.eval(&rat(1, 1)), Ok(rat(1, 1)));
        assert!(matches!(x.eval(&rat(-1, 1)), Err(Error::Pole(_))));
        assert_eq!(QRat::q().eval(&rat(3, 2)), Ok(rat(3, 2)));
    }

    #[test]
    fn subst_examples() {
        assert_eq!(r(&[2], &[1, 1]).subst_qpow(3), r(&[2], &[1, 0, 0, 1]));
        let x = r(&[0, 1], &[-1, 1]);
        assert_eq!(x.subst_qpow(1), x);
        assert_eq!(x.subst_qpow(2), r(&[0, 0, 1], &[-1, 0, 1]));
    }

    #[test]
    fn negative_q_powers() {
        let qm2 = QRat::q_pow(-2);
        assert_eq!(qm2.num(), &QPoly::one());
        assert_eq!(qm2.den(), &p(&[0, 0, 1]));
        assert_eq!(&qm2 * &QRat::q_pow(2), QRat::one());
        assert_eq!(QRat::q_pow(0), QRat::one());
    }

    #[test]
    fn json_shape() {
        let x = r(&[0, -2], &[1, 2, 1]);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"num":["0","-2"],"den":["1","2","1"]}"#
        );
        let back: QRat = serde_json::from_str(r#"{"num":["0","-2"],"den":["1","2","1"]}"#).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_rejects_non_canonical() {
        for bad in [
            r#"{"num":["2","2"],"den":["1","2","1"]}"#,
            r#"{"num":["1"],"den":["2"]}"#,
            r#"{"num":["1","0"],"den":["1"]}"#,
            r#"{"num":["2/4"],"den":["1"]}"#,
            r#"{"num":["1"],"den":[]}"#,
        ] {
            assert!(serde_json::from_str::<QRat>(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn render_forms() {
        assert_eq!(r(&[2], &[1, 1]).to_string(), "2/(q + 1)");
        assert_eq!(r(&[0, -2], &[1, 2, 1]).to_string(), "-2*q/(q^2 + 2*q + 1)");
        assert_eq!(QRat::q_pow(-2).to_string(), "1/q^2");
        assert_eq!(r(&[1, 1], &[0, 1]).to_string(), "(q + 1)/q");
        assert_eq!(r(&[2], &[1, 1]).render_latex("q"), "\\frac{2}{q + 1}");
    }
}

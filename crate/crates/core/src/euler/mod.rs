//! (h,q)-Euler numbers `E_{n,q}^{(h)}`, their order-`v` versions
//! `E_{n,q}^{(h,v)}`, and the polynomials `E_{n,q}^{(h,v)}(z)`.
//!
//! The order-1 numbers are the coefficients of `2 / (q^h e^t + 1)`. They are
//! produced by the recurrence `q^h sum_{l<=n} C(n,l) E_l + E_n = 2[n=0]`;
//! [`euler_gf`] gives the same values by series inversion. Higher orders come
//! from the `v`-th power of the generating series, and independently from the
//! multinomial complete sum over compositions of `n`.

mod complete_sum;
mod compositions;
mod engine;

use crate::arith::{BigRat, QRat};
use crate::error::{Error, Result};
use crate::series::{binomials, EgfSeries, ZPoly};

pub use complete_sum::{check_cap, complete_sum};
pub use compositions::{composition_count, compositions, multinomial_coeff, Composition, Compositions};
pub use engine::{CachedSequence, EulerEngine};

/// Default limit on the number of compositions the multinomial route may enumerate.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Parameters of one family of values: `h` (any integer), order `v >= 1`,
/// and the highest index `nmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EulerParams {
    pub h: i64,
    pub v: u32,
    pub nmax: u32,
}

impl EulerParams {
    pub fn new(h: i64, v: u32, nmax: u32) -> Result<Self> {
        if v == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(EulerParams { h, v, nmax })
    }
}

/// Generating series `2 / (q^h e^t + 1)` to order `order`, built as
/// `2 * (q^h exp(t) + 1)^{-1}`.
pub fn euler_gf(h: i64, order: usize) -> EgfSeries<QRat> {
    let qh = QRat::q_pow(h);
    let mut coeffs = vec![qh.clone(); order + 1];
    coeffs[0] = qh.add(&QRat::one());
    EgfSeries::new(coeffs)
        .inv()
        .expect("q^h + 1 is a nonzero rational function")
        .scale(&QRat::from_int(2))
}

/// `E_0..E_nmax` of order 1, from
/// `(q^h + 1) E_n = 2[n=0] - q^h sum_{l<n} C(n,l) E_l`.
pub fn euler_numbers(h: i64, nmax: u32) -> Vec<QRat> {
    let qh = QRat::q_pow(h);
    let denom = qh.add(&QRat::one());
    let step = qh.neg().checked_div(&denom).expect("q^h + 1 != 0");
    let pascal = binomials(nmax as usize);
    let mut out = Vec::with_capacity(nmax as usize + 1);
    out.push(QRat::from_int(2).checked_div(&denom).expect("q^h + 1 != 0"));
    for n in 1..=nmax as usize {
        let row = pascal.row(n);
        let s = (0..n).fold(QRat::zero(), |acc, l| acc.add(&out[l].scale_int(&row[l])));
        out.push(step.mul(&s));
    }
    out
}

pub fn euler_number(n: u32, h: i64) -> QRat {
    euler_numbers(h, n).swap_remove(n as usize)
}

/// Order-`v` numbers from order-1 numbers: coefficients of the `v`-th power
/// of their exponential generating series.
pub fn higher_from_base(base: &[QRat], v: u32) -> Vec<QRat> {
    assert!(v >= 1, "order must be positive");
    if v == 1 {
        return base.to_vec();
    }
    EgfSeries::new(base.to_vec()).pow(v).into_coeffs()
}

pub fn euler_numbers_higher(h: i64, v: u32, nmax: u32) -> Vec<QRat> {
    higher_from_base(&euler_numbers(h, nmax), v)
}

pub fn euler_number_higher(n: u32, h: i64, v: u32) -> QRat {
    euler_numbers_higher(h, v, n).swap_remove(n as usize)
}

/// `E_{n,q}^{(h,v)}` as the multinomial complete sum of products of order-1
/// numbers. Exponential in `v`; refuses more than `cap` compositions.
pub fn euler_number_higher_multinomial(n: u32, h: i64, v: u32, cap: u64) -> Result<QRat> {
    if v == 0 {
        return Err(Error::ZeroOrder);
    }
    check_cap(n, v, cap)?;
    let base = euler_numbers(h, n);
    complete_sum(&vec![base; v as usize], n, cap)
}

/// `sum_l C(n,l) z^{n-l} numbers[l]` as a polynomial in `z`.
pub fn poly_from_numbers(numbers: &[QRat], n: u32) -> ZPoly {
    let n = n as usize;
    let pascal = binomials(n);
    ZPoly::new(
        (0..=n)
            .map(|k| numbers[n - k].scale_int(pascal.get(n, n - k)))
            .collect(),
    )
}

/// `sum_l C(n,l) x^{n-l} numbers[l]`: the polynomial of [`poly_from_numbers`]
/// evaluated at `z = x` without building it.
pub fn eval_from_numbers(numbers: &[QRat], n: u32, x: &QRat) -> QRat {
    let n = n as usize;
    let pascal = binomials(n);
    let row = pascal.row(n);
    let mut acc = QRat::zero();
    let mut xp = QRat::one();
    for l in (0..=n).rev() {
        if !numbers[l].is_zero() {
            acc = acc.add(&numbers[l].mul(&xp).scale_int(&row[l]));
        }
        if l > 0 {
            if x.is_zero() {
                break;
            }
            xp = xp.mul(x);
        }
    }
    acc
}

/// `E_{n,q}^{(h,v)}(z)`, degree exactly `n` in `z`.
pub fn euler_poly(n: u32, h: i64, v: u32) -> ZPoly {
    poly_from_numbers(&euler_numbers_higher(h, v, n), n)
}

/// `E_{n,q}^{(h,v)}(x)` for an argument `x` in Q(q).
pub fn euler_poly_eval(n: u32, h: i64, v: u32, x: &QRat) -> QRat {
    eval_from_numbers(&euler_numbers_higher(h, v, n), n, x)
}

/// Classical higher-order Euler number: `E_{n,q}^{(1,v)}` at `q = 1`.
pub fn classical_euler(n: u32, v: u32) -> BigRat {
    euler_number_higher(n, 1, v)
        .eval(&BigRat::from_integer(1.into()))
        .expect("no pole at q = 1 when h = 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, QPoly};

    fn r(n: &[i64], d: &[i64]) -> QRat {
        QRat::new(QPoly::from_ints(n), QPoly::from_ints(d)).unwrap()
    }

    // (q+1)^k as integer coefficients
    fn qp1_pow(k: u32) -> Vec<i64> {
        QPoly::from_ints(&[1, 1])
            .pow(k)
            .coeffs()
            .iter()
            .map(|c| c.numer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn first_numbers_h1() {
        let e = euler_numbers(1, 2);
        assert_eq!(e[0], r(&[2], &[1, 1]));
        assert_eq!(e[1], r(&[0, -2], &qp1_pow(2)));
        // 2q(q-1)/(q+1)^3
        assert_eq!(e[2], r(&[0, -2, 2], &qp1_pow(3)));
    }

    #[test]
    fn recurrence_matches_series_inversion() {
        for h in -2..=3 {
            let gf = euler_gf(h, 8);
            assert_eq!(gf.coeffs(), euler_numbers(h, 8).as_slice(), "h = {h}");
        }
    }

    #[test]
    fn zeroth_number_any_h() {
        for h in -2..=3 {
            let expect = QRat::from_int(2).checked_div(&QRat::q_pow(h).add(&QRat::one())).unwrap();
            assert_eq!(euler_number(0, h), expect);
        }
    }

    #[test]
    fn higher_examples() {
        // (0,h,v) -> 2^v / (q^h + 1)^v
        let e = euler_number_higher(0, 2, 3);
        let expect = QRat::new(QPoly::from_ints(&[8]), QPoly::from_ints(&[1, 0, 1]).pow(3)).unwrap();
        assert_eq!(e, expect);
        // (1,1,2) -> -8q/(q+1)^3
        assert_eq!(euler_number_higher(1, 1, 2), r(&[0, -8], &qp1_pow(3)));
        for n in 0..6 {
            assert_eq!(euler_number_higher(n, -1, 1), euler_number(n, -1));
        }
    }

    #[test]
    fn multinomial_route_examples() {
        assert_eq!(
            euler_number_higher_multinomial(1, 1, 2, DEFAULT_CAP).unwrap(),
            r(&[0, -8], &qp1_pow(3))
        );
        assert_eq!(
            euler_number_higher_multinomial(0, 3, 4, DEFAULT_CAP).unwrap(),
            euler_number_higher(0, 3, 4)
        );
        assert_eq!(
            euler_number_higher_multinomial(2, 1, 2, DEFAULT_CAP).unwrap(),
            euler_number_higher(2, 1, 2)
        );
        assert!(matches!(
            euler_number_higher_multinomial(30, 1, 12, 1000),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(euler_number_higher_multinomial(1, 1, 0, 10), Err(Error::ZeroOrder));
    }

    #[test]
    fn poly_examples() {
        let p0 = euler_poly(0, 1, 2);
        assert_eq!(p0.coeffs(), &[euler_number_higher(0, 1, 2)]);
        // n=1, h=1, v=1: (2/(q+1)) z - 2q/(q+1)^2
        let p1 = euler_poly(1, 1, 1);
        assert_eq!(p1.coeffs(), &[r(&[0, -2], &qp1_pow(2)), r(&[2], &[1, 1])]);
        assert_eq!(euler_poly_eval(1, 1, 1, &QRat::one()), r(&[2], &qp1_pow(2)));
        for n in 0..5 {
            let p = euler_poly(n, -1, 3);
            assert_eq!(p.degree(), Some(n as usize));
            assert_eq!(p.coeff(0), euler_number_higher(n, -1, 3));
            assert_eq!(euler_poly_eval(n, -1, 3, &QRat::zero()), euler_number_higher(n, -1, 3));
        }
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_euler(0, 1), rat(1, 1));
        assert_eq!(classical_euler(1, 1), rat(-1, 2));
        assert_eq!(classical_euler(2, 1), rat(0, 1));
        assert_eq!(classical_euler(3, 1), rat(1, 4));
    }

    #[test]
    fn params_reject_zero_order() {
        assert_eq!(EulerParams::new(1, 0, 3), Err(Error::ZeroOrder));
        assert!(EulerParams::new(-2, 1, 0).is_ok());
    }
}

//! Classical Euler numbers with no `q` anywhere: coefficients of
//! `(2 / (e^t + 1))^v`, from plain rational series arithmetic. Used as an
//! oracle for the `q -> 1` limit, so it deliberately shares no code with the
//! series or Euler modules.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::arith::BigRat;

fn choose(n: usize, k: usize) -> BigRat {
    BigRat::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// `E_0..E_nmax` of `2 / (e^t + 1)` by inverting `(e^t + 1) / 2`.
pub fn classical_euler_numbers(nmax: usize) -> Vec<BigRat> {
    // a = (e^t + 1)/2: a_0 = 1, a_k = 1/2 for k >= 1; b = a^{-1}.
    let half = BigRat::new(BigInt::one(), BigInt::from(2));
    let mut b: Vec<BigRat> = vec![BigRat::one()];
    for n in 1..=nmax {
        let mut s = BigRat::zero();
        for k in 1..=n {
            s += choose(n, k) * &half * &b[n - k];
        }
        b.push(-s);
    }
    b
}

/// Coefficient `n` of `(2 / (e^t + 1))^v` for `n <= nmax`, by repeated
/// binomial convolution.
pub fn classical_higher(nmax: usize, v: u32) -> Vec<BigRat> {
    let base = classical_euler_numbers(nmax);
    let mut acc = base.clone();
    for _ in 1..v {
        acc = (0..=nmax)
            .map(|n| {
                (0..=n).fold(BigRat::zero(), |s, k| s + choose(n, k) * &acc[k] * &base[n - k])
            })
            .collect();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn known_values() {
        // 2/(e^t+1) = 1 - t/2 + t^3/24 - t^5/240 + ...
        let e = classical_euler_numbers(7);
        let expect = [rat(1, 1), rat(-1, 2), rat(0, 1), rat(1, 4), rat(0, 1), rat(-1, 2), rat(0, 1), rat(17, 8)];
        assert_eq!(e, expect);
    }

    #[test]
    fn order_two_by_hand() {
        // (2/(e^t+1))^2: c_1 = 2 E_0 E_1 = -1, c_2 = 2 E_0 E_2 + 2 E_1^2 = 1/2
        let e = classical_higher(2, 2);
        assert_eq!(e, vec![rat(1, 1), rat(-1, 1), rat(1, 2)]);
    }
}

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use super::compositions::{composition_count, compositions, multinomial_coeff};
use crate::arith::intpoly::IntPoly;
use crate::arith::{BigRat, QPoly, QRat};
use crate::error::{Error, Result};

/// Refuses enumerations larger than `cap` compositions.
pub fn check_cap(n: u32, v: u32, cap: u64) -> Result<()> {
    let count = composition_count(n, v);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: count.to_string(),
            cap,
        });
    }
    Ok(())
}

/// Complete sum of products
/// `sum_{l_1+..+l_v=n} multinomial(n; l) prod_j factors[j][l_j]`
/// over every weak composition, one term per composition.
///
/// All factors are first written over one common denominator `D` with
/// integer numerators, so the enumeration itself is pure Z[q] arithmetic and
/// the sum is canonicalized once at the end. Each `factors[j]` must hold at
/// least `n + 1` values.
pub fn complete_sum(factors: &[Vec<QRat>], n: u32, cap: u64) -> Result<QRat> {
    let v = u32::try_from(factors.len()).map_err(|_| Error::ZeroOrder)?;
    if v == 0 {
        return Err(Error::ZeroOrder);
    }
    check_cap(n, v, cap)?;
    let width = n as usize + 1;
    for f in factors {
        if f.len() < width {
            return Err(Error::ArgumentCount {
                expected: width,
                got: f.len(),
            });
        }
    }

    let mut common_den = QPoly::one();
    for value in factors.iter().flat_map(|f| &f[..width]) {
        if !value.is_zero() && value.den() != &common_den {
            common_den = QPoly::lcm(&common_den, value.den());
        }
    }

    // Per factor j: integer numerators N_{j,l} and one integer scale M_j with
    // factors[j][l] = N_{j,l} / (M_j * D).
    let mut numerators: Vec<Vec<IntPoly>> = Vec::with_capacity(factors.len());
    let mut scale_den = BigInt::one();
    for f in factors {
        let split: Vec<(IntPoly, BigRat)> = f[..width]
            .iter()
            .map(|value| {
                let lifted = value.num() * &common_den.div_exact(value.den());
                IntPoly::from_qpoly(&lifted, false)
            })
            .collect();
        let m = split
            .iter()
            .fold(BigInt::one(), |acc, (_, s)| acc.lcm(s.denom()));
        let row = split
            .into_iter()
            .map(|(mut p, s)| {
                let k = &m / s.denom();
                if !k.is_one() {
                    p = p.mul(&IntPoly::new(vec![k]));
                }
                p
            })
            .collect();
        numerators.push(row);
        scale_den *= m;
    }

    let mut acc = IntPoly::zero();
    let mut prefix: Vec<IntPoly> = vec![IntPoly::new(vec![BigInt::one()])];
    let mut prev: Option<Vec<u32>> = None;
    for comp in compositions(n, v) {
        let parts = comp.parts();
        let keep = match &prev {
            Some(p) => p.iter().zip(parts).take_while(|(a, b)| a == b).count(),
            None => 0,
        };
        prefix.truncate(keep + 1);
        for j in keep..parts.len() {
            let next = prefix[j].mul(&numerators[j][parts[j] as usize]);
            prefix.push(next);
        }
        let weight = BigInt::from(multinomial_coeff(&comp));
        acc.add_scaled_assign(&prefix[parts.len()], &weight);
        prev = Some(parts.to_vec());
    }

    let num = acc.to_qpoly().scale(&BigRat::new(BigInt::one(), scale_den));
    QRat::new(num, common_den.pow(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn single_factor_is_identity() {
        let f = vec![QRat::from_int(3), QRat::q(), QRat::q_pow(-1)];
        for n in 0..3 {
            assert_eq!(complete_sum(&[f.clone()], n, 100).unwrap(), f[n as usize]);
        }
    }

    #[test]
    fn two_factors_match_binomial_convolution() {
        let a: Vec<QRat> = (0..4)
            .map(|k| QRat::new(QPoly::from_ints(&[k, 1]), QPoly::from_ints(&[1, 1])).unwrap())
            .collect();
        let b: Vec<QRat> = (0..4).map(|k| QRat::from_rat(rat(k + 1, 3)).mul(&QRat::q_pow(-(k)))).collect();
        let n = 3usize;
        let binom = [1, 3, 3, 1];
        let mut expect = QRat::zero();
        for l in 0..=n {
            expect = expect.add(&a[l].mul(&b[n - l]).scale(&rat(binom[l], 1)));
        }
        assert_eq!(complete_sum(&[a, b], 3, 100).unwrap(), expect);
    }

    #[test]
    fn cap_is_enforced() {
        let f = vec![QRat::one(); 11];
        let err = complete_sum(&[f.clone(), f.clone(), f], 10, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}

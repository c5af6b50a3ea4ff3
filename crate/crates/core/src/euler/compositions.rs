use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::One;
use serde::Serialize;

/// Weak composition `l_1 + ... + l_v = n` with every `l_j >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Iterator over the weak compositions of `n` into `v` parts in
/// lexicographic order, from `(0,..,0,n)` to `(n,0,..,0)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let v = current.len();
        // Successor: bump the rightmost slot that still has mass after it and
        // push all of that mass (minus one) to the last slot.
        let mut suffix = 0u32;
        let mut succ = None;
        for i in (0..v.saturating_sub(1)).rev() {
            suffix += current[i + 1];
            if suffix > 0 {
                let mut s = current.clone();
                s[i] += 1;
                for x in &mut s[i + 1..] {
                    *x = 0;
                }
                s[v - 1] = suffix - 1;
                succ = Some(s);
                break;
            }
        }
        self.next = succ;
        Some(Composition(current))
    }
}

/// All weak compositions of `n` into `v >= 1` parts.
pub fn compositions(n: u32, v: u32) -> Compositions {
    assert!(v >= 1, "compositions need at least one part");
    let mut first = vec![0; v as usize];
    first[v as usize - 1] = n;
    Compositions { next: Some(first) }
}

/// `C(n + v - 1, v - 1)`, the number of weak compositions of `n` into `v` parts.
pub fn composition_count(n: u32, v: u32) -> BigUint {
    assert!(v >= 1, "compositions need at least one part");
    binomial(BigUint::from(n + v - 1), BigUint::from(v - 1))
}

/// `n! / (l_1! ... l_v!)` computed as the telescoping product
/// `C(l_1+..+l_v, l_2+..+l_v) C(l_2+..+l_v, l_3+..+l_v) ... C(l_{v-1}+l_v, l_v)`.
pub fn multinomial_coeff(c: &Composition) -> BigUint {
    let parts = c.parts();
    let mut suffix: u32 = parts.iter().sum();
    let mut acc = BigUint::one();
    for &l in parts.iter().take(parts.len().saturating_sub(1)) {
        let rest = suffix - l;
        if l != 0 && rest != 0 {
            acc *= binomial(BigUint::from(suffix), BigUint::from(rest));
        }
        suffix = rest;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: u32, v: u32) -> Vec<Vec<u32>> {
        compositions(n, v).map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(all(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(all(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(all(3, 1), vec![vec![3]]);
    }

    #[test]
    fn counts_match_stars_and_bars() {
        for n in 0..7 {
            for v in 1..5 {
                let list = all(n, v);
                assert_eq!(BigUint::from(list.len()), composition_count(n, v));
                assert!(list.windows(2).all(|w| w[0] < w[1]), "not strictly lexicographic");
                assert!(list.iter().all(|c| c.iter().sum::<u32>() == n));
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        let m = |p: &[u32]| multinomial_coeff(&Composition::new(p.to_vec()));
        assert_eq!(m(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(m(&[2, 1, 1]), BigUint::from(12u32));
        assert_eq!(m(&[0, 0, 0, 0]), BigUint::from(1u32));
        assert_eq!(m(&[]), BigUint::from(1u32));
    }
}

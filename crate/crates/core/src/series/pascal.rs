use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

/// Rows `0..=order` of Pascal's triangle.
#[derive(Debug)]
pub struct Pascal {
    rows: Vec<Vec<BigInt>>,
}

impl Pascal {
    fn build(order: usize) -> Pascal {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        Pascal { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`; panics outside the table or for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

static TABLE: OnceLock<RwLock<Arc<Pascal>>> = OnceLock::new();

/// Shared Pascal table covering at least rows `0..=order`. The cache only
/// ever grows, and readers keep whatever snapshot they were handed.
pub fn binomials(order: usize) -> Arc<Pascal> {
    let lock = TABLE.get_or_init(|| RwLock::new(Arc::new(Pascal::build(32))));
    {
        let t = lock.read().expect("pascal cache poisoned");
        if t.order() >= order {
            return Arc::clone(&t);
        }
    }
    let mut t = lock.write().expect("pascal cache poisoned");
    if t.order() < order {
        *t = Arc::new(Pascal::build(order.max(2 * t.order())));
    }
    Arc::clone(&t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grows_on_demand() {
        let t = binomials(100);
        assert!(t.order() >= 100);
        assert_eq!(t.get(100, 50), &num_integer::binomial(BigInt::from(100), BigInt::from(50)));
        assert_eq!(t.get(6, 2), &BigInt::from(15));
    }
}

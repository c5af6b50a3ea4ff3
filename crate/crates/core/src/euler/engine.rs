use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::arith::QRat;
use crate::series::ZPoly;

use super::{eval_from_numbers, euler_numbers, higher_from_base, poly_from_numbers};

/// A memoized prefix `E_0..E_{len-1}` of order `v` at parameter `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CachedSequence {
    pub h: i64,
    pub v: u32,
    pub values: Vec<QRat>,
}

type Memo = RwLock<HashMap<(i64, u32), Arc<Vec<QRat>>>>;

/// Computes Euler number sequences, optionally memoized by `(h, v)`.
///
/// The memo is transparent: a memoized engine and [`EulerEngine::uncached`]
/// return identical values. Order-1 sequences feed the higher orders.
#[derive(Debug, Default)]
pub struct EulerEngine {
    memo: Option<Memo>,
}

impl EulerEngine {
    pub fn new() -> Self {
        EulerEngine {
            memo: Some(RwLock::new(HashMap::new())),
        }
    }

    pub fn uncached() -> Self {
        EulerEngine { memo: None }
    }

    /// `E_0..E_n` (at least) of order `v` at parameter `h`.
    pub fn numbers(&self, h: i64, v: u32, nmax: u32) -> Arc<Vec<QRat>> {
        let need = nmax as usize + 1;
        if let Some(memo) = &self.memo {
            if let Some(seq) = memo.read().expect("memo poisoned").get(&(h, v)) {
                if seq.len() >= need {
                    return Arc::clone(seq);
                }
            }
        }
        let values = if v == 1 {
            euler_numbers(h, nmax)
        } else {
            let base = self.numbers(h, 1, nmax);
            higher_from_base(&base[..need], v)
        };
        let values = Arc::new(values);
        if let Some(memo) = &self.memo {
            let mut m = memo.write().expect("memo poisoned");
            let slot = m.entry((h, v)).or_insert_with(|| Arc::clone(&values));
            if slot.len() < values.len() {
                *slot = Arc::clone(&values);
            }
        }
        values
    }

    pub fn number(&self, n: u32, h: i64, v: u32) -> QRat {
        self.numbers(h, v, n)[n as usize].clone()
    }

    pub fn poly(&self, n: u32, h: i64, v: u32) -> ZPoly {
        poly_from_numbers(&self.numbers(h, v, n), n)
    }

    pub fn poly_eval(&self, n: u32, h: i64, v: u32, x: &QRat) -> QRat {
        eval_from_numbers(&self.numbers(h, v, n), n, x)
    }

    /// Snapshot of every memoized sequence, sorted by `(h, v)`.
    pub fn export(&self) -> Vec<CachedSequence> {
        let Some(memo) = &self.memo else {
            return Vec::new();
        };
        let m = memo.read().expect("memo poisoned");
        let mut out: Vec<CachedSequence> = m
            .iter()
            .map(|(&(h, v), seq)| CachedSequence {
                h,
                v,
                values: seq.as_ref().clone(),
            })
            .collect();
        out.sort_by_key(|s| (s.h, s.v));
        out
    }

    /// Seeds the memo with previously exported sequences. Has no effect on an
    /// uncached engine; a longer existing prefix is kept.
    pub fn preload(&self, seqs: Vec<CachedSequence>) {
        let Some(memo) = &self.memo else {
            return;
        };
        let mut m = memo.write().expect("memo poisoned");
        for s in seqs {
            if s.v == 0 || s.values.is_empty() {
                continue;
            }
            let slot = m.entry((s.h, s.v)).or_default();
            if slot.len() < s.values.len() {
                *slot = Arc::new(s.values);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::euler_numbers_higher;

    #[test]
    fn memo_is_transparent() {
        let cached = EulerEngine::new();
        let cold = EulerEngine::uncached();
        // Grow a sequence in two steps to exercise prefix extension.
        let _ = cached.numbers(2, 3, 3);
        for n in 0..8 {
            assert_eq!(cached.number(n, 2, 3), cold.number(n, 2, 3));
        }
        assert_eq!(cached.numbers(2, 3, 7)[..8], euler_numbers_higher(2, 3, 7)[..]);
    }

    #[test]
    fn export_preload_round_trip() {
        let a = EulerEngine::new();
        let _ = a.numbers(-1, 2, 5);
        let snapshot = a.export();
        assert_eq!(snapshot.iter().map(|s| (s.h, s.v)).collect::<Vec<_>>(), vec![(-1, 1), (-1, 2)]);
        let b = EulerEngine::new();
        b.preload(snapshot.clone());
        assert_eq!(b.export(), snapshot);
        assert_eq!(b.number(5, -1, 2), a.number(5, -1, 2));
    }
}

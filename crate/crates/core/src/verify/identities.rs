use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::classical::classical_higher;
use super::{Identity, Mutation, Params, Status, VerifyReport, Witness, FINAL_COROLLARY_NOTE};
use crate::arith::{BigRat, QRat};
use crate::error::{Error, Result};
use crate::euler::{complete_sum, eval_from_numbers, euler_gf, higher_from_base, EulerEngine, DEFAULT_CAP};
use crate::series::binomials;

/// Runs identity checks against an [`EulerEngine`].
///
/// The side of each identity that is built from the engine's own order-`v`
/// values is called the reference side; the other side is assembled from
/// order-1 numbers (through compositions, substitution, or shifts), and that
/// is where an optional [`Mutation`] is injected.
pub struct Verifier<'a> {
    engine: &'a EulerEngine,
    mutation: Option<Mutation>,
    cap: u64,
    sums: RwLock<HashMap<(i64, u32, u32), QRat>>,
}

fn params(n: u32) -> Params {
    Params {
        n,
        ..Params::default()
    }
}

impl<'a> Verifier<'a> {
    pub fn new(engine: &'a EulerEngine) -> Self {
        Verifier {
            engine,
            mutation: None,
            cap: DEFAULT_CAP,
            sums: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_mutation(mut self, mutation: Mutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub fn engine(&self) -> &EulerEngine {
        self.engine
    }

    /// Order-1 numbers `E_0..E_nmax` with the mutation, if any, applied.
    fn assembled_order1(&self, h: i64, nmax: u32) -> Vec<QRat> {
        let mut base = self.engine.numbers(h, 1, nmax)[..=nmax as usize].to_vec();
        if let Some(m) = &self.mutation {
            m.apply(&mut base);
        }
        base
    }

    /// Order-`v` numbers rebuilt from the (possibly mutated) order-1 numbers.
    fn assembled_higher(&self, h: i64, v: u32, nmax: u32) -> Vec<QRat> {
        if self.mutation.is_none() {
            return self.engine.numbers(h, v, nmax)[..=nmax as usize].to_vec();
        }
        higher_from_base(&self.assembled_order1(h, nmax), v)
    }

    /// `sum_{l_1+..+l_v=n} multinomial * prod E_{l_j}^{(h)}`, memoized.
    fn multinomial_number(&self, n: u32, h: i64, v: u32) -> Result<QRat> {
        if let Some(x) = self.sums.read().expect("memo poisoned").get(&(h, v, n)) {
            return Ok(x.clone());
        }
        let base = self.assembled_order1(h, n);
        let value = complete_sum(&vec![base; v as usize], n, self.cap)?;
        self.sums
            .write()
            .expect("memo poisoned")
            .insert((h, v, n), value.clone());
        Ok(value)
    }

    /// `q^h E_n(1) + E_n = 2[n=0]` at order 1. The numbers here come from
    /// series inversion, not from the recurrence the engine uses.
    pub fn verify_recurrence(&self, n: u32, h: i64) -> VerifyReport {
        let mut numbers = euler_gf(h, n as usize).into_coeffs();
        if let Some(m) = &self.mutation {
            m.apply(&mut numbers);
        }
        let at_one = eval_from_numbers(&numbers, n, &QRat::one());
        let lhs = QRat::q_pow(h).mul(&at_one).add(&numbers[n as usize]);
        let rhs = if n == 0 { QRat::from_int(2) } else { QRat::zero() };
        let p = Params {
            h: Some(h),
            ..params(n)
        };
        VerifyReport::exact(Identity::Recurrence, p, lhs, rhs)
    }

    /// `E_n^{(h,v)} = sum multinomial(n; l) prod_j E_{l_j}^{(h)}`.
    pub fn verify_complete_sum_numbers(&self, n: u32, h: i64, v: u32) -> Result<VerifyReport> {
        if v == 0 {
            return Err(Error::ZeroOrder);
        }
        let lhs = self.engine.number(n, h, v);
        let rhs = self.multinomial_number(n, h, v)?;
        let p = Params {
            h: Some(h),
            v: Some(v),
            ..params(n)
        };
        Ok(VerifyReport::exact(Identity::CompleteSumNumbers, p, lhs, rhs))
    }

    /// `E_n^{(h,v)}(y_1+..+y_v) = sum multinomial(n; l) prod_j E_{l_j}^{(h)}(y_j)`.
    pub fn verify_complete_sum_polys(&self, n: u32, h: i64, v: u32, ys: &[QRat]) -> Result<VerifyReport> {
        if v == 0 {
            return Err(Error::ZeroOrder);
        }
        if ys.len() != v as usize {
            return Err(Error::ArgumentCount {
                expected: v as usize,
                got: ys.len(),
            });
        }
        let total = ys.iter().fold(QRat::zero(), |acc, y| acc.add(y));
        let lhs = self.engine.poly_eval(n, h, v, &total);
        let base = self.assembled_order1(h, n);
        let factors: Vec<Vec<QRat>> = ys
            .iter()
            .map(|y| (0..=n).map(|l| eval_from_numbers(&base, l, y)).collect())
            .collect();
        let rhs = complete_sum(&factors, n, self.cap)?;
        let p = Params {
            h: Some(h),
            v: Some(v),
            args: ys.iter().map(QRat::to_string).collect(),
            ..params(n)
        };
        Ok(VerifyReport::exact(Identity::CompleteSumPolys, p, lhs, rhs))
    }

    /// `E_k^{(h)}(x) = d^k sum_{a<d} (-1)^a q^{ha} E_{k,q^d}^{(h)}((x+a)/d)` for odd `d`.
    pub fn verify_distribution(&self, k: u32, h: i64, d: u32, x: &QRat) -> Result<VerifyReport> {
        if d == 0 || d % 2 == 0 {
            return Err(Error::EvenModulus(d));
        }
        let lhs = self.engine.poly_eval(k, h, 1, x);
        let at_qd: Vec<QRat> = self
            .assembled_order1(h, k)
            .iter()
            .map(|e| e.subst_qpow(d))
            .collect();
        let qh = QRat::q_pow(h);
        let dq = QRat::from_int(d as i64);
        let mut sum = QRat::zero();
        let mut weight = QRat::one();
        for a in 0..d {
            let arg = x
                .add(&QRat::from_int(a as i64))
                .checked_div(&dq)
                .expect("d >= 1");
            let term = weight.mul(&eval_from_numbers(&at_qd, k, &arg));
            sum = if a % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
            weight = weight.mul(&qh);
        }
        let rhs = sum.scale_int(&BigInt::from(d).pow(k));
        let p = Params {
            h: Some(h),
            d: Some(d),
            args: vec![x.to_string()],
            ..params(k)
        };
        Ok(VerifyReport::exact(Identity::Distribution, p, lhs, rhs))
    }

    /// `E_n^{(h,v)}(z+y) = sum_l C(n,l) E_l^{(h,v)}(y) z^{n-l}`.
    pub fn verify_addition(&self, n: u32, h: i64, v: u32, z: &QRat, y: &QRat) -> Result<VerifyReport> {
        if v == 0 {
            return Err(Error::ZeroOrder);
        }
        let lhs = self.engine.poly_eval(n, h, v, &z.add(y));
        let numbers = self.assembled_higher(h, v, n);
        let pascal = binomials(n as usize);
        let mut rhs = QRat::zero();
        let mut zp = QRat::one();
        for l in (0..=n).rev() {
            let term = eval_from_numbers(&numbers, l, y).mul(&zp);
            rhs = rhs.add(&term.scale_int(pascal.get(n as usize, l as usize)));
            zp = zp.mul(z);
        }
        let p = Params {
            h: Some(h),
            v: Some(v),
            args: vec![z.to_string(), y.to_string()],
            ..params(n)
        };
        Ok(VerifyReport::exact(Identity::Addition, p, lhs, rhs))
    }

    /// `E_n^{(h,v)}(z) = sum_m C(n,m) z^{n-m} sum_{|l|=m} multinomial(m; l) prod_j E_{l_j}^{(h)}`.
    pub fn verify_corollary_binom_multinomial(&self, n: u32, h: i64, v: u32, z: &QRat) -> Result<VerifyReport> {
        if v == 0 {
            return Err(Error::ZeroOrder);
        }
        let lhs = self.engine.poly_eval(n, h, v, z);
        let pascal = binomials(n as usize);
        let mut rhs = QRat::zero();
        let mut zp = QRat::one();
        for m in (0..=n).rev() {
            let inner = self.multinomial_number(m, h, v)?;
            rhs = rhs.add(&inner.mul(&zp).scale_int(pascal.get(n as usize, m as usize)));
            zp = zp.mul(z);
        }
        let p = Params {
            h: Some(h),
            v: Some(v),
            args: vec![z.to_string()],
            ..params(n)
        };
        Ok(VerifyReport::exact(Identity::Corollary1, p, lhs, rhs))
    }

    /// `sum_m C(n,m) E_m^{(h,2)}(y1) y2^{n-m} = sum_{l1+l2=n} C(n; l1,l2) E_{l1}^{(h)}(y1) E_{l2}^{(h)}(y2)`.
    pub fn verify_final_corollary(&self, n: u32, h: i64, y1: &QRat, y2: &QRat) -> Result<VerifyReport> {
        let order2 = self.engine.numbers(h, 2, n);
        let pascal = binomials(n as usize);
        let mut lhs = QRat::zero();
        let mut yp = QRat::one();
        for m in (0..=n).rev() {
            let term = eval_from_numbers(&order2, m, y1).mul(&yp);
            lhs = lhs.add(&term.scale_int(pascal.get(n as usize, m as usize)));
            yp = yp.mul(y2);
        }
        let base = self.assembled_order1(h, n);
        let factors: Vec<Vec<QRat>> = [y1, y2]
            .iter()
            .map(|y| (0..=n).map(|l| eval_from_numbers(&base, l, y)).collect())
            .collect();
        let rhs = complete_sum(&factors, n, self.cap)?;
        let p = Params {
            h: Some(h),
            v: Some(2),
            args: vec![y1.to_string(), y2.to_string()],
            ..params(n)
        };
        Ok(VerifyReport::exact(Identity::FinalCorollary, p, lhs, rhs).with_note(FINAL_COROLLARY_NOTE))
    }

    /// `E_n^{(1,v)}` at `q = 1` against the q-free expansion of `(2/(e^t+1))^v`.
    pub fn verify_classical_limit(&self, n: u32, v: u32) -> Result<VerifyReport> {
        if v == 0 {
            return Err(Error::ZeroOrder);
        }
        let value = &self.assembled_higher(1, v, n)[n as usize];
        let lhs = value.eval(&BigRat::one())?;
        let rhs = classical_higher(n as usize, v).swap_remove(n as usize);
        let p = Params {
            v: Some(v),
            ..params(n)
        };
        Ok(VerifyReport::exact(
            Identity::ClassicalLimit,
            p,
            QRat::from_rat(lhs),
            QRat::from_rat(rhs),
        ))
    }

    /// Compares `E_n^{(h)}(x)` at `q = q0` with the alternating expansion
    /// `2 sum_{m=0}^{M} (-1)^m q0^{hm} (m+x)^n`, valid for `|q0^h| < 1`.
    ///
    /// The partial sum is accumulated exactly; the tolerance is the geometric
    /// tail bound `2 r^{M+1} |M+1+x|^n / (1-r)` with `r = |q0^h|`, evaluated in
    /// double precision and inflated by 10^3.
    pub fn numeric_tail_check(&self, n: u32, h: i64, x: &BigRat, q0: &BigRat, terms: u32) -> Result<VerifyReport> {
        if q0.is_zero() && h < 0 || h == 0 {
            return Err(Error::Divergent("1".into()));
        }
        let qh = q0.pow(h as i32);
        let r = qh.abs();
        if r >= BigRat::one() {
            return Err(Error::Divergent(r.to_string()));
        }
        let numbers = self.assembled_order1(h, n);
        let exact = eval_from_numbers(&numbers, n, &QRat::from_rat(x.clone())).eval(q0)?;

        let mut partial = BigRat::zero();
        let mut ratio_pow = BigRat::one();
        let step = -&qh;
        for m in 0..=terms {
            let shifted = x + BigRat::from_integer(BigInt::from(m));
            partial += &ratio_pow * shifted.pow(n as i32);
            ratio_pow *= &step;
        }
        partial *= BigRat::from_integer(BigInt::from(2));

        let diff = (&partial - &exact).abs().to_f64().unwrap_or(f64::INFINITY);
        let tolerance = tail_tolerance(n, x, &r, terms);
        let status = if diff <= tolerance { Status::Pass } else { Status::Fail };
        let witness = (status == Status::Fail).then(|| Witness::Numeric {
            partial_sum: partial.to_f64().map_or_else(|| partial.to_string(), |f| format!("{f:e}")),
            exact: exact.to_string(),
            difference: diff,
            tolerance,
        });
        Ok(VerifyReport {
            identity: Identity::NumericTail,
            params: Params {
                h: Some(h),
                args: vec![x.to_string()],
                q0: Some(q0.to_string()),
                terms: Some(terms),
                ..params(n)
            },
            status,
            witness,
            note: None,
        })
    }
}

/// Tolerance of the numeric tail check: `10^3 * 2 r^{M+1} |M+1+x|^n / (1-r)`
/// in double precision, for ratio `r = |q0^h| < 1` and `M = terms`.
pub fn tail_tolerance(n: u32, x: &BigRat, r: &BigRat, terms: u32) -> f64 {
    let rf = r.to_f64().expect("finite ratio");
    let xf = x.to_f64().expect("finite argument");
    let bound = 2.0 * rf.powi(terms as i32 + 1) * (terms as f64 + 1.0 + xf).abs().powi(n as i32) / (1.0 - rf);
    bound * 1e3
}

//! Exact arithmetic in `Z[ζ_e]`, stored as integer coefficient vectors
//! reduced modulo the e-th cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;

/// `Φ_n`, low-degree coefficient first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

/// Quotient of `num` by the monic `den`; the division must be exact.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// The ring `Z[ζ_e]` with the power basis `1, ζ, …, ζ^(φ(e)-1)`.
pub struct CycRing {
    e: usize,
    phi: Vec<i64>,
    /// `ζ^k` in the power basis for `0 <= k < e`.
    powers: Vec<Vec<i64>>,
}

impl fmt::Debug for CycRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycRing(e = {})", self.e)
    }
}

impl CycRing {
    pub fn new(e: usize) -> Arc<CycRing> {
        let phi = cyclotomic_polynomial(e);
        let dim = phi.len() - 1;
        let mut powers = Vec::with_capacity(e);
        let mut cur = vec![0i64; dim];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x, then eliminate x^dim = -(phi[0] + … + phi[dim-1] x^(dim-1))
            let top = cur[dim - 1];
            for i in (1..dim).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..dim {
                cur[i] -= top * phi[i];
            }
        }
        Arc::new(CycRing { e, phi, powers })
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    /// `φ(e)`, the dimension of the power basis.
    pub fn dimension(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.phi
    }

    fn reduce_into(&self, out: &mut [i64], k: usize, c: i64) {
        if c == 0 {
            return;
        }
        for (o, &b) in out.iter_mut().zip(&self.powers[k % self.e]) {
            *o += c * b;
        }
    }
}

/// An element of `Z[ζ_e]`. Equality is exact (canonical reduced form).
#[derive(Clone)]
pub struct CycValue {
    ring: Arc<CycRing>,
    coeffs: Vec<i64>,
}

impl CycValue {
    pub fn zero(ring: &Arc<CycRing>) -> CycValue {
        CycValue {
            ring: ring.clone(),
            coeffs: vec![0; ring.dimension()],
        }
    }

    pub fn from_int(ring: &Arc<CycRing>, n: i64) -> CycValue {
        let mut v = Self::zero(ring);
        v.coeffs[0] = n;
        v
    }

    /// `ζ_e^k`.
    pub fn root(ring: &Arc<CycRing>, k: usize) -> CycValue {
        CycValue {
            ring: ring.clone(),
            coeffs: ring.powers[k % ring.e].clone(),
        }
    }

    /// `Σ_k multiplicities[k]·ζ_e^k`.
    pub fn from_root_multiplicities(ring: &Arc<CycRing>, multiplicities: &[i64]) -> CycValue {
        let mut v = Self::zero(ring);
        for (k, &m) in multiplicities.iter().enumerate() {
            ring.reduce_into(&mut v.coeffs, k, m);
        }
        v
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this value equals, if any.
    pub fn as_int(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }

    /// Complex conjugate: `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> CycValue {
        let mut out = Self::zero(&self.ring);
        for (k, &c) in self.coeffs.iter().enumerate() {
            self.ring
                .reduce_into(&mut out.coeffs, self.ring.e - k % self.ring.e, c);
        }
        out
    }

    /// Value under `ζ_e = exp(2πi/e)`.
    pub fn to_complex(&self) -> Complex64 {
        let e = self.ring.e as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * k as f64 / e)
            })
            .sum()
    }

    fn check_ring(&self, other: &CycValue) {
        assert_eq!(
            self.ring.e, other.ring.e,
            "cyclotomic values from different rings"
        );
    }
}

impl PartialEq for CycValue {
    fn eq(&self, other: &Self) -> bool {
        self.ring.e == other.ring.e && self.coeffs == other.coeffs
    }
}

impl Eq for CycValue {}

impl fmt::Debug for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial in `z = ζ_e`, e.g. `2 - z^2`.
impl fmt::Display for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "z")?,
                (1, _) => write!(f, "{a}z")?,
                (_, 1) => write!(f, "z^{k}")?,
                _ => write!(f, "{a}z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycValue {
    type Output = CycValue;
    fn add(self, rhs: &CycValue) -> CycValue {
        self.check_ring(rhs);
        CycValue {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycValue {
    type Output = CycValue;
    fn sub(self, rhs: &CycValue) -> CycValue {
        self.check_ring(rhs);
        CycValue {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycValue {
    type Output = CycValue;
    fn neg(self) -> CycValue {
        CycValue {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycValue {
    type Output = CycValue;
    fn mul(self, rhs: &CycValue) -> CycValue {
        self.check_ring(rhs);
        let dim = self.coeffs.len();
        let mut prod = vec![0i64; 2 * dim - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        let mut out = CycValue::zero(&self.ring);
        out.coeffs.copy_from_slice(&prod[..dim]);
        for (k, &c) in prod.iter().enumerate().skip(dim) {
            self.ring.reduce_into(&mut out.coeffs, k, c);
        }
        out
    }
}

impl Mul<i64> for &CycValue {
    type Output = CycValue;
    fn mul(self, rhs: i64) -> CycValue {
        CycValue {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a * rhs).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // degree is Euler's totient
        for n in 1..=60usize {
            let phi = (1..=n).filter(|&k| crate::primes::gcd(k, n) == 1).count();
            assert_eq!(cyclotomic_polynomial(n).len() - 1, phi);
        }
    }

    #[test]
    fn roots_of_unity() {
        for e in [1usize, 2, 3, 4, 6, 12, 30, 60] {
            let ring = CycRing::new(e);
            assert_eq!(CycValue::root(&ring, e), CycValue::from_int(&ring, 1));
            let sum = (0..e).fold(CycValue::zero(&ring), |acc, k| {
                &acc + &CycValue::root(&ring, k)
            });
            let expected = if e == 1 { 1 } else { 0 };
            assert_eq!(sum, CycValue::from_int(&ring, expected));
            for k in 0..e {
                let z = CycValue::root(&ring, k);
                assert_eq!(&z * &z.conj(), CycValue::from_int(&ring, 1));
                assert_eq!(&z * &CycValue::root(&ring, 1), CycValue::root(&ring, k + 1));
            }
        }
    }

    #[test]
    fn rendering() {
        let ring = CycRing::new(6);
        // ζ_6^2 + ζ_6^4 = -1
        let v = &CycValue::root(&ring, 2) + &CycValue::root(&ring, 4);
        assert_eq!(v.as_int(), Some(-1));
        assert!((v.to_complex() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert_eq!(CycValue::zero(&ring).to_string(), "0");
        assert_eq!((&CycValue::root(&ring, 1) * 2).to_string(), "2z");
    }

    fn arb_value(e: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-5i64..=5, e)
    }

    proptest! {
        #[test]
        fn arithmetic_matches_complex_evaluation(a in arb_value(12), b in arb_value(12)) {
            let ring = CycRing::new(12);
            let x = CycValue::from_root_multiplicities(&ring, &a);
            let y = CycValue::from_root_multiplicities(&ring, &b);
            let direct = |m: &[i64]| -> Complex64 {
                m.iter().enumerate().map(|(k, &c)| Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * k as f64 / 12.0)).sum()
            };
            prop_assert!((x.to_complex() - direct(&a)).norm() < 1e-9);
            prop_assert!(((&x * &y).to_complex() - direct(&a) * direct(&b)).norm() < 1e-6);
            prop_assert!((x.conj().to_complex() - direct(&a).conj()).norm() < 1e-9);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}

//! Exact arithmetic in cyclotomic fields Q(zeta_L), L <= 24.
//!
//! Elements are dense rational coefficient vectors in the power basis
//! `1, zeta, .., zeta^(phi(L)-1)` modulo the L-th cyclotomic polynomial.
//! Reduction tables (`zeta^t` for all t) are cached per conductor, so the hot
//! operations (products, Galois maps) are table lookups plus rational sums.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

struct FieldData {
    phi: usize,
    /// `zeta^t` reduced into the power basis, for t = 0 .. 2*phi (enough for
    /// products of reduced elements and for Galois exponents < L).
    powers: Vec<Vec<BigRational>>,
}

static FIELDS: Lazy<Mutex<HashMap<u32, Arc<FieldData>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Integer coefficients of the n-th cyclotomic polynomial (ascending degree).
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(BigInt::is_zero), "non-exact poly division");
    quot
}

fn field(conductor: u32) -> Arc<FieldData> {
    let mut map = FIELDS.lock().unwrap();
    if let Some(f) = map.get(&conductor) {
        return Arc::clone(f);
    }
    let cyclo = cyclotomic_polynomial(conductor);
    let phi = cyclo.len() - 1;
    let limit = (2 * phi).max(conductor as usize) + 1;
    let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(limit);
    for t in 0..limit {
        if t < phi {
            let mut v = vec![BigRational::zero(); phi];
            v[t] = BigRational::one();
            powers.push(v);
        } else {
            // zeta^t = zeta * zeta^(t-1); multiply previous by x and reduce
            let prev = &powers[t - 1];
            let mut v = vec![BigRational::zero(); phi];
            v[1..phi].clone_from_slice(&prev[..phi - 1]);
            let lead = prev[phi - 1].clone();
            if !lead.is_zero() {
                // x^phi = - sum_{i<phi} cyclo[i] x^i  (cyclo is monic)
                for i in 0..phi {
                    v[i] -= &lead * BigRational::from(cyclo[i].clone());
                }
            }
            powers.push(v);
        }
    }
    let data = Arc::new(FieldData { phi, powers });
    map.insert(conductor, Arc::clone(&data));
    data
}

/// An element of Q(zeta_L) in reduced power-basis form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cyc {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyc {
    pub fn zero(conductor: u32) -> Self {
        let phi = field(conductor).phi;
        Cyc {
            conductor,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_rational(conductor: u32, q: BigRational) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = q;
        c
    }

    pub fn from_integer(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, BigRational::from(BigInt::from(n)))
    }

    /// `zeta_L^a`.
    pub fn zeta_pow(conductor: u32, a: i64) -> Self {
        let f = field(conductor);
        let t = a.rem_euclid(conductor as i64) as usize;
        Cyc {
            conductor,
            coeffs: f.powers[t].clone(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Exact integer value, if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        assert_eq!(self.conductor, other.conductor);
        Cyc {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        assert_eq!(self.conductor, other.conductor);
        Cyc {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        assert_eq!(self.conductor, other.conductor);
        let f = field(self.conductor);
        let phi = f.phi;
        let mut conv = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut out = vec![BigRational::zero(); phi];
        for (d, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d < phi {
                out[d] += c;
            } else {
                for (i, p) in f.powers[d].iter().enumerate() {
                    out[i] += &c * p;
                }
            }
        }
        Cyc {
            conductor: self.conductor,
            coeffs: out,
        }
    }

    /// Galois map `zeta -> zeta^k`; requires gcd(k, L) = 1.
    pub fn galois(&self, k: u32) -> Cyc {
        let l = self.conductor;
        assert_eq!(num_integer::gcd(k, l), 1, "galois exponent not coprime");
        let f = field(l);
        let mut out = vec![BigRational::zero(); f.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let t = ((i as u64 * k as u64) % l as u64) as usize;
            for (j, p) in f.powers[t].iter().enumerate() {
                out[j] += a * p;
            }
        }
        Cyc {
            conductor: l,
            coeffs: out,
        }
    }

    /// Complex conjugation `zeta -> zeta^(L-1)`.
    pub fn conj(&self) -> Cyc {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// Floating-point approximation (for human-readable report rendering only;
    /// never used in any verdict).
    pub fn approx(&self) -> (f64, f64) {
        let l = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / l;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Assert the element is a nonnegative rational integer and return it.
    pub fn expect_nonneg_integer(&self, context: &str) -> Result<u64> {
        match self.as_integer() {
            Some(n) if !n.is_negative() => Ok(u64::try_from(n).unwrap()),
            _ => Err(Error::integrality(
                context,
                format!("value {:?} is not a nonnegative integer", self.coeffs),
            )),
        }
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    let n = q.numer();
    let d = q.denom();
    // fine for report rendering; values are tiny
    n.to_string().parse::<f64>().unwrap_or(f64::NAN) / d.to_string().parse::<f64>().unwrap_or(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_are_standard() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(
            to_i64(cyclotomic_polynomial(24)),
            vec![1, 0, 0, 0, -1, 0, 0, 0, 1]
        );
    }

    #[test]
    fn zeta_has_multiplicative_order_l() {
        for l in [3u32, 4, 5, 8, 12, 24] {
            let z = Cyc::zeta_pow(l, 1);
            let mut p = Cyc::one(l);
            for t in 1..=l {
                p = p.mul(&z);
                if t < l {
                    assert_ne!(p, Cyc::one(l), "zeta_{l}^{t} = 1 too early");
                }
            }
            assert_eq!(p, Cyc::one(l));
        }
    }

    #[test]
    fn geometric_sum_vanishes() {
        for l in [2u32, 3, 6, 8, 12] {
            let mut s = Cyc::zero(l);
            for t in 0..l {
                s = s.add(&Cyc::zeta_pow(l, t as i64));
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn conjugation_is_involutive_and_fixes_rationals() {
        let x = Cyc::zeta_pow(12, 5).add(&Cyc::from_integer(12, 3));
        assert_eq!(x.conj().conj(), x);
        let q = Cyc::from_rational(12, BigRational::new(BigInt::from(7), BigInt::from(2)));
        assert_eq!(q.conj(), q);
    }

    #[test]
    fn norm_of_zeta_plus_inverse_is_real() {
        // zeta_5 + zeta_5^4 is real: equal to its conjugate
        let x = Cyc::zeta_pow(5, 1).add(&Cyc::zeta_pow(5, 4));
        assert_eq!(x.conj(), x);
    }

    #[test]
    fn integer_detection() {
        let x = Cyc::zeta_pow(8, 2).mul(&Cyc::zeta_pow(8, 2)); // zeta_8^4 = -1
        assert_eq!(x.as_integer(), Some(BigInt::from(-1)));
        assert!(Cyc::zeta_pow(8, 1).as_integer().is_none());
        assert!(Cyc::from_integer(8, 5)
            .expect_nonneg_integer("test")
            .is_ok());
        assert!(Cyc::from_integer(8, -1)
            .expect_nonneg_integer("test")
            .is_err());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::scalar::{Ring, Scalar};
use crate::error::{usage, Error, Result};

/// A power series in `q` truncated at order `K`: the coefficients
/// `c_0, ..., c_{K-1}` over a single [`Ring`].
///
/// Binary operations require equal rings and equal orders. The operators
/// panic on a mismatch; the `try_*` methods report it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    ring: Ring,
    coeffs: Vec<Scalar>,
}

impl QSeries {
    /// Builds a series from its coefficients. `coeffs` must be non-empty and
    /// share one ring.
    pub fn from_scalars(coeffs: Vec<Scalar>) -> Result<QSeries> {
        let first = coeffs.first().ok_or_else(|| usage("a series needs order K >= 1"))?;
        let ring = first.ring();
        if let Some(bad) = coeffs.iter().find(|c| c.ring() != ring) {
            return Err(Error::RingMismatch(ring, bad.ring()));
        }
        Ok(QSeries { ring, coeffs })
    }

    /// Series with the given integer coefficients, zero-padded to order `k`.
    pub fn from_i64s(ring: Ring, coeffs: &[i64], k: usize) -> Result<QSeries> {
        if k == 0 {
            return Err(usage("a series needs order K >= 1"));
        }
        if coeffs.len() > k {
            return Err(usage(format!("{} coefficients do not fit in order {k}", coeffs.len())));
        }
        let mut v: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::from_i64(ring, c)).collect();
        v.resize(k, Scalar::zero(ring));
        Ok(QSeries { ring, coeffs: v })
    }

    pub fn zero(ring: Ring, k: usize) -> QSeries {
        assert!(k >= 1, "a series needs order K >= 1");
        QSeries { ring, coeffs: vec![Scalar::zero(ring); k] }
    }

    pub fn one(ring: Ring, k: usize) -> QSeries {
        QSeries::constant(Scalar::one(ring), k)
    }

    pub fn constant(c: Scalar, k: usize) -> QSeries {
        let mut s = QSeries::zero(c.ring(), k);
        s.coeffs[0] = c;
        s
    }

    /// `c q^d`, or zero when `d >= k`.
    pub fn monomial(c: Scalar, d: usize, k: usize) -> QSeries {
        let mut s = QSeries::zero(c.ring(), k);
        if d < k {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// The truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: Scalar) {
        assert_eq!(c.ring(), self.ring, "ring mismatch");
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Reduction mod `q^k` for `k <= K`.
    pub fn truncate(&self, k: usize) -> Result<QSeries> {
        if k == 0 || k > self.order() {
            return Err(usage(format!("cannot truncate order {} to {k}", self.order())));
        }
        Ok(QSeries { ring: self.ring, coeffs: self.coeffs[..k].to_vec() })
    }

    /// Coefficient-wise image in another ring.
    pub fn specialize(&self, target: Ring) -> Result<QSeries> {
        let coeffs = self.coeffs.iter().map(|c| c.specialize(target)).collect::<Result<_>>()?;
        Ok(QSeries { ring: target, coeffs })
    }

    /// Integer coefficients, when every coefficient is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(Scalar::to_integer).collect()
    }

    fn check(&self, other: &QSeries) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(QSeries { ring: self.ring, coeffs })
    }

    pub fn try_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(QSeries { ring: self.ring, coeffs })
    }

    /// Cauchy product truncated at order `K`.
    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check(other)?;
        let k = self.order();
        let mut out = vec![Scalar::zero(self.ring); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..k - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(QSeries { ring: self.ring, coeffs: out })
    }

    pub fn scale(&self, c: &Scalar) -> Result<QSeries> {
        let coeffs = self.coeffs.iter().map(|a| a.try_mul(c)).collect::<Result<_>>()?;
        Ok(QSeries { ring: self.ring, coeffs })
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].is_unit()
    }

    /// Inverse mod `q^K`; the constant term must be a unit of the ring.
    pub fn try_invert(&self) -> Result<QSeries> {
        let c0_inv = self.coeffs[0].try_inv().map_err(|_| {
            Error::NotAUnit(format!("series with constant term {}", self.coeffs[0]))
        })?;
        let k = self.order();
        let mut inv: Vec<Scalar> = Vec::with_capacity(k);
        inv.push(c0_inv.clone());
        for n in 1..k {
            let mut acc = Scalar::zero(self.ring);
            for i in 1..=n {
                acc = &acc + &(&self.coeffs[i] * &inv[n - i]);
            }
            inv.push(-(&acc * &c0_inv));
        }
        Ok(QSeries { ring: self.ring, coeffs: inv })
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut acc = QSeries::one(self.ring, self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Cauchy product of two series of the same ring and order.
pub fn qs_mul(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    a.try_mul(b)
}

/// Inverse of a series whose constant term is a unit.
pub fn qs_invert(a: &QSeries) -> Result<QSeries> {
    a.try_invert()
}

/// `sigma_k(n)`, the sum of the `k`-th powers of the divisors of `n`.
pub fn divisor_power_sum(k: u32, n: i64) -> Result<BigInt> {
    if n <= 0 {
        return Err(usage(format!("divisor sums need n >= 1, got {n}")));
    }
    let mut total = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    Ok(total)
}

impl fmt::Display for QSeries {
    /// Writes `1 - 8q + 35q^2 + O(q^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c {
                Scalar::Int(n) if n.is_negative() => (true, Scalar::Int(-n)),
                Scalar::Rat(q) if q.is_negative() => (true, Scalar::Rat(-q)),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { ring: self.ring, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

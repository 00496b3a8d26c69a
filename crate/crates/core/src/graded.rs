//! Homogeneous elements of a graded ring with a distinguished basis
//! `{b_{N,p} : p ∈ (1/N)Z mod Z}` in each degree `N`.
//!
//! Theta functions and Floer generators share this representation; they
//! differ only in how a product of two basis elements is computed.

use std::fmt;
use std::marker::PhantomData;

use crate::error::{usage, Error, Result};
use crate::exactnum::{QSeries, Ring, RingElement, Scalar};
use crate::rational::{rat, Rational};

/// A point `m/N` of the cyclic group `(1/N)Z mod Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPoint {
    denominator: u32,
    numerator: u32,
}

impl CyclicPoint {
    pub fn new(denominator: u32, numerator: u32) -> Result<CyclicPoint> {
        if denominator == 0 || numerator >= denominator {
            return Err(usage(format!("{numerator}/{denominator} is not a reduced cyclic point")));
        }
        Ok(CyclicPoint { denominator, numerator })
    }

    /// The class of `p` in `(1/N)Z mod Z`; `p·N` must be an integer.
    pub fn from_rational(denominator: u32, p: Rational) -> Result<CyclicPoint> {
        if denominator == 0 {
            return Err(usage("degree must be positive"));
        }
        let np = p * Rational::from_integer(denominator as i128);
        if !np.is_integer() {
            return Err(usage(format!("{p} is not in (1/{denominator})Z")));
        }
        let m = np.to_integer().rem_euclid(denominator as i128);
        CyclicPoint::new(denominator, m as u32)
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn numerator(&self) -> u32 {
        self.numerator
    }

    /// The representative in `[0, 1)`.
    pub fn value(&self) -> Rational {
        rat(self.numerator as i128, self.denominator as i128)
    }
}

impl fmt::Display for CyclicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The `N` points `m/N`, `0 ≤ m < N`.
pub fn graded_basis(n: u32) -> Result<Vec<CyclicPoint>> {
    if n == 0 {
        return Err(usage("degree must be positive"));
    }
    (0..n).map(|m| CyclicPoint::new(n, m)).collect()
}

/// One term `sign · q^exponent · b_{N₁+N₂, m/(N₁+N₂)}` of a basis product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductTerm {
    pub index: u32,
    pub exponent: u64,
    pub sign: i8,
}

/// How two basis elements multiply.
pub trait BasisRule {
    /// Printed name of the basis elements, e.g. `θ`.
    const SYMBOL: &'static str;

    /// The terms of `b_{N₁,p₁} · b_{N₂,p₂}` with exponent below `k`.
    fn basis_product(a: CyclicPoint, b: CyclicPoint, k: usize) -> Result<Vec<ProductTerm>>;
}

/// A homogeneous element `Σ_p c_p b_{N,p}` with `q`-series coefficients.
pub struct Homogeneous<R> {
    degree: u32,
    coeffs: Vec<QSeries>,
    rule: PhantomData<R>,
}

impl<R> Clone for Homogeneous<R> {
    fn clone(&self) -> Self {
        Homogeneous { degree: self.degree, coeffs: self.coeffs.clone(), rule: PhantomData }
    }
}

impl<R> PartialEq for Homogeneous<R> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.coeffs == other.coeffs
    }
}

impl<R> Eq for Homogeneous<R> {}

impl<R> fmt::Debug for Homogeneous<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Homogeneous").field("degree", &self.degree).field("coeffs", &self.coeffs).finish()
    }
}

impl<R: BasisRule> Homogeneous<R> {
    pub fn zero(ring: Ring, degree: u32, k: usize) -> Result<Self> {
        if degree == 0 || k == 0 {
            return Err(usage("degree and order must be positive"));
        }
        Ok(Homogeneous { degree, coeffs: vec![QSeries::zero(ring, k); degree as usize], rule: PhantomData })
    }

    /// The basis element `b_{N, m/N}` with coefficient 1.
    pub fn basis(ring: Ring, point: CyclicPoint, k: usize) -> Result<Self> {
        let mut out = Self::zero(ring, point.denominator(), k)?;
        out.coeffs[point.numerator() as usize] = QSeries::one(ring, k);
        Ok(out)
    }

    /// An element from its `N` coefficients, indexed by `m` for `p = m/N`.
    pub fn from_coeffs(coeffs: Vec<QSeries>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| usage("degree must be positive"))?;
        for c in &coeffs[1..] {
            first.compatible(c)?;
        }
        Ok(Homogeneous { degree: coeffs.len() as u32, coeffs, rule: PhantomData })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.coeffs[0].order()
    }

    pub fn ring(&self) -> Ring {
        self.coeffs[0].ring()
    }

    pub fn coeffs(&self) -> &[QSeries] {
        &self.coeffs
    }

    pub fn coeff(&self, p: CyclicPoint) -> Result<&QSeries> {
        if p.denominator() != self.degree {
            return Err(usage(format!("{p} is not a point of degree {}", self.degree)));
        }
        Ok(&self.coeffs[p.numerator() as usize])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QSeries::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(usage(format!("degree {} vs {}", self.degree, other.degree)));
        }
        self.coeffs[0].compatible(&other.coeffs[0])
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Homogeneous { degree: self.degree, coeffs, rule: PhantomData })
    }

    /// Multiplication by a series.
    pub fn scale(&self, c: &QSeries) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.try_mul(c)).collect::<Result<_>>()?;
        Ok(Homogeneous { degree: self.degree, coeffs, rule: PhantomData })
    }

    pub fn truncate(&self, k: usize) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.truncate(k)).collect::<Result<_>>()?;
        Ok(Homogeneous { degree: self.degree, coeffs, rule: PhantomData })
    }

    /// The product, extending the basis rule bilinearly.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.coeffs[0].compatible(&other.coeffs[0])?;
        let (ring, k) = (self.ring(), self.order());
        let n3 = self.degree + other.degree;
        let mut out = Self::zero(ring, n3, k)?;
        for (m1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (m2, c2) in other.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let a = CyclicPoint::new(self.degree, m1 as u32)?;
                let b = CyclicPoint::new(other.degree, m2 as u32)?;
                let c = c1 * c2;
                for term in R::basis_product(a, b, k)? {
                    let mono = QSeries::monomial(Scalar::from_i64(ring, term.sign as i64), term.exponent as usize, k);
                    let slot = &mut out.coeffs[term.index as usize];
                    *slot = &*slot + &(&c * &mono);
                }
            }
        }
        Ok(out)
    }

    /// The same coefficients read in another basis of the same shape.
    pub fn relabel<S: BasisRule>(&self) -> Homogeneous<S> {
        Homogeneous { degree: self.degree, coeffs: self.coeffs.clone(), rule: PhantomData }
    }

    /// The product of two basis elements over `Z`.
    pub fn basis_product(a: CyclicPoint, b: CyclicPoint, k: usize) -> Result<Self> {
        let z = Ring::Integers;
        Self::basis(z, a, k)?.try_mul(&Self::basis(z, b, k)?)
    }
}

impl<R: BasisRule> fmt::Display for Homogeneous<R> {
    /// Writes e.g. `(1 + 2q + O(q^3))·θ[2,0] + (2 + O(q^3))·θ[2,1/2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·{}[{},{}]", R::SYMBOL, self.degree, rat(m as i128, self.degree as i128))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub(crate) fn invariant(check: &str, detail: String) -> Error {
    Error::Verification { check: check.to_string(), detail }
}

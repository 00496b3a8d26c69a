//! Exact scalars, truncated `q`-series and field linear algebra.

mod linalg;
mod scalar;
mod series;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use linalg::{Echelon, Matrix};
pub use scalar::{Ring, Scalar};
pub use series::{divisor_power_sum, qs_invert, qs_mul, QSeries};

use crate::error::{Error, Result};

/// Common interface of [`Scalar`] and [`QSeries`], so that curve formulas
/// can be written once for both.
pub trait RingElement:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn ring(&self) -> Ring;
    /// The integer `n` in the same ring (and truncation order) as `self`.
    fn int_like(&self, n: i64) -> Self;
    fn try_inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;
    /// Checks that `self` and `other` can be combined.
    fn compatible(&self, other: &Self) -> Result<()>;
}

impl RingElement for Scalar {
    fn ring(&self) -> Ring {
        Scalar::ring(self)
    }
    fn int_like(&self, n: i64) -> Self {
        Scalar::from_i64(self.ring(), n)
    }
    fn try_inv(&self) -> Result<Self> {
        Scalar::try_inv(self)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring(), other.ring()))
        }
    }
}

impl RingElement for QSeries {
    fn ring(&self) -> Ring {
        QSeries::ring(self)
    }
    fn int_like(&self, n: i64) -> Self {
        QSeries::constant(Scalar::from_i64(self.ring(), n), self.order())
    }
    fn try_inv(&self) -> Result<Self> {
        self.try_invert()
    }
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(self.ring(), other.ring()));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }
}

//! Small exact rationals for the geometric modules.
//!
//! The vertices and exponents handled by [`crate::theta`],
//! [`crate::lattice`] and [`crate::fukaya`] have denominators bounded by
//! the degrees involved, so `i128` numerators and denominators are ample.
//! Arithmetic overflow panics (overflow checks are enabled in every
//! profile of this workspace) instead of wrapping.

use num_rational::Ratio;

pub type Rational = Ratio<i128>;

/// `n / d` in lowest terms.
pub fn rat(n: i128, d: i128) -> Rational {
    Ratio::new(n, d)
}

pub fn int(n: i128) -> Rational {
    Ratio::from_integer(n)
}

pub fn floor(x: &Rational) -> i128 {
    x.floor().to_integer()
}

pub fn ceil(x: &Rational) -> i128 {
    x.ceil().to_integer()
}

//! Exact computations around the Tate curve.
//!
//! The crate builds the theta-function ring of the Tate curve, the
//! combinatorial Floer products between lines on the torus, checks that
//! the two agree, reads off a Weierstrass equation over `Z[[q]]`, and
//! computes Hochschild cohomology of the cuspidal and nodal cubics.
//!
//! Everything is exact: integers and rationals are arbitrary precision,
//! series are truncated at an explicit order `K`, and the infinitesimal
//! used for lattice-point tie-breaking is symbolic.

pub mod error;
pub mod exactnum;
pub mod fukaya;
pub mod graded;
pub mod hochschild;
pub mod lattice;
pub mod rational;
pub mod theta;
pub mod weierstrass;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/weierstrass.md")]
    mod weierstrass {}
    #[doc = include_str!("../../../book/src/theta.md")]
    mod theta {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/floer.md")]
    mod floer {}
    #[doc = include_str!("../../../book/src/mirror-map.md")]
    mod mirror_map {}
    #[doc = include_str!("../../../book/src/hochschild.md")]
    mod hochschild {}
}

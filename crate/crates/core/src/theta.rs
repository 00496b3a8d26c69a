//! The theta-function ring of the Tate curve.
//!
//! In degree `N` the basis is `θ_{N,p}` for `p ∈ (1/N)Z mod Z`, and
//!
//! ```text
//! θ_{n₁,p₁} · θ_{n₂,p₂} = Σ_j q^λ(p₁, p₂+j) θ_{n₁+n₂, E(p₁, p₂+j)}
//! ```
//!
//! where `E` is the weighted average of the two points and `λ` measures the
//! failure of the piecewise-linear function `φ` to be affine.

use num_traits::{Signed, Zero};

use crate::error::{usage, Result};
use crate::graded::{invariant, BasisRule, Homogeneous, ProductTerm};
use crate::rational::{ceil, floor, int, Rational};

pub use crate::graded::{graded_basis, CyclicPoint};

/// Marker for the theta-function multiplication rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theta;

/// A homogeneous element `Σ_p c_p θ_{N,p}`.
pub type ThetaElement = Homogeneous<Theta>;

/// `ψ(x) = x(x − 1)/2`.
pub fn psi(x: Rational) -> Rational {
    x * (x - int(1)) / int(2)
}

/// The piecewise-linear interpolation of `ψ` between consecutive integers.
pub fn phi(p: Rational) -> Rational {
    let n = int(floor(&p));
    psi(n) + (p - n) * n
}

/// `E = (n₁p₁ + n₂p₂)/(n₁ + n₂)`.
pub fn weighted_average(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Rational {
    let (a, b) = (int(n1 as i128), int(n2 as i128));
    (a * p1 + b * p2) / (a + b)
}

/// `λ = n₁φ(p₁) + n₂φ(p₂) − (n₁+n₂)φ(E)`.
pub fn lambda_exp(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Rational {
    let e = weighted_average(n1, p1, n2, p2);
    int(n1 as i128) * phi(p1) + int(n2 as i128) * phi(p2) - int((n1 + n2) as i128) * phi(e)
}

/// `a = n₁ψ(p₁) + n₂ψ(p₂) − (n₁+n₂)ψ(E)`, the area of `T(p₁, p₂)`.
pub fn area(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Rational {
    let e = weighted_average(n1, p1, n2, p2);
    int(n1 as i128) * psi(p1) + int(n2 as i128) * psi(p2) - int((n1 + n2) as i128) * psi(e)
}

/// The inclusive range of shifts `j` that can contribute below `q^k`.
///
/// The area grows like `n₁n₂/(2(n₁+n₂)) · (p₂ + j − p₁)²` and `λ` differs
/// from it by less than `n₁ + n₂`, so it suffices to take
/// `|j − (p₁ − p₂)| ≤ J` for the least `J ≥ 1` with
/// `n₁n₂/(2(n₁+n₂)) · (J − 1)² > k + n₁ + n₂`.
pub fn j_window(n1: u32, p1: Rational, n2: u32, p2: Rational, k: usize) -> (i128, i128) {
    let n3 = (n1 + n2) as i128;
    let c = int((n1 * n2) as i128) / int(2 * n3);
    let bound = int(k as i128 + n3);
    let mut j = 1i128;
    while c * int((j - 1) * (j - 1)) <= bound {
        j += 1;
    }
    let center = p1 - p2;
    (ceil(&(center - int(j))), floor(&(center + int(j))))
}

/// `λ` as a nonnegative integer, for points of `(1/n₁)Z` and `(1/n₂)Z`.
pub(crate) fn integral_lambda(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Result<u64> {
    let l = lambda_exp(n1, p1, n2, p2);
    if !l.is_integer() || l.is_negative() {
        return Err(invariant("integral theta exponent", format!("λ({n1},{p1};{n2},{p2}) = {l}")));
    }
    Ok(l.to_integer() as u64)
}

impl BasisRule for Theta {
    const SYMBOL: &'static str = "θ";

    fn basis_product(a: CyclicPoint, b: CyclicPoint, k: usize) -> Result<Vec<ProductTerm>> {
        let (n1, n2) = (a.denominator(), b.denominator());
        let (p1, p2) = (a.value(), b.value());
        let (lo, hi) = j_window(n1, p1, n2, p2, k);
        let mut out = Vec::new();
        for j in lo..=hi {
            let p2j = p2 + int(j);
            let l = integral_lambda(n1, p1, n2, p2j)?;
            if l < k as u64 {
                let e = CyclicPoint::from_rational(n1 + n2, weighted_average(n1, p1, n2, p2j))?;
                out.push(ProductTerm { index: e.numerator(), exponent: l, sign: 1 });
            }
        }
        Ok(out)
    }
}

/// The product of two theta elements of the same ring and order.
pub fn theta_mul(x: &ThetaElement, y: &ThetaElement) -> Result<ThetaElement> {
    x.try_mul(y)
}

/// `θ_{n,m/n}` over `Z` mod `q^k`.
pub fn theta_basis(n: u32, m: u32, k: usize) -> Result<ThetaElement> {
    if k == 0 {
        return Err(usage("order must be positive"));
    }
    ThetaElement::basis(crate::exactnum::Ring::Integers, CyclicPoint::new(n, m)?, k)
}

/// The signed area of the triangle with vertices `(p₁,0)`,
/// `(p₂, −n₁(p₂−p₁))`, `(E,0)`, by the shoelace formula.
pub fn shoelace_area(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Rational {
    let e = weighted_average(n1, p1, n2, p2);
    let (ax, ay) = (p1, Rational::zero());
    let (bx, by) = (p2, -int(n1 as i128) * (p2 - p1));
    let (cx, cy) = (e, Rational::zero());
    ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).abs() / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{QSeries, Ring};
    use crate::rational::rat;

    #[test]
    fn phi_values() {
        assert_eq!(phi(int(0)), int(0));
        assert_eq!(phi(int(1)), int(0));
        assert_eq!(phi(int(-1)), int(1));
        assert_eq!(phi(rat(3, 2)), rat(1, 2));
        assert_eq!(phi(rat(-1, 2)), rat(1, 2));
    }

    #[test]
    fn lambda_and_area_values() {
        assert_eq!(lambda_exp(1, int(0), 1, int(0)), int(0));
        assert_eq!(lambda_exp(1, int(0), 1, int(2)), int(1));
        assert_eq!(lambda_exp(1, int(0), 1, int(3)), int(2));
        assert_eq!(area(1, int(0), 1, int(0)), int(0));
        assert_eq!(area(1, int(0), 1, int(1)), rat(1, 4));
        assert_eq!(shoelace_area(1, int(0), 1, int(1)), rat(1, 4));
    }

    #[test]
    fn square_of_theta_one() {
        let t = theta_basis(1, 0, 6).unwrap();
        let sq = theta_mul(&t, &t).unwrap();
        let z = |c: &[i64]| QSeries::from_i64s(Ring::Integers, c, 6).unwrap();
        assert_eq!(sq.coeffs(), &[z(&[1, 2, 0, 0, 2, 0]), z(&[2, 0, 2, 0, 0, 0])]);
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(graded_basis(1).unwrap().len(), 1);
        let b3: Vec<_> = graded_basis(3).unwrap().iter().map(CyclicPoint::value).collect();
        assert_eq!(b3, vec![int(0), rat(1, 3), rat(2, 3)]);
        assert_eq!(graded_basis(6).unwrap().len(), 6);
        assert!(graded_basis(0).is_err());
    }

    #[test]
    fn window_covers_every_small_exponent() {
        for (n1, n2) in [(1, 1), (1, 5), (4, 3), (7, 5)] {
            for k in [1usize, 5, 10] {
                let (lo, hi) = j_window(n1, int(0), n2, int(0), k);
                for j in (lo - 20)..=(hi + 20) {
                    if j < lo || j > hi {
                        assert!(lambda_exp(n1, int(0), n2, int(j)) >= int(k as i128));
                    }
                }
            }
        }
    }
}

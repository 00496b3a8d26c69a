//! Weierstrass cubics `y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆`, the
//! reparametrization group acting on their coefficients, and the Tate curve.

mod lie;
mod tate;

use std::fmt;

use crate::error::{usage, Result};
use crate::exactnum::{Ring, RingElement, Scalar};

pub use lie::{
    adjoint_bracket, bracket_table, lie_d_matrix, rho, BracketEntry, BracketTable, LieDMatrix, LieElement, CLASS_LABELS,
    LIE_LABELS,
};
pub use tate::{isomorphism, tate_coeffs, tate_normalize};

/// The five coefficients of a Weierstrass cubic, all scalars or all series
/// over one ring.
///
/// A value of this type also serves as a point, or a tangent direction, of
/// the affine coefficient space `W` with coordinates `a₁,a₂,a₃,a₄,a₆`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassCoeffs<E> {
    pub a1: E,
    pub a2: E,
    pub a3: E,
    pub a4: E,
    pub a6: E,
}

/// Labels of the five coordinates, in storage order.
pub const COEFF_LABELS: [&str; 5] = ["a1", "a2", "a3", "a4", "a6"];

impl<E: RingElement> WeierstrassCoeffs<E> {
    pub fn new(a1: E, a2: E, a3: E, a4: E, a6: E) -> Result<Self> {
        for other in [&a2, &a3, &a4, &a6] {
            a1.compatible(other)?;
        }
        Ok(WeierstrassCoeffs { a1, a2, a3, a4, a6 })
    }

    pub fn from_array([a1, a2, a3, a4, a6]: [E; 5]) -> Result<Self> {
        WeierstrassCoeffs::new(a1, a2, a3, a4, a6)
    }

    pub fn to_array(&self) -> [E; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6].into_iter()
    }

    pub fn ring(&self) -> Ring {
        self.a1.ring()
    }

    pub fn try_map<T: RingElement>(&self, f: impl Fn(&E) -> Result<T>) -> Result<WeierstrassCoeffs<T>> {
        WeierstrassCoeffs::new(f(&self.a1)?, f(&self.a2)?, f(&self.a3)?, f(&self.a4)?, f(&self.a6)?)
    }

    /// Coordinate-wise sum, for use as tangent vectors.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.a1.compatible(&other.a1)?;
        let [a, b] = [self.to_array(), other.to_array()];
        let sum: Vec<E> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        let arr: [E; 5] = sum.try_into().expect("five entries");
        WeierstrassCoeffs::from_array(arr)
    }
}

impl WeierstrassCoeffs<Scalar> {
    pub fn from_i64s(ring: Ring, a: [i64; 5]) -> WeierstrassCoeffs<Scalar> {
        let [a1, a2, a3, a4, a6] = a.map(|x| Scalar::from_i64(ring, x));
        WeierstrassCoeffs { a1, a2, a3, a4, a6 }
    }

    /// The unit vector along coordinate `index` (0..5 for a₁,a₂,a₃,a₄,a₆).
    pub fn direction(ring: Ring, index: usize) -> WeierstrassCoeffs<Scalar> {
        let mut a = [0i64; 5];
        a[index] = 1;
        WeierstrassCoeffs::from_i64s(ring, a)
    }
}

impl<E: fmt::Display> fmt::Display for WeierstrassCoeffs<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {}, {})", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

/// An element `(u, s, r, t)` of the reparametrization group, acting by
/// `x = u²x' + r`, `y = u³y' + u²s x' + t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reparam<E> {
    pub u: E,
    pub s: E,
    pub r: E,
    pub t: E,
}

impl<E: RingElement> Reparam<E> {
    pub fn new(u: E, s: E, r: E, t: E) -> Result<Self> {
        for other in [&s, &r, &t] {
            u.compatible(other)?;
        }
        u.try_inv()?;
        Ok(Reparam { u, s, r, t })
    }

    /// The identity element, in the ring (and order) of `like`.
    pub fn identity_like(like: &E) -> Self {
        Reparam { u: like.int_like(1), s: like.int_like(0), r: like.int_like(0), t: like.int_like(0) }
    }

    /// The substitution matrix `[[u³, u²s, t], [0, u², r], [0, 0, 1]]` acting
    /// on the column `(y', x', 1)`.
    pub fn matrix(&self) -> [[E; 3]; 3] {
        let u2 = self.u.clone() * self.u.clone();
        let u3 = u2.clone() * self.u.clone();
        let zero = self.u.int_like(0);
        [
            [u3, u2.clone() * self.s.clone(), self.t.clone()],
            [zero.clone(), u2, self.r.clone()],
            [zero.clone(), zero, self.u.int_like(1)],
        ]
    }
}

impl<E: fmt::Display> fmt::Display for Reparam<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u={}, s={}, r={}, t={})", self.u, self.s, self.r, self.t)
    }
}

/// Coefficients of the curve obtained from `w` by the substitution `g`.
pub fn reparam_apply<E: RingElement>(g: &Reparam<E>, w: &WeierstrassCoeffs<E>) -> Result<WeierstrassCoeffs<E>> {
    g.u.compatible(&w.a1)?;
    let ui = g.u.try_inv()?;
    let (s, r, t) = (g.s.clone(), g.r.clone(), g.t.clone());
    let (a1, a2, a3, a4, a6) = (w.a1.clone(), w.a2.clone(), w.a3.clone(), w.a4.clone(), w.a6.clone());
    let n = |k: i64| a1.int_like(k);
    let ui2 = ui.clone() * ui.clone();
    let ui3 = ui2.clone() * ui.clone();
    let ui4 = ui2.clone() * ui2.clone();
    let ui6 = ui3.clone() * ui3.clone();

    let b1 = a1.clone() + n(2) * s.clone();
    let b2 = a2.clone() - s.clone() * a1.clone() + n(3) * r.clone() - s.clone() * s.clone();
    let b3 = a3.clone() + r.clone() * a1.clone() + n(2) * t.clone();
    let b4 = a4.clone() - s.clone() * a3.clone() + n(2) * r.clone() * a2.clone()
        - (t.clone() + r.clone() * s.clone()) * a1.clone()
        + n(3) * r.clone() * r.clone()
        - n(2) * s.clone() * t.clone();
    let b6 = a6 + r.clone() * a4 + r.clone() * r.clone() * a2 + r.clone() * r.clone() * r.clone()
        - t.clone() * a3
        - t.clone() * t.clone()
        - r * t * a1;
    WeierstrassCoeffs::new(b1 * ui, b2 * ui2, b3 * ui3, b4 * ui4, b6 * ui6)
}

/// The group law: `reparam_apply(compose(g2, g1), W)` equals
/// `reparam_apply(g2, reparam_apply(g1, W))`.
///
/// In terms of substitution matrices the result is `M(g1)·M(g2)`.
pub fn reparam_compose<E: RingElement>(g2: &Reparam<E>, g1: &Reparam<E>) -> Result<Reparam<E>> {
    g2.u.compatible(&g1.u)?;
    let u1 = g1.u.clone();
    let u1_2 = u1.clone() * u1.clone();
    let u = u1.clone() * g2.u.clone();
    let s = g1.s.clone() + u1.clone() * g2.s.clone();
    let r = g1.r.clone() + u1_2.clone() * g2.r.clone();
    let t = g1.t.clone() + u1_2.clone() * g1.s.clone() * g2.r.clone() + u1_2 * u1 * g2.t.clone();
    Reparam::new(u, s, r, t)
}

/// The inverse group element.
pub fn reparam_inverse<E: RingElement>(g: &Reparam<E>) -> Result<Reparam<E>> {
    let ui = g.u.try_inv()?;
    let ui2 = ui.clone() * ui.clone();
    let s = -(g.s.clone() * ui.clone());
    let r = -(g.r.clone() * ui2.clone());
    let t = -(g.t.clone() * ui2.clone() * ui.clone()) + g.s.clone() * g.r.clone() * ui2.clone() * ui.clone();
    Reparam::new(ui, s, r, t)
}

/// The invariants `b₂, b₄, b₆, b₈`.
pub fn b_invariants<E: RingElement>(w: &WeierstrassCoeffs<E>) -> [E; 4] {
    let (a1, a2, a3, a4, a6) = (w.a1.clone(), w.a2.clone(), w.a3.clone(), w.a4.clone(), w.a6.clone());
    let n = |k: i64| a1.int_like(k);
    let b2 = a1.clone() * a1.clone() + n(4) * a2.clone();
    let b4 = n(2) * a4.clone() + a1.clone() * a3.clone();
    let b6 = a3.clone() * a3.clone() + n(4) * a6.clone();
    let b8 = a1.clone() * a1.clone() * a6.clone() + n(4) * a2.clone() * a6 - a1 * a3.clone() * a4.clone()
        + a2 * a3.clone() * a3
        - a4.clone() * a4;
    [b2, b4, b6, b8]
}

/// The discriminant `Δ` and the invariant `c₄`.
pub fn discriminant<E: RingElement>(w: &WeierstrassCoeffs<E>) -> (E, E) {
    let [b2, b4, b6, b8] = b_invariants(w);
    let n = |k: i64| w.a1.int_like(k);
    let delta = -(b2.clone() * b2.clone() * b8) - n(8) * b4.clone() * b4.clone() * b4.clone()
        - n(27) * b6.clone() * b6.clone()
        + n(9) * b2.clone() * b4.clone() * b6;
    let c4 = b2.clone() * b2 - n(24) * b4;
    (delta, c4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiberType {
    Smooth,
    Node,
    Cusp,
}

/// Smooth when `Δ ≠ 0`, nodal when `Δ = 0 ≠ c₄`, cuspidal when both vanish.
pub fn classify_fiber(w: &WeierstrassCoeffs<Scalar>) -> Result<FiberType> {
    if !w.ring().is_field() {
        return Err(usage("classify_fiber needs coefficients in a field; specialize first"));
    }
    let (delta, c4) = discriminant(w);
    Ok(if !delta.is_zero() {
        FiberType::Smooth
    } else if !c4.is_zero() {
        FiberType::Node
    } else {
        FiberType::Cusp
    })
}

/// Values of `F = y² + a₁xy + a₃y − x³ − a₂x² − a₄x − a₆` and its two
/// partial derivatives at `(x, y)`.
fn partials(w: &WeierstrassCoeffs<Scalar>, x: &Scalar, y: &Scalar) -> [Scalar; 3] {
    let ring = w.ring();
    let n = |k: i64| Scalar::from_i64(ring, k);
    let f = y * y + &(&(&w.a1 * x) * y) + &w.a3 * y - x.pow(3) - &(&w.a2 * x) * x - &w.a4 * x - w.a6.clone();
    let fx = &w.a1 * y - &(&n(3) * x) * x - &(&n(2) * &w.a2) * x - w.a4.clone();
    let fy = &n(2) * y + &w.a1 * x + w.a3.clone();
    [f, fx, fy]
}

/// Singular points of the affine cubic with coordinates drawn from
/// `candidates` (all of `F_p` for a prime field, a box of integers over `Q`).
pub fn singular_points(w: &WeierstrassCoeffs<Scalar>, candidates: &[Scalar]) -> Vec<(Scalar, Scalar)> {
    let mut out = Vec::new();
    for x in candidates {
        for y in candidates {
            if partials(w, x, y).iter().all(Scalar::is_zero) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// The Hessian test at a singular point `(x₀, y₀)`: the tangent cone is a
/// pair of distinct lines iff `a₁² + 12x₀ + 4a₂ ≠ 0`.
pub fn hessian_is_node(w: &WeierstrassCoeffs<Scalar>, x0: &Scalar) -> bool {
    let ring = w.ring();
    let disc = &w.a1 * &w.a1 + &(&Scalar::from_i64(ring, 12) * x0) + &Scalar::from_i64(ring, 4) * &w.a2;
    !disc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QSeries;

    fn w(ring: Ring, a: [i64; 5]) -> WeierstrassCoeffs<Scalar> {
        WeierstrassCoeffs::from_i64s(ring, a)
    }

    #[test]
    fn apply_examples() {
        let z = Ring::Integers;
        let id = Reparam::identity_like(&Scalar::zero(z));
        let c = w(z, [3, -1, 4, 1, -5]);
        assert_eq!(reparam_apply(&id, &c).unwrap(), c);

        let flip = Reparam::new(Scalar::from_i64(z, -1), Scalar::zero(z), Scalar::zero(z), Scalar::zero(z)).unwrap();
        assert_eq!(reparam_apply(&flip, &w(z, [-1, 0, 0, 0, 0])).unwrap(), w(z, [1, 0, 0, 0, 0]));

        let r = 5;
        let g = Reparam::new(Scalar::one(z), Scalar::zero(z), Scalar::from_i64(z, r), Scalar::zero(z)).unwrap();
        assert_eq!(reparam_apply(&g, &w(z, [0; 5])).unwrap(), w(z, [0, 3 * r, 0, 3 * r * r, r * r * r]));
    }

    #[test]
    fn non_unit_u_rejected() {
        let z = Ring::Integers;
        let two = Scalar::from_i64(z, 2);
        assert!(Reparam::new(two, Scalar::zero(z), Scalar::zero(z), Scalar::zero(z)).is_err());
    }

    #[test]
    fn compose_translations() {
        let z = Ring::Integers;
        let tr = |r| Reparam::new(Scalar::one(z), Scalar::zero(z), Scalar::from_i64(z, r), Scalar::zero(z)).unwrap();
        assert_eq!(reparam_compose(&tr(2), &tr(7)).unwrap(), tr(9));
        let id = Reparam::identity_like(&Scalar::zero(z));
        let g = Reparam::new(Scalar::from_i64(z, -1), Scalar::from_i64(z, 2), Scalar::from_i64(z, 3), Scalar::from_i64(z, 4)).unwrap();
        assert_eq!(reparam_compose(&id, &g).unwrap(), g);
        assert_eq!(reparam_compose(&g, &reparam_inverse(&g).unwrap()).unwrap(), id);
    }

    #[test]
    fn composite_matrix_is_product_in_substitution_order() {
        let z = Ring::Integers;
        let s = |k| Scalar::from_i64(z, k);
        let g1 = Reparam::new(s(-1), s(2), s(3), s(-4)).unwrap();
        let g2 = Reparam::new(s(1), s(-5), s(7), s(6)).unwrap();
        let m12 = reparam_compose(&g2, &g1).unwrap().matrix();
        let (a, b) = (g1.matrix(), g2.matrix());
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = s(0);
                for k in 0..3 {
                    acc = &acc + &(&a[i][k] * &b[k][j]);
                }
                assert_eq!(m12[i][j], acc);
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        let q = Ring::Rationals;
        let (d, c4) = discriminant(&w(q, [1, 0, 0, 0, 0]));
        assert!(d.is_zero());
        assert_eq!(c4, Scalar::one(q));
        let (d, c4) = discriminant(&w(q, [0; 5]));
        assert!(d.is_zero() && c4.is_zero());
        let (d, _) = discriminant(&w(q, [0, 0, 0, -1, 0]));
        assert_eq!(d, Scalar::from_i64(q, 64));
    }

    #[test]
    fn classification() {
        for p in [2, 3, 5, 7, 11] {
            let f = Ring::prime(p).unwrap();
            assert_eq!(classify_fiber(&w(f, [1, 0, 0, 0, 0])).unwrap(), FiberType::Node);
        }
        assert_eq!(classify_fiber(&w(Ring::Rationals, [0; 5])).unwrap(), FiberType::Cusp);
        assert_eq!(classify_fiber(&w(Ring::Rationals, [0, 0, 0, -1, 0])).unwrap(), FiberType::Smooth);
        assert!(classify_fiber(&w(Ring::Integers, [1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn hessian_agrees_on_small_fields() {
        for p in [2u64, 3, 5, 7] {
            let f = Ring::prime(p).unwrap();
            let pts: Vec<Scalar> = (0..p as i64).map(|v| Scalar::from_i64(f, v)).collect();
            for a in [[1, 0, 0, 0, 0], [0, 0, 0, 0, 0], [1, 1, 0, 0, 0], [0, 1, 0, 0, 0]] {
                let c = w(f, a);
                let sing = singular_points(&c, &pts);
                match classify_fiber(&c).unwrap() {
                    FiberType::Node => assert!(sing.iter().any(|(x, _)| hessian_is_node(&c, x))),
                    FiberType::Cusp => assert!(sing.iter().all(|(x, _)| !hessian_is_node(&c, x))),
                    FiberType::Smooth => assert!(sing.is_empty()),
                }
            }
        }
    }

    #[test]
    fn series_coefficients_share_order() {
        let a = QSeries::zero(Ring::Integers, 3);
        let b = QSeries::zero(Ring::Integers, 4);
        assert!(WeierstrassCoeffs::new(a.clone(), a.clone(), a.clone(), a, b).is_err());
    }
}

//! Perturbed lattice points in the triangles `T(p₁, p₂)`.
//!
//! `T(p₁, p₂)` has vertices `(p₁, 0)`, `(p₂, −n₁(p₂ − p₁))` and `(E, 0)`
//! with `E = (n₁p₁ + n₂p₂)/(n₁ + n₂)`. A perturbed lattice point is a point
//! `(a + ε, b + ε)` with `a, b` integers and `ε > 0` infinitesimal.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{usage, Result};
use crate::rational::{ceil, floor, int, Rational};
use crate::theta::weighted_average;

/// `value + ε·eps` for an infinitesimal `ε > 0`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EpsRational {
    pub value: Rational,
    pub eps: Rational,
}

impl EpsRational {
    pub fn new(value: Rational, eps: Rational) -> EpsRational {
        EpsRational { value, eps }
    }

    /// `k + ε`.
    pub fn shifted(k: i128) -> EpsRational {
        EpsRational::new(int(k), int(1))
    }

    pub fn exact(value: Rational) -> EpsRational {
        EpsRational::new(value, Rational::zero())
    }

    /// −1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.cmp(&EpsRational::exact(Rational::zero())) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value).then(self.eps.cmp(&other.eps))
    }
}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.value, self.eps)
    }
}

pub type Point = (Rational, Rational);

/// The triangle `T(p₁, p₂)` for weights `n₁, n₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbedTriangle {
    pub n1: u32,
    pub p1: Rational,
    pub n2: u32,
    pub p2: Rational,
    pub vertices: [Point; 3],
}

/// A strict half-plane `A·x + B·y + C > 0`, cleared of denominators.
struct HalfPlane {
    a: i128,
    b: i128,
    c: i128,
}

impl HalfPlane {
    /// The open side of the directed edge `from -> to` on which the
    /// triangle lies, given its orientation.
    fn from_edge(from: &Point, to: &Point, orientation: i128) -> HalfPlane {
        let (dx, dy) = (to.0 - from.0, to.1 - from.1);
        // cross(d, P − from) = dx·(y − from.y) − dy·(x − from.x)
        let a = -dy * orientation;
        let b = dx * orientation;
        let c = (dy * from.0 - dx * from.1) * orientation;
        let l = [a, b, c].iter().fold(1i128, |acc, r| num_integer::lcm(acc, *r.denom()));
        let scale = |r: Rational| (r * l).to_integer();
        HalfPlane { a: scale(a), b: scale(b), c: scale(c) }
    }

    /// The value at `(x + ε, y + ε)`.
    fn at_perturbed(&self, x: i128, y: i128) -> EpsRational {
        EpsRational::new(int(self.a * x + self.b * y + self.c), int(self.a + self.b))
    }
}

impl PerturbedTriangle {
    pub fn new(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Result<PerturbedTriangle> {
        if n1 == 0 || n2 == 0 {
            return Err(usage("triangle weights must be positive"));
        }
        let e = weighted_average(n1, p1, n2, p2);
        let v1 = (p2, -int(n1 as i128) * (p2 - p1));
        Ok(PerturbedTriangle { n1, p1, n2, p2, vertices: [(p1, Rational::zero()), v1, (e, Rational::zero())] })
    }

    /// Twice the signed (shoelace) area.
    pub fn signed_area2(&self) -> Rational {
        let [a, b, c] = &self.vertices;
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    }

    pub fn area(&self) -> Rational {
        self.signed_area2().abs() / int(2)
    }

    /// Whether `(x + ε, y + ε)` lies strictly inside.
    pub fn contains_perturbed(&self, x: i128, y: i128) -> bool {
        let orient = self.signed_area2().signum().to_integer();
        orient != 0 && self.half_planes(orient).iter().all(|h| h.at_perturbed(x, y).signum() > 0)
    }

    fn half_planes(&self, orient: i128) -> [HalfPlane; 3] {
        let v = &self.vertices;
        [
            HalfPlane::from_edge(&v[0], &v[1], orient),
            HalfPlane::from_edge(&v[1], &v[2], orient),
            HalfPlane::from_edge(&v[2], &v[0], orient),
        ]
    }
}

/// The number of perturbed lattice points strictly inside `T(p₁, p₂)`, by
/// testing every integer point of the bounding box.
pub fn count_perturbed(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Result<u64> {
    let tri = PerturbedTriangle::new(n1, p1, n2, p2)?;
    let orient = tri.signed_area2().signum().to_integer();
    if orient == 0 {
        return Ok(0);
    }
    let planes = tri.half_planes(orient);
    let xs = tri.vertices.map(|v| v.0);
    let ys = tri.vertices.map(|v| v.1);
    let lo = |vs: [Rational; 3]| floor(vs.iter().min().expect("three")) - 1;
    let hi = |vs: [Rational; 3]| ceil(vs.iter().max().expect("three")) + 1;
    let mut count = 0;
    for x in lo(xs)..=hi(xs) {
        for y in lo(ys)..=hi(ys) {
            if planes.iter().all(|h| h.at_perturbed(x, y).signum() > 0) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Splits `p ∈ (1/n)Z` as `q + r/n` with `0 ≤ r < n`.
fn split(n: u32, p: Rational) -> Result<(i128, i128)> {
    let np = p * int(n as i128);
    if !np.is_integer() {
        return Err(usage(format!("{p} is not in (1/{n})Z")));
    }
    let np = np.to_integer();
    Ok((np.div_euclid(n as i128), np.rem_euclid(n as i128)))
}

/// Perturbed points in the right triangle with hypotenuse of slope `−n`
/// through `(q + r/n, 0)` and vertical edge on the integer line `x = qb`:
/// the row-by-row sum `Σₘ (qb − ⌈p + m/n⌉)` in closed form.
fn right_triangle(n: i128, q: i128, r: i128, qb: i128) -> Rational {
    let h = |x: i128| Rational::new(x, 2);
    h(n * q * q) + h(n * qb * qb) + int(r * q) - int(n * q * qb) - int(r * qb) - h(n * qb) + h(n * q) + int(r)
}

/// The lattice-point count as the difference `Λ₁ − Λ₂` of two right
/// triangles, counted row by row; when `p₂` is not an integer the vertical
/// edge is first moved left to `⌊p₂⌋` and the column `x = ⌊p₂⌋ + ε` is
/// added back.
///
/// Requires `p₁ ∈ (1/n₁)Z` and `p₂ ∈ (1/n₂)Z`. For `p₂ < p₁` the two
/// factors are exchanged, which reflects the triangle into the same shape.
pub fn row_formula_count(n1: u32, p1: Rational, n2: u32, p2: Rational) -> Result<i128> {
    if n1 == 0 || n2 == 0 {
        return Err(usage("triangle weights must be positive"));
    }
    split(n1, p1)?;
    split(n2, p2)?;
    match p1.cmp(&p2) {
        Ordering::Equal => return Ok(0),
        Ordering::Greater => return row_formula_count(n2, p2, n1, p1),
        Ordering::Less => {}
    }
    let n3 = n1 + n2;
    let p3 = weighted_average(n1, p1, n2, p2);
    let (q1, r1) = split(n1, p1)?;
    let (q2, r2) = split(n2, p2)?;
    let (q3, r3) = split(n3, p3)?;
    let (n1i, n3i) = (n1 as i128, n3 as i128);
    let mut l1 = right_triangle(n1i, q1, r1, q2);
    let mut l2 = right_triangle(n3i, q3, r3, q2);
    if r2 != 0 {
        l1 += (int(q2) - p1) * int(n1i);
        l2 += (int(q2) - p3) * int(n3i);
    }
    let total = l1 - l2;
    debug_assert!(total.is_integer());
    Ok(total.to_integer())
}

use std::fmt;

use super::{reparam_apply, Reparam, WeierstrassCoeffs};
use crate::error::{usage, Result};
use crate::exactnum::{Echelon, Matrix, QSeries, Ring, Scalar};

/// An element of the Lie algebra of the reparametrization group, in the
/// basis `(∂s, ∂r, ∂t, ∂u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    pub s: Scalar,
    pub r: Scalar,
    pub t: Scalar,
    pub u: Scalar,
}

pub const LIE_LABELS: [&str; 4] = ["ds", "dr", "dt", "du"];

impl LieElement {
    pub fn new(ring: Ring, [s, r, t, u]: [i64; 4]) -> LieElement {
        let c = |v| Scalar::from_i64(ring, v);
        LieElement { s: c(s), r: c(r), t: c(t), u: c(u) }
    }

    /// The `index`-th basis vector in the order `∂s, ∂r, ∂t, ∂u`.
    pub fn basis(ring: Ring, index: usize) -> LieElement {
        let mut v = [0; 4];
        v[index] = 1;
        LieElement::new(ring, v)
    }

    pub fn ring(&self) -> Ring {
        self.s.ring()
    }

    fn coords(&self) -> [&Scalar; 4] {
        [&self.s, &self.r, &self.t, &self.u]
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords()
            .iter()
            .zip(LIE_LABELS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("{c}*{l}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The vector field `ρ(ξ)` evaluated at `w`: the derivative at `e = 0` of
/// `reparam_apply((1 + e·ξ_u, e·ξ_s, e·ξ_r, e·ξ_t), w)`, computed with dual
/// numbers (series of order 2).
pub fn rho(xi: &LieElement, w: &WeierstrassCoeffs<Scalar>) -> Result<WeierstrassCoeffs<Scalar>> {
    let ring = w.ring();
    if !ring.is_field() || xi.ring() != ring {
        return Err(usage("rho needs a Lie element and a point over the same field"));
    }
    let dual = |c0: Scalar, c1: &Scalar| QSeries::from_scalars(vec![c0, c1.clone()]);
    let zero = Scalar::zero(ring);
    let g = Reparam::new(
        dual(Scalar::one(ring), &xi.u)?,
        dual(zero.clone(), &xi.s)?,
        dual(zero.clone(), &xi.r)?,
        dual(zero.clone(), &xi.t)?,
    )?;
    let lifted = w.try_map(|a| dual(a.clone(), &zero))?;
    let moved = reparam_apply(&g, &lifted)?;
    moved.try_map(|a| Ok(a.coeff(1).clone()))
}

/// The matrix of `d(ξ) = ρ(ξ)(0)` with rows `a₁, a₂, a₃, a₄, a₆` and columns
/// `∂s, ∂r, ∂t, ∂u`, with the dimensions of its cokernel and kernel.
#[derive(Clone, Debug)]
pub struct LieDMatrix {
    pub matrix: Matrix,
    pub coker_rank: usize,
    pub ker_rank: usize,
    /// A basis of `ker d`.
    pub kernel: Vec<LieElement>,
    image: Echelon,
}

impl LieDMatrix {
    /// Reduces a direction of `W` modulo `im d`.
    pub fn project(&self, w: &WeierstrassCoeffs<Scalar>) -> Result<WeierstrassCoeffs<Scalar>> {
        let v = self.image.reduce(&w.to_array());
        let arr: [Scalar; 5] = v.try_into().expect("five entries");
        WeierstrassCoeffs::from_array(arr)
    }

    /// Indices (into `a₁, a₂, a₃, a₄, a₆`) of the directions spanning
    /// `coker d`.
    pub fn coker_basis(&self) -> Vec<usize> {
        (0..5).filter(|i| !self.image.pivots.contains(i)).collect()
    }
}

/// The differentiated action at the origin of `W` over a field.
pub fn lie_d_matrix(ring: Ring) -> Result<LieDMatrix> {
    if !ring.is_field() {
        return Err(usage("lie_d_matrix needs a field"));
    }
    let origin = WeierstrassCoeffs::from_i64s(ring, [0; 5]);
    let mut matrix = Matrix::zeros(ring, 5, 4)?;
    let mut columns = Vec::new();
    for j in 0..4 {
        let col = rho(&LieElement::basis(ring, j), &origin)?.to_array();
        for (i, v) in col.iter().enumerate() {
            matrix.set(i, j, v.clone());
        }
        columns.push(col.to_vec());
    }
    let rank = matrix.rank();
    let kernel = matrix
        .kernel()
        .into_iter()
        .map(|v| LieElement { s: v[0].clone(), r: v[1].clone(), t: v[2].clone(), u: v[3].clone() })
        .collect();
    let image = Matrix::from_rows(ring, 5, columns)?.echelon();
    Ok(LieDMatrix { matrix, coker_rank: 5 - rank, ker_rank: 4 - rank, kernel, image })
}

/// `[ρ(ξ), w](0)` for `ξ ∈ ker d` and a constant direction `w`: the
/// derivative of `ρ(ξ)` at the origin along `w`, reduced modulo `im d`.
pub fn adjoint_bracket(xi: &LieElement, w: &WeierstrassCoeffs<Scalar>) -> Result<WeierstrassCoeffs<Scalar>> {
    let ring = w.ring();
    let d = lie_d_matrix(ring)?;
    let origin = WeierstrassCoeffs::from_i64s(ring, [0; 5]);
    let at_origin = rho(xi, &origin)?;
    if at_origin.iter().any(|c| !c.is_zero()) {
        return Err(usage(format!("{xi} is not in ker d")));
    }
    // ρ(ξ) is affine in w, so the directional derivative is ρ(ξ)(w) − ρ(ξ)(0).
    let deriv = rho(xi, w)?;
    d.project(&deriv)
}

/// Names of the `coker d` classes, indexed like `a₁, a₂, a₃, a₄, a₆`.
pub const CLASS_LABELS: [&str; 5] = ["xyβ", "x²β", "yβ", "xβ", "β"];

/// One bracket `[ξ, w]` next to its reference value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketEntry {
    pub generator: &'static str,
    pub xi: LieElement,
    pub class: &'static str,
    pub computed: WeierstrassCoeffs<Scalar>,
    pub reference: WeierstrassCoeffs<Scalar>,
}

/// The adjoint action of `ker d` on `coker d` in one characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    pub characteristic: u64,
    pub entries: Vec<BracketEntry>,
    /// The `σ ∈ {1, −1}` with `computed = σ·reference` for every entry, if
    /// there is one.
    pub sign: Option<i64>,
}

/// Generators of `ker d` as vector fields: in characteristic 3,
/// `γ = −∂r` and `xγ = ∂u`; in characteristic 2, `γ = ∂t`, `xγ = ∂s`,
/// `yγ = ∂u`. In characteristic 0 the table is stated for `∂u` itself.
fn named_generators(characteristic: u64) -> Result<Vec<(&'static str, [i64; 4])>> {
    Ok(match characteristic {
        0 => vec![("du", [0, 0, 0, 1])],
        2 => vec![("γ", [0, 0, 1, 0]), ("xγ", [1, 0, 0, 0]), ("yγ", [0, 0, 0, 1])],
        3 => vec![("γ", [0, -1, 0, 0]), ("xγ", [0, 0, 0, 1])],
        c => return Err(usage(format!("no bracket table in characteristic {c}"))),
    })
}

/// Nonzero reference brackets `(generator, class, coefficient, result
/// class)`; every other pair brackets to zero.
fn reference_brackets(characteristic: u64) -> &'static [(&'static str, usize, i64, usize)] {
    match characteristic {
        0 => &[("du", 3, -4, 3), ("du", 4, -6, 4)],
        2 => &[("yγ", 0, 1, 0), ("yγ", 2, 1, 2), ("xγ", 2, 1, 3), ("γ", 0, 1, 3), ("γ", 2, 1, 4)],
        3 => &[("xγ", 1, 1, 1), ("xγ", 3, -1, 3), ("γ", 1, 1, 3), ("γ", 3, -1, 4)],
        _ => &[],
    }
}

/// Computes `[ξ, w]` for every named generator and every class of
/// `coker d`, and finds the global sign relating it to the reference table.
pub fn bracket_table(characteristic: u64) -> Result<BracketTable> {
    let ring = Ring::field_of_characteristic(characteristic)?;
    let gens = named_generators(characteristic)?;
    let d = lie_d_matrix(ring)?;
    let mut entries = Vec::new();
    for (name, coords) in gens {
        let xi = LieElement::new(ring, coords);
        for class in d.coker_basis() {
            let computed = adjoint_bracket(&xi, &WeierstrassCoeffs::direction(ring, class))?;
            let mut reference = [0i64; 5];
            for &(g, c, v, out) in reference_brackets(characteristic) {
                if g == name && c == class {
                    reference[out] += v;
                }
            }
            let reference = WeierstrassCoeffs::from_i64s(ring, reference);
            entries.push(BracketEntry { generator: name, xi: xi.clone(), class: CLASS_LABELS[class], computed, reference });
        }
    }
    let sign = [1i64, -1].into_iter().find(|&sigma| {
        let k = Scalar::from_i64(ring, sigma);
        entries.iter().all(|e| e.reference.iter().zip(e.computed.iter()).all(|(r, c)| &(r * &k) == c))
    });
    Ok(BracketTable { characteristic, entries, sign })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(ring: Ring, i: usize) -> WeierstrassCoeffs<Scalar> {
        WeierstrassCoeffs::direction(ring, i)
    }

    #[test]
    fn d_matrix_pattern() {
        let d = lie_d_matrix(Ring::Rationals).unwrap();
        let q = |v| Scalar::from_i64(Ring::Rationals, v);
        for i in 0..5 {
            for j in 0..4 {
                let want = match (i, j) {
                    (0, 0) => 2,
                    (1, 1) => 3,
                    (2, 2) => 2,
                    _ => 0,
                };
                assert_eq!(d.matrix.get(i, j), &q(want), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn ranks_by_characteristic() {
        let ranks = |r| {
            let d = lie_d_matrix(r).unwrap();
            (d.coker_rank, d.ker_rank)
        };
        assert_eq!(ranks(Ring::Rationals), (2, 1));
        assert_eq!(ranks(Ring::Prime(2)), (4, 3));
        assert_eq!(ranks(Ring::Prime(3)), (3, 2));
        assert_eq!(ranks(Ring::Prime(5)), (2, 1));
    }

    #[test]
    fn weights_of_du_in_char_zero() {
        let q = Ring::Rationals;
        let du = LieElement::basis(q, 3);
        let a4 = adjoint_bracket(&du, &dir(q, 3)).unwrap();
        assert_eq!(a4, WeierstrassCoeffs::from_i64s(q, [0, 0, 0, -4, 0]));
        let a6 = adjoint_bracket(&du, &dir(q, 4)).unwrap();
        assert_eq!(a6, WeierstrassCoeffs::from_i64s(q, [0, 0, 0, 0, -6]));
    }

    #[test]
    fn image_directions_bracket_to_zero() {
        for ring in [Ring::Rationals, Ring::Prime(2), Ring::Prime(3), Ring::Prime(5)] {
            let d = lie_d_matrix(ring).unwrap();
            for xi in &d.kernel {
                for j in 0..4 {
                    let w = rho(&LieElement::basis(ring, j), &WeierstrassCoeffs::from_i64s(ring, [0; 5])).unwrap();
                    let b = adjoint_bracket(xi, &w).unwrap();
                    assert!(b.iter().all(Scalar::is_zero), "{ring}: [{xi}, d(e{j})] = {b}");
                }
            }
        }
    }

    #[test]
    fn tables_match_with_one_sign() {
        for c in [0, 2, 3] {
            let t = bracket_table(c).unwrap();
            assert_eq!(t.sign, Some(1), "char {c}");
        }
        assert_eq!(bracket_table(2).unwrap().entries.len(), 12);
        assert_eq!(bracket_table(3).unwrap().entries.len(), 6);
        assert!(bracket_table(7).is_err());
    }

    #[test]
    fn outside_kernel_is_rejected() {
        let q = Ring::Rationals;
        assert!(adjoint_bracket(&LieElement::basis(q, 0), &dir(q, 0)).is_err());
    }
}

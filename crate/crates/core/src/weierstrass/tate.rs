use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{classify_fiber, discriminant, reparam_apply, FiberType, Reparam, WeierstrassCoeffs};
use crate::error::{usage, verification, Error, Result};
use crate::exactnum::{divisor_power_sum, QSeries, Ring, RingElement, Scalar};

/// The Tate curve coefficients `a₄(q), a₆(q)` over `Z`, mod `q^K`.
///
/// `a₄ = −5 Σ σ₃(n)qⁿ` and `a₆ = −Σ (5σ₃(n) + 7σ₅(n))/12 · qⁿ`.
pub fn tate_coeffs(k: usize) -> Result<(QSeries, QSeries)> {
    if k == 0 {
        return Err(usage("tate_coeffs needs K >= 1"));
    }
    let z = Ring::Integers;
    let mut a4 = QSeries::zero(z, k);
    let mut a6 = QSeries::zero(z, k);
    for n in 1..k {
        let s3 = divisor_power_sum(3, n as i64)?;
        let s5 = divisor_power_sum(5, n as i64)?;
        let num = BigInt::from(5) * &s3 + BigInt::from(7) * s5;
        let (quot, rem) = num.div_rem(&BigInt::from(12));
        if !rem.is_zero() {
            return Err(verification("tate a6 integrality", format!("12 does not divide 5σ3({n}) + 7σ5({n})")));
        }
        a4.set_coeff(n, Scalar::Int(BigInt::from(-5) * s3));
        a6.set_coeff(n, Scalar::Int(-quot));
    }
    Ok((a4, a6))
}

fn int_coeff(s: &QSeries, i: usize) -> BigInt {
    s.coeff(i).to_integer().expect("integer series")
}

fn series(v: &[BigInt]) -> QSeries {
    QSeries::from_scalars(v.iter().cloned().map(Scalar::Int).collect()).expect("non-empty")
}

fn exact_div(n: &BigInt, d: i64) -> Option<BigInt> {
    let (q, r) = n.div_rem(&BigInt::from(d));
    r.is_zero().then_some(q)
}

/// Brings an integral curve whose `q = 0` fiber is nodal to the form
/// `a₁ = 1, a₂ = a₃ = 0`.
///
/// At `q = 0` the unit is `u₀ = sign(a₁(0))` and `s₀, r₀, t₀` follow by
/// exact division. At each higher order the linearized equations pin `sₙ`
/// modulo 6; the representative with the smallest `|uₙ|` is chosen (ties
/// go to the smaller `sₙ`), so inputs already in normal form are returned
/// unchanged.
pub fn tate_normalize(w: &WeierstrassCoeffs<QSeries>) -> Result<(Reparam<QSeries>, WeierstrassCoeffs<QSeries>)> {
    if w.ring() != Ring::Integers {
        return Err(usage("tate_normalize needs integer series"));
    }
    let k = w.a1.order();
    let fail = |order: usize, reason: &str| Error::NormalizationFailure { order, reason: reason.to_string() };

    let at0 = w.try_map(|s| s.coeff(0).specialize(Ring::Rationals))?;
    if classify_fiber(&at0)? != FiberType::Node {
        return Err(fail(0, "the q = 0 fiber is not nodal"));
    }
    let a10 = int_coeff(&w.a1, 0);
    if a10.is_even() {
        return Err(fail(0, "a1 is even at q = 0"));
    }
    let u0 = if a10.is_positive() { BigInt::one() } else { -BigInt::one() };
    let s0 = (&u0 - &a10) / 2;
    let r0 = exact_div(&(&s0 * &a10 + &s0 * &s0 - int_coeff(&w.a2, 0)), 3)
        .ok_or_else(|| fail(0, "x-shear is not integral"))?;
    let t0 = exact_div(&-(int_coeff(&w.a3, 0) + &r0 * &a10), 2).ok_or_else(|| fail(0, "y-shift is not integral"))?;

    let mut u = vec![BigInt::zero(); k];
    let mut s = u.clone();
    let mut r = u.clone();
    let mut t = u.clone();
    (u[0], s[0], r[0], t[0]) = (u0.clone(), s0, r0, t0);

    let two = QSeries::constant(Scalar::Int(2.into()), k);
    let three = QSeries::constant(Scalar::Int(3.into()), k);
    for n in 1..k {
        let (us, ss, rs, ts) = (series(&u), series(&s), series(&r), series(&t));
        let e1 = &(&w.a1 + &(&two * &ss)) - &us;
        let e2 = &(&(&w.a2 - &(&ss * &w.a1)) + &(&three * &rs)) - &(&ss * &ss);
        let e3 = &(&w.a3 + &(&rs * &w.a1)) + &(&two * &ts);
        let (e1, e2, e3) = (int_coeff(&e1, n), int_coeff(&e2, n), int_coeff(&e3, n));

        // 3·δr = u₀·δs − e₂ and 2·δt = −e₃ − a₁(0)·δr fix δs mod 6.
        let residue = (0..6i64)
            .map(BigInt::from)
            .find(|c| {
                exact_div(&(&u0 * c - &e2), 3).is_some_and(|dr| (&e3 + &a10 * dr).is_even())
            })
            .ok_or_else(|| fail(n, "no integral correction"))?;
        // minimize |e₁ + 2δs| over δs = residue + 6m
        let target = -(&e1 + BigInt::from(2) * &residue);
        let m_lo = target.div_floor(&BigInt::from(12));
        let ds = [m_lo.clone(), m_lo + 1]
            .into_iter()
            .map(|m| &residue + BigInt::from(6) * m)
            .min_by_key(|ds| ((&e1 + BigInt::from(2) * ds).abs(), ds.clone()))
            .expect("two candidates");
        let dr = exact_div(&(&u0 * &ds - &e2), 3).expect("residue chosen for divisibility");
        let dt = exact_div(&-(&e3 + &a10 * &dr), 2).expect("residue chosen for parity");
        u[n] = &e1 + BigInt::from(2) * &ds;
        s[n] = ds;
        r[n] = dr;
        t[n] = dt;
    }

    let g = Reparam::new(series(&u), series(&s), series(&r), series(&t))?;
    let out = reparam_apply(&g, w)?;
    for (i, c) in [&out.a1, &out.a2, &out.a3].into_iter().enumerate() {
        let want = if i == 0 { QSeries::one(Ring::Integers, k) } else { QSeries::zero(Ring::Integers, k) };
        if let Some(n) = (0..k).find(|&n| c.coeff(n) != want.coeff(n)) {
            return Err(fail(n, "normal form not reached"));
        }
    }
    Ok((g, out))
}

/// `(1 + x)^(1/4)` for a rational series `x` with zero constant term.
fn fourth_root_one_plus(x: &QSeries) -> QSeries {
    let k = x.order();
    let mut out = QSeries::one(Ring::Rationals, k);
    let mut power = QSeries::one(Ring::Rationals, k);
    let mut binom = BigRational::one();
    let quarter = BigRational::new(1.into(), 4.into());
    for i in 1..k {
        binom = binom * (&quarter - BigRational::from_integer((i - 1).into())) / BigRational::from_integer(i.into());
        power = &power * x;
        out = &out + &power.scale(&Scalar::Rat(binom.clone())).expect("rational");
    }
    out
}

/// An integral reparametrization `g` with `reparam_apply(g, src) = dst`,
/// for two integral curves whose `c₄` has unit constant term.
///
/// The unit is recovered from `u⁴ = c₄(src)/c₄(dst)` (both signs of `u₀`
/// are tried), then `s, r, t` from the `a₁, a₂, a₃` equations. The result
/// is checked by applying it; `None` means no integral `g` of this shape
/// maps `src` exactly onto `dst`.
pub fn isomorphism(
    src: &WeierstrassCoeffs<QSeries>,
    dst: &WeierstrassCoeffs<QSeries>,
) -> Result<Option<Reparam<QSeries>>> {
    if src.ring() != Ring::Integers || dst.ring() != Ring::Integers {
        return Err(usage("isomorphism needs integer series"));
    }
    src.a1.compatible(&dst.a1)?;
    let to_q = |w: &WeierstrassCoeffs<QSeries>| w.try_map(|s| s.specialize(Ring::Rationals));
    let (sq, dq) = (to_q(src)?, to_q(dst)?);
    let (_, c4s) = discriminant(&sq);
    let (_, c4d) = discriminant(&dq);
    let ratio = &c4s * &c4d.try_invert()?;
    if ratio.coeff(0) != &Scalar::one(Ring::Rationals) {
        return Ok(None);
    }
    let k = ratio.order();
    let x = &ratio - &QSeries::one(Ring::Rationals, k);
    let root = fourth_root_one_plus(&x);
    let n = |c: i64| QSeries::constant(Scalar::from_i64(Ring::Rationals, c), k);
    for sign in [1, -1] {
        let u = &root * &n(sign);
        let s = (&(&u * &dq.a1) - &sq.a1).scale(&Scalar::Rat(BigRational::new(1.into(), 2.into())))?;
        let u2 = &u * &u;
        let r = (&(&(&(&u2 * &dq.a2) - &sq.a2) + &(&s * &sq.a1)) + &(&s * &s))
            .scale(&Scalar::Rat(BigRational::new(1.into(), 3.into())))?;
        let t = (&(&(&(&u2 * &u) * &dq.a3) - &sq.a3) - &(&r * &sq.a1))
            .scale(&Scalar::Rat(BigRational::new(1.into(), 2.into())))?;
        let integral = [&u, &s, &r, &t].iter().map(|c| c.specialize(Ring::Integers)).collect::<Result<Vec<_>>>();
        let Ok(parts) = integral else { continue };
        let [u, s, r, t]: [QSeries; 4] = parts.try_into().expect("four parts");
        let g = Reparam::new(u, s, r, t)?;
        if reparam_apply(&g, src)? == *dst {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64], k: usize) -> QSeries {
        QSeries::from_i64s(Ring::Integers, c, k).unwrap()
    }

    #[test]
    fn tate_expansions() {
        let (a4, a6) = tate_coeffs(4).unwrap();
        assert_eq!(a4, z(&[0, -5, -45, -140], 4));
        assert_eq!(a6, z(&[0, -1, -23, -154], 4));
        let (a4, a6) = tate_coeffs(1).unwrap();
        assert!(a4.is_zero() && a6.is_zero());
        assert!(tate_coeffs(0).is_err());
    }

    #[test]
    fn normal_forms_are_fixed() {
        let (a4, a6) = tate_coeffs(6).unwrap();
        let w = WeierstrassCoeffs::new(z(&[1], 6), z(&[], 6), z(&[], 6), a4, a6).unwrap();
        let (g, out) = tate_normalize(&w).unwrap();
        assert_eq!(g, Reparam::identity_like(&w.a1));
        assert_eq!(out, w);
    }

    #[test]
    fn unit_flip() {
        let w = WeierstrassCoeffs::new(z(&[-1], 3), z(&[], 3), z(&[], 3), z(&[], 3), z(&[], 3)).unwrap();
        let (g, out) = tate_normalize(&w).unwrap();
        assert_eq!(g.u, z(&[-1], 3));
        assert!(g.s.is_zero() && g.r.is_zero() && g.t.is_zero());
        assert_eq!(out.a1, z(&[1], 3));
    }

    #[test]
    fn cusp_is_rejected() {
        let w = WeierstrassCoeffs::new(z(&[], 3), z(&[], 3), z(&[], 3), z(&[], 3), z(&[], 3)).unwrap();
        assert!(matches!(tate_normalize(&w), Err(Error::NormalizationFailure { order: 0, .. })));
    }

    #[test]
    fn isomorphism_recovers_a_moved_curve() {
        let k = 6;
        let (a4, a6) = tate_coeffs(k).unwrap();
        let tate = WeierstrassCoeffs::new(z(&[1], k), z(&[], k), z(&[], k), a4, a6).unwrap();
        let g = Reparam::new(z(&[-1, 0, 3], k), z(&[0, 1, -2], k), z(&[1, 0, 4], k), z(&[2, -1], k)).unwrap();
        let moved = reparam_apply(&g, &tate).unwrap();
        let back = isomorphism(&moved, &tate).unwrap().expect("isomorphic");
        assert_eq!(reparam_apply(&back, &moved).unwrap(), tate);
    }
}

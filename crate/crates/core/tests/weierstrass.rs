use tate_mirror::exactnum::{QSeries, Ring, Scalar};
use tate_mirror::weierstrass::{
    classify_fiber, discriminant, reparam_apply, reparam_compose, reparam_inverse, tate_coeffs, tate_normalize,
    FiberType, Reparam, WeierstrassCoeffs,
};

fn q(v: i64) -> Scalar {
    Scalar::from_i64(Ring::Rationals, v)
}

fn g(u: i64, s: i64, r: i64, t: i64) -> Reparam<Scalar> {
    Reparam::new(q(u), q(s), q(r), q(t)).unwrap()
}

fn w(a: [i64; 5]) -> WeierstrassCoeffs<Scalar> {
    WeierstrassCoeffs::from_i64s(Ring::Rationals, a)
}

#[test]
fn substitution_examples() {
    let any = w([3, -1, 4, 1, -5]);
    assert_eq!(reparam_apply(&g(1, 0, 0, 0), &any).unwrap(), any);
    assert_eq!(reparam_apply(&g(-1, 0, 0, 0), &w([-1, 0, 0, 0, 0])).unwrap(), w([1, 0, 0, 0, 0]));
    for r in [-2, 1, 5] {
        assert_eq!(reparam_apply(&g(1, 0, r, 0), &w([0; 5])).unwrap(), w([0, 3 * r, 0, 3 * r * r, r * r * r]));
    }
    assert!(Reparam::new(q(0), q(0), q(0), q(0)).is_err());
}

#[test]
fn composition_examples() {
    let h = g(2, 1, -3, 5);
    assert_eq!(reparam_compose(&g(1, 0, 0, 0), &h).unwrap(), h);
    assert_eq!(reparam_compose(&g(1, 0, 4, 0), &g(1, 0, -7, 0)).unwrap(), g(1, 0, -3, 0));
    let inv = reparam_inverse(&h).unwrap();
    assert_eq!(reparam_compose(&inv, &h).unwrap(), g(1, 0, 0, 0));
}

#[test]
fn discriminants_and_fibers() {
    let (d, c4) = discriminant(&w([1, 0, 0, 0, 0]));
    assert_eq!((d, c4), (q(0), q(1)));
    let (d, c4) = discriminant(&w([0; 5]));
    assert_eq!((d, c4), (q(0), q(0)));
    assert_eq!(discriminant(&w([0, 0, 0, -1, 0])).0, q(64));
    assert_eq!(classify_fiber(&w([0; 5])).unwrap(), FiberType::Cusp);
    assert_eq!(classify_fiber(&w([0, 0, 0, -1, 0])).unwrap(), FiberType::Smooth);
    for p in [2, 3, 5, 7, 11, 13] {
        let node = WeierstrassCoeffs::from_i64s(Ring::Prime(p), [1, 0, 0, 0, 0]);
        assert_eq!(classify_fiber(&node).unwrap(), FiberType::Node, "p = {p}");
    }
    assert!(classify_fiber(&WeierstrassCoeffs::from_i64s(Ring::Integers, [1, 0, 0, 0, 0])).is_err());
}

#[test]
fn tate_expansions() {
    let (a4, a6) = tate_coeffs(1).unwrap();
    assert!(a4.is_zero() && a6.is_zero());
    let (a4, a6) = tate_coeffs(4).unwrap();
    assert_eq!(a4, QSeries::from_i64s(Ring::Integers, &[0, -5, -45, -140], 4).unwrap());
    assert_eq!(a6, QSeries::from_i64s(Ring::Integers, &[0, -1, -23, -154], 4).unwrap());
}

#[test]
fn normalization_examples() {
    let k = 6;
    let z = Ring::Integers;
    let (a4, a6) = tate_coeffs(k).unwrap();
    let tate = WeierstrassCoeffs::new(QSeries::one(z, k), QSeries::zero(z, k), QSeries::zero(z, k), a4, a6).unwrap();
    let (g, out) = tate_normalize(&tate).unwrap();
    assert_eq!(out, tate);
    assert_eq!(g, Reparam::identity_like(&tate.a1));

    let minus = QSeries::from_i64s(z, &[-1], k).unwrap();
    let flipped = WeierstrassCoeffs::new(minus.clone(), QSeries::zero(z, k), QSeries::zero(z, k), QSeries::zero(z, k), QSeries::zero(z, k)).unwrap();
    let (g, out) = tate_normalize(&flipped).unwrap();
    assert_eq!(g.u, minus);
    assert_eq!(out.a1, QSeries::one(z, k));
    assert!(out.iter().skip(1).all(QSeries::is_zero));
}

use tate_mirror::exactnum::{QSeries, Ring};
use tate_mirror::fukaya::{
    dehn_table_q0, enumerate_triangles, floer_basis, floer_product, mirror_map, relation_kernel, seidel_mirror,
};
use tate_mirror::graded::Homogeneous;
use tate_mirror::rational::{int, rat};
use tate_mirror::theta::{graded_basis, lambda_exp, Theta};

#[test]
fn square_of_z_at_q0() {
    let ts = enumerate_triangles(1, int(0), 1, int(0), 1).unwrap();
    assert_eq!(ts.iter().map(|t| (t.j, t.exponent)).collect::<Vec<_>>(), [(-1, 0), (0, 0), (1, 0)]);
    assert!(enumerate_triangles(1, int(0), 1, int(0), 0).unwrap().is_empty());
}

#[test]
fn exponents_equal_lambda_and_signs_are_positive() {
    for n1 in 1..8u32 {
        for n2 in 1..=8 - n1 {
            for a in graded_basis(n1).unwrap() {
                for b in graded_basis(n2).unwrap() {
                    for t in enumerate_triangles(n1, a.value(), n2, b.value(), 10).unwrap() {
                        let l = lambda_exp(n1, a.value(), n2, b.value() + int(t.j));
                        assert_eq!(int(t.exponent as i128), l);
                        assert_eq!(t.stars % 2, 0);
                        assert_eq!(t.sign, 1);
                    }
                }
            }
        }
    }
}

#[test]
fn low_degree_products() {
    let one = || QSeries::one(Ring::Integers, 1);
    let zero = || QSeries::zero(Ring::Integers, 1);
    let p = floer_product(1, int(0), 2, rat(1, 2), 1).unwrap();
    assert_eq!(p.coeffs(), [zero(), one(), one()]);
    let p = floer_product(3, rat(2, 3), 3, rat(2, 3), 1).unwrap();
    assert_eq!(p.coeffs(), [zero(), zero(), zero(), zero(), one(), zero()]);
}

#[test]
fn dehn_table_matches_theta_side() {
    let table = dehn_table_q0().unwrap();
    assert_eq!(table.len(), 7);
    let z = floer_basis(1, 0, 1).unwrap();
    let direct = z.try_mul(&z).unwrap().try_mul(&z).unwrap();
    let other = z.try_mul(&z.try_mul(&z).unwrap()).unwrap();
    assert_eq!(direct, other);
    let t = Homogeneous::<Theta>::basis(Ring::Integers, graded_basis(1).unwrap()[0], 1).unwrap();
    let cube = t.try_mul(&t).unwrap().try_mul(&t).unwrap();
    assert_eq!(cube.relabel(), direct);
}

#[test]
fn relation_is_normalized_and_exact() {
    for k in [1, 4, 8] {
        let r = relation_kernel(k).unwrap();
        assert_eq!(r.coeffs[0], QSeries::one(Ring::Rationals, k));
        assert!(r.integral && r.residual_zero);
    }
}

#[test]
fn mirror_map_postconditions() {
    let w = seidel_mirror(1).unwrap();
    assert_eq!(w.a1, QSeries::one(Ring::Integers, 1));
    assert!(w.iter().skip(1).all(QSeries::is_zero));
    let m = mirror_map(8).unwrap();
    assert_eq!(m.normalized.a1, QSeries::one(Ring::Integers, 8));
    assert!(m.normalized.a2.is_zero() && m.normalized.a3.is_zero());
    assert_eq!(m.f, QSeries::from_i64s(Ring::Integers, &[-1, 8, -35, 120, -359, 968, -2416, 5680], 8).unwrap());
}

use num_bigint::BigInt;
use proptest::prelude::*;
use tate_mirror::exactnum::{divisor_power_sum, qs_invert, qs_mul, QSeries, Ring, Scalar};

fn z(c: &[i64], k: usize) -> QSeries {
    QSeries::from_i64s(Ring::Integers, c, k).unwrap()
}

#[test]
fn products() {
    assert_eq!(qs_mul(&z(&[1, 1], 3), &z(&[1, -1], 3)).unwrap(), z(&[1, 0, -1], 3));
    assert_eq!(qs_mul(&z(&[0, 0, 0, 1], 4), &z(&[0, 1], 4)).unwrap(), z(&[], 4));
    assert_eq!(qs_mul(&z(&[1, 1, 1], 3), &z(&[1, 1, 1], 3)).unwrap(), z(&[1, 2, 3], 3));
    assert!(qs_mul(&z(&[1], 3), &z(&[1], 4)).is_err());
    assert!(qs_mul(&z(&[1], 3), &QSeries::one(Ring::Rationals, 3)).is_err());
}

#[test]
fn inverses() {
    assert_eq!(qs_invert(&z(&[1], 4)).unwrap(), z(&[1], 4));
    assert_eq!(qs_invert(&z(&[1, -1], 4)).unwrap(), z(&[1, 1, 1, 1], 4));
    assert_eq!(qs_invert(&z(&[-1, 1], 3)).unwrap(), z(&[-1, -1, -1], 3));
    assert!(qs_invert(&z(&[2, 1], 3)).is_err());
    assert!(qs_invert(&z(&[0, 1], 3)).is_err());
}

#[test]
fn divisor_sums() {
    assert_eq!(divisor_power_sum(3, 1).unwrap(), BigInt::from(1));
    assert_eq!(divisor_power_sum(3, 2).unwrap(), BigInt::from(9));
    assert_eq!(divisor_power_sum(5, 3).unwrap(), BigInt::from(244));
    assert!(divisor_power_sum(3, 0).is_err());
}

#[test]
fn display() {
    assert_eq!(z(&[1, -8, 35], 3).to_string(), "1 - 8q + 35q^2 + O(q^3)");
}

#[test]
fn prime_field_arithmetic() {
    let f = Ring::prime(7).unwrap();
    let three = Scalar::from_i64(f, 3);
    assert_eq!(&three * &three.try_inv().unwrap(), Scalar::one(f));
    assert_eq!(Scalar::from_i64(f, -1), Scalar::from_i64(f, 6));
    assert!(Ring::prime(9).is_err());
}

fn series(k: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-20i64..20, k).prop_map(move |v| z(&v, k))
}

proptest! {
    #[test]
    fn inverse_is_two_sided(mut a in series(7), neg in any::<bool>()) {
        a.set_coeff(0, Scalar::from_i64(Ring::Integers, if neg { -1 } else { 1 }));
        let inv = qs_invert(&a).unwrap();
        prop_assert_eq!(&a * &inv, QSeries::one(Ring::Integers, 7));
    }

    #[test]
    fn truncation_is_a_ring_map(a in series(8), b in series(8), k in 1usize..8) {
        let t = |s: &QSeries| s.truncate(k).unwrap();
        prop_assert_eq!(t(&(&a * &b)), &t(&a) * &t(&b));
        prop_assert_eq!(t(&(&a + &b)), &t(&a) + &t(&b));
    }

    #[test]
    fn reduction_mod_p_is_a_ring_map(a in series(5), b in series(5)) {
        let p = Ring::Prime(5);
        let r = |s: &QSeries| s.specialize(p).unwrap();
        prop_assert_eq!(r(&(&a * &b)), &r(&a) * &r(&b));
    }
}

use proptest::prelude::*;
use tate_mirror::exactnum::Ring;
use tate_mirror::hochschild::{
    cusp_graded_ranks, koszul_h1_dim, omega_pairing, predicted_cusp_table, tjurina_dim, PlaneCurveRing, Poly,
    DEFAULT_BOUND,
};

#[test]
fn tjurina_and_koszul() {
    let cusp = |f| PlaneCurveRing::cusp(f).unwrap();
    assert_eq!(tjurina_dim(&cusp(Ring::Rationals), DEFAULT_BOUND).unwrap().basis, [(0, 0), (1, 0)]);
    assert_eq!(tjurina_dim(&cusp(Ring::Prime(3)), DEFAULT_BOUND).unwrap().dimension, 3);
    assert_eq!(tjurina_dim(&cusp(Ring::Prime(2)), DEFAULT_BOUND).unwrap().dimension, 4);
    assert_eq!(koszul_h1_dim(&cusp(Ring::Rationals), DEFAULT_BOUND).unwrap().dimension, 2);
    assert_eq!(koszul_h1_dim(&cusp(Ring::Prime(2)), DEFAULT_BOUND).unwrap().dimension, 4);
    let node = PlaneCurveRing::node(Ring::Rationals).unwrap();
    assert_eq!(koszul_h1_dim(&node, DEFAULT_BOUND).unwrap().dimension, 1);
    assert!(PlaneCurveRing::cusp(Ring::Integers).is_err());
}

#[test]
fn pairing_vanishes_and_is_alternating() {
    for f in [Ring::Rationals, Ring::Prime(2), Ring::Prime(3)] {
        let ring = PlaneCurveRing::cusp(f).unwrap();
        let h = koszul_h1_dim(&ring, DEFAULT_BOUND).unwrap();
        let table = omega_pairing(&ring, &h.generators, DEFAULT_BOUND).unwrap();
        assert_eq!(table.len(), h.dimension);
        for (i, row) in table.iter().enumerate() {
            assert!(row[i].is_zero());
        }
    }
}

#[test]
fn graded_examples() {
    let q = cusp_graded_ranks(Ring::Rationals, 3, -12).unwrap();
    assert_eq!(q.get(2, -6), Some(1));
    assert_eq!(q.row(2), [(-6, 1), (-4, 1)]);
    let f2 = cusp_graded_ranks(Ring::Prime(2), 3, -12).unwrap();
    assert_eq!(f2.row(2), [(-6, 1), (-4, 1), (-3, 1), (-1, 1)]);
    assert_eq!(predicted_cusp_table(0, 3, -12).unwrap().get(1, 0), Some(1));
    assert_eq!(predicted_cusp_table(2, 3, -12).unwrap().get(1, -3), Some(1));
    assert_eq!(predicted_cusp_table(0, 3, -12).unwrap().get(3, -6), Some(1));
    assert!(cusp_graded_ranks(Ring::Rationals, 11, -12).is_err());
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..5, 0u32..4, 0u32..5), 0..6)
        .prop_map(|terms| Poly::from_terms(Ring::Rationals, &terms))
}

proptest! {
    #[test]
    fn normal_form_is_idempotent(p in poly(), node in any::<bool>()) {
        let ring = PlaneCurveRing::new(Ring::Rationals, node as u8).unwrap();
        let n = ring.normal_form(&p).unwrap();
        prop_assert!(n.terms().keys().all(|&(_, b)| b <= 1));
        prop_assert_eq!(ring.normal_form(&n).unwrap(), n);
    }

    #[test]
    fn normal_form_respects_products(a in poly(), b in poly()) {
        let ring = PlaneCurveRing::node(Ring::Rationals).unwrap();
        let nf = |p: &Poly| ring.normal_form(p).unwrap();
        prop_assert_eq!(nf(&a.mul(&b)), ring.mul(&nf(&a), &nf(&b)).unwrap());
    }
}

use std::collections::BTreeMap;

use num_rational::Rational64;
use proptest::prelude::*;

use super::*;

fn rs(t: LieType, n: usize) -> RootSystem {
    RootSystem::new(t, n).unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

#[test]
fn dual_coxeter_and_ratio() {
    let cases = [
        (LieType::A, 1, 2, 1, 1),
        (LieType::A, 3, 4, 1, 6),
        (LieType::B, 3, 5, 2, 9),
        (LieType::C, 2, 3, 2, 4),
        (LieType::C, 3, 4, 2, 9),
        (LieType::D, 4, 6, 1, 12),
        (LieType::D, 5, 8, 1, 20),
        (LieType::G2, 2, 4, 3, 6),
    ];
    for (t, n, h, d, roots) in cases {
        let r = rs(t, n);
        assert_eq!(r.dual_coxeter, h, "{t}{n}");
        assert_eq!(r.ratio_d, d, "{t}{n}");
        assert_eq!(r.positive_root_count(), roots, "{t}{n}");
    }
}

#[test]
fn inadmissible_pairs_rejected() {
    assert!(RootSystem::new(LieType::B, 1).is_err());
    assert!(RootSystem::new(LieType::D, 2).is_err());
    assert!(RootSystem::new(LieType::G2, 3).is_err());
    assert!("E8".parse::<LieType>().is_err());
}

#[test]
fn highest_root_is_long() {
    for (t, n) in [(LieType::B, 2), (LieType::C, 3), (LieType::G2, 2), (LieType::D, 4)] {
        let r = rs(t, n);
        let theta = r.highest_root_weight();
        assert_eq!(r.inner(&theta, &theta), Rational64::from_integer(2));
        assert_eq!(r.level_of(&theta), 2);
    }
}

#[test]
fn fundamental_dimensions() {
    let cases = [
        (LieType::A, 1, vec![2]),
        (LieType::A, 2, vec![3]),
        (LieType::B, 2, vec![4]),
        (LieType::B, 3, vec![8]),
        (LieType::C, 2, vec![4]),
        (LieType::C, 3, vec![6]),
        (LieType::D, 4, vec![8, 8]),
        (LieType::D, 5, vec![16]),
        (LieType::G2, 2, vec![7]),
    ];
    for (t, n, dims) in cases {
        let r = rs(t, n);
        let got: Vec<u64> =
            r.fundamental_rep().summands.iter().map(|v| r.weyl_dimension(v).unwrap()).collect();
        assert_eq!(got, dims, "{t}{n}");
    }
}

#[test]
fn known_dimensions() {
    // adjoint representations
    assert_eq!(rs(LieType::G2, 2).weyl_dimension(&w(&[0, 1])).unwrap(), 14);
    assert_eq!(rs(LieType::A, 2).weyl_dimension(&w(&[1, 1])).unwrap(), 8);
    assert_eq!(rs(LieType::B, 2).weyl_dimension(&w(&[0, 2])).unwrap(), 10);
    assert_eq!(rs(LieType::D, 4).weyl_dimension(&w(&[0, 1, 0, 0])).unwrap(), 28);
}

#[test]
fn a1_tensor_with_v() {
    let r = rs(LieType::A, 1);
    let got = r.tensor_with_v(&w(&[1]), None).unwrap();
    assert_eq!(got, BTreeMap::from([(w(&[0]), 1), (w(&[2]), 1)]));
    let got = r.tensor_with_v(&w(&[2]), None).unwrap();
    assert_eq!(got, BTreeMap::from([(w(&[1]), 1), (w(&[3]), 1)]));
    let got = r.tensor_with_v(&w(&[0]), None).unwrap();
    assert_eq!(got, BTreeMap::from([(w(&[1]), 1)]));
}

#[test]
fn reflection_examples() {
    let r = rs(LieType::A, 1);
    assert_eq!(r.weyl_orbit_reflect(&w(&[-2]), None), Reflection::Dominant(w(&[0]), -1));
    assert_eq!(r.weyl_orbit_reflect(&w(&[-1]), None), Reflection::Annihilated);
    assert_eq!(r.weyl_orbit_reflect(&w(&[-3]), None), Reflection::Dominant(w(&[1]), -1));
    // affine wall at level k = 2 (ell = 4)
    assert_eq!(r.weyl_orbit_reflect(&w(&[3]), Some(4)), Reflection::Annihilated);
    assert_eq!(r.weyl_orbit_reflect(&w(&[4]), Some(4)), Reflection::Dominant(w(&[2]), -1));
}

#[test]
fn g2_multiplicities() {
    let r = rs(LieType::G2, 2);
    let m = r.weight_multiplicities(&w(&[1, 0])).unwrap();
    assert_eq!(m.len(), 7);
    let adj = r.weight_multiplicities(&w(&[0, 1])).unwrap();
    let zero = adj.iter().find(|(x, _)| x.is_zero()).unwrap().1;
    assert_eq!(zero, 2);
    // 7 ⊗ 7 = 1 + 7 + 14 + 27
    let t = r.tensor_product(&w(&[1, 0]), &w(&[1, 0]), None).unwrap();
    let dims: Vec<u64> = t.keys().map(|x| r.weyl_dimension(x).unwrap()).collect();
    let mut sorted = dims.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 7, 14, 27]);
}

#[test]
fn duals() {
    let r = rs(LieType::A, 2);
    assert_eq!(r.dual(&w(&[1, 0])), w(&[0, 1]));
    assert_eq!(r.dual(&w(&[2, 1])), w(&[1, 2]));
    let r = rs(LieType::D, 5);
    assert_eq!(r.dual(&w(&[0, 0, 0, 1, 0])), w(&[0, 0, 0, 0, 1]));
    let r = rs(LieType::D, 4);
    assert_eq!(r.dual(&w(&[0, 0, 1, 0])), w(&[0, 0, 1, 0]));
    let r = rs(LieType::B, 3);
    assert_eq!(r.dual(&w(&[0, 0, 1])), w(&[0, 0, 1]));
}

#[test]
fn weight_parsing() {
    assert_eq!("(1, 0,2)".parse::<Weight>().unwrap(), w(&[1, 0, 2]));
    assert_eq!(w(&[1, -2]).to_string(), "(1,-2)");
}

fn arb_case() -> impl Strategy<Value = (LieType, usize, Vec<i64>, Vec<i64>)> {
    prop_oneof![
        Just((LieType::A, 2)),
        Just((LieType::B, 2)),
        Just((LieType::C, 3)),
        Just((LieType::G2, 2)),
        Just((LieType::D, 4)),
    ]
    .prop_flat_map(|(t, n)| {
        (
            Just(t),
            Just(n),
            prop::collection::vec(0i64..=2, n),
            prop::collection::vec(0i64..=1, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_dimensions_add_up((t, n, a, b) in arb_case()) {
        let r = rs(t, n);
        let (a, b) = (Weight(a), Weight(b));
        let t = r.tensor_product(&a, &b, None).unwrap();
        let total: u64 = t.iter().map(|(x, m)| m * r.weyl_dimension(x).unwrap()).sum();
        prop_assert_eq!(total, r.weyl_dimension(&a).unwrap() * r.weyl_dimension(&b).unwrap());
    }

    #[test]
    fn multiplicities_sum_to_dimension((t, n, a, _b) in arb_case()) {
        let r = rs(t, n);
        let a = Weight(a);
        let m = r.weight_multiplicities(&a).unwrap();
        let total: u64 = m.iter().map(|(_, k)| k).sum();
        prop_assert_eq!(total, r.weyl_dimension(&a).unwrap());
    }
}

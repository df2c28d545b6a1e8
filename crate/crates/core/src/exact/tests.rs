use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::{CycloMatrix, CycloNumber, Rational};

fn z(n: u32, k: i64) -> CycloNumber {
    CycloNumber::embed_root_of_unity(n, k)
}

fn int(n: i64) -> CycloNumber {
    CycloNumber::from_int(n)
}

#[test]
fn trivial_root_is_one() {
    assert_eq!(z(1, 0), CycloNumber::one());
    assert_eq!(z(7, 7), CycloNumber::one());
    assert_eq!(z(12, -12), CycloNumber::one());
}

#[test]
fn i_squared_is_minus_one() {
    let i = z(4, 1);
    assert_eq!(&i * &i, int(-1));
}

#[test]
fn two_cos_pi_over_three() {
    // float oracle at 50 digits: e^{iπ/3} + e^{-iπ/3} = 2cos(π/3) = 1
    let s = &z(6, 1) + &z(6, -1);
    let f = s.to_float(50);
    let one = CycloNumber::one().to_float(50);
    assert!(f.distance(&one) < 1e-45);
    assert_eq!(s, CycloNumber::one());
}

#[test]
fn quantum_integers_at_roots_of_unity() {
    assert_eq!(quantum_integer(1, &z(6, 1)).unwrap(), int(1));
    assert_eq!(quantum_integer(2, &z(6, 1)).unwrap(), int(1));
    assert!(quantum_integer(4, &z(8, 1)).unwrap().is_zero());
    assert_eq!(quantum_integer(-3, &z(10, 1)).unwrap(), -quantum_integer(3, &z(10, 1)).unwrap());
    for (n, q) in [(3, 10u32), (5, 14), (2, 8)] {
        let exact = quantum_integer(n, &z(q, 1)).unwrap().to_complex64();
        let theta = std::f64::consts::PI * 2.0 / q as f64;
        let oracle = (n as f64 * theta).sin() / theta.sin();
        assert!((exact.re - oracle).abs() < 1e-12 && exact.im.abs() < 1e-12);
    }
}

#[test]
fn quantum_integer_rejects_self_inverse_q() {
    assert_eq!(quantum_integer(2, &int(1)), Err(ExactError::DivisionByZero));
    assert_eq!(quantum_integer(2, &z(2, 1)), Err(ExactError::DivisionByZero));
}

#[test]
fn conjugation_of_i() {
    assert_eq!(z(4, 1).conj(), z(4, 3));
}

#[test]
fn golden_ratio_is_positive() {
    let phi = quantum_integer(2, &z(10, 1)).unwrap();
    assert_eq!(phi.is_real_positive(), Ok(true));
    assert_eq!((-&phi).is_real_positive(), Ok(false));
    assert_eq!(CycloNumber::zero().is_real_positive(), Err(ExactError::Indeterminate));
    // 2cos(3°) = 1.99726…, so the sign flips between these two offsets
    let d = quantum_integer(2, &z(120, 1)).unwrap();
    assert_eq!((&d - &CycloNumber::from_ratio(1997, 1000)).is_real_positive(), Ok(true));
    assert_eq!((&d - &CycloNumber::from_ratio(1998, 1000)).is_real_positive(), Ok(false));
    assert_eq!(z(8, 1).is_real_positive(), Ok(false));
}

#[test]
fn eighth_root_to_float() {
    let f = z(8, 1).to_float(20).to_complex64();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!((f.re - h).abs() < 1e-15 && (f.im - h).abs() < 1e-15);
}

#[test]
fn mixed_order_promotion() {
    // ζ_4 = ζ_12^3
    assert_eq!(z(4, 1), z(12, 3));
    let s = &z(4, 1) + &z(3, 1);
    assert_eq!(s.order(), 12);
    assert_eq!(&s - &z(3, 1), z(4, 1));
}

#[test]
fn inverse_of_dense_element() {
    let x = &(&z(15, 1) + &int(3)) + &z(15, 7);
    let y = x.inv().unwrap();
    assert_eq!(&x * &y, CycloNumber::one());
    assert_eq!(CycloNumber::zero().inv(), Err(ExactError::DivisionByZero));
}

#[test]
fn json_round_trip() {
    let x = &CycloNumber::from_ratio(-3, 4) + &z(8, 3);
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, r#"{"order":8,"coeffs":["-3/4","0","0","1"]}"#);
    let back: CycloNumber = serde_json::from_str(&s).unwrap();
    assert_eq!(back, x);
    let m = CycloMatrix::identity(2);
    let s = serde_json::to_string(&m).unwrap();
    assert!(s.starts_with("[[{\"order\":1"));
}

#[test]
fn matrix_rank_and_inverse() {
    let m = CycloMatrix::from_rows(vec![
        vec![int(1), z(3, 1)],
        vec![z(3, 2), int(1)],
    ]);
    // det = 1 - ζ^3 = 0
    assert_eq!(m.rank(), 1);
    assert!(m.inverse().is_none());
    let m = CycloMatrix::from_rows(vec![vec![int(1), z(8, 1)], vec![z(8, 1), int(1)]]);
    let inv = m.inverse().unwrap();
    assert!((&m * &inv).is_identity());
    let ct = m.conj_transpose();
    assert_eq!(ct.conj_transpose(), m);
}

#[test]
fn echelon_basis_tracks_span() {
    let mut b = EchelonBasis::<Rational>::new(3);
    let r = |v: [i64; 3]| v.map(|x| Rational::from_integer(x.into())).to_vec();
    assert!(b.insert(&r([1, 2, 3])));
    assert!(b.insert(&r([0, 1, 1])));
    assert!(!b.insert(&r([2, 5, 7])));
    assert!(b.contains(&r([1, 3, 4])));
    assert_eq!(b.rank(), 2);
}

#[test]
fn float_scalar_instantiation() {
    let q = crate::CycloF64::root_of_unity(10, 1);
    let d = quantum_integer(2, &q).unwrap().to_complex64();
    assert!((d.re - 1.618033988749895).abs() < 1e-12);
}

fn arb_cyclo(order: u32) -> impl Strategy<Value = CycloNumber> {
    let phi = CycloField::get(order).degree();
    prop::collection::vec((-5i64..=5, 1i64..=4), phi).prop_map(move |cs| {
        let coeffs = cs.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect();
        CycloNumber::from_coeffs(order, coeffs)
    })
}

fn arb_pair() -> impl Strategy<Value = (CycloNumber, CycloNumber, CycloNumber)> {
    prop_oneof![Just(5u32), Just(8), Just(12), Just(20)]
        .prop_flat_map(|n| (arb_cyclo(n), arb_cyclo(n), arb_cyclo(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms((a, b, c) in arb_pair()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycloNumber::one());
        }
    }

    #[test]
    fn galois_consistency((a, b, _c) in arb_pair()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn embedding_fidelity((a, b, _c) in arb_pair()) {
        let digits = 30;
        let lhs = (&a * &b).to_float(digits);
        let rhs = a.to_float(digits).mul(&b.to_float(digits));
        let d = lhs.distance(&rhs);
        prop_assert!(d < 1e-25, "distance {}", d);
    }

    #[test]
    fn conj_transpose_reverses_products((a, b, c) in arb_pair(), d in arb_cyclo(8)) {
        let m = CycloMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        let n = CycloMatrix::from_rows(vec![vec![d, c], vec![b, a]]);
        prop_assert_eq!((&m * &n).conj_transpose(), &n.conj_transpose() * &m.conj_transpose());
    }
}

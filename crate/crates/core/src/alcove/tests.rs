use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use super::*;
use crate::lie::{LieType, RootSystem, Weight};

fn cat(t: LieType, n: usize, k: i64) -> AlcoveCategory {
    AlcoveCategory::new(RootSystem::new(t, n).unwrap(), k).unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn close(x: &CycloNumber, re: f64, im: f64) -> bool {
    let z = x.to_complex64();
    (z.re - re).abs() < 1e-10 && (z.im - im).abs() < 1e-10
}

/// `Π sin(π⟨λ+ρ, α⟩/ℓ) / sin(π⟨ρ, α⟩/ℓ)` in floating point.
fn qdim_oracle(c: &AlcoveCategory, lambda: &Weight) -> f64 {
    let rs = &c.rs;
    let shifted = lambda.add(&rs.rho);
    let mut x = 1.0;
    for k in 0..rs.positive_root_count() {
        let a = rs.root_weight(k);
        let num = rs.inner(&shifted, a).to_f64().unwrap();
        let den = rs.inner(&rs.rho, a).to_f64().unwrap();
        x *= (PI * num / c.ell as f64).sin() / (PI * den / c.ell as f64).sin();
    }
    x
}

#[test]
fn a1_alcoves_and_qdims() {
    let c = cat(LieType::A, 1, 1);
    assert_eq!(c.weights, vec![w(&[0]), w(&[1])]);
    assert!(c.qdim(&w(&[1])).unwrap().is_one());

    let c = cat(LieType::A, 1, 2);
    assert_eq!(c.weights.len(), 3);
    let sqrt2 = &CycloNumber::embed_root_of_unity(8, 1) + &CycloNumber::embed_root_of_unity(8, -1);
    assert_eq!(c.qdim(&w(&[1])).unwrap(), &sqrt2);
    assert!(c.qdim(&w(&[2])).unwrap().is_one());

    let c = cat(LieType::A, 1, 3);
    assert_eq!(c.weights.len(), 4);
    let golden = &CycloNumber::embed_root_of_unity(10, 1) + &CycloNumber::embed_root_of_unity(10, -1);
    assert_eq!(c.qdim(&w(&[1])).unwrap(), &golden);
    assert!(close(&golden, 2.0 * (PI / 5.0).cos(), 0.0));
}

#[test]
fn qdims_match_sine_oracle() {
    for (t, n, k) in [(LieType::A, 2, 3), (LieType::B, 2, 2), (LieType::C, 2, 2), (LieType::G2, 2, 2), (LieType::D, 4, 1)] {
        let c = cat(t, n, k);
        for (i, lambda) in c.weights.iter().enumerate() {
            assert!(close(&c.qdims[i], qdim_oracle(&c, lambda), 0.0), "{t}{n} k={k} {lambda}");
        }
        assert!(c.qdims_positive().unwrap());
    }
}

#[test]
fn ising_and_unit_fusion() {
    let c = cat(LieType::A, 1, 1);
    assert_eq!(c.fuse(&w(&[1]), &w(&[1])).unwrap(), BTreeMap::from([(w(&[0]), 1)]));
    let c = cat(LieType::A, 1, 2);
    assert_eq!(
        c.fuse(&w(&[1]), &w(&[1])).unwrap(),
        BTreeMap::from([(w(&[0]), 1), (w(&[2]), 1)])
    );
    assert_eq!(c.fuse(&w(&[2]), &w(&[2])).unwrap(), BTreeMap::from([(w(&[0]), 1)]));
    for mu in &c.weights {
        assert_eq!(c.fuse(&w(&[0]), mu).unwrap(), BTreeMap::from([(mu.clone(), 1)]));
    }
    assert!(matches!(c.fuse(&w(&[3]), &w(&[0])), Err(AlcoveError::NotInAlcove(_))));
}

#[test]
fn g2_level_one_is_fibonacci() {
    let c = cat(LieType::G2, 2, 1);
    assert_eq!(c.weights, vec![w(&[0, 0]), w(&[1, 0])]);
    assert_eq!(c.fuse(&w(&[1, 0]), &w(&[1, 0])).unwrap(), BTreeMap::from([(w(&[0, 0]), 1), (w(&[1, 0]), 1)]));
}

#[test]
fn truncated_power_examples() {
    let c = cat(LieType::A, 1, 1);
    let p = c.truncated_powers(3).unwrap();
    assert_eq!(p[1].decomposition, BTreeMap::from([(w(&[0]), 1)]));
    assert_eq!(p[2].decomposition, BTreeMap::from([(w(&[1]), 1)]));

    let c = cat(LieType::A, 1, 2);
    let p = c.truncated_power(3).unwrap();
    assert_eq!(p.decomposition, BTreeMap::from([(w(&[1]), 2)]));
    assert_eq!(p.centralizer_dimension(), 4);
    assert_eq!(p.paths.len(), 2);

    let c = cat(LieType::A, 1, 3);
    let p = c.truncated_power(4).unwrap();
    assert_eq!(p.decomposition, BTreeMap::from([(w(&[0]), 2), (w(&[2]), 3)]));
    assert_eq!(p.centralizer_dimension(), 13);
}

#[test]
fn twists() {
    let c = cat(LieType::A, 1, 2);
    assert!(c.twist(&w(&[0])).unwrap().is_one());
    // h = λ(λ+2)/4ℓ
    assert_eq!(c.twist(&w(&[1])).unwrap(), &CycloNumber::embed_root_of_unity(16, 3));
    assert_eq!(c.twist(&w(&[2])).unwrap(), &CycloNumber::from_int(-1));
    for lambda in &c.weights {
        let h = (lambda.0[0] * (lambda.0[0] + 2)) as f64 / (4.0 * c.ell as f64);
        let th = c.twist(lambda).unwrap();
        assert!(close(th, (2.0 * PI * h).cos(), (2.0 * PI * h).sin()));
    }
}

#[test]
fn a1_s_matrix_matches_sine_formula() {
    for k in 1..=4 {
        let c = cat(LieType::A, 1, k);
        let s = c.s_matrix().unwrap();
        let l = c.ell as f64;
        for a in 0..c.rank() {
            for b in 0..c.rank() {
                let oracle = (PI * ((a + 1) * (b + 1)) as f64 / l).sin() / (PI / l).sin();
                assert!(close(&s[(a, b)], oracle, 0.0), "k={k} ({a},{b})");
            }
        }
    }
    let s = cat(LieType::A, 1, 1).s_matrix().unwrap();
    assert_eq!(s[(0, 0)].to_complex64().norm(), s[(0, 1)].to_complex64().norm());
}

#[test]
fn modular_relations() {
    for (t, n, k) in [(LieType::A, 1, 3), (LieType::A, 2, 2), (LieType::B, 2, 1), (LieType::C, 2, 2), (LieType::G2, 2, 1)] {
        let c = cat(t, n, k);
        let data = c.modular_data().unwrap();
        let r = c.modular_report(&data);
        assert!(r.all_ok(), "{t}{n} k={k}: {r:?}");
    }
}

#[test]
fn verlinde_a1() {
    for k in 1..=8 {
        let c = cat(LieType::A, 1, k);
        let data = c.modular_data().unwrap();
        let report = c.verlinde_check(&data).unwrap();
        assert!(report.passed(), "k={k}: {:?}", report.violations.first());
    }
}

#[test]
fn json_and_csv() {
    let c = cat(LieType::A, 1, 1);
    let v = serde_json::to_value(c.fusion_table()).unwrap();
    assert_eq!(v["weights"], serde_json::json!([[0], [1]]));
    assert_eq!(v["N"][1][1], serde_json::json!([1, 0]));
    assert_eq!(v["conventions"]["ell"], 3);
    let csv = c.fusion_table().to_csv();
    assert!(csv.contains("\"(1)\",\"(1)\",\"(0)\",1"));
    let m = c.modular_json(&c.modular_data().unwrap());
    assert!(m["S"].is_array() && m["T"].is_array());
}

fn arb_category() -> impl Strategy<Value = (LieType, usize, i64)> {
    prop_oneof![
        (1i64..=6).prop_map(|k| (LieType::A, 1usize, k)),
        (1i64..=3).prop_map(|k| (LieType::A, 2, k)),
        (1i64..=2).prop_map(|k| (LieType::B, 2, k)),
        (1i64..=2).prop_map(|k| (LieType::C, 3, k)),
        (1i64..=2).prop_map(|k| (LieType::G2, 2, k)),
        Just((LieType::D, 4, 1)),
        Just((LieType::A, 3, 2)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fusion_ring_axioms((t, n, k) in arb_category()) {
        let c = cat(t, n, k);
        prop_assert_eq!(c.associativity_violations(), 0);
        prop_assert_eq!(c.ring_axiom_violations(), 0);
        prop_assert_eq!(c.qdim_multiplicativity_violations(), 0);
    }

    #[test]
    fn truncated_summands_have_positive_qdim((t, n, k) in arb_category()) {
        let c = cat(t, n, k);
        for p in c.truncated_powers(4).unwrap() {
            prop_assert_eq!(p.dimension_count() as usize, p.paths.len());
            for lambda in p.decomposition.keys() {
                prop_assert!(c.qdim(lambda).unwrap().is_real_positive().unwrap());
            }
        }
    }
}

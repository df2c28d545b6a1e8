use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::alcove::AlcoveCategory;
use crate::braid::{coboundary, pair_braiding};
use crate::exact::Matrix;
use crate::lie::{LieType, RootSystem, Weight};
use crate::CycloNumber;

fn a1(k: u8) -> AlcoveCategory {
    AlcoveCategory::new(RootSystem::new(LieType::A, 1).unwrap(), k as i64).unwrap()
}

fn golden_ratio_inverse_f64() -> f64 {
    2.0 / (1.0 + 5f64.sqrt())
}

#[test]
fn transvectant_zeroth_order_is_multiplication() {
    // (x, y) times (x, y) = x^2 + 2xy + y^2 in the basis x^2, xy, y^2
    let t: Matrix<f64> = transvectant(1, 1, 0);
    let prod: Vec<f64> = (0..3).map(|m| (0..4).map(|c| t[(m, c)]).sum()).collect();
    assert_eq!(prod, vec![1.0, 2.0, 1.0]);
    // (x, y)_1 is the Jacobian determinant
    let j: Matrix<f64> = transvectant(1, 1, 1);
    assert_eq!(j.entries(), &[0.0, 1.0, -1.0, 0.0]);
}

#[test]
fn transvectants_span_the_tensor_product() {
    for l in 0..=4usize {
        for m in 0..=4usize {
            let rows: Vec<Vec<num_rational::BigRational>> = (0..=l.min(m))
                .flat_map(|r| {
                    let t = transvectant::<num_rational::BigRational>(l, m, r);
                    (0..t.rows()).map(move |i| t.row(i).to_vec()).collect::<Vec<_>>()
                })
                .collect();
            assert_eq!(Matrix::from_rows(rows).rank(), (l + 1) * (m + 1));
        }
    }
}

#[test]
fn ising_gauge_invariant_is_one_half() {
    let t = SixJTable::q_racah(2).unwrap();
    let inv = GaugeInvariants::of(&t).unwrap();
    for (e, f) in [(0, 0), (0, 2), (2, 0), (2, 2)] {
        assert_eq!(inv.f_ratios[&[1, 1, 1, 1, e, f]], CycloNumber::from_ratio(1, 2));
    }
}

#[test]
fn fibonacci_f_symbol_is_inverse_golden_ratio() {
    // label 2 at level 3 is the Fibonacci anyon; in this gauge F^{222}_2[0,0] = 1/[3]
    let t = SixJTable::q_racah(3).unwrap();
    let x = t.f(&[2, 2, 2, 2, 0, 0]);
    assert!((x.to_complex64().re - golden_ratio_inverse_f64()).abs() < 1e-12);
    assert!(x.to_complex64().im.abs() < 1e-12);
    let phi = QRacah::new(3).qint(3).clone();
    assert_eq!(x, &phi.inv().unwrap());
    // d_τ^2 = 1 + d_τ
    assert_eq!(&phi * &phi, &CycloNumber::one() + &phi);
}

#[test]
fn q_racah_satisfies_every_axiom() {
    let expected_pentagons = [16, 132, 752, 3307];
    for k in 1..=4u8 {
        let t = SixJTable::q_racah(k).unwrap();
        let summary = AxiomSummary::new(&t);
        assert!(summary.passed(), "k={k}: {:?}", summary.reports);
        assert_eq!(summary.reports[0].instances, expected_pentagons[k as usize - 1]);
    }
}

#[test]
fn weighted_unitarity_exact_and_float() {
    for k in 1..=4u8 {
        let t = SixJTable::q_racah(k).unwrap();
        assert_eq!(weighted_unitarity_violations(&t).unwrap(), 0);
        assert!(unitarity_float_check(&t).unwrap() < 1e-12);
    }
}

#[test]
fn r_symbols_match_pair_braiding_eigenvalues() {
    for k in 1..=4u8 {
        let cat = a1(k);
        let t = SixJTable::q_racah(k).unwrap();
        for lambda in 0..=k {
            let pb = pair_braiding(&cat, &Weight(vec![lambda as i64]), 0).unwrap();
            for ch in &pb.channels {
                let nu = ch.nu.0[0] as u8;
                assert_eq!(t.r(lambda, 1, nu), &ch.eigenvalue, "k={k} λ={lambda} ν={nu}");
            }
        }
    }
}

#[test]
fn twists_recovered_from_r_symbols() {
    for k in 1..=4u8 {
        let inv = GaugeInvariants::of(&SixJTable::q_racah(k).unwrap()).unwrap();
        assert_eq!(inv.twists.as_slice(), a1(k).twists());
        let fs: Vec<CycloNumber> = (0..=k as i64).map(|a| CycloNumber::from_int(if a % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(inv.frobenius_schur, fs);
    }
}

#[test]
fn brute_force_oracle_reproduces_q_racah() {
    for k in 1..=3u8 {
        let r = brute_force_pentagon(k).unwrap();
        assert!(r.matches_q_racah, "k={k}: {r:?}");
        assert!(r.solutions >= 1);
    }
}

#[test]
fn special_symbols_determine_the_table() {
    for k in 1..=3u8 {
        let r = rederive_from_special(&SixJTable::q_racah(k).unwrap()).unwrap();
        assert!(r.passed(), "k={k}: {r:?}");
    }
}

#[test]
fn vanishing_symbol_is_still_perturbed() {
    // F^{222}_2[2,2] = 0 at level 4
    let t = SixJTable::q_racah(4).unwrap();
    assert!(t.f(&[2, 2, 2, 2, 2, 2]).is_zero());
    let r = negative_controls(&t, 100, 1004);
    assert_eq!(r.detected, 100, "{r:?}");
}

#[test]
fn gauge_rigidity_and_negative_controls() {
    for k in 1..=3u8 {
        let r = gauge_rigidity_experiment(&SixJTable::q_racah(k).unwrap(), 10, 11).unwrap();
        assert!(r.passed(), "k={k}: {r:?}");
    }
}

#[test]
fn aw_axioms_hold() {
    for k in 1..=3u8 {
        let w = build_aw(k).unwrap();
        let r = w.check().unwrap();
        assert!(r.passed(), "k={k}: {r:?}");
        // Δ(1) is a proper idempotent on the block (k, k)
        let top = r.delta_one.iter().find(|b| b.lambda == k && b.mu == k).unwrap();
        assert!(top.rank < top.size);
    }
}

#[test]
fn aw_level_is_bounded() {
    assert!(matches!(build_aw(MAX_AW_LEVEL + 1), Err(WqhError::LevelTooLarge { .. })));
}

#[test]
fn aw_detects_a_perturbed_f_symbol() {
    let w = build_aw(2).unwrap();
    let mut table = w.table.clone();
    let key = [1, 1, 1, 1, 0, 2];
    let x = &table.f[&key] * &CycloNumber::from_ratio(1001, 1000);
    table.f.insert(key, x);
    let bad = WeakQuasiBialgebra::from_table(table).unwrap();
    let r = bad.check().unwrap();
    assert!(r.coassociativity_violations > 0 || r.hexagon_violations > 0);
}

#[test]
fn aw_detects_a_perturbed_r_symbol() {
    let w = build_aw(2).unwrap();
    let mut table = w.table.clone();
    let x = -table.r(1, 1, 2).clone();
    table.r.insert([1, 1, 2], x);
    let bad = WeakQuasiBialgebra::from_table(table).unwrap();
    assert!(bad.check().unwrap().hexagon_violations > 0);
}

#[test]
fn twist_round_trip_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 1..=3u8 {
        let w = build_aw(k).unwrap();
        let j = random_gauge(k, &mut rng);
        let moved = apply_twist(&w, &j).unwrap();
        assert!(moved.check().unwrap().passed());
        let back = apply_twist(&moved, &j.inverse().unwrap()).unwrap();
        assert_eq!(back, w);
    }
}

#[test]
fn coproduct_commutes_with_channel_twists() {
    let w = build_aw(2).unwrap();
    let j = w.twist_element(&random_gauge(2, &mut ChaCha8Rng::seed_from_u64(9)));
    let a = w.basis_element(1, 0, 1);
    for (key, d) in w.delta(&a) {
        assert_eq!(&j[&key] * &d, &d * &j[&key]);
    }
}

#[test]
fn coboundary_twist_gives_sign_blocks() {
    for k in 1..=4u8 {
        let cat = a1(k);
        let t = SixJTable::q_racah(k).unwrap().twisted(&coboundary_twist(k)).unwrap();
        assert!(AxiomSummary::new(&t).passed());
        for lambda in (0..=k).filter(|&l| l != 1) {
            let pb = pair_braiding(&cat, &Weight(vec![lambda as i64]), 0).unwrap();
            let cb = coboundary(&pb);
            for (ch, (_, rbar)) in pb.channels.iter().zip(&cb.rbar_blocks) {
                let nu = ch.nu.0[0] as u8;
                let rj = t.r(lambda, 1, nu);
                assert_eq!(rj, &CycloNumber::from_int(ch.sign));
                assert!(rj == rbar || rj == &-rbar.clone());
                // the opposite braiding keeps the full monodromy
                assert_eq!(&(rj * t.r(1, lambda, nu)), &ch.monodromy);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_gauges_keep_invariants(seed in any::<u64>(), k in 1u8..=3) {
        let t = SixJTable::q_racah(k).unwrap();
        let moved = t.twisted(&random_gauge(k, &mut ChaCha8Rng::seed_from_u64(seed))).unwrap();
        prop_assert_eq!(GaugeInvariants::of(&moved).unwrap(), GaugeInvariants::of(&t).unwrap());
        prop_assert!(pentagon_suite(&moved).passed());
    }

    #[test]
    fn admissibility_is_symmetric(k in 1u8..=6, a in 0u8..=6, b in 0u8..=6, c in 0u8..=6) {
        prop_assert_eq!(admissible(k, a, b, c), admissible(k, b, a, c));
        prop_assert_eq!(admissible(k, a, b, c), admissible(k, a, c, b));
    }

    #[test]
    fn unit_leg_f_symbols_are_one(k in 1u8..=4, a in 0u8..=4, b in 0u8..=4, d in 0u8..=4) {
        let t = SixJTable::q_racah(k).unwrap();
        if admissible(k, a, b, d) {
            prop_assert!(t.f(&[a, b, 0, d, d, b]).is_one());
            prop_assert!(t.f(&[0, a, b, d, a, d]).is_one());
        }
    }
}


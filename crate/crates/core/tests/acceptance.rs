//! Acceptance gate: one PASS/FAIL line per criterion, each with its own time
//! limit. Runs without the libtest harness so the lines are always visible.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcat::alcove::AlcoveCategory;
use qcat::braid::{coboundary, duality_report, pair_braidings, pair_duality};
use qcat::lie::{LieType, RootSystem};
use qcat::wqh::{
    apply_twist, brute_force_pentagon, build_aw, hexagon_suite, negative_controls, pentagon_suite, random_gauge,
    rederive_from_special, GaugeInvariants, SixJTable,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cat(t: LieType, rank: usize, k: i64) -> AlcoveCategory {
    AlcoveCategory::new(RootSystem::new(t, rank).expect("root system"), k).expect("alcove")
}

/// The categories of criteria 1 and 2 with their expected object counts.
fn exactness_list() -> Vec<(LieType, usize, i64, usize)> {
    let mut out = Vec::new();
    for k in 1..=8 {
        out.push((LieType::A, 1, k, k as usize + 1));
    }
    for k in 1..=4 {
        out.push((LieType::A, 2, k, ((k + 1) * (k + 2) / 2) as usize));
    }
    for k in 1..=3 {
        // B2 and C2 alcoves are triangles a + b ≤ k; G2 needs a + 2b ≤ k
        out.push((LieType::B, 2, k, ((k + 1) * (k + 2) / 2) as usize));
        out.push((LieType::C, 2, k, ((k + 1) * (k + 2) / 2) as usize));
        let g2 = (0..=k).map(|b| (k - 2 * b + 1).max(0)).sum::<i64>() as usize;
        out.push((LieType::G2, 2, k, g2));
    }
    out
}

/// Every supported category used for the pair-level criteria.
fn supported_list() -> Vec<(LieType, usize, i64)> {
    let mut out: Vec<_> = exactness_list().into_iter().map(|(t, n, k, _)| (t, n, k)).collect();
    out.extend([(LieType::D, 4, 1), (LieType::D, 4, 2), (LieType::D, 5, 1)]);
    out
}

fn a1_fusion(k: i64, a: i64, b: i64, c: i64) -> u64 {
    ((a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0 && a + b + c <= 2 * k) as u64
}

fn criterion_1() -> Outcome {
    let mut objects = 0;
    for (t, n, k, count) in exactness_list() {
        let c = cat(t, n, k);
        ensure!(c.rank() == count, "{t}{n} k={k}: {} objects, expected {count}", c.rank());
        ensure!(c.associativity_violations() == 0, "{t}{n} k={k}: associativity");
        ensure!(c.ring_axiom_violations() == 0, "{t}{n} k={k}: ring axioms");
        ensure!(c.qdim_multiplicativity_violations() == 0, "{t}{n} k={k}: qdim multiplicativity");
        let data = c.modular_data().map_err(|e| format!("{t}{n} k={k}: {e}"))?;
        let v = c.verlinde_check(&data).map_err(|e| e.to_string())?;
        ensure!(v.passed(), "{t}{n} k={k}: Verlinde {:?}", v.violations.first());
        if t == LieType::A && n == 1 {
            let ell = (k + 2) as f64;
            for a in 0..=k {
                let d = ((a + 1) as f64 * std::f64::consts::PI / ell).sin() / (std::f64::consts::PI / ell).sin();
                let z = c.qdims[a as usize].to_complex64();
                ensure!((z.re - d).abs() < 1e-12 && z.im.abs() < 1e-12, "A1 k={k}: qdim({a})");
                for b in 0..=k {
                    for cc in 0..=k {
                        ensure!(
                            c.fusion[a as usize][b as usize][cc as usize] == a1_fusion(k, a, b, cc),
                            "A1 k={k}: N_{a}{b}^{cc}"
                        );
                    }
                }
            }
        }
        objects += count;
    }
    Ok(format!("{} categories, {objects} simple objects", exactness_list().len()))
}

fn criterion_2() -> Outcome {
    for (t, n, k, _) in exactness_list() {
        let c = cat(t, n, k);
        let s = c.s_matrix().map_err(|e| e.to_string())?;
        let sss = &s * &s.conj_transpose();
        let scalar = sss.scalar_multiple_of_identity();
        ensure!(scalar.as_ref().is_some_and(|x| !x.is_zero()), "{t}{n} k={k}: S S* is not a nonzero scalar");
        let st = &s * &c.t_matrix();
        let st3 = &(&st * &st) * &st;
        let ratio = st3.proportionality(&(&s * &s));
        ensure!(ratio.is_some_and(|x| !x.is_zero()), "{t}{n} k={k}: (ST)^3 not proportional to S^2");
    }
    Ok(format!("{} categories", exactness_list().len()))
}

fn criterion_3() -> Outcome {
    let mut summands = 0;
    for (t, n, k) in supported_list() {
        let c = cat(t, n, k);
        for p in c.truncated_powers(6).map_err(|e| e.to_string())? {
            for w in p.decomposition.keys() {
                let d = c.qdim(w).map_err(|e| e.to_string())?;
                ensure!(!d.is_zero() && d == &d.conj(), "{t}{n} k={k} n={}: qdim({w}) is not a nonzero real", p.n);
                ensure!(d.to_complex64().re > 0.0, "{t}{n} k={k} n={}: qdim({w}) ≤ 0", p.n);
                summands += 1;
            }
            if t == LieType::A && n == 1 {
                // sl2: V^n holds exactly the labels a ≤ min(n, k) with a ≡ n mod 2
                let expect: Vec<i64> = (0..=k.min(p.n as i64)).filter(|a| (a - p.n as i64) % 2 == 0).collect();
                let got: Vec<i64> = p.decomposition.keys().map(|w| w.0[0]).collect();
                ensure!(got == expect, "A1 k={k} n={}: summands {got:?}", p.n);
            }
        }
    }
    Ok(format!("{summands} summands over {} categories, n ≤ 6", supported_list().len()))
}

/// Paths of length n from 0 on the sl2 level-k fusion graph, squared and summed.
fn a1_centralizer(k: usize, n: usize) -> u64 {
    let mut m = vec![0u64; k + 1];
    m[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; k + 1];
        for (a, &x) in m.iter().enumerate() {
            if a > 0 {
                next[a - 1] += x;
            }
            if a < k {
                next[a + 1] += x;
            }
        }
        m = next;
    }
    m.iter().map(|x| x * x).sum()
}

fn criterion_4() -> Outcome {
    let mut towers = 0;
    for k in 2..=4 {
        let c = cat(LieType::A, 1, k);
        for e in duality_report(&c, 6).map_err(|e| e.to_string())? {
            ensure!(e.centralizer_dim == a1_centralizer(k as usize, e.n), "A1 k={k} n={}: centralizer {}", e.n, e.centralizer_dim);
            ensure!(e.braid_image_dim == e.centralizer_dim, "A1 k={k} n={}: image {} vs {}", e.n, e.braid_image_dim, e.centralizer_dim);
            towers += 1;
        }
    }
    let mut pairs = 0;
    for (t, n, k) in supported_list() {
        for p in pair_duality(&cat(t, n, k)).map_err(|e| e.to_string())? {
            ensure!(!p.distinct_eigenvalues || p.duality, "{t}{n} k={k}: V={} distinct eigenvalues but image {}", p.v, p.image_dim);
            pairs += 1;
        }
    }
    Ok(format!("{towers} towers equal; {pairs} pair-level checks"))
}

fn criterion_5() -> Outcome {
    let mut pairs = 0;
    for (t, n, k) in supported_list() {
        let c = cat(t, n, k);
        for lambda in &c.weights {
            for pb in pair_braidings(&c, lambda).map_err(|e| format!("{t}{n} k={k} λ={lambda}: {e}"))? {
                let cb = coboundary(&pb);
                ensure!(cb.is_involutive(), "{t}{n} k={k} λ={lambda}: Rbar not involutive");
                ensure!(cb.is_unitary(), "{t}{n} k={k} λ={lambda}: Rbar not unimodular");
                for (_, x) in &cb.rbar_blocks {
                    let z = x.to_complex64();
                    ensure!((z.norm() - 1.0).abs() < 1e-12, "{t}{n} k={k} λ={lambda}: |Rbar| = {}", z.norm());
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs (V_λ, V)"))
}

fn criterion_6() -> Outcome {
    let mut instances = 0;
    for k in 1..=4u8 {
        let t = SixJTable::q_racah(k).map_err(|e| e.to_string())?;
        let mut reports = vec![pentagon_suite(&t)];
        reports.extend(hexagon_suite(&t));
        for r in &reports {
            ensure!(r.passed(), "k={k} {}: {} violations, first {:?}", r.family, r.violations, r.first_counterexample);
            instances += r.instances;
        }
        let nc = negative_controls(&t, 100, 1000 + k as u64);
        ensure!(nc.detected == 100, "k={k}: negative controls detected {}/100, missed {:?}", nc.detected, nc.first_undetected);
    }
    for k in 1..=3u8 {
        let r = brute_force_pentagon(k).map_err(|e| e.to_string())?;
        ensure!(r.matches_q_racah, "k={k}: brute-force oracle does not reproduce q-Racah: {r:?}");
    }
    Ok(format!("{instances} pentagon/hexagon instances; oracle matches k ≤ 3; 400/400 controls"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 1..=3u8 {
        let w = build_aw(k).map_err(|e| e.to_string())?;
        let r = w.check().map_err(|e| e.to_string())?;
        ensure!(r.fg_violations == 0, "k={k}: F∘G ≠ id in {} places", r.fg_violations);
        for b in &r.delta_one {
            let predicted: usize =
                (0..=k).filter(|&nu| a1_fusion(k as i64, b.lambda as i64, b.mu as i64, nu as i64) == 1).map(|nu| nu as usize + 1).sum();
            ensure!(b.rank == predicted && b.idempotent, "k={k}: Δ(1) on ({},{}) has rank {}, expected {predicted}", b.lambda, b.mu, b.rank);
        }
        ensure!(r.delta_one.iter().any(|b| b.rank < b.size), "k={k}: Δ(1) is unital");
        ensure!(r.coassociativity_violations == 0, "k={k}: weak coassociativity fails {} times", r.coassociativity_violations);
        ensure!(r.counit_violations == 0, "k={k}: counit");
        ensure!(r.quasi_cocommutativity_violations == 0, "k={k}: R Δ ≠ Δ^op R");
        ensure!(r.hexagon_violations == 0, "k={k}: quasi-hexagons fail {} times", r.hexagon_violations);

        let j = random_gauge(k, &mut rng);
        let moved = apply_twist(&w, &j).map_err(|e| e.to_string())?;
        ensure!(moved.check().map_err(|e| e.to_string())?.passed(), "k={k}: twisted A_W fails its axioms");
        let back = apply_twist(&moved, &j.inverse().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(back == w, "k={k}: J then J^-1 does not restore A_W");

        let c = cat(LieType::A, 1, k as i64);
        let s = c.s_matrix().map_err(|e| e.to_string())?;
        let base = GaugeInvariants::of(&w.table).map_err(|e| e.to_string())?;
        ensure!(base.twists.as_slice() == c.twists(), "k={k}: T from R-symbols differs from the category");
        ensure!(base.s == s, "k={k}: S from R-symbols differs from the category");
        for trial in 0..100 {
            let moved = w.table.twisted(&random_gauge(k, &mut rng)).map_err(|e| e.to_string())?;
            let inv = GaugeInvariants::of(&moved).map_err(|e| e.to_string())?;
            ensure!(inv.fusion == base.fusion, "k={k} trial {trial}: fusion support moved");
            ensure!(inv.twists == base.twists, "k={k} trial {trial}: T moved");
            ensure!(inv.s == base.s, "k={k} trial {trial}: S moved");
        }
    }
    Ok("k ≤ 3: all weak axioms exact; round trip bit-exact; 300 random twists".into())
}

fn criterion_8() -> Outcome {
    for k in 1..=3u8 {
        let t = SixJTable::q_racah(k).map_err(|e| e.to_string())?;
        let r = rederive_from_special(&t).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "k={k}: {r:?}");
        ensure!(r.gauge_equivalent, "k={k}: re-derived table not gauge equivalent");
    }
    Ok("k ≤ 3 re-derived up to gauge".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("alcove/fusion exactness", Duration::from_secs(60), criterion_1),
        ("modularity", Duration::from_secs(10), criterion_2),
        ("truncation rule", Duration::from_secs(60), criterion_3),
        ("braid duality", Duration::from_secs(300), criterion_4),
        ("coboundary", Duration::from_secs(60), criterion_5),
        ("pentagon/hexagon suites", Duration::from_secs(300), criterion_6),
        ("weak quasi-bialgebra", Duration::from_secs(300), criterion_7),
        ("uniqueness", Duration::from_secs(300), criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = t0.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *limit => Err(format!("took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {} ({name}): {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

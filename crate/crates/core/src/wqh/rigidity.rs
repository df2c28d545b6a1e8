//! Gauge rigidity: random vertex rescalings leave the axioms and every
//! gauge invariant untouched, while perturbing a single F-symbol breaks the
//! pentagon.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::sixj::{admissible, triples, FKey, QRacah, SixJTable, TwistData};
use super::suites::{hexagon_equations, pentagon_equations, run_family, table_lookup, Sym};
use super::WqhError;
use crate::exact::Scalar;
use crate::{CycloMatrix, CycloNumber};

/// Quantities that no vertex rescaling can change.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeInvariants {
    /// Admissible triples carrying a nonzero R-symbol.
    pub fusion: Vec<[u8; 3]>,
    /// `θ_a = d_a^{-1} Σ_c d_c R^{aa}_c`.
    pub twists: Vec<CycloNumber>,
    /// `s_{ab} = (θ_a θ_b)^{-1} Σ_c N_{ab}^c d_c θ_c`.
    pub s: CycloMatrix,
    /// `d_a F^{aaa}_a[0,0]`.
    pub frobenius_schur: Vec<CycloNumber>,
    /// `F^{abc}_d[e,f] (F^{abc}_d)^{-1}[f,e]` per F-symbol.
    pub f_ratios: BTreeMap<FKey, CycloNumber>,
    /// `R^{ab}_c R^{ba}_c`.
    pub monodromy: BTreeMap<[u8; 3], CycloNumber>,
}

impl GaugeInvariants {
    /// Invariants of a table whose unit vertices are normalized to 1.
    pub fn of(table: &SixJTable) -> Result<Self, WqhError> {
        let k = table.level;
        let qr = QRacah::new(k);
        let d: Vec<CycloNumber> = (0..=k as usize).map(|a| qr.qint(a + 1).clone()).collect();
        let fusion: Vec<[u8; 3]> = table.r.iter().filter(|(_, v)| !v.is_zero()).map(|(t, _)| *t).collect();
        let mut twists = Vec::new();
        for a in 0..=k {
            let mut acc = CycloNumber::zero();
            for c in (0..=k).filter(|&c| admissible(k, a, a, c)) {
                acc.add_product(&d[c as usize], table.r(a, a, c));
            }
            twists.push(&acc * &d[a as usize].inv()?);
        }
        let n = k as usize + 1;
        let mut s = CycloMatrix::zeros(n, n);
        for a in 0..=k {
            for b in 0..=k {
                let mut acc = CycloNumber::zero();
                for c in (0..=k).filter(|&c| admissible(k, a, b, c)) {
                    acc.add_product(&d[c as usize], &twists[c as usize]);
                }
                let tab = (&twists[a as usize] * &twists[b as usize]).inv()?;
                s[(a as usize, b as usize)] = &acc * &tab;
            }
        }
        let frobenius_schur =
            (0..=k).map(|a| &d[a as usize] * table.f(&[a, a, a, a, 0, 0])).collect();
        let mut f_ratios = BTreeMap::new();
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    for dd in 0..=k {
                        let es = table.left_channels(a, b, c, dd);
                        if es.is_empty() {
                            continue;
                        }
                        let fs = table.right_channels(a, b, c, dd);
                        let m = table.f_matrix(a, b, c, dd);
                        let inv = m.inverse().ok_or(WqhError::Inconsistent(format!("singular F^{a}{b}{c}_{dd}")))?;
                        for (i, &e) in es.iter().enumerate() {
                            for (j, &f) in fs.iter().enumerate() {
                                f_ratios.insert([a, b, c, dd, e, f], &m[(i, j)] * &inv[(j, i)]);
                            }
                        }
                    }
                }
            }
        }
        let monodromy = table
            .r
            .iter()
            .map(|([a, b, c], x)| ([*a, *b, *c], x * table.r(*b, *a, *c)))
            .collect();
        Ok(Self { fusion, twists, s, frobenius_schur, f_ratios, monodromy })
    }
}

/// Random vertex scalars `ζ^r·p/q` on every non-unit vertex, where `ζ` is a
/// root of unity of the table's order and `1 ≤ p, q ≤ 4`.
pub fn random_gauge(level: u8, rng: &mut impl Rng) -> TwistData {
    let order = QRacah::new(level).order;
    let mut j = BTreeMap::new();
    for t in triples(level) {
        if t[0] == 0 || t[1] == 0 {
            continue;
        }
        let root = CycloNumber::embed_root_of_unity(order, rng.gen_range(0..order as i64));
        let p: i64 = rng.gen_range(1..=4);
        let q: i64 = rng.gen_range(1..=4);
        j.insert(t, &root * &CycloNumber::from_ratio(p, q));
    }
    TwistData { j }
}

#[derive(Debug, Clone, Serialize)]
pub struct NegativeControlReport {
    pub level: u8,
    pub trials: usize,
    /// Trials whose perturbed table violates at least one pentagon.
    pub detected: usize,
    pub first_undetected: Option<FKey>,
}

impl NegativeControlReport {
    pub fn passed(&self) -> bool {
        self.detected == self.trials
    }
}

/// Moves one uniformly chosen F-symbol `x` to `x(1 + δ)`, or to `δ` when
/// `x = 0`, with `δ = ζ_8/1000`, and checks the pentagon equations that
/// mention it. Some symbols vanish (`F^{222}_2[2,2]` at level 4), so a purely
/// multiplicative change would leave the table untouched.
pub fn negative_controls(table: &SixJTable, trials: usize, seed: u64) -> NegativeControlReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keys: Vec<FKey> = table.f.keys().copied().collect();
    let eqs = pentagon_equations(table.level);
    let delta = &CycloNumber::embed_root_of_unity(8, 1) * &CycloNumber::from_ratio(1, 1000);
    let factor = &CycloNumber::one() + &delta;
    let mut detected = 0;
    let mut first_undetected = None;
    for _ in 0..trials {
        let key = keys[rng.gen_range(0..keys.len())];
        let mut t = table.clone();
        let x = if t.f[&key].is_zero() { delta.clone() } else { &t.f[&key] * &factor };
        t.f.insert(key, x);
        let val = table_lookup(&t);
        let hit = eqs
            .iter()
            .filter(|eq| eq.symbols().any(|s| *s == Sym::F(key)))
            .any(|eq| !eq.residual(&val).is_some_and(|r| r.is_zero()));
        if hit {
            detected += 1;
        } else {
            first_undetected.get_or_insert(key);
        }
    }
    NegativeControlReport { level: table.level, trials, detected, first_undetected }
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub level: u8,
    pub trials: usize,
    /// Random gauges whose image satisfies every pentagon and hexagon.
    pub axioms_preserved: usize,
    /// Random gauges whose image has the same invariants.
    pub invariants_preserved: usize,
    pub negative_controls: NegativeControlReport,
}

impl RigidityReport {
    pub fn passed(&self) -> bool {
        self.axioms_preserved == self.trials
            && self.invariants_preserved == self.trials
            && self.negative_controls.passed()
    }
}

/// Random gauges on one side, single-symbol perturbations on the other.
pub fn gauge_rigidity_experiment(table: &SixJTable, trials: usize, seed: u64) -> Result<RigidityReport, WqhError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = GaugeInvariants::of(table)?;
    let pent = pentagon_equations(table.level);
    let (h1, h2) = hexagon_equations(table.level);
    let mut axioms_preserved = 0;
    let mut invariants_preserved = 0;
    for _ in 0..trials {
        let moved = table.twisted(&random_gauge(table.level, &mut rng))?;
        let ok = [("pentagon", &pent), ("hexagon", &h1), ("inverse hexagon", &h2)]
            .iter()
            .all(|(name, eqs)| run_family(name, eqs, &moved).passed());
        if ok {
            axioms_preserved += 1;
        }
        if GaugeInvariants::of(&moved)? == base {
            invariants_preserved += 1;
        }
    }
    Ok(RigidityReport {
        level: table.level,
        trials,
        axioms_preserved,
        invariants_preserved,
        negative_controls: negative_controls(table, trials, seed.wrapping_add(1)),
    })
}

//! Pentagon and hexagon equations as explicit sums of monomials.
//!
//! Pentagon:
//! `F^{fcd}_e[g,l] F^{abl}_e[f,k] = Σ_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]`.
//!
//! Hexagons:
//! `R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = Σ_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]`
//! and the same with every `R^{xy}_z` replaced by `(R^{yx}_z)^{-1}`.

use num_traits::Zero;
use serde::Serialize;

use super::sixj::{admissible, FKey, QRacah, SixJTable, Triple};
use super::WqhError;
use crate::exact::Scalar;
use crate::{CycloMatrix, CycloNumber};

/// One factor of a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    F(FKey),
    R(Triple),
    RInv(Triple),
}

/// `Π lhs = Σ_i Π rhs[i]`.
#[derive(Debug, Clone)]
pub struct Equation {
    pub tag: String,
    pub lhs: Vec<Sym>,
    pub rhs: Vec<Vec<Sym>>,
}

impl Equation {
    /// `Π lhs - Σ Π rhs`, or `None` if some symbol is unknown.
    pub fn residual(&self, val: &impl Fn(&Sym) -> Option<CycloNumber>) -> Option<CycloNumber> {
        let prod = |m: &[Sym]| -> Option<CycloNumber> {
            let mut it = m.iter();
            let mut acc = val(it.next()?)?;
            for s in it {
                acc = &acc * &val(s)?;
            }
            Some(acc)
        };
        let mut r = prod(&self.lhs)?;
        for m in &self.rhs {
            r.sub_assign_ref(&prod(m)?);
        }
        Some(r)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Sym> {
        self.lhs.iter().chain(self.rhs.iter().flatten())
    }
}

pub fn pentagon_equations(k: u8) -> Vec<Equation> {
    let ad = |x, y, z| admissible(k, x, y, z);
    let labels = 0..=k;
    let mut out = Vec::new();
    for a in labels.clone() {
        for b in labels.clone() {
            for f in labels.clone().filter(|&f| ad(a, b, f)) {
                for c in labels.clone() {
                    for g in labels.clone().filter(|&g| ad(f, c, g)) {
                        for d in labels.clone() {
                            for e in labels.clone().filter(|&e| ad(g, d, e)) {
                                for l in labels.clone().filter(|&l| ad(c, d, l) && ad(f, l, e)) {
                                    for kk in labels.clone().filter(|&kk| ad(b, l, kk) && ad(a, kk, e)) {
                                        let rhs = labels
                                            .clone()
                                            .filter(|&h| ad(b, c, h) && ad(a, h, g) && ad(h, d, kk))
                                            .map(|h| {
                                                vec![
                                                    Sym::F([a, b, c, g, f, h]),
                                                    Sym::F([a, h, d, e, g, kk]),
                                                    Sym::F([b, c, d, kk, h, l]),
                                                ]
                                            })
                                            .collect();
                                        out.push(Equation {
                                            tag: format!("pentagon a={a} b={b} c={c} d={d} e={e} f={f} g={g} k={kk} l={l}"),
                                            lhs: vec![Sym::F([f, c, d, e, g, l]), Sym::F([a, b, l, e, f, kk])],
                                            rhs,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Both hexagon families; the second uses inverse R-symbols.
pub fn hexagon_equations(k: u8) -> (Vec<Equation>, Vec<Equation>) {
    let ad = |x, y, z| admissible(k, x, y, z);
    let labels = 0..=k;
    let (mut h1, mut h2) = (Vec::new(), Vec::new());
    for a in labels.clone() {
        for b in labels.clone() {
            for c in labels.clone() {
                for d in labels.clone() {
                    for e in labels.clone().filter(|&e| ad(a, c, e) && ad(e, b, d)) {
                        for g in labels.clone().filter(|&g| ad(c, b, g) && ad(a, g, d)) {
                            let fs: Vec<u8> =
                                labels.clone().filter(|&f| ad(a, b, f) && ad(c, f, d)).collect();
                            let tag = format!("a={a} b={b} c={c} d={d} e={e} g={g}");
                            h1.push(Equation {
                                tag: format!("hexagon {tag}"),
                                lhs: vec![Sym::R([c, a, e]), Sym::F([a, c, b, d, e, g]), Sym::R([c, b, g])],
                                rhs: fs
                                    .iter()
                                    .map(|&f| {
                                        vec![Sym::F([c, a, b, d, e, f]), Sym::R([c, f, d]), Sym::F([a, b, c, d, f, g])]
                                    })
                                    .collect(),
                            });
                            h2.push(Equation {
                                tag: format!("inverse hexagon {tag}"),
                                lhs: vec![Sym::RInv([a, c, e]), Sym::F([a, c, b, d, e, g]), Sym::RInv([b, c, g])],
                                rhs: fs
                                    .iter()
                                    .map(|&f| {
                                        vec![
                                            Sym::F([c, a, b, d, e, f]),
                                            Sym::RInv([f, c, d]),
                                            Sym::F([a, b, c, d, f, g]),
                                        ]
                                    })
                                    .collect(),
                            });
                        }
                    }
                }
            }
        }
    }
    (h1, h2)
}

/// Pass/fail counts for one family of equations.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub family: String,
    pub instances: usize,
    pub violations: usize,
    pub first_counterexample: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Every axiom family checked on one table.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomSummary {
    pub level: u8,
    pub reports: Vec<AxiomReport>,
}

impl AxiomSummary {
    pub fn new(table: &SixJTable) -> Self {
        let mut reports = vec![pentagon_suite(table)];
        reports.extend(hexagon_suite(table));
        Self { level: table.level, reports }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(AxiomReport::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub(crate) fn table_lookup(table: &SixJTable) -> impl Fn(&Sym) -> Option<CycloNumber> + '_ {
    move |s| match s {
        Sym::F(k) => table.f.get(k).cloned(),
        Sym::R(t) => table.r.get(t).cloned(),
        Sym::RInv(t) => table.r.get(t).and_then(|x| x.inv().ok()),
    }
}

pub(crate) fn run_family(family: &str, eqs: &[Equation], table: &SixJTable) -> AxiomReport {
    let val = table_lookup(table);
    let mut violations = 0;
    let mut first = None;
    for eq in eqs {
        let ok = eq.residual(&val).is_some_and(|r| r.is_zero());
        if !ok {
            violations += 1;
            first.get_or_insert_with(|| eq.tag.clone());
        }
    }
    AxiomReport { family: family.to_string(), instances: eqs.len(), violations, first_counterexample: first }
}

pub fn pentagon_suite(table: &SixJTable) -> AxiomReport {
    run_family("pentagon", &pentagon_equations(table.level), table)
}

pub fn hexagon_suite(table: &SixJTable) -> Vec<AxiomReport> {
    let (h1, h2) = hexagon_equations(table.level);
    vec![run_family("hexagon", &h1, table), run_family("inverse hexagon", &h2, table)]
}

/// Weights `W_e = 1 / (Δ²(a,b,e)[e+1] Δ²(e,c,d)[d+1])` on left channels and
/// the analogous `W_f` on right channels.
fn block_weights(qr: &QRacah, t: &SixJTable, [a, b, c, d]: [u8; 4]) -> Result<(CycloMatrix, CycloMatrix), WqhError> {
    let we = t
        .left_channels(a, b, c, d)
        .into_iter()
        .map(|e| Ok((&qr.vertex_weight_inv(a, b, e)? * &qr.vertex_weight_inv(e, c, d)?).inv()?))
        .collect::<Result<Vec<_>, WqhError>>()?;
    let wf = t
        .right_channels(a, b, c, d)
        .into_iter()
        .map(|f| Ok((&qr.vertex_weight_inv(b, c, f)? * &qr.vertex_weight_inv(a, f, d)?).inv()?))
        .collect::<Result<Vec<_>, WqhError>>()?;
    Ok((CycloMatrix::diagonal(we), CycloMatrix::diagonal(wf)))
}

fn blocks(k: u8) -> impl Iterator<Item = [u8; 4]> {
    (0..=k).flat_map(move |a| {
        (0..=k).flat_map(move |b| (0..=k).flat_map(move |c| (0..=k).map(move |d| [a, b, c, d])))
    })
}

/// Number of blocks `F^{abc}_d` violating `F W_f F* = W_e`, the form unitarity
/// takes in the square-root-free vertex gauge.
pub fn weighted_unitarity_violations(table: &SixJTable) -> Result<usize, WqhError> {
    let qr = QRacah::new(table.level);
    let mut bad = 0;
    for [a, b, c, d] in blocks(table.level) {
        let f = table.f_matrix(a, b, c, d);
        if f.rows() == 0 {
            continue;
        }
        let (we, wf) = block_weights(&qr, table, [a, b, c, d])?;
        if &(&f * &wf) * &f.conj_transpose() != we {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Largest deviation of `U U*` from the identity over all blocks, where
/// `U = W_e^{-1/2} F W_f^{1/2}` is rebuilt in floating point.
pub fn unitarity_float_check(table: &SixJTable) -> Result<f64, WqhError> {
    let qr = QRacah::new(table.level);
    let mut worst = 0.0f64;
    for [a, b, c, d] in blocks(table.level) {
        let f = table.f_matrix(a, b, c, d);
        let n = f.rows();
        if n == 0 {
            continue;
        }
        let (we, wf) = block_weights(&qr, table, [a, b, c, d])?;
        let sq = |x: &CycloNumber| x.to_complex64().re.sqrt();
        let u: Vec<Vec<num_complex::Complex64>> = (0..n)
            .map(|i| (0..n).map(|j| f[(i, j)].to_complex64() * sq(&wf[(j, j)]) / sq(&we[(i, i)])).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let dot: num_complex::Complex64 = (0..n).map(|m| u[i][m] * u[j][m].conj()).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
    }
    Ok(worst)
}

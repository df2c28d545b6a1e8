//! The weak quasi-bialgebra `A_W = ⊕_λ End(W_λ)` for `A_1` at level k.
//!
//! `W_λ` is the space of binary forms of degree λ with basis
//! `x^{λ-i} y^i`. The classical transvectants split `W_λ ⊗ W_μ` into
//! `⊕_ν W_ν`; `F` keeps the channels allowed at level k and `G` embeds them
//! back, so `F ∘ G = id` while `G ∘ F = Δ(1)` is a proper idempotent.
//! `Φ` and `R` transport the F- and R-symbols through these maps.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::sixj::{admissible, SixJTable, TwistData};
use super::WqhError;
use crate::exact::{Matrix, Scalar};
use crate::{CycloMatrix, CycloNumber};

/// Highest level for which `A_W` is built; block sizes grow as `(k+1)^3`.
pub const MAX_AW_LEVEL: u8 = 4;

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `A! / (A - p)!`, zero when `p > A`.
fn falling(a: i64, p: i64) -> i64 {
    if p > a {
        0
    } else {
        (0..p).map(|i| a - i).product()
    }
}

/// The r-th transvectant `W_λ ⊗ W_μ → W_{λ+μ-2r}`,
/// `(f, g)_r = Σ_s (-1)^s C(r,s) ∂_x^{r-s}∂_y^s f · ∂_x^s ∂_y^{r-s} g`,
/// as a matrix on monomial bases; columns are indexed by `i(μ+1) + j`.
pub fn transvectant<T: Scalar>(lambda: usize, mu: usize, r: usize) -> Matrix<T> {
    assert!(r <= lambda.min(mu), "transvectant order exceeds degrees");
    let nu = lambda + mu - 2 * r;
    let (l, m, r) = (lambda as i64, mu as i64, r as i64);
    Matrix::from_fn(nu + 1, (lambda + 1) * (mu + 1), |row, col| {
        let (i, j) = ((col / (mu + 1)) as i64, (col % (mu + 1)) as i64);
        if i + j - r != row as i64 {
            return T::zero();
        }
        let mut acc = 0i64;
        for s in 0..=r {
            let df = falling(l - i, r - s) * falling(i, s);
            let dg = falling(m - j, s) * falling(j, r - s);
            let sign = if s % 2 == 0 { 1 } else { -1 };
            acc += sign * binomial(r, s) * df * dg;
        }
        T::from_i64(acc).expect("integer conversion")
    })
}

/// Channel maps of one pair `(λ, μ)`.
#[derive(Debug, Clone)]
struct PairMaps {
    channels: Vec<u8>,
    f: Vec<CycloMatrix>,
    g: Vec<CycloMatrix>,
}

/// Path-space maps of one triple `(λ, μ, σ)`.
#[derive(Debug, Clone)]
struct TripleMaps {
    /// `(e, d)` through `(λμ)σ`, and `(f, d)` through `λ(μσ)`.
    left: Vec<(u8, u8)>,
    right: Vec<(u8, u8)>,
    left_off: Vec<usize>,
    right_off: Vec<usize>,
    fl: CycloMatrix,
    gl: CycloMatrix,
    fr: CycloMatrix,
    gr: CycloMatrix,
}

/// Elements of `A^{⊗2}` and `A^{⊗3}`, stored blockwise.
pub type Pair = BTreeMap<(u8, u8), CycloMatrix>;
pub type Triple3 = BTreeMap<(u8, u8, u8), CycloMatrix>;

#[derive(Debug, Clone)]
pub struct WeakQuasiBialgebra {
    pub level: u8,
    pub table: SixJTable,
    pairs: BTreeMap<(u8, u8), PairMaps>,
    triples: BTreeMap<(u8, u8, u8), TripleMaps>,
    pub phi: Triple3,
    pub phi_bar: Triple3,
    pub r: Pair,
}

fn dim(x: u8) -> usize {
    x as usize + 1
}

fn vstack(blocks: &[CycloMatrix], cols: usize) -> CycloMatrix {
    let rows: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut out = CycloMatrix::zeros(rows, cols);
    let mut at = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..cols {
                out[(at + i, j)] = b[(i, j)].clone();
            }
        }
        at += b.rows();
    }
    out
}

fn hstack(blocks: &[CycloMatrix], rows: usize) -> CycloMatrix {
    vstack(&blocks.iter().map(|b| b.transpose()).collect::<Vec<_>>(), rows).transpose()
}

/// Permutation `u_1 ⊗ u_2 ⊗ u_3 ↦ u_{o_1} ⊗ u_{o_2} ⊗ u_{o_3}`.
fn leg_permutation(dims: [usize; 3], order: [usize; 3]) -> CycloMatrix {
    let n: usize = dims.iter().product();
    let nd = [dims[order[0]], dims[order[1]], dims[order[2]]];
    let mut p = CycloMatrix::zeros(n, n);
    for a in 0..dims[0] {
        for b in 0..dims[1] {
            for c in 0..dims[2] {
                let u = [a, b, c];
                let src = (a * dims[1] + b) * dims[2] + c;
                let dst = (u[order[0]] * nd[1] + u[order[1]]) * nd[2] + u[order[2]];
                p[(dst, src)] = CycloNumber::one();
            }
        }
    }
    p
}

/// `W_μ ⊗ W_λ → W_λ ⊗ W_μ`.
fn flip(lambda: u8, mu: u8) -> CycloMatrix {
    let (l, m) = (dim(lambda), dim(mu));
    let mut p = CycloMatrix::zeros(l * m, l * m);
    for i in 0..l {
        for j in 0..m {
            p[(i * m + j, j * l + i)] = CycloNumber::one();
        }
    }
    p
}

fn matrix_unit(n: usize, i: usize, j: usize) -> CycloMatrix {
    let mut e = CycloMatrix::zeros(n, n);
    e[(i, j)] = CycloNumber::one();
    e
}

impl WeakQuasiBialgebra {
    /// `A_W` carrying an arbitrary F/R table; axioms hold only if the table
    /// satisfies pentagon and hexagons.
    pub fn from_table(table: SixJTable) -> Result<Self, WqhError> {
        if table.level > MAX_AW_LEVEL {
            return Err(WqhError::LevelTooLarge { level: table.level, max: MAX_AW_LEVEL });
        }
        let pairs = Self::build_pairs(table.level)?;
        Self::assemble(table, pairs)
    }

    pub fn labels(&self) -> std::ops::RangeInclusive<u8> {
        0..=self.level
    }

    fn build_pairs(level: u8) -> Result<BTreeMap<(u8, u8), PairMaps>, WqhError> {
        let mut pairs = BTreeMap::new();
        for lambda in 0..=level {
            for mu in 0..=level {
                let n = dim(lambda) * dim(mu);
                let rows: Vec<CycloMatrix> = (0..=lambda.min(mu) as usize)
                    .map(|r| transvectant(lambda as usize, mu as usize, r))
                    .collect();
                let t = vstack(&rows, n);
                let t_inv = t.inverse().ok_or(WqhError::Inconsistent(format!("singular transvectants {lambda},{mu}")))?;
                let mut maps = PairMaps { channels: Vec::new(), f: Vec::new(), g: Vec::new() };
                let mut at = 0;
                for (r, block) in rows.iter().enumerate() {
                    let nu = lambda + mu - 2 * r as u8;
                    let idx: Vec<usize> = (at..at + block.rows()).collect();
                    at += block.rows();
                    if admissible(level, lambda, mu, nu) {
                        maps.channels.push(nu);
                        maps.f.push(block.clone());
                        maps.g.push(t_inv.submatrix(&(0..n).collect::<Vec<_>>(), &idx));
                    }
                }
                pairs.insert((lambda, mu), maps);
            }
        }
        Ok(pairs)
    }

    fn channel(&self, a: u8, b: u8, c: u8) -> Option<(&CycloMatrix, &CycloMatrix)> {
        let p = &self.pairs[&(a, b)];
        p.channels.iter().position(|&x| x == c).map(|i| (&p.f[i], &p.g[i]))
    }

    fn build_triple(&self, l: u8, m: u8, s: u8) -> TripleMaps {
        let (il, is) = (CycloMatrix::identity(dim(l)), CycloMatrix::identity(dim(s)));
        let n = dim(l) * dim(m) * dim(s);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let (mut fl, mut gl, mut fr, mut gr) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        let (mut left_off, mut right_off) = (Vec::new(), Vec::new());
        let (mut lo, mut ro) = (0, 0);
        for d in self.labels() {
            for e in self.labels() {
                let (Some((f1, g1)), Some((f2, g2))) = (self.channel(l, m, e), self.channel(e, s, d)) else {
                    continue;
                };
                left.push((e, d));
                left_off.push(lo);
                lo += dim(d);
                fl.push(f2 * &f1.kron(&is));
                gl.push(&g1.kron(&is) * g2);
            }
            for f in self.labels() {
                let (Some((f1, g1)), Some((f2, g2))) = (self.channel(m, s, f), self.channel(l, f, d)) else {
                    continue;
                };
                right.push((f, d));
                right_off.push(ro);
                ro += dim(d);
                fr.push(f2 * &il.kron(f1));
                gr.push(&il.kron(g1) * g2);
            }
        }
        TripleMaps {
            fl: vstack(&fl, n),
            gl: hstack(&gl, n),
            fr: vstack(&fr, n),
            gr: hstack(&gr, n),
            left,
            right,
            left_off,
            right_off,
        }
    }

    /// `M[(f,d),(e,d)] = F^{λμσ}_d[e,f]`, or its inverse when `inverse`.
    fn associator_paths(&self, t: &TripleMaps, (l, m, s): (u8, u8, u8), inverse: bool) -> Result<CycloMatrix, WqhError> {
        let pl: usize = t.left.iter().map(|&(_, d)| dim(d)).sum();
        let pr: usize = t.right.iter().map(|&(_, d)| dim(d)).sum();
        let mut out = if inverse { CycloMatrix::zeros(pl, pr) } else { CycloMatrix::zeros(pr, pl) };
        for d in self.labels() {
            let fm = self.table.f_matrix(l, m, s, d);
            if fm.rows() == 0 {
                continue;
            }
            let fm = if inverse {
                fm.inverse().ok_or(WqhError::Inconsistent(format!("singular F^{l}{m}{s}_{d}")))?
            } else {
                fm
            };
            let li: Vec<usize> = (0..t.left.len()).filter(|&i| t.left[i].1 == d).collect();
            let ri: Vec<usize> = (0..t.right.len()).filter(|&i| t.right[i].1 == d).collect();
            for (a, &x) in li.iter().enumerate() {
                for (b, &y) in ri.iter().enumerate() {
                    for u in 0..dim(d) {
                        if inverse {
                            // (F^{-1})[f, e] maps right coordinates back to left
                            out[(t.left_off[x] + u, t.right_off[y] + u)] = fm[(b, a)].clone();
                        } else {
                            out[(t.right_off[y] + u, t.left_off[x] + u)] = fm[(a, b)].clone();
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn assemble(table: SixJTable, pairs: BTreeMap<(u8, u8), PairMaps>) -> Result<Self, WqhError> {
        let level = table.level;
        let mut w = Self {
            level,
            table,
            pairs,
            triples: BTreeMap::new(),
            phi: BTreeMap::new(),
            phi_bar: BTreeMap::new(),
            r: BTreeMap::new(),
        };
        for l in 0..=level {
            for m in 0..=level {
                for s in 0..=level {
                    let t = w.build_triple(l, m, s);
                    let mm = w.associator_paths(&t, (l, m, s), false)?;
                    let mi = w.associator_paths(&t, (l, m, s), true)?;
                    w.phi.insert((l, m, s), &(&t.gr * &mm) * &t.fl);
                    w.phi_bar.insert((l, m, s), &(&t.gl * &mi) * &t.fr);
                    w.triples.insert((l, m, s), t);
                }
            }
        }
        for l in 0..=level {
            for m in 0..=level {
                let n = dim(l) * dim(m);
                let mut c = CycloMatrix::zeros(n, n);
                for (i, &nu) in w.pairs[&(l, m)].channels.iter().enumerate() {
                    let (_, g) = w.channel(m, l, nu).expect("fusion is commutative");
                    let x = &(g * &w.pairs[&(l, m)].f[i]).scale(w.table.r(l, m, nu));
                    c = &c + x;
                }
                w.r.insert((l, m), &flip(l, m) * &c);
            }
        }
        Ok(w)
    }

    /// `Δ(a) = ⊕_{λ,μ} Σ_ν G^ν a_ν F^ν`.
    pub fn delta(&self, a: &[CycloMatrix]) -> Pair {
        let mut out = BTreeMap::new();
        for ((l, m), p) in &self.pairs {
            let n = dim(*l) * dim(*m);
            let mut x = CycloMatrix::zeros(n, n);
            for (i, &nu) in p.channels.iter().enumerate() {
                let b = &a[nu as usize];
                if b.is_zero() {
                    continue;
                }
                x = &x + &(&(&p.g[i] * b) * &p.f[i]);
            }
            out.insert((*l, *m), x);
        }
        out
    }

    pub fn unit(&self) -> Vec<CycloMatrix> {
        self.labels().map(|x| CycloMatrix::identity(dim(x))).collect()
    }

    /// Matrix unit `E_ij` in block τ.
    pub fn basis_element(&self, tau: u8, i: usize, j: usize) -> Vec<CycloMatrix> {
        self.labels()
            .map(|x| if x == tau { matrix_unit(dim(x), i, j) } else { CycloMatrix::zeros(dim(x), dim(x)) })
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.labels().map(|x| dim(x) * dim(x)).sum()
    }

    pub fn check(&self) -> Result<WeakAxiomReport, WqhError> {
        Ok(WeakAxiomReport {
            level: self.level,
            dimension: self.dimension(),
            fg_violations: self.fg_violations(),
            delta_one: self.delta_one_blocks(),
            coassociativity_violations: self.coassociativity_violations(),
            counit_violations: self.counit_violations(),
            quasi_cocommutativity_violations: self.quasi_cocommutativity_violations(),
            hexagon_violations: self.hexagon_violations(),
        })
    }

    fn fg_violations(&self) -> usize {
        let mut bad = 0;
        for p in self.pairs.values() {
            for (i, f) in p.f.iter().enumerate() {
                for (j, g) in p.g.iter().enumerate() {
                    let prod = f * g;
                    let ok = if i == j { prod.is_identity() } else { prod.is_zero() };
                    if !ok {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    fn delta_one_blocks(&self) -> Vec<DeltaOneBlock> {
        let d1 = self.delta(&self.unit());
        d1.iter()
            .map(|(&(l, m), p)| {
                let predicted: usize = self.pairs[&(l, m)].channels.iter().map(|&nu| dim(nu)).sum();
                DeltaOneBlock {
                    lambda: l,
                    mu: m,
                    size: p.rows(),
                    rank: p.rank(),
                    predicted_rank: predicted,
                    idempotent: &(p * p) == p,
                }
            })
            .collect()
    }

    /// `Φ (Δ⊗id)Δ(a) = (id⊗Δ)Δ(a) Φ` on every matrix unit `a`, with both
    /// sides expanded as sums of outer products over paths.
    fn coassociativity_violations(&self) -> usize {
        let mut bad = 0;
        for (key, t) in &self.triples {
            let n = t.fl.cols();
            let phi = &self.phi[key];
            let phi_gl = phi * &t.gl;
            let fr_phi = &t.fr * phi;
            for tau in self.labels() {
                let lp: Vec<usize> = (0..t.left.len()).filter(|&i| t.left[i].1 == tau).collect();
                let rp: Vec<usize> = (0..t.right.len()).filter(|&i| t.right[i].1 == tau).collect();
                if lp.is_empty() && rp.is_empty() {
                    continue;
                }
                for i in 0..dim(tau) {
                    for j in 0..dim(tau) {
                        let mut lhs = CycloMatrix::zeros(n, n);
                        for &p in &lp {
                            outer_add(&mut lhs, &phi_gl, t.left_off[p] + i, &t.fl, t.left_off[p] + j);
                        }
                        let mut rhs = CycloMatrix::zeros(n, n);
                        for &p in &rp {
                            outer_add(&mut rhs, &t.gr, t.right_off[p] + i, &fr_phi, t.right_off[p] + j);
                        }
                        if lhs != rhs {
                            bad += 1;
                        }
                    }
                }
            }
        }
        bad
    }

    /// `(ε⊗id)Δ = id = (id⊗ε)Δ` on matrix units, with `ε` the projection on
    /// the block of the unit object, and `Φ` reducing to `Δ(1)` when any leg
    /// is the unit object.
    fn counit_violations(&self) -> usize {
        let mut bad = 0;
        for tau in self.labels() {
            for i in 0..dim(tau) {
                for j in 0..dim(tau) {
                    let a = self.basis_element(tau, i, j);
                    let d = self.delta(&a);
                    for x in self.labels() {
                        if d[&(0, x)] != a[x as usize] || d[&(x, 0)] != a[x as usize] {
                            bad += 1;
                        }
                    }
                }
            }
        }
        let d1 = self.delta(&self.unit());
        for a in self.labels() {
            for b in self.labels() {
                let target = &d1[&(a, b)];
                if self.phi[&(0, a, b)] != *target || self.phi[&(a, 0, b)] != *target || self.phi[&(a, b, 0)] != *target {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// `R Δ(a) = Δ^{op}(a) R` on every matrix unit, blockwise.
    fn quasi_cocommutativity_violations(&self) -> usize {
        let mut bad = 0;
        for tau in self.labels() {
            for i in 0..dim(tau) {
                for j in 0..dim(tau) {
                    let d = self.delta(&self.basis_element(tau, i, j));
                    for (&(l, m), r) in &self.r {
                        let p = flip(l, m);
                        let op = &(&p * &d[&(m, l)]) * &p.transpose();
                        if &(r * &d[&(l, m)]) != &(&op * r) {
                            bad += 1;
                        }
                    }
                }
            }
        }
        bad
    }

    fn on_legs(&self, x: &CycloMatrix, dims: [usize; 3], order: [usize; 3]) -> CycloMatrix {
        let q = leg_permutation(dims, order);
        &(&q.transpose() * x) * &q
    }

    /// Both quasi-hexagon identities on every triple block:
    /// `(Δ⊗id)(R) = Φ_{312} R_{13} Φ_{132}^{-1} R_{23} Φ` and
    /// `(id⊗Δ)(R) = Φ_{231}^{-1} R_{13} Φ_{213} R_{12} Φ^{-1}`.
    fn hexagon_violations(&self) -> usize {
        let mut bad = 0;
        for &(a1, a2, a3) in self.triples.keys() {
            let dims = [dim(a1), dim(a2), dim(a3)];
            let lab = [a1, a2, a3];
            let phi_at = |o: [usize; 3], inv: bool| {
                let key = (lab[o[0]], lab[o[1]], lab[o[2]]);
                let x = if inv { &self.phi_bar[&key] } else { &self.phi[&key] };
                self.on_legs(x, dims, o)
            };
            let id = |x: u8| CycloMatrix::identity(dim(x));
            let r12 = self.r[&(a1, a2)].kron(&id(a3));
            let r23 = id(a1).kron(&self.r[&(a2, a3)]);
            let r13 = self.on_legs(&self.r[&(a1, a3)].kron(&id(a2)), dims, [0, 2, 1]);

            let mut lhs1 = CycloMatrix::zeros(r12.rows(), r12.cols());
            for (i, &e) in self.pairs[&(a1, a2)].channels.iter().enumerate() {
                let p = &self.pairs[&(a1, a2)];
                let term = &(&p.g[i].kron(&id(a3)) * &self.r[&(e, a3)]) * &p.f[i].kron(&id(a3));
                lhs1 = &lhs1 + &term;
            }
            let rhs1 = &(&(&(&phi_at([2, 0, 1], false) * &r13) * &phi_at([0, 2, 1], true)) * &r23) * &self.phi[&(a1, a2, a3)];
            if lhs1 != rhs1 {
                bad += 1;
            }

            let mut lhs2 = CycloMatrix::zeros(r12.rows(), r12.cols());
            for (i, &f) in self.pairs[&(a2, a3)].channels.iter().enumerate() {
                let p = &self.pairs[&(a2, a3)];
                let term = &(&id(a1).kron(&p.g[i]) * &self.r[&(a1, f)]) * &id(a1).kron(&p.f[i]);
                lhs2 = &lhs2 + &term;
            }
            let rhs2 = &(&(&(&phi_at([1, 2, 0], true) * &r13) * &phi_at([1, 0, 2], false)) * &r12) * &self.phi_bar[&(a1, a2, a3)];
            if lhs2 != rhs2 {
                bad += 1;
            }
        }
        bad
    }

    pub fn r_block(&self, l: u8, m: u8) -> &CycloMatrix {
        &self.r[&(l, m)]
    }

    /// `J = ⊕ Σ_ν j(λ,μ;ν) G^ν F^ν` as an element of `A ⊗ A`.
    pub fn twist_element(&self, tw: &TwistData) -> Pair {
        self.pairs
            .iter()
            .map(|(&(l, m), p)| {
                let n = dim(l) * dim(m);
                let mut x = CycloMatrix::zeros(n, n);
                for (i, &nu) in p.channels.iter().enumerate() {
                    x = &x + &(&p.g[i] * &p.f[i]).scale(&tw.get(&[l, m, nu]));
                }
                ((l, m), x)
            })
            .collect()
    }
}

/// `acc += x[:, col] ⊗ y[row, :]`.
fn outer_add(acc: &mut CycloMatrix, x: &CycloMatrix, col: usize, y: &CycloMatrix, row: usize) {
    for i in 0..x.rows() {
        let a = &x[(i, col)];
        if a.is_zero() {
            continue;
        }
        for j in 0..y.cols() {
            let b = &y[(row, j)];
            if !b.is_zero() {
                acc[(i, j)].add_product(a, b);
            }
        }
    }
}

/// Rank of `Δ(1)` on one pair block.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DeltaOneBlock {
    pub lambda: u8,
    pub mu: u8,
    pub size: usize,
    pub rank: usize,
    pub predicted_rank: usize,
    pub idempotent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeakAxiomReport {
    pub level: u8,
    pub dimension: usize,
    pub fg_violations: usize,
    pub delta_one: Vec<DeltaOneBlock>,
    pub coassociativity_violations: usize,
    pub counit_violations: usize,
    pub quasi_cocommutativity_violations: usize,
    pub hexagon_violations: usize,
}

impl WeakAxiomReport {
    pub fn delta_one_ok(&self) -> bool {
        self.delta_one.iter().all(|b| b.idempotent && b.rank == b.predicted_rank)
            && self.delta_one.iter().any(|b| b.rank < b.size)
    }

    pub fn passed(&self) -> bool {
        self.fg_violations == 0
            && self.delta_one_ok()
            && self.coassociativity_violations == 0
            && self.counit_violations == 0
            && self.quasi_cocommutativity_violations == 0
            && self.hexagon_violations == 0
    }
}

/// Builds `A_W` for `A_1` at level `k ≤ 4` from the q-Racah table.
pub fn build_aw(level: u8) -> Result<WeakQuasiBialgebra, WqhError> {
    if level > MAX_AW_LEVEL {
        return Err(WqhError::LevelTooLarge { level, max: MAX_AW_LEVEL });
    }
    WeakQuasiBialgebra::from_table(SixJTable::q_racah(level)?)
}

/// Twist by channel scalars: `Δ_J = J Δ J^{-1}`, `Φ_J` and `R_J = J_{21} R J^{-1}`
/// are rebuilt from the twisted F- and R-symbols.
pub fn apply_twist(w: &WeakQuasiBialgebra, tw: &TwistData) -> Result<WeakQuasiBialgebra, WqhError> {
    WeakQuasiBialgebra::assemble(w.table.twisted(tw)?, w.pairs.clone())
}

/// Twist making the R-blocks on `(V_λ, V)`, `λ ≠ V`, equal to the
/// coboundary signs: `j(λ,V;ν) = κ^{1/2}` and `j(V,λ;ν) = κ^{-1/2}` with
/// `κ = q^{(c_ν - c_λ - c_V)/2}` the positive factor of `R^{λV}_ν`.
pub fn coboundary_twist(level: u8) -> TwistData {
    let ell = level as i64 + 2;
    let order = 16 * ell as u32;
    let mut j = BTreeMap::new();
    for lambda in (0..=level).filter(|&l| l != 1) {
        for nu in (0..=level).filter(|&nu| admissible(level, lambda, 1, nu)) {
            let (l, n) = (lambda as i64, nu as i64);
            // κ^{1/2} = q^{(n(n+2) - l(l+2) - 3)/8} = ζ_{16ℓ}^{…}
            let x = n * (n + 2) - l * (l + 2) - 3;
            let half = CycloNumber::embed_root_of_unity(order, x);
            j.insert([lambda, 1, nu], half.clone());
            j.insert([1, lambda, nu], half.inv().expect("root of unity"));
        }
    }
    TwistData { j }
}

impl PartialEq for WeakQuasiBialgebra {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
            && self.table == other.table
            && self.phi == other.phi
            && self.phi_bar == other.phi_bar
            && self.r == other.r
    }
}

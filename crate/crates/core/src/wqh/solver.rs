//! Constraint propagation over pentagon and hexagon equations.
//!
//! An equation whose only unknown appears linearly in every monomial is
//! solved directly. When no such equation remains, one unknown that the
//! residual gauge freedom can still rescale is set to 1; the residual
//! freedom is decided by an exact rank test on gauge exponent vectors. The
//! result is verified against every equation at the end.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::sixj::{fkeys, triples, FKey, QRacah, SixJTable, Triple, TwistData};
use super::suites::{hexagon_equations, pentagon_equations, Equation, Sym};
use super::WqhError;
use crate::exact::{EchelonBasis, Scalar};
use crate::CycloNumber;

/// Values fixed before propagation starts.
#[derive(Debug, Clone, Default)]
pub struct Seeds {
    pub f: BTreeMap<FKey, CycloNumber>,
    pub r: BTreeMap<Triple, CycloNumber>,
}

struct Compiled {
    tag: String,
    /// `(sign, [(symbol, power)])`, power `±1`.
    terms: Vec<(bool, Vec<(usize, i8)>)>,
}

/// Exponent vector of a symbol under the vertex rescaling used by
/// [`SixJTable::twisted`].
fn gauge_vector(sym: &Sym, tri: &HashMap<Triple, usize>) -> Vec<i64> {
    let mut v = vec![0i64; tri.len()];
    let mut add = |t: Triple, s: i64| v[tri[&t]] += s;
    match *sym {
        Sym::F([a, b, c, d, e, f]) => {
            add([b, c, f], 1);
            add([a, f, d], 1);
            add([a, b, e], -1);
            add([e, c, d], -1);
        }
        Sym::R([a, b, c]) | Sym::RInv([a, b, c]) => {
            add([b, a, c], 1);
            add([a, b, c], -1);
        }
    }
    v
}

#[derive(Clone)]
pub struct Solver {
    pub level: u8,
    syms: Arc<Vec<Sym>>,
    values: Vec<Option<CycloNumber>>,
    eqs: Arc<Vec<Compiled>>,
    gauge: Arc<Vec<Vec<BigRational>>>,
    known_span: EchelonBasis<BigRational>,
    pub gauge_fixed: Vec<Sym>,
    pub solved: usize,
}

impl Solver {
    /// Unknowns are all F-symbols, plus all R-symbols when `braided`.
    pub fn new(level: u8, braided: bool) -> Self {
        let mut syms: Vec<Sym> = fkeys(level).into_iter().map(Sym::F).collect();
        let mut eqs: Vec<Equation> = pentagon_equations(level);
        if braided {
            syms.extend(triples(level).into_iter().map(Sym::R));
            let (h1, h2) = hexagon_equations(level);
            eqs.extend(h1);
            eqs.extend(h2);
        }
        let index: HashMap<Sym, usize> = syms.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let compile = |s: &Sym| -> (usize, i8) {
            match s {
                Sym::RInv(t) => (index[&Sym::R(*t)], -1),
                other => (index[other], 1),
            }
        };
        let eqs = eqs
            .into_iter()
            .map(|eq| {
                let mut terms = vec![(true, eq.lhs.iter().map(compile).collect())];
                terms.extend(eq.rhs.iter().map(|m| (false, m.iter().map(compile).collect())));
                Compiled { tag: eq.tag, terms }
            })
            .collect();
        let tri: HashMap<Triple, usize> = triples(level).into_iter().enumerate().map(|(i, t)| (t, i)).collect();
        let gauge = syms
            .iter()
            .map(|s| gauge_vector(s, &tri).into_iter().map(|e| BigRational::from_integer(e.into())).collect())
            .collect();
        Self {
            level,
            values: vec![None; syms.len()],
            syms: Arc::new(syms),
            eqs: Arc::new(eqs),
            gauge: Arc::new(gauge),
            known_span: EchelonBasis::new(tri.len()),
            gauge_fixed: Vec::new(),
            solved: 0,
        }
    }

    fn assign(&mut self, i: usize, x: CycloNumber) {
        self.known_span.insert(&self.gauge[i]);
        self.values[i] = Some(x);
    }

    pub fn seed(&mut self, seeds: &Seeds) {
        let index: HashMap<Sym, usize> = self.syms.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let entries = seeds
            .f
            .iter()
            .map(|(k, v)| (Sym::F(*k), v))
            .chain(seeds.r.iter().map(|(t, v)| (Sym::R(*t), v)));
        for (s, v) in entries {
            if let Some(&i) = index.get(&s) {
                self.assign(i, v.clone());
            }
        }
    }

    pub fn unknowns(&self) -> usize {
        self.values.iter().filter(|v| v.is_none()).count()
    }

    fn monomial(&self, m: &[(usize, i8)], skip: Option<usize>) -> Result<CycloNumber, WqhError> {
        let mut acc = CycloNumber::one();
        for &(i, p) in m {
            if Some(i) == skip {
                continue;
            }
            let x = self.values[i].as_ref().expect("known symbol");
            acc = if p > 0 { &acc * x } else { &acc * &x.inv()? };
        }
        Ok(acc)
    }

    /// One sweep over all equations; returns the number of newly solved
    /// symbols.
    fn sweep(&mut self) -> Result<usize, WqhError> {
        let mut count = 0;
        for e in 0..self.eqs.len() {
            let eq = &self.eqs[e];
            let mut unknown = None;
            let mut several = false;
            for &(i, _) in eq.terms.iter().flat_map(|(_, m)| m) {
                if self.values[i].is_none() {
                    match unknown {
                        None => unknown = Some(i),
                        Some(j) if j != i => several = true,
                        _ => {}
                    }
                }
            }
            let (Some(x), false) = (unknown, several) else { continue };
            let mut linear = true;
            let mut a = CycloNumber::zero();
            let mut b = CycloNumber::zero();
            for (lhs, m) in &eq.terms {
                let powers: Vec<i8> = m.iter().filter(|(i, _)| *i == x).map(|(_, p)| *p).collect();
                let part = match powers.as_slice() {
                    [] => &mut b,
                    [1] => &mut a,
                    _ => {
                        linear = false;
                        break;
                    }
                };
                let v = self.monomial(m, Some(x))?;
                if *lhs {
                    part.add_assign_ref(&v);
                } else {
                    part.sub_assign_ref(&v);
                }
            }
            if !linear {
                continue;
            }
            if a.is_zero() {
                if !b.is_zero() {
                    return Err(WqhError::Inconsistent(self.eqs[e].tag.clone()));
                }
                continue;
            }
            let value = -(&b * &a.inv()?);
            self.assign(x, value);
            self.solved += 1;
            count += 1;
        }
        Ok(count)
    }

    /// Propagates until every symbol is known.
    pub fn run(&mut self) -> Result<(), WqhError> {
        while self.unknowns() > 0 {
            if self.sweep()? > 0 {
                continue;
            }
            let free = (0..self.syms.len())
                .find(|&i| self.values[i].is_none() && !self.known_span.contains(&self.gauge[i]));
            match free {
                Some(i) => {
                    self.gauge_fixed.push(self.syms[i]);
                    self.assign(i, CycloNumber::one());
                }
                None => return Err(WqhError::Stalled(self.unknowns())),
            }
        }
        Ok(())
    }

    /// A single-unknown equation `a₂X² + a₁X + a₀ = 0` and its roots in the
    /// field, when the discriminant has an exact square root.
    fn quadratic_branch(&self) -> Result<Option<(usize, Vec<CycloNumber>)>, WqhError> {
        for eq in self.eqs.iter() {
            let mut unknown = None;
            let mut several = false;
            for &(i, _) in eq.terms.iter().flat_map(|(_, m)| m) {
                if self.values[i].is_none() {
                    match unknown {
                        None => unknown = Some(i),
                        Some(j) if j != i => several = true,
                        _ => {}
                    }
                }
            }
            let (Some(x), false) = (unknown, several) else { continue };
            let mut coef = [CycloNumber::zero(), CycloNumber::zero(), CycloNumber::zero()];
            let mut ok = true;
            for (lhs, m) in &eq.terms {
                let powers: Vec<i8> = m.iter().filter(|(i, _)| *i == x).map(|(_, p)| *p).collect();
                if powers.iter().any(|&p| p < 0) || powers.len() > 2 {
                    ok = false;
                    break;
                }
                let v = self.monomial(m, Some(x))?;
                if *lhs {
                    coef[powers.len()].add_assign_ref(&v);
                } else {
                    coef[powers.len()].sub_assign_ref(&v);
                }
            }
            let [a0, a1, a2] = coef;
            if !ok || a2.is_zero() {
                continue;
            }
            let disc = &(&a1 * &a1) - &(&(&a2 * &a0) * &CycloNumber::from_int(4));
            let Some(root) = exact_sqrt(&disc) else { continue };
            let den = (&a2 * &CycloNumber::from_int(2)).inv()?;
            let mut roots = vec![&(&root - &a1) * &den];
            let other = &(&(-root) - &a1) * &den;
            if other != roots[0] {
                roots.push(other);
            }
            return Ok(Some((x, roots)));
        }
        Ok(None)
    }

    /// Every complete assignment reachable by propagation, branching on both
    /// roots of a quadratic constraint whenever propagation stalls.
    pub fn solve_all(self) -> Result<Vec<Solver>, WqhError> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(mut s) = stack.pop() {
            match s.run() {
                Ok(()) => {
                    if s.violations()? == 0 {
                        out.push(s);
                    }
                }
                Err(WqhError::Inconsistent(_)) => {}
                Err(WqhError::Stalled(n)) => {
                    let Some((x, roots)) = s.quadratic_branch()? else {
                        return Err(WqhError::Stalled(n));
                    };
                    for r in roots {
                        let mut t = s.clone();
                        t.assign(x, r);
                        stack.push(t);
                    }
                }
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }

    /// Number of equations violated by the current (complete) assignment.
    pub fn violations(&self) -> Result<usize, WqhError> {
        let mut bad = 0;
        for eq in self.eqs.iter() {
            let mut r = CycloNumber::zero();
            for (lhs, m) in &eq.terms {
                let v = self.monomial(m, None)?;
                if *lhs {
                    r.add_assign_ref(&v);
                } else {
                    r.sub_assign_ref(&v);
                }
            }
            if !r.is_zero() {
                bad += 1;
            }
        }
        Ok(bad)
    }

    pub fn table(&self) -> SixJTable {
        let mut f = BTreeMap::new();
        let mut r = BTreeMap::new();
        for (s, v) in self.syms.iter().zip(&self.values) {
            let Some(v) = v else { continue };
            match s {
                Sym::F(k) => {
                    f.insert(*k, v.clone());
                }
                Sym::R(t) => {
                    r.insert(*t, v.clone());
                }
                Sym::RInv(_) => {}
            }
        }
        SixJTable { level: self.level, f, r }
    }
}

/// Square root inside `Q(ζ_N)`: numerical roots under one embedding from
/// each conjugate pair, combined over every sign pattern, recovered as
/// rational coordinates and verified exactly.
fn exact_sqrt(c: &CycloNumber) -> Option<CycloNumber> {
    if c.is_zero() {
        return Some(c.clone());
    }
    let n = c.order() as u64;
    let phi = c.coeffs().len();
    let units: Vec<u64> = (1..=n.max(1)).filter(|j| j.gcd(&n) == 1).collect();
    let coeffs: Vec<f64> = c.coeffs().iter().map(|x| rational_to_f64(x)).collect();
    let zeta = |e: u64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (e % n) as f64 / n as f64);
    let embed = |j: u64| -> Complex64 { coeffs.iter().enumerate().map(|(i, a)| zeta(i as u64 * j) * *a).sum() };
    let vandermonde: Vec<Vec<Complex64>> =
        units.iter().map(|&j| (0..phi).map(|i| zeta(i as u64 * j)).collect()).collect();
    let vinv = complex_inverse(vandermonde)?;
    let reps: Vec<usize> = (0..units.len()).filter(|&a| units[a] <= n - units[a]).collect();
    let partner = |a: usize| units.iter().position(|&j| j == (n - units[a]) % n).unwrap_or(a);
    let base: Vec<Complex64> = units.iter().map(|&j| embed(j).sqrt()).collect();
    if reps.len() > 16 {
        return None;
    }
    for mask in 0u32..(1 << reps.len()) {
        let mut target = base.clone();
        for (bit, &a) in reps.iter().enumerate() {
            let s = if mask >> bit & 1 == 1 { -base[a] } else { base[a] };
            target[a] = s;
            target[partner(a)] = s.conj();
        }
        let y: Option<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let v: Complex64 = (0..units.len()).map(|a| vinv[i][a] * target[a]).sum();
                if v.im.abs() > 1e-7 {
                    return None;
                }
                rationalize(v.re)
            })
            .collect();
        if let Some(y) = y {
            let y = CycloNumber::from_coeffs(n as u32, y);
            if &y * &y == *c {
                return Some(y);
            }
        }
    }
    None
}

fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Continued-fraction approximation with denominator at most `10^7`.
fn rationalize(x: f64) -> Option<BigRational> {
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        if a.abs() > 1e12 {
            return None;
        }
        let a = a as i64;
        (h0, h1) = (h1, a.checked_mul(h1)?.checked_add(h0)?);
        (k0, k1) = (k1, a.checked_mul(k1)?.checked_add(k0)?);
        if k1 > 10_000_000 {
            return None;
        }
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 {
            return Some(BigRational::new(h1.into(), k1.into()));
        }
        let frac = r - a as f64;
        if frac.abs() < 1e-12 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

/// Gauss-Jordan inverse with partial pivoting.
fn complex_inverse(mut m: Vec<Vec<Complex64>>) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Complex64>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))?;
        if m[piv][col].norm() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col];
        for j in 0..n {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                for j in 0..n {
                    let (a, b) = (m[col][j], inv[col][j]);
                    m[r][j] -= f * a;
                    inv[r][j] -= f * b;
                }
            }
        }
    }
    Some(inv)
}

/// Vertex scalars relating two tables.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeMap {
    pub twist: TwistData,
}

/// Finds vertex scalars `j` with `to = from.twisted(j)`, comparing F-symbols
/// and, when `braided`, R-symbols. Returns `None` when none exist.
pub fn gauge_equivalent(from: &SixJTable, to: &SixJTable, braided: bool) -> Option<GaugeMap> {
    if from.level != to.level || from.f.keys().ne(to.f.keys()) {
        return None;
    }
    let tri: HashMap<Triple, usize> = triples(from.level).into_iter().enumerate().map(|(i, t)| (t, i)).collect();
    let all: Vec<Triple> = triples(from.level);
    // (ratio, exponents) constraints
    let mut cons: Vec<(CycloNumber, Vec<(usize, i64)>)> = Vec::new();
    let mut push = |sym: Sym, x: &CycloNumber, y: &CycloNumber| -> Option<()> {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => return Some(()),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        let v = gauge_vector(&sym, &tri);
        let ex: Vec<(usize, i64)> = v.into_iter().enumerate().filter(|(_, e)| *e != 0).collect();
        cons.push((y * &x.inv().ok()?, ex));
        Some(())
    };
    for (k, x) in &from.f {
        push(Sym::F(*k), x, &to.f[k])?;
    }
    if braided {
        if from.r.keys().ne(to.r.keys()) {
            return None;
        }
        for (t, x) in &from.r {
            push(Sym::R(*t), x, &to.r[t])?;
        }
    }
    let mut j: Vec<Option<CycloNumber>> = vec![None; all.len()];
    loop {
        let mut progress = false;
        for (ratio, ex) in &cons {
            let unknown: Vec<&(usize, i64)> = ex.iter().filter(|(i, _)| j[*i].is_none()).collect();
            let [&(u, e)] = unknown.as_slice() else { continue };
            if e.abs() != 1 {
                continue;
            }
            let mut rest = ratio.clone();
            for &(i, p) in ex {
                if i != u {
                    let x = j[i].as_ref().expect("known");
                    rest = &rest * &x.pow(-p).ok()?;
                }
            }
            j[u] = Some(if e == 1 { rest } else { rest.inv().ok()? });
            progress = true;
        }
        if !progress {
            match j.iter().position(Option::is_none) {
                Some(i) => j[i] = Some(CycloNumber::one()),
                None => break,
            }
        }
    }
    let twist = TwistData {
        j: all.iter().zip(j).map(|(t, x)| (*t, x.expect("assigned"))).collect(),
    };
    let moved = from.twisted(&twist).ok()?;
    let same = moved.f == to.f && (!braided || moved.r == to.r);
    same.then_some(GaugeMap { twist })
}

fn unit_seeds(level: u8) -> BTreeMap<FKey, CycloNumber> {
    fkeys(level)
        .into_iter()
        .filter(|k| k[0] == 0 || k[1] == 0 || k[2] == 0)
        .map(|k| (k, CycloNumber::one()))
        .collect()
}

/// Outcome of solving the pentagon equations from the fusion rules alone.
#[derive(Debug, Clone, Serialize)]
pub struct BruteForceReport {
    pub level: u8,
    pub candidates: usize,
    pub solutions: usize,
    pub gauge_fixed: Vec<Vec<FKey>>,
    /// Whether the q-Racah F-symbols are gauge equivalent to a solution.
    pub matches_q_racah: bool,
}

/// Pentagon solver oracle: unit-normalized vertices, `F^{111}_1[0,0] = ±1/d`
/// with `d = [2]`, every other symbol by propagation.
pub fn brute_force_pentagon(level: u8) -> Result<BruteForceReport, WqhError> {
    let reference = SixJTable::q_racah(level)?;
    let d = QRacah::new(level).qint(2).clone();
    let mut solutions = Vec::new();
    let mut gauge_fixed = Vec::new();
    let candidates = [CycloNumber::one(), -CycloNumber::one()];
    for s in &candidates {
        let mut seeds = Seeds { f: unit_seeds(level), r: BTreeMap::new() };
        seeds.f.insert([1, 1, 1, 1, 0, 0], s * &d.inv()?);
        let mut solver = Solver::new(level, false);
        solver.seed(&seeds);
        let found = match solver.solve_all() {
            Ok(found) => found,
            Err(WqhError::Stalled(_)) => Vec::new(),
            Err(e) => return Err(e),
        };
        for sol in found {
            gauge_fixed.push(
                sol.gauge_fixed.iter().filter_map(|s| if let Sym::F(k) = s { Some(*k) } else { None }).collect(),
            );
            solutions.push(sol.table());
        }
    }
    let ref_f = SixJTable { level, f: reference.f, r: BTreeMap::new() };
    let matches_q_racah = solutions.iter().any(|t| gauge_equivalent(&ref_f, t, false).is_some());
    Ok(BruteForceReport {
        level,
        candidates: candidates.len(),
        solutions: solutions.len(),
        gauge_fixed,
        matches_q_racah,
    })
}

/// Outcome of re-deriving a full table from its special symbols.
#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    pub level: u8,
    pub seeded_f: usize,
    pub seeded_r: usize,
    pub solved: usize,
    pub gauge_fixed: usize,
    pub violations: usize,
    pub gauge_equivalent: bool,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.gauge_equivalent
    }
}

/// Keeps F on triples with two entries equal to `V = (1)` and R on pairs
/// containing `V`, then re-derives every other symbol.
pub fn rederive_from_special(table: &SixJTable) -> Result<UniquenessReport, WqhError> {
    let special_triple = |k: &FKey| [k[0], k[1], k[2]].iter().filter(|&&x| x == 1).count() >= 2;
    let seeds = Seeds {
        f: table.f.iter().filter(|(k, _)| special_triple(k)).map(|(k, v)| (*k, v.clone())).collect(),
        r: table.r.iter().filter(|(t, _)| t[0] == 1 || t[1] == 1).map(|(t, v)| (*t, v.clone())).collect(),
    };
    let mut solver = Solver::new(table.level, true);
    solver.seed(&seeds);
    solver.run()?;
    let violations = solver.violations()?;
    let derived = solver.table();
    Ok(UniquenessReport {
        level: table.level,
        seeded_f: seeds.f.len(),
        seeded_r: seeds.r.len(),
        solved: solver.solved,
        gauge_fixed: solver.gauge_fixed.len(),
        violations,
        gauge_equivalent: gauge_equivalent(table, &derived, true).is_some(),
    })
}

//! Level-k alcove categories: simple objects, quantum dimensions, truncated
//! fusion, twists and modular data.
//!
//! All category data live in one cyclotomic field `Q(ζ_N)` with
//! `N = lcm(2dℓ, 2ℓ·D)`, `D` the common denominator of the invariant form on
//! weights, so that both `q = ζ_{2dℓ}` and every twist are available without
//! promotion.

mod modular;
mod power;
#[cfg(test)]
mod tests;

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{quantum_integer, ExactError, Scalar};
use crate::lie::{LieError, LieType, RootSystem, Weight};
use crate::CycloNumber;

pub use modular::{ModularData, ModularReport, VerlindeReport, VerlindeViolation};
pub use power::{AlcovePath, TruncatedPower};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlcoveError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("level must be positive, got {0}")]
    InvalidLevel(i64),
    #[error("weight {0} is not in the alcove")]
    NotInAlcove(Weight),
    #[error("S·S* is not a nonzero scalar; category is not modular")]
    NonModular,
    #[error("power must be at least 1")]
    InvalidPower,
}

/// A level-k root-of-unity fusion category `C(g, q)`.
#[derive(Debug, Clone)]
pub struct AlcoveCategory {
    pub rs: RootSystem,
    pub level: i64,
    pub ell: i64,
    /// Order `N` of the working cyclotomic field.
    pub order: u32,
    /// `q = ζ_{2dℓ}`, written in `Q(ζ_N)`.
    pub q: CycloNumber,
    pub weights: Vec<Weight>,
    pub qdims: Vec<CycloNumber>,
    /// `fusion[a][b][c] = N_{ab}^c` in weight-index order.
    pub fusion: Vec<Vec<Vec<u64>>>,
    twists: Vec<CycloNumber>,
    duals: Vec<usize>,
    index: HashMap<Weight, usize>,
}

fn alcove_weights(rs: &RootSystem, k: i64) -> Vec<Weight> {
    fn rec(rs: &RootSystem, k: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() == rs.rank {
            out.push(Weight(prefix.clone()));
            return;
        }
        let i = prefix.len();
        let used: i64 = prefix.iter().zip(rs.comarks()).map(|(a, b)| a * b).sum();
        let mut x = 0;
        while used + x * rs.comarks()[i] <= k {
            prefix.push(x);
            rec(rs, k, prefix, out);
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    rec(rs, k, &mut Vec::new(), &mut out);
    out.sort_by_key(|w| (rs.level_of(w), w.clone()));
    out
}

impl AlcoveCategory {
    pub fn new(rs: RootSystem, k: i64) -> Result<Self, AlcoveError> {
        if k < 1 {
            return Err(AlcoveError::InvalidLevel(k));
        }
        let ell = k + rs.dual_coxeter;
        let d = rs.ratio_d;
        let order = num_integer::lcm(2 * d * ell, 2 * ell * rs.form_denominator()) as u32;
        let q = CycloNumber::embed_root_of_unity(order, order as i64 / (2 * d * ell));
        let weights = alcove_weights(&rs, k);
        let index: HashMap<Weight, usize> =
            weights.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut cat = Self {
            rs,
            level: k,
            ell,
            order,
            q,
            weights,
            qdims: Vec::new(),
            fusion: Vec::new(),
            twists: Vec::new(),
            duals: Vec::new(),
            index,
        };
        cat.qdims = cat.weights.iter().map(|w| cat.compute_qdim(w)).collect::<Result<_, _>>()?;
        cat.twists = cat.weights.iter().map(|w| cat.compute_twist(w)).collect();
        cat.duals = cat.weights.iter().map(|w| cat.index[&cat.rs.dual(w)]).collect();
        cat.fusion = cat.compute_fusion()?;
        Ok(cat)
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type
    }

    pub fn index_of(&self, w: &Weight) -> Result<usize, AlcoveError> {
        self.index.get(w).copied().ok_or_else(|| AlcoveError::NotInAlcove(w.clone()))
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.index.contains_key(w)
    }

    pub fn qdim(&self, w: &Weight) -> Result<&CycloNumber, AlcoveError> {
        Ok(&self.qdims[self.index_of(w)?])
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.duals[i]
    }

    /// Indices of the summands of `V`.
    pub fn v_indices(&self) -> Vec<usize> {
        self.rs
            .fundamental_rep()
            .summands
            .iter()
            .map(|w| self.index[w])
            .collect()
    }

    /// `Π_{α>0} [⟨λ+ρ, α^∨⟩]_{q_α} / [⟨ρ, α^∨⟩]_{q_α}` with `q_α = q^{d_α}`.
    fn compute_qdim(&self, w: &Weight) -> Result<CycloNumber, AlcoveError> {
        let shifted = w.add(&self.rs.rho);
        let mut num = CycloNumber::one();
        let mut den = CycloNumber::one();
        for k in 0..self.rs.positive_root_count() {
            let qa = self.q.pow(self.rs.root_d(k))?;
            num = &num * &quantum_integer(self.rs.coroot_pairing(&shifted, k), &qa)?;
            den = &den * &quantum_integer(self.rs.coroot_pairing(&self.rs.rho, k), &qa)?;
        }
        Ok(&num * &den.inv()?)
    }

    /// `h_λ = ⟨λ, λ+2ρ⟩ / 2ℓ`, so that `θ_λ = e^{2πi h_λ}`.
    pub fn conformal_weight(&self, w: &Weight) -> Rational64 {
        self.rs.casimir(w) / Rational64::from_integer(2 * self.ell)
    }

    fn compute_twist(&self, w: &Weight) -> CycloNumber {
        let e = self.conformal_weight(w) * Rational64::from_integer(self.order as i64);
        debug_assert!(e.is_integer());
        CycloNumber::embed_root_of_unity(self.order, e.to_integer())
    }

    /// Ribbon twist `θ_λ = q^{d⟨λ, λ+2ρ⟩}`.
    pub fn twist(&self, w: &Weight) -> Result<&CycloNumber, AlcoveError> {
        Ok(&self.twists[self.index_of(w)?])
    }

    pub fn twists(&self) -> &[CycloNumber] {
        &self.twists
    }

    fn compute_fusion(&self) -> Result<Vec<Vec<Vec<u64>>>, AlcoveError> {
        let n = self.rank();
        let mut out = vec![vec![vec![0u64; n]; n]; n];
        for a in 0..n {
            for b in a..n {
                for (w, m) in self.rs.tensor_product(&self.weights[a], &self.weights[b], Some(self.ell))? {
                    let c = self.index[&w];
                    out[a][b][c] = m;
                    out[b][a][c] = m;
                }
            }
        }
        Ok(out)
    }

    /// Truncated fusion `λ ⊗ μ` by the Kac–Walton rule.
    pub fn fuse(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>, AlcoveError> {
        let a = self.index_of(lambda)?;
        let b = self.index_of(mu)?;
        Ok(self.fusion[a][b]
            .iter()
            .enumerate()
            .filter(|(_, m)| **m > 0)
            .map(|(c, m)| (self.weights[c].clone(), *m))
            .collect())
    }

    /// `Σ_λ qdim(λ)²`.
    pub fn global_dimension_squared(&self) -> CycloNumber {
        let mut acc = CycloNumber::zero_in(self.order);
        for d in &self.qdims {
            acc.add_product(d, d);
        }
        acc
    }

    /// Whether every quantum dimension is real and strictly positive.
    pub fn qdims_positive(&self) -> Result<bool, AlcoveError> {
        for d in &self.qdims {
            if !d.is_real() || !d.is_real_positive()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Associativity `Σ_σ N_{λμ}^σ N_{σν}^τ = Σ_σ N_{μν}^σ N_{λσ}^τ` over all
    /// quadruples; returns the number of violations.
    pub fn associativity_violations(&self) -> usize {
        let n = self.rank();
        let f = &self.fusion;
        let mut bad = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for t in 0..n {
                        let lhs: u64 = (0..n).map(|s| f[a][b][s] * f[s][c][t]).sum();
                        let rhs: u64 = (0..n).map(|s| f[b][c][s] * f[a][s][t]).sum();
                        if lhs != rhs {
                            bad += 1;
                        }
                    }
                }
            }
        }
        bad
    }

    /// Commutativity and unit checks; returns the number of violations.
    pub fn ring_axiom_violations(&self) -> usize {
        let n = self.rank();
        let mut bad = 0;
        for a in 0..n {
            for b in 0..n {
                if self.fusion[a][b] != self.fusion[b][a] {
                    bad += 1;
                }
                if self.fusion[0][a][b] != u64::from(a == b) {
                    bad += 1;
                }
                // N_{ab}^0 = δ_{b, a*}
                if self.fusion[a][b][0] != u64::from(b == self.duals[a]) {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// `qdim(λ)·qdim(μ) = Σ_ν N_{λμ}^ν qdim(ν)` over all pairs; returns the
    /// number of violating pairs.
    pub fn qdim_multiplicativity_violations(&self) -> usize {
        let n = self.rank();
        let mut bad = 0;
        for a in 0..n {
            for b in a..n {
                let lhs = &self.qdims[a] * &self.qdims[b];
                let mut rhs = CycloNumber::zero_in(self.order);
                for c in 0..n {
                    let m = self.fusion[a][b][c];
                    if m > 0 {
                        rhs.add_product(&CycloNumber::from_int(m as i64), &self.qdims[c]);
                    }
                }
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Description of the numerical conventions, echoed in output headers.
    pub fn conventions(&self) -> Conventions {
        Conventions {
            lie_type: self.rs.lie_type.to_string(),
            rank: self.rs.rank,
            level: self.level,
            dual_coxeter: self.rs.dual_coxeter,
            ell: self.ell,
            ratio_d: self.rs.ratio_d,
            q: format!("zeta_{}", 2 * self.rs.ratio_d * self.ell),
            field_order: self.order,
            form: "long roots have squared length 2".into(),
            twist: "theta = exp(2 pi i <l, l+2rho> / 2ell)".into(),
            s_matrix: "unnormalized Hopf link, s_00 = 1".into(),
        }
    }

    pub fn fusion_table(&self) -> FusionTable {
        FusionTable {
            conventions: self.conventions(),
            weights: self.weights.clone(),
            n: self.fusion.clone(),
        }
    }
}

pub fn build_alcove(rs: RootSystem, k: i64) -> Result<AlcoveCategory, AlcoveError> {
    AlcoveCategory::new(rs, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub lie_type: String,
    pub rank: usize,
    pub level: i64,
    pub dual_coxeter: i64,
    pub ell: i64,
    pub ratio_d: i64,
    pub q: String,
    pub field_order: u32,
    pub form: String,
    pub twist: String,
    pub s_matrix: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FusionTable {
    pub conventions: Conventions,
    pub weights: Vec<Weight>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u64>>>,
}

impl FusionTable {
    /// One row `lambda,mu,nu,N` per nonzero multiplicity.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,mu,nu,N\n");
        for (a, row) in self.n.iter().enumerate() {
            for (b, col) in row.iter().enumerate() {
                for (c, m) in col.iter().enumerate() {
                    if *m > 0 {
                        out.push_str(&format!(
                            "\"{}\",\"{}\",\"{}\",{}\n",
                            self.weights[a], self.weights[b], self.weights[c], m
                        ));
                    }
                }
            }
        }
        out
    }
}

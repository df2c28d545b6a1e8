//! Temperley–Lieb path model for the truncated powers of `V` in type `A_1`.

use num_traits::Zero;
use serde::Serialize;

use super::closure::{algebra_dimension, Blocks};
use super::BraidError;
use crate::alcove::{AlcoveCategory, AlcovePath};
use crate::exact::Scalar;
use crate::lie::{LieType, Weight};
use crate::{CycloMatrix, CycloNumber};

/// Braid generators on the path basis of `V^n`.
///
/// `e_i` acts on paths through positions `i-1, i, i+1`; on a block where
/// positions `i-1` and `i+1` carry label `a` its entries are
/// `e[b, b'] = qdim(b') / qdim(a)`, a diagonal gauge of the unitary form
/// that avoids square roots. `σ_i = A·1 - A^{-1}·e_i` with `A = ζ_{4ℓ}`.
#[derive(Debug, Clone)]
pub struct BraidTower {
    pub level: i64,
    pub ell: i64,
    pub n: usize,
    pub order: u32,
    /// Kauffman parameter `A = q^{1/2}`.
    pub a: CycloNumber,
    /// Loop value `δ = [2]_q = A² + A^{-2}`.
    pub delta: CycloNumber,
    pub paths: Vec<AlcovePath>,
    /// Endpoint weights and the indices of the paths ending there.
    pub blocks: Vec<(Weight, Vec<usize>)>,
    pub e: Vec<CycloMatrix>,
    pub sigma: Vec<CycloMatrix>,
    pub sigma_inv: Vec<CycloMatrix>,
    endpoint_qdims: Vec<CycloNumber>,
}

impl BraidTower {
    pub fn new(cat: &AlcoveCategory, n: usize) -> Result<Self, BraidError> {
        if cat.lie_type() != LieType::A || cat.rs.rank != 1 {
            return Err(BraidError::UnsupportedType(format!("{}{}", cat.lie_type(), cat.rs.rank)));
        }
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        let ell = cat.ell;
        let order = num_integer::lcm(cat.order, 4 * ell as u32);
        let a = CycloNumber::embed_root_of_unity(order, (order / (4 * ell as u32)) as i64);
        let a_inv = a.inv()?;
        let delta = &(&a * &a) + &(&a_inv * &a_inv);
        let qd: Vec<CycloNumber> = cat.qdims.iter().map(|d| d.promote(order)).collect();
        let qd_inv: Vec<CycloNumber> = qd.iter().map(|d| d.inv()).collect::<Result<_, _>>()?;
        let power = cat.truncated_power(n)?;
        let paths = power.paths;
        let label = |w: &Weight| w.0[0] as usize;
        let dim = paths.len();

        let mut e = Vec::with_capacity(n - 1);
        for i in 1..n {
            let mut m = CycloMatrix::zeros(dim, dim);
            for (col, p) in paths.iter().enumerate() {
                if p.weights[i - 1] != p.weights[i + 1] {
                    continue;
                }
                let a_lab = label(&p.weights[i - 1]);
                for (row, r) in paths.iter().enumerate() {
                    let same_elsewhere =
                        (0..=n).all(|j| j == i || r.weights[j] == p.weights[j]);
                    if same_elsewhere {
                        m[(row, col)] = &qd[label(&p.weights[i])] * &qd_inv[a_lab];
                    }
                }
            }
            e.push(m);
        }
        let id = CycloMatrix::identity(dim);
        let sigma: Vec<CycloMatrix> =
            e.iter().map(|ei| &id.scale(&a) - &ei.scale(&a_inv)).collect();
        // σ^{-1} = A^{-1}·1 - A·e, using e² = δe
        let sigma_inv: Vec<CycloMatrix> =
            e.iter().map(|ei| &id.scale(&a_inv) - &ei.scale(&a)).collect();

        let mut blocks: Vec<(Weight, Vec<usize>)> = Vec::new();
        for (idx, p) in paths.iter().enumerate() {
            match blocks.iter_mut().find(|(w, _)| w == p.end()) {
                Some((_, v)) => v.push(idx),
                None => blocks.push((p.end().clone(), vec![idx])),
            }
        }
        let endpoint_qdims = paths.iter().map(|p| qd[label(p.end())].clone()).collect();
        Ok(Self {
            level: cat.level,
            ell,
            n,
            order,
            a,
            delta,
            paths,
            blocks,
            e,
            sigma,
            sigma_inv,
            endpoint_qdims,
        })
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    /// `Σ_λ m_n(λ)²`.
    pub fn centralizer_dimension(&self) -> usize {
        self.blocks.iter().map(|(_, v)| v.len() * v.len()).sum()
    }

    fn to_blocks(&self, m: &CycloMatrix) -> Blocks<CycloNumber> {
        self.blocks.iter().map(|(_, idx)| m.submatrix(idx, idx)).collect()
    }

    /// Whether every generator preserves the isotypic decomposition.
    pub fn generators_block_diagonal(&self) -> bool {
        self.sigma.iter().chain(&self.e).all(|m| {
            (0..self.dimension()).all(|r| {
                (0..self.dimension()).all(|c| {
                    self.paths[r].end() == self.paths[c].end() || m[(r, c)].is_zero()
                })
            })
        })
    }

    /// Dimension of the algebra generated by all `σ_i^{±1}`.
    ///
    /// Seeds are `σ_i` and `σ_i^{-1}`; closing under right multiplication by
    /// `σ_i` suffices because `σ_i^{-1}` lies in the span of `1` and `σ_i`.
    pub fn braid_image_dimension(&self) -> usize {
        let sizes: Vec<usize> = self.blocks.iter().map(|(_, v)| v.len()).collect();
        let gens: Vec<Blocks<CycloNumber>> = self.sigma.iter().map(|m| self.to_blocks(m)).collect();
        let seeds: Vec<Blocks<CycloNumber>> = gens
            .iter()
            .cloned()
            .chain(self.sigma_inv.iter().map(|m| self.to_blocks(m)))
            .collect();
        algebra_dimension(&sizes, &seeds, &gens)
    }

    /// Number of failed braid relations, checked blockwise.
    pub fn braid_relation_violations(&self) -> usize {
        let s: Vec<Blocks<CycloNumber>> = self.sigma.iter().map(|m| self.to_blocks(m)).collect();
        let mul = |x: &Blocks<CycloNumber>, y: &Blocks<CycloNumber>| -> Blocks<CycloNumber> {
            x.iter().zip(y).map(|(a, b)| a * b).collect()
        };
        let mut bad = 0;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let ok = if j == i + 1 {
                    mul(&mul(&s[i], &s[j]), &s[i]) == mul(&mul(&s[j], &s[i]), &s[j])
                } else {
                    mul(&s[i], &s[j]) == mul(&s[j], &s[i])
                };
                if !ok {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// `e_i² = δ e_i`, `e_i e_{i±1} e_i = e_i`, `e_i e_j = e_j e_i` for
    /// `|i-j| ≥ 2`; returns the number of failures.
    pub fn temperley_lieb_violations(&self) -> usize {
        let e = &self.e;
        let mut bad = 0;
        for i in 0..e.len() {
            if &e[i] * &e[i] != e[i].scale(&self.delta) {
                bad += 1;
            }
            for j in 0..e.len() {
                let ok = match i.abs_diff(j) {
                    0 => true,
                    1 => &(&e[i] * &e[j]) * &e[i] == e[i],
                    _ => &e[i] * &e[j] == &e[j] * &e[i],
                };
                if !ok {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// `σ_i σ_i^{-1} = 1` for every generator.
    pub fn inverses_ok(&self) -> bool {
        self.sigma.iter().zip(&self.sigma_inv).all(|(s, t)| (s * t).is_identity())
    }

    /// `(σ_i - A)(σ_i + A^{-3}) = 0` for every `i`: the eigenvalues are
    /// the same two scalars on every strand.
    pub fn eigenvalues_uniform(&self) -> bool {
        let a3 = self.a.pow(-3).expect("A is a unit");
        let id = CycloMatrix::identity(self.dimension());
        self.sigma.iter().all(|s| {
            let x = s - &id.scale(&self.a);
            let y = s + &id.scale(&a3);
            (&x * &y).is_zero()
        })
    }

    /// The two eigenvalues `A` and `-A^{-3}` of every `σ_i`.
    pub fn eigenvalues(&self) -> [CycloNumber; 2] {
        [self.a.clone(), -self.a.pow(-3).expect("A is a unit")]
    }

    /// Markov trace `Tr(x) = Σ_paths qdim(end)·x_pp`.
    pub fn markov_trace(&self, m: &CycloMatrix) -> CycloNumber {
        let mut acc = CycloNumber::zero_in(self.order);
        for (i, d) in self.endpoint_qdims.iter().enumerate() {
            if !m[(i, i)].is_zero() {
                acc.add_product(d, &m[(i, i)]);
            }
        }
        acc
    }

    /// `Tr(e_i/δ) / Tr(1)` for each `i`.
    pub fn projector_trace_ratios(&self) -> Vec<CycloNumber> {
        let one = self.markov_trace(&CycloMatrix::identity(self.dimension()));
        let den = (&one * &self.delta).inv().expect("nonzero trace");
        self.e.iter().map(|ei| &self.markov_trace(ei) * &den).collect()
    }

    /// Expected value `δ^{-2}` of every projector trace ratio.
    pub fn expected_projector_ratio(&self) -> CycloNumber {
        (&self.delta * &self.delta).inv().expect("δ is nonzero")
    }
}

/// `Σ_λ m_n(λ)²` for the truncated power `V^n`.
pub fn centralizer_dimension(cat: &AlcoveCategory, n: usize) -> Result<u64, BraidError> {
    Ok(cat.truncated_power(n)?.centralizer_dimension())
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityEntry {
    pub n: usize,
    pub centralizer_dim: u64,
    pub braid_image_dim: u64,
    pub duality: bool,
    pub eigenvalues: Vec<CycloNumber>,
}

/// Centralizer versus braid-image dimensions for `n = 2..=n_max`.
pub fn duality_report(cat: &AlcoveCategory, n_max: usize) -> Result<Vec<DualityEntry>, BraidError> {
    if n_max < 2 {
        return Err(BraidError::TooFewStrands(n_max));
    }
    (2..=n_max)
        .map(|n| {
            let tower = BraidTower::new(cat, n)?;
            let c = tower.centralizer_dimension() as u64;
            let b = tower.braid_image_dimension() as u64;
            Ok(DualityEntry {
                n,
                centralizer_dim: c,
                braid_image_dim: b,
                duality: c == b,
                eigenvalues: tower.eigenvalues().to_vec(),
            })
        })
        .collect()
}

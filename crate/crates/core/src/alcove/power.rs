use std::collections::BTreeMap;

use serde::Serialize;

use super::{AlcoveCategory, AlcoveError};
use crate::lie::Weight;

/// A path `0 → λ_1 → … → λ_n` in the fusion graph of `V`; `channels[i]`
/// picks a copy when `λ_{i+1}` occurs in `λ_i ⊗ V` with multiplicity > 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AlcovePath {
    pub weights: Vec<Weight>,
    pub channels: Vec<u64>,
}

impl AlcovePath {
    pub fn end(&self) -> &Weight {
        self.weights.last().expect("paths start at the unit")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncatedPower {
    pub n: usize,
    pub decomposition: BTreeMap<Weight, u64>,
    pub paths: Vec<AlcovePath>,
}

impl TruncatedPower {
    /// `Σ_λ m_n(λ)²`.
    pub fn centralizer_dimension(&self) -> u64 {
        self.decomposition.values().map(|m| m * m).sum()
    }

    pub fn dimension_count(&self) -> u64 {
        self.decomposition.values().sum()
    }
}

impl AlcoveCategory {
    /// `N_{λ V}^ν` summed over the summands of `V`.
    pub fn fusion_with_v(&self, a: usize) -> Vec<u64> {
        let mut out = vec![0; self.rank()];
        for v in self.v_indices() {
            for (c, m) in self.fusion[a][v].iter().enumerate() {
                out[c] += m;
            }
        }
        out
    }

    /// `V^1, …, V^{n_max}` with their path bases.
    pub fn truncated_powers(&self, n_max: usize) -> Result<Vec<TruncatedPower>, AlcoveError> {
        if n_max < 1 {
            return Err(AlcoveError::InvalidPower);
        }
        let step: Vec<Vec<u64>> = (0..self.rank()).map(|a| self.fusion_with_v(a)).collect();
        let zero = Weight::zero(self.rs.rank);
        let mut paths = vec![AlcovePath { weights: vec![zero], channels: Vec::new() }];
        let mut out = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut next = Vec::new();
            for p in &paths {
                let a = self.index[p.end()];
                for (c, &m) in step[a].iter().enumerate() {
                    for copy in 0..m {
                        let mut q = p.clone();
                        q.weights.push(self.weights[c].clone());
                        q.channels.push(copy);
                        next.push(q);
                    }
                }
            }
            next.sort();
            let mut decomposition = BTreeMap::new();
            for p in &next {
                *decomposition.entry(p.end().clone()).or_insert(0) += 1;
            }
            out.push(TruncatedPower { n, decomposition, paths: next.clone() });
            paths = next;
        }
        Ok(out)
    }

    pub fn truncated_power(&self, n: usize) -> Result<TruncatedPower, AlcoveError> {
        Ok(self.truncated_powers(n)?.pop().expect("n >= 1"))
    }
}

use num_traits::{One, Zero};
use serde::Serialize;

use super::{AlcoveCategory, AlcoveError, Conventions};
use crate::exact::Scalar;
use crate::lie::Weight;
use crate::{CycloMatrix, CycloNumber};

/// Unnormalized modular data: `S` is the Hopf-link matrix with `S_00 = 1`,
/// `T = diag(θ_λ)`, and `C = S² / D²` with `D² = Σ qdim²`.
#[derive(Debug, Clone, Serialize)]
pub struct ModularData {
    #[serde(rename = "S")]
    pub s: CycloMatrix,
    #[serde(rename = "T")]
    pub t: CycloMatrix,
    #[serde(rename = "C")]
    pub c: CycloMatrix,
    #[serde(rename = "D2")]
    pub global_dim2: CycloNumber,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModularReport {
    pub s_symmetric: bool,
    /// `S·S* = D²·I`
    pub s_unitary_up_to_scale: bool,
    pub charge_conjugation_ok: bool,
    /// `(ST)³ = c·S²` for a single scalar `c`.
    pub st_cubed_proportional: bool,
    /// `S⁴ = D⁴·I`
    pub s_fourth_scalar: bool,
    pub first_column_is_qdims: bool,
}

impl ModularReport {
    pub fn all_ok(&self) -> bool {
        self.s_symmetric
            && self.s_unitary_up_to_scale
            && self.charge_conjugation_ok
            && self.st_cubed_proportional
            && self.s_fourth_scalar
            && self.first_column_is_qdims
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerlindeViolation {
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub expected: u64,
    pub verlinde: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerlindeReport {
    pub triples_checked: usize,
    pub violations: Vec<VerlindeViolation>,
}

impl VerlindeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Serialize)]
struct ModularJson<'a> {
    conventions: Conventions,
    weights: &'a [Weight],
    #[serde(flatten)]
    data: &'a ModularData,
}

impl AlcoveCategory {
    /// Hopf-link matrix `s_{λμ} = θ_λ^{-1} θ_μ^{-1} Σ_ν N_{λ*μ}^ν θ_ν qdim(ν)`.
    pub fn s_matrix(&self) -> Result<CycloMatrix, AlcoveError> {
        let n = self.rank();
        let weighted: Vec<CycloNumber> =
            (0..n).map(|c| &self.twists[c] * &self.qdims[c]).collect();
        let inv_twists: Vec<CycloNumber> =
            self.twists.iter().map(|t| t.inv()).collect::<Result<_, _>>()?;
        let mut s = CycloMatrix::zeros(n, n);
        for a in 0..n {
            let ad = self.dual_index(a);
            for b in a..n {
                let mut acc = CycloNumber::zero_in(self.order);
                for (c, w) in weighted.iter().enumerate() {
                    let m = self.fusion[ad][b][c];
                    if m > 0 {
                        acc.add_product(&CycloNumber::from_int(m as i64), w);
                    }
                }
                let phase = &inv_twists[a] * &inv_twists[b];
                let v = &acc * &phase;
                s[(b, a)] = v.clone();
                s[(a, b)] = v;
            }
        }
        Ok(s)
    }

    pub fn t_matrix(&self) -> CycloMatrix {
        CycloMatrix::diagonal(self.twists.clone())
    }

    /// S, T and charge conjugation; fails unless `S·S*` is a nonzero scalar.
    pub fn modular_data(&self) -> Result<ModularData, AlcoveError> {
        let s = self.s_matrix()?;
        let d2 = self.global_dimension_squared();
        let sss = &s * &s.conj_transpose();
        match sss.scalar_multiple_of_identity() {
            Some(c) if !c.is_zero() => {}
            _ => return Err(AlcoveError::NonModular),
        }
        let c = (&s * &s).scale(&d2.inv()?);
        Ok(ModularData { s, t: self.t_matrix(), c, global_dim2: d2 })
    }

    pub fn modular_json(&self, data: &ModularData) -> serde_json::Value {
        serde_json::to_value(ModularJson {
            conventions: self.conventions(),
            weights: &self.weights,
            data,
        })
        .expect("modular data serializes")
    }

    /// Projective modular relations and normalization checks.
    pub fn modular_report(&self, data: &ModularData) -> ModularReport {
        let n = self.rank();
        let s = &data.s;
        let s2 = s * s;
        let d2 = &data.global_dim2;
        let unitary = (s * &s.conj_transpose()).scalar_multiple_of_identity().as_ref() == Some(d2);
        let c = &data.c;
        let permutation = (0..n).all(|i| {
            let row = c.row(i);
            row.iter().filter(|x| !x.is_zero()).count() == 1
                && row.iter().filter(|x| x.is_one()).count() == 1
        });
        let charge_ok = permutation && (c * c).is_identity();
        let st = s * &data.t;
        let st3 = &(&st * &st) * &st;
        let st_ok = st3.proportionality(&s2).is_some_and(|x| !x.is_zero());
        let s4 = &s2 * &s2;
        let s4_ok = s4.scalar_multiple_of_identity().as_ref() == Some(&(d2 * d2));
        let first_col = (0..n).all(|i| s[(i, 0)] == self.qdims[i]);
        ModularReport {
            s_symmetric: *s == s.transpose(),
            s_unitary_up_to_scale: unitary,
            charge_conjugation_ok: charge_ok,
            st_cubed_proportional: st_ok,
            s_fourth_scalar: s4_ok,
            first_column_is_qdims: first_col,
        }
    }

    /// `N_{λμ}^ν = Σ_σ s_{λσ} s_{μσ} conj(s_{νσ}) / (s_{0σ} D²)`, checked
    /// exactly for every triple.
    pub fn verlinde_check(&self, data: &ModularData) -> Result<VerlindeReport, AlcoveError> {
        let n = self.rank();
        let s = &data.s;
        let weights: Vec<CycloNumber> = (0..n)
            .map(|c| (&s[(0, c)] * &data.global_dim2).inv())
            .collect::<Result<_, _>>()?;
        let s_conj: Vec<Vec<CycloNumber>> =
            (0..n).map(|a| (0..n).map(|c| s[(a, c)].conj()).collect()).collect();
        let mut violations = Vec::new();
        let mut checked = 0;
        for a in 0..n {
            for b in a..n {
                let p: Vec<CycloNumber> =
                    (0..n).map(|c| &(&s[(a, c)] * &s[(b, c)]) * &weights[c]).collect();
                for (nu, conj_row) in s_conj.iter().enumerate() {
                    let mut acc = CycloNumber::zero_in(self.order);
                    for c in 0..n {
                        acc.add_product(&p[c], &conj_row[c]);
                    }
                    checked += 1;
                    let expected = self.fusion[a][b][nu];
                    if acc != CycloNumber::from_int(expected as i64) {
                        violations.push(VerlindeViolation {
                            lambda: self.weights[a].clone(),
                            mu: self.weights[b].clone(),
                            nu: self.weights[nu].clone(),
                            expected,
                            verlinde: acc.to_string(),
                        });
                    }
                }
            }
        }
        Ok(VerlindeReport { triples_checked: checked, violations })
    }
}

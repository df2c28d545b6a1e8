//! Braiding of `V_λ ⊗ V` on fusion channels, for every supported type.

use num_rational::Rational64;
use num_traits::One;
use serde::Serialize;

use super::closure::algebra_dimension;
use super::BraidError;
use crate::alcove::AlcoveCategory;
use crate::exact::Matrix;
use crate::lie::Weight;
use crate::CycloNumber;

#[derive(Debug, Clone, Serialize)]
pub struct PairChannel {
    pub nu: Weight,
    /// `ε_ν = (-1)^{height(λ + V - ν)}`
    pub sign: i64,
    /// `(c_ν - c_λ - c_V) / 4ℓ`, so the block scalar is `ε_ν e^{2πi·phase}`.
    pub phase: Rational64,
    pub eigenvalue: CycloNumber,
    /// `θ_ν / (θ_λ θ_V)`
    pub monodromy: CycloNumber,
}

/// Channel scalars of the braiding `V_λ ⊗ V → V ⊗ V_λ`, where `V` is one
/// summand of the defining object.
#[derive(Debug, Clone, Serialize)]
pub struct PairBraiding {
    pub lambda: Weight,
    pub v: Weight,
    pub order: u32,
    pub channels: Vec<PairChannel>,
}

/// `R̄ = R · (monodromy)^{-1/2}` per channel.
#[derive(Debug, Clone, Serialize)]
pub struct CoboundaryMatrix {
    pub lambda: Weight,
    pub v: Weight,
    /// Blocks on the principal branch of the square root.
    pub rbar_blocks: Vec<(Weight, CycloNumber)>,
    /// Blocks on the opposite branch, recorded for comparison.
    pub other_branch: Vec<(Weight, CycloNumber)>,
}

impl CoboundaryMatrix {
    /// `R̄_{Vλ} ∘ R̄_{λV} = 1` on every channel.
    pub fn is_involutive(&self) -> bool {
        self.rbar_blocks.iter().all(|(_, x)| (x * x).is_one())
    }

    /// `x · conj(x) = 1` on every channel.
    pub fn is_unitary(&self) -> bool {
        self.rbar_blocks.iter().all(|(_, x)| (x * &x.conj()).is_one())
    }
}

/// Cyclotomic order carrying every pair-braiding scalar of `cat`.
pub fn pair_order(cat: &AlcoveCategory) -> u32 {
    2 * cat.order
}

/// Braiding of `V_λ` with summand `v_index` of `V`.
pub fn pair_braiding(cat: &AlcoveCategory, lambda: &Weight, v_index: usize) -> Result<PairBraiding, BraidError> {
    let a = cat.index_of(lambda)?;
    let v = *cat
        .v_indices()
        .get(v_index)
        .ok_or_else(|| BraidError::UnsupportedType(format!("no summand {v_index} of V")))?;
    let order = pair_order(cat);
    let four_ell = Rational64::from_integer(4 * cat.ell);
    let c_lambda = cat.rs.casimir(lambda);
    let v_weight = cat.weights[v].clone();
    let c_v = cat.rs.casimir(&v_weight);
    let theta = |i: usize| cat.twists()[i].promote(order);
    let theta_lv = (&theta(a) * &theta(v)).inv()?;
    let mut channels = Vec::new();
    for (c, &m) in cat.fusion[a][v].iter().enumerate() {
        if m == 0 {
            continue;
        }
        let nu = cat.weights[c].clone();
        if m > 1 {
            return Err(BraidError::MultiplicityChannel { lambda: lambda.clone(), nu, multiplicity: m });
        }
        let height = cat
            .rs
            .height(&lambda.add(&v_weight).sub(&nu))
            .expect("channels differ from λ + V by roots");
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let phase = (cat.rs.casimir(&nu) - c_lambda - c_v) / four_ell;
        let e = phase * Rational64::from_integer(order as i64);
        debug_assert!(e.is_integer());
        let eigenvalue = &CycloNumber::from_int(sign) * &CycloNumber::embed_root_of_unity(order, e.to_integer());
        let monodromy = &theta(c) * &theta_lv;
        channels.push(PairChannel { nu, sign, phase, eigenvalue, monodromy });
    }
    Ok(PairBraiding { lambda: lambda.clone(), v: v_weight, order, channels })
}

/// One [`PairBraiding`] per summand of `V`.
pub fn pair_braidings(cat: &AlcoveCategory, lambda: &Weight) -> Result<Vec<PairBraiding>, BraidError> {
    (0..cat.v_indices().len()).map(|i| pair_braiding(cat, lambda, i)).collect()
}

impl PairBraiding {
    /// Squared block scalars equal the monodromy eigenvalues.
    pub fn monodromy_ok(&self) -> bool {
        self.channels.iter().all(|ch| &ch.eigenvalue * &ch.eigenvalue == ch.monodromy)
    }

    pub fn eigenvalues(&self) -> Vec<CycloNumber> {
        self.channels.iter().map(|ch| ch.eigenvalue.clone()).collect()
    }

    /// Dimension of the algebra generated by the braiding on the channel
    /// space, with `λ = V`; equals the number of distinct eigenvalues.
    pub fn image_dimension(&self) -> usize {
        let diag: Vec<Matrix<CycloNumber>> = self
            .channels
            .iter()
            .map(|ch| Matrix::from_rows(vec![vec![ch.eigenvalue.clone()]]))
            .collect();
        let sizes = vec![1; diag.len()];
        algebra_dimension(&sizes, std::slice::from_ref(&diag), std::slice::from_ref(&diag))
    }

    pub fn distinct_eigenvalues(&self) -> bool {
        let ev = self.eigenvalues();
        (0..ev.len()).all(|i| (i + 1..ev.len()).all(|j| ev[i] != ev[j]))
    }
}

/// Drinfeld coboundary: each block scalar times the inverse square root of
/// its monodromy, `q^{-(c_ν - c_λ - c_V)/2}` on the principal branch.
pub fn coboundary(pb: &PairBraiding) -> CoboundaryMatrix {
    let mut rbar_blocks = Vec::new();
    let mut other_branch = Vec::new();
    for ch in &pb.channels {
        let e = (ch.phase * Rational64::from_integer(pb.order as i64)).to_integer();
        let root = CycloNumber::embed_root_of_unity(pb.order, -e);
        let x = &ch.eigenvalue * &root;
        other_branch.push((ch.nu.clone(), -x.clone()));
        rbar_blocks.push((ch.nu.clone(), x));
    }
    CoboundaryMatrix { lambda: pb.lambda.clone(), v: pb.v.clone(), rbar_blocks, other_branch }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairDuality {
    pub v: Weight,
    pub channels: usize,
    pub image_dim: usize,
    pub distinct_eigenvalues: bool,
    pub duality: bool,
    pub eigenvalues: Vec<CycloNumber>,
}

/// Pair-level duality on `V ⊗ V`, one entry per summand of `V`.
pub fn pair_duality(cat: &AlcoveCategory) -> Result<Vec<PairDuality>, BraidError> {
    let mut out = Vec::new();
    for (i, &v) in cat.v_indices().iter().enumerate() {
        let pb = pair_braiding(cat, &cat.weights[v], i)?;
        let image_dim = pb.image_dimension();
        out.push(PairDuality {
            v: pb.v.clone(),
            channels: pb.channels.len(),
            image_dim,
            distinct_eigenvalues: pb.distinct_eigenvalues(),
            duality: image_dim == pb.channels.len(),
            eigenvalues: pb.eigenvalues(),
        });
    }
    Ok(out)
}

//! Classical Lie data for types A, B, C, D and G2.
//!
//! Weights are written in Dynkin labels (fundamental-weight coordinates),
//! roots in simple-root coordinates. The invariant form is normalized so
//! that long roots have squared length 2.

mod reps;
#[cfg(test)]
mod tests;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use reps::{FundamentalRep, Reflection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
            LieType::G2 => "G2",
        })
    }
}

impl FromStr for LieType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, LieError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieType::A),
            "B" => Ok(LieType::B),
            "C" => Ok(LieType::C),
            "D" => Ok(LieType::D),
            "G" | "G2" => Ok(LieType::G2),
            other => Err(LieError::UnknownType(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unsupported Lie type {0:?}")]
    UnknownType(String),
    #[error("inadmissible type/rank pair {lie_type}{rank}")]
    Inadmissible { lie_type: LieType, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} has {got} labels, expected {expected}")]
    RankMismatch { weight: Weight, got: usize, expected: usize },
}

/// An integral weight in Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, LieError> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|e| LieError::UnknownType(format!("bad weight {s:?}: {e}")))
    }
}

type MultiplicityCache = Arc<Mutex<HashMap<Weight, Arc<Vec<(Weight, u64)>>>>>;

/// Cartan data of a simple Lie algebra together with its positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`; row `i` is `α_i` in Dynkin labels.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    pub rho: Weight,
    pub highest_root: Vec<i64>,
    pub dual_coxeter: i64,
    pub ratio_d: i64,
    simple_len2: Vec<Rational64>,
    /// `⟨ω_i, ω_j⟩`
    form: Vec<Vec<Rational64>>,
    cartan_inv: Vec<Vec<Rational64>>,
    /// `⟨ω_i, θ^∨⟩`
    comarks: Vec<i64>,
    root_labels: Vec<Weight>,
    root_len2: Vec<Rational64>,
    multiplicities: MultiplicityCache,
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Gram matrix `(α_i, α_j)` of the simple roots, long roots of length 2.
fn simple_gram(lie_type: LieType, rank: usize) -> Result<Vec<Vec<Rational64>>, LieError> {
    let bad = Err(LieError::Inadmissible { lie_type, rank });
    let n = rank;
    let mut g = vec![vec![Rational64::zero(); n]; n];
    let chain = |g: &mut Vec<Vec<Rational64>>, i: usize, j: usize, v: Rational64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match lie_type {
        LieType::A => {
            if n < 1 {
                return bad;
            }
            for i in 0..n {
                g[i][i] = r(2, 1);
                if i + 1 < n {
                    chain(&mut g, i, i + 1, r(-1, 1));
                }
            }
        }
        LieType::B => {
            if n < 2 {
                return bad;
            }
            for i in 0..n {
                g[i][i] = if i + 1 == n { r(1, 1) } else { r(2, 1) };
                if i + 1 < n {
                    chain(&mut g, i, i + 1, r(-1, 1));
                }
            }
        }
        LieType::C => {
            if n < 2 {
                return bad;
            }
            for i in 0..n {
                g[i][i] = if i + 1 == n { r(2, 1) } else { r(1, 1) };
                if i + 1 < n {
                    let v = if i + 2 == n { r(-1, 1) } else { r(-1, 2) };
                    chain(&mut g, i, i + 1, v);
                }
            }
        }
        LieType::D => {
            if n < 3 {
                return bad;
            }
            for i in 0..n {
                g[i][i] = r(2, 1);
            }
            for i in 0..n - 2 {
                chain(&mut g, i, i + 1, r(-1, 1));
            }
            chain(&mut g, n - 3, n - 1, r(-1, 1));
        }
        LieType::G2 => {
            if n != 2 {
                return bad;
            }
            g[0][0] = r(2, 3);
            g[1][1] = r(2, 1);
            chain(&mut g, 0, 1, r(-1, 1));
        }
    }
    Ok(g)
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            v.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            v
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("Cartan matrix is invertible");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c];
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self, LieError> {
        let gram = simple_gram(lie_type, rank)?;
        let n = rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = gram[i][j] * r(2, 1) / gram[j][j];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let simple_len2: Vec<Rational64> = (0..n).map(|i| gram[i][i]).collect();
        let cartan_inv = invert_rational(&cartan);
        let form = (0..n)
            .map(|i| (0..n).map(|j| cartan_inv[j][i] * simple_len2[i] / r(2, 1)).collect())
            .collect();
        let positive_roots = Self::generate_roots(&cartan);
        let highest_root = positive_roots.last().expect("nonempty root system").clone();
        let comarks: Vec<i64> = highest_root
            .iter()
            .zip(&simple_len2)
            .map(|(&c, l)| (Rational64::from_integer(c) * l / r(2, 1)).to_integer())
            .collect();
        let dual_coxeter = 1 + comarks.iter().sum::<i64>();
        let min_len = simple_len2.iter().min().copied().expect("rank >= 1");
        let ratio_d = (r(2, 1) / min_len).to_integer();
        let root_labels = positive_roots
            .iter()
            .map(|c| {
                Weight((0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect())
            })
            .collect();
        let mut rs = Self {
            lie_type,
            rank,
            cartan,
            positive_roots,
            rho: Weight(vec![1; n]),
            highest_root,
            dual_coxeter,
            ratio_d,
            simple_len2,
            form,
            cartan_inv,
            comarks,
            root_labels,
            root_len2: Vec::new(),
            multiplicities: Arc::new(Mutex::new(HashMap::new())),
        };
        rs.root_len2 = rs
            .root_labels
            .iter()
            .map(|l| rs.inner(l, l))
            .collect();
        Ok(rs)
    }

    fn generate_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = cartan.len();
        let label = |c: &[i64], j: usize| (0..n).map(|i| c[i] * cartan[i][j]).sum::<i64>();
        let mut roots: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut layer = roots.clone();
        while !layer.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // q = length of the α_i-string below β
                    let mut q = 0;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= q + 1;
                        if down.iter().all(|&x| x >= 0) && roots.contains(&down) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let p = q - label(beta, i);
                    if p > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !roots.contains(&up) && !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        roots
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), LieError> {
        if w.rank() != self.rank {
            return Err(LieError::RankMismatch { weight: w.clone(), got: w.rank(), expected: self.rank });
        }
        Ok(())
    }

    /// `⟨λ, μ⟩` in the long-roots-length-2 normalization.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational64 {
        let mut s = Rational64::zero();
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b.0[j] != 0 {
                    s += self.form[i][j] * (a.0[i] * b.0[j]);
                }
            }
        }
        s
    }

    /// `⟨λ, λ + 2ρ⟩`.
    pub fn casimir(&self, w: &Weight) -> Rational64 {
        self.inner(w, &w.add(&self.rho.scaled(2)))
    }

    /// Simple roots in Dynkin labels.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    /// Positive root `k` in Dynkin labels.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.root_labels[k]
    }

    pub fn root_length2(&self, k: usize) -> Rational64 {
        self.root_len2[k]
    }

    pub fn is_long_root(&self, k: usize) -> bool {
        self.root_len2[k] == r(2, 1)
    }

    /// `d_α`: 1 on short roots, `ratio_d` on long ones.
    pub fn root_d(&self, k: usize) -> i64 {
        (self.root_len2[k] * r(self.ratio_d, 2)).to_integer()
    }

    /// `⟨λ, α_k^∨⟩` for positive root `k`.
    pub fn coroot_pairing(&self, w: &Weight, k: usize) -> i64 {
        let c = &self.positive_roots[k];
        let len = self.root_len2[k];
        let s: Rational64 = (0..self.rank)
            .map(|i| Rational64::from_integer(c[i] * w.0[i]) * self.simple_len2[i] / len)
            .sum();
        debug_assert!(s.is_integer());
        s.to_integer()
    }

    /// `⟨λ, θ^∨⟩` for the highest root `θ`; the level of `λ`.
    pub fn level_of(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.comarks).map(|(a, b)| a * b).sum()
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn highest_root_weight(&self) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| self.highest_root[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// Coordinates of `w` in the simple-root basis.
    pub fn simple_root_coords(&self, w: &Weight) -> Vec<Rational64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| self.cartan_inv[i][j] * w.0[i]).sum())
            .collect()
    }

    /// Height `Σ c_i` of a root-lattice element, `None` off the root lattice.
    pub fn height(&self, w: &Weight) -> Option<i64> {
        let c = self.simple_root_coords(w);
        c.iter().all(|x| x.is_integer()).then(|| c.iter().map(|x| x.to_integer()).sum())
    }

    /// `μ ≤ λ` in the dominance order.
    pub fn dominated_by(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.simple_root_coords(&lambda.sub(mu))
            .iter()
            .all(|x| x.is_integer() && !x.is_negative())
    }

    /// Common denominator of `⟨ω_i, ω_j⟩`.
    pub fn form_denominator(&self) -> i64 {
        self.form
            .iter()
            .flatten()
            .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()))
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive_roots.len()
    }

    pub(crate) fn multiplicity_cache(&self) -> &MultiplicityCache {
        &self.multiplicities
    }
}

pub fn build_root_system(lie_type: LieType, rank: usize) -> Result<RootSystem, LieError> {
    RootSystem::new(lie_type, rank)
}

pub(crate) fn to_i64(x: Rational64) -> i64 {
    x.to_i64().expect("integral rational")
}

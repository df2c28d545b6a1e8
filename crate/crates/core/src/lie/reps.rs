//! Representations: dimensions, weight multiplicities, tensor products.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::{LieError, LieType, RootSystem, Weight};

/// Outcome of moving a weight into the (affine) fundamental chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reflection {
    /// Dominant representative and the sign of the Weyl element used.
    Dominant(Weight, i64),
    /// The shifted weight lies on a wall.
    Annihilated,
}

/// The defining object `V`: a single irreducible, or two for `D_n`, `n` even.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FundamentalRep {
    pub summands: Vec<Weight>,
}

impl RootSystem {
    fn reflect_simple(&self, x: &mut [i64], i: usize) {
        let c = x[i];
        for (xj, a) in x.iter_mut().zip(&self.cartan[i]) {
            *xj -= c * a;
        }
    }

    /// Dominant element of the Weyl orbit of `w`, with the parity of the
    /// number of simple reflections used.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, i64) {
        let mut x = w.0.clone();
        let mut sign = 1;
        while let Some(i) = x.iter().position(|&v| v < 0) {
            self.reflect_simple(&mut x, i);
            sign = -sign;
        }
        (Weight(x), sign)
    }

    /// ρ-shifted reflection of `w` into the dominant chamber, or into the
    /// alcove `⟨x, θ^∨⟩ < ell` when `ell` is given.
    pub fn weyl_orbit_reflect(&self, w: &Weight, ell: Option<i64>) -> Reflection {
        let theta = self.highest_root_weight();
        let mut x: Vec<i64> = w.0.iter().map(|v| v + 1).collect();
        let mut sign = 1;
        loop {
            if let Some(i) = x.iter().position(|&v| v < 0) {
                self.reflect_simple(&mut x, i);
                sign = -sign;
                continue;
            }
            if let Some(l) = ell {
                let lev = self.level_of(&Weight(x.clone()));
                if lev > l {
                    let c = lev - l;
                    for (xj, t) in x.iter_mut().zip(&theta.0) {
                        *xj -= c * t;
                    }
                    sign = -sign;
                    continue;
                }
                if lev == l {
                    return Reflection::Annihilated;
                }
            }
            break;
        }
        if x.iter().any(|&v| v == 0) {
            return Reflection::Annihilated;
        }
        Reflection::Dominant(Weight(x.into_iter().map(|v| v - 1).collect()), sign)
    }

    /// `λ* = -w₀λ`.
    pub fn dual(&self, w: &Weight) -> Weight {
        self.to_dominant(&w.neg()).0
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, w: &Weight) -> Result<u64, LieError> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(LieError::NotDominant(w.clone()));
        }
        let shifted = w.add(&self.rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 0..self.positive_roots.len() {
            num *= self.coroot_pairing(&shifted, k);
            den *= self.coroot_pairing(&self.rho, k);
        }
        let q = BigRational::new(num, den);
        debug_assert!(q.is_integer());
        Ok(q.to_integer().to_u64().expect("dimension fits in u64"))
    }

    /// All weights of `V(λ)` with multiplicities, via Freudenthal's formula
    /// on dominant weights. Cached per root system.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<Arc<Vec<(Weight, u64)>>, LieError> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(LieError::NotDominant(lambda.clone()));
        }
        if let Some(hit) = self.multiplicity_cache().lock().expect("cache lock").get(lambda) {
            return Ok(hit.clone());
        }
        let computed = Arc::new(self.freudenthal(lambda));
        self.multiplicity_cache()
            .lock()
            .expect("cache lock")
            .insert(lambda.clone(), computed.clone());
        Ok(computed)
    }

    fn freudenthal(&self, lambda: &Weight) -> Vec<(Weight, u64)> {
        // every weight of V(λ) is reached from λ by lowering with simple roots
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::from([lambda.clone()]);
        seen.insert(lambda.clone());
        let mut dominant_member: HashMap<Weight, bool> = HashMap::new();
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank {
                let nu = mu.sub(&self.simple_root(i));
                if seen.contains(&nu) {
                    continue;
                }
                let (dom, _) = self.to_dominant(&nu);
                let member = *dominant_member
                    .entry(dom.clone())
                    .or_insert_with(|| self.dominated_by(&dom, lambda));
                if member {
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        let mut dominant: Vec<(i64, Weight)> = seen
            .iter()
            .filter(|w| w.is_dominant())
            .map(|w| (self.height(&lambda.sub(w)).expect("root lattice"), w.clone()))
            .collect();
        dominant.sort();
        let two_rho = self.rho.scaled(2);
        let norm = |w: &Weight| self.inner(w, &w.add(&two_rho));
        let top = norm(lambda);
        let mut mult: HashMap<Weight, u64> = HashMap::new();
        for (depth, nu) in dominant {
            if depth == 0 {
                mult.insert(nu, 1);
                continue;
            }
            let mut acc = Rational64::zero();
            for k in 0..self.positive_roots.len() {
                let alpha = self.root_weight(k);
                let mut x = nu.add(alpha);
                while seen.contains(&x) {
                    let m = mult[&self.to_dominant(&x).0];
                    acc += self.inner(&x, alpha) * (m as i64);
                    x = x.add(alpha);
                }
            }
            let gap = top - norm(&nu);
            let m = acc * Rational64::from_integer(2) / gap;
            debug_assert!(m.is_integer());
            mult.insert(nu, super::to_i64(m) as u64);
        }
        let mut out: Vec<(Weight, u64)> = seen
            .into_iter()
            .map(|w| {
                let m = mult[&self.to_dominant(&w).0];
                (w, m)
            })
            .filter(|(_, m)| *m > 0)
            .collect();
        out.sort();
        out
    }

    /// Decomposition of `V(λ) ⊗ V(μ)` by the Klimyk rule; with `ell` given,
    /// the level-truncated (Kac–Walton) product.
    pub fn tensor_product(
        &self,
        lambda: &Weight,
        mu: &Weight,
        ell: Option<i64>,
    ) -> Result<BTreeMap<Weight, u64>, LieError> {
        self.check_weight(lambda)?;
        self.check_weight(mu)?;
        let (big, small) = if self.weyl_dimension(lambda)? >= self.weyl_dimension(mu)? {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let weights = self.weight_multiplicities(small)?;
        let mut signed: BTreeMap<Weight, i64> = BTreeMap::new();
        for (nu, m) in weights.iter() {
            if let Reflection::Dominant(w, s) = self.weyl_orbit_reflect(&big.add(nu), ell) {
                *signed.entry(w).or_insert(0) += s * (*m as i64);
            }
        }
        Ok(signed
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(w, c)| {
                assert!(c > 0, "negative multiplicity in tensor product");
                (w, c as u64)
            })
            .collect())
    }

    /// Highest weights of the defining object `V` of this type.
    pub fn fundamental_rep(&self) -> FundamentalRep {
        let n = self.rank;
        let summands = match self.lie_type {
            LieType::A | LieType::C | LieType::G2 => vec![Weight::fundamental(n, 0)],
            LieType::B => vec![Weight::fundamental(n, n - 1)],
            LieType::D if n % 2 == 1 => vec![Weight::fundamental(n, n - 1)],
            LieType::D => vec![Weight::fundamental(n, n - 2), Weight::fundamental(n, n - 1)],
        };
        FundamentalRep { summands }
    }

    /// `V(λ) ⊗ V`, summed over the summands of `V`.
    pub fn tensor_with_v(&self, lambda: &Weight, ell: Option<i64>) -> Result<BTreeMap<Weight, u64>, LieError> {
        let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
        for v in self.fundamental_rep().summands {
            for (w, m) in self.tensor_product(lambda, &v, ell)? {
                *out.entry(w).or_insert(0) += m;
            }
        }
        Ok(out)
    }
}

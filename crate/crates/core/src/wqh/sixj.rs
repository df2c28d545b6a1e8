//! F- and R-symbols of the `A_1` level-k category.
//!
//! Labels are Dynkin labels `0..=k` (twice the spin). F-symbols follow the
//! splitting-space convention
//! `|a,b;e⟩|e,c;d⟩ = Σ_f F^{abc}_d[e,f] |b,c;f⟩|a,f;d⟩`
//! and are stored in the vertex gauge `u(x,y;z) = 1 / (Δ(x,y,z) √[z+1])`,
//! which removes every square root from the q-Racah formula:
//!
//! `F^{abc}_d[e,f] = (-1)^{(a+b+c+d)/2} [f+1] Δ²(b,c,f) Δ²(a,f,d) Σ_z (…)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use super::WqhError;
use crate::alcove::AlcoveCategory;
use crate::exact::{quantum_integer, Scalar};
use crate::lie::LieType;
use crate::{CycloMatrix, CycloNumber};

/// `(a, b, c, d, e, f)` for `F^{abc}_d[e, f]`.
pub type FKey = [u8; 6];
/// `(a, b, c)` for `R^{ab}_c`, and for vertex scalars `(a, b; c)`.
pub type Triple = [u8; 3];

/// Labels `(x, y, z)` with `z ∈ x ⊗ y` at level `k`.
pub fn admissible(k: u8, x: u8, y: u8, z: u8) -> bool {
    let (x, y, z, k) = (x as i32, y as i32, z as i32, k as i32);
    x <= k && y <= k && z <= k && (x - y).abs() <= z && z <= x + y && (x + y + z) % 2 == 0 && x + y + z <= 2 * k
}

pub fn admissible_fkey(k: u8, key: &FKey) -> bool {
    let [a, b, c, d, e, f] = *key;
    admissible(k, a, b, e) && admissible(k, e, c, d) && admissible(k, b, c, f) && admissible(k, a, f, d)
}

/// All admissible F-symbol keys at level `k`, in lexicographic order.
pub fn fkeys(k: u8) -> Vec<FKey> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            for c in 0..=k {
                for d in 0..=k {
                    for e in 0..=k {
                        for f in 0..=k {
                            let key = [a, b, c, d, e, f];
                            if admissible_fkey(k, &key) {
                                out.push(key);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// All admissible vertex triples at level `k`.
pub fn triples(k: u8) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            for c in 0..=k {
                if admissible(k, a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Quantum integers and factorials at `q = ζ_{2ℓ}`, carried in `Q(ζ_{4ℓ})`.
#[derive(Debug, Clone)]
pub struct QRacah {
    pub level: u8,
    pub ell: i64,
    pub order: u32,
    pub q: CycloNumber,
    qint: Vec<CycloNumber>,
    qfact: Vec<CycloNumber>,
}

impl QRacah {
    pub fn new(level: u8) -> Self {
        let ell = level as i64 + 2;
        let order = 4 * ell as u32;
        let q = CycloNumber::embed_root_of_unity(order, 2);
        let top = 2 * level as usize + 3;
        let qint: Vec<CycloNumber> =
            (0..=top as i64).map(|n| quantum_integer(n, &q).expect("q ≠ ±1")).collect();
        let mut qfact = vec![CycloNumber::one()];
        for n in 1..=top {
            let next = &qfact[n - 1] * &qint[n];
            qfact.push(next);
        }
        Self { level, ell, order, q, qint, qfact }
    }

    pub fn qint(&self, n: usize) -> &CycloNumber {
        &self.qint[n]
    }

    fn fact(&self, n: i64) -> &CycloNumber {
        &self.qfact[n as usize]
    }

    /// `Δ²(x, y, z) = [(x+y-z)/2]! [(x-y+z)/2]! [(-x+y+z)/2]! / [(x+y+z)/2 + 1]!`.
    pub fn delta_sq(&self, x: u8, y: u8, z: u8) -> Result<CycloNumber, WqhError> {
        let (x, y, z) = (x as i64, y as i64, z as i64);
        let num = &(self.fact((x + y - z) / 2) * self.fact((x - y + z) / 2)) * self.fact((-x + y + z) / 2);
        Ok(&num * &self.fact((x + y + z) / 2 + 1).inv()?)
    }

    /// F-symbol in the square-root-free gauge.
    pub fn f_symbol(&self, key: &FKey) -> Result<CycloNumber, WqhError> {
        if !admissible_fkey(self.level, key) {
            return Err(WqhError::Inadmissible(key.to_vec()));
        }
        let [a, b, c, d, e, f] = key.map(|x| x as i64);
        let alphas = [(a + b + e) / 2, (e + c + d) / 2, (b + c + f) / 2, (a + f + d) / 2];
        let betas = [(a + b + c + d) / 2, (a + c + e + f) / 2, (b + d + e + f) / 2];
        let lo = *alphas.iter().max().expect("nonempty");
        let hi = *betas.iter().min().expect("nonempty");
        let mut sum = CycloNumber::zero_in(self.order);
        for z in lo..=hi {
            let mut den = CycloNumber::one();
            for al in alphas {
                den = &den * self.fact(z - al);
            }
            for be in betas {
                den = &den * self.fact(be - z);
            }
            let term = self.fact(z + 1) * &den.inv()?;
            if z % 2 == 0 {
                sum.add_assign_ref(&term);
            } else {
                sum.sub_assign_ref(&term);
            }
        }
        let sign = if ((a + b + c + d) / 2) % 2 == 0 { 1 } else { -1 };
        let [_, b8, c8, _, _, f8] = *key;
        let pref = &(&self.delta_sq(b8, c8, f8)? * &self.delta_sq(key[0], f8, key[3])?) * &self.qint[f as usize + 1];
        Ok(&(&pref * &sum) * &CycloNumber::from_int(sign))
    }

    /// `R^{ab}_c = (-1)^{(a+b-c)/2} q^{(c(c+2) - a(a+2) - b(b+2))/4}`.
    pub fn r_symbol(&self, a: u8, b: u8, c: u8) -> Result<CycloNumber, WqhError> {
        if !admissible(self.level, a, b, c) {
            return Err(WqhError::Inadmissible(vec![a, b, c]));
        }
        let (a, b, c) = (a as i64, b as i64, c as i64);
        let e = c * (c + 2) - a * (a + 2) - b * (b + 2);
        // q^{e/4} = ζ_{4ℓ}^{e/2}
        let z = CycloNumber::embed_root_of_unity(self.order, e / 2);
        Ok(if ((a + b - c) / 2) % 2 == 0 { z } else { -z })
    }

    /// Squared vertex normalization `u(x,y;z)^{-2} = Δ²(x,y,z) [z+1]`.
    pub fn vertex_weight_inv(&self, x: u8, y: u8, z: u8) -> Result<CycloNumber, WqhError> {
        Ok(&self.delta_sq(x, y, z)? * &self.qint[z as usize + 1])
    }
}

/// `F^{abc}_d[e,f]` computed by the q-Racah formula for a level-k `A_1`
/// category.
pub fn qsixj(cat: &AlcoveCategory, key: &FKey) -> Result<CycloNumber, WqhError> {
    QRacah::new(a1_level(cat)?).f_symbol(key)
}

/// `R^{ab}_c` for a level-k `A_1` category.
pub fn rsymbol(cat: &AlcoveCategory, a: u8, b: u8, c: u8) -> Result<CycloNumber, WqhError> {
    QRacah::new(a1_level(cat)?).r_symbol(a, b, c)
}

pub(crate) fn a1_level(cat: &AlcoveCategory) -> Result<u8, WqhError> {
    if cat.lie_type() != LieType::A || cat.rs.rank != 1 {
        return Err(WqhError::UnsupportedType(format!("{}{}", cat.lie_type(), cat.rs.rank)));
    }
    u8::try_from(cat.level).map_err(|_| WqhError::UnsupportedType(format!("level {}", cat.level)))
}

/// Channel scalars `j(a, b; c)` on fusion vertices. Missing entries are 1.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TwistData {
    pub j: BTreeMap<Triple, CycloNumber>,
}

impl TwistData {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn get(&self, t: &Triple) -> CycloNumber {
        self.j.get(t).cloned().unwrap_or_else(CycloNumber::one)
    }

    pub fn inverse(&self) -> Result<Self, WqhError> {
        let mut j = BTreeMap::new();
        for (t, x) in &self.j {
            if x.is_zero() {
                return Err(WqhError::SingularTwist(t.to_vec()));
            }
            j.insert(*t, x.inv()?);
        }
        Ok(Self { j })
    }

    pub fn is_invertible(&self) -> bool {
        self.j.values().all(|x| !x.is_zero())
    }
}

/// F- and R-symbols of a multiplicity-free `A_1` table.
#[derive(Debug, Clone, PartialEq)]
pub struct SixJTable {
    pub level: u8,
    pub f: BTreeMap<FKey, CycloNumber>,
    pub r: BTreeMap<Triple, CycloNumber>,
}

impl SixJTable {
    pub fn new(cat: &AlcoveCategory) -> Result<Self, WqhError> {
        Self::q_racah(a1_level(cat)?)
    }

    pub fn q_racah(level: u8) -> Result<Self, WqhError> {
        let qr = QRacah::new(level);
        let mut f = BTreeMap::new();
        for key in fkeys(level) {
            f.insert(key, qr.f_symbol(&key)?);
        }
        let mut r = BTreeMap::new();
        for [a, b, c] in triples(level) {
            r.insert([a, b, c], qr.r_symbol(a, b, c)?);
        }
        Ok(Self { level, f, r })
    }

    pub fn f(&self, key: &FKey) -> &CycloNumber {
        &self.f[key]
    }

    pub fn r(&self, a: u8, b: u8, c: u8) -> &CycloNumber {
        &self.r[&[a, b, c]]
    }

    /// Channel labels `e` with `(a,b;e)` and `(e,c;d)` admissible.
    pub fn left_channels(&self, a: u8, b: u8, c: u8, d: u8) -> Vec<u8> {
        (0..=self.level)
            .filter(|&e| admissible(self.level, a, b, e) && admissible(self.level, e, c, d))
            .collect()
    }

    /// Channel labels `f` with `(b,c;f)` and `(a,f;d)` admissible.
    pub fn right_channels(&self, a: u8, b: u8, c: u8, d: u8) -> Vec<u8> {
        (0..=self.level)
            .filter(|&f| admissible(self.level, b, c, f) && admissible(self.level, a, f, d))
            .collect()
    }

    /// The matrix `F^{abc}_d` with rows `e` and columns `f`.
    pub fn f_matrix(&self, a: u8, b: u8, c: u8, d: u8) -> CycloMatrix {
        let es = self.left_channels(a, b, c, d);
        let fs = self.right_channels(a, b, c, d);
        CycloMatrix::from_fn(es.len(), fs.len(), |i, j| self.f[&[a, b, c, d, es[i], fs[j]]].clone())
    }

    /// Twisted table: `F_J[e,f] = F[e,f] j(b,c;f) j(a,f;d) / (j(a,b;e) j(e,c;d))`
    /// and `R_J^{ab}_c = R^{ab}_c j(b,a;c) / j(a,b;c)`.
    pub fn twisted(&self, tw: &TwistData) -> Result<Self, WqhError> {
        if !tw.is_invertible() {
            return Err(WqhError::SingularTwist(Vec::new()));
        }
        let inv: HashMap<Triple, CycloNumber> =
            tw.j.iter().map(|(t, x)| Ok((*t, x.inv()?))).collect::<Result<_, WqhError>>()?;
        let jinv = |t: Triple| inv.get(&t).cloned().unwrap_or_else(CycloNumber::one);
        let mut f = BTreeMap::new();
        for (key, x) in &self.f {
            let [a, b, c, d, e, ff] = *key;
            let num = &tw.get(&[b, c, ff]) * &tw.get(&[a, ff, d]);
            let den = &jinv([a, b, e]) * &jinv([e, c, d]);
            f.insert(*key, &(x * &num) * &den);
        }
        let mut r = BTreeMap::new();
        for (t, x) in &self.r {
            let [a, b, c] = *t;
            r.insert(*t, &(x * &tw.get(&[b, a, c])) * &jinv([a, b, c]));
        }
        Ok(Self { level: self.level, f, r })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump<'a> {
            level: u8,
            convention: &'static str,
            #[serde(rename = "F")]
            f: BTreeMap<String, &'a CycloNumber>,
            #[serde(rename = "R")]
            r: BTreeMap<String, &'a CycloNumber>,
        }
        let key = |k: &[u8]| k.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        serde_json::to_value(Dump {
            level: self.level,
            convention: "F[a,b,c,d,e,f]: (ab)c -> a(bc), e in a*b, f in b*c; vertex gauge 1/(Delta sqrt[z+1])",
            f: self.f.iter().map(|(k, v)| (key(k), v)).collect(),
            r: self.r.iter().map(|(k, v)| (key(k), v)).collect(),
        })
        .expect("table serializes")
    }
}

//! Elements of cyclotomic fields `Q(ζ_N)` over the power basis
//! `1, ζ, …, ζ^{φ(N)-1}`, reduced modulo the `N`-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::Matrix;
use super::scalar::{parse_rational, rational_to_string, Conjugate, Scalar};
use super::ExactError;

/// Precomputed data for one cyclotomic field.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    phi: usize,
    /// Nonzero non-leading coefficients `(i, a_i)` of the monic `Φ_N`.
    tail: Vec<(usize, i64)>,
    /// `powers[k]` is `ζ^k` reduced, for `0 <= k < N`.
    powers: Vec<Vec<i64>>,
}

static FIELDS: LazyLock<Mutex<HashMap<u32, Arc<CycloField>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for m in (dd..num.len()).rev() {
        let c = rem[m];
        if c == 0 {
            continue;
        }
        quot[m - dd] = c;
        for (i, &a) in den.iter().enumerate() {
            rem[m - dd + i] -= c * a;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn cyclotomic_poly(n: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_poly(d, cache);
            p = poly_div_exact(&p, &q);
        }
    }
    cache.insert(n, p.clone());
    p
}

impl CycloField {
    fn build(order: u32) -> Self {
        let mut cache = HashMap::new();
        let poly = cyclotomic_poly(order, &mut cache);
        let phi = poly.len() - 1;
        let tail: Vec<(usize, i64)> = poly[..phi]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce the overflowing top coefficient
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..phi - 1]);
            if top != 0 {
                for &(i, a) in &tail {
                    next[i] -= top * a;
                }
            }
            cur = next;
        }
        Self { order, phi, tail, powers }
    }

    pub fn get(order: u32) -> Arc<CycloField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut fields = FIELDS.lock().expect("field cache poisoned");
        fields
            .entry(order)
            .or_insert_with(|| Arc::new(CycloField::build(order)))
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Euler's totient of the order: the degree of the field.
    pub fn degree(&self) -> usize {
        self.phi
    }
}

/// Element of `Q(ζ_N)` with coefficients in `T`.
#[derive(Clone)]
pub struct Cyclo<T> {
    field: Arc<CycloField>,
    coeffs: Vec<T>,
}

impl<T: Scalar> Cyclo<T> {
    pub fn zero_in(order: u32) -> Self {
        let field = CycloField::get(order);
        let coeffs = vec![T::zero(); field.phi];
        Self { field, coeffs }
    }

    pub fn from_scalar_in(order: u32, value: T) -> Self {
        let mut x = Self::zero_in(order);
        x.coeffs[0] = value;
        x
    }

    pub fn from_scalar(value: T) -> Self {
        Self::from_scalar_in(1, value)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_scalar(T::from_i64(n).expect("integer conversion"))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_scalar(T::from_ratio(num, den))
    }

    /// Builds an element from raw power-basis coefficients, reducing as needed.
    pub fn from_coeffs(order: u32, coeffs: Vec<T>) -> Self {
        let field = CycloField::get(order);
        let mut x = Self { field, coeffs };
        x.reduce();
        x
    }

    /// `ζ_N^k`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let field = CycloField::get(order);
        let idx = k.rem_euclid(order as i64) as usize;
        let coeffs = field.powers[idx]
            .iter()
            .map(|&c| T::from_i64(c).expect("integer conversion"))
            .collect();
        Self { field, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    fn reduce(&mut self) {
        let phi = self.field.phi;
        if self.coeffs.len() < phi {
            self.coeffs.resize(phi, T::zero());
            return;
        }
        for m in (phi..self.coeffs.len()).rev() {
            if self.coeffs[m].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut self.coeffs[m], T::zero());
            for &(i, a) in &self.field.tail {
                let slot = &mut self.coeffs[m - phi + i];
                match a {
                    1 => slot.sub_assign_ref(&c),
                    -1 => slot.add_assign_ref(&c),
                    _ => {
                        let prod = c.mul_ref(&T::from_i64(a).expect("integer conversion"));
                        slot.sub_assign_ref(&prod);
                    }
                }
            }
        }
        self.coeffs.truncate(phi);
    }

    /// Re-expresses `self` in `Q(ζ_M)`; `M` must be a multiple of the order.
    pub fn promote(&self, order: u32) -> Self {
        if order == self.order() {
            return self.clone();
        }
        assert!(
            order % self.order() == 0,
            "cannot promote order {} to {}",
            self.order(),
            order
        );
        let step = (order / self.order()) as usize;
        let field = CycloField::get(order);
        let mut coeffs = vec![T::zero(); field.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in coeffs.iter_mut().zip(&field.powers[(j * step) % order as usize]) {
                match p {
                    0 => {}
                    1 => slot.add_assign_ref(c),
                    -1 => slot.sub_assign_ref(c),
                    _ => slot.add_product(c, &T::from_i64(p).expect("integer conversion")),
                }
            }
        }
        Self { field, coeffs }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.order().lcm(&b.order());
        (a.promote(m), b.promote(m))
    }

    /// Returns the value as a scalar when it lies in `Q`.
    pub fn as_rational(&self) -> Option<&T> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn scale(&self, s: &T) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(s)).collect(),
        }
    }

    fn single_term(&self) -> Option<(usize, &T)> {
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((i, c));
            }
        }
        found
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some((k, c)) = self.single_term() {
            let inv_root = Self::root_of_unity(self.order(), -(k as i64));
            return Ok(inv_root.scale(&(T::one() / c.clone())));
        }
        // Solve (x · y) = 1 as a linear system over T.
        let phi = self.field.phi;
        let zeta = Self::root_of_unity(self.order(), 1);
        let mut col = self.clone();
        let mut m = Matrix::<T>::zeros(phi, phi);
        for j in 0..phi {
            for i in 0..phi {
                m[(i, j)] = col.coeffs[i].clone();
            }
            if j + 1 < phi {
                col = &col * &zeta;
            }
        }
        let mut rhs = vec![T::zero(); phi];
        rhs[0] = T::one();
        let y = m.solve_vector(&rhs).ok_or(ExactError::DivisionByZero)?;
        Ok(Self { field: self.field.clone(), coeffs: y })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::from_scalar_in(self.order(), T::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Complex conjugation, the automorphism `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.order() as usize;
        let mut coeffs = vec![T::zero(); self.field.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in coeffs.iter_mut().zip(&self.field.powers[(n - j) % n]) {
                match p {
                    0 => {}
                    1 => slot.add_assign_ref(c),
                    -1 => slot.sub_assign_ref(c),
                    _ => slot.add_product(c, &T::from_i64(p).expect("integer conversion")),
                }
            }
        }
        Self { field: self.field.clone(), coeffs }
    }

    /// `x · conj(x)`, a non-negative real.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Image under the canonical embedding `ζ_N ↦ e^{2πi/N}`.
    pub fn to_complex64(&self) -> Complex64 {
        let n = self.order() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }
}

impl Cyclo<BigRational> {
    /// `ζ_N^k` with exact rational coefficients.
    pub fn embed_root_of_unity(order: u32, k: i64) -> Self {
        Self::root_of_unity(order, k)
    }

    /// Arbitrary precision image under the canonical embedding, carrying
    /// roughly `digits` correct decimal digits.
    pub fn to_float(&self, digits: usize) -> ComplexFloat {
        let bits = precision_bits(digits);
        let (re, im) = self.embed_big(bits);
        ComplexFloat { re, im, digits }
    }

    fn embed_big(&self, bits: usize) -> (BigFloat, BigFloat) {
        let rm = RoundingMode::ToEven;
        let mut cc = Consts::new().expect("astro-float constants");
        let two_pi = cc.pi(bits, rm).mul(&BigFloat::from_u8(2, bits), bits, rm);
        let n = BigFloat::from_u32(self.order(), bits);
        let mut re = BigFloat::from_u8(0, bits);
        let mut im = BigFloat::from_u8(0, bits);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = big_rational(c, bits, &mut cc);
            let theta = two_pi.mul(&BigFloat::from_u64(j as u64, bits), bits, rm).div(&n, bits, rm);
            let cos = theta.cos(bits, rm, &mut cc);
            let sin = theta.sin(bits, rm, &mut cc);
            re = re.add(&cf.mul(&cos, bits, rm), bits, rm);
            im = im.add(&cf.mul(&sin, bits, rm), bits, rm);
        }
        (re, im)
    }

    /// Decides whether the value is a strictly positive real number.
    ///
    /// Reality is decided exactly; the sign is certified by evaluating at
    /// increasing precision until the value clears the rounding error bound.
    pub fn is_real_positive(&self) -> Result<bool, ExactError> {
        if self.is_zero() {
            return Err(ExactError::Indeterminate);
        }
        if !self.is_real() {
            return Ok(false);
        }
        if let Some(r) = self.as_rational() {
            return Ok(r.is_positive());
        }
        let l1: f64 = self.coeffs.iter().map(|c| c.abs().to_f64().unwrap_or(f64::MAX)).sum();
        let mut bits = 128;
        loop {
            let (re, _) = self.embed_big(bits);
            // each term carries a few ulps of error
            let slack = (self.coeffs.len() as f64 + 4.0) * l1.max(1.0);
            let err = BigFloat::from_f64(slack, bits).mul(
                &BigFloat::from_f64(2f64.powi(-(bits as i32) + 16), bits),
                bits,
                RoundingMode::Up,
            );
            if let Some(std::cmp::Ordering::Greater) = re.abs().cmp(&err).map(|c| c.cmp(&0)) {
                return Ok(re.is_positive());
            }
            if bits > 1 << 16 {
                return Err(ExactError::Indeterminate);
            }
            bits *= 2;
        }
    }
}

fn precision_bits(digits: usize) -> usize {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize + 64
}

fn big_rational(r: &BigRational, bits: usize, cc: &mut Consts) -> BigFloat {
    let rm = RoundingMode::ToEven;
    let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, bits, rm, cc);
    let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, bits, rm, cc);
    n.div(&d, bits, rm)
}

/// An arbitrary-precision complex number.
#[derive(Debug, Clone)]
pub struct ComplexFloat {
    pub re: BigFloat,
    pub im: BigFloat,
    pub digits: usize,
}

impl ComplexFloat {
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(big_to_f64(&self.re), big_to_f64(&self.im))
    }

    /// `|self - other|` evaluated at this value's precision.
    pub fn distance(&self, other: &ComplexFloat) -> f64 {
        let bits = precision_bits(self.digits.max(other.digits));
        let rm = RoundingMode::ToEven;
        let dr = self.re.sub(&other.re, bits, rm);
        let di = self.im.sub(&other.im, bits, rm);
        let sq = dr.mul(&dr, bits, rm).add(&di.mul(&di, bits, rm), bits, rm);
        big_to_f64(&sq.sqrt(bits, rm))
    }

    pub fn mul(&self, other: &ComplexFloat) -> ComplexFloat {
        let digits = self.digits.min(other.digits);
        let bits = precision_bits(self.digits.max(other.digits));
        let rm = RoundingMode::ToEven;
        let re = self
            .re
            .mul(&other.re, bits, rm)
            .sub(&self.im.mul(&other.im, bits, rm), bits, rm);
        let im = self
            .re
            .mul(&other.im, bits, rm)
            .add(&self.im.mul(&other.re, bits, rm), bits, rm);
        ComplexFloat { re, im, digits }
    }
}

fn big_to_f64(x: &BigFloat) -> f64 {
    let mut cc = Consts::new().expect("astro-float constants");
    x.format(Radix::Dec, RoundingMode::ToEven, &mut cc)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(f64::NAN)
}

impl fmt::Display for ComplexFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cc = Consts::new().map_err(|_| fmt::Error)?;
        let rm = RoundingMode::ToEven;
        let re = self.re.format(Radix::Dec, rm, &mut cc).map_err(|_| fmt::Error)?;
        let im = self.im.format(Radix::Dec, rm, &mut cc).map_err(|_| fmt::Error)?;
        write!(f, "{re} + {im}i")
    }
}

impl<T: Scalar> PartialEq for Cyclo<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl<T: Scalar> fmt::Debug for Cyclo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}](", self.order())?;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c:?}")?,
                _ => write!(f, "{c:?}·z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Cyclo<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = rational_to_string(&c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (j, mag.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "z{n}")?,
                (_, "1") => write!(f, "z{n}^{j}")?,
                (1, m) => write!(f, "{m}*z{n}")?,
                (_, m) => write!(f, "{m}*z{n}^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Scalar> Add for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn add(self, rhs: Self) -> Cyclo<T> {
        if self.order() == rhs.order() {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| {
                    let mut s = a.clone();
                    s.add_assign_ref(b);
                    s
                })
                .collect();
            return Cyclo { field: self.field.clone(), coeffs };
        }
        if let Some(r) = rhs.as_rational().filter(|_| rhs.order() == 1) {
            let mut out = self.clone();
            out.coeffs[0].add_assign_ref(r);
            return out;
        }
        if let Some(r) = self.as_rational().filter(|_| self.order() == 1) {
            let mut out = rhs.clone();
            out.coeffs[0].add_assign_ref(r);
            return out;
        }
        let (a, b) = Cyclo::common(self, rhs);
        &a + &b
    }
}

impl<T: Scalar> Sub for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn sub(self, rhs: Self) -> Cyclo<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn neg(self) -> Cyclo<T> {
        Cyclo {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn mul(self, rhs: Self) -> Cyclo<T> {
        if self.order() != rhs.order() {
            if rhs.order() == 1 {
                return self.scale(&rhs.coeffs[0]);
            }
            if self.order() == 1 {
                return rhs.scale(&self.coeffs[0]);
            }
            let (a, b) = Cyclo::common(self, rhs);
            return &a * &b;
        }
        let phi = self.field.phi;
        let mut out = vec![T::zero(); 2 * phi - 1];
        let rhs_nz: Vec<(usize, &T)> =
            rhs.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_nz {
                out[i + j].add_product(a, b);
            }
        }
        let mut x = Cyclo { field: self.field.clone(), coeffs: out };
        x.reduce();
        x
    }
}

impl<T: Scalar> Div for &Cyclo<T> {
    type Output = Cyclo<T>;

    fn div(self, rhs: Self) -> Cyclo<T> {
        self * &rhs.inv().expect("division by zero in cyclotomic field")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Cyclo<T> {
            type Output = Cyclo<T>;

            fn $m(self, rhs: Self) -> Cyclo<T> {
                (&self).$m(&rhs)
            }
        }

        impl<T: Scalar> $tr<&Cyclo<T>> for Cyclo<T> {
            type Output = Cyclo<T>;

            fn $m(self, rhs: &Cyclo<T>) -> Cyclo<T> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<T: Scalar> Neg for Cyclo<T> {
    type Output = Cyclo<T>;

    fn neg(self) -> Cyclo<T> {
        -&self
    }
}

impl<T: Scalar> Rem for Cyclo<T> {
    type Output = Cyclo<T>;

    /// Field elements divide exactly; the remainder is always zero.
    fn rem(self, _rhs: Self) -> Cyclo<T> {
        Cyclo::zero()
    }
}

impl<T: Scalar> Zero for Cyclo<T> {
    fn zero() -> Self {
        Self::zero_in(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<T: Scalar> One for Cyclo<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: Scalar> Num for Cyclo<T> {
    type FromStrRadixErr = ExactError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ExactError> {
        let v = i64::from_str_radix(s, radix).map_err(|e| ExactError::Parse(e.to_string()))?;
        Ok(Self::from_int(v))
    }
}

impl<T: Scalar> FromPrimitive for Cyclo<T> {
    fn from_i64(n: i64) -> Option<Self> {
        T::from_i64(n).map(Self::from_scalar)
    }

    fn from_u64(n: u64) -> Option<Self> {
        T::from_u64(n).map(Self::from_scalar)
    }

    fn from_f64(n: f64) -> Option<Self> {
        T::from_f64(n).map(Self::from_scalar)
    }
}

impl<T: Scalar> ToPrimitive for Cyclo<T> {
    fn to_i64(&self) -> Option<i64> {
        self.as_rational().and_then(ToPrimitive::to_i64)
    }

    fn to_u64(&self) -> Option<u64> {
        self.as_rational().and_then(ToPrimitive::to_u64)
    }

    fn to_f64(&self) -> Option<f64> {
        let z = self.to_complex64();
        (z.im.abs() < 1e-12 * (1.0 + z.re.abs())).then_some(z.re)
    }
}

impl<T: Scalar> Scalar for Cyclo<T> {
    const EXACT: bool = T::EXACT;

    fn is_negligible(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_negligible)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.order() == rhs.order() {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                a.add_assign_ref(b);
            }
        } else {
            *self = &*self + rhs;
        }
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        if self.order() == rhs.order() {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                a.sub_assign_ref(b);
            }
        } else {
            *self = &*self - rhs;
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_scalar(T::from_ratio(num, den))
    }

    fn abs_f64(&self) -> f64 {
        self.to_complex64().norm()
    }
}

impl<T: Scalar> Conjugate for Cyclo<T> {
    fn conj(&self) -> Self {
        Cyclo::conj(self)
    }
}

/// `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`, evaluated as the Laurent sum
/// `q^{n-1} + q^{n-3} + … + q^{1-n}`.
pub fn quantum_integer<T: Scalar>(n: i64, q: &Cyclo<T>) -> Result<Cyclo<T>, ExactError> {
    let q_inv = q.inv()?;
    if *q == q_inv {
        return Err(ExactError::DivisionByZero);
    }
    if n < 0 {
        return Ok(-quantum_integer(-n, q)?);
    }
    if n == 0 {
        return Ok(Cyclo::zero_in(q.order()));
    }
    let q2 = q * q;
    let mut term = q_inv.pow(n - 1)?;
    let mut acc = term.clone();
    for _ in 1..n {
        term = &term * &q2;
        acc.add_assign_ref(&term);
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclo<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo<BigRational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = CycloRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let phi = CycloField::get(repr.order).degree();
        if coeffs.len() > 2 * phi.max(1) + repr.order as usize {
            return Err(D::Error::custom("too many coefficients"));
        }
        Ok(Cyclo::from_coeffs(repr.order, coeffs))
    }
}

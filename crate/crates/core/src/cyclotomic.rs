//! Exact arithmetic in the cyclotomic field `Q(ζ)` with `ζ` a primitive
//! `2p`-th root of unity.
//!
//! The field is realised as `Q[x]/Φ_{2p}(x)`. Every [`CycNum`] stores the
//! unique reduced residue (degree `< φ(2p)`), so two numbers are equal exactly
//! when their coefficient vectors are equal. The deformation parameter of the
//! quantum group is `q = ζ`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{param, Error, Result};

/// Coefficient domain: arbitrary-precision rationals in lowest terms.
pub type Rational = BigRational;

/// A polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = -Rational::one();
        c[n] = Rational::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                let shift = top - dd;
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &c * d;
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Extended Euclid: returns `(g, s)` with `s * self ≡ g (mod modulus)`,
    /// `g` the monic gcd.
    pub fn ext_gcd_mod(&self, modulus: &Self) -> Result<(Self, Self)> {
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus)?.1);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let lead = r0.leading().ok_or(Error::DivisionByZero)?.clone();
        let inv = Rational::one() / lead;
        Ok((r0.scale(&inv), s0.scale(&inv)))
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().cloned().enumerate(), "x")
    }
}

fn write_poly(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, Rational)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<usize, RationalPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, RationalPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial `Φ_n`, obtained by dividing `x^n - 1` by
/// `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: usize) -> Result<RationalPoly> {
    if n == 0 {
        return Err(param("cyclotomic polynomial index must be >= 1"));
    }
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let mut acc = RationalPoly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = acc.div_rem(&cyclotomic_polynomial(d)?)?;
        debug_assert!(r.is_zero());
        acc = q;
    }
    cyclotomic_cache().lock().unwrap().insert(n, acc.clone());
    Ok(acc)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// The field `Q(ζ_{2p})` together with the reduction data needed for fast
/// multiplication.
#[derive(Debug)]
pub struct CycField {
    p: u32,
    degree: usize,
    modulus: RationalPoly,
    /// Reduced coordinates of `x^k` for `0 <= k < 2*degree - 1`.
    reduce: Vec<Vec<BigInt>>,
    /// Reduced coordinates of `ζ^k` for `0 <= k < 2p`.
    zeta_pows: Vec<Vec<BigInt>>,
}

impl CycField {
    /// Shared handle for the field attached to `p` (cached per `p`).
    pub fn new(p: u32) -> Result<Arc<CycField>> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
        if p < 2 {
            return Err(param(format!("p must be >= 2, got {p}")));
        }
        let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = fields.lock().unwrap().get(&p) {
            return Ok(f.clone());
        }
        let field = Arc::new(Self::build(p)?);
        Ok(fields.lock().unwrap().entry(p).or_insert(field).clone())
    }

    fn build(p: u32) -> Result<CycField> {
        let modulus = cyclotomic_polynomial(2 * p as usize)?;
        let degree = modulus.degree().unwrap();
        // Φ is monic with integer coefficients: x^d = -Σ_{i<d} m_i x^i.
        let low: Vec<BigInt> = modulus.coeffs()[..degree]
            .iter()
            .map(|c| -c.to_integer())
            .collect();
        let shift = |v: &[BigInt]| -> Vec<BigInt> {
            let top = v[degree - 1].clone();
            let mut out = Vec::with_capacity(degree);
            out.push(&top * &low[0]);
            for i in 1..degree {
                out.push(&v[i - 1] + &top * &low[i]);
            }
            out
        };
        let unit = |i: usize| -> Vec<BigInt> {
            (0..degree).map(|j| BigInt::from((i == j) as i32)).collect()
        };
        let mut reduce = Vec::with_capacity(2 * degree);
        let mut cur = unit(0);
        for k in 0..(2 * degree).saturating_sub(1).max(1) {
            if k > 0 {
                cur = shift(&cur);
            }
            reduce.push(cur.clone());
        }
        let mut zeta_pows = Vec::with_capacity(2 * p as usize);
        let mut cur = unit(0);
        for k in 0..2 * p as usize {
            if k > 0 {
                cur = shift(&cur);
            }
            zeta_pows.push(cur.clone());
        }
        Ok(CycField { p, degree, modulus, reduce, zeta_pows })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `φ(2p)`, the number of stored coefficients.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `Φ_{2p}`.
    pub fn modulus(&self) -> &RationalPoly {
        &self.modulus
    }
}

/// An element of `Q(ζ_{2p})`.
///
/// Stored as integer numerators over one positive common denominator, in
/// lowest terms; zero is `[0, …, 0] / 1`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(field: &Arc<CycField>) -> Self {
        CycNum {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CycField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycField>, n: i64) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_rational(field: &Arc<CycField>, r: &Rational) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z
    }

    /// Build from rational coordinates in the power basis `1, ζ, ζ², …`.
    /// Any length is accepted; higher powers are reduced modulo `Φ_{2p}`.
    pub fn from_coeffs(field: &Arc<CycField>, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut raw: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if raw.is_empty() {
            raw.push(BigInt::zero());
        }
        let mut out = Self::reduce_raw(field, &raw);
        out.den = den;
        out.normalize();
        out
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> Self {
        let n = 2 * field.p as i64;
        let idx = k.rem_euclid(n) as usize;
        CycNum {
            field: field.clone(),
            num: field.zeta_pows[idx].clone(),
            den: BigInt::one(),
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Returns the value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Rational coordinates in the power basis, lowest degree first; length `φ(2p)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|n| Rational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn check_same_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.p == other.field.p {
            Ok(())
        } else {
            Err(Error::MismatchedP { left: self.field.p, right: other.field.p })
        }
    }

    fn reduce_raw(field: &Arc<CycField>, raw: &[BigInt]) -> Self {
        let d = field.degree;
        let mut num = vec![BigInt::zero(); d];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                num[k] += c;
            } else if k < field.reduce.len() {
                for (slot, r) in num.iter_mut().zip(&field.reduce[k]) {
                    if !r.is_zero() {
                        *slot += c * r;
                    }
                }
            } else {
                // Only reached from `from_coeffs` with long inputs.
                let k_mod = k % (2 * field.p as usize);
                for (slot, r) in num.iter_mut().zip(&field.zeta_pows[k_mod]) {
                    if !r.is_zero() {
                        *slot += c * r;
                    }
                }
            }
        }
        CycNum { field: field.clone(), num, den: BigInt::one() }
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for n in &mut self.num {
                *n = -&*n;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                return;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for n in &mut self.num {
                *n /= &g;
            }
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        assert_same_field(self, other);
        let num = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        let mut out = CycNum { field: self.field.clone(), num, den };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert_same_field(self, other);
        if self.is_zero() || other.is_zero() {
            return CycNum::zero(&self.field);
        }
        let d = self.field.degree;
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out = Self::reduce_raw(&self.field, &raw);
        out.den = &self.den * &other.den;
        out.normalize();
        out
    }

    /// Multiplicative inverse by extended Euclid against `Φ_{2p}`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = RationalPoly::new(self.coeffs());
        let (g, s) = a.ext_gcd_mod(&self.field.modulus)?;
        if g.degree() != Some(0) {
            return Err(Error::Consistency("cyclotomic modulus is not irreducible".into()));
        }
        Ok(CycNum::from_coeffs(&self.field, s.coeffs()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiply by a machine integer.
    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let mut out = CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|n| n * &k).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    /// Coordinates formatted as `"num/den"` strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs()
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    /// Parse the `"num/den"` form emitted by [`CycNum::to_strings`].
    pub fn parse_strings(field: &Arc<CycField>, parts: &[String]) -> Result<Self> {
        if parts.len() != field.degree {
            return Err(Error::Dimension { expected: field.degree, found: parts.len() });
        }
        let coeffs = parts
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, &coeffs))
    }

    /// True when the value is a single term `c·ζ^k`, or an integer.
    fn is_simple(&self) -> bool {
        self.num.iter().filter(|n| !n.is_zero()).count() <= 1
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || param(format!("malformed rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

fn assert_same_field(a: &CycNum, b: &CycNum) {
    if let Err(e) = a.check_same_field(b) {
        panic!("{e}");
    }
}

/// Checked multiplication; fails when the operands come from different fields.
pub fn cyc_mul(a: &CycNum, b: &CycNum) -> Result<CycNum> {
    a.check_same_field(b)?;
    Ok(a * b)
}

pub fn cyc_inv(a: &CycNum) -> Result<CycNum> {
    a.inv()
}

/// The quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`, evaluated
/// without division as `q^{n-1} + q^{n-3} + … + q^{-(n-1)}`.
pub fn q_int(field: &Arc<CycField>, n: i64) -> CycNum {
    if n == 0 {
        return CycNum::zero(field);
    }
    if n < 0 {
        return -q_int(field, -n);
    }
    let mut acc = CycNum::zero(field);
    for j in 0..n {
        acc += &CycNum::zeta_pow(field, n - 1 - 2 * j);
    }
    acc
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.p == other.field.p && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.p.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[p={}]({})", self.field.p, self)
    }
}

/// Renders as a polynomial in `q`, e.g. `1/2 - q + 3*q^2`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs().into_iter().enumerate(), "q")
    }
}

impl CycNum {
    /// Display form suitable as a coefficient in a sum: parenthesised unless
    /// it has a single term.
    pub fn display_coeff(&self) -> String {
        if self.is_simple() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|n| -n).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(&self, rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycNum, b: &CycNum| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &CycNum, b: &CycNum| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &CycNum, b: &CycNum| a.mul_impl(b));

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = self.add_impl(rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(p: &RationalPoly) -> Vec<i64> {
        p.coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1).unwrap()), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2).unwrap()), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4).unwrap()), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6).unwrap()), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12).unwrap()), vec![1, 0, -1, 0, 1]);
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn cyclotomic_divides_and_has_totient_degree() {
        for n in 1..=30usize {
            let phi = cyclotomic_polynomial(n).unwrap();
            assert!(phi.has_integer_coeffs());
            assert_eq!(phi.degree().unwrap() as u64, totient(n as u64));
            let (_, rem) = RationalPoly::x_pow_minus_one(n).div_rem(&phi).unwrap();
            assert!(rem.is_zero(), "Φ_{n} does not divide x^{n}-1");
        }
    }

    #[test]
    fn zeta_squared() {
        let f2 = CycField::new(2).unwrap();
        let z = CycNum::zeta_pow(&f2, 1);
        assert_eq!((&z * &z).coeffs(), vec![r(-1, 1), r(0, 1)]);

        let f3 = CycField::new(3).unwrap();
        let z = CycNum::zeta_pow(&f3, 1);
        // ζ² = ζ - 1 modulo x² - x + 1
        assert_eq!((&z * &z).coeffs(), vec![r(-1, 1), r(1, 1)]);
    }

    #[test]
    fn inverses() {
        let f2 = CycField::new(2).unwrap();
        let z = CycNum::zeta_pow(&f2, 1);
        assert_eq!(z.inv().unwrap(), -&z);
        assert!(CycNum::one(&f2).inv().unwrap().is_one());
        assert_eq!(CycNum::zero(&f2).inv(), Err(Error::DivisionByZero));

        let f3 = CycField::new(3).unwrap();
        let z = CycNum::zeta_pow(&f3, 1);
        let zi = cyc_inv(&z).unwrap();
        assert!(cyc_mul(&z, &zi).unwrap().is_one());
        // ζ^{-1} = ζ^5 = 1 - ζ for p = 3
        assert_eq!(zi.coeffs(), vec![r(1, 1), r(-1, 1)]);
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = CycNum::one(&CycField::new(2).unwrap());
        let b = CycNum::one(&CycField::new(3).unwrap());
        assert_eq!(cyc_mul(&a, &b), Err(Error::MismatchedP { left: 2, right: 3 }));
    }

    #[test]
    fn zeta_order() {
        for p in 2..=7u32 {
            let f = CycField::new(p).unwrap();
            let z = CycNum::zeta_pow(&f, 1);
            let mut acc = CycNum::one(&f);
            for k in 1..=2 * p {
                acc = &acc * &z;
                if k == p {
                    assert_eq!(acc, CycNum::from_int(&f, -1));
                }
            }
            assert!(acc.is_one());
        }
    }

    #[test]
    fn q_integers() {
        for p in 2..=7u32 {
            let f = CycField::new(p).unwrap();
            assert!(q_int(&f, 1).is_one());
            assert!(q_int(&f, p as i64).is_zero());
            assert!(q_int(&f, 0).is_zero());
            let denom = (CycNum::zeta_pow(&f, 1) - CycNum::zeta_pow(&f, -1)).inv().unwrap();
            for n in 1..(2 * p as i64) {
                let quotient =
                    (CycNum::zeta_pow(&f, n) - CycNum::zeta_pow(&f, -n)) * &denom;
                assert_eq!(q_int(&f, n), quotient, "p={p} n={n}");
                assert_eq!(q_int(&f, -n), -q_int(&f, n));
                if n < p as i64 {
                    assert!(!q_int(&f, n).is_zero());
                }
            }
        }
        // [2] at p = 3 is q + q^{-1} = 2cos(π/3) = 1
        let f3 = CycField::new(3).unwrap();
        assert!(q_int(&f3, 2).is_one());
    }

    #[test]
    fn modulus_vanishes_at_zeta() {
        for p in 2..=7u32 {
            let f = CycField::new(p).unwrap();
            let mut acc = CycNum::zero(&f);
            for (k, c) in f.modulus().coeffs().iter().enumerate() {
                acc += &(CycNum::from_rational(&f, c) * CycNum::zeta_pow(&f, k as i64));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn string_form_round_trips() {
        let f = CycField::new(5).unwrap();
        let x = CycNum::from_coeffs(&f, &[r(1, 2), r(-3, 4), r(0, 1), r(7, 1)]);
        let s = x.to_strings();
        assert_eq!(s, vec!["1/2", "-3/4", "0/1", "7/1"]);
        assert_eq!(CycNum::parse_strings(&f, &s).unwrap(), x);
        assert!(CycNum::parse_strings(&f, &s[..2]).is_err());
    }

    #[test]
    fn display() {
        let f = CycField::new(3).unwrap();
        let x = CycNum::from_coeffs(&f, &[r(1, 2), r(-1, 1)]);
        assert_eq!(x.to_string(), "1/2 - q");
        assert_eq!(x.display_coeff(), "(1/2 - q)");
        assert_eq!(CycNum::zero(&f).to_string(), "0");
    }
}

//! The primitive idempotents `e_s^±` and the vectors spanning the projective
//! left ideals they generate.
//!
//! For `1 <= s <= p-1` the construction runs
//! `v_s → a_0 = E^{p-1}F^{p-1}v_s → b_0 = Σ α_n E^{p-1-n}F^{p-1-n} v_s`
//! and sets `e_s = (b_0 - (δ/γ) a_0)/γ`. For `s = p` the idempotent is a
//! rescaled `a_0`. Every idempotent returned here has been squared and
//! compared with itself.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNum;
use crate::error::{param, Error, Result};
use crate::linalg::RankAccumulator;
use crate::pbw::{Element, Uq};
use crate::repr::{projective_module, ProjectiveLayout};
use crate::sign::Sign;

fn check_s(s: u32, p: u32, allow_p: bool) -> Result<()> {
    let hi = if allow_p { p } else { p - 1 };
    if p < 2 {
        return Err(param(format!("p must be at least 2, got {p}")));
    }
    if s < 1 || s > hi {
        return Err(param(format!("s must lie in 1..={hi} for p = {p}, got {s}")));
    }
    Ok(())
}

/// `sign · [i][m-i]`.
fn signed_pair(uq: &Uq, sign: Sign, i: i64, m: i64) -> CycNum {
    (&uq.qint(i) * &uq.qint(m - i)).scale_int(sign.unit())
}

/// `∏_{i ∈ range} sign·[i][m-i]`.
fn pair_product(uq: &Uq, sign: Sign, range: std::ops::RangeInclusive<i64>, m: i64) -> CycNum {
    range.fold(uq.scalar_int(1), |acc, i| &acc * &signed_pair(uq, sign, i, m))
}

/// `Σ_j ∏_{i ≠ j} sign·[i][m-i]` over `1 <= i, j <= m-1`.
fn pair_product_skip_sum(uq: &Uq, sign: Sign, m: i64) -> CycNum {
    let mut total = uq.scalar_int(0);
    for j in 1..m {
        let mut prod = uq.scalar_int(1);
        for i in (1..m).filter(|&i| i != j) {
            prod = &prod * &signed_pair(uq, sign, i, m);
        }
        total += &prod;
    }
    total
}

/// `v_s^± = Σ_{ℓ=0}^{2p-1} (±q^{-(s-1)})^ℓ K^ℓ`.
pub fn vs_element(s: u32, sign: Sign, p: u32) -> Result<Element> {
    check_s(s, p, true)?;
    let uq = Uq::shared(p)?;
    let mut v = uq.zero();
    for l in 0..2 * p as i64 {
        let c = uq.q(-(s as i64 - 1) * l).scale_int(sign.unit().pow(l as u32));
        v = &v + &uq.k_pow(l).scale(&c);
    }
    Ok(v)
}

/// `a_n^±(s) = F^n E^{p-1} F^{p-1} v_s^±`.
pub fn a_vector(s: u32, n: u32, sign: Sign, p: u32) -> Result<Element> {
    let uq = Uq::shared(p)?;
    let v = vs_element(s, sign, p)?;
    uq.product(&[&uq.f_pow(n), &uq.e_pow(p - 1), &uq.f_pow(p - 1), &v])
}

/// `∏_{i=1}^{n} (±[i][s-i]) · E^{p-1-n} F^{p-1} v_s^±` for `n < s`, else zero.
pub fn a_closed_form(s: u32, n: u32, sign: Sign, p: u32) -> Result<Element> {
    let uq = Uq::shared(p)?;
    let v = vs_element(s, sign, p)?;
    if n >= s {
        return Ok(uq.zero());
    }
    let c = pair_product(&uq, sign, 1..=n as i64, s as i64);
    Ok(uq.product(&[&uq.e_pow(p - 1 - n), &uq.f_pow(p - 1), &v])?.scale(&c))
}

/// `α_1 = 1`, `α_n = ∓[n-1][p-s-(n-1)] α_{n-1}`.
pub fn alpha(s: u32, n: u32, sign: Sign, p: u32) -> Result<CycNum> {
    check_s(s, p, false)?;
    if n < 1 || n > p - s {
        return Err(param(format!("alpha index n must lie in 1..={}, got {n}", p - s)));
    }
    let uq = Uq::shared(p)?;
    Ok(pair_product(&uq, sign.flip(), 1..=n as i64 - 1, (p - s) as i64))
}

/// `Σ_{n=1}^{p-s} α_n E^{p-1-n} F^{p-1-n} v_s^±`.
pub fn b0(s: u32, sign: Sign, p: u32) -> Result<Element> {
    check_s(s, p, false)?;
    let uq = Uq::shared(p)?;
    let v = vs_element(s, sign, p)?;
    let mut acc = uq.zero();
    for n in 1..=p - s {
        let mono = uq.mul(&uq.e_pow(p - 1 - n), &uq.f_pow(p - 1 - n))?;
        acc = &acc + &mono.scale(&alpha(s, n, sign, p)?);
    }
    uq.mul(&acc, &v)
}

/// The two normalising constants of `e_s^±`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaDelta {
    pub gamma: CycNum,
    pub delta: CycNum,
}

pub fn gamma_delta(s: u32, sign: Sign, p: u32) -> Result<GammaDelta> {
    check_s(s, p, false)?;
    let uq = Uq::shared(p)?;
    let (si, ti) = (s as i64, (p - s) as i64);
    let two_p = uq.scalar_int(2 * p as i64);
    let prod_t = pair_product(&uq, sign.flip(), 1..=ti - 1, ti);
    let prod_s = pair_product(&uq, sign, 1..=si - 1, si);
    let gamma = &(&two_p * &prod_t) * &prod_s;
    let delta = &(&(&two_p * &prod_t) * &pair_product_skip_sum(&uq, sign, si))
        + &(&(&two_p * &prod_s) * &pair_product_skip_sum(&uq, sign.flip(), ti));
    if gamma.is_zero() {
        return Err(Error::Consistency(format!("gamma vanishes at s = {s}, p = {p}")));
    }
    Ok(GammaDelta { gamma, delta })
}

/// `e_s^±`, certified by squaring.
pub fn primitive_idempotent(s: u32, sign: Sign, p: u32) -> Result<Element> {
    check_s(s, p, true)?;
    let uq = Uq::shared(p)?;
    let e = if s == p {
        let norm = &uq.scalar_int(2 * p as i64) * &pair_product(&uq, sign, 1..=p as i64 - 1, p as i64);
        a_vector(p, 0, sign, p)?.scale(&norm.inv()?)
    } else {
        let GammaDelta { gamma, delta } = gamma_delta(s, sign, p)?;
        let ginv = gamma.inv()?;
        let a0 = a_vector(s, 0, sign, p)?;
        let b = b0(s, sign, p)?;
        (&b - &a0.scale(&(&delta * &ginv))).scale(&ginv)
    };
    if uq.mul(&e, &e)? != e {
        return Err(Error::Consistency(format!(
            "e_{s}^{sign} fails to square to itself at p = {p}"
        )));
    }
    Ok(e)
}

/// A basis of the left ideal `U·e`, made of products `m·e` with `m` a PBW monomial.
pub fn left_ideal_basis(e: &Element) -> Result<Vec<Element>> {
    let uq = Uq::shared(e.p())?;
    if &uq.mul(e, e)? != e {
        return Err(param("left_ideal_basis needs an idempotent"));
    }
    let mut acc = RankAccumulator::new(uq.dim());
    let mut basis = Vec::new();
    for m in uq.monomials() {
        let me = uq.mul(&uq.term(m, CycNum::one(uq.field())), e)?;
        if me.is_zero() {
            continue;
        }
        if acc.insert(uq.element_to_row(&me)?)? {
            basis.push(me);
        }
    }
    Ok(basis)
}

/// The idempotents `e_s^±` for all `1 <= s <= p` and both signs.
#[derive(Clone, Debug)]
pub struct IdempotentSet {
    pub p: u32,
    pub elements: BTreeMap<(u32, Sign), Element>,
}

impl IdempotentSet {
    pub fn new(p: u32) -> Result<Self> {
        let mut elements = BTreeMap::new();
        for s in 1..=p {
            for sign in Sign::BOTH {
                elements.insert((s, sign), primitive_idempotent(s, sign, p)?);
            }
        }
        Ok(IdempotentSet { p, elements })
    }

    pub fn get(&self, s: u32, sign: Sign) -> Result<&Element> {
        self.elements
            .get(&(s, sign))
            .ok_or_else(|| param(format!("no idempotent e_{s}^{sign} at p = {}", self.p)))
    }
}

/// The vectors `b_n, x_k, y_k, a_n` spanning the projective module inside
/// the algebra, in the same order as [`projective_module`].
#[derive(Clone, Debug)]
pub struct ProjectiveVectors {
    pub s: u32,
    pub sign: Sign,
    pub b: Vec<Element>,
    pub x: Vec<Element>,
    pub y: Vec<Element>,
    pub a: Vec<Element>,
}

impl ProjectiveVectors {
    pub fn new(s: u32, sign: Sign, p: u32) -> Result<Self> {
        check_s(s, p, false)?;
        let uq = Uq::shared(p)?;
        let b_0 = b0(s, sign, p)?;
        let t = p - s;
        let mut b = vec![b_0.clone()];
        for _ in 1..s {
            let next = uq.mul(&uq.f(), b.last().unwrap())?;
            b.push(next);
        }
        let mut x = Vec::new();
        for k in 0..t {
            let norm = pair_product(&uq, sign.flip(), k as i64 + 1..=t as i64 - 1, t as i64);
            x.push(uq.mul(&uq.e_pow(t - k), &b_0)?.scale(&norm.inv()?));
        }
        let y = (0..t)
            .map(|k| uq.mul(&uq.f_pow(s + k), &b_0))
            .collect::<Result<Vec<_>>>()?;
        let a = (0..s).map(|n| a_vector(s, n, sign, p)).collect::<Result<Vec<_>>>()?;
        Ok(ProjectiveVectors { s, sign, b, x, y, a })
    }

    /// All `2p` vectors in `(b, x, y, a)` order.
    pub fn ordered(&self) -> Vec<&Element> {
        self.b.iter().chain(&self.x).chain(&self.y).chain(&self.a).collect()
    }

    pub fn layout(&self) -> ProjectiveLayout {
        ProjectiveLayout::new(self.s, self.s + self.x.len() as u32)
    }
}

/// Result of replaying one action identity: label and residual.
pub type Residual = (String, Element);

/// Replays the projective-module action table inside the algebra: for each
/// generator `g` and basis vector `v_j`, `g·v_j - Σ_i M_g[i][j] v_i`.
pub fn action_table_residuals(s: u32, sign: Sign, p: u32) -> Result<Vec<Residual>> {
    let uq = Uq::shared(p)?;
    let vecs = ProjectiveVectors::new(s, sign, p)?;
    let rep = projective_module(s, sign, p)?;
    let ordered = vecs.ordered();
    let mut out = Vec::new();
    for (name, gen, mat) in [
        ("E", uq.e(), &rep.mat_e),
        ("F", uq.f(), &rep.mat_f),
        ("K", uq.k(), &rep.mat_k),
    ] {
        for (j, v) in ordered.iter().enumerate() {
            let lhs = uq.mul(&gen, v)?;
            let coeffs = mat.column(j);
            let rhs = uq.combination(&coeffs, &ordered)?;
            out.push((format!("{name} {}", rep.labels[j]), lhs.try_sub(&rhs)?));
        }
    }
    Ok(out)
}

/// Residuals of the identities relating `a_0` and `b_0`:
/// `FE b_0 = a_0`, `b_0² = γb_0 + δa_0`, `a_0 b_0 = γa_0`, `b_0 a_0 = γa_0`, `a_0² = 0`,
/// and the expansion of `E^{s-1} b_{s-1}`.
pub fn b0_identity_residuals(s: u32, sign: Sign, p: u32) -> Result<Vec<Residual>> {
    let uq = Uq::shared(p)?;
    let GammaDelta { gamma, delta } = gamma_delta(s, sign, p)?;
    let b = b0(s, sign, p)?;
    let a0 = a_vector(s, 0, sign, p)?;
    let fe_b = uq.product(&[&uq.f(), &uq.e(), &b])?;
    let bb = uq.mul(&b, &b)?;
    let ab = uq.mul(&a0, &b)?;
    let ba = uq.mul(&b, &a0)?;

    let b_last = uq.mul(&uq.f_pow(s - 1), &b)?;
    let top = uq.mul(&uq.e_pow(s - 1), &b_last)?;
    let si = s as i64;
    let expected = &b.scale(&pair_product(&uq, sign, 1..=si - 1, si))
        + &a0.scale(&pair_product_skip_sum(&uq, sign, si));

    Ok(vec![
        ("FE b0 = a0".into(), fe_b.try_sub(&a0)?),
        ("b0^2 = gamma b0 + delta a0".into(), &bb - &(&b.scale(&gamma) + &a0.scale(&delta))),
        ("a0 b0 = gamma a0".into(), &ab - &a0.scale(&gamma)),
        ("b0 a0 = gamma a0".into(), &ba - &a0.scale(&gamma)),
        ("a0^2 = 0".into(), uq.mul(&a0, &a0)?),
        ("E^(s-1) b_(s-1) expansion".into(), &top - &expected),
    ])
}

/// Residuals of `a_0 = F Σ α_n E^{p-n} F^{p-1-n} v_s` and of the closed
/// form of `a_n` for `0 <= n <= s`.
pub fn a_vector_residuals(s: u32, sign: Sign, p: u32) -> Result<Vec<Residual>> {
    let uq = Uq::shared(p)?;
    let mut out = Vec::new();
    for n in 0..=s {
        let direct = a_vector(s, n, sign, p)?;
        let closed = a_closed_form(s, n, sign, p)?;
        out.push((format!("a_{n} closed form"), &direct - &closed));
    }
    let a0 = a_vector(s, 0, sign, p)?;
    out.push(("E a_0 = 0".into(), uq.mul(&uq.e(), &a0)?));
    if s < p {
        let v = vs_element(s, sign, p)?;
        let mut sum = uq.zero();
        for n in 1..=p - s {
            let t = uq.product(&[&uq.e_pow(p - n), &uq.f_pow(p - 1 - n), &v])?;
            sum = &sum + &t.scale(&alpha(s, n, sign, p)?);
        }
        out.push(("a_0 = F sum alpha_n E^(p-n) F^(p-1-n) v_s".into(), &uq.mul(&uq.f(), &sum)? - &a0));
    }
    Ok(out)
}

/// Checks how `v_s^+` and `v_{p-s}^-` act on weight vectors of the two
/// projective modules of block `s`: a vector of the matching extreme weight
/// is multiplied by `2p`, every other listed weight vector is killed.
pub fn weight_filter_residuals(s: u32, p: u32) -> Result<Vec<Residual>> {
    check_s(s, p, false)?;
    let uq = Uq::shared(p)?;
    let v_plus = vs_element(s, Sign::Plus, p)?;
    let v_minus = vs_element(p - s, Sign::Minus, p)?;
    let two_p = uq.scalar_int(2 * p as i64);
    let plus = ProjectiveVectors::new(s, Sign::Plus, p)?;
    let minus = ProjectiveVectors::new(p - s, Sign::Minus, p)?;

    // (label, vector, index within its weight string, is it a φ (weight q^{s-1-2n}))
    let mut tests: Vec<(String, &Element, usize, bool)> = Vec::new();
    for (fam, vs, phi) in [
        ("b+", &plus.b, true),
        ("a+", &plus.a, true),
        ("x+", &plus.x, false),
        ("y+", &plus.y, false),
        ("b-", &minus.b, false),
        ("a-", &minus.a, false),
        ("x-", &minus.x, true),
        ("y-", &minus.y, true),
    ] {
        for (i, v) in vs.iter().enumerate() {
            tests.push((format!("{fam}_{i}"), v, i, phi));
        }
    }
    let mut out = Vec::new();
    for (label, v, i, phi) in tests {
        let zero = uq.zero();
        let fixed = v.scale(&two_p);
        let exp_plus = if phi && i == 0 { &fixed } else { &zero };
        let exp_minus = if !phi && i == 0 { &fixed } else { &zero };
        out.push((format!("v_s^+ {label}"), &uq.mul(&v_plus, v)? - exp_plus));
        out.push((format!("v_(p-s)^- {label}"), &uq.mul(&v_minus, v)? - exp_minus));
    }
    Ok(out)
}

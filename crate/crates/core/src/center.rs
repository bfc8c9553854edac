//! The Casimir element, its minimal polynomial and the central idempotents
//! `π_0, …, π_p` splitting the algebra into blocks `Q_s`.

use crate::cyclotomic::CycNum;
use crate::error::{param, Error, Result};
use crate::linalg::{CoordinateSolver, RankAccumulator};
use crate::pbw::{Element, Uq};
use crate::poly::CycPoly;

/// `C = EF + (q⁻¹K + qK⁻¹)/(q - q⁻¹)²`.
pub fn casimir(p: u32) -> Result<Element> {
    let uq = Uq::shared(p)?;
    let k2 = uq.kappa() * uq.kappa();
    let tail = &uq.k().scale(&uq.q(-1)) + &uq.k_pow(-1).scale(&uq.q(1));
    Ok(&uq.mul(&uq.e(), &uq.f())? + &tail.scale(&k2))
}

/// The other ordering, `FE + (qK + q⁻¹K⁻¹)/(q - q⁻¹)²`.
pub fn casimir_fe_form(p: u32) -> Result<Element> {
    let uq = Uq::shared(p)?;
    let k2 = uq.kappa() * uq.kappa();
    let tail = &uq.k().scale(&uq.q(1)) + &uq.k_pow(-1).scale(&uq.q(-1));
    Ok(&uq.mul(&uq.f(), &uq.e())? + &tail.scale(&k2))
}

/// `β_j = (q^j + q^{-j})/(q - q⁻¹)²`.
pub fn beta(p: u32, j: i64) -> Result<CycNum> {
    let uq = Uq::shared(p)?;
    Ok(&(&uq.q(j) + &uq.q(-j)) * &(uq.kappa() * uq.kappa()))
}

/// Multiplicity of `β_s` in the minimal polynomial of `C`.
pub fn multiplicity(p: u32, s: u32) -> usize {
    if s == 0 || s == p {
        1
    } else {
        2
    }
}

/// `(t - β_0)(t - β_p) ∏_{j=1}^{p-1} (t - β_j)²`.
pub fn expected_casimir_polynomial(p: u32) -> Result<CycPoly> {
    let field = Uq::shared(p)?.field().clone();
    let mut acc = CycPoly::constant(CycNum::one(&field));
    for j in 0..=p {
        acc = acc.mul(&CycPoly::linear(&beta(p, j as i64)?).pow(multiplicity(p, j)));
    }
    Ok(acc)
}

/// Monic polynomial of least degree annihilating `x`, found as the first
/// linear dependence among `1, x, x², …`.
pub fn minimal_polynomial(x: &Element) -> Result<CycPoly> {
    let uq = Uq::shared(x.p())?;
    let field = uq.field().clone();
    let mut rows = vec![uq.element_to_row(&uq.one())?];
    let mut power = uq.one();
    for d in 1..=uq.dim() {
        power = uq.mul(&power, x)?;
        let row = uq.element_to_row(&power)?;
        let solver = CoordinateSolver::new(&field, &rows)?;
        if let Some(c) = solver.solve(&row)? {
            let mut coeffs: Vec<CycNum> = c.iter().map(|v| -v).collect();
            coeffs.push(CycNum::one(&field));
            return Ok(CycPoly::new(&field, coeffs));
        }
        rows.push(row);
        debug_assert_eq!(rows.len(), d + 1);
    }
    Err(Error::Consistency("no dependence among powers".into()))
}

/// Evaluates a polynomial at an algebra element.
pub fn eval_at(poly: &CycPoly, x: &Element) -> Result<Element> {
    let uq = Uq::shared(x.p())?;
    let mut acc = uq.zero();
    for c in poly.coeffs().iter().rev() {
        acc = &uq.mul(&acc, x)? + &uq.scalar(c.clone());
    }
    Ok(acc)
}

/// Central idempotents cutting out the blocks, indexed `s = 0..=p`.
#[derive(Clone, Debug)]
pub struct BlockProjectors {
    pub p: u32,
    pub projectors: Vec<Element>,
    pub eigenvalues: Vec<CycNum>,
    /// The interpolating polynomials with `π_s = f_s(C)`.
    pub polynomials: Vec<CycPoly>,
}

/// Builds `π_s = f_s(C)` with `f_s ≡ 1 mod (t-β_s)^{m_s}` and
/// `f_s ≡ 0 mod (t-β_t)^{m_t}` for `t ≠ s`.
pub fn block_projectors(p: u32) -> Result<BlockProjectors> {
    let uq = Uq::shared(p)?;
    let c = casimir(p)?;
    let psi = expected_casimir_polynomial(p)?;
    let eigenvalues = (0..=p).map(|j| beta(p, j as i64)).collect::<Result<Vec<_>>>()?;
    let mut projectors = Vec::new();
    let mut polynomials = Vec::new();
    for s in 0..=p {
        let local = CycPoly::linear(&eigenvalues[s as usize]).pow(multiplicity(p, s));
        let (cofactor, rem) = psi.div_rem(&local)?;
        debug_assert!(rem.is_zero());
        let u = cofactor.inv_mod(&local)?;
        let f = cofactor.mul(&u).div_rem(&psi)?.1;
        projectors.push(eval_at(&f, &c)?);
        polynomials.push(f);
    }
    debug_assert_eq!(projectors.len(), uq.p() as usize + 1);
    Ok(BlockProjectors { p, projectors, eigenvalues, polynomials })
}

impl BlockProjectors {
    pub fn get(&self, s: u32) -> Result<&Element> {
        self.projectors
            .get(s as usize)
            .ok_or_else(|| param(format!("block index must lie in 0..={}, got {s}", self.p)))
    }

    /// `dim Q_s`, the rank of `{π_s · m}` over all PBW monomials.
    pub fn dimension(&self, s: u32) -> Result<usize> {
        let pi = self.get(s)?;
        let uq = Uq::shared(self.p)?;
        let mut acc = RankAccumulator::new(uq.dim());
        for m in uq.monomials() {
            let x = uq.mul(pi, &uq.term(m, CycNum::one(uq.field())))?;
            if !x.is_zero() {
                acc.insert(uq.element_to_row(&x)?)?;
            }
        }
        Ok(acc.rank())
    }
}

/// `dim Q_s` for one block.
pub fn block_dimension(p: u32, s: u32) -> Result<usize> {
    if s > p {
        return Err(param(format!("block index must lie in 0..={p}, got {s}")));
    }
    block_projectors(p)?.dimension(s)
}

//! Univariate polynomials with coefficients in `Q(ζ_{2p})`.

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{CycField, CycNum, Rational};
use crate::error::{Error, Result};

/// Polynomial over the cyclotomic field, lowest degree first, no trailing zeros.
#[derive(Clone, Debug)]
pub struct CycPoly {
    field: Arc<CycField>,
    coeffs: Vec<CycNum>,
}

impl PartialEq for CycPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.p() == other.field.p() && self.coeffs == other.coeffs
    }
}

impl Eq for CycPoly {}

impl CycPoly {
    pub fn new(field: &Arc<CycField>, mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        CycPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Arc<CycField>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(c: CycNum) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// The monic linear factor `t - root`.
    pub fn linear(root: &CycNum) -> Self {
        let f = root.field().clone();
        Self::new(&f, vec![-root, CycNum::one(&f)])
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(CycNum::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = CycNum::zero(&self.field);
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::new(&self.field, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycNum::from_int(&self.field, -1)))
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![CycNum::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::new(&self.field, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(CycNum::one(&self.field));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNum::zero(&self.field); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &(&c * d);
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().is_some_and(CycNum::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(&self.field, quot), Self::new(&self.field, rem)))
    }

    /// Inverse of `self` modulo `modulus`, which must be coprime to `self`.
    pub fn inv_mod(&self, modulus: &Self) -> Result<Self> {
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus)?.1);
        let (mut s0, mut s1) = (
            Self::zero(&self.field),
            Self::constant(CycNum::one(&self.field)),
        );
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.degree() != Some(0) {
            return Err(Error::Consistency("polynomials are not coprime".into()));
        }
        let g_inv = r0.coeffs[0].inv()?;
        Ok(s0.scale(&g_inv).div_rem(modulus)?.1)
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Coefficients as `"num/den"` string vectors, lowest degree first.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.coeffs.iter().map(CycNum::to_strings).collect()
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            // rational negative coefficients are written as subtraction
            let negative = c.as_rational().is_some_and(|r| r < Rational::from_integer(0.into()));
            let c = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (c.is_one(), mono.is_empty()) {
                (true, false) => write!(f, "{mono}")?,
                (_, true) => write!(f, "{}", c.display_coeff())?,
                (false, false) => write!(f, "{}*{mono}", c.display_coeff())?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_inverse() {
        let f = CycField::new(3).unwrap();
        let q = CycNum::zeta_pow(&f, 1);
        let a = CycPoly::linear(&q);
        let b = CycPoly::linear(&CycNum::from_int(&f, 2));
        let prod = a.mul(&b).mul(&b);
        let (quo, rem) = prod.div_rem(&b.pow(2)).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quo, a);

        let m = b.pow(2);
        let inv = a.inv_mod(&m).unwrap();
        let (_, r) = inv.mul(&a).div_rem(&m).unwrap();
        assert_eq!(r, CycPoly::constant(CycNum::one(&f)));
        assert!(a.inv_mod(&a.mul(&b)).is_err());
    }

    #[test]
    fn display_signs() {
        let f = CycField::new(2).unwrap();
        let half = CycNum::from_int(&f, 2).inv().unwrap();
        let p = CycPoly::linear(&half).mul(&CycPoly::linear(&-&half));
        assert_eq!(p.to_string(), "t^2 - 1/4");
        let q = CycPoly::linear(&CycNum::zeta_pow(&f, 1)).scale(&CycNum::from_int(&f, -2));
        assert_eq!(q.to_string(), "-2*t + 2*q");
    }

    #[test]
    fn evaluation() {
        let f = CycField::new(4).unwrap();
        let q = CycNum::zeta_pow(&f, 1);
        let p = CycPoly::linear(&q).mul(&CycPoly::linear(&-&q));
        assert!(p.eval(&q).is_zero());
        assert!(p.eval(&-&q).is_zero());
        assert!(!p.eval(&CycNum::one(&f)).is_zero());
    }
}

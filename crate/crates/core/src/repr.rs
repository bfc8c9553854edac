//! Matrix models of the simple modules `X_s^±` and the projective covers
//! `P_s^±`, plus a checker for the defining relations.
//!
//! Matrices act on column vectors: column `j` holds the image of basis
//! vector `j`.

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{q_int, CycField, CycNum};
use crate::error::{param, Result};
use crate::linalg::{rank, Matrix};
use crate::pbw::Element;
use crate::sign::Sign;

/// Matrices of `E`, `F`, `K` on a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub p: u32,
    pub dim: usize,
    pub mat_e: Matrix,
    pub mat_f: Matrix,
    pub mat_k: Matrix,
    pub labels: Vec<String>,
}

/// First failing relation found by [`check_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: &'static str,
    pub row: usize,
    pub col: usize,
    /// The offending entry of `lhs - rhs`.
    pub residual: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "relation {} fails at entry ({}, {}): residual {}",
            self.relation, self.row, self.col, self.residual
        )
    }
}

fn field(p: u32) -> Result<Arc<CycField>> {
    CycField::new(p)
}

fn q(f: &Arc<CycField>, k: i64) -> CycNum {
    CycNum::zeta_pow(f, k)
}

/// `sign · [n][s-n]`.
fn signed_qq(f: &Arc<CycField>, sign: Sign, n: i64, s: i64) -> CycNum {
    (&q_int(f, n) * &q_int(f, s - n)).scale_int(sign.unit())
}

/// The `s`-dimensional simple module on `a_0, …, a_{s-1}` with
/// `K a_n = ±q^{s-1-2n} a_n`, `E a_n = ±[n][s-n] a_{n-1}`, `F a_n = a_{n+1}`.
pub fn simple_module(s: u32, sign: Sign, p: u32) -> Result<Representation> {
    if s < 1 || s > p {
        return Err(param(format!("simple module needs 1 <= s <= p = {p}, got s = {s}")));
    }
    let f = field(p)?;
    let d = s as usize;
    let si = s as i64;
    let mut e = Matrix::zeros(&f, d, d);
    let mut fm = Matrix::zeros(&f, d, d);
    let mut k = Matrix::zeros(&f, d, d);
    for n in 0..d {
        let ni = n as i64;
        k.set(n, n, q(&f, si - 1 - 2 * ni).scale_int(sign.unit()));
        if n >= 1 {
            e.set(n - 1, n, signed_qq(&f, sign, ni, si));
        }
        if n + 1 < d {
            fm.set(n + 1, n, CycNum::one(&f));
        }
    }
    Ok(Representation {
        p,
        dim: d,
        mat_e: e,
        mat_f: fm,
        mat_k: k,
        labels: (0..d).map(|n| format!("a_{n}")).collect(),
    })
}

/// Index layout of the projective module basis `(b, x, y, a)`.
#[derive(Clone, Copy, Debug)]
pub struct ProjectiveLayout {
    pub s: usize,
    /// `p - s`.
    pub t: usize,
}

impl ProjectiveLayout {
    pub fn new(s: u32, p: u32) -> Self {
        ProjectiveLayout { s: s as usize, t: (p - s) as usize }
    }

    pub fn b(&self, n: usize) -> usize {
        n
    }

    pub fn x(&self, k: usize) -> usize {
        self.s + k
    }

    pub fn y(&self, k: usize) -> usize {
        self.s + self.t + k
    }

    pub fn a(&self, n: usize) -> usize {
        self.s + 2 * self.t + n
    }

    pub fn dim(&self) -> usize {
        2 * (self.s + self.t)
    }
}

/// The `2p`-dimensional projective module on `(b_0.., x_0.., y_0.., a_0..)`.
pub fn projective_module(s: u32, sign: Sign, p: u32) -> Result<Representation> {
    if s < 1 || s >= p {
        return Err(param(format!(
            "projective module needs 1 <= s <= p-1 = {}, got s = {s} (use the simple module for s = p)",
            p.saturating_sub(1)
        )));
    }
    let f = field(p)?;
    let lay = ProjectiveLayout::new(s, p);
    let (sd, td) = (lay.s, lay.t);
    let (si, ti) = (s as i64, (p - s) as i64);
    let d = lay.dim();
    let one = CycNum::one(&f);
    let mut e = Matrix::zeros(&f, d, d);
    let mut fm = Matrix::zeros(&f, d, d);
    let mut k = Matrix::zeros(&f, d, d);
    let other = sign.flip();

    for n in 0..sd {
        let ni = n as i64;
        let w = q(&f, si - 1 - 2 * ni).scale_int(sign.unit());
        k.set(lay.b(n), lay.b(n), w.clone());
        k.set(lay.a(n), lay.a(n), w);
        if n >= 1 {
            let c = signed_qq(&f, sign, ni, si);
            e.set(lay.b(n - 1), lay.b(n), c.clone());
            e.set(lay.a(n - 1), lay.b(n), one.clone());
            e.set(lay.a(n - 1), lay.a(n), c);
        } else {
            e.set(lay.x(td - 1), lay.b(0), one.clone());
        }
        if n + 1 < sd {
            fm.set(lay.b(n + 1), lay.b(n), one.clone());
            fm.set(lay.a(n + 1), lay.a(n), one.clone());
        } else {
            fm.set(lay.y(0), lay.b(n), one.clone());
        }
    }
    for kk in 0..td {
        let ki = kk as i64;
        let w = q(&f, ti - 1 - 2 * ki).scale_int(other.unit());
        k.set(lay.x(kk), lay.x(kk), w.clone());
        k.set(lay.y(kk), lay.y(kk), w);
        if kk >= 1 {
            let c = signed_qq(&f, other, ki, ti);
            e.set(lay.x(kk - 1), lay.x(kk), c.clone());
            e.set(lay.y(kk - 1), lay.y(kk), c);
        } else {
            e.set(lay.a(sd - 1), lay.y(0), one.clone());
        }
        if kk + 1 < td {
            fm.set(lay.x(kk + 1), lay.x(kk), one.clone());
            fm.set(lay.y(kk + 1), lay.y(kk), one.clone());
        } else {
            fm.set(lay.a(0), lay.x(kk), one.clone());
        }
    }

    let mut labels = Vec::with_capacity(d);
    labels.extend((0..sd).map(|n| format!("b_{n}")));
    labels.extend((0..td).map(|n| format!("x_{n}")));
    labels.extend((0..td).map(|n| format!("y_{n}")));
    labels.extend((0..sd).map(|n| format!("a_{n}")));
    Ok(Representation { p, dim: d, mat_e: e, mat_f: fm, mat_k: k, labels })
}

fn first_nonzero(m: &Matrix) -> Option<(usize, usize, String)> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.get(r, c).is_zero() {
                return Some((r, c, m.get(r, c).to_string()));
            }
        }
    }
    None
}

impl Representation {
    pub fn field(&self) -> &Arc<CycField> {
        self.mat_k.field()
    }

    /// `K^{-1}`, computed as `K^{2p-1}`.
    fn k_inv(&self) -> Result<Matrix> {
        self.mat_k.pow(2 * self.p - 1)
    }

    /// Matrix of an algebra element acting in this representation.
    pub fn act(&self, x: &Element) -> Result<Matrix> {
        let f = self.field().clone();
        let mut out = Matrix::zeros(&f, self.dim, self.dim);
        for (m, c) in x.terms() {
            let term = self
                .mat_e
                .pow(m.e)?
                .mul(&self.mat_f.pow(m.f)?)?
                .mul(&self.mat_k.pow(m.k)?)?;
            out = out.add(&term.scale(c))?;
        }
        Ok(out)
    }

    /// Dimension of the space of vectors killed by `E` with `K`-eigenvalue `weight`.
    pub fn highest_weight_space_dim(&self, weight: &CycNum) -> Result<usize> {
        let shifted = self
            .mat_k
            .sub(&Matrix::identity(self.field(), self.dim).scale(weight))?;
        let mut rows = self.mat_e.to_rows();
        rows.extend(shifted.to_rows());
        let stacked = Matrix::from_rows(self.field(), &rows, self.dim)?;
        Ok(self.dim - rank(&stacked)?)
    }

    /// Restriction of `m` to the rows and columns listed.
    pub fn block(m: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(m.field(), rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, m.get(r, c).clone());
            }
        }
        out
    }
}

/// Checks `E^p = F^p = 0`, `K^{2p} = 1`, `KE = q²EK`, `KF = q⁻²FK` and
/// `EF - FE = (K - K⁻¹)/(q - q⁻¹)` as exact matrix identities.
pub fn check_relations(r: &Representation) -> Result<std::result::Result<(), Violation>> {
    let f = r.field().clone();
    let p = r.p;
    let id = Matrix::identity(&f, r.dim);
    let kinv = r.k_inv()?;
    let kappa = (q(&f, 1) - q(&f, -1)).inv()?;
    let checks: Vec<(&'static str, Matrix)> = vec![
        ("E^p = 0", r.mat_e.pow(p)?),
        ("F^p = 0", r.mat_f.pow(p)?),
        ("K^2p = 1", r.mat_k.pow(2 * p)?.sub(&id)?),
        (
            "K E K^-1 = q^2 E",
            r.mat_k.mul(&r.mat_e)?.mul(&kinv)?.sub(&r.mat_e.scale(&q(&f, 2)))?,
        ),
        (
            "K F K^-1 = q^-2 F",
            r.mat_k.mul(&r.mat_f)?.mul(&kinv)?.sub(&r.mat_f.scale(&q(&f, -2)))?,
        ),
        (
            "[E, F] = (K - K^-1)/(q - q^-1)",
            r.mat_e
                .mul(&r.mat_f)?
                .sub(&r.mat_f.mul(&r.mat_e)?)?
                .sub(&r.mat_k.sub(&kinv)?.scale(&kappa))?,
        ),
    ];
    for (relation, residual) in checks {
        if let Some((row, col, residual)) = first_nonzero(&residual) {
            return Ok(Err(Violation { relation, row, col, residual }));
        }
    }
    Ok(Ok(()))
}

//! The restricted quantum group as a `2p³`-dimensional algebra with PBW
//! basis `E^a F^b K^c` (`0 <= a, b < p`, `0 <= c < 2p`).
//!
//! Products are brought to normal form (E's left of F's left of K's) by
//! three moves:
//!
//! 1. `K^c E^a F^b = q^{2c(a-b)} E^a F^b K^c`;
//! 2. `F^b E^a` is looked up in a table built from
//!    `F^b E = E F^b - [b] F^{b-1} (q^{-(b-1)} K - q^{b-1} K^{-1}) / (q - q^{-1})`;
//! 3. powers `E^p`, `F^p` vanish and `K` exponents are taken modulo `2p`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{q_int, CycField, CycNum};
use crate::error::{param, Error, Result};
use crate::linalg::Row;

/// A PBW basis monomial `E^e F^f K^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub e: u32,
    pub f: u32,
    pub k: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e: 0, f: 0, k: 0 };

    pub fn new(e: u32, f: u32, k: u32) -> Self {
        Monomial { e, f, k }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, exp) in [("E", self.e), ("F", self.f), ("K", self.k)] {
            match exp {
                0 => {}
                1 => parts.push(sym.to_string()),
                n => parts.push(format!("{sym}^{n}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

/// A linear combination of PBW monomials. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    p: u32,
    terms: BTreeMap<Monomial, CycNum>,
}

impl Element {
    pub fn zero(p: u32) -> Self {
        Element { p, terms: BTreeMap::new() }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&CycNum> {
        self.terms.get(m)
    }

    fn check_p(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MismatchedP { left: self.p, right: other.p })
        }
    }

    fn add_term(&mut self, m: Monomial, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_p(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Element {
            p: self.p,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Element::zero(self.p);
        }
        Element {
            p: self.p,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Exact equality as a `Result`, failing on mismatched `p`.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        self.check_p(other)?;
        Ok(self == other)
    }

    /// Serializable term list in monomial order.
    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson { e: m.e, f: m.f, k: m.k, coeff: c.to_strings() })
            .collect()
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    /// Panics on mismatched `p`; use [`Element::try_add`] to get an error instead.
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("subtracting elements of different algebras")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[p={}]({})", self.p, self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut coeff = c.display_coeff();
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

/// One term of the JSON element form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: u32,
    pub f: u32,
    pub k: u32,
    pub coeff: Vec<String>,
}

type TermList = Vec<(Monomial, CycNum)>;

/// The algebra at a fixed `p`: field handle, cached scalars, and the
/// normal-form table for `F^b E^a`.
#[derive(Debug)]
pub struct Uq {
    p: u32,
    field: Arc<CycField>,
    kappa: CycNum,
    /// `fe[b][a]` is the normal form of `F^b E^a`.
    fe: Vec<Vec<TermList>>,
}

impl Uq {
    pub fn new(p: u32) -> Result<Self> {
        let field = CycField::new(p)?;
        let q = CycNum::zeta_pow(&field, 1);
        let kappa = (&q - &CycNum::zeta_pow(&field, -1)).inv()?;
        let mut uq = Uq { p, field, kappa, fe: Vec::new() };
        uq.fe = uq.build_fe_table();
        Ok(uq)
    }

    /// Shared handle for `p`, built once per process.
    pub fn shared(p: u32) -> Result<Arc<Uq>> {
        use std::collections::HashMap;
        use std::sync::{Mutex, OnceLock};
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Uq>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(u) = cache.lock().unwrap().get(&p) {
            return Ok(u.clone());
        }
        let built = Arc::new(Uq::new(p)?);
        Ok(cache.lock().unwrap().entry(p).or_insert(built).clone())
    }

    fn build_fe_table(&self) -> Vec<Vec<TermList>> {
        let p = self.p;
        let one = CycNum::one(&self.field);
        let mut fe: Vec<Vec<TermList>> = vec![vec![Vec::new(); p as usize]; p as usize];
        for a in 0..p {
            fe[0][a as usize] = vec![(Monomial::new(a, 0, 0), one.clone())];
        }
        for b in 1..p {
            fe[b as usize][0] = vec![(Monomial::new(0, b, 0), one.clone())];
        }
        for b in 1..p as usize {
            let qb = q_int(&self.field, b as i64);
            for a in 1..p as usize {
                let mut acc: BTreeMap<Monomial, CycNum> = BTreeMap::new();
                let mut push = |m: Monomial, c: CycNum| {
                    let entry = acc.entry(m).or_insert_with(|| CycNum::zero(&self.field));
                    *entry += &c;
                };
                // E · F^b E^{a-1}
                for (m, c) in &fe[b][a - 1] {
                    if m.e + 1 < p {
                        push(Monomial::new(m.e + 1, m.f, m.k), c.clone());
                    }
                }
                // -[b]κ (q^{-(b-1)+2(a-1)} X K - q^{(b-1)-2(a-1)} X K^{-1}),  X = F^{b-1}E^{a-1}
                let shift = 2 * (a as i64 - 1) - (b as i64 - 1);
                let plus = &(&qb * &self.kappa) * &self.q(shift);
                let minus = &(&qb * &self.kappa) * &self.q(-shift);
                for (m, c) in &fe[b - 1][a - 1] {
                    push(Monomial::new(m.e, m.f, self.kmod(m.k as i64 + 1)), -(c * &plus));
                    push(Monomial::new(m.e, m.f, self.kmod(m.k as i64 - 1)), c * &minus);
                }
                fe[b][a] = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        fe
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Dimension of the algebra, `2p³`.
    pub fn dim(&self) -> usize {
        2 * (self.p as usize).pow(3)
    }

    /// `q^k`.
    pub fn q(&self, k: i64) -> CycNum {
        CycNum::zeta_pow(&self.field, k)
    }

    /// The quantum integer `[n]`.
    pub fn qint(&self, n: i64) -> CycNum {
        q_int(&self.field, n)
    }

    /// `(q - q^{-1})^{-1}`.
    pub fn kappa(&self) -> &CycNum {
        &self.kappa
    }

    pub fn scalar_int(&self, n: i64) -> CycNum {
        CycNum::from_int(&self.field, n)
    }

    fn kmod(&self, k: i64) -> u32 {
        k.rem_euclid(2 * self.p as i64) as u32
    }

    /// `E^a F^b K^c`; `c` may be any integer.
    pub fn monomial(&self, a: u32, b: u32, c: i64) -> Result<Element> {
        if a >= self.p || b >= self.p {
            return Err(param(format!(
                "monomial exponents must be below p = {}: got E^{a} F^{b}",
                self.p
            )));
        }
        Ok(self.term(Monomial::new(a, b, self.kmod(c)), CycNum::one(&self.field)))
    }

    pub fn term(&self, m: Monomial, c: CycNum) -> Element {
        let mut x = Element::zero(self.p);
        x.add_term(m, &c);
        x
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.p)
    }

    pub fn one(&self) -> Element {
        self.scalar(CycNum::one(&self.field))
    }

    pub fn scalar(&self, c: CycNum) -> Element {
        self.term(Monomial::ONE, c)
    }

    pub fn e(&self) -> Element {
        self.term(Monomial::new(1, 0, 0), CycNum::one(&self.field))
    }

    pub fn f(&self) -> Element {
        self.term(Monomial::new(0, 1, 0), CycNum::one(&self.field))
    }

    pub fn k(&self) -> Element {
        self.k_pow(1)
    }

    /// `K^n` for any integer `n`.
    pub fn k_pow(&self, n: i64) -> Element {
        self.term(Monomial::new(0, 0, self.kmod(n)), CycNum::one(&self.field))
    }

    /// `E^n`, zero for `n >= p`.
    pub fn e_pow(&self, n: u32) -> Element {
        if n >= self.p {
            self.zero()
        } else {
            self.term(Monomial::new(n, 0, 0), CycNum::one(&self.field))
        }
    }

    /// `F^n`, zero for `n >= p`.
    pub fn f_pow(&self, n: u32) -> Element {
        if n >= self.p {
            self.zero()
        } else {
            self.term(Monomial::new(0, n, 0), CycNum::one(&self.field))
        }
    }

    /// All `2p³` basis monomials in index order.
    pub fn monomials(&self) -> Vec<Monomial> {
        let p = self.p;
        let mut out = Vec::with_capacity(self.dim());
        for e in 0..p {
            for f in 0..p {
                for k in 0..2 * p {
                    out.push(Monomial::new(e, f, k));
                }
            }
        }
        out
    }

    /// Position of `m` in the lexicographic `(e, f, k)` ordering.
    pub fn index_of(&self, m: &Monomial) -> usize {
        let p = self.p as usize;
        (m.e as usize * p + m.f as usize) * 2 * p + m.k as usize
    }

    pub fn monomial_at(&self, idx: usize) -> Monomial {
        let p = self.p as usize;
        let k = idx % (2 * p);
        let f = (idx / (2 * p)) % p;
        let e = idx / (2 * p * p);
        Monomial::new(e as u32, f as u32, k as u32)
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.p == self.p {
            Ok(())
        } else {
            Err(Error::MismatchedP { left: self.p, right: x.p })
        }
    }

    /// Product of two basis monomials, accumulated into `acc` with weight `w`.
    fn mul_monomials_into(
        &self,
        m1: &Monomial,
        m2: &Monomial,
        w: &CycNum,
        acc: &mut BTreeMap<Monomial, CycNum>,
    ) {
        let p = self.p;
        let k_phase = 2 * m1.k as i64 * (m2.e as i64 - m2.f as i64);
        for (t, tc) in &self.fe[m1.f as usize][m2.e as usize] {
            let e = m1.e + t.e;
            let f = t.f + m2.f;
            if e >= p || f >= p {
                continue;
            }
            // K^{t.k} F^{m2.f} = q^{-2 t.k m2.f} F^{m2.f} K^{t.k}
            let phase = k_phase - 2 * t.k as i64 * m2.f as i64;
            let k = self.kmod(t.k as i64 + m1.k as i64 + m2.k as i64);
            let c = &(w * tc) * &self.q(phase);
            let entry = acc
                .entry(Monomial::new(e, f, k))
                .or_insert_with(|| CycNum::zero(&self.field));
            *entry += &c;
        }
    }

    /// Normal-form product `x · y`.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = BTreeMap::new();
        for (m1, c1) in &x.terms {
            for (m2, c2) in &y.terms {
                self.mul_monomials_into(m1, m2, &(c1 * c2), &mut acc);
            }
        }
        Ok(Element {
            p: self.p,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Left-to-right product of several factors.
    pub fn product(&self, factors: &[&Element]) -> Result<Element> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `x·y - y·x`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        self.mul(x, y)?.try_sub(&self.mul(y, x)?)
    }

    pub fn pow(&self, x: &Element, n: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `[1, x, x², …, x^max]`.
    pub fn power_sequence(&self, x: &Element, max: usize) -> Result<Vec<Element>> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(self.one());
        for i in 1..=max {
            let next = self.mul(&out[i - 1], x)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Coefficient vector of length `2p³` in monomial index order.
    pub fn element_to_row(&self, x: &Element) -> Result<Row> {
        self.check(x)?;
        let mut row = vec![CycNum::zero(&self.field); self.dim()];
        for (m, c) in &x.terms {
            row[self.index_of(m)] = c.clone();
        }
        Ok(row)
    }

    pub fn row_to_element(&self, row: &[CycNum]) -> Result<Element> {
        if row.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), found: row.len() });
        }
        let mut x = self.zero();
        for (i, c) in row.iter().enumerate() {
            x.add_term(self.monomial_at(i), c);
        }
        Ok(x)
    }

    /// Linear combination `Σ c_i x_i`.
    pub fn combination(&self, coeffs: &[CycNum], elems: &[&Element]) -> Result<Element> {
        let mut acc = self.zero();
        for (c, x) in coeffs.iter().zip(elems) {
            acc = acc.try_add(&x.scale(c))?;
        }
        Ok(acc)
    }

    /// Parses the JSON term-list form.
    pub fn from_json(&self, terms: &[TermJson]) -> Result<Element> {
        let mut x = self.zero();
        for t in terms {
            let m = self.monomial(t.e, t.f, t.k as i64)?;
            let c = CycNum::parse_strings(&self.field, &t.coeff)?;
            x = x.try_add(&m.scale(&c))?;
        }
        Ok(x)
    }

    /// `(K - K^{-1}) / (q - q^{-1})`.
    pub fn cartan_commutator(&self) -> Element {
        (&self.k() - &self.k_pow(-1)).scale(&self.kappa)
    }

    /// Residuals `lhs - rhs` of the defining relations, labelled.
    pub fn defining_relation_residuals(&self) -> Result<Vec<(&'static str, Element)>> {
        let e = self.e();
        let f = self.f();
        let k = self.k();
        let kinv = self.k_pow(-1);
        let p = self.p;
        let kek = self.product(&[&k, &e, &kinv])?;
        let kfk = self.product(&[&k, &f, &kinv])?;
        Ok(vec![
            ("E^p = 0", self.pow(&e, p)?),
            ("F^p = 0", self.pow(&f, p)?),
            ("K^2p = 1", self.pow(&k, 2 * p)?.try_sub(&self.one())?),
            ("K E K^-1 = q^2 E", kek.try_sub(&e.scale(&self.q(2)))?),
            ("K F K^-1 = q^-2 F", kfk.try_sub(&f.scale(&self.q(-2)))?),
            (
                "[E, F] = (K - K^-1)/(q - q^-1)",
                self.commutator(&e, &f)?.try_sub(&self.cartan_commutator())?,
            ),
        ])
    }

    /// Residuals of the four commutation formulas for `[E, F^m]` and
    /// `[E^m, F]`, `1 <= m <= p-1`.
    pub fn power_commutator_residuals(&self, m: u32) -> Result<Vec<Element>> {
        let e = self.e();
        let f = self.f();
        let mi = m as i64;
        let qm = self.qint(mi);
        let lin = |a: i64, b: i64| -> Element {
            // (q^a K - q^b K^-1)/(q - q^-1)
            (&self.k().scale(&self.q(a)) - &self.k_pow(-1).scale(&self.q(b))).scale(&self.kappa)
        };
        let fm = self.f_pow(m);
        let em = self.e_pow(m);
        let fm1 = self.f_pow(m - 1);
        let em1 = self.e_pow(m - 1);
        let ef = self.commutator(&e, &fm)?;
        let ee = self.commutator(&em, &f)?;
        let r1 = self.mul(&fm1, &lin(-(mi - 1), mi - 1))?.scale(&qm);
        let r2 = self.mul(&lin(mi - 1, -(mi - 1)), &fm1)?.scale(&qm);
        let r3 = self.mul(&em1, &lin(mi - 1, -(mi - 1)))?.scale(&qm);
        let r4 = self.mul(&lin(-(mi - 1), mi - 1), &em1)?.scale(&qm);
        Ok(vec![
            ef.try_sub(&r1)?,
            ef.try_sub(&r2)?,
            ee.try_sub(&r3)?,
            ee.try_sub(&r4)?,
        ])
    }
}

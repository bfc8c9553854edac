//! The basic algebra `eUe`, its eight-dimensional blocks `B_s`, their
//! multiplication and commutator tables, and dimensions of spaces of
//! symmetric linear functions `dim A/[A, A]`.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclotomic::CycNum;
use crate::error::{param, Error, Result};
use crate::idempotents::{primitive_idempotent, IdempotentSet, Residual};
use crate::linalg::{CoordinateSolver, RankAccumulator, Row};
use crate::pbw::{Element, Uq};
use crate::sign::Sign;

/// Short identifiers of the basis of `B_s`, in table order.
pub const IDS: [&str; 8] = ["ep", "X0p", "Y0p", "A0p", "em", "X0m", "Y0m", "A0m"];

/// Display labels of the basis of `B_s`, in table order.
pub const LABELS: [&str; 8] = [
    "e_s^+", "X_0^+", "Y_0^+", "A_0^+", "e_{p-s}^-", "X_0^-", "Y_0^-", "A_0^-",
];

const EP: usize = 0;
const X0P: usize = 1;
const Y0P: usize = 2;
const A0P: usize = 3;
const EM: usize = 4;
const X0M: usize = 5;
const Y0M: usize = 6;
const A0M: usize = 7;

/// Expected products `row · column`; `None` is zero.
pub const PRODUCT_TABLE: [[Option<usize>; 8]; 8] = {
    const N: Option<usize> = None;
    [
        [Some(EP), N, N, Some(A0P), N, Some(X0M), Some(Y0M), N],
        [Some(X0P), N, N, N, N, N, Some(A0M), N],
        [Some(Y0P), N, N, N, N, Some(A0M), N, N],
        [Some(A0P), N, N, N, N, N, N, N],
        [N, Some(X0P), Some(Y0P), N, Some(EM), N, N, Some(A0M)],
        [N, N, Some(A0P), N, Some(X0M), N, N, N],
        [N, Some(A0P), N, N, Some(Y0M), N, N, N],
        [N, N, N, N, Some(A0M), N, N, N],
    ]
};

/// Indices (into the 8-element basis) of the six rows/columns of the commutator table.
pub const COMMUTATOR_INDICES: [usize; 6] = [EP, X0P, Y0P, EM, X0M, Y0M];

/// Expected commutators `[row, column]` among the six non-`A` basis elements,
/// as integer combinations of basis indices.
pub fn commutator_cells() -> [[Vec<(usize, i64)>; 6]; 6] {
    let z = Vec::new;
    let one = |i: usize| vec![(i, 1)];
    let neg = |i: usize| vec![(i, -1)];
    let am_ap = || vec![(A0P, -1), (A0M, 1)];
    let ap_am = || vec![(A0P, 1), (A0M, -1)];
    [
        [z(), neg(X0P), neg(Y0P), z(), one(X0M), one(Y0M)],
        [one(X0P), z(), z(), neg(X0P), z(), am_ap()],
        [one(Y0P), z(), z(), neg(Y0P), am_ap(), z()],
        [z(), one(X0P), one(Y0P), z(), neg(X0M), neg(Y0M)],
        // the (X_0^-, X_0^+) cell is zero: both products X_0^- X_0^+ and
        // X_0^+ X_0^- vanish in the multiplication table
        [neg(X0M), z(), ap_am(), one(X0M), z(), z()],
        [neg(Y0M), ap_am(), z(), one(Y0M), z(), z()],
    ]
}

fn check_block(p: u32, s: u32) -> Result<()> {
    if p < 2 || s < 1 || s >= p {
        return Err(param(format!("block index s must lie in 1..={} for p = {p}, got {s}", p.saturating_sub(1))));
    }
    Ok(())
}

/// `e = Σ_{s=1}^{p-1} (e_s^+ + e_{p-s}^-) + e_p^+ + e_p^-`, certified idempotent.
pub fn basic_idempotent(p: u32) -> Result<Element> {
    basic_idempotent_from(&IdempotentSet::new(p)?)
}

pub fn basic_idempotent_from(set: &IdempotentSet) -> Result<Element> {
    let uq = Uq::shared(set.p)?;
    let e = set.elements.values().fold(uq.zero(), |acc, x| &acc + x);
    if uq.mul(&e, &e)? != e {
        return Err(Error::Consistency("basic idempotent is not idempotent".into()));
    }
    Ok(e)
}

/// `∏_{ℓ=lo}^{m-1} sign·[ℓ][m-ℓ]`.
fn pair_product(uq: &Uq, sign: Sign, lo: i64, m: i64) -> CycNum {
    (lo..m).fold(uq.scalar_int(1), |acc, l| {
        &acc * &(&uq.qint(l) * &uq.qint(m - l)).scale_int(sign.unit())
    })
}

/// The spanning families of `Q_s (e_s^+ + e_{p-s}^-) ≅ P_s^+ ⊕ P_{p-s}^-`.
#[derive(Clone, Debug)]
pub struct IdealFamilies {
    /// `B_n^+ = F^n e_s^+`, `0 <= n < s`.
    pub b_plus: Vec<Element>,
    /// `X_k^+ = E^{p-s-k} e_s^+ / ∏_{ℓ=k+1}^{p-s-1}(-[ℓ][p-s-ℓ])`, `0 <= k < p-s`.
    pub x_plus: Vec<Element>,
    /// `Y_k^+ = F^{s+k} e_s^+`.
    pub y_plus: Vec<Element>,
    /// `A_n^+ = F^{n+1} E e_s^+`.
    pub a_plus: Vec<Element>,
    /// `B_k^- = F^k e_{p-s}^-`, `0 <= k < p-s`.
    pub b_minus: Vec<Element>,
    /// `X_n^- = E^{s-n} e_{p-s}^- / ∏_{ℓ=n+1}^{s-1}[ℓ][s-ℓ]`, `0 <= n < s`.
    pub x_minus: Vec<Element>,
    /// `Y_n^- = F^{p-s+n} e_{p-s}^-`.
    pub y_minus: Vec<Element>,
    /// `A_k^- = F^{k+1} E e_{p-s}^-`.
    pub a_minus: Vec<Element>,
}

impl IdealFamilies {
    pub fn new(p: u32, s: u32, e_plus: &Element, e_minus: &Element) -> Result<Self> {
        check_block(p, s)?;
        let uq = Uq::shared(p)?;
        let t = p - s;
        let (si, ti) = (s as i64, t as i64);
        let fe = |n: u32, e: &Element| uq.product(&[&uq.f_pow(n), &uq.e(), e]);
        let scaled_e = |pow: u32, norm: CycNum, e: &Element| -> Result<Element> {
            Ok(uq.mul(&uq.e_pow(pow), e)?.scale(&norm.inv()?))
        };
        Ok(IdealFamilies {
            b_plus: (0..s).map(|n| uq.mul(&uq.f_pow(n), e_plus)).collect::<Result<_>>()?,
            x_plus: (0..t)
                .map(|k| scaled_e(t - k, pair_product(&uq, Sign::Minus, k as i64 + 1, ti), e_plus))
                .collect::<Result<_>>()?,
            y_plus: (0..t).map(|k| uq.mul(&uq.f_pow(s + k), e_plus)).collect::<Result<_>>()?,
            a_plus: (0..s).map(|n| fe(n + 1, e_plus)).collect::<Result<_>>()?,
            b_minus: (0..t).map(|k| uq.mul(&uq.f_pow(k), e_minus)).collect::<Result<_>>()?,
            x_minus: (0..s)
                .map(|n| scaled_e(s - n, pair_product(&uq, Sign::Plus, n as i64 + 1, si), e_minus))
                .collect::<Result<_>>()?,
            y_minus: (0..s).map(|n| uq.mul(&uq.f_pow(t + n), e_minus)).collect::<Result<_>>()?,
            a_minus: (0..t).map(|k| fe(k + 1, e_minus)).collect::<Result<_>>()?,
        })
    }

    /// All `4p` vectors, plus family first.
    pub fn all(&self) -> Vec<&Element> {
        [
            &self.b_plus, &self.x_plus, &self.y_plus, &self.a_plus,
            &self.b_minus, &self.x_minus, &self.y_minus, &self.a_minus,
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

/// The labelled eight-element basis of `B_s`.
#[derive(Clone, Debug)]
pub struct BasicBasis {
    pub p: u32,
    pub s: u32,
    /// In [`LABELS`] order.
    pub elements: Vec<Element>,
    pub families: IdealFamilies,
    solver: CoordinateSolver,
}

impl BasicBasis {
    pub fn new(p: u32, s: u32) -> Result<Self> {
        check_block(p, s)?;
        let e_plus = primitive_idempotent(s, Sign::Plus, p)?;
        let e_minus = primitive_idempotent(p - s, Sign::Minus, p)?;
        Self::from_idempotents(p, s, e_plus, e_minus)
    }

    pub fn from_set(set: &IdempotentSet, s: u32) -> Result<Self> {
        check_block(set.p, s)?;
        let e_plus = set.get(s, Sign::Plus)?.clone();
        let e_minus = set.get(set.p - s, Sign::Minus)?.clone();
        Self::from_idempotents(set.p, s, e_plus, e_minus)
    }

    fn from_idempotents(p: u32, s: u32, e_plus: Element, e_minus: Element) -> Result<Self> {
        let uq = Uq::shared(p)?;
        let families = IdealFamilies::new(p, s, &e_plus, &e_minus)?;
        let elements = vec![
            e_plus,
            families.x_plus[0].clone(),
            families.y_plus[0].clone(),
            families.a_plus[0].clone(),
            e_minus,
            families.x_minus[0].clone(),
            families.y_minus[0].clone(),
            families.a_minus[0].clone(),
        ];
        let rows = elements.iter().map(|x| uq.element_to_row(x)).collect::<Result<Vec<_>>>()?;
        let solver = CoordinateSolver::new(uq.field(), &rows)?;
        let unit = &elements[EP] + &elements[EM];
        for (label, z) in LABELS.iter().zip(&elements) {
            if &uq.product(&[&unit, z, &unit])? != z {
                return Err(Error::Consistency(format!("{label} is not fixed by the block unit")));
            }
        }
        Ok(BasicBasis { p, s, elements, families, solver })
    }

    pub fn get(&self, id: &str) -> Option<&Element> {
        IDS.iter().position(|x| *x == id).map(|i| &self.elements[i])
    }

    /// Coordinates of `x` in the basis; an error if `x` is outside `B_s`.
    pub fn coordinates(&self, x: &Element) -> Result<Row> {
        let uq = Uq::shared(self.p)?;
        self.solver.solve(&uq.element_to_row(x)?)?.ok_or_else(|| {
            Error::Consistency(format!("element {x} does not lie in B_{}", self.s))
        })
    }

    /// Left multiplications by `e_s^+` and `e_{p-s}^-` on the spanning
    /// families, against the expected value (itself or zero).
    pub fn annihilation_residuals(&self) -> Result<Vec<Residual>> {
        let uq = Uq::shared(self.p)?;
        let f = &self.families;
        let (ep, em) = (&self.elements[EP], &self.elements[EM]);
        let mut out = Vec::new();
        let fams: [(&str, &Vec<Element>, bool); 8] = [
            ("B+", &f.b_plus, true),
            ("X+", &f.x_plus, false),
            ("Y+", &f.y_plus, false),
            ("A+", &f.a_plus, true),
            ("B-", &f.b_minus, false),
            ("X-", &f.x_minus, true),
            ("Y-", &f.y_minus, true),
            ("A-", &f.a_minus, false),
        ];
        // e_s^+ fixes index 0 of the families whose top weight is q^{s-1}
        // (B_0^+ = e_s^+, A_0^+, X_0^-, Y_0^-) and kills the rest; e_{p-s}^-
        // fixes index 0 of the other four families.
        for (name, fam, plus_top) in fams {
            for (i, v) in fam.iter().enumerate() {
                for (ename, e, fixes) in [("e_s^+", ep, plus_top), ("e_(p-s)^-", em, !plus_top)] {
                    let got = uq.mul(e, v)?;
                    let expect = if fixes && i == 0 { v.clone() } else { uq.zero() };
                    out.push((format!("{ename} {name}_{i}"), &got - &expect));
                }
            }
        }
        Ok(out)
    }
}

/// One cell of a table: a formal combination of basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell(pub Vec<(usize, CycNum)>);

impl Cell {
    fn from_coords(coords: &[CycNum]) -> Self {
        Cell(
            coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        )
    }

    fn from_ints(field: &std::sync::Arc<crate::cyclotomic::CycField>, terms: &[(usize, i64)]) -> Self {
        Cell(terms.iter().map(|&(i, c)| (i, CycNum::from_int(field, c))).collect())
    }

    fn from_label(field: &std::sync::Arc<crate::cyclotomic::CycField>, label: Option<usize>) -> Self {
        match label {
            None => Cell(Vec::new()),
            Some(i) => Cell(vec![(i, CycNum::one(field))]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `"0"`, a bare label, `{"label", "coeff"}` for a single scaled label,
    /// or a list of such objects.
    pub fn to_json(&self) -> Value {
        let obj = |(i, c): &(usize, CycNum)| json!({"label": LABELS[*i], "coeff": c.to_strings()});
        match self.0.as_slice() {
            [] => json!("0"),
            [(i, c)] if c.is_one() => json!(LABELS[*i]),
            [single] => obj(single),
            many => Value::Array(many.iter().map(obj).collect()),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.0.iter().enumerate() {
            let minus_one = c.scale_int(-1).is_one();
            match (n, c.is_one(), minus_one) {
                (0, true, _) => write!(f, "{}", LABELS[*i])?,
                (0, _, true) => write!(f, "-{}", LABELS[*i])?,
                (_, true, _) => write!(f, " + {}", LABELS[*i])?,
                (_, _, true) => write!(f, " - {}", LABELS[*i])?,
                (0, _, _) => write!(f, "{}*{}", c.display_coeff(), LABELS[*i])?,
                _ => write!(f, " + {}*{}", c.display_coeff(), LABELS[*i])?,
            }
        }
        Ok(())
    }
}

/// A square grid of cells with row and column labels (basis indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub rows: Vec<usize>,
    pub cells: Vec<Vec<Cell>>,
}

#[derive(Serialize)]
struct TableJson {
    labels: Vec<&'static str>,
    entries: Vec<Vec<Value>>,
}

impl Table {
    pub fn labels(&self) -> Vec<&'static str> {
        self.rows.iter().map(|&i| LABELS[i]).collect()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(TableJson {
            labels: self.labels(),
            entries: self.cells.iter().map(|r| r.iter().map(Cell::to_json).collect()).collect(),
        })
        .expect("table serialises")
    }

    /// Cells that differ from `other`, as `(row label, column label)`.
    pub fn mismatches(&self, other: &Table) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, (a, b)) in self.cells.iter().zip(&other.cells).enumerate() {
            for (j, (x, y)) in a.iter().zip(b).enumerate() {
                if x != y {
                    out.push((self.rows[i], self.rows[j]));
                }
            }
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> =
            self.cells.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let labels = self.labels();
        let mut width = labels.iter().map(|l| l.len()).max().unwrap_or(1);
        for r in &strings {
            for c in r {
                width = width.max(c.len());
            }
        }
        let mut lines = vec![std::iter::once("x \\ y")
            .chain(labels.iter().copied())
            .map(|c| format!("{c:width$}"))
            .collect::<Vec<_>>()
            .join("  ")];
        for (l, r) in labels.iter().zip(&strings) {
            let cells = std::iter::once(*l).chain(r.iter().map(String::as_str));
            lines.push(cells.map(|c| format!("{c:width$}")).collect::<Vec<_>>().join("  "));
        }
        for line in lines {
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// The expected multiplication table for a field of the given `p`.
pub fn expected_mult_table(p: u32) -> Result<Table> {
    let field = Uq::shared(p)?.field().clone();
    Ok(Table {
        rows: (0..8).collect(),
        cells: PRODUCT_TABLE
            .iter()
            .map(|r| r.iter().map(|&l| Cell::from_label(&field, l)).collect())
            .collect(),
    })
}

/// The expected commutator table.
pub fn expected_commutator_table(p: u32) -> Result<Table> {
    let field = Uq::shared(p)?.field().clone();
    Ok(Table {
        rows: COMMUTATOR_INDICES.to_vec(),
        cells: commutator_cells()
            .iter()
            .map(|r| r.iter().map(|c| Cell::from_ints(&field, c)).collect())
            .collect(),
    })
}

fn product_table(basis: &BasicBasis, commutator: bool, indices: &[usize]) -> Result<Table> {
    let uq = Uq::shared(basis.p)?;
    let mut cells = Vec::new();
    for &i in indices {
        let mut row = Vec::new();
        for &j in indices {
            let (x, y) = (&basis.elements[i], &basis.elements[j]);
            let v = if commutator { uq.commutator(x, y)? } else { uq.mul(x, y)? };
            row.push(Cell::from_coords(&basis.coordinates(&v)?));
        }
        cells.push(row);
    }
    Ok(Table { rows: indices.to_vec(), cells })
}

/// All 64 products `row · column` expressed in the basis.
pub fn mult_table_of(basis: &BasicBasis) -> Result<Table> {
    product_table(basis, false, &(0..8).collect::<Vec<_>>())
}

pub fn mult_table(p: u32, s: u32) -> Result<Table> {
    mult_table_of(&BasicBasis::new(p, s)?)
}

/// All 64 commutators expressed in the basis.
pub fn full_commutator_table_of(basis: &BasicBasis) -> Result<Table> {
    product_table(basis, true, &(0..8).collect::<Vec<_>>())
}

/// Commutators among the six non-`A` basis elements.
pub fn commutator_table_of(basis: &BasicBasis) -> Result<Table> {
    product_table(basis, true, &COMMUTATOR_INDICES)
}

pub fn commutator_table(p: u32, s: u32) -> Result<Table> {
    commutator_table_of(&BasicBasis::new(p, s)?)
}

/// `dim A/[A, A]` for the algebra spanned by `basis`.
///
/// Every product `b_i b_j` is expressed in the basis (a product leaving the
/// span is an error) and the commutators are streamed through a rank
/// accumulator in basis coordinates.
pub fn slf_dimension(basis: &[Element]) -> Result<usize> {
    let Some(first) = basis.first() else {
        return Ok(0);
    };
    let uq = Uq::shared(first.p())?;
    let rows = basis.iter().map(|x| uq.element_to_row(x)).collect::<Result<Vec<_>>>()?;
    let solver = CoordinateSolver::new(uq.field(), &rows)?;
    let coords = |x: &Element| -> Result<Row> {
        solver
            .solve(&uq.element_to_row(x)?)?
            .ok_or_else(|| Error::Consistency("basis is not closed under multiplication".into()))
    };
    let n = basis.len();
    let mut acc = RankAccumulator::new(n);
    for i in 0..n {
        coords(&uq.mul(&basis[i], &basis[i])?)?;
        for j in i + 1..n {
            let xy = coords(&uq.mul(&basis[i], &basis[j])?)?;
            let yx = coords(&uq.mul(&basis[j], &basis[i])?)?;
            let diff: Row = xy.iter().zip(&yx).map(|(a, b)| a - b).collect();
            if diff.iter().any(|c| !c.is_zero()) {
                acc.insert(diff)?;
            }
        }
    }
    Ok(n - acc.rank())
}

/// `dim U/[U, U]` over the full PBW basis, by streaming every monomial
/// commutator through a rank accumulator.
pub fn slf_full_algebra(p: u32) -> Result<usize> {
    let uq = Uq::shared(p)?;
    let one = CycNum::one(uq.field());
    let monos: Vec<Element> = uq.monomials().into_iter().map(|m| uq.term(m, one.clone())).collect();
    let mut acc = RankAccumulator::new(uq.dim());
    for i in 0..monos.len() {
        for j in i + 1..monos.len() {
            let c = uq.commutator(&monos[i], &monos[j])?;
            if !c.is_zero() {
                acc.insert(uq.element_to_row(&c)?)?;
            }
        }
    }
    Ok(uq.dim() - acc.rank())
}

/// Per-block SLF dimensions, `B_0, B_1, …, B_p`.
pub fn slf_blocks(p: u32) -> Result<Vec<usize>> {
    let set = IdempotentSet::new(p)?;
    slf_blocks_from(&set)
}

pub fn slf_blocks_from(set: &IdempotentSet) -> Result<Vec<usize>> {
    let p = set.p;
    let mut out = vec![slf_dimension(std::slice::from_ref(set.get(p, Sign::Minus)?))?];
    for s in 1..p {
        out.push(slf_dimension(&BasicBasis::from_set(set, s)?.elements)?);
    }
    out.push(slf_dimension(std::slice::from_ref(set.get(p, Sign::Plus)?))?);
    Ok(out)
}

/// Sum of the block SLF dimensions.
pub fn slf_total(p: u32) -> Result<usize> {
    Ok(slf_blocks(p)?.iter().sum())
}

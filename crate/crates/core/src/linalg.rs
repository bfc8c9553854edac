//! Dense exact linear algebra over `Q(ζ_{2p})`.
//!
//! Gaussian elimination picks the first nonzero entry in each column,
//! scanning rows top-down. Row updates skip zero entries of the pivot row,
//! so block-sparse inputs are cheap even though storage is dense.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{CycField, CycNum};
use crate::error::{param, Error, Result};

/// One coefficient vector.
pub type Row = Vec<CycNum>;

/// Row-major dense matrix.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    entries: Vec<CycNum>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![CycNum::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, CycNum::one(field));
        }
        m
    }

    /// Builds a matrix from equal-length rows; `cols` is used when `rows` is empty.
    pub fn from_rows(field: &Arc<CycField>, rows: &[Row], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, found: r.len() });
            }
            for c in r {
                if c.p() != field.p() {
                    return Err(Error::MismatchedP { left: field.p(), right: c.p() });
                }
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, entries })
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Row {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Row {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Row> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Matrix {
            entries: self.entries.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Entries as `"num/den"` coordinate arrays, nested by row.
    pub fn to_strings(&self) -> Vec<Vec<Vec<String>>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_strings()).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Eliminates in place; only the first `pivot_cols` columns may hold pivots.
/// Returns the pivot columns, one per leading row.
fn eliminate(rows: &mut [Row], pivot_cols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inv()?;
        for x in rows[next].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let support: Vec<(usize, CycNum)> = rows[next]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        for r in 0..rows.len() {
            if r == next || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for (i, x) in &support {
                rows[r][*i] -= &(&factor * x);
            }
        }
        pivots.push(col);
        next += 1;
    }
    Ok(pivots)
}

/// Reduced row-echelon form, rank and pivot columns.
pub fn rref(m: &Matrix) -> Result<Rref> {
    let mut rows = m.to_rows();
    let pivots = eliminate(&mut rows, m.cols)?;
    Ok(Rref {
        matrix: Matrix::from_rows(&m.field, &rows, m.cols)?,
        rank: pivots.len(),
        pivots,
    })
}

pub fn rank(m: &Matrix) -> Result<usize> {
    Ok(rref(m)?.rank)
}

/// Dimension of the span of `vectors`.
pub fn span_rank(vectors: &[Row]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let len = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != len) {
        return Err(Error::Dimension { expected: len, found: bad.len() });
    }
    if len == 0 {
        return Ok(0);
    }
    let mut rows = vectors.to_vec();
    Ok(eliminate(&mut rows, len)?.len())
}

/// Expresses vectors in a fixed linearly independent basis.
///
/// The basis is row-reduced once; each query then costs one sparse
/// reduction against the stored rows.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    len: usize,
    size: usize,
    /// Reduced basis rows, each with its pivot column.
    reduced: Vec<(usize, Row)>,
    /// `reduced[j] = Σ_i transform[j][i] * basis[i]`.
    transform: Vec<Row>,
}

impl CoordinateSolver {
    pub fn new(field: &Arc<CycField>, basis: &[Row]) -> Result<Self> {
        let size = basis.len();
        let len = basis.first().map_or(0, Vec::len);
        let mut aug = Vec::with_capacity(size);
        for (i, b) in basis.iter().enumerate() {
            if b.len() != len {
                return Err(Error::Dimension { expected: len, found: b.len() });
            }
            let mut row = b.clone();
            row.extend((0..size).map(|j| {
                if i == j {
                    CycNum::one(field)
                } else {
                    CycNum::zero(field)
                }
            }));
            aug.push(row);
        }
        let pivots = eliminate(&mut aug, len)?;
        if pivots.len() != size {
            return Err(param(format!(
                "basis of {size} vectors is linearly dependent (rank {})",
                pivots.len()
            )));
        }
        let mut reduced = Vec::with_capacity(size);
        let mut transform = Vec::with_capacity(size);
        for (row, &pc) in aug.into_iter().zip(&pivots) {
            let (head, tail) = row.split_at(len);
            reduced.push((pc, head.to_vec()));
            transform.push(tail.to_vec());
        }
        Ok(CoordinateSolver { len, size, reduced, transform })
    }

    pub fn dim(&self) -> usize {
        self.size
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, or `None` when `v` is not
    /// in the span.
    pub fn solve(&self, v: &[CycNum]) -> Result<Option<Row>> {
        if v.len() != self.len {
            return Err(Error::Dimension { expected: self.len, found: v.len() });
        }
        let field = match v.first() {
            Some(x) => x.field().clone(),
            None => return Ok(Some(Vec::new())),
        };
        let mut residual = v.to_vec();
        let mut weights = Vec::with_capacity(self.size);
        for (pc, row) in &self.reduced {
            let w = residual[*pc].clone();
            if !w.is_zero() {
                for (slot, x) in residual.iter_mut().zip(row) {
                    if !x.is_zero() {
                        *slot -= &(&w * x);
                    }
                }
            }
            weights.push(w);
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let mut coords = vec![CycNum::zero(&field); self.size];
        for (w, t) in weights.iter().zip(&self.transform) {
            if w.is_zero() {
                continue;
            }
            for (c, x) in coords.iter_mut().zip(t) {
                if !x.is_zero() {
                    *c += &(w * x);
                }
            }
        }
        Ok(Some(coords))
    }
}

/// One-shot form of [`CoordinateSolver::solve`].
pub fn coordinates(v: &[CycNum], basis: &[Row]) -> Result<Option<Row>> {
    let field = match v.first().or_else(|| basis.first().and_then(|b| b.first())) {
        Some(x) => x.field().clone(),
        None => return Ok(Some(vec![])),
    };
    CoordinateSolver::new(&field, basis)?.solve(v)
}

/// Streaming rank: vectors are inserted one at a time and only independent
/// ones are kept, in sparse echelon form keyed by pivot column.
#[derive(Clone, Debug)]
pub struct RankAccumulator {
    len: usize,
    rows: BTreeMap<usize, Vec<(usize, CycNum)>>,
}

impl RankAccumulator {
    pub fn new(len: usize) -> Self {
        RankAccumulator { len, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns whether it was independent.
    pub fn insert(&mut self, mut v: Row) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::Dimension { expected: self.len, found: v.len() });
        }
        for (&pc, row) in &self.rows {
            if v[pc].is_zero() {
                continue;
            }
            let w = v[pc].clone();
            for (i, x) in row {
                v[*i] -= &(&w * x);
            }
        }
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[pc].inv()?;
        let sparse = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x * &inv))
            .collect();
        self.rows.insert(pc, sparse);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Arc<CycField> {
        CycField::new(3).unwrap()
    }

    fn ints(field: &Arc<CycField>, v: &[i64]) -> Row {
        v.iter().map(|&x| CycNum::from_int(field, x)).collect()
    }

    #[test]
    fn identity_and_zero() {
        let f = f();
        let r = rref(&Matrix::identity(&f, 3)).unwrap();
        assert_eq!((r.rank, r.pivots), (3, vec![0, 1, 2]));
        let r = rref(&Matrix::zeros(&f, 2, 4)).unwrap();
        assert_eq!((r.rank, r.pivots), (0, vec![]));
    }

    #[test]
    fn rref_is_reduced() {
        let f = f();
        let q = CycNum::zeta_pow(&f, 1);
        let rows = vec![
            vec![CycNum::zero(&f), q.clone(), CycNum::one(&f)],
            vec![CycNum::one(&f), q.clone(), q.clone()],
            vec![CycNum::one(&f), &q + &q, &q + &CycNum::one(&f)],
        ];
        let m = Matrix::from_rows(&f, &rows, 3).unwrap();
        let r = rref(&m).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert!(r.matrix.get(0, 0).is_one());
        assert!(r.matrix.get(0, 1).is_zero());
        assert!(r.matrix.get(1, 1).is_one());
        assert!(r.matrix.get(1, 0).is_zero());
        assert!(r.matrix.row(2).iter().all(CycNum::is_zero));
    }

    #[test]
    fn span_rank_basics() {
        let f = f();
        assert_eq!(span_rank(&[]).unwrap(), 0);
        let v = ints(&f, &[1, 2, 0]);
        let w: Row = v.iter().map(|x| x.scale_int(2)).collect();
        assert_eq!(span_rank(&[v.clone(), w]).unwrap(), 1);
        assert!(span_rank(&[v, ints(&f, &[1])]).is_err());
    }

    #[test]
    fn coordinates_basics() {
        let f = f();
        let basis = vec![ints(&f, &[1, 1, 0]), ints(&f, &[0, 1, 1])];
        let c = coordinates(&basis[0], &basis).unwrap().unwrap();
        assert!(c[0].is_one() && c[1].is_zero());
        let c = coordinates(&ints(&f, &[0, 0, 0]), &basis).unwrap().unwrap();
        assert!(c.iter().all(CycNum::is_zero));
        let c = coordinates(&ints(&f, &[2, 5, 3]), &basis).unwrap().unwrap();
        assert_eq!(c, ints(&f, &[2, 3]));
        assert!(coordinates(&ints(&f, &[1, 0, 0]), &basis).unwrap().is_none());

        let dependent = vec![ints(&f, &[1, 1, 0]), ints(&f, &[2, 2, 0])];
        assert!(matches!(
            coordinates(&ints(&f, &[1, 1, 0]), &dependent),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn accumulator_matches_span_rank() {
        let f = f();
        let vs = vec![
            ints(&f, &[0, 1, 2, 0]),
            ints(&f, &[1, 0, 0, 1]),
            ints(&f, &[1, 1, 2, 1]),
            ints(&f, &[0, 0, 0, 0]),
            ints(&f, &[0, 0, 1, 0]),
        ];
        let mut acc = RankAccumulator::new(4);
        let kept: Vec<bool> = vs.iter().map(|v| acc.insert(v.clone()).unwrap()).collect();
        assert_eq!(kept, vec![true, true, false, false, true]);
        assert_eq!(acc.rank(), span_rank(&vs).unwrap());
    }

    #[test]
    fn matrix_product() {
        let f = f();
        let a = Matrix::from_rows(&f, &[ints(&f, &[1, 2]), ints(&f, &[0, 1])], 2).unwrap();
        let a2 = a.mul(&a).unwrap();
        assert_eq!(a2.row(0), ints(&f, &[1, 4]));
        assert_eq!(a.pow(3).unwrap().row(0), ints(&f, &[1, 6]));
        assert!(a.sub(&a).unwrap().is_zero());
    }
}

//! Dense matrices over the coefficient field.

mod poly;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use poly::{charpoly_root_check, expand_product, CharPoly, CharPolyRepr};

use crate::error::{Error, Result};
use crate::scalars::{FieldContext, Scalar, ScalarRepr};

#[derive(Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
    /// Zero of the field, kept so empty matrices still know their field.
    zero: Scalar,
}

/// JSON form of a matrix; entries row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRepr {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_labels: Option<Vec<String>>,
}

impl PartialEq for ExactMatrix {
    /// Shape and entries; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.entries.chunks(self.cols.max(1))).finish()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "({}x{} empty)", self.rows, self.cols);
        }
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                let s = &cells[r * self.cols + c];
                let pad = width - s.chars().count();
                write!(f, "{}{}{}", if c > 0 { "  " } else { " " }, " ".repeat(pad), s)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(ctx: &FieldContext, rows: usize, cols: usize) -> Self {
        let zero = ctx.zero();
        ExactMatrix { rows, cols, entries: vec![zero.clone(); rows * cols], row_labels: None, col_labels: None, zero }
    }

    pub fn identity(ctx: &FieldContext, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ctx.one();
        }
        m
    }

    /// `1×1` matrix.
    pub fn scalar(ctx: &FieldContext, x: Scalar) -> Self {
        Self::from_rows(ctx, vec![vec![x]]).expect("one entry")
    }

    pub fn from_rows(ctx: &FieldContext, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: if r == 0 { 0 } else { c },
            entries: rows.into_iter().flatten().collect(),
            row_labels: None,
            col_labels: None,
            zero: ctx.zero(),
        })
    }

    pub fn diagonal(ctx: &FieldContext, d: &[Scalar]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(ctx, n, n);
        for (i, x) in d.iter().enumerate() {
            m.entries[i * n + i] = x.clone();
        }
        m
    }

    pub(crate) fn like(&self, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![self.zero.clone(); rows * cols],
            row_labels: None,
            col_labels: None,
            zero: self.zero.clone(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn with_labels(mut self, rows: Option<Vec<String>>, cols: Option<Vec<String>>) -> Result<Self> {
        if rows.as_ref().is_some_and(|l| l.len() != self.rows) || cols.as_ref().is_some_and(|l| l.len() != self.cols) {
            return Err(Error::Dimension("label count does not match matrix shape".into()));
        }
        self.row_labels = rows;
        self.col_labels = cols;
        Ok(self)
    }

    /// Same labels on rows and columns, for endomorphisms.
    pub fn with_basis(self, labels: Vec<String>) -> Result<Self> {
        self.with_labels(Some(labels.clone()), Some(labels))
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let mut out = self.like(self.rows, self.cols);
        out.entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let mut out = self.like(self.rows, self.cols);
        out.entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = &*e * s;
        }
        out
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.like(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = other.col_labels.clone();
        Ok(out)
    }

    /// Kronecker product, lexicographic index order.
    pub fn tensor(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = self.like(r, c);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.entries[(i1 * other.rows + i2) * c + j1 * other.cols + j2] = a * b;
                        }
                    }
                }
            }
        }
        let pair = |x: &Option<Vec<String>>, y: &Option<Vec<String>>| match (x, y) {
            (Some(x), Some(y)) => Some(x.iter().flat_map(|a| y.iter().map(move |b| format!("{a}⊗{b}"))).collect()),
            _ => None,
        };
        out.row_labels = pair(&self.row_labels, &other.row_labels);
        out.col_labels = pair(&self.col_labels, &other.col_labels);
        out
    }

    /// Block-diagonal sum.
    pub fn dsum(&self, other: &Self) -> Self {
        let mut out = self.like(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        let join = |x: &Option<Vec<String>>, y: &Option<Vec<String>>, nx: usize, ny: usize| match (x, y) {
            (None, None) => None,
            _ => {
                let mut v = x.clone().unwrap_or_else(|| (0..nx).map(|i| i.to_string()).collect());
                v.extend(y.clone().unwrap_or_else(|| (nx..nx + ny).map(|i| i.to_string()).collect()));
                Some(v)
            }
        };
        out.row_labels = join(&self.row_labels, &other.row_labels, self.rows, other.rows);
        out.col_labels = join(&self.col_labels, &other.col_labels, self.cols, other.cols);
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.like(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out.row_labels = self.col_labels.clone();
        out.col_labels = self.row_labels.clone();
        out
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_square("trace")?;
        let mut t = self.zero.clone();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square("pow")?;
        let mut acc = self.identity_like();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn one(&self) -> Scalar {
        self.zero.pow(0).expect("x^0 is 1")
    }

    fn identity_like(&self) -> Self {
        let mut m = self.like(self.rows, self.rows);
        for i in 0..self.rows {
            m.set(i, i, self.one());
        }
        m
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!("{what}: {}x{} is not square", self.rows, self.cols)))
        }
    }

    fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[Scalar]>::to_vec).collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..rows.len() {
                if i == r || rows[i][c].is_zero() {
                    continue;
                }
                let f = rows[i][c].clone();
                let (pivot, target) = pivot_and_target(rows, r, i);
                for (t, x) in target[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    if !x.is_zero() {
                        *t -= &(&f * x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank and a basis of the right kernel.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let mut rows = self.to_rows();
        let pivots = Self::rref(&mut rows, self.cols);
        let one = self.one();
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![self.zero.clone(); self.cols];
            v[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[r][free];
            }
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        Self::rref(&mut rows, self.cols).len()
    }

    /// Indices of the first linearly independent columns, in order.
    pub fn independent_columns(&self) -> Vec<usize> {
        let mut rows = self.to_rows();
        Self::rref(&mut rows, self.cols)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = self.like(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = self.col_labels.as_ref().map(|l| idx.iter().map(|&j| l[j].clone()).collect());
        out
    }

    /// Solves `self · X = rhs` for `X`, where `self` has full column rank.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::Dimension("solve: row counts differ".into()));
        }
        let n = self.cols;
        let mut aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut row: Vec<Scalar> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..rhs.cols).map(|j| rhs.get(i, j).clone()));
                row
            })
            .collect();
        let pivots = Self::rref(&mut aug, n + rhs.cols);
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::Dimension("solve: system is singular or inconsistent".into()));
        }
        let mut out = self.like(n, rhs.cols);
        for (i, row) in aug.iter().enumerate().take(n) {
            for j in 0..rhs.cols {
                out.set(i, j, row[n + j].clone());
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        self.solve(&self.identity_like()).map_err(|_| Error::Division)
    }

    /// Characteristic polynomial `det(x·I − M)`.
    pub fn charpoly(&self) -> Result<CharPoly> {
        self.require_square("charpoly")?;
        Ok(poly::charpoly_hessenberg(self.to_rows(), &self.zero))
    }

    /// Restriction to the stable image `∩ Image(M^k)`; invertible or `0×0`.
    pub fn flat(&self) -> Result<Self> {
        self.require_square("flat")?;
        let d = self.rows;
        if self.rank() == d {
            return Ok(self.clone());
        }
        let md = self.pow(d as u32)?;
        let basis_idx = md.independent_columns();
        if basis_idx.is_empty() {
            return Ok(self.like(0, 0));
        }
        let b = md.select_columns(&basis_idx);
        let mb = self.mul(&b)?;
        let mut out = b.solve(&mb)?;
        if let Some(l) = &self.row_labels {
            let labels: Vec<String> = basis_idx.iter().map(|&j| format!("im({})", l[j])).collect();
            out = out.with_basis(labels)?;
        }
        Ok(out)
    }

    pub fn to_repr(&self) -> MatrixRepr {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Scalar::to_repr).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn from_repr(ctx: &FieldContext, r: &MatrixRepr) -> Result<Self> {
        if r.entries.len() != r.rows * r.cols {
            return Err(Error::Malformed("entry count does not match shape".into()));
        }
        let entries = r.entries.iter().map(|e| ctx.scalar_from_repr(e)).collect::<Result<Vec<_>>>()?;
        let m =
            ExactMatrix { rows: r.rows, cols: r.cols, entries, row_labels: None, col_labels: None, zero: ctx.zero() };
        m.with_labels(r.row_labels.clone(), r.col_labels.clone())
    }
}

#[cfg(test)]
mod tests;

/// Row `r` for reading and row `i` for writing, `i ≠ r`.
fn pivot_and_target(rows: &mut [Vec<Scalar>], r: usize, i: usize) -> (&[Scalar], &mut [Scalar]) {
    if i < r {
        let (head, tail) = rows.split_at_mut(r);
        (&tail[0], &mut head[i])
    } else {
        let (head, tail) = rows.split_at_mut(i);
        (&head[r], &mut tail[0])
    }
}

//! Dense matrices over a [`Field`] with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Elem>),
    Affine {
        particular: Vec<Elem>,
        kernel: Vec<Vec<Elem>>,
    },
    NoSolution,
}

impl FMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FMatrix {
        FMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> FMatrix {
        let mut m = FMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> FMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from rows. An empty row list gives a 0×0 matrix; use
    /// [`FMatrix::zeros`] for an empty matrix with a known column count.
    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<FMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(field, rows, cols)
    }

    pub fn from_rows_with_cols(field: &Field, rows: &[Vec<Elem>], cols: usize) -> Result<FMatrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&a| !field.contains(a)) {
                return Err(Error::ValueOutOfField(bad.value().to_string()));
            }
            data.extend_from_slice(row);
        }
        Ok(FMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Parses rows of element strings in the field grammar.
    pub fn parse_rows<S: AsRef<str>>(field: &Field, rows: &[Vec<S>]) -> Result<FMatrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FMatrix::from_rows(field, &parsed)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.row_iter()
            .map(|r| self.field.format_vector(r))
            .collect()
    }

    /// Square matrix with `v` on the diagonal.
    pub fn diag(field: &Field, v: &[Elem]) -> FMatrix {
        let mut m = FMatrix::zeros(field, v.len(), v.len());
        for (i, &a) in v.iter().enumerate() {
            m.set(i, i, a);
        }
        m
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, a: Elem) {
        self.data[i * self.cols + j] = a;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        self.row_iter().map(<[Elem]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn transpose(&self) -> FMatrix {
        FMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn matmul(&self, other: &FMatrix) -> Result<FMatrix> {
        self.field.same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = FMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                let src = other.row(l);
                let dst = out.row_mut(i);
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d = f.mul_add(*d, a, b);
                }
            }
        }
        Ok(out)
    }

    /// `M · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok(self.row_iter().map(|r| dot(&self.field, r, x)).collect())
    }

    /// `x · M` for a row vector `x`.
    pub fn vec_mul(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{}",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (d, &b) in out.iter_mut().zip(self.row(i)) {
                *d = f.mul_add(*d, a, b);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut g: impl FnMut(Elem) -> Elem) -> FMatrix {
        FMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| g(a)).collect(),
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> FMatrix {
        FMatrix::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> FMatrix {
        FMatrix::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn hstack(&self, other: &FMatrix) -> Result<FMatrix> {
        self.field.same(&other.field)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(FMatrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    pub fn vstack(&self, other: &FMatrix) -> Result<FMatrix> {
        self.field.same(&other.field)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Appends `col` as a new last column.
    pub fn append_column(&self, col: &[Elem]) -> Result<FMatrix> {
        if col.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "column of length {} for {} rows",
                col.len(),
                self.rows
            )));
        }
        Ok(FMatrix::from_fn(&self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                col[i]
            }
        }))
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Reduces in place; columns are scanned left to right and the pivot is
    /// the first nonzero entry at or below the current row.
    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for a in &mut self.data[r * cols + c..(r + 1) * cols] {
                *a = f.mul(*a, inv);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for row in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = row[c];
                if factor.is_zero() {
                    continue;
                }
                let factor = f.neg(factor);
                for (a, &b) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *a = f.mul_add(*a, factor, b);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of `{x : M x = 0}`: one vector per free column in ascending
    /// order, with `-1` at that free column and the pivot entries read off
    /// the reduced matrix.
    pub fn null_space(&self) -> Vec<Vec<Elem>> {
        let rr = self.rref();
        kernel_from_rref(&rr.matrix, &rr.pivots, self.cols)
    }

    pub fn solve_right(&self, b: &[Elem]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.append_column(b)?;
        let rr = aug.rref();
        if rr.pivots.last() == Some(&self.cols) {
            return Ok(Solution::NoSolution);
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (i, &p) in rr.pivots.iter().enumerate() {
            x[p] = rr.matrix.get(i, self.cols);
        }
        let kernel = kernel_from_rref(&rr.matrix, &rr.pivots, self.cols);
        Ok(if kernel.is_empty() {
            Solution::Unique(x)
        } else {
            Solution::Affine {
                particular: x,
                kernel,
            }
        })
    }
}

fn kernel_from_rref(r: &FMatrix, pivots: &[usize], cols: usize) -> Vec<Vec<Elem>> {
    let f = r.field();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let minus_one = f.neg(Elem::ONE);
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![Elem::ZERO; cols];
            x[free] = minus_one;
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = r.get(i, free);
            }
            x
        })
        .collect()
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.mul_add(acc, x, y))
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "FMatrix {}x{} over {} ", self.rows, self.cols, self.field)?;
        out.debug_list().entries(self.to_strings()).finish()
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(out, "[ {} ]", line.join(" "))?;
        }
        Ok(())
    }
}

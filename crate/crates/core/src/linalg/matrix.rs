use std::fmt;

use crate::error::{Error, Result};

use super::scalar::{FieldSpec, Scalar};

/// Dense row-major matrix over a single field.
///
/// A matrix of shape `r x c` represents a linear map from a `c`-dimensional
/// space to an `r`-dimensional one, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(field);
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from nested rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::dims(
                    "from_rows",
                    format!("row {i} has {} entries, expected {cols}", row.len()),
                ));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers; panics on ragged input.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| {
            assert_eq!(rows[i].len(), cols, "ragged integer matrix");
            Scalar::from_i64(field, rows[i][j])
        })
    }

    pub fn column_vector(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        let rows = entries.len();
        Matrix {
            field,
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn row_vector(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        let cols = entries.len();
        Matrix {
            field,
            rows: 1,
            cols,
            data: entries,
        }
    }

    /// The `i`-th standard basis column of length `n`.
    pub fn unit_column(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.data[i] = Scalar::one(field);
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch in set");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn column_matrix(&self, j: usize) -> Matrix {
        Matrix::column_vector(self.field, self.column(j))
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::dims(
                "mul",
                format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            ));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let n = other.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let b_row = &other.data[k * n..(k + 1) * n];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    if !b.is_zero() {
                        o.add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::dims(
                op,
                format!("{:?} vs {:?}", self.shape(), other.shape()),
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|x| x * s)
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| -x)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Kronecker product; row index `i * other.rows + k`, column `j * other.cols + l`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(a ⊗ b) * self` without forming the Kronecker product.
    pub fn kron_apply(a: &Matrix, b: &Matrix, y: &Matrix) -> Result<Matrix> {
        a.same_field(b)?;
        a.same_field(y)?;
        if a.cols * b.cols != y.rows {
            return Err(Error::dims(
                "kron_apply",
                format!(
                    "({}x{} ⊗ {}x{}) times {}x{}",
                    a.rows, a.cols, b.rows, b.cols, y.rows, y.cols
                ),
            ));
        }
        let field = a.field;
        let mut out = Matrix::zeros(field, a.rows * b.rows, y.cols);
        // For each column, view it as an a.cols x b.cols block Z and form A Z B^T.
        let bt = b.transpose();
        for col in 0..y.cols {
            let z = Matrix::from_fn(field, a.cols, b.cols, |i, j| {
                y.get(i * b.cols + j, col).clone()
            });
            if z.is_zero() {
                continue;
            }
            let w = a.mul(&z)?.mul(&bt)?;
            for (idx, s) in w.data.into_iter().enumerate() {
                out.data[idx * y.cols + col] = s;
            }
        }
        Ok(out)
    }

    pub fn hstack(parts: &[&Matrix]) -> Result<Matrix> {
        let first = parts
            .first()
            .ok_or_else(|| Error::dims("hstack", "no blocks"))?;
        let rows = first.rows;
        for p in parts {
            first.same_field(p)?;
            if p.rows != rows {
                return Err(Error::dims(
                    "hstack",
                    format!("row counts {rows} and {}", p.rows),
                ));
            }
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for p in parts {
                data.extend_from_slice(p.row(i));
            }
        }
        Ok(Matrix {
            field: first.field,
            rows,
            cols,
            data,
        })
    }

    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let first = parts
            .first()
            .ok_or_else(|| Error::dims("vstack", "no blocks"))?;
        let cols = first.cols;
        let mut data = Vec::new();
        for p in parts {
            first.same_field(p)?;
            if p.cols != cols {
                return Err(Error::dims(
                    "vstack",
                    format!("column counts {cols} and {}", p.cols),
                ));
            }
            data.extend_from_slice(&p.data);
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        Ok(Matrix {
            field: first.field,
            rows,
            cols,
            data,
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| {
            self.get(idx[i], j).clone()
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| {
            self.get(i, idx[j]).clone()
        })
    }

    /// `P * self` where `P` sends basis vector `s` to `perm[s]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.rows, "permutation length");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols);
        for (s, &t) in perm.iter().enumerate() {
            out.data[t * self.cols..(t + 1) * self.cols].clone_from_slice(self.row(s));
        }
        out
    }

    /// `self * P` where `P` sends basis vector `s` to `perm[s]`.
    pub fn permute_cols(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.cols, "permutation length");
        Matrix::from_fn(self.field, self.rows, self.cols, |i, s| {
            self.get(i, perm[s]).clone()
        })
    }

    /// Reads a column of length `r * c` as an `r x c` block (row-major).
    pub fn reshape_column(&self, col: usize, r: usize, c: usize) -> Matrix {
        assert_eq!(self.rows, r * c, "reshape size");
        Matrix::from_fn(self.field, r, c, |i, j| self.get(i * c + j, col).clone())
    }

    /// `self * v` for a vector given as a slice.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    o.add_mul(a, b);
                }
            }
        }
        out
    }

    /// Stacks all entries row-major into a single column.
    pub fn flatten(&self) -> Matrix {
        Matrix::column_vector(self.field, self.data.clone())
    }
}

/// Product of the factors in the order written: `compose(&[a, b, c]) = a * b * c`.
pub fn compose(factors: &[&Matrix]) -> Result<Matrix> {
    let (last, rest) = factors
        .split_last()
        .ok_or_else(|| Error::dims("compose", "no factors"))?;
    let mut acc = (*last).clone();
    for f in rest.iter().rev() {
        acc = f.mul(&acc)?;
    }
    Ok(acc)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.kron(b)
}

/// Kronecker product of several factors, associating to the left.
pub fn kron_all(factors: &[&Matrix]) -> Result<Matrix> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::dims("kron_all", "no factors"))?;
    let mut acc = (*first).clone();
    for f in rest {
        acc = acc.kron(f)?;
    }
    Ok(acc)
}

/// The flip `V ⊗ W -> W ⊗ V` for `dim V = m`, `dim W = n`.
pub fn swap_map(field: FieldSpec, m: usize, n: usize) -> Matrix {
    let mut out = Matrix::zeros(field, m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            out.set(j * m + i, i * n + j, Scalar::one(field));
        }
    }
    out
}

/// Index permutation of `I_a ⊗ flip(b, c) ⊗ I_d` on a four-fold tensor.
pub fn middle_swap_perm(a: usize, b: usize, c: usize, d: usize) -> Vec<usize> {
    let mut perm = vec![0; a * b * c * d];
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                for l in 0..d {
                    perm[((i * b + j) * c + k) * d + l] = ((i * c + k) * b + j) * d + l;
                }
            }
        }
    }
    perm
}

use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Row reduces `m`; zero rows are dropped, so `matrix.rows() == rank`.
pub fn rref(m: &Matrix) -> Rref {
    let field = m.field();
    let cols = m.cols();
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    let matrix = Matrix::from_rows(field, cols, rows).expect("rows keep their shape");
    Rref { matrix, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).pivots.len()
}

/// Null space of `m` as a subspace of its column space domain.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let Rref { matrix: r, pivots } = rref(m);
    let mut vectors = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(field); n];
        v[f] = Scalar::one(field);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, f);
        }
        vectors.push(v);
    }
    Subspace::from_vectors(field, n, vectors)
}

/// Solves `a x = b` for a column `b`: a particular solution and the kernel of `a`.
pub fn solve_affine(a: &Matrix, b: &Matrix) -> Result<Option<(Matrix, Subspace)>> {
    if b.cols() != 1 || b.rows() != a.rows() {
        return Err(Error::dims(
            "solve_affine",
            format!("system {:?} with right side {:?}", a.shape(), b.shape()),
        ));
    }
    let aug = Matrix::hstack(&[a, b])?;
    let Rref { matrix: r, pivots } = rref(&aug);
    let n = a.cols();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let field = a.field();
    let mut x = vec![Scalar::zero(field); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, n).clone();
    }
    Ok(Some((Matrix::column_vector(field, x), kernel_basis(a))))
}

/// Solves `f(X) = rhs` for an unknown `rows x cols` matrix `X`, where `f` is
/// linear. Returns a particular solution and a basis of the homogeneous
/// solutions, or `None` when the system is inconsistent.
pub fn solve_linear_map(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    f: impl Fn(&Matrix) -> Result<Matrix>,
    rhs: &Matrix,
) -> Result<Option<(Matrix, Vec<Matrix>)>> {
    let n = rows * cols;
    let mut columns = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = Matrix::zeros(field, rows, cols);
        e.set(k / cols, k % cols, Scalar::one(field));
        let image = f(&e)?;
        if image.shape() != rhs.shape() {
            return Err(Error::dims(
                "solve_linear_map",
                format!("image {:?} vs right side {:?}", image.shape(), rhs.shape()),
            ));
        }
        columns.push(image.flatten());
    }
    let system = if n == 0 {
        Matrix::zeros(field, rhs.rows() * rhs.cols(), 0)
    } else {
        Matrix::hstack(&columns.iter().collect::<Vec<_>>())?
    };
    let Some((x, kernel)) = solve_affine(&system, &rhs.flatten())? else {
        return Ok(None);
    };
    let unflatten =
        |v: Vec<Scalar>| Matrix::from_fn(field, rows, cols, |i, j| v[i * cols + j].clone());
    let kernel = (0..kernel.dim())
        .map(|i| unflatten(kernel.basis_vector(i)))
        .collect();
    Ok(Some((unflatten(x.column(0)), kernel)))
}

/// A right inverse of a surjective map.
pub fn right_inverse(m: &Matrix) -> Result<Matrix> {
    let f = m.field();
    let mut cols = Vec::new();
    for i in 0..m.rows() {
        let (x, _) =
            solve_affine(m, &Matrix::unit_column(f, m.rows(), i))?.ok_or(Error::Singular)?;
        cols.push(x);
    }
    if cols.is_empty() {
        return Ok(Matrix::zeros(f, m.cols(), 0));
    }
    Matrix::hstack(&cols.iter().collect::<Vec<_>>())
}

pub fn invert(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::dims(
            "invert",
            format!("matrix is {}x{}", m.rows(), m.cols()),
        ));
    }
    let n = m.rows();
    let aug = Matrix::hstack(&[m, &Matrix::identity(m.field(), n)])?;
    let Rref { matrix: r, pivots } = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
}

/// Standard basis vectors at the non-pivot positions of `s`, as columns.
pub fn complement_basis(s: &Subspace) -> Matrix {
    let idx = s.non_pivots();
    let mut out = Matrix::zeros(s.field(), s.ambient(), idx.len());
    for (j, &i) in idx.iter().enumerate() {
        out.set(i, j, Scalar::one(s.field()));
    }
    out
}

/// A subspace of `K^n`, kept as the reduced echelon form of a basis so that
/// equal subspaces compare equal entrywise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span_rows(m: &Matrix) -> Self {
        let Rref { matrix, pivots } = rref(m);
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: matrix,
            pivots,
        }
    }

    pub fn span_columns(m: &Matrix) -> Self {
        Self::span_rows(&m.transpose())
    }

    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(field, ambient, vectors)
            .expect("vectors match the ambient dimension");
        Self::span_rows(&m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut mark = vec![false; self.ambient];
        for &p in &self.pivots {
            mark[p] = true;
        }
        (0..self.ambient).filter(|&i| !mark[i]).collect()
    }

    /// Basis vectors as the rows of a reduced echelon matrix.
    pub fn basis_rows(&self) -> &Matrix {
        &self.basis
    }

    /// Basis vectors as columns, the inclusion map into the ambient space.
    pub fn basis_matrix(&self) -> Matrix {
        self.basis.transpose()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.row(i).to_vec()
    }

    fn check_len(&self, v: &[Scalar]) {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length does not match ambient dimension"
        );
    }

    /// Coordinates in the echelon basis: the entries at the pivot positions,
    /// provided the vector actually lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.check_len(v);
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (r, a) in c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *x = &*x - &(a * b);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Coordinates of every column of `m`, or `None` if one lies outside.
    pub fn coords_of_columns(&self, m: &Matrix) -> Option<Matrix> {
        let mut out = Matrix::zeros(self.field, self.dim(), m.cols());
        for j in 0..m.cols() {
            let c = self.coords(&m.column(j))?;
            for (i, s) in c.into_iter().enumerate() {
                out.set(i, j, s);
            }
        }
        Some(out)
    }

    /// Adds `v` to the span, keeping the echelon form; reports whether it grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        self.check_len(v);
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let a = w[p].clone();
            if a.is_zero() {
                continue;
            }
            for (x, b) in w.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *x = &*x - &(&a * b);
                }
            }
        }
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[lead].inv().expect("nonzero");
        for x in w.iter_mut() {
            *x = &*x * &inv;
        }
        let mut rows: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .collect();
        for row in rows.iter_mut() {
            let a = row[lead].clone();
            if a.is_zero() {
                continue;
            }
            for (x, b) in row.iter_mut().zip(&w) {
                if !b.is_zero() {
                    *x = &*x - &(&a * b);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        rows.insert(at, w);
        self.pivots.insert(at, lead);
        self.basis = Matrix::from_rows(self.field, self.ambient, rows).expect("same width");
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let m = Matrix::vstack(&[&self.basis, &other.basis]).expect("same ambient space");
        Subspace::span_rows(&m)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::dims(
                "intersection",
                format!("ambient {} vs {}", self.ambient, other.ambient),
            ));
        }
        // Solve A x = B y through the kernel of [A | -B].
        let a = self.basis_matrix();
        let b = other.basis_matrix().neg();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let k = kernel_basis(&Matrix::hstack(&[&a, &b])?);
        let head: Vec<usize> = (0..self.dim()).collect();
        let xs = k.basis_matrix().select_rows(&head);
        Ok(Subspace::span_columns(&a.mul(&xs)?))
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient {
            return Err(Error::dims(
                "image",
                format!("map {:?} on ambient {}", map.shape(), self.ambient),
            ));
        }
        if self.is_zero() {
            return Ok(Subspace::zero(self.field, map.rows()));
        }
        Ok(Subspace::span_columns(&map.mul(&self.basis_matrix())?))
    }
}

/// Coordinates of columns of `m`, read in `U ⊗ V`, with respect to `X ⊗ Y`.
pub fn pair_tensor_coords(x: &Subspace, y: &Subspace, m: &Matrix) -> Option<Matrix> {
    let left = left_tensor_coords(x, y.ambient(), m)?;
    right_tensor_coords(x.dim(), y, &left)
}

/// Coordinates of columns of `m`, read in `U ⊗ W`, with respect to `X ⊗ W`
/// for a subspace `X` of `U` and `dim W = w`.
pub fn left_tensor_coords(x: &Subspace, w: usize, m: &Matrix) -> Option<Matrix> {
    let u = x.ambient();
    assert_eq!(m.rows(), u * w, "left tensor coordinates size");
    let k = x.dim();
    let mut out = Matrix::zeros(x.field(), k * w, m.cols());
    for col in 0..m.cols() {
        for j in 0..w {
            let v: Vec<Scalar> = (0..u).map(|i| m.get(i * w + j, col).clone()).collect();
            let c = x.coords(&v)?;
            for (r, s) in c.into_iter().enumerate() {
                out.set(r * w + j, col, s);
            }
        }
    }
    Some(out)
}

/// Coordinates of columns of `m`, read in `W ⊗ U`, with respect to `W ⊗ X`.
pub fn right_tensor_coords(w: usize, x: &Subspace, m: &Matrix) -> Option<Matrix> {
    let u = x.ambient();
    assert_eq!(m.rows(), w * u, "right tensor coordinates size");
    let k = x.dim();
    let mut out = Matrix::zeros(x.field(), w * k, m.cols());
    for col in 0..m.cols() {
        for j in 0..w {
            let v: Vec<Scalar> = (0..u).map(|i| m.get(j * u + i, col).clone()).collect();
            let c = x.coords(&v)?;
            for (r, s) in c.into_iter().enumerate() {
                out.set(j * k + r, col, s);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_ints(Q, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        assert!(m.mul(&k.basis_matrix()).unwrap().is_zero());
    }

    #[test]
    fn affine_solutions() {
        let a = Matrix::from_ints(Q, &[&[1, 1], &[1, -1]]);
        let b = Matrix::from_ints(Q, &[&[3], &[1]]);
        let (x, k) = solve_affine(&a, &b).unwrap().unwrap();
        assert_eq!(x, Matrix::from_ints(Q, &[&[2], &[1]]));
        assert!(k.is_zero());
        let a = Matrix::from_ints(Q, &[&[1, 1], &[2, 2]]);
        assert!(solve_affine(&a, &b).unwrap().is_none());
    }

    #[test]
    fn linear_map_equation() {
        // X A = B with A invertible has the unique solution B A^{-1}
        let a = Matrix::from_ints(Q, &[&[1, 1], &[0, 1]]);
        let b = Matrix::from_ints(Q, &[&[2, 3]]);
        let (x, k) = solve_linear_map(Q, 1, 2, |x| x.mul(&a), &b)
            .unwrap()
            .unwrap();
        assert_eq!(x, Matrix::from_ints(Q, &[&[2, 1]]));
        assert!(k.is_empty());
        let r = right_inverse(&Matrix::from_ints(Q, &[&[1, 0, 1], &[0, 1, 1]])).unwrap();
        assert!(Matrix::from_ints(Q, &[&[1, 0, 1], &[0, 1, 1]])
            .mul(&r)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        assert!(m.mul(&invert(&m).unwrap()).unwrap().is_identity());
        assert!(matches!(
            invert(&Matrix::from_ints(Q, &[&[1, 2], &[2, 4]])),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn incremental_insert_matches_batch() {
        let f = FieldSpec::Prime(5);
        let vs = [
            vec![0, 1, 2, 3],
            vec![1, 1, 0, 0],
            vec![1, 2, 2, 3],
            vec![0, 0, 1, 4],
        ];
        let mut s = Subspace::zero(f, 4);
        let mut grew = Vec::new();
        for v in &vs {
            let v: Vec<Scalar> = v.iter().map(|&x| Scalar::from_i64(f, x)).collect();
            grew.push(s.insert(&v));
        }
        assert_eq!(grew, vec![true, true, false, true]);
        let batch = Subspace::from_vectors(
            f,
            4,
            vs.iter()
                .map(|v| v.iter().map(|&x| Scalar::from_i64(f, x)).collect())
                .collect(),
        );
        assert_eq!(s, batch);
    }

    #[test]
    fn complement_and_intersection() {
        let s = Subspace::span_columns(&Matrix::from_ints(Q, &[&[1], &[1], &[0]]));
        let c = complement_basis(&s);
        assert_eq!(c.cols(), 2);
        let sum = s.sum(&Subspace::span_columns(&c));
        assert!(sum.is_full());
        let t = Subspace::span_columns(&Matrix::from_ints(Q, &[&[1, 0], &[1, 0], &[0, 1]]));
        assert_eq!(s.intersection(&t).unwrap(), s);
    }

    #[test]
    fn tensor_coordinates() {
        let x = Subspace::span_columns(&Matrix::from_ints(Q, &[&[1], &[1]]));
        // (e0 + e1) ⊗ f1 in U ⊗ W with dim W = 2
        let v = Matrix::from_ints(Q, &[&[0], &[1], &[0], &[1]]);
        assert_eq!(
            left_tensor_coords(&x, 2, &v).unwrap(),
            Matrix::from_ints(Q, &[&[0], &[1]])
        );
        let bad = Matrix::from_ints(Q, &[&[1], &[0], &[0], &[0]]);
        assert!(left_tensor_coords(&x, 2, &bad).is_none());
        // f1 ⊗ (e0 + e1) in W ⊗ U
        let v = Matrix::from_ints(Q, &[&[0], &[0], &[1], &[1]]);
        assert_eq!(
            right_tensor_coords(2, &x, &v).unwrap(),
            Matrix::from_ints(Q, &[&[0], &[1]])
        );
    }
}

//! Dense exact linear algebra over GF(p).
//!
//! Vectors are plain `Vec<u64>` slices with entries in `[0, p)`; matrices are
//! row-major. Subspaces are always stored as the reduced row-echelon form of a
//! spanning set, so two equal subspaces have bit-identical bases.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::PrimeField;

/// Largest ambient dimension the tensor-quotient constructions will build.
pub const MAX_AMBIENT_DIM: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} mod {}", self.rows, self.cols, self.field.modulus())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        let p = field.modulus();
        Matrix {
            field,
            rows,
            cols,
            data: data.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn from_i64(field: PrimeField, rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::from_vec(field, rows, cols, data.iter().map(|&x| field.from_i64(x)).collect())
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(r);
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.modulus();
            }
        }
        m
    }

    pub fn scalar(field: PrimeField, n: usize, c: u64) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % field.modulus();
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
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
    pub fn data(&self) -> &[u64] {
        &self.data
    }
    pub fn into_data(self) -> Vec<u64> {
        self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
    pub fn row_vectors(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Panics on a shape mismatch; use [`Matrix::try_mul`] for checked use.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product shape")
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.modulus();
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length");
        let p = self.field.modulus();
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: u64, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix axpy shape");
        if c == 0 {
            return;
        }
        let p = self.field.modulus();
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = (*a + c * b) % p;
        }
    }

    /// Linear combination `sum coeffs[i] * mats[i]` of equally shaped matrices.
    pub fn combination(field: PrimeField, rows: usize, cols: usize, coeffs: &[u64], mats: &[Matrix]) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (&c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack rows");
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Sub-block of rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for r in r0..r1 {
            m.data[(r - r0) * m.cols..(r - r0 + 1) * m.cols]
                .copy_from_slice(&self.data[r * self.cols + c0..r * self.cols + c1]);
        }
        m
    }

    /// Kronecker product: entry `[(i*rb + k), (j*cb + l)] = a[i,j] * b[k,l]`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let f = self.field;
        let (rb, cb) = (b.rows, b.cols);
        let mut out = Matrix::zeros(f, self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.data[(i * rb + k) * out.cols + j * cb + l] = f.mul(a, b.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, piv) = self.rref_with_pivots();
        (m, piv.len())
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.modulus();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..cols {
                    self.data.swap(pr * cols + c, row * cols + c);
                }
            }
            let inv = f.inv(self.data[row * cols + col]).expect("nonzero pivot");
            for c in col..cols {
                let x = &mut self.data[row * cols + c];
                *x = *x * inv % p;
            }
            let (before, rest) = self.data.split_at_mut(row * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = other[col];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for c in col..cols {
                    other[c] = (other[c] + neg * pivot_row[c]) % p;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, piv) = aug.rref_with_pivots();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(r.block(0, n, n, 2 * n))
    }

    pub fn determinant(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let f = self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return Ok(0);
            };
            if pr != col {
                for c in 0..n {
                    m.swap(pr * n + c, col * n + c);
                }
                det = f.neg(det);
            }
            let piv = m[col * n + col];
            det = f.mul(det, piv);
            let inv = f.inv(piv)?;
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], inv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    m[r * n + c] = f.sub(m[r * n + c], f.mul(factor, m[col * n + c]));
                }
            }
        }
        Ok(det)
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve: {}x{} system with {}-row right-hand side",
                self.rows, self.cols, b.rows
            )));
        }
        let n = self.cols;
        let aug = self.hstack(b);
        let (r, piv) = aug.rref_with_pivots();
        if piv.last().is_some_and(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (i, &c) in piv.iter().enumerate() {
            for k in 0..b.cols {
                x.data[c * b.cols + k] = r.get(i, n + k);
            }
        }
        Ok(Some(x))
    }

    /// All `x` with `self * x = 0`.
    pub fn nullspace(&self) -> Subspace {
        let (r, piv) = self.rref_with_pivots();
        let n = self.cols;
        let f = self.field;
        let mut is_pivot = vec![false; n];
        for &c in &piv {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (i, &c) in piv.iter().enumerate() {
                v[c] = f.neg(r.get(i, free));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f, n, &vecs)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix_rows(self)
    }
}

/// `acc += c * v`.
pub fn axpy(field: PrimeField, acc: &mut [u64], c: u64, v: &[u64]) {
    if c == 0 {
        return;
    }
    let p = field.modulus();
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = (*a + c * b) % p;
    }
}

pub fn vec_sub(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect()
}

pub fn vec_add(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

pub fn vec_scale(field: PrimeField, c: u64, v: &[u64]) -> Vec<u64> {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// A subspace of GF(p)^n held as a canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, piv) = m.rref_with_pivots();
        let rank = piv.len();
        Subspace {
            ambient_dim: m.cols(),
            basis: r.block(0, rank, 0, m.cols()),
            pivots: piv,
        }
    }

    pub fn from_vectors(field: PrimeField, ambient_dim: usize, vectors: &[Vec<u64>]) -> Self {
        Self::from_matrix_rows(&Matrix::from_rows(field, ambient_dim, vectors))
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn vector(&self, i: usize) -> &[u64] {
        self.basis.row(i)
    }
    pub fn vectors(&self) -> Vec<Vec<u64>> {
        self.basis.row_vectors()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(format!(
                "subspaces of dimension-{} and dimension-{} spaces",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix_rows(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(f, self.ambient_dim));
        }
        // a.X = b.Y  <=>  (a, -b) in the left kernel of [X; Y]
        let stacked = self.basis.vstack(&other.basis.scale(f.neg(1)));
        let kernel = stacked.transpose().nullspace();
        let d = self.dim();
        let vecs: Vec<Vec<u64>> = kernel
            .vectors()
            .iter()
            .map(|k| {
                let mut v = vec![0u64; self.ambient_dim];
                for (i, &a) in k[..d].iter().enumerate() {
                    if a != 0 {
                        for (x, &b) in v.iter_mut().zip(self.vector(i)) {
                            *x = f.add(*x, f.mul(a, b));
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(f, self.ambient_dim, &vecs))
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.vector(i))))
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let a = r[c];
            if a == 0 {
                continue;
            }
            for (x, &b) in r.iter_mut().zip(self.vector(i)) {
                *x = f.sub(*x, f.mul(a, b));
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Vector with the given coordinates in the RREF basis.
    pub fn combine(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let f = self.field();
        let mut v = vec![0u64; self.ambient_dim];
        for (i, &a) in coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.vector(i)) {
                *x = f.add(*x, f.mul(a, b));
            }
        }
        v
    }

    /// Non-pivot coordinates: the standard basis vectors at these positions
    /// project to a basis of the quotient by this subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the class of `v` in the quotient by this subspace,
    /// relative to [`Subspace::complement_indices`].
    pub fn quotient_coordinates(&self, v: &[u64]) -> Vec<u64> {
        let r = self.reduce(v);
        self.complement_indices().iter().map(|&c| r[c]).collect()
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let vecs: Vec<Vec<u64>> = (0..self.dim()).map(|i| m.mul_vec(self.vector(i))).collect();
        Subspace::from_vectors(self.field(), m.rows(), &vecs)
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }
}

/// Incrementally grown linearly independent list that reports dependencies.
///
/// Inserting a vector either extends the list or returns its coefficients in
/// terms of all previously inserted vectors.
#[derive(Debug, Clone)]
pub struct IncrementalBasis {
    field: PrimeField,
    len: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<u64>>,
}

impl IncrementalBasis {
    pub fn new(field: PrimeField, len: usize) -> Self {
        IncrementalBasis {
            field,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[u64]) -> std::result::Result<(), Vec<u64>> {
        assert_eq!(v.len(), self.len, "vector length");
        let f = self.field;
        let k = self.rows.len();
        let mut r = v.to_vec();
        let mut lambdas = vec![0u64; k];
        for t in 0..k {
            let a = r[self.pivots[t]];
            if a == 0 {
                continue;
            }
            lambdas[t] = a;
            for (x, &b) in r.iter_mut().zip(&self.rows[t]) {
                *x = f.sub(*x, f.mul(a, b));
            }
        }
        // expression of sum lambda_t row_t in terms of inserted vectors
        let mut expr = vec![0u64; k];
        for (t, &l) in lambdas.iter().enumerate() {
            if l == 0 {
                continue;
            }
            for (e, &c) in expr.iter_mut().zip(&self.combos[t]) {
                *e = f.add(*e, f.mul(l, c));
            }
        }
        match r.iter().position(|&x| x != 0) {
            None => Err(expr),
            Some(piv) => {
                let inv = f.inv(r[piv]).expect("nonzero pivot");
                for x in r.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                let mut combo: Vec<u64> = expr.iter().map(|&e| f.mul(f.neg(e), inv)).collect();
                combo.push(inv);
                for c in self.combos.iter_mut() {
                    c.push(0);
                }
                self.rows.push(r);
                self.pivots.push(piv);
                self.combos.push(combo);
                Ok(())
            }
        }
    }
}

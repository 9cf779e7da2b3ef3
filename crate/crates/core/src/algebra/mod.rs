//! Finite-dimensional unital associative algebras given by structure constants.

mod group;
mod idempotents;
mod subalgebra;
mod wedderburn;

pub use group::CayleyTable;
pub use idempotents::{
    primitive_central_idempotents, primitive_idempotent, primitive_idempotent_below,
    CentralIdempotentSet, IDEMPOTENT_RETRY_BUDGET,
};
pub use subalgebra::Subalgebra;
pub use wedderburn::{wedderburn, WedderburnBlock, WedderburnCertificate};

use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::linalg::{axpy, unit_vector, Matrix, Subspace};

/// Structure-constant algebra over GF(p).
///
/// `b_i * b_j = sum_k c[i][j][k] b_k`, stored sparsely per basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    products: Vec<Vec<(usize, u64)>>,
    one: Vec<u64>,
}

impl Algebra {
    /// Builds and validates an algebra from `(i, j, k, c)` triples; omitted
    /// triples are zero and repeated `(i, j, k)` entries are rejected.
    pub fn from_structure_constants(
        field: PrimeField,
        dim: usize,
        one: Vec<u64>,
        triples: &[(usize, usize, usize, u64)],
    ) -> Result<Self> {
        if one.len() != dim {
            return Err(Error::BadStructureConstants(format!(
                "unit vector has length {} for dimension {dim}",
                one.len()
            )));
        }
        let mut dense = vec![vec![0u64; dim]; dim * dim];
        let mut seen = std::collections::HashSet::new();
        for &(i, j, k, c) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::BadStructureConstants(format!(
                    "index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::BadStructureConstants(format!("repeated triple ({i}, {j}, {k})")));
            }
            dense[i * dim + j][k] = c % field.modulus();
        }
        let one = one.into_iter().map(|x| x % field.modulus()).collect();
        let a = Self::from_dense(field, dim, one, dense);
        a.validate()?;
        Ok(a)
    }

    /// `dense[i * dim + j]` is the coordinate vector of `b_i * b_j`.
    pub(crate) fn from_dense(field: PrimeField, dim: usize, one: Vec<u64>, dense: Vec<Vec<u64>>) -> Self {
        let products = dense
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|&(_, c)| c != 0).collect())
            .collect();
        Algebra {
            field,
            dim,
            products,
            one,
        }
    }

    /// Builds an algebra from a basis-product function without validation.
    pub(crate) fn from_fn<F>(field: PrimeField, dim: usize, one: Vec<u64>, mut product: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<u64>,
    {
        let mut dense = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                dense.push(product(i, j));
            }
        }
        Self::from_dense(field, dim, one, dense)
    }

    /// The ground field viewed as a one-dimensional algebra.
    pub fn ground_field(field: PrimeField) -> Self {
        Self::from_dense(field, 1, vec![1], vec![vec![1]])
    }

    /// Full matrix algebra M_d(GF(p)) with basis E_rc at index r * d + c.
    pub fn full_matrix(field: PrimeField, d: usize) -> Self {
        let dim = d * d;
        let mut one = vec![0; dim];
        for r in 0..d {
            one[r * d + r] = 1;
        }
        Self::from_fn(field, dim, one, |i, j| {
            let (a, b) = (i / d, i % d);
            let (c, e) = (j / d, j % d);
            let mut v = vec![0; dim];
            if b == c {
                v[a * d + e] = 1;
            }
            v
        })
    }

    /// Group algebra with basis indexed by group elements.
    pub fn group_algebra(table: &CayleyTable, field: PrimeField) -> Self {
        let n = table.order();
        Self::from_fn(field, n, unit_vector(n, 0), |g, h| unit_vector(n, table.mul(g, h)))
    }

    /// Twisted group algebra: `u_g u_h = alpha(g, h) u_{gh}` for a normalized 2-cocycle.
    pub fn twisted_group_algebra(table: &CayleyTable, alpha: &[Vec<u64>], field: PrimeField) -> Result<Self> {
        let n = table.order();
        if alpha.len() != n || alpha.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!("cocycle table must be {n}x{n}")));
        }
        let p = field.modulus();
        let a = |g: usize, h: usize| alpha[g][h] % p;
        for g in 0..n {
            for h in 0..n {
                if a(g, h) == 0 {
                    return Err(Error::InvalidInput(format!("cocycle value zero at ({g}, {h})")));
                }
            }
        }
        for g in 0..n {
            if a(0, g) != 1 || a(g, 0) != 1 {
                return Err(Error::CocycleNotNormalized(g));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for l in 0..n {
                    let lhs = field.mul(a(g, h), a(table.mul(g, h), l));
                    let rhs = field.mul(a(h, l), a(g, table.mul(h, l)));
                    if lhs != rhs {
                        return Err(Error::CocycleIdentity(g, h, l));
                    }
                }
            }
        }
        Ok(Self::from_fn(field, n, unit_vector(n, 0), |g, h| {
            let mut v = vec![0; n];
            v[table.mul(g, h)] = a(g, h);
            v
        }))
    }

    /// Skew group algebra `B # G` for an action of G on B by unital algebra
    /// automorphisms. Basis `b_i # g` has index `g * dim B + i`, so `B # 1`
    /// occupies the first `dim B` coordinates.
    pub fn skew_group_algebra(base: &Algebra, table: &CayleyTable, action: &[Matrix]) -> Result<Self> {
        let n = table.order();
        let d = base.dim;
        let field = base.field;
        if action.len() != n {
            return Err(Error::InvalidInput(format!("{} action matrices for a group of order {n}", action.len())));
        }
        for (g, m) in action.iter().enumerate() {
            if m.rows() != d || m.cols() != d || m.field() != field {
                return Err(Error::NotAutomorphism(g));
            }
            if m.mul_vec(&base.one) != base.one || !m.is_invertible() {
                return Err(Error::NotAutomorphism(g));
            }
            for i in 0..d {
                for j in 0..d {
                    let lhs = m.mul_vec(&base.basis_product(i, j));
                    let rhs = base.mul(&m.col(i), &m.col(j));
                    if lhs != rhs {
                        return Err(Error::NotAutomorphism(g));
                    }
                }
            }
        }
        if action[0] != Matrix::identity(field, d) {
            return Err(Error::NotAnAction(0, 0));
        }
        for g in 0..n {
            for h in 0..n {
                if action[table.mul(g, h)] != action[g].mul(&action[h]) {
                    return Err(Error::NotAnAction(g, h));
                }
            }
        }
        let dim = n * d;
        let mut one = vec![0; dim];
        one[..d].copy_from_slice(&base.one);
        Ok(Self::from_fn(field, dim, one, |x, y| {
            let (g, i) = (x / d, x % d);
            let (h, j) = (y / d, y % d);
            // (b_i # g)(b_j # h) = b_i (g . b_j) # gh
            let prod = base.mul(&unit_vector(d, i), &action[g].col(j));
            let gh = table.mul(g, h);
            let mut v = vec![0; dim];
            v[gh * d..(gh + 1) * d].copy_from_slice(&prod);
            v
        }))
    }

    /// Same space with reversed multiplication.
    pub fn opposite(&self) -> Self {
        let dim = self.dim;
        let mut products = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                products[j * dim + i] = self.products[i * dim + j].clone();
            }
        }
        Algebra {
            field: self.field,
            dim,
            products,
            one: self.one.clone(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn zero_vector(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    /// Nonzero structure constants as sorted `(i, j, k, c)` triples.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, u64)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for &(k, c) in &self.products[i * self.dim + j] {
                    out.push((i, j, k, c));
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        for &(k, c) in &self.products[i * self.dim + j] {
            v[k] = c;
        }
        v
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let f = self.field;
        let p = f.modulus();
        let mut out = vec![0u64; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = a * b % p;
                for &(k, c) in &self.products[i * self.dim + j] {
                    out[k] = (out[k] + ab * c) % p;
                }
            }
        }
        out
    }

    /// Matrix of `y -> x * y`.
    pub fn left_mul_matrix(&self, x: &[u64]) -> Matrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| self.mul(x, &unit_vector(self.dim, j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y * x`.
    pub fn right_mul_matrix(&self, x: &[u64]) -> Matrix {
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|j| self.mul(&unit_vector(self.dim, j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Checks associativity on all basis triples and the two-sided unit law.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        let basis: Vec<Vec<u64>> = (0..d).map(|i| unit_vector(d, i)).collect();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let lhs = self.mul(&ij, &basis[k]);
                    let rhs = self.mul(&basis[i], &self.basis_product(j, k));
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for (i, b) in basis.iter().enumerate() {
            if self.mul(&self.one, b) != *b || self.mul(b, &self.one) != *b {
                return Err(Error::BadUnit(i));
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.products[i * self.dim + j] == self.products[j * self.dim + i]))
    }

    /// Solution space of `x b_i = b_i x` for every basis element.
    pub fn center(&self) -> Subspace {
        let d = self.dim;
        let f = self.field;
        // row (i, k): sum_j x_j (c[j][i][k] - c[i][j][k]) = 0
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            let mut block = vec![vec![0u64; d]; d];
            for j in 0..d {
                for &(k, c) in &self.products[j * d + i] {
                    block[k][j] = f.add(block[k][j], c);
                }
                for &(k, c) in &self.products[i * d + j] {
                    block[k][j] = f.sub(block[k][j], c);
                }
            }
            rows.extend(block);
        }
        Matrix::from_rows(f, d, &rows).nullspace()
    }

    pub fn is_central(&self, x: &[u64]) -> bool {
        (0..self.dim).all(|i| {
            let b = unit_vector(self.dim, i);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    /// Span of all products `x * y` with `x` in `xs` and `y` in `ys`.
    pub fn product_space(&self, xs: &Subspace, ys: &Subspace) -> Result<Subspace> {
        if xs.ambient_dim() != self.dim || ys.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch("product of subspaces outside the algebra".into()));
        }
        let mut vecs = Vec::with_capacity(xs.dim() * ys.dim());
        for i in 0..xs.dim() {
            for j in 0..ys.dim() {
                vecs.push(self.mul(xs.vector(i), ys.vector(j)));
            }
        }
        Ok(Subspace::from_vectors(self.field, self.dim, &vecs))
    }

    /// The whole algebra as a subspace of itself.
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// `sum coeffs[i] * vectors[i]` in the algebra's coordinates.
    pub(crate) fn combine(&self, coeffs: &[u64], vectors: &[Vec<u64>]) -> Vec<u64> {
        let mut out = vec![0; self.dim];
        for (&c, v) in coeffs.iter().zip(vectors) {
            axpy(self.field, &mut out, c, v);
        }
        out
    }

    /// `e * A * e` as a subspace.
    pub fn corner(&self, e: &[u64]) -> Subspace {
        let vecs: Vec<Vec<u64>> = (0..self.dim)
            .map(|k| self.mul(&self.mul(e, &unit_vector(self.dim, k)), e))
            .collect();
        Subspace::from_vectors(self.field, self.dim, &vecs)
    }

    /// Left ideal `A * e`.
    pub fn left_ideal(&self, e: &[u64]) -> Subspace {
        let vecs: Vec<Vec<u64>> = (0..self.dim)
            .map(|k| self.mul(&unit_vector(self.dim, k), e))
            .collect();
        Subspace::from_vectors(self.field, self.dim, &vecs)
    }
}

//! Left modules over structure-constant algebras.
//!
//! Elements of a module are column vectors and each algebra basis element
//! acts by a square matrix. Intertwiners compose on the side written: the
//! composite "first g, then f" has matrix `F * G`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{primitive_idempotent, Algebra, Subalgebra, WedderburnCertificate};
use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::linalg::{unit_vector, Matrix, Subspace, MAX_AMBIENT_DIM};

/// Random combinations tried when looking for an invertible intertwiner.
pub const ISO_RETRY_BUDGET: usize = 16;

#[derive(Debug, Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Module {
    /// Validated module from one action matrix per algebra basis element.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(bad) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "action matrix is {}x{}, expected {dim}x{dim}",
                bad.rows(),
                bad.cols()
            )));
        }
        if action.iter().any(|m| m.field() != algebra.field()) {
            return Err(Error::FieldMismatch(
                algebra.field().modulus(),
                action[0].field().modulus(),
            ));
        }
        let m = Module { algebra, dim, action };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Self {
        Module { algebra, dim, action }
    }

    /// One-dimensional module with basis element `i` acting by `values[i]`.
    pub fn one_dimensional(algebra: Arc<Algebra>, values: &[u64]) -> Result<Self> {
        let f = algebra.field();
        let action = values.iter().map(|&v| Matrix::scalar(f, 1, v)).collect();
        Self::new(algebra, 1, action)
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        let d = algebra.dim();
        let action = (0..d)
            .map(|i| algebra.left_mul_matrix(&unit_vector(d, i)))
            .collect();
        Module::new_unchecked(Arc::clone(algebra), d, action)
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::new_unchecked(Arc::clone(algebra), 0, action)
    }

    /// Checks `rho(b_i) rho(b_j) = sum_k c[i][j][k] rho(b_k)` and `rho(1) = I`.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act(&a.basis_product(i, j));
                if lhs != rhs {
                    return Err(Error::NotRepresentation(i, j));
                }
            }
        }
        if self.act(a.one()) != Matrix::identity(self.field(), self.dim) {
            return Err(Error::NotRepresentation(0, 0));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of the algebra element with coordinates `x`.
    pub fn act(&self, x: &[u64]) -> Matrix {
        Matrix::combination(self.field(), self.dim, self.dim, x, &self.action)
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        same_algebra(&self.algebra, &other.algebra)
    }

    /// Module over `algebra` where basis element `k` acts as the element
    /// `images[k]` of the current algebra.
    pub(crate) fn pullback(&self, algebra: Arc<Algebra>, images: &[Vec<u64>]) -> Module {
        let action = images.iter().map(|x| self.act(x)).collect();
        Module::new_unchecked(algebra, self.dim, action)
    }

    /// Restriction to a subalgebra of this module's algebra.
    pub fn restrict(&self, sub: &Subalgebra) -> Result<Module> {
        if !same_algebra(sub.ambient(), &self.algebra) {
            return Err(Error::AmbientMismatch("restriction to a subalgebra of another algebra".into()));
        }
        Ok(self.pullback(Arc::clone(sub.algebra()), &sub.ambient_basis()))
    }

    /// Restriction from `outer` (this module's algebra) to `inner`, both
    /// subalgebras of the same ambient algebra.
    pub fn restrict_between(&self, outer: &Subalgebra, inner: &Subalgebra) -> Result<Module> {
        if !same_algebra(outer.algebra(), &self.algebra) {
            return Err(Error::AmbientMismatch("module is not over the outer subalgebra".into()));
        }
        let images = inner.basis_in(outer)?;
        Ok(self.pullback(Arc::clone(inner.algebra()), &images))
    }

    /// Submodule on an invariant subspace, with the embedding whose columns
    /// are the subspace's RREF basis.
    pub fn submodule(&self, space: &Subspace) -> Result<(Module, Matrix)> {
        if space.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch("subspace of another space".into()));
        }
        let w = space.dim();
        let f = self.field();
        let vecs = space.vectors();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut cols = Vec::with_capacity(w);
            for v in &vecs {
                cols.push(space.coordinates(&m.mul_vec(v)).ok_or(Error::NotSubmodule)?);
            }
            action.push(Matrix::from_columns(f, w, &cols));
        }
        Ok((
            Module::new_unchecked(Arc::clone(&self.algebra), w, action),
            space.basis_columns(),
        ))
    }

    /// Quotient by an invariant subspace, using the non-pivot coordinates of
    /// the subspace as the quotient basis.
    pub fn quotient(&self, space: &Subspace) -> Result<Module> {
        if space.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch("subspace of another space".into()));
        }
        for m in &self.action {
            for v in space.vectors() {
                if !space.contains_vector(&m.mul_vec(&v)) {
                    return Err(Error::NotSubmodule);
                }
            }
        }
        Ok(quotient_action(&self.algebra, &self.action, space))
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field();
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(f, n, n);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(self.dim + r, self.dim + c, b.get(r, c));
                    }
                }
                m
            })
            .collect();
        Ok(Module::new_unchecked(Arc::clone(&self.algebra), n, action))
    }

    /// Direct sum of `n` copies.
    pub fn power(&self, n: usize) -> Module {
        let mut out = Module::zero(&self.algebra);
        for _ in 0..n {
            out = out.direct_sum(self).expect("same algebra");
        }
        out
    }
}

/// Action on the quotient of a space by an invariant subspace `relations`.
pub(crate) fn quotient_action(algebra: &Arc<Algebra>, action: &[Matrix], relations: &Subspace) -> Module {
    let f = algebra.field();
    let reps = relations.complement_indices();
    let q = reps.len();
    let n = relations.ambient_dim();
    let new_action = action
        .iter()
        .map(|m| {
            let cols: Vec<Vec<u64>> = reps
                .iter()
                .map(|&c| relations.quotient_coordinates(&m.mul_vec(&unit_vector(n, c))))
                .collect();
            Matrix::from_columns(f, q, &cols)
        })
        .collect();
    Module::new_unchecked(Arc::clone(algebra), q, new_action)
}

/// Intertwiners `F: source -> target`, as a canonical subspace of flattened
/// `target_dim x source_dim` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    source_dim: usize,
    target_dim: usize,
    space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn matrix(&self, i: usize) -> Matrix {
        Matrix::from_vec(
            self.space.field(),
            self.target_dim,
            self.source_dim,
            self.space.vector(i).to_vec(),
        )
    }

    pub fn basis(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.matrix(i)).collect()
    }

    pub fn coordinates(&self, f: &Matrix) -> Option<Vec<u64>> {
        if f.rows() != self.target_dim || f.cols() != self.source_dim {
            return None;
        }
        self.space.coordinates(f.data())
    }

    pub fn combine(&self, coords: &[u64]) -> Matrix {
        Matrix::from_vec(
            self.space.field(),
            self.target_dim,
            self.source_dim,
            self.space.combine(coords),
        )
    }
}

/// All `F` with `rho_target(b) F = F rho_source(b)` for every basis element `b`.
pub fn hom_space(source: &Module, target: &Module) -> Result<HomSpace> {
    if !source.same_algebra(target) {
        return Err(Error::AlgebraMismatch);
    }
    let f = source.field();
    let (m, n) = (source.dim, target.dim);
    let unknowns = m * n;
    if unknowns > MAX_AMBIENT_DIM {
        return Err(Error::TooLarge {
            dim: unknowns,
            limit: MAX_AMBIENT_DIM,
        });
    }
    let mut constraints = Subspace::zero(f, unknowns);
    for (sb, tb) in source.action.iter().zip(&target.action) {
        if constraints.is_full() {
            break;
        }
        let mut rows = Vec::with_capacity(unknowns);
        for r in 0..n {
            for c in 0..m {
                let mut row = vec![0u64; unknowns];
                for k in 0..n {
                    let a = tb.get(r, k);
                    if a != 0 {
                        row[k * m + c] = f.add(row[k * m + c], a);
                    }
                }
                for k in 0..m {
                    let a = sb.get(k, c);
                    if a != 0 {
                        row[r * m + k] = f.sub(row[r * m + k], a);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        if !rows.is_empty() {
            let batch = Matrix::from_rows(f, unknowns, &rows);
            constraints = Subspace::from_matrix_rows(&constraints.basis().vstack(&batch));
        }
    }
    let space = constraints.basis().nullspace();
    Ok(HomSpace {
        source_dim: m,
        target_dim: n,
        space,
    })
}

/// `End(M)^op`: the endomorphisms of `M` with product `e1 * e2` = "first e1,
/// then e2", so `M` is a right module via `m . e = e(m)`.
#[derive(Debug, Clone)]
pub struct EndoAlgebraOp {
    base: Arc<Algebra>,
    hom: HomSpace,
    right_action: Vec<Matrix>,
}

impl EndoAlgebraOp {
    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn hom(&self) -> &HomSpace {
        &self.hom
    }

    /// Matrix of `m -> m . e_k` for each basis element `e_k`.
    pub fn right_action(&self) -> &[Matrix] {
        &self.right_action
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Matrix on `M` of the element with the given coordinates.
    pub fn element_matrix(&self, coords: &[u64]) -> Matrix {
        self.hom.combine(coords)
    }

    pub fn coordinates(&self, matrix: &Matrix) -> Option<Vec<u64>> {
        self.hom.coordinates(matrix)
    }
}

pub fn endo_algebra_op(module: &Module) -> Result<EndoAlgebraOp> {
    let hom = hom_space(module, module)?;
    let basis = hom.basis();
    let field = module.field();
    let one = hom
        .coordinates(&Matrix::identity(field, module.dim))
        .ok_or_else(|| Error::TheoremCheckFailed("identity is not an endomorphism".into()))?;
    let mut failure = None;
    let base = Algebra::from_fn(field, basis.len(), one, |a, b| {
        let prod = basis[b].mul(&basis[a]);
        hom.coordinates(&prod).unwrap_or_else(|| {
            failure = Some((a, b));
            vec![0; basis.len()]
        })
    });
    if let Some((a, b)) = failure {
        return Err(Error::TheoremCheckFailed(format!(
            "composite of endomorphisms {a} and {b} is not an endomorphism"
        )));
    }
    Ok(EndoAlgebraOp {
        base: Arc::new(base),
        hom,
        right_action: basis,
    })
}

fn require_certificate(module: &Module, cert: &WedderburnCertificate) -> Result<()> {
    if cert.covers(module.algebra()) {
        Ok(())
    } else {
        Err(Error::NoCertificate)
    }
}

/// Absolute simplicity via Schur: `dim End(M) = 1`, valid over a certified
/// split semisimple algebra.
pub fn is_abs_simple(module: &Module, cert: &WedderburnCertificate) -> Result<bool> {
    require_certificate(module, cert)?;
    if module.dim == 0 {
        return Ok(false);
    }
    Ok(hom_space(module, module)?.dim() == 1)
}

/// Outcome of an isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub isomorphic: bool,
    /// Invertible intertwiner `M -> N` when isomorphic.
    pub witness: Option<Matrix>,
}

/// Isomorphism test by Hom dimensions, with an explicit invertible witness.
pub fn iso_test(m: &Module, n: &Module, cert: &WedderburnCertificate, seed: u64) -> Result<Isomorphism> {
    require_certificate(m, cert)?;
    require_certificate(n, cert)?;
    let no = Isomorphism {
        isomorphic: false,
        witness: None,
    };
    if m.dim != n.dim {
        return Ok(no);
    }
    if m.action == n.action {
        return Ok(Isomorphism {
            isomorphic: true,
            witness: Some(Matrix::identity(m.field(), m.dim)),
        });
    }
    let hmn = hom_space(m, n)?;
    let hmm = hom_space(m, m)?.dim();
    let hnn = hom_space(n, n)?.dim();
    if hmn.dim() != hmm || hmn.dim() != hnn {
        return Ok(no);
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RETRY_BUDGET {
        let coeffs: Vec<u64> = (0..hmn.dim()).map(|_| f.random(&mut rng)).collect();
        let w = hmn.combine(&coeffs);
        if w.is_invertible() {
            return Ok(Isomorphism {
                isomorphic: true,
                witness: Some(w),
            });
        }
    }
    Err(Error::WitnessNotFound(ISO_RETRY_BUDGET))
}

/// One nonzero isotypic component `e_i N` of a module.
#[derive(Debug, Clone)]
pub struct IsotypicComponent {
    pub block: usize,
    pub idempotent: Vec<u64>,
    pub module: Module,
    /// Columns span the component inside the original module.
    pub embedding: Matrix,
}

/// Splits a module by the primitive central idempotents of the certificate.
pub fn isotypic_decompose(module: &Module, cert: &WedderburnCertificate) -> Result<Vec<IsotypicComponent>> {
    require_certificate(module, cert)?;
    let mut out = Vec::new();
    let mut total = 0;
    for (i, block) in cert.blocks().iter().enumerate() {
        let image = module.act(block.idempotent()).column_space();
        if image.is_zero() {
            continue;
        }
        total += image.dim();
        let (component, embedding) = module.submodule(&image)?;
        out.push(IsotypicComponent {
            block: i,
            idempotent: block.idempotent().to_vec(),
            module: component,
            embedding,
        });
    }
    if total != module.dim {
        return Err(Error::TheoremCheckFailed(format!(
            "isotypic components have total dimension {total}, module has {}",
            module.dim
        )));
    }
    Ok(out)
}

/// Simple submodule cut out by a primitive idempotent of `End(component)^op`,
/// without checking the result.
pub(crate) fn extract_simple_unverified(component: &Module, seed: u64) -> Result<(Module, Matrix)> {
    if component.dim == 0 {
        return Err(Error::InvalidInput("cannot extract a simple from the zero module".into()));
    }
    let end = endo_algebra_op(component)?;
    let f = primitive_idempotent(end.base(), seed)?;
    let image = end.element_matrix(&f).column_space();
    component.submodule(&image)
}

/// A simple submodule of a nonzero isotypic module, with its embedding.
pub fn extract_simple(component: &Module, cert: &WedderburnCertificate, seed: u64) -> Result<(Module, Matrix)> {
    require_certificate(component, cert)?;
    let (simple, embedding) = extract_simple_unverified(component, seed)?;
    if !is_abs_simple(&simple, cert)? {
        return Err(Error::TheoremCheckFailed("extracted submodule is not simple".into()));
    }
    if embedding.rank() != simple.dim() {
        return Err(Error::TheoremCheckFailed("extracted submodule does not embed".into()));
    }
    Ok((simple, embedding))
}

/// `dim Hom(V, N)` for an absolutely simple `V`.
pub fn multiplicity(simple: &Module, module: &Module, cert: &WedderburnCertificate) -> Result<usize> {
    if !is_abs_simple(simple, cert)? {
        return Err(Error::NotAbsSimple);
    }
    Ok(hom_space(simple, module)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{wedderburn, CayleyTable};

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn s3() -> CayleyTable {
        CayleyTable::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    fn sign_values(t: &CayleyTable) -> Vec<u64> {
        // transpositions have order 2; the sign is -1 on them
        (0..t.order())
            .map(|g| if t.element_order(g) == 2 { 6 } else { 1 })
            .collect()
    }

    fn c2() -> Arc<Algebra> {
        Arc::new(Algebra::group_algebra(&CayleyTable::cyclic(2), gf7()))
    }

    #[test]
    fn basic_modules_validate() {
        let a = c2();
        assert!(Module::regular(&a).validate().is_ok());
        assert!(Module::one_dimensional(a.clone(), &[1, 1]).is_ok());
        assert!(Module::one_dimensional(a.clone(), &[1, 6]).is_ok());
        assert_eq!(
            Module::one_dimensional(a.clone(), &[1, 2]).unwrap_err(),
            Error::NotRepresentation(1, 1)
        );
        let reg = Module::regular(&a);
        assert_eq!(reg.action()[1], Matrix::from_i64(gf7(), 2, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn regular_module_of_s3_is_by_permutations() {
        let t = s3();
        let a = Arc::new(Algebra::group_algebra(&t, gf7()));
        let reg = Module::regular(&a);
        for m in reg.action() {
            for r in 0..6 {
                assert_eq!(m.row(r).iter().sum::<u64>(), 1);
            }
        }
    }

    #[test]
    fn hom_space_examples() {
        let a = c2();
        let triv = Module::one_dimensional(a.clone(), &[1, 1]).unwrap();
        let sign = Module::one_dimensional(a.clone(), &[1, 6]).unwrap();
        let reg = Module::regular(&a);
        assert_eq!(hom_space(&triv, &sign).unwrap().dim(), 0);
        assert_eq!(hom_space(&reg, &triv).unwrap().dim(), 1);
        assert_eq!(hom_space(&triv, &reg).unwrap().dim(), 1);
        assert_eq!(hom_space(&reg, &reg).unwrap().dim(), 2);
        for f in hom_space(&reg, &triv).unwrap().basis() {
            for b in 0..2 {
                assert_eq!(triv.action()[b].mul(&f), f.mul(&reg.action()[b]));
            }
        }
        let other = Arc::new(Algebra::group_algebra(&CayleyTable::cyclic(3), gf7()));
        assert_eq!(
            hom_space(&triv, &Module::regular(&other)).unwrap_err(),
            Error::AlgebraMismatch
        );
    }

    #[test]
    fn endo_algebras() {
        let a = c2();
        let triv = Module::one_dimensional(a.clone(), &[1, 1]).unwrap();
        let sign = Module::one_dimensional(a.clone(), &[1, 6]).unwrap();
        assert_eq!(endo_algebra_op(&triv).unwrap().dim(), 1);
        let e = endo_algebra_op(&triv.direct_sum(&sign).unwrap()).unwrap();
        assert_eq!(e.dim(), 2);
        assert!(e.base().is_commutative());
        let cert = wedderburn(e.base(), 0).unwrap();
        assert_eq!(cert.degrees(), vec![1, 1]);
        let e = endo_algebra_op(&triv.power(2)).unwrap();
        assert!(e.base().validate().is_ok());
        assert_eq!(wedderburn(e.base(), 0).unwrap().degrees(), vec![2]);
        // right action: m.(e1*e2) = (m.e1).e2
        let base = e.base();
        for x in 0..4 {
            for y in 0..4 {
                let prod = base.basis_product(x, y);
                let lhs = e.element_matrix(&prod);
                let rhs = e.right_action()[y].mul(&e.right_action()[x]);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn regular_endo_algebra_matches_opposite() {
        let a = Arc::new(Algebra::group_algebra(&s3(), gf7()));
        let e = endo_algebra_op(&Module::regular(&a)).unwrap();
        let mut d1 = wedderburn(e.base(), 0).unwrap().degrees();
        let mut d2 = wedderburn(&Arc::new(a.opposite()), 0).unwrap().degrees();
        d1.sort();
        d2.sort();
        assert_eq!(d1, d2);
    }

    #[test]
    fn simplicity_and_isomorphism() {
        let t = s3();
        let a = Arc::new(Algebra::group_algebra(&t, gf7()));
        let cert = wedderburn(&a, 0).unwrap();
        let triv = Module::one_dimensional(a.clone(), &[1; 6]).unwrap();
        assert!(is_abs_simple(&triv, &cert).unwrap());
        let two = cert.blocks().iter().find(|b| b.degree() == 2).unwrap().simple().clone();
        assert!(is_abs_simple(&two, &cert).unwrap());
        assert!(!is_abs_simple(&Module::regular(&a), &cert).unwrap());

        let c2a = c2();
        let c2cert = wedderburn(&c2a, 0).unwrap();
        assert!(!is_abs_simple(&Module::regular(&c2a), &c2cert).unwrap());
        assert_eq!(is_abs_simple(&triv, &c2cert), Err(Error::NoCertificate));

        let iso = iso_test(&triv, &triv, &cert, 0).unwrap();
        assert!(iso.isomorphic);
        assert_eq!(iso.witness, Some(Matrix::identity(gf7(), 1)));
        let sign = Module::one_dimensional(a.clone(), &sign_values(&t)).unwrap();
        assert!(!iso_test(&triv, &sign, &cert, 0).unwrap().isomorphic);
    }

    #[test]
    fn regular_c3_is_sum_of_characters() {
        let a = Arc::new(Algebra::group_algebra(&CayleyTable::cyclic(3), gf7()));
        let cert = wedderburn(&a, 0).unwrap();
        // characters g -> 1, 2, 4 (cube roots of unity mod 7)
        let chars: Vec<Module> = [1u64, 2, 4]
            .iter()
            .map(|&w| Module::one_dimensional(a.clone(), &[1, w, w * w % 7]).unwrap())
            .collect();
        let sum = chars[0].direct_sum(&chars[1]).unwrap().direct_sum(&chars[2]).unwrap();
        let reg = Module::regular(&a);
        assert_eq!(hom_space(&reg, &sum).unwrap().dim(), 3);
        let iso = iso_test(&reg, &sum, &cert, 5).unwrap();
        assert!(iso.isomorphic);
        let w = iso.witness.unwrap();
        for b in 0..3 {
            assert_eq!(sum.action()[b].mul(&w), w.mul(&reg.action()[b]));
        }
    }

    #[test]
    fn isotypic_decomposition_and_extraction() {
        let a = c2();
        let cert = wedderburn(&a, 0).unwrap();
        let comps = isotypic_decompose(&Module::regular(&a), &cert).unwrap();
        assert_eq!(comps.iter().map(|c| c.module.dim()).collect::<Vec<_>>(), vec![1, 1]);
        let triv = Module::one_dimensional(a.clone(), &[1, 1]).unwrap();
        let triv_comp = comps
            .iter()
            .find(|c| hom_space(&triv, &c.module).unwrap().dim() == 1)
            .unwrap();
        let (s, _) = extract_simple(&triv_comp.module, &cert, 0).unwrap();
        assert!(iso_test(&s, &triv, &cert, 0).unwrap().isomorphic);

        let s3a = Arc::new(Algebra::group_algebra(&s3(), gf7()));
        let cert = wedderburn(&s3a, 0).unwrap();
        let comps = isotypic_decompose(&Module::regular(&s3a), &cert).unwrap();
        let mut dims: Vec<usize> = comps.iter().map(|c| c.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 4]);
        let big = comps.iter().find(|c| c.module.dim() == 4).unwrap();
        for seed in 0..4 {
            let (s, emb) = extract_simple(&big.module, &cert, seed).unwrap();
            assert_eq!(s.dim(), 2);
            assert_eq!(emb.rank(), 2);
        }
    }

    #[test]
    fn multiplicities_in_regular_module() {
        let t = s3();
        let a = Arc::new(Algebra::group_algebra(&t, gf7()));
        let cert = wedderburn(&a, 0).unwrap();
        let reg = Module::regular(&a);
        let triv = Module::one_dimensional(a.clone(), &[1; 6]).unwrap();
        assert_eq!(multiplicity(&triv, &triv, &cert).unwrap(), 1);
        assert_eq!(multiplicity(&triv, &reg, &cert).unwrap(), 1);
        let two = cert.blocks().iter().find(|b| b.degree() == 2).unwrap().simple().clone();
        assert_eq!(multiplicity(&two, &reg, &cert).unwrap(), 2);
        assert_eq!(multiplicity(&reg, &reg, &cert), Err(Error::NotAbsSimple));
    }

    #[test]
    fn restriction_to_a3() {
        let t = s3();
        let a = Arc::new(Algebra::group_algebra(&t, gf7()));
        let cert = wedderburn(&a, 0).unwrap();
        let two = cert.blocks().iter().find(|b| b.degree() == 2).unwrap().simple().clone();
        let c = (0..6).find(|&g| t.element_order(g) == 3).unwrap();
        let a3 = Subalgebra::from_generators(&a, &[unit_vector(6, c)]).unwrap();
        let res = two.restrict(&a3).unwrap();
        assert!(res.validate().is_ok());
        let k = a3.from_ambient(&unit_vector(6, c)).unwrap();
        let mp = crate::gf::minimal_polynomial(&res.act(&k)).unwrap();
        // eigenvalues of the 3-cycle are the primitive cube roots 2 and 4
        assert_eq!(
            crate::gf::roots_of_split_squarefree(&mp, 0).unwrap(),
            vec![2, 4]
        );
        let trivial_sub = Subalgebra::from_generators(&a, &[]).unwrap();
        let r1 = two.restrict(&trivial_sub).unwrap();
        assert_eq!(r1.action()[0], Matrix::identity(gf7(), 2));
        let full = two.restrict(&Subalgebra::full(&a)).unwrap();
        assert_eq!(full.action(), two.action());
    }

    #[test]
    fn submodule_and_quotient() {
        let a = c2();
        let reg = Module::regular(&a);
        let plus = Subspace::from_vectors(gf7(), 2, &[vec![1, 1]]);
        let (sub, emb) = reg.submodule(&plus).unwrap();
        assert_eq!(sub.dim(), 1);
        assert_eq!(emb.col(0), vec![1, 1]);
        assert!(sub.validate().is_ok());
        let quo = reg.quotient(&plus).unwrap();
        assert!(quo.validate().is_ok());
        assert_eq!(quo.action()[1], Matrix::scalar(gf7(), 1, 6));
        let bad = Subspace::from_vectors(gf7(), 2, &[vec![1, 0]]);
        assert_eq!(reg.submodule(&bad).unwrap_err(), Error::NotSubmodule);
        assert_eq!(reg.quotient(&bad).unwrap_err(), Error::NotSubmodule);
    }
}

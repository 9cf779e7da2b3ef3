use std::sync::Arc;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// A unital subalgebra of an ambient algebra.
///
/// The induced algebra uses the canonical RREF basis of the subspace, in
/// pivot order. For subalgebras spanned by group elements this is the list of
/// those elements in increasing index order.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    ambient: Arc<Algebra>,
    basis: Subspace,
    algebra: Arc<Algebra>,
}

impl Subalgebra {
    /// Smallest unital subalgebra containing the given vectors.
    pub fn from_generators(ambient: &Arc<Algebra>, generators: &[Vec<u64>]) -> Result<Self> {
        let field = ambient.field();
        let dim = ambient.dim();
        if generators.iter().any(|g| g.len() != dim) {
            return Err(Error::AmbientMismatch("generator length differs from the algebra dimension".into()));
        }
        let mut vecs = generators.to_vec();
        vecs.push(ambient.one().to_vec());
        let mut span = Subspace::from_vectors(field, dim, &vecs);
        loop {
            let products = ambient.product_space(&span, &span)?;
            let next = span.sum(&products)?;
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        Self::from_subspace(ambient, span)
    }

    /// Subalgebra with exactly the given span; errors unless it contains the
    /// unit and is closed under multiplication.
    pub fn from_basis(ambient: &Arc<Algebra>, vectors: &[Vec<u64>]) -> Result<Self> {
        let dim = ambient.dim();
        if vectors.iter().any(|g| g.len() != dim) {
            return Err(Error::AmbientMismatch("basis vector length differs from the algebra dimension".into()));
        }
        Self::from_subspace(ambient, Subspace::from_vectors(ambient.field(), dim, vectors))
    }

    pub fn from_subspace(ambient: &Arc<Algebra>, basis: Subspace) -> Result<Self> {
        if basis.ambient_dim() != ambient.dim() {
            return Err(Error::AmbientMismatch("subspace is not in the algebra".into()));
        }
        if !basis.contains_vector(ambient.one()) {
            return Err(Error::NotSubalgebra("does not contain the identity".into()));
        }
        let n = basis.dim();
        let vecs = basis.vectors();
        let mut dense = Vec::with_capacity(n * n);
        for (i, x) in vecs.iter().enumerate() {
            for (j, y) in vecs.iter().enumerate() {
                let prod = ambient.mul(x, y);
                match basis.coordinates(&prod) {
                    Some(c) => dense.push(c),
                    None => {
                        return Err(Error::NotSubalgebra(format!(
                            "product of basis vectors {i} and {j} leaves the span"
                        )))
                    }
                }
            }
        }
        let one = basis.coordinates(ambient.one()).expect("checked above");
        let algebra = Algebra::from_dense(ambient.field(), n, one, dense);
        Ok(Subalgebra {
            ambient: Arc::clone(ambient),
            basis,
            algebra: Arc::new(algebra),
        })
    }

    /// The ambient algebra as a subalgebra of itself (standard basis).
    pub fn full(ambient: &Arc<Algebra>) -> Self {
        Subalgebra {
            ambient: Arc::clone(ambient),
            basis: ambient.full_space(),
            algebra: Arc::clone(ambient),
        }
    }

    pub fn ambient(&self) -> &Arc<Algebra> {
        &self.ambient
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    /// The subalgebra as an algebra in its own right.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn to_ambient(&self, coords: &[u64]) -> Vec<u64> {
        self.basis.combine(coords)
    }

    pub fn from_ambient(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.basis.coordinates(v)
    }

    /// Basis vectors in ambient coordinates.
    pub fn ambient_basis(&self) -> Vec<Vec<u64>> {
        self.basis.vectors()
    }

    pub(crate) fn same_ambient(&self, other: &Subalgebra) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    /// Coordinates of this subalgebra's basis in `outer`'s basis.
    pub fn basis_in(&self, outer: &Subalgebra) -> Result<Vec<Vec<u64>>> {
        if !self.same_ambient(outer) {
            return Err(Error::AmbientMismatch("subalgebras of different algebras".into()));
        }
        self.ambient_basis()
            .iter()
            .map(|v| {
                outer
                    .from_ambient(v)
                    .ok_or_else(|| Error::Containment("subalgebra is not contained in the outer subalgebra".into()))
            })
            .collect()
    }

    pub fn is_contained_in(&self, outer: &Subalgebra) -> Result<bool> {
        if !self.same_ambient(outer) {
            return Err(Error::AmbientMismatch("subalgebras of different algebras".into()));
        }
        outer.basis.contains(&self.basis)
    }

    /// Maps a list of coordinate vectors to ambient coordinates.
    pub fn to_ambient_all(&self, coords: &[Vec<u64>]) -> Vec<Vec<u64>> {
        coords.iter().map(|c| self.to_ambient(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CayleyTable;
    use crate::gf::PrimeField;
    use crate::linalg::unit_vector;

    fn s3_algebra() -> (CayleyTable, Arc<Algebra>) {
        let t = CayleyTable::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let a = Arc::new(Algebra::group_algebra(&t, PrimeField::new(7).unwrap()));
        (t, a)
    }

    #[test]
    fn generator_closure() {
        let (t, a) = s3_algebra();
        let trivial = Subalgebra::from_generators(&a, &[]).unwrap();
        assert_eq!(trivial.dim(), 1);
        let basis: Vec<Vec<u64>> = (0..6).map(|i| unit_vector(6, i)).collect();
        assert_eq!(Subalgebra::from_generators(&a, &basis).unwrap().dim(), 6);
        let c = (0..6).find(|&g| t.element_order(g) == 3).unwrap();
        let a3 = Subalgebra::from_generators(&a, &[unit_vector(6, c)]).unwrap();
        assert_eq!(a3.dim(), 3);
        assert!(a3.algebra().validate().is_ok());
        assert!(a3.algebra().is_commutative());
    }

    #[test]
    fn exact_basis_must_be_closed() {
        let (t, a) = s3_algebra();
        let c = (0..6).find(|&g| t.element_order(g) == 3).unwrap();
        let err = Subalgebra::from_basis(&a, &[a.one().to_vec(), unit_vector(6, c)]).unwrap_err();
        assert!(matches!(err, Error::NotSubalgebra(_)));
        assert!(Subalgebra::from_basis(&a, &[unit_vector(6, c)]).is_err());
    }

    #[test]
    fn containment_and_coordinates() {
        let (t, a) = s3_algebra();
        let c = (0..6).find(|&g| t.element_order(g) == 3).unwrap();
        let a3 = Subalgebra::from_generators(&a, &[unit_vector(6, c)]).unwrap();
        let full = Subalgebra::full(&a);
        assert!(a3.is_contained_in(&full).unwrap());
        assert!(!full.is_contained_in(&a3).unwrap());
        let coords = a3.basis_in(&full).unwrap();
        assert_eq!(coords, a3.ambient_basis());
        assert!(full.basis_in(&a3).is_err());
    }
}

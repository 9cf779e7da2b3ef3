//! Idempotent splitting by minimal polynomials and Lagrange interpolation.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::error::{Error, Result};
use crate::gf::{first_dependency, roots_of_split_squarefree, Polynomial};
use crate::linalg::{vec_add, vec_scale, vec_sub, Subspace};

/// Random attempts allowed when searching for a primitive idempotent.
pub const IDEMPOTENT_RETRY_BUDGET: usize = 32;
/// Random attempts per central split before falling back to basis elements.
const CENTRAL_RETRY_BUDGET: usize = 16;

/// Complete set of orthogonal primitive central idempotents, sorted
/// lexicographically by coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralIdempotentSet {
    idempotents: Vec<Vec<u64>>,
}

impl CentralIdempotentSet {
    pub fn idempotents(&self) -> &[Vec<u64>] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// Direct check of idempotence, orthogonality, completeness, centrality
    /// and primitivity.
    pub fn verify(&self, algebra: &Algebra) -> Result<()> {
        let f = algebra.field();
        let zero = algebra.zero_vector();
        let mut total = zero.clone();
        let center = algebra.center();
        for (i, e) in self.idempotents.iter().enumerate() {
            if algebra.mul(e, e) != *e {
                return Err(Error::TheoremCheckFailed(format!("central idempotent {i} is not idempotent")));
            }
            if !algebra.is_central(e) {
                return Err(Error::TheoremCheckFailed(format!("idempotent {i} is not central")));
            }
            for (j, other) in self.idempotents.iter().enumerate() {
                if i != j && algebra.mul(e, other) != zero {
                    return Err(Error::TheoremCheckFailed(format!("idempotents {i} and {j} are not orthogonal")));
                }
            }
            if corner_of(algebra, e, &center).dim() != 1 {
                return Err(Error::TheoremCheckFailed(format!("central idempotent {i} is not primitive")));
            }
            total = vec_add(f, &total, e);
        }
        if total != algebra.one() {
            return Err(Error::TheoremCheckFailed("central idempotents do not sum to 1".into()));
        }
        Ok(())
    }
}

/// `e * Z` for a subspace `Z` of central elements.
fn corner_of(algebra: &Algebra, e: &[u64], center: &Subspace) -> Subspace {
    let vecs: Vec<Vec<u64>> = center.vectors().iter().map(|z| algebra.mul(e, z)).collect();
    Subspace::from_vectors(algebra.field(), algebra.dim(), &vecs)
}

/// Minimal polynomial of `x` inside the corner algebra with unit `e`.
fn element_minimal_polynomial(algebra: &Algebra, e: &[u64], x: &[u64]) -> Polynomial {
    first_dependency(algebra.field(), e.to_vec(), |v| algebra.mul(x, v))
}

/// `e_r = prod_{r' != r} (z - r' e) / (r - r')` for each root `r`.
fn lagrange_idempotents(algebra: &Algebra, e: &[u64], z: &[u64], roots: &[u64]) -> Vec<Vec<u64>> {
    let f = algebra.field();
    roots
        .iter()
        .map(|&r| {
            let mut acc = e.to_vec();
            for &s in roots.iter().filter(|&&s| s != r) {
                let factor = vec_sub(f, z, &vec_scale(f, s, e));
                let inv = f.inv(f.sub(r, s)).expect("distinct roots");
                acc = vec_scale(f, inv, &algebra.mul(&acc, &factor));
            }
            acc
        })
        .collect()
}

/// `gcd(m, x^p - x)`: the product of the distinct linear factors of `m`.
fn rational_part(m: &Polynomial) -> Result<Polynomial> {
    let field = m.field();
    let x = Polynomial::x(field);
    let frob = x.pow_mod(field.modulus(), m)?;
    Ok(frob.sub(&x).gcd(m).monic())
}

/// `h(z) / h(r)` with `h = m / (x - r)`, the idempotent of the root `r` of a
/// squarefree minimal polynomial `m` of `z` in the corner with unit `e`.
fn root_idempotent(algebra: &Algebra, e: &[u64], z: &[u64], m: &Polynomial, r: u64) -> Result<Vec<u64>> {
    let f = algebra.field();
    let linear = Polynomial::new(f, vec![f.neg(r), 1]);
    let (h, _) = m.divrem(&linear)?;
    let mut acc = algebra.zero_vector();
    for &c in h.coeffs().iter().rev() {
        acc = vec_add(f, &algebra.mul(z, &acc), &vec_scale(f, c, e));
    }
    let inv = f.inv(h.eval(r))?;
    Ok(vec_scale(f, inv, &acc))
}

fn random_combination<R: Rng>(algebra: &Algebra, basis: &[Vec<u64>], rng: &mut R) -> Vec<u64> {
    let f = algebra.field();
    let coeffs: Vec<u64> = basis.iter().map(|_| f.random(rng)).collect();
    algebra.combine(&coeffs, basis)
}

/// Splits the center into primitive central idempotents.
///
/// Picks a non-scalar central element inside each unsplit piece, factors its
/// minimal polynomial into distinct roots, and refines by the Lagrange
/// idempotents until every piece has a one-dimensional center.
pub fn primitive_central_idempotents(algebra: &Algebra, seed: u64) -> Result<CentralIdempotentSet> {
    let center = algebra.center();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = vec![algebra.one().to_vec()];
    let mut done = Vec::new();
    while let Some(e) = work.pop() {
        let piece = corner_of(algebra, &e, &center);
        if piece.dim() == 1 {
            done.push(e);
            continue;
        }
        let piece_basis = piece.vectors();
        let mut candidates: Vec<Vec<u64>> = (0..CENTRAL_RETRY_BUDGET)
            .map(|_| random_combination(algebra, &piece_basis, &mut rng))
            .collect();
        candidates.extend(piece_basis.iter().cloned());
        let mut split = None;
        for z in candidates {
            let mp = element_minimal_polynomial(algebra, &e, &z);
            if mp.degree().unwrap_or(0) < 2 {
                continue;
            }
            if !mp.is_squarefree() {
                return Err(Error::CenterNotSeparable);
            }
            let roots = roots_of_split_squarefree(&mp, rng.gen())?;
            split = Some(lagrange_idempotents(algebra, &e, &z, &roots));
            break;
        }
        match split {
            Some(parts) => work.extend(parts),
            None => return Err(Error::SplittingFailed(CENTRAL_RETRY_BUDGET + piece_basis.len())),
        }
    }
    done.sort();
    let set = CentralIdempotentSet { idempotents: done };
    set.verify(algebra)?;
    Ok(set)
}

/// Idempotent `f` below `e` (so `f = e f e`) with `dim f A f = 1`.
///
/// Repeatedly takes a random element of the corner `f A f`, and when its
/// minimal polynomial is squarefree with at least two roots in GF(p),
/// replaces `f` by one of the Lagrange idempotents. Intended for blocks that
/// are full matrix algebras; anything else exhausts the retry budget.
pub fn primitive_idempotent_below(algebra: &Algebra, e: &[u64], seed: u64) -> Result<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = e.to_vec();
    let mut attempts = 0;
    loop {
        let corner = algebra.corner(&f);
        match corner.dim() {
            0 => return Err(Error::InvalidInput("zero idempotent".into())),
            1 => return Ok(f),
            _ => {}
        }
        if attempts >= IDEMPOTENT_RETRY_BUDGET {
            return Err(Error::SplittingFailed(attempts));
        }
        attempts += 1;
        let x = random_combination(algebra, &corner.vectors(), &mut rng);
        let mp = element_minimal_polynomial(algebra, &f, &x);
        if mp.degree().unwrap_or(0) < 2 || !mp.is_squarefree() {
            continue;
        }
        let linear = rational_part(&mp)?;
        if linear.degree().unwrap_or(0) == 0 {
            continue;
        }
        let Ok(roots) = roots_of_split_squarefree(&linear, rng.gen()) else {
            continue;
        };
        f = root_idempotent(algebra, &f, &x, &mp, roots[0])?;
    }
}

/// Primitive idempotent of an algebra expected to be a single matrix block.
pub fn primitive_idempotent(algebra: &Algebra, seed: u64) -> Result<Vec<u64>> {
    primitive_idempotent_below(algebra, algebra.one(), seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CayleyTable;
    use crate::gf::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn s3() -> CayleyTable {
        CayleyTable::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn one_dimensional_algebra() {
        let a = Algebra::ground_field(gf(7));
        assert_eq!(primitive_central_idempotents(&a, 0).unwrap().idempotents(), &[vec![1]]);
        assert_eq!(primitive_idempotent(&a, 0).unwrap(), vec![1]);
    }

    #[test]
    fn c2_over_gf7() {
        let a = Algebra::group_algebra(&CayleyTable::cyclic(2), gf(7));
        let set = primitive_central_idempotents(&a, 0).unwrap();
        // (1 - g)/2 and (1 + g)/2 with 1/2 = 4
        assert_eq!(set.idempotents(), &[vec![4, 3], vec![4, 4]]);
        for e in set.idempotents() {
            assert_eq!(primitive_idempotent_below(&a, e, 3).unwrap(), *e);
        }
    }

    #[test]
    fn s3_has_three_blocks() {
        let a = Algebra::group_algebra(&s3(), gf(7));
        for seed in 0..5 {
            let set = primitive_central_idempotents(&a, seed).unwrap();
            assert_eq!(set.len(), 3);
            assert_eq!(set.len(), a.center().dim());
        }
    }

    #[test]
    fn matrix_block_of_s3_has_rank_one_idempotents() {
        let a = Algebra::group_algebra(&s3(), gf(7));
        let set = primitive_central_idempotents(&a, 1).unwrap();
        let big = set
            .idempotents()
            .iter()
            .find(|e| a.corner(e).dim() == 4)
            .expect("2x2 block");
        for seed in 0..8 {
            let f = primitive_idempotent_below(&a, big, seed).unwrap();
            assert_eq!(a.mul(&f, &f), f);
            assert_eq!(a.corner(&f).dim(), 1);
            assert_eq!(a.left_ideal(&f).dim(), 2);
        }
    }

    #[test]
    fn modular_group_algebra_center_is_not_separable() {
        let a = Algebra::group_algebra(&CayleyTable::cyclic(3), gf(3));
        assert_eq!(primitive_central_idempotents(&a, 0), Err(Error::CenterNotSeparable));
    }

    #[test]
    fn non_split_center_is_reported() {
        // C4 over GF(7): x^2 + 1 has no roots, so the center does not split
        let a = Algebra::group_algebra(&CayleyTable::cyclic(4), gf(7));
        assert!(matches!(
            primitive_central_idempotents(&a, 0),
            Err(Error::NotSplit { .. })
        ));
    }

    #[test]
    fn deterministic_under_seed() {
        let a = Algebra::group_algebra(&s3(), gf(7));
        let set = primitive_central_idempotents(&a, 1).unwrap();
        let big = set.idempotents().iter().find(|e| a.corner(e).dim() == 4).unwrap().clone();
        let runs: Vec<_> = (0..3).map(|_| primitive_idempotent_below(&a, &big, 42).unwrap()).collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]));
    }
}

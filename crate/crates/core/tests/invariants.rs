use std::sync::Arc;

use clifford_core::clifford::{induce, is_stable, v_socle};
use clifford_core::module::{iso_test, multiplicity};
use clifford_core::oracle::{example, oracle_is_simple};
use clifford_core::{wedderburn, Algebra, CayleyTable, Matrix, Module, PrimeField, Subspace};
use proptest::prelude::*;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn invertible(field: PrimeField, n: usize, entries: &[u64]) -> Option<Matrix> {
    let m = Matrix::from_vec(field, n, n, entries.iter().map(|&x| x % field.modulus()).collect());
    m.is_invertible().then_some(m)
}

fn conjugate(m: &Module, p: &Matrix) -> Module {
    let inv = p.inverse().unwrap();
    let action = m.action().iter().map(|a| p.mul(a).mul(&inv)).collect();
    Module::new(Arc::clone(m.algebra()), m.dim(), action).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_inverse(p in prop::sample::select(vec![3u64, 5, 7, 13, 2_147_483_647]), a in 1u64..u32::MAX as u64) {
        let f = gf(p);
        let a = a % p;
        prop_assume!(a != 0);
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        prop_assert_eq!(f.pow(a, p - 1), 1);
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, data in prop::collection::vec(0u64..5, 36)) {
        let m = Matrix::from_vec(gf(5), rows, cols, data[..rows * cols].to_vec());
        prop_assert_eq!(m.rank() + m.nullspace().dim(), cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn subspace_is_canonical(data in prop::collection::vec(0u64..7, 20), c in 0u64..7) {
        let f = gf(7);
        let vs: Vec<Vec<u64>> = data.chunks(5).map(|c| c.to_vec()).collect();
        let mut mixed: Vec<Vec<u64>> = vs.iter().rev().cloned().collect();
        let combo: Vec<u64> = (0..5).map(|i| f.add(vs[0][i], f.mul(c, vs[1][i]))).collect();
        mixed.push(combo);
        prop_assert_eq!(Subspace::from_vectors(f, 5, &vs), Subspace::from_vectors(f, 5, &mixed));
    }

    #[test]
    fn split_cyclic_algebras(n in 1usize..7, seed in any::<u64>()) {
        let a = Arc::new(Algebra::group_algebra(&CayleyTable::cyclic(n), gf(61)));
        let cert = wedderburn(&a, seed).unwrap();
        prop_assert_eq!(cert.degrees(), vec![1; n]);
    }

    #[test]
    fn s3_degrees_are_seed_independent(p in prop::sample::select(vec![5u64, 7, 11, 13]), seed in any::<u64>()) {
        let s3 = CayleyTable::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let a = Arc::new(Algebra::group_algebra(&s3, gf(p)));
        let mut d = wedderburn(&a, seed).unwrap().degrees();
        d.sort();
        prop_assert_eq!(d, vec![1, 1, 2]);
        let op = Arc::new(a.opposite());
        let mut d = wedderburn(&op, seed).unwrap().degrees();
        d.sort();
        prop_assert_eq!(d, vec![1, 1, 2]);
    }

    #[test]
    fn base_change_is_an_isomorphism(entries in prop::collection::vec(0u64..5, 4), seed in any::<u64>()) {
        let ex = example("q8_i").unwrap();
        let cert = wedderburn(&ex.algebra, seed).unwrap();
        let two_dim = cert.simples().into_iter().find(|s| s.dim() == 2).unwrap().clone();
        let Some(p) = invertible(two_dim.field(), 2, &entries) else { return Ok(()); };
        let other = conjugate(&two_dim, &p);
        let iso = iso_test(&two_dim, &other, &cert, seed).unwrap();
        prop_assert!(iso.isomorphic);
        let w = iso.witness.unwrap();
        for (a, b) in two_dim.action().iter().zip(other.action()) {
            prop_assert_eq!(w.mul(a), b.mul(&w));
        }
        prop_assert!(oracle_is_simple(&other).unwrap());
    }

    #[test]
    fn multiplicity_is_additive(i in 0usize..3, j in 0usize..3, k in 1usize..3) {
        let ex = example("s3_a3").unwrap();
        let cert = wedderburn(ex.sub.algebra(), 0).unwrap();
        let vs: Vec<&Module> = ex.simples_of_sub.iter().map(|(_, v)| v).collect();
        let sum = vs[i].direct_sum(&vs[j].power(k)).unwrap();
        for (idx, v) in vs.iter().enumerate() {
            let expected = usize::from(idx == i) + if idx == j { k } else { 0 };
            prop_assert_eq!(multiplicity(v, &sum, &cert).unwrap(), expected);
        }
    }

    #[test]
    fn induction_contains_v(which in 0usize..4) {
        let ex = example("q8_i").unwrap();
        let cert = wedderburn(ex.sub.algebra(), 0).unwrap();
        let v = &ex.simples_of_sub[which].1;
        let ind = induce(&ex.sub, v).unwrap();
        prop_assert_eq!(ind.dim(), 2 * v.dim());
        prop_assert!(!v_socle(v, ind.restricted(), &cert).unwrap().is_zero());
        let st = is_stable(&ind, &cert).unwrap();
        prop_assert_eq!(st.stable, st.socle_dim == ind.dim());
    }
}

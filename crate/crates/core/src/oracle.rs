//! Brute-force checks and the bundled example corpus.
//!
//! Nothing here calls the idempotent splitting, the Wedderburn certificate or
//! simple extraction: simplicity is decided by closing cyclic spans of every
//! vector, and block counts by solving the centralizer equations directly.

use std::sync::Arc;

use crate::algebra::{Algebra, CayleyTable, Subalgebra};
use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::module::Module;

/// Exhaustive searches stop above this many vectors.
pub const ORACLE_VECTOR_LIMIT: u64 = 1_000_000;

fn cyclic_span(module: &Module, v: &[u64]) -> Subspace {
    let field = module.field();
    let mut span = Subspace::from_vectors(field, module.dim(), &[v.to_vec()]);
    loop {
        let mut vecs = span.vectors();
        for m in module.action() {
            for w in span.vectors() {
                vecs.push(m.mul_vec(&w));
            }
        }
        let next = Subspace::from_vectors(field, module.dim(), &vecs);
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

/// Decides simplicity by checking that every nonzero vector generates the
/// whole module. Vectors are taken up to scalars (first nonzero entry 1).
pub fn oracle_is_simple(module: &Module) -> Result<bool> {
    let n = module.dim();
    if n == 0 {
        return Ok(false);
    }
    let p = module.field().modulus();
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&x| x <= ORACLE_VECTOR_LIMIT));
    if total.is_none() {
        return Err(Error::TooLarge {
            dim: n,
            limit: ORACLE_VECTOR_LIMIT as usize,
        });
    }
    for lead in 0..n {
        let free = n - lead - 1;
        let count = p.pow(free as u32);
        let mut v = vec![0u64; n];
        v[lead] = 1;
        for mut code in 0..count {
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = code % p;
                code /= p;
            }
            if cyclic_span(module, &v).dim() != n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension of the center, from `x b_i = b_i x` written out in structure
/// constants. For a split semisimple algebra this is the number of simples.
pub fn oracle_simple_count(algebra: &Algebra) -> usize {
    let f = algebra.field();
    let d = algebra.dim();
    let mut rows = Vec::with_capacity(d * d);
    let consts = algebra.structure_constants();
    // row (i, k): sum_j x_j (c[j][i][k] - c[i][j][k]) = 0
    let mut dense = vec![vec![vec![0u64; d]; d]; d];
    for (i, j, k, c) in consts {
        dense[i][j][k] = c;
    }
    for i in 0..d {
        for k in 0..d {
            let row: Vec<u64> = (0..d).map(|j| f.sub(dense[j][i][k], dense[i][j][k])).collect();
            rows.push(row);
        }
    }
    d - Matrix::from_rows(f, d, &rows).rank()
}

/// Block degrees are consistent with the centralizer count and dimension.
pub fn oracle_block_check(algebra: &Algebra, degrees: &[usize]) -> bool {
    degrees.len() == oracle_simple_count(algebra) && degrees.iter().map(|d| d * d).sum::<usize>() == algebra.dim()
}

/// What the corpus records about an instance. `None` means the value is not
/// asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    /// Sorted block degrees of the algebra; `None` for the non-semisimple
    /// fixture.
    pub block_degrees: Option<Vec<usize>>,
    pub normal: Option<bool>,
    /// Stability of each listed simple of the subalgebra.
    pub stable: Vec<Option<bool>>,
}

#[derive(Debug, Clone)]
pub struct ExampleInstance {
    pub name: &'static str,
    pub algebra: Arc<Algebra>,
    pub sub: Subalgebra,
    pub simples_of_sub: Vec<(String, Module)>,
    pub expected: Expected,
    pub group: Option<CayleyTable>,
}

impl ExampleInstance {
    pub fn simple(&self, name: &str) -> &Module {
        &self
            .simples_of_sub
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("no simple named {name} in {}", self.name))
            .1
    }
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("bundled prime")
}

/// Index of a permutation in a table built from permutation generators.
pub fn element_index(table: &CayleyTable, perm: &[usize]) -> usize {
    let label = format!("{perm:?}");
    table
        .labels()
        .and_then(|l| l.iter().position(|x| *x == label))
        .unwrap_or_else(|| panic!("{label} is not in the group"))
}

pub fn s3() -> CayleyTable {
    CayleyTable::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).expect("S3")
}

/// Rotation `r = (0 1 2 3)` and reflection `s = (1 3)` of a square.
pub fn d4() -> CayleyTable {
    CayleyTable::from_permutation_generators(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).expect("D4")
}

/// Quaternion unit `(sign, axis)` with axis 0..4 for 1, i, j, k.
type Quat = (bool, usize);

fn quat_mul(a: Quat, b: Quat) -> Quat {
    // axis products for 1, i, j, k: (negate, axis)
    const T: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let (neg, axis) = T[a.1][b.1];
    (a.0 ^ b.0 ^ neg, axis)
}

fn quat_points() -> Vec<Quat> {
    (0..4).flat_map(|axis| [(false, axis), (true, axis)]).collect()
}

/// Left multiplication by a quaternion unit as a permutation of the eight
/// points `+1, -1, +i, -i, +j, -j, +k, -k`.
pub fn quaternion_left_mul(q: Quat) -> Vec<usize> {
    let pts = quat_points();
    pts.iter()
        .map(|&x| pts.iter().position(|&y| y == quat_mul(q, x)).expect("closed"))
        .collect()
}

pub fn q8() -> CayleyTable {
    CayleyTable::from_permutation_generators(8, &[quaternion_left_mul((false, 1)), quaternion_left_mul((false, 2))])
        .expect("Q8")
}

/// The standard nontrivial cocycle on `C2 x C2` (index `2i + j` for
/// `x^i y^j`): `alpha(x^i y^j, x^k y^l) = (-1)^(j k)`.
pub fn klein_cocycle(p: u64) -> Vec<Vec<u64>> {
    (0..4)
        .map(|a| (0..4).map(|b| if (a % 2) * (b / 2) == 1 { p - 1 } else { 1 }).collect())
        .collect()
}

/// One-dimensional module of the subalgebra spanned by a subgroup, given a
/// value for each subgroup element. The subalgebra basis lists the subgroup
/// in increasing index order.
pub fn subgroup_character(sub: &Subalgebra, subgroup: &[usize], value: impl Fn(usize) -> u64) -> Module {
    let mut elems = subgroup.to_vec();
    elems.sort_unstable();
    let values: Vec<u64> = elems.iter().map(|&g| value(g)).collect();
    Module::one_dimensional(Arc::clone(sub.algebra()), &values).expect("character")
}

/// Character of the cyclic group generated by `g` sending `g` to `z`.
pub fn cyclic_character(table: &CayleyTable, sub: &Subalgebra, g: usize, z: u64) -> Module {
    let f = sub.algebra().field();
    let subgroup = table.subgroup(&[g]);
    subgroup_character(sub, &subgroup, |h| {
        let k = (0..table.element_order(g)).find(|&k| table.power(g, k) == h).expect("in subgroup");
        f.pow(z, k as u64)
    })
}

fn group_sub(a: &Arc<Algebra>, gens: &[usize]) -> Subalgebra {
    let vecs: Vec<Vec<u64>> = gens.iter().map(|&g| unit_vector(a.dim(), g)).collect();
    Subalgebra::from_generators(a, &vecs).expect("group subalgebra")
}

fn s3_a3() -> ExampleInstance {
    let t = s3();
    let a = Arc::new(Algebra::group_algebra(&t, field(7)));
    let c = element_index(&t, &[1, 2, 0]);
    let b = group_sub(&a, &[c]);
    let simples = [("trivial", 1), ("omega", 2), ("omega2", 4)]
        .iter()
        .map(|&(n, z)| (n.to_string(), cyclic_character(&t, &b, c, z)))
        .collect();
    ExampleInstance {
        name: "s3_a3",
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(vec![1, 1, 2]),
            normal: Some(true),
            stable: vec![Some(true), Some(false), Some(false)],
        },
        group: Some(t),
    }
}

fn s3_transposition() -> ExampleInstance {
    let t = s3();
    let a = Arc::new(Algebra::group_algebra(&t, field(7)));
    let s = element_index(&t, &[1, 0, 2]);
    let b = group_sub(&a, &[s]);
    let simples = [("trivial", 1), ("sign", 6)]
        .iter()
        .map(|&(n, z)| (n.to_string(), cyclic_character(&t, &b, s, z)))
        .collect();
    ExampleInstance {
        name: "s3_transposition",
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(vec![1, 1, 2]),
            normal: Some(false),
            stable: vec![None, None],
        },
        group: Some(t),
    }
}

fn d4_center() -> ExampleInstance {
    let t = d4();
    let a = Arc::new(Algebra::group_algebra(&t, field(7)));
    let z = element_index(&t, &[2, 3, 0, 1]);
    let b = group_sub(&a, &[z]);
    let simples = [("trivial", 1), ("sign", 6)]
        .iter()
        .map(|&(n, v)| (n.to_string(), cyclic_character(&t, &b, z, v)))
        .collect();
    ExampleInstance {
        name: "d4_center",
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(vec![1, 1, 1, 1, 2]),
            normal: Some(true),
            stable: vec![Some(true), Some(true)],
        },
        group: Some(t),
    }
}

fn q8_i() -> ExampleInstance {
    let t = q8();
    let a = Arc::new(Algebra::group_algebra(&t, field(5)));
    let i = element_index(&t, &quaternion_left_mul((false, 1)));
    let b = group_sub(&a, &[i]);
    let simples = [("trivial", 1), ("chi2", 2), ("chi4", 4), ("chi3", 3)]
        .iter()
        .map(|&(n, v)| (n.to_string(), cyclic_character(&t, &b, i, v)))
        .collect();
    ExampleInstance {
        name: "q8_i",
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(vec![1, 1, 1, 1, 2]),
            normal: Some(true),
            stable: vec![Some(true), Some(false), Some(true), Some(false)],
        },
        group: Some(t),
    }
}

fn c6_c3() -> ExampleInstance {
    let t = CayleyTable::cyclic(6);
    let a = Arc::new(Algebra::group_algebra(&t, field(7)));
    let b = group_sub(&a, &[2]);
    let simples = [("trivial", 1), ("omega", 2), ("omega2", 4)]
        .iter()
        .map(|&(n, z)| (n.to_string(), cyclic_character(&t, &b, 2, z)))
        .collect();
    ExampleInstance {
        name: "c6_c3",
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(vec![1; 6]),
            normal: Some(true),
            stable: vec![Some(true); 3],
        },
        group: Some(t),
    }
}

fn klein_twisted() -> ExampleInstance {
    let t = CayleyTable::cyclic(2).direct_product(&CayleyTable::cyclic(2));
    let a = Arc::new(Algebra::twisted_group_algebra(&t, &klein_cocycle(7), field(7)).expect("cocycle"));
    // u_x with x = index 2; the cocycle is trivial on <x>
    let b = group_sub(&a, &[2]);
    let simples = [("trivial", 1), ("sign", 6)]
        .iter()
        .map(|&(n, z)| (n.to_string(), cyclic_character(&t, &b, 2, z)))
        .collect();
    ExampleInstance {
        name: "klein_twisted",
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(vec![2]),
            normal: Some(true),
            stable: vec![Some(false), Some(false)],
        },
        group: None,
    }
}

/// Automorphisms of `GF(p)[C3]` given by `g -> g` and `g -> g^-1`.
pub fn c3_inversion(p: u64) -> [Matrix; 2] {
    let f = field(p);
    [
        Matrix::identity(f, 3),
        Matrix::from_i64(f, 3, 3, &[1, 0, 0, 0, 0, 1, 0, 1, 0]),
    ]
}

fn skew(trivial_action: bool) -> ExampleInstance {
    let c3 = CayleyTable::cyclic(3);
    let base = Algebra::group_algebra(&c3, field(7));
    let [id, inv] = c3_inversion(7);
    let action = if trivial_action { [id.clone(), id] } else { [id, inv] };
    let a = Arc::new(Algebra::skew_group_algebra(&base, &CayleyTable::cyclic(2), &action).expect("skew"));
    let b = Subalgebra::from_basis(&a, &(0..3).map(|i| unit_vector(6, i)).collect::<Vec<_>>()).expect("B#1");
    let simples = [("trivial", 1u64), ("omega", 2), ("omega2", 4)]
        .iter()
        .map(|&(n, z)| {
            let values = [1, z, z * z % 7];
            (n.to_string(), Module::one_dimensional(Arc::clone(b.algebra()), &values).expect("char"))
        })
        .collect();
    ExampleInstance {
        name: if trivial_action { "skew_c3_c2_trivial" } else { "skew_c3_c2" },
        algebra: a,
        sub: b,
        simples_of_sub: simples,
        expected: Expected {
            block_degrees: Some(if trivial_action { vec![1; 6] } else { vec![1, 1, 2] }),
            normal: Some(true),
            stable: if trivial_action {
                vec![Some(true); 3]
            } else {
                vec![Some(true), Some(false), Some(false)]
            },
        },
        group: None,
    }
}

fn gf3_c3() -> ExampleInstance {
    let t = CayleyTable::cyclic(3);
    let a = Arc::new(Algebra::group_algebra(&t, field(3)));
    let b = Subalgebra::from_generators(&a, &[]).expect("scalars");
    let triv = Module::one_dimensional(Arc::clone(b.algebra()), &[1]).expect("trivial");
    ExampleInstance {
        name: "gf3_c3",
        algebra: a,
        sub: b,
        simples_of_sub: vec![("trivial".into(), triv)],
        expected: Expected {
            block_degrees: None,
            normal: None,
            stable: vec![None],
        },
        group: Some(t),
    }
}

/// The bundled corpus, in a fixed order.
pub fn example_library() -> Vec<ExampleInstance> {
    vec![
        s3_a3(),
        s3_transposition(),
        d4_center(),
        q8_i(),
        c6_c3(),
        klein_twisted(),
        skew(false),
        skew(true),
        gf3_c3(),
    ]
}

pub fn example(name: &str) -> Option<ExampleInstance> {
    example_library().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplicity_by_exhaustion() {
        let a = Arc::new(Algebra::group_algebra(&CayleyTable::cyclic(2), field(7)));
        assert!(oracle_is_simple(&Module::one_dimensional(a.clone(), &[1, 6]).unwrap()).unwrap());
        assert!(!oracle_is_simple(&Module::regular(&a)).unwrap());
        assert!(!oracle_is_simple(&Module::zero(&a)).unwrap());
        let m2 = Arc::new(Algebra::full_matrix(field(7), 2));
        let natural: Vec<Matrix> = (0..4)
            .map(|k| {
                let mut m = Matrix::zeros(field(7), 2, 2);
                m.set(k / 2, k % 2, 1);
                m
            })
            .collect();
        let v = Module::new(m2.clone(), 2, natural).unwrap();
        assert!(oracle_is_simple(&v).unwrap());
        assert!(!oracle_is_simple(&Module::regular(&m2)).unwrap());
    }

    #[test]
    fn exhaustive_bound() {
        let a = Arc::new(Algebra::group_algebra(&CayleyTable::cyclic(8), field(17)));
        assert!(matches!(
            oracle_is_simple(&Module::regular(&a)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn simple_counts() {
        assert_eq!(oracle_simple_count(&Algebra::group_algebra(&s3(), field(7))), 3);
        let v4 = CayleyTable::cyclic(2).direct_product(&CayleyTable::cyclic(2));
        assert_eq!(oracle_simple_count(&Algebra::group_algebra(&v4, field(7))), 4);
        assert_eq!(oracle_simple_count(&Algebra::full_matrix(field(7), 2)), 1);
    }

    #[test]
    fn corpus_groups() {
        assert_eq!(s3().order(), 6);
        let q = q8();
        assert_eq!(q.order(), 8);
        assert_eq!(q.center().len(), 2);
        assert_eq!(q.exponent(), 4);
        let d = d4();
        assert_eq!(d.order(), 8);
        assert_eq!(d.center().len(), 2);
        let r = element_index(&d, &[1, 2, 3, 0]);
        let s = element_index(&d, &[0, 3, 2, 1]);
        assert_eq!(d.mul(d.mul(s, r), s), d.inverse(r));
    }

    #[test]
    fn corpus_is_consistent() {
        for ex in example_library() {
            assert!(ex.algebra.validate().is_ok(), "{}", ex.name);
            assert_eq!(ex.simples_of_sub.len(), ex.expected.stable.len(), "{}", ex.name);
            for (n, m) in &ex.simples_of_sub {
                assert!(m.validate().is_ok(), "{} {n}", ex.name);
            }
            if let (Some(g), Some(d)) = (&ex.group, &ex.expected.block_degrees) {
                assert_eq!(d.iter().map(|x| x * x).sum::<usize>(), g.order(), "{}", ex.name);
            }
        }
    }
}

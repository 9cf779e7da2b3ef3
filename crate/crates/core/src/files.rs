//! JSON file formats for algebras, groups, cocycles, actions, modules and
//! subalgebras.
//!
//! Integers may be negative or exceed `p`; they are reduced on load. Matrices
//! are row-major and may be written nested (`[[..], [..]]`) or flat.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, CayleyTable, Subalgebra};
use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::linalg::Matrix;
use crate::module::Module;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: u64,
    pub dim: usize,
    pub one: Vec<i64>,
    pub mul: Vec<(usize, usize, usize, i64)>,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Algebra> {
        let f = PrimeField::new(self.p)?;
        let one = self.one.iter().map(|&x| f.from_i64(x)).collect();
        let triples: Vec<_> = self.mul.iter().map(|&(i, j, k, c)| (i, j, k, f.from_i64(c))).collect();
        Algebra::from_structure_constants(f, self.dim, one, &triples)
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraFile {
            p: a.field().modulus(),
            dim: a.dim(),
            one: a.one().iter().map(|&x| x as i64).collect(),
            mul: a
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c as i64))
                .collect(),
        }
    }
}

/// A group given by its table or by permutation generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Generators {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupFile {
    pub fn build(&self) -> Result<CayleyTable> {
        match self {
            GroupFile::Table { order, table, labels } => {
                if table.len() != *order {
                    return Err(Error::NotAGroup(format!("table has {} rows for order {order}", table.len())));
                }
                CayleyTable::new(table.clone(), labels.clone())
            }
            GroupFile::Generators { degree, generators } => {
                CayleyTable::from_permutation_generators(*degree, generators)
            }
        }
    }

    pub fn from_table(t: &CayleyTable) -> Self {
        GroupFile::Table {
            order: t.order(),
            table: t.table().to_vec(),
            labels: t.labels().map(|l| l.to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub alpha: Vec<Vec<i64>>,
}

impl CocycleFile {
    pub fn values(&self, field: PrimeField) -> Vec<Vec<u64>> {
        self.alpha
            .iter()
            .map(|row| row.iter().map(|&x| field.from_i64(x)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixRepr {
    Nested(Vec<Vec<i64>>),
    Flat(Vec<i64>),
}

impl MatrixRepr {
    fn to_matrix(&self, field: PrimeField, rows: usize, cols: usize) -> Result<Matrix> {
        let flat: Vec<i64> = match self {
            MatrixRepr::Nested(r) => {
                if r.len() != rows || r.iter().any(|row| row.len() != cols) {
                    return Err(Error::ShapeMismatch(format!("expected a {rows}x{cols} matrix")));
                }
                r.concat()
            }
            MatrixRepr::Flat(v) => v.clone(),
        };
        if flat.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                flat.len()
            )));
        }
        Ok(Matrix::from_i64(field, rows, cols, &flat))
    }

    fn from_matrix(m: &Matrix) -> Self {
        MatrixRepr::Nested(
            m.row_vectors()
                .into_iter()
                .map(|r| r.into_iter().map(|x| x as i64).collect())
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub matrices: Vec<MatrixRepr>,
}

impl ActionFile {
    pub fn build(&self, base: &Algebra) -> Result<Vec<Matrix>> {
        self.matrices
            .iter()
            .map(|m| m.to_matrix(base.field(), base.dim(), base.dim()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dim: usize,
    pub action: Vec<MatrixRepr>,
}

impl ModuleFile {
    pub fn build(&self, algebra: &Arc<Algebra>) -> Result<Module> {
        let action = self
            .action
            .iter()
            .map(|m| m.to_matrix(algebra.field(), self.dim, self.dim))
            .collect::<Result<Vec<_>>>()?;
        Module::new(Arc::clone(algebra), self.dim, action)
    }

    pub fn from_module(m: &Module) -> Self {
        ModuleFile {
            dim: m.dim(),
            action: m.action().iter().map(MatrixRepr::from_matrix).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraFile {
    pub basis: Vec<Vec<i64>>,
}

impl SubalgebraFile {
    /// The exact span of the listed vectors; it must be a unital subalgebra.
    pub fn build(&self, ambient: &Arc<Algebra>) -> Result<Subalgebra> {
        let f = ambient.field();
        let vecs: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        Subalgebra::from_basis(ambient, &vecs)
    }

    pub fn from_subalgebra(s: &Subalgebra) -> Self {
        SubalgebraFile {
            basis: s
                .ambient_basis()
                .into_iter()
                .map(|v| v.into_iter().map(|x| x as i64).collect())
                .collect(),
        }
    }
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::example;

    #[test]
    fn algebra_round_trip() {
        let ex = example("s3_a3").unwrap();
        let file = AlgebraFile::from_algebra(&ex.algebra);
        let text = to_json(&file);
        let back: AlgebraFile = parse(&text).unwrap();
        assert_eq!(back.build().unwrap(), *ex.algebra);
    }

    #[test]
    fn corrupted_structure_constants() {
        let text = r#"{"p": 7, "dim": 2, "one": [1, 0], "mul": [[0,0,0,2],[0,1,1,1],[1,0,1,1],[1,1,0,1]]}"#;
        let file: AlgebraFile = parse(text).unwrap();
        assert_eq!(file.build().unwrap_err().class(), crate::ErrorClass::InvalidInput);
        assert!(parse::<AlgebraFile>(r#"{"p": 7, "dim": 1}"#).is_err());
        assert!(parse::<AlgebraFile>(r#"{"p": 7, "dim": 1, "one": [1], "mul": [], "x": 1}"#).is_err());
        let bad_p: AlgebraFile = parse(r#"{"p": 9, "dim": 1, "one": [1], "mul": [[0,0,0,1]]}"#).unwrap();
        assert_eq!(bad_p.build().unwrap_err(), Error::BadModulus(9));
    }

    #[test]
    fn groups_both_forms() {
        let g: GroupFile = parse(r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(g.build().unwrap().order(), 6);
        let t: GroupFile = parse(r#"{"order": 2, "table": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(t.build().unwrap().order(), 2);
        let t: GroupFile = parse(r#"{"order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
        assert!(t.build().is_err());
    }

    #[test]
    fn modules_nested_and_flat() {
        let ex = example("s3_a3").unwrap();
        let omega = ex.simple("omega");
        let file = ModuleFile::from_module(omega);
        let back: ModuleFile = parse(&to_json(&file)).unwrap();
        assert_eq!(back.build(ex.sub.algebra()).unwrap().action(), omega.action());
        let flat: ModuleFile = parse(r#"{"dim": 1, "action": [[1], [2], [4]]}"#).unwrap();
        assert!(flat.build(ex.sub.algebra()).is_ok());
        let sub = SubalgebraFile::from_subalgebra(&ex.sub);
        assert_eq!(sub.build(&ex.algebra).unwrap().basis(), ex.sub.basis());
    }
}

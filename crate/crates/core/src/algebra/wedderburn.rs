//! Constructive certificate that an algebra is a product of full matrix
//! algebras over the prime field.

use std::sync::Arc;

use super::{primitive_central_idempotents, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::module::{extract_simple_unverified, hom_space, same_algebra, Module};

#[derive(Debug, Clone)]
pub struct WedderburnBlock {
    idempotent: Vec<u64>,
    simple: Module,
    degree: usize,
}

impl WedderburnBlock {
    /// Primitive central idempotent of the block.
    pub fn idempotent(&self) -> &[u64] {
        &self.idempotent
    }

    /// The absolutely simple module belonging to the block.
    pub fn simple(&self) -> &Module {
        &self.simple
    }

    /// `d`, so the block is `d x d` matrices.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn block_dim(&self) -> usize {
        self.degree * self.degree
    }
}

#[derive(Debug, Clone)]
pub struct WedderburnCertificate {
    algebra: Arc<Algebra>,
    blocks: Vec<WedderburnBlock>,
}

impl WedderburnCertificate {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn blocks(&self) -> &[WedderburnBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.degree).collect()
    }

    pub fn simples(&self) -> Vec<&Module> {
        self.blocks.iter().map(|b| &b.simple).collect()
    }

    pub fn idempotents(&self) -> Vec<Vec<u64>> {
        self.blocks.iter().map(|b| b.idempotent.clone()).collect()
    }

    /// Whether this certificate was issued for `algebra`.
    pub fn covers(&self, algebra: &Arc<Algebra>) -> bool {
        same_algebra(&self.algebra, algebra)
    }

    /// Block whose idempotent acts as the identity on a nonzero module, if
    /// the module lies in a single block.
    pub fn block_of(&self, module: &Module) -> Option<usize> {
        if module.dim() == 0 {
            return None;
        }
        let id = Matrix::identity(module.field(), module.dim());
        self.blocks.iter().position(|b| module.act(&b.idempotent) == id)
    }
}

fn not_certified(stage: impl Into<String>) -> Error {
    Error::NotCertified(stage.into())
}

/// Splits the algebra into blocks and certifies each as a full matrix
/// algebra acting on an explicit simple module.
///
/// Every stage is checked exactly; any failure means the algebra is not
/// certified split semisimple over its prime field.
pub fn wedderburn(algebra: &Arc<Algebra>, seed: u64) -> Result<WedderburnCertificate> {
    let ids = primitive_central_idempotents(algebra, seed)
        .map_err(|e| not_certified(format!("central idempotents: {e}")))?;
    let regular = Module::regular(algebra);
    let field = algebra.field();
    let mut blocks = Vec::with_capacity(ids.len());
    let mut total = 0;
    for (i, e) in ids.idempotents().iter().enumerate() {
        let block_space = regular.act(e).column_space();
        let (component, _) = regular.submodule(&block_space)?;
        let block_seed = seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(i as u64 + 1));
        let (simple, _) = extract_simple_unverified(&component, block_seed)
            .map_err(|err| not_certified(format!("block {i}: simple extraction: {err}")))?;
        let d = simple.dim();
        let end = hom_space(&simple, &simple)?.dim();
        if end != 1 {
            return Err(not_certified(format!(
                "block {i}: field not splitting, End of the simple has dimension {end}"
            )));
        }
        if simple.act(e) != Matrix::identity(field, d) {
            return Err(not_certified(format!("block {i}: idempotent does not act as identity")));
        }
        if block_space.dim() != d * d {
            return Err(not_certified(format!(
                "block {i}: dimension {} is not {d}^2",
                block_space.dim()
            )));
        }
        let images: Vec<Vec<u64>> = block_space
            .vectors()
            .iter()
            .map(|x| simple.act(x).into_data())
            .collect();
        if Subspace::from_vectors(field, d * d, &images).dim() != d * d {
            return Err(not_certified(format!(
                "block {i}: representation is not bijective onto {d}x{d} matrices"
            )));
        }
        total += d * d;
        blocks.push(WedderburnBlock {
            idempotent: e.clone(),
            simple,
            degree: d,
        });
    }
    if total != algebra.dim() {
        return Err(not_certified(format!(
            "block dimensions sum to {total}, algebra has dimension {}",
            algebra.dim()
        )));
    }
    Ok(WedderburnCertificate {
        algebra: Arc::clone(algebra),
        blocks,
    })
}

use std::path::PathBuf;
use std::sync::Arc;

use clap::Args;
use clifford_core::files::{read, ActionFile, AlgebraFile, CocycleFile, GroupFile, ModuleFile, SubalgebraFile};
use clifford_core::{Algebra, Error, Module, PrimeField, Result, Subalgebra};

/// Input files shared by every command.
#[derive(Debug, Clone, Default, Args)]
pub struct Inputs {
    /// Algebra file; with --group and --action, the base of a skew product
    #[arg(long, global = true)]
    pub algebra: Option<PathBuf>,
    /// Subalgebra file, vectors in ambient coordinates
    #[arg(long, global = true)]
    pub subalgebra: Option<PathBuf>,
    /// Module file over the subalgebra (over the algebra for `validate`
    /// without --subalgebra)
    #[arg(long, global = true)]
    pub module: Option<PathBuf>,
    /// Candidate stabilizer, a subalgebra file
    #[arg(long, global = true)]
    pub stabilizer: Option<PathBuf>,
    /// Group file: Cayley table or permutation generators
    #[arg(long, global = true)]
    pub group: Option<PathBuf>,
    /// Cocycle file for a twisted group algebra
    #[arg(long, global = true)]
    pub cocycle: Option<PathBuf>,
    /// Action file for a skew product
    #[arg(long, global = true)]
    pub action: Option<PathBuf>,
    /// Field characteristic for algebras built from --group
    #[arg(long, global = true)]
    pub prime: Option<u64>,
}

fn missing(flag: &str) -> Error {
    Error::InvalidInput(format!("missing --{flag}"))
}

impl Inputs {
    pub fn algebra(&self) -> Result<Arc<Algebra>> {
        let a = match (&self.algebra, &self.group) {
            (Some(path), None) => {
                if self.cocycle.is_some() || self.action.is_some() {
                    return Err(Error::InvalidInput("--cocycle and --action need --group".into()));
                }
                read::<AlgebraFile>(path)?.build()?
            }
            (Some(path), Some(group)) => {
                let base = read::<AlgebraFile>(path)?.build()?;
                let table = read::<GroupFile>(group)?.build()?;
                if self.cocycle.is_some() {
                    return Err(Error::InvalidInput("--cocycle cannot be combined with a skew product".into()));
                }
                let action = read::<ActionFile>(self.action.as_ref().ok_or_else(|| missing("action"))?)?;
                Algebra::skew_group_algebra(&base, &table, &action.build(&base)?)?
            }
            (None, Some(group)) => {
                let field = PrimeField::new(self.prime.ok_or_else(|| missing("prime"))?)?;
                let table = read::<GroupFile>(group)?.build()?;
                match &self.cocycle {
                    Some(c) => Algebra::twisted_group_algebra(&table, &read::<CocycleFile>(c)?.values(field), field)?,
                    None => Algebra::group_algebra(&table, field),
                }
            }
            (None, None) => return Err(missing("algebra")),
        };
        Ok(Arc::new(a))
    }

    pub fn subalgebra(&self, a: &Arc<Algebra>) -> Result<Subalgebra> {
        let path = self.subalgebra.as_ref().ok_or_else(|| missing("subalgebra"))?;
        read::<SubalgebraFile>(path)?.build(a)
    }

    pub fn stabilizer(&self, a: &Arc<Algebra>) -> Result<Option<Subalgebra>> {
        self.stabilizer
            .as_ref()
            .map(|p| read::<SubalgebraFile>(p)?.build(a))
            .transpose()
    }

    pub fn module(&self, over: &Arc<Algebra>) -> Result<Module> {
        let path = self.module.as_ref().ok_or_else(|| missing("module"))?;
        read::<ModuleFile>(path)?.build(over)
    }

    /// `A`, `B` and a `B`-module `V`.
    pub fn triple(&self) -> Result<(Arc<Algebra>, Subalgebra, Module)> {
        let a = self.algebra()?;
        let b = self.subalgebra(&a)?;
        let v = self.module(b.algebra())?;
        Ok((a, b, v))
    }
}

use serde::Serialize;
use serde_json::Value;

use clifford_core::algebra::Subalgebra;
use clifford_core::clifford::{
    annihilator_and_p, build_presentation, check_hypotheses, correspond, endalg_chain_check, f_algebra_check,
    induce, is_invariant, is_normal_subring, is_stabilizer, is_stable, rieffel_stabilizers, to_ambient_subspace,
    v_socle, CorrespondenceReport, FAlgebraReport, Stability, StabilizerReport,
};
use clifford_core::files::{ModuleFile, SubalgebraFile};
use clifford_core::module::multiplicity;
use clifford_core::oracle::oracle_block_check;
use clifford_core::suite::{run_oracle, run_suite, SuiteReport};
use clifford_core::{wedderburn, Result, WedderburnCertificate};

use crate::inputs::Inputs;

pub struct Outcome {
    pub value: Value,
    /// Set when a bundled invariant failed to verify.
    pub defect: bool,
}

fn ok<T: Serialize>(v: T) -> Result<Outcome> {
    Ok(Outcome {
        value: serde_json::to_value(v).expect("report serializes"),
        defect: false,
    })
}

#[derive(Serialize)]
struct ValidateOut {
    valid: bool,
    p: u64,
    algebra_dim: usize,
    commutative: bool,
    center_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    subalgebra_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    module_dim: Option<usize>,
}

pub fn validate(inp: &Inputs) -> Result<Outcome> {
    let a = inp.algebra()?;
    a.validate()?;
    let b = inp.subalgebra.as_ref().map(|_| inp.subalgebra(&a)).transpose()?;
    let module_dim = match (&inp.module, &b) {
        (None, _) => None,
        (Some(_), Some(b)) => Some(inp.module(b.algebra())?),
        (Some(_), None) => Some(inp.module(&a)?),
    }
    .map(|m| m.validate().map(|_| m.dim()))
    .transpose()?;
    ok(ValidateOut {
        valid: true,
        p: a.field().modulus(),
        algebra_dim: a.dim(),
        commutative: a.is_commutative(),
        center_dim: a.center().dim(),
        subalgebra_dim: b.map(|b| b.dim()),
        module_dim,
    })
}

#[derive(Serialize)]
struct BlockOut {
    degree: usize,
    idempotent: Vec<u64>,
    simple: ModuleFile,
}

#[derive(Serialize)]
struct SimplesOut {
    p: u64,
    dim: usize,
    degrees: Vec<usize>,
    sum_of_squares: usize,
    oracle_block_count: bool,
    blocks: Vec<BlockOut>,
}

pub fn simples(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let a = inp.algebra()?;
    let cert = wedderburn(&a, seed)?;
    let degrees = cert.degrees();
    ok(SimplesOut {
        p: a.field().modulus(),
        dim: a.dim(),
        sum_of_squares: degrees.iter().map(|d| d * d).sum(),
        oracle_block_count: oracle_block_check(&a, &degrees),
        degrees,
        blocks: cert
            .blocks()
            .iter()
            .map(|b| BlockOut {
                degree: b.degree(),
                idempotent: b.idempotent().to_vec(),
                simple: ModuleFile::from_module(b.simple()),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct InduceOut {
    dim_a: usize,
    dim_b: usize,
    dim_v: usize,
    dim_m: usize,
    module: ModuleFile,
}

pub fn induce_cmd(inp: &Inputs) -> Result<Outcome> {
    let (a, b, v) = inp.triple()?;
    let ind = induce(&b, &v)?;
    ok(InduceOut {
        dim_a: a.dim(),
        dim_b: b.dim(),
        dim_v: v.dim(),
        dim_m: ind.dim(),
        module: ModuleFile::from_module(ind.module()),
    })
}

#[derive(Serialize)]
struct StableOut {
    #[serde(flatten)]
    stability: Stability,
    dim_m: usize,
    j_dim: usize,
    j_invariant: bool,
    p: Vec<u64>,
    p_primitive: bool,
}

pub fn stable(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let (a, b, v) = inp.triple()?;
    let cert_b = wedderburn(b.algebra(), seed)?;
    let ind = induce(&b, &v)?;
    let stability = is_stable(&ind, &cert_b)?;
    let ann = annihilator_and_p(&cert_b, &v)?;
    let j = to_ambient_subspace(&b, &ann.j);
    ok(StableOut {
        stability,
        dim_m: ind.dim(),
        j_dim: j.dim(),
        j_invariant: is_invariant(&a, &j)?,
        p: b.to_ambient(&ann.p),
        p_primitive: ann.p_primitive,
    })
}

#[derive(Serialize)]
struct EndoOut {
    dim_m: usize,
    dim_e: usize,
    commutative: bool,
    e_blocks: Vec<usize>,
}

pub fn endo(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let (_, b, v) = inp.triple()?;
    let ind = induce(&b, &v)?;
    let e = ind.e();
    let cert_e = wedderburn(e.base(), seed)?;
    ok(EndoOut {
        dim_m: ind.dim(),
        dim_e: e.dim(),
        commutative: e.base().is_commutative(),
        e_blocks: cert_e.degrees(),
    })
}

#[derive(Serialize)]
struct SocleOut {
    dim_m: usize,
    socle_dim: usize,
    multiplicity: usize,
    basis: Vec<Vec<u64>>,
}

pub fn socle(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let (_, b, v) = inp.triple()?;
    let cert_b = wedderburn(b.algebra(), seed)?;
    let ind = induce(&b, &v)?;
    let soc = v_socle(&v, ind.restricted(), &cert_b)?;
    ok(SocleOut {
        dim_m: ind.dim(),
        socle_dim: soc.dim(),
        multiplicity: soc.dim() / v.dim(),
        basis: soc.vectors(),
    })
}

#[derive(Serialize)]
struct NormalOut {
    normal: bool,
    a_blocks: Vec<usize>,
    b_dim: usize,
}

pub fn normal(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let a = inp.algebra()?;
    let b = inp.subalgebra(&a)?;
    let cert_a = wedderburn(&a, seed)?;
    ok(NormalOut {
        normal: is_normal_subring(&cert_a, &b)?,
        a_blocks: cert_a.degrees(),
        b_dim: b.dim(),
    })
}

#[derive(Serialize)]
struct StabilizerOut {
    dim: usize,
    definition: bool,
    criterion: bool,
    is_stabilizer: bool,
    report: StabilizerReport,
    #[serde(flatten)]
    basis: SubalgebraFile,
}

impl StabilizerOut {
    fn new(s: &Subalgebra, report: StabilizerReport) -> Self {
        StabilizerOut {
            dim: s.dim(),
            definition: report.definition(),
            criterion: report.criterion(),
            is_stabilizer: report.is_stabilizer(),
            report,
            basis: SubalgebraFile::from_subalgebra(s),
        }
    }
}

#[derive(Serialize)]
struct StabilizersOut {
    p_primitive: bool,
    s_min: StabilizerOut,
    s_max: StabilizerOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidate: Option<StabilizerOut>,
}

fn certificates(b: &Subalgebra, seed: u64) -> Result<(WedderburnCertificate, WedderburnCertificate)> {
    Ok((wedderburn(b.ambient(), seed)?, wedderburn(b.algebra(), seed)?))
}

pub fn stabilizer(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let (a, b, v) = inp.triple()?;
    let (cert_a, cert_b) = certificates(&b, seed)?;
    let r = rieffel_stabilizers(&b, &v, &cert_a, &cert_b, seed)?;
    let candidate = match inp.stabilizer(&a)? {
        Some(s) => Some(StabilizerOut::new(&s, is_stabilizer(&b, &v, &s, &cert_a, &cert_b, seed)?)),
        None => None,
    };
    ok(StabilizersOut {
        p_primitive: r.p_primitive,
        s_min: StabilizerOut::new(&r.s_min, r.min_report),
        s_max: StabilizerOut::new(&r.s_max, r.max_report),
        candidate,
    })
}

#[derive(Serialize)]
struct ChainOut {
    subalgebra: &'static str,
    dim: usize,
    dims: [usize; 4],
}

#[derive(Serialize)]
struct Checks {
    endalg_chain: Vec<ChainOut>,
    f_algebra: FAlgebraReport,
}

#[derive(Serialize)]
struct CorrespondOut {
    #[serde(flatten)]
    report: CorrespondenceReport,
    checks: Checks,
}

pub fn correspond_cmd(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let (a, b, v) = inp.triple()?;
    let report = correspond(&b, &v, seed)?;
    let (cert_a, cert_b, _) = check_hypotheses(&b, &v, seed)?;
    let r = rieffel_stabilizers(&b, &v, &cert_a, &cert_b, seed)?;
    let mut candidates = vec![("B", b.clone()), ("S_min", r.s_min), ("S_max", r.s_max), ("A", Subalgebra::full(&a))];
    if let Some(s) = inp.stabilizer(&a)? {
        candidates.push(("candidate", s));
    }
    let mut endalg_chain = Vec::new();
    for (name, s) in &candidates {
        if is_stabilizer(&b, &v, s, &cert_a, &cert_b, seed)?.is_stabilizer() {
            endalg_chain.push(ChainOut {
                subalgebra: name,
                dim: s.dim(),
                dims: endalg_chain_check(&b, &v, s, &cert_a, &cert_b, seed)?,
            });
        }
    }
    let induced = report.induced.as_ref().expect("correspond keeps the induced module");
    let f_algebra = f_algebra_check(induced, &cert_b, seed)?;
    ok(CorrespondOut {
        report,
        checks: Checks { endalg_chain, f_algebra },
    })
}

#[derive(Serialize)]
struct PresentationOut {
    block: usize,
    a_simple_dim: usize,
    v_multiplicity: usize,
    pi_rank: usize,
    kernel_dim: usize,
    summands: usize,
    exact: bool,
}

#[derive(Serialize)]
struct PresentationsOut {
    dim_m: usize,
    presentations: Vec<PresentationOut>,
}

/// Presentations `(+) M -> M -> N -> 0` for every simple `N` containing `V`.
pub fn presentation(inp: &Inputs, seed: u64) -> Result<Outcome> {
    let (_, b, v) = inp.triple()?;
    let (cert_a, cert_b) = certificates(&b, seed)?;
    let ind = induce(&b, &v)?;
    let mut presentations = Vec::new();
    for (block, n) in cert_a.simples().into_iter().enumerate() {
        let mult = multiplicity(&v, &n.restrict(&b)?, &cert_b)?;
        if mult == 0 {
            continue;
        }
        let pres = build_presentation(&ind, n, &cert_a, &cert_b)?;
        let kernel = pres.pi.nullspace();
        presentations.push(PresentationOut {
            block,
            a_simple_dim: n.dim(),
            v_multiplicity: mult,
            pi_rank: pres.pi.rank(),
            kernel_dim: kernel.dim(),
            summands: pres.summands,
            exact: pres.map1.column_space() == kernel,
        });
    }
    ok(PresentationsOut {
        dim_m: ind.dim(),
        presentations,
    })
}

#[derive(Serialize)]
struct SuiteOut {
    passed: bool,
    total: usize,
    failed: usize,
    #[serde(flatten)]
    report: SuiteReport,
}

fn suite_outcome(report: SuiteReport) -> Result<Outcome> {
    let failed = report.failures().len();
    let out = ok(SuiteOut {
        passed: failed == 0,
        total: report.checks.len(),
        failed,
        report,
    })?;
    Ok(Outcome {
        defect: failed > 0,
        ..out
    })
}

pub fn verify(seed: u64) -> Result<Outcome> {
    suite_outcome(run_suite(seed))
}

pub fn oracle(seed: u64) -> Result<Outcome> {
    suite_outcome(run_oracle(seed))
}

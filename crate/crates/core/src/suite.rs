//! The invariant suite run over the bundled corpus.

use serde::Serialize;

use crate::algebra::{wedderburn, Subalgebra, WedderburnCertificate};
use crate::clifford::{
    annihilator_and_p, correspond, endalg_chain_check, f_algebra_check, hom_as_e_module, induce,
    induce_through_stabilizer, is_invariant, is_normal_subring, is_stabilizer, is_stable, rieffel_stabilizers,
    static_check_a, static_check_e, tensor_over_e, to_ambient_subspace, v_socle,
};
use crate::error::{Error, Result};
use crate::module::{is_abs_simple, iso_test, Module};
use crate::oracle::{example_library, oracle_block_check, oracle_is_simple, ExampleInstance, ORACLE_VECTOR_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub example: String,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn record(&mut self, example: &str, name: impl Into<String>, outcome: Result<bool>) {
        let (passed, detail) = match outcome {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "condition is false".to_string()),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check {
            example: example.to_string(),
            name: name.into(),
            passed,
            detail,
        });
    }
}

fn oracle_fits(m: &Module) -> bool {
    let p = m.field().modulus() as f64;
    p.powi(m.dim() as i32) <= ORACLE_VECTOR_LIMIT as f64
}

/// `oracle_is_simple` agrees with `is_abs_simple`, or the module is too big
/// for the oracle.
pub fn oracle_agrees(m: &Module, cert: &WedderburnCertificate) -> Result<bool> {
    if !oracle_fits(m) {
        return Ok(true);
    }
    Ok(oracle_is_simple(m)? == is_abs_simple(m, cert)?)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn check_algebra(ex: &ExampleInstance, seed: u64, out: &mut SuiteReport) -> Option<WedderburnCertificate> {
    let name = ex.name;
    out.record(name, "algebra validates", ex.algebra.validate().map(|_| true));
    let cert = wedderburn(&ex.algebra, seed);
    match (&ex.expected.block_degrees, cert) {
        (None, Err(Error::NotCertified(_))) => {
            out.record(name, "certification fails", Ok(true));
            None
        }
        (None, other) => {
            out.record(name, "certification fails", other.map(|_| false));
            None
        }
        (Some(_), Err(e)) => {
            out.record(name, "certified", Err(e));
            None
        }
        (Some(expected), Ok(cert)) => {
            out.record(name, "block degrees", Ok(sorted(cert.degrees()) == *expected));
            out.record(name, "oracle block count", Ok(oracle_block_check(&ex.algebra, &cert.degrees())));
            out.record(name, "blocks = dim center", Ok(cert.len() == ex.algebra.center().dim()));
            let op = std::sync::Arc::new(ex.algebra.opposite());
            out.record(
                name,
                "opposite keeps block degrees",
                wedderburn(&op, seed).map(|c| sorted(c.degrees()) == *expected),
            );
            for (i, s) in cert.simples().iter().enumerate() {
                out.record(name, format!("oracle agrees on A-simple {i}"), oracle_agrees(s, &cert));
            }
            Some(cert)
        }
    }
}

fn check_stable_instance(
    ex: &ExampleInstance,
    v_name: &str,
    v: &Module,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
    seed: u64,
    out: &mut SuiteReport,
) -> Result<()> {
    let name = ex.name;
    let ind = induce(&ex.sub, v)?;
    let cert_e = wedderburn(ind.e().base(), seed)?;
    out.record(name, format!("{v_name}: dim M = dim V dim E"), Ok(ind.dim() == v.dim() * ind.e().dim()));
    if let Some(g) = &ex.group {
        out.record(
            name,
            format!("{v_name}: dim E = [G : H]"),
            Ok(ind.e().dim() * ex.sub.dim() == g.order()),
        );
    }
    for (i, w) in cert_a.simples().iter().enumerate() {
        let isotypic = v_socle(v, &w.restrict(&ex.sub)?, cert_b)?.is_full();
        out.record(
            name,
            format!("{v_name}: static in A matches isotypic restriction (simple {i})"),
            static_check_a(&ind, w).map(|s| s == isotypic),
        );
        if isotypic {
            let h = hom_as_e_module(&ind, w)?;
            let back = tensor_over_e(&ind, &h)?;
            out.record(
                name,
                format!("{v_name}: M (x)_E Hom(M, N) = N (simple {i})"),
                iso_test(&back, w, cert_a, seed).map(|r| r.isomorphic),
            );
        }
    }
    let mut us: Vec<Module> = cert_e.simples().into_iter().cloned().collect();
    us.push(Module::regular(ind.e().base()));
    for (i, u) in us.iter().enumerate() {
        out.record(name, format!("{v_name}: static in E (module {i})"), static_check_e(&ind, u));
        let t = tensor_over_e(&ind, u)?;
        out.record(name, format!("{v_name}: dim M (x)_E U = dim V dim U (module {i})"), Ok(t.dim() == v.dim() * u.dim()));
        let back = hom_as_e_module(&ind, &t)?;
        out.record(
            name,
            format!("{v_name}: Hom(M, M (x)_E U) = U (module {i})"),
            iso_test(&back, u, &cert_e, seed).map(|r| r.isomorphic),
        );
    }
    Ok(())
}

fn check_simple(
    ex: &ExampleInstance,
    idx: usize,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
    seed: u64,
    out: &mut SuiteReport,
) -> Result<()> {
    let name = ex.name;
    let (v_name, v) = &ex.simples_of_sub[idx];
    out.record(name, format!("{v_name}: oracle agrees on V"), oracle_agrees(v, cert_b));
    let ind = induce(&ex.sub, v)?;
    let stability = is_stable(&ind, cert_b)?;
    if let Some(expected) = ex.expected.stable[idx] {
        out.record(name, format!("{v_name}: stability"), Ok(stability.stable == expected));
    }
    let ann = annihilator_and_p(cert_b, v)?;
    let j = to_ambient_subspace(&ex.sub, &ann.j);
    out.record(
        name,
        format!("{v_name}: stable iff J invariant"),
        is_invariant(&ex.algebra, &j).map(|inv| inv == stability.stable),
    );
    let report = correspond(&ex.sub, v, seed)?;
    out.record(name, format!("{v_name}: correspondence complete"), Ok(report.oracle_complete));
    for (i, n) in report.a_simples.iter().enumerate() {
        out.record(name, format!("{v_name}: oracle agrees on corresponding simple {i}"), oracle_agrees(n, cert_a));
        if stability.stable {
            out.record(
                name,
                format!("{v_name}: restriction of corresponding simple {i} is V-isotypic"),
                v_socle(v, &n.restrict(&ex.sub)?, cert_b).map(|s| s.is_full()),
            );
        }
    }
    if stability.stable {
        check_stable_instance(ex, v_name, v, cert_a, cert_b, seed, out)?;
    }

    let rieffel = rieffel_stabilizers(&ex.sub, v, cert_a, cert_b, seed)?;
    let full = Subalgebra::full(&ex.algebra);
    let mut candidates = vec![
        ("B", ex.sub.clone()),
        ("S_min", rieffel.s_min.clone()),
        ("S_max", rieffel.s_max.clone()),
        ("A", full),
    ];
    candidates.dedup_by(|a, b| a.1.basis() == b.1.basis());
    for (s_name, s) in &candidates {
        let rep = is_stabilizer(&ex.sub, v, s, cert_a, cert_b, seed)?;
        out.record(
            name,
            format!("{v_name}: definition iff criterion for {s_name}"),
            Ok(!rep.equivalence_applies || rep.definition() == rep.criterion()),
        );
        if rep.is_stabilizer() {
            out.record(
                name,
                format!("{v_name}: endomorphism chain through {s_name}"),
                endalg_chain_check(&ex.sub, v, s, cert_a, cert_b, seed).map(|_| true),
            );
            let through = induce_through_stabilizer(&ex.sub, v, s, cert_a, cert_b, seed)?;
            let mut matched = through.len() == report.a_simples.len();
            for pair in &through {
                let mut hit = false;
                for n in &report.a_simples {
                    if iso_test(&pair.a_module, n, cert_a, seed)?.isomorphic {
                        hit = true;
                    }
                }
                matched &= hit;
            }
            out.record(name, format!("{v_name}: induction through {s_name} matches E-simples"), Ok(matched));
        }
    }
    out.record(
        name,
        format!("{v_name}: F semisimple with blocks = multiplicities"),
        f_algebra_check(&ind, cert_b, seed).map(|r| r.e_in_f),
    );
    Ok(())
}

fn check_example(ex: &ExampleInstance, seed: u64, out: &mut SuiteReport) {
    let Some(cert_a) = check_algebra(ex, seed, out) else {
        return;
    };
    let cert_b = match wedderburn(ex.sub.algebra(), seed) {
        Ok(c) => c,
        Err(e) => {
            out.record(ex.name, "subalgebra certified", Err(e));
            return;
        }
    };
    let normal = is_normal_subring(&cert_a, &ex.sub);
    if let Some(expected) = ex.expected.normal {
        out.record(ex.name, "normality", normal.clone().map(|n| n == expected));
    }
    if normal != Ok(true) {
        return;
    }
    for idx in 0..ex.simples_of_sub.len() {
        if let Err(e) = check_simple(ex, idx, &cert_a, &cert_b, seed, out) {
            out.record(ex.name, format!("{}: checks ran", ex.simples_of_sub[idx].0), Err(e));
        }
    }
}

/// Runs every invariant over the bundled corpus.
pub fn run_suite(seed: u64) -> SuiteReport {
    let mut out = SuiteReport::default();
    for ex in example_library() {
        check_example(&ex, seed, &mut out);
    }
    out
}

/// Oracle cross-checks only: simplicity of every certified simple and block
/// counts for every certified algebra in the corpus.
pub fn run_oracle(seed: u64) -> SuiteReport {
    let mut out = SuiteReport::default();
    for ex in example_library() {
        let Ok(cert) = wedderburn(&ex.algebra, seed) else {
            continue;
        };
        out.record(ex.name, "oracle block count", Ok(oracle_block_check(&ex.algebra, &cert.degrees())));
        for (i, s) in cert.simples().iter().enumerate() {
            out.record(ex.name, format!("oracle agrees on A-simple {i}"), oracle_agrees(s, &cert));
        }
        if let Ok(cb) = wedderburn(ex.sub.algebra(), seed) {
            out.record(ex.name, "oracle block count for B", Ok(oracle_block_check(ex.sub.algebra(), &cb.degrees())));
            for (n, v) in &ex.simples_of_sub {
                out.record(ex.name, format!("oracle agrees on {n}"), oracle_agrees(v, &cb));
            }
        }
    }
    out
}

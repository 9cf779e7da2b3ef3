//! Acceptance criteria 1-8, one PASS/FAIL line each.
//!
//! All arithmetic is exact over GF(p): every comparison below is pinned to
//! exact equality (tolerance 0). Expected values not read off the fixtures
//! are recomputed here by independent means: brute-force simplicity and
//! centre dimensions from the oracle, and raw Hom dimensions.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use clifford_core::clifford::{
    annihilator_and_p, correspond, endalg_chain_check, f_algebra_check, hom_as_e_module, induce,
    induce_through_stabilizer, is_invariant, is_normal_subring, is_stabilizer, is_stable, rieffel_stabilizers,
    static_check_a, static_check_e, tensor_over_e, to_ambient_subspace, v_socle,
};
use clifford_core::module::{hom_space, is_abs_simple, iso_test};
use clifford_core::oracle::{example, example_library, oracle_is_simple, oracle_simple_count, ExampleInstance};
use clifford_core::{wedderburn, Algebra, Module, Subalgebra, WedderburnCertificate};

const TOLERANCE: &str = "exact equality";
const ORACLE_LIMIT: f64 = 1e6;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn ex(name: &str) -> ExampleInstance {
    example(name).unwrap_or_else(|| panic!("missing example {name}"))
}

fn certs(e: &ExampleInstance) -> Result<(WedderburnCertificate, WedderburnCertificate), String> {
    Ok((wedderburn(&e.algebra, 0).map_err(err)?, wedderburn(e.sub.algebra(), 0).map_err(err)?))
}

/// Value of a one-dimensional module on a group basis element.
fn scalar_on(n: &Module, g: usize) -> u64 {
    let mut x = vec![0; n.algebra().dim()];
    x[g] = 1;
    n.act(&x).get(0, 0)
}

fn criterion_1() -> Outcome {
    let e = ex("s3_a3");
    let (cert_a, cert_b) = certs(&e)?;
    ensure!(sorted(cert_a.degrees()) == vec![1, 1, 2], "blocks {:?}", cert_a.degrees());
    ensure!(cert_a.degrees().iter().map(|d| d * d).sum::<usize>() == 6, "sum of squares");
    ensure!(oracle_simple_count(&e.algebra) == 3, "oracle count");

    let omega = e.simple("omega");
    let ind = induce(&e.sub, omega).map_err(err)?;
    let st = is_stable(&ind, &cert_b).map_err(err)?;
    ensure!(!st.stable, "omega reported stable");
    let j = to_ambient_subspace(&e.sub, &annihilator_and_p(&cert_b, omega).map_err(err)?.j);
    ensure!(!is_invariant(&e.algebra, &j).map_err(err)?, "J invariant for omega");
    ensure!(ind.e().dim() == 1, "dim E = {}", ind.e().dim());
    let rep = correspond(&e.sub, omega, 0).map_err(err)?;
    ensure!(rep.pairs.len() == 1, "{} pairs for omega", rep.pairs.len());
    ensure!(rep.a_simples[0].dim() == 2, "omega partner has dim {}", rep.a_simples[0].dim());
    ensure!(oracle_is_simple(&rep.a_simples[0]).map_err(err)?, "omega partner not simple by oracle");
    ensure!(rep.oracle_complete, "omega completeness");

    let triv = e.simple("trivial");
    let ind = induce(&e.sub, triv).map_err(err)?;
    let st = is_stable(&ind, &cert_b).map_err(err)?;
    ensure!(st.stable && st.multiplicity == Some(2), "trivial stability {st:?}");
    ensure!(ind.e().dim() == 2, "dim E = {}", ind.e().dim());
    ensure!(wedderburn(ind.e().base(), 0).map_err(err)?.len() == 2, "E blocks");
    let rep = correspond(&e.sub, triv, 0).map_err(err)?;
    ensure!(rep.pairs.len() == 2, "{} pairs for trivial", rep.pairs.len());
    ensure!(rep.pairs.iter().all(|p| p.round_trip), "round trips");
    ensure!(rep.oracle_complete, "trivial completeness");
    let t = e.group.as_ref().expect("S3 table");
    let mut kinds: Vec<&str> = rep
        .a_simples
        .iter()
        .map(|n| {
            if n.dim() != 1 {
                "other"
            } else if (0..6).all(|g| scalar_on(n, g) == 1) {
                "trivial"
            } else if (0..6).all(|g| scalar_on(n, g) == if t.element_order(g) == 2 { 6 } else { 1 }) {
                "sign"
            } else {
                "other"
            }
        })
        .collect();
    kinds.sort_unstable();
    ensure!(kinds == ["sign", "trivial"], "partners {kinds:?}");
    Ok(())
}

fn criterion_2() -> Outcome {
    let e = ex("d4_center");
    let (_, cert_b) = certs(&e)?;
    let v = e.simple("sign");
    let ind = induce(&e.sub, v).map_err(err)?;
    let st = is_stable(&ind, &cert_b).map_err(err)?;
    ensure!(st.stable && st.multiplicity == Some(4), "stability {st:?}");
    let cert_e = wedderburn(ind.e().base(), 0).map_err(err)?;
    ensure!(cert_e.degrees() == vec![2], "E blocks {:?}", cert_e.degrees());
    ensure!(ind.e().dim() == 4 && !ind.e().base().is_commutative(), "E shape");
    let rep = correspond(&e.sub, v, 0).map_err(err)?;
    ensure!(rep.pairs.len() == 1, "{} pairs", rep.pairs.len());
    let p = &rep.pairs[0];
    ensure!(p.a_simple_dim == 2 && p.a_simple_dim == v.dim() * p.e_simple_dim, "dimension law {p:?}");
    ensure!(oracle_is_simple(&rep.a_simples[0]).map_err(err)?, "partner not simple by oracle");
    Ok(())
}

fn criterion_3() -> Outcome {
    let e = ex("q8_i");
    let (cert_a, cert_b) = certs(&e)?;
    let v = e.simple("chi2");
    let ind = induce(&e.sub, v).map_err(err)?;
    ensure!(!is_stable(&ind, &cert_b).map_err(err)?.stable, "chi2 reported stable");
    let rep = correspond(&e.sub, v, 0).map_err(err)?;
    ensure!(rep.a_simples.len() == 1 && rep.a_simples[0].dim() == 2, "chi2 partners");
    let r = rieffel_stabilizers(&e.sub, v, &cert_a, &cert_b, 0).map_err(err)?;
    for (name, s, report) in [("S_min", &r.s_min, &r.min_report), ("S_max", &r.s_max, &r.max_report)] {
        ensure!(report.is_stabilizer(), "{name} is not a stabilizer");
        ensure!(report.equivalence_applies, "{name}: hypotheses for the equivalence");
        ensure!(report.definition() == report.criterion(), "{name}: definition and criterion differ");
        let through = induce_through_stabilizer(&e.sub, v, s, &cert_a, &cert_b, 0).map_err(err)?;
        ensure!(through.len() == 1, "{name}: {} modules", through.len());
        let iso = iso_test(&through[0].a_module, &rep.a_simples[0], &cert_a, 0).map_err(err)?;
        ensure!(iso.isomorphic, "{name}: answers differ");
    }
    ensure!(oracle_is_simple(&rep.a_simples[0]).map_err(err)?, "2-dim partner not simple by oracle");

    let v = e.simple("chi4");
    let ind = induce(&e.sub, v).map_err(err)?;
    ensure!(is_stable(&ind, &cert_b).map_err(err)?.stable, "chi4 not stable");
    ensure!(ind.e().dim() == 2, "dim E = {}", ind.e().dim());
    let rep = correspond(&e.sub, v, 0).map_err(err)?;
    ensure!(rep.pairs.len() == 2 && rep.pairs.iter().all(|p| p.a_simple_dim == 1), "chi4 pairs {:?}", rep.pairs);
    Ok(())
}

fn criterion_4() -> Outcome {
    for (name, expected) in [
        ("s3_a3", true),
        ("d4_center", true),
        ("q8_i", true),
        ("klein_twisted", true),
        ("skew_c3_c2", true),
        ("skew_c3_c2_trivial", true),
        ("s3_transposition", false),
    ] {
        let e = ex(name);
        let cert_a = wedderburn(&e.algebra, 0).map_err(err)?;
        let normal = is_normal_subring(&cert_a, &e.sub).map_err(err)?;
        ensure!(normal == expected, "{name}: normal = {normal}");
    }
    Ok(())
}

/// Every (instance, V) in the corpus with B normal and V stable.
fn stable_instances() -> Result<Vec<(ExampleInstance, usize)>, String> {
    let mut out = Vec::new();
    for e in example_library() {
        let Ok((cert_a, cert_b)) = certs(&e) else { continue };
        if !is_normal_subring(&cert_a, &e.sub).map_err(err)? {
            continue;
        }
        for i in 0..e.simples_of_sub.len() {
            let ind = induce(&e.sub, &e.simples_of_sub[i].1).map_err(err)?;
            if is_stable(&ind, &cert_b).map_err(err)?.stable {
                out.push((e.clone(), i));
            }
        }
    }
    Ok(out)
}

fn criterion_5() -> Outcome {
    let instances = stable_instances()?;
    ensure!(instances.len() >= 8, "only {} stable instances", instances.len());
    for (e, i) in &instances {
        let (cert_a, cert_b) = certs(e)?;
        let (vn, v) = &e.simples_of_sub[*i];
        let tag = format!("{}/{vn}", e.name);
        let ind = induce(&e.sub, v).map_err(err)?;
        for (k, n) in cert_a.simples().iter().enumerate() {
            let isotypic = v_socle(v, &n.restrict(&e.sub).map_err(err)?, &cert_b).map_err(err)?.is_full();
            ensure!(static_check_a(&ind, n).map_err(err)? == isotypic, "{tag}: static A, simple {k}");
            if isotypic {
                let back = tensor_over_e(&ind, &hom_as_e_module(&ind, n).map_err(err)?).map_err(err)?;
                ensure!(iso_test(&back, n, &cert_a, 0).map_err(err)?.isomorphic, "{tag}: A round trip {k}");
            }
        }
        let cert_e = wedderburn(ind.e().base(), 0).map_err(err)?;
        let mut us: Vec<Module> = cert_e.simples().into_iter().cloned().collect();
        us.push(Module::regular(ind.e().base()));
        for (k, u) in us.iter().enumerate() {
            ensure!(static_check_e(&ind, u).map_err(err)?, "{tag}: static E, module {k}");
            let back = hom_as_e_module(&ind, &tensor_over_e(&ind, u).map_err(err)?).map_err(err)?;
            ensure!(iso_test(&back, u, &cert_e, 0).map_err(err)?.isomorphic, "{tag}: E round trip {k}");
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (e, i) in stable_instances()? {
        let v = &e.simples_of_sub[i].1;
        let ind = induce(&e.sub, v).map_err(err)?;
        ensure!(ind.dim() == v.dim() * ind.e().dim(), "{}: dim M", e.name);
    }
    for e in example_library() {
        let Ok((cert_a, cert_b)) = certs(&e) else { continue };
        if !is_normal_subring(&cert_a, &e.sub).map_err(err)? {
            continue;
        }
        for (vn, v) in &e.simples_of_sub {
            let tag = format!("{}/{vn}", e.name);
            let r = rieffel_stabilizers(&e.sub, v, &cert_a, &cert_b, 0).map_err(err)?;
            for s in [e.sub.clone(), r.s_min, r.s_max, Subalgebra::full(&e.algebra)] {
                if is_stabilizer(&e.sub, v, &s, &cert_a, &cert_b, 0).map_err(err)?.is_stabilizer() {
                    let dims = endalg_chain_check(&e.sub, v, &s, &cert_a, &cert_b, 0).map_err(err)?;
                    ensure!(dims.iter().all(|&d| d == dims[0]), "{tag}: chain {dims:?}");
                }
            }
            let ind = induce(&e.sub, v).map_err(err)?;
            let f = f_algebra_check(&ind, &cert_b, 0).map_err(err)?;
            let mut direct: Vec<usize> = Vec::new();
            for w in cert_b.simples() {
                let m = hom_space(w, ind.restricted()).map_err(err)?.dim();
                if m > 0 {
                    direct.push(m);
                }
            }
            ensure!(f.degrees == sorted(direct), "{tag}: F blocks {:?}", f.degrees);
            ensure!(f.e_in_f, "{tag}: E not inside F");
        }
    }
    Ok(())
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_clifford")
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run(args: &[&str]) -> std::process::Output {
    Command::new(bin()).args(args).output().expect("clifford runs")
}

fn fixture(rel: &str) -> String {
    fixtures().join(rel).to_string_lossy().into_owned()
}

fn criterion_7() -> Outcome {
    let out = run(&["simples", "--algebra", &fixture("gf3_c3/algebra.json")]);
    ensure!(out.status.code() == Some(3), "GF(3)[C3] exit {:?}", out.status.code());
    ensure!(
        String::from_utf8_lossy(&out.stderr).contains("not certified semisimple"),
        "GF(3)[C3] message"
    );

    let dir = tempfile::tempdir().map_err(err)?;
    let text = std::fs::read_to_string(fixtures().join("s3_a3/algebra.json")).map_err(err)?;
    let mut json: serde_json::Value = serde_json::from_str(&text).map_err(err)?;
    json["mul"][7][3] = serde_json::json!(2);
    let bad = dir.path().join("corrupted.json");
    std::fs::write(&bad, json.to_string()).map_err(err)?;
    let out = run(&["validate", "--algebra", bad.to_str().unwrap()]);
    ensure!(out.status.code() == Some(2), "corrupted exit {:?}", out.status.code());

    let (a, b) = (fixture("q8_i/algebra.json"), fixture("q8_i/subalgebra.json"));
    let m = fixture("q8_i/chi2.json");
    for cmd in ["simples", "endo", "stabilizer", "correspond", "presentation", "verify", "oracle"] {
        let args = ["--algebra", &a, "--subalgebra", &b, "--module", &m, "--seed", "11", "--format", "json"];
        let mut full = vec![cmd];
        full.extend_from_slice(&args);
        let runs: Vec<_> = (0..3).map(|_| run(&full)).collect();
        ensure!(runs[0].status.code() == Some(0), "{cmd} exit {:?}", runs[0].status.code());
        ensure!(runs.iter().all(|r| r.stdout == runs[0].stdout), "{cmd} output differs between runs");
    }
    let lib: Vec<Vec<Vec<u64>>> = (0..3)
        .map(|_| wedderburn(&ex("q8_i").algebra, 11).map(|c| c.idempotents()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure!(lib.iter().all(|x| *x == lib[0]), "library idempotents differ between runs");
    Ok(())
}

fn oracle_fits(m: &Module) -> bool {
    (m.field().modulus() as f64).powi(m.dim() as i32) <= ORACLE_LIMIT
}

fn agree(m: &Module, cert: &WedderburnCertificate, tag: &str, checked: &mut usize) -> Outcome {
    if !oracle_fits(m) {
        return Ok(());
    }
    let o = oracle_is_simple(m).map_err(err)?;
    let c = is_abs_simple(m, cert).map_err(err)?;
    ensure!(o == c, "{tag}: oracle {o}, certificate {c}");
    *checked += 1;
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for (name, vs) in [
        ("s3_a3", &["trivial", "omega", "omega2"][..]),
        ("d4_center", &["trivial", "sign"][..]),
        ("q8_i", &["trivial", "chi2", "chi4", "chi3"][..]),
    ] {
        let e = ex(name);
        let (cert_a, cert_b) = certs(&e)?;
        for s in cert_a.simples() {
            agree(s, &cert_a, name, &mut checked)?;
        }
        for vn in vs {
            let v = e.simple(vn);
            agree(v, &cert_b, vn, &mut checked)?;
            let ind = induce(&e.sub, v).map_err(err)?;
            agree(ind.module(), &cert_a, &format!("{name}/{vn} induced"), &mut checked)?;
            let rep = correspond(&e.sub, v, 0).map_err(err)?;
            for n in &rep.a_simples {
                agree(n, &cert_a, &format!("{name}/{vn} partner"), &mut checked)?;
            }
            let cert_e = wedderburn(ind.e().base(), 0).map_err(err)?;
            for u in &rep.e_simples {
                agree(u, &cert_e, &format!("{name}/{vn} E-simple"), &mut checked)?;
            }
        }
    }
    ensure!(checked >= 30, "only {checked} modules checked");
    let mut certified = 0;
    for e in example_library() {
        let algebras: Vec<Arc<Algebra>> = vec![Arc::clone(&e.algebra), Arc::clone(e.sub.algebra())];
        for a in algebras {
            if let Ok(cert) = wedderburn(&a, 0) {
                ensure!(oracle_simple_count(&a) == cert.len(), "{}: block count", e.name);
                certified += 1;
            }
        }
    }
    ensure!(certified >= 16, "only {certified} certified algebras");
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("S3 > A3 over GF(7): blocks, stability, correspondence", criterion_1),
        ("D4 > Z(D4) over GF(7), sign of the centre", criterion_2),
        ("Q8 > <i> over GF(5): stabilizers and the stable case", criterion_3),
        ("normality contract", criterion_4),
        ("static modules and round trips", criterion_5),
        ("dimension laws, endomorphism chains, F", criterion_6),
        ("negative fixtures, exit codes, determinism", criterion_7),
        ("oracle agreement", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("criterion {}: PASS  {name}  [tolerance: {TOLERANCE}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}  [tolerance: {TOLERANCE}]  {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

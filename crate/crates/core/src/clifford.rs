//! Induction, stability, stabilizers and the Clifford correspondence.
//!
//! Throughout, `A` is an algebra, `B` a subalgebra and `V` a module over the
//! induced algebra of `B`. Subspaces of `A` are kept in ambient coordinates;
//! modules over subalgebras use the subalgebra's own basis.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{wedderburn, Algebra, Subalgebra, WedderburnCertificate};
use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::linalg::{unit_vector, vec_sub, Matrix, Subspace, MAX_AMBIENT_DIM};
use crate::module::{
    endo_algebra_op, hom_space, is_abs_simple, iso_test, multiplicity, same_algebra, EndoAlgebraOp, Module,
};

/// Largest block count for which the ideal lattice is enumerated.
pub const MAX_NORMALITY_BLOCKS: usize = 12;

fn check_failed(msg: impl Into<String>) -> Error {
    Error::TheoremCheckFailed(msg.into())
}

/// `X (x) Y` modulo `xk (x) y - x (x) yk` for paired matrices acting on each
/// factor. Index of `e_x (x) e_y` is `x * dim Y + y`.
#[derive(Debug, Clone)]
struct BalancedTensor {
    dx: usize,
    dy: usize,
    relations: Subspace,
}

impl BalancedTensor {
    fn new(field: PrimeField, dx: usize, dy: usize, first: &[Matrix], second: &[Matrix]) -> Result<Self> {
        let n = dx * dy;
        if n > MAX_AMBIENT_DIM {
            return Err(Error::TooLarge {
                dim: n,
                limit: MAX_AMBIENT_DIM,
            });
        }
        let mut relations = Subspace::zero(field, n);
        for (p, q) in first.iter().zip(second) {
            if relations.is_full() {
                break;
            }
            let mut rows = Vec::with_capacity(n);
            for x in 0..dx {
                for y in 0..dy {
                    let mut row = vec![0u64; n];
                    for r in 0..dx {
                        let c = p.get(r, x);
                        if c != 0 {
                            row[r * dy + y] = field.add(row[r * dy + y], c);
                        }
                    }
                    for r in 0..dy {
                        let c = q.get(r, y);
                        if c != 0 {
                            row[x * dy + r] = field.sub(row[x * dy + r], c);
                        }
                    }
                    if row.iter().any(|&v| v != 0) {
                        rows.push(row);
                    }
                }
            }
            if !rows.is_empty() {
                let batch = Matrix::from_rows(field, n, &rows);
                relations = Subspace::from_matrix_rows(&relations.basis().vstack(&batch));
            }
        }
        Ok(BalancedTensor { dx, dy, relations })
    }

    fn dim(&self) -> usize {
        self.dx * self.dy - self.relations.dim()
    }

    fn class(&self, v: &[u64]) -> Vec<u64> {
        self.relations.quotient_coordinates(v)
    }

    fn class_of(&self, x: &[u64], y: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dx * self.dy];
        for (i, &c) in x.iter().enumerate() {
            v[i * self.dy + y] = c;
        }
        self.class(&v)
    }

    /// Module structure from matrices acting on the first factor.
    fn module(&self, algebra: &Arc<Algebra>, acting: &[Matrix]) -> Module {
        let field = algebra.field();
        let reps = self.relations.complement_indices();
        let q = reps.len();
        let action = acting
            .iter()
            .map(|p| {
                let cols: Vec<Vec<u64>> = reps
                    .iter()
                    .map(|&idx| {
                        let (x, y) = (idx / self.dy, idx % self.dy);
                        let mut v = vec![0u64; self.dx * self.dy];
                        for r in 0..self.dx {
                            v[r * self.dy + y] = p.get(r, x);
                        }
                        self.class(&v)
                    })
                    .collect();
                Matrix::from_columns(field, q, &cols)
            })
            .collect();
        Module::new_unchecked(Arc::clone(algebra), q, action)
    }

    /// Pairs `(x, y)` whose classes `e_x (x) e_y` form the quotient basis.
    fn reps(&self) -> Vec<(usize, usize)> {
        self.relations
            .complement_indices()
            .into_iter()
            .map(|idx| (idx / self.dy, idx % self.dy))
            .collect()
    }
}

/// `M = R (x)_T V` for subalgebras `T` of `R`, with `v -> 1 (x) v`, the
/// opposite endomorphism algebras `E` of `M` and `F` of `M` restricted to `T`.
#[derive(Debug, Clone)]
pub struct InducedModule {
    outer: Subalgebra,
    inner: Subalgebra,
    v: Module,
    tensor: BalancedTensor,
    module: Module,
    restricted: Module,
    iota: Matrix,
    e: EndoAlgebraOp,
    f: EndoAlgebraOp,
}

impl InducedModule {
    /// The induced module over the outer algebra.
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Restriction of the induced module to the inner subalgebra.
    pub fn restricted(&self) -> &Module {
        &self.restricted
    }

    pub fn v(&self) -> &Module {
        &self.v
    }

    pub fn outer(&self) -> &Subalgebra {
        &self.outer
    }

    pub fn inner(&self) -> &Subalgebra {
        &self.inner
    }

    /// Columns are the images of the basis of `V`.
    pub fn iota(&self) -> &Matrix {
        &self.iota
    }

    /// `End(M)^op` over the outer algebra.
    pub fn e(&self) -> &EndoAlgebraOp {
        &self.e
    }

    /// `End(M restricted)^op` over the inner algebra.
    pub fn f(&self) -> &EndoAlgebraOp {
        &self.f
    }

    /// Coordinates in `M` of `x (x) v_j` for `x` in outer coordinates.
    pub fn class_of(&self, x: &[u64], j: usize) -> Vec<u64> {
        self.tensor.class_of(x, j)
    }

    /// Image of `X (x) V` for a subspace `X` of the outer algebra.
    pub fn image_of(&self, x: &Subspace) -> Subspace {
        let vecs: Vec<Vec<u64>> = x
            .vectors()
            .iter()
            .flat_map(|s| (0..self.v.dim()).map(move |j| (s.clone(), j)))
            .map(|(s, j)| self.class_of(&s, j))
            .collect();
        Subspace::from_vectors(self.module.field(), self.dim(), &vecs)
    }
}

/// Induction from `B` to its ambient algebra.
pub fn induce(b: &Subalgebra, v: &Module) -> Result<InducedModule> {
    induce_between(&Subalgebra::full(b.ambient()), b, v)
}

/// Induction from `inner` to `outer`, both subalgebras of one algebra.
pub fn induce_between(outer: &Subalgebra, inner: &Subalgebra, v: &Module) -> Result<InducedModule> {
    if !same_algebra(v.algebra(), inner.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let in_outer = inner.basis_in(outer)?;
    let r = outer.algebra();
    let field = r.field();
    let first: Vec<Matrix> = in_outer.iter().map(|s| r.right_mul_matrix(s)).collect();
    let tensor = BalancedTensor::new(field, r.dim(), v.dim(), &first, v.action())?;
    let acting: Vec<Matrix> = (0..r.dim()).map(|i| r.left_mul_matrix(&unit_vector(r.dim(), i))).collect();
    let module = tensor.module(r, &acting);
    let iota_cols: Vec<Vec<u64>> = (0..v.dim()).map(|j| tensor.class_of(r.one(), j)).collect();
    let iota = Matrix::from_columns(field, module.dim(), &iota_cols);
    let restricted = module.restrict_between(outer, inner)?;
    let e = endo_algebra_op(&module)?;
    let f = endo_algebra_op(&restricted)?;
    let induced = InducedModule {
        outer: outer.clone(),
        inner: inner.clone(),
        v: v.clone(),
        tensor,
        module,
        restricted,
        iota,
        e,
        f,
    };
    for k in 0..v.algebra().dim() {
        let lhs = induced.restricted.action()[k].mul(&induced.iota);
        let rhs = induced.iota.mul(&v.action()[k]);
        if lhs != rhs {
            return Err(check_failed("v -> 1 (x) v is not equivariant"));
        }
    }
    Ok(induced)
}

/// Sum of all submodules of `N` isomorphic to `V`: the span of the images of
/// all intertwiners `V -> N`.
pub fn v_socle(v: &Module, n: &Module, cert: &WedderburnCertificate) -> Result<Subspace> {
    if !is_abs_simple(v, cert)? {
        return Err(Error::NotAbsSimple);
    }
    let hom = hom_space(v, n)?;
    let cols: Vec<Vec<u64>> = hom.basis().iter().flat_map(|m| m.columns()).collect();
    Ok(Subspace::from_vectors(v.field(), n.dim(), &cols))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stability {
    pub stable: bool,
    /// `dim M / dim V` when stable.
    pub multiplicity: Option<usize>,
    pub socle_dim: usize,
}

/// Whether the induced module restricted back to the inner algebra is a sum
/// of copies of `V`.
pub fn is_stable(induced: &InducedModule, cert_inner: &WedderburnCertificate) -> Result<Stability> {
    let socle = v_socle(&induced.v, &induced.restricted, cert_inner)?;
    let stable = socle.is_full();
    let multiplicity = if stable {
        let n = induced.dim() / induced.v.dim();
        let hom = hom_space(&induced.v, &induced.restricted)?.dim();
        if hom != n || n * induced.v.dim() != induced.dim() {
            return Err(check_failed(format!(
                "stable induced module has {hom} copies of V, expected {n}"
            )));
        }
        Some(n)
    } else {
        None
    };
    Ok(Stability {
        stable,
        multiplicity,
        socle_dim: socle.dim(),
    })
}

/// `J = ann_B V` together with the central idempotent `p = 1 - e_V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorData {
    /// `J` in coordinates of `B`.
    pub j: Subspace,
    /// `p` in coordinates of `B`.
    pub p: Vec<u64>,
    /// Block of `B` containing `V`.
    pub block: usize,
    /// Whether `p` is a primitive central idempotent of `B`.
    pub p_primitive: bool,
}

pub fn annihilator_and_p(cert_b: &WedderburnCertificate, v: &Module) -> Result<AnnihilatorData> {
    let b = cert_b.algebra();
    if !is_abs_simple(v, cert_b)? {
        return Err(Error::NotAbsSimple);
    }
    let f = b.field();
    let n = v.dim();
    let cols: Vec<Vec<u64>> = v.action().iter().map(|m| m.data().to_vec()).collect();
    let j = Matrix::from_columns(f, n * n, &cols).nullspace();
    let block = cert_b
        .block_of(v)
        .ok_or_else(|| check_failed("no block idempotent acts as the identity on V"))?;
    let e_v = cert_b.blocks()[block].idempotent();
    let p = vec_sub(f, b.one(), e_v);
    if b.mul(&p, &p) != p || !b.is_central(&p) {
        return Err(check_failed("1 - e_V is not a central idempotent"));
    }
    if !v.act(&p).is_zero() {
        return Err(check_failed("1 - e_V does not annihilate V"));
    }
    let p_span = Subspace::from_vectors(f, b.dim(), std::slice::from_ref(&p));
    if b.product_space(&p_span, &b.full_space())? != j {
        return Err(check_failed("ann V differs from pB"));
    }
    Ok(AnnihilatorData {
        j,
        p,
        block,
        p_primitive: cert_b.len() == 2,
    })
}

/// Subspace of `sub` given in its own coordinates, mapped to the ambient.
pub fn to_ambient_subspace(sub: &Subalgebra, x: &Subspace) -> Subspace {
    let vecs: Vec<Vec<u64>> = x.vectors().iter().map(|c| sub.to_ambient(c)).collect();
    Subspace::from_vectors(sub.ambient().field(), sub.ambient().dim(), &vecs)
}

fn invariant_under(algebra: &Algebra, s: &Subspace, j: &Subspace) -> Result<bool> {
    Ok(algebra.product_space(s, j)? == algebra.product_space(j, s)?)
}

/// `AJ = JA` for a subspace `J` of `A`.
pub fn is_invariant(a: &Algebra, j: &Subspace) -> Result<bool> {
    invariant_under(a, &a.full_space(), j)
}

/// Block ideals `e_i S` of a subalgebra, in ambient coordinates.
fn block_ideals(outer: &Subalgebra, cert: &WedderburnCertificate) -> Vec<Subspace> {
    let s = outer.algebra();
    cert.blocks()
        .iter()
        .map(|blk| {
            let vecs: Vec<Vec<u64>> = (0..s.dim())
                .map(|k| outer.to_ambient(&s.mul(blk.idempotent(), &unit_vector(s.dim(), k))))
                .collect();
            Subspace::from_vectors(s.field(), outer.ambient().dim(), &vecs)
        })
        .collect()
}

/// Normality of `inner` in `outer`: `I cap inner` is `outer`-invariant for
/// every two-sided ideal `I` of `outer` (all sums of blocks).
pub fn is_normal_in(outer: &Subalgebra, cert_outer: &WedderburnCertificate, inner: &Subalgebra) -> Result<bool> {
    if !cert_outer.covers(outer.algebra()) {
        return Err(Error::NoCertificate);
    }
    if !inner.is_contained_in(outer)? {
        return Err(Error::Containment("subalgebra is not contained in the outer algebra".into()));
    }
    let r = cert_outer.len();
    if r > MAX_NORMALITY_BLOCKS {
        return Err(Error::TooManyBlocks(r));
    }
    let ambient = outer.ambient();
    let blocks = block_ideals(outer, cert_outer);
    let s_space = outer.basis();
    for mask in 0u32..(1 << r) {
        let mut ideal = Subspace::zero(ambient.field(), ambient.dim());
        for (i, blk) in blocks.iter().enumerate() {
            if mask & (1 << i) != 0 {
                ideal = ideal.sum(blk)?;
            }
        }
        let meet = ideal.intersection(inner.basis())?;
        if !invariant_under(ambient, s_space, &meet)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_normal_subring(cert_a: &WedderburnCertificate, b: &Subalgebra) -> Result<bool> {
    if !same_algebra(cert_a.algebra(), b.ambient()) {
        return Err(Error::NoCertificate);
    }
    is_normal_in(&Subalgebra::full(b.ambient()), cert_a, b)
}

fn require_e_module(induced: &InducedModule, u: &Module) -> Result<()> {
    if same_algebra(u.algebra(), induced.e.base()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

fn tensor_over_e_parts(induced: &InducedModule, u: &Module) -> Result<(BalancedTensor, Module)> {
    require_e_module(induced, u)?;
    let m = &induced.module;
    let tensor = BalancedTensor::new(m.field(), m.dim(), u.dim(), induced.e.right_action(), u.action())?;
    let module = tensor.module(m.algebra(), m.action());
    Ok((tensor, module))
}

/// `M (x)_E U` with the outer algebra acting on the first factor.
pub fn tensor_over_e(induced: &InducedModule, u: &Module) -> Result<Module> {
    Ok(tensor_over_e_parts(induced, u)?.1)
}

/// `Hom(M, N)` as a left `E`-module: `e . f` is "first e, then f".
pub fn hom_as_e_module(induced: &InducedModule, n: &Module) -> Result<Module> {
    let hom = hom_space(&induced.module, n)?;
    let basis = hom.basis();
    let field = n.field();
    let mut action = Vec::with_capacity(induced.e.dim());
    for ek in induced.e.right_action() {
        let mut cols = Vec::with_capacity(basis.len());
        for fm in &basis {
            let c = hom
                .coordinates(&fm.mul(ek))
                .ok_or_else(|| check_failed("composite with an endomorphism is not an intertwiner"))?;
            cols.push(c);
        }
        action.push(Matrix::from_columns(field, basis.len(), &cols));
    }
    Module::new(Arc::clone(induced.e.base()), basis.len(), action)
        .map_err(|e| check_failed(format!("Hom(M, N) is not an E-module: {e}")))
}

/// Whether `phi: M (x)_E Hom(M, N) -> N`, `m (x) f -> f(m)`, is bijective.
pub fn static_check_a(induced: &InducedModule, n: &Module) -> Result<bool> {
    let hom = hom_space(&induced.module, n)?;
    let h = hom_as_e_module(induced, n)?;
    let (tensor, _) = tensor_over_e_parts(induced, &h)?;
    let basis = hom.basis();
    let field = n.field();
    let eval = |x: usize, y: usize| basis[y].col(x);
    for rel in tensor.relations.vectors() {
        let mut image = vec![0u64; n.dim()];
        for (idx, &c) in rel.iter().enumerate() {
            if c != 0 {
                crate::linalg::axpy(field, &mut image, c, &eval(idx / tensor.dy, idx % tensor.dy));
            }
        }
        if image.iter().any(|&x| x != 0) {
            return Err(check_failed("evaluation does not vanish on the balancing relations"));
        }
    }
    let cols: Vec<Vec<u64>> = tensor.reps().into_iter().map(|(x, y)| eval(x, y)).collect();
    let phi = Matrix::from_columns(field, n.dim(), &cols);
    Ok(tensor.dim() == n.dim() && phi.rank() == n.dim())
}

/// Whether `psi: U -> Hom(M, M (x)_E U)`, `u -> (m -> m (x) u)`, is bijective.
pub fn static_check_e(induced: &InducedModule, u: &Module) -> Result<bool> {
    let (tensor, t) = tensor_over_e_parts(induced, u)?;
    let m = induced.dim();
    let hom = hom_space(&induced.module, &t)?;
    let mut coords = Vec::with_capacity(u.dim());
    for j in 0..u.dim() {
        let cols: Vec<Vec<u64>> = (0..m).map(|c| tensor.class_of(&unit_vector(m, c), j)).collect();
        let psi_j = Matrix::from_columns(u.field(), t.dim(), &cols);
        let c = hom
            .coordinates(&psi_j)
            .ok_or_else(|| check_failed("m -> m (x) u is not an intertwiner"))?;
        coords.push(c);
    }
    let rank = Matrix::from_rows(u.field(), hom.dim(), &coords).rank();
    Ok(rank == u.dim() && hom.dim() == u.dim())
}

/// Stabilizer conditions for a subalgebra `S` with `B <= S <= A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub dim: usize,
    pub semisimple: bool,
    pub normal: bool,
    pub stable: bool,
    pub socle: bool,
    pub j_invariant: bool,
    pub spans: bool,
    /// Whether the equivalence of the two sets of conditions is asserted:
    /// `A`, `B`, `S` semisimple and `B` normal in both `A` and `S`.
    pub equivalence_applies: bool,
}

impl StabilizerReport {
    pub fn definition(&self) -> bool {
        self.semisimple && self.normal && self.stable && self.socle
    }

    pub fn criterion(&self) -> bool {
        self.j_invariant && self.spans
    }

    pub fn is_stabilizer(&self) -> bool {
        self.definition()
    }
}

pub fn is_stabilizer(
    b: &Subalgebra,
    v: &Module,
    s: &Subalgebra,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
    seed: u64,
) -> Result<StabilizerReport> {
    let a = b.ambient();
    if !same_algebra(s.ambient(), a) {
        return Err(Error::AmbientMismatch("S is not a subalgebra of A".into()));
    }
    if !b.is_contained_in(s)? {
        return Err(Error::Containment("B is not contained in S".into()));
    }
    let b_normal_in_a = is_normal_subring(cert_a, b)?;
    let cert_s = wedderburn(s.algebra(), seed).ok();
    let semisimple = cert_s.is_some();
    let normal = match &cert_s {
        Some(c) => is_normal_in(s, c, b)?,
        None => false,
    };
    let stable = is_stable(&induce_between(s, b, v)?, cert_b)?.stable;
    let induced = induce(b, v)?;
    let socle = v_socle(v, induced.restricted(), cert_b)? == induced.image_of(s.basis());

    let ann = annihilator_and_p(cert_b, v)?;
    let j = to_ambient_subspace(b, &ann.j);
    let j_invariant = invariant_under(a, s.basis(), &j)?;
    let full = a.full_space();
    let spans = s
        .basis()
        .sum(&a.product_space(&full, &j)?)?
        .sum(&a.product_space(&j, &full)?)?
        .is_full();
    let report = StabilizerReport {
        dim: s.dim(),
        semisimple,
        normal,
        stable,
        socle,
        j_invariant,
        spans,
        equivalence_applies: b_normal_in_a && semisimple && normal,
    };
    if report.equivalence_applies && report.definition() != report.criterion() {
        return Err(check_failed(format!(
            "stabilizer definition ({}) and criterion ({}) disagree",
            report.definition(),
            report.criterion()
        )));
    }
    Ok(report)
}

/// The two stabilizers `B + e A e` and `p A p + e A e`, `e = e_V = 1 - p`.
#[derive(Debug, Clone)]
pub struct RieffelStabilizers {
    pub s_min: Subalgebra,
    pub s_max: Subalgebra,
    pub min_report: StabilizerReport,
    pub max_report: StabilizerReport,
    pub p_primitive: bool,
}

pub fn rieffel_stabilizers(
    b: &Subalgebra,
    v: &Module,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
    seed: u64,
) -> Result<RieffelStabilizers> {
    let a = b.ambient();
    if !is_normal_subring(cert_a, b)? {
        return Err(Error::HypothesesViolated("B is not normal in A".into()));
    }
    let ann = annihilator_and_p(cert_b, v)?;
    let f = a.field();
    let p = b.to_ambient(&ann.p);
    let e = vec_sub(f, a.one(), &p);
    let eae = a.corner(&e);
    let pap = a.corner(&p);
    let closure = |span: Subspace, what: &str| {
        Subalgebra::from_subspace(a, span).map_err(|err| Error::ClosureFailure(format!("{what}: {err}")))
    };
    let s_min = closure(b.basis().sum(&eae)?, "B + eAe")?;
    let s_max = closure(pap.sum(&eae)?, "pAp + eAe")?;
    if !s_min.is_contained_in(&s_max)? || !b.is_contained_in(&s_min)? {
        return Err(check_failed("B <= S_min <= S_max fails"));
    }
    let min_report = is_stabilizer(b, v, &s_min, cert_a, cert_b, seed)?;
    let max_report = is_stabilizer(b, v, &s_max, cert_a, cert_b, seed)?;
    if !min_report.is_stabilizer() || !max_report.is_stabilizer() {
        return Err(check_failed("a Rieffel subalgebra is not a stabilizer"));
    }
    Ok(RieffelStabilizers {
        s_min,
        s_max,
        min_report,
        max_report,
        p_primitive: ann.p_primitive,
    })
}

/// A simple `S`-module containing `V` and the simple `A`-module it induces.
#[derive(Debug, Clone)]
pub struct StabilizerPair {
    pub s_module: Module,
    pub a_module: Module,
}

pub fn induce_through_stabilizer(
    b: &Subalgebra,
    v: &Module,
    s: &Subalgebra,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
    seed: u64,
) -> Result<Vec<StabilizerPair>> {
    let report = is_stabilizer(b, v, s, cert_a, cert_b, seed)?;
    if !report.is_stabilizer() {
        return Err(Error::HypothesesViolated("S is not a stabilizer for V".into()));
    }
    let cert_s = wedderburn(s.algebra(), seed)?;
    let mut out: Vec<StabilizerPair> = Vec::new();
    for blk in cert_s.blocks() {
        let n = blk.simple();
        if multiplicity(v, &n.restrict_between(s, b)?, cert_b)? == 0 {
            continue;
        }
        let induced = induce_between(&Subalgebra::full(s.ambient()), s, n)?;
        let am = induced.module;
        if !is_abs_simple(&am, cert_a)? {
            return Err(check_failed("module induced from the stabilizer is not simple"));
        }
        if multiplicity(v, &am.restrict(b)?, cert_b)? == 0 {
            return Err(check_failed("module induced from the stabilizer does not contain V"));
        }
        for other in &out {
            if iso_test(&other.a_module, &am, cert_a, seed)?.isomorphic {
                return Err(check_failed("two stabilizer simples induce isomorphic modules"));
            }
        }
        out.push(StabilizerPair {
            s_module: n.clone(),
            a_module: am,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub a_semisimple: bool,
    pub b_semisimple: bool,
    pub b_normal: bool,
    pub v_absolutely_simple: bool,
    pub a_blocks: Vec<usize>,
    pub b_blocks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondencePair {
    pub e_simple_dim: usize,
    pub a_simple_dim: usize,
    pub round_trip: bool,
}

/// Verified bijection between simple `E`-modules and simple `A`-modules
/// containing `V`.
#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub hypotheses: Hypotheses,
    pub stable: bool,
    #[serde(rename = "dimE")]
    pub dim_e: usize,
    pub pairs: Vec<CorrespondencePair>,
    pub oracle_complete: bool,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub e_blocks: Vec<usize>,
    #[serde(skip)]
    pub e_simples: Vec<Module>,
    #[serde(skip)]
    pub a_simples: Vec<Module>,
    #[serde(skip)]
    pub induced: Option<InducedModule>,
}

fn certify(algebra: &Arc<Algebra>, what: &str, seed: u64) -> Result<WedderburnCertificate> {
    wedderburn(algebra, seed).map_err(|e| Error::HypothesesViolated(format!("{what} is not certified semisimple: {e}")))
}

/// Certificates for `A` and `B` plus the normality and simplicity checks
/// required by the correspondence.
pub fn check_hypotheses(
    b: &Subalgebra,
    v: &Module,
    seed: u64,
) -> Result<(WedderburnCertificate, WedderburnCertificate, Hypotheses)> {
    let cert_a = certify(b.ambient(), "A", seed)?;
    let cert_b = certify(b.algebra(), "B", seed)?;
    if !same_algebra(v.algebra(), b.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if !is_abs_simple(v, &cert_b)? {
        return Err(Error::HypothesesViolated("V is not absolutely simple".into()));
    }
    if !is_normal_subring(&cert_a, b)? {
        return Err(Error::HypothesesViolated("B is not normal in A".into()));
    }
    let hyp = Hypotheses {
        a_semisimple: true,
        b_semisimple: true,
        b_normal: true,
        v_absolutely_simple: true,
        a_blocks: cert_a.degrees(),
        b_blocks: cert_b.degrees(),
    };
    Ok((cert_a, cert_b, hyp))
}

pub fn correspond(b: &Subalgebra, v: &Module, seed: u64) -> Result<CorrespondenceReport> {
    let (cert_a, cert_b, hypotheses) = check_hypotheses(b, v, seed)?;
    let induced = induce(b, v)?;
    let stability = is_stable(&induced, &cert_b)?;
    let e = induced.e();
    let cert_e =
        wedderburn(e.base(), seed).map_err(|err| check_failed(format!("E is not certified semisimple: {err}")))?;

    let mut pairs = Vec::new();
    let mut a_simples: Vec<Module> = Vec::new();
    let mut e_simples = Vec::new();
    for (i, blk) in cert_e.blocks().iter().enumerate() {
        let u = blk.simple();
        let n = tensor_over_e(&induced, u)?;
        if !is_abs_simple(&n, &cert_a)? {
            return Err(check_failed(format!("M (x)_E U_{i} is not simple")));
        }
        if multiplicity(v, &n.restrict(b)?, &cert_b)? == 0 {
            return Err(check_failed(format!("M (x)_E U_{i} does not contain V")));
        }
        let back = hom_as_e_module(&induced, &n)?;
        let round_trip = iso_test(&back, u, &cert_e, seed)?.isomorphic;
        if !round_trip {
            return Err(check_failed(format!("Hom(M, M (x)_E U_{i}) is not U_{i}")));
        }
        if stability.stable && n.dim() != v.dim() * u.dim() {
            return Err(check_failed(format!(
                "stable case: dim M (x)_E U_{i} = {} but dim V dim U = {}",
                n.dim(),
                v.dim() * u.dim()
            )));
        }
        for (k, other) in a_simples.iter().enumerate() {
            if iso_test(other, &n, &cert_a, seed)?.isomorphic {
                return Err(check_failed(format!("simples {k} and {i} are isomorphic")));
            }
        }
        pairs.push(CorrespondencePair {
            e_simple_dim: u.dim(),
            a_simple_dim: n.dim(),
            round_trip,
        });
        a_simples.push(n);
        e_simples.push(u.clone());
    }

    let mut oracle_complete = true;
    for w in cert_a.simples() {
        if multiplicity(v, &w.restrict(b)?, &cert_b)? == 0 {
            continue;
        }
        let mut found = false;
        for n in &a_simples {
            if iso_test(n, w, &cert_a, seed)?.isomorphic {
                found = true;
                break;
            }
        }
        oracle_complete &= found;
    }
    let total: usize = pairs.iter().map(|p| p.a_simple_dim * p.e_simple_dim).sum();
    oracle_complete &= total == induced.dim();
    if !oracle_complete {
        return Err(check_failed("a simple A-module containing V is missing"));
    }
    if stability.stable && induced.dim() != v.dim() * e.dim() {
        return Err(check_failed("stable case: dim M differs from dim V dim E"));
    }

    let ann = annihilator_and_p(&cert_b, v)?;
    let mut warnings = Vec::new();
    if !ann.p_primitive {
        warnings.push(format!(
            "p = 1 - e_V generates ann V but is not a primitive central idempotent of B ({} blocks)",
            cert_b.len()
        ));
    }
    Ok(CorrespondenceReport {
        hypotheses,
        stable: stability.stable,
        dim_e: e.dim(),
        pairs,
        oracle_complete,
        warnings,
        e_blocks: cert_e.degrees(),
        e_simples,
        a_simples,
        induced: Some(induced),
    })
}

/// `dim End_A(V^A) = dim Hom_B(V, V^A) = dim Hom_B(V, V^S) = dim End_S(V^S)`.
pub fn endalg_chain_check(
    b: &Subalgebra,
    v: &Module,
    s: &Subalgebra,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
    seed: u64,
) -> Result<[usize; 4]> {
    if !is_stabilizer(b, v, s, cert_a, cert_b, seed)?.is_stabilizer() {
        return Err(Error::HypothesesViolated("S is not a stabilizer for V".into()));
    }
    let up_a = induce(b, v)?;
    let up_s = induce_between(s, b, v)?;
    let dims = [
        hom_space(up_a.module(), up_a.module())?.dim(),
        hom_space(v, up_a.restricted())?.dim(),
        hom_space(v, up_s.restricted())?.dim(),
        hom_space(up_s.module(), up_s.module())?.dim(),
    ];
    if dims.iter().any(|&d| d != dims[0]) {
        return Err(check_failed(format!("endomorphism dimensions differ: {dims:?}")));
    }
    Ok(dims)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FAlgebraReport {
    /// Block degrees of `F`, sorted.
    pub degrees: Vec<usize>,
    /// Nonzero multiplicities of the simples of `B` in the restricted module,
    /// sorted.
    pub multiplicities: Vec<usize>,
    pub e_in_f: bool,
    /// Every `F`-module is projective because `F` is semisimple.
    pub all_f_modules_projective: bool,
}

fn e_inside_f(induced: &InducedModule) -> Result<Subalgebra> {
    let f = induced.f();
    let coords: Vec<Vec<u64>> = induced
        .e()
        .right_action()
        .iter()
        .map(|m| f.coordinates(m).ok_or_else(|| check_failed("an A-endomorphism is not a B-endomorphism")))
        .collect::<Result<_>>()?;
    Subalgebra::from_basis(f.base(), &coords).map_err(|e| check_failed(format!("E is not a subalgebra of F: {e}")))
}

pub fn f_algebra_check(induced: &InducedModule, cert_b: &WedderburnCertificate, seed: u64) -> Result<FAlgebraReport> {
    let cert_f = wedderburn(induced.f().base(), seed)?;
    let e_sub = e_inside_f(induced)?;
    let mut degrees = cert_f.degrees();
    degrees.sort_unstable();
    let mut multiplicities = Vec::new();
    for w in cert_b.simples() {
        let m = multiplicity(w, induced.restricted(), cert_b)?;
        if m > 0 {
            multiplicities.push(m);
        }
    }
    multiplicities.sort_unstable();
    if degrees != multiplicities {
        return Err(check_failed(format!(
            "F has blocks {degrees:?} but the multiplicities are {multiplicities:?}"
        )));
    }
    Ok(FAlgebraReport {
        degrees,
        multiplicities,
        e_in_f: e_sub.dim() == induced.e().dim(),
        all_f_modules_projective: true,
    })
}

/// `F (x)_E U`, by inducing along `E <= F`.
pub fn restrict_to_f(induced: &InducedModule, u: &Module) -> Result<Module> {
    require_e_module(induced, u)?;
    let e_sub = e_inside_f(induced)?;
    let f = induced.f();
    let images: Vec<Vec<u64>> = e_sub
        .ambient_basis()
        .iter()
        .map(|x| {
            induced
                .e()
                .coordinates(&f.element_matrix(x))
                .ok_or_else(|| check_failed("element of E inside F has no E coordinates"))
        })
        .collect::<Result<_>>()?;
    let pulled = u.pullback(Arc::clone(e_sub.algebra()), &images);
    Ok(induce(&e_sub, &pulled)?.module)
}

/// `(+) M -> M -> N -> 0` with `pi(a (x) v) = a . v`.
#[derive(Debug, Clone)]
pub struct Presentation {
    /// `dim N x dim M`.
    pub pi: Matrix,
    /// `dim M x (k dim M)`: one surjection onto each simple summand of the
    /// kernel of `pi`, followed by its inclusion.
    pub map1: Matrix,
    pub summands: usize,
}

pub fn build_presentation(
    induced: &InducedModule,
    n: &Module,
    cert_a: &WedderburnCertificate,
    cert_b: &WedderburnCertificate,
) -> Result<Presentation> {
    let b = induced.inner().clone();
    let v = induced.v();
    let field = n.field();
    let n_b = n.restrict_between(induced.outer(), &b)?;
    if multiplicity(v, &n_b, cert_b)? == 0 {
        return Err(Error::HypothesesViolated("N does not contain V on restriction".into()));
    }
    let embed = hom_space(v, &n_b)?.matrix(0);
    let r = induced.outer().algebra();
    let vals = |x: usize, y: usize| n.action()[x].mul_vec(&embed.col(y));
    let cols: Vec<Vec<u64>> = induced.tensor.reps().into_iter().map(|(x, y)| vals(x, y)).collect();
    let pi = Matrix::from_columns(field, n.dim(), &cols);
    for rel in induced.tensor.relations.vectors() {
        let mut image = vec![0u64; n.dim()];
        for (idx, &c) in rel.iter().enumerate() {
            if c != 0 {
                crate::linalg::axpy(field, &mut image, c, &vals(idx / v.dim(), idx % v.dim()));
            }
        }
        if image.iter().any(|&x| x != 0) {
            return Err(check_failed("a (x) v -> a . v does not vanish on the balancing relations"));
        }
    }
    debug_assert_eq!(r.dim() * v.dim(), induced.tensor.dx * induced.tensor.dy);
    if pi.rank() != n.dim() {
        return Err(check_failed("pi is not surjective"));
    }
    let m = induced.module();
    let kernel = pi.nullspace();
    let (k_mod, k_embed) = m.submodule(&kernel)?;
    let mut covered = Subspace::zero(field, m.dim());
    let mut blocks: Vec<Matrix> = Vec::new();
    for simple in cert_a.simples() {
        if covered == kernel {
            break;
        }
        let into_k = hom_space(simple, &k_mod)?;
        if into_k.dim() == 0 {
            continue;
        }
        let onto = hom_space(m, simple)?;
        if onto.dim() == 0 {
            return Err(check_failed("kernel summand is not a quotient of M"));
        }
        let surj = onto.matrix(0);
        for h in into_k.basis() {
            let inc = k_embed.mul(&h);
            let image = inc.column_space();
            if covered.contains(&image)? {
                continue;
            }
            covered = covered.sum(&image)?;
            blocks.push(inc.mul(&surj));
        }
    }
    if covered != kernel {
        return Err(check_failed("kernel of pi is not covered by simple summands"));
    }
    let mut map1 = Matrix::zeros(field, m.dim(), 0);
    for blk in &blocks {
        map1 = map1.hstack(blk);
    }
    if map1.column_space() != kernel {
        return Err(check_failed("image of the presentation differs from ker pi"));
    }
    Ok(Presentation {
        pi,
        map1,
        summands: blocks.len(),
    })
}

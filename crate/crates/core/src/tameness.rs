//! Total integrals, Reynold operators and exactness of invariants.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::artinian::{free_basis, free_module_report, FreenessReport};
use crate::comodule::{hom_system, BAModule, Comodule, ComoduleAlgebra};
use crate::error::{dim_check, Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, Subspace};

/// A unital comodule map `α : A → B`, stored as a `dim B × dim A` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalIntegral {
    pub alpha: Matrix,
}

/// Either a total integral or a proof that none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralSearch {
    Found(TotalIntegral),
    /// `y` with `yᵀ·M = 0` and `yᵀ·rhs = 1` for the system `M·vec(α) = rhs`.
    Infeasible { certificate: Vec<Scalar> },
}

impl IntegralSearch {
    pub fn integral(&self) -> Option<&TotalIntegral> {
        match self {
            IntegralSearch::Found(t) => Some(t),
            IntegralSearch::Infeasible { .. } => None,
        }
    }
}

/// The affine system for total integrals: the comodule-map equations followed
/// by `α(1_A) = 1_B`. Unknown `α[i, j]` sits at `i·dim A + j`.
pub fn integral_system(b: &ComoduleAlgebra) -> Result<(Matrix, Vec<Scalar>)> {
    let h = b.hopf();
    let f = b.field();
    let (nb, na) = (b.dim(), h.dim);
    let homs = hom_system(&Comodule::regular(h.clone()), b.comodule())?;
    let mut unit = Matrix::zeros(f, nb, nb * na);
    for i in 0..nb {
        for j in 0..na {
            unit.set(i, i * na + j, h.unit[j].clone());
        }
    }
    let sys = homs.vstack(&unit)?;
    let mut rhs = vec![f.zero(); homs.rows()];
    rhs.extend(b.algebra().unit.iter().cloned());
    Ok((sys, rhs))
}

pub fn total_integral_search(b: &ComoduleAlgebra) -> Result<IntegralSearch> {
    let (sys, rhs) = integral_system(b)?;
    Ok(match sys.solve_or_certify(&rhs)? {
        Ok(v) => IntegralSearch::Found(TotalIntegral {
            alpha: Matrix::from_data(b.field(), b.dim(), b.hopf().dim, v)?,
        }),
        Err(y) => IntegralSearch::Infeasible { certificate: y },
    })
}

/// The canonical total integral, or `None` when the action is not tame.
pub fn total_integral(b: &ComoduleAlgebra) -> Result<Option<TotalIntegral>> {
    Ok(total_integral_search(b)?.integral().cloned())
}

impl TotalIntegral {
    /// Whether `α` is a unital comodule map `A → B`.
    pub fn verify(&self, b: &ComoduleAlgebra) -> Result<bool> {
        let h = b.hopf();
        if self.alpha.rows() != b.dim() || self.alpha.cols() != h.dim {
            return Ok(false);
        }
        let reg = Comodule::regular(h.clone());
        Ok(reg.is_morphism_to(b.comodule(), &self.alpha)? && self.alpha.apply(&h.unit)? == b.algebra().unit)
    }
}

/// Whether an infeasibility certificate really refutes the integral system of `b`.
pub fn verify_certificate(b: &ComoduleAlgebra, y: &[Scalar]) -> Result<bool> {
    let (sys, rhs) = integral_system(b)?;
    Ok(sys.refuted_by(&rhs, y))
}

/// `G` is linearly reductive iff the trivial action on the ground field is tame.
pub fn is_linearly_reductive(hopf: &Arc<HopfAlgebra>) -> Result<bool> {
    Ok(total_integral(&ComoduleAlgebra::ground(hopf.clone()))?.is_some())
}

/// A projector of `N` onto `N^A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReynoldOperator {
    pub pr: Matrix,
}

/// `pr(n) = Σ α(S(n₁))·n₀`, checked to be a projector onto the invariants.
pub fn reynold(alpha: &TotalIntegral, n: &BAModule) -> Result<ReynoldOperator> {
    let pr = reynold_matrix(alpha, n)?;
    let inv = n.invariants();
    let failure = reynold_failure(&pr, &inv)?;
    if let Some(msg) = failure {
        return Err(Error::InvariantBreach(format!("Reynold operator {msg}")));
    }
    Ok(ReynoldOperator { pr })
}

fn reynold_matrix(alpha: &TotalIntegral, n: &BAModule) -> Result<Matrix> {
    let h = n.hopf();
    let f = n.field();
    let (dn, na) = (n.dim(), h.dim);
    let s_legs: Vec<Vec<Scalar>> = (0..na).map(|l| alpha.alpha.apply(&h.antipode.column(l))).collect::<Result<_>>()?;
    let mut cols = Vec::with_capacity(dn);
    for j in 0..dn {
        let mut out = vec![f.zero(); dn];
        let rho = n.comodule().coaction();
        for k in 0..dn {
            let mut ek = vec![f.zero(); dn];
            ek[k] = f.one();
            for (l, sl) in s_legs.iter().enumerate() {
                let c = rho.get(k * na + l, j);
                if f.is_zero(c) {
                    continue;
                }
                for (o, v) in out.iter_mut().zip(n.act(sl, &ek)) {
                    *o = f.add(o, &f.mul(c, &v));
                }
            }
        }
        cols.push(out);
    }
    Ok(Matrix::from_columns(f, dn, &cols))
}

/// `None` when `pr` is idempotent, has image `inv` and fixes `inv`.
pub fn reynold_failure(pr: &Matrix, inv: &Subspace) -> Result<Option<&'static str>> {
    if pr.mul(pr)? != *pr {
        return Ok(Some("is not idempotent"));
    }
    if pr.mul(inv.basis())? != *inv.basis() {
        return Ok(Some("does not fix the invariants"));
    }
    if !Subspace::span(pr).same_as(inv) {
        return Ok(Some("has image different from the invariants"));
    }
    Ok(None)
}

/// `0 → left → middle → right → 0` in the category of (B, A)-modules.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub label: String,
    pub left: BAModule,
    pub middle: BAModule,
    pub right: BAModule,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

impl ShortExactSequence {
    /// Checks that both maps are morphisms and the sequence is exact.
    pub fn new(
        label: String,
        left: BAModule,
        middle: BAModule,
        right: BAModule,
        inclusion: Matrix,
        projection: Matrix,
    ) -> Result<ShortExactSequence> {
        dim_check("inclusion rows", middle.dim(), inclusion.rows())?;
        dim_check("inclusion cols", left.dim(), inclusion.cols())?;
        dim_check("projection rows", right.dim(), projection.rows())?;
        dim_check("projection cols", middle.dim(), projection.cols())?;
        if !left.is_morphism_to(&middle, &inclusion)? || !middle.is_morphism_to(&right, &projection)? {
            return Err(Error::InvalidStructure(format!("{label}: maps are not (B, A)-module maps")));
        }
        let exact = inclusion.is_injective()
            && projection.is_surjective()
            && projection.mul(&inclusion)?.is_zero()
            && left.dim() + right.dim() == middle.dim();
        if !exact {
            return Err(Error::InvalidStructure(format!("{label}: sequence is not exact")));
        }
        Ok(ShortExactSequence {
            label,
            left,
            middle,
            right,
            inclusion,
            projection,
        })
    }

    /// `0 → W → N → N/W → 0`.
    pub fn from_submodule(label: String, n: &BAModule, sub: &Subspace) -> Result<ShortExactSequence> {
        let (left, inc) = n.submodule(sub)?;
        let (right, proj) = n.quotient(sub)?;
        ShortExactSequence::new(label, left, n.clone(), right, inc, proj)
    }
}

/// A comodule surjection `V → V''` supplied by the user; the battery uses
/// `0 → B⊗ker → B⊗V → B⊗V'' → 0`.
#[derive(Clone, Debug)]
pub struct BatteryAddition {
    pub label: String,
    pub source: Comodule,
    pub target: Comodule,
    pub map: Matrix,
}

/// The finite family of sequences on which exactness and Reynold existence
/// are tested:
/// the identity sequence on `B`; `0 → W → B → B/W → 0` for the cyclic
/// (B, A)-submodules `W` generated by basis vectors; the evaluation sequence
/// `0 → K → B⊗A* → B → 0` at `1_A`; the unit sequence
/// `0 → B → B⊗A → B⊗(A/k) → 0`; and the user additions.
pub fn battery(b: &Arc<ComoduleAlgebra>, additions: &[BatteryAddition]) -> Result<Vec<ShortExactSequence>> {
    let f = b.field();
    let h = b.hopf().clone();
    let (nb, na) = (b.dim(), h.dim);
    let reg = BAModule::regular(b.clone());
    let mut out = Vec::new();

    out.push(ShortExactSequence::from_submodule(
        String::from("identity"),
        &reg,
        &Subspace::whole(f, nb),
    )?);

    let mut seen: Vec<Subspace> = Vec::new();
    for i in 0..nb {
        let w = reg.generated_by(&[b.algebra().basis(i)])?;
        if w.dim() == 0 || w.dim() == nb || seen.iter().any(|s| s.same_as(&w)) {
            continue;
        }
        out.push(ShortExactSequence::from_submodule(
            format!("cyclic({})", b.algebra().labels[i]),
            &reg,
            &w,
        )?);
        seen.push(w);
    }

    let dual = Comodule::regular(h.clone()).dual()?;
    let free_dual = BAModule::free(b.clone(), &dual)?;
    let mut ev = Matrix::zeros(f, nb, nb * na);
    for x in 0..nb {
        for k in 0..na {
            ev.set(x, x * na + k, h.unit[k].clone());
        }
    }
    let kernel = Subspace::from_basis(ev.kernel())?;
    let (k_mod, k_inc) = free_dual.submodule(&kernel)?;
    out.push(ShortExactSequence::new(
        String::from("evaluation"),
        k_mod,
        free_dual,
        reg.clone(),
        k_inc,
        ev,
    )?);

    let free_reg = BAModule::free(b.clone(), &Comodule::regular(h.clone()))?;
    let mut unit = Matrix::zeros(f, nb * na, nb);
    for x in 0..nb {
        for l in 0..na {
            unit.set(x * na + l, x, h.unit[l].clone());
        }
    }
    let image = Subspace::from_basis(unit.clone())?;
    let (right, proj) = free_reg.quotient(&image)?;
    out.push(ShortExactSequence::new(
        String::from("unit"),
        reg,
        free_reg,
        right,
        unit,
        proj,
    )?);

    for add in additions {
        out.push(addition_sequence(b, add)?);
    }
    Ok(out)
}

fn addition_sequence(b: &Arc<ComoduleAlgebra>, add: &BatteryAddition) -> Result<ShortExactSequence> {
    if !add.source.is_morphism_to(&add.target, &add.map)? || !add.map.is_surjective() {
        return Err(Error::InvalidStructure(format!(
            "{}: battery addition is not a comodule surjection",
            add.label
        )));
    }
    let f = b.field();
    let middle = BAModule::free(b.clone(), &add.source)?;
    let right = BAModule::free(b.clone(), &add.target)?;
    let proj = Matrix::identity(f, b.dim()).kron(&add.map)?;
    let kernel = Subspace::from_basis(proj.kernel())?;
    let (left, inc) = middle.submodule(&kernel)?;
    ShortExactSequence::new(add.label.clone(), left, middle, right, inc, proj)
}

/// The effect of `(−)^A` on one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub label: String,
    /// Dimensions of the invariants of left, middle, right.
    pub invariant_dims: [usize; 3],
    pub left_exact: bool,
    pub right_exact: bool,
    /// An invariant of the right term outside the image, when not right exact.
    pub witness: Option<Vec<Scalar>>,
    /// Whether every invariant of the right term was lifted by a Reynold
    /// operator of the middle term; `None` without a total integral.
    pub reynold_lift: Option<bool>,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.left_exact && self.right_exact
    }
}

pub fn exactness_check(seq: &ShortExactSequence, alpha: Option<&TotalIntegral>) -> Result<ExactnessReport> {
    let il = seq.left.invariants();
    let im = seq.middle.invariants();
    let ir = seq.right.invariants();
    let inc_inv = seq.inclusion.mul(il.basis())?;
    let proj_inv = seq.projection.mul(im.basis())?;
    let in_middle = im.coordinates_of(&inc_inv)?;
    // kernel of N^A → N''^A, as a subspace of N
    let ker = im.basis().mul(&proj_inv.kernel())?;
    let left_exact = in_middle.is_injective() && Subspace::span(&ker).same_as(&Subspace::span(&inc_inv));
    let image = Subspace::span(&proj_inv);
    let right_exact = image.dim() == ir.dim();
    let witness = (0..ir.dim()).map(|i| ir.vector(i)).find(|v| !image.contains(v));
    let reynold_lift = match alpha {
        None => None,
        Some(a) => {
            let pr = reynold_matrix(a, &seq.middle)?;
            let mut ok = true;
            for i in 0..ir.dim() {
                let target = ir.vector(i);
                let lift = seq
                    .projection
                    .solve_affine(&target)?
                    .ok_or_else(|| Error::InvariantBreach("projection is not surjective".into()))?;
                let m = pr.apply(&lift)?;
                ok &= im.contains(&m) && seq.projection.apply(&m)? == target;
            }
            Some(ok)
        }
    };
    Ok(ExactnessReport {
        label: seq.label.clone(),
        invariant_dims: [il.dim(), im.dim(), ir.dim()],
        left_exact,
        right_exact,
        witness,
        reynold_lift,
    })
}

/// Outcome of the search for retractions `r_N : N → N^A`, one per battery
/// module, that are `C`-linear and natural for every battery map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReynoldFamily {
    pub module_dims: Vec<usize>,
    pub invariant_dims: Vec<usize>,
    /// Retractions in invariant coordinates (`dim N^A × dim N`).
    pub retractions: Option<Vec<Matrix>>,
    /// Infeasibility certificate otherwise.
    pub certificate: Option<Vec<Scalar>>,
}

impl ReynoldFamily {
    pub fn exists(&self) -> bool {
        self.retractions.is_some()
    }
}

struct FamilyModule {
    module: BAModule,
    inv: Subspace,
    offset: usize,
}

/// The affine system whose solutions are natural `C`-linear retraction
/// families over a battery. Modules are deduplicated by equality; the
/// retraction of module `i` is stored row-major from `offsets[i]`.
#[derive(Clone, Debug)]
pub struct FamilySystem {
    pub matrix: Matrix,
    pub rhs: Vec<Scalar>,
    pub module_dims: Vec<usize>,
    pub invariant_dims: Vec<usize>,
    pub offsets: Vec<usize>,
}

impl FamilySystem {
    /// Whether the retractions (in invariant coordinates) solve the system.
    pub fn check_solution(&self, retractions: &[Matrix]) -> Result<bool> {
        if retractions.len() != self.offsets.len() {
            return Ok(false);
        }
        let mut v = Vec::with_capacity(self.matrix.cols());
        for (i, r) in retractions.iter().enumerate() {
            if r.rows() != self.invariant_dims[i] || r.cols() != self.module_dims[i] {
                return Ok(false);
            }
            v.extend(r.data().iter().cloned());
        }
        Ok(v.len() == self.matrix.cols() && self.matrix.apply(&v)? == self.rhs)
    }

    pub fn check_certificate(&self, y: &[Scalar]) -> bool {
        self.matrix.refuted_by(&self.rhs, y)
    }
}

pub fn reynold_family_system(b: &ComoduleAlgebra, battery: &[ShortExactSequence]) -> Result<FamilySystem> {
    let f = b.field();
    let mut modules: Vec<FamilyModule> = Vec::new();
    let mut maps: Vec<(usize, usize, &Matrix)> = Vec::new();
    let mut unknowns = 0;
    let mut index_of = |n: &BAModule, modules: &mut Vec<FamilyModule>| -> usize {
        if let Some(i) = modules.iter().position(|m| m.module == *n) {
            return i;
        }
        let inv = n.invariants();
        let offset = unknowns;
        unknowns += inv.dim() * n.dim();
        modules.push(FamilyModule {
            module: n.clone(),
            inv,
            offset,
        });
        modules.len() - 1
    };
    for seq in battery {
        let l = index_of(&seq.left, &mut modules);
        let m = index_of(&seq.middle, &mut modules);
        let r = index_of(&seq.right, &mut modules);
        maps.push((l, m, &seq.inclusion));
        maps.push((m, r, &seq.projection));
    }

    let c = b.invariants();
    let unit = &b.algebra().unit;
    let c_gens: Vec<Vec<Scalar>> = (0..c.dim()).map(|i| c.vector(i)).filter(|v| v != unit).collect();

    let mut eqs = Equations::new(f, unknowns);
    for fm in &modules {
        let (d, n) = (fm.inv.dim(), fm.module.dim());
        if d == 0 {
            continue;
        }
        // r ι = I
        let row = eqs.block(d, d);
        eqs.term(row, d, d, fm.offset, d, n, None, Some(fm.inv.basis()), true);
        for p in 0..d {
            eqs.rhs[row + p * d + p] = f.one();
        }
        // r L_c = L_c|inv r
        for g in &c_gens {
            let l = fm.module.act_matrix(g);
            let linv = fm.inv.coordinates_of(&l.mul(fm.inv.basis())?)?;
            let row = eqs.block(d, n);
            eqs.term(row, d, n, fm.offset, d, n, None, Some(&l), true);
            eqs.term(row, d, n, fm.offset, d, n, Some(&linv), None, false);
        }
    }
    // h^A r_M = r_N h
    for &(src, dst, h) in &maps {
        let (sm, dm) = (&modules[src], &modules[dst]);
        let (ds, ns, dd) = (sm.inv.dim(), sm.module.dim(), dm.inv.dim());
        if dd == 0 {
            continue;
        }
        let row = eqs.block(dd, ns);
        if ds > 0 {
            let ha = dm.inv.coordinates_of(&h.mul(sm.inv.basis())?)?;
            eqs.term(row, dd, ns, sm.offset, ds, ns, Some(&ha), None, true);
        }
        eqs.term(row, dd, ns, dm.offset, dd, dm.module.dim(), None, Some(h), false);
    }
    Ok(FamilySystem {
        matrix: eqs.matrix(),
        rhs: eqs.rhs,
        module_dims: modules.iter().map(|m| m.module.dim()).collect(),
        invariant_dims: modules.iter().map(|m| m.inv.dim()).collect(),
        offsets: modules.iter().map(|m| m.offset).collect(),
    })
}

pub fn natural_reynold_family(b: &ComoduleAlgebra, battery: &[ShortExactSequence]) -> Result<ReynoldFamily> {
    let f = b.field();
    let sys = reynold_family_system(b, battery)?;
    let outcome = sys.matrix.solve_or_certify(&sys.rhs)?;
    Ok(match outcome {
        Ok(v) => {
            let retractions = (0..sys.offsets.len())
                .map(|i| {
                    let (d, n, o) = (sys.invariant_dims[i], sys.module_dims[i], sys.offsets[i]);
                    Matrix::from_data(f, d, n, v[o..o + d * n].to_vec())
                })
                .collect::<Result<Vec<_>>>()?;
            ReynoldFamily {
                module_dims: sys.module_dims,
                invariant_dims: sys.invariant_dims,
                retractions: Some(retractions),
                certificate: None,
            }
        }
        Err(y) => ReynoldFamily {
            module_dims: sys.module_dims,
            invariant_dims: sys.invariant_dims,
            retractions: None,
            certificate: Some(y),
        },
    })
}

/// Sparse accumulation of linear equations in blocks of matrix unknowns.
struct Equations {
    field: crate::field::FieldSpec,
    cols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
    rhs: Vec<Scalar>,
}

impl Equations {
    fn new(field: crate::field::FieldSpec, cols: usize) -> Self {
        Equations {
            field,
            cols,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Reserves `p × q` equations, one per entry of a `p × q` matrix identity.
    fn block(&mut self, p: usize, q: usize) -> usize {
        let start = self.rows.len();
        self.rows.resize(start + p * q, Vec::new());
        self.rhs.resize(start + p * q, self.field.zero());
        start
    }

    /// Adds `± P·X·Q` to the block of equations at `row` (shape `p × q`),
    /// where `X` is the `xr × xc` unknown matrix stored row-major at `offset`.
    /// A missing `P` or `Q` means the identity.
    #[allow(clippy::too_many_arguments)]
    fn term(
        &mut self,
        row: usize,
        p: usize,
        q: usize,
        offset: usize,
        xr: usize,
        xc: usize,
        left: Option<&Matrix>,
        right: Option<&Matrix>,
        positive: bool,
    ) {
        let f = self.field;
        for i in 0..p {
            for j in 0..q {
                let eq = &mut self.rows[row + i * q + j];
                for a in 0..xr {
                    let pa = match left {
                        Some(m) => m.get(i, a).clone(),
                        None if a == i => f.one(),
                        None => continue,
                    };
                    if f.is_zero(&pa) {
                        continue;
                    }
                    for bcol in 0..xc {
                        let qb = match right {
                            Some(m) => m.get(bcol, j).clone(),
                            None if bcol == j => f.one(),
                            None => continue,
                        };
                        if f.is_zero(&qb) {
                            continue;
                        }
                        let mut c = f.mul(&pa, &qb);
                        if !positive {
                            c = f.neg(&c);
                        }
                        eq.push((offset + a * xc + bcol, c));
                    }
                }
            }
        }
    }

    fn matrix(&self) -> Matrix {
        let f = self.field;
        let mut m = Matrix::zeros(f, self.rows.len(), self.cols);
        for (r, eq) in self.rows.iter().enumerate() {
            for (c, v) in eq {
                m.add_at(r, *c, v);
            }
        }
        m
    }
}

/// Whether `B` is free of positive rank over `C = B^A`.
pub fn free_over_invariants(b: &ComoduleAlgebra) -> Result<FreenessReport> {
    let c = b.invariants();
    let reg = BAModule::regular(Arc::new(b.clone()));
    let action: Vec<Matrix> = (0..c.dim()).map(|i| reg.act_matrix(&c.vector(i))).collect();
    free_module_report(b.invariant_algebra(), &action, b.dim())
}

/// Multiplication on `B` by each basis element of `C = B^A`.
pub fn invariant_action(b: &ComoduleAlgebra) -> Vec<Matrix> {
    let c = b.invariants();
    (0..c.dim()).map(|i| b.algebra().left_mult(&c.vector(i))).collect()
}

/// A `C`-basis of `B` when `B` is free over `C`.
pub fn invariant_free_basis(b: &ComoduleAlgebra) -> Result<Option<Vec<Vec<Scalar>>>> {
    let report = free_over_invariants(b)?;
    match report.rank {
        Some(r) if report.free => free_basis(b.invariant_algebra(), &invariant_action(b), b.dim(), r),
        _ => Ok(None),
    }
}

/// How the four tameness verdicts relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    /// All computed verdicts coincide.
    Agree(bool),
    /// The verdicts differ although the hypotheses hold.
    Disagree,
    /// `B` is not free over `C`, so only the implications from tameness apply.
    NotApplicable,
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub total_integral: bool,
    pub battery_exact: bool,
    pub reynold_family: bool,
    /// `None` when no inertia data was supplied.
    pub inertia_linearly_reductive: Option<bool>,
    pub flatness: FreenessReport,
    pub agreement: Agreement,
    pub integral: IntegralSearch,
    pub exactness: Vec<ExactnessReport>,
    pub family: ReynoldFamily,
}

pub fn equivalence_report(
    b: &ComoduleAlgebra,
    inertia: &[Arc<HopfAlgebra>],
    additions: &[BatteryAddition],
) -> Result<EquivalenceReport> {
    let integral = total_integral_search(b)?;
    let shared = Arc::new(b.clone());
    let seqs = battery(&shared, additions)?;
    let exactness = seqs
        .iter()
        .map(|s| exactness_check(s, integral.integral()))
        .collect::<Result<Vec<_>>>()?;
    let family = natural_reynold_family(b, &seqs)?;
    let inertia_lr = if inertia.is_empty() {
        None
    } else {
        let mut all = true;
        for h in inertia {
            all &= is_linearly_reductive(h)?;
        }
        Some(all)
    };
    let flatness = free_over_invariants(b)?;
    let tame = integral.integral().is_some();
    let battery_exact = exactness.iter().all(ExactnessReport::exact);
    let reynold_family = family.exists();
    let mut verdicts = vec![tame, battery_exact, reynold_family];
    verdicts.extend(inertia_lr);
    let agreement = if !flatness.free {
        Agreement::NotApplicable
    } else if verdicts.iter().all(|&v| v == tame) {
        Agreement::Agree(tame)
    } else {
        Agreement::Disagree
    };
    Ok(EquivalenceReport {
        total_integral: tame,
        battery_exact,
        reynold_family,
        inertia_linearly_reductive: inertia_lr,
        flatness,
        agreement,
        integral,
        exactness,
        family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::group::FiniteGroup;
    use crate::hopf::{make_standard, StandardHopf};

    fn oc2(f: FieldSpec) -> Arc<HopfAlgebra> {
        Arc::new(HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f))
    }

    #[test]
    fn regular_c2_is_tame_with_identity_integral() {
        let h = oc2(FieldSpec::prime(5).unwrap());
        let b = ComoduleAlgebra::regular(h).unwrap();
        let t = total_integral(&b).unwrap().unwrap();
        assert!(t.verify(&b).unwrap());
        let reg = BAModule::regular(Arc::new(b.clone()));
        let r = reynold(&t, &reg).unwrap();
        assert_eq!(r.pr.apply(&b.algebra().unit).unwrap(), b.algebra().unit);
    }

    #[test]
    fn trivial_c2_on_f2_is_not_tame() {
        let h = oc2(FieldSpec::prime(2).unwrap());
        let b = ComoduleAlgebra::ground(h.clone());
        match total_integral_search(&b).unwrap() {
            IntegralSearch::Infeasible { certificate } => assert!(verify_certificate(&b, &certificate).unwrap()),
            IntegralSearch::Found(_) => panic!("2c = 1 has no solution in 𝔽₂"),
        }
        assert!(!is_linearly_reductive(&h).unwrap());
    }

    #[test]
    fn mu_p_is_linearly_reductive_alpha_p_is_not() {
        let f3 = FieldSpec::prime(3).unwrap();
        let mu3 = Arc::new(make_standard(&StandardHopf::MuN(3), f3).unwrap());
        assert!(is_linearly_reductive(&mu3).unwrap());
        let f2 = FieldSpec::prime(2).unwrap();
        let a2 = Arc::new(make_standard(&StandardHopf::AlphaP, f2).unwrap());
        assert!(!is_linearly_reductive(&a2).unwrap());
    }

    #[test]
    fn four_verdicts_agree_on_small_cases() {
        for p in [2u64, 3, 5] {
            let h = oc2(FieldSpec::prime(p).unwrap());
            let reg = ComoduleAlgebra::regular(h.clone()).unwrap();
            let rep = equivalence_report(&reg, &[], &[]).unwrap();
            assert_eq!(rep.agreement, Agreement::Agree(true));
            let triv = ComoduleAlgebra::ground(h.clone());
            let rep = equivalence_report(&triv, core::slice::from_ref(&h), &[]).unwrap();
            assert_eq!(rep.agreement, Agreement::Agree(p != 2), "p = {p}");
        }
    }
}

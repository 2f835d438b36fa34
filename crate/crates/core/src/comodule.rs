//! Right comodules, comodule algebras and (B, A)-modules.
//!
//! A coaction `ρ : M → M ⊗ A` is an `(m·n) × m` matrix; `mₖ ⊗ aₗ` sits at
//! row `k·n + l`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{basis_vector, Algebra};
use crate::error::{dim_check, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, Quotient, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComoduleLaw {
    Coassociativity,
    Counitality,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    coaction: Matrix,
}

impl Comodule {
    /// Checked constructor.
    pub fn new(hopf: Arc<HopfAlgebra>, coaction: Matrix) -> Result<Comodule> {
        let c = Self::new_unchecked(hopf, coaction)?;
        let bad = c.failed_laws();
        if let Some(law) = bad.first() {
            return Err(Error::InvalidStructure(format!("comodule fails {law:?}")));
        }
        Ok(c)
    }

    /// Shape checks only.
    pub fn new_unchecked(hopf: Arc<HopfAlgebra>, coaction: Matrix) -> Result<Comodule> {
        if coaction.field() != hopf.field {
            return Err(Error::FieldMismatch);
        }
        let m = coaction.cols();
        dim_check("coaction rows", m * hopf.dim, coaction.rows())?;
        Ok(Comodule {
            hopf,
            dim: m,
            coaction,
        })
    }

    pub fn failed_laws(&self) -> Vec<ComoduleLaw> {
        let f = self.field();
        let (m, n) = (self.dim, self.hopf.dim);
        let mut out = Vec::new();
        let mut coassoc = true;
        let mut counit = true;
        for j in 0..m {
            let v = self.coaction.column(j);
            // (ρ ⊗ id)ρ and (id ⊗ δ)ρ, both in M ⊗ A ⊗ A
            let mut left = vec![f.zero(); m * n * n];
            let mut right = vec![f.zero(); m * n * n];
            let mut back = vec![f.zero(); m];
            for k in 0..m {
                for l in 0..n {
                    let c = &v[k * n + l];
                    if f.is_zero(c) {
                        continue;
                    }
                    for k2 in 0..m {
                        for l2 in 0..n {
                            let r = self.coaction.get(k2 * n + l2, k);
                            if !f.is_zero(r) {
                                let idx = (k2 * n + l2) * n + l;
                                left[idx] = f.add(&left[idx], &f.mul(c, r));
                            }
                        }
                    }
                    for t in 0..n * n {
                        let d = self.hopf.comult.get(t, l);
                        if !f.is_zero(d) {
                            let idx = k * n * n + t;
                            right[idx] = f.add(&right[idx], &f.mul(c, d));
                        }
                    }
                    back[k] = f.add(&back[k], &f.mul(c, &self.hopf.counit[l]));
                }
            }
            coassoc &= left == right;
            counit &= back == basis_vector(f, m, j);
        }
        if !coassoc {
            out.push(ComoduleLaw::Coassociativity);
        }
        if !counit {
            out.push(ComoduleLaw::Counitality);
        }
        out
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn field(&self) -> FieldSpec {
        self.hopf.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn coact(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.coaction.apply(v)
    }

    /// `ρ(v) = v ⊗ 1`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, dim: usize) -> Comodule {
        let coaction = trivial_coaction(&hopf, dim);
        Comodule {
            hopf,
            dim,
            coaction,
        }
    }

    /// `A` coacting on itself through `δ`.
    pub fn regular(hopf: Arc<HopfAlgebra>) -> Comodule {
        let coaction = hopf.comult.clone();
        Comodule {
            dim: hopf.dim,
            hopf,
            coaction,
        }
    }

    /// `M*` with `ρ(eᵏ) = Σ c[(k,l), j] eʲ ⊗ S(aₗ)` where `ρ(eⱼ) = Σ c[(k,l), j] eₖ ⊗ aₗ`.
    pub fn dual(&self) -> Result<Comodule> {
        let f = self.field();
        let (m, n) = (self.dim, self.hopf.dim);
        let s = &self.hopf.antipode;
        let mut rho = Matrix::zeros(f, m * n, m);
        for k in 0..m {
            for j in 0..m {
                for l in 0..n {
                    let c = self.coaction.get(k * n + l, j);
                    if f.is_zero(c) {
                        continue;
                    }
                    for l2 in 0..n {
                        let sv = s.get(l2, l);
                        if !f.is_zero(sv) {
                            rho.add_at(j * n + l2, k, &f.mul(c, sv));
                        }
                    }
                }
            }
        }
        Comodule::new(self.hopf.clone(), rho)
    }

    /// `M ⊗ N` with `ρ(m ⊗ n) = m₀ ⊗ n₀ ⊗ m₁n₁`.
    pub fn tensor(&self, other: &Comodule) -> Result<Comodule> {
        if self.hopf != other.hopf {
            return Err(Error::HopfMismatch);
        }
        let f = self.field();
        let (m, m2, n) = (self.dim, other.dim, self.hopf.dim);
        let mult = &self.hopf.mult;
        let mut rho = Matrix::zeros(f, m * m2 * n, m * m2);
        for i in 0..m {
            for j in 0..m2 {
                let col = i * m2 + j;
                for k in 0..m {
                    for l in 0..n {
                        let a = self.coaction.get(k * n + l, i);
                        if f.is_zero(a) {
                            continue;
                        }
                        for k2 in 0..m2 {
                            for l2 in 0..n {
                                let b = other.coaction.get(k2 * n + l2, j);
                                if f.is_zero(b) {
                                    continue;
                                }
                                let ab = f.mul(a, b);
                                for t in 0..n {
                                    let c = mult.get(t, l * n + l2);
                                    if !f.is_zero(c) {
                                        rho.add_at((k * m2 + k2) * n + t, col, &f.mul(&ab, c));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Comodule {
            hopf: self.hopf.clone(),
            dim: m * m2,
            coaction: rho,
        })
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.hopf != other.hopf {
            return Err(Error::HopfMismatch);
        }
        let f = self.field();
        let (m, m2, n) = (self.dim, other.dim, self.hopf.dim);
        let mut rho = Matrix::zeros(f, (m + m2) * n, m + m2);
        for j in 0..m {
            for r in 0..m * n {
                rho.set(r, j, self.coaction.get(r, j).clone());
            }
        }
        for j in 0..m2 {
            for r in 0..m2 * n {
                rho.set(m * n + r, m + j, other.coaction.get(r, j).clone());
            }
        }
        Ok(Comodule {
            hopf: self.hopf.clone(),
            dim: m + m2,
            coaction: rho,
        })
    }

    /// Kernel of `ρ − (v ↦ v ⊗ 1)`.
    pub fn invariants(&self) -> Subspace {
        let d = self
            .coaction
            .sub(&trivial_coaction(&self.hopf, self.dim))
            .expect("same shape");
        Subspace::from_basis(d.kernel()).expect("kernel basis is independent")
    }

    /// Whether `ρ(W) ⊆ W ⊗ A`.
    pub fn is_subcomodule(&self, sub: &Subspace) -> bool {
        (0..sub.dim()).all(|i| {
            let v = self.coact(&sub.vector(i)).expect("shape");
            leg_vectors(&v, self.dim, self.hopf.dim).iter().all(|w| sub.contains(w))
        })
    }

    /// The coaction restricted to a subcomodule, in the subspace's basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Comodule> {
        let n = self.hopf.dim;
        let f = self.field();
        let d = sub.dim();
        let mut rho = Matrix::zeros(f, d * n, d);
        for j in 0..d {
            let v = self.coact(&sub.vector(j))?;
            for (l, w) in leg_vectors(&v, self.dim, n).iter().enumerate() {
                let c = sub
                    .coordinates(w)?
                    .ok_or_else(|| Error::InvalidStructure("subspace is not a subcomodule".into()))?;
                for (k, x) in c.into_iter().enumerate() {
                    rho.set(k * n + l, j, x);
                }
            }
        }
        Comodule::new_unchecked(self.hopf.clone(), rho)
    }

    /// Coaction induced on `M / W` through the quotient's section and projection.
    pub fn quotient(&self, q: &Quotient) -> Result<Comodule> {
        let n = self.hopf.dim;
        let pa = q.projection.kron(&Matrix::identity(self.field(), n))?;
        let rho = pa.mul(&self.coaction)?.mul(&q.section)?;
        Comodule::new_unchecked(self.hopf.clone(), rho)
    }

    /// The smallest subcomodule containing `v`: the span of the `M`-legs of `ρ(v)`.
    pub fn generated_by(&self, v: &[Scalar]) -> Result<Subspace> {
        let legs = leg_vectors(&self.coact(v)?, self.dim, self.hopf.dim);
        Ok(Subspace::span(&Matrix::from_columns(self.field(), self.dim, &legs)))
    }

    /// `(g ⊗ id) ∘ ρ_M = ρ_N ∘ g` for `g : self → target`.
    pub fn is_morphism_to(&self, target: &Comodule, g: &Matrix) -> Result<bool> {
        if self.hopf != target.hopf {
            return Err(Error::HopfMismatch);
        }
        dim_check("comodule map rows", target.dim, g.rows())?;
        dim_check("comodule map cols", self.dim, g.cols())?;
        let ga = g.kron(&Matrix::identity(self.field(), self.hopf.dim))?;
        Ok(ga.mul(&self.coaction)? == target.coaction.mul(g)?)
    }

    pub fn extend_to(&self, hopf: Arc<HopfAlgebra>) -> Result<Comodule> {
        let coaction = self.coaction.extend_to(hopf.field)?;
        Comodule::new_unchecked(hopf, coaction)
    }
}

/// `v ↦ v ⊗ 1_A` as an `(m·n) × m` matrix.
pub fn trivial_coaction(hopf: &HopfAlgebra, m: usize) -> Matrix {
    let f = hopf.field;
    let n = hopf.dim;
    let mut t = Matrix::zeros(f, m * n, m);
    for j in 0..m {
        for l in 0..n {
            t.set(j * n + l, j, hopf.unit[l].clone());
        }
    }
    t
}

/// For `x ∈ M ⊗ A`, the vectors `x_l ∈ M` with `x = Σ x_l ⊗ aₗ`.
pub fn leg_vectors(x: &[Scalar], m: usize, n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|l| (0..m).map(|k| x[k * n + l].clone()).collect()).collect()
}

/// Basis of `Com_A(M, N)`, each map an `dim N × dim M` matrix.
pub fn comodule_homs(m: &Comodule, n: &Comodule) -> Result<Vec<Matrix>> {
    let sys = hom_system(m, n)?;
    let f = m.field();
    Ok(sys
        .kernel()
        .columns()
        .into_iter()
        .map(|v| Matrix::from_data(f, n.dim, m.dim, v).expect("shape"))
        .collect())
}

/// The homogeneous system whose solutions are the row-major vectorisations of
/// comodule maps `M → N`.
pub fn hom_system(m: &Comodule, n: &Comodule) -> Result<Matrix> {
    if m.hopf != n.hopf {
        return Err(Error::HopfMismatch);
    }
    let f = m.field();
    let (dm, dn, na) = (m.dim, n.dim, m.hopf.dim);
    let mut sys = Matrix::zeros(f, dn * na * dm, dn * dm);
    for ip in 0..dn {
        for l in 0..na {
            for j in 0..dm {
                let row = (ip * na + l) * dm + j;
                for i in 0..dn {
                    let c = n.coaction.get(ip * na + l, i);
                    if !f.is_zero(c) {
                        sys.add_at(row, i * dm + j, c);
                    }
                }
                for k in 0..dm {
                    let c = m.coaction.get(k * na + l, j);
                    if !f.is_zero(c) {
                        sys.add_at(row, ip * dm + k, &f.neg(c));
                    }
                }
            }
        }
    }
    Ok(sys)
}

/// An algebra `B` with a coaction that is a unital algebra morphism, and its
/// invariant subalgebra `C = B^A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    algebra: Algebra,
    comodule: Comodule,
    invariants: Subspace,
    invariant_algebra: Algebra,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Algebra, comodule: Comodule) -> Result<ComoduleAlgebra> {
        if algebra.field != comodule.field() {
            return Err(Error::FieldMismatch);
        }
        dim_check("comodule algebra dimension", algebra.dim, comodule.dim)?;
        if let Some(law) = algebra.failed_laws().first() {
            return Err(Error::InvalidStructure(format!("algebra fails {law:?}")));
        }
        if let Some(law) = comodule.failed_laws().first() {
            return Err(Error::InvalidStructure(format!("coaction fails {law:?}")));
        }
        let a = comodule.hopf.algebra();
        let f = algebra.field;
        let b = algebra.dim;
        let rho = |v: &[Scalar]| comodule.coact(v).expect("shape");
        let one_one = crate::algebra::kron_vec(f, &algebra.unit, &comodule.hopf.unit);
        if rho(&algebra.unit) != one_one {
            return Err(Error::InvalidStructure("coaction is not unital".into()));
        }
        for i in 0..b {
            for j in i..b {
                let lhs = rho(&algebra.mult.column(i * b + j));
                let rhs = crate::algebra::tensor_mul(&algebra, &a, &rho(&algebra.basis(i)), &rho(&algebra.basis(j)));
                if lhs != rhs {
                    return Err(Error::InvalidStructure("coaction is not multiplicative".into()));
                }
            }
        }
        let invariants = comodule.invariants();
        let labels = (0..invariants.dim()).map(|i| format!("c{i}")).collect();
        let invariant_algebra = algebra
            .subalgebra(&invariants, labels)
            .map_err(|e| Error::InvariantBreach(format!("invariants are not a subalgebra: {e}")))?;
        Ok(ComoduleAlgebra {
            algebra,
            comodule,
            invariants,
            invariant_algebra,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.comodule.hopf
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn coaction(&self) -> &Matrix {
        &self.comodule.coaction
    }

    /// `C = B^A` as a subspace of `B`; its basis matrix is the inclusion.
    pub fn invariants(&self) -> &Subspace {
        &self.invariants
    }

    /// Structure constants of `C` in the basis of [`Self::invariants`].
    pub fn invariant_algebra(&self) -> &Algebra {
        &self.invariant_algebra
    }

    /// `B` with trivial coaction.
    pub fn trivial(hopf: Arc<HopfAlgebra>, algebra: Algebra) -> Result<ComoduleAlgebra> {
        let c = Comodule::trivial(hopf, algebra.dim);
        ComoduleAlgebra::new(algebra, c)
    }

    /// The ground field with its trivial coaction.
    pub fn ground(hopf: Arc<HopfAlgebra>) -> ComoduleAlgebra {
        let f = hopf.field;
        let k = Algebra::functions_on(f, vec![String::from("1")]);
        ComoduleAlgebra::trivial(hopf, k).expect("the ground field is a comodule algebra")
    }

    /// `A` coacting on itself.
    pub fn regular(hopf: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
        let a = hopf.algebra();
        ComoduleAlgebra::new(a, Comodule::regular(hopf))
    }

    pub fn extend_to(&self, hopf: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
        let algebra = self.algebra.extend_to(hopf.field)?;
        let comodule = self.comodule.extend_to(hopf)?;
        ComoduleAlgebra::new(algebra, comodule)
    }
}

/// Base change of the whole action along `k → k'`.
pub fn extend_scalars(b: &ComoduleAlgebra, target: FieldSpec) -> Result<ComoduleAlgebra> {
    let base = b.field();
    if !target.extends(&base) {
        return Err(Error::CharacteristicMismatch(format!("{target} is not an extension of {base}")));
    }
    if target == base {
        return Ok(b.clone());
    }
    let hopf = Arc::new(b.hopf().extend_to(target)?);
    b.extend_to(hopf)
}

/// A module over `B` in the category of `A`-comodules with `ρ(b·n) = ρ(b)·ρ(n)`.
/// `action` is `dim N × (dim B · dim N)`, column `i·dim N + j` is `bᵢ·nⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BAModule {
    base: Arc<ComoduleAlgebra>,
    comodule: Comodule,
    action: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BAModuleLaw {
    Coaction(ComoduleLaw),
    Unital,
    Associative,
    /// `ρ(b·n) = ρ(b)·ρ(n)`.
    Compatibility,
}

impl BAModule {
    pub fn new(base: Arc<ComoduleAlgebra>, comodule: Comodule, action: Matrix) -> Result<BAModule> {
        let m = Self::new_unchecked(base, comodule, action)?;
        if let Some(law) = m.failed_laws().first() {
            return Err(Error::InvalidStructure(format!("(B, A)-module fails {law:?}")));
        }
        Ok(m)
    }

    pub fn new_unchecked(base: Arc<ComoduleAlgebra>, comodule: Comodule, action: Matrix) -> Result<BAModule> {
        if comodule.hopf() != base.hopf() {
            return Err(Error::HopfMismatch);
        }
        dim_check("module action rows", comodule.dim, action.rows())?;
        dim_check("module action cols", base.dim() * comodule.dim, action.cols())?;
        Ok(BAModule {
            base,
            comodule,
            action,
        })
    }

    pub fn failed_laws(&self) -> Vec<BAModuleLaw> {
        let mut out: Vec<BAModuleLaw> = self.comodule.failed_laws().into_iter().map(BAModuleLaw::Coaction).collect();
        let b = self.base.algebra();
        let (nb, nn) = (b.dim, self.dim());
        let f = self.field();
        if (0..nn).any(|j| self.act(&b.unit, &basis_vector(f, nn, j)) != basis_vector(f, nn, j)) {
            out.push(BAModuleLaw::Unital);
        }
        let assoc = (0..nb).all(|i| {
            (0..nb).all(|k| {
                (0..nn).all(|j| {
                    let ej = basis_vector(f, nn, j);
                    self.act(&b.mult.column(i * nb + k), &ej) == self.act(&b.basis(i), &self.act(&b.basis(k), &ej))
                })
            })
        });
        if !assoc {
            out.push(BAModuleLaw::Associative);
        }
        let compatible = (0..nb).all(|i| {
            let rb = self.base.comodule().coact(&b.basis(i)).expect("shape");
            (0..nn).all(|j| {
                let ej = basis_vector(f, nn, j);
                let lhs = self.comodule.coact(&self.act(&b.basis(i), &ej)).expect("shape");
                let rhs = self.act_tensor(&rb, &self.comodule.coact(&ej).expect("shape"));
                lhs == rhs
            })
        });
        if !compatible {
            out.push(BAModuleLaw::Compatibility);
        }
        out
    }

    /// `B` as a module over itself.
    pub fn regular(base: Arc<ComoduleAlgebra>) -> BAModule {
        let comodule = base.comodule().clone();
        let action = base.algebra().mult.clone();
        BAModule {
            base,
            comodule,
            action,
        }
    }

    /// `B ⊗ V` with `b·(b' ⊗ v) = bb' ⊗ v` and the tensor coaction.
    pub fn free(base: Arc<ComoduleAlgebra>, v: &Comodule) -> Result<BAModule> {
        let comodule = base.comodule().tensor(v)?;
        let b = base.algebra();
        let f = b.field;
        let (nb, nv) = (b.dim, v.dim());
        let nn = nb * nv;
        let mut action = Matrix::zeros(f, nn, nb * nn);
        for i in 0..nb {
            for j in 0..nb {
                for s in 0..nb {
                    let c = b.mult.get(s, i * nb + j);
                    if f.is_zero(c) {
                        continue;
                    }
                    for t in 0..nv {
                        action.set(s * nv + t, i * nn + j * nv + t, c.clone());
                    }
                }
            }
        }
        Ok(BAModule {
            base,
            comodule,
            action,
        })
    }

    pub fn base(&self) -> &Arc<ComoduleAlgebra> {
        &self.base
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.comodule.hopf()
    }

    pub fn field(&self) -> FieldSpec {
        self.comodule.field()
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn act(&self, b: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let (nb, nn) = (self.base.dim(), self.dim());
        let mut out = vec![f.zero(); nn];
        for i in 0..nb {
            if f.is_zero(&b[i]) {
                continue;
            }
            for j in 0..nn {
                if f.is_zero(&n[j]) {
                    continue;
                }
                let c = f.mul(&b[i], &n[j]);
                for (r, o) in out.iter_mut().enumerate() {
                    let a = self.action.get(r, i * nn + j);
                    if !f.is_zero(a) {
                        *o = f.add(o, &f.mul(&c, a));
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by `b` as a `dim N × dim N` matrix.
    pub fn act_matrix(&self, b: &[Scalar]) -> Matrix {
        let f = self.field();
        let nn = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..nn).map(|j| self.act(b, &basis_vector(f, nn, j))).collect();
        Matrix::from_columns(f, nn, &cols)
    }

    /// `(b ⊗ a)·(n ⊗ a') = (b·n) ⊗ aa'` extended bilinearly to `(B⊗A) × (N⊗A) → N⊗A`.
    pub fn act_tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let (nb, nn, na) = (self.base.dim(), self.dim(), self.hopf().dim);
        let mult = &self.hopf().mult;
        let mut out = vec![f.zero(); nn * na];
        for i in 0..nb {
            for p in 0..na {
                let xv = &x[i * na + p];
                if f.is_zero(xv) {
                    continue;
                }
                for j in 0..nn {
                    for q in 0..na {
                        let yv = &y[j * na + q];
                        if f.is_zero(yv) {
                            continue;
                        }
                        let c = f.mul(xv, yv);
                        for s in 0..nn {
                            let am = self.action.get(s, i * nn + j);
                            if f.is_zero(am) {
                                continue;
                            }
                            let cs = f.mul(&c, am);
                            for t in 0..na {
                                let hm = mult.get(t, p * na + q);
                                if !f.is_zero(hm) {
                                    let idx = s * na + t;
                                    out[idx] = f.add(&out[idx], &f.mul(&cs, hm));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn invariants(&self) -> Subspace {
        self.comodule.invariants()
    }

    /// The action of each basis element of `C` on `N^A`, in the basis of `invariants`.
    pub fn invariant_action(&self, inv: &Subspace) -> Result<Vec<Matrix>> {
        let c = self.base.invariants();
        (0..c.dim())
            .map(|i| {
                let l = self.act_matrix(&c.vector(i)).mul(inv.basis())?;
                inv.coordinates_of(&l)
            })
            .collect()
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        let nb = self.base.dim();
        let f = self.field();
        self.comodule.is_subcomodule(sub)
            && (0..nb).all(|i| {
                let e = basis_vector(f, nb, i);
                (0..sub.dim()).all(|j| sub.contains(&self.act(&e, &sub.vector(j))))
            })
    }

    /// The smallest (B, A)-submodule containing every vector in `gens`.
    pub fn generated_by(&self, gens: &[Vec<Scalar>]) -> Result<Subspace> {
        let f = self.field();
        let (nb, nn) = (self.base.dim(), self.dim());
        let mut cur = Subspace::span(&Matrix::from_columns(f, nn, gens));
        loop {
            let mut cols: Vec<Vec<Scalar>> = (0..cur.dim()).map(|i| cur.vector(i)).collect();
            for i in 0..cur.dim() {
                let v = cur.vector(i);
                cols.extend(leg_vectors(&self.comodule.coact(&v)?, nn, self.hopf().dim));
                for k in 0..nb {
                    cols.push(self.act(&basis_vector(f, nb, k), &v));
                }
            }
            let next = Subspace::span(&Matrix::from_columns(f, nn, &cols));
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// The submodule on `sub` together with its inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Result<(BAModule, Matrix)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidStructure("subspace is not a (B, A)-submodule".into()));
        }
        let comodule = self.comodule.restrict(sub)?;
        let f = self.field();
        let (nb, d) = (self.base.dim(), sub.dim());
        let mut action = Matrix::zeros(f, d, nb * d);
        for i in 0..nb {
            let e = basis_vector(f, nb, i);
            for j in 0..d {
                let c = sub.coordinates(&self.act(&e, &sub.vector(j)))?.expect("closed");
                action.set_column(i * d + j, &c);
            }
        }
        let m = BAModule::new_unchecked(self.base.clone(), comodule, action)?;
        Ok((m, sub.basis().clone()))
    }

    /// `N / W` together with the projection.
    pub fn quotient(&self, sub: &Subspace) -> Result<(BAModule, Matrix)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidStructure("subspace is not a (B, A)-submodule".into()));
        }
        let q = Quotient::new(sub);
        let comodule = self.comodule.quotient(&q)?;
        let f = self.field();
        let nb = self.base.dim();
        let ib = Matrix::identity(f, nb);
        let action = q.projection.mul(&self.action)?.mul(&ib.kron(&q.section)?)?;
        let m = BAModule::new_unchecked(self.base.clone(), comodule, action)?;
        Ok((m, q.projection))
    }

    /// Whether `h : self → target` is `B`-linear and a comodule map.
    pub fn is_morphism_to(&self, target: &BAModule, h: &Matrix) -> Result<bool> {
        if self.base != target.base {
            return Err(Error::InvalidStructure("modules over different comodule algebras".into()));
        }
        if !self.comodule.is_morphism_to(&target.comodule, h)? {
            return Ok(false);
        }
        let nb = self.base.dim();
        let f = self.field();
        for i in 0..nb {
            let e = basis_vector(f, nb, i);
            if h.mul(&self.act_matrix(&e))? != target.act_matrix(&e).mul(h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Both sides of `(B ⊗ M*)^A ≅ Com_A(M, B)` and whether the comparison map
/// `b ⊗ f ↦ [m ↦ f(m)·b]` carries one onto the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotensorReport {
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub iso_verified: bool,
}

/// In coordinates the comparison map is the identity: `bₓ ⊗ eᵏ` sits at
/// index `x·m + k`, which is the row-major slot of the matrix entry `(x, k)`.
pub fn cotensor_compare(b: &ComoduleAlgebra, m: &Comodule) -> Result<CotensorReport> {
    if b.hopf() != m.hopf() {
        return Err(Error::HopfMismatch);
    }
    let lhs = b.comodule().tensor(&m.dual()?)?.invariants();
    let homs = comodule_homs(m, b.comodule())?;
    let f = b.field();
    let cols: Vec<Vec<Scalar>> = homs.iter().map(|g| g.data().to_vec()).collect();
    let rhs = Subspace::span(&Matrix::from_columns(f, b.dim() * m.dim(), &cols));
    Ok(CotensorReport {
        lhs_dim: lhs.dim(),
        rhs_dim: rhs.dim(),
        iso_verified: lhs.same_as(&rhs),
    })
}

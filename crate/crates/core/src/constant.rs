//! Actions of abstract finite groups on products of local algebras.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{basis_vector, Algebra};
use crate::artinian::lifted_primitive_idempotents;
use crate::comodule::{Comodule, ComoduleAlgebra};
use crate::error::{dim_check, Error, Result};
use crate::field::Scalar;
use crate::geometry::{galois_map, inertia_hopf, is_torsor, Point, TorsorCertificate};
use crate::group::FiniteGroup;
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, Subspace};
use crate::tameness::{is_linearly_reductive, total_integral};

/// One local factor `e·B` with residue map `q : B → k(𝔭)`, `q(e) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactor {
    pub idempotent: Vec<Scalar>,
    pub point: Point,
}

/// Γ acting on `B` by algebra automorphisms, left action: `matrices[γ]` is `b ↦ γ·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaAction {
    group: FiniteGroup,
    algebra: Algebra,
    matrices: Vec<Matrix>,
    factors: Vec<LocalFactor>,
    /// `permutation[γ][i] = j` when `γ·eᵢ = eⱼ`.
    permutation: Vec<Vec<usize>>,
}

impl GammaAction {
    /// Builds the full action from generator images and validates everything.
    pub fn from_generators(
        group: FiniteGroup,
        algebra: Algebra,
        generators: &[(usize, Matrix)],
        factors: Vec<LocalFactor>,
    ) -> Result<GammaAction> {
        let f = algebra.field;
        let n = group.order();
        let mut mats: Vec<Option<Matrix>> = vec![None; n];
        mats[group.identity()] = Some(Matrix::identity(f, algebra.dim));
        let mut queue = vec![group.identity()];
        while let Some(g) = queue.pop() {
            for (s, m) in generators {
                if *s >= n {
                    return Err(Error::InvalidStructure(format!("generator index {s} out of range")));
                }
                let gs = group.mul(g, *s);
                if mats[gs].is_none() {
                    mats[gs] = Some(mats[g].as_ref().expect("visited").mul(m)?);
                    queue.push(gs);
                }
            }
        }
        let matrices = mats
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidStructure("generators do not generate the group".into()))?;
        GammaAction::new(group, algebra, matrices, factors)
    }

    pub fn new(group: FiniteGroup, algebra: Algebra, matrices: Vec<Matrix>, factors: Vec<LocalFactor>) -> Result<GammaAction> {
        check_automorphisms(&group, &algebra, &matrices)?;
        let b = &algebra;
        if factors.is_empty() {
            return Err(Error::InvalidStructure("no local factors".into()));
        }
        let mut sum = b.zero();
        for (i, fa) in factors.iter().enumerate() {
            dim_check("idempotent length", b.dim, fa.idempotent.len())?;
            let e = &fa.idempotent;
            if !b.is_idempotent(e) || b.is_zero(e) {
                return Err(Error::InvalidStructure(format!("factor {i}: not a nonzero idempotent")));
            }
            for other in &factors[i + 1..] {
                if !b.is_zero(&b.mul(e, &other.idempotent)) {
                    return Err(Error::InvalidStructure(format!("factor {i}: idempotents not orthogonal")));
                }
            }
            sum = b.add(&sum, e);
            let p = Point::new(b, fa.point.label.clone(), fa.point.residue, fa.point.quotient.clone())?;
            if !fa.point.residue.is_one(&p.eval(b, e)?) {
                return Err(Error::InvalidStructure(format!("factor {i}: residue map does not see its idempotent")));
            }
            // e·B is local iff e·B ∩ ker q is nilpotent
            let local = Subspace::span(&b.left_mult(e));
            let m = intersect(&local, &p.ideal(b))?;
            if !b.ideal_is_nilpotent(&m) {
                return Err(Error::InvalidStructure(format!("factor {i}: factor algebra is not local")));
            }
        }
        if sum != b.unit {
            return Err(Error::InvalidStructure("idempotents do not sum to 1".into()));
        }
        let mut permutation = Vec::with_capacity(group.order());
        for m in &matrices {
            let mut perm = Vec::with_capacity(factors.len());
            for fa in &factors {
                let image = m.apply(&fa.idempotent)?;
                let j = factors
                    .iter()
                    .position(|g| g.idempotent == image)
                    .ok_or_else(|| Error::InvalidStructure("Γ does not permute the factor idempotents".into()))?;
                perm.push(j);
            }
            permutation.push(perm);
        }
        Ok(GammaAction {
            group,
            algebra,
            matrices,
            factors,
            permutation,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn factors(&self) -> &[LocalFactor] {
        &self.factors
    }

    /// `γ·eᵢ = e_{permutation(γ)[i]}`.
    pub fn permutation(&self, g: usize) -> &[usize] {
        &self.permutation[g]
    }

    pub fn fixed_points(&self) -> Subspace {
        fixed_points(&self.algebra, self.group.elements().map(|g| &self.matrices[g]))
    }

    pub fn hopf(&self) -> HopfAlgebra {
        HopfAlgebra::function_algebra(&self.group, self.algebra.field)
    }
}

fn check_automorphisms(group: &FiniteGroup, algebra: &Algebra, matrices: &[Matrix]) -> Result<()> {
    if let Some(law) = algebra.failed_laws().first() {
        return Err(Error::InvalidStructure(format!("algebra fails {law:?}")));
    }
    dim_check("automorphism count", group.order(), matrices.len())?;
    for (g, m) in matrices.iter().enumerate() {
        if m.field() != algebra.field {
            return Err(Error::FieldMismatch);
        }
        if !algebra.is_endomorphism(m) || m.inverse().is_none() {
            return Err(Error::InvalidStructure(format!("{} does not act by an automorphism", group.label(g))));
        }
    }
    if matrices[group.identity()] != Matrix::identity(algebra.field, algebra.dim) {
        return Err(Error::InvalidStructure("identity acts nontrivially".into()));
    }
    for a in group.elements() {
        for b in group.elements() {
            if matrices[group.mul(a, b)] != matrices[a].mul(&matrices[b])? {
                return Err(Error::InvalidStructure("action is not a homomorphism".into()));
            }
        }
    }
    Ok(())
}

fn fixed_points<'a>(algebra: &Algebra, mats: impl Iterator<Item = &'a Matrix>) -> Subspace {
    let f = algebra.field;
    let n = algebra.dim;
    let id = Matrix::identity(f, n);
    let mut stacked = Matrix::zeros(f, 0, n);
    for m in mats {
        stacked = stacked.vstack(&m.sub(&id).expect("square")).expect("same width");
    }
    Subspace::from_basis(stacked.kernel()).expect("kernel basis")
}

fn intersect(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    let f = u.field();
    // u·x = w·y
    let neg = w.basis().scale(&f.neg(&f.one()));
    let k = u.basis().hstack(&neg)?.kernel();
    let top: Vec<usize> = (0..u.dim()).collect();
    let xs = k.select_rows(&top);
    Ok(Subspace::span(&u.basis().mul(&xs)?))
}

/// `ρ(b) = Σ_γ (γ·b) ⊗ e_γ` over `Map(Γ, k)`; the invariants are the fixed points.
pub fn coaction_from_automorphisms(group: &FiniteGroup, algebra: &Algebra, matrices: &[Matrix]) -> Result<ComoduleAlgebra> {
    check_automorphisms(group, algebra, matrices)?;
    let f = algebra.field;
    let (nb, n) = (algebra.dim, group.order());
    let hopf = Arc::new(HopfAlgebra::function_algebra(group, f));
    let mut rho = Matrix::zeros(f, nb * n, nb);
    for (g, m) in matrices.iter().enumerate() {
        for k in 0..nb {
            for j in 0..nb {
                rho.set(k * n + g, j, m.get(k, j).clone());
            }
        }
    }
    let comodule = Comodule::new(hopf, rho)?;
    ComoduleAlgebra::new(algebra.clone(), comodule)
}

pub fn coaction_from_group_action(ga: &GammaAction) -> Result<ComoduleAlgebra> {
    coaction_from_automorphisms(&ga.group, &ga.algebra, &ga.matrices)
}

/// Reads `γ ↦ (b ↦ γ·b)` back off a coaction over `Map(Γ, k)`.
pub fn automorphisms_from_coaction(b: &ComoduleAlgebra, order: usize) -> Result<Vec<Matrix>> {
    dim_check("group order", order, b.hopf().dim)?;
    let nb = b.dim();
    let rho = b.coaction();
    Ok((0..order)
        .map(|g| Matrix::from_fn(b.field(), nb, nb, |k, j| rho.get(k * order + g, j).clone()))
        .collect())
}

/// `Γ₀(𝔭) = {γ : γ·e = e and q∘γ = q}`, sorted.
pub fn inertia_at(ga: &GammaAction, factor: usize) -> Result<Vec<usize>> {
    let fa = ga
        .factors
        .get(factor)
        .ok_or_else(|| Error::InvalidStructure(format!("no factor {factor}")))?;
    let b = &ga.algebra;
    let mut out = Vec::new();
    for g in ga.group.elements() {
        if ga.permutation[g][factor] != factor {
            continue;
        }
        let m = &ga.matrices[g];
        let mut trivial = true;
        for j in 0..b.dim {
            trivial &= fa.point.eval(b, &m.column(j))? == fa.point.quotient[j];
        }
        if trivial {
            out.push(g);
        }
    }
    ga.group.subgroup(&out).map_err(|_| Error::InvariantBreach("inertia is not a subgroup".into()))
}

/// Tameness at a prime by the arithmetic criterion, and by linear reductivity
/// of `Map(Γ₀, k(𝔭))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameAt {
    pub inertia: Vec<usize>,
    pub characteristic: u64,
    pub tame: bool,
    pub linearly_reductive: bool,
}

pub fn tame_at(ga: &GammaAction, factor: usize) -> Result<TameAt> {
    let inertia = inertia_at(ga, factor)?;
    let k = ga.factors[factor].point.residue;
    let p = k.characteristic();
    let tame = p == 0 || !(inertia.len() as u64).is_multiple_of(p);
    let sub = ga.group.restrict(&inertia)?;
    let h = Arc::new(HopfAlgebra::function_algebra(&sub, k));
    Ok(TameAt {
        inertia,
        characteristic: p,
        tame,
        linearly_reductive: is_linearly_reductive(&h)?,
    })
}

/// Whether the inertia group scheme computed from the coaction is
/// `Map(Γ₀(𝔭), k(𝔭))`, matching kept basis vectors `e_γ` element by element.
pub fn inertia_agrees(ga: &GammaAction, factor: usize) -> Result<bool> {
    let b = coaction_from_group_action(ga)?;
    let inertia = inertia_at(ga, factor)?;
    let point = &ga.factors[factor].point;
    let k = point.residue;
    let computed = inertia_hopf(&b, point)?;
    let expected = HopfAlgebra::function_algebra(&ga.group.restrict(&inertia)?, k);
    if computed.hopf.dim != expected.dim {
        return Ok(false);
    }
    let mut map = Matrix::zeros(k, expected.dim, expected.dim);
    for (i, g) in computed.kept.iter().enumerate() {
        match inertia.iter().position(|h| h == g) {
            Some(j) => map.set(j, i, k.one()),
            None => return Ok(false),
        }
    }
    computed.hopf.is_isomorphism(&expected, &map)
}

/// Some `b` with `Σ_γ γ·b = 1`, the canonical solution of the linear system.
pub fn trace_tame(ga: &GammaAction) -> Result<Option<Vec<Scalar>>> {
    let f = ga.algebra.field;
    let n = ga.algebra.dim;
    let mut tr = Matrix::zeros(f, n, n);
    for m in &ga.matrices {
        tr = tr.add(m)?;
    }
    tr.solve_affine(&ga.algebra.unit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityReport {
    pub transitive: bool,
    /// Orbits of Γ on the factors.
    pub orbits: Vec<Vec<usize>>,
    /// Whether `C` has a single primitive idempotent; the orbit sums are its
    /// primitive idempotents.
    pub invariants_local: bool,
}

pub fn transitivity_check(ga: &GammaAction) -> TransitivityReport {
    let r = ga.factors.len();
    let mut seen = vec![false; r];
    let mut orbits = Vec::new();
    for i in 0..r {
        if seen[i] {
            continue;
        }
        let orbit: BTreeSet<usize> = ga.group.elements().map(|g| ga.permutation[g][i]).collect();
        for &j in &orbit {
            seen[j] = true;
        }
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
    }
    TransitivityReport {
        transitive: orbits.len() == 1,
        invariants_local: orbits.len() == 1,
        orbits,
    }
}

/// Extends scalars to the residue field `K`, splitting each factor into its
/// `K`-points `σ∘q` for `σ` running over the Frobenius powers. All residue
/// fields must be the base field or one common extension.
pub fn split_residues(ga: &GammaAction) -> Result<GammaAction> {
    let k = ga.algebra.field;
    let mut target = k;
    for fa in &ga.factors {
        let r = fa.point.residue;
        if r != k {
            if target != k && target != r {
                return Err(Error::ResidueFieldUnsupported("factors have different residue fields".into()));
            }
            target = r;
        }
    }
    if target == k {
        return Ok(ga.clone());
    }
    let q = k.order().ok_or_else(|| Error::ResidueFieldUnsupported(format!("{target} over {k}")))?;
    let degree = target.degree() / k.degree();
    let b = ga.algebra.extend_to(target)?;
    let mats = ga.matrices.iter().map(|m| m.extend_to(target)).collect::<Result<Vec<_>>>()?;
    let idempotents = lifted_primitive_idempotents(&b)?;
    let mut factors: Vec<LocalFactor> = Vec::new();
    for fa in &ga.factors {
        let mut conj = fa
            .point
            .quotient
            .iter()
            .map(|x| fa.point.residue.embed(&target, x))
            .collect::<Result<Vec<_>>>()?;
        for j in 0..degree {
            if factors.iter().any(|g| g.point.quotient == conj) {
                break;
            }
            let label = if j == 0 {
                fa.point.label.clone()
            } else {
                format!("{}^F{j}", fa.point.label)
            };
            let point = Point::new(&b, label, target, conj.clone())?;
            let mut found = None;
            for e in &idempotents {
                if target.is_one(&point.eval(&b, e)?) {
                    found = Some(e.clone());
                }
            }
            let idempotent = found.ok_or_else(|| Error::InvariantBreach("point without an idempotent".into()))?;
            factors.push(LocalFactor { idempotent, point });
            conj = conj.iter().map(|x| target.pow(x, q)).collect();
        }
    }
    GammaAction::new(ga.group.clone(), b, mats, factors)
}

/// The isomorphism `B ≅ Map^{Γ₀}(Γ, B_𝔭)` at one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceData {
    /// Set when scalars were first extended to the residue field because the
    /// stabiliser of the factor was larger than its inertia group.
    pub split_field: Option<crate::field::FieldSpec>,
    pub factor: usize,
    pub inertia: Vec<usize>,
    pub local_dim: usize,
    /// Basis of the slice algebra inside `⊕_γ B`, block `γ` at rows `γ·dim B ..`.
    pub slice: Subspace,
    /// `b ↦ (γ ↦ e·(γ⁻¹·b))` into `⊕_γ B`.
    pub phi: Matrix,
    /// `phi` in the coordinates of `slice`; square.
    pub phi_coordinates: Matrix,
    pub bijective: bool,
    pub algebra_morphism: bool,
    pub equivariant: bool,
    /// `c ↦ e·c` maps `C` isomorphically onto `B_𝔭^{Γ₀}`.
    pub invariants_iso: bool,
}

impl SliceData {
    pub fn verified(&self) -> bool {
        self.bijective && self.algebra_morphism && self.equivariant && self.invariants_iso
    }
}

pub fn slice_decompose(ga: &GammaAction, factor: usize) -> Result<SliceData> {
    if !transitivity_check(ga).transitive {
        return Err(Error::NotTransitive);
    }
    let inertia = inertia_at(ga, factor)?;
    let stabiliser = ga.group.elements().filter(|&g| ga.permutation[g][factor] == factor).count();
    if stabiliser != inertia.len() {
        let split = split_residues(ga)?;
        let target = split.algebra.field;
        if target == ga.algebra.field {
            return Err(Error::InvariantBreach("stabiliser exceeds inertia over the residue field".into()));
        }
        let fa = &ga.factors[factor];
        let q = fa
            .point
            .quotient
            .iter()
            .map(|x| fa.point.residue.embed(&target, x))
            .collect::<Result<Vec<_>>>()?;
        let index = split
            .factors
            .iter()
            .position(|g| g.point.quotient == q)
            .ok_or_else(|| Error::InvariantBreach("factor lost after splitting".into()))?;
        let mut data = slice_decompose(&split, index)?;
        data.split_field = Some(target);
        return Ok(data);
    }
    let g = &ga.group;
    let b = &ga.algebra;
    let f = b.field;
    let (nb, ng) = (b.dim, g.order());
    let e = &ga.factors[factor].idempotent;
    let le = b.left_mult(e);
    let local = Subspace::span(&le);
    let id = Matrix::identity(f, nb);

    // u(γ) ∈ e·B and u(γi) = i⁻¹·u(γ)
    let total = ng * nb;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let not_e = id.sub(&le)?;
    for gamma in g.elements() {
        for r in 0..nb {
            let mut row = vec![f.zero(); total];
            for c in 0..nb {
                row[gamma * nb + c] = not_e.get(r, c).clone();
            }
            rows.push(row);
        }
        for &i in &inertia {
            let gi = g.mul(gamma, i);
            let act = &ga.matrices[g.inv(i)];
            for r in 0..nb {
                let mut row = vec![f.zero(); total];
                row[gi * nb + r] = f.add(&row[gi * nb + r], &f.one());
                for c in 0..nb {
                    let idx = gamma * nb + c;
                    row[idx] = f.sub(&row[idx], act.get(r, c));
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(f, rows)?;
    let slice = Subspace::from_basis(sys.kernel())?;

    let mut phi = Matrix::zeros(f, total, nb);
    for gamma in g.elements() {
        let block = le.mul(&ga.matrices[g.inv(gamma)])?;
        for r in 0..nb {
            for c in 0..nb {
                phi.set(gamma * nb + r, c, block.get(r, c).clone());
            }
        }
    }
    let phi_coordinates = slice.coordinates_of(&phi)?;
    let bijective = phi_coordinates.is_square() && phi_coordinates.inverse().is_some();

    let pointwise = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = Vec::with_capacity(total);
        for gamma in 0..ng {
            out.extend(b.mul(&u[gamma * nb..(gamma + 1) * nb], &v[gamma * nb..(gamma + 1) * nb]));
        }
        out
    };
    let mut algebra_morphism = true;
    for i in 0..nb {
        for j in i..nb {
            let lhs = phi.apply(&b.mult.column(i * nb + j))?;
            algebra_morphism &= lhs == pointwise(&phi.column(i), &phi.column(j));
        }
    }
    let phi_one: Vec<Scalar> = (0..ng).flat_map(|_| e.iter().cloned()).collect();
    algebra_morphism &= phi.apply(&b.unit)? == phi_one;

    // (λ·u)(γ) = u(λ⁻¹γ)
    let mut equivariant = true;
    for lambda in g.elements() {
        let shift = Matrix::from_fn(f, total, total, |r, c| {
            let (gamma, k) = (r / nb, r % nb);
            let src = g.mul(g.inv(lambda), gamma);
            if c == src * nb + k {
                f.one()
            } else {
                f.zero()
            }
        });
        equivariant &= shift.mul(&phi)? == phi.mul(&ga.matrices[lambda])?;
    }

    let c = ga.fixed_points();
    let image = le.mul(c.basis())?;
    let local_fixed = {
        let fixed = fixed_points(b, inertia.iter().map(|&i| &ga.matrices[i]));
        intersect(&fixed, &local)?
    };
    let invariants_iso = image.is_injective() && Subspace::span(&image).same_as(&local_fixed);

    Ok(SliceData {
        split_field: None,
        factor,
        inertia,
        local_dim: local.dim(),
        slice,
        phi,
        phi_coordinates,
        bijective,
        algebra_morphism,
        equivariant,
        invariants_iso,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFreenessReport {
    /// Factors with trivial inertia.
    pub trivial_inertia: Vec<usize>,
    /// `false` when no factor has trivial inertia, so there is nothing to check.
    pub applicable: bool,
    pub free: bool,
    pub galois_rank: usize,
    pub galois_target_dim: usize,
}

impl LocalFreenessReport {
    /// The implication "trivial inertia somewhere ⟹ free" holds.
    pub fn holds(&self) -> bool {
        !self.applicable || self.free
    }
}

pub fn local_freeness_check(ga: &GammaAction) -> Result<LocalFreenessReport> {
    if !transitivity_check(ga).transitive {
        return Err(Error::NotTransitive);
    }
    let mut trivial = Vec::new();
    for i in 0..ga.factors.len() {
        if inertia_at(ga, i)?.len() == 1 {
            trivial.push(i);
        }
    }
    let b = coaction_from_group_action(ga)?;
    let g = galois_map(&b)?;
    Ok(LocalFreenessReport {
        applicable: !trivial.is_empty(),
        trivial_inertia: trivial,
        free: g.absolute_rank == g.target_dim,
        galois_rank: g.absolute_rank,
        galois_target_dim: g.target_dim,
    })
}

/// `Γ₀(γ𝔭) = γ Γ₀(𝔭) γ⁻¹` for every factor and every γ.
pub fn inertia_conjugacy_holds(ga: &GammaAction) -> Result<bool> {
    for i in 0..ga.factors.len() {
        let base = inertia_at(ga, i)?;
        for g in ga.group.elements() {
            let j = ga.permutation[g][i];
            if inertia_at(ga, j)? != ga.group.conjugate(&base, g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTorsorReport {
    pub subgroup: Vec<usize>,
    pub quotient_order: usize,
    pub fixed_dim: usize,
    pub torsor: TorsorCertificate,
    /// Whether `H` is the inertia subgroup at every prime.
    pub subgroup_is_inertia: bool,
    /// Whether the original action of Γ is free.
    pub original_free: bool,
}

/// `B^H` with its `Γ/H`-action, for abelian Γ.
pub fn quotient_torsor_check(ga: &GammaAction, subgroup: &[usize]) -> Result<QuotientTorsorReport> {
    let g = &ga.group;
    let h = g.subgroup(subgroup)?;
    if !g.is_abelian() {
        return Err(Error::InvalidStructure("quotient torsor check needs an abelian group".into()));
    }
    let b = &ga.algebra;
    let fixed = fixed_points(b, h.iter().map(|&i| &ga.matrices[i]));
    let labels = (0..fixed.dim()).map(|i| format!("f{i}")).collect();
    let sub_alg = b.subalgebra(&fixed, labels)?;
    let (quot, proj) = g.quotient(&h)?;
    let mut mats = Vec::with_capacity(quot.order());
    for coset in 0..quot.order() {
        let rep = proj.iter().position(|&c| c == coset).expect("surjective");
        mats.push(fixed.coordinates_of(&ga.matrices[rep].mul(fixed.basis())?)?);
    }
    let action = coaction_from_automorphisms(&quot, &sub_alg, &mats)?;
    let torsor = is_torsor(&action)?;
    let mut subgroup_is_inertia = true;
    for i in 0..ga.factors.len() {
        subgroup_is_inertia &= inertia_at(ga, i)? == h;
    }
    let original = coaction_from_group_action(ga)?;
    let gm = galois_map(&original)?;
    Ok(QuotientTorsorReport {
        subgroup: h,
        quotient_order: quot.order(),
        fixed_dim: fixed.dim(),
        torsor,
        subgroup_is_inertia,
        original_free: gm.absolute_rank == gm.target_dim,
    })
}

/// Whether the trace witness and the total integral agree on tameness.
pub fn trace_agrees_with_integral(ga: &GammaAction) -> Result<bool> {
    let witness = trace_tame(ga)?;
    let b = coaction_from_group_action(ga)?;
    Ok(witness.is_some() == total_integral(&b)?.is_some())
}

/// The residue map `eᵢ ↦ [i = index]` of the `index`-th point of `Map(S, k)`.
pub fn point_of_functions(algebra: &Algebra, index: usize, label: String) -> Result<LocalFactor> {
    let f = algebra.field;
    let e = basis_vector(f, algebra.dim, index);
    let point = Point::new(algebra, label, f, e.clone())?;
    Ok(LocalFactor { idempotent: e, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn gauss(p: u64) -> GammaAction {
        let f = FieldSpec::prime(p).unwrap();
        let b = Algebra::polynomial_quotient(f, &[f.one(), f.zero(), f.one()], "x").unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let gamma = Matrix::from_i64(f, 2, 2, &[1, 0, 0, -1]);
        let factors = match p {
            2 => vec![LocalFactor {
                idempotent: b.one(),
                point: Point::new(&b, "(x+1)".into(), f, vec![f.one(), f.one()]).unwrap(),
            }],
            3 => {
                let k = FieldSpec::extension(3, &[1, 0, 1]).unwrap();
                let t = k.generator().unwrap();
                vec![LocalFactor {
                    idempotent: b.one(),
                    point: Point::new(&b, "(0)".into(), k, vec![k.one(), t]).unwrap(),
                }]
            }
            _ => vec![
                LocalFactor {
                    idempotent: vec![f.from_i64(3), f.from_i64(-1)],
                    point: Point::new(&b, "(x-2)".into(), f, vec![f.one(), f.from_i64(2)]).unwrap(),
                },
                LocalFactor {
                    idempotent: vec![f.from_i64(3), f.one()],
                    point: Point::new(&b, "(x-3)".into(), f, vec![f.one(), f.from_i64(3)]).unwrap(),
                },
            ],
        };
        GammaAction::from_generators(c2, b, &[(1, gamma)], factors).unwrap()
    }

    #[test]
    fn gauss_inertia() {
        assert_eq!(inertia_at(&gauss(2), 0).unwrap(), vec![0, 1]);
        assert_eq!(inertia_at(&gauss(3), 0).unwrap(), vec![0]);
        assert_eq!(inertia_at(&gauss(5), 0).unwrap(), vec![0]);
        assert_eq!(inertia_at(&gauss(5), 1).unwrap(), vec![0]);
    }

    #[test]
    fn gauss_trace() {
        assert_eq!(trace_tame(&gauss(2)).unwrap(), None);
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(trace_tame(&gauss(5)).unwrap(), Some(vec![f.from_i64(3), f.zero()]));
        for p in [2, 3, 5] {
            assert!(trace_agrees_with_integral(&gauss(p)).unwrap());
        }
    }

    #[test]
    fn gauss_slices() {
        for p in [2, 3, 5] {
            let ga = gauss(p);
            let s = slice_decompose(&ga, 0).unwrap();
            assert!(s.verified(), "p = {p}: {s:?}");
            let index = 2 / s.inertia.len();
            assert_eq!(2, index * s.local_dim);
            assert_eq!(s.split_field.is_some(), p == 3);
        }
    }

    #[test]
    fn inertia_hopf_matches_inertia_group() {
        for p in [2, 3, 5] {
            let ga = gauss(p);
            for i in 0..ga.factors().len() {
                assert!(inertia_agrees(&ga, i).unwrap(), "p = {p}, factor {i}");
            }
        }
    }

    #[test]
    fn coaction_round_trip() {
        let ga = gauss(5);
        let b = coaction_from_group_action(&ga).unwrap();
        assert_eq!(automorphisms_from_coaction(&b, 2).unwrap(), ga.matrices());
        assert_eq!(b.invariants().dim(), 1);
    }

    #[test]
    fn non_permuting_factors_rejected() {
        let f = FieldSpec::prime(5).unwrap();
        let b = Algebra::functions_on(f, vec!["a".into(), "b".into()]);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let swap = Matrix::from_i64(f, 2, 2, &[0, 1, 1, 0]);
        let one = LocalFactor {
            idempotent: b.one(),
            point: Point::new(&b, "a".into(), f, vec![f.one(), f.zero()]).unwrap(),
        };
        assert!(GammaAction::from_generators(c2, b, &[(1, swap)], vec![one]).is_err());
    }
}

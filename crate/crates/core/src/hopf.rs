//! Finite-dimensional Hopf algebras by structure constants.
//!
//! Tensor indices are row-major: the basis vector `eᵢ ⊗ eⱼ` of `A ⊗ A` sits at
//! `i·n + j`. `mult` is `n × n²`, `comult` is `n² × n`, `counit` is a row of
//! length `n`, `antipode` is `n × n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{basis_vector, kron_vec, Algebra};
use crate::error::{dim_check, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Vec<Scalar>,
    pub comult: Matrix,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub labels: Vec<String>,
}

/// The axiom families checked by [`validate_hopf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HopfAxiom {
    Associativity,
    Unitality,
    Commutativity,
    Coassociativity,
    Counitality,
    /// δ and ε are unital algebra morphisms.
    Bialgebra,
    Antipode,
}

impl HopfAxiom {
    pub fn name(&self) -> &'static str {
        match self {
            HopfAxiom::Associativity => "associativity",
            HopfAxiom::Unitality => "unitality",
            HopfAxiom::Commutativity => "commutativity",
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::Counitality => "counitality",
            HopfAxiom::Bialgebra => "bialgebra",
            HopfAxiom::Antipode => "antipode",
        }
    }
}

/// Failed axioms; empty iff the structure is a commutative Hopf algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<HopfAxiom>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn contains(&self, axiom: HopfAxiom) -> bool {
        self.failures.contains(&axiom)
    }
}

/// One tensor leg pair `(a₁, a₂)` with `δ(a) = Σ a₁ ⊗ a₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerTerm {
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerExpansion {
    pub terms: Vec<SweedlerTerm>,
}

impl SweedlerExpansion {
    /// `Σ left ⊗ right` as a vector of `A ⊗ A`.
    pub fn reassemble(&self, field: FieldSpec, dim: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim * dim];
        for t in &self.terms {
            for (o, v) in out.iter_mut().zip(kron_vec(field, &t.left, &t.right)) {
                *o = field.add(o, &v);
            }
        }
        out
    }
}

/// Named constructors from the standard catalogue.
#[derive(Clone, Debug)]
pub enum StandardHopf {
    /// `Map(Γ, k)`, the coordinate ring of the constant group scheme.
    FunctionAlgebra(FiniteGroup),
    /// `k[Γ]`; rejected unless Γ is abelian.
    GroupAlgebra(FiniteGroup),
    /// `k[x]/(xⁿ − 1)` with `x` grouplike.
    MuN(usize),
    /// `k[x]/(xᵖ)` with `x` primitive, `p` the characteristic.
    AlphaP,
}

/// Checks every axiom family; shape problems are reported as an `Err`,
/// distinct from axiom failures.
pub fn validate_hopf(h: &HopfAlgebra) -> Result<ValidationReport> {
    h.check_shapes()?;
    let mut failures = Vec::new();
    let f = h.field;
    let n = h.dim;
    let id = Matrix::identity(f, n);
    let unit = Matrix::column_vector(f, &h.unit);
    let counit = Matrix::from_data(f, 1, n, h.counit.clone())?;
    let m = &h.mult;
    let d = &h.comult;
    let s = &h.antipode;

    if m.mul(&m.kron(&id)?)? != m.mul(&id.kron(m)?)? {
        failures.push(HopfAxiom::Associativity);
    }
    if m.mul(&unit.kron(&id)?)? != id || m.mul(&id.kron(&unit)?)? != id {
        failures.push(HopfAxiom::Unitality);
    }
    if m.mul(&swap(f, n, n))? != *m {
        failures.push(HopfAxiom::Commutativity);
    }
    if d.kron(&id)?.mul(d)? != id.kron(d)?.mul(d)? {
        failures.push(HopfAxiom::Coassociativity);
    }
    if counit.kron(&id)?.mul(d)? != id || id.kron(&counit)?.mul(d)? != id {
        failures.push(HopfAxiom::Counitality);
    }
    // δ(xy) = δ(x)δ(y), δ(1) = 1⊗1, ε(xy) = ε(x)ε(y), ε(1) = 1
    let middle = id.kron(&swap(f, n, n))?.kron(&id)?;
    let delta_mult = d.mul(m)?;
    let mult_delta = m.kron(m)?.mul(&middle)?.mul(&d.kron(d)?)?;
    let bialgebra = delta_mult == mult_delta
        && d.mul(&unit)? == unit.kron(&unit)?
        && counit.mul(m)? == counit.kron(&counit)?
        && counit.mul(&unit)? == Matrix::identity(f, 1);
    if !bialgebra {
        failures.push(HopfAxiom::Bialgebra);
    }
    let eta_eps = unit.mul(&counit)?;
    if m.mul(&s.kron(&id)?)?.mul(d)? != eta_eps || m.mul(&id.kron(s)?)?.mul(d)? != eta_eps {
        failures.push(HopfAxiom::Antipode);
    }
    Ok(ValidationReport { failures })
}

/// `τ : V ⊗ W → W ⊗ V` for `dim V = m`, `dim W = n`.
pub fn swap(field: FieldSpec, m: usize, n: usize) -> Matrix {
    let mut t = Matrix::zeros(field, m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            t.set(j * m + i, i * n + j, field.one());
        }
    }
    t
}

/// Expansion of `δ(a)` with one pair per nonzero basis-tensor coefficient.
pub fn sweedler_expand(h: &HopfAlgebra, a: &[Scalar]) -> Result<SweedlerExpansion> {
    let da = h.comultiply(a)?;
    let f = h.field;
    let n = h.dim;
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = &da[i * n + j];
            if f.is_zero(c) {
                continue;
            }
            let mut left = vec![f.zero(); n];
            left[i] = c.clone();
            terms.push(SweedlerTerm {
                left,
                right: basis_vector(f, n, j),
            });
        }
    }
    Ok(SweedlerExpansion { terms })
}

/// Builds one of the standard Hopf algebras over `field`.
pub fn make_standard(spec: &StandardHopf, field: FieldSpec) -> Result<HopfAlgebra> {
    let h = match spec {
        StandardHopf::FunctionAlgebra(g) => HopfAlgebra::function_algebra(g, field),
        StandardHopf::GroupAlgebra(g) => {
            if !g.is_abelian() {
                return Err(Error::NonCommutative);
            }
            HopfAlgebra::group_algebra_record(g, field)
        }
        StandardHopf::MuN(n) => {
            if *n == 0 {
                return Err(Error::InvalidStructure("mu_0 is not finite".into()));
            }
            let mut h = HopfAlgebra::group_algebra_record(&FiniteGroup::cyclic(*n)?, field);
            h.labels = (0..*n)
                .map(|i| match i {
                    0 => String::from("1"),
                    1 => String::from("x"),
                    i => format!("x^{i}"),
                })
                .collect();
            h
        }
        StandardHopf::AlphaP => HopfAlgebra::alpha_p(field)?,
    };
    let report = validate_hopf(&h)?;
    if !report.is_valid() {
        return Err(Error::InvariantBreach(format!(
            "standard constructor produced an invalid Hopf algebra: {:?}",
            report.failures
        )));
    }
    Ok(h)
}

/// The linear dual with transposed structure maps, and its validation report
/// with commutativity left out (the dual of a commutative Hopf algebra is
/// cocommutative, not necessarily commutative).
#[derive(Clone, Debug)]
pub struct DualHopf {
    pub hopf: HopfAlgebra,
    pub report: ValidationReport,
}

pub fn dual_hopf(h: &HopfAlgebra) -> Result<DualHopf> {
    h.check_shapes()?;
    let dual = HopfAlgebra {
        field: h.field,
        dim: h.dim,
        mult: h.comult.transpose(),
        unit: h.counit.clone(),
        comult: h.mult.transpose(),
        counit: h.unit.clone(),
        antipode: h.antipode.transpose(),
        labels: h.labels.iter().map(|l| format!("{l}*")).collect(),
    };
    let mut report = validate_hopf(&dual)?;
    report.failures.retain(|a| *a != HopfAxiom::Commutativity);
    Ok(DualHopf { hopf: dual, report })
}

impl HopfAlgebra {
    fn check_shapes(&self) -> Result<()> {
        let n = self.dim;
        dim_check("unit length", n, self.unit.len())?;
        dim_check("counit length", n, self.counit.len())?;
        dim_check("labels", n, self.labels.len())?;
        dim_check("multiplication rows", n, self.mult.rows())?;
        dim_check("multiplication cols", n * n, self.mult.cols())?;
        dim_check("comultiplication rows", n * n, self.comult.rows())?;
        dim_check("comultiplication cols", n, self.comult.cols())?;
        dim_check("antipode rows", n, self.antipode.rows())?;
        dim_check("antipode cols", n, self.antipode.cols())?;
        for m in [&self.mult, &self.comult, &self.antipode] {
            if m.field() != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        for x in self.unit.iter().chain(&self.counit) {
            self.field.check(x)?;
        }
        Ok(())
    }

    /// Validated constructor for raw structure constants.
    pub fn new(
        field: FieldSpec,
        mult: Matrix,
        unit: Vec<Scalar>,
        comult: Matrix,
        counit: Vec<Scalar>,
        antipode: Matrix,
        labels: Vec<String>,
    ) -> Result<Self> {
        let h = HopfAlgebra {
            field,
            dim: unit.len(),
            mult,
            unit,
            comult,
            counit,
            antipode,
            labels,
        };
        let report = validate_hopf(&h)?;
        if report.contains(HopfAxiom::Commutativity) && report.failures.len() == 1 {
            return Err(Error::NonCommutative);
        }
        if !report.is_valid() {
            let names: Vec<&str> = report.failures.iter().map(HopfAxiom::name).collect();
            return Err(Error::InvalidStructure(format!("Hopf axioms fail: {}", names.join(", "))));
        }
        Ok(h)
    }

    pub fn function_algebra(g: &FiniteGroup, field: FieldSpec) -> HopfAlgebra {
        let n = g.order();
        let mut comult = Matrix::zeros(field, n * n, n);
        for a in g.elements() {
            for b in g.elements() {
                comult.set(a * n + b, g.mul(a, b), field.one());
            }
        }
        let mut antipode = Matrix::zeros(field, n, n);
        for a in g.elements() {
            antipode.set(g.inv(a), a, field.one());
        }
        let alg = Algebra::functions_on(field, g.labels().iter().map(|l| format!("e_{l}")).collect());
        HopfAlgebra {
            field,
            dim: n,
            mult: alg.mult,
            unit: alg.unit,
            comult,
            counit: basis_vector(field, n, g.identity()),
            antipode,
            labels: alg.labels,
        }
    }

    /// `k[Γ]` without the commutativity gate; only the dual/semisimplicity
    /// reporting path should need the non-abelian case.
    pub fn group_algebra_record(g: &FiniteGroup, field: FieldSpec) -> HopfAlgebra {
        let n = g.order();
        let mut mult = Matrix::zeros(field, n, n * n);
        let mut comult = Matrix::zeros(field, n * n, n);
        let mut antipode = Matrix::zeros(field, n, n);
        for a in g.elements() {
            for b in g.elements() {
                mult.set(g.mul(a, b), a * n + b, field.one());
            }
            comult.set(a * n + a, a, field.one());
            antipode.set(g.inv(a), a, field.one());
        }
        HopfAlgebra {
            field,
            dim: n,
            mult,
            unit: basis_vector(field, n, g.identity()),
            comult,
            counit: vec![field.one(); n],
            antipode,
            labels: g.labels().to_vec(),
        }
    }

    fn alpha_p(field: FieldSpec) -> Result<HopfAlgebra> {
        let p = field.characteristic();
        if p == 0 {
            return Err(Error::CharacteristicMismatch(
                "alpha_p needs positive characteristic".into(),
            ));
        }
        let p = p as usize;
        if p > 64 {
            return Err(Error::InvalidStructure("alpha_p supported for p ≤ 64".into()));
        }
        let mut modulus = vec![field.zero(); p + 1];
        modulus[p] = field.one();
        let alg = Algebra::polynomial_quotient(field, &modulus, "x")?;
        // δ(xⁱ) = Σⱼ C(i, j) xʲ ⊗ x^{i−j}
        let mut comult = Matrix::zeros(field, p * p, p);
        let mut binom = vec![1u64];
        for i in 0..p {
            for (j, c) in binom.iter().enumerate() {
                let v = field.from_i64((*c % p as u64) as i64);
                if !field.is_zero(&v) {
                    comult.set(j * p + (i - j), i, v);
                }
            }
            let mut next = vec![1u64; i + 2];
            for j in 1..=i {
                next[j] = (binom[j - 1] + binom[j]) % p as u64;
            }
            binom = next;
        }
        let mut antipode = Matrix::zeros(field, p, p);
        for i in 0..p {
            antipode.set(i, i, field.from_i64(if i % 2 == 0 { 1 } else { -1 }));
        }
        Ok(HopfAlgebra {
            field,
            dim: p,
            mult: alg.mult,
            unit: alg.unit,
            comult,
            counit: basis_vector(field, p, 0),
            antipode,
            labels: alg.labels,
        })
    }

    /// The underlying algebra (mult and unit only).
    pub fn algebra(&self) -> Algebra {
        Algebra {
            field: self.field,
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra().mul(x, y)
    }

    pub fn comultiply(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        self.comult.apply(a)
    }

    pub fn apply_antipode(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        self.antipode.apply(a)
    }

    pub fn apply_counit(&self, a: &[Scalar]) -> Scalar {
        let f = self.field;
        a.iter()
            .zip(&self.counit)
            .fold(f.zero(), |acc, (x, e)| f.add(&acc, &f.mul(x, e)))
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field, self.dim, i)
    }

    pub fn extend_to(&self, target: FieldSpec) -> Result<HopfAlgebra> {
        let src = self.field;
        let embed = |v: &[Scalar]| v.iter().map(|x| src.embed(&target, x)).collect::<Result<Vec<_>>>();
        Ok(HopfAlgebra {
            field: target,
            dim: self.dim,
            mult: self.mult.extend_to(target)?,
            unit: embed(&self.unit)?,
            comult: self.comult.extend_to(target)?,
            counit: embed(&self.counit)?,
            antipode: self.antipode.extend_to(target)?,
            labels: self.labels.clone(),
        })
    }

    /// Whether the invertible `map : self → other` intertwines every structure map.
    pub fn is_isomorphism(&self, other: &HopfAlgebra, map: &Matrix) -> Result<bool> {
        if self.field != other.field || self.dim != other.dim {
            return Ok(false);
        }
        if map.rows() != self.dim || map.cols() != self.dim || map.inverse().is_none() {
            return Ok(false);
        }
        let f = self.field;
        let pp = map.kron(map)?;
        Ok(map.mul(&self.mult)? == other.mult.mul(&pp)?
            && map.apply(&self.unit)? == other.unit
            && pp.mul(&self.comult)? == other.comult.mul(map)?
            && Matrix::from_data(f, 1, self.dim, other.counit.clone())?.mul(map)?.row(0) == self.counit.as_slice()
            && map.mul(&self.antipode)? == other.antipode.mul(map)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn catalogue_constructors_validate() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for k in [f(2), f(3), f(5), FieldSpec::Rationals] {
            for g in [&c2, &s3] {
                let h = make_standard(&StandardHopf::FunctionAlgebra(g.clone()), k).unwrap();
                assert_eq!(h.dim, g.order());
            }
            make_standard(&StandardHopf::MuN(3), k).unwrap();
        }
        make_standard(&StandardHopf::AlphaP, f(2)).unwrap();
        make_standard(&StandardHopf::AlphaP, f(3)).unwrap();
    }

    #[test]
    fn zero_antipode_fails_antipode_law() {
        let mut h = HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f(5));
        h.antipode = Matrix::zeros(h.field, 2, 2);
        let r = validate_hopf(&h).unwrap();
        assert_eq!(r.failures, vec![HopfAxiom::Antipode]);
    }

    #[test]
    fn shape_error_is_distinct() {
        let mut h = HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f(5));
        h.antipode = Matrix::zeros(h.field, 3, 2);
        assert!(matches!(validate_hopf(&h), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn alpha_p_needs_characteristic() {
        assert!(matches!(
            make_standard(&StandardHopf::AlphaP, FieldSpec::Rationals),
            Err(Error::CharacteristicMismatch(_))
        ));
    }

    #[test]
    fn nonabelian_group_algebra_rejected() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(matches!(
            make_standard(&StandardHopf::GroupAlgebra(s3.clone()), f(5)),
            Err(Error::NonCommutative)
        ));
        let rec = HopfAlgebra::group_algebra_record(&s3, f(5));
        assert_eq!(validate_hopf(&rec).unwrap().failures, vec![HopfAxiom::Commutativity]);
    }

    #[test]
    fn sweedler_of_identity_idempotent() {
        let h = HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f(5));
        let exp = sweedler_expand(&h, &h.basis(0)).unwrap();
        assert_eq!(exp.terms.len(), 2);
        assert_eq!(exp.terms[0].left, h.basis(0));
        assert_eq!(exp.terms[0].right, h.basis(0));
        assert_eq!(exp.terms[1].left, h.basis(1));
        assert_eq!(exp.terms[1].right, h.basis(1));
    }

    #[test]
    fn mu3_generator_is_grouplike() {
        let h = make_standard(&StandardHopf::MuN(3), f(7)).unwrap();
        let exp = sweedler_expand(&h, &h.basis(1)).unwrap();
        assert_eq!(exp.terms.len(), 1);
        assert_eq!(exp.terms[0].left, h.basis(1));
        assert_eq!(exp.terms[0].right, h.basis(1));
    }

    #[test]
    fn dual_of_function_algebra_is_group_algebra() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let h = HopfAlgebra::function_algebra(&c2, f(5));
        let d = dual_hopf(&h).unwrap();
        assert!(d.report.is_valid());
        let g = HopfAlgebra::group_algebra_record(&c2, f(5));
        assert_eq!(d.hopf.mult, g.mult);
        assert_eq!(d.hopf.comult, g.comult);
        assert_eq!(d.hopf.unit, g.unit);
        assert_eq!(d.hopf.counit, g.counit);
        assert_eq!(d.hopf.antipode, g.antipode);
    }
}

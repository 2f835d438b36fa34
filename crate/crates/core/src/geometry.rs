//! Galois maps, freeness, torsors and inertia at points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{kron_vec, tensor_mul, Algebra};
use crate::artinian::FreenessReport;
use crate::comodule::ComoduleAlgebra;
use crate::error::{dim_check, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{validate_hopf, HopfAlgebra};
use crate::matrix::{Matrix, Quotient, Subspace};
use crate::tameness::free_over_invariants;

/// A maximal ideal of `B` given by a surjective algebra map `q : B → K`.
/// `quotient[i] = q(eᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub label: String,
    pub residue: FieldSpec,
    pub quotient: Vec<Scalar>,
}

impl Point {
    /// Checks that `q` is a unital, multiplicative surjection onto `residue`.
    pub fn new(b: &Algebra, label: String, residue: FieldSpec, quotient: Vec<Scalar>) -> Result<Point> {
        check_residue(b.field, residue)?;
        dim_check("residue map length", b.dim, quotient.len())?;
        for x in &quotient {
            residue.check(x)?;
        }
        let p = Point {
            label,
            residue,
            quotient,
        };
        if !residue.is_one(&p.eval(b, &b.unit)?) {
            return Err(Error::InvalidStructure(format!("{}: residue map is not unital", p.label)));
        }
        for i in 0..b.dim {
            for j in i..b.dim {
                let lhs = p.eval(b, &b.mult.column(i * b.dim + j))?;
                if lhs != residue.mul(&p.quotient[i], &p.quotient[j]) {
                    return Err(Error::InvalidStructure(format!("{}: residue map is not multiplicative", p.label)));
                }
            }
        }
        let coords = p.coordinate_matrix(b);
        if coords.rank() != residue.degree() / b.field.degree() {
            return Err(Error::InvalidStructure(format!("{}: residue map is not surjective", p.label)));
        }
        Ok(p)
    }

    pub fn eval(&self, b: &Algebra, x: &[Scalar]) -> Result<Scalar> {
        let k = self.residue;
        let mut acc = k.zero();
        for (xi, qi) in x.iter().zip(&self.quotient) {
            if !b.field.is_zero(xi) {
                acc = k.add(&acc, &k.mul(&b.field.embed(&k, xi)?, qi));
            }
        }
        Ok(acc)
    }

    /// `q` as a matrix over the base field, rows indexed by a `k`-basis of `K`.
    fn coordinate_matrix(&self, b: &Algebra) -> Matrix {
        let k = b.field;
        if self.residue == k {
            return Matrix::from_data(k, 1, b.dim, self.quotient.clone()).expect("shape");
        }
        let d = self.residue.degree();
        let cols: Vec<Vec<Scalar>> = self.quotient.iter().map(|x| self.residue.prime_coordinates(x)).collect();
        Matrix::from_columns(k, d, &cols)
    }

    /// The maximal ideal `ker q` as a `k`-subspace of `B`.
    pub fn ideal(&self, b: &Algebra) -> Subspace {
        Subspace::from_basis(self.coordinate_matrix(b).kernel()).expect("kernel basis")
    }
}

/// Residue fields must equal the base field or extend the prime base field.
fn check_residue(base: FieldSpec, residue: FieldSpec) -> Result<()> {
    let ok = residue == base || (matches!(base, FieldSpec::Prime(_)) && residue.extends(&base));
    if ok {
        Ok(())
    } else {
        Err(Error::ResidueFieldUnsupported(format!("{residue} over {base}")))
    }
}

/// The Galois map `b ⊗ b' ↦ (b ⊗ 1)·ρ(b')` on `B ⊗ B`, and the relations
/// cutting out `B ⊗_C B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisMapData {
    /// `(dim B · dim A) × dim B²`.
    pub absolute: Matrix,
    /// `span{(bc) ⊗ b' − b ⊗ (cb')}` inside `B ⊗ B`.
    pub relations: Subspace,
    pub absolute_rank: usize,
    /// `dim B⊗_C B`.
    pub relative_source_dim: usize,
    pub target_dim: usize,
    /// Whether the map restricted to `b ⊗ 1` and `1 ⊗ b'` is multiplicative;
    /// with `ρ` multiplicative this makes the whole map an algebra morphism.
    pub algebra_morphism: bool,
}

pub fn galois_map(b: &ComoduleAlgebra) -> Result<GaloisMapData> {
    let alg = b.algebra();
    let a = b.hopf().algebra();
    let f = b.field();
    let (nb, na) = (b.dim(), a.dim);
    let rho = b.coaction();
    let mut abs = Matrix::zeros(f, nb * na, nb * nb);
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                let prod = alg.mult.column(i * nb + k);
                for l in 0..na {
                    let c = rho.get(k * na + l, j);
                    if f.is_zero(c) {
                        continue;
                    }
                    for (s, ps) in prod.iter().enumerate() {
                        if !f.is_zero(ps) {
                            abs.add_at(s * na + l, i * nb + j, &f.mul(c, ps));
                        }
                    }
                }
            }
        }
    }
    let one_a = &b.hopf().unit;
    let mut morphism = true;
    for i in 0..nb {
        let bi = alg.basis(i);
        let left = kron_vec(f, &bi, one_a);
        let right = b.comodule().coact(&bi)?;
        if abs.apply(&kron_vec(f, &bi, &alg.unit))? != left || abs.apply(&kron_vec(f, &alg.unit, &bi))? != right {
            morphism = false;
        }
        for j in 0..nb {
            let bj = alg.basis(j);
            let direct = abs.apply(&kron_vec(f, &bi, &bj))?;
            let split = tensor_mul(alg, &a, &kron_vec(f, &bi, one_a), &b.comodule().coact(&bj)?);
            morphism &= direct == split;
        }
    }
    let c = b.invariants();
    let mut rels = Vec::new();
    for t in 0..c.dim() {
        let ct = c.vector(t);
        for i in 0..nb {
            let left = alg.mul(&alg.basis(i), &ct);
            for j in 0..nb {
                let right = alg.mul(&ct, &alg.basis(j));
                let x = kron_vec(f, &left, &alg.basis(j));
                let y = kron_vec(f, &alg.basis(i), &right);
                rels.push(x.iter().zip(&y).map(|(u, v)| f.sub(u, v)).collect());
            }
        }
    }
    let relations = Subspace::span(&Matrix::from_columns(f, nb * nb, &rels));
    if !abs.mul(relations.basis())?.is_zero() {
        return Err(Error::InvariantBreach("Galois map does not factor through B⊗_C B".into()));
    }
    Ok(GaloisMapData {
        absolute_rank: abs.rank(),
        relative_source_dim: nb * nb - relations.dim(),
        target_dim: nb * na,
        absolute: abs,
        relations,
        algebra_morphism: morphism,
    })
}

/// The action is free iff the Galois map is surjective.
pub fn is_free(b: &ComoduleAlgebra) -> Result<bool> {
    Ok(galois_map(b)?.absolute.is_surjective())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsorCertificate {
    pub torsor: bool,
    pub flatness: FreenessReport,
    pub absolute_rank: usize,
    pub relative_source_dim: usize,
    pub target_dim: usize,
    pub relative_injective: bool,
    pub relative_surjective: bool,
    /// An element of `B ⊗ B` killed by the Galois map but nonzero in `B ⊗_C B`.
    pub kernel_witness: Option<Vec<Scalar>>,
    /// A functional on `B ⊗ A` vanishing on the image.
    pub cokernel_witness: Option<Vec<Scalar>>,
}

/// Torsor iff `B` is free of positive rank over `C` and `B ⊗_C B → B ⊗ A`
/// is bijective.
pub fn is_torsor(b: &ComoduleAlgebra) -> Result<TorsorCertificate> {
    let g = galois_map(b)?;
    let flatness = free_over_invariants(b)?;
    let kernel = Subspace::from_basis(g.absolute.kernel())?;
    let relative_injective = kernel.dim() == g.relations.dim();
    let relative_surjective = g.absolute_rank == g.target_dim;
    let kernel_witness = (0..kernel.dim()).map(|i| kernel.vector(i)).find(|v| !g.relations.contains(v));
    let cokernel_witness = if relative_surjective {
        None
    } else {
        let left = g.absolute.transpose().kernel();
        Some(left.column(0))
    };
    Ok(TorsorCertificate {
        torsor: flatness.free && relative_injective && relative_surjective,
        flatness,
        absolute_rank: g.absolute_rank,
        relative_source_dim: g.relative_source_dim,
        target_dim: g.target_dim,
        relative_injective,
        relative_surjective,
        kernel_witness,
        cokernel_witness,
    })
}

/// The coordinate ring of the inertia group scheme at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaHopf {
    pub point: Point,
    pub hopf: HopfAlgebra,
    /// Basis vectors of `A ⊗ K` kept as the basis of the quotient.
    pub kept: Vec<usize>,
    pub ideal_dim: usize,
}

/// `A_K` modulo the ideal generated by `(q ⊗ id)ρ(b) − q(b)·1` for `b ∈ B`.
pub fn inertia_hopf(b: &ComoduleAlgebra, point: &Point) -> Result<InertiaHopf> {
    let k = point.residue;
    check_residue(b.field(), k)?;
    let ak = b.hopf().extend_to(k)?;
    let alg = ak.algebra();
    let (nb, na) = (b.dim(), ak.dim);
    let rho = b.coaction();
    let base = b.field();
    let mut gens = Vec::with_capacity(nb);
    for j in 0..nb {
        let mut g = vec![k.zero(); na];
        for kk in 0..nb {
            for (l, slot) in g.iter_mut().enumerate() {
                let c = rho.get(kk * na + l, j);
                if !base.is_zero(c) {
                    *slot = k.add(slot, &k.mul(&base.embed(&k, c)?, &point.quotient[kk]));
                }
            }
        }
        for (slot, u) in g.iter_mut().zip(&ak.unit) {
            *slot = k.sub(slot, &k.mul(&point.quotient[j], u));
        }
        gens.push(g);
    }
    let ideal = alg.ideal_generated(&gens);
    let q = Quotient::new(&ideal);
    let p = &q.projection;
    let s = &q.section;
    let pp = p.kron(p)?;
    for i in 0..ideal.dim() {
        let v = ideal.vector(i);
        let hopf_ideal = pp.apply(&ak.comultiply(&v)?)?.iter().all(|x| k.is_zero(x))
            && k.is_zero(&ak.apply_counit(&v))
            && p.apply(&ak.apply_antipode(&v)?)?.iter().all(|x| k.is_zero(x));
        if !hopf_ideal {
            return Err(Error::InvariantBreach(format!("{}: inertia ideal is not a Hopf ideal", point.label)));
        }
    }
    let hopf = HopfAlgebra {
        field: k,
        dim: q.dim(),
        mult: p.mul(&ak.mult)?.mul(&s.kron(s)?)?,
        unit: p.apply(&ak.unit)?,
        comult: pp.mul(&ak.comult)?.mul(s)?,
        counit: s.transpose().apply(&ak.counit)?,
        antipode: p.mul(&ak.antipode)?.mul(s)?,
        labels: q.kept.iter().map(|&i| ak.labels[i].clone()).collect(),
    };
    let report = validate_hopf(&hopf)?;
    if !report.is_valid() {
        return Err(Error::InvariantBreach(format!(
            "{}: inertia quotient fails {:?}",
            point.label, report.failures
        )));
    }
    Ok(InertiaHopf {
        point: point.clone(),
        hopf,
        kept: q.kept,
        ideal_dim: ideal.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use alloc::sync::Arc;

    #[test]
    fn regular_action_is_free_torsor_with_trivial_inertia() {
        let f = FieldSpec::prime(5).unwrap();
        let h = Arc::new(HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f));
        let b = ComoduleAlgebra::regular(h).unwrap();
        let g = galois_map(&b).unwrap();
        assert_eq!(g.absolute_rank, 4);
        assert!(g.algebra_morphism);
        assert!(is_torsor(&b).unwrap().torsor);
        let pt = Point::new(b.algebra(), "e".into(), f, vec![f.one(), f.zero()]).unwrap();
        assert_eq!(inertia_hopf(&b, &pt).unwrap().hopf.dim, 1);
    }

    #[test]
    fn trivial_action_is_not_free() {
        let f = FieldSpec::prime(5).unwrap();
        let h = Arc::new(HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f));
        let b = ComoduleAlgebra::ground(h.clone());
        let g = galois_map(&b).unwrap();
        assert_eq!(g.absolute_rank, 1);
        let cert = is_torsor(&b).unwrap();
        assert!(!cert.torsor && cert.cokernel_witness.is_some());
        let pt = Point::new(b.algebra(), "pt".into(), f, vec![f.one()]).unwrap();
        let inertia = inertia_hopf(&b, &pt).unwrap();
        assert_eq!(inertia.hopf, *h);
    }

    #[test]
    fn bad_points_are_rejected() {
        let f = FieldSpec::prime(5).unwrap();
        let a = Algebra::functions_on(f, vec!["a".into(), "b".into()]);
        assert!(Point::new(&a, "p".into(), f, vec![f.one(), f.one()]).is_err());
        assert!(Point::new(&a, "p".into(), f, vec![f.from_i64(2), f.zero()]).is_err());
        let q = FieldSpec::Rationals;
        assert!(matches!(
            Point::new(&a, "p".into(), q, vec![q.one(), q.zero()]),
            Err(Error::ResidueFieldUnsupported(_))
        ));
    }
}

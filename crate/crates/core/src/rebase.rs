//! An action viewed over its ring of invariants.
//!
//! `B` is a comodule algebra over `C ⊗ A` relative to `C = B^A`, with the
//! same coaction matrix since `B ⊗_C (C ⊗ A) ≅ B ⊗ A`. A total integral over
//! `C` is a `C`-linear unital comodule map `C ⊗ A → B`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::comodule::{hom_system, Comodule, ComoduleAlgebra};
use crate::error::Result;
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::tameness::{total_integral_search, IntegralSearch, TotalIntegral};

/// `B` over `C`. The free `C`-module `C ⊗ A` has basis `cₖ ⊗ aₗ` at `k·dim A + l`.
#[derive(Clone, Debug)]
pub struct Rebased {
    base: Arc<ComoduleAlgebra>,
    /// Multiplication on `B` by each basis element of `C`.
    c_action: Vec<Matrix>,
    ca: Comodule,
}

pub fn rebase_to_invariants(b: &Arc<ComoduleAlgebra>) -> Result<Rebased> {
    let inv = b.invariants();
    let c_action = (0..inv.dim()).map(|k| b.algebra().left_mult(&inv.vector(k))).collect();
    let h = b.hopf().clone();
    let ca = Comodule::trivial(h.clone(), inv.dim()).tensor(&Comodule::regular(h))?;
    Ok(Rebased {
        base: b.clone(),
        c_action,
        ca,
    })
}

impl Rebased {
    pub fn base(&self) -> &Arc<ComoduleAlgebra> {
        &self.base
    }

    pub fn invariant_dim(&self) -> usize {
        self.c_action.len()
    }

    /// `C = k`: nothing changes.
    pub fn is_identity(&self) -> bool {
        self.invariant_dim() == 1
    }

    /// The coaction `B → B ⊗_C (C ⊗ A)`, written in the basis `B ⊗ A`.
    pub fn coaction(&self) -> &Matrix {
        self.base.coaction()
    }

    /// `C ⊗ A` with coaction `c ⊗ a ↦ c ⊗ a₁ ⊗ a₂`.
    pub fn scalar_extended_hopf_module(&self) -> &Comodule {
        &self.ca
    }

    /// The affine system for `C`-linear unital comodule maps `C ⊗ A → B`.
    /// Unknown `α[i, k·dim A + l]` sits at `i·(dim C·dim A) + k·dim A + l`.
    pub fn integral_system(&self) -> Result<(Matrix, Vec<Scalar>)> {
        let b = &*self.base;
        let f = b.field();
        let cdim = self.invariant_dim();
        let (nb, na) = (b.dim(), b.hopf().dim);
        let width = cdim * na;
        let homs = hom_system(&self.ca, b.comodule())?;
        let calg = b.invariant_algebra();
        // α(cᵢ·(cⱼ ⊗ aₗ)) = cᵢ·α(cⱼ ⊗ aₗ)
        let mut lin = Matrix::zeros(f, cdim * cdim * na * nb, nb * width);
        for i in 0..cdim {
            for j in 0..cdim {
                let prod = calg.mult.column(i * cdim + j);
                for l in 0..na {
                    for r in 0..nb {
                        let row = ((i * cdim + j) * na + l) * nb + r;
                        for (k, gk) in prod.iter().enumerate() {
                            if !f.is_zero(gk) {
                                lin.add_at(row, r * width + k * na + l, gk);
                            }
                        }
                        for s in 0..nb {
                            let m = self.c_action[i].get(r, s);
                            if !f.is_zero(m) {
                                lin.add_at(row, s * width + j * na + l, &f.neg(m));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = Matrix::zeros(f, nb, nb * width);
        for r in 0..nb {
            for k in 0..cdim {
                for l in 0..na {
                    let c = f.mul(&calg.unit[k], &b.hopf().unit[l]);
                    if !f.is_zero(&c) {
                        unit.set(r, r * width + k * na + l, c);
                    }
                }
            }
        }
        let sys = homs.vstack(&lin)?.vstack(&unit)?;
        let mut rhs = vec![f.zero(); homs.rows() + lin.rows()];
        rhs.extend(b.algebra().unit.iter().cloned());
        Ok((sys, rhs))
    }

    pub fn total_integral_search(&self) -> Result<IntegralSearch> {
        let (sys, rhs) = self.integral_system()?;
        let b = &*self.base;
        Ok(match sys.solve_or_certify(&rhs)? {
            Ok(v) => IntegralSearch::Found(TotalIntegral {
                alpha: Matrix::from_data(b.field(), b.dim(), self.invariant_dim() * b.hopf().dim, v)?,
            }),
            Err(y) => IntegralSearch::Infeasible { certificate: y },
        })
    }

    /// Whether `alpha` is a total integral over `C`.
    pub fn verify(&self, alpha: &Matrix) -> Result<bool> {
        let b = &*self.base;
        if alpha.rows() != b.dim() || alpha.cols() != self.invariant_dim() * b.hopf().dim {
            return Ok(false);
        }
        let (sys, rhs) = self.integral_system()?;
        Ok(sys.apply(alpha.data())? == rhs)
    }

    /// `α ↦ α ∘ i_A` with `i_A(a) = 1 ⊗ a`.
    pub fn restrict(&self, alpha: &Matrix) -> Result<TotalIntegral> {
        let b = &*self.base;
        let f = b.field();
        let na = b.hopf().dim;
        let one = &b.invariant_algebra().unit;
        let beta = Matrix::from_fn(f, b.dim(), na, |r, l| {
            one.iter().enumerate().fold(f.zero(), |acc, (k, u)| f.add(&acc, &f.mul(u, alpha.get(r, k * na + l))))
        });
        Ok(TotalIntegral { alpha: beta })
    }

    /// `β ↦ μ_C ∘ (id_C ⊗ β)`.
    pub fn extend(&self, beta: &TotalIntegral) -> Result<Matrix> {
        let b = &*self.base;
        let na = b.hopf().dim;
        let cdim = self.invariant_dim();
        let mut alpha = Matrix::zeros(b.field(), b.dim(), cdim * na);
        for k in 0..cdim {
            let block = self.c_action[k].mul(&beta.alpha)?;
            for l in 0..na {
                alpha.set_column(k * na + l, &block.column(l));
            }
        }
        Ok(alpha)
    }
}

/// Tameness decided over `k` and over `C` independently, with both
/// translations checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RebaseReport {
    pub invariant_dim: usize,
    pub tame_over_k: bool,
    pub tame_over_c: bool,
    /// The integral over `C` restricted along `i_A` is one over `k`.
    pub restricted_verified: Option<bool>,
    /// The integral over `k` extended by `μ_C` is one over `C`.
    pub extended_verified: Option<bool>,
}

impl RebaseReport {
    pub fn agree(&self) -> bool {
        self.tame_over_k == self.tame_over_c
            && self.restricted_verified != Some(false)
            && self.extended_verified != Some(false)
    }
}

pub fn rebase_check(b: &Arc<ComoduleAlgebra>) -> Result<RebaseReport> {
    let rebased = rebase_to_invariants(b)?;
    let over_k = total_integral_search(b)?;
    let over_c = rebased.total_integral_search()?;
    let restricted_verified = match over_c.integral() {
        Some(t) => Some(rebased.restrict(&t.alpha)?.verify(b)?),
        None => None,
    };
    let extended_verified = match over_k.integral() {
        Some(t) => Some(rebased.verify(&rebased.extend(t)?)?),
        None => None,
    };
    Ok(RebaseReport {
        invariant_dim: rebased.invariant_dim(),
        tame_over_k: over_k.integral().is_some(),
        tame_over_c: over_c.integral().is_some(),
        restricted_verified,
        extended_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::FieldSpec;
    use crate::group::FiniteGroup;
    use crate::hopf::HopfAlgebra;
    use alloc::string::String;

    fn c2(p: u64) -> Arc<HopfAlgebra> {
        let f = FieldSpec::prime(p).unwrap();
        Arc::new(HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), f))
    }

    #[test]
    fn regular_plus_trivial_is_tame_both_ways() {
        let h = c2(5);
        let reg = Comodule::regular(h.clone());
        let triv = Comodule::trivial(h.clone(), 1);
        let alg = Algebra::product(&[h.algebra(), Algebra::functions_on(h.field, vec![String::from("pt")])]).unwrap();
        let b = Arc::new(ComoduleAlgebra::new(alg, reg.direct_sum(&triv).unwrap()).unwrap());
        let r = rebase_check(&b).unwrap();
        assert_eq!(r.invariant_dim, 2);
        assert!(r.tame_over_k && r.tame_over_c);
        assert_eq!(r.restricted_verified, Some(true));
        assert_eq!(r.extended_verified, Some(true));
        assert!(r.agree());
    }

    #[test]
    fn trivial_in_bad_characteristic_fails_both_ways() {
        let h = c2(2);
        let f = h.field;
        let dual = Algebra::polynomial_quotient(f, &[f.zero(), f.zero(), f.one()], "x").unwrap();
        let b = Arc::new(ComoduleAlgebra::trivial(h, dual).unwrap());
        let r = rebase_check(&b).unwrap();
        assert_eq!(r.invariant_dim, 2);
        assert!(!r.tame_over_k && !r.tame_over_c);
        assert!(r.agree());
    }

    #[test]
    fn connected_invariants_rebase_trivially() {
        let h = c2(5);
        let b = Arc::new(ComoduleAlgebra::regular(h).unwrap());
        let rebased = rebase_to_invariants(&b).unwrap();
        assert!(rebased.is_identity());
        assert!(rebase_check(&b).unwrap().agree());
    }
}

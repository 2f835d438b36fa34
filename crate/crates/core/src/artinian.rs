//! Freeness of a finite module over a finite-dimensional commutative algebra.
//!
//! Over an Artinian ring `C` with Jacobson radical `J`, a finite module `M`
//! is free of rank `r` iff `M/JM` has rank `r` over every residue field of
//! `C/J` and `dim M = r · dim C`.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Matrix, Quotient, Subspace};

/// Evidence for or against freeness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub free: bool,
    /// The common rank when `M` is free.
    pub rank: Option<usize>,
    pub module_dim: usize,
    pub algebra_dim: usize,
    /// Dimension of the nilradical of `C`.
    pub radical_dim: usize,
    /// Per residue factor of `C/J`: `(dim eᵢ(M/JM), dim eᵢ(C/J))`.
    /// Empty over ℚ, where the trace test is used instead.
    pub factors: Vec<(usize, usize)>,
}

/// The nilradical of `c`.
pub fn nilradical(c: &Algebra) -> Result<Subspace> {
    let f = c.field;
    let n = c.dim;
    match f.order() {
        Some(q) => {
            // x ↦ x^q is 𝔽_q-linear; the nilradical is the kernel of a high enough power
            let cols: Vec<Vec<Scalar>> = (0..n).map(|i| c.pow(&c.basis(i), q)).collect();
            let frob = Matrix::from_columns(f, n, &cols);
            let mut power = frob.clone();
            let mut reach: u128 = q;
            while reach < n as u128 {
                power = power.mul(&frob)?;
                reach = reach.saturating_mul(q);
            }
            Subspace::from_basis(power.kernel())
        }
        None => {
            // characteristic 0: radical of the trace form
            let traces: Vec<Scalar> = (0..n * n).map(|k| trace(&c.left_mult(&c.mult.column(k)))).collect();
            let form = Matrix::from_data(f, n, n, traces)?;
            Subspace::from_basis(form.kernel())
        }
    }
}

fn trace(m: &Matrix) -> Scalar {
    let f = m.field();
    (0..m.rows()).fold(f.zero(), |acc, i| f.add(&acc, m.get(i, i)))
}

/// The quotient algebra `c / ideal` on the complement basis of [`Quotient`].
pub fn quotient_algebra(c: &Algebra, ideal: &Subspace) -> Result<(Algebra, Quotient)> {
    let q = Quotient::new(ideal);
    let mult = q.projection.mul(&c.mult)?.mul(&q.section.kron(&q.section)?)?;
    let unit = q.projection.apply(&c.unit)?;
    let labels = q.kept.iter().map(|&i| c.labels[i].clone()).collect();
    let alg = Algebra::new_unchecked(c.field, mult, unit, labels)?;
    Ok((alg, q))
}

/// Primitive idempotents of a reduced algebra over a finite field.
pub fn primitive_idempotents(reduced: &Algebra) -> Result<Vec<Vec<Scalar>>> {
    let f = reduced.field;
    let n = reduced.dim;
    let q = f
        .order()
        .ok_or_else(|| Error::CharacteristicMismatch("idempotent splitting needs a finite field".into()))?;
    let elements = f
        .elements()
        .ok_or_else(|| Error::InvalidField("field too large to enumerate".into()))?;
    // the split part {x : x^q = x} is a product of copies of 𝔽_q
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| reduced.pow(&reduced.basis(i), q)).collect();
    let frob = Matrix::from_columns(f, n, &cols).sub(&Matrix::identity(f, n))?;
    let split = Subspace::from_basis(frob.kernel())?;
    let mut blocks = vec![split.clone()];
    for g in 0..split.dim() {
        let lg = reduced.left_mult(&split.vector(g));
        let mut next = Vec::new();
        for w in &blocks {
            if w.dim() == 1 {
                next.push(w.clone());
                continue;
            }
            let mut found = 0;
            for lambda in &elements {
                let shifted = lg.sub(&Matrix::identity(f, n).scale(lambda))?.mul(w.basis())?;
                let k = shifted.kernel();
                if k.cols() > 0 {
                    found += k.cols();
                    next.push(Subspace::from_basis(w.basis().mul(&k)?)?);
                }
                if found == w.dim() {
                    break;
                }
            }
            if found != w.dim() {
                return Err(Error::InvariantBreach("split part is not diagonalisable".into()));
            }
        }
        blocks = next;
    }
    blocks
        .iter()
        .map(|w| {
            if w.dim() != 1 {
                return Err(Error::InvariantBreach("split part did not separate".into()));
            }
            let v = w.vector(0);
            let sq = reduced.mul(&v, &v);
            let mu = w
                .coordinates(&sq)?
                .ok_or_else(|| Error::InvariantBreach("eigenline is not an ideal".into()))?;
            let inv = f
                .inv(&mu[0])
                .ok_or_else(|| Error::InvariantBreach("nilpotent in a reduced algebra".into()))?;
            Ok(reduced.scale(&inv, &v))
        })
        .collect()
}

/// Primitive idempotents of a finite-dimensional algebra over a finite field,
/// lifted from the reduced quotient by `x ↦ 3x² − 2x³`.
pub fn lifted_primitive_idempotents(b: &Algebra) -> Result<Vec<Vec<Scalar>>> {
    let f = b.field;
    let radical = nilradical(b)?;
    let (reduced, q) = quotient_algebra(b, &radical)?;
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    let mut out = Vec::new();
    for e in primitive_idempotents(&reduced)? {
        let mut x = q.section.apply(&e)?;
        let mut steps = 0;
        while !b.is_idempotent(&x) {
            if steps > 64 {
                return Err(Error::InvariantBreach("idempotent lifting did not converge".into()));
            }
            let x2 = b.mul(&x, &x);
            let x3 = b.mul(&x2, &x);
            x = b.sub(&b.scale(&three, &x2), &b.scale(&two, &x3));
            steps += 1;
        }
        out.push(x);
    }
    Ok(out)
}

/// Whether the module `M` of dimension `module_dim` with `C`-action
/// `action[i] = L_{cᵢ}` (one matrix per basis element of `C`) is free over `C`
/// of positive rank.
pub fn free_module_report(c: &Algebra, action: &[Matrix], module_dim: usize) -> Result<FreenessReport> {
    let f = c.field;
    let radical = nilradical(c)?;
    let (cbar, qc) = quotient_algebra(c, &radical)?;
    let act = |x: &[Scalar]| -> Matrix {
        let mut m = Matrix::zeros(f, module_dim, module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !f.is_zero(xi) {
                m = m.add(&action[i].scale(xi)).expect("shape");
            }
        }
        m
    };
    // J·M
    let mut cols = Vec::new();
    for j in 0..radical.dim() {
        cols.extend(act(&radical.vector(j)).columns());
    }
    let jm = Subspace::span(&Matrix::from_columns(f, module_dim, &cols));
    let qm = Quotient::new(&jm);
    let bar_act = |x: &[Scalar]| -> Result<Matrix> {
        let lift = qc.section.apply(x)?;
        qm.projection.mul(&act(&lift))?.mul(&qm.section)
    };
    let mut report = FreenessReport {
        free: false,
        rank: None,
        module_dim,
        algebra_dim: c.dim,
        radical_dim: radical.dim(),
        factors: Vec::new(),
    };
    if module_dim == 0 || !module_dim.is_multiple_of(c.dim) {
        return Ok(report);
    }
    let r = module_dim / c.dim;
    let ok = match f {
        FieldSpec::Rationals => (0..cbar.dim).all(|k| {
            let e = cbar.basis(k);
            let tm = trace(&bar_act(&e).expect("shape"));
            let tc = trace(&cbar.left_mult(&e));
            tm == f.mul(&f.from_i64(r as i64), &tc)
        }),
        _ => {
            let mut ok = true;
            for e in primitive_idempotents(&cbar)? {
                let dm = bar_act(&e)?.rank();
                let dc = cbar.left_mult(&e).rank();
                report.factors.push((dm, dc));
                ok &= dm == r * dc;
            }
            ok
        }
    };
    if ok {
        report.free = true;
        report.rank = Some(r);
    }
    Ok(report)
}

/// The matrix whose columns are `cᵢ·m` for every basis element `cᵢ` of `C`
/// and every `m` in `gens`; its rank is the dimension of `C·gens`.
fn generated(action: &[Matrix], gens: &[Vec<Scalar>]) -> Result<Matrix> {
    let f = action[0].field();
    let n = action[0].rows();
    let mut cols = Vec::with_capacity(action.len() * gens.len());
    for g in gens {
        for a in action {
            cols.push(a.apply(g)?);
        }
    }
    Ok(Matrix::from_columns(f, n, &cols))
}

/// Whether `basis` is a `C`-basis of the module: the `cᵢ·bₜ` form a `k`-basis.
pub fn is_free_basis(action: &[Matrix], module_dim: usize, basis: &[Vec<Scalar>]) -> Result<bool> {
    if action.is_empty() || basis.iter().any(|b| b.len() != module_dim) {
        return Ok(false);
    }
    let m = generated(action, basis)?;
    Ok(m.cols() == module_dim && m.rank() == module_dim)
}

/// An explicit `C`-basis of a free module of the given rank. Over a finite
/// field, bases of the factors `εⱼM` are chosen greedily from the columns of
/// `εⱼ` and summed; over ℚ, basis vectors and their pairwise sums are tried.
pub fn free_basis(c: &Algebra, action: &[Matrix], module_dim: usize, rank: usize) -> Result<Option<Vec<Vec<Scalar>>>> {
    let f = c.field;
    let act = |x: &[Scalar]| -> Result<Matrix> {
        let mut m = Matrix::zeros(f, module_dim, module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !f.is_zero(xi) {
                m = m.add(&action[i].scale(xi))?;
            }
        }
        Ok(m)
    };
    let greedy = |candidates: Vec<Vec<Scalar>>, step: usize| -> Result<Vec<Vec<Scalar>>> {
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        let mut dim = 0;
        for v in candidates {
            if chosen.len() == rank {
                break;
            }
            chosen.push(v);
            let d = generated(action, &chosen)?.rank();
            if d == dim + step {
                dim = d;
            } else {
                chosen.pop();
            }
        }
        Ok(chosen)
    };
    let basis = if f.order().is_some() {
        let mut parts = Vec::new();
        for e in lifted_primitive_idempotents(c)? {
            let step = c.left_mult(&e).rank();
            let part = greedy(act(&e)?.columns(), step)?;
            if part.len() != rank {
                return Ok(None);
            }
            parts.push(part);
        }
        (0..rank)
            .map(|t| {
                parts.iter().fold(vec![f.zero(); module_dim], |acc, p| {
                    acc.iter().zip(&p[t]).map(|(a, b)| f.add(a, b)).collect()
                })
            })
            .collect()
    } else {
        let id = Matrix::identity(f, module_dim);
        let mut candidates = id.columns();
        for i in 0..module_dim {
            for j in i + 1..module_dim {
                candidates.push(id.column(i).iter().zip(&id.column(j)).map(|(a, b)| f.add(a, b)).collect());
            }
        }
        greedy(candidates, c.dim)?
    };
    Ok(if is_free_basis(action, module_dim, &basis)? {
        Some(basis)
    } else {
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: FieldSpec, coeffs: &[i64]) -> Algebra {
        let m: Vec<Scalar> = coeffs.iter().map(|&c| f.from_i64(c)).collect();
        Algebra::polynomial_quotient(f, &m, "x").unwrap()
    }

    #[test]
    fn radical_of_dual_numbers() {
        let f = FieldSpec::prime(3).unwrap();
        let a = poly(f, &[0, 0, 1]);
        assert_eq!(nilradical(&a).unwrap().dim(), 1);
        let q = FieldSpec::Rationals;
        assert_eq!(nilradical(&poly(q, &[0, 0, 1])).unwrap().dim(), 1);
        assert_eq!(nilradical(&poly(q, &[-1, 0, 1])).unwrap().dim(), 0);
    }

    #[test]
    fn split_idempotents() {
        // x² + 1 = (x − 2)(x − 3) over 𝔽₅
        let f = FieldSpec::prime(5).unwrap();
        let a = poly(f, &[1, 0, 1]);
        let mut es = primitive_idempotents(&a).unwrap();
        es.sort_by_key(|e| alloc::format!("{:?}", e));
        assert_eq!(es.len(), 2);
        for e in &es {
            assert!(a.is_idempotent(e));
        }
        // over 𝔽₃ the same algebra is a field
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(primitive_idempotents(&poly(f3, &[1, 0, 1])).unwrap().len(), 1);
    }

    #[test]
    fn algebra_free_over_itself_and_not_over_a_quotient_action() {
        let f = FieldSpec::prime(5).unwrap();
        let a = poly(f, &[1, 0, 1]);
        let action: Vec<Matrix> = (0..2).map(|i| a.left_mult(&a.basis(i))).collect();
        let r = free_module_report(&a, &action, 2).unwrap();
        assert!(r.free);
        assert_eq!(r.rank, Some(1));
        // the module 𝔽₅ × 𝔽₅ with x acting as 2 on both: rank 2 at one factor, 0 at the other
        let two = Matrix::identity(f, 2).scale(&f.from_i64(2));
        let r = free_module_report(&a, &[Matrix::identity(f, 2), two], 2).unwrap();
        assert!(!r.free);
    }

    #[test]
    fn free_bases_over_split_and_local_algebras() {
        let f = FieldSpec::prime(5).unwrap();
        for coeffs in [[1, 0, 1], [0, 0, 1]] {
            let a = poly(f, &coeffs);
            // A ⊕ A over A
            let action: Vec<Matrix> = (0..2)
                .map(|i| {
                    let l = a.left_mult(&a.basis(i));
                    let mut m = Matrix::zeros(f, 4, 4);
                    for r in 0..2 {
                        for s in 0..2 {
                            m.set(r, s, l.get(r, s).clone());
                            m.set(r + 2, s + 2, l.get(r, s).clone());
                        }
                    }
                    m
                })
                .collect();
            let basis = free_basis(&a, &action, 4, 2).unwrap().unwrap();
            assert!(is_free_basis(&action, 4, &basis).unwrap());
        }
    }
}

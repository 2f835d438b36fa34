//! Re-verification of the witnesses embedded in a report against the
//! document it claims to describe.

use ramify_core::algebra::kron_vec;
use ramify_core::comodule::ComoduleAlgebra;
use ramify_core::constant::split_residues;
use ramify_core::geometry::{galois_map, inertia_hopf};
use ramify_core::hopf::{validate_hopf, HopfAlgebra};
use ramify_core::matrix::Subspace;
use ramify_core::rebase::rebase_to_invariants;
use ramify_core::tameness::{
    battery, invariant_action, reynold_family_system, verify_certificate, TotalIntegral,
};
use ramify_core::artinian::is_free_basis;
use ramify_core::{FieldSpec, Matrix, Scalar};
use std::sync::Arc;

use crate::document::{ActionDocument, Built, RawHopfDoc};
use crate::error::RunError;
use crate::report::{digest, VerdictReport};
use crate::scalar::{parse_matrix, parse_vector, MatrixDoc, VectorDoc};

/// Every witness examined, and those that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub verified: Vec<String>,
    pub failures: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, what: String, outcome: Result<bool, RunError>) {
        match outcome {
            Ok(true) => self.verified.push(what),
            Ok(false) => self.failures.push(what),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }
}

fn vector(f: FieldSpec, v: &VectorDoc, len: usize) -> Result<Vec<Scalar>, RunError> {
    parse_vector(f, v, len, "witness")
}

fn matrix(f: FieldSpec, m: &MatrixDoc, rows: usize, cols: usize) -> Result<Matrix, RunError> {
    parse_matrix(f, m, rows, cols, "witness")
}

/// Exactly one of the two witnesses is present, matching the verdict.
fn one_of<A, B>(verdict: bool, yes: &Option<A>, no: &Option<B>) -> bool {
    verdict == yes.is_some() && verdict != no.is_some()
}

pub fn audit(doc: &ActionDocument, report: &VerdictReport) -> Result<AuditReport, RunError> {
    let built = doc.build()?;
    let mut a = AuditReport::default();
    let b = &built.action;
    let f = built.field;
    let (nb, na) = (b.dim(), built.hopf.dim);
    a.check("digest".into(), digest(doc).map(|d| d == report.digest && report.name == doc.name));
    a.check(
        "dimensions".into(),
        Ok(report.algebra_dim == nb && report.hopf_dim == na),
    );
    a.check("invariants".into(), (|| {
        let inv = &report.invariants;
        let mut cols = Vec::new();
        for v in &inv.basis {
            let v = vector(f, v, nb)?;
            if b.comodule().coact(&v)? != kron_vec(f, &v, &built.hopf.unit) {
                return Ok(false);
            }
            cols.push(v);
        }
        Ok(inv.basis.len() == inv.dim && Matrix::from_columns(f, nb, &cols).rank() == b.invariants().dim())
    })());
    if let Some(t) = &report.total_integral {
        a.check("total integral".into(), (|| {
            if !one_of(t.tame, &t.alpha, &t.certificate) {
                return Ok(false);
            }
            match (&t.alpha, &t.certificate) {
                (Some(m), _) => Ok(TotalIntegral { alpha: matrix(f, m, nb, na)? }.verify(b)?),
                (_, Some(y)) => Ok(verify_certificate(b, &parse_vector(f, y, y.len(), "certificate")?)?),
                _ => Ok(false),
            }
        })());
        if let (Some(trace), Some(ga)) = (&t.trace, &built.gamma) {
            a.check("trace witness".into(), (|| {
                if trace.agrees_with_integral != (trace.witness.is_some() == t.tame) {
                    return Ok(false);
                }
                let Some(w) = &trace.witness else { return Ok(true) };
                let w = vector(f, w, nb)?;
                let mut sum = vec![f.zero(); nb];
                for m in ga.matrices() {
                    sum = b.algebra().add(&sum, &m.apply(&w)?);
                }
                Ok(sum == b.algebra().unit)
            })());
        }
    }
    if let Some(t) = &report.torsor {
        let g = galois_map(b)?;
        a.check("galois map".into(), (|| {
            let free_ok = if t.free {
                let Some(x) = &t.right_inverse else { return Ok(false) };
                let x = matrix(f, x, nb * nb, nb * na)?;
                g.absolute.mul(&x)? == Matrix::identity(f, nb * na)
            } else {
                let Some(y) = &t.cokernel_witness else { return Ok(false) };
                let y = vector(f, y, nb * na)?;
                let row = Matrix::from_data(f, 1, nb * na, y.clone())?;
                y.iter().any(|c| !f.is_zero(c)) && row.mul(&g.absolute)?.is_zero()
            };
            let kernel_ok = match &t.kernel_witness {
                Some(k) => {
                    let k = vector(f, k, nb * nb)?;
                    !t.relative_injective
                        && g.absolute.apply(&k)?.iter().all(|c| f.is_zero(c))
                        && !g.relations.contains(&k)
                }
                None => t.relative_injective,
            };
            Ok(free_ok && kernel_ok && t.free == (t.galois_rank == t.galois_target_dim))
        })());
        a.check("basis over invariants".into(), (|| {
            match &t.invariant_basis {
                Some(bs) => {
                    let bs = bs.iter().map(|x| vector(f, x, nb)).collect::<Result<Vec<_>, _>>()?;
                    Ok(t.flat_over_invariants
                        && Some(bs.len()) == t.rank_over_invariants
                        && is_free_basis(&invariant_action(b), nb, &bs)?)
                }
                None => Ok(!t.flat_over_invariants),
            }
        })());
    }
    if let Some(sections) = &report.inertia {
        a.check("inertia points".into(), Ok(sections.len() == built.points.len()));
        for (s, p) in sections.iter().zip(&built.points) {
            a.check(format!("inertia at {}", s.point), (|| {
                let k = p.residue;
                let h = hopf_from_raw(k, &s.presentation)?;
                if s.point != p.label || !validate_hopf(&h)?.is_valid() || h != inertia_hopf(b, p)?.hopf {
                    return Ok(false);
                }
                let ground = ComoduleAlgebra::ground(Arc::new(h.clone()));
                if !one_of(s.linearly_reductive, &s.integral, &s.certificate) {
                    return Ok(false);
                }
                match (&s.integral, &s.certificate) {
                    (Some(m), _) => Ok(TotalIntegral { alpha: matrix(k, m, 1, h.dim)? }.verify(&ground)?),
                    (_, Some(y)) => Ok(verify_certificate(&ground, &parse_vector(k, y, y.len(), "certificate")?)?),
                    _ => Ok(false),
                }
            })());
        }
    }
    if let (Some(sl), Some(ga)) = (&report.slices, &built.gamma) {
        let split = if sl.slices.iter().any(|s| s.split_field.is_some()) {
            Some(split_residues(ga)?)
        } else {
            None
        };
        for s in &sl.slices {
            let source = if s.split_field.is_some() { split.as_ref().expect("split") } else { ga };
            a.check(format!("slice at {}", s.point), audit_slice(source, s));
        }
    }
    if let Some(e) = &report.equivalence {
        audit_equivalence(&mut a, &built, e);
    }
    if let Some(r) = &report.rebase {
        a.check("rebase".into(), (|| {
            let rebased = rebase_to_invariants(b)?;
            if r.invariant_dim != rebased.invariant_dim() || !one_of(r.tame_over_c, &r.integral_over_c, &r.certificate_over_c) {
                return Ok(false);
            }
            match (&r.integral_over_c, &r.certificate_over_c) {
                (Some(m), _) => Ok(rebased.verify(&matrix(f, m, nb, r.invariant_dim * na)?)?),
                (_, Some(y)) => {
                    let y = parse_vector(f, y, y.len(), "certificate")?;
                    let (sys, rhs) = rebased.integral_system()?;
                    Ok(sys.refuted_by(&rhs, &y))
                }
                _ => Ok(false),
            }
        })());
    }
    Ok(a)
}

fn hopf_from_raw(k: FieldSpec, r: &RawHopfDoc) -> Result<HopfAlgebra, RunError> {
    let n = r.labels.len();
    Ok(HopfAlgebra {
        field: k,
        dim: n,
        mult: parse_matrix(k, &r.mult, n, n * n, "mult")?,
        unit: parse_vector(k, &r.unit, n, "unit")?,
        comult: parse_matrix(k, &r.comult, n * n, n, "comult")?,
        counit: parse_vector(k, &r.counit, n, "counit")?,
        antipode: parse_matrix(k, &r.antipode, n, n, "antipode")?,
        labels: r.labels.clone(),
    })
}

/// Checks `φ` against its defining formula, the slice constraints,
/// injectivity, the dimension count, equivariance and multiplicativity.
fn audit_slice(ga: &ramify_core::constant::GammaAction, s: &crate::report::SliceSection) -> Result<bool, RunError> {
    let b = ga.algebra();
    let k = b.field;
    let g = ga.group();
    let n = b.dim;
    let order = g.order();
    let e = vector(k, &s.idempotent, n)?;
    let phi = matrix(k, &s.phi, order * n, n)?;
    let block = |col: &[Scalar], gamma: usize| col[gamma * n..(gamma + 1) * n].to_vec();
    let inertia = s
        .inertia
        .iter()
        .map(|l| g.labels().iter().position(|x| x == l))
        .collect::<Option<Vec<_>>>();
    let Some(inertia) = inertia else { return Ok(false) };
    if !b.is_idempotent(&e) || inertia.iter().any(|&i| ga.matrix(i).apply(&e).ok() != Some(e.clone())) {
        return Ok(false);
    }
    let local_dim = b.left_mult(&e).rank();
    if s.index * inertia.len() != order || n != s.index * local_dim || local_dim != s.local_dim {
        return Ok(false);
    }
    for j in 0..n {
        let col = phi.column(j);
        let bj = b.basis(j);
        for gamma in g.elements() {
            let expected = b.mul(&e, &ga.matrix(g.inv(gamma)).apply(&bj)?);
            if block(&col, gamma) != expected {
                return Ok(false);
            }
            for &i in &inertia {
                if block(&col, g.mul(gamma, i)) != ga.matrix(g.inv(i)).apply(&block(&col, gamma))? {
                    return Ok(false);
                }
            }
        }
    }
    if phi.rank() != n {
        return Ok(false);
    }
    for lambda in g.elements() {
        let moved = phi.mul(ga.matrix(lambda))?;
        for j in 0..n {
            let (lhs, rhs) = (moved.column(j), phi.column(j));
            for gamma in g.elements() {
                if block(&lhs, gamma) != block(&rhs, g.mul(g.inv(lambda), gamma)) {
                    return Ok(false);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let prod = phi.apply(&b.mul(&b.basis(i), &b.basis(j)))?;
            let (x, y) = (phi.column(i), phi.column(j));
            for gamma in g.elements() {
                if block(&prod, gamma) != b.mul(&block(&x, gamma), &block(&y, gamma)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn audit_equivalence(a: &mut AuditReport, built: &Built, e: &crate::report::EquivalenceSection) {
    let b = &built.action;
    let f = built.field;
    let seqs = match battery(b, &built.additions) {
        Ok(s) => s,
        Err(err) => {
            a.failures.push(format!("battery: {err}"));
            return;
        }
    };
    a.check(
        "battery labels".into(),
        Ok(seqs.len() == e.battery.len() && seqs.iter().zip(&e.battery).all(|(s, r)| s.label == r.label)),
    );
    for (seq, r) in seqs.iter().zip(&e.battery) {
        a.check(format!("sequence {}", r.label), (|| {
            let right = seq.right.invariants();
            let image = Subspace::span(&seq.projection.mul(seq.middle.invariants().basis())?);
            match &r.witness {
                Some(w) => {
                    let w = vector(f, w, seq.right.dim())?;
                    Ok(!r.right_exact && right.contains(&w) && !image.contains(&w))
                }
                None => Ok(r.right_exact && image.same_as(&right)),
            }
        })());
    }
    a.check("reynold family".into(), (|| {
        let sys = reynold_family_system(b, &seqs)?;
        if !one_of(e.reynold_family, &e.family_retractions, &e.family_certificate) {
            return Ok(false);
        }
        match (&e.family_retractions, &e.family_certificate) {
            (Some(rs), _) => {
                if rs.len() != sys.offsets.len() {
                    return Ok(false);
                }
                let mats = rs
                    .iter()
                    .enumerate()
                    .map(|(i, m)| matrix(f, m, sys.invariant_dims[i], sys.module_dims[i]))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(sys.check_solution(&mats)?)
            }
            (_, Some(y)) => Ok(sys.check_certificate(&parse_vector(f, y, y.len(), "certificate")?)),
            _ => Ok(false),
        }
    })());
}

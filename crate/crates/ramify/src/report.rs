//! Verdict reports. Every verdict carries a witness that can be checked
//! without rerunning the decision procedure; see [`crate::audit`].

use std::sync::Arc;

use ramify_core::comodule::ComoduleAlgebra;
use ramify_core::constant::{
    inertia_agrees, inertia_at, inertia_conjugacy_holds, local_freeness_check, quotient_torsor_check, slice_decompose,
    split_residues, tame_at, trace_agrees_with_integral, trace_tame, transitivity_check, GammaAction,
};
use ramify_core::geometry::{galois_map, inertia_hopf, is_torsor};
use ramify_core::hopf::HopfAlgebra;
use ramify_core::rebase::{rebase_check, rebase_to_invariants};
use ramify_core::tameness::{equivalence_report, invariant_free_basis, total_integral_search, Agreement, IntegralSearch};
use ramify_core::FieldSpec;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::document::{ActionDocument, Built, Check, RawHopfDoc};
use crate::error::RunError;
use crate::scalar::{format_matrix, format_vector, FieldDoc, MatrixDoc, VectorDoc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictReport {
    pub name: String,
    /// SHA-256 of the document in canonical JSON form.
    pub digest: String,
    pub field: FieldDoc,
    pub hopf_dim: usize,
    pub algebra_dim: usize,
    pub checks: Vec<Check>,
    pub invariants: InvariantsSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_integral: Option<IntegralSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsor: Option<TorsorSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inertia: Option<Vec<InertiaSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slices: Option<SlicesSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rebase: Option<RebaseSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsSection {
    pub dim: usize,
    pub basis: Vec<VectorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegralSection {
    pub tame: bool,
    /// `dim B × dim A`.
    pub alpha: Option<MatrixDoc>,
    /// `y` with `yᵀM = 0`, `yᵀrhs = 1` for the integral system.
    pub certificate: Option<VectorDoc>,
    /// Group actions only.
    pub trace: Option<TraceSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceSection {
    /// Some `b` with `Σ_γ γ·b = 1`.
    pub witness: Option<VectorDoc>,
    pub agrees_with_integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsorSection {
    pub free: bool,
    pub torsor: bool,
    pub galois_rank: usize,
    pub galois_target_dim: usize,
    pub relative_source_dim: usize,
    pub relative_injective: bool,
    pub relative_surjective: bool,
    /// `X` with `G·X = I` for the Galois map `G : B ⊗ B → B ⊗ A`.
    pub right_inverse: Option<MatrixDoc>,
    /// A nonzero functional vanishing on the image of `G`.
    pub cokernel_witness: Option<VectorDoc>,
    /// An element of `ker G` outside the relations of `B ⊗_C B`.
    pub kernel_witness: Option<VectorDoc>,
    pub flat_over_invariants: bool,
    pub rank_over_invariants: Option<usize>,
    /// A `C`-basis of `B`.
    pub invariant_basis: Option<Vec<VectorDoc>>,
    pub radical_dim: usize,
    /// `(dim eᵢ(B/JB), dim eᵢ(C/J))` per residue factor of `C`.
    pub residue_ranks: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InertiaSection {
    pub point: String,
    pub residue: FieldDoc,
    pub dim: usize,
    pub trivial: bool,
    pub presentation: RawHopfDoc,
    pub linearly_reductive: bool,
    /// Total integral of the trivial action on `k(𝔭)`, `1 × dim`.
    pub integral: Option<MatrixDoc>,
    pub certificate: Option<VectorDoc>,
    pub group: Option<GroupInertia>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInertia {
    pub elements: Vec<String>,
    pub characteristic: u64,
    /// `char k(𝔭) ∤ |Γ₀|`.
    pub tame: bool,
    pub linearly_reductive: bool,
    /// The presentation is `Map(Γ₀, k(𝔭))` element by element.
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlicesSection {
    pub transitive: bool,
    pub orbits: Vec<Vec<String>>,
    pub inertia_conjugacy: bool,
    pub local_freeness: Option<LocalFreenessSection>,
    pub slices: Vec<SliceSection>,
    pub quotient_torsor: Option<QuotientSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalFreenessSection {
    pub trivial_inertia: Vec<String>,
    pub applicable: bool,
    pub free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SliceSection {
    pub point: String,
    /// Set when scalars were extended to the residue field first.
    pub split_field: Option<FieldDoc>,
    /// Index of the factor in the (split) action.
    pub factor: usize,
    pub inertia: Vec<String>,
    pub idempotent: VectorDoc,
    pub local_dim: usize,
    pub slice_dim: usize,
    /// `[Γ : Γ₀]`.
    pub index: usize,
    /// `dim B = [Γ:Γ₀]·dim B_𝔭`.
    pub dimension_identity: bool,
    /// `b ↦ (γ ↦ e·γ⁻¹b)`, block `γ` at rows `γ·dim B ..`.
    pub phi: MatrixDoc,
    pub bijective: bool,
    pub algebra_morphism: bool,
    pub equivariant: bool,
    pub invariants_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientSection {
    pub subgroup: Vec<String>,
    pub quotient_order: usize,
    pub fixed_dim: usize,
    pub torsor: bool,
    pub subgroup_is_inertia: bool,
    pub original_free: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AgreementDoc {
    Agree,
    Disagree,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivalenceSection {
    pub total_integral: bool,
    pub battery_exact: bool,
    pub reynold_family: bool,
    pub inertia_linearly_reductive: Option<bool>,
    pub flat_over_invariants: bool,
    pub agreement: AgreementDoc,
    /// The common verdict when the verdicts agree.
    pub verdict: Option<bool>,
    /// Exactness and Reynold existence are decided on these sequences only.
    pub battery: Vec<SequenceSection>,
    /// Natural retractions `N → N^A` per distinct battery module, in invariant coordinates.
    pub family_retractions: Option<Vec<MatrixDoc>>,
    pub family_certificate: Option<VectorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceSection {
    pub label: String,
    pub invariant_dims: [usize; 3],
    pub left_exact: bool,
    pub right_exact: bool,
    /// An invariant of the right term not hit by an invariant of the middle.
    pub witness: Option<VectorDoc>,
    pub reynold_lift: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RebaseSection {
    pub invariant_dim: usize,
    pub tame_over_k: bool,
    pub tame_over_c: bool,
    /// `dim B × (dim C · dim A)`, a `C`-linear unital comodule map `C ⊗ A → B`.
    pub integral_over_c: Option<MatrixDoc>,
    pub certificate_over_c: Option<VectorDoc>,
    pub restricted_verified: Option<bool>,
    pub extended_verified: Option<bool>,
    pub agree: bool,
}

pub fn raw_hopf(h: &HopfAlgebra) -> RawHopfDoc {
    let f = h.field;
    RawHopfDoc {
        labels: h.labels.clone(),
        mult: format_matrix(&h.mult),
        unit: format_vector(f, &h.unit),
        comult: format_matrix(&h.comult),
        counit: format_vector(f, &h.counit),
        antipode: format_matrix(&h.antipode),
    }
}

pub fn digest(doc: &ActionDocument) -> Result<String, RunError> {
    let bytes = serde_json::to_vec(doc)?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

fn integral_parts(f: FieldSpec, search: &IntegralSearch) -> (Option<MatrixDoc>, Option<VectorDoc>) {
    match search {
        IntegralSearch::Found(t) => (Some(format_matrix(&t.alpha)), None),
        IntegralSearch::Infeasible { certificate } => (None, Some(format_vector(f, certificate))),
    }
}

fn labels(ga: &GammaAction, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&g| ga.group().label(g).to_string()).collect()
}

/// Validates the document and runs the requested checks, or the document's
/// own selection when `only` is `None`.
pub fn run(doc: &ActionDocument, only: Option<&[Check]>) -> Result<VerdictReport, RunError> {
    let built = doc.build()?;
    run_built(doc, &built, only)
}

pub fn run_built(doc: &ActionDocument, built: &Built, only: Option<&[Check]>) -> Result<VerdictReport, RunError> {
    let mut checks = match only {
        Some(c) => c.to_vec(),
        None => built.checks.clone(),
    };
    checks.sort();
    checks.dedup();
    let b = &built.action;
    let f = built.field;
    let inv = b.invariants();
    let mut report = VerdictReport {
        name: doc.name.clone(),
        digest: digest(doc)?,
        field: FieldDoc::of(f),
        hopf_dim: built.hopf.dim,
        algebra_dim: b.dim(),
        checks: checks.clone(),
        invariants: InvariantsSection {
            dim: inv.dim(),
            basis: (0..inv.dim()).map(|i| format_vector(f, &inv.vector(i))).collect(),
        },
        total_integral: None,
        torsor: None,
        inertia: None,
        slices: None,
        equivalence: None,
        rebase: None,
    };
    for check in checks {
        match check {
            Check::TotalIntegral => report.total_integral = Some(integral_section(built)?),
            Check::Torsor => report.torsor = Some(torsor_section(b)?),
            Check::Inertia => report.inertia = Some(inertia_sections(built)?),
            Check::Slice => report.slices = built.gamma.as_ref().map(slices_section).transpose()?,
            Check::Equivalence => report.equivalence = Some(equivalence_section(built)?),
            Check::Rebase => report.rebase = Some(rebase_section(b)?),
        }
    }
    Ok(report)
}

fn integral_section(built: &Built) -> Result<IntegralSection, RunError> {
    let f = built.field;
    let search = total_integral_search(&built.action)?;
    let (alpha, certificate) = integral_parts(f, &search);
    let trace = match &built.gamma {
        Some(ga) => Some(TraceSection {
            witness: trace_tame(ga)?.map(|w| format_vector(f, &w)),
            agrees_with_integral: trace_agrees_with_integral(ga)?,
        }),
        None => None,
    };
    Ok(IntegralSection {
        tame: search.integral().is_some(),
        alpha,
        certificate,
        trace,
    })
}

fn torsor_section(b: &Arc<ComoduleAlgebra>) -> Result<TorsorSection, RunError> {
    let f = b.field();
    let cert = is_torsor(b)?;
    let g = galois_map(b)?;
    let free = cert.relative_surjective;
    let right_inverse = if free {
        let x = g
            .absolute
            .transpose()
            .left_inverse()
            .ok_or_else(|| RunError::Internal("surjective Galois map without a right inverse".into()))?
            .transpose();
        Some(format_matrix(&x))
    } else {
        None
    };
    let basis = invariant_free_basis(b)?;
    if cert.flatness.free && basis.is_none() {
        return Err(RunError::Internal("free over the invariants but no basis found".into()));
    }
    Ok(TorsorSection {
        free,
        torsor: cert.torsor,
        galois_rank: cert.absolute_rank,
        galois_target_dim: cert.target_dim,
        relative_source_dim: cert.relative_source_dim,
        relative_injective: cert.relative_injective,
        relative_surjective: cert.relative_surjective,
        right_inverse,
        cokernel_witness: cert.cokernel_witness.as_ref().map(|w| format_vector(f, w)),
        kernel_witness: cert.kernel_witness.as_ref().map(|w| format_vector(f, w)),
        flat_over_invariants: cert.flatness.free,
        rank_over_invariants: cert.flatness.rank,
        invariant_basis: basis.map(|bs| bs.iter().map(|x| format_vector(f, x)).collect()),
        radical_dim: cert.flatness.radical_dim,
        residue_ranks: cert.flatness.factors.iter().map(|&(m, c)| [m, c]).collect(),
    })
}

fn inertia_sections(built: &Built) -> Result<Vec<InertiaSection>, RunError> {
    let mut out = Vec::with_capacity(built.points.len());
    for (i, p) in built.points.iter().enumerate() {
        let ih = inertia_hopf(&built.action, p)?;
        let k = p.residue;
        let h = Arc::new(ih.hopf.clone());
        let search = total_integral_search(&ComoduleAlgebra::ground(h))?;
        let (integral, certificate) = integral_parts(k, &search);
        let group = match &built.gamma {
            Some(ga) => {
                let t = tame_at(ga, i)?;
                Some(GroupInertia {
                    elements: labels(ga, &t.inertia),
                    characteristic: t.characteristic,
                    tame: t.tame,
                    linearly_reductive: t.linearly_reductive,
                    agrees: inertia_agrees(ga, i)?,
                })
            }
            None => None,
        };
        out.push(InertiaSection {
            point: p.label.clone(),
            residue: FieldDoc::of(k),
            dim: ih.hopf.dim,
            trivial: ih.hopf.dim == 1,
            presentation: raw_hopf(&ih.hopf),
            linearly_reductive: search.integral().is_some(),
            integral,
            certificate,
            group,
        });
    }
    Ok(out)
}

fn slices_section(ga: &GammaAction) -> Result<SlicesSection, RunError> {
    let t = transitivity_check(ga);
    let factor_label = |i: usize| ga.factors()[i].point.label.clone();
    let orbits = t.orbits.iter().map(|o| o.iter().map(|&i| factor_label(i)).collect()).collect();
    let mut slices = Vec::new();
    let mut local_freeness = None;
    if t.transitive {
        let lf = local_freeness_check(ga)?;
        local_freeness = Some(LocalFreenessSection {
            trivial_inertia: lf.trivial_inertia.iter().map(|&i| factor_label(i)).collect(),
            applicable: lf.applicable,
            free: lf.free,
        });
        let mut split: Option<GammaAction> = None;
        for i in 0..ga.factors().len() {
            let d = slice_decompose(ga, i)?;
            let source = match d.split_field {
                Some(_) => split.get_or_insert(split_residues(ga)?),
                None => ga,
            };
            let k = source.algebra().field;
            let index = ga.group().order() / d.inertia.len();
            slices.push(SliceSection {
                point: factor_label(i),
                split_field: d.split_field.map(FieldDoc::of),
                factor: d.factor,
                inertia: labels(ga, &d.inertia),
                idempotent: format_vector(k, &source.factors()[d.factor].idempotent),
                local_dim: d.local_dim,
                slice_dim: d.slice.dim(),
                index,
                dimension_identity: ga.algebra().dim == index * d.local_dim,
                phi: format_matrix(&d.phi),
                bijective: d.bijective,
                algebra_morphism: d.algebra_morphism,
                equivariant: d.equivariant,
                invariants_iso: d.invariants_iso,
            });
        }
    }
    let mut quotient_torsor = None;
    if ga.group().is_abelian() {
        let h = inertia_at(ga, 0)?;
        let mut common = true;
        for i in 1..ga.factors().len() {
            common &= inertia_at(ga, i)? == h;
        }
        if common && h.len() > 1 {
            let q = quotient_torsor_check(ga, &h)?;
            quotient_torsor = Some(QuotientSection {
                subgroup: labels(ga, &q.subgroup),
                quotient_order: q.quotient_order,
                fixed_dim: q.fixed_dim,
                torsor: q.torsor.torsor,
                subgroup_is_inertia: q.subgroup_is_inertia,
                original_free: q.original_free,
            });
        }
    }
    Ok(SlicesSection {
        transitive: t.transitive,
        orbits,
        inertia_conjugacy: inertia_conjugacy_holds(ga)?,
        local_freeness,
        slices,
        quotient_torsor,
    })
}

fn equivalence_section(built: &Built) -> Result<EquivalenceSection, RunError> {
    let f = built.field;
    let mut inertia = Vec::with_capacity(built.points.len());
    for p in &built.points {
        inertia.push(Arc::new(inertia_hopf(&built.action, p)?.hopf));
    }
    let r = equivalence_report(&built.action, &inertia, &built.additions)?;
    let (agreement, verdict) = match r.agreement {
        Agreement::Agree(v) => (AgreementDoc::Agree, Some(v)),
        Agreement::Disagree => (AgreementDoc::Disagree, None),
        Agreement::NotApplicable => (AgreementDoc::NotApplicable, None),
    };
    Ok(EquivalenceSection {
        total_integral: r.total_integral,
        battery_exact: r.battery_exact,
        reynold_family: r.reynold_family,
        inertia_linearly_reductive: r.inertia_linearly_reductive,
        flat_over_invariants: r.flatness.free,
        agreement,
        verdict,
        battery: r
            .exactness
            .iter()
            .map(|e| SequenceSection {
                label: e.label.clone(),
                invariant_dims: e.invariant_dims,
                left_exact: e.left_exact,
                right_exact: e.right_exact,
                witness: e.witness.as_ref().map(|w| format_vector(f, w)),
                reynold_lift: e.reynold_lift,
            })
            .collect(),
        family_retractions: r.family.retractions.as_ref().map(|rs| rs.iter().map(format_matrix).collect()),
        family_certificate: r.family.certificate.as_ref().map(|y| format_vector(f, y)),
    })
}

fn rebase_section(b: &Arc<ComoduleAlgebra>) -> Result<RebaseSection, RunError> {
    let f = b.field();
    let r = rebase_check(b)?;
    let search = rebase_to_invariants(b)?.total_integral_search()?;
    let (integral_over_c, certificate_over_c) = integral_parts(f, &search);
    Ok(RebaseSection {
        invariant_dim: r.invariant_dim,
        tame_over_k: r.tame_over_k,
        tame_over_c: r.tame_over_c,
        integral_over_c,
        certificate_over_c,
        restricted_verified: r.restricted_verified,
        extended_verified: r.extended_verified,
        agree: r.agree(),
    })
}

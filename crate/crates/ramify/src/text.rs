//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{AgreementDoc, VerdictReport};

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(r: &VerdictReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}  (sha256 {})", r.name, &r.digest[..16]);
    let _ = writeln!(s, "  dim A = {}, dim B = {}, dim B^A = {}", r.hopf_dim, r.algebra_dim, r.invariants.dim);
    if let Some(t) = &r.total_integral {
        let _ = writeln!(s, "  tame: {}", yn(t.tame));
        if let Some(tr) = &t.trace {
            let _ = writeln!(s, "  trace witness: {}", yn(tr.witness.is_some()));
        }
    }
    if let Some(t) = &r.torsor {
        let _ = writeln!(
            s,
            "  free: {} (Galois rank {}/{}), torsor: {}, flat over B^A: {}",
            yn(t.free),
            t.galois_rank,
            t.galois_target_dim,
            yn(t.torsor),
            yn(t.flat_over_invariants)
        );
    }
    if let Some(sections) = &r.inertia {
        for i in sections {
            let _ = write!(s, "  inertia at {}: dim {}, linearly reductive: {}", i.point, i.dim, yn(i.linearly_reductive));
            if let Some(g) = &i.group {
                let _ = write!(s, ", Γ₀ = {{{}}}", g.elements.join(", "));
            }
            let _ = writeln!(s);
        }
    }
    if let Some(sl) = &r.slices {
        if !sl.transitive {
            let _ = writeln!(s, "  slices: not transitive ({} orbits)", sl.orbits.len());
        }
        for x in &sl.slices {
            let ok = x.bijective && x.algebra_morphism && x.equivariant && x.invariants_iso;
            let _ = write!(s, "  slice at {}: [Γ:Γ₀] = {}, dim B_p = {}, verified: {}", x.point, x.index, x.local_dim, yn(ok));
            if x.split_field.is_some() {
                let _ = write!(s, " (after extending to the residue field)");
            }
            let _ = writeln!(s);
        }
        if let Some(q) = &sl.quotient_torsor {
            let _ = writeln!(s, "  B^H over Γ/H (|Γ/H| = {}): torsor: {}", q.quotient_order, yn(q.torsor));
        }
    }
    if let Some(e) = &r.equivalence {
        let lr = match e.inertia_linearly_reductive {
            Some(v) => yn(v),
            None => "n/a",
        };
        let agreement = match e.agreement {
            AgreementDoc::Agree => "agree",
            AgreementDoc::Disagree => "DISAGREE",
            AgreementDoc::NotApplicable => "not applicable (B not free over B^A)",
        };
        let _ = writeln!(
            s,
            "  equivalence: integral {}, battery exact {}, Reynold family {}, inertia LR {}: {}",
            yn(e.total_integral),
            yn(e.battery_exact),
            yn(e.reynold_family),
            lr,
            agreement
        );
        for q in e.battery.iter().filter(|q| !q.right_exact) {
            let _ = writeln!(s, "    not right exact: {} {:?}", q.label, q.invariant_dims);
        }
    }
    if let Some(rb) = &r.rebase {
        let _ = writeln!(
            s,
            "  over B^A (dim {}): tame {}, over k: tame {}, consistent: {}",
            rb.invariant_dim,
            yn(rb.tame_over_c),
            yn(rb.tame_over_k),
            yn(rb.agree)
        );
    }
    s
}

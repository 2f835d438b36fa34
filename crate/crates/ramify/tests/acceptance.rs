//! The acceptance criteria, one line each. All comparisons are exact
//! (tolerance 0): every quantity is an element of ℚ or a finite field.

use std::process::{Command, ExitCode};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramify::audit::audit;
use ramify::catalog;
use ramify::document::Built;
use ramify::report::{run_built, AgreementDoc, VerdictReport};
use ramify::ActionDocument;
use ramify_core::comodule::{cotensor_compare, extend_scalars, Comodule, ComoduleAlgebra};
use ramify_core::constant::{inertia_agrees, slice_decompose};
use ramify_core::group::FiniteGroup;
use ramify_core::hopf::{make_standard, validate_hopf, HopfAlgebra, HopfAxiom, StandardHopf};
use ramify_core::rebase::rebase_check;
use ramify_core::tameness::{battery, is_linearly_reductive, reynold, total_integral_search};
use ramify_core::{FieldSpec, Matrix, Subspace};

const TOLERANCE: &str = "exact";

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Entry {
    doc: ActionDocument,
    built: Built,
    report: VerdictReport,
}

fn catalog_entries() -> Vec<Entry> {
    catalog::entries()
        .iter()
        .map(|e| {
            let doc = e.document();
            let built = doc.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            let report = run_built(&doc, &built, None).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            Entry { doc, built, report }
        })
        .collect()
}

fn entry<'a>(entries: &'a [Entry], name: &str) -> &'a Entry {
    entries.iter().find(|e| e.doc.name == name).expect("catalog entry")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hopf_validators(entries: &[Entry]) -> Outcome {
    for e in entries {
        let r = validate_hopf(&e.built.hopf).map_err(|x| x.to_string())?;
        ensure(r.is_valid(), || format!("{}: {:?}", e.doc.name, r.failures))?;
    }
    let f5 = FieldSpec::prime(5).unwrap();
    let base = HopfAlgebra::function_algebra(&FiniteGroup::cyclic(3).unwrap(), f5);
    let bump = |m: &mut Matrix, i: usize, j: usize| {
        let v = f5.add(m.get(i, j), &f5.one());
        m.set(i, j, v);
    };
    let mut cases: Vec<(HopfAxiom, HopfAlgebra)> = Vec::new();
    let mut h = base.clone();
    bump(&mut h.antipode, 1, 2);
    cases.push((HopfAxiom::Antipode, h));
    let mut h = base.clone();
    h.counit[1] = f5.add(&h.counit[1], &f5.one());
    cases.push((HopfAxiom::Counitality, h));
    let mut h = base.clone();
    // row g ⊗ g²
    bump(&mut h.comult, 5, 0);
    cases.push((HopfAxiom::Coassociativity, h));
    let mut h = base.clone();
    bump(&mut h.comult, 0, 0);
    cases.push((HopfAxiom::Bialgebra, h));
    let mut h = base.clone();
    // column g ⊗ g
    bump(&mut h.mult, 0, 4);
    cases.push((HopfAxiom::Associativity, h));
    let mut named = Vec::new();
    for (axiom, h) in &cases {
        let r = validate_hopf(h).map_err(|x| x.to_string())?;
        ensure(r.contains(*axiom), || format!("{} corruption reported as {:?}", axiom.name(), r.failures))?;
        named.push(axiom.name());
    }
    Ok(format!(
        "{} catalog Hopf algebras valid; corruptions caught: {}",
        entries.len(),
        named.join(", ")
    ))
}

fn maschke() -> Outcome {
    let groups = [
        ("C2", FiniteGroup::cyclic(2).unwrap()),
        ("C3", FiniteGroup::cyclic(3).unwrap()),
        ("C4", FiniteGroup::cyclic(4).unwrap()),
        ("S3", FiniteGroup::symmetric(3).unwrap()),
    ];
    let fields = [
        FieldSpec::prime(2).unwrap(),
        FieldSpec::prime(3).unwrap(),
        FieldSpec::prime(5).unwrap(),
        FieldSpec::Rationals,
    ];
    let mut n = 0;
    for (name, g) in &groups {
        for f in fields {
            let h = Arc::new(make_standard(&StandardHopf::FunctionAlgebra(g.clone()), f).unwrap());
            let lr = is_linearly_reductive(&h).map_err(|x| x.to_string())?;
            let p = f.characteristic() as usize;
            let expected = p == 0 || g.order() % p != 0;
            ensure(lr == expected, || format!("{name} over {f}: linearly reductive = {lr}"))?;
            n += 1;
        }
    }
    Ok(format!("{n}/16 cases match char ∤ |Γ|"))
}

fn gaussian(entries: &[Entry]) -> Outcome {
    let mut parts = Vec::new();
    for (p, ramified) in [(2, true), (3, false), (5, false)] {
        let e = entry(entries, &format!("gauss-p{p}"));
        let r = &e.report;
        let t = r.total_integral.as_ref().ok_or("no integral section")?;
        let tor = r.torsor.as_ref().ok_or("no torsor section")?;
        let inertia = r.inertia.as_ref().ok_or("no inertia section")?;
        let sizes: Vec<usize> = inertia.iter().map(|i| i.group.as_ref().map_or(0, |g| g.elements.len())).collect();
        let expected_size = if ramified { 2 } else { 1 };
        ensure(sizes.iter().all(|&s| s == expected_size), || format!("p={p}: inertia sizes {sizes:?}"))?;
        ensure(inertia.iter().all(|i| i.dim == expected_size), || format!("p={p}: inertia scheme dims"))?;
        ensure(t.tame != ramified && tor.free != ramified && tor.torsor != ramified, || {
            format!("p={p}: tame {} free {} torsor {}", t.tame, tor.free, tor.torsor)
        })?;
        let trace = t.trace.as_ref().ok_or("no trace section")?;
        ensure(trace.witness.is_some() == !ramified && trace.agrees_with_integral, || {
            format!("p={p}: trace witness {:?}", trace.witness)
        })?;
        let galois_full = tor.galois_rank == tor.galois_target_dim;
        ensure(galois_full == tor.free, || format!("p={p}: Galois rank disagrees"))?;
        parts.push(format!("p={p}: |Γ₀|={expected_size} tame={} free={} torsor={}", t.tame, tor.free, tor.torsor));
    }
    Ok(parts.join("; ") + "; trace witnesses exactly for p ∈ {3,5}")
}

fn equivalence(entries: &[Entry]) -> Outcome {
    let mut applicable = 0;
    let mut skipped = Vec::new();
    for e in entries {
        let eq = e.report.equivalence.as_ref().ok_or("no equivalence section")?;
        if !eq.flat_over_invariants {
            skipped.push(e.doc.name.clone());
            continue;
        }
        applicable += 1;
        let lr = eq.inertia_linearly_reductive.ok_or_else(|| format!("{}: no inertia data", e.doc.name))?;
        let all = [eq.total_integral, eq.battery_exact, eq.reynold_family, lr];
        ensure(eq.agreement == AgreementDoc::Agree && all.iter().all(|&v| v == all[0]), || {
            format!("{}: verdicts {all:?}", e.doc.name)
        })?;
    }
    let g2 = entry(entries, "gauss-p2").report.equivalence.as_ref().unwrap();
    let g5 = entry(entries, "gauss-p5").report.equivalence.as_ref().unwrap();
    ensure(g2.verdict == Some(false) && g5.verdict == Some(true), || "gauss verdicts".into())?;
    Ok(format!(
        "four verdicts agree on all {applicable} entries free over C (not free: {})",
        skipped.join(", ")
    ))
}

fn reynold_properties(entries: &[Entry]) -> Outcome {
    let mut modules = 0;
    let mut tame = 0;
    for e in entries {
        let b = &e.built.action;
        let Some(alpha) = total_integral_search(b).map_err(|x| x.to_string())?.integral().cloned() else {
            continue;
        };
        tame += 1;
        let seqs = battery(b, &e.built.additions).map_err(|x| x.to_string())?;
        for s in &seqs {
            for n in [&s.left, &s.middle, &s.right] {
                let pr = reynold(&alpha, n).map_err(|x| format!("{} {}: {x}", e.doc.name, s.label))?.pr;
                let inv = n.invariants();
                let sq = pr.mul(&pr).unwrap();
                let fixes = pr.mul(inv.basis()).unwrap() == *inv.basis();
                let image = Subspace::span(&pr);
                ensure(sq == pr && fixes && image.same_as(&inv), || {
                    format!("{} {}: Reynold identities fail", e.doc.name, s.label)
                })?;
                modules += 1;
            }
        }
    }
    Ok(format!("pr² = pr, im pr = N^A, pr|N^A = id on {modules} battery modules of {tame} tame entries"))
}

/// A comodule of dimension at most 4: trivial and regular summands, conjugated
/// by a random invertible matrix.
fn random_comodule(h: &Arc<HopfAlgebra>, rng: &mut ChaCha8Rng) -> Comodule {
    let f = h.field;
    let p = f.characteristic() as i64;
    loop {
        let regular = if h.dim <= 4 { rng.random_range(0..=(4 / h.dim)) } else { 0 };
        let dim = rng.random_range((regular * h.dim).max(1)..=4);
        let mut m = Comodule::trivial(h.clone(), dim - regular * h.dim);
        for _ in 0..regular {
            m = if m.dim() == 0 {
                Comodule::regular(h.clone())
            } else {
                m.direct_sum(&Comodule::regular(h.clone())).unwrap()
            };
        }
        let n = m.dim();
        if n == 0 {
            continue;
        }
        let data: Vec<i64> = (0..n * n).map(|_| rng.random_range(0..p)).collect();
        let pm = Matrix::from_i64(f, n, n, &data);
        let Some(pinv) = pm.inverse() else { continue };
        let conj = pm.kron(&Matrix::identity(f, h.dim)).unwrap().mul(m.coaction()).unwrap().mul(&pinv).unwrap();
        return Comodule::new(h.clone(), conj).expect("conjugated comodule is valid");
    }
}

fn cotensor(entries: &[Entry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases = 0;
    for name in ["regular-c2", "gauss-p5", "alpha2-trivial"] {
        let b = &entry(entries, name).built.action;
        let h = b.hopf().clone();
        let mut ms = vec![Comodule::trivial(h.clone(), 1), b.comodule().clone()];
        ms.push(random_comodule(&h, &mut rng));
        ms.push(random_comodule(&h, &mut rng));
        for m in &ms {
            let r = cotensor_compare(b, m).map_err(|x| x.to_string())?;
            ensure(r.lhs_dim == r.rhs_dim && r.iso_verified, || format!("{name}, dim M = {}: {r:?}", m.dim()))?;
            cases += 1;
        }
    }
    Ok(format!("(B⊗M*)^A ≅ Com_A(M, B) in {cases} cases (seeded random comodules of dim ≤ 4)"))
}

fn slices(entries: &[Entry]) -> Outcome {
    let mut parts = Vec::new();
    for name in ["regular-s3", "coset-s3-c2", "gauss-p2", "gauss-p3"] {
        let e = entry(entries, name);
        let ga = e.built.gamma.as_ref().ok_or("not a group action")?;
        let mut split = false;
        for i in 0..ga.factors().len() {
            let d = slice_decompose(ga, i).map_err(|x| format!("{name}: {x}"))?;
            let index = ga.group().order() / d.inertia.len();
            ensure(d.verified() && ga.algebra().dim == index * d.local_dim, || {
                format!("{name} factor {i}: {d:?}")
            })?;
            split |= d.split_field.is_some();
        }
        let a = audit(&e.doc, &e.report).map_err(|x| x.to_string())?;
        ensure(a.passed(), || format!("{name}: audit {:?}", a.failures))?;
        let s = &e.report.slices.as_ref().unwrap().slices[0];
        parts.push(format!(
            "{name}: {}={}·{}{}",
            ga.algebra().dim,
            s.index,
            s.local_dim,
            if split { " (split)" } else { "" }
        ));
    }
    Ok(format!("φ equivariant, multiplicative, bijective, C ≅ B_𝔭^Γ₀; dim B = [Γ:Γ₀]·dim B_𝔭: {}", parts.join(", ")))
}

fn free_unramified_torsor(entries: &[Entry]) -> Outcome {
    let mut n = 0;
    for e in entries.iter().filter(|e| e.report.invariants.dim == 1) {
        let t = e.report.torsor.as_ref().ok_or("no torsor section")?;
        let inertia = e.report.inertia.as_ref().ok_or("no inertia section")?;
        ensure(!inertia.is_empty(), || format!("{}: no primes", e.doc.name))?;
        let unramified = inertia.iter().all(|i| i.trivial);
        ensure(t.free == unramified && unramified == t.torsor, || {
            format!("{}: free {} unramified {} torsor {}", e.doc.name, t.free, unramified, t.torsor)
        })?;
        n += 1;
    }
    Ok(format!("free ⇔ all inertia trivial ⇔ torsor on {n} entries with C = k"))
}

fn inertia_agreement(entries: &[Entry]) -> Outcome {
    let mut primes = 0;
    let mut actions = 0;
    for e in entries {
        let Some(ga) = &e.built.gamma else { continue };
        actions += 1;
        for i in 0..ga.factors().len() {
            let ok = inertia_agrees(ga, i).map_err(|x| x.to_string())?;
            ensure(ok, || format!("{} at {}", e.doc.name, ga.factors()[i].point.label))?;
            primes += 1;
        }
    }
    Ok(format!("inertia_hopf ≅ Map(Γ₀, k(𝔭)) at {primes} primes of {actions} group actions"))
}

fn has_root(f: FieldSpec, coeffs: &[i64]) -> bool {
    f.elements().unwrap().iter().any(|x| {
        let v = coeffs.iter().rev().fold(f.zero(), |acc, &c| f.add(&f.mul(&acc, x), &f.from_i64(c)));
        f.is_zero(&v)
    })
}

fn base_change(entries: &[Entry]) -> Outcome {
    let f2 = FieldSpec::prime(2).unwrap();
    let f5 = FieldSpec::prime(5).unwrap();
    ensure(!has_root(f2, &[1, 1, 1]) && !has_root(f5, &[3, 0, 1]), || "moduli not irreducible".into())?;
    let f4 = FieldSpec::extension(2, &[1, 1, 1]).unwrap();
    let f25 = FieldSpec::extension(5, &[3, 0, 1]).unwrap();
    let tame = |b: &ComoduleAlgebra| total_integral_search(b).map(|s| s.integral().is_some()).map_err(|x| x.to_string());
    let mut lines = Vec::new();
    for (names, target) in [
        (["gauss-p2", "regular-c4", "alpha2-trivial", "mu2-grading-f2"], f4),
        (["gauss-p5", "regular-c2", "trivial-c2-f5", "regular-plus-trivial"], f25),
    ] {
        for name in names {
            let b = &entry(entries, name).built.action;
            let ext = extend_scalars(b, target).map_err(|x| x.to_string())?;
            let (before, after) = (tame(b)?, tame(&ext)?);
            ensure(before == after && ext.invariants().dim() == b.invariants().dim(), || {
                format!("{name} over {target}: tame {before} → {after}")
            })?;
            lines.push(format!("{name}:{before}"));
        }
    }
    // invariants commute with base change on every entry over 𝔽₂ or 𝔽₅
    let mut flat = 0;
    for e in entries {
        let target = match e.built.field {
            FieldSpec::Prime(2) => f4,
            FieldSpec::Prime(5) => f25,
            _ => continue,
        };
        let ext = extend_scalars(&e.built.action, target).map_err(|x| x.to_string())?;
        ensure(ext.invariants().dim() == e.built.action.invariants().dim(), || {
            format!("{}: invariants change under base change", e.doc.name)
        })?;
        flat += 1;
    }
    let mut rebased = Vec::new();
    for name in ["trivial-c2-f2", "gauss-p2", "two-orbits-c2", "regular-plus-trivial"] {
        let b = &entry(entries, name).built.action;
        let r = rebase_check(b).map_err(|x| x.to_string())?;
        ensure(r.invariant_dim > 1 && r.agree(), || format!("{name}: {r:?}"))?;
        rebased.push(format!("{name}:{}", r.tame_over_c));
    }
    Ok(format!(
        "F₂→F₄, F₅→F₂₅ [{}]; dim C stable on {flat} entries; over C [{}]",
        lines.join(" "),
        rebased.join(" ")
    ))
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_ramify");
    let run = || {
        Command::new(exe)
            .args(["catalog", "run", "--all"])
            .output()
            .map_err(|x| x.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || "catalog run failed".into())?;
    ensure(a.stdout == b.stdout, || "reports differ between runs".into())?;
    let reports: Vec<VerdictReport> = serde_json::from_slice(&a.stdout).map_err(|x| x.to_string())?;
    Ok(format!("{} reports, {} bytes, byte-identical across two runs", reports.len(), a.stdout.len()))
}

fn main() -> ExitCode {
    let entries = catalog_entries();
    let criteria: Vec<Criterion> = vec![
        ("hopf-validators", Box::new(|| hopf_validators(&entries))),
        ("maschke", Box::new(maschke)),
        ("gaussian-catalog", Box::new(|| gaussian(&entries))),
        ("equivalence", Box::new(|| equivalence(&entries))),
        ("reynold", Box::new(|| reynold_properties(&entries))),
        ("cotensor", Box::new(|| cotensor(&entries))),
        ("slices", Box::new(|| slices(&entries))),
        ("free-unramified-torsor", Box::new(|| free_unramified_torsor(&entries))),
        ("inertia-agreement", Box::new(|| inertia_agreement(&entries))),
        ("base-change", Box::new(|| base_change(&entries))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {:>2} {name} (tolerance: {TOLERANCE}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name} (tolerance: {TOLERANCE}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

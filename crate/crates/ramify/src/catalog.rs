//! Built-in example documents.

use ramify_core::group::FiniteGroup;
use ramify_core::{FieldSpec, Matrix};

use crate::document::{
    ActionDocument, AlgebraDoc, BatteryDoc, CoactionDoc, ComoduleDoc, FactorDoc, GeneratorDoc, GroupDoc, HopfDoc,
    PointDoc,
};
use crate::scalar::{format_matrix, format_scalar, format_vector, FieldDoc, ScalarDoc, VectorDoc};

pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn() -> ActionDocument,
}

impl Entry {
    pub fn document(&self) -> ActionDocument {
        (self.build)()
    }
}

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

fn s(f: FieldSpec, v: i64) -> ScalarDoc {
    format_scalar(f, &f.from_i64(v))
}

fn v(f: FieldSpec, xs: &[i64]) -> VectorDoc {
    xs.iter().map(|&x| s(f, x)).collect()
}

fn unit_vector(f: FieldSpec, n: usize, i: usize) -> VectorDoc {
    (0..n).map(|j| s(f, (i == j) as i64)).collect()
}

fn document(name: &str, description: &str, f: FieldSpec, hopf: HopfDoc, algebra: AlgebraDoc, coaction: CoactionDoc) -> ActionDocument {
    ActionDocument {
        name: name.into(),
        description: Some(description.into()),
        field: FieldDoc::of(f),
        hopf,
        algebra,
        coaction,
        points: Vec::new(),
        battery: Vec::new(),
        checks: None,
    }
}

/// `Γ` permuting the points of a finite set; `act(γ, i)` is the image of point `i`.
fn permutation_action(
    name: &str,
    description: &str,
    f: FieldSpec,
    gd: GroupDoc,
    g: &FiniteGroup,
    points: &[String],
    act: impl Fn(usize, usize) -> usize,
) -> ActionDocument {
    let n = points.len();
    let generators = g
        .elements()
        .filter(|&x| x != g.identity())
        .map(|x| {
            let mut m = Matrix::zeros(f, n, n);
            for i in 0..n {
                m.set(act(x, i), i, f.one());
            }
            GeneratorDoc {
                element: g.label(x).into(),
                matrix: format_matrix(&m),
            }
        })
        .collect();
    let factors = points
        .iter()
        .enumerate()
        .map(|(i, label)| FactorDoc {
            label: label.clone(),
            idempotent: unit_vector(f, n, i),
            residue: FieldDoc::of(f),
            quotient: unit_vector(f, n, i),
        })
        .collect();
    document(
        name,
        description,
        f,
        HopfDoc::FunctionAlgebra(gd),
        AlgebraDoc::FunctionsOn(points.to_vec()),
        CoactionDoc::GroupAction { generators, factors },
    )
}

fn group(gd: &GroupDoc) -> FiniteGroup {
    match gd {
        GroupDoc::Cyclic(n) => FiniteGroup::cyclic(*n).expect("cyclic"),
        GroupDoc::Symmetric(n) => FiniteGroup::symmetric(*n).expect("symmetric"),
        GroupDoc::Table { .. } => unreachable!(),
    }
}

fn regular(name: &str, gd: GroupDoc, f: FieldSpec) -> ActionDocument {
    let g = group(&gd);
    let points: Vec<String> = g.labels().to_vec();
    permutation_action(name, "Γ acting on itself by left translation", f, gd, &g, &points, |x, i| g.mul(x, i))
}

fn coset(name: &str, gd: GroupDoc, f: FieldSpec, sub: &[usize]) -> ActionDocument {
    let g = group(&gd);
    let cosets = g.left_cosets(sub);
    let points: Vec<String> = (0..cosets.len()).map(|i| format!("c{i}")).collect();
    let index = |x: usize| cosets.iter().position(|c| c.contains(&x)).expect("partition");
    permutation_action(name, "Γ acting on the left cosets of a subgroup", f, gd, &g, &points, |x, i| {
        index(g.mul(x, cosets[i][0]))
    })
}

fn trivial(name: &str, n: usize, f: FieldSpec, points: usize) -> ActionDocument {
    let gd = GroupDoc::Cyclic(n);
    let g = group(&gd);
    let labels: Vec<String> = (0..points).map(|i| format!("p{i}")).collect();
    permutation_action(name, "Γ acting trivially", f, gd, &g, &labels, |_, i| i)
}

/// `C₂` acting on `𝔽_p[x]/(x² + 1)` by `x ↦ −x`, the fiber of `ℤ[i]` over `p`.
fn gauss(p: u64) -> ActionDocument {
    let f = fp(p);
    let factors = match p {
        2 => vec![FactorDoc {
            label: "(x+1)".into(),
            idempotent: v(f, &[1, 0]),
            residue: FieldDoc::of(f),
            quotient: v(f, &[1, 1]),
        }],
        3 => {
            let k = FieldSpec::extension(3, &[1, 0, 1]).expect("F_9");
            let t = k.generator().expect("generator");
            vec![FactorDoc {
                label: "(3)".into(),
                idempotent: v(f, &[1, 0]),
                residue: FieldDoc::of(k),
                quotient: vec![format_scalar(k, &k.one()), format_scalar(k, &t)],
            }]
        }
        _ => {
            // x² + 1 = (x − 2)(x − 3); e = (x − 3)/(2 − 3) and its complement
            vec![
                FactorDoc {
                    label: "(x-2)".into(),
                    idempotent: v(f, &[3, -1]),
                    residue: FieldDoc::of(f),
                    quotient: v(f, &[1, 2]),
                },
                FactorDoc {
                    label: "(x-3)".into(),
                    idempotent: v(f, &[3, 1]),
                    residue: FieldDoc::of(f),
                    quotient: v(f, &[1, 3]),
                },
            ]
        }
    };
    document(
        &format!("gauss-p{p}"),
        "C₂ acting on F_p[x]/(x²+1) by x ↦ −x",
        f,
        HopfDoc::FunctionAlgebra(GroupDoc::Cyclic(2)),
        AlgebraDoc::Polynomial {
            modulus: v(f, &[1, 0, 1]),
            var: "x".into(),
        },
        CoactionDoc::GroupAction {
            generators: vec![GeneratorDoc {
                element: "g".into(),
                matrix: vec![v(f, &[1, 0]), v(f, &[0, -1])],
            }],
            factors,
        },
    )
}

/// `μₙ` or `α_p` acting on itself, or trivially on the base field.
fn infinitesimal(name: &str, hopf: HopfDoc, f: FieldSpec, translation: bool, point: &[i64]) -> ActionDocument {
    let (algebra, coaction, description) = if translation {
        (AlgebraDoc::HopfAlgebra, CoactionDoc::Regular, "acting on itself by translation")
    } else {
        (AlgebraDoc::Ground, CoactionDoc::Trivial, "acting trivially on the base field")
    };
    let mut doc = document(name, description, f, hopf, algebra, coaction);
    let quotient = if translation { v(f, point) } else { v(f, &[1]) };
    doc.points.push(PointDoc {
        label: "m".into(),
        residue: FieldDoc::of(f),
        quotient,
    });
    doc
}

fn sum_addition(f: FieldSpec, n: usize) -> BatteryDoc {
    BatteryDoc {
        label: "sum".into(),
        source: ComoduleDoc::Regular,
        target: ComoduleDoc::Trivial(1),
        map: vec![v(f, &vec![1; n])],
    }
}

fn regular_c2() -> ActionDocument {
    let mut doc = regular("regular-c2", GroupDoc::Cyclic(2), fp(5));
    doc.battery.push(sum_addition(fp(5), 2));
    doc
}

fn trivial_c2_f2() -> ActionDocument {
    let mut doc = trivial("trivial-c2-f2", 2, fp(2), 2);
    doc.battery.push(sum_addition(fp(2), 2));
    doc
}

fn mu2_translation_q() -> ActionDocument {
    let q = FieldSpec::Rationals;
    let mut doc = infinitesimal("mu2-translation-q", HopfDoc::MuN(2), q, true, &[1, 1]);
    doc.points.push(PointDoc {
        label: "m'".into(),
        residue: FieldDoc::of(q),
        quotient: v(q, &[1, -1]),
    });
    doc
}

/// `μ₂` grading `𝔽₂[y]/(y²)` with `y` in degree one: `ρ(y) = y ⊗ x`.
fn mu2_grading() -> ActionDocument {
    let f = fp(2);
    let mut rho = Matrix::zeros(f, 4, 2);
    rho.set(0, 0, f.one());
    rho.set(3, 1, f.one());
    let mut doc = document(
        "mu2-grading-f2",
        "μ₂ grading the dual numbers",
        f,
        HopfDoc::MuN(2),
        AlgebraDoc::Polynomial {
            modulus: v(f, &[0, 0, 1]),
            var: "y".into(),
        },
        CoactionDoc::Matrix(format_matrix(&rho)),
    );
    doc.points.push(PointDoc {
        label: "(y)".into(),
        residue: FieldDoc::of(f),
        quotient: format_vector(f, &[f.one(), f.zero()]),
    });
    doc
}

fn two_orbits() -> ActionDocument {
    let gd = GroupDoc::Cyclic(2);
    let g = group(&gd);
    let points: Vec<String> = ["a0", "a1", "b0", "b1"].iter().map(|x| x.to_string()).collect();
    permutation_action("two-orbits-c2", "C₂ acting freely on two orbits", fp(3), gd, &g, &points, |x, i| {
        if x == g.identity() {
            i
        } else {
            i ^ 1
        }
    })
}

fn regular_plus_trivial() -> ActionDocument {
    let gd = GroupDoc::Cyclic(2);
    let g = group(&gd);
    let points: Vec<String> = ["a", "b", "pt"].iter().map(|x| x.to_string()).collect();
    permutation_action(
        "regular-plus-trivial",
        "C₂ swapping two points and fixing a third",
        fp(5),
        gd,
        &g,
        &points,
        |x, i| if x == g.identity() || i == 2 { i } else { 1 - i },
    )
}

pub fn entries() -> Vec<Entry> {
    vec![
        Entry { name: "gauss-p2", summary: "C₂ on F₂[x]/(x²+1): ramified", build: || gauss(2) },
        Entry { name: "gauss-p3", summary: "C₂ on F₃[x]/(x²+1): inert", build: || gauss(3) },
        Entry { name: "gauss-p5", summary: "C₂ on F₅[x]/(x²+1): split", build: || gauss(5) },
        Entry { name: "regular-c2", summary: "C₂ on itself over F₅", build: regular_c2 },
        Entry { name: "regular-c2-q", summary: "C₂ on itself over Q", build: || regular("regular-c2-q", GroupDoc::Cyclic(2), FieldSpec::Rationals) },
        Entry { name: "regular-c3", summary: "C₃ on itself over F₃", build: || regular("regular-c3", GroupDoc::Cyclic(3), fp(3)) },
        Entry { name: "regular-c4", summary: "C₄ on itself over F₂", build: || regular("regular-c4", GroupDoc::Cyclic(4), fp(2)) },
        Entry { name: "regular-s3", summary: "S₃ on itself over F₂", build: || regular("regular-s3", GroupDoc::Symmetric(3), fp(2)) },
        Entry { name: "coset-s3-c2", summary: "S₃ on S₃/C₂ over F₇", build: || coset("coset-s3-c2", GroupDoc::Symmetric(3), fp(7), &[0, 1]) },
        Entry { name: "c4-coset-c2", summary: "C₄ on C₄/C₂ over F₃", build: || coset("c4-coset-c2", GroupDoc::Cyclic(4), fp(3), &[0, 2]) },
        Entry { name: "trivial-c2-f2", summary: "C₂ fixing two points over F₂", build: trivial_c2_f2 },
        Entry { name: "trivial-c3-f3", summary: "C₃ fixing a point over F₃", build: || trivial("trivial-c3-f3", 3, fp(3), 1) },
        Entry { name: "trivial-c2-f5", summary: "C₂ fixing a point over F₅", build: || trivial("trivial-c2-f5", 2, fp(5), 1) },
        Entry { name: "trivial-c3-q", summary: "C₃ fixing a point over Q", build: || trivial("trivial-c3-q", 3, FieldSpec::Rationals, 1) },
        Entry { name: "mu2-translation", summary: "μ₂ on itself over F₂", build: || infinitesimal("mu2-translation", HopfDoc::MuN(2), fp(2), true, &[1, 1]) },
        Entry { name: "mu2-trivial", summary: "μ₂ trivially on F₂", build: || infinitesimal("mu2-trivial", HopfDoc::MuN(2), fp(2), false, &[]) },
        Entry { name: "mu3-translation", summary: "μ₃ on itself over F₃", build: || infinitesimal("mu3-translation", HopfDoc::MuN(3), fp(3), true, &[1, 1, 1]) },
        Entry { name: "mu3-trivial", summary: "μ₃ trivially on F₃", build: || infinitesimal("mu3-trivial", HopfDoc::MuN(3), fp(3), false, &[]) },
        Entry { name: "mu2-translation-q", summary: "μ₂ on itself over Q", build: mu2_translation_q },
        Entry { name: "mu2-grading-f2", summary: "μ₂ grading F₂[y]/(y²)", build: mu2_grading },
        Entry { name: "alpha2-trivial", summary: "α₂ trivially on F₂", build: || infinitesimal("alpha2-trivial", HopfDoc::AlphaP, fp(2), false, &[]) },
        Entry { name: "alpha2-translation", summary: "α₂ on itself over F₂", build: || infinitesimal("alpha2-translation", HopfDoc::AlphaP, fp(2), true, &[1, 0]) },
        Entry { name: "two-orbits-c2", summary: "C₂ on two free orbits over F₃", build: two_orbits },
        Entry { name: "regular-plus-trivial", summary: "C₂ on a free orbit and a fixed point over F₅", build: regular_plus_trivial },
    ]
}

/// Looks up an entry by name, ignoring ASCII case.
pub fn find(name: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

//! Worked examples checked against values computed by hand.

use std::sync::Arc;

use ramify_core::algebra::Algebra;
use ramify_core::comodule::{comodule_homs, cotensor_compare, BAModule, Comodule, ComoduleAlgebra};
use ramify_core::constant::{
    coaction_from_group_action, inertia_at, local_freeness_check, point_of_functions, quotient_torsor_check,
    slice_decompose, tame_at, trace_tame, transitivity_check, GammaAction, LocalFactor,
};
use ramify_core::geometry::{galois_map, inertia_hopf, is_free, is_torsor, Point};
use ramify_core::group::FiniteGroup;
use ramify_core::hopf::{dual_hopf, make_standard, sweedler_expand, validate_hopf, HopfAlgebra, StandardHopf};
use ramify_core::matrix::Matrix;
use ramify_core::tameness::{
    exactness_check, is_linearly_reductive, reynold, total_integral, ShortExactSequence, TotalIntegral,
};
use ramify_core::FieldSpec;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn c2_functions(p: u64) -> Arc<HopfAlgebra> {
    Arc::new(HopfAlgebra::function_algebra(&FiniteGroup::cyclic(2).unwrap(), fp(p)))
}

fn gauss(p: u64) -> GammaAction {
    let f = fp(p);
    let b = Algebra::polynomial_quotient(f, &[f.one(), f.zero(), f.one()], "x").unwrap();
    let gamma = Matrix::from_i64(f, 2, 2, &[1, 0, 0, -1]);
    let factors = match p {
        2 => vec![LocalFactor {
            idempotent: b.one(),
            point: Point::new(&b, "(x+1)".into(), f, vec![f.one(), f.one()]).unwrap(),
        }],
        3 => {
            let k = FieldSpec::extension(3, &[1, 0, 1]).unwrap();
            vec![LocalFactor {
                idempotent: b.one(),
                point: Point::new(&b, "(0)".into(), k, vec![k.one(), k.generator().unwrap()]).unwrap(),
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
    GammaAction::from_generators(FiniteGroup::cyclic(2).unwrap(), b, &[(1, gamma)], factors).unwrap()
}

/// Γ acting on functions on `Γ/H` by `γ·e_c = e_{γc}`.
fn coset_action(g: FiniteGroup, h: &[usize], f: FieldSpec) -> GammaAction {
    let cosets = g.left_cosets(h);
    let n = cosets.len();
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let b = Algebra::functions_on(f, labels);
    let index = |x: usize| cosets.iter().position(|c| c.contains(&x)).unwrap();
    let mats = g
        .elements()
        .map(|gamma| {
            let mut m = Matrix::zeros(f, n, n);
            for (c, coset) in cosets.iter().enumerate() {
                m.set(index(g.mul(gamma, coset[0])), c, f.one());
            }
            m
        })
        .collect();
    let factors = (0..n).map(|i| point_of_functions(&b, i, format!("c{i}")).unwrap()).collect();
    GammaAction::new(g, b, mats, factors).unwrap()
}

fn involution(g: &FiniteGroup) -> usize {
    g.elements().find(|&x| x != g.identity() && g.mul(x, x) == g.identity()).unwrap()
}

#[test]
fn regular_c2_invariants_by_hand() {
    // ρ(e₀) = e₀⊗e₀ + e₁⊗e₁, ρ(e₁) = e₀⊗e₁ + e₁⊗e₀; ·⊗1 sends eᵢ to eᵢ⊗(e₀ + e₁)
    let f = fp(5);
    let diff = Matrix::from_i64(f, 4, 2, &[0, 0, -1, 1, 0, 0, 1, -1]);
    assert_eq!(diff.kernel().cols(), 1);
    let b = ComoduleAlgebra::regular(c2_functions(5)).unwrap();
    assert_eq!(b.invariants().dim(), 1);
    assert!(b.invariants().contains(&[f.one(), f.one()]));
}

#[test]
fn trivial_c2_over_f2_has_no_integral() {
    // α(e₀) = x, α(e₁) = y; comodule condition forces x = y, unitality x + y = 1: 2x = 1
    let f = fp(2);
    let m = Matrix::from_i64(f, 2, 2, &[1, -1, 1, 1]);
    assert_eq!(m.solve_affine(&[f.zero(), f.one()]).unwrap(), None);
    let b = ComoduleAlgebra::ground(c2_functions(2));
    assert!(total_integral(&b).unwrap().is_none());
    assert!(is_linearly_reductive(&c2_functions(5)).unwrap());
    assert!(!is_linearly_reductive(&c2_functions(2)).unwrap());
}

#[test]
fn standard_hopf_algebras() {
    let mu3 = make_standard(&StandardHopf::MuN(3), fp(7)).unwrap();
    assert!(validate_hopf(&mu3).unwrap().is_valid());
    let x = mu3.basis(1);
    let exp = sweedler_expand(&mu3, &x).unwrap();
    assert_eq!(exp.terms.len(), 1);
    assert_eq!((exp.terms[0].left.clone(), exp.terms[0].right.clone()), (x.clone(), x));
    let s3 = make_standard(&StandardHopf::FunctionAlgebra(FiniteGroup::symmetric(3).unwrap()), fp(5)).unwrap();
    assert_eq!(s3.dim, 6);
    assert!(make_standard(&StandardHopf::AlphaP, FieldSpec::Rationals).is_err());
    assert!(is_linearly_reductive(&Arc::new(make_standard(&StandardHopf::MuN(3), fp(3)).unwrap())).unwrap());
    assert!(!is_linearly_reductive(&Arc::new(make_standard(&StandardHopf::AlphaP, fp(2)).unwrap())).unwrap());
}

#[test]
fn dual_of_functions_is_the_group_algebra() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let d = dual_hopf(&HopfAlgebra::function_algebra(&g, fp(5))).unwrap();
    let kg = make_standard(&StandardHopf::GroupAlgebra(g), fp(5)).unwrap();
    // both have basis indexed by group elements; the identity matrix matches them
    assert!(d.hopf.is_isomorphism(&kg, &Matrix::identity(fp(5), 2)).unwrap());
}

#[test]
fn comodule_hom_dimensions() {
    let h = c2_functions(5);
    let triv = Comodule::trivial(h.clone(), 2);
    assert_eq!(comodule_homs(&triv, &triv).unwrap().len(), 4);
    let reg = Comodule::regular(h.clone());
    assert_eq!(comodule_homs(&reg, &reg).unwrap().len(), 2);
    let b = ComoduleAlgebra::regular(h.clone()).unwrap();
    let k = Comodule::trivial(h, 1);
    assert_eq!(comodule_homs(&k, b.comodule()).unwrap().len(), b.invariants().dim());
    for m in [&k, &reg] {
        let r = cotensor_compare(&b, m).unwrap();
        assert!(r.iso_verified);
        assert_eq!(r.lhs_dim, r.rhs_dim);
    }
    assert_eq!(cotensor_compare(&b, &reg).unwrap().lhs_dim, 2);
}

#[test]
fn reynold_on_the_regular_action() {
    // with α = id: pr(e₀) = S(e₀)e₀ + S(e₁)e₁ = e₀ + e₁ and pr(e₁) = e₁e₀ + e₀e₁ = 0
    let h = c2_functions(5);
    let b = Arc::new(ComoduleAlgebra::regular(h).unwrap());
    let alpha = total_integral(&b).unwrap().unwrap();
    assert!(alpha.verify(&b).unwrap());
    let identity = TotalIntegral { alpha: Matrix::identity(fp(5), 2) };
    assert!(identity.verify(&b).unwrap());
    let n = BAModule::regular(b.clone());
    let pr = reynold(&identity, &n).unwrap().pr;
    assert_eq!(pr, Matrix::from_i64(fp(5), 2, 2, &[1, 0, 1, 0]));
    // 0 → constants → A → A/constants → 0 as comodules, i.e. (k, A)-modules
    let k = Arc::new(ComoduleAlgebra::ground(b.hopf().clone()));
    let a = BAModule::free(k.clone(), b.comodule()).unwrap();
    let constants = b.invariants().clone();
    let seq = ShortExactSequence::from_submodule("constants".into(), &a, &constants).unwrap();
    let alpha_k = total_integral(&k).unwrap().unwrap();
    let r = exactness_check(&seq, Some(&alpha_k)).unwrap();
    assert_eq!(r.invariant_dims, [1, 1, 0]);
    assert!(r.exact());
    assert_eq!(r.reynold_lift, Some(true));
}

#[test]
fn galois_ranks() {
    let reg = ComoduleAlgebra::regular(c2_functions(5)).unwrap();
    let g = galois_map(&reg).unwrap();
    assert_eq!((g.absolute.rows(), g.absolute.cols(), g.absolute_rank), (4, 4, 4));
    assert!(is_free(&reg).unwrap());
    let triv = ComoduleAlgebra::ground(c2_functions(5));
    let g = galois_map(&triv).unwrap();
    assert_eq!(g.absolute_rank, 1);
    assert!(!is_free(&triv).unwrap());
    assert!(is_torsor(&reg).unwrap().torsor);
}

#[test]
fn gaussian_integers_mod_p() {
    let f5 = fp(5);
    assert_eq!(trace_tame(&gauss(5)).unwrap(), Some(vec![f5.from_i64(3), f5.zero()]));
    assert_eq!(trace_tame(&gauss(2)).unwrap(), None);
    assert!(trace_tame(&gauss(3)).unwrap().is_some());
    assert_eq!(inertia_at(&gauss(2), 0).unwrap(), vec![0, 1]);
    assert_eq!(inertia_at(&gauss(3), 0).unwrap(), vec![0]);
    for p in [3, 5] {
        let b = coaction_from_group_action(&gauss(p)).unwrap();
        assert_eq!(b.invariants().dim(), 1);
        assert!(is_free(&b).unwrap());
        let t = is_torsor(&b).unwrap();
        assert!(t.torsor);
        assert_eq!(t.flatness.rank, Some(2));
        assert!(local_freeness_check(&gauss(p)).unwrap().holds());
        assert!(tame_at(&gauss(p), 0).unwrap().tame);
    }
    let b2 = coaction_from_group_action(&gauss(2)).unwrap();
    let t = is_torsor(&b2).unwrap();
    // C = B, so B is free of rank 1 over C while the action is not free
    assert!(!is_free(&b2).unwrap());
    assert!(!t.torsor && t.flatness.free);
    assert_eq!(t.flatness.rank, Some(1));
    assert!(!t.relative_surjective && t.cokernel_witness.is_some());
    let lf = local_freeness_check(&gauss(2)).unwrap();
    assert!(!lf.applicable);
    let ta = tame_at(&gauss(2), 0).unwrap();
    assert!(!ta.tame && !ta.linearly_reductive);
}

#[test]
fn s3_on_cosets_of_a_transposition() {
    let g = FiniteGroup::symmetric(3).unwrap();
    let tau = involution(&g);
    let ga = coset_action(g, &[0, tau], fp(7));
    assert!(transitivity_check(&ga).transitive);
    let p = (0..3).find(|&i| inertia_at(&ga, i).unwrap().contains(&tau)).unwrap();
    let s = slice_decompose(&ga, p).unwrap();
    assert!(s.verified());
    assert_eq!(s.inertia.len(), 2);
    assert_eq!((s.local_dim, s.slice.dim()), (1, 3));
    let b = coaction_from_group_action(&ga).unwrap();
    assert_eq!(b.invariants().dim(), 1);
}

#[test]
fn c4_on_two_points_through_the_quotient() {
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let h = c4.subgroup(&[0, 2]).unwrap();
    let ga = coset_action(c4, &h, fp(3));
    let r = quotient_torsor_check(&ga, &h).unwrap();
    assert_eq!((r.quotient_order, r.fixed_dim), (2, 2));
    assert!(r.torsor.torsor && r.subgroup_is_inertia);
    assert!(!r.original_free);
}

#[test]
fn trivial_mu2_in_characteristic_two() {
    // μ₂-comodules are ℤ/2-graded spaces and invariants are the degree-0 part,
    // so α(xⁱ) = [i = 0] is a total integral even over 𝔽₂
    let h = Arc::new(make_standard(&StandardHopf::MuN(2), fp(2)).unwrap());
    let b = ComoduleAlgebra::ground(h.clone());
    let alpha = TotalIntegral {
        alpha: Matrix::from_i64(fp(2), 1, 2, &[1, 0]),
    };
    assert!(alpha.verify(&b).unwrap());
    assert!(is_linearly_reductive(&h).unwrap());
    let point = Point::new(b.algebra(), "pt".into(), fp(2), vec![fp(2).one()]).unwrap();
    let inertia = inertia_hopf(&b, &point).unwrap();
    assert!(inertia.hopf.is_isomorphism(&h, &Matrix::identity(fp(2), 2)).unwrap());
}

mod common;

use common::{residues, tensor2, Oracle};
use homalg::covariant::{
    build_quasitriangular, characterization, check_coderivation, check_covariant_coderivation,
    check_covariant_hom_bialgebra, check_derivation, check_dual_covariant_hom_bialgebra, check_perturbation,
    check_quasitriangular_condition, coassoc_defect, dualize, induce_covariant_by_composition, lr_tensor_products,
    mixed_triple_product, quasitriangular_maps, tensor_power_bimodule, CovariantHomBialgebra, MixedKind,
};
use homalg::field::{scalar_arith, ArithOp};
use homalg::hom::{check_hom_algebra, check_hom_coalgebra, check_infinitesimal_compat, induce_algebra_by_composition};
use homalg::rota_baxter::{
    check_hom_dendriform, check_hom_prelie, check_rb_system, check_weak_pseudotwistor, dendriform_from_rbs, prelie_from_dendriform,
    prelie_from_dendriform_swapped, product_from_twistor, pseudotwistor_from_rbs, rbs_from_weighted_operator, star_product, HomDendriform,
    RotaBaxterSystem,
};
use homalg::search::{catalog, dual_numbers, nonassociative_pair, zero_algebra};
use homalg::tensor::{apply_twistor, bilinear_eval, coproduct_eval, map_tensor2};
use homalg::yang_baxter::{
    check_yb_pair, rbs_from_ybp, triple_product, ybp_induced_structures, TripleKind, YangBaxterPair,
};
use homalg::{BilinearMap, Coproduct, Error, FieldSpec, HomAlgebra, LinearMap, Tensor2, Tensor3, TwistorMap, Vector};

const Q: FieldSpec = FieldSpec::Rational;

fn gf5() -> FieldSpec {
    FieldSpec::gf(5)
}

fn t2(f: FieldSpec, rows: &[&[i64]]) -> Tensor2 {
    Tensor2::from_i64(f, rows)
}

fn vec_of(f: FieldSpec, xs: &[i64]) -> Vector {
    Vector::from_i64(f, xs)
}

fn one_x(f: FieldSpec) -> Tensor2 {
    t2(f, &[&[0, 1], &[0, 0]])
}

/// `R(u) = u·x` on the dual numbers.
fn times_x(f: FieldSpec) -> LinearMap {
    LinearMap::from_i64(f, &[&[0, 0], &[1, 0]])
}

fn d_pair(f: FieldSpec) -> YangBaxterPair {
    YangBaxterPair::new(dual_numbers(f), one_x(f), one_x(f)).unwrap()
}

fn coords(v: &[homalg::Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[test]
fn scalar_arithmetic_and_parsing() {
    let half = Q.parse("1/2").unwrap();
    let third = Q.parse("1/3").unwrap();
    assert_eq!(scalar_arith(&half, &third, ArithOp::Add).unwrap().to_string(), "5/6");
    let f = gf5();
    let prod = scalar_arith(&f.from_i64(3), &f.from_i64(4), ArithOp::Mul).unwrap();
    assert_eq!(prod.to_string(), "2");
    let inv = scalar_arith(&f.one(), &f.from_i64(3), ArithOp::Div).unwrap();
    assert_eq!(inv.to_string(), "2");
    assert_eq!(Q.parse("-4/6").unwrap().to_string(), "-2/3");
    assert_eq!(f.parse("7").unwrap().to_string(), "2");
    assert!(matches!(f.parse("1/2"), Err(Error::Parse(_))));
    assert!(matches!(scalar_arith(&f.one(), &f.zero(), ArithOp::Div), Err(Error::DivisionByZero)));
}

#[test]
fn products_and_tensor_maps_on_small_algebras() {
    let d = dual_numbers(Q);
    let one_plus_x = vec_of(Q, &[1, 1]);
    let sq = bilinear_eval(d.mu(), &one_plus_x, &one_plus_x).unwrap();
    assert_eq!(coords(sq.coords()), ["1", "2"]);
    let x = vec_of(Q, &[0, 1]);
    assert!(bilinear_eval(d.mu(), &x, &x).unwrap().is_zero());
    let z = zero_algebra(Q);
    assert!(bilinear_eval(z.mu(), &vec_of(Q, &[3, -1]), &vec_of(Q, &[2, 5])).unwrap().is_zero());

    let alpha = LinearMap::from_i64(Q, &[&[1, 0], &[0, 2]]);
    let e2 = vec_of(Q, &[0, 1]);
    assert_eq!(coords(alpha.apply(&alpha.apply(&e2)).coords()), ["0", "4"]);

    let kill = LinearMap::from_i64(Q, &[&[1, 0], &[0, 0]]);
    assert!(map_tensor2(&kill, &kill, &Tensor2::basis(Q, 2, 0, 1)).unwrap().is_zero());
    let f = gf5();
    let a5 = LinearMap::from_i64(f, &[&[1, 0], &[0, 2]]);
    let e11 = Tensor2::basis(f, 2, 0, 0);
    assert_eq!(map_tensor2(&a5, &a5, &e11).unwrap(), e11);
}

#[test]
fn hom_associativity_witness_on_negative_fixture() {
    let report = check_hom_algebra(&nonassociative_pair(Q));
    assert!(!report.passed());
    let w = report
        .witnesses()
        .iter()
        .find(|w| w.identity == "hom-associativity")
        .unwrap();
    assert_eq!(w.basis, [0, 0, 0]);
    // (a·a)·a = b·a = 0 and a·(a·a) = a·b = a
    assert_eq!(coords(&w.lhs), ["0", "0"]);
    assert_eq!(coords(&w.rhs), ["1", "0"]);
    assert!(check_hom_algebra(&dual_numbers(Q)).passed());
    assert!(check_hom_algebra(&zero_algebra(Q)).passed());
}

#[test]
fn coalgebra_and_infinitesimal_examples() {
    let d = dual_numbers(Q);
    let id = LinearMap::identity(Q, 2);
    let bad = Coproduct::from_fn(Q, 2, |i| if i == 0 { one_x(Q) } else { Tensor2::zero(Q, 2) });
    let c = homalg::HomCoalgebra::unlabeled(bad.clone(), id.clone()).unwrap();
    let report = check_hom_coalgebra(&c);
    assert!(!report.passed());
    assert_eq!(report.first_witness().unwrap().basis, [0]);

    let unit = Coproduct::from_fn(Q, 2, |i| if i == 0 { Tensor2::basis(Q, 2, 0, 0) } else { Tensor2::zero(Q, 2) });
    let report = check_infinitesimal_compat(&d, &unit);
    let w = report.first_witness().unwrap();
    assert_eq!(w.basis, [0, 0]);
    assert_eq!(coords(&w.lhs), ["1", "0", "0", "0"]);
    assert_eq!(coords(&w.rhs), ["2", "0", "0", "0"]);
    assert!(check_infinitesimal_compat(&d, &Coproduct::zero(Q, 2)).passed());
}

#[test]
fn induced_algebra_examples() {
    let f = gf5();
    let d = dual_numbers(f);
    let phi = LinearMap::from_i64(f, &[&[1, 0], &[0, 2]]);
    let induced = induce_algebra_by_composition(&d, &phi).unwrap();
    // 1∘x = φ(x) = 2x, x∘x = 0
    assert_eq!(coords(induced.mu().product(0, 1).coords()), ["0", "2"]);
    assert!(induced.mu().product(1, 1).is_zero());
    assert_eq!(induce_algebra_by_composition(&d, &LinearMap::identity(f, 2)).unwrap().mu(), d.mu());
    let not_unital = LinearMap::from_i64(f, &[&[0, 0], &[1, 0]]);
    assert!(matches!(
        induce_algebra_by_composition(&d, &not_unital),
        Err(Error::NotMorphism { .. })
    ));
}

#[test]
fn rota_baxter_examples() {
    let d = dual_numbers(Q);
    let r = times_x(Q);
    assert!(check_rb_system(&d, &r, &r).unwrap().passed());
    let id = LinearMap::identity(Q, 2);
    let report = check_rb_system(&d, &id, &id).unwrap();
    let w = report.first_witness().unwrap();
    assert_eq!(w.basis, [0, 0]);
    assert_eq!(coords(&w.lhs), ["1", "0"]);
    assert_eq!(coords(&w.rhs), ["2", "0"]);

    let lambda = Q.from_i64(3);
    let sys = rbs_from_weighted_operator(&d, &LinearMap::zero(Q, 2), &lambda).unwrap();
    assert_eq!(sys.s(), &LinearMap::scalar(Q, 2, &lambda));
    let dend = dendriform_from_rbs(&sys).unwrap();
    assert_eq!(dend.prec, d.mu().scale(&lambda));
    assert!(dend.succ.is_zero());
    let pl = prelie_from_dendriform(&dend).unwrap();
    assert_eq!(pl.diamond, d.mu().scale(&(-&lambda)));
    assert_eq!(star_product(&sys).unwrap().mu(), &d.mu().scale(&lambda));

    let weightless = rbs_from_weighted_operator(&d, &r, &Q.zero()).unwrap();
    assert_eq!(weightless.s(), &r);
    let minus_one = rbs_from_weighted_operator(&d, &id, &Q.from_i64(-1)).unwrap();
    assert!(minus_one.s().is_zero());
}

#[test]
fn dendriform_prelie_and_twistor_on_dual_numbers() {
    let d = dual_numbers(Q);
    let sys = RotaBaxterSystem::new(d.clone(), times_x(Q), times_x(Q)).unwrap();
    let dend = dendriform_from_rbs(&sys).unwrap();
    assert!(dend.prec.product(1, 0).is_zero());
    assert_eq!(coords(dend.succ.product(0, 0).coords()), ["0", "1"]);
    let pl = prelie_from_dendriform(&dend).unwrap();
    assert!(pl.diamond.product(0, 0).is_zero());

    let t = pseudotwistor_from_rbs(&sys).unwrap();
    let image = apply_twistor(&t, &Tensor2::basis(Q, 2, 0, 0)).unwrap();
    assert_eq!(image, t2(Q, &[&[0, 1], &[1, 0]]));
    assert!(check_weak_pseudotwistor(&d, &t).unwrap().passed());
    let twisted = product_from_twistor(&d, &t).unwrap();
    assert_eq!(twisted.mu(), star_product(&sys).unwrap().mu());
    assert_eq!(star_product(&sys).unwrap().mu(), &dend.sum());

    let id = LinearMap::identity(Q, 2);
    let scalar = RotaBaxterSystem::new(zero_algebra(Q), id.clone(), id).unwrap();
    let t = pseudotwistor_from_rbs(&scalar).unwrap();
    let two = Q.from_i64(2);
    for i in 0..2 {
        for j in 0..2 {
            let e = Tensor2::basis(Q, 2, i, j);
            assert_eq!(apply_twistor(&t, &e).unwrap(), e.scale(&two));
        }
    }
    let e = Tensor3::basis(Q, 2, 0, 1, 1);
    assert_eq!(t.apply_companion(&e).unwrap(), e.scale(&Q.from_i64(3)));

    let mut zero_tau = |_: usize, _: usize, _: usize| Tensor3::zero(Q, 2);
    let swap = TwistorMap::from_fns(Q, 2, |i, j| Tensor2::basis(Q, 2, j, i), Some(&mut zero_tau));
    assert!(!check_weak_pseudotwistor(&d, &swap).unwrap().passed());

    let bad = HomDendriform {
        alpha: LinearMap::identity(Q, 2),
        prec: nonassociative_pair(Q).mu().clone(),
        succ: BilinearMap::zero(Q, 2),
    };
    assert!(!check_hom_dendriform(&bad).passed());
}

/// A seeded weighted operator over GF(5) whose pointwise `≻ − ≺` is not
/// preLie, while `a ≻ b − b ≺ a` is.
#[test]
fn pointwise_difference_can_fail_the_prelie_identity() {
    let b = homalg::search::random_instance(homalg::search::RandomKind::WeightedRb, gf5(), 3, 9).unwrap();
    let a = b.algebra();
    let sys = rbs_from_weighted_operator(&a, b.rb_r.as_ref().unwrap(), b.lambda.as_ref().unwrap()).unwrap();
    let dend = dendriform_from_rbs(&sys).unwrap();
    assert!(check_hom_dendriform(&dend).passed());
    let pointwise = homalg::rota_baxter::HomPreLie {
        alpha: dend.alpha.clone(),
        diamond: dend.difference(),
    };
    assert!(!check_hom_prelie(&pointwise).passed());
    assert!(matches!(prelie_from_dendriform(&dend), Err(Error::Postcondition(_))));
    let swapped = prelie_from_dendriform_swapped(&dend).unwrap();
    assert_eq!(swapped.diamond, dend.succ.sub(&dend.prec.opposite()));
}

#[test]
fn triple_products_and_yb_pairs() {
    let z = zero_algebra(Q);
    let aa = Tensor2::basis(Q, 2, 0, 0);
    for kind in [TripleKind::R13S12, TripleKind::R12S23, TripleKind::R23S13] {
        assert!(triple_product(kind, &aa, &aa, &z).unwrap().is_zero());
    }
    let d = dual_numbers(Q);
    let ones = Tensor2::basis(Q, 2, 0, 0);
    assert_eq!(
        triple_product(TripleKind::R13S12, &ones, &ones, &d).unwrap(),
        Tensor3::basis(Q, 2, 0, 0, 0)
    );

    assert!(check_yb_pair(&z, &aa, &Tensor2::basis(Q, 2, 1, 1)).unwrap().passed());
    assert!(check_yb_pair(&d, &one_x(Q), &one_x(Q)).unwrap().passed());
    let report = check_yb_pair(&d, &ones, &ones).unwrap();
    let w = report.first_witness().unwrap();
    assert_eq!(w.identity, "yb-1");
    assert_eq!(coords(&w.lhs)[0], "1");
}

#[test]
fn yb_pair_induces_alpha2_system_and_structures() {
    let pair = d_pair(Q);
    let sys = rbs_from_ybp(&pair).unwrap();
    assert_eq!(sys.r(), &times_x(Q));
    assert_eq!(sys.s(), &times_x(Q));
    assert_eq!(sys.power(), 2);
    let (dend, star, pl) = ybp_induced_structures(&pair).unwrap();
    // 1≻1 = (1·x)·1 = x
    assert_eq!(coords(dend.succ.product(0, 0).coords()), ["0", "1"]);
    assert_eq!(pl.diamond, dend.difference());
    assert_eq!(star.mu(), &dend.sum());

    let zpair = YangBaxterPair::new(zero_algebra(Q), Tensor2::basis(Q, 2, 0, 0), Tensor2::basis(Q, 2, 1, 1)).unwrap();
    let zsys = rbs_from_ybp(&zpair).unwrap();
    assert!(zsys.r().is_zero() && zsys.s().is_zero());
}

#[test]
fn tensor_power_bimodule_on_dual_numbers() {
    let d = dual_numbers(Q);
    let bm = tensor_power_bimodule(&d, 2).unwrap();
    let x_one = Tensor2::basis(Q, 2, 1, 0);
    let one_one = Tensor2::basis(Q, 2, 0, 0);
    let e1 = vec_of(Q, &[1, 0]);
    let ex = vec_of(Q, &[0, 1]);
    assert_eq!(bm.act_left(e1.coords(), x_one.data()), x_one.data());
    assert_eq!(bm.act_left(ex.coords(), one_one.data()), x_one.data());
    let zb = tensor_power_bimodule(&zero_algebra(Q), 3).unwrap();
    assert!(zb.left.iter().chain(&zb.right).all(|c| c.is_zero()));
}

#[test]
fn lr_products_and_quasitriangular_maps_on_dual_numbers() {
    let d = dual_numbers(Q);
    let (at, ta) = lr_tensor_products(&vec_of(Q, &[0, 1]), &one_x(Q), &d).unwrap();
    assert_eq!(at, Tensor2::basis(Q, 2, 1, 1));
    assert!(ta.is_zero());
    let (at, ta) = lr_tensor_products(&vec_of(Q, &[1, 0]), &one_x(Q), &d).unwrap();
    assert_eq!(at, one_x(Q));
    assert_eq!(ta, one_x(Q));

    let maps = quasitriangular_maps(&d, &one_x(Q), &one_x(Q)).unwrap();
    assert!(maps.delta.of_basis(0).is_zero());
    assert_eq!(maps.delta.of_basis(1), Tensor2::basis(Q, 2, 1, 1));
    assert_eq!(
        coproduct_eval(&maps.delta, &vec_of(Q, &[0, 1])).unwrap(),
        Tensor2::basis(Q, 2, 1, 1)
    );
    assert!(check_derivation(&d, &maps.delta_r).unwrap().passed());
    let zmaps =
        quasitriangular_maps(&zero_algebra(Q), &Tensor2::basis(Q, 2, 0, 0), &Tensor2::basis(Q, 2, 1, 1)).unwrap();
    assert!(zmaps.delta.is_zero() && zmaps.delta_r.is_zero() && zmaps.delta_s.is_zero());

    let not_invariant = quasitriangular_maps(
        &induce_algebra_by_composition(&dual_numbers(gf5()), &LinearMap::from_i64(gf5(), &[&[1, 0], &[0, 2]]))
            .unwrap(),
        &one_x(gf5()),
        &one_x(gf5()),
    );
    assert!(matches!(not_invariant, Err(Error::NotInvariant(_))));
}

#[test]
fn derivation_failure_example() {
    let d = dual_numbers(Q);
    let bad = Coproduct::from_fn(Q, 2, |i| if i == 0 { Tensor2::basis(Q, 2, 0, 0) } else { Tensor2::zero(Q, 2) });
    let report = check_derivation(&d, &bad).unwrap();
    assert_eq!(report.first_witness().unwrap().basis, [0, 0]);
}

#[test]
fn quasitriangular_bialgebra_on_catalog_pairs() {
    let qt = build_quasitriangular(&d_pair(Q)).unwrap();
    assert!(check_covariant_hom_bialgebra(&qt).unwrap().passed());
    assert_eq!(qt.delta, qt.delta1);
    assert_eq!(qt.delta, qt.delta2);
    assert!(check_infinitesimal_compat(&qt.base, &qt.delta).passed());
    assert!(coassoc_defect(qt.base.alpha(), &qt.delta).unwrap().iter().all(Tensor3::is_zero));

    let zpair = YangBaxterPair::new(zero_algebra(Q), Tensor2::basis(Q, 2, 0, 0), Tensor2::basis(Q, 2, 1, 1)).unwrap();
    let zqt = build_quasitriangular(&zpair).unwrap();
    assert!(zqt.delta.is_zero() && zqt.delta1.is_zero() && zqt.delta2.is_zero());

    let mut broken = qt.clone();
    broken.delta = Coproduct::from_fn(Q, 2, |i| if i == 0 { one_x(Q) } else { Tensor2::zero(Q, 2) });
    let report = check_covariant_hom_bialgebra(&broken).unwrap();
    assert!(report.witnesses().iter().any(|w| w.identity.starts_with("coalgebra")));
    assert!(!coassoc_defect(broken.base.alpha(), &broken.delta).unwrap()[0].is_zero());
}

#[test]
fn quasitriangular_condition_on_dual_numbers() {
    let d = dual_numbers(Q);
    assert!(check_quasitriangular_condition(&d, &one_x(Q), &one_x(Q)).unwrap().passed());
    let ones = Tensor2::basis(Q, 2, 0, 0);
    let report = check_quasitriangular_condition(&d, &ones, &ones).unwrap();
    assert!(!report.passed());
    assert!(report.witnesses().iter().all(|w| w.identity == "quasi-rs"));
}

#[test]
fn characterization_verdicts() {
    let d = dual_numbers(Q);
    assert_eq!(characterization(&d, &one_x(Q), &one_x(Q)).unwrap().verdicts(), [true; 3]);
    let ones = Tensor2::basis(Q, 2, 0, 0);
    assert_eq!(characterization(&d, &ones, &ones).unwrap().verdicts(), [false; 3]);
    let z = zero_algebra(Q);
    let c = characterization(&z, &Tensor2::basis(Q, 2, 0, 0), &Tensor2::basis(Q, 2, 1, 1)).unwrap();
    assert_eq!(c.verdicts(), [true; 3]);
}

#[test]
fn coderivations_and_dualization() {
    let qt = build_quasitriangular(&d_pair(Q)).unwrap();
    let dual = dualize(&qt).unwrap();
    assert!(check_dual_covariant_hom_bialgebra(&dual).unwrap().passed());
    let c = dual.coalgebra();
    assert!(check_coderivation(&c, &dual.partial1).unwrap().passed());
    assert!(check_coderivation(&c, &dual.partial2).unwrap().passed());
    assert!(check_covariant_coderivation(&c, &dual.product, &dual.partial1, &dual.partial2)
        .unwrap()
        .passed());

    let mut bump = vec![Q.zero(); 8];
    bump[7] = Q.one();
    let p1 = dual.partial1.add(&BilinearMap::new(Q, 2, bump).unwrap());
    assert!(!check_covariant_coderivation(&c, &dual.product, &p1, &dual.partial2)
        .unwrap()
        .passed());

    let zero = homalg::HomCoalgebra::unlabeled(Coproduct::zero(Q, 2), LinearMap::identity(Q, 2)).unwrap();
    assert!(check_coderivation(&zero, dual_numbers(Q).mu()).unwrap().passed());

    let trivial = dualize(&CovariantHomBialgebra::trivial(dual_numbers(Q))).unwrap();
    assert!(trivial.product.is_zero());

    let (alpha, mu, delta, d1, d2) = dual.transpose_back();
    assert_eq!((alpha, mu, delta, d1, d2), (
        qt.base.alpha().clone(),
        qt.base.mu().clone(),
        qt.delta.clone(),
        qt.delta1.clone(),
        qt.delta2.clone()
    ));
    // c*[i][j][k] = d[k][i][j]
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                assert_eq!(dual.product.get(i, j, k), qt.delta.get(k, i, j));
                assert_eq!(dual.coproduct.get(i, j, k), qt.base.mu().get(j, k, i));
            }
        }
    }
}

#[test]
fn mixed_products_on_dual_numbers() {
    let d = dual_numbers(Q);
    let xx = Tensor2::basis(Q, 2, 1, 1);
    let xxx = Tensor3::basis(Q, 2, 1, 1, 1);
    assert_eq!(mixed_triple_product(MixedKind::D13R12, &xx, &one_x(Q), &d).unwrap(), xxx);
    assert_eq!(mixed_triple_product(MixedKind::D12R23, &xx, &one_x(Q), &d).unwrap(), xxx);
    assert!(mixed_triple_product(MixedKind::S12D23, &Tensor2::zero(Q, 2), &one_x(Q), &d)
        .unwrap()
        .is_zero());
}

#[test]
fn mixed_products_match_oracle() {
    let f = gf5();
    let a = induce_algebra_by_composition(&dual_numbers(f), &LinearMap::from_i64(f, &[&[1, 0], &[0, 2]])).unwrap();
    let o = Oracle::of(&a);
    let d = [1, 2, 3, 4];
    let t = [4, 0, 1, 3];
    for (kind, name) in [
        (MixedKind::D12R23, "d12_r23"),
        (MixedKind::S12D23, "s12_d23"),
        (MixedKind::S23D13, "s23_d13"),
        (MixedKind::D13R12, "d13_r12"),
    ] {
        let got = mixed_triple_product(kind, &tensor2(f, 2, &d), &tensor2(f, 2, &t), &a).unwrap();
        assert_eq!(residues(got.data()), o.mixed(name, &d, &t), "{name}");
    }
}

#[test]
fn perturbation_with_zero_coproducts_reduces_to_quasitriangular_condition() {
    let d = dual_numbers(Q);
    let trivial = CovariantHomBialgebra::trivial(d.clone());
    for (r, s) in [
        (one_x(Q), one_x(Q)),
        (Tensor2::basis(Q, 2, 0, 0), Tensor2::basis(Q, 2, 0, 0)),
        (one_x(Q), Tensor2::zero(Q, 2)),
    ] {
        let report = check_perturbation(&trivial, &r, &s).unwrap();
        let quasi = check_quasitriangular_condition(&d, &r, &s).unwrap();
        assert_eq!(report.condition.passed(), quasi.passed());
        assert!(report.agrees());
    }
}

#[test]
fn perturbation_of_dual_numbers_by_its_own_pair() {
    let qt = build_quasitriangular(&d_pair(Q)).unwrap();
    let report = check_perturbation(&qt, &one_x(Q), &one_x(Q)).unwrap();
    assert!(report.direct.passed());
    assert!(report.condition.passed());
}

#[test]
fn covariant_induction_by_composition() {
    let f = gf5();
    let qt = build_quasitriangular(&d_pair(f)).unwrap();
    let same = induce_covariant_by_composition(&qt, &LinearMap::identity(f, 2)).unwrap();
    assert_eq!(same, qt);
    let c2 = LinearMap::from_i64(f, &[&[1, 0], &[0, 2]]);
    assert!(matches!(
        induce_covariant_by_composition(&qt, &c2),
        Err(Error::NotMorphism { .. })
    ));
}

#[test]
fn catalog_pairs_pass_downstream_checks() {
    for name in ["paper-nilpotent-pair", "paper-unital-pair", "dual-numbers-gf5-alpha2"] {
        let b = catalog(name).unwrap().bundle;
        assert!(b.run_check("yb-pair").unwrap().passed(), "{name}");
        let (r, s) = b.tensors().unwrap();
        let pair = YangBaxterPair::new(b.algebra(), r.clone(), s.clone()).unwrap();
        let qt = build_quasitriangular(&pair).unwrap();
        assert!(check_dual_covariant_hom_bialgebra(&dualize(&qt).unwrap()).unwrap().passed());
        let (dend, star, _) = ybp_induced_structures(&pair).unwrap();
        assert!(check_hom_dendriform(&dend).passed());
        assert!(check_hom_algebra(&star).passed());
    }
    assert!(!catalog("n2-nonassoc").unwrap().bundle.run_check("hom-algebra").unwrap().passed());
    assert!(matches!(catalog("nope"), Err(Error::UnknownName(_))));
}

#[test]
fn oracle_agrees_on_quasitriangular_coproduct() {
    let f = gf5();
    let a: HomAlgebra = dual_numbers(f);
    let o = Oracle::of(&a);
    let r = [0, 1, 0, 0];
    let maps = quasitriangular_maps(&a, &tensor2(f, 2, &r), &tensor2(f, 2, &r)).unwrap();
    assert_eq!(residues(maps.delta.data()), o.coproduct_of(|x| o.delta_prime(&r, &r, x)));
}

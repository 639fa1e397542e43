mod common;

use common::{config, element, word};
use ncsphere::ncalg::{
    chern_even, chern_odd, confluence_probe, connes_b, cycle_ratio, hochschild_b, mat_check, ChernKind, CycleRatio,
    CyclicChain, MatKind, MatNC, NCPoly, PresentationBuilder, Strategy as Reduction, Word,
};
use ncsphere::qspheres::{idempotent_even, unitary_odd, QMat, QPoly, Sphere};
use ncsphere::scalars::{rat, QLaurent, Rational, Ring};
use ncsphere::theta::s_theta4;
use num_traits::Zero;
use proptest::prelude::*;

fn sq(d: usize) -> Sphere {
    Sphere::new(d + 1)
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn normal_form_is_idempotent_and_strategy_free(w in word(6, 7)) {
        let s = sq(5);
        let p = NCPoly::word(w);
        let nf = s.pres().normal_form(&p);
        prop_assert_eq!(s.pres().normal_form(&nf), nf.clone());
        prop_assert_eq!(s.pres().reduce_with(&p, Reduction::Leftmost), nf.clone());
        prop_assert_eq!(s.pres().reduce_with(&p, Reduction::Rightmost), nf.clone());
        prop_assert!(nf.terms().all(|(w, _)| s.pres().is_normal(w)));
    }

    #[test]
    fn theta_normal_form_is_strategy_free(w in word(5, 7)) {
        let t = s_theta4();
        let p = NCPoly::word(w);
        prop_assert_eq!(t.pres().reduce_with(&p, Reduction::Leftmost), t.pres().reduce_with(&p, Reduction::Rightmost));
    }
}

fn sq3_triples() -> impl Strategy<Value = (QPoly, QPoly, QPoly)> {
    let s: &'static Sphere = Box::leak(Box::new(sq(3)));
    (element(s.pres(), 3), element(s.pres(), 3), element(s.pres(), 3))
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn associativity_and_star(t in sq3_triples()) {
        let p = sq(3);
        let p = p.pres();
        let (a, b, c) = t;
        prop_assert_eq!(p.mul(&p.mul(&a, &b), &c), p.mul(&a, &p.mul(&b, &c)));
        prop_assert_eq!(p.star(&p.star(&a)), a.clone());
        prop_assert_eq!(p.star(&p.mul(&a, &b)), p.mul(&p.star(&b), &p.star(&a)));
    }

    #[test]
    fn parse_inverts_show(t in sq3_triples()) {
        let s = sq(3);
        let (a, _, _) = t;
        prop_assert_eq!(s.parse(&s.show(&a)).unwrap(), a);
    }
}

fn random_chain<S: Ring>(slots: &[NCPoly<S>], degree: usize) -> CyclicChain<S> {
    let refs: Vec<&NCPoly<S>> = slots.iter().take(degree + 1).collect();
    CyclicChain::tensor(&refs)
}

fn bicomplex_holds<S: Ring>(pres: &ncsphere::ncalg::Presentation<S>, c: &CyclicChain<S>) -> bool {
    let d = c.degree();
    let bb_ok = d < 2 || hochschild_b(pres, &hochschild_b(pres, c).unwrap()).unwrap().is_empty();
    let big_bb_ok = connes_b(&connes_b(c)).is_empty();
    let mut anti = hochschild_b(pres, &connes_b(c)).unwrap();
    if d >= 1 {
        anti = anti.add(&connes_b(&hochschild_b(pres, c).unwrap()));
    }
    bb_ok && big_bb_ok && anti.is_empty()
}

fn sq2_slots() -> impl Strategy<Value = (Vec<QPoly>, usize)> {
    let s: &'static Sphere = Box::leak(Box::new(sq(2)));
    (prop::collection::vec(element(s.pres(), 2), 4), 0usize..=3)
}

fn st4_slots() -> impl Strategy<Value = (Vec<ncsphere::ThetaPoly>, usize)> {
    let t: &'static ncsphere::theta::ThetaPresentation = Box::leak(Box::new(s_theta4()));
    (prop::collection::vec(element(t.pres(), 2), 4), 0usize..=3)
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn bicomplex_on_sq2((slots, d) in sq2_slots()) {
        let s = sq(2);
        prop_assert!(bicomplex_holds(s.pres(), &random_chain(&slots, d)));
    }

    #[test]
    fn bicomplex_on_stheta4((slots, d) in st4_slots()) {
        let t = s_theta4();
        prop_assert!(bicomplex_holds(t.pres(), &random_chain(&slots, d)));
    }
}

#[test]
fn hochschild_b_of_degree_zero_is_an_error() {
    let s = sq(2);
    let c = CyclicChain::tensor(&[&s.x(0)]);
    assert!(hochschild_b(s.pres(), &c).is_err());
}

#[test]
fn hochschild_b_in_degree_one() {
    let s = sq(2);
    let (x1, x1s) = (s.x(1), s.xs(1));
    let c = CyclicChain::tensor(&[&x1, &x1s]);
    let b = hochschild_b(s.pres(), &c).unwrap();
    let expected = CyclicChain::tensor(&[&s.pres().commutator(&x1, &x1s)]);
    assert_eq!(b, expected);
}

fn unitary_iff_products_are_identity(pres: &ncsphere::QPresentation, m: &QMat) -> bool {
    let id = QMat::identity(m.size());
    let s = m.star(pres);
    let by_products = s.mul(pres, m) == id && m.mul(pres, &s) == id;
    by_products == mat_check(pres, m, MatKind::Unitary).ok
}

#[test]
fn unitary_check_semantics() {
    for n in 0..=2 {
        let v = unitary_odd(n);
        let p = v.sphere.pres();
        assert!(mat_check(p, &v.matrix, MatKind::Unitary).ok);
        assert!(unitary_iff_products_are_identity(p, &v.matrix));
        let bad = v.matrix.scale(&QLaurent::constant(rat(2, 1)));
        assert!(!mat_check(p, &bad, MatKind::Unitary).ok);
        assert!(unitary_iff_products_are_identity(p, &bad));
    }
}

#[test]
fn witness_names_the_failing_entry() {
    let e = idempotent_even(1);
    let bad = e.matrix.scale(&QLaurent::constant(rat(3, 1)));
    let c = mat_check(e.sphere.pres(), &bad, MatKind::Idempotent);
    assert!(!c.ok);
    assert!(c.witness.unwrap().contains("(0,"));
}

#[test]
fn chern_is_invariant_under_permutation_conjugation() {
    let e = idempotent_even(2);
    let size = e.matrix.size();
    for perm in [vec![1, 0, 3, 2], vec![3, 2, 1, 0], vec![2, 0, 3, 1]] {
        assert_eq!(perm.len(), size);
        let pe = e.matrix.permute(&perm);
        for k in 0..=1 {
            assert_eq!(chern_even(&pe, k).unwrap(), chern_even(&e.matrix, k).unwrap());
        }
    }
    let v = unitary_odd(1);
    let pv = v.matrix.permute(&[1, 0]);
    assert_eq!(chern_odd(v.sphere.pres(), &pv, 0).unwrap(), chern_odd(v.sphere.pres(), &v.matrix, 0).unwrap());
}

#[test]
fn chern_is_stable_under_zero_padding() {
    let e = idempotent_even(1);
    let padded = e.matrix.pad_zero(2);
    assert_eq!(chern_even(&padded, 1).unwrap(), chern_even(&e.matrix, 1).unwrap());
    assert_eq!(chern_even(&padded, 2).unwrap(), chern_even(&e.matrix, 2).unwrap());
    let shift = chern_even(&padded, 0).unwrap().sub(&chern_even(&e.matrix, 0).unwrap());
    assert_eq!(shift, CyclicChain::tensor(&[&QPoly::constant(QLaurent::from_int(-1))]));
}

#[test]
fn builder_rejects_a_nonterminating_rule() {
    let mut b = PresentationBuilder::<Rational>::new("bad");
    let (a, a_s) = b.pair("a", 1, 0);
    b.rule(a, a_s, NCPoly::word(Word(vec![a_s, a])));
    b.rule(a_s, a, NCPoly::word(Word(vec![a, a_s])));
    assert!(b.build().is_err());
}

#[test]
fn confluence_probe_finds_a_bad_overlap() {
    let mut b = PresentationBuilder::<Rational>::new("overlap");
    let (x, y) = (b.self_adjoint("x", 1, 1), b.self_adjoint("y", 2, 0));
    b.rule(x, y, NCPoly::word(Word(vec![y, x])).scale(&rat(2, 1)));
    b.rule(x, x, NCPoly::constant(rat(1, 1)));
    let p = b.build_unchecked();
    let r = confluence_probe(&p, 2000, 0);
    assert!(!r.is_clean());
    assert!(!r.discrepancies[0].leftmost.is_zero() || !r.discrepancies[0].rightmost.is_zero());
}

#[test]
fn shipped_presentations_are_confluent_on_small_samples() {
    for d in 2..=7 {
        let s = sq(d);
        assert!(confluence_probe(s.pres(), 500, 11).is_clean(), "{}", s.name());
    }
}

#[test]
fn cycle_ratios_are_fixed_integers() {
    let r = |x: i64, y: i64| CycleRatio::Ratio(QLaurent::constant(rat(x, y)));
    for n in 1..=2 {
        let e = idempotent_even(n);
        let p = e.sphere.pres();
        assert_eq!(cycle_ratio(p, &e.matrix, ChernKind::Even, 0).unwrap(), r(2, 1), "n={n}");
        assert_eq!(cycle_ratio(p, &e.matrix, ChernKind::Even, 1).unwrap(), r(6, 1), "n={n}");
        let v = unitary_odd(n);
        let p = v.sphere.pres();
        assert_eq!(cycle_ratio(p, &v.matrix, ChernKind::Odd, 0).unwrap(), r(1, 2), "n={n}");
        assert_eq!(cycle_ratio(p, &v.matrix, ChernKind::Odd, 1).unwrap(), r(2, 1), "n={n}");
    }
    let alg = s_theta4();
    let e = ncsphere::theta::s_theta4_projection(&alg);
    assert_eq!(cycle_ratio(alg.pres(), &e, ChernKind::Even, 1).unwrap(), CycleRatio::ProportionalToZero);
    let s = sq(2);
    let one = MatNC::identity(1);
    for k in 0..3 {
        assert_eq!(cycle_ratio(s.pres(), &one, ChernKind::Even, k).unwrap(), CycleRatio::ProportionalToZero);
    }
}

mod common;

use common::config;
use ncsphere::ncalg::{GenId, NCPoly, Word};
use ncsphere::qspheres::{QPoly, Sphere};
use ncsphere::repr::{
    adjointness_numeric, build_rep, numeric_trace, relation_check, sigma_intertwines, trace_exact, truncate, Family,
    ShiftRep, TraceValue,
};
use ncsphere::scalars::{rat, GaussRational, QLaurent, QRatFunc};
use ncsphere::Error;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

const FAMILIES: [Family; 4] = [Family::EvenPlus, Family::EvenMinus, Family::OddLambda, Family::OddFourier];

fn lam() -> GaussRational {
    GaussRational::new(rat(3, 5), rat(4, 5))
}

fn rep(f: Family, n: usize) -> ShiftRep {
    build_rep(f, n, (f == Family::OddLambda).then(lam)).unwrap()
}

#[test]
fn family_names_round_trip() {
    for f in FAMILIES {
        assert_eq!(f.label().parse::<Family>().unwrap(), f);
    }
    assert!("sideways".parse::<Family>().is_err());
}

#[test]
fn odd_family_needs_a_unit_lambda() {
    assert!(build_rep(Family::OddLambda, 1, None).is_err());
    let bad = GaussRational::new(rat(1, 1), rat(1, 1));
    assert!(matches!(build_rep(Family::OddLambda, 1, Some(bad)), Err(Error::NotUnitModulus(_))));
}

#[test]
fn adjointness_symbolic_and_numeric() {
    for n in 1..=3 {
        for f in FAMILIES {
            let r = rep(f, n);
            r.check_adjointness().unwrap();
            adjointness_numeric(&r, 2.0, 12, 1e-12).unwrap().unwrap();
        }
    }
}

#[test]
fn corrupted_weight_breaks_adjointness() {
    let r = rep(Family::EvenPlus, 1).corrupted("x1", 2);
    assert!(r.check_adjointness().is_err());
    assert!(!relation_check(&r, 2.0, 20, 1e-12).unwrap().passed());
}

#[test]
fn relations_hold_numerically() {
    for n in 1..=2 {
        for f in FAMILIES {
            let rc = relation_check(&rep(f, n), 2.0, 20, 1e-12).unwrap();
            assert!(rc.passed(), "{f} n={n}: {:?}", rc.failures.first());
            assert!(rc.checked > 0);
        }
    }
}

#[test]
fn sigma_swaps_the_even_families() {
    for n in 1..=3 {
        assert!(sigma_intertwines(&rep(Family::EvenPlus, n), &rep(Family::EvenMinus, n)));
        assert!(!sigma_intertwines(&rep(Family::EvenMinus, n), &rep(Family::EvenPlus, n)));
    }
}

fn one_minus_q_inv(k: i32, n: usize) -> QRatFunc {
    let d = QLaurent::one() - QLaurent::q(-k);
    QRatFunc::new(QLaurent::one(), d.pow(n as u32)).unwrap()
}

#[test]
fn trace_of_x0() {
    for n in 1..=3 {
        let r = rep(Family::EvenPlus, n);
        let t = trace_exact(&r, &r.sphere().x(0)).unwrap();
        assert_eq!(t.scalar().unwrap(), one_minus_q_inv(1, n));
        let m = rep(Family::EvenMinus, n);
        assert_eq!(trace_exact(&m, &m.sphere().x(0)).unwrap().scalar().unwrap(), -one_minus_q_inv(1, n));
    }
}

#[test]
fn fourier_traces_are_not_trace_class() {
    let r = rep(Family::OddFourier, 1);
    assert!(matches!(trace_exact(&r, &r.sphere().x(1)), Ok(_)));
    let s = r.sphere().clone();
    assert!(matches!(trace_exact(&r, &s.el("x1*x1'")), Err(Error::NotTraceClass(_))));
}

/// Words with as many `x_i` as `x_i*` for every `i`, optionally with `x_0` letters.
fn balanced_word(sphere: &Sphere, max_pairs: usize, x0_parity: Option<bool>) -> impl Strategy<Value = Word> {
    let pres = sphere.pres().clone();
    let complex: Vec<GenId> = (0..pres.num_generators() as GenId)
        .filter(|&g| !pres.generators()[g as usize].self_adjoint && !pres.generators()[g as usize].starred)
        .collect();
    let x0 = pres.gen_by_name("x0");
    let pairs = prop::collection::vec(prop::sample::select(complex), 0..=max_pairs);
    let zeros = 0usize..=2;
    (pairs, zeros)
        .prop_flat_map(move |(ps, z)| {
            let mut letters: Vec<GenId> = ps.iter().flat_map(|&g| [g, pres.star_gen(g)]).collect();
            if let Some(x0) = x0 {
                let z = match x0_parity {
                    Some(odd) => 2 * (z / 2) + usize::from(odd),
                    None => z,
                };
                letters.extend(std::iter::repeat(x0).take(z));
            }
            Just(letters).prop_shuffle()
        })
        .prop_map(Word)
}

fn exact_at(t: &TraceValue, q: f64, lambda: Complex64) -> Complex64 {
    t.by_phase.iter().map(|(k, v)| lambda.powi(*k as i32) * v.evaluate_numeric(q).unwrap()).sum()
}

fn exact_vs_numeric(f: Family, n: usize, w: &Word, cutoff: usize) -> Result<(), TestCaseError> {
    let r = rep(f, n);
    let p = r.sphere().pres().normal_form(&NCPoly::word(w.clone()));
    let exact = match trace_exact(&r, &p) {
        Ok(t) => t,
        Err(Error::NotTraceClass(_)) => return Ok(()),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    let l = lam();
    let lambda = if f == Family::OddLambda {
        Complex64::new(l.re.to_f64().unwrap(), l.im.to_f64().unwrap())
    } else {
        Complex64::one()
    };
    let t = truncate(&r, 2.0, cutoff).unwrap();
    let num = numeric_trace(&t.operator(&p).unwrap());
    let ex = exact_at(&exact, 2.0, lambda);
    let err = (num.value - ex).norm();
    prop_assert!(
        err <= num.tail_bound + 1e-9 * ex.norm().max(1.0),
        "{f} n={n} {}: exact {ex} numeric {} tail {}",
        r.sphere().show(&p),
        num.value,
        num.tail_bound
    );
    Ok(())
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn traces_match_truncations_n1(w in balanced_word(&Sphere::even(1), 3, None), v in balanced_word(&Sphere::odd(2), 3, None)) {
        exact_vs_numeric(Family::EvenPlus, 1, &w, 40)?;
        exact_vs_numeric(Family::EvenMinus, 1, &w, 40)?;
        exact_vs_numeric(Family::OddLambda, 1, &v, 40)?;
    }

    #[test]
    fn traces_match_truncations_n2(w in balanced_word(&Sphere::even(2), 3, None), v in balanced_word(&Sphere::odd(3), 3, None)) {
        exact_vs_numeric(Family::EvenPlus, 2, &w, 30)?;
        exact_vs_numeric(Family::EvenMinus, 2, &w, 30)?;
        exact_vs_numeric(Family::OddLambda, 2, &v, 30)?;
    }

    #[test]
    fn x0_odd_traces_flip_sign(w in balanced_word(&Sphere::even(2), 3, Some(true))) {
        let (p, m) = (rep(Family::EvenPlus, 2), rep(Family::EvenMinus, 2));
        let a: QPoly = p.sphere().pres().normal_form(&NCPoly::word(w));
        let tp = trace_exact(&p, &a).unwrap().component(0);
        let tm = trace_exact(&m, &a).unwrap().component(0);
        prop_assert_eq!(tp.clone() - tm, tp.clone() + tp);
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn traces_match_truncations_n3(w in balanced_word(&Sphere::even(3), 2, None), v in balanced_word(&Sphere::odd(4), 2, None)) {
        exact_vs_numeric(Family::EvenPlus, 3, &w, 16)?;
        exact_vs_numeric(Family::OddLambda, 3, &v, 16)?;
    }
}

/// Nonzero diagonal values of a diagonal operator on the states at least `margin` away from the box edge.
fn spectrum(f: Family, n: usize, p: &QPoly, margin: i64) -> Vec<f64> {
    let r = rep(f, n);
    let t = truncate(&r, 2.0, 24).unwrap();
    let mut out: Vec<f64> = t
        .states(margin)
        .iter()
        .map(|k| t.apply_poly(p, k).unwrap().get(k).map_or(0.0, |v| v.re))
        .filter(|v| v.abs() > 1e-300)
        .collect();
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    out
}

#[test]
fn x_star_x_and_x_x_star_share_nonzero_spectrum() {
    for f in FAMILIES {
        for n in 1..=2 {
            let s = rep(f, n).sphere().clone();
            let xsx = s.mul(&s.xs(1), &s.x(1));
            let xxs = s.mul(&s.x(1), &s.xs(1));
            let (a, b) = (spectrum(f, n, &xsx, 3), spectrum(f, n, &xxs, 0));
            assert!(a.len() > 3, "{f} n={n}");
            let within = |v: &f64, set: &[f64]| set.iter().any(|w| (v - w).abs() <= 1e-12 * w.abs());
            assert!(a.iter().all(|v| within(v, &b)), "{f} n={n}");
            let (a, b) = (spectrum(f, n, &xxs, 3), spectrum(f, n, &xsx, 0));
            assert!(a.iter().all(|v| within(v, &b)), "{f} n={n}");
        }
    }
}

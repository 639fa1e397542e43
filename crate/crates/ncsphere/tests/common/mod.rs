#![allow(dead_code)]

use ncsphere::ncalg::{NCPoly, Presentation, Word};
use ncsphere::scalars::{rat, GaussRational, Phase, PhaseExp, QLaurent, QRatFunc, Rational, Ring};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-3i32..=3, rational()), 0..4)
        .prop_map(|ts| ts.into_iter().fold(QLaurent::zero(), |acc, (e, c)| acc + QLaurent::monomial(c, e)))
}

pub fn nonzero_laurent() -> impl Strategy<Value = QLaurent> {
    laurent().prop_filter("nonzero", |l| !l.is_zero())
}

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussRational::new(a, b))
}

pub fn phase() -> impl Strategy<Value = Phase> {
    prop::collection::vec((1u8..=3, 1u8..=3, -3i32..=3, gauss()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Phase::zero(), |acc, (j, k, d, c)| acc + Phase::monomial(c, PhaseExp::single(j, k, d)))
    })
}

pub fn ratfunc() -> impl Strategy<Value = QRatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| QRatFunc::new(n, d).unwrap())
}

/// Random words over `g` generators.
pub fn word(g: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..g as u16, 0..=max_len).prop_map(Word)
}

/// A random element: small integer combination of random words, in normal form.
pub fn element<S: Ring>(pres: &Presentation<S>, max_len: usize) -> impl Strategy<Value = NCPoly<S>> + '_ {
    prop::collection::vec((word(pres.num_generators(), max_len), -3i64..=3), 1..=3).prop_map(move |ts| {
        let mut p = NCPoly::zero();
        for (w, c) in ts {
            p.add_term(w, S::from_int(c));
        }
        pres.normal_form(&p)
    })
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::poly::{GenId, NCPoly, Word};
use super::presentation::{Presentation, Strategy};
use crate::scalars::Ring;

pub const MAX_PROBE_LEN: usize = 12;

#[derive(Clone, Debug)]
pub struct Discrepancy<S> {
    pub word: Word,
    pub leftmost: NCPoly<S>,
    pub rightmost: NCPoly<S>,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport<S> {
    pub trials: usize,
    pub discrepancies: Vec<Discrepancy<S>>,
}

impl<S> ConfluenceReport<S> {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Random words of length `0..=12`, reproducible from `seed`.
pub fn random_words(num_gens: usize, count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=MAX_PROBE_LEN);
            Word((0..len).map(|_| rng.gen_range(0..num_gens) as GenId).collect())
        })
        .collect()
}

/// Reduce random words by leftmost and by rightmost rewriting and compare.
pub fn confluence_probe<S: Ring>(pres: &Presentation<S>, trials: usize, seed: u64) -> ConfluenceReport<S> {
    let words = random_words(pres.num_generators(), trials, seed);
    let discrepancies = words
        .into_par_iter()
        .filter_map(|w| {
            let p = NCPoly::word(w.clone());
            let l = pres.reduce_with(&p, Strategy::Leftmost);
            let r = pres.reduce_with(&p, Strategy::Rightmost);
            (l != r).then_some(Discrepancy { word: w, leftmost: l, rightmost: r })
        })
        .collect();
    ConfluenceReport { trials, discrepancies }
}

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::weight::SpectralWeight;
use crate::error::{Error, Result};
use crate::ncalg::{GenId, Word};
use crate::qspheres::{QPoly, Sphere};
use crate::scalars::{GaussRational, QRatFunc};

pub type State = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexDomain {
    /// `k ∈ {0, 1, 2, …}`
    Natural,
    /// `k ∈ ℤ`
    Integer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateLattice {
    pub domains: Vec<IndexDomain>,
}

impl StateLattice {
    pub fn arity(&self) -> usize {
        self.domains.len()
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        k.len() == self.arity() && k.iter().zip(&self.domains).all(|(x, d)| *d == IndexDomain::Integer || *x >= 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    EvenPlus,
    EvenMinus,
    OddLambda,
    OddFourier,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::EvenPlus => "even+",
            Family::EvenMinus => "even-",
            Family::OddLambda => "odd",
            Family::OddFourier => "fourier",
        }
    }

    /// The sphere algebra represented by this family at rank `n`.
    pub fn sphere(self, n: usize) -> Sphere {
        match self {
            Family::EvenPlus | Family::EvenMinus => Sphere::even(n),
            Family::OddLambda | Family::OddFourier => Sphere::odd(n + 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even+" | "even_plus" => Ok(Family::EvenPlus),
            "even-" | "even_minus" => Ok(Family::EvenMinus),
            "odd" | "odd_lambda" => Ok(Family::OddLambda),
            "fourier" | "odd_fourier" => Ok(Family::OddFourier),
            _ => Err(Error::Parse(format!("unknown representation family '{s}'"))),
        }
    }
}

/// Action of one generator: shift the state, multiply by a weight of the pre-shift state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenAction {
    pub shift: Vec<i64>,
    pub weight: SpectralWeight,
}

/// A `*`-representation of a sphere algebra by weighted multi-shifts.
#[derive(Clone, Debug)]
pub struct ShiftRep {
    family: Family,
    n: usize,
    sphere: Sphere,
    lattice: StateLattice,
    lambda: Option<GaussRational>,
    actions: Vec<GenAction>,
}

fn unit(arity: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; arity];
    v[i] = s;
    v
}

/// Build `ψ_±^{(2n)}`, `ψ_λ^{(2n+1)}` or the Fourier model over `S_q^{2n+1}`.
pub fn build_rep(family: Family, n: usize, lambda: Option<GaussRational>) -> Result<ShiftRep> {
    if family == Family::OddLambda {
        let l = lambda.as_ref().ok_or(Error::MissingPhase)?;
        if !l.norm_sqr().is_one() {
            return Err(Error::NotUnitModulus(l.to_string()));
        }
    }
    if matches!(family, Family::EvenPlus | Family::EvenMinus) && n == 0 {
        return Err(Error::WrongAlgebra("even families need n >= 1".into()));
    }
    let sphere = family.sphere(n);
    let pres = sphere.pres_arc();
    let (arity, domains) = match family {
        Family::OddFourier => {
            let mut d = vec![IndexDomain::Integer];
            d.extend(std::iter::repeat(IndexDomain::Natural).take(n));
            (n + 1, d)
        }
        _ => (n, vec![IndexDomain::Natural; n]),
    };
    let mut actions = Vec::with_capacity(pres.num_generators());
    for g in pres.generators() {
        let i = g.index as usize;
        let w = SpectralWeight::one(arity);
        let act = match family {
            Family::EvenPlus | Family::EvenMinus if i == 0 => {
                let mut weight = w.with_lin(0..n);
                weight.coef = if family == Family::EvenPlus { 1 } else { -1 };
                GenAction { shift: vec![0; arity], weight }
            }
            Family::EvenPlus | Family::EvenMinus => {
                let p = i - 1;
                let w = w.with_lin(i..n);
                if g.starred {
                    GenAction { shift: unit(arity, p, 1), weight: w.with_root(p, 1) }
                } else {
                    GenAction { shift: unit(arity, p, -1), weight: w.with_root(p, 0) }
                }
            }
            Family::OddLambda if i == 1 => {
                let mut weight = w.with_lin(0..n);
                weight.phase = if g.starred { -1 } else { 1 };
                GenAction { shift: vec![0; arity], weight }
            }
            Family::OddFourier if i == 1 => {
                let weight = w.with_lin(1..n + 1);
                GenAction { shift: unit(arity, 0, if g.starred { -1 } else { 1 }), weight }
            }
            Family::OddLambda | Family::OddFourier => {
                let p = if family == Family::OddLambda { i - 2 } else { i - 1 };
                let w = w.with_lin(p + 1..arity);
                if g.starred {
                    GenAction { shift: unit(arity, p, 1), weight: w.with_root(p, 1) }
                } else {
                    GenAction { shift: unit(arity, p, -1), weight: w.with_root(p, 0) }
                }
            }
        };
        actions.push(act);
    }
    Ok(ShiftRep { family, n, sphere, lattice: StateLattice { domains }, lambda, actions })
}

impl ShiftRep {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sphere(&self) -> &Sphere {
        &self.sphere
    }

    pub fn lattice(&self) -> &StateLattice {
        &self.lattice
    }

    pub fn arity(&self) -> usize {
        self.lattice.arity()
    }

    pub fn lambda(&self) -> Option<&GaussRational> {
        self.lambda.as_ref()
    }

    pub fn action(&self, g: GenId) -> &GenAction {
        &self.actions[g as usize]
    }

    pub fn action_by_name(&self, name: &str) -> &GenAction {
        self.action(self.sphere.pres().g(name))
    }

    /// A copy whose generator `name` has its weight multiplied by `factor`.
    pub fn corrupted(&self, name: &str, factor: i64) -> Self {
        let mut out = self.clone();
        let g = self.sphere.pres().g(name) as usize;
        out.actions[g].weight.coef *= factor;
        out
    }

    /// Net shift and weight (as a function of the initial state) of a word.
    pub fn word_action(&self, w: &Word) -> GenAction {
        let mut shift = vec![0; self.arity()];
        let mut weight = SpectralWeight::one(self.arity());
        for &g in w.0.iter().rev() {
            let a = &self.actions[g as usize];
            weight = weight.mul(&a.weight.shifted(&shift));
            for (s, d) in shift.iter_mut().zip(&a.shift) {
                *s += d;
            }
        }
        GenAction { shift, weight }
    }

    /// `ψ(w)|k⟩`: empty when the word annihilates the state.
    pub fn apply(&self, w: &Word, k: &[i64]) -> Vec<(State, SpectralWeight)> {
        assert!(self.lattice.contains(k), "state {k:?} outside the lattice");
        let a = self.word_action(w);
        let out: State = k.iter().zip(&a.shift).map(|(x, s)| x + s).collect();
        if a.weight.vanishes_at(k) || !self.lattice.contains(&out) {
            return vec![];
        }
        vec![(out, a.weight)]
    }

    /// Symbolic check that `ψ(g*)` is the adjoint of `ψ(g)` for every generator.
    pub fn check_adjointness(&self) -> std::result::Result<(), String> {
        let pres = self.sphere.pres();
        for g in 0..pres.num_generators() as GenId {
            let a = self.action(g);
            let b = self.action(pres.star_gen(g));
            let neg: Vec<i64> = a.shift.iter().map(|s| -s).collect();
            let expected = a.weight.shifted(&neg).conj();
            if b.shift != neg || b.weight != expected {
                return Err(format!(
                    "{}: star action {} does not match adjoint {}",
                    pres.show_word(&Word::letter(g)),
                    b.weight,
                    expected
                ));
            }
        }
        Ok(())
    }

    /// Indices summed over in a trace (the two-sided index is excluded).
    fn natural_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.lattice.domains.iter().enumerate().filter(|(_, d)| **d == IndexDomain::Natural).map(|(i, _)| i)
    }

    /// `Σ` over the one-sided indices of a diagonal weight, split by powers of `λ`.
    pub fn fiber_sum(&self, w: &SpectralWeight) -> Result<QRatFunc> {
        let mut acc = QRatFunc::from_laurent(w.prefactor());
        for i in self.natural_indices() {
            acc = acc * w.index_sum(i)?;
        }
        Ok(acc)
    }
}

/// Trace of an operator in an odd family, graded by the power of `λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceValue {
    pub by_phase: BTreeMap<i64, QRatFunc>,
}

impl TraceValue {
    fn add(&mut self, phase: i64, v: QRatFunc) {
        let e = self.by_phase.entry(phase).or_insert_with(QRatFunc::zero);
        *e = e.clone() + v;
        if e.is_zero() {
            self.by_phase.remove(&phase);
        }
    }

    /// The `λ^k` component.
    pub fn component(&self, k: i64) -> QRatFunc {
        self.by_phase.get(&k).cloned().unwrap_or_else(QRatFunc::zero)
    }

    /// The value when no power of `λ` other than `λ^0` occurs.
    pub fn scalar(&self) -> Option<QRatFunc> {
        self.by_phase.keys().all(|k| *k == 0).then(|| self.component(0))
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.by_phase.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.by_phase.iter().map(|(k, v)| if *k == 0 { v.to_string() } else { format!("({v})*L^{k}") }).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Exact trace `Tr ψ(p)` by geometric series.
pub fn trace_exact(rep: &ShiftRep, p: &QPoly) -> Result<TraceValue> {
    let mut out = TraceValue::default();
    for (w, c) in p.terms() {
        let a = rep.word_action(w);
        if a.shift.iter().any(|s| *s != 0) {
            continue;
        }
        if rep.family == Family::OddFourier {
            return Err(Error::NotTraceClass("the two-sided index has infinite support".into()));
        }
        let v = rep.fiber_sum(&a.weight)? * QRatFunc::from_laurent(c.clone());
        out.add(a.weight.phase, v);
    }
    Ok(out)
}

/// `ψ₊ ∘ σ = ψ₋` on every generator, as action tables.
pub fn sigma_intertwines(plus: &ShiftRep, minus: &ShiftRep) -> bool {
    if plus.family != Family::EvenPlus || minus.family != Family::EvenMinus || plus.n != minus.n {
        return false;
    }
    plus.actions.iter().zip(&minus.actions).zip(plus.sphere.pres().generators()).all(|((a, b), g)| {
        let mut w = a.weight.clone();
        if g.self_adjoint {
            w.coef = -w.coef;
        }
        a.shift == b.shift && w == b.weight
    })
}

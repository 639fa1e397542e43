use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::symbol::{Atom, BigradedSymbol, Commutation, QExp};
use crate::scalars::Phase;

type Sym = BigradedSymbol;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, label: impl FnOnce() -> String, lhs: &Sym, rhs: &Sym) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: {} != {}", label(), lhs, rhs));
        }
    }
}

fn atom(p: Commutation, name: &str, n: (i64, i64)) -> Sym {
    Sym::atom(p, Atom::new(name, n))
}

fn lam_const(p: Commutation, doubled: i64) -> Sym {
    Sym::scalar(p, Phase::lambda(1, 2, doubled as i32))
}

fn bidegrees(bound: i64) -> Vec<(i64, i64)> {
    (-bound..=bound).flat_map(|a| (-bound..=bound).map(move |b| (a, b))).collect()
}

/// `l(x)l(y) = l(x ∗ y)` and the twisted commutator of `l(x)` with `r(y)`, for one pair of bidegrees.
pub fn check_twisted_products(report: &mut TwistReport, n: (i64, i64), m: (i64, i64)) {
    let free = Commutation::Free;
    let (x, y) = (atom(free, "x", n), atom(free, "y", m));
    report.expect(
        || format!("l(x)l(y) = l(x*y) at {n:?},{m:?}"),
        &(&x.twist_left() * &y.twist_left()),
        &x.star_product(&y).twist_left(),
    );
    let comm = &x.twist_left() * &y.twist_right() - &(&y.twist_right() * &x.twist_left());
    let xy = &x * &y - &(&y * &x);
    let factor = &lam_const(free, 2 * m.0 * (n.1 + m.1)) * &Sym::lambda(free, QExp::linear(n.1, m.0));
    report.expect(|| format!("[l(x), r(y)] at {n:?},{m:?}"), &comm, &(&xy * &factor));
    let ab = Commutation::AllCommute;
    let (x, y) = (atom(ab, "x", n), atom(ab, "y", m));
    let comm = &x.twist_left() * &y.twist_right() - &(&y.twist_right() * &x.twist_left());
    report.expect(|| format!("[l(x), r(y)] = 0 for commuting atoms at {n:?},{m:?}"), &comm, &Sym::zero(ab));
}

/// `J̃ l(x) J̃^{-1} = r(JxJ^{-1})` and its intermediate steps for one bidegree.
pub fn check_real_structure(report: &mut TwistReport, n: (i64, i64)) {
    let p = Commutation::Free;
    let x = atom(p, "x", n);
    let (n1, n2) = n;
    let lhs = x.twist_left().jtwist_conjugate();
    let rhs = x.j_conjugate().twist_right();
    report.expect(|| format!("J~ l(x) J~^-1 = r(JxJ^-1) at {n:?}"), &lhs, &rhs);
    let l = &Sym::lambda(p, QExp::mixed(-1)) * &x;
    let r = &(&x * &lam_const(p, -2 * n1 * n2)) * &Sym::lambda(p, QExp::linear(-n2, -n1).add(&QExp::mixed(-1)));
    report.expect(|| format!("L^(-p1p2) x at {n:?}"), &l, &r);
    let jx = &Sym::j_power(p, 1) * &x;
    let l = &Sym::jtilde(p) * &x.twist_left();
    let r = &(&jx * &lam_const(p, -2 * n1 * n2)) * &Sym::lambda(p, QExp::linear(0, -n1).add(&QExp::mixed(-1)));
    report.expect(|| format!("J~ l(x) at {n:?}"), &l, &r);
    let l = &x.j_conjugate().twist_right() * &Sym::jtilde(p);
    let r = &(&jx * &lam_const(p, -2 * n1 * n2)) * &Sym::lambda(p, QExp::linear(0, -n1).add(&QExp::mixed(-1)));
    report.expect(|| format!("r(JxJ^-1) J~ at {n:?}"), &l, &r);
}

/// `[l(x), J̃ l(y)* J̃^{-1}] = 0` when plain atoms commute with conjugated ones.
pub fn check_commutant(report: &mut TwistReport, n: (i64, i64), m: (i64, i64)) {
    let p = Commutation::PlainWithConjugated;
    let lx = atom(p, "x", n).twist_left();
    let y0 = atom(p, "y", m).twist_left().adjoint().jtwist_conjugate();
    let comm = &lx * &y0 - &(&y0 * &lx);
    report.expect(|| format!("[l(x), y0] at {n:?},{m:?}"), &comm, &Sym::zero(p));
}

fn random_term(rng: &mut ChaCha8Rng, p: Commutation) -> Sym {
    let names = ["x", "y", "w"];
    let mut t = Sym::scalar(p, Phase::lambda(1, 2, rng.gen_range(-3..=3)));
    t = &t * &Sym::j_power(p, rng.gen_range(-1..=1));
    for _ in 0..rng.gen_range(0..=2) {
        let mut a = Atom::new(names[rng.gen_range(0..3)], (rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
        a.dagger = rng.gen_bool(0.5);
        t = &t * &Sym::atom(p, a);
        if rng.gen_bool(0.3) {
            t = &t * &Sym::j_power(p, rng.gen_range(-1..=1));
        }
    }
    let q = QExp {
        a11: rng.gen_range(-2..=2),
        a22: rng.gen_range(-2..=2),
        a12: rng.gen_range(-2..=2),
        b1: rng.gen_range(-2..=2),
        b2: rng.gen_range(-2..=2),
    };
    &t * &Sym::lambda(p, q)
}

/// Associativity and idempotent normalization on random triples.
pub fn check_engine(report: &mut TwistReport, trials: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..trials {
        let p = [Commutation::Free, Commutation::AllCommute, Commutation::PlainWithConjugated][i % 3];
        let a = random_term(&mut rng, p) + &random_term(&mut rng, p);
        let b = random_term(&mut rng, p);
        let c = random_term(&mut rng, p) + &random_term(&mut rng, p);
        report.expect(|| format!("associativity #{i}"), &(&(&a * &b) * &c), &(&a * &(&b * &c)));
        let ab = &a * &b;
        report.expect(|| format!("renormalization #{i}"), &ab.renormalized(), &ab);
        report.expect(|| format!("adjoint involution #{i}"), &ab.adjoint().adjoint(), &ab);
        report.expect(|| format!("adjoint antimultiplicative #{i}"), &ab.adjoint(), &(&b.adjoint() * &a.adjoint()));
    }
}

/// Every twist identity for all bidegrees with `|n_i| ≤ bound`, plus random engine checks.
pub fn twist_lemmas(bound: i64, trials: usize, seed: u64) -> TwistReport {
    let mut report = TwistReport::default();
    let degs = bidegrees(bound);
    for &n in &degs {
        check_real_structure(&mut report, n);
        for &m in &degs {
            check_twisted_products(&mut report, n, m);
            check_commutant(&mut report, n, m);
        }
    }
    for p in [Commutation::Free, Commutation::AllCommute] {
        let jt = Sym::jtilde(p);
        report.expect(|| "J~^2 = J^2".into(), &(&jt * &jt), &Sym::j_power(p, 2));
    }
    check_engine(&mut report, trials, seed);
    report
}

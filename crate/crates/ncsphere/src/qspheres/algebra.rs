use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncalg::{GenId, NCPoly, Presentation, PresentationBuilder, Word};
use crate::scalars::QLaurent;

pub type QPoly = NCPoly<QLaurent>;

/// The algebra `A(S_q^{N-1})` with its partial radii.
#[derive(Clone, Debug)]
pub struct Sphere {
    big_n: usize,
    pres: Arc<Presentation<QLaurent>>,
    radii: Vec<QPoly>,
}

fn q(e: i32) -> QLaurent {
    QLaurent::q(e)
}

fn lit(g: GenId) -> QPoly {
    NCPoly::word(Word::letter(g))
}

fn word2(a: GenId, b: GenId) -> QPoly {
    NCPoly::word(Word(vec![a, b]))
}

impl Sphere {
    /// `A(S_q^{N-1})` for `N ≥ 2`.
    pub fn new(big_n: usize) -> Self {
        assert!(big_n >= 2, "sphere algebra needs N >= 2");
        let n = big_n / 2;
        let even = big_n % 2 == 1;
        let mut b = PresentationBuilder::<QLaurent>::new(&format!("Sq{}", big_n - 1));
        let x0 = even.then(|| b.self_adjoint("x0", 0, 0));
        let mut xs = Vec::new();
        let mut x = Vec::new();
        for i in 1..=n {
            let (s, g) = b.pair(&format!("x{i}"), i as u32, i as u32);
            xs.push(s);
            x.push(g);
        }
        let one = QPoly::one();
        // radii[i] = s_i in normal form, with s_0 = x0^2 (or 0)
        let mut radii: Vec<QPoly> = vec![match x0 {
            Some(g) => word2(g, g),
            None => QPoly::zero(),
        }];
        for i in 1..n {
            let prev = radii[i - 1].clone();
            radii.push(prev + word2(xs[i - 1], x[i - 1]));
        }
        let c = |c: QLaurent, p: QPoly| p.scale(&c);
        for j in 1..=n {
            let (sj, gj) = (xs[j - 1], x[j - 1]);
            if let Some(g0) = x0 {
                b.rule(gj, g0, c(q(-1), word2(g0, gj)));
                b.rule(sj, g0, c(q(1), word2(g0, sj)));
            }
            for i in 1..j {
                let (si, gi) = (xs[i - 1], x[i - 1]);
                b.rule(gj, gi, c(q(-1), word2(gi, gj)));
                b.rule(gj, si, c(q(-1), word2(si, gj)));
                b.rule(sj, gi, c(q(1), word2(gi, sj)));
                b.rule(sj, si, c(q(1), word2(si, sj)));
            }
            let s_prev = radii[j - 1].clone();
            if j < n {
                let rhs = word2(sj, gj) + s_prev.scale(&(QLaurent::one() - q(-2)));
                b.rule(gj, sj, rhs);
            } else {
                b.rule(gj, sj, one.clone() - s_prev.scale(&q(-2)));
                b.rule(sj, gj, one.clone() - s_prev);
            }
        }
        let doc = if even {
            "x_i x_j = q x_j x_i (i<j), x_i* x_j = q x_j x_i* (i!=j), [x_i, x_i*] = (1-q^-2) s_{i-1}, s_n = 1"
        } else {
            "x_i x_j = q x_j x_i (i<j), x_i* x_j = q x_j x_i* (i!=j), [x_i, x_i*] = (1-q^-2) s_{i-1}, s_0 = 0, s_n = 1"
        };
        let pres = b.doc(doc).build().expect("sphere presentation certificate");
        radii.push(QPoly::one());
        Sphere { big_n, pres: Arc::new(pres), radii }
    }

    /// Parse a CLI name such as `Sq4`.
    pub fn from_name(name: &str) -> Result<Self> {
        let d: usize = name
            .strip_prefix("Sq")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("unknown sphere '{name}'")))?;
        if !(1..=7).contains(&d) {
            return Err(Error::Parse(format!("unsupported sphere '{name}'")));
        }
        Ok(Self::new(d + 1))
    }

    /// `S_q^{2n}`.
    pub fn even(n: usize) -> Self {
        Self::new(2 * n + 1)
    }

    /// `S_q^{2n-1}`.
    pub fn odd(n: usize) -> Self {
        Self::new(2 * n)
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn dim(&self) -> usize {
        self.big_n - 1
    }

    /// Number of complex generators `x_1..x_n`.
    pub fn n(&self) -> usize {
        self.big_n / 2
    }

    pub fn is_even(&self) -> bool {
        self.big_n % 2 == 1
    }

    pub fn name(&self) -> &str {
        self.pres.name()
    }

    pub fn pres(&self) -> &Presentation<QLaurent> {
        &self.pres
    }

    pub fn pres_arc(&self) -> Arc<Presentation<QLaurent>> {
        self.pres.clone()
    }

    /// Partial radius `s_i`; `s_n = 1`.
    pub fn s(&self, i: usize) -> &QPoly {
        &self.radii[i]
    }

    /// `x_i`; `x_0` is zero on odd spheres.
    pub fn x(&self, i: usize) -> QPoly {
        if i == 0 {
            return self.pres.gen_by_name("x0").map(lit).unwrap_or_else(QPoly::zero);
        }
        lit(self.pres.g(&format!("x{i}")))
    }

    pub fn xs(&self, i: usize) -> QPoly {
        if i == 0 {
            return self.x(0);
        }
        lit(self.pres.g(&format!("x{i}'")))
    }

    pub fn el(&self, src: &str) -> QPoly {
        self.pres.el(src)
    }

    pub fn parse(&self, src: &str) -> Result<QPoly> {
        self.pres.parse(src)
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.pres.mul(a, b)
    }

    pub fn star(&self, a: &QPoly) -> QPoly {
        self.pres.star(a)
    }

    pub fn show(&self, a: &QPoly) -> String {
        self.pres.show(a)
    }

    /// Index of a generator and whether it is starred.
    pub fn gen_info(&self, g: GenId) -> (usize, bool) {
        let gen = &self.pres.generators()[g as usize];
        (gen.index as usize, gen.starred)
    }

    /// All normal words of length `≤ max_len`.
    pub fn normal_monomials(&self, max_len: usize) -> Vec<Word> {
        let g = self.pres.num_generators() as GenId;
        let mut out = vec![Word::unit()];
        let mut layer = vec![Word::unit()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for a in 0..g {
                    let mut v = w.0.clone();
                    v.push(a);
                    let w2 = Word(v);
                    if self.pres.is_normal(&w2) {
                        next.push(w2);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

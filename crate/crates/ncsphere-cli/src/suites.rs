use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ncsphere::fredholm::{
    cochain_b, cyclicity_check, odd_pairing, pairing_matrix, tau0_cochain, Cochain, EvenModule, OddModule,
};
use ncsphere::ncalg::{
    chern_even, chern_odd, confluence_probe, connes_b, hochschild_b, mat_check, CyclicChain, GenId, MatKind, MatNC,
    NCPoly, Presentation, Word,
};
use ncsphere::qspheres::{idempotent_even, unipotent, unitary_odd, PoissonSphere, QPoly, Sphere};
use ncsphere::repr::{build_rep, relation_check, sigma_intertwines, Family};
use ncsphere::scalars::{rat, GaussRational, QLaurent, Ring};
use ncsphere::theta::{
    clifford_algebra, clifford_matrices, match_s_theta4, moyal_torus_iso_check, rho, s_theta3, s_theta3_unitary,
    s_theta4, s_theta4_projection, theta_projection, theta_q, theta_sphere, theta_unitary, torus_algebra, twist_lemmas,
    ThetaMat, ThetaPoly,
};

use crate::report::RunReport;

/// Options shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: Option<usize>,
    pub seed: u64,
    pub trials: Option<usize>,
    pub timing: bool,
}

pub struct SuiteInfo {
    pub name: &'static str,
    pub about: &'static str,
    run: fn(&mut RunReport, &SuiteOptions),
}

pub fn suite_registry() -> Vec<SuiteInfo> {
    vec![
        SuiteInfo { name: "spheres-presentations", about: "confluence of every shipped presentation", run: presentations },
        SuiteInfo { name: "unipotents", about: "u_(2n) and u_(2n-1) square to one", run: unipotents },
        SuiteInfo { name: "ktheory-generators", about: "e_(2n), V_(2n+1) and their lowest Chern characters", run: ktheory },
        SuiteInfo { name: "representations", about: "relations, adjointness and intertwining of the shift models", run: representations },
        SuiteInfo { name: "fredholm-cocycles", about: "traces and the odd cyclic cocycle on all monomial tuples (--trials sets the maximal monomial length, default 3)", run: cocycles },
        SuiteInfo { name: "pairings", about: "even pairing matrices and odd pairings", run: pairings },
        SuiteInfo { name: "theta4", about: "instanton projection on S_theta^4 and the S_theta^3 unitary", run: theta4 },
        SuiteInfo { name: "theta-clifford", about: "lambda-Clifford algebras, their models, and the theta projections and unitaries", run: theta_clifford },
        SuiteInfo { name: "twist-lemmas", about: "twist and real-structure identities in the symbol algebra", run: twist },
        SuiteInfo { name: "moyal", about: "Moyal product and the Weyl map to the torus", run: moyal },
        SuiteInfo { name: "poisson", about: "semiclassical bracket of S_q^2 and S_q^3", run: poisson },
        SuiteInfo { name: "bicomplex", about: "b^2 = B^2 = bB + Bb = 0 on random chains", run: bicomplex },
    ]
}

/// Accepts the registry names plus `clifford` for `theta-clifford`.
pub fn find_suite(name: &str) -> Option<SuiteInfo> {
    let name = if name == "clifford" { "theta-clifford" } else { name };
    suite_registry().into_iter().find(|s| s.name == name)
}

pub fn run_suite(info: &SuiteInfo, opts: &SuiteOptions) -> RunReport {
    let mut r = RunReport::new(info.name, opts.seed);
    (info.run)(&mut r, opts);
    r
}

fn ns(o: &SuiteOptions, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    match o.n {
        Some(n) => vec![n],
        None => range.collect(),
    }
}

fn verdict(ok: bool, pass: &str, fail: String) -> ncsphere::Result<(bool, String)> {
    Ok((ok, if ok { pass.to_string() } else { fail }))
}

fn mat<S: Ring>(pres: &Presentation<S>, m: &MatNC<S>, kinds: &[MatKind]) -> ncsphere::Result<(bool, String)> {
    for &k in kinds {
        let c = mat_check(pres, m, k);
        if !c.ok {
            return Ok((false, c.witness.unwrap_or_default()));
        }
    }
    Ok((true, "exact".into()))
}

fn probe<S: Ring>(pres: &Presentation<S>, trials: usize, seed: u64) -> ncsphere::Result<(bool, String)> {
    let rep = confluence_probe(pres, trials, seed);
    Ok((rep.is_clean(), format!("{} discrepancies over {} words", rep.discrepancies.len(), trials)))
}

fn presentations(r: &mut RunReport, o: &SuiteOptions) {
    let trials = o.trials.unwrap_or(10_000);
    for d in 2..=7 {
        let s = Sphere::new(d + 1);
        r.check(format!("confluence {}", s.name()), o.timing, || probe(s.pres(), trials, o.seed));
    }
    let theta = [s_theta3(), s_theta4()];
    for t in theta.iter() {
        r.check(format!("confluence {}", t.name()), o.timing, || probe(t.pres(), trials, o.seed));
    }
    for big_n in 4..=5 {
        r.check(format!("confluence St{}", big_n - 1), o.timing, || probe(theta_sphere(big_n)?.pres(), trials, o.seed));
    }
    r.check("confluence T2", o.timing, || probe(torus_algebra(2)?.pres(), trials, o.seed));
    for n in 1..=3 {
        r.check(format!("confluence Cliff{n}"), o.timing, || probe(clifford_algebra(n)?.pres(), trials, o.seed));
    }
}

fn unipotents(r: &mut RunReport, o: &SuiteOptions) {
    for n in ns(o, 1..=3) {
        let even = Sphere::even(n);
        r.check(format!("u_({}) unipotent and self-adjoint", 2 * n), o.timing, || {
            mat(even.pres(), &unipotent(&even), &[MatKind::Unipotent, MatKind::SelfAdjoint])
        });
        let odd = Sphere::odd(n);
        r.check(format!("u_({}) unipotent", 2 * n - 1), o.timing, || {
            mat(odd.pres(), &unipotent(&odd), &[MatKind::Unipotent])
        });
    }
}

fn laurent_pow(base: QLaurent, n: usize) -> QLaurent {
    (0..n).fold(QLaurent::one(), |acc, _| acc * base.clone())
}

fn ktheory(r: &mut RunReport, o: &SuiteOptions) {
    for n in ns(o, 1..=3) {
        let e = idempotent_even(n);
        r.check(format!("e_({}) idempotent and self-adjoint", 2 * n), o.timing, || {
            mat(e.sphere.pres(), &e.matrix, &[MatKind::Idempotent, MatKind::SelfAdjoint])
        });
        let v = unitary_odd(n);
        r.check(format!("V_({}) unitary", 2 * n + 1), o.timing, || {
            mat(v.sphere.pres(), &v.matrix, &[MatKind::Unitary])
        });
        r.check(format!("ch_0(e_({})) = 1/2 (q^-1 - 1)^n x0", 2 * n), o.timing, || {
            let c = laurent_pow(QLaurent::q(-1) - QLaurent::one(), n) * QLaurent::constant(rat(1, 2));
            let expected = CyclicChain::tensor(&[&e.sphere.x(0)]).scale(&c);
            let got = chern_even(&e.matrix, 0)?;
            verdict(got == expected, "exact", got.show(e.sphere.pres()))
        });
        r.check(format!("ch_1/2(V_({})) = 1/2 (q^-2 - 1)^n (x1 (x) x1* - x1* (x) x1)", 2 * n + 1), o.timing, || {
            let s = &v.sphere;
            let c = laurent_pow(QLaurent::q(-2) - QLaurent::one(), n) * QLaurent::constant(rat(1, 2));
            let (x1, x1s) = (s.x(1), s.xs(1));
            let expected = CyclicChain::tensor(&[&x1, &x1s]).sub(&CyclicChain::tensor(&[&x1s, &x1])).scale(&c);
            let got = chern_odd(s.pres(), &v.matrix, 0)?;
            verdict(got == expected, "exact", got.show(s.pres()))
        });
    }
}

pub fn unit_lambda() -> GaussRational {
    GaussRational::new(rat(3, 5), rat(4, 5))
}

fn representations(r: &mut RunReport, o: &SuiteOptions) {
    for n in ns(o, 1..=3) {
        for family in [Family::EvenPlus, Family::EvenMinus, Family::OddLambda, Family::OddFourier] {
            let lambda = (family == Family::OddLambda).then(unit_lambda);
            r.check(format!("relations {family} n={n} (q=2, K=30)"), o.timing, || {
                let rep = build_rep(family, n, lambda.clone())?;
                let rc = relation_check(&rep, 2.0, 30, 1e-12)?;
                let w = format!("max residual {:.3e} on {} states", rc.max_residual, rc.checked);
                Ok((rc.passed(), w))
            });
            r.check(format!("adjointness {family} n={n}"), o.timing, || {
                let rep = build_rep(family, n, lambda.clone())?;
                Ok(match rep.check_adjointness() {
                    Ok(()) => (true, "symbolic".into()),
                    Err(w) => (false, w),
                })
            });
        }
        r.check(format!("psi+ o sigma = psi- n={n}"), o.timing, || {
            let (p, m) = (build_rep(Family::EvenPlus, n, None)?, build_rep(Family::EvenMinus, n, None)?);
            verdict(sigma_intertwines(&p, &m), "symbolic", "action tables differ".into())
        });
    }
}

fn monomials(s: &Sphere, max_len: usize) -> Vec<QPoly> {
    s.normal_monomials(max_len).into_iter().map(NCPoly::word).collect()
}

fn cocycle_vanishes(c: &Cochain, basis: &[QPoly]) -> ncsphere::Result<(bool, String)> {
    let arity = c.degree() + 1;
    let mut tuples: Vec<Vec<QPoly>> = vec![vec![]];
    for _ in 0..arity {
        tuples =
            tuples.into_iter().flat_map(|t| basis.iter().map(move |b| [t.clone(), vec![b.clone()]].concat())).collect();
    }
    for t in &tuples {
        let v = c.eval(t)?;
        if !v.is_zero() {
            let shown: Vec<String> = t.iter().map(|p| c.sphere().show(p)).collect();
            return Ok((false, format!("{} at ({}) = {v}", c.tag(), shown.join(", "))));
        }
    }
    Ok((true, format!("{} tuples", tuples.len())))
}

fn cocycles(r: &mut RunReport, o: &SuiteOptions) {
    let n = o.n.unwrap_or(1);
    let len = o.trials.unwrap_or(3);
    r.check(format!("b tau0 = 0 on S_q^{}", 2 * n), o.timing, || {
        let m = EvenModule::new(n)?;
        cocycle_vanishes(&cochain_b(&tau0_cochain(m.sphere())), &monomials(m.sphere(), len))
    });
    r.check(format!("b tau1 = 0 on S_q^{}", 2 * n), o.timing, || {
        let m = EvenModule::new(n)?;
        cocycle_vanishes(&cochain_b(&m.tau1_cochain()), &monomials(m.sphere(), len))
    });
    r.check(format!("phi cyclic on S_q^{}", 2 * n + 1), o.timing, || {
        let m = OddModule::new(n)?;
        let basis = monomials(m.sphere(), len);
        let pairs: Vec<Vec<QPoly>> =
            basis.iter().flat_map(|a| basis.iter().map(move |b| vec![a.clone(), b.clone()])).collect();
        verdict(
            cyclicity_check(&m.phi_cochain(), &pairs)?,
            &format!("{} pairs", pairs.len()),
            "phi(a,b) != -phi(b,a)".into(),
        )
    });
    r.check(format!("b phi = 0 on S_q^{}", 2 * n + 1), o.timing, || {
        let m = OddModule::new(n)?;
        cocycle_vanishes(&cochain_b(&m.phi_cochain()), &monomials(m.sphere(), len))
    });
}

fn pairings(r: &mut RunReport, o: &SuiteOptions) {
    for n in ns(o, 1..=3) {
        r.check(format!("pairing matrix n={n}"), o.timing, || {
            let pm = pairing_matrix(n)?;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = [[1, 1i64 << (n - 1)], [0, sign]];
            verdict(
                pm.matrix == expected,
                &format!("{:?}, det {}", pm.matrix, pm.determinant),
                format!("{:?}", pm.matrix),
            )
        });
    }
    let odd: Vec<usize> = match o.n {
        Some(n) if n <= 2 => vec![n],
        Some(_) => vec![],
        None => (0..=2).collect(),
    };
    for n in odd {
        r.check(format!("<mu_odd, V_({})>", 2 * n + 1), o.timing, || {
            let v = odd_pairing(n)?;
            let expected = if n % 2 == 0 { -1 } else { 1 };
            verdict(v == expected, &v.to_string(), format!("got {v}, expected {expected}"))
        });
    }
}

fn zero_chain<S: Ring>(c: ncsphere::Result<CyclicChain<S>>) -> ncsphere::Result<(bool, String)> {
    let c = c?;
    verdict(c.is_empty(), "zero", format!("{} terms", c.len()))
}

fn theta4(r: &mut RunReport, o: &SuiteOptions) {
    let alg = s_theta4();
    let e = s_theta4_projection(&alg);
    let p = alg.pres();
    r.check("e idempotent and self-adjoint", o.timing, || mat(p, &e, &[MatKind::Idempotent, MatKind::SelfAdjoint]));
    r.check("tr e = 2", o.timing, || {
        let t = p.normal_form(&e.trace());
        verdict(t == ThetaPoly::constant(ncsphere::scalars::Phase::from_int(2)), "exact", alg.show(&t))
    });
    r.check("upper-right block is q", o.timing, || {
        verdict(e.block(0, 2, 2).scale(&two()) == theta_q(&alg), "exact", "block differs".into())
    });
    r.check("ch_0(e) = 0", o.timing, || zero_chain(chern_even(&e, 0)));
    r.check("ch_1(e) = 0", o.timing, || zero_chain(chern_even(&e, 1)));
    r.check("b ch_2(e) = 0", o.timing, || {
        let ch2 = chern_even(&e, 2)?;
        let b = hochschild_b(p, &ch2)?;
        verdict(b.is_empty(), &format!("ch_2 has {} terms, b ch_2 = 0", ch2.len()), format!("{} terms", b.len()))
    });
    let (s3, q) = s_theta3_unitary();
    r.check("q unitary on S_theta^3", o.timing, || mat(s3.pres(), &q, &[MatKind::Unitary]));
    r.check("ch_1/2(q) = 0", o.timing, || zero_chain(chern_odd(s3.pres(), &q, 0)));
    r.check("classical point is commutative", o.timing, || {
        let c = alg.classical();
        let gens: Vec<ThetaPoly> = (0..c.num_generators()).map(|g| NCPoly::word(Word(vec![g as _]))).collect();
        let ok = gens.iter().all(|a| gens.iter().all(|b| c.commutator(a, b).is_zero()));
        verdict(ok, "all generators commute", "a commutator survives".into())
    });
}

fn two() -> ncsphere::scalars::Phase {
    ncsphere::scalars::Phase::from_int(2)
}

fn theta_clifford(r: &mut RunReport, o: &SuiteOptions) {
    for n in ns(o, 1..=3) {
        r.check(format!("gamma* = gamma, gamma^2 = 1, anticommutation n={n}"), o.timing, || {
            Ok(match clifford_algebra(n)?.check_chirality() {
                Ok(()) => (true, "exact".into()),
                Err(w) => (false, w),
            })
        });
        r.check(format!("matrix model n={n}"), o.timing, || {
            clifford_matrices(n).map(|_| (true, format!("size {}", 1 << n)))
        });
        r.check(format!("theta projection n={n} idempotent and self-adjoint"), o.timing, || {
            let (alg, e) = theta_projection(n)?;
            mat(alg.pres(), &e, &[MatKind::Idempotent, MatKind::SelfAdjoint])
        });
        r.check(format!("theta unitary n={n}"), o.timing, || {
            let (alg, u) = theta_unitary(n)?;
            mat(alg.pres(), &u, &[MatKind::Unitary])
        });
        for k in 0..n {
            r.check(format!("ch_{k}(e) = 0 n={n}"), o.timing, || {
                zero_chain(theta_projection(n).and_then(|(_, e)| chern_even(&e, k)))
            });
        }
        for k in 0..n {
            let (alg, u) = match theta_unitary(n) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let ch = chern_odd(alg.pres(), &u, k);
            if k + 2 <= n {
                r.check(format!("ch_{k}+1/2(u) = 0 n={n}"), o.timing, || zero_chain(ch));
            } else {
                r.check(format!("ch_{k}+1/2(u) != 0 n={n}"), o.timing, || {
                    let c = ch?;
                    verdict(!c.is_empty(), &format!("{} terms", c.len()), "vanishes".into())
                });
            }
        }
        if n == 2 {
            r.check("theta projection n=2 matches the S_theta^4 projection", o.timing, || {
                let (alg, e) = theta_projection(2)?;
                let st4 = s_theta4();
                let m: ThetaMat = match_s_theta4(&st4, &alg, &s_theta4_projection(&st4));
                verdict(m == e, "entrywise", "entries differ".into())
            });
        }
    }
}

fn twist(r: &mut RunReport, o: &SuiteOptions) {
    let trials = o.trials.unwrap_or(300);
    r.check("twist identities for |n_i| <= 3", o.timing, || {
        let rep = twist_lemmas(3, trials, o.seed);
        Ok((
            rep.passed(),
            format!(
                "{} identities, {} failures{}",
                rep.checked,
                rep.failures.len(),
                rep.failures.first().map(|f| format!(": {f}")).unwrap_or_default()
            ),
        ))
    });
}

fn moyal(r: &mut RunReport, o: &SuiteOptions) {
    r.check("rho((1,0),(0,1)) = L12^(1/2)", o.timing, || {
        let v = rho(&[1, 0], &[0, 1]);
        verdict(v == ncsphere::scalars::Phase::lambda(1, 2, 1), "exact", v.to_string())
    });
    for n in ns(o, 2..=3) {
        r.check(format!("Weyl map and associativity n={n}, |r| <= 3"), o.timing, || {
            let rep = moyal_torus_iso_check(n, 3)?;
            Ok((rep.passed(), format!("{} products, {} triples", rep.intertwiner_checked, rep.associativity_checked)))
        });
    }
}

fn poisson(r: &mut RunReport, o: &SuiteOptions) {
    for d in [2usize, 3] {
        let s = Sphere::new(d + 1);
        let ps = PoissonSphere::new(&s);
        let names: Vec<String> = s.pres().generators().iter().map(|g| g.name.clone()).collect();
        let gens: Vec<_> = names.iter().map(|n| ps.generator(n)).collect();
        r.check(format!("antisymmetry on {}", s.name()), o.timing, || {
            let ok = gens.iter().all(|f| gens.iter().all(|g| ps.bracket(f, g) == -ps.bracket(g, f)));
            verdict(ok, &format!("{} pairs", gens.len().pow(2)), "fails".into())
        });
        r.check(format!("Leibniz on {}", s.name()), o.timing, || {
            let ok = gens.iter().all(|f| {
                gens.iter().all(|g| {
                    gens.iter().all(|h| {
                        let lhs = ps.bracket(f, &ps.mul(g, h));
                        lhs == ps.mul(&ps.bracket(f, g), h) + ps.mul(g, &ps.bracket(f, h))
                    })
                })
            });
            verdict(ok, &format!("{} triples", gens.len().pow(3)), "fails".into())
        });
        r.check(format!("Jacobi on {}", s.name()), o.timing, || {
            let ok = gens.iter().all(|f| {
                gens.iter().all(|g| {
                    gens.iter().all(|h| {
                        let j = ps.bracket(f, &ps.bracket(g, h))
                            + ps.bracket(g, &ps.bracket(h, f))
                            + ps.bracket(h, &ps.bracket(f, g));
                        j.is_zero()
                    })
                })
            });
            verdict(ok, &format!("{} triples", gens.len().pow(3)), "fails".into())
        });
    }
}

/// A random chain of the given degree with short normal-form slots.
pub fn random_chain<S: Ring>(pres: &Presentation<S>, degree: usize, rng: &mut ChaCha8Rng) -> CyclicChain<S> {
    let g = pres.num_generators();
    let mut out = CyclicChain::zero(degree);
    for _ in 0..rng.gen_range(1..=2) {
        let slots: Vec<NCPoly<S>> = (0..=degree)
            .map(|_| {
                let len = rng.gen_range(0..=2);
                let w = Word((0..len).map(|_| rng.gen_range(0..g) as GenId).collect());
                pres.normal_form(&NCPoly::word(w))
            })
            .collect();
        let refs: Vec<&NCPoly<S>> = slots.iter().collect();
        out.add_chain(&CyclicChain::tensor(&refs), &S::from_int(rng.gen_range(1..=3)));
    }
    out
}

/// `b² = 0`, `B² = 0` and `bB + Bb = 0` on one chain.
pub fn bicomplex_identities<S: Ring>(
    pres: &Presentation<S>,
    c: &CyclicChain<S>,
) -> ncsphere::Result<Option<&'static str>> {
    let d = c.degree();
    if d >= 2 && !hochschild_b(pres, &hochschild_b(pres, c)?)?.is_empty() {
        return Ok(Some("b^2"));
    }
    if !connes_b(&connes_b(c)).is_empty() {
        return Ok(Some("B^2"));
    }
    let mut anti = hochschild_b(pres, &connes_b(c))?;
    if d >= 1 {
        anti = anti.add(&connes_b(&hochschild_b(pres, c)?));
    }
    if !anti.is_empty() {
        return Ok(Some("bB + Bb"));
    }
    Ok(None)
}

fn bicomplex_on<S: Ring>(pres: &Presentation<S>, trials: usize, seed: u64) -> ncsphere::Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..trials {
        let c = random_chain(pres, i % 4, &mut rng);
        if let Some(which) = bicomplex_identities(pres, &c)? {
            return Ok((false, format!("{which} fails on {}", c.show(pres))));
        }
    }
    Ok((true, format!("{trials} chains of degree 0..3")))
}

fn bicomplex(r: &mut RunReport, o: &SuiteOptions) {
    let trials = o.trials.unwrap_or(1000);
    let sq2 = Sphere::new(3);
    r.check("bicomplex on Sq2", o.timing, || bicomplex_on(sq2.pres(), trials, o.seed));
    let st4 = s_theta4();
    r.check("bicomplex on Stheta4", o.timing, || bicomplex_on(st4.pres(), trials, o.seed));
}

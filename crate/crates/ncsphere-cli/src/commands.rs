use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncsphere::fredholm::{odd_pairing, pairing_matrix, EvenModule, OddModule};
use ncsphere::ncalg::{chern_even, chern_odd, CyclicChain, Presentation};
use ncsphere::qspheres::{idempotent_even, unitary_odd, Sphere};
use ncsphere::repr::{build_rep, numeric_trace, trace_exact, truncate, Family};
use ncsphere::scalars::{GaussRational, Rational, Ring};
use ncsphere::theta::{
    clifford_algebra, s_theta3, s_theta3_unitary, s_theta4, s_theta4_projection, theta_projection, theta_sphere,
    theta_unitary, torus_algebra,
};
use ncsphere::Error;

use crate::suites::{find_suite, run_suite, suite_registry, unit_lambda, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "ncsphere", version, about = "Exact computations on noncommutative spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        /// Omit per-check timings.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the available suites.
        #[arg(long)]
        list: bool,
    },
    /// Chern character of a K-theory generator.
    Chern {
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Index pairings between K-theory and K-homology generators.
    Pairing {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Noncommutative integral on a sphere: `∫ a` (even) or `∫ a db` (odd).
    Integrate {
        #[arg(long)]
        sphere: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Trace of an element in an irreducible representation.
    Trace {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        expr: String,
        /// Unit-modulus parameter `re,im` for the odd family, e.g. `3/5,4/5`.
        #[arg(long)]
        lambda: Option<String>,
        /// Evaluate numerically at this `q` on a truncated lattice.
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = 40)]
        cutoff: usize,
        /// Trace of `a [F, b]` in the Fourier module instead.
        #[arg(long)]
        with_f: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Normal form of an expression.
    Reduce {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        expr: String,
    },
}

fn usage(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidParameter(_) => 2,
        _ => 1,
    }
}

/// Run the CLI on `args` (including the program name); returns the exit code and stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn render(format: Format, value: Value, text: String) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("JSON values serialize")),
        _ => text,
    }
}

fn execute(cmd: Command) -> ncsphere::Result<(i32, String)> {
    match cmd {
        Command::Verify { suite, n, seed, trials, no_timing, format, out, list } => {
            if list {
                let text: String = suite_registry().iter().map(|s| format!("{:<22} {}\n", s.name, s.about)).collect();
                return Ok((0, text));
            }
            let name = suite.ok_or_else(|| usage("--suite is required".into()))?;
            let info = find_suite(&name).ok_or_else(|| usage(format!("unknown suite '{name}'")))?;
            let opts = SuiteOptions { n, seed, trials, timing: !no_timing };
            let report = run_suite(&info, &opts);
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("reports serialize")),
                _ => report.to_text(),
            };
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, &text) {
                    return Ok((1, format!("error: writing {}: {e}\n", path.display())));
                }
            }
            Ok((if report.passed() { 0 } else { 1 }, text))
        }
        Command::Chern { object, n, degree, format } => chern(&object, n, degree, format),
        Command::Pairing { family, n, format } => pairing(&family, n, format),
        Command::Integrate { sphere, a, b, format } => integrate(&sphere, &a, b.as_deref(), format),
        Command::Trace { family, n, expr, lambda, q, cutoff, with_f, format } => {
            trace(&family, n, &expr, lambda.as_deref(), q, cutoff, with_f.as_deref(), format)
        }
        Command::Reduce { algebra, expr } => Ok((0, format!("{}\n", reduce(&algebra, &expr)?))),
    }
}

fn chain_output<S: Ring>(
    pres: &Presentation<S>,
    object: &str,
    n: usize,
    degree: usize,
    c: &CyclicChain<S>,
    format: Format,
) -> (i32, String) {
    let shown = c.show(pres);
    let value = json!({
        "object": object,
        "n": n,
        "degree": degree,
        "terms": c.len(),
        "zero": c.is_empty(),
        "chain": shown,
    });
    (0, render(format, value, format!("{shown}\n")))
}

fn chern(object: &str, n: usize, degree: usize, format: Format) -> ncsphere::Result<(i32, String)> {
    if n == 0 {
        return Err(usage("--n must be at least 1".into()));
    }
    match object {
        "e" => {
            let e = idempotent_even(n);
            Ok(chain_output(e.sphere.pres(), object, n, degree, &chern_even(&e.matrix, degree)?, format))
        }
        "v" | "V" => {
            let v = unitary_odd(n);
            Ok(chain_output(
                v.sphere.pres(),
                object,
                n,
                degree,
                &chern_odd(v.sphere.pres(), &v.matrix, degree)?,
                format,
            ))
        }
        "theta-e" => {
            let (alg, e) = theta_projection(n)?;
            Ok(chain_output(alg.pres(), object, n, degree, &chern_even(&e, degree)?, format))
        }
        "theta-u" => {
            let (alg, u) = theta_unitary(n)?;
            Ok(chain_output(alg.pres(), object, n, degree, &chern_odd(alg.pres(), &u, degree)?, format))
        }
        "st4-e" => {
            let alg = s_theta4();
            let e = s_theta4_projection(&alg);
            Ok(chain_output(alg.pres(), object, n, degree, &chern_even(&e, degree)?, format))
        }
        "st3-q" => {
            let (alg, q) = s_theta3_unitary();
            Ok(chain_output(alg.pres(), object, n, degree, &chern_odd(alg.pres(), &q, degree)?, format))
        }
        _ => Err(usage(format!("unknown object '{object}' (e, v, theta-e, theta-u, st4-e, st3-q)"))),
    }
}

fn pairing(family: &str, n: usize, format: Format) -> ncsphere::Result<(i32, String)> {
    match family {
        "even" => {
            let pm = pairing_matrix(n)?;
            let m = pm.matrix;
            let value = json!({ "family": "even", "n": n, "matrix": m, "determinant": pm.determinant });
            let text = match format {
                Format::Csv => {
                    let mut s = String::from("row,col,value\n");
                    for (i, row) in m.iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            s.push_str(&format!("{i},{j},{v}\n"));
                        }
                    }
                    s
                }
                _ => format!("[[{}, {}], [{}, {}]]\n", m[0][0], m[0][1], m[1][0], m[1][1]),
            };
            Ok((0, render(format, value, text)))
        }
        "odd" => {
            let v = odd_pairing(n)?;
            let value = json!({ "family": "odd", "n": n, "value": v });
            let text = match format {
                Format::Csv => format!("row,col,value\n0,0,{v}\n"),
                _ => format!("{v}\n"),
            };
            Ok((0, render(format, value, text)))
        }
        _ => Err(usage(format!("unknown pairing family '{family}' (even, odd)"))),
    }
}

fn integrate(sphere: &str, a: &str, b: Option<&str>, format: Format) -> ncsphere::Result<(i32, String)> {
    let s = Sphere::from_name(sphere)?;
    let pa = s.parse(a)?;
    let v = if s.is_even() {
        if b.is_some() {
            return Err(usage(format!("{sphere} is even-dimensional; --b is not used")));
        }
        EvenModule::new(s.n())?.integral(&pa)?
    } else {
        let b = b.ok_or_else(|| usage(format!("{sphere} is odd-dimensional; pass --b")))?;
        OddModule::new(s.n() - 1)?.integral(&pa, &s.parse(b)?)?
    };
    let value = json!({ "sphere": sphere, "a": a, "b": b, "value": v.to_string() });
    Ok((0, render(format, value, format!("{v}\n"))))
}

fn parse_lambda(src: &str) -> ncsphere::Result<GaussRational> {
    let bad = || Error::Parse(format!("expected lambda as 're,im', got '{src}'"));
    let (re, im) = src.split_once(',').ok_or_else(bad)?;
    let re: Rational = re.trim().parse().map_err(|_| bad())?;
    let im: Rational = im.trim().parse().map_err(|_| bad())?;
    Ok(GaussRational::new(re, im))
}

#[allow(clippy::too_many_arguments)]
fn trace(
    family: &str,
    n: usize,
    expr: &str,
    lambda: Option<&str>,
    q: Option<f64>,
    cutoff: usize,
    with_f: Option<&str>,
    format: Format,
) -> ncsphere::Result<(i32, String)> {
    let fam: Family = family.parse()?;
    if let Some(b) = with_f {
        if fam != Family::OddFourier {
            return Err(usage("--with-f needs the fourier family".into()));
        }
        let m = OddModule::new(n)?;
        let (pa, pb) = (m.sphere().parse(expr)?, m.sphere().parse(b)?);
        let v = m.phi(&pa, &pb)? * ncsphere::scalars::QRatFunc::from_int(2);
        let value = json!({ "family": family, "n": n, "a": expr, "b": b, "value": v.to_string() });
        return Ok((0, render(format, value, format!("{v}\n"))));
    }
    let lam = match (fam, lambda) {
        (Family::OddLambda, Some(s)) => Some(parse_lambda(s)?),
        (Family::OddLambda, None) => Some(unit_lambda()),
        (_, Some(_)) => return Err(usage("--lambda only applies to the odd family".into())),
        (_, None) => None,
    };
    let rep = build_rep(fam, n, lam)?;
    let a = rep.sphere().parse(expr)?;
    match q {
        None => {
            let v = trace_exact(&rep, &a)?;
            let value = json!({ "family": family, "n": n, "expr": expr, "value": v.to_string() });
            Ok((0, render(format, value, format!("{v}\n"))))
        }
        Some(q) => {
            let t = truncate(&rep, q, cutoff)?;
            let nt = numeric_trace(&t.operator(&a)?);
            let value = json!({
                "family": family, "n": n, "expr": expr, "q": q, "cutoff": cutoff,
                "re": nt.value.re, "im": nt.value.im, "tail_bound": nt.tail_bound,
            });
            let text = format!("{} + {}i (tail <= {:e})\n", nt.value.re, nt.value.im, nt.tail_bound);
            Ok((0, render(format, value, text)))
        }
    }
}

fn indexed(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix).and_then(|s| s.parse().ok())
}

/// Normal form of `expr` in a named algebra.
pub fn reduce(algebra: &str, expr: &str) -> ncsphere::Result<String> {
    if algebra.starts_with("Sq") {
        let s = Sphere::from_name(algebra)?;
        return Ok(s.show(&s.parse(expr)?));
    }
    let alg = match algebra {
        "Stheta4" => s_theta4(),
        "Stheta3" => s_theta3(),
        _ => {
            if let Some(d) = indexed(algebra, "St") {
                theta_sphere(d + 1)?
            } else if let Some(n) = indexed(algebra, "T") {
                torus_algebra(n)?
            } else if let Some(n) = indexed(algebra, "Cliff") {
                let c = clifford_algebra(n)?;
                return Ok(c.pres().show(&c.pres().parse(expr)?));
            } else {
                return Err(Error::Parse(format!("unknown algebra '{algebra}'")));
            }
        }
    };
    Ok(alg.show(&alg.parse(expr)?))
}

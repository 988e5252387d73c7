//! The `infhecke` command line. Every command prints a text report, or a
//! JSON document with `--json`. Exit codes: 0 success, 1 a verification
//! failed, 2 usage or parse error.

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abelian::{
    l5_identity, lfilt_decompose, lstar_kind1, lstar_kind2, pstep_certificate,
    tzz_independence_falsifier, CommutatorCertificate, CommutatorSpan,
};
use crate::acceptance;
use crate::engine::{Element, Presentation};
use crate::error::{Error, Result};
use crate::expr::{parse_element, parse_poly};
use crate::families::{
    build_presentation, central_lift_search, gl_central_elements, gl_seed, sp_central_element,
    Family, FamilySpec,
};
use crate::poly::Poly;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::sl2::centralizer::{centralizer_check, maximal_vectors_ug, Subject};
use crate::sl2::{fg_pair, qz, z0, CenterData, FgMethod, Hz, X, Y};
use crate::verma::{block_report, finite_dimensional_test, phi_poly, phi_z, VermaModule};

#[derive(Parser, Debug)]
#[command(name = "infhecke", version, about = "Exact computations in infinitesimal Hecke algebras")]
pub struct Cli {
    /// The deformation z as a polynomial in Delta.
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub z: String,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation depth for Verma modules.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Degree bound for searches and spans.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Seed for random weights and fuzzing.
    #[arg(long, global = true, default_value_t = acceptance::FUZZ_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of an expression in H_z.
    Nf { expr: String },
    /// Commutator [a, b] in H_z.
    Comm { a: String, b: String },
    /// t_z and q_z, with a centrality check.
    Center,
    /// The polynomials f_n and g_n.
    Fg {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: FgChoice,
    },
    /// q_z as a polynomial in Delta.
    Qz,
    /// z0(z, z') as a polynomial in Delta.
    Z0 {
        #[arg(long, allow_hyphen_values = true)]
        zprime: String,
    },
    /// The central element t_z.
    Tz,
    /// Maximal vectors of U(sl2) of a given weight, up to --degree.
    Maximal {
        #[arg(long, allow_hyphen_values = true)]
        weight: i64,
    },
    /// Truncated centralizer against its claimed generators, up to --degree.
    Centralizer {
        #[arg(long, default_value = "ug")]
        subject: String,
    },
    /// Central character, maximal vectors and characters of M(lambda).
    Verma {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Finite-dimensionality of V(r).
    Findim {
        #[arg(long)]
        r: i64,
    },
    /// Whether two weights share a central character.
    Block {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Commutator certificates.
    #[command(subcommand)]
    Abelian(AbelianCommand),
    /// The sp(2n) and gl(n) algebras.
    #[command(subcommand)]
    Families(FamiliesCommand),
    /// Run the acceptance suite.
    Verify {
        #[arg(long, value_enum, default_value = "full")]
        suite: Suite,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum FgChoice {
    All,
    FirstOrder,
    ThreeTerm,
    ClosedForm,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Suite {
    Full,
    Quick,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum ModuleGen {
    X,
    Y,
}

#[derive(Subcommand, Debug)]
pub enum AbelianCommand {
    /// Write u*x or u*y (u in U(g)) as a sum of commutators.
    Lfilt {
        u: String,
        #[arg(long, value_enum)]
        v: ModuleGen,
    },
    /// The two families of commutator identities.
    Lstar {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        zprime: Option<String>,
    },
    /// The identity relating [Delta^n, x] y - [Delta^n, y] x to t and z.
    L5 {
        #[arg(long)]
        n: usize,
    },
    /// Reduce t_z^a Delta^b to a polynomial in Delta modulo commutators.
    Pstep {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Membership in the commutator span truncated at --degree.
    Span { target: String },
    /// Search for relations among 1, ..., Delta^{m-1} modulo the span.
    Independence,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long, value_parser = ["sp2n", "gln"])]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta0: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta1: String,
}

#[derive(Subcommand, Debug)]
pub enum FamiliesCommand {
    /// Generators and brackets of the presentation.
    Build(FamilyArgs),
    /// The distinguished central elements and their centrality.
    Central(FamilyArgs),
    /// Search for a central lift of r_n up to --degree.
    Lift(FamilyArgs),
}

/// A finished command: what to print and whether its checks held.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Usage(_) | Error::UnknownGenerator(_) | Error::Json(_) => 2,
        _ => 1,
    }
}

/// Parses `args`, runs the command, prints the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&report.json).expect("json"));
            } else {
                emit(report.text.trim_end());
            }
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.json {
                emit(&json!({ "error": e.to_string(), "exit": exit_code(&e) }).to_string());
            } else {
                eprintln!("infhecke: {e}");
            }
            exit_code(&e)
        }
    }
}

// A closed pipe (e.g. `| head`) is not an error worth reporting.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn elem_json(e: &Element) -> Value {
    json!({ "text": e.to_string(), "terms": e.to_json() })
}

fn poly_json(p: &Poly) -> Value {
    json!({ "text": p.to_string(), "coeffs": p.coeffs().iter().map(format_scalar).collect::<Vec<_>>() })
}

fn scalar_arg(s: &str) -> Result<Scalar> {
    parse_scalar(s).map_err(|_| Error::Usage(format!("expected a rational p/q, got {s:?}")))
}

fn certificate_text(name: &str, c: &CommutatorCertificate) -> String {
    let mut out = format!("{name}: {}\n  = ", c.target);
    let mut parts: Vec<String> = c.pairs.iter().map(|(a, b)| format!("[{a}, {b}]")).collect();
    if !c.remainder.is_zero() {
        parts.push(format!("({})", c.remainder));
    }
    if parts.is_empty() {
        parts.push("0".into());
    }
    out.push_str(&parts.join("\n  + "));
    out.push('\n');
    out
}

fn certificate_json(c: &CommutatorCertificate) -> Result<Value> {
    Ok(json!({
        "certificate": c.to_json(),
        "pairs": c.pairs.len(),
        "max_left_degree": c.max_left_degree(),
        "verified": c.verify()?,
    }))
}

pub fn run(cli: &Cli) -> Result<Report> {
    let z = parse_poly(&cli.z)?;
    let hz = || Hz::new(&z);
    match &cli.command {
        Command::Nf { expr } => {
            let e = parse_element(expr, hz().presentation())?;
            Ok(Report::ok(e.to_string(), json!({ "z": z.to_string(), "normal_form": elem_json(&e) })))
        }
        Command::Comm { a, b } => {
            let h = hz();
            let p = h.presentation();
            let c = parse_element(a, p)?.commutator(&parse_element(b, p)?)?;
            Ok(Report::ok(c.to_string(), json!({ "z": z.to_string(), "commutator": elem_json(&c) })))
        }
        Command::Center => {
            let data = CenterData::new(&z)?;
            let central = data.hz().verify_central(data.tz());
            let text = format!(
                "z = {z}\nq_z = {}\nt_z = {}\ncentral: {central}\n",
                data.qz(),
                data.tz()
            );
            Ok(Report {
                text,
                json: json!({
                    "z": z.to_string(),
                    "q_z": poly_json(data.qz()),
                    "t_z": elem_json(data.tz()),
                    "central": central,
                }),
                ok: central,
            })
        }
        Command::Fg { n, method } => fg(*n, *method),
        Command::Qz => {
            let q = qz(&z)?;
            Ok(Report::ok(format!("q_z = {q}"), json!({ "z": z.to_string(), "q_z": poly_json(&q) })))
        }
        Command::Z0 { zprime } => {
            let zp = parse_poly(zprime)?;
            let v = z0(&z, &zp)?;
            Ok(Report::ok(
                format!("z0({z}, {zp}) = {v}"),
                json!({ "z": z.to_string(), "zprime": zp.to_string(), "z0": poly_json(&v) }),
            ))
        }
        Command::Tz => {
            let t = crate::sl2::center::tz(&z)?;
            Ok(Report::ok(format!("t_z = {t}"), json!({ "z": z.to_string(), "t_z": elem_json(&t) })))
        }
        Command::Maximal { weight } => {
            let bound = cli.degree.unwrap_or(6);
            let r = maximal_vectors_ug(*weight, bound)?;
            let mut text = format!(
                "maximal vectors of weight {weight} in U(sl2), degree <= {bound}: {} (expected {})\n",
                r.computed.len(),
                r.expected.len()
            );
            for v in &r.computed {
                text.push_str(&format!("  {v}\n"));
            }
            text.push_str(&format!("agrees with Delta^a e^(w/2): {}\n", r.agree));
            Ok(Report {
                text,
                json: json!({
                    "weight": weight,
                    "degree_bound": bound,
                    "computed": r.computed.iter().map(elem_json).collect::<Vec<_>>(),
                    "expected": r.expected.iter().map(elem_json).collect::<Vec<_>>(),
                    "agree": r.agree,
                }),
                ok: r.agree,
            })
        }
        Command::Centralizer { subject } => {
            let subject: Subject = subject.parse()?;
            let bound = cli.degree.unwrap_or(4);
            let r = centralizer_check(&z, subject, bound)?;
            let text = format!(
                "centralizer of {subject:?} in degree <= {bound}: dimension {}\n\
                 claimed generators: {}\n\
                 span of their products (slack {}): dimension {}\n\
                 agree: {}\n",
                r.centralizer.len(),
                r.claimed_generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "),
                r.slack,
                r.claimed_span.len(),
                r.agree
            );
            Ok(Report {
                text,
                json: json!({
                    "subject": format!("{subject:?}"),
                    "degree_bound": bound,
                    "slack": r.slack,
                    "centralizer_dim": r.centralizer.len(),
                    "claimed_generators": r.claimed_generators.iter().map(elem_json).collect::<Vec<_>>(),
                    "claimed_span_dim": r.claimed_span.len(),
                    "agree": r.agree,
                }),
                ok: r.agree,
            })
        }
        Command::Verma { lambda } => verma(&z, &scalar_arg(lambda)?, cli.depth.unwrap_or(8)),
        Command::Findim { r } => {
            let rep = finite_dimensional_test(*r, &z)?;
            let text = format!(
                "V({r}) for z = {z}: {}\nwitness s: {}\nweight dimensions: {}\ndimension: {}\n",
                if rep.finite { "finite-dimensional" } else { "infinite-dimensional" },
                rep.witness.map_or("none".into(), |s| s.to_string()),
                rep.simple_dims.as_ref().map_or("not computed".into(), |d| format!("{d:?}")),
                rep.dimension.map_or("-".into(), |d| d.to_string()),
            );
            Ok(Report::ok(
                text,
                json!({
                    "z": z.to_string(),
                    "r": r,
                    "finite": rep.finite,
                    "witness": rep.witness,
                    "simple_dims": rep.simple_dims,
                    "dimension": rep.dimension,
                }),
            ))
        }
        Command::Block { lambda, mu } => {
            let (l, m) = (scalar_arg(lambda)?, scalar_arg(mu)?);
            let r = block_report(&l, &m, &z)?;
            let fiber = r
                .rational_fiber
                .as_ref()
                .map(|f| f.iter().map(format_scalar).collect::<Vec<_>>());
            let text = format!(
                "phi({}) = {}\nphi({}) = {}\nsame block: {}\nrational weights in the block of {}: {}\nblock size bound: {}\n",
                lambda,
                format_scalar(&r.phi_lambda),
                mu,
                format_scalar(&r.phi_mu),
                r.same_block,
                lambda,
                fiber.as_ref().map_or("unknown".into(), |f| f.join(", ")),
                r.fiber_bound
            );
            Ok(Report::ok(
                text,
                json!({
                    "z": z.to_string(),
                    "phi_lambda": format_scalar(&r.phi_lambda),
                    "phi_mu": format_scalar(&r.phi_mu),
                    "same_block": r.same_block,
                    "rational_fiber": fiber,
                    "fiber_bound": r.fiber_bound,
                }),
            ))
        }
        Command::Abelian(cmd) => abelian(cli, &z, cmd),
        Command::Families(cmd) => families(cli, cmd),
        Command::Verify { suite } => {
            let ids: &[u8] = match suite {
                Suite::Full => &acceptance::CRITERIA,
                Suite::Quick => &acceptance::QUICK,
            };
            let outcomes = acceptance::run_suite(ids, cli.seed);
            let ok = outcomes.iter().all(|o| o.pass);
            let text = outcomes.iter().map(|o| o.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Report {
                text: format!(
                    "{text}\n{} of {} criteria passed\n",
                    outcomes.iter().filter(|o| o.pass).count(),
                    outcomes.len()
                ),
                json: json!({ "seed": cli.seed, "pass": ok, "criteria": outcomes }),
                ok,
            })
        }
    }
}

fn fg(n: usize, choice: FgChoice) -> Result<Report> {
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    let methods: Vec<FgMethod> = match choice {
        FgChoice::All => vec![FgMethod::FirstOrder, FgMethod::ThreeTerm, FgMethod::ClosedForm],
        FgChoice::FirstOrder => vec![FgMethod::FirstOrder],
        FgChoice::ThreeTerm => vec![FgMethod::ThreeTerm],
        FgChoice::ClosedForm => vec![FgMethod::ClosedForm],
    };
    let pairs: Vec<(Poly, Poly)> = methods.iter().map(|m| fg_pair(n, *m)).collect::<Result<_>>()?;
    let agree = pairs.windows(2).all(|w| w[0] == w[1]);
    let (f, g) = &pairs[0];
    let text = format!(
        "f_{n} = {}\ng_{n} = {}\nmethods agree: {agree}\n",
        f.display_with("T"),
        g.display_with("T")
    );
    Ok(Report {
        text,
        json: json!({ "n": n, "f": poly_json(f), "g": poly_json(g), "methods_agree": agree }),
        ok: agree,
    })
}

fn verma(z: &Poly, lambda: &Scalar, depth: usize) -> Result<Report> {
    if depth < 2 {
        return Err(Error::Usage("--depth must be at least 2".into()));
    }
    let m = VermaModule::new(lambda.clone(), z, depth);
    let search = depth - 2;
    let phi = phi_z(lambda, z)?;
    let maximal = m.maximal_vectors(search)?;
    let full: Vec<usize> = m.character(search).into_iter().map(|(_, d)| d).collect();
    let simple: Vec<usize> = m.simple_character(search).into_iter().map(|(_, d)| d).collect();
    let radical: Vec<usize> = full.iter().zip(&simple).map(|(a, b)| a - b).collect();
    let mut text = format!(
        "M({}) for z = {z}, truncated at depth {depth}\nphi_z(lambda) = {} (phi_z = {})\nmaximal vectors up to depth {search}:\n",
        format_scalar(lambda),
        format_scalar(&phi),
        phi_poly(z)?.display_with("lambda"),
    );
    for (d, v) in &maximal {
        text.push_str(&format!("  depth {d}: {}\n", v.display()));
    }
    text.push_str(&format!(
        "0 -> N -> M(lambda) -> V(lambda) -> 0 by depth 0..={search}:\n  dim M: {full:?}\n  dim V: {simple:?}\n  dim N: {radical:?}\n"
    ));
    Ok(Report::ok(
        text,
        json!({
            "z": z.to_string(),
            "lambda": format_scalar(lambda),
            "depth": depth,
            "phi": format_scalar(&phi),
            "maximal_vectors": maximal.iter().map(|(d, v)| json!({ "depth": d, "vector": v.to_json(lambda) })).collect::<Vec<_>>(),
            "dims_verma": full,
            "dims_simple": simple,
            "dims_radical": radical,
        }),
    ))
}

fn abelian(cli: &Cli, z: &Poly, cmd: &AbelianCommand) -> Result<Report> {
    let hz = Hz::new(z);
    let p = hz.presentation();
    let with_certs = |title: String, certs: Vec<(String, CommutatorCertificate)>| -> Result<Report> {
        let mut text = format!("{title}\n");
        let mut js = Vec::new();
        let mut ok = true;
        for (name, c) in &certs {
            let v = c.verify()?;
            ok &= v;
            text.push_str(&certificate_text(name, c));
            text.push_str(&format!("  verified: {v}\n"));
            js.push(json!({ "name": name, "result": certificate_json(c)? }));
        }
        Ok(Report {
            text,
            json: json!({ "z": z.to_string(), "certificates": js }),
            ok,
        })
    };
    match cmd {
        AbelianCommand::Lfilt { u, v } => {
            let u = parse_element(u, p)?;
            let g = match v {
                ModuleGen::X => X,
                ModuleGen::Y => Y,
            };
            let c = lfilt_decompose(&hz, &u, g)?;
            with_certs(format!("u = {u}"), vec![("u*v".into(), c)])
        }
        AbelianCommand::Lstar { alpha, beta, zprime } => {
            let certs = match (alpha, beta, zprime) {
                (_, _, Some(zp)) if alpha.is_none() && beta.is_none() => {
                    lstar_kind2(&hz, &parse_element(zp, p)?)?
                }
                (Some(a), Some(b), None) => {
                    lstar_kind1(&hz, &parse_element(a, p)?, &parse_element(b, p)?)?
                }
                _ => {
                    return Err(Error::Usage(
                        "give either --alpha and --beta, or --zprime".into(),
                    ))
                }
            };
            let [a, b] = certs;
            with_certs("commutator identities".into(), vec![("first".into(), a), ("second".into(), b)])
        }
        AbelianCommand::L5 { n } => {
            let ok = l5_identity(&hz, *n)?;
            Ok(Report {
                text: format!(
                    "[Delta^{n}, x] y - [Delta^{n}, y] x = 2 f_{n}(Delta)(t - hz/2) + g_{n}(Delta) z: {ok}\n"
                ),
                json: json!({ "z": z.to_string(), "n": n, "holds": ok }),
                ok,
            })
        }
        AbelianCommand::Pstep { a, b } => {
            let data = CenterData::new(z)?;
            let (poly, cert) = pstep_certificate(&data, *a, *b)?;
            let m = z.degree().unwrap_or(0) as u32;
            let expected = a * (m + 1) + b;
            let degree_ok = poly.degree() == Some(expected as usize);
            let verified = cert.verify()?;
            let text = format!(
                "t_z^{a} Delta^{b} = p(Delta) modulo commutators\np = {poly}\ndegree {} (expected {expected})\ncommutator pairs: {}\nverified: {verified}\n",
                poly.degree().map_or("-".into(), |d| d.to_string()),
                cert.pairs.len()
            );
            Ok(Report {
                text,
                json: json!({
                    "z": z.to_string(),
                    "a": a,
                    "b": b,
                    "p": poly_json(&poly),
                    "expected_degree": expected,
                    "pairs": cert.pairs.len(),
                    "verified": verified,
                }),
                ok: verified && degree_ok,
            })
        }
        AbelianCommand::Span { target } => {
            let bound = cli.degree.unwrap_or(4);
            let t = parse_element(target, p)?;
            let span = CommutatorSpan::new(z, bound, true);
            let cert = span.certify(&t)?;
            let inside = cert.is_some();
            let mut text = format!(
                "{t} in the commutator span truncated at N={bound}: {inside}\n"
            );
            let mut js = json!({ "z": z.to_string(), "bound": bound, "in_span": inside });
            if let Some(c) = &cert {
                text.push_str(&format!("certificate with {} pairs, verified: {}\n", c.pairs.len(), c.verify()?));
                js["certificate"] = certificate_json(c)?;
            }
            Ok(Report::ok(text, js))
        }
        AbelianCommand::Independence => {
            let bound = cli.degree.unwrap_or(6);
            let r = tzz_independence_falsifier(z, bound)?;
            Ok(Report {
                text: format!("z = {z}: {}\n", r.summary()),
                json: json!({
                    "z": z.to_string(),
                    "bound": bound,
                    "dependency": r.dependency.as_ref().map(|d| d.iter().map(format_scalar).collect::<Vec<_>>()),
                    "one_in_span": r.one_in_span,
                }),
                ok: r.dependency.is_none(),
            })
        }
    }
}

fn family_spec(a: &FamilyArgs) -> Result<FamilySpec> {
    FamilySpec::new(a.family.parse::<Family>()?, a.n, scalar_arg(&a.beta0)?, scalar_arg(&a.beta1)?)
}

fn describe(p: &Arc<Presentation>) -> (String, Value) {
    let gens = p.generators();
    let mut text = format!("{}: {} generators\n", p.id(), gens.len());
    let mut gj = Vec::new();
    for g in gens {
        text.push_str(&format!("  {} ({:?}, weight {})\n", g.name, g.kind, format_scalar(&g.weight)));
        gj.push(json!({ "name": g.name, "kind": format!("{:?}", g.kind), "weight": format_scalar(&g.weight) }));
    }
    text.push_str("nonzero brackets:\n");
    let mut bj = Vec::new();
    for i in 0..gens.len() {
        for j in 0..i {
            let c = Element::from_terms(p.clone(), p.correction(i, j).clone());
            if !c.is_zero() {
                text.push_str(&format!("  [{}, {}] = {c}\n", gens[i].name, gens[j].name));
                bj.push(json!({ "a": gens[i].name, "b": gens[j].name, "value": c.to_string() }));
            }
        }
    }
    (text, json!({ "id": p.id(), "generators": gj, "brackets": bj }))
}

fn families(cli: &Cli, cmd: &FamiliesCommand) -> Result<Report> {
    match cmd {
        FamiliesCommand::Build(a) => {
            let spec = family_spec(a)?;
            let (text, mut js) = describe(&build_presentation(&spec)?);
            js["spec"] = serde_json::to_value(spec.to_json())?;
            Ok(Report::ok(text, js))
        }
        FamiliesCommand::Central(a) => {
            let spec = family_spec(a)?;
            let named: Vec<(String, Element)> = match spec.family {
                Family::Sp2n => vec![(format!("t_{}", spec.n), sp_central_element(&spec)?)],
                Family::Gln => {
                    let (r, s) = gl_central_elements(&spec)?;
                    vec![(format!("r_{}", spec.n), r), (format!("s_{}", spec.n), s)]
                }
            };
            let mut text = String::new();
            let mut js = Vec::new();
            let mut ok = true;
            for (name, e) in &named {
                let central = e.is_central()?;
                let fixed = e.apply_antiinvolution()? == *e;
                ok &= central && fixed;
                text.push_str(&format!("{name} = {e}\n  central: {central}\n  fixed by j: {fixed}\n"));
                js.push(json!({ "name": name, "element": elem_json(e), "central": central, "fixed_by_j": fixed }));
            }
            Ok(Report {
                text,
                json: json!({ "spec": spec.to_json(), "elements": js }),
                ok,
            })
        }
        FamiliesCommand::Lift(a) => {
            let spec = family_spec(a)?;
            let bound = cli.degree.unwrap_or(2);
            let seed = gl_seed(&spec)?;
            let lift = central_lift_search(&spec, &seed, bound)?;
            let text = match &lift {
                Some(l) => format!(
                    "seed r_{n} = {seed}\ncentral lift (correction degree <= {bound}):\n  {l}\ncorrection: {}\n",
                    l - &seed,
                    n = spec.n
                ),
                None => format!("no central lift of r_{} with correction degree <= {bound}\n", spec.n),
            };
            Ok(Report {
                text,
                json: json!({
                    "spec": spec.to_json(),
                    "bound": bound,
                    "seed": elem_json(&seed),
                    "lift": lift.as_ref().map(elem_json),
                }),
                ok: lift.is_some(),
            })
        }
    }
}

//! Command-line front end for torplane.

pub mod input;
pub mod record;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use torplane::algebra::{parse_bipoly, parse_unipoly, BiPoly, CycloNum, DEFAULT_MAX_ORDER};
use torplane::curves::{self, CurveForm, StabDescriptor};
use torplane::jonq::{self, JonqMinus, JonqPlus};
use torplane::planeaut::{compose, jvdk_factor, normal_form, word_degree, AutWord, ElemMap};
use torplane::smallgrp::{self, FinGroup, LineSearch, Mat2};
use torplane::toric::{self, CyclicSurf};
use torplane::{Error, Result};

pub use record::{Format, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "torplane", version, about = "Exact computations with plane automorphisms and cyclic quotient surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Structured)]
    format: Format,
    /// Run every record in a file; records are separated by blank lines.
    #[arg(long, conflicts_with = "input")]
    batch: Option<PathBuf>,
    /// Read a single input record from a file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Plane automorphisms.
    #[command(subcommand)]
    Aut(AutCmd),
    /// De Jonquières elements.
    #[command(subcommand)]
    Jonq(JonqCmd),
    /// Cyclic quotient surfaces X_{d,e}.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Canonical curve forms and rectification.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Finite subgroups of GL(2).
    #[command(subcommand)]
    Group(GroupCmd),
}

#[derive(Subcommand, Debug)]
enum AutCmd {
    /// Factor the map (u, v) into elementary factors.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Compose words, first given first: w1 ∘ w2 ∘ …
    Compose {
        /// `[F1, F2, ...]` or `(u, v)`.
        #[arg(long = "word", allow_hyphen_values = true, required = true, num_args = 1)]
        words: Vec<String>,
    },
    NormalForm {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    Degree {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Args, Debug)]
struct JonqArg {
    /// `alpha, beta, f`.
    #[arg(long = "phi", allow_hyphen_values = true, required = true)]
    phis: Vec<String>,
    /// Read the elements as (x, βy + f(x)) instead of (αx + f(y), βy).
    #[arg(long)]
    minus: bool,
}

#[derive(Subcommand, Debug)]
enum JonqCmd {
    Analyze(JonqArg),
    /// A common conjugator into the torus.
    Conjugate(JonqArg),
    Commute(JonqArg),
    NormalizerMember {
        #[command(flatten)]
        phi: JonqArg,
        #[command(flatten)]
        surf: SurfArg,
    },
}

#[derive(Args, Debug)]
struct SurfArg {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    e: u32,
}

#[derive(Subcommand, Debug)]
enum ToricCmd {
    Info(SurfArg),
    Iso {
        #[command(flatten)]
        surf: SurfArg,
        #[arg(long)]
        d2: u32,
        #[arg(long)]
        e2: u32,
    },
    Generators(SurfArg),
    /// The image of C_{a,b} in the invariant-monomial embedding.
    Embed {
        #[command(flatten)]
        surf: SurfArg,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    Classes(SurfArg),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Par1,
    Par2,
}

#[derive(Args, Debug)]
struct FormArg {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    eps_x: bool,
    #[arg(long)]
    eps_y: bool,
    #[arg(long, default_value_t = 1)]
    a: u32,
    #[arg(long, default_value_t = 1)]
    b: u32,
    /// Comma-separated κ values.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    kappas: String,
    /// Comma-separated roots of p.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    roots: String,
}

#[derive(Subcommand, Debug)]
enum CurveCmd {
    Classify(FormArg),
    Stab(FormArg),
    Ams {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    Rectify {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// `d,e`: only use maps commuting with G_{d,e}.
        #[arg(long, allow_hyphen_values = true)]
        equivariant: Option<String>,
    },
}

#[derive(Args, Debug)]
struct GroupArg {
    /// A generator `a, b, c, d` (row-major).
    #[arg(long = "gen", allow_hyphen_values = true)]
    gens: Vec<String>,
    /// Add the quaternion generators.
    #[arg(long)]
    q8: bool,
    /// `d,e`: add diag(ζ_d^e, ζ_d).
    #[arg(long, allow_hyphen_values = true)]
    cyclic: Option<String>,
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    Closure(GroupArg),
    Small(GroupArg),
    Invariants {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degmax: u32,
    },
    Relation {
        /// An invariant, repeated in order f1, f2, …
        #[arg(long = "inv", allow_hyphen_values = true, required = true)]
        invs: Vec<String>,
        #[arg(long)]
        degree: u32,
    },
    Normalizer {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    Lines {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        height: Option<u32>,
    },
}

/// Exit code and text written to standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Upper bound for cyclotomic orders and group sizes (TORPLANE_MAX_ORDER).
pub fn max_order() -> u32 {
    std::env::var("TORPLANE_MAX_ORDER").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_ORDER)
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => return clap_failure(e, format_hint(&argv)),
    };
    let format = cli.format;
    if let Some(path) = &cli.batch {
        return match std::fs::read_to_string(path) {
            Ok(text) => run_batch(&text, format),
            Err(e) => io_failure(path, e, format),
        };
    }
    if let Some(path) = &cli.input {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(path)
        };
        return match text {
            Ok(text) => run_record_text(&text, format),
            Err(e) => io_failure(path, e, format),
        };
    }
    match cli.cmd {
        Some(cmd) => respond(&cmd, format),
        None => clap_failure(Cli::try_parse_from(["torplane", "--help"]).unwrap_err(), format),
    }
}

fn format_hint(argv: &[String]) -> Format {
    let plain = argv.windows(2).any(|w| w[0] == "--format" && w[1] == "plain") || argv.iter().any(|a| a == "--format=plain");
    if plain {
        Format::Plain
    } else {
        Format::Structured
    }
}

fn clap_failure(e: clap::Error, format: Format) -> Outcome {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            Outcome { code: EXIT_OK, stdout: e.render().to_string() }
        }
        _ => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            let mut r = Record::new("parse");
            r.push("error", "Parse");
            r.push("message", first);
            Outcome { code: EXIT_PARSE, stdout: r.render(format) }
        }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error, format: Format) -> Outcome {
    let mut r = Record::new("input");
    r.push("error", "Io");
    r.push("message", format!("{}: {e}", path.display()));
    Outcome { code: EXIT_PARSE, stdout: r.render(format) }
}

/// Turns an input record (`op: toric embed`, `d: 5`, …) into an argument list.
pub fn record_to_argv(text: &str) -> std::result::Result<Vec<String>, String> {
    let mut argv = vec!["torplane".to_string()];
    let mut flags = Vec::new();
    let mut op = None;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (k, v) = line.split_once(':').ok_or_else(|| format!("expected 'key: value', got '{line}'"))?;
        let (k, v) = (k.trim(), v.trim());
        match k {
            "schema" if v == "1" => {}
            "schema" => return Err(format!("unsupported schema {v}")),
            "op" => op = Some(v.to_string()),
            "format" => {}
            _ => {
                let flag = format!("--{}", k.replace('_', "-"));
                match v {
                    "true" => flags.push(flag),
                    "false" => {}
                    _ => {
                        flags.push(flag);
                        flags.push(v.to_string());
                    }
                }
            }
        }
    }
    let op = op.ok_or("missing 'op'")?;
    argv.extend(op.split_whitespace().map(String::from));
    argv.extend(flags);
    Ok(argv)
}

fn run_record_text(text: &str, format: Format) -> Outcome {
    match record_to_argv(text) {
        Ok(mut argv) => {
            if format == Format::Plain {
                argv.extend(["--format".to_string(), "plain".to_string()]);
            }
            run(argv)
        }
        Err(msg) => {
            let mut r = Record::new("input");
            r.push("error", "Parse");
            r.push("message", msg);
            Outcome { code: EXIT_PARSE, stdout: r.render(format) }
        }
    }
}

/// Runs each record independently; the exit code is the largest one seen.
pub fn run_batch(text: &str, format: Format) -> Outcome {
    let mut blocks = Vec::new();
    let mut cur = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !cur.trim().is_empty() {
                blocks.push(std::mem::take(&mut cur));
            }
            cur.clear();
        } else {
            cur.push_str(line);
            cur.push('\n');
        }
    }
    if !cur.trim().is_empty() {
        blocks.push(cur);
    }
    let outs: Vec<Outcome> = blocks.iter().map(|b| run_record_text(b, format)).collect();
    Outcome {
        code: outs.iter().map(|o| o.code).max().unwrap_or(EXIT_OK),
        stdout: outs.iter().map(|o| o.stdout.as_str()).collect::<Vec<_>>().join("\n"),
    }
}

fn respond(cmd: &Cmd, format: Format) -> Outcome {
    let op = op_name(cmd);
    match dispatch(cmd, &op) {
        Ok(r) => Outcome { code: EXIT_OK, stdout: r.render(format) },
        Err(e) => {
            let mut r = Record::new(op);
            r.push("error", e.code());
            r.push("message", &e);
            let code = if matches!(e, Error::Parse(_)) { EXIT_PARSE } else { EXIT_DOMAIN };
            Outcome { code, stdout: r.render(format) }
        }
    }
}

fn op_name(cmd: &Cmd) -> String {
    let (group, sub) = match cmd {
        Cmd::Aut(c) => ("aut", format!("{c:?}")),
        Cmd::Jonq(c) => ("jonq", format!("{c:?}")),
        Cmd::Toric(c) => ("toric", format!("{c:?}")),
        Cmd::Curve(c) => ("curve", format!("{c:?}")),
        Cmd::Group(c) => ("group", format!("{c:?}")),
    };
    let name: String = sub.chars().take_while(|c| c.is_alphanumeric()).collect();
    let mut kebab = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_uppercase() && i > 0 {
            kebab.push('-');
        }
        kebab.push(c.to_ascii_lowercase());
    }
    format!("{group} {kebab}")
}

fn dispatch(cmd: &Cmd, op: &str) -> Result<Record> {
    let mut r = Record::new(op);
    let mo = max_order();
    match cmd {
        Cmd::Aut(c) => aut(c, &mut r, mo)?,
        Cmd::Jonq(c) => jonq_cmd(c, &mut r, mo)?,
        Cmd::Toric(c) => toric_cmd(c, &mut r)?,
        Cmd::Curve(c) => curve_cmd(c, &mut r, mo)?,
        Cmd::Group(c) => group_cmd(c, &mut r, mo)?,
    }
    Ok(r)
}

fn push_word(r: &mut Record, w: &AutWord) {
    r.push("word", w);
    r.push("factors", w.len());
    for (i, f) in w.factors().iter().enumerate() {
        let key = |s: &str| format!("factor.{i}.{s}");
        let mut tri = |kind: &str, alpha: &CycloNum, beta: &CycloNum, f: String| {
            r.push(key("kind"), kind);
            r.push(key("alpha"), alpha);
            r.push(key("beta"), beta);
            r.push(key("f"), f);
        };
        match f {
            ElemMap::TriPlus { alpha, beta, f } => tri("TriPlus", alpha, beta, f.fmt_var('y')),
            ElemMap::TriMinus { alpha, beta, f } => tri("TriMinus", alpha, beta, f.fmt_var('x')),
            ElemMap::Affine { m, b } => {
                r.push(key("kind"), "Affine");
                r.push(key("matrix"), format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]));
                r.push(key("vector"), format!("[{}, {}]", b[0], b[1]));
            }
            ElemMap::Swap => r.push(key("kind"), "Swap"),
        }
    }
}

fn push_components(r: &mut Record, w: &AutWord) {
    let (u, v) = w.components();
    r.push("u", u);
    r.push("v", v);
}

fn aut(c: &AutCmd, r: &mut Record, mo: u32) -> Result<()> {
    match c {
        AutCmd::Factor { u, v } => {
            let (u, v) = (parse_bipoly(u, mo)?, parse_bipoly(v, mo)?);
            let w = jvdk_factor(&u, &v)?;
            push_components(r, &w);
            r.push("degree", word_degree(&w)?);
            push_word(r, &w);
        }
        AutCmd::Compose { words } => {
            let mut acc = AutWord::identity();
            for s in words {
                acc = compose(&acc, &input::word(s, mo)?);
            }
            let n = normal_form(&acc);
            push_components(r, &n);
            r.push("degree", word_degree(&n)?);
            push_word(r, &n);
        }
        AutCmd::NormalForm { word } => {
            let n = normal_form(&input::word(word, mo)?);
            push_components(r, &n);
            push_word(r, &n);
        }
        AutCmd::Degree { word } => {
            let w = input::word(word, mo)?;
            r.push("degree", word_degree(&w)?);
        }
    }
    Ok(())
}

enum Side {
    Plus(Vec<JonqPlus>),
    Minus(Vec<JonqMinus>),
}

fn jonq_elems(a: &JonqArg, mo: u32) -> Result<Side> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for s in &a.phis {
        let (al, be, f) = input::jonq_triple(s, mo)?;
        if a.minus {
            minus.push(JonqMinus::new(al, be, f)?);
        } else {
            plus.push(JonqPlus::new(al, be, f)?);
        }
    }
    Ok(if a.minus { Side::Minus(minus) } else { Side::Plus(plus) })
}

fn exactly<T>(v: Vec<T>, n: usize) -> Result<Vec<T>> {
    if v.len() != n {
        return Err(Error::Parse(format!("expected {n} --phi value(s), got {}", v.len())));
    }
    Ok(v)
}

fn jonq_cmd(c: &JonqCmd, r: &mut Record, mo: u32) -> Result<()> {
    match c {
        JonqCmd::Analyze(a) => {
            let (elem, rho, semi, order, inv, conj) = match jonq_elems(a, mo)? {
                Side::Plus(v) => {
                    let p = &exactly(v, 1)?[0];
                    let conj = jonq::conjugator_to_torus(p).ok().map(|u| u.to_elem().to_string());
                    (p.to_elem(), jonq::rho(p), jonq::is_semisimple(p), jonq::element_order(p), jonq::involution_type(p), conj)
                }
                Side::Minus(v) => {
                    let m = &exactly(v, 1)?[0];
                    let conj = m.conjugator_to_torus().ok().map(|e| e.to_string());
                    (m.to_elem(), m.rho(), m.is_semisimple(), m.element_order(), m.involution_type(), conj)
                }
            };
            r.push("phi", elem);
            r.push("rho", format!("[{}, {}]", rho.alpha, rho.beta));
            r.push("semisimple", semi);
            r.push("order", order.map_or("infinite".to_string(), |o| o.to_string()));
            r.push("involution_type", inv.name());
            r.push("conjugator", conj.unwrap_or_else(|| "none".into()));
        }
        JonqCmd::Conjugate(a) => {
            let (plus, minus) = match jonq_elems(a, mo)? {
                Side::Plus(v) => (v, false),
                Side::Minus(v) => (v.iter().map(JonqMinus::mirror).collect(), true),
            };
            let mu = jonq::simultaneous_conjugator(&plus)?;
            let conj = if minus { JonqMinus::from_mirror(&mu.to_jonq()).to_elem() } else { mu.to_elem() };
            r.push("conjugator", conj);
            for (i, p) in plus.iter().enumerate() {
                let t = jonq::rho(p);
                let t = if minus { (t.beta, t.alpha) } else { (t.alpha, t.beta) };
                r.push(format!("torus.{i}"), format!("[{}, {}]", t.0, t.1));
            }
        }
        JonqCmd::Commute(a) => {
            let c = match jonq_elems(a, mo)? {
                Side::Plus(v) => {
                    let v = exactly(v, 2)?;
                    jonq::commute(&v[0], &v[1])
                }
                Side::Minus(v) => {
                    let v = exactly(v, 2)?;
                    v[0].commute(&v[1])
                }
            };
            r.push("commute", c);
        }
        JonqCmd::NormalizerMember { phi, surf } => {
            let s = toric::make_surface(surf.d, surf.e)?;
            r.push("surface", &s);
            let m = match jonq_elems(phi, mo)? {
                Side::Plus(v) => jonq::in_normalizer_plus(&exactly(v, 1)?[0], &s),
                Side::Minus(v) => exactly(v, 1)?[0].in_normalizer_minus(&s),
            };
            r.push("in_normalizer", m);
        }
    }
    Ok(())
}

fn surface(a: &SurfArg) -> Result<CyclicSurf> {
    toric::make_surface(a.d, a.e)
}

fn toric_cmd(c: &ToricCmd, r: &mut Record) -> Result<()> {
    match c {
        ToricCmd::Info(a) => {
            let s = surface(a)?;
            r.push("surface", &s);
            r.push("d", s.d);
            r.push("e", s.e);
            r.push("e_prime", s.e_prime);
            r.push_list("c", &s.c);
            r.push("axes_equivalent", toric::axes_equivalent(&s));
            r.push_list("generators", toric::invariant_generators(&s));
        }
        ToricCmd::Iso { surf, d2, e2 } => {
            let (s1, s2) = (surface(surf)?, toric::make_surface(*d2, *e2)?);
            r.push("surface1", &s1);
            r.push("surface2", &s2);
            r.push("isomorphic", toric::surfaces_isomorphic(&s1, &s2));
        }
        ToricCmd::Generators(a) => {
            let s = surface(a)?;
            let g = toric::invariant_generators(&s);
            r.push("surface", &s);
            r.push("count", g.len());
            r.push_list("generators", g);
        }
        ToricCmd::Embed { surf, a, b } => {
            let s = surface(surf)?;
            let m = toric::curve_image_exponents(&s, *a, *b)?;
            r.push("surface", &s);
            r.push("curve", format!("C_{{{a},{b}}}"));
            r.push_list("exponents", &m.exponents);
            r.push("gcd", m.gcd());
            r.push("smooth", toric::is_image_smooth(&m));
        }
        ToricCmd::Classes(a) => {
            let s = surface(a)?;
            let out = toric::enumerate_embedding_classes(&s)?;
            r.push("surface", &s);
            r.push("upper_bound", out.upper_bound);
            r.push("count", out.candidates.len());
            for (i, c) in out.candidates.iter().enumerate() {
                r.push(format!("class.{i}"), &c.class);
                if let Some(m) = &c.image {
                    r.push_list(format!("class.{i}.exponents"), &m.exponents);
                }
                r.push(format!("class.{i}.smooth"), c.smooth);
            }
        }
    }
    Ok(())
}

fn form(a: &FormArg, mo: u32) -> Result<CurveForm> {
    match a.kind {
        Kind::Par1 => {
            if a.eps_x {
                return Err(Error::InvalidForm("par1 takes only eps_y and roots".into()));
            }
            CurveForm::par1(a.eps_y, input::scalar_list(&a.roots, mo)?)
        }
        Kind::Par2 => CurveForm::par2(a.eps_x, a.eps_y, a.a, a.b, input::scalar_list(&a.kappas, mo)?),
    }
}

fn curve_cmd(c: &CurveCmd, r: &mut Record, mo: u32) -> Result<()> {
    match c {
        CurveCmd::Classify(a) => {
            let f = form(a, mo)?;
            let t = curves::classify_form(&f)?;
            r.push("polynomial", f.defining_polynomial());
            r.push("type", t);
        }
        CurveCmd::Stab(a) => {
            let f = form(a, mo)?;
            let st = curves::stabilizer(&f)?;
            r.push("polynomial", f.defining_polynomial());
            r.push("stabilizer", st.core().tag());
            r.push("descriptor", &st);
            if let StabDescriptor::Conjugate { by, .. } = &st {
                r.push("conjugated_by", by);
            }
        }
        CurveCmd::Ams { u, v } => {
            let (u, v) = (parse_unipoly(u, mo)?, parse_unipoly(v, mo)?);
            r.push("ams", curves::ams_check(&u, &v));
        }
        CurveCmd::Rectify { u, v, equivariant } => {
            let (u, v) = (parse_unipoly(u, mo)?, parse_unipoly(v, mo)?);
            let w = match equivariant {
                Some(de) => {
                    let (d, e) = input::int_pair(de)?;
                    let s = toric::make_surface(d, e)?;
                    r.push("surface", &s);
                    r.push("case", curves::equivariant_type(&u, &v, &s)?.name());
                    curves::equivariant_rectify(&u, &v, &s)?
                }
                None => curves::rectify(&u, &v)?,
            };
            let (iu, iv) = w.apply_curve(&u, &v);
            r.push("image", format!("({iu}, {iv})"));
            push_word(r, &w);
        }
    }
    Ok(())
}

fn group(a: &GroupArg, mo: u32) -> Result<FinGroup> {
    let mut gens: Vec<Mat2> = a.gens.iter().map(|g| input::matrix(g, mo)).collect::<Result<_>>()?;
    if a.q8 {
        gens.extend(smallgrp::q8_generators());
    }
    if let Some(de) = &a.cyclic {
        let (d, e) = input::int_pair(de)?;
        let g = toric::make_surface(d, e)?.generator();
        gens.push(Mat2::diag(g.alpha, g.beta));
    }
    smallgrp::group_closure(&gens, mo as usize)
}

fn group_cmd(c: &GroupCmd, r: &mut Record, mo: u32) -> Result<()> {
    match c {
        GroupCmd::Closure(a) => {
            let g = group(a, mo)?;
            r.push("order", g.order());
            for (i, m) in g.elements().iter().enumerate() {
                r.push(format!("element.{i}"), m);
            }
        }
        GroupCmd::Small(a) => {
            let g = group(a, mo)?;
            r.push("order", g.order());
            r.push("small", smallgrp::is_small(&g));
            r.push("abelian", smallgrp::is_abelian(&g));
        }
        GroupCmd::Invariants { group: a, degmax } => {
            let g = group(a, mo)?;
            r.push("order", g.order());
            for (k, basis) in smallgrp::invariant_basis_up_to(&g, *degmax) {
                r.push_list(format!("degree.{k}"), basis);
            }
        }
        GroupCmd::Relation { invs, degree } => {
            let fs: Vec<BiPoly> = invs.iter().map(|s| parse_bipoly(s, mo)).collect::<Result<_>>()?;
            match smallgrp::find_relation(&fs, *degree)? {
                Some(rel) => {
                    r.push("relation", &rel);
                    r.push("expands_to_zero", rel.expand(&fs).is_zero());
                }
                None => r.push("relation", "none"),
            }
        }
        GroupCmd::Normalizer { group: a, h } => {
            let g = group(a, mo)?;
            let h = input::matrix(h, mo)?;
            r.push("h", &h);
            r.push("in_normalizer", smallgrp::in_normalizer(&h, &g)?);
        }
        GroupCmd::Lines { group: a, f, order, height } => {
            let g = group(a, mo)?;
            let f = parse_bipoly(f, mo)?;
            let d = LineSearch::default();
            let search = LineSearch { order: order.unwrap_or(d.order), height: height.unwrap_or(d.height) };
            let res = smallgrp::smooth_lines_with(&g, &f, search)?;
            r.push("count", res.directions.len());
            r.push_list("directions", res.directions.iter().map(|v: &[CycloNum; 2]| format!("({}, {})", v[0], v[1])));
            r.push("degenerate", res.degenerate);
            r.push("complete", res.complete);
            r.push("group_stable", res.group_stable);
        }
    }
    Ok(())
}

//! Command-line front end for `spinobs`.
//!
//! [`run`] takes the argument vector and a stdin handle and returns the exit
//! code with everything that would be printed, so the binary is a thin
//! wrapper and tests can drive the full interface in-process.
//!
//! Exit codes: 0 on success (and on a passing `obstruct`), 1 when `obstruct`
//! finds an obstruction or a corpus example fails, 2 on malformed input.

mod corpus;
mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Read;

use clap::{Args, ColorChoice, Parser, Subcommand};
use serde_json::{json, Value};
use spinobs::serial::{self, endo_from_json, endo_from_json_unchecked};
use spinobs::{
    factor, levine_check, obstruction_check, parse_poly, parse_rational, seifert_is_unimodular, seifert_to_alexander,
    spin, twist_spin, Error, LaurentPoly, ModuleEndo, TorsionModule,
};

pub use corpus::{corpus, Example};
use render::{canon_list, Printer};

#[derive(Parser, Debug)]
#[command(
    name = "spinobs",
    version,
    about = "Alexander polynomial obstructions to deform-spinning",
    color = ColorChoice::Never
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on single Laurent polynomials
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Torsion modules given by cyclic generators
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Endomorphisms of torsion modules (JSON input)
    #[command(subcommand)]
    Endo(EndoCommand),
    /// Alexander polynomials of a deform-spin from a JSON chain
    Spin(Source),
    /// Alexander polynomials of a twist-spin, with the obstruction verdict
    TwistSpin {
        /// Twist: the monodromy acts as t^k
        #[arg(long, value_parser = parse_int)]
        k: i64,
        /// Alexander polynomials of H_1 ... H_{n-1} of the knot being spun
        #[arg(long = "delta", num_args = 1..)]
        deltas: Vec<String>,
        /// Dimension of the spun knot; defaults to one more than the number of deltas
        #[arg(long)]
        n: Option<usize>,
    },
    /// Alexander polynomial det(V - tV^T) of an integer Seifert matrix
    Seifert(Source),
    /// Decide whether n polynomials can be those of a deform-spun n-knot
    Obstruct {
        #[command(flatten)]
        deltas: DeltaList,
        /// Only require the multiplicative chain, not its symmetry
        #[arg(long)]
        chain_only: bool,
    },
    /// Check Levine's realizability relations
    Levine {
        #[command(flatten)]
        deltas: DeltaList,
    },
    /// Run the built-in example corpus and print a pass/fail table
    Examples,
}

#[derive(Subcommand, Debug)]
enum PolyCommand {
    /// Canonical associate: primitive, positive leading coefficient, no negative powers
    Canon {
        poly: String,
    },
    /// Conjugate p(1/t), its canonical form, and whether p is symmetric
    Conj {
        poly: String,
    },
    /// Irreducible factorization over Q
    Factor {
        poly: String,
    },
    /// Value at a nonzero rational point
    Eval {
        poly: String,
        at: String,
    },
    /// Canonical greatest common divisor
    Gcd {
        a: String,
        b: String,
    },
}

#[derive(Subcommand, Debug)]
enum ModuleCommand {
    /// Order ideal, invariant factors and Q-dimension
    OrderIdeal {
        /// Cyclic generators; read as a JSON array from --file or stdin when omitted
        generators: Vec<String>,
        #[arg(long)]
        file: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum EndoCommand {
    /// Whether every matrix entry gives a well-defined map
    Check(Source),
    /// Order ideal of the cokernel
    CokerIdeal(Source),
    /// Order ideal of the kernel
    KerIdeal(Source),
    /// Order ideal of the kernel of the dual map
    DualKerIdeal(Source),
}

/// JSON given inline, in a file, or on stdin.
#[derive(Args, Debug)]
struct Source {
    input: Option<String>,
    #[arg(long, conflicts_with = "input")]
    file: Option<String>,
}

#[derive(Args, Debug)]
struct DeltaList {
    /// Dimension of the knot
    #[arg(long)]
    n: usize,
    /// Delta_1 ... Delta_n
    #[arg(long, num_args = 1.., required = true)]
    deltas: Vec<String>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// ANSI colors on verdict words.
    pub color: bool,
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, stdin, Options::default())
}

pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, options: Options) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args.into_iter().map(shield_negative)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut out = Printer::new(cli.json, options.color);
    match dispatch(cli.command, stdin, &mut out) {
        Ok(code) => out.finish(code),
        Err(e) => {
            let mut failed = out.discard();
            failed.stderr.push_str(&format!("error: {e}\n"));
            failed.code = 2;
            failed
        }
    }
}

/// Polynomials such as `-2t^2+3t-2` look like short flags to the argument
/// parser. The only short flags are `-h` and `-V`, so any other token with a
/// single leading `-` is a value; a leading space keeps it one, and the
/// polynomial grammar ignores whitespace.
fn shield_negative<T: Into<OsString>>(arg: T) -> OsString {
    let arg = arg.into();
    match arg.to_str() {
        Some(s) if s.starts_with('-') && !s.starts_with("--") && s.len() > 1 && s != "-h" && s != "-V" => {
            format!(" {s}").into()
        }
        _ => arg,
    }
}

fn parse_int(s: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|e| format!("{e}"))
}

fn read_source(src: &Source, stdin: &mut dyn Read) -> Result<String, Error> {
    match (&src.input, &src.file) {
        (Some(text), _) => Ok(text.clone()),
        (None, Some(path)) => read_file(path),
        (None, None) => read_stdin(stdin),
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))
}

fn read_stdin(stdin: &mut dyn Read) -> Result<String, Error> {
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| Error::Invalid(format!("cannot read stdin: {e}")))?;
    if text.trim().is_empty() {
        return Err(Error::Invalid("expected JSON input on stdin".into()));
    }
    Ok(text)
}

fn parse_all(strings: &[String]) -> Result<Vec<LaurentPoly>, Error> {
    strings.iter().map(|s| parse_poly(s)).collect()
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut Printer) -> Result<i32, Error> {
    match command {
        Command::Poly(cmd) => poly(cmd, out).map(|()| 0),
        Command::Module(ModuleCommand::OrderIdeal { generators, file }) => {
            let module = if !generators.is_empty() {
                TorsionModule::new(parse_all(&generators)?)?
            } else {
                let text = match file {
                    Some(path) => read_file(&path)?,
                    None => read_stdin(stdin)?,
                };
                serial::module_from_json(&text)?
            };
            describe_module(out, "module", &module);
            Ok(0)
        }
        Command::Endo(cmd) => endo(cmd, stdin, out).map(|()| 0),
        Command::Spin(src) => {
            let chain = serial::chain_from_json(&read_source(&src, stdin)?)?;
            let result = spin(&chain)?;
            out.spin(&result);
            Ok(0)
        }
        Command::TwistSpin { k, deltas, n } => {
            let polys = parse_all(&deltas)?;
            if let Some(n) = n {
                if n != polys.len() + 1 {
                    return Err(Error::Invalid(format!(
                        "a twist-spun {n}-knot needs {} polynomials for H_1 ... H_{}, got {}",
                        n.saturating_sub(1),
                        n.saturating_sub(1),
                        polys.len()
                    )));
                }
            }
            let result = twist_spin(&polys, k)?;
            let verdict = obstruction_check(result.n(), &canon_list(&result.deltas), false)?;
            out.twist_spin(k, &result, &verdict);
            Ok(0)
        }
        Command::Seifert(src) => {
            let text = read_source(&src, stdin)?;
            let v: Vec<Vec<i64>> = serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?;
            let alexander = seifert_to_alexander(&v)?;
            let unimodular = seifert_is_unimodular(&v)?;
            if !unimodular {
                out.warn("det(V - V^T) is not +-1, so V is not the Seifert matrix of a knot");
            }
            out.seifert(&alexander, unimodular);
            Ok(0)
        }
        Command::Obstruct { deltas, chain_only } => {
            let polys = parse_all(&deltas.deltas)?;
            let verdict = obstruction_check(deltas.n, &polys, chain_only)?;
            out.verdict(&polys, &verdict, chain_only);
            Ok(if verdict.passed { 0 } else { 1 })
        }
        Command::Levine { deltas } => {
            let polys = parse_all(&deltas.deltas)?;
            let report = levine_check(deltas.n, &polys)?;
            out.levine(&report);
            Ok(0)
        }
        Command::Examples => {
            let results: Vec<(Example, Result<(), String>)> =
                corpus().into_iter().map(|ex| {
                    let outcome = (ex.check)();
                    (ex, outcome)
                }).collect();
            out.examples(&results);
            Ok(if results.iter().all(|(_, r)| r.is_ok()) { 0 } else { 1 })
        }
    }
}

fn poly(cmd: PolyCommand, out: &mut Printer) -> Result<(), Error> {
    match cmd {
        PolyCommand::Canon { poly } => {
            let c = parse_poly(&poly)?.canon();
            out.value(&c, json!({ "canon": c.render_compact() }));
        }
        PolyCommand::Conj { poly } => {
            let p = parse_poly(&poly)?;
            let conj = p.conj();
            let canon = conj.canon();
            let symmetric = p.canon().is_symmetric();
            out.lines(
                &[
                    format!("conj: {conj}"),
                    format!("canon of conj: {canon}"),
                    format!("symmetric: {}", render::yes_no(symmetric)),
                ],
                json!({
                    "conj": conj.render_compact(),
                    "canon": canon.render_compact(),
                    "symmetric": symmetric,
                }),
            );
        }
        PolyCommand::Factor { poly } => {
            let p = parse_poly(&poly)?;
            out.factorization(&p, &factor(&p)?);
        }
        PolyCommand::Eval { poly, at } => {
            let value = parse_poly(&poly)?.eval(&parse_rational(&at)?)?;
            out.value(&value, json!({ "value": value.to_string() }));
        }
        PolyCommand::Gcd { a, b } => {
            let g = parse_poly(&a)?.gcd(&parse_poly(&b)?)?;
            out.value(&g, json!({ "gcd": g.render_compact() }));
        }
    }
    Ok(())
}

fn endo(cmd: EndoCommand, stdin: &mut dyn Read, out: &mut Printer) -> Result<(), Error> {
    match cmd {
        EndoCommand::Check(src) => {
            let f = endo_from_json_unchecked(&read_source(&src, stdin)?)?;
            let offending = f.offending_entry();
            let mut lines = vec![format!("well defined: {}", render::yes_no(offending.is_none()))];
            if let Some((row, col)) = offending {
                let ps = f.domain().summands();
                lines.push(format!(
                    "entry ({row}, {col}) does not map Lambda/({}) into Lambda/({}): {} does not divide ({})*({})",
                    ps[col],
                    ps[row],
                    ps[row],
                    f.matrix()[(row, col)],
                    ps[col]
                ));
            }
            out.lines(
                &lines,
                json!({
                    "well_defined": offending.is_none(),
                    "entry": offending.map(|(r, c)| vec![r, c]),
                }),
            );
        }
        EndoCommand::CokerIdeal(src) => {
            let f = endo_from_json(&read_source(&src, stdin)?)?;
            describe_module(out, "cokernel", &f.coker_module()?);
        }
        EndoCommand::KerIdeal(src) => {
            let f = endo_from_json(&read_source(&src, stdin)?)?;
            describe_module(out, "kernel", &f.kernel_module()?);
        }
        EndoCommand::DualKerIdeal(src) => {
            let f: ModuleEndo = endo_from_json(&read_source(&src, stdin)?)?;
            describe_module(out, "dual kernel", &f.dual_endo()?.kernel_module()?);
        }
    }
    Ok(())
}

fn describe_module(out: &mut Printer, what: &str, m: &TorsionModule) {
    let order = m.order_ideal();
    let factors = m.invariant_factors();
    let value: Value = json!({
        "order_ideal": order.render_compact(),
        "invariant_factors": factors.iter().map(|p| p.render_compact()).collect::<Vec<_>>(),
        "dimension": m.dimension(),
    });
    out.lines(
        &[
            format!("{what}: {}", render::module(m)),
            format!("order ideal: {order}"),
            format!("invariant factors: {}", render::list(&factors)),
            format!("dimension over Q: {}", m.dimension()),
        ],
        value,
    );
}

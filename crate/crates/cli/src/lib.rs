//! The `gx` command line: argument parsing and dispatch into `gx-core`.
//!
//! [`run`] never prints and never exits; `main` does both. Exit codes are 0
//! for success, 1 when a verification fails and 2 for bad input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use gx_core::arf::parse_form;
use gx_core::builtin;
use gx_core::cochain::{parse_cochain, write_cochain, Cochain, Ring, Z2};
use gx_core::group::{
    big_d, chi, commutator, evaluate_g1, extension_cocycle, inverse, kapustin_defect, kapustin_form, parse_triple,
    power, product, write_triple, GroupContext, Triple, DEFAULT_ORDER_BOUND,
};
use gx_core::homology::cohomology;
use gx_core::laws::{run_laws, LawOptions};
use gx_core::linalg::Qz;
use gx_core::simplicial::{barycentric_subdivision, fundamental_cycle, parse_complex, write_complex, OrderedComplex};

/// Exit code and the text to show for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub report: String,
}

impl CommandOutcome {
    fn ok(report: impl Into<String>) -> Self {
        CommandOutcome { exit_code: 0, report: report.into() }
    }

    fn verdict(passed: bool, report: impl Into<String>) -> Self {
        CommandOutcome { exit_code: if passed { 0 } else { 1 }, report: report.into() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gx", version, about = "Exact computations in G(X), the dual of 3-dimensional Spin bordism")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology H^k(X; R) of a complex
    Cohom {
        /// Complex in .osc format
        complex: PathBuf,
        #[arg(long, value_parser = parse_ring)]
        coeff: Ring,
        #[arg(long)]
        deg: usize,
    },
    /// Filtration invariants and order of G(X)
    Gstruct { complex: PathBuf },
    /// Group operations on triple files
    Op {
        #[command(subcommand)]
        op: Op,
    },
    /// Evaluate a G^1 element on the fundamental cycle
    Eval(EvalArgs),
    /// Gauss sum and Arf invariant of a quadratic form
    Arf {
        /// Form file (`quadform <name> dim <n>`, `B` rows, `q` line)
        form: PathBuf,
    },
    /// Built-in verification runs
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// First barycentric subdivision of a complex
    Subdivide {
        complex: PathBuf,
        /// Write `<name>_sd.osc` into DIR instead of printing
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Print or emit a built-in example complex with its named cochains
    Builtin {
        /// One of point, sphere1, sphere2, sphere3, rp2, torus, tss2
        name: String,
        /// Write `<name>.osc` and one `.coc` per named cochain into DIR
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ComplexArg {
    /// Complex for triple or cochain files that do not embed one
    #[arg(long, value_name = "FILE.osc", global = true)]
    complex: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Op {
    /// g·h
    Product {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// g⁻¹
    Inverse {
        g: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// gⁿ (n may be negative)
    Power {
        g: PathBuf,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// Whether g is the identity of G(X)
    IsIdentity {
        g: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// Whether g and h agree in G(X)
    Equal {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// Least n ≤ bound with gⁿ = 1 in G(X)
    Order {
        g: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        bound: u32,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// g·h·g⁻¹·h⁻¹
    Commutator {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// The involution χ_b applied to g
    Chi {
        /// ℤ/2 1-cocycle in .coc format
        b: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// (w − A³/8, p, a), with a check of Kapustin's equation
    Kapustin {
        g: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
    /// The extension cocycle z(a, b) of two ℤ/2 1-cocycles (needs --complex)
    ExtensionCocycle {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        c: ComplexArg,
    },
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Triple file with a = 0 (or give --arf)
    g: PathBuf,
    /// ℤ/2 1-cochain t in .coc format (default 0)
    #[arg(long, value_name = "FILE.coc")]
    t: Option<PathBuf>,
    /// Spin term ½[Spin], 0 or 1/2
    #[arg(long, default_value = "0", value_parser = parse_qz)]
    spin: Qz,
    /// Arf term p/q, required when a ≠ 0
    #[arg(long, value_parser = parse_qz)]
    arf: Option<Qz>,
    #[command(flatten)]
    c: ComplexArg,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Reproduce the evaluation 1/4 on T_SS²
    Appendix,
    /// Randomized property suites
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        complexes: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: gx_core::Error| e.to_string())
}

fn parse_qz(s: &str) -> Result<Qz, String> {
    s.parse().map_err(|e: gx_core::Error| e.to_string())
}

/// Parses `argv` (including the program name) and runs one command.
pub fn run(argv: Vec<String>) -> CommandOutcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandOutcome { exit_code: code, report: e.render().to_string() };
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| CommandOutcome { exit_code: 2, report: format!("error: {e:#}") })
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_complex(path: &Path) -> anyhow::Result<Arc<OrderedComplex>> {
    let x = parse_complex(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Arc::new(x))
}

fn load_optional(c: &ComplexArg) -> anyhow::Result<Option<Arc<OrderedComplex>>> {
    c.complex.as_deref().map(load_complex).transpose()
}

fn load_triple(path: &Path, x: Option<&Arc<OrderedComplex>>) -> anyhow::Result<Triple> {
    let (_, g) = parse_triple(&read(path)?, x).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

fn load_z2(path: &Path, x: &Arc<OrderedComplex>, degree: usize) -> anyhow::Result<Cochain<Z2>> {
    let nc = parse_cochain(&read(path)?, x).with_context(|| format!("parsing {}", path.display()))?;
    if nc.cochain.degree() != degree {
        bail!("{}: expected a degree {degree} cochain, found degree {}", path.display(), nc.cochain.degree());
    }
    nc.cochain.into_z2().with_context(|| path.display().to_string())
}

/// One triple, or two on the same complex.
fn load_pair(g: &Path, h: &Path, c: &ComplexArg) -> anyhow::Result<(Triple, Triple)> {
    let x = load_optional(c)?;
    let g = load_triple(g, x.as_ref())?;
    let h = load_triple(h, Some(g.complex()))?;
    Ok((g, h))
}

/// Result triples embed their complex unless it was supplied with --complex.
fn emit_triple(name: &str, g: &Triple, c: &ComplexArg) -> String {
    write_triple(name, g, c.complex.is_none())
}

fn require_d_cocycle(g: &Triple) -> anyhow::Result<()> {
    if !big_d(g).is_zero() {
        bail!(gx_core::Error::NotDCocycle);
    }
    Ok(())
}

fn dispatch(cmd: Command) -> anyhow::Result<CommandOutcome> {
    match cmd {
        Command::Cohom { complex, coeff, deg } => {
            let x = load_complex(&complex)?;
            let h = cohomology(&x, coeff, deg)?;
            Ok(CommandOutcome::ok(format!("{h}\n")))
        }
        Command::Gstruct { complex } => {
            let x = load_complex(&complex)?;
            let r = GroupContext::new(&x).structure_report()?;
            Ok(CommandOutcome::ok(format!("complex {}\n{r}", x.name())))
        }
        Command::Op { op } => run_op(op),
        Command::Eval(args) => run_eval(args),
        Command::Arf { form } => {
            let (name, f) = parse_form(&read(&form)?).with_context(|| format!("parsing {}", form.display()))?;
            let s = f.gauss_sum()?;
            let mut out = String::new();
            writeln!(out, "form {name}: dim {}, radical dim {}", f.dim(), f.radical_dim())?;
            writeln!(out, "gauss sum = {s}")?;
            writeln!(out, "arf = {}", f.arf()?)?;
            Ok(CommandOutcome::ok(out))
        }
        Command::Verify { what: Verify::Appendix } => {
            let r = builtin::verify_appendix();
            Ok(CommandOutcome::verdict(r.passed(), format!("{r}\n")))
        }
        Command::Verify { what: Verify::Laws { seed, complexes, trials } } => {
            let r = run_laws(&LawOptions { seed, complexes, trials });
            Ok(CommandOutcome::verdict(r.passed(), format!("{r}\n")))
        }
        Command::Subdivide { complex, emit } => {
            let x = load_complex(&complex)?;
            let (mut sd, _) = barycentric_subdivision(&x);
            Arc::make_mut(&mut sd).set_name(format!("{}_sd", x.name()));
            let text = write_complex(&sd);
            match emit {
                None => Ok(CommandOutcome::ok(text)),
                Some(dir) => {
                    let files = write_files(&dir, &[(format!("{}.osc", sd.name()), text)])?;
                    Ok(CommandOutcome::ok(files))
                }
            }
        }
        Command::Builtin { name, emit } => {
            let e = builtin::by_name(&name)?;
            let mut x = (*e.complex).clone();
            if let Some(z) = &e.fundamental {
                x = x.with_cycle(z.clone());
            }
            let mut files = vec![(format!("{name}.osc"), write_complex(&x))];
            for (cname, c) in &e.named_cochains {
                files.push((format!("{cname}.coc"), write_cochain(cname, c)));
            }
            match emit {
                None => Ok(CommandOutcome::ok(files.into_iter().map(|(_, t)| t).collect::<String>())),
                Some(dir) => Ok(CommandOutcome::ok(write_files(&dir, &files)?)),
            }
        }
    }
}

fn write_files(dir: &Path, files: &[(String, String)]) -> anyhow::Result<String> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut out = String::new();
    for (name, text) in files {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(out)
}

fn run_op(op: Op) -> anyhow::Result<CommandOutcome> {
    let bool_line = |b: bool| CommandOutcome::ok(format!("{b}\n"));
    match op {
        Op::Product { g, h, c } => {
            let (g, h) = load_pair(&g, &h, &c)?;
            Ok(CommandOutcome::ok(emit_triple("product", &product(&g, &h)?, &c)))
        }
        Op::Inverse { g, c } => {
            let g = load_triple(&g, load_optional(&c)?.as_ref())?;
            Ok(CommandOutcome::ok(emit_triple("inverse", &inverse(&g), &c)))
        }
        Op::Power { g, n, c } => {
            let g = load_triple(&g, load_optional(&c)?.as_ref())?;
            let e = u32::try_from(n.unsigned_abs()).context("exponent out of range")?;
            let base = if n < 0 { inverse(&g) } else { g };
            Ok(CommandOutcome::ok(emit_triple("power", &power(&base, e), &c)))
        }
        Op::IsIdentity { g, c } => {
            let g = load_triple(&g, load_optional(&c)?.as_ref())?;
            require_d_cocycle(&g)?;
            Ok(bool_line(GroupContext::new(g.complex()).is_identity(&g)?))
        }
        Op::Equal { g, h, c } => {
            let (g, h) = load_pair(&g, &h, &c)?;
            require_d_cocycle(&g)?;
            require_d_cocycle(&h)?;
            Ok(bool_line(GroupContext::new(g.complex()).g_equal(&g, &h)?))
        }
        Op::Order { g, bound, c } => {
            if bound == 0 {
                bail!("--bound must be at least 1");
            }
            let g = load_triple(&g, load_optional(&c)?.as_ref())?;
            require_d_cocycle(&g)?;
            Ok(CommandOutcome::ok(match GroupContext::new(g.complex()).order(&g, bound)? {
                Some(n) => format!("order = {n}\n"),
                None => format!("order > {bound}\n"),
            }))
        }
        Op::Commutator { g, h, c } => {
            let (g, h) = load_pair(&g, &h, &c)?;
            Ok(CommandOutcome::ok(emit_triple("commutator", &commutator(&g, &h)?, &c)))
        }
        Op::Chi { b, g, c } => {
            let g = load_triple(&g, load_optional(&c)?.as_ref())?;
            let b = load_z2(&b, g.complex(), 1)?;
            Ok(CommandOutcome::ok(emit_triple("chi", &chi(&b, &g)?, &c)))
        }
        Op::Kapustin { g, c } => {
            let g = load_triple(&g, load_optional(&c)?.as_ref())?;
            let k = kapustin_form(&g);
            let mut out = emit_triple("kapustin", &k, &c);
            if !big_d(&g).is_zero() {
                out.push_str("# input is not a D-cocycle; Kapustin's equation not checked\n");
                return Ok(CommandOutcome::ok(out));
            }
            let defect = kapustin_defect(&k);
            let n = defect.support().count();
            if n == 0 {
                out.push_str("# dw' + p^2/2 + P(a^2)/4 = 0\n");
            } else {
                writeln!(out, "# dw' + p^2/2 + P(a^2)/4 is nonzero on {n} simplices")?;
            }
            Ok(CommandOutcome::verdict(n == 0, out))
        }
        Op::ExtensionCocycle { a, b, c } => {
            let Some(x) = load_optional(&c)? else {
                bail!("extension-cocycle needs --complex");
            };
            let (a, b) = (load_z2(&a, &x, 1)?, load_z2(&b, &x, 1)?);
            Ok(CommandOutcome::ok(emit_triple("extension", &extension_cocycle(&a, &b)?, &c)))
        }
    }
}

fn run_eval(args: EvalArgs) -> anyhow::Result<CommandOutcome> {
    let g = load_triple(&args.g, load_optional(&args.c)?.as_ref())?;
    let x = g.complex().clone();
    let m = match x.declared_cycle() {
        Some(z) => z.clone(),
        None => fundamental_cycle(&x).context("no usable fundamental cycle")?,
    };
    let t = match &args.t {
        Some(p) => load_z2(p, &x, 1)?,
        None => Cochain::zero(&x, 1),
    };
    let v = evaluate_g1(&g, &m, &t, args.spin, args.arf)?;
    Ok(CommandOutcome::ok(format!("evaluation = {v}\n")))
}

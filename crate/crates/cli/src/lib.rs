//! The `isoclips` command line.
//!
//! [`run`] does all the work and returns the exit status with the text meant
//! for stdout and stderr, so the binary is a thin wrapper and tests can drive
//! the commands in-process.

pub mod grammar;

use std::ffi::OsString;
use std::fs;

use clap::{Parser, Subcommand};
use isoclips_core::clips::{clips_pair, ClipsError};
use isoclips_core::groups::{
    hasse, ClassError, ClassSet, GroupContext, SubgroupClass, SubgroupType,
};
use isoclips_core::irreps::{HarmonicLabel, HarmonicSum};
use isoclips_core::oracle::{verify_clips_standard, OracleError, VerificationReport};
use isoclips_core::symmetry::{isotropy_classes, RepSpec, SymmetryError};
use serde::Serialize;

pub use grammar::{parse_rep, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_ORACLE_FAIL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "isoclips",
    version,
    about = "Isotropy classes of SO(3) and O(3) representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Clips of two conjugacy classes, e.g. `clips D2 "O(2)"`.
    Clips {
        a: String,
        b: String,
        #[arg(long)]
        ctx: Option<GroupContext>,
        #[arg(long)]
        json: bool,
    },
    /// Isotropy classes of a representation, e.g. `isotropy "H4 + 2*H2 + 2*H0"`.
    Isotropy {
        rep: String,
        #[arg(long)]
        ctx: Option<GroupContext>,
        #[arg(long)]
        json: bool,
        /// Also write the Hasse diagram of the classes as Graphviz.
        #[arg(long, value_name = "PATH")]
        dot: Option<String>,
    },
    /// Isotropy classes of one irreducible, e.g. `irrep 3` or `irrep H2*`.
    Irrep {
        label: String,
        /// Use the det-twisted action.
        #[arg(long)]
        star: bool,
        #[arg(long)]
        ctx: Option<GroupContext>,
        #[arg(long)]
        json: bool,
    },
    /// Expand a harmonic expression into a sum of irreducibles.
    Decompose {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram of the isotropy classes of a representation.
    Poset {
        rep: String,
        #[arg(long)]
        ctx: Option<GroupContext>,
        #[arg(long)]
        json: bool,
        /// Write the Graphviz output here instead of stdout.
        #[arg(long, value_name = "PATH")]
        dot: Option<String>,
    },
    /// Check a clips table cell against explicit matrix groups.
    Verify {
        a: String,
        b: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Exit status and rendered output of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn note(mut self, note: Option<String>) -> Self {
        if let Some(n) = note {
            self.stderr.insert_str(0, &format!("note: {n}\n"));
        }
        self
    }
}

#[derive(Serialize)]
struct ClassesJson<'a> {
    context: GroupContext,
    classes: &'a ClassSet,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    context: GroupContext,
    classes: &'a ClassSet,
    edges: &'a [(SubgroupClass, SubgroupClass)],
}

#[derive(Serialize)]
struct TermJson {
    label: String,
    multiplicity: u64,
}

#[derive(Serialize)]
struct DecomposeJson {
    sum: String,
    dim: u64,
    terms: Vec<TermJson>,
}

fn render_classes(ctx: GroupContext, classes: &ClassSet, json: bool) -> String {
    if json {
        let v = ClassesJson {
            context: ctx,
            classes,
        };
        format!("{}\n", serde_json::to_string(&v).expect("serializable"))
    } else {
        format!("{classes}\n")
    }
}

fn parse_class(text: &str) -> Result<SubgroupClass, Output> {
    text.parse::<SubgroupClass>()
        .map_err(|e| Output::fail(EXIT_PARSE, format!("{text:?}: {e}")))
}

/// Context for a set of classes: explicit, or O(3) when some class is not a
/// rotation group.
fn class_context(
    explicit: Option<GroupContext>,
    classes: &[SubgroupClass],
) -> Result<(GroupContext, Option<String>), Output> {
    let forcing = classes
        .iter()
        .find(|c| c.subgroup_type() != SubgroupType::I);
    match (explicit, forcing) {
        (Some(GroupContext::SO3), Some(c)) => Err(Output::fail(
            EXIT_PARSE,
            format!("class {c} is not a subgroup of SO(3); use --ctx o3"),
        )),
        (Some(ctx), _) => Ok((ctx, None)),
        (None, Some(c)) => Ok((
            GroupContext::O3,
            Some(format!(
                "using o3 context because {c} is not a subgroup of SO(3)"
            )),
        )),
        (None, None) => Ok((GroupContext::SO3, None)),
    }
}

fn rep_context(
    explicit: Option<GroupContext>,
    sum: &HarmonicSum,
) -> (GroupContext, Option<String>) {
    match explicit {
        Some(GroupContext::SO3) if sum.has_star() => (
            GroupContext::SO3,
            Some("starred labels act like plain ones on SO(3)".into()),
        ),
        Some(ctx) => (ctx, None),
        None if sum.has_star() => (
            GroupContext::O3,
            Some("using o3 context because the representation has starred labels".into()),
        ),
        None => (GroupContext::SO3, None),
    }
}

fn clips_failure(e: ClipsError) -> Output {
    match e {
        ClipsError::TypeII(..) => Output::fail(EXIT_UNSUPPORTED, e),
        ClipsError::Class(_) => Output::fail(EXIT_PARSE, e),
    }
}

fn symmetry_failure(e: SymmetryError) -> Output {
    match e {
        SymmetryError::Mixed => Output::fail(EXIT_UNSUPPORTED, e),
        SymmetryError::Clips(c) => clips_failure(c),
    }
}

fn parse_sum(text: &str) -> Result<HarmonicSum, Output> {
    parse_rep(text).map_err(|e| Output::fail(EXIT_PARSE, e))
}

fn compute(
    rep: &str,
    ctx: Option<GroupContext>,
) -> Result<(RepSpec, ClassSet, Option<String>), Output> {
    let sum = parse_sum(rep)?;
    let (ctx, note) = rep_context(ctx, &sum);
    let spec = RepSpec::new(ctx, sum);
    let classes = isotropy_classes(&spec).map_err(symmetry_failure)?;
    Ok((spec, classes, note))
}

fn poset_edges(
    ctx: GroupContext,
    classes: &ClassSet,
) -> Result<Vec<(SubgroupClass, SubgroupClass)>, Output> {
    hasse(classes, ctx)
        .map(|h| h.0)
        .map_err(|e: ClassError| Output::fail(EXIT_PARSE, e))
}

fn write_dot(path: &str, ctx: GroupContext, classes: &ClassSet) -> Result<(), Output> {
    let edges = isoclips_core::groups::HasseEdges(poset_edges(ctx, classes)?);
    fs::write(path, edges.to_dot(classes))
        .map_err(|e| Output::fail(EXIT_PARSE, format!("cannot write {path}: {e}")))
}

fn parse_label(text: &str, star: bool) -> Result<HarmonicLabel, Output> {
    let bad = || {
        Output::fail(
            EXIT_PARSE,
            format!("{text:?} is not a degree or a label like H3*"),
        )
    };
    let t = text.trim();
    if let Ok(n) = t.parse::<u32>() {
        return Ok(HarmonicLabel::new(n, star));
    }
    let sum = parse_rep(t).map_err(|_| bad())?;
    let mut terms = sum.terms();
    match (terms.next(), terms.next()) {
        (Some((l, 1)), None) => Ok(HarmonicLabel::new(l.n, l.star || star)),
        _ => Err(bad()),
    }
}

fn render_report(r: &VerificationReport, json: bool) -> String {
    if json {
        return format!("{}\n", r.to_json());
    }
    let mut s = format!(
        "pair: {}, {}\ntable: {}\nobserved: {}\n",
        r.pair.0, r.pair.1, r.table, r.observed
    );
    if !r.extra.is_empty() {
        s.push_str(&format!("extra: {}\n", r.extra));
    }
    if !r.missing.is_empty() {
        s.push_str(&format!("missing: {}\n", r.missing));
    }
    s.push_str(&format!(
        "frames: {} aligned + {} random (seed {})\nverdict: {}\n",
        r.alignments,
        r.samples,
        r.seed,
        if r.passed() { "pass" } else { "fail" }
    ));
    s
}

fn execute(command: Command) -> Result<Output, Output> {
    match command {
        Command::Clips { a, b, ctx, json } => {
            let (a, b) = (parse_class(&a)?, parse_class(&b)?);
            let (ctx, note) = class_context(ctx, &[a, b])?;
            let set = clips_pair(ctx, a, b).map_err(clips_failure)?;
            Ok(Output::ok(render_classes(ctx, &set, json)).note(note))
        }
        Command::Isotropy {
            rep,
            ctx,
            json,
            dot,
        } => {
            let (spec, classes, note) = compute(&rep, ctx)?;
            if let Some(path) = dot {
                write_dot(&path, spec.context, &classes)?;
            }
            Ok(Output::ok(render_classes(spec.context, &classes, json)).note(note))
        }
        Command::Irrep {
            label,
            star,
            ctx,
            json,
        } => {
            let label = parse_label(&label, star)?;
            let (ctx, note) = rep_context(ctx, &HarmonicSum::single(label));
            let spec = RepSpec::new(ctx, HarmonicSum::single(label));
            let classes = isotropy_classes(&spec).map_err(symmetry_failure)?;
            Ok(Output::ok(render_classes(ctx, &classes, json)).note(note))
        }
        Command::Decompose { expr, json } => {
            let sum = parse_sum(&expr)?;
            if json {
                let v = DecomposeJson {
                    sum: sum.to_string(),
                    dim: sum.dim(),
                    terms: sum
                        .terms()
                        .rev()
                        .map(|(l, k)| TermJson {
                            label: l.to_string(),
                            multiplicity: k,
                        })
                        .collect(),
                };
                Ok(Output::ok(format!(
                    "{}\n",
                    serde_json::to_string(&v).expect("serializable")
                )))
            } else {
                Ok(Output::ok(format!("{sum}\n")))
            }
        }
        Command::Poset {
            rep,
            ctx,
            json,
            dot,
        } => {
            let (spec, classes, note) = compute(&rep, ctx)?;
            let edges = poset_edges(spec.context, &classes)?;
            let text = if json {
                let v = PosetJson {
                    context: spec.context,
                    classes: &classes,
                    edges: &edges,
                };
                format!("{}\n", serde_json::to_string(&v).expect("serializable"))
            } else {
                isoclips_core::groups::HasseEdges(edges).to_dot(&classes)
            };
            match dot {
                Some(path) if !json => {
                    fs::write(&path, text).map_err(|e| {
                        Output::fail(EXIT_PARSE, format!("cannot write {path}: {e}"))
                    })?;
                    Ok(Output::ok(String::new()).note(note))
                }
                Some(path) => {
                    write_dot(&path, spec.context, &classes)?;
                    Ok(Output::ok(text).note(note))
                }
                None => Ok(Output::ok(text).note(note)),
            }
        }
        Command::Verify {
            a,
            b,
            samples,
            seed,
            json,
        } => {
            let (a, b) = (parse_class(&a)?, parse_class(&b)?);
            let report = verify_clips_standard(a, b, samples, seed).map_err(|e| match e {
                OracleError::Clips(c) => clips_failure(c),
                other => Output::fail(EXIT_PARSE, other),
            })?;
            let mut out = Output::ok(render_report(&report, json));
            if !report.passed() {
                out.code = EXIT_ORACLE_FAIL;
            }
            Ok(out)
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    execute(cli.command).unwrap_or_else(|e| e)
}

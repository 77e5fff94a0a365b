//! The command-line surface. All logic lives here in the library; the `ohg`
//! binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 ok (or positive verdict), 1 property violation or negative
//! verdict, 2 usage error, 3 unknown due to enumeration limits.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{self, Limits};
use crate::classifier::{self, Verdict};
use crate::dot;
use crate::error::AnalysisError;
use crate::format::{self, HypergraphDocument};
use crate::generate::{self, GeneratorParams};
use crate::hypergraph::{EdgeId, IncidenceRef, OrientedHypergraph, Sign, VertexId};
use crate::matrix::IncidenceMatrix;
use crate::transforms;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser)]
#[command(name = "ohg", about = "oriented hypergraph toolkit", disable_version_flag = true)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Maximum circle length for enumerations.
    #[arg(long, default_value_t = 16)]
    max_circle_len: usize,
    /// Maximum number of circles (or thetas) to enumerate.
    #[arg(long, default_value_t = 10_000)]
    max_circles: usize,
    /// Allow mixed signs on multi-incidences of one pair.
    #[arg(long)]
    no_strict: bool,
    /// Require equal signs on multi-incidences (the default).
    #[arg(long, conflicts_with = "no_strict")]
    strict: bool,
}

impl CommonOpts {
    fn limits(&self) -> Limits {
        Limits {
            max_circle_len: self.max_circle_len,
            max_circles: self.max_circles,
            ..Limits::default()
        }
    }
    fn strict(&self) -> bool {
        !self.no_strict
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a hypergraph file.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print a structural summary: counts, components, cyclomatic number,
    /// balance, balanceability, inventory, flower and artery verdicts.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print the incidence matrix.
    Matrix {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print the incidence dual.
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Switch (negate) the listed vertex and edge ids.
    Switch {
        file: PathBuf,
        /// Ids mapped to -1; everything else keeps its sign.
        ids: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Subdivide an edge; part 2 is the complement of part 1.
    Subdivide {
        file: PathBuf,
        edge: String,
        /// Comma-separated incidences `vertex[:slot]` moved to the first
        /// new edge; the rest go to the second.
        #[arg(long, default_value = "")]
        part1: String,
        #[arg(long, default_value = "+")]
        sign1: String,
        #[arg(long, default_value = "-")]
        sign2: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Contract a 2-edge (edge id) or a degree-2 vertex (vertex id).
    Contract {
        file: PathBuf,
        id: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// List every circle with its sign and purity.
    Circles {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Decide whether the hypergraph is a balanced minimal dependency.
    CheckCircuit {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run the verification suite over files, or the full criterion suite
    /// when no files are given.
    Verify {
        files: Vec<PathBuf>,
        /// Run the exhaustive classification tier (on by default; the flag
        /// makes the request explicit).
        #[arg(long)]
        exhaustive: bool,
        /// Exhaustive tier bound on |V| + |E|.
        #[arg(long, default_value_t = 9)]
        max_size: usize,
        /// Number of random-tier instances.
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Emit seeded random instances.
    Random {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_vertices: usize,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 1)]
        min_edges: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        /// Largest edge size the distribution can draw.
        #[arg(long, default_value_t = 4)]
        max_edge_size: usize,
        #[arg(long, default_value_t = 1)]
        multiplicity_cap: u32,
        /// Probability of a + sign per pair.
        #[arg(long, default_value_t = 0.5)]
        sign_bias: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Export the incidence graph as DOT.
    Dot {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

/// Entry point shared by the binary and the tests. `args` includes the
/// program name.
pub fn run(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help requests are not usage errors.
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

enum CmdError {
    Io(std::io::Error),
    Format(crate::error::FormatError),
    Content(String),
    Limit(AnalysisError),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            CmdError::Limit(_) => EXIT_UNKNOWN,
            _ => EXIT_VIOLATION,
        }
    }
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CmdError::Io(e) => write!(f, "{e}"),
            CmdError::Format(e) => write!(f, "{e}"),
            CmdError::Content(m) => write!(f, "{m}"),
            CmdError::Limit(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}
impl From<crate::error::FormatError> for CmdError {
    fn from(e: crate::error::FormatError) -> Self {
        CmdError::Format(e)
    }
}
impl From<AnalysisError> for CmdError {
    fn from(e: AnalysisError) -> Self {
        if e.is_limit() {
            CmdError::Limit(e)
        } else {
            CmdError::Content(e.to_string())
        }
    }
}

fn load(file: &PathBuf, strict: bool) -> Result<HypergraphDocument, CmdError> {
    let text = std::fs::read_to_string(file)?;
    Ok(format::parse(&text, strict)?)
}

fn emit(
    out: &mut impl Write,
    g: &OrientedHypergraph,
    fmt: OutputFormat,
    notes: Vec<String>,
) -> Result<(), CmdError> {
    match fmt {
        OutputFormat::Text => {
            let mut doc = HypergraphDocument::new(g.clone());
            doc.notes = notes;
            write!(out, "{}", format::serialize(&doc))?;
        }
        OutputFormat::Dot => write!(out, "{}", dot::dot_export(g))?,
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> Result<i32, CmdError> {
    match cli.command {
        Cmd::Validate { file, opts } => {
            let doc = load(&file, opts.strict())?;
            let g = &doc.hypergraph;
            writeln!(
                out,
                "ok: {} vertices, {} edges, {} incidences{}{}",
                g.vertices().len(),
                g.edges().len(),
                g.incidences().len(),
                if g.is_simple() { ", simple" } else { "" },
                if opts.strict() { ", strict" } else { "" },
            )?;
            Ok(EXIT_OK)
        }
        Cmd::Analyze { file, opts } => {
            let g = load(&file, opts.strict())?.hypergraph;
            analyze(out, &g, &opts.limits())
        }
        Cmd::Matrix { file, opts } => {
            let g = load(&file, opts.strict())?.hypergraph;
            write!(out, "{}", IncidenceMatrix::from_hypergraph(&g))?;
            Ok(EXIT_OK)
        }
        Cmd::Dual { file, format, opts } => {
            let g = load(&file, opts.strict())?.hypergraph;
            emit(out, &g.incidence_dual(), format, Vec::new())?;
            Ok(EXIT_OK)
        }
        Cmd::Switch {
            file,
            ids,
            format,
            opts,
        } => {
            let g = load(&file, opts.strict())?.hypergraph;
            let h = transforms::switch(&g, ids.iter().map(String::as_str))
                .map_err(|e| CmdError::Content(e.to_string()))?;
            emit(out, &h, format, Vec::new())?;
            Ok(EXIT_OK)
        }
        Cmd::Subdivide {
            file,
            edge,
            part1,
            sign1,
            sign2,
            format,
            opts,
        } => {
            let g = load(&file, opts.strict())?.hypergraph;
            let e = EdgeId::new(edge.as_str());
            let p1 = parse_part(&g, &e, &part1)?;
            let all: Vec<IncidenceRef> = g.incidences_of_edge(&e).map(|i| i.to_ref()).collect();
            let p2: Vec<IncidenceRef> =
                all.into_iter().filter(|r| !p1.contains(r)).collect();
            let s1 = parse_sign(&sign1)?;
            let s2 = parse_sign(&sign2)?;
            let r = transforms::subdivide_edge(&g, &e, &p1, &p2, s1, s2)
                .map_err(|e| CmdError::Content(e.to_string()))?;
            let notes = vec![format!(
                "subdivision: {} {}",
                match r.compatibility {
                    transforms::Compatibility::Compatible => "compatible",
                    transforms::Compatibility::Incompatible => "incompatible",
                },
                if r.balanced { "balanced" } else { "unbalanced" }
            )];
            emit(out, &r.hypergraph, format, notes)?;
            Ok(EXIT_OK)
        }
        Cmd::Contract {
            file,
            id,
            format,
            opts,
        } => {
            let g = load(&file, opts.strict())?.hypergraph;
            let h = if g.has_edge(&EdgeId::new(id.as_str())) {
                transforms::contract_2edge(&g, &EdgeId::new(id.as_str()))
            } else {
                transforms::contract_2vertex(&g, &VertexId::new(id.as_str()))
            }
            .map_err(|e| CmdError::Content(e.to_string()))?;
            emit(out, &h, format, Vec::new())?;
            Ok(EXIT_OK)
        }
        Cmd::Circles { file, opts } => {
            let g = load(&file, opts.strict())?.hypergraph;
            let circles = analysis::enumerate_circles(&g, &opts.limits())?;
            for c in &circles {
                let class = analysis::classify_circle(&g, c)?;
                writeln!(
                    out,
                    "{} {} length={} {}",
                    class.sign,
                    if class.pure { "pure" } else { "degenerate" },
                    c.circle_length(),
                    c.display()
                )?;
            }
            writeln!(out, "total: {}", circles.len())?;
            Ok(EXIT_OK)
        }
        Cmd::CheckCircuit { file, opts } => {
            let g = load(&file, opts.strict())?.hypergraph;
            let v = classifier::classify_balanced_circuit(&g, &opts.limits());
            writeln!(out, "{}", v.verdict)?;
            writeln!(out, "oracle: {} (nullity {})", v.oracle.status, v.oracle.nullity)?;
            if let Some(gen) = &v.oracle.generator {
                let coords: Vec<String> = gen.iter().map(|x| x.to_string()).collect();
                writeln!(out, "generator: ({})", coords.join(","))?;
            }
            if let Some(w) = &v.witness {
                writeln!(
                    out,
                    "witness: {} pseudo-flowers, {} arteries, {} terminal 1-edges, {} contracted vertices",
                    w.pseudo_flowers.len(),
                    w.arteries.len(),
                    w.terminal_one_edges.len(),
                    w.contracted_vertices.len()
                )?;
            }
            if let Some(why) = &v.failure {
                writeln!(out, "reason: {why}")?;
            }
            Ok(match v.verdict {
                Verdict::Circuit => EXIT_OK,
                Verdict::NotCircuit | Verdict::OutOfScopeUnbalanced => EXIT_VIOLATION,
                Verdict::Unknown => EXIT_UNKNOWN,
            })
        }
        Cmd::Verify {
            files,
            exhaustive: _,
            max_size,
            count,
            seed,
            opts,
        } => {
            if files.is_empty() {
                let cfg = VerifyConfig {
                    limits: opts.limits(),
                    exhaustive_max_size: max_size,
                    random_count: count,
                    seed,
                    ..VerifyConfig::default()
                };
                let outcomes = verify::run_all(&cfg);
                let mut ok = true;
                for o in &outcomes {
                    writeln!(out, "{}", o.line())?;
                    ok &= o.passed;
                }
                writeln!(
                    out,
                    "verify: {}",
                    if ok { "all criteria passed" } else { "FAILURES" }
                )?;
                Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
            } else {
                let limits = opts.limits();
                let mut ok = true;
                for file in &files {
                    let g = load(file, opts.strict())?.hypergraph;
                    let violations = verify::verify_instance(&g, &limits);
                    if violations.is_empty() {
                        writeln!(out, "ok {}", file.display())?;
                    } else {
                        ok = false;
                        for v in violations {
                            writeln!(err, "violation {}: {v}", file.display())?;
                        }
                    }
                }
                Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
            }
        }
        Cmd::Random {
            seed,
            count,
            min_vertices,
            max_vertices,
            min_edges,
            max_edges,
            max_edge_size,
            multiplicity_cap,
            sign_bias,
            format,
        } => {
            for i in 0..count {
                let params = GeneratorParams {
                    vertex_range: (min_vertices, max_vertices),
                    edge_range: (min_edges, max_edges),
                    size_weights: (0..=max_edge_size)
                        .map(|s| if s == 0 { 1 } else { 4 })
                        .collect(),
                    sign_bias,
                    multiplicity_cap,
                    seed: seed.wrapping_add(i as u64),
                };
                let g = generate::random_instance(&params)
                    .map_err(|e| CmdError::Content(e.to_string()))?;
                match format {
                    OutputFormat::Text => {
                        let mut doc = HypergraphDocument::new(g);
                        doc.name = Some(format!("random-{}-{}", seed, i));
                        write!(out, "{}", format::serialize(&doc))?;
                    }
                    OutputFormat::Dot => write!(out, "{}", dot::dot_export(&g))?,
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Dot { file, opts } => {
            let g = load(&file, opts.strict())?.hypergraph;
            write!(out, "{}", dot::dot_export(&g))?;
            Ok(EXIT_OK)
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, CmdError> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(CmdError::Content(format!(
            "bad sign `{other}`, expected + or -"
        ))),
    }
}

fn parse_part(
    g: &OrientedHypergraph,
    e: &EdgeId,
    spec: &str,
) -> Result<Vec<IncidenceRef>, CmdError> {
    let mut out = Vec::new();
    for token in spec.split(',').filter(|t| !t.is_empty()) {
        let (vertex, slot) = match token.split_once(':') {
            Some((v, k)) => (
                v,
                k.parse::<u32>()
                    .map_err(|_| CmdError::Content(format!("bad slot in `{token}`")))?,
            ),
            None => (token, 1),
        };
        let r = IncidenceRef::new(vertex, e.as_str(), slot);
        if !g.has_incidence(&r) {
            return Err(CmdError::Content(format!(
                "no incidence ({vertex},{e},{slot})"
            )));
        }
        out.push(r);
    }
    Ok(out)
}

fn analyze(
    out: &mut impl Write,
    g: &OrientedHypergraph,
    limits: &Limits,
) -> Result<i32, CmdError> {
    writeln!(
        out,
        "elements: {} vertices, {} edges, {} incidences",
        g.vertices().len(),
        g.edges().len(),
        g.incidences().len()
    )?;
    writeln!(out, "simple: {}; strict: {}", g.is_simple(), g.is_strict())?;
    writeln!(out, "components: {}", g.component_count())?;
    writeln!(out, "cyclomatic number: {}", analysis::cyclomatic_number(g))?;

    let mut unknown = false;
    match analysis::is_balanced(g, limits) {
        Ok(report) => {
            if let Some(c) = &report.negative_circle {
                writeln!(out, "balanced: false (negative circle: {})", c.display())?;
            } else {
                writeln!(out, "balanced: true")?;
            }
        }
        Err(e) if e.is_limit() => {
            unknown = true;
            writeln!(out, "balanced: unknown ({e})")?;
        }
        Err(e) => return Err(e.into()),
    }
    let b = analysis::is_balanceable(g);
    match &b.cross_theta {
        None => writeln!(out, "balanceable: true")?,
        Some(t) => writeln!(
            out,
            "balanceable: false (cross-theta between {} and {})",
            t.endpoints.0, t.endpoints.1
        )?,
    }

    let inv = analysis::structural_inventory(g);
    let list = |ids: Vec<String>| {
        if ids.is_empty() {
            "-".to_owned()
        } else {
            ids.join(" ")
        }
    };
    writeln!(
        out,
        "isolated: {}",
        list(inv.isolated_vertices.iter().map(|x| x.to_string()).collect())
    )?;
    writeln!(
        out,
        "leaves: {}; thorns: {}",
        list(inv.leaves.iter().map(|x| x.to_string()).collect()),
        list(inv.thorns.iter().map(|x| x.to_string()).collect())
    )?;
    writeln!(
        out,
        "twigs: {}; briars: {}",
        list(inv.twigs.iter().map(|x| x.to_string()).collect()),
        list(inv.briars.iter().map(|x| x.to_string()).collect())
    )?;
    writeln!(
        out,
        "isthmi: {}; cut vertices: {}; shoals: {}",
        list(inv.isthmi.iter().map(|x| x.to_string()).collect()),
        list(inv.cut_vertices.iter().map(|x| x.to_string()).collect()),
        list(inv.shoals.iter().map(|x| x.to_string()).collect())
    )?;

    match analysis::flower_analysis(g, limits) {
        Ok(fa) => writeln!(
            out,
            "flower analysis: {}",
            match fa.verdict {
                analysis::FlowerVerdict::Flower => "flower".to_owned(),
                analysis::FlowerVerdict::PseudoFlower => format!(
                    "pseudo-flower (thorns: {})",
                    fa.thorns
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
                analysis::FlowerVerdict::Neither => "neither".to_owned(),
            }
        )?,
        Err(e) if e.is_limit() => {
            unknown = true;
            writeln!(out, "flower analysis: unknown ({e})")?;
        }
        Err(e) => return Err(e.into()),
    }
    let artery = analysis::is_artery(g);
    if artery.is_artery {
        writeln!(
            out,
            "artery: yes ({} external {})",
            artery.externals.len(),
            if artery.externals.len() == 1 { "vertex" } else { "vertices" }
        )?;
    } else {
        writeln!(out, "artery: no")?;
    }
    Ok(if unknown { EXIT_UNKNOWN } else { EXIT_OK })
}

//! The `sgeo` command line.
//!
//! Every command prints one JSON document (the sweep prints JSON lines) and
//! returns an exit code: 0 on success, 1 when a construction's hypotheses do
//! not hold, 2 when the time budget ran out, 3 on bad input. Output contains
//! no timings, so identical invocations give identical bytes. Vertex numbers
//! given on the command line are 1-based; JSON certificates are 0-based.

use std::io::{BufRead, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::constructions::{self as cons, BoundValue};
use crate::corpus;
use crate::error::{ConstructionError, SolveError};
use crate::family::generate;
use crate::graph::Graph;
use crate::graph6::{decode, from_graph6, to_graph6};
use crate::product::{cartesian_product, ProductGraph};
use crate::solver::{
    check_strong_geodetic, sg_product_with_layer_pruning, strong_geodetic_number, Decision, Refutation, SgOutcome,
    SolveOptions,
};
use crate::verification::{audit_bounds, check_problem35, demo_subgraph_relations, sweep_conjecture};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_APPLICABLE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sgeo", version, about = "Exact strong geodetic numbers with verifiable certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Wall-clock budget per solver call, in seconds.
    #[arg(long, global = true)]
    budget_secs: Option<f64>,
    /// Maximum number of geodesics enumerated per vertex pair.
    #[arg(long, global = true, default_value_t = crate::geodesic::DEFAULT_GEODESIC_CAP)]
    geodesic_cap: usize,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include full certificates in the output.
    #[arg(long, global = true)]
    emit_certificate: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct GraphSource {
    /// Graph as a graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Graph as a family spec such as `complete-minus-edge:5`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Strong geodetic number of one graph.
    Sg(GraphSource),
    /// Decide whether a vertex set is strong geodetic.
    CheckSet {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated 1-based vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Strong geodetic number of a Cartesian product, with layer pruning.
    ProductSg {
        /// Left factor: family spec or `g6:<graph6>`.
        #[arg(long)]
        g: String,
        /// Right factor: family spec or `g6:<graph6>`.
        #[arg(long)]
        h: String,
    },
    /// Build and verify one of the product constructions.
    Construct {
        kind: ConstructKind,
        /// First factor: family spec or `g6:<graph6>`.
        #[arg(long)]
        g: Option<String>,
        /// Second factor: family spec or `g6:<graph6>`.
        #[arg(long)]
        h: Option<String>,
        /// Order parameter (copies of K_n, or n in K_n - e).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Number of star leaves.
        #[arg(long)]
        k: Option<usize>,
        /// Path order.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Every applicable upper bound for a product next to its exact value.
    BoundAudit {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Compare sg(G) with sg(G □ K_2) over a graph6 stream.
    Sweep {
        /// Largest order to include.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Also solve the prism of every graph; without it only sg(G) is reported.
        #[arg(long)]
        prism: bool,
        /// graph6 file, or `-` for standard input; defaults to the bundled corpus.
        #[arg(long)]
        input: Option<String>,
        /// Print only the equality catalog, one graph6 per line.
        #[arg(long)]
        catalog: bool,
    },
    /// Compare sg(G □ H) with max{sg(G), sg(H)}.
    Problem35 {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Convex and gated subgraphs whose sg is larger or smaller than the host's.
    SubgraphDemo,
    /// ASCII picture of the constructed set of K_m □ K_n.
    RenderGrid {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// General upper bound on G x H (--g, --h).
    Thm21,
    /// G x K2 from a set that is not a 2-packing (--g).
    Prop23,
    /// G x K_n from a set that is not a 2-packing (--g, --n).
    Prop25,
    /// Improved bound on G x H (--g, --h).
    Thm26,
    /// (K_n - e) x K2 (--n).
    Thm31i,
    /// G x K2 from the simplicial vertices (--g).
    Thm31ii,
    /// K_{1,k} x P_l (--k, --l).
    Prop32,
    /// K_m x K_n (--m, --n).
    Thm33,
}

struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, message: message.to_string() }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        input_error(e)
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::NotApplicable(_) | ConstructionError::Verification(_) => EXIT_NOT_APPLICABLE,
            ConstructionError::Budget => EXIT_BUDGET,
            ConstructionError::Graph(_) | ConstructionError::Solve(_) => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

struct Ctx {
    opts: SolveOptions,
    emit: bool,
    stdin: Option<String>,
    out: Vec<u8>,
}

impl Command {
    fn reads_stdin(&self) -> bool {
        match self {
            Command::Sg(src) | Command::CheckSet { source: src, .. } => src.graph6.is_none() && src.family.is_none(),
            Command::Sweep { input, .. } => input.as_deref() == Some("-"),
            _ => false,
        }
    }
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if cli.geodesic_cap == 0 {
        let _ = writeln!(err, "error: --geodesic-cap must be at least 1");
        return EXIT_INPUT;
    }
    let opts = SolveOptions {
        geodesic_cap: cli.geodesic_cap,
        time_budget: cli.budget_secs.filter(|s| *s >= 0.0).map(Duration::from_secs_f64),
        ..Default::default()
    };
    let mut text = None;
    if cli.command.reads_stdin() {
        let mut s = String::new();
        if let Err(e) = stdin.read_to_string(&mut s) {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
        text = Some(s);
    }
    let mut ctx = Ctx { opts, emit: cli.emit_certificate, stdin: text, out: Vec::new() };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &mut ctx)),
            Err(e) => Err(input_error(e)),
        },
        None => dispatch(&cli.command, &mut ctx),
    };
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.out, "{}", json!({ "error": f.message, "exit": f.code }));
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    };
    match out.write_all(&ctx.out) {
        Ok(()) => code,
        Err(_) => EXIT_INPUT,
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<i32, Failure> {
    match cmd {
        Command::Sg(src) => {
            let g = read_graph(src, ctx)?;
            let out = strong_geodetic_number(&g, &ctx.opts)?;
            let code = outcome_code(&out);
            let body = json!({ "command": "sg", "graph6": to_graph6(&g), "n": g.order(), "result": outcome_json(&out, &g, ctx.emit) });
            emit(ctx, &body)?;
            Ok(code)
        }
        Command::CheckSet { source, set } => {
            let g = read_graph(source, ctx)?;
            let zero_based = set
                .iter()
                .map(|&v| v.checked_sub(1).ok_or_else(|| input_error("vertices are numbered from 1")))
                .collect::<Result<Vec<_>, _>>()?;
            let decision = check_strong_geodetic(&g, &zero_based, &ctx.opts)?;
            let (code, body) = match &decision {
                Decision::Strong(c) => (EXIT_OK, json!({ "strong": true, "certificate": c.to_json(&g) })),
                Decision::NotStrong(Refutation::Uncoverable(vs)) => (
                    EXIT_OK,
                    json!({ "strong": false, "reason": "uncoverable", "vertices": vs.iter().map(|v| v + 1).collect::<Vec<_>>() }),
                ),
                Decision::NotStrong(Refutation::Exhausted { nodes }) => {
                    (EXIT_OK, json!({ "strong": false, "reason": "exhausted", "nodes": nodes }))
                }
                Decision::Indeterminate => (EXIT_BUDGET, json!({ "strong": null, "reason": "budget" })),
            };
            emit(ctx, &json!({ "command": "check-set", "set": set, "result": body }))?;
            Ok(code)
        }
        Command::ProductSg { g, h } => {
            let pg = product(g, h)?;
            let out = sg_product_with_layer_pruning(&pg, &ctx.opts)?;
            let body = json!({
                "command": "product-sg",
                "g": g,
                "h": h,
                "n": pg.graph().order(),
                "result": outcome_json(&out, pg.graph(), ctx.emit),
            });
            emit(ctx, &body)?;
            Ok(outcome_code(&out))
        }
        Command::Construct { kind, g, h, n, m, k, l } => construct(ctx, *kind, g, h, *n, *m, *k, *l),
        Command::BoundAudit { g, h } => {
            let report = audit_bounds(&factor(g)?, &factor(h)?, &ctx.opts)?;
            let code = if report.exact.is_some() { EXIT_OK } else { EXIT_BUDGET };
            emit(ctx, &json!({ "command": "bound-audit", "g": g, "h": h, "report": report }))?;
            Ok(code)
        }
        Command::Sweep { max_n, prism, input, catalog } => sweep(ctx, *max_n, *prism, input.as_deref(), *catalog),
        Command::Problem35 { g, h } => {
            let rec = check_problem35(&factor(g)?, &factor(h)?, &ctx.opts)?;
            let code = if rec.holds.is_some() { EXIT_OK } else { EXIT_BUDGET };
            emit(ctx, &json!({ "command": "problem35", "g": g, "h": h, "result": rec }))?;
            Ok(code)
        }
        Command::SubgraphDemo => {
            let demos = demo_subgraph_relations(&ctx.opts)?;
            let code = if demos.iter().all(|d| d.relation.is_some()) { EXIT_OK } else { EXIT_BUDGET };
            emit(ctx, &json!({ "command": "subgraph-demo", "demos": demos }))?;
            Ok(code)
        }
        Command::RenderGrid { m, n } => {
            let (pg, cert) = cons::construct_thm33(*m, *n)?;
            let (m, n) = (pg.left().order(), pg.right().order());
            write!(ctx.out, "{}", cons::render_grid(m, n, cert.set())).map_err(input_error)?;
            Ok(EXIT_OK)
        }
    }
}

fn emit(ctx: &mut Ctx, v: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).map_err(input_error)?;
    writeln!(ctx.out, "{text}").map_err(input_error)
}

fn outcome_code(o: &SgOutcome) -> i32 {
    match o {
        SgOutcome::Exact { .. } => EXIT_OK,
        SgOutcome::Bounded { .. } => EXIT_BUDGET,
    }
}

fn outcome_json(o: &SgOutcome, g: &Graph, emit: bool) -> Value {
    match o {
        SgOutcome::Exact { value, certificate } => {
            let mut v = json!({ "status": "exact", "value": value, "set": one_based(certificate) });
            if emit {
                v["certificate"] = serde_json::to_value(certificate.to_json(g)).expect("plain data");
            }
            v
        }
        SgOutcome::Bounded { lower, upper } => json!({ "status": "bounded", "lower": lower, "upper": upper }),
    }
}

fn one_based(c: &Certificate) -> Vec<usize> {
    c.set().iter().map(|v| v + 1).collect()
}

fn read_graph(src: &GraphSource, ctx: &mut Ctx) -> Result<Graph, Failure> {
    if let Some(s) = &src.graph6 {
        return from_graph6(s).map_err(input_error);
    }
    if let Some(f) = &src.family {
        return generate(f).map_err(input_error);
    }
    let text = ctx.stdin.as_deref().unwrap_or("");
    match text.lines().map(str::trim).find(|l| !l.is_empty()) {
        Some(line) => from_graph6(line).map_err(input_error),
        None => Err(input_error("no graph given: use --graph6, --family or a graph6 line on stdin")),
    }
}

/// A factor given as a family spec or as `g6:<graph6>`.
fn factor(spec: &str) -> Result<Graph, Failure> {
    match spec.strip_prefix("g6:") {
        Some(g6) => from_graph6(g6).map_err(input_error),
        None => generate(spec).map_err(input_error),
    }
}

fn product(g: &str, h: &str) -> Result<ProductGraph, Failure> {
    cartesian_product(&factor(g)?, &factor(h)?).map_err(input_error)
}

fn required<T: Copy>(v: Option<T>, flag: &str, kind: ConstructKind) -> Result<T, Failure> {
    v.ok_or_else(|| input_error(format!("{kind:?} needs --{flag}").to_lowercase()))
}

fn solved(g: &Graph, opts: &SolveOptions) -> Result<Certificate, Failure> {
    match strong_geodetic_number(g, opts)? {
        SgOutcome::Exact { certificate, .. } => Ok(certificate),
        SgOutcome::Bounded { .. } => Err(Failure { code: EXIT_BUDGET, message: "budget exhausted on a factor".into() }),
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    ctx: &mut Ctx,
    kind: ConstructKind,
    g: &Option<String>,
    h: &Option<String>,
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
) -> Result<i32, Failure> {
    let opts = ctx.opts.clone();
    let two = |kind| -> Result<(Graph, Certificate, Graph, Certificate), Failure> {
        let gg = factor(required(g.as_deref(), "g", kind)?)?;
        let hh = factor(required(h.as_deref(), "h", kind)?)?;
        let (gc, hc) = (solved(&gg, &opts)?, solved(&hh, &opts)?);
        Ok((gg, gc, hh, hc))
    };
    let one = |kind| -> Result<(Graph, Certificate), Failure> {
        let gg = factor(required(g.as_deref(), "g", kind)?)?;
        let gc = solved(&gg, &opts)?;
        Ok((gg, gc))
    };
    let (bound, built): (Option<BoundValue>, (ProductGraph, Certificate)) = match kind {
        ConstructKind::Thm21 => {
            let (a, ac, b, bc) = two(kind)?;
            (Some(cons::bound_thm21(&a, &ac, &b, &bc)), cons::construct_thm21(&a, &ac, &b, &bc)?)
        }
        ConstructKind::Thm26 => {
            let (a, ac, b, bc) = two(kind)?;
            (Some(cons::bound_thm26(&a, &ac, &b, &bc)), cons::construct_thm26(&a, &ac, &b, &bc)?)
        }
        ConstructKind::Prop23 => {
            let (a, ac) = one(kind)?;
            (Some(cons::bound_prop23(&a, &ac)), cons::construct_prop23(&a, &ac)?)
        }
        ConstructKind::Prop25 => {
            let (a, ac) = one(kind)?;
            let n = required(n, "n", kind)?;
            (Some(cons::bound_prop25(&a, &ac, n)), cons::construct_prop25(&a, &ac, n)?)
        }
        ConstructKind::Thm31i => (None, cons::construct_thm31i(required(n, "n", kind)?)?),
        ConstructKind::Thm31ii => {
            let gg = factor(required(g.as_deref(), "g", kind)?)?;
            (None, cons::construct_thm31ii(&gg, &opts)?)
        }
        ConstructKind::Prop32 => (None, cons::construct_prop32(required(k, "k", kind)?, required(l, "l", kind)?)?),
        ConstructKind::Thm33 => {
            let (m, n) = (required(m, "m", kind)?, required(n, "n", kind)?);
            (None, cons::construct_thm33(m, n)?)
        }
    };
    let (pg, cert) = built;
    let mut body = json!({
        "command": "construct",
        "construction": format!("{kind:?}").to_lowercase(),
        "n": pg.graph().order(),
        "size": cert.size(),
        "verified": true,
        "set": one_based(&cert),
    });
    if let Some(b) = bound {
        body["bound"] = serde_json::to_value(b).expect("plain data");
    }
    if ctx.emit {
        body["certificate"] = serde_json::to_value(cert.to_json(pg.graph())).expect("plain data");
    }
    emit(ctx, &body)?;
    Ok(EXIT_OK)
}

fn order_of(line: &str) -> Option<usize> {
    decode(line).ok().map(|(n, _)| n)
}

fn sweep(ctx: &mut Ctx, max_n: usize, prism: bool, input: Option<&str>, catalog: bool) -> Result<i32, Failure> {
    let lines: Vec<String> = match input {
        None => corpus::connected_up_to(max_n).into_iter().map(String::from).collect(),
        Some(path) => {
            let text = if path == "-" {
                ctx.stdin.take().unwrap_or_default()
            } else {
                std::fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?
            };
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && order_of(l).is_none_or(|n| n <= max_n))
                .map(String::from)
                .collect()
        }
    };

    if !prism {
        let opts = ctx.opts.clone();
        use rayon::prelude::*;
        let rows: Vec<Value> = lines
            .par_iter()
            .enumerate()
            .map(|(i, l)| match from_graph6(l) {
                Ok(g) => match strong_geodetic_number(&g, &opts) {
                    Ok(o) => json!({ "line": i, "graph6": l, "n": g.order(), "result": outcome_json(&o, &g, false) }),
                    Err(e) => json!({ "line": i, "graph6": l, "error": e.to_string() }),
                },
                Err(e) => json!({ "line": i, "graph6": l, "error": e.to_string() }),
            })
            .collect();
        for r in &rows {
            writeln!(ctx.out, "{r}").map_err(input_error)?;
        }
        return Ok(EXIT_OK);
    }

    let mut report = sweep_conjecture(&lines, &ctx.opts);
    if catalog {
        for g6 in &report.equality_catalog {
            writeln!(ctx.out, "{g6}").map_err(input_error)?;
        }
    } else {
        if !ctx.emit {
            for r in &mut report.records {
                r.certificates = None;
            }
        }
        for r in &report.records {
            writeln!(ctx.out, "{}", serde_json::to_string(r).map_err(input_error)?).map_err(input_error)?;
        }
        let summary = json!({
            "summary": {
                "graphs": report.records.len(),
                "counts": report.counts,
                "violations": report.violations().map(|r| r.graph6.clone()).collect::<Vec<_>>(),
                "equality_catalog": report.equality_catalog,
            }
        });
        writeln!(ctx.out, "{summary}").map_err(input_error)?;
    }
    Ok(if report.counts.indeterminate > 0 { EXIT_BUDGET } else { EXIT_OK })
}

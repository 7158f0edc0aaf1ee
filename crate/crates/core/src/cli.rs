//! The `pancyclic` command line.
//!
//! ```text
//! pancyclic gen g1 --delta 3 -o g1.bg
//! pancyclic check --in g1.bg --prop longest-cycle
//! pancyclic verify jackson2 --n 3 --m 5 --delta 3
//! pancyclic scan '2-connected ∧ ¬spanning-x-cycle' --n 3 --m 8 --delta 4
//! ```
//!
//! Exit status: 0 when the computation finished, 1 when `verify` found an
//! exception the theorem does not allow, 2 on usage, input or guard errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use crate::berge::{self, BergeCycleWitness};
use crate::canon::CanonLimits;
use crate::constructions::ConstructionSpec;
use crate::cycle;
use crate::error::{Error, Result};
use crate::format::{self, Format, GraphFile};
use crate::model::{BipartiteGraph, CycleWitness, Hypergraph, RawCycleWitness};
use crate::structure;
use crate::verify::{self, EnumerationMode, ParameterBox, Predicate, Theorem, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "pancyclic", version, about = "Long cycles in bipartite graphs and Berge cycles in hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a construction or a random graph.
    Gen(GenArgs),
    /// Read a graph file and compute one property.
    Check(CheckArgs),
    /// Check a theorem on every class of a small box.
    Verify(VerifyArgs),
    /// List the classes of a box satisfying a predicate.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    G1,
    G2,
    G3,
    /// Construction 3 hypergraph.
    H3,
    /// Construction 4 hypergraph.
    H4,
    /// Uniform random member of 𝒢(n, m, δ) row by row.
    Random,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum FileFormat {
    #[default]
    Text,
    Json,
}

impl From<FileFormat> for Format {
    fn from(f: FileFormat) -> Self {
        match f {
            FileFormat::Text => Format::Text,
            FileFormat::Json => Format::Json,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: FileFormat,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    n3: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the certificate as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    #[value(name = "2connected")]
    TwoConnected,
    Lll,
    LongestCycle,
    SpanningXCycle,
    SuperPancyclic,
    TightPair,
    Crossing,
    HamiltonianBerge,
    BergeWithEdges,
    Codegree,
    ValidateWitness,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    prop: Property,
    /// 1-based cycle positions for `crossing`.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    /// Comma-separated edge indices for `berge-with-edges`.
    #[arg(long, value_delimiter = ',')]
    edges: Option<Vec<usize>>,
    /// Comma-separated vertex indices for `codegree`.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    /// Witness file: input for `validate-witness`, the cycle for `crossing`.
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Write the witness found, if any, to this file.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoxArgs {
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Accept boxes up to n ≤ 10, m ≤ 64.
    #[arg(long)]
    guard_override: bool,
    #[arg(long)]
    json: bool,
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

impl BoxArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            workers: (self.workers > 0).then_some(self.workers),
            mode: EnumerationMode::Canonical,
            limits: if self.guard_override { CanonLimits::OVERRIDE } else { CanonLimits::default() },
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    theorem: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    delta: usize,
    /// Enumerate labelled graphs instead of isomorphism classes.
    #[arg(long)]
    labeled: bool,
    /// Write every exception as a graph file into this directory.
    #[arg(long)]
    dump_exceptions: Option<PathBuf>,
    #[command(flatten)]
    common: BoxArgs,
}

#[derive(Args, Debug)]
struct ScanArgs {
    predicate: String,
    /// `3` or a range such as `2..4`.
    #[arg(long)]
    n: String,
    #[arg(long)]
    m: String,
    #[arg(long)]
    delta: usize,
    /// Write every hit as a graph file into this directory.
    #[arg(long)]
    dump: Option<PathBuf>,
    #[command(flatten)]
    common: BoxArgs,
}

/// Failure of one command: message and exit status.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(2, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a, out, err),
        Command::Check(a) => check(a, out),
        Command::Verify(a) => verify_cmd(a, out, err),
        Command::Scan(a) => scan_cmd(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure(2, format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure(2, format!("writing output: {e}")))?;
    Ok(0)
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn need(value: Option<usize>, flag: &str, family: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure(2, format!("{family} requires --{flag}")))
}

fn random_graph(n: usize, m: usize, delta: usize, seed: u64) -> Result<BipartiteGraph> {
    if n < 1 || delta > m {
        return Err(Error::InvalidArgument(format!(
            "random graphs need n ≥ 1 and δ ≤ m, got n = {n}, m = {m}, δ = {delta}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists: Vec<Vec<usize>> = (0..n)
        .map(|_| {
            let d = rng.gen_range(delta..=m);
            let mut row = sample(&mut rng, m, d).into_vec();
            row.sort_unstable();
            row
        })
        .collect();
    BipartiteGraph::from_lists(m, &lists)
}

fn gen(a: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let name = format!("{:?}", a.family).to_lowercase();
    let spec = match a.family {
        Family::G1 => Some(ConstructionSpec::G1 { delta: need(a.delta, "delta", &name)? }),
        Family::G2 => Some(ConstructionSpec::G2 {
            a: need(a.a, "a", &name)?,
            b: need(a.b, "b", &name)?,
            delta: need(a.delta, "delta", &name)?,
        }),
        Family::G3 => Some(ConstructionSpec::G3 {
            n1: need(a.n1, "n1", &name)?,
            n2: need(a.n2, "n2", &name)?,
            n3: need(a.n3, "n3", &name)?,
            delta: need(a.delta, "delta", &name)?,
        }),
        Family::H3 => Some(ConstructionSpec::H3 { n: need(a.n, "n", &name)? }),
        Family::H4 => Some(ConstructionSpec::H4 { n: need(a.n, "n", &name)? }),
        Family::Random => None,
    };
    let file: GraphFile = match spec {
        Some(s) => s.generate()?,
        None => random_graph(
            need(a.n, "n", &name)?,
            need(a.m, "m", &name)?,
            need(a.delta, "delta", &name)?,
            a.seed,
        )?
        .into(),
    };
    let text = format::serialize(&file, a.format.into());
    // With no output file the graph goes to stdout and the certificate to stderr.
    let report: &mut dyn Write = match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            out
        }
        None => {
            emit(out, &text)?;
            err
        }
    };
    let Some(spec) = spec else {
        return Ok(0);
    };
    let cert = spec.certify()?;
    let body = if a.json {
        serde_json::to_string_pretty(&cert).expect("certificate serializes") + "\n"
    } else {
        let mut s = format!("{}\n", cert.label);
        for c in &cert.checks {
            s.push_str(&format!(
                "  {:<34} claimed {:<6} observed {:<6} {}\n",
                c.property,
                c.claimed,
                c.observed,
                if c.holds { "ok" } else { "MISMATCH" }
            ));
        }
        s
    };
    emit(report, &body)
}

fn read_graph(path: &Path) -> std::result::Result<GraphFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    format::parse(&text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

/// Witness files written by `check -o` and read by `check --witness`.
#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum WitnessFile {
    Cycle { xs: Vec<usize>, ys: Vec<usize> },
    Berge { base: Vec<usize>, edges: Vec<usize> },
}

fn read_witness(path: &Path) -> std::result::Result<WitnessFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn cycle_json(c: &CycleWitness) -> serde_json::Value {
    json!({"kind": "cycle", "xs": c.xs(), "ys": c.ys()})
}

fn berge_json(c: &BergeCycleWitness) -> serde_json::Value {
    json!({"kind": "berge", "base": c.base(), "edges": c.edges()})
}

fn show_cycle(c: &CycleWitness) -> String {
    let mut s = String::new();
    for (x, y) in c.xs().iter().zip(c.ys()) {
        s.push_str(&format!("y{y} x{x} "));
    }
    s + &format!("y{}", c.ys()[0])
}

fn show_berge(c: &BergeCycleWitness) -> String {
    let mut s = String::new();
    for (v, e) in c.base().iter().zip(c.edges()) {
        s.push_str(&format!("v{v} e{e} "));
    }
    s + &format!("v{}", c.base()[0])
}

fn show_set(v: &[usize]) -> String {
    format!("{{{}}}", v.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
}

/// Result of a check: human lines, JSON value and an optional witness.
struct Answer {
    text: String,
    value: serde_json::Value,
    witness: Option<serde_json::Value>,
}

impl Answer {
    fn new(text: String, value: serde_json::Value) -> Self {
        Self { text, value, witness: None }
    }
}

fn as_bigraph(file: &GraphFile) -> BipartiteGraph {
    match file {
        GraphFile::Bigraph(g) => g.clone(),
        GraphFile::Hypergraph(h) => h.incidence_graph(),
    }
}

fn as_hypergraph(file: &GraphFile) -> Result<Hypergraph> {
    match file {
        GraphFile::Bigraph(g) => Hypergraph::from_incidence_graph(g),
        GraphFile::Hypergraph(h) => Ok(h.clone()),
    }
}

fn cycle_answer(what: &str, c: Option<CycleWitness>) -> Answer {
    match c {
        Some(c) => Answer {
            text: format!("{what}: yes\nwitness: {}\n", show_cycle(&c)),
            value: json!({"property": what, "holds": true, "witness": cycle_json(&c)}),
            witness: Some(cycle_json(&c)),
        },
        None => Answer::new(
            format!("{what}: no\n"),
            json!({"property": what, "holds": false}),
        ),
    }
}

fn berge_answer(what: &str, c: Option<BergeCycleWitness>) -> Answer {
    match c {
        Some(c) => Answer {
            text: format!("{what}: yes\nwitness: {}\n", show_berge(&c)),
            value: json!({"property": what, "holds": true, "witness": berge_json(&c)}),
            witness: Some(berge_json(&c)),
        },
        None => Answer::new(
            format!("{what}: no\n"),
            json!({"property": what, "holds": false}),
        ),
    }
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Outcome {
    let file = read_graph(&a.input)?;
    let answer = match a.prop {
        Property::TwoConnected => {
            let g = as_bigraph(&file);
            let holds = structure::is_2connected(&g)?;
            let cuts: Vec<String> = structure::cut_vertices(&g)
                .iter()
                .map(|v| match v {
                    structure::Vertex::X(x) => format!("x{x}"),
                    structure::Vertex::Y(y) => format!("y{y}"),
                })
                .collect();
            let mut text = format!("2-connected: {}\n", if holds { "yes" } else { "no" });
            if !cuts.is_empty() {
                text.push_str(&format!("cut vertices: {}\n", cuts.join(" ")));
            }
            Answer::new(text, json!({"property": "2connected", "holds": holds, "cut_vertices": cuts}))
        }
        Property::Lll => {
            let g = as_bigraph(&file);
            let sweep = structure::satisfies_lll(&g)?;
            let text = match &sweep {
                cycle::SubsetSweep::Holds => "condition (2): holds\n".to_string(),
                cycle::SubsetSweep::FailsOn(s) => {
                    format!("condition (2): fails for A = {}\n", show_set(s))
                }
            };
            Answer::new(text, json!({"property": "lll", "result": sweep}))
        }
        Property::LongestCycle => {
            let g = as_bigraph(&file);
            match cycle::longest_cycle(&g) {
                Some(c) => Answer {
                    text: format!(
                        "ℓ={} (length {})\nwitness: {}\n",
                        c.len(),
                        2 * c.len(),
                        show_cycle(&c)
                    ),
                    value: json!({"property": "longest-cycle", "l": c.len(), "length": 2 * c.len(), "witness": cycle_json(&c)}),
                    witness: Some(cycle_json(&c)),
                },
                None => Answer::new(
                    "ℓ=0 (no cycle)\n".into(),
                    json!({"property": "longest-cycle", "l": 0, "length": 0}),
                ),
            }
        }
        Property::SpanningXCycle => {
            cycle_answer("spanning-x-cycle", cycle::spanning_x_cycle(&as_bigraph(&file)))
        }
        Property::SuperPancyclic => {
            let sweep = match &file {
                GraphFile::Bigraph(g) => cycle::is_x_super_pancyclic(g)?,
                GraphFile::Hypergraph(h) => berge::is_super_pancyclic(h)?,
            };
            let text = match &sweep {
                cycle::SubsetSweep::Holds => "super-pancyclic: yes\n".to_string(),
                cycle::SubsetSweep::FailsOn(s) => {
                    format!("super-pancyclic: no, no cycle on {}\n", show_set(s))
                }
            };
            Answer::new(text, json!({"property": "super-pancyclic", "result": sweep}))
        }
        Property::TightPair => {
            let g = as_bigraph(&file);
            match structure::find_tight_pair(&g)? {
                Some(p) => Answer {
                    text: format!(
                        "tight pair: x{} with t = {} on ℓ = {}\ncycle: {}\n",
                        p.x,
                        p.t,
                        p.cycle.len(),
                        show_cycle(&p.cycle)
                    ),
                    value: json!({"property": "tight-pair", "x": p.x, "t": p.t, "cycle": cycle_json(&p.cycle)}),
                    witness: Some(cycle_json(&p.cycle)),
                },
                None => Answer::new(
                    "tight pair: none (no cycle, or a longest cycle covers X)\n".into(),
                    json!({"property": "tight-pair", "x": null}),
                ),
            }
        }
        Property::Crossing => {
            let g = as_bigraph(&file);
            let i = a.i.ok_or_else(|| Failure(2, "crossing requires --i".into()))?;
            let j = a.j.ok_or_else(|| Failure(2, "crossing requires --j".into()))?;
            let c = match &a.witness {
                Some(path) => match read_witness(path)? {
                    WitnessFile::Cycle { xs, ys } => RawCycleWitness { xs, ys }.validate(&g)?,
                    WitnessFile::Berge { .. } => {
                        return Err(Failure(2, "crossing needs a bipartite cycle witness".into()))
                    }
                },
                None => cycle::longest_cycle(&g)
                    .ok_or_else(|| Failure(2, "graph has no cycle".into()))?,
            };
            let q = structure::are_crossing(&g, &c, i, j)?;
            let mut text = format!(
                "x_{i}, x_{j} on {}: {}\n",
                show_cycle(&c),
                if q.crossing { "crossing" } else { "not crossing" }
            );
            if let Some((ip, jp)) = q.witness {
                text.push_str(&format!("witness: y_{ip} ∈ N(x_{i}), y_{jp} ∈ N(x_{j})\n"));
            }
            Answer::new(text, json!({"property": "crossing", "query": q}))
        }
        Property::HamiltonianBerge => {
            berge_answer("hamiltonian-berge", berge::hamiltonian_berge_cycle(&as_hypergraph(&file)?)?)
        }
        Property::BergeWithEdges => {
            let edges = a
                .edges
                .as_deref()
                .ok_or_else(|| Failure(2, "berge-with-edges requires --edges".into()))?;
            berge_answer(
                "berge-with-edges",
                berge::find_berge_cycle_with_edges(&as_hypergraph(&file)?, edges)?,
            )
        }
        Property::Codegree => {
            let set = a.set.as_deref().ok_or_else(|| Failure(2, "codegree requires --set".into()))?;
            let d = as_hypergraph(&file)?.codegree(set)?;
            Answer::new(
                format!("codegree of {}: {d}\n", show_set(set)),
                json!({"property": "codegree", "set": set, "codegree": d}),
            )
        }
        Property::ValidateWitness => {
            let path = a
                .witness
                .as_deref()
                .ok_or_else(|| Failure(2, "validate-witness requires --witness".into()))?;
            let text = match read_witness(path)? {
                WitnessFile::Cycle { xs, ys } => {
                    let c = RawCycleWitness { xs, ys }.validate(&as_bigraph(&file))?;
                    format!("valid cycle, ℓ = {}\n", c.len())
                }
                WitnessFile::Berge { base, edges } => {
                    let c = BergeCycleWitness::new(&as_hypergraph(&file)?, base, edges)?;
                    format!("valid Berge cycle, ℓ = {}\n", c.len())
                }
            };
            Answer::new(text, json!({"property": "validate-witness", "valid": true}))
        }
    };
    if let Some(path) = &a.out {
        let Some(w) = &answer.witness else {
            return Err(Failure(2, "no witness to write".into()));
        };
        write_file(path, &(serde_json::to_string_pretty(w).expect("json") + "\n"))?;
    }
    if a.json {
        emit(out, &(serde_json::to_string_pretty(&answer.value).expect("json") + "\n"))
    } else {
        emit(out, &answer.text)
    }
}

fn dump(dir: &Path, name: &str, g: &BipartiteGraph) -> std::result::Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    write_file(&dir.join(format!("{name}.bg")), &format::to_text(&g.clone().into()))
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let theorem: Theorem = a.theorem.parse()?;
    let pbox = ParameterBox::new(theorem, a.n, a.m, a.delta)?;
    let mut options = a.common.options();
    if a.labeled {
        options.mode = EnumerationMode::ExhaustiveLabeled;
    }
    let report = verify::verify_theorem(&pbox, &options)?;
    let json = report.to_json();
    if let Some(path) = &a.common.out {
        write_file(path, &json)?;
    }
    if let Some(dir) = &a.dump_exceptions {
        for e in &report.exceptions {
            let g = format::parse_json(&e.graph.to_string())?;
            if let GraphFile::Bigraph(g) = g {
                dump(dir, &e.canonical, &g)?;
            }
        }
    }
    let shown = if a.common.json { json } else { report.to_table() };
    emit(out, &shown)?;
    let _ = writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64());
    Ok(if report.violations > 0 { 1 } else { 0 })
}

fn parse_range(s: &str, flag: &str) -> std::result::Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure(2, format!("--{flag}: expected a number or a range like 2..4, got `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = if let Some((lo, hi)) = s.split_once("..=") {
        num(lo)?..=num(hi)?
    } else if let Some((lo, hi)) = s.split_once("..") {
        num(lo)?..=num(hi)?
    } else {
        let v = num(s)?;
        v..=v
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn scan_cmd(a: ScanArgs, out: &mut dyn Write) -> Outcome {
    let pred: Predicate = a.predicate.parse()?;
    let ns = parse_range(&a.n, "n")?;
    let ms = parse_range(&a.m, "m")?;
    let hits = verify::scan(&pred, ns, ms, a.delta, &a.common.options())?;
    let json = serde_json::to_string_pretty(&hits).expect("json") + "\n";
    if let Some(path) = &a.common.out {
        write_file(path, &json)?;
    }
    if let Some(dir) = &a.dump {
        for h in &hits {
            dump(dir, &h.canonical, &h.graph())?;
        }
    }
    if a.common.json {
        return emit(out, &json);
    }
    let mut text = format!("{} classes\n", hits.len());
    for h in &hits {
        let rows: Vec<String> = h
            .graph()
            .rows()
            .iter()
            .map(|r| r.iter().map(|y| y.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        text.push_str(&format!("n={} m={} {}  [{}]\n", h.n, h.m, h.canonical, rows.join(" | ")));
    }
    emit(out, &text)
}

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use itline::eup::{check_conditions, find_witness, Variant, WitnessRecord};
use itline::format::{parse_any, parse_graph6, to_edgelist, to_graph6};
use itline::harness::{
    connected_graphs_with_edges, corpus_from_graph6, corpus_of, enumerate_connected_graphs,
    index_record, run_bounds_campaign, run_family_suite, verify_reductions,
    verify_theorem_induction, verify_theorem_main, write_summary_csv, CampaignConfig,
    CampaignReport, CorpusGraph,
};
use itline::indices::{bounds, hamiltonian_index, hamiltonian_path_index, CrossCheckCaps};
use itline::search::{Search, SearchOptions, BUDGET_ENV, DEFAULT_BUDGET};
use itline::{families, iterated_line_graph, Error, MultiGraph, Subgraph};

#[derive(Parser)]
#[command(
    name = "itline",
    version,
    about = "Traceability and hamiltonicity of iterated line graphs"
)]
struct Cli {
    /// Node expansions allowed per search.
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Wall-clock limit per search, in seconds.
    #[arg(long, global = true)]
    timeout: Option<f64>,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    G6,
    Edgelist,
}

#[derive(Args)]
struct Input {
    /// Graph file (edge list or graph6); stdin when absent.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Graph given inline as graph6.
    #[arg(long, conflicts_with = "input")]
    g6: Option<String>,
}

impl Input {
    fn read(&self) -> Result<MultiGraph, Failure> {
        if let Some(s) = &self.g6 {
            return Ok(parse_graph6(s)?);
        }
        let text = match &self.input {
            Some(p) => fs::read_to_string(p)?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        if text.trim_start().starts_with('{') {
            let g: JsonGraph = serde_json::from_str(&text)?;
            return Ok(MultiGraph::new(g.order, g.edges)?);
        }
        Ok(parse_any(&text)?)
    }
}

/// The shape `gen --format json` writes.
#[derive(Deserialize)]
struct JsonGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph: path N, cycle N, star M, complete N,
    /// two-cycle, petersen, fig1, fig2 K, fig3 S T, fig4a, fig4b S.
    Gen { family: String, params: Vec<usize> },
    /// Build L^n(G).
    Linegraph {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        #[arg(long, default_value_t = itline::linegraph::DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Decide EU_k / EUP_k membership, or check a given subgraph.
    CheckEup {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Eup)]
        variant: VariantArg,
        /// Print the witness and its condition report.
        #[arg(long)]
        witness: bool,
        /// JSON file `{edges, isolated_vertices}` to check instead of searching.
        #[arg(long)]
        subgraph: Option<PathBuf>,
    },
    /// Compute h_p (default) or h.
    Index {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "h")]
        hp: bool,
        #[arg(long)]
        h: bool,
        /// Confirm by building the iterated line graphs.
        #[arg(long)]
        cross_check: bool,
    },
    /// Evaluate the four upper bounds on h_p.
    Bounds {
        #[command(flatten)]
        input: Input,
    },
    /// Run a verification campaign; exits with 1 on any mismatch.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Corpus by edge count instead of vertex count.
        #[arg(long)]
        max_edges: Option<usize>,
        /// Allow parallel edges in the edge-count corpus.
        #[arg(long)]
        multigraphs: bool,
        /// Use a graph6 corpus file instead of enumerating.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Level for the main equivalence, or k for the induction step.
        #[arg(long, default_value_t = 2)]
        level: usize,
        /// Write JSON lines here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the summary CSV here.
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Confirm computed indices by building the iterated line graphs.
        #[arg(long)]
        cross_check: bool,
    },
    /// Index records for every graph in a graph6 corpus.
    Corpus {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cross_check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Eu,
    Eup,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Eu => Variant::Eu,
            VariantArg::Eup => Variant::Eup,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Main,
    Induction,
    Bounds,
    Families,
    Reductions,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
    Usage(String),
    /// Verification found mismatches.
    Refuted,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}
impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}
impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Json(e)
    }
}
impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Csv(e)
    }
}

fn print_json(v: &impl Serialize) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn emit_graph(g: &MultiGraph, format: Format) -> Result<(), Failure> {
    match format {
        Format::G6 => println!("{}", to_graph6(g)?),
        Format::Edgelist => print!("{}", to_edgelist(g)),
        Format::Json => print_json(&serde_json::json!({ "order": g.order(), "edges": g.edges() }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(["edge", "u", "v"])?;
            for (i, (u, v)) in g.edges().iter().enumerate() {
                w.write_record([i.to_string(), u.to_string(), v.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn generate(family: &str, p: &[usize]) -> Result<MultiGraph, Failure> {
    let need = |n: usize| -> Result<(), Failure> {
        if p.len() == n {
            Ok(())
        } else {
            Err(Failure::Usage(format!(
                "{family} takes {n} parameter(s), got {}",
                p.len()
            )))
        }
    };
    let g = match family {
        "path" => need(1).and_then(|_| Ok(families::path(p[0])?))?,
        "cycle" => need(1).and_then(|_| Ok(families::cycle(p[0])?))?,
        "star" => need(1).and_then(|_| Ok(families::star(p[0])?))?,
        "complete" => need(1).and_then(|_| Ok(families::complete(p[0])?))?,
        "two-cycle" => need(0).map(|_| families::two_cycle())?,
        "petersen" => need(0).map(|_| families::petersen())?,
        "fig1" => need(0).map(|_| families::fig1())?,
        "fig2" => need(1).and_then(|_| Ok(families::fig2(p[0])?))?,
        "fig3" => need(2).and_then(|_| Ok(families::fig3(p[0], p[1])?))?,
        "fig4a" => need(0).map(|_| families::fig4a())?,
        "fig4b" => need(1).and_then(|_| Ok(families::fig4b(p[0])?))?,
        other => return Err(Failure::Usage(format!("unknown family `{other}`"))),
    };
    Ok(g)
}

fn emit_report(
    report: &CampaignReport,
    format: Format,
    out: Option<&PathBuf>,
    summary: Option<&PathBuf>,
) -> Result<(), Failure> {
    match out {
        Some(p) => report.write_jsonl(fs::File::create(p)?)?,
        None if format == Format::Csv => {
            write_summary_csv(std::slice::from_ref(report), io::stdout())?
        }
        None => report.write_jsonl(io::stdout().lock())?,
    }
    if let Some(p) = summary {
        write_summary_csv(std::slice::from_ref(report), fs::File::create(p)?)?;
    }
    let s = report.summary();
    eprintln!(
        "{}: {} graphs, {} agree, {} mismatch, {} unknown, {} skipped, {} expected counterexamples",
        s.campaign, s.total, s.agree, s.mismatch, s.unknown, s.skipped, s.expected_counterexample
    );
    for r in report
        .records
        .iter()
        .filter(|r| r.outcome == itline::harness::Outcome::Unknown)
    {
        eprintln!(
            "unknown: {} {}",
            r.graph_id,
            serde_json::Value::Object(r.detail.clone())
        );
    }
    if report.is_success() {
        Ok(())
    } else {
        Err(Failure::Refuted)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = SearchOptions {
        budget: cli.budget,
        timeout: cli.timeout.map(Duration::from_secs_f64),
        workers: cli.workers.max(1),
    };
    match cli.command {
        Command::Gen { family, params } => emit_graph(&generate(&family, &params)?, cli.format),
        Command::Linegraph {
            input,
            iterate,
            cap,
        } => {
            let g = input.read()?;
            let lg = if iterate == 0 {
                g
            } else {
                iterated_line_graph(&g, iterate, cap)?
            };
            emit_graph(&lg, cli.format)
        }
        Command::CheckEup {
            input,
            k,
            variant,
            witness,
            subgraph,
        } => {
            let g = input.read()?;
            let variant = Variant::from(variant);
            if let Some(path) = subgraph {
                let h: Subgraph = serde_json::from_str(&fs::read_to_string(path)?)?;
                let report = check_conditions(&g, &h, k, variant)?;
                if cli.format == Format::Json {
                    print_json(&report)?;
                } else {
                    print!("{report}");
                }
                return Ok(());
            }
            match find_witness(&g, k, variant, &opts)? {
                Search::Found(h) if witness => print_json(&WitnessRecord::new(&g, &h, k, variant)?),
                Search::Found(_) => {
                    print_json(&serde_json::json!({ "k": k, "variant": variant, "nonempty": true }))
                }
                Search::Absent => print_json(
                    &serde_json::json!({ "k": k, "variant": variant, "nonempty": false }),
                ),
                Search::Unknown(e) => Err(Failure::Lib(Error::Budget(e))),
            }
        }
        Command::Index {
            input,
            hp: _,
            h,
            cross_check,
        } => {
            let g = input.read()?;
            let mut r = if h {
                hamiltonian_index(&g, &opts)?
            } else {
                hamiltonian_path_index(&g, &opts)?
            };
            if cross_check {
                r = r.with_cross_check(&g, &CrossCheckCaps::default());
            }
            print_json(&r)
        }
        Command::Bounds { input } => {
            let report = bounds(&input.read()?, &opts)?;
            if cli.format != Format::Csv {
                return print_json(&report);
            }
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(["bound", "value"])?;
            for (name, value) in report.values() {
                w.write_record([name, &value.to_string()])?;
            }
            w.flush()?;
            Ok(())
        }
        Command::Verify {
            theorem,
            max_vertices,
            max_edges,
            multigraphs,
            corpus,
            level,
            out,
            summary,
            cross_check,
        } => {
            let cfg = CampaignConfig {
                search: SearchOptions { workers: 1, ..opts },
                workers: opts.workers,
                cross_check: cross_check.then(CrossCheckCaps::default),
                ..CampaignConfig::default()
            };
            let graphs: Vec<CorpusGraph> = match (&corpus, max_edges) {
                (Some(p), _) => corpus_from_graph6(&fs::read_to_string(p)?)?,
                (None, Some(m)) => corpus_of(connected_graphs_with_edges(m, multigraphs)?),
                (None, None) => corpus_of(enumerate_connected_graphs(max_vertices)?),
            };
            let report = match theorem {
                Theorem::Main => verify_theorem_main(&graphs, level, &cfg),
                Theorem::Induction => verify_theorem_induction(&graphs, level, &cfg),
                Theorem::Bounds => run_bounds_campaign(&graphs, &cfg),
                Theorem::Reductions => verify_reductions(&graphs, &cfg),
                Theorem::Families => run_family_suite(&cfg),
            };
            emit_report(&report, cli.format, out.as_ref(), summary.as_ref())
        }
        Command::Corpus { input, cross_check } => {
            let graphs = corpus_from_graph6(&fs::read_to_string(input)?)?;
            let cfg = CampaignConfig {
                search: opts,
                cross_check: cross_check.then(CrossCheckCaps::default),
                ..CampaignConfig::default()
            };
            let mut out = io::stdout().lock();
            for cg in &graphs {
                match index_record(cg, &cfg) {
                    Ok(rec) => serde_json::to_writer(&mut out, &rec)?,
                    Err(e) => serde_json::to_writer(
                        &mut out,
                        &serde_json::json!({ "graph_id": cg.id, "error": e.to_string() }),
                    )?,
                }
                writeln!(out)?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Json(e)) if e.io_error_kind() == Some(io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            match e {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Json(e) => eprintln!("error: {e}"),
                Failure::Csv(e) => eprintln!("error: {e}"),
                Failure::Usage(m) => eprintln!("usage: {m}"),
                Failure::Refuted => unreachable!(),
            }
            ExitCode::from(2)
        }
    }
}

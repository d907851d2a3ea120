//! `specgraph` command line.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use specgraph::domination::{gamma, gamma_formula};
use specgraph::enumerate::GraphFilter;
use specgraph::spectral::{q_min_with, Tolerances};
use specgraph::verify::{self, format_significant, SearchReport, Status, VerifyConfig};
use specgraph::{graph6, FamilySpec, Graph};

const DIGITS: usize = 12;
const MIN_TOLERANCE: f64 = 1e-14;

#[derive(Parser, Debug)]
#[command(
    name = "specgraph",
    version,
    about = "Least signless-Laplacian eigenvalue versus domination number"
)]
struct Cli {
    /// Worker threads; defaults to available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output file, written atomically. Defaults to stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Eigenvalue cluster tolerance.
    #[arg(long, env = "SPECGRAPH_TOLERANCE", global = true)]
    tolerance: Option<f64>,

    /// Zero `runtime_ms` so repeated runs produce identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Exit 3 when the requested domain is empty.
    #[arg(long, global = true)]
    fail_on_empty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named family member and print its statistics.
    Family {
        /// Family text such as `scriptH n=9 alpha=3`; words may be split across arguments.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Least Q eigenvalue of a graph6 graph.
    Qmin { graph6: String },
    /// Domination number of a graph6 graph.
    Gamma { graph6: String },
    /// Exhaustive least-q_min search over filtered connected graphs.
    Search(SearchArgs),
    /// Run a certification suite.
    Verify(VerifyArgs),
    /// Encode an edge list such as `0-1,1-2` as graph6.
    Encode {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        edges: String,
    },
    /// Decode graph6 into order and edge list.
    Decode { graph6: String },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    gamma: Option<usize>,
    #[arg(long)]
    gamma_min: Option<usize>,
    #[arg(long)]
    gamma_max: Option<usize>,
    #[arg(long)]
    nonbipartite: bool,
    #[arg(long)]
    unicyclic: bool,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    max_odd_girth: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// theorem-1.1, theorem-1.2, theorem-4.4-4.7, lemma-2.11, theorem-3.2 or preliminaries.
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    /// May be fractional; non-integral values yield an empty-domain certificate.
    #[arg(long)]
    gamma: Option<f64>,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Failed,
    Empty,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Empty) => ExitCode::from(3),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cfg = config(cli)?;
    if cli.threads == Some(0) {
        return Err(anyhow!("--threads must be positive").into());
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().context("building thread pool")?;
    pool.install(|| dispatch(cli, &cfg))
}

fn config(cli: &Cli) -> Result<VerifyConfig> {
    let mut cfg = VerifyConfig::default();
    if let Some(t) = cli.tolerance {
        if !t.is_finite() || t < MIN_TOLERANCE {
            bail!("tolerance must be a finite number >= {MIN_TOLERANCE:e}, got {t:e}");
        }
        cfg.tolerances = Tolerances {
            cluster: t,
            ..Tolerances::default()
        };
    }
    Ok(cfg)
}

fn dispatch(cli: &Cli, cfg: &VerifyConfig) -> Result<(), Failure> {
    match &cli.command {
        Command::Family { spec } => cmd_family(cli, cfg, &spec.join(" ")),
        Command::Qmin { graph6: text } => {
            let g = decode(text)?;
            let r = q_min_with(&g, &cfg.tolerances).map_err(anyhow::Error::from)?;
            let value = json!({
                "graph6": graph6::encode(&g),
                "q_min": verify::round_significant(r.q_min, DIGITS),
                "multiplicity": r.multiplicity,
                "eigenvector": r.eigenvector.values().iter().map(|&x| verify::round_significant(x, DIGITS)).collect::<Vec<_>>(),
            });
            match cli.format {
                Format::Json => Ok(emit(cli, &pretty(&value))?),
                _ => Ok(emit(cli, &format_significant(r.q_min, DIGITS))?),
            }
        }
        Command::Gamma { graph6: text } => {
            let g = decode(text)?;
            let value = json!({ "graph6": graph6::encode(&g), "gamma": gamma(&g) });
            match cli.format {
                Format::Json => Ok(emit(cli, &pretty(&value))?),
                _ => Ok(emit(cli, &gamma(&g).to_string())?),
            }
        }
        Command::Search(args) => cmd_search(cli, cfg, args),
        Command::Verify(args) => cmd_verify(cli, cfg, args),
        Command::Encode { n, edges } => {
            let g = Graph::from_edges(*n, &parse_edges(edges)?).map_err(anyhow::Error::from)?;
            Ok(emit(cli, &graph6::encode(&g))?)
        }
        Command::Decode { graph6: text } => {
            let g = decode(text)?;
            let edges = edge_list(&g);
            match cli.format {
                Format::Json => Ok(emit(
                    cli,
                    &pretty(&json!({ "n": g.order(), "edges": edges })),
                )?),
                _ => {
                    let list = edges
                        .iter()
                        .map(|(u, v)| format!("{u}-{v}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    Ok(emit(cli, &format!("{} {}", g.order(), list))?)
                }
            }
        }
    }
}

fn cmd_family(cli: &Cli, cfg: &VerifyConfig, text: &str) -> Result<(), Failure> {
    let spec: FamilySpec = text
        .parse()
        .map_err(|e| anyhow!("cannot parse family `{text}`: {e}"))?;
    let fam = spec
        .build()
        .map_err(|e| anyhow!("family `{text}` is not realizable: {e}"))?;
    let g = &fam.graph;
    let r = q_min_with(g, &cfg.tolerances).map_err(anyhow::Error::from)?;
    let computed = gamma(g);
    let expected = gamma_formula(&spec).ok();
    let value = json!({
        "family": spec.to_string(),
        "graph6": graph6::encode(g),
        "n": g.order(),
        "m": g.size(),
        "girth": g.girth(),
        "odd_girth": g.odd_girth(),
        "gamma": computed,
        "gamma_formula": expected,
        "q_min": verify::round_significant(r.q_min, DIGITS),
    });
    match cli.format {
        Format::Json => emit(cli, &pretty(&value))?,
        Format::Graph6 => emit(cli, &graph6::encode(g))?,
        Format::Csv => {
            let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
            let body = format!(
                "family,graph6,n,m,girth,odd_girth,gamma,gamma_formula,q_min\n\"{}\",{},{},{},{},{},{},{},{}",
                spec,
                graph6::encode(g),
                g.order(),
                g.size(),
                opt(g.girth()),
                opt(g.odd_girth()),
                computed,
                opt(expected),
                format_significant(r.q_min, DIGITS)
            );
            emit(cli, &body)?
        }
    }
    if let Some(e) = expected {
        if e != computed {
            eprintln!("domination mismatch: computed {computed}, closed form {e}");
            return Err(Failure::Failed);
        }
    }
    Ok(())
}

fn cmd_search(cli: &Cli, cfg: &VerifyConfig, a: &SearchArgs) -> Result<(), Failure> {
    let range = match (a.gamma_min, a.gamma_max) {
        (None, None) => None,
        (lo, hi) => Some((lo.unwrap_or(0), hi.unwrap_or(usize::MAX))),
    };
    let filter = GraphFilter {
        n: a.n,
        nonbipartite: a.nonbipartite,
        unicyclic: a.unicyclic,
        gamma: a.gamma,
        gamma_range: range,
        girth: a.girth,
        max_odd_girth: a.max_odd_girth,
    };
    let report = verify::search_report(&filter, cfg).map_err(anyhow::Error::from)?;
    if report.status == Status::EmptyDomain {
        for note in &report.notes {
            eprintln!("warning: {note}");
        }
    }
    write_report(cli, &report)?;
    if report.status == Status::EmptyDomain && cli.fail_on_empty {
        return Err(Failure::Empty);
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, cfg: &VerifyConfig, a: &VerifyArgs) -> Result<(), Failure> {
    let need_n = || a.n.ok_or_else(|| anyhow!("suite `{}` needs --n", a.suite));
    let report = match a.suite.as_str() {
        "theorem-1.1" => verify::suite_theorem_1_1_with(need_n()?, cfg),
        "theorem-1.2" => {
            let g = a.gamma.ok_or_else(|| anyhow!("suite `theorem-1.2` needs --gamma"))?;
            verify::suite_theorem_1_2_with(need_n()?, g, cfg)
        }
        "theorem-4.4-4.7" | "theorem-4.4" | "theorem-4.7" => verify::suite_theorem_4_4_and_4_7_with(need_n()?, cfg),
        "lemma-2.11" => verify::suite_lemma_2_11_with(need_n()?, cfg),
        "theorem-3.2" => verify::suite_theorem_3_2_with(cfg),
        "preliminaries" => verify::suite_preliminaries_with(cfg),
        other => {
            return Err(anyhow!(
                "unknown suite `{other}`; expected theorem-1.1, theorem-1.2, theorem-4.4-4.7, lemma-2.11, theorem-3.2 or preliminaries"
            )
            .into())
        }
    }
    .map_err(anyhow::Error::from)?;
    eprintln!("{}: {}", report.suite, report.status.as_str());
    write_report(cli, &report)?;
    match report.status {
        Status::Fail => Err(Failure::Failed),
        Status::EmptyDomain if cli.fail_on_empty => Err(Failure::Empty),
        _ => Ok(()),
    }
}

fn write_report(cli: &Cli, report: &SearchReport) -> Result<()> {
    let mut report = report.rounded(DIGITS);
    if cli.no_timing {
        report = report.without_timing();
    }
    let body = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut rows = vec![SearchReport::CSV_HEADER.to_string(), report.csv_row()];
            rows.extend(report.parts.iter().map(SearchReport::csv_row));
            rows.join("\n")
        }
        Format::Graph6 => report
            .argmin
            .iter()
            .map(|a| a.canonical.clone())
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(cli, &body)
}

fn emit(cli: &Cli, body: &str) -> Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temp file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn decode(text: &str) -> Result<Graph> {
    graph6::decode(text.trim()).map_err(|e| anyhow!("invalid graph6 `{text}`: {e}"))
}

fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (u, v) = pair
                .split_once('-')
                .ok_or_else(|| anyhow!("edge `{pair}` is not of the form u-v"))?;
            Ok((u.trim().parse()?, v.trim().parse()?))
        })
        .collect()
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
        .collect()
}

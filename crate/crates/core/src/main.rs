use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use gallai_edmonds::io::{self as gio, SourceFormat};
use gallai_edmonds::oracle::{self, MAX_ENUMERATION_EDGES};
use gallai_edmonds::{
    gallai_edmonds, has_perfect_matching, maximum_matching, Error, Graph, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "gallai-edmonds",
    version,
    about = "Maximum matchings and the Gallai-Edmonds decomposition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a graph file into D, A, C.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the structure theorem on one graph against exhaustive search.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Edge limit for matching enumeration.
        #[arg(long, default_value_t = MAX_ENUMERATION_EDGES)]
        max_edges: usize,
    },
    /// Exhaustive sweep over all labeled graphs with up to --max-n vertices.
    Oracle {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a random graph.
    Random {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Stream every labeled graph on --n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file (edgelist or DIMACS).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Overrides format detection.
    #[arg(long)]
    input_format: Option<SourceFormat>,
}

#[derive(Args)]
struct GeneratorArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability as `num/den`, `0` or `1`.
    #[arg(long, value_parser = parse_probability)]
    p: Option<(u64, u64)>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
    Text,
}

fn parse_probability(s: &str) -> Result<(u64, u64), String> {
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num = num
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in `{s}`"))?;
    let den = den
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in `{s}`"))?;
    if den == 0 || num > den {
        return Err(format!("probability `{s}` not in [0, 1]"));
    }
    Ok((num, den))
}

enum Failure {
    Input(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Returns whether every check passed.
fn run(command: Command) -> CliResult<bool> {
    match command {
        Command::Decompose {
            input,
            format,
            output,
        } => {
            let g =
                read_input(&input)?.ok_or_else(|| Failure::Input("--input is required".into()))?;
            let d = gallai_edmonds(&g);
            let text = match format {
                OutputFormat::Json => gio::emit_decomposition_json(&d) + "\n",
                OutputFormat::Dot => gio::emit_dot(&g, &d),
                OutputFormat::Text => gio::emit_decomposition_text(&d),
            };
            write_output(output.as_ref(), &text)?;
            Ok(true)
        }
        Command::Verify {
            input,
            generator,
            format,
            output,
            max_edges,
        } => {
            Error::guard("--max-edges", max_edges, MAX_ENUMERATION_EDGES)?;
            let g = match read_input(&input)? {
                Some(g) => g,
                None => generate(&generator)?,
            };
            Error::guard("edge count", g.edge_count(), max_edges)?;
            let report = oracle::verify_structure_theorem(&g)?;
            let text = match format {
                OutputFormat::Json => report_json(&report) + "\n",
                _ => format!("{report}\n"),
            };
            write_output(output.as_ref(), &text)?;
            Ok(report.passed())
        }
        Command::Oracle {
            max_n,
            format,
            output,
        } => {
            Error::guard("--max-n", max_n, gio::MAX_LABELED_VERTICES)?;
            let sweep = oracle_sweep(max_n)?;
            let text = match format {
                OutputFormat::Json => serde_json::to_string(&sweep).expect("plain data") + "\n",
                _ => sweep.to_text(),
            };
            write_output(output.as_ref(), &text)?;
            Ok(sweep.failures == 0)
        }
        Command::Random {
            generator,
            format,
            output,
        } => {
            let g = generate(&generator)?;
            write_output(output.as_ref(), &render_graph(&g, format))?;
            Ok(true)
        }
        Command::Enumerate { n, format, output } => {
            let mut text = String::new();
            for (i, g) in gio::enumerate_labeled_graphs(n)?.enumerate() {
                if i > 0 && format != OutputFormat::Json {
                    text.push('\n');
                }
                text.push_str(&render_graph(&g, format));
            }
            write_output(output.as_ref(), &text)?;
            Ok(true)
        }
    }
}

fn read_input(args: &InputArgs) -> CliResult<Option<Graph>> {
    let Some(path) = &args.input else {
        return Ok(None);
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let format = args
        .input_format
        .unwrap_or_else(|| gio::detect_format(&text));
    let doc = gio::parse(&text, format)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Some(doc.graph))
}

fn generate(args: &GeneratorArgs) -> CliResult<Graph> {
    let (Some(n), Some((num, den))) = (args.n, args.p) else {
        return Err(Failure::Input("need --input, or both --n and --p".into()));
    };
    Ok(gio::random_graph(n, num, den, args.seed)?)
}

fn render_graph(g: &Graph, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => gio::emit_edgelist(g),
        OutputFormat::Json => gio::emit_graph_json(g) + "\n",
        OutputFormat::Dot => {
            let mut out = String::from("graph G {\n");
            for v in 0..g.n() {
                out.push_str(&format!("  {v};\n"));
            }
            for &(u, v) in g.edges() {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
            out + "}\n"
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    let result = match path {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    result.map_err(|e| Failure::Input(format!("cannot write output: {e}")))
}

fn report_json(report: &VerificationReport) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        passed: bool,
        #[serde(flatten)]
        report: &'a VerificationReport,
    }
    serde_json::to_string(&Out {
        passed: report.passed(),
        report,
    })
    .expect("plain data")
}

#[derive(Serialize)]
struct LevelSummary {
    n: usize,
    graphs: u64,
    nu_failures: u64,
    tutte_failures: u64,
    theorem_failures: u64,
}

#[derive(Serialize)]
struct SweepSummary {
    levels: Vec<LevelSummary>,
    failures: u64,
    first_failure: Option<FailureRecord>,
}

#[derive(Clone, Serialize)]
struct FailureRecord {
    n: usize,
    mask: u64,
    graph: Graph,
    report: VerificationReport,
}

impl SweepSummary {
    fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.levels {
            out.push_str(&format!(
                "n={} graphs={} nu_failures={} tutte_failures={} theorem_failures={}\n",
                l.n, l.graphs, l.nu_failures, l.tutte_failures, l.theorem_failures
            ));
        }
        let graphs: u64 = self.levels.iter().map(|l| l.graphs).sum();
        out.push_str(&format!(
            "total graphs={graphs} failures={}\n",
            self.failures
        ));
        if let Some(f) = &self.first_failure {
            out.push_str(&format!(
                "first failure: n={} mask={}\n{}\n",
                f.n, f.mask, f.report
            ));
        }
        out
    }
}

/// Per graph: blossom vs enumerated ν, Tutte criterion vs perfect matching,
/// and the full structure theorem. Graphs are checked in parallel; results
/// are collected in mask order.
fn oracle_sweep(max_n: usize) -> CliResult<SweepSummary> {
    let mut levels = Vec::new();
    let mut failures = 0;
    let mut first_failure = None;
    for n in 0..=max_n {
        let outcomes: Vec<(bool, bool, Option<VerificationReport>)> = (0
            ..gio::labeled_graph_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = gio::labeled_graph_from_mask(n, mask);
                let nu_ok = oracle::brute_nu(&g)? == maximum_matching(&g).size();
                let tutte_ok = oracle::tutte_check(&g)? == has_perfect_matching(&g);
                let report = oracle::verify_structure_theorem(&g)?;
                Ok((nu_ok, tutte_ok, (!report.passed()).then_some(report)))
            })
            .collect::<Result<_, Error>>()?;
        let mut level = LevelSummary {
            n,
            graphs: outcomes.len() as u64,
            nu_failures: 0,
            tutte_failures: 0,
            theorem_failures: 0,
        };
        for (mask, (nu_ok, tutte_ok, report)) in outcomes.into_iter().enumerate() {
            level.nu_failures += u64::from(!nu_ok);
            level.tutte_failures += u64::from(!tutte_ok);
            level.theorem_failures += u64::from(report.is_some());
            if (!nu_ok || !tutte_ok || report.is_some()) && first_failure.is_none() {
                let graph = gio::labeled_graph_from_mask(n, mask as u64);
                let report = report
                    .unwrap_or_else(|| oracle::verify_structure_theorem(&graph).expect("guarded"));
                first_failure = Some(FailureRecord {
                    n,
                    mask: mask as u64,
                    graph,
                    report,
                });
            }
        }
        failures += level.nu_failures + level.tutte_failures + level.theorem_failures;
        levels.push(level);
    }
    Ok(SweepSummary {
        levels,
        failures,
        first_failure,
    })
}

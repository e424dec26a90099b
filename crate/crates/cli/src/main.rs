mod io;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fworm::constructions::{
    c1, c2, gadget, gap_graph, witness_c1, witness_gap_high, witness_gap_low,
};
use fworm::graph::{
    complete, cycle, empty, encode_graph6, join, path, strong_product, to_dot, Graph,
};
use fworm::worm::{chromatic_number, feasible_set, proper_coloring_exactly, search_exactly_k};
use fworm::{enumerate_copies, verify, Budget, Coloring, KStatus};
use serde_json::{json, Value};

use io::{load_graph, parse_graph_arg, parse_pattern, read_coloring, write_file, CliError};

/// Exit statuses shared by every subcommand.
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "fworm", version, about = "Exact F-WORM coloring toolkit")]
struct Cli {
    /// Worker threads for the solver (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// graph6 file; reads standard input when omitted or `-`.
    graph: Option<PathBuf>,
    /// Pattern graph by name, e.g. k4, c4, diamond, petersen.
    #[arg(long, short)]
    pattern: String,
}

#[derive(Args)]
struct BudgetArgs {
    /// Wall-clock limit in seconds per color count (default 600).
    #[arg(long, default_value_t = 600.0)]
    time_limit: f64,
    /// Search-node limit per color count (default unlimited).
    #[arg(long)]
    node_limit: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, CliError> {
        if !(self.time_limit.is_finite() && self.time_limit > 0.0) {
            return Err(CliError::Usage(
                "--time-limit must be a positive number of seconds".into(),
            ));
        }
        Ok(Budget {
            node_limit: self.node_limit,
            time_limit: Some(Duration::from_secs_f64(self.time_limit)),
        })
    }

    fn to_json(&self) -> Value {
        json!({ "time_limit_s": self.time_limit, "node_limit": self.node_limit })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Gadget,
    C1,
    C2,
    Gap,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Gadget,
    C1,
    GapLow,
    GapHigh,
}

#[derive(Args)]
struct ConstructionParams {
    /// Base graph: a catalog name or a graph6 file.
    #[arg(long)]
    g: Option<String>,
    /// Pattern graph by name.
    #[arg(long, short)]
    pattern: Option<String>,
    /// Pattern order for the gap construction.
    #[arg(long)]
    n: Option<usize>,
    /// Chain length for c1 (defaults to the supply bound).
    #[arg(long)]
    n0: Option<usize>,
}

impl ConstructionParams {
    fn base(&self) -> Result<Graph, CliError> {
        parse_graph_arg(
            self.g
                .as_deref()
                .ok_or_else(|| CliError::Usage("--g is required".into()))?,
        )
    }

    fn pattern(&self) -> Result<Graph, CliError> {
        parse_pattern(
            self.pattern
                .as_deref()
                .ok_or_else(|| CliError::Usage("--pattern is required".into()))?,
        )
    }

    fn order(&self) -> Result<usize, CliError> {
        self.n
            .ok_or_else(|| CliError::Usage("--n is required".into()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph in graph6: `complete 9`, `cycle 5`, `path 4`, `empty 3`,
    /// `join A B`, `product A B`, or a catalog name such as `groetzsch`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
    },
    /// Build a construction; prints its graph6 and optionally writes the
    /// layout as JSON and the graph as DOT.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        params: ConstructionParams,
        #[arg(long)]
        layout: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the vertex sets of all pattern copies as JSON.
    Copies {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check a coloring (JSON `{"colors": [...]}`); exit 1 on a violation.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Decide whether a WORM coloring with exactly `k` colors exists.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Full feasible set, extremes and gaps as a JSON report.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Leave timing out of the report so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Emit the witness coloring that goes with a construction.
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        #[command(flatten)]
        params: ConstructionParams,
        /// Proper coloring of the base graph (JSON); defaults to an optimal one.
        #[arg(long)]
        proper: Option<PathBuf>,
        /// Build the default proper coloring with exactly this many colors.
        #[arg(long, conflicts_with = "proper")]
        colors: Option<usize>,
        /// Outer color for the gadget witness.
        #[arg(long, default_value_t = 0)]
        outer: usize,
        /// Also write the construction graph in graph6.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("fworm: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fworm: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    );
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Gen { words } => {
            println!("{}", encode_graph6(&generate(&words)?));
            Ok(0)
        }
        Command::Construct {
            kind,
            params,
            layout,
            dot,
        } => {
            let (graph, description) = match kind {
                ConstructKind::Gadget => {
                    let l = gadget(&params.pattern()?)?;
                    (l.graph.clone(), l.to_json())
                }
                ConstructKind::C1 => {
                    let l = c1(&params.base()?, &params.pattern()?, params.n0)?;
                    (l.graph.clone(), l.to_json())
                }
                ConstructKind::C2 => {
                    let l = c2(&params.base()?, &params.pattern()?)?;
                    (l.graph.clone(), l.to_json())
                }
                ConstructKind::Gap => {
                    let l = gap_graph(&params.base()?, params.order()?)?;
                    (l.graph.clone(), l.to_json())
                }
            };
            if let Some(p) = layout {
                write_file(&p, &serde_json::to_string_pretty(&description)?)?;
            }
            if let Some(p) = dot {
                write_file(&p, &to_dot(&graph))?;
            }
            println!("{}", encode_graph6(&graph));
            Ok(0)
        }
        Command::Copies { input } => {
            let host = load_graph(input.graph.as_deref())?;
            let fam = enumerate_copies(&host, &parse_pattern(&input.pattern)?)?;
            print_json(&serde_json::to_value(&fam)?);
            Ok(0)
        }
        Command::Verify { input, coloring } => {
            let host = load_graph(input.graph.as_deref())?;
            let fam = enumerate_copies(&host, &parse_pattern(&input.pattern)?)?;
            let verdict = verify(&host, &fam, &read_coloring(&coloring)?)?;
            print_json(&serde_json::to_value(&verdict)?);
            Ok(if verdict.is_ok() { 0 } else { EXIT_VIOLATION })
        }
        Command::Solve { input, k, budget } => {
            let host = load_graph(input.graph.as_deref())?;
            let fam = enumerate_copies(&host, &parse_pattern(&input.pattern)?)?;
            let status = search_exactly_k(&host, &fam, k, budget.budget()?)?;
            let mut out = json!({ "k": k, "status": status.name() });
            if let Some(w) = status.witness() {
                out["witness"] = serde_json::to_value(w)?;
            }
            print_json(&out);
            Ok(match status {
                KStatus::Feasible(_) => 0,
                KStatus::Infeasible => EXIT_VIOLATION,
                KStatus::Unknown => EXIT_UNKNOWN,
            })
        }
        Command::Spectrum {
            input,
            budget,
            no_timing,
        } => {
            let host = load_graph(input.graph.as_deref())?;
            let pattern = parse_pattern(&input.pattern)?;
            let start = Instant::now();
            let fam = enumerate_copies(&host, &pattern)?;
            let fs = feasible_set(&host, &fam, budget.budget()?)?;
            let mut report = fs.to_json();
            report["input"] = json!({
                "graph6": encode_graph6(&host),
                "order": host.order(),
                "size": host.size(),
            });
            report["pattern"] = json!(input.pattern.trim().to_ascii_lowercase());
            report["copies"] = json!(fam.len());
            report["budget"] = budget.to_json();
            report["complete"] = json!(!fs.has_unknown());
            if !no_timing {
                report["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            print_json(&report);
            Ok(if fs.has_unknown() { EXIT_UNKNOWN } else { 0 })
        }
        Command::Witness {
            kind,
            params,
            proper,
            colors,
            outer,
            graph_out,
        } => {
            let base_proper = |base: &Graph| -> Result<Coloring, CliError> {
                if let Some(p) = &proper {
                    return read_coloring(p);
                }
                let k = match colors {
                    Some(k) => k,
                    None => chromatic_number(base, Budget::unlimited())
                        .value()
                        .expect("unbounded search always finishes"),
                };
                match proper_coloring_exactly(base, k, Budget::unlimited()) {
                    KStatus::Feasible(c) => Ok(c),
                    _ => Err(CliError::Usage(format!(
                        "base graph has no proper coloring with exactly {k} colors"
                    ))),
                }
            };
            let (graph, coloring) = match kind {
                WitnessKind::Gadget => {
                    let l = gadget(&params.pattern()?)?;
                    if outer + 1 >= l.pattern_order {
                        return Err(CliError::Usage(format!(
                            "--outer must be below {}",
                            l.pattern_order - 1
                        )));
                    }
                    let w = l.witness(outer);
                    (l.graph, w)
                }
                WitnessKind::C1 => {
                    let base = params.base()?;
                    let l = c1(&base, &params.pattern()?, params.n0)?;
                    let w = witness_c1(&l, &base_proper(&base)?)?;
                    (l.graph, w)
                }
                WitnessKind::GapLow => {
                    let l = gap_graph(&params.base()?, params.order()?)?;
                    let w = witness_gap_low(&l);
                    (l.graph, w)
                }
                WitnessKind::GapHigh => {
                    let base = params.base()?;
                    let l = gap_graph(&base, params.order()?)?;
                    let w = witness_gap_high(&l, &base_proper(&base)?)?;
                    (l.graph, w)
                }
            };
            if let Some(p) = graph_out {
                write_file(&p, &format!("{}\n", encode_graph6(&graph)))?;
            }
            print_json(&serde_json::to_value(&coloring)?);
            Ok(0)
        }
    }
}

fn generate(words: &[String]) -> Result<Graph, CliError> {
    let size = |s: &str| -> Result<usize, CliError> {
        s.parse()
            .map_err(|_| CliError::Usage(format!("expected a vertex count, got `{s}`")))
    };
    let args: Vec<&str> = words.iter().map(String::as_str).collect();
    match args.as_slice() {
        ["complete", s] => Ok(complete(size(s)?)),
        ["cycle", s] => {
            let s = size(s)?;
            if s < 3 {
                return Err(CliError::Usage("a cycle needs at least 3 vertices".into()));
            }
            Ok(cycle(s))
        }
        ["path", s] => Ok(path(size(s)?)),
        ["empty", s] => Ok(empty(size(s)?)),
        ["join", a, b] => Ok(join(&parse_graph_arg(a)?, &parse_graph_arg(b)?)),
        ["product", a, b] => Ok(strong_product(&parse_graph_arg(a)?, &parse_graph_arg(b)?)),
        [name] => parse_graph_arg(name),
        _ => Err(CliError::Usage(format!(
            "cannot generate `{}`",
            words.join(" ")
        ))),
    }
}

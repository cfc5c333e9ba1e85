mod reproduce;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use egr_core::bounds::{self, BoundQuery, CycleForm};
use egr_core::constructions::{self, ConstructionClaim, Params, VerifyOptions};
use egr_core::graph::{self, CensusOptions, ExportFormat, Graph, DEFAULT_ORACLE_CAP};

/// Build, certify and bound edge-girth-regular graphs.
#[derive(Parser, Debug)]
#[command(name = "egr", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction and write the graph and its claim
    Build {
        /// One of: baer, flag, triangle, hermitian, pg-incidence, amalgam1, cage65, amalgam2, match-even, match-odd
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "graph6")]
        format: String,
        /// Graph output; the claim goes next to it as <out>.claim.json
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Explicit path for the claim JSON
        #[arg(long)]
        claim: Option<PathBuf>,
    },
    /// Check a construction, or a graph file against a claim file
    Verify {
        #[arg(long, conflicts_with_all = ["graph", "claim"])]
        construction: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, requires = "claim")]
        graph: Option<PathBuf>,
        #[arg(long, requires = "graph")]
        claim: Option<PathBuf>,
        /// Input format; guessed from the extension when omitted
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Evaluate every lower bound for one query
    Bounds {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        g: u32,
        #[arg(long, conflicts_with = "signature")]
        lambda: Option<u64>,
        /// Comma-separated signature a1,...,ak
        #[arg(long, value_delimiter = ',')]
        signature: Option<Vec<u64>>,
        #[arg(long)]
        bipartite: bool,
        /// Also evaluate the cycle bound as printed in its statement
        #[arg(long)]
        statement_form: bool,
    },
    /// Tabulate the egr bounds over a lambda range as CSV
    Sweep {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        g: u32,
        /// Inclusive range `lo:hi`
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        bipartite: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Convert a graph file, or export a construction, to another format
    Export {
        #[arg(long, conflicts_with = "construction")]
        input: Option<PathBuf>,
        #[arg(long)]
        construction: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "graph6")]
        format: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the reproduction matrix and print a pass/fail table
    Reproduce {
        /// Restrict to one group: deletions, amalgams or bounds
        #[arg(long)]
        only: Option<String>,
        /// Skip rows whose graph has more vertices than this
        #[arg(long)]
        max_n: Option<usize>,
        /// Include the large instances
        #[arg(long)]
        slow: bool,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args, Debug, Clone, Default)]
struct ParamArgs {
    #[arg(long)]
    q: Option<u64>,
    /// Projective dimension for pg-incidence
    #[arg(long)]
    n: Option<u32>,
    /// Field element code
    #[arg(long)]
    epsilon: Option<u32>,
    /// Field element code
    #[arg(long)]
    eta: Option<u32>,
}

impl From<&ParamArgs> for Params {
    fn from(a: &ParamArgs) -> Params {
        Params {
            q: a.q,
            n: a.n,
            epsilon: a.epsilon,
            eta: a.eta,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct RunArgs {
    /// Census worker threads (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Largest graph the independent cycle enumeration runs on
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
}

impl RunArgs {
    fn options(self) -> VerifyOptions {
        VerifyOptions {
            census: CensusOptions { workers: self.workers },
            oracle_cap: self.oracle_cap,
        }
    }
}

/// Usage and precondition failures exit with 2; claim mismatches with 1.
enum Outcome {
    Pass,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(bytes).context("writing to stdout"),
    }
}

fn to_json(value: &impl serde::Serialize) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("plain data serialises");
    bytes.push(b'\n');
    bytes
}

fn read_graph(path: &Path, format: Option<&str>) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = match format {
        Some(f) => f.to_string(),
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => "graph6".into(),
            Some("json") => "json".into(),
            _ => "edgelist".into(),
        },
    };
    let graph = match format.parse::<ExportFormat>()? {
        ExportFormat::Graph6 => graph::parse_graph6(&text),
        ExportFormat::EdgeList => graph::parse_edgelist(&text),
        ExportFormat::Json => graph::parse_json(&text),
    };
    graph.with_context(|| format!("parsing {}", path.display()))
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Build {
            name,
            params,
            format,
            out,
            claim,
        } => {
            let format: ExportFormat = format.parse()?;
            let c = constructions::build(&name, &Params::from(&params))?;
            write_output(out.as_deref(), &graph::export(&c.graph, format)?)?;
            let claim_path = claim.or_else(|| {
                out.as_ref().map(|o| {
                    let mut s = o.clone().into_os_string();
                    s.push(".claim.json");
                    PathBuf::from(s)
                })
            });
            match claim_path {
                Some(p) => fs::write(&p, to_json(&c.claim)).with_context(|| format!("writing {}", p.display()))?,
                None => eprint!("{}", String::from_utf8(to_json(&c.claim))?),
            }
            Ok(Outcome::Pass)
        }
        Command::Verify {
            construction,
            params,
            graph,
            claim,
            format,
            run,
        } => {
            let report = match (construction, graph, claim) {
                (Some(name), None, None) => {
                    let c = constructions::build(&name, &Params::from(&params))?;
                    constructions::verify(&c, run.options())
                }
                (None, Some(g), Some(cl)) => {
                    let graph = read_graph(&g, format.as_deref())?;
                    let text = fs::read_to_string(&cl).with_context(|| format!("reading {}", cl.display()))?;
                    let claim: ConstructionClaim =
                        serde_json::from_str(&text).with_context(|| format!("parsing {}", cl.display()))?;
                    constructions::verify_graph(&graph, &claim, run.options())
                }
                _ => bail!("give --construction, or both --graph and --claim"),
            };
            io::stdout().write_all(&to_json(&report))?;
            Ok(if report.pass { Outcome::Pass } else { Outcome::Mismatch })
        }
        Command::Bounds {
            k,
            g,
            lambda,
            signature,
            bipartite,
            statement_form,
        } => {
            let query = match (lambda, signature) {
                (Some(l), None) => BoundQuery::egr(k, g, l, bipartite),
                (None, Some(a)) => BoundQuery::signature(k, g, a, bipartite),
                _ => bail!("give exactly one of --lambda and --signature"),
            };
            let mut report = bounds::evaluate(&query)?;
            if statement_form {
                let a = query.resolved_signature()?;
                report.bounds.push(bounds::sgr_cycle(k, g, &a, CycleForm::Statement)?);
            }
            io::stdout().write_all(&to_json(&report))?;
            Ok(Outcome::Pass)
        }
        Command::Sweep {
            k,
            g,
            lambda,
            bipartite,
            out,
        } => {
            let (lo, hi) = lambda
                .split_once(':')
                .context("--lambda expects lo:hi")?;
            let lo: u64 = lo.trim().parse().context("range start")?;
            let hi: u64 = hi.trim().parse().context("range end")?;
            if g % 2 == 1 {
                bail!("the sweep compares even-girth bounds; got g = {g}");
            }
            let rows = bounds::sweep(k, g, lo..=hi, bipartite)?;
            write_output(out.as_deref(), bounds::sweep_csv(&rows).as_bytes())?;
            Ok(Outcome::Pass)
        }
        Command::Export {
            input,
            construction,
            params,
            format,
            out,
        } => {
            let format: ExportFormat = format.parse()?;
            let graph = match (input, construction) {
                (Some(path), None) => read_graph(&path, None)?,
                (None, Some(name)) => constructions::build(&name, &Params::from(&params))?.graph,
                _ => bail!("give --input or --construction"),
            };
            write_output(out.as_deref(), &graph::export(&graph, format)?)?;
            Ok(Outcome::Pass)
        }
        Command::Reproduce {
            only,
            max_n,
            slow,
            run,
        } => {
            let group = only.as_deref().map(str::parse).transpose()?;
            let rows = reproduce::run(group, max_n, slow, run.options());
            let mut stdout = io::stdout().lock();
            reproduce::print_table(&mut stdout, &rows)?;
            Ok(if rows.iter().all(|r| r.status != reproduce::Status::Fail) {
                Outcome::Pass
            } else {
                Outcome::Mismatch
            })
        }
    }
}

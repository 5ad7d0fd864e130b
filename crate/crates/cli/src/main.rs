use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ecgraph::closure::{is_n_ec, is_n_line_ec, line_graph, xi, xi_line};
use ecgraph::generators::{cone, join, join_independent, paley};
use ecgraph::hypergraph::{
    cross_join_hypergraphs, crossing_hypergraph, is_n_line_ec_hyper, line_graph_of_hypergraph,
    star_dual, xi_line_hyper,
};
use ecgraph::search::{enumerate_connected, filter_stream, run_named_search, SearchConstraints};
use ecgraph::{
    is_planar, parse_graph6, write_graph6, Error, Family, Filter, Graph, Hypergraph, SearchName,
    SearchReport,
};

/// Existential closure of graphs, line graphs and hypergraph line graphs.
#[derive(Parser)]
#[command(name = "ecgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide n-e.c. (vertex), n-line e.c. (line) or hypergraph n-line e.c. (hyper).
    Check {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        n: usize,
        /// graph6 lines (hypergraph text for `hyper`); stdin when omitted
        input: Option<PathBuf>,
    },
    /// Largest n for which each input graph is n-e.c.
    Xi { input: Option<PathBuf> },
    /// Largest n for which each input graph is n-line e.c.
    LineXi { input: Option<PathBuf> },
    /// Line graph of each input graph.
    Linegraph { input: Option<PathBuf> },
    #[command(subcommand)]
    Construct(Construct),
    /// Paley graph on GF(q).
    Paley {
        #[arg(long)]
        q: u32,
    },
    #[command(subcommand)]
    Hyper(Hyper),
    /// Planarity of each input graph.
    Planar { input: Option<PathBuf> },
    /// One graph per isomorphism class of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// include disconnected graphs
        #[arg(long)]
        all: bool,
        #[arg(long = "filter")]
        filters: Vec<Filter>,
    },
    /// Run one of the built-in exhaustive searches.
    Search {
        #[arg(long)]
        name: SearchName,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a filter chain over graph6 lines.
    Filter {
        input: Option<PathBuf>,
        #[arg(long = "filter")]
        filters: Vec<Filter>,
        /// keep disconnected graphs
        #[arg(long)]
        all: bool,
        /// skip malformed lines instead of failing
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Vertex,
    Line,
    Hyper,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Lines,
}

#[derive(Subcommand)]
enum Construct {
    /// Add a universal vertex.
    Cone { input: Option<PathBuf> },
    /// Add `s` independent vertices adjacent to everything.
    JoinIndep {
        #[arg(long)]
        s: usize,
        input: Option<PathBuf>,
    },
    /// Join of the graphs in two files (`-` for stdin).
    Join { first: PathBuf, second: PathBuf },
    /// Cartesian product of the graphs in two files.
    Product { first: PathBuf, second: PathBuf },
    /// Complete multipartite graph with the given part sizes.
    Multipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// complete N, cycle N, path N, empty N or bipartite A B.
    Family {
        name: String,
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum Hyper {
    /// All k-subsets of X ∪ Y meeting both X and Y.
    Crossing {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        k: usize,
    },
    /// Hypergraph on the edges of a graph whose hyperedges are vertex stars.
    StarDual { input: Option<PathBuf> },
    /// Crossing construction over the edge sets of two hypergraphs.
    CrossJoin {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Decide n-line e.c. of a hypergraph.
    Check {
        #[arg(long)]
        n: usize,
        input: Option<PathBuf>,
    },
    /// Largest n for which a hypergraph is n-line e.c.
    Xi { input: Option<PathBuf> },
    /// Line graph of a hypergraph.
    LineGraph { input: Option<PathBuf> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => text = fs::read_to_string(p)?,
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// Every graph6 line of the input; errors carry the line number.
fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>, Error> {
    let text = read_text(path)?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|e| Error::Stream {
            line: i + 1,
            source: Box::new(e),
        })?);
    }
    if graphs.is_empty() {
        return Err(Error::InvalidArgument("no graphs in input".into()));
    }
    Ok(graphs)
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Error> {
    let graphs = read_graphs(path)?;
    match graphs.as_slice() {
        [g] => Ok(*g),
        _ => Err(Error::InvalidArgument(format!(
            "expected one graph, found {}",
            graphs.len()
        ))),
    }
}

fn read_hypergraph(path: Option<&Path>) -> Result<Hypergraph, Error> {
    Hypergraph::parse(&read_text(path)?)
}

fn print_report(out: &mut impl Write, report: &SearchReport, format: Format) -> Result<(), Error> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Lines => {
            for s in &report.survivors {
                writeln!(out, "{s}")?;
            }
        }
    }
    Ok(())
}

/// Ok(false) means a checked property failed.
fn run(command: Command, out: &mut impl Write) -> Result<bool, Error> {
    match command {
        Command::Check { mode, n, input } => {
            let verdicts = match mode {
                Mode::Hyper => vec![is_n_line_ec_hyper(&read_hypergraph(input.as_deref())?, n)?],
                Mode::Vertex => read_graphs(input.as_deref())?
                    .iter()
                    .map(|g| is_n_ec(g, n))
                    .collect::<Result<_, _>>()?,
                Mode::Line => read_graphs(input.as_deref())?
                    .iter()
                    .map(|g| is_n_line_ec(g, n))
                    .collect::<Result<_, _>>()?,
            };
            for v in &verdicts {
                writeln!(out, "{}", v.to_json())?;
            }
            return Ok(verdicts.iter().all(|v| v.holds));
        }
        Command::Xi { input } => {
            for g in read_graphs(input.as_deref())? {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&xi(&g)).expect("serializable")
                )?;
            }
        }
        Command::LineXi { input } => {
            for g in read_graphs(input.as_deref())? {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&xi_line(&g)).expect("serializable")
                )?;
            }
        }
        Command::Linegraph { input } => {
            for g in read_graphs(input.as_deref())? {
                writeln!(out, "{}", write_graph6(&line_graph(&g)?.graph))?;
            }
        }
        Command::Construct(c) => {
            let g = construct(c)?;
            writeln!(out, "{}", write_graph6(&g))?;
        }
        Command::Paley { q } => writeln!(out, "{}", write_graph6(&paley(q)?))?,
        Command::Hyper(Hyper::Check { n, input }) => {
            return run(
                Command::Check {
                    mode: Mode::Hyper,
                    n,
                    input,
                },
                out,
            )
        }
        Command::Hyper(h) => hyper(h, out)?,
        Command::Planar { input } => {
            for g in read_graphs(input.as_deref())? {
                writeln!(out, "{}", serde_json::json!({ "planar": is_planar(&g) }))?;
            }
        }
        Command::Enumerate {
            order,
            all,
            filters,
        } => {
            let c = SearchConstraints {
                require_connected: !all,
                filters,
                ..SearchConstraints::order(order)
            };
            for g in enumerate_connected(order, &c)? {
                writeln!(out, "{}", write_graph6(&g))?;
            }
        }
        Command::Search {
            name,
            max_order,
            workers,
            format,
        } => {
            let max_order = max_order.unwrap_or_else(|| name.default_max_order());
            let report = run_named_search(name, max_order, workers.max(1))?;
            print_report(out, &report, format)?;
        }
        Command::Filter {
            input,
            filters,
            all,
            lenient,
            format,
        } => {
            let c = SearchConstraints {
                require_connected: !all,
                filters,
                ..SearchConstraints::order(1)
            };
            let report = match input.as_deref() {
                Some(p) if p != Path::new("-") => {
                    filter_stream(BufReader::new(fs::File::open(p)?), &c, lenient)?
                }
                _ => filter_stream(io::stdin().lock(), &c, lenient)?,
            };
            print_report(out, &report, format)?;
        }
    }
    Ok(true)
}

fn construct(c: Construct) -> Result<Graph, Error> {
    match c {
        Construct::Cone { input } => cone(&read_graph(input.as_deref())?),
        Construct::JoinIndep { s, input } => join_independent(&read_graph(input.as_deref())?, s),
        Construct::Join { first, second } => {
            join(&read_graph(Some(&first))?, &read_graph(Some(&second))?)
        }
        Construct::Product { first, second } => {
            read_graph(Some(&first))?.cartesian_product(&read_graph(Some(&second))?)
        }
        Construct::Multipartite { parts } => Family::CompleteMultipartite(parts).build(),
        Construct::Family { name, sizes } => {
            let family = match (name.as_str(), sizes.as_slice()) {
                ("complete", &[n]) => Family::Complete(n),
                ("cycle", &[n]) => Family::Cycle(n),
                ("path", &[n]) => Family::Path(n),
                ("empty", &[n]) => Family::Empty(n),
                ("bipartite", &[a, b]) => Family::CompleteBipartite(a, b),
                _ => return Err(Error::InvalidFamily(format!("{name} {sizes:?}"))),
            };
            family.build()
        }
    }
}

fn hyper(h: Hyper, out: &mut impl Write) -> Result<(), Error> {
    match h {
        Hyper::Check { .. } => unreachable!("dispatched by run"),
        Hyper::Crossing { x, y, k } => write!(out, "{}", crossing_hypergraph(x, y, k)?.to_text())?,
        Hyper::StarDual { input } => write!(
            out,
            "{}",
            star_dual(&read_graph(input.as_deref())?)?.to_text()
        )?,
        Hyper::CrossJoin { first, second, k } => {
            let (a, b) = (
                read_hypergraph(Some(&first))?,
                read_hypergraph(Some(&second))?,
            );
            write!(out, "{}", cross_join_hypergraphs(&a, &b, k)?.to_text())?
        }
        Hyper::Xi { input } => {
            let v = xi_line_hyper(&read_hypergraph(input.as_deref())?);
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?
        }
        Hyper::LineGraph { input } => {
            let g = line_graph_of_hypergraph(&read_hypergraph(input.as_deref())?)?;
            writeln!(out, "{}", write_graph6(&g))?
        }
    }
    Ok(())
}

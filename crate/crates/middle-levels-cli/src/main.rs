//! Command line surface over the middle-levels construction.
//!
//! Exit codes: 0 on success (and on a passed verification), 1 when `verify`
//! rejects its input, 2 on usage or input errors. Stdin and stdout are the
//! only data channels.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use middle_levels::{
    assemble_with_limit, build_aux_graph_with_limit, catalan, enumerate_flippable_pairs_with_limit,
    match_m, match_m_inv, match_n, match_n_inv, parse_cycle_text, sigma, six_cycle, spanning_tree,
    verify_cycle, vertex_count, Bitstring, DyckWord, Error, TwoFactor, DEFAULT_ENUM_LIMIT,
    DEFAULT_VERTEX_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "middle-levels",
    version,
    about = "Hamilton cycles in the middle levels graph: generate, inspect, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a Hamilton cycle of G_n, one vertex (or flip position) per line
    Generate {
        /// Instance size; the graph has 2·C(2n+1, n) vertices
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// bits: one vertex per line; flips: the 1-based position flipped to
        /// reach the next vertex, one per line, closing the cycle
        #[arg(long, value_enum, default_value_t = Format::Bits)]
        format: Format,
        /// Repeat the start vertex at the end (bits format only)
        #[arg(long)]
        closed: bool,
        /// Raise the size cap (default 10)
        #[arg(long)]
        max_n_override: Option<u32>,
    },
    /// Print the cycles of the 2-factor, blank line between cycles
    TwoFactor {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Raise the size cap (default 10)
        #[arg(long)]
        max_n_override: Option<u32>,
    },
    /// Print the flip sequence of a Dyck word as space-separated positions
    Sigma {
        /// A nonempty Dyck word, e.g. 110100
        word: String,
        /// Cross-check that the word has length 2n
        #[arg(long)]
        n: Option<u32>,
    },
    /// Map newline-separated vertices from stdin through a lexical matching
    Matching {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Which map to apply
        #[arg(long, value_enum)]
        map: MapKind,
    },
    /// List the gadget 6-cycle patterns (alphabet {0,1,*}), one per line
    SixCycles {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Raise the size cap (default 14)
        #[arg(long)]
        max_n_override: Option<u32>,
    },
    /// Emit the auxiliary graph of plane-tree classes in Graphviz DOT
    AuxGraph {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Emit DOT (the default and only format; accepted for explicitness)
        #[arg(long)]
        dot: bool,
        /// Raise the size cap (default 14)
        #[arg(long)]
        max_n_override: Option<u32>,
    },
    /// Read a cycle from stdin and check it; exit 0 if it passes, 1 if not
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Expect the start vertex repeated on the last line
        #[arg(long)]
        closed: bool,
    },
    /// Print summary numbers for an instance as a single JSON object
    Stats {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Raise the size cap (default 14)
        #[arg(long)]
        max_n_override: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Bits,
    Flips,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "Minv", alias = "minv")]
    Minv,
    #[value(name = "Ninv", alias = "ninv")]
    Ninv,
}

#[derive(Serialize)]
struct Stats {
    n: u32,
    catalan: u64,
    vertices: u64,
    two_factor_cycles: u64,
    six_cycles: u64,
    aux_nodes: u64,
    aux_edges: u64,
    spanning_edges: u64,
}

enum CliError {
    Usage(String),
    Input(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match run(cli.command, &mut out) {
        Ok(code) => {
            if let Err(e) = out.flush() {
                return exit_for_io(e);
            }
            code
        }
        Err(CliError::Io(e)) => exit_for_io(e),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn exit_for_io(e: io::Error) -> ExitCode {
    if e.kind() == io::ErrorKind::BrokenPipe {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: {e}");
        ExitCode::from(2)
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<ExitCode, CliError> {
    match command {
        Command::Generate { n, format, closed, max_n_override } => {
            if closed && format == Format::Flips {
                return Err(CliError::Usage(
                    "--closed applies to the bits format only".into(),
                ));
            }
            let cycle = assemble_with_limit(n, max_n_override.unwrap_or(DEFAULT_VERTEX_LIMIT))?;
            match format {
                Format::Bits => {
                    for v in cycle.vertices() {
                        writeln!(out, "{v}")?;
                    }
                    if closed {
                        writeln!(out, "{}", cycle.vertices()[0])?;
                    }
                }
                Format::Flips => {
                    for p in cycle.flips() {
                        writeln!(out, "{p}")?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TwoFactor { n, max_n_override } => {
            let tf = TwoFactor::build_with_limit(n, max_n_override.unwrap_or(DEFAULT_VERTEX_LIMIT))?;
            for (i, cycle) in tf.cycles().iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                for v in cycle {
                    writeln!(out, "{v}")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma { word, n } => {
            let x: DyckWord = word.parse()?;
            if let Some(n) = n {
                if x.len() != 2 * n {
                    return Err(CliError::Usage(format!(
                        "word has length {}, expected 2n = {}",
                        x.len(),
                        2 * n
                    )));
                }
            }
            writeln!(out, "{}", sigma(&x)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matching { n, map } => {
            let mut input = String::new();
            io::stdin().read_to_string(&mut input)?;
            let expected_len = 2 * n + 1;
            for (i, line) in input.lines().enumerate() {
                let parse = || -> Result<Bitstring, Error> {
                    let v: Bitstring = line.trim_end_matches('\r').parse()?;
                    if v.len() != expected_len {
                        return Err(Error::WrongWeight {
                            vertex: v.to_string(),
                            expected: format!("length {expected_len}"),
                        });
                    }
                    Ok(v)
                };
                let wrap = |source: Error| {
                    CliError::Input(Error::Parse { line: i + 1, source: Box::new(source) })
                };
                let v = parse().map_err(wrap)?;
                let mapped = match map {
                    MapKind::M => match_m(&v),
                    MapKind::N => match_n(&v),
                    MapKind::Minv => match_m_inv(&v),
                    MapKind::Ninv => match_n_inv(&v),
                }
                .map_err(wrap)?;
                writeln!(out, "{mapped}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SixCycles { n, max_n_override } => {
            let pairs =
                enumerate_flippable_pairs_with_limit(n, max_n_override.unwrap_or(DEFAULT_ENUM_LIMIT))?;
            for pair in &pairs {
                writeln!(out, "{}", six_cycle(pair).pattern())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::AuxGraph { n, dot: _, max_n_override } => {
            let g = build_aux_graph_with_limit(n, max_n_override.unwrap_or(DEFAULT_ENUM_LIMIT))?;
            writeln!(out, "graph aux_{n} {{")?;
            for class in g.classes() {
                writeln!(out, "  \"{}\";", class.canonical)?;
            }
            for e in g.edges() {
                writeln!(
                    out,
                    "  \"{}\" -- \"{}\" [label=\"{}->{}\"];",
                    g.classes()[e.from].canonical,
                    g.classes()[e.to].canonical,
                    e.label.x,
                    e.label.y
                )?;
            }
            writeln!(out, "}}")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, closed } => {
            let mut input = String::new();
            io::stdin().read_to_string(&mut input)?;
            let mut seq = parse_cycle_text(&input, n)?;
            if closed {
                match (seq.first().copied(), seq.last()) {
                    (Some(first), Some(last)) if seq.len() >= 2 && first == *last => {
                        seq.pop();
                    }
                    _ => {
                        return Err(CliError::Input(Error::WrongWeight {
                            vertex: "<input>".into(),
                            expected: "a closed cycle repeating its start vertex".into(),
                        }))
                    }
                }
            }
            let report = verify_cycle(&seq, n)?;
            writeln!(out, "vertex_count {}", report.vertex_count)?;
            writeln!(out, "expected_count {}", report.expected_count)?;
            writeln!(out, "duplicates {}", report.duplicates)?;
            writeln!(out, "bad_steps {}", report.bad_steps)?;
            writeln!(out, "closes {}", report.closes)?;
            writeln!(out, "pass {}", report.pass)?;
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Stats { n, max_n_override } => {
            let limit = max_n_override.unwrap_or(DEFAULT_ENUM_LIMIT);
            let g = build_aux_graph_with_limit(n, limit)?;
            let tree = spanning_tree(&g)?;
            let stats = Stats {
                n,
                catalan: catalan(n) as u64,
                vertices: vertex_count(n) as u64,
                // one 2-factor cycle per plane-tree class
                two_factor_cycles: g.node_count() as u64,
                six_cycles: g.edge_count() as u64,
                aux_nodes: g.node_count() as u64,
                aux_edges: g.edge_count() as u64,
                spanning_edges: tree.len() as u64,
            };
            writeln!(out, "{}", serde_json::to_string(&stats).expect("plain struct"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

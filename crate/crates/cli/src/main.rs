use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use subgraph_dyn::gadgets::{BoolMatrix, GadgetSpec, Problem, UpdateDirection};
use subgraph_dyn::stream::{emit_gadget, run_stream, EngineConfig};
use subgraph_dyn::{Error, Pattern, VertexId};

/// Exact dynamic counts of triangles and four-vertex patterns over an
/// update/query stream.
#[derive(Parser, Debug)]
#[command(name = "subgraph-dyn", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the update stream of a reduction instance.
    Gadget(GadgetArgs),
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Stream file; reads stdin when absent.
    input: Option<PathBuf>,
    /// Exponent override, e.g. `diamond=0.4`. Repeatable.
    #[arg(long = "epsilon", value_name = "PAT=VAL", value_parser = parse_epsilon)]
    epsilon: Vec<(Pattern, f64)>,
    /// Comma-separated patterns to maintain (default: all).
    #[arg(long, value_delimiter = ',', value_parser = parse_pattern)]
    patterns: Vec<Pattern>,
    /// Comma-separated vertices to pin for `qs` queries.
    #[arg(long = "s", value_delimiter = ',')]
    s: Vec<u32>,
    /// Answer plain `q <pat>` queries with induced counts.
    #[arg(long)]
    induced: bool,
    /// Cross-check every query against brute-force enumeration.
    #[arg(long)]
    oracle_check: bool,
    /// Write per-update operation counts as CSV.
    #[arg(long, value_name = "PATH")]
    ops_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GadgetArgs {
    /// triangle, cycleK, c4, paw, diamond, k4 or path3.
    #[arg(long, value_parser = parse_problem)]
    problem: Problem,
    /// incremental or decremental.
    #[arg(long, default_value = "decremental", value_parser = parse_direction)]
    direction: UpdateDirection,
    /// Matrix rows separated by `/`, e.g. `1010/0110/0111`.
    #[arg(long, value_parser = parse_matrix)]
    matrix: BoolMatrix,
    /// Left vector as a 0/1 string.
    #[arg(long, value_parser = parse_vector)]
    u: Bits,
    /// Right vector as a 0/1 string.
    #[arg(long, value_parser = parse_vector)]
    v: Bits,
}

#[derive(Debug, Clone)]
struct Bits(Vec<bool>);

fn parse_vector(s: &str) -> Result<Bits, String> {
    parse_bits(s).map(Bits)
}

fn parse_pattern(s: &str) -> Result<Pattern, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_epsilon(s: &str) -> Result<(Pattern, f64), String> {
    let (p, x) = s.split_once('=').ok_or("expected PAT=VAL")?;
    let x: f64 = x.parse().map_err(|_| format!("bad number `{x}`"))?;
    Ok((parse_pattern(p)?, x))
}

fn parse_problem(s: &str) -> Result<Problem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_direction(s: &str) -> Result<UpdateDirection, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bits(s: &str) -> Result<Vec<bool>, String> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(format!("bad bit `{c}`")),
        })
        .collect()
}

fn parse_matrix(s: &str) -> Result<BoolMatrix, String> {
    let rows: Vec<Vec<u8>> = s
        .split('/')
        .map(|r| parse_bits(r).map(|bits| bits.into_iter().map(u8::from).collect()))
        .collect::<Result<_, _>>()?;
    BoolMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::InvalidConfig(_) => 3,
        Error::OracleMismatch { .. } => 4,
        _ => 1,
    }
}

fn run(args: RunArgs) -> Result<(), Error> {
    let config = EngineConfig {
        patterns: args.patterns,
        epsilon: args.epsilon.into_iter().collect::<BTreeMap<_, _>>(),
        s_vertices: args.s.into_iter().map(VertexId).collect(),
        induced: args.induced,
        oracle_check: args.oracle_check,
        ops_out: args.ops_out,
    };
    let stdout = io::stdout().lock();
    match args.input {
        Some(path) => run_stream(BufReader::new(File::open(path)?), &config, stdout)?,
        None => run_stream(io::stdin().lock(), &config, stdout)?,
    };
    Ok(())
}

fn gadget(args: GadgetArgs) -> Result<(), Error> {
    let spec = GadgetSpec::new(args.matrix, args.problem, args.direction)?;
    let text = emit_gadget(&spec, &args.u.0, &args.v.0)?;
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Some(Command::Gadget(args)) => gadget(args),
        None => run(cli.run),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

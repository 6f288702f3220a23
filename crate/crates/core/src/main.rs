use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use normlap::graph::{self, Family, Graph};
use normlap::randic;
use normlap::report::{self, DEFAULT_TOLERANCE};
use normlap::spectral;
use normlap::verify::{run_campaign, CampaignConfig, Mode};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(
    name = "normlap",
    version,
    about = "Normalized Laplacian spectra, the Randić index R_-1, and eigenvalue localization bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the normalized Laplacian spectrum, R_-1, and trace identity residuals
    Spectrum { file: PathBuf },
    /// Evaluate and check every bound family for one graph
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Write a generated graph as an edge list
    Gen {
        /// complete | path | cycle | star | complete_bipartite | random
        family: String,
        /// Family parameters: one vertex count, two side sizes, or `n p` for random
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a verification campaign over many graphs
    Verify {
        /// Check every labeled connected graph on this many vertices (2..=7)
        #[arg(long, conflicts_with = "random")]
        exhaustive: Option<usize>,
        /// Check random connected graphs on this many vertices
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Write the per-graph CSV here
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    let g = Graph::from_edge_list(&text)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    if !g.is_connected() {
        return Err(format!("{}: graph is not connected", path.display()));
    }
    Ok(g)
}

fn cmd_spectrum(file: &PathBuf) -> Result<u8, String> {
    let g = read_graph(file)?;
    let s = spectral::normalized_laplacian_spectrum(&g).map_err(|e| e.to_string())?;
    let r = randic::randic_minus_one(&g).map_err(|e| e.to_string())?;
    let (r1, r2) = spectral::moment_check(&s, r);
    let values: Vec<String> = s.values().iter().map(|v| format!("{:.15}", v)).collect();
    println!("n: {}  m: {}", g.n(), g.m());
    println!("spectrum: [{}]", values.join(", "));
    println!("R_-1: {:.15}", r);
    println!("trace identity residuals: {:.3e}, {:.3e}", r1, r2);
    Ok(EXIT_OK)
}

fn cmd_bounds(file: &PathBuf, format: Format, tol: f64) -> Result<u8, String> {
    if tol <= 0.0 || tol.is_nan() {
        return Err("tolerance must be positive".into());
    }
    let g = read_graph(file)?;
    let source = file.display().to_string();
    let rep = report::build_report(&g, tol, &source).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!("{}", rep.to_json()),
        Format::Csv => print!("{}", rep.to_csv()),
        Format::Text => print!("{}", rep.to_text()),
    }
    Ok(if rep.all_pass() { EXIT_OK } else { EXIT_VIOLATION })
}

fn parse_count(params: &[String], family: &str) -> Result<usize, String> {
    if params.len() != 1 {
        return Err(format!("{} takes exactly one parameter", family));
    }
    params[0]
        .parse()
        .map_err(|_| format!("invalid vertex count {:?}", params[0]))
}

fn cmd_gen(family: &str, params: &[String], seed: u64, out: Option<&PathBuf>) -> Result<u8, String> {
    let g = match family {
        "complete" => graph::gen_family(Family::Complete(parse_count(params, family)?)),
        "path" => graph::gen_family(Family::Path(parse_count(params, family)?)),
        "cycle" => graph::gen_family(Family::Cycle(parse_count(params, family)?)),
        "star" => graph::gen_family(Family::Star(parse_count(params, family)?)),
        "complete_bipartite" => {
            if params.len() != 2 {
                return Err("complete_bipartite takes two side sizes".into());
            }
            let a = params[0].parse().map_err(|_| format!("invalid size {:?}", params[0]))?;
            let b = params[1].parse().map_err(|_| format!("invalid size {:?}", params[1]))?;
            graph::gen_family(Family::CompleteBipartite(a, b))
        }
        "random" => {
            if params.len() != 2 {
                return Err("random takes a vertex count and an edge probability".into());
            }
            let n = params[0].parse().map_err(|_| format!("invalid vertex count {:?}", params[0]))?;
            let p = params[1].parse().map_err(|_| format!("invalid probability {:?}", params[1]))?;
            graph::gen_random_connected(n, p, seed)
        }
        other => return Err(format!("unknown family {:?}", other)),
    }
    .map_err(|e| e.to_string())?;

    let text = g.to_edge_list();
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {}", path.display(), e))?,
        None => print!("{}", text),
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    exhaustive: Option<usize>,
    random: Option<usize>,
    trials: u64,
    p: f64,
    seed: u64,
    tol: f64,
    out: Option<&PathBuf>,
) -> Result<u8, String> {
    let mode = match (exhaustive, random) {
        (Some(n), None) => Mode::Exhaustive { n },
        (None, Some(n)) => Mode::Random { n, trials, edge_prob: p, seed },
        _ => return Err("choose exactly one of --exhaustive or --random".into()),
    };
    let cfg = CampaignConfig { mode, tolerance: tol };
    let outcome = run_campaign(&cfg).map_err(|e| e.to_string())?;
    print!("{}", outcome.summary);
    if let Some(path) = out {
        fs::write(path, &outcome.csv)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
    }
    Ok(if outcome.summary.violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.cmd {
        Cmd::Spectrum { file } => cmd_spectrum(file),
        Cmd::Bounds { file, format, tol } => cmd_bounds(file, *format, *tol),
        Cmd::Gen { family, params, seed, out } => cmd_gen(family, params, *seed, out.as_ref()),
        Cmd::Verify { exhaustive, random, trials, p, seed, tol, out } => {
            cmd_verify(*exhaustive, *random, *trials, *p, *seed, *tol, out.as_ref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_INPUT)
        }
    }
}

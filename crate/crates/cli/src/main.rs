//! `mtclab`: build multipartite tournaments, compute their (1,2)-step
//! competition graphs, classify and recognize, and fuzz the theorem catalog.
//!
//! Exit codes: 0 on success / all checks passing, 1 when a FAIL (or a
//! method disagreement) is found, 2 on usage or IO errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mtclab_core::harness::{fuzz, FuzzConfig};
use mtclab_core::report::{emit_check_results, emit_dot, emit_fuzz_report, emit_structure_report};
use mtclab_core::{
    build_structure_report, check, check_all, competition_graph, find_asteroidal_triple,
    is_c4_free, is_chordal, is_interval, parse_mtd, serialize_mtd, Chordality, IntervalVerdict,
    Method, MultipartiteTournament, Verdict,
};

#[derive(Parser)]
#[command(
    name = "mtclab",
    version,
    about = "multipartite tournament competition lab"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Fast,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Interval,
    Chordal,
    C4free,
    At,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random tournament as an MTD v1 document.
    Gen {
        /// Comma-separated part sizes, e.g. 2,2,1
        #[arg(long)]
        parts: String,
        /// Generator seed; falls back to MTCLAB_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (stdout when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the (1,2)-step competition graph of a tournament file.
    Compete {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "fast")]
        method: MethodArg,
        /// Also write the graph in DOT form.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Emit the structure report of a tournament file.
    Classify {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Run the graph-class recognizers on the competition graph.
    Recognize {
        #[arg(short, long)]
        input: PathBuf,
        /// Restrict to one class (all four when absent).
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Run the theorem catalog (or one entry) on a tournament file.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Fuzz the theorem catalog over generated instances.
    Fuzz {
        /// Semicolon-separated size vectors, e.g. 2,2,1;2,2,2;3,2,1
        #[arg(long)]
        parts_menu: String,
        /// Inclusive seed range, e.g. 0..199
        #[arg(long)]
        seeds: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        stop_on_fail: bool,
        /// Write the report to a file as well as stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad part size `{t}`"))
        })
        .collect()
}

fn parse_menu(text: &str) -> Result<Vec<Vec<usize>>, String> {
    text.split(';').map(parse_sizes).collect()
}

fn parse_seed_range(text: &str) -> Result<(u64, u64), String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("bad seed range `{text}`, expected start..end"))?;
    let start = a
        .trim()
        .parse::<u64>()
        .map_err(|_| format!("bad seed `{a}`"))?;
    let end = b
        .trim()
        .parse::<u64>()
        .map_err(|_| format!("bad seed `{b}`"))?;
    Ok((start, end))
}

fn load(input: &Path) -> Result<MultipartiteTournament, String> {
    let text = std::fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
    parse_mtd(&text).map_err(|e| format!("{}: {e}", input.display()))
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn env_seed() -> u64 {
    std::env::var("MTCLAB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Gen {
            parts,
            seed,
            output,
        } => {
            let sizes = parse_sizes(&parts)?;
            let seed = seed.unwrap_or_else(env_seed);
            let d = MultipartiteTournament::random(&sizes, seed).map_err(|e| e.to_string())?;
            write_out(&output, &serialize_mtd(&d))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compete { input, method, dot } => {
            let d = load(&input)?;
            let (g, agree) = match method {
                MethodArg::Fast => (competition_graph(&d, Method::Fast), None),
                MethodArg::Oracle => (competition_graph(&d, Method::Oracle), None),
                MethodArg::Both => {
                    let fast = competition_graph(&d, Method::Fast);
                    let oracle = competition_graph(&d, Method::Oracle);
                    let agree = fast.edges() == oracle.edges();
                    (fast, Some(agree))
                }
            };
            let mut out = String::new();
            out.push_str(&format!(
                "c12 vertices={} edges={}\n",
                g.vertex_count(),
                g.edge_count()
            ));
            for (u, v) in g.edges() {
                out.push_str(&format!("edge {} {}\n", g.label(u), g.label(v)));
            }
            if let Some(agree) = agree {
                out.push_str(&format!("methods-agree: {agree}\n"));
            }
            print!("{out}");
            if let Some(path) = dot {
                write_out(&Some(path), &emit_dot(&d, &g))?;
            }
            if agree == Some(false) {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input } => {
            let d = load(&input)?;
            let g = competition_graph(&d, Method::Fast);
            let report = build_structure_report(&d, &g).map_err(|e| e.to_string())?;
            print!("{}", emit_structure_report(&report));
            if report.block_verdicts.iter().any(|v| !v.pass) {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Recognize { input, class } => {
            let d = load(&input)?;
            let g = competition_graph(&d, Method::Fast);
            let mut out = String::new();
            let want =
                |c: ClassArg| class.is_none() || matches!(class, Some(x) if x as u8 == c as u8);
            if want(ClassArg::Chordal) {
                match is_chordal(&g) {
                    Chordality::Chordal { peo } => {
                        out.push_str(&format!("chordal: yes (peo: {})\n", peo.join(" ")));
                    }
                    Chordality::NotChordal { hole } => {
                        out.push_str(&format!("chordal: no (hole: {})\n", hole.cycle.join("-")));
                    }
                }
            }
            if want(ClassArg::C4free) {
                out.push_str(&format!(
                    "c4free: {}\n",
                    if is_c4_free(&g) { "yes" } else { "no" }
                ));
            }
            if want(ClassArg::At) {
                match find_asteroidal_triple(&g) {
                    Some(at) => out.push_str(&format!(
                        "asteroidal-triple: {} {} {}\n",
                        at.triple[0], at.triple[1], at.triple[2]
                    )),
                    None => out.push_str("asteroidal-triple: none\n"),
                }
            }
            if want(ClassArg::Interval) {
                match is_interval(&g) {
                    IntervalVerdict::Interval { .. } => out.push_str("interval: yes\n"),
                    IntervalVerdict::HoleFound(hole) => {
                        out.push_str(&format!("interval: no (hole: {})\n", hole.cycle.join("-")))
                    }
                    IntervalVerdict::AsteroidalTripleFound(at) => out.push_str(&format!(
                        "interval: no (asteroidal triple: {} {} {})\n",
                        at.triple[0], at.triple[1], at.triple[2]
                    )),
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, theorem } => {
            let d = load(&input)?;
            let results = match theorem {
                Some(id) => vec![check(&id, &d).map_err(|e| e.to_string())?],
                None => check_all(&d),
            };
            print!("{}", emit_check_results(&results));
            if results.iter().any(|r| r.verdict == Verdict::Fail) {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fuzz {
            parts_menu,
            seeds,
            jobs,
            stop_on_fail,
            output,
        } => {
            let menu = parse_menu(&parts_menu)?;
            let (seed_start, seed_end) = parse_seed_range(&seeds)?;
            let config = FuzzConfig {
                part_size_menu: menu,
                seed_start,
                seed_end,
                stop_on_fail,
                jobs,
            };
            let report = fuzz(&config).map_err(|e| e.to_string())?;
            let text = emit_fuzz_report(&report);
            print!("{text}");
            if let Some(path) = output {
                write_out(&Some(path), &text)?;
            }
            if report.failed() {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("mtclab: {message}");
            ExitCode::from(2)
        }
    }
}

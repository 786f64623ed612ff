use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hackenbush::{
    classify_misere_rb, enumerate_with, explore_green_strings, merge_ground, proof_strategy_move,
    random_position, to_misere_instance, verify_misere_formula, verify_reduction, Color, Player,
    PlayConvention, Position, SearchSession, ShapeClass, VerificationReport, VerifyParams,
};

/// Hackenbush workbench: solve positions exactly, classify misère Red-Blue
/// positions by grounded counts, build misère reduction instances, and run
/// the verification suites that check the two against each other.
#[derive(Parser)]
#[command(name = "hackenbush", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact outcome and optimal first moves of a position file.
    Solve {
        file: PathBuf,
        /// Play convention.
        #[arg(long, value_enum, default_value = "normal")]
        play: Convention,
        #[arg(long)]
        json: bool,
    },
    /// Misère outcome of a Red-Blue position from grounded counts alone.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Transform a Red-Blue position into its misère instance (merged
    /// ground hung from a single grounded green edge).
    Reduce {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Identify all ground vertices into a single vertex.
    MergeGround {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a verification suite against the search oracle.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Exhaustive bound: Graphs up to this many edges (Strings go two deeper).
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        /// Number of seeded random trial positions.
        #[arg(long, default_value_t = 500)]
        random: usize,
        /// Edge count of each random trial position.
        #[arg(long, default_value_t = 8)]
        rand_edges: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List every position of a shape class up to an edge bound.
    Enumerate {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long)]
        max_edges: usize,
        /// Subset of BRG, e.g. "BR".
        #[arg(long, default_value = "BRG")]
        colors: String,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate misère outcomes of string collections.
    Explore {
        #[command(subcommand)]
        what: ExploreTarget,
    },
    /// Solve a seeded random Red-Blue-Green position under both conventions
    /// and report search statistics.
    Bench {
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ExploreTarget {
    /// Collections of strings whose grounded edge is green.
    GreenStrings {
        #[arg(long)]
        max_edges: usize,
        /// Restrict green to the grounded edge (higher edges Red/Blue only).
        #[arg(long)]
        strict_green: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Normal,
    Misere,
}

impl From<Convention> for PlayConvention {
    fn from(c: Convention) -> PlayConvention {
        match c {
            Convention::Normal => PlayConvention::Normal,
            Convention::Misere => PlayConvention::Misere,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Theorem1,
    Reduction,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Strings,
    Trees,
    Graphs,
}

impl From<Shape> for ShapeClass {
    fn from(s: Shape) -> ShapeClass {
        match s {
            Shape::Strings => ShapeClass::Strings,
            Shape::Trees => ShapeClass::Trees,
            Shape::Graphs => ShapeClass::Graphs,
        }
    }
}

#[derive(Args)]
struct Empty {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(file: &PathBuf) -> Result<Position, String> {
    let text = fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    Position::parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn stats_json(s: hackenbush::SearchStats) -> serde_json::Value {
    json!({
        "nodes_expanded": s.nodes_expanded,
        "memo_hits": s.memo_hits,
        "max_depth": s.max_depth,
    })
}

fn move_list(moves: &[hackenbush::Move]) -> Vec<u32> {
    moves.iter().map(|m| m.edge_id).collect()
}

fn fmt_moves(moves: &[hackenbush::Move]) -> String {
    if moves.is_empty() {
        "none".to_string()
    } else {
        moves
            .iter()
            .map(|m| m.edge_id.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Solve { file, play, json } => {
            let p = load(&file)?;
            let conv: PlayConvention = play.into();
            let mut session = SearchSession::new(&p, conv);
            let outcome = session.outcome();
            let left = session.optimal_moves(Player::Left);
            let right = session.optimal_moves(Player::Right);
            let stats = session.stats();
            if json {
                let doc = json!({
                    "command": "solve",
                    "inputs": { "file": file.display().to_string(), "play": conv.to_string() },
                    "outcome": outcome.to_string(),
                    "moves": { "left": move_list(&left), "right": move_list(&right) },
                    "stats": stats_json(stats),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("outcome: {outcome}");
                println!("optimal first moves (Left): {}", fmt_moves(&left));
                println!("optimal first moves (Right): {}", fmt_moves(&right));
                println!(
                    "nodes expanded: {}, memo hits: {}, max depth: {}",
                    stats.nodes_expanded, stats.memo_hits, stats.max_depth
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file, json } => {
            let p = load(&file)?;
            let outcome = classify_misere_rb(&p)
                .map_err(|e| format!("formula requires Red-Blue: {e}"))?;
            let counts = p.grounded_counts();
            let left = proof_strategy_move(&p, Player::Left).expect("checked Red-Blue");
            let right = proof_strategy_move(&p, Player::Right).expect("checked Red-Blue");
            if json {
                let doc = json!({
                    "command": "classify",
                    "inputs": { "file": file.display().to_string() },
                    "outcome": outcome.to_string(),
                    "grounded": { "blue": counts.blue, "red": counts.red, "green": counts.green },
                    "moves": {
                        "left": left.map(|m| m.edge_id),
                        "right": right.map(|m| m.edge_id),
                    },
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("outcome: {outcome}");
                println!("grounded counts: blue={} red={}", counts.blue, counts.red);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { file, output } => {
            let p = load(&file)?;
            let gm = to_misere_instance(&p).map_err(|e| e.to_string())?;
            fs::write(&output, gm.serialize())
                .map_err(|e| format!("cannot write {}: {e}", output.display()))?;
            println!(
                "wrote misere instance with {} edges to {}",
                gm.edges().len(),
                output.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::MergeGround { file, output } => {
            let p = load(&file)?;
            let merged = merge_ground(&p);
            fs::write(&output, merged.serialize())
                .map_err(|e| format!("cannot write {}: {e}", output.display()))?;
            println!("wrote merged position to {}", output.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_edges, random, rand_edges, seed, json } => {
            let params = VerifyParams {
                max_edges_exhaustive: max_edges,
                random_trials: random,
                random_max_edges: rand_edges,
                seed,
            };
            let report = match suite {
                Suite::Theorem1 => verify_misere_formula(params),
                Suite::Reduction => verify_reduction(params),
            };
            print_report(&report, json);
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Enumerate { shape, max_edges, colors, json } => {
            let colors = parse_colors(&colors)?;
            let mut positions = Vec::new();
            enumerate_with(shape.into(), max_edges, &colors, |p| {
                positions.push(p.serialize_compact());
            });
            if json {
                let doc = json!({
                    "command": "enumerate",
                    "inputs": {
                        "shape": format!("{:?}", ShapeClass::from(shape)).to_lowercase(),
                        "max_edges": max_edges,
                        "colors": colors.iter().map(|c| c.letter()).collect::<String>(),
                    },
                    "positions": positions,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for p in &positions {
                    println!("{p}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Explore { what } => {
            let ExploreTarget::GreenStrings { max_edges, strict_green, json } = what;
            let rows = explore_green_strings(max_edges, strict_green);
            if json {
                let doc = json!({
                    "command": "explore",
                    "inputs": { "max_edges": max_edges, "strict_green": strict_green },
                    "table": rows,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for row in &rows {
                    println!("{}\t{}", row.position, row.outcome);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { edges, seed } => {
            let p = random_position(
                edges,
                (edges / 2).max(2),
                &[Color::Blue, Color::Red, Color::Green],
                seed,
            );
            println!("position ({} edges, seed {seed}):", p.edges().len());
            print!("{}", p.serialize());
            for conv in [PlayConvention::Normal, PlayConvention::Misere] {
                let start = Instant::now();
                let mut session = SearchSession::new(&p, conv);
                let outcome = session.outcome();
                let elapsed = start.elapsed();
                let stats = session.stats();
                println!(
                    "{conv}: outcome {outcome} in {elapsed:.2?} (nodes {}, memo hits {}, max depth {})",
                    stats.nodes_expanded, stats.memo_hits, stats.max_depth
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_colors(s: &str) -> Result<Vec<Color>, String> {
    let mut colors = Vec::new();
    for c in s.chars() {
        colors.push(
            Color::from_letter(&c.to_string())
                .ok_or_else(|| format!("unknown color letter '{c}' (expected B, R or G)"))?,
        );
    }
    if colors.is_empty() {
        return Err("color set must be non-empty".into());
    }
    Ok(colors)
}

fn print_report(report: &VerificationReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        println!("{}", report.summary());
        for m in &report.mismatches {
            println!(
                "MISMATCH [{}] expected {} got {}: {}",
                m.check, m.expected, m.got, m.position
            );
        }
    }
}

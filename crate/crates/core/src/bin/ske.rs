use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kantian::analysis::{sample, verify};
use kantian::game::DEFAULT_TOL;
use kantian::report::{compare, emit_report, parse_game_lines, Format, GameSpec};
use kantian::sampling::UniformPayoffs;
use kantian::Error;

#[derive(Parser)]
#[command(
    name = "ske",
    version,
    about = "Simple Kantian equilibria of symmetric 2x2 games, classical and quantum"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one symmetric game
    Solve(GameArgs),
    /// Compare classical and quantum equilibria for a batch of games
    Compare(GameArgs),
    /// Estimate how often quantum play beats classical play
    Sample {
        #[arg(long, default_value_t = 100_000)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        low: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        high: f64,
        #[arg(long, default_value = "human")]
        format: Format,
    },
    /// Check the closed forms against numerical optimizers on random games
    Verify {
        #[arg(long, default_value_t = 100)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        #[arg(long, default_value_t = 16)]
        grid: usize,
        #[arg(long, default_value = "human")]
        format: Format,
    },
}

#[derive(Args)]
struct GameArgs {
    /// Payoffs "a00,a01,a10,a11"
    #[arg(long, allow_hyphen_values = true)]
    game: Vec<GameSpec>,
    /// JSON-lines file of game records
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value = "human")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

fn load_games(args: &GameArgs) -> (Vec<GameSpec>, Vec<Error>) {
    let mut games = args.game.clone();
    let mut errors = Vec::new();
    if let Some(path) = &args.input {
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for rec in parse_game_lines(&text) {
                    match rec {
                        Ok(g) => games.push(g),
                        Err(e) => errors.push(e),
                    }
                }
            }
            Err(e) => errors.push(Error::Malformed(format!("{}: {e}", path.display()))),
        }
    }
    (games, errors)
}

fn run_games(args: &GameArgs, single: bool) -> u8 {
    let (games, errors) = load_games(args);
    if single && games.len() + errors.len() != 1 {
        eprintln!("error: solve takes exactly one game (use compare for batches)");
        return 2;
    }
    let mut code = 0;
    for e in &errors {
        eprintln!("error: {e}");
        code = code.max(e.exit_code());
    }
    let mut reports = Vec::new();
    for (i, res) in compare(&games, args.tol).into_iter().enumerate() {
        match res {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("error: game {} {}: {e}", i + 1, games[i].label_or_empty());
                code = code.max(e.exit_code());
            }
        }
    }
    print!("{}", emit_report(&reports, args.format));
    code as u8
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve(args) => run_games(&args, true),
        Command::Compare(args) => run_games(&args, false),
        Command::Sample {
            n,
            seed,
            low,
            high,
            format,
        } => match UniformPayoffs::new(low, high).and_then(|d| sample(n, seed, d)) {
            Ok(report) => {
                match format {
                    Format::Human => print!("{}", report.to_human()),
                    Format::JsonLines => println!("{}", serde_json::to_string(&report).unwrap()),
                    Format::Csv => print!("{}", report.to_csv()),
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify {
            n,
            seed,
            tol,
            grid,
            format,
        } => match verify(n, seed, tol, grid) {
            Ok(summary) => {
                match format {
                    Format::JsonLines => println!("{}", serde_json::to_string(&summary).unwrap()),
                    _ => print!("{}", summary.to_human()),
                }
                if summary.passed {
                    0
                } else {
                    1
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    };
    ExitCode::from(code)
}

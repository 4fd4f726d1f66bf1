//! Command-line front end.
//!
//! Instances are passed inline as JSON or as `@path` file references.
//! Exactly one JSON document goes to stdout; errors are machine-readable
//! JSON on stderr. Exit codes: 0 success, 1 usage error, 2 validation
//! error, 3 capacity error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use powercmp::error::Error;
use powercmp::gen::{random_game, random_x3c, rng_from_seed};
use powercmp::indices::{
    estimate_banzhaf_with_delta, estimate_shapley_with_delta, index_value, IndexKind, Strategy,
    DEFAULT_DELTA,
};
use powercmp::oracles;
use powercmp::reductions::CountValue;
use powercmp::{
    compare_raw, merge_profitability, phi, phi_normalized, power_compare, psi, subsetsum_to_game,
    transform_g, transform_h_dprime, transform_h_prime, x3c_to_subsetsum, Game, SubsetSumInstance,
    X3cInstance,
};

#[derive(Parser)]
#[command(
    name = "powercmp",
    about = "Exact power indices, comparisons, and counting reductions for weighted voting games",
    after_help = "Games, X3C instances, and subset-sum instances are JSON, \
                  passed inline or as @path. Player indices are 1-based."
)]
struct Cli {
    /// Worker-count hint for the parallel computation backends
    /// (default: POWERCMP_PARALLEL or all cores).
    #[arg(long, global = true)]
    parallel: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Banzhaf,
    Shapley,
}

impl From<KindArg> for IndexKind {
    fn from(k: KindArg) -> IndexKind {
        match k {
            KindArg::Banzhaf => IndexKind::Banzhaf,
            KindArg::Shapley => IndexKind::Shapley,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum StrategyArg {
    #[default]
    Auto,
    Enumeration,
    Permutation,
    WeightDp,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Enumeration => Strategy::DefinitionEnumeration,
            StrategyArg::Permutation => Strategy::PermutationEnumeration,
            StrategyArg::WeightDp => Strategy::WeightDp,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact power index of one player.
    Index {
        /// Game JSON or @path.
        game: String,
        #[arg(long)]
        player: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Decide whether a player's index is strictly higher in the first game.
    Compare {
        game_a: String,
        game_b: String,
        #[arg(long)]
        player: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Compare raw index values of designated players across two games.
    CompareRaw {
        game_a: String,
        game_b: String,
        #[arg(long = "player-a", alias = "playerA")]
        player_a: usize,
        #[arg(long = "player-b", alias = "playerB")]
        player_b: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Is merging players 1 and 2 profitable under Shapley-Shubik?
    Merge {
        game: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Run one of the counting reductions.
    Reduce {
        #[command(subcommand)]
        which: ReduceCommand,
    },
    /// Apply a count-preserving instance transformation.
    Transform {
        #[command(subcommand)]
        which: TransformCommand,
    },
    /// Brute-force solution counting.
    Count {
        #[command(subcommand)]
        which: CountCommand,
    },
    /// Invert the reduction's scaling factor.
    Psi {
        /// Nonnegative integer (decimal).
        value: String,
    },
    /// Monte Carlo index estimate with a Hoeffding half-width.
    Estimate {
        game: String,
        #[arg(long)]
        player: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Confidence-interval failure probability.
        #[arg(long, default_value_t = DEFAULT_DELTA)]
        delta: f64,
    },
    /// Cross-check the fast index paths against the brute-force oracles.
    Verify {
        /// Game, X3C, or subset-sum JSON (or @path).
        input: String,
    },
    /// Generate a random instance from a seed.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Encode an X3C instance as subset sum (base m+1 digits).
    X3cToSubsetsum { instance: String },
    /// Full chain: X3C to the voting game with a weight-1 designated player.
    X3cToGame {
        instance: String,
        /// Normalize to the restricted form first, so psi inverts the result.
        #[arg(long)]
        normalize: bool,
        /// Replace malformed instances with the fixed zero-solution instance.
        #[arg(long)]
        lenient: bool,
    },
    /// Deng-Papadimitriou game for a subset-sum instance.
    SubsetsumToGame { instance: String },
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Append one forced 3-set over fresh elements.
    G { instance: String },
    /// Append the three-set gadget (k+2, m+3).
    Hprime { instance: String },
    /// Append the four-set gadget (k+2, m+4).
    Hdprime { instance: String },
    /// Normalize to universe/family ratio 2/3.
    TwoThirds { instance: String },
    /// Normalize to the restricted form (ratio 2/3, family 3n, n a power of 4).
    X3cPrime { instance: String },
    /// Bring two instances to identical sizes, preserving both counts.
    Equalize {
        instance_a: String,
        instance_b: String,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    X3c { instance: String },
    Subsetsum { instance: String },
}

#[derive(Subcommand)]
enum GenCommand {
    Game {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        players: usize,
        #[arg(long, default_value_t = 100)]
        max_weight: u64,
    },
    X3c {
        #[arg(long)]
        seed: u64,
        /// Universe size (a multiple of 3).
        #[arg(long, default_value_t = 9)]
        universe: usize,
        #[arg(long, default_value_t = 5)]
        sets: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            if e.use_stderr() {
                emit_error("usage", &e.to_string());
                return ExitCode::from(1);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };

    let threads = cli.parallel.or_else(|| {
        std::env::var("POWERCMP_PARALLEL")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(threads) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }

    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            emit_error("usage", &msg);
            ExitCode::from(1)
        }
        Err(CliError::Domain(e)) => {
            let (kind, code) = if e.is_capacity() {
                ("capacity", 3)
            } else {
                ("validation", 2)
            };
            emit_error(kind, &e.to_string());
            ExitCode::from(code)
        }
    }
}

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn emit_error(kind: &str, message: &str) {
    eprintln!(
        "{}",
        json!({"error": {"kind": kind, "message": message}})
    );
}

/// Resolves inline JSON or an `@path` reference to document text.
fn load_text(arg: &str) -> Result<String, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        let mut text = String::new();
        if path == "-" {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        } else {
            text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        }
        Ok(text)
    } else {
        Ok(arg.to_string())
    }
}

fn parse_game(arg: &str) -> Result<Game, CliError> {
    let text = load_text(arg)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Domain(Error::InvalidInput(format!("bad game JSON: {e}"))))
}

fn parse_x3c(arg: &str) -> Result<X3cInstance, CliError> {
    let text = load_text(arg)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Domain(Error::InvalidInput(format!("bad X3C JSON: {e}"))))
}

fn parse_subsetsum(arg: &str) -> Result<SubsetSumInstance, CliError> {
    let text = load_text(arg)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Domain(Error::InvalidInput(format!("bad subset-sum JSON: {e}"))))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Index {
            game,
            player,
            kind,
            strategy,
        } => {
            let game = parse_game(&game)?;
            let value = index_value(&game, player, kind.into(), strategy.into())?;
            print_json(&value);
        }
        Command::Compare {
            game_a,
            game_b,
            player,
            kind,
            strategy,
        } => {
            let a = parse_game(&game_a)?;
            let b = parse_game(&game_b)?;
            let verdict = power_compare(&a, &b, player, kind.into(), strategy.into())?;
            print_json(&verdict);
        }
        Command::CompareRaw {
            game_a,
            game_b,
            player_a,
            player_b,
            kind,
            strategy,
        } => {
            let a = parse_game(&game_a)?;
            let b = parse_game(&game_b)?;
            let verdict = compare_raw(&a, player_a, &b, player_b, kind.into(), strategy.into())?;
            print_json(&verdict);
        }
        Command::Merge { game, strategy } => {
            let game = parse_game(&game)?;
            let verdict = merge_profitability(&game, strategy.into())?;
            print_json(&verdict);
        }
        Command::Reduce { which } => match which {
            ReduceCommand::X3cToSubsetsum { instance } => {
                let x = parse_x3c(&instance)?;
                print_json(&x3c_to_subsetsum(&x)?);
            }
            ReduceCommand::X3cToGame {
                instance,
                normalize,
                lenient,
            } => {
                let x = match parse_x3c(&instance) {
                    Ok(x) => x,
                    Err(_) if lenient => X3cInstance::zero_solution_fallback(),
                    Err(e) => return Err(e),
                };
                let game = if normalize { phi_normalized(&x)? } else { phi(&x)? };
                print_json(&game);
            }
            ReduceCommand::SubsetsumToGame { instance } => {
                let i = parse_subsetsum(&instance)?;
                print_json(&subsetsum_to_game(&i));
            }
        },
        Command::Transform { which } => match which {
            TransformCommand::G { instance } => {
                print_json(&transform_g(&parse_x3c(&instance)?));
            }
            TransformCommand::Hprime { instance } => {
                print_json(&transform_h_prime(&parse_x3c(&instance)?));
            }
            TransformCommand::Hdprime { instance } => {
                print_json(&transform_h_dprime(&parse_x3c(&instance)?));
            }
            TransformCommand::TwoThirds { instance } => {
                print_json(&powercmp::normalize_two_thirds(&parse_x3c(&instance)?));
            }
            TransformCommand::X3cPrime { instance } => {
                print_json(&powercmp::normalize_x3c_prime(&parse_x3c(&instance)?));
            }
            TransformCommand::Equalize {
                instance_a,
                instance_b,
            } => {
                let (a, b) = powercmp::equalize_pair(&parse_x3c(&instance_a)?, &parse_x3c(&instance_b)?);
                print_json(&[a, b]);
            }
        },
        Command::Count { which } => match which {
            CountCommand::X3c { instance } => {
                print_json(&oracles::count_x3c(&parse_x3c(&instance)?)?);
            }
            CountCommand::Subsetsum { instance } => {
                print_json(&oracles::count_subsetsum(&parse_subsetsum(&instance)?)?);
            }
        },
        Command::Psi { value } => {
            let x: BigUint = value
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("'{value}' is not a nonnegative integer")))?;
            print_json(&CountValue::from(psi(&x)));
        }
        Command::Estimate {
            game,
            player,
            kind,
            samples,
            seed,
            delta,
        } => {
            let game = parse_game(&game)?;
            if !(delta > 0.0 && delta < 1.0) {
                return Err(CliError::Usage("--delta must be in (0, 1)".into()));
            }
            let estimate = match IndexKind::from(kind) {
                IndexKind::Banzhaf => {
                    estimate_banzhaf_with_delta(&game, player, samples, seed, delta)?
                }
                IndexKind::Shapley => {
                    estimate_shapley_with_delta(&game, player, samples, seed, delta)?
                }
            };
            print_json(&estimate);
        }
        Command::Verify { input } => {
            let text = load_text(&input)?;
            let report = verify_document(&text)?;
            print_json(&report);
        }
        Command::Gen { which } => match which {
            GenCommand::Game {
                seed,
                players,
                max_weight,
            } => {
                let game = random_game(&mut rng_from_seed(seed), players, max_weight)?;
                print_json(&game);
            }
            GenCommand::X3c {
                seed,
                universe,
                sets,
            } => {
                let x = random_x3c(&mut rng_from_seed(seed), universe, sets)?;
                print_json(&x);
            }
        },
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    input: &'static str,
    checks: Vec<String>,
    agree: bool,
}

/// Cross-checks fast paths against the oracles for whatever document was
/// passed. Disagreement is reported in the JSON and by a validation error.
fn verify_document(text: &str) -> Result<VerifyReport, CliError> {
    if let Ok(game) = serde_json::from_str::<Game>(text) {
        let mut checks = Vec::new();
        for player in 1..=game.player_count() {
            let bz = powercmp::banzhaf_raw(&game, player, Strategy::Auto)?;
            let ss = powercmp::shapley_raw(&game, player, Strategy::Auto)?;
            let bz_oracle = oracles::banzhaf_raw_enum(&game, player)?;
            let ss_oracle = oracles::shapley_raw_enum(&game, player)?;
            if bz != bz_oracle || ss != ss_oracle {
                return Err(CliError::Domain(Error::InvalidInput(format!(
                    "index mismatch for player {player}: fast ({bz}, {ss}) vs oracle ({bz_oracle}, {ss_oracle})"
                ))));
            }
            checks.push(format!(
                "player {player}: banzhaf_raw={bz} shapley_raw={ss} match oracle"
            ));
        }
        return Ok(VerifyReport {
            input: "game",
            checks,
            agree: true,
        });
    }
    if let Ok(x) = serde_json::from_str::<X3cInstance>(text) {
        let count = oracles::count_x3c(&x)?;
        let mut checks = vec![format!("x3c count={count}")];
        if x.set_count() > 0 {
            let encoded = x3c_to_subsetsum(&x)?;
            let ss_count = oracles::count_subsetsum(&encoded)?;
            if ss_count != count {
                return Err(CliError::Domain(Error::InvalidInput(format!(
                    "parsimony violation: #X3C={count} but #SubsetSum={ss_count}"
                ))));
            }
            checks.push(format!("subset-sum encoding count={ss_count} (parsimonious)"));
            let game = subsetsum_to_game(&encoded);
            if game.player_count() <= 24 {
                let raw = powercmp::shapley_raw(&game, 1, Strategy::Auto)?;
                let oracle = oracles::shapley_raw_enum(&game, 1)?;
                if raw != oracle {
                    return Err(CliError::Domain(Error::InvalidInput(
                        "reduced-game index mismatch against oracle".into(),
                    )));
                }
                checks.push(format!("reduced game shapley_raw={raw} matches oracle"));
            }
        }
        return Ok(VerifyReport {
            input: "x3c",
            checks,
            agree: true,
        });
    }
    if let Ok(i) = serde_json::from_str::<SubsetSumInstance>(text) {
        let count = oracles::count_subsetsum(&i)?;
        let game = subsetsum_to_game(&i);
        let mut checks = vec![format!("subset-sum count={count}")];
        if game.player_count() <= 24 {
            let raw = powercmp::shapley_raw(&game, 1, Strategy::Auto)?;
            let oracle = oracles::shapley_raw_enum(&game, 1)?;
            if raw != oracle {
                return Err(CliError::Domain(Error::InvalidInput(
                    "reduced-game index mismatch against oracle".into(),
                )));
            }
            checks.push(format!("reduced game shapley_raw={raw} matches oracle"));
        }
        return Ok(VerifyReport {
            input: "subsetsum",
            checks,
            agree: true,
        });
    }
    Err(CliError::Domain(Error::InvalidInput(
        "input is not a game, X3C, or subset-sum JSON document".into(),
    )))
}

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

mod builtin;
mod commands;
mod report;

use report::{CliError, Report};

/// Exact analysis of bipartite nonlocal games.
#[derive(Parser, Debug)]
#[command(name = "nlgame", version)]
struct Cli {
    /// Print a short human-readable summary instead of the JSON report.
    #[arg(long, global = true)]
    plain: bool,

    /// Maximum number of deterministic strategies an enumeration may visit.
    #[arg(long, global = true, default_value_t = nlgame::EnumerationBudget::DEFAULT.0)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GameArg {
    /// Built-in game id or path to a game file.
    #[arg(long, default_value = "magic-square-r4")]
    game: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact classical value and an optimal deterministic strategy.
    ClassicalValue(GameArg),
    /// Facet certificate of a Bell expression for the local polytope.
    FacetCheck {
        /// Built-in expression id or path to an expression file.
        #[arg(long, default_value = "magic-square-r4")]
        expr: String,
        /// Embed the expression in a larger scenario, as `m_A,m_B,n_A,n_B`.
        #[arg(long, value_parser = parse_params)]
        params: Option<[usize; 4]>,
        /// Write the saturating-vertex matrix to this file, one row per line.
        #[arg(long)]
        export_matrix: Option<String>,
        /// Skip the proper-face guard (negative control).
        #[arg(long)]
        debug_disable_face_guard: bool,
    },
    /// Simulate a built-in quantum strategy.
    Quantum {
        /// `magic-square-r4`, `magic-square-rows01` or `chsh`.
        #[arg(long, default_value = "magic-square-r4")]
        game: String,
        /// Flip the sign of the top-left square entry (negative control).
        #[arg(long)]
        debug_flip_sign: bool,
        /// Include the state and projectors in the report.
        #[arg(long)]
        include_strategy: bool,
    },
    /// Pair-compatibility test for games where Alice has two inputs.
    #[command(name = "theorem-2xn")]
    Theorem2xn(GameArg),
    /// Resistance to noise.
    Noise {
        /// Built-in expression id or path to an expression file.
        #[arg(long, default_value = "magic-square-r4")]
        expr: String,
        /// Quantum value; computed from the built-in strategy when omitted.
        #[arg(long)]
        quantum_value: Option<String>,
    },
    /// Recompute every reference figure and compare it with its expected value.
    ReproducePaper {
        /// Skip the proper-face guard in the facet checks (negative control).
        #[arg(long)]
        debug_disable_face_guard: bool,
    },
    /// Print a game in canonical text form.
    ExportGame(GameArg),
    /// Print an expression in canonical text form.
    ExportExpression {
        #[arg(long, default_value = "magic-square-r4")]
        expr: String,
    },
}

fn parse_params(s: &str) -> Result<[usize; 4], String> {
    let parts: Vec<_> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err("expected four comma-separated counts m_A,m_B,n_A,n_B".into());
    }
    let mut out = [0; 4];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not a count"))?;
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let budget = nlgame::EnumerationBudget(cli.budget);
    match &cli.command {
        Command::ClassicalValue(g) => commands::classical_value(&g.game, budget),
        Command::FacetCheck {
            expr,
            params,
            export_matrix,
            debug_disable_face_guard,
        } => commands::facet_check(expr, *params, export_matrix.as_deref(), !debug_disable_face_guard, budget),
        Command::Quantum {
            game,
            debug_flip_sign,
            include_strategy,
        } => commands::quantum(game, *debug_flip_sign, *include_strategy),
        Command::Theorem2xn(g) => commands::theorem_2xn(&g.game),
        Command::Noise { expr, quantum_value } => commands::noise(expr, quantum_value.as_deref()),
        Command::ReproducePaper {
            debug_disable_face_guard,
        } => Ok(commands::reproduce(!debug_disable_face_guard, budget)),
        Command::ExportGame(g) => commands::export_game(&g.game),
        Command::ExportExpression { expr } => commands::export_expression(expr),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let text = if let Some(raw) = &report.raw {
                raw.clone()
            } else if cli.plain {
                report.summary.iter().map(|l| format!("{l}\n")).collect()
            } else {
                let doc = report.document(started);
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable report"))
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

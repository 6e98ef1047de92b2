use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use wwm_cli::{
    cmd_blowtorch, cmd_check, cmd_evolve, cmd_families, cmd_measure, cmd_regions, render_table, CliError,
    ExperimentReport, FamiliesSource, StateSpec, Verdict, DEFAULT_SEED,
};
use wwm_core::models::{ModelName, SystemForm};
use wwm_core::Axis;

/// Experiments on the Grassmann phase-space qubit and its ontological models.
#[derive(Parser)]
#[command(name = "wwm", version)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit the structured JSON report (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a two-column human-readable table.
    #[arg(long, global = true)]
    table: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Apply both blowtorch implementations and compare the ontic outputs.
    Blowtorch {
        #[arg(long, value_parser = parse_model)]
        model: ModelName,
        /// `bloch a,b,c`, `stab +x` or `atom +++`.
        #[arg(long, value_parser = parse_state)]
        state: StateSpec,
    },
    /// Enumerate the solution families of a model or a DSL file.
    Families {
        #[arg(long, value_parser = parse_model, required_unless_present = "system", conflicts_with = "system")]
        model: Option<ModelName>,
        /// `disjoint` or `pairs`.
        #[arg(long, default_value = "disjoint", value_parser = parse_form)]
        form: SystemForm,
        /// Constraint system written in the DSL.
        #[arg(long)]
        system: Option<PathBuf>,
    },
    /// Apply a gate sequence left to right.
    Evolve {
        /// Whitespace-separated tokens from I X Y Z H T1 T2.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        gates: String,
        #[arg(long, value_parser = parse_state)]
        state: StateSpec,
    },
    /// Pauli measurement probabilities through the region decomposition.
    Measure {
        #[arg(long, value_parser = parse_state)]
        state: StateSpec,
        #[arg(long, value_parser = parse_axis)]
        pauli: Axis,
    },
    /// Run the seeded self-check suites.
    Check {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Weight of a state on each region of the eight-region basis.
    Regions {
        #[arg(long, value_parser = parse_state)]
        state: StateSpec,
    },
}

fn parse_model(s: &str) -> Result<ModelName, String> {
    s.parse()
}

fn parse_form(s: &str) -> Result<SystemForm, String> {
    s.parse()
}

fn parse_state(s: &str) -> Result<StateSpec, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    s.parse()
}

fn run(command: Command) -> Result<ExperimentReport, CliError> {
    match command {
        Command::Blowtorch { model, state } => cmd_blowtorch(model, &state),
        Command::Families { model, form, system } => {
            let source = match (model, system) {
                (_, Some(path)) => FamiliesSource::File(path),
                (Some(model), None) => FamiliesSource::Model(model, form),
                (None, None) => return Err(CliError::usage("families needs --model or --system")),
            };
            cmd_families(&source)
        }
        Command::Evolve { gates, state } => cmd_evolve(&gates, &state),
        Command::Measure { state, pauli } => cmd_measure(&state, pauli),
        Command::Check { seed } => Ok(cmd_check(seed)),
        Command::Regions { state } => cmd_regions(&state),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_check = matches!(cli.command, Command::Check { .. });
    let start = Instant::now();
    let mut report = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.output.timing {
        report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    let text = if cli.output.table { render_table(&report) } else { report.to_json() + "\n" };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = io::stdout().lock().write_all(text.as_bytes());
    if is_check && report.verdict != Some(Verdict::Pass) {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

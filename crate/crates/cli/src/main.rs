use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gkz_cli::{run, Command, CommandRequest, OutputFormat};
use gkz_core::DEFAULT_CAP;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Hull,
    Triangulate,
    Gkz,
    Game,
    Chow,
    Secondary,
    Resultant,
    Discriminant,
    Ea,
    Verify,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Coherent triangulations, GKZ vectors and principal A-determinants of
/// lattice point configurations.
#[derive(Debug, Parser)]
#[command(name = "gkz", version)]
struct Args {
    /// Pipeline stage to run.
    #[arg(value_enum)]
    command: Cmd,
    /// Configuration JSON file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Largest number of points to enumerate triangulations for.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// List non-coherent triangulations too (triangulate, gkz).
    #[arg(long)]
    include_noncoherent: bool,
    /// Degree for resultant, discriminant and ea.
    #[arg(long)]
    degree: Option<usize>,
    /// Degree of the second polynomial for resultant.
    #[arg(long)]
    second_degree: Option<usize>,
    /// Print the Sylvester matrix instead of the resultant.
    #[arg(long)]
    matrix: bool,
    /// Specialization map JSON applied to the resultant.
    #[arg(long, value_name = "MAP")]
    specialize: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Hull => Command::Hull,
        Cmd::Triangulate => Command::Triangulate,
        Cmd::Gkz => Command::Gkz,
        Cmd::Game => Command::Game,
        Cmd::Chow => Command::Chow,
        Cmd::Secondary => Command::Secondary,
        Cmd::Resultant => Command::Resultant,
        Cmd::Discriminant => Command::Discriminant,
        Cmd::Ea => Command::Ea,
        Cmd::Verify => Command::Verify,
    };
    let request = CommandRequest {
        command,
        input_path: args.input.filter(|p| p.as_os_str() != "-"),
        format: match args.format {
            Format::Json => OutputFormat::Json,
            Format::Text => OutputFormat::Text,
        },
        cap: args.cap,
        include_noncoherent: args.include_noncoherent,
        degree: args.degree,
        second_degree: args.second_degree,
        matrix: args.matrix,
        specialize: args.specialize,
    };
    let outcome = run(&request);
    // A closed pipe downstream (e.g. `| head`) is not an error worth reporting.
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush());
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.exit_code as u8)
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use soniq::config::{self, OutputFormat};
use soniq::pipeline::{self, Command as PipelineCommand};

/// Sonic-horizon Hawking pipeline: flow -> horizon -> squeezing -> teleportation.
#[derive(Parser)]
#[command(name = "soniq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Path to the run configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Override the config's output format.
    #[arg(long, value_enum)]
    output: Option<OutputArg>,
    /// Write the artifact here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Locate sonic horizons of the configured flow profile.
    Horizon(RunArgs),
    /// Hawking occupation spectrum over a mode-frequency grid.
    Spectrum(RunArgs),
    /// Squeeze parameter and Bogoliubov coefficients for (omega, alpha).
    Squeeze(RunArgs),
    /// Squeezed-vacuum diagnostics: norm deficit, entropy, Schmidt weights.
    Entangle(RunArgs),
    /// One conditional teleportation outcome for the configured target.
    Teleport(RunArgs),
    /// Fidelity-versus-surface-gravity (or temperature) sweep table.
    Sweep(RunArgs),
}

fn run(args: &RunArgs, command: PipelineCommand) -> soniq::Result<()> {
    let text = std::fs::read_to_string(&args.config)?;
    let config = config::parse_config(&text)?;
    let base_dir = args.config.parent().map(|p| p.to_path_buf());
    let artifact = pipeline::dispatch(&config, command, base_dir.as_deref())?;
    let format = match args.output {
        Some(OutputArg::Csv) => OutputFormat::Csv,
        Some(OutputArg::Json) => OutputFormat::Json,
        None => config.output,
    };
    let rendered = pipeline::render(&artifact, format);
    match &args.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, command) = match &cli.command {
        CliCommand::Horizon(a) => (a, PipelineCommand::Horizon),
        CliCommand::Spectrum(a) => (a, PipelineCommand::Spectrum),
        CliCommand::Squeeze(a) => (a, PipelineCommand::Squeeze),
        CliCommand::Entangle(a) => (a, PipelineCommand::Entangle),
        CliCommand::Teleport(a) => (a, PipelineCommand::Teleport),
        CliCommand::Sweep(a) => (a, PipelineCommand::Sweep),
    };
    match run(args, command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            // Single-line machine-parseable error record.
            eprintln!(
                "{}",
                serde_json::json!({"error": err.kind(), "message": err.to_string()})
            );
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

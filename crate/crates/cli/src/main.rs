use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use xmlift::group::DEFAULT_SIZE_BOUND;
use xmlift_cli::{run_file, seed_catalog, Format};

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

/// Crossed modules, liftings and derivations over finite groups.
#[derive(Parser)]
#[command(name = "xmlift", version)]
struct Cli {
    /// One of: check, classify, liftings, lift-morphism, pullback,
    /// homotopy-check, homotopy-lift, derivations, whitehead,
    /// lift-derivation, sections, descend, action-groupoid, covering-check,
    /// pullback-action
    #[arg(required_unless_present = "seed_catalog")]
    command: Option<String>,

    /// Fixture file to load
    #[arg(long, required_unless_present = "seed_catalog")]
    fixture: Option<String>,

    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,

    /// Largest group order for enumerations
    #[arg(long, default_value_t = DEFAULT_SIZE_BOUND)]
    size_bound: usize,

    /// List the built-in groups and crossed modules and exit
    #[arg(long)]
    seed_catalog: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::Machine => Format::Machine,
    };
    let result = if cli.seed_catalog {
        seed_catalog(cli.size_bound).map(|r| format.render(&r))
    } else {
        run_file(
            cli.command.as_deref().unwrap_or_default(),
            cli.fixture.as_deref().unwrap_or_default(),
            format,
            cli.size_bound,
        )
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

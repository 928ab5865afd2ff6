//! Fixture parsing, command dispatch and report rendering for the `xmlift`
//! binary.

pub mod commands;
pub mod error;
pub mod fixture;
pub mod report;

pub use commands::{run_command, COMMANDS};
pub use error::{CliError, Result};
pub use fixture::{parse_fixture, Document, Object};
pub use report::{Report, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

impl Format {
    pub fn render(self, report: &Report) -> String {
        match self {
            Format::Human => report.to_human(),
            Format::Machine => report.to_machine(),
        }
    }
}

/// Reads a fixture file, runs `command` on it and renders the report.
pub fn run_file(command: &str, path: &str, format: Format, bound: usize) -> Result<String> {
    if !COMMANDS.contains(&command) {
        return Err(CliError::UnknownCommand(command.to_string()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let doc = parse_fixture(&text, bound)?;
    Ok(format.render(&run_command(command, &doc, bound)?))
}

/// The built-in group keywords and crossed modules, as a report.
pub fn seed_catalog(bound: usize) -> Result<Report> {
    let mut r = Report::new();
    for (word, description) in xmlift::group::catalog::KEYWORDS {
        r.text(format!("group.{word}"), description);
    }
    let xmods =
        xmlift::fixtures::crossed_modules(bound).map_err(|source| CliError::Computation {
            context: "catalog".into(),
            source,
        })?;
    for (name, x) in xmods {
        r.text(
            format!("xmod.{name}"),
            format!(
                "|A| = {}, |B| = {}, {}",
                x.a().order(),
                x.b().order(),
                x.classify()
            ),
        );
    }
    Ok(r)
}

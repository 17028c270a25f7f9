//! Command-line front end for `pierik-core`.

pub mod args;
pub mod cache;
pub mod check;
pub mod commands;
pub mod error;
pub mod record;

use std::io::Write;

pub use args::Cli;
pub use error::CliError;
pub use record::CoefficientRecord;

use args::Command;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Coeff(a) => commands::coeff(a, out),
        Command::Expand(a) => commands::expand(a, out),
        Command::Table(a) => commands::table(a, out),
        Command::Tableaux(a) => commands::tableaux(a, out),
        Command::Check(a) => check::run(a, out),
    }
}

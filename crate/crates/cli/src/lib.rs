//! Command-line front-end for the `horadam` crate.

pub mod args;
pub mod commands;
pub mod record;
pub mod verify;

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use commands::{execute, CliError, Outcome};
pub use record::OutputRecord;

/// Parses `argv`, runs the command and returns `(stdout, stderr, exit code)`.
pub fn run<I, T>(argv: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, code) };
        }
    };
    match execute(&cli) {
        Ok(outcome) => (outcome.record.render(cli.format), String::new(), outcome.code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.code),
    }
}

use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use spinobs_cli::{run_with, Options};

fn main() -> ExitCode {
    let color = io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty());
    let out = run_with(std::env::args_os(), &mut io::stdin().lock(), Options { color });
    // A closed pipe is not worth reporting.
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

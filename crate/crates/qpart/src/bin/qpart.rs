use std::io;
use std::process::ExitCode;

use qpart::cli::{run, MAX_ENUM_VAR};

fn main() -> ExitCode {
    let max_enum = std::env::var(MAX_ENUM_VAR).ok();
    let code = run(std::env::args_os(), max_enum.as_deref(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}

use std::io;
use std::process::ExitCode;

use loglog_lab::cli::{run, MAX_LEVEL_ENV};

fn main() -> ExitCode {
    let env_max_level = std::env::var(MAX_LEVEL_ENV).ok();
    let code = run(std::env::args_os(), env_max_level, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}

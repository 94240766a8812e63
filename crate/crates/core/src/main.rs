//! The `superlie` command-line tool.

use std::io::Write;

fn main() {
    let out = superlie::cli::run_command(std::env::args_os());
    // Ignore broken pipes (e.g. `| head`).
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.status);
}

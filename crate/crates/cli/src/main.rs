use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = torplane_cli::run(std::env::args());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(out.code as u8)
}

use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = monolc_cli::run(
        std::env::args_os(),
        &mut io::stdin(),
        &mut out,
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}

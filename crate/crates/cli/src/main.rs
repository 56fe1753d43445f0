use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    covera::configure_threads();
    let code = covera::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}

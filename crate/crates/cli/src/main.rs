use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let start = Instant::now();
    let outcome = waring_cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    let mut err = std::io::stderr();
    let _ = write!(err, "{}", outcome.stderr);
    let _ = writeln!(err, "wall time: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(outcome.code)
}

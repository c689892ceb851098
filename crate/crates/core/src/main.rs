use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use abundancy::cli::{run, Outcome, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(err) => {
            let _ = err.print();
            // --help and --version are not usage errors
            return if err.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&config, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Outcome::Success), Ok(())) => ExitCode::SUCCESS,
        (Ok(Outcome::ChecksFailed), Ok(())) => ExitCode::from(1),
        (Err(err), _) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
        (_, Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

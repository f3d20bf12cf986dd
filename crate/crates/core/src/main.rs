use std::process::ExitCode;

use secohom::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::from_args();
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render(config.format));
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zforce::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let records = report.render(cli.format);
            let mut out = std::io::stdout().lock();
            match &report.artifact {
                Some(a) => {
                    let _ = out.write_all(a.as_bytes());
                    eprint!("{records}");
                }
                None => {
                    let _ = out.write_all(records.as_bytes());
                }
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("zforce: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

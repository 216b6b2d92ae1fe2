mod args;
mod report;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use run::{run, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig::from_opts(&cli.global);
    match run(&cli.command, &cfg) {
        Ok(report) => {
            let text = match cli.global.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(5);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("dstab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

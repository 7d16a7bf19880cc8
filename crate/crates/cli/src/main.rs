use std::process::exit;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use leibniz_ly_cli::commands::{execute, Cli, Format};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            exit(code);
        }
    };
    let started = Instant::now();
    match execute(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(started.elapsed().as_millis() as u64);
            }
            match cli.format {
                Format::Text => println!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            exit(report.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit(3);
        }
    }
}

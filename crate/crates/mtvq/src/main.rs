use clap::error::ErrorKind;
use clap::Parser;

use mtvq::cli::{apply_thread_cap, run, Cli};

fn main() {
    apply_thread_cap();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            // Help and version go to stdout, genuine errors to stderr.
            let _ = err.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(&cli));
}

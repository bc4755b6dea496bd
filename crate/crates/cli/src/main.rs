//! `preorder`: generate synthetic ensembles, run the fixation pipeline, and
//! cross-check small instances against exhaustive enumeration.

mod args;
mod failure;
mod fix;
mod generate;
mod oracle_check;
mod stats;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use failure::Failure;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Failure::USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => generate::run(a),
        Command::Fix(a) => fix::run(a),
        Command::OracleCheck(a) => oracle_check::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

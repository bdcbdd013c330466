// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::Parser;
use radconst_cli::{args::Cli, args::UsageError, run};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        // Output piped into `head` and the like.
        Err(e)
            if e
                .downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

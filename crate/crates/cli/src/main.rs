mod cli;
mod commands;
mod input;
mod registry;
mod report;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ColorChoice, CommandFactory, FromArgMatches};

use cli::{Cli, Format};

fn color_choice() -> Result<ColorChoice, String> {
    match std::env::var("BRAUER_KIT_COLOR").as_deref() {
        Err(_) | Ok("auto") => Ok(ColorChoice::Auto),
        Ok("always") => Ok(ColorChoice::Always),
        Ok("never") => Ok(ColorChoice::Never),
        Ok(other) => Err(format!("BRAUER_KIT_COLOR must be auto, always or never, not {other:?}")),
    }
}

fn error_label(color: ColorChoice) -> &'static str {
    let on = match color {
        ColorChoice::Always => true,
        ColorChoice::Never => false,
        ColorChoice::Auto => std::io::stderr().is_terminal() && std::env::var_os("NO_COLOR").is_none(),
    };
    if on {
        "\x1b[1;31merror\x1b[0m"
    } else {
        "error"
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let report = commands::run(&cli.command)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let out = match cli.format {
        Format::Text => report.text,
        Format::Json => report::pretty(&report.json),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, out).with_context(|| format!("cannot write {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.as_bytes())?;
            stdout.flush()?;
        }
    }
    match report.failure {
        Some(msg) => Err(anyhow::anyhow!(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let color = match color_choice() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let parsed = Cli::command().color(color).try_get_matches().and_then(|m| Cli::from_arg_matches(&m));
    let cli = match parsed {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}: {e:#}", error_label(color));
            ExitCode::from(1)
        }
    }
}

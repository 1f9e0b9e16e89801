//! Command-line front end for `mcover`.
//!
//! Every subcommand reads the shared hypergraph text format from `--in` or
//! stdin and writes to `--out` or stdout. Exit status is 0 on success, 1
//! when a verification row fails or a search flags a refutation candidate,
//! and 2 on input or parameter errors.

pub mod cli;
pub mod commands;
pub mod io;
pub mod search;
pub mod verify;

use clap::Parser;
use mcover::{Error, Limits};

pub use cli::{Cli, Command};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Failure = 1,
    Input = 2,
}

/// Maps a library error to the exit status it should produce.
pub fn exit_for(err: &Error) -> Exit {
    match err {
        Error::BoundViolated(_) | Error::AssertionFailure(_) | Error::InternalContradiction(_) => Exit::Failure,
        _ => Exit::Input,
    }
}

/// Limits from `MCOVER_LIMITS`, then `--limit-nonzeros`.
pub fn limits(cli: &Cli) -> mcover::Result<Limits> {
    let mut l = Limits::from_env()?;
    if let Some(n) = cli.limit_nonzeros {
        l.lp_nonzeros = n;
    }
    Ok(l)
}

/// Parses `args` and runs the subcommand, reporting errors on stderr.
pub fn run<I, T>(args: I) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Input } else { Exit::Ok };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("mcover: {e}");
            exit_for(&e)
        }
    }
}

fn dispatch(cli: &Cli) -> mcover::Result<Exit> {
    let limits = limits(cli)?;
    let mut out = io::Output::open(cli.out.as_deref())?;
    let code = match &cli.command {
        Command::Gen(a) => commands::gen(a, &mut out)?,
        Command::Derive(a) => commands::derive(cli, a, &mut out)?,
        Command::Solve(a) => commands::solve(cli, a, &limits, &mut out)?,
        Command::Construct(a) => commands::construct(cli, a, &limits, &mut out)?,
        Command::Verify(a) => verify::command(a, &limits, &mut out)?,
        Command::Search(a) => search::command(a, &limits, &mut out)?,
    };
    out.finish()?;
    Ok(code)
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use refltk::cli::{parse_group_spec, run, Command, Flags};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Enumerate,
    Roots,
    Stabilizers,
    Classify,
    Molien,
    VerifyAll,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Enumerate => Command::Enumerate,
            Cmd::Roots => Command::Roots,
            Cmd::Stabilizers => Command::Stabilizers,
            Cmd::Classify => Command::Classify,
            Cmd::Molien => Command::Molien,
            Cmd::VerifyAll => Command::VerifyAll,
        }
    }
}

/// Exact verification toolkit for finite orthogonal reflection groups.
#[derive(Debug, Parser)]
#[command(name = "refltk", version)]
struct Args {
    command: Cmd,
    /// Group definition file (JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Print the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Maximal number of group elements to enumerate.
    #[arg(long)]
    cap: Option<usize>,
    /// Degree to which the Molien series is expanded.
    #[arg(long)]
    expansion: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.spec) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("refltk: cannot read {}: {e}", args.spec.display());
            return ExitCode::from(2);
        }
    };
    let spec = match parse_group_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("refltk: {}: [{}] {e}", args.spec.display(), e.code());
            return ExitCode::from(2);
        }
    };
    let flags = Flags {
        json: args.json,
        cap: args.cap,
        expansion: args.expansion,
    };
    let report = run(args.command.into(), &spec, &flags);
    if flags.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit_code() as u8)
}

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use quivercone::session::{reports_to_dot, reports_to_json, reports_to_text, Options, Session};
use quivercone::Field;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

/// Runs a quivercone session file and prints one report per command.
#[derive(Parser, Debug)]
#[command(name = "quivercone", version)]
struct Cli {
    /// Session file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Default truncation degree for rewriting commands.
    #[arg(long)]
    degree: Option<usize>,
    /// Field for scalar literals: `q` or `cyclo:m`.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long, value_enum, default_value = "json")]
    output: Format,
    /// Also write DOT for quiver-valued results to this path.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the main output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let src = match read_input(&cli.input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let options = Options {
        degree: cli.degree,
        field: cli.field,
    };
    let session = match Session::from_source(&src, options) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let reports = session.run();
    let body = match cli.output {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&reports_to_json(&reports)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Dot => reports_to_dot(&reports),
        Format::Text => reports_to_text(&reports),
    };
    let written = match &cli.out {
        Some(p) => std::fs::write(p, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if let Some(p) = &cli.dot {
        if let Err(e) = std::fs::write(p, reports_to_dot(&reports)) {
            eprintln!("error: cannot write DOT: {e}");
            return ExitCode::from(2);
        }
    }
    for r in reports.iter().filter(|r| !r.ok()) {
        if let Err(e) = &r.outcome {
            eprintln!("command {} ({}) failed: {e}", r.index, r.command);
        }
    }
    if reports.iter().all(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use scoring_games::cli::{run_batch, run_command, Outcome, Session, Style};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Literal,
    Pretty,
}

/// Scoring games calculator.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Run the commands in FILE and exit.
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,
    /// Output style for game values.
    #[arg(long, value_enum, default_value = "literal")]
    format: Format,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let style = match args.format {
        Format::Literal => Style::Literal,
        Format::Pretty => Style::Pretty,
    };
    let mut session = Session::with_base_dir(".");
    if let Some(path) = args.batch {
        let script = match std::fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        };
        let (transcript, errors) = run_batch(&script, &mut session, style);
        print!("{transcript}");
        return if errors == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE };
    }

    let stdin = std::io::stdin();
    let mut out = std::io::stdout();
    loop {
        print!("sgc> ");
        out.flush().ok();
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::FAILURE;
            }
        }
        match run_command(&line, &mut session, style) {
            Ok(Outcome::Print(s)) => println!("{s}"),
            Ok(Outcome::Silent) => {}
            Ok(Outcome::Quit) => break,
            Err(e) => println!("error: {e}"),
        }
    }
    ExitCode::SUCCESS
}

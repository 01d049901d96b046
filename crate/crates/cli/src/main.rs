use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use polycomp_cli::{execute, parse_config, ExitStatus, Format};

/// Computes in composite polynomial rings A + X*B[X] and checks structural
/// statements about them.
///
/// The instance is given as key=value words, inline or in a config file:
///
///   polycomp ring='composite(gf(2),gf(4,2))' verify
///   polycomp cover z r=2
#[derive(Parser, Debug)]
#[command(version, verbatim_doc_comment)]
struct Cli {
    /// Read the instance from a file; inline words are appended to it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = ["records", "table"])]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Degree window for ideal computations.
    #[arg(long)]
    window: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Inline config words, e.g. ring=composite(Z,Q) chain f=[0,1]
    words: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut text = String::new();
    if let Some(path) = &cli.config {
        match fs::read_to_string(path) {
            Ok(t) => text = t,
            Err(e) => {
                eprintln!("error: op=config cannot read {}: {e}", path.display());
                return ExitCode::from(ExitStatus::Error.code() as u8);
            }
        }
    }
    if !cli.words.is_empty() {
        if !text.is_empty() && !text.ends_with('\n') {
            text.push('\n');
        }
        text.push_str(&cli.words.join(" "));
    }
    let mut cfg = match parse_config(&text) {
        Ok(c) => c,
        Err(e) => {
            let source = cli.config.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "args".into());
            eprintln!("error: op=parse_config {source}:{e}");
            return ExitCode::from(ExitStatus::Error.code() as u8);
        }
    };
    if let Some(f) = &cli.format {
        cfg.options.format = f.parse::<Format>().expect("validated by clap");
    }
    if let Some(s) = cli.seed {
        cfg.options.seed = s;
    }
    if let Some(d) = cli.degree_bound {
        cfg.options.degree_bound = d;
    }
    if let Some(w) = cli.window {
        cfg.options.window = w;
    }
    let outcome = execute(&cfg);
    if outcome.status == ExitStatus::Error {
        eprint!("{}", outcome.text);
    } else if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &outcome.text) {
            eprintln!("error: op=write cannot write {}: {e}", path.display());
            return ExitCode::from(ExitStatus::Error.code() as u8);
        }
    } else {
        print!("{}", outcome.text);
    }
    ExitCode::from(outcome.status.code() as u8)
}

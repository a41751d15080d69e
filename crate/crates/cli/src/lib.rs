//! The `gtrep` command-line front end.

pub mod args;
pub mod cache;
pub mod commands;
pub mod error;
pub mod grid;
pub mod render;

use args::{Cli, Format};
use clap::Parser;
use commands::{Context, Outcome};
use error::CliError;
use serde_json::Value;
use std::io::Write;

pub use grid::{rank_three_tuples, verification_grid};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn parse(argv: &[String]) -> Result<Cli, clap::Error> {
    Cli::try_parse_from(argv)
}

fn flag_value(v: &Value) -> Option<String> {
    match v {
        Value::Null | Value::Bool(false) => None,
        Value::Bool(true) => Some(String::new()),
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Array(xs) => Some(xs.iter().filter_map(flag_value).collect::<Vec<_>>().join(",")),
        Value::Object(_) => Some(v.to_string()),
    }
}

/// Turns `{"command": "dim", "lambda": "1,0,-1"}` into argv, letting the
/// line override the outer `--format`, `--oracle` and `--jobs`.
fn line_argv(line: usize, text: &str, outer: &Cli) -> Result<Vec<String>, CliError> {
    let bad = |message: String| CliError::Input { line, message };
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let Value::Object(map) = v else {
        return Err(bad("expected a JSON object".into()));
    };
    let Some(Value::String(cmd)) = map.get("command") else {
        return Err(bad("missing \"command\"".into()));
    };
    let mut argv = vec!["gtrep".to_string()];
    let format = match map.get("format").and_then(flag_value) {
        Some(f) => f,
        None => match outer.format {
            Format::Json => "json".into(),
            Format::Tsv => "tsv".into(),
        },
    };
    argv.extend(["--format".into(), format]);
    let oracle = map.get("oracle").map(|o| o == &Value::Bool(true)).unwrap_or(outer.oracle);
    if oracle {
        argv.push("--oracle".into());
    }
    if let Some(j) = map.get("jobs").and_then(flag_value).or(outer.jobs.map(|j| j.to_string())) {
        argv.extend(["--jobs".into(), j]);
    }
    argv.push(cmd.clone());
    for (k, x) in &map {
        match k.as_str() {
            "command" | "format" | "oracle" | "jobs" => continue,
            "input" => return Err(bad("nested \"input\" is not allowed".into())),
            _ => {}
        }
        if let Some(val) = flag_value(x) {
            argv.push(format!("--{}", k.replace('_', "-")));
            if !matches!(x, Value::Bool(true)) {
                argv.push(val);
            }
        }
    }
    Ok(argv)
}

fn context(cli: &Cli) -> Context {
    Context {
        oracle: cli.oracle,
        jobs: cli.jobs,
        cache_dir: std::env::var_os(cache::CACHE_ENV).map(Into::into),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cmd = cli.command.as_ref().ok_or_else(|| CliError::Usage("missing subcommand".into()))?;
    commands::run(cmd, &context(cli))
}

fn status(r: &Result<Outcome, CliError>) -> i32 {
    match r {
        Ok(o) if o.mismatch => EXIT_MISMATCH,
        Ok(_) => EXIT_OK,
        Err(e) => e.exit_code(),
    }
}

fn batch(cli: &Cli, path: &std::path::Path, out: &mut dyn Write) -> Result<i32, CliError> {
    if cli.command.is_some() {
        return Err(CliError::Usage("--input cannot be combined with a subcommand".into()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut code = EXIT_OK;
    let mut first = true;
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let parsed = line_argv(k + 1, line, cli).and_then(|argv| {
            parse(&argv).map_err(|e| CliError::Input { line: k + 1, message: e.to_string().trim().to_string() })
        });
        let (format, result) = match parsed {
            Ok(c) => (c.format, execute(&c)),
            Err(e) => (cli.format, Err(e)),
        };
        code = code.max(status(&result));
        let value = match result {
            Ok(o) => o.value,
            Err(e) => e.to_json(),
        };
        let s = match format {
            Format::Json => render::json_line(&value),
            Format::Tsv if first => render::tsv(&value),
            Format::Tsv => format!("\n{}", render::tsv(&value)),
        };
        first = false;
        out.write_all(s.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(code)
}

/// Runs one invocation, writing reports to `out` and errors to `err`.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match parse(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let ce = CliError::Usage(e.to_string().trim().to_string());
            let _ = err.write_all(render::json_line(&ce.to_json()).as_bytes());
            return EXIT_USAGE;
        }
    };
    let result = match &cli.input {
        Some(path) => batch(&cli, path, out),
        None => {
            let r = execute(&cli);
            let code = status(&r);
            match r {
                Ok(o) => {
                    let s = match cli.format {
                        Format::Json => render::json_pretty(&o.value),
                        Format::Tsv => render::tsv(&o.value),
                    };
                    out.write_all(s.as_bytes()).map(|_| code).map_err(|e| CliError::Io(e.to_string()))
                }
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = err.write_all(render::json_line(&e.to_json()).as_bytes());
            e.exit_code()
        }
    }
}

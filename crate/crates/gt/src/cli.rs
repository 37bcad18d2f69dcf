//! Command implementations behind the `gt` binary.
//!
//! Exit codes: 0 success, 1 bad input (parse, validation, unbound names),
//! 2 usage errors (malformed flags, handled by the argument parser), 3 fuel
//! exhausted before a normal form was reached.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::expr::{eval, int_env, parse_expr, with_numeric_literals};
use crate::gen::{generate_module, manifest, PluginHost};
use crate::lambda::{
    parse_term, reduce_with_fuel, reduce_with_trace_and_fuel, show_term, FuelExhausted, Strategy,
    DEFAULT_FUEL,
};
use crate::model::parse_decls;

#[derive(Parser)]
#[command(name = "gt", version, about = "Transformation objects over algebraic datatypes")]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate datatype, handler-table, and traversal sources
    Gen(GenArgs),
    /// Normalize a lambda term
    Reduce(ReduceArgs),
    /// Render a lambda term as constructor-applied text
    Show(ShowArgs),
    /// Evaluate an arithmetic expression
    Eval(EvalArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Declaration file
    file: PathBuf,
    /// Output directory, created if missing
    #[arg(short, long, default_value = ".")]
    out: PathBuf,
    /// Plugins to apply to every declaration, comma separated
    #[arg(long = "with", value_name = "PLUGINS", value_delimiter = ',')]
    with: Vec<String>,
}

#[derive(Args)]
struct ReduceArgs {
    /// Lambda term, e.g. "(\x. x) y"
    term: String,
    /// Reduction strategy: bn, nor, bv, ao, ha, he, or hn
    #[arg(short, long, default_value = "nor")]
    strategy: String,
    /// Maximum number of beta steps; defaults to GT_FUEL or 10000
    #[arg(long)]
    fuel: Option<u64>,
    /// Print every intermediate term, one per line
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct ShowArgs {
    /// Lambda term
    term: String,
}

#[derive(Args)]
struct EvalArgs {
    /// Arithmetic expression over +, *, parentheses, variables, and integers
    expr: String,
    /// Variable binding, repeatable
    #[arg(short = 'b', long = "bind", value_name = "NAME=INT")]
    bind: Vec<String>,
}

enum CliError {
    /// Bad input: exit 1.
    Input(String),
    /// Filesystem trouble: exit 2.
    Io(String),
    /// Ran out of fuel: exit 3.
    Fuel(String),
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Reduce(a) => cmd_reduce(a),
        Cmd::Show(a) => cmd_show(a),
        Cmd::Eval(a) => cmd_eval(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Fuel(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn cmd_gen(a: GenArgs) -> Result<(), CliError> {
    let src = fs::read_to_string(&a.file)
        .map_err(|e| CliError::Io(format!("{}: {e}", a.file.display())))?;
    let clusters = parse_decls(&src).map_err(|e| CliError::Input(e.to_string()))?;
    let host = PluginHost::builtin();
    let units =
        generate_module(&clusters, &a.with, &host).map_err(|e| CliError::Input(e.to_string()))?;
    fs::create_dir_all(&a.out)
        .map_err(|e| CliError::Io(format!("{}: {e}", a.out.display())))?;
    let mut written = 0usize;
    for u in &units {
        for (name, text) in u.files() {
            let path = a.out.join(&name);
            fs::write(&path, text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            written += 1;
        }
    }
    let m = manifest(&units);
    let manifest_path = a.out.join("manifest.json");
    let mut text = serde_json::to_string_pretty(&m).expect("manifest is plain data");
    text.push('\n');
    fs::write(&manifest_path, text)
        .map_err(|e| CliError::Io(format!("{}: {e}", manifest_path.display())))?;
    println!(
        "wrote {written} source files and manifest.json for {} declarations to {}",
        units.len(),
        a.out.display()
    );
    Ok(())
}

/// The fuel budget: the `--fuel` flag wins, then `GT_FUEL`, then the default.
fn fuel_budget(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(fuel) = flag {
        return Ok(fuel);
    }
    match std::env::var("GT_FUEL") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            CliError::Input(format!("GT_FUEL must be a non-negative integer, got `{s}`"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_FUEL),
        Err(e) => Err(CliError::Input(format!("GT_FUEL: {e}"))),
    }
}

fn cmd_reduce(a: ReduceArgs) -> Result<(), CliError> {
    let strategy = Strategy::from_name(&a.strategy).ok_or_else(|| {
        CliError::Input(format!(
            "unknown strategy `{}`; expected one of bn, nor, bv, ao, ha, he, hn",
            a.strategy
        ))
    })?;
    let term = parse_term(&a.term).map_err(|e| CliError::Input(e.to_string()))?;
    let fuel = fuel_budget(a.fuel)?;
    if a.trace {
        match reduce_with_trace_and_fuel(strategy, &term, fuel) {
            Ok((result, steps)) => {
                for step in &steps {
                    println!("{}", show_term(step));
                }
                println!("{}", show_term(&result));
                Ok(())
            }
            Err(partial) => {
                for step in &partial.steps {
                    println!("{}", show_term(step));
                }
                Err(CliError::Fuel(format!(
                    "fuel exhausted after {} steps",
                    partial.steps.len()
                )))
            }
        }
    } else {
        match reduce_with_fuel(strategy, &term, fuel) {
            Ok(result) => {
                println!("{}", show_term(&result));
                Ok(())
            }
            Err(FuelExhausted) => {
                Err(CliError::Fuel(format!("fuel exhausted after {fuel} steps")))
            }
        }
    }
}

fn cmd_show(a: ShowArgs) -> Result<(), CliError> {
    let term = parse_term(&a.term).map_err(|e| CliError::Input(e.to_string()))?;
    println!("{}", show_term(&term));
    Ok(())
}

fn cmd_eval(a: EvalArgs) -> Result<(), CliError> {
    let expr = parse_expr(&a.expr).map_err(|e| CliError::Input(e.to_string()))?;
    let mut pairs: Vec<(String, i64)> = Vec::new();
    for binding in &a.bind {
        let Some((name, value)) = binding.split_once('=') else {
            return Err(CliError::Input(format!(
                "binding `{binding}` is not of the form NAME=INT"
            )));
        };
        let value: i64 = value.trim().parse().map_err(|_| {
            CliError::Input(format!("binding `{binding}`: value is not an integer"))
        })?;
        pairs.push((name.trim().to_string(), value));
    }
    let borrowed: Vec<(&str, i64)> = pairs.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let env = with_numeric_literals(int_env(&borrowed));
    match eval(&env, &expr) {
        Ok(n) => {
            println!("{n}");
            Ok(())
        }
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

//! `morsewalk` — walks on the quarter lattice, their statistics, catalogs,
//! intersection graphs, dominating sets, and SVG diagrams.
//!
//! Output is byte-identical for identical (argv, seed). Failures print a
//! JSON object with an `error` field to stdout and exit 2 (precondition),
//! 3 (resource cap), or 4 (invariant violation).

mod args;
mod dispatch;
mod errors;
mod render;
mod report;

use clap::Parser;
use errors::CliError;

fn main() {
    let cli = args::Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: args::Cli) -> i32 {
    let seed = match resolve_seed(cli.seed) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    if cli.threads > 0 {
        // Aggregation is order-independent, so pool shape never changes
        // output; a pre-existing global pool is fine to keep.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match dispatch::run(cli.command, seed) {
        Ok(artifact) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &artifact) {
                    return fail(&CliError::from(e));
                }
            } else {
                print!("{artifact}");
            }
            0
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &CliError) -> i32 {
    println!(
        "{}",
        serde_json::to_string_pretty(&e.to_json()).expect("error serialization")
    );
    e.exit_code()
}

/// `--seed`, else `$MORSEWALK_SEED`, else 0.
fn resolve_seed(arg: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = arg {
        return Ok(s);
    }
    match std::env::var("MORSEWALK_SEED") {
        Ok(v) => v.trim().parse::<u64>().map_err(|_| {
            CliError::Precondition(format!(
                "MORSEWALK_SEED must be an unsigned 64-bit integer, got {v:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(std::env::VarError::NotUnicode(_)) => Err(CliError::Precondition(
            "MORSEWALK_SEED is not valid unicode".into(),
        )),
    }
}

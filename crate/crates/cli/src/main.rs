use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use extended_brauer_cli::catalog::CATALOG;
use extended_brauer_cli::{load_config, run, CliError, RunOptions};

/// Build extended Brauer quotients and verify their correspondences on small
/// finite groups.
#[derive(Parser, Debug)]
#[command(name = "xbrauer", version)]
struct Args {
    /// Scenario config (JSON).
    #[arg(long, required_unless_present = "list_presets")]
    config: Option<PathBuf>,
    /// Run only this check; repeatable. Overrides the config's list.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Override the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Where to write the JSON report. Overrides the config's output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the group catalog and exit.
    #[arg(long)]
    list_presets: bool,
    /// Print each check's data to stdout.
    #[arg(long)]
    verbose: bool,
    /// Record wall-clock milliseconds per check. Reports are then no longer
    /// reproducible byte for byte.
    #[arg(long)]
    timings: bool,
    #[arg(long, hide = true)]
    debug_broken_constants: bool,
}

fn list_presets() {
    for p in CATALOG {
        let subs = p.subgroup_names().join(", ");
        println!(
            "{:<6} order {:>3}  degree {}  subgroups: {}",
            p.name,
            p.order,
            p.degree,
            if subs.is_empty() { "-" } else { &subs }
        );
    }
}

fn main_inner(args: Args) -> Result<bool, CliError> {
    let path = args.config.expect("clap enforces --config");
    let text = std::fs::read_to_string(&path)?;
    let mut config = load_config(&text)?;
    if !args.checks.is_empty() {
        config.checks = args.checks.clone();
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    let scenario = config.resolve()?;
    let opts = RunOptions { timings: args.timings, broken_constants: args.debug_broken_constants };
    let report = run(&scenario, opts);
    println!(
        "scenario {} (p = {}, e = {}, seed = {})",
        report.scenario, report.environment.p, report.environment.e, report.environment.seed
    );
    for c in &report.checks {
        match c.millis {
            Some(ms) => println!("  {:<10} {:<22} {ms} ms", c.name, c.status),
            None => println!("  {:<10} {}", c.name, c.status),
        }
        if args.verbose || c.status == "fail" {
            println!("    {}", c.data);
        }
    }
    if let Some(out) = args.out.or_else(|| config.output.map(PathBuf::from)) {
        std::fs::write(out, report.to_json())?;
    }
    Ok(!report.any_failed())
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_presets {
        list_presets();
        return ExitCode::SUCCESS;
    }
    match main_inner(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("xbrauer: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dp5_cli::args::{Cli, Command};
use dp5_cli::verify::{self, Options};
use dp5_cli::{commands, CliResult, Failure};

fn run_verify(cli: &Cli, args: &dp5_cli::args::VerifyArgs) -> CliResult<()> {
    let mut opts = Options { euler_exponent: args.euler_exponent, ..Options::default() };
    if let Some(n) = cli.mc_samples {
        opts.mc_samples = n;
    }
    let checks = verify::run(args.suite, &opts);
    let mut w = commands::output(cli)?;
    writeln!(w, "{:<30} {:<4}  {:>9}  detail", "check", "", "time")?;
    for c in &checks {
        writeln!(w, "{c}")?;
    }
    w.flush()?;
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Failure::Check(c.name.to_string())),
        None => Ok(()),
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::Runtime(e.into()))?;
    }
    match &cli.command {
        Command::Count => commands::count(cli),
        Command::Series => commands::series(cli),
        Command::Constants => commands::constants(cli),
        Command::Compare => commands::compare(cli),
        Command::Verify(args) => run_verify(cli, args),
        Command::Alpha => commands::alpha(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dp5: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vankampen_cli::{run_file, Command, Format, Options};

#[derive(Parser)]
#[command(
    name = "vankampen",
    version,
    about = "Van Kampen squares and reachable spans over finite sets and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the target pushout is a Van Kampen square.
    CheckVk(Common),
    /// Decide whether the target span is reachable from an instance over the pushout.
    CheckReachable(Common),
    /// Build the fibred amalgamation of the target span.
    Amalgamate(Common),
    /// List proper domain cycles of the target legs.
    Cycles(Common),
    /// Build a rear span that no instance over the pushout reaches.
    Counterexample(Common),
    /// Run the brute-force oracle.
    Oracle(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    scenario: String,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    budget_apex: Option<usize>,
    #[arg(long)]
    budget_fiber: Option<usize>,
    /// Cross-check against the brute-force oracle; disagreement is an error.
    #[arg(long)]
    oracle: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::CheckVk(c) => (Command::CheckVk, c),
        Cmd::CheckReachable(c) => (Command::CheckReachable, c),
        Cmd::Amalgamate(c) => (Command::Amalgamate, c),
        Cmd::Cycles(c) => (Command::Cycles, c),
        Cmd::Counterexample(c) => (Command::Counterexample, c),
        Cmd::Oracle(c) => (Command::Oracle, c),
    };
    let format = match common.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Dot => Format::Dot,
    };
    let opts = Options {
        budget_apex: common.budget_apex,
        budget_fiber: common.budget_fiber,
        oracle: common.oracle,
    };
    let outcome = run_file(command, &common.scenario, &opts)
        .and_then(|rep| Ok((rep.render(format)?, rep.exit_code())));
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

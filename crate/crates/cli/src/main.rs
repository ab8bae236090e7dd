use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{Outcome, Status};

#[derive(Parser)]
#[command(
    name = "vbraid",
    version,
    about = "Commutator subgroups of virtual and welded braid groups"
)]
struct Cli {
    #[command(flatten)]
    out: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the result to this file as well as to stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Directory for result files, named after the command.
    #[arg(long, env = "VBRAID_OUT_DIR", global = true)]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GroupArg {
    Vb,
    Wb,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RouteArg {
    Direct,
    Rules,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation of VBn or WBn.
    Present {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: u32,
    },
    /// Derive the presentation of the commutator subgroup.
    Derive {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: u32,
        /// Coset window `lo..hi`; omit for the parametric templates.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
        #[arg(long, value_enum, default_value_t = RouteArg::Direct)]
        route: RouteArg,
        /// Keep f(m,1) instead of replacing it by f(m,0)^-1.
        #[arg(long)]
        keep_f1: bool,
        /// Check the stated relations over the window and report tiers.
        #[arg(long)]
        compare_paper: bool,
    },
    /// Check the stated relations of one lemma, or ALL.
    Verify {
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-2..2")]
        m_range: (i64, i64),
    },
    /// Replay a Tietze reduction script.
    Tietze {
        #[arg(long)]
        script: String,
        /// Rank; defaults to the smallest rank the script accepts.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Abelian invariants of the commutator subgroup on a window.
    Abelianize {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-3..3")]
        window: (i64, i64),
        /// Use the Tietze-reduced presentation.
        #[arg(long)]
        reduced: bool,
    },
    /// Run the acceptance suite and the claim matrix.
    Report {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        tau_samples: usize,
        #[arg(long, default_value_t = 500)]
        snf_samples: usize,
    },
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad bound `{t}`: {e}"));
    Ok((num(a)?, num(b)?))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Present { group, n } => commands::present(*group, *n),
        Command::Derive {
            group,
            n,
            window,
            route,
            keep_f1,
            compare_paper,
        } => commands::derive(*group, *n, *window, *route, *keep_f1, *compare_paper),
        Command::Verify { lemma, n, m_range } => commands::verify(lemma, *n, *m_range),
        Command::Tietze { script, n } => commands::tietze(script, *n),
        Command::Abelianize {
            group,
            n,
            window,
            reduced,
        } => commands::abelianize(*group, *n, *window, *reduced),
        Command::Report {
            seed,
            tau_samples,
            snf_samples,
        } => commands::report(*seed, *tau_samples, *snf_samples),
    }
}

fn emit(out: &OutputArgs, outcome: &Outcome) -> anyhow::Result<()> {
    let body = match out.format {
        Format::Text => outcome.text.clone(),
        Format::Json => serde_json::to_string_pretty(&outcome.json)? + "\n",
    };
    print!("{body}");
    let ext = if out.format == Format::Json { "json" } else { "txt" };
    let mut targets = Vec::new();
    if let Some(p) = &out.output {
        targets.push(p.clone());
    }
    if let Some(dir) = &out.out_dir {
        std::fs::create_dir_all(dir)?;
        targets.push(dir.join(format!("{}.{ext}", outcome.stem)));
    }
    for t in targets {
        std::fs::write(&t, &body).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", t.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| emit(&cli.out, &o).map(|_| o));
    match result {
        Ok(o) => {
            for w in &o.warnings {
                eprintln!("warning: {w}");
            }
            match o.status {
                Status::Pass => ExitCode::SUCCESS,
                Status::Mismatch => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superbranch::{Content, Partition};

#[derive(Parser, Debug)]
#[command(name = "superbranch", version, about = "Branching rules and highest weight vectors for gl(p|q)")]
struct Cli {
    /// Output format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Skew Kostka number K_{F/D, alpha}.
    Kostka(RunConfig),
    /// Littlewood-Richardson coefficient c^F_{D,E}.
    Lr(RunConfig),
    /// Branching table of L^F_{p|q} restricted to a subalgebra.
    Branch {
        #[arg(long, value_enum)]
        to: BranchTo,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Nonzero weight multiplicities of L^F_{p|q}.
    Weights(RunConfig),
    /// Dimension of L^F_{p|q}.
    Dim(RunConfig),
    /// Tableau pairs, determinants and leading monomials for (F, D, alpha, beta).
    Hwv {
        /// Largest product expanded in full.
        #[arg(long, default_value_t = 50_000)]
        expand_limit: usize,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Checks the tableau basis for (F, D, alpha, beta); every D when --D is omitted.
    Verify {
        #[arg(long, default_value_t = 50_000)]
        expand_limit: usize,
        #[arg(long, default_value_t = 20_000)]
        component_limit: usize,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Compares predicted multiplicities with raising-operator kernels.
    Oracle {
        #[arg(long, value_enum, default_value_t = OracleTo::M)]
        to: OracleTo,
        /// Largest |F| in the window.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[command(flatten)]
        config: RunConfig,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchTo {
    /// gl(r|s) + gl(r'|s')
    Pair,
    /// gl_p + gl_q
    Even,
    /// gl(r|s) + torus of gl(r'|s')
    M,
    /// gl(r|s)
    Sub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleTo {
    M,
    Pair,
}

#[derive(Args, Clone, Debug, Default)]
pub struct RunConfig {
    #[arg(long = "F")]
    pub f: Option<Partition>,
    #[arg(long = "D")]
    pub d: Option<Partition>,
    #[arg(long = "E")]
    pub e: Option<Partition>,
    #[arg(long)]
    pub alpha: Option<Content>,
    #[arg(long)]
    pub beta: Option<Content>,
    /// Rank of the even factor; defaults to the depth of F.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Kostka(c) => commands::cmd_kostka(&c),
        Command::Lr(c) => commands::cmd_lr(&c),
        Command::Branch { to, config } => commands::cmd_branch(&config, to),
        Command::Weights(c) => commands::cmd_weights(&c),
        Command::Dim(c) => commands::cmd_dim(&c),
        Command::Hwv { expand_limit, config } => commands::cmd_hwv(&config, expand_limit),
        Command::Verify { expand_limit, component_limit, config } => {
            commands::cmd_verify(&config, expand_limit, component_limit)
        }
        Command::Oracle { to, max_size, config } => commands::cmd_oracle(&config, to, max_size),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
                Format::Text => print!("{}", out.text),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

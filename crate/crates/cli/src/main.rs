mod commands;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subsetcx::boolean::DEFAULT_RANGE_CAP;
use subsetcx::bounds::DEFAULT_MONOID_CAP;
use subsetcx::determinize::DEFAULT_MAX_STATES;

/// Subset construction and a priori bounds on its size.
#[derive(Parser, Debug)]
#[command(name = "subsetcx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Abort the subset construction after this many states.
    #[arg(long, global = true, default_value_t = NonZeroUsize::new(DEFAULT_MAX_STATES).unwrap())]
    pub max_states: NonZeroUsize,
    /// Maximum number of transition-monoid elements to enumerate.
    #[arg(long, global = true, default_value_t = NonZeroUsize::new(DEFAULT_MONOID_CAP).unwrap())]
    pub monoid_cap: NonZeroUsize,
    /// Largest state count for which matrix ranges are enumerated.
    #[arg(long, global = true, default_value_t = NonZeroUsize::new(DEFAULT_RANGE_CAP).unwrap())]
    pub range_cap: NonZeroUsize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Reject ε-transitions instead of removing them.
    #[arg(long, global = true)]
    pub no_eps_removal: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    /// JSON.
    Tree,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a named automaton family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the subset construction and print the resulting DFA.
    Determinize { input: PathBuf },
    /// Print the minimal DFA.
    Minimize { input: PathBuf },
    /// Print the number of states of the minimal DFA.
    StateComplexity { input: PathBuf },
    /// Compute every upper bound and check it against the subset automaton.
    Bounds { input: PathBuf },
    /// Decide universality; exit 1 with a rejected word if not universal.
    Universal { input: PathBuf },
    /// Decide language equality; exit 1 with a distinguishing word if different.
    Equiv { a: PathBuf, b: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// One-state DFA accepting every word over {a,b}.
    Universal,
    /// n-state Moore automaton.
    Moore {
        #[arg(long)]
        n: usize,
    },
    /// n-state Meyer–Fischer automaton.
    Mf {
        #[arg(long)]
        n: usize,
    },
    /// Moore automaton with its two wrap-around edges relabelled to `c`.
    MooreMod {
        #[arg(long)]
        n: usize,
    },
    /// Seeded random NFA.
    Random(RandomArgs),
    /// Union gadget built around an automaton over {a,b}.
    GadgetUnion { input: PathBuf },
    /// Meyer–Fischer gadget built around an automaton over {a,b}.
    GadgetMf {
        input: PathBuf,
        /// States of the Meyer–Fischer part.
        #[arg(long)]
        t: usize,
    },
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    /// Alphabet size.
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    #[arg(long, default_value_t = 0.3)]
    pub initial_density: f64,
    #[arg(long, default_value_t = 0.3)]
    pub final_density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub trim: bool,
    #[arg(long)]
    pub total: bool,
    #[arg(long)]
    pub codeterministic: bool,
    #[arg(long, default_value_t = subsetcx::generators::DEFAULT_RETRIES)]
    pub retries: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Gen { family } => commands::gen(g, family),
        Command::Determinize { input } => commands::determinize(g, input),
        Command::Minimize { input } => commands::minimize(g, input),
        Command::StateComplexity { input } => commands::state_complexity(g, input),
        Command::Bounds { input } => commands::bounds(g, input),
        Command::Universal { input } => commands::universal(g, input),
        Command::Equiv { a, b } => commands::equiv(g, a, b),
    };
    match result {
        Ok(code) => code.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code().into()
        }
    }
}

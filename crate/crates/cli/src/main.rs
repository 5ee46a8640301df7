use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use prelie_cli::commands::{self, CohomologyOptions, Flavor, ModuleChoice};
use prelie_cli::{Global, Outcome};

/// Exact computations with finite-dimensional pre-Lie algebras.
#[derive(Parser)]
#[command(name = "prelie-coh", version)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verifier matching the document kind
    Validate { file: PathBuf },
    /// Dimensions of H^1..H^N for an algebra and a module
    Cohomology {
        file: PathBuf,
        /// Highest degree
        #[arg(long = "n", default_value_t = 3)]
        n: usize,
        /// Print cocycle representatives
        #[arg(long)]
        reps: bool,
        /// Compare with the Lie cohomology of Hom(g, V)
        #[arg(long)]
        phi: bool,
        /// Check d∘d = 0 before reporting
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// The 3-cocycle of a crossed module extension
    Tmap {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Sections::Default)]
        sections: Sections,
    },
    /// Convert a crossed module along one of the functors
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        from: FromArg,
    },
    /// Enumerate rooted trees or multiply two of them
    Trees {
        #[arg(long)]
        labels: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["T1", "T2"])]
        product: Option<Vec<String>>,
    },
    /// Decide whether two cochains differ by a coboundary
    Cohomologous {
        file: PathBuf,
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
    },
}

#[derive(clap::Args)]
struct ModuleArgs {
    /// Use the trivial module of this dimension (prelie documents only)
    #[arg(long, conflicts_with = "regular")]
    trivial: Option<usize>,
    /// Use the regular module (prelie documents only)
    #[arg(long)]
    regular: bool,
}

impl ModuleArgs {
    fn choice(&self) -> ModuleChoice {
        ModuleChoice {
            trivial: self.trivial,
            regular: self.regular,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Sections {
    Default,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum FromArg {
    Prelie,
    Rblie,
    Dendriform,
}

fn dispatch(cli: Cli) -> Outcome {
    let g = Global {
        json: cli.json,
        seed: cli.seed,
    };
    match cli.command {
        Command::Validate { file } => commands::validate(&file, g),
        Command::Cohomology {
            file,
            n,
            reps,
            phi,
            verify,
            module,
        } => commands::cohomology_cmd(
            &file,
            module.choice(),
            CohomologyOptions {
                max_degree: n,
                reps,
                phi,
                verify,
            },
            g,
        ),
        Command::Tmap { file, sections } => {
            commands::tmap_cmd(&file, matches!(sections, Sections::Random), g)
        }
        Command::Convert { file, from } => {
            let flavor = match from {
                FromArg::Prelie => Flavor::PreLie,
                FromArg::Rblie => Flavor::RbLie,
                FromArg::Dendriform => Flavor::Dendriform,
            };
            commands::convert_cmd(&file, flavor)
        }
        Command::Trees {
            labels,
            degree,
            product,
        } => {
            let pair = product.as_ref().map(|p| (p[0].as_str(), p[1].as_str()));
            commands::trees_cmd(labels, degree, pair, g)
        }
        Command::Cohomologous {
            file,
            first,
            second,
            module,
        } => commands::cohomologous_cmd(&file, &first, &second, module.choice(), g),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    let outcome = dispatch(cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code() as u8)
}

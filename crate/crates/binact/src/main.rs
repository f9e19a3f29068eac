use std::path::PathBuf;

use clap::{Parser, Subcommand};

use binact::commands::{self, CmdFailure, MakeKind};

#[derive(Parser)]
#[command(
    name = "binact",
    version,
    about = "Finite binary group actions: enumeration, verification, classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or list the invertible binary operation tables on a small set
    H2 {
        /// Carrier size n
        #[arg(long)]
        size: usize,
        /// Print only the number of tables (the default mode)
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print every table as JSON rows, in lexicographic order
        #[arg(long)]
        list: bool,
        /// Enumeration bound override (at most 4)
        #[arg(long = "max-n", default_value_t = 3)]
        max_n: usize,
    },
    /// Validate an action file and report distributivity, transitivity,
    /// kernel, and effectiveness
    Verify {
        /// Action file (JSON)
        file: PathBuf,
    },
    /// Construct a built-in action and emit it in the action file schema
    Make {
        /// Which construction to build
        #[arg(value_enum)]
        kind: MakeKind,
        /// Built-in group name (Z1..Z12, V4, S3, S4, D4, Q8) or a group file path
        #[arg(long)]
        group: String,
        /// Subgroup members for kind=coset, e.g. --subgroup 0,2
        #[arg(long, value_delimiter = ',')]
        subgroup: Option<Vec<usize>>,
        /// Write the action file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the coset model of a distributive transitive action
    Classify {
        /// Action file (JSON)
        file: PathBuf,
        /// Point whose stationary subgroup anchors the model
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
    },
    /// Run the full verification battery on the built-in fixtures
    Check {
        /// Element bound for subgroup generation worklists
        #[arg(long = "closure-cap", default_value_t = binact_core::DEFAULT_CLOSURE_CAP)]
        closure_cap: usize,
    },
}

fn main() {
    // Die on a closed pipe like other line tools instead of panicking in print!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(3);
        }
    };
    let result = match cli.command {
        Command::H2 {
            size,
            count: _,
            list,
            max_n,
        } => commands::cmd_h2(size, list, max_n),
        Command::Verify { file } => commands::cmd_verify(&file),
        Command::Make {
            kind,
            group,
            subgroup,
            out,
        } => commands::cmd_make(kind, &group, subgroup.as_deref(), out.as_deref()),
        Command::Classify { file, basepoint } => commands::cmd_classify(&file, basepoint),
        Command::Check { closure_cap } => commands::cmd_check(closure_cap),
    };
    match result {
        Ok(stdout) => print!("{stdout}"),
        Err(CmdFailure {
            code,
            stdout,
            stderr,
        }) => {
            if let Some(payload) = stdout {
                print!("{payload}");
            }
            if let Some(message) = stderr {
                eprintln!("{message}");
            }
            std::process::exit(code);
        }
    }
}

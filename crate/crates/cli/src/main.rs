use std::path::PathBuf;
use std::process::ExitCode;

use blockfree_core::asymptotics::check_admissible;
use blockfree_core::exact::{count_avoiding, practical_counts_from, rough_table, TableCache};
use blockfree_core::oracle::{
    count_avoiding_bruteforce, count_practical_bruteforce, ENUMERATION_CAP,
};
use blockfree_core::{build_table, BlockSizeSet, Error, GapConstants, TableKind};
use clap::{Parser, Subcommand, ValueEnum};

mod estimate;
mod render;
mod verify;

use estimate::EstimateReport;
use render::Format;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INADMISSIBLE: u8 = 3;

/// Exact counts and saddle-point estimates for set partitions whose block
/// sizes avoid a given set.
#[derive(Parser, Debug)]
#[command(name = "blockfree", version)]
struct Cli {
    /// Directory for the rough-table cache.
    #[arg(
        long,
        global = true,
        env = "BLOCKFREE_CACHE_DIR",
        default_value = ".blockfree-cache"
    )]
    cache_dir: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a proportion table (1: no singletons, 2: no blocks of size 1 or 2, 3: impractical).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Rows run over n = 2^2, 2^4, ... up to 2^max_exponent.
        #[arg(long)]
        max_exponent: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Allow exponents beyond the default cap.
        #[arg(long)]
        slow: bool,
    },
    /// Exact count of partitions of an n-set avoiding the block sizes in --set.
    Count {
        n: usize,
        /// `empty`, an interval `1..m`, or a list `1,3,7`.
        #[arg(long, default_value = "empty")]
        set: BlockSizeSet,
        /// Bell number B_n (ignores --set).
        #[arg(long, conflicts_with_all = ["practical", "impractical"])]
        bell: bool,
        /// Practical partitions P_n.
        #[arg(long, conflicts_with = "impractical")]
        practical: bool,
        /// Impractical partitions I_n.
        #[arg(long)]
        impractical: bool,
    },
    /// Saddle-point estimates at n for the set --set.
    Estimate {
        n: u64,
        #[arg(long, default_value = "empty")]
        set: BlockSizeSet,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0.18)]
        delta1: f64,
        #[arg(long, default_value_t = 2.16)]
        delta2: f64,
        /// Report even when S meets the gap [delta1 r, delta2 r].
        #[arg(long)]
        allow_inadmissible: bool,
    },
    /// Compare the recurrence with exhaustive enumeration (n <= 13).
    Oracle {
        n: usize,
        #[arg(long, default_value = "empty")]
        set: BlockSizeSet,
        /// Compare practical counts instead.
        #[arg(long)]
        practical: bool,
    },
    /// Run the self-checks.
    Verify {
        #[arg(value_enum, default_value_t = verify::Level::Quick)]
        level: verify::Level,
    },
    /// Inspect or clear the rough-table cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CacheAction {
    Inspect,
    Clear,
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inadmissible { .. } => EXIT_INADMISSIBLE,
            Error::BlockSetSyntax { .. }
            | Error::BlockSizeOutOfRange(_)
            | Error::EnumerationCap { .. }
            | Error::GapConstants { .. }
            | Error::InvalidArgument(_) => EXIT_USAGE,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let cache = TableCache::new(&cli.cache_dir);
    match cli.command {
        Command::Table {
            which,
            max_exponent,
            format,
            slow,
        } => {
            let kind = TableKind::from_number(which).expect("clap restricts the range");
            let exponent = max_exponent.unwrap_or(kind.default_max_exponent());
            check_table_budget(kind, exponent, slow, &cache)?;
            let rows = build_table(kind, exponent, Some(&cache))?;
            print!("{}", render::render(kind, &rows, format));
            Ok(0)
        }
        Command::Count {
            n,
            set,
            bell,
            practical,
            impractical,
        } => {
            let value = if practical || impractical {
                let table = rough_table(n, Some(&cache))?;
                let counts = practical_counts_from(&table, n)?;
                if practical {
                    counts.practical[n].clone()
                } else {
                    counts.impractical[n].clone()
                }
            } else if bell {
                blockfree_core::bell(n)
            } else {
                count_avoiding(n, &set)
            };
            println!("{value}");
            Ok(0)
        }
        Command::Estimate {
            n,
            set,
            json,
            delta1,
            delta2,
            allow_inadmissible,
        } => {
            if n == 0 {
                return Err(Error::InvalidArgument("estimate needs n >= 1".into()).into());
            }
            let gap = GapConstants::new(delta1, delta2)?;
            if !allow_inadmissible {
                check_admissible(&set, n, gap)?;
            }
            let report = EstimateReport::build(n, &set, gap)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(0)
        }
        Command::Oracle { n, set, practical } => {
            if n > ENUMERATION_CAP {
                return Err(Error::EnumerationCap {
                    n,
                    cap: ENUMERATION_CAP,
                }
                .into());
            }
            let (brute, recurrence) = if practical {
                let table = rough_table(n, None)?;
                let counts = practical_counts_from(&table, n)?;
                (count_practical_bruteforce(n)?, counts.practical[n].clone())
            } else {
                (count_avoiding_bruteforce(n, &set)?, count_avoiding(n, &set))
            };
            println!("enumeration  {brute}");
            println!("recurrence   {recurrence}");
            let agree = brute == recurrence;
            println!("agree        {agree}");
            Ok(if agree { 0 } else { EXIT_VERIFY })
        }
        Command::Verify { level } => {
            let ok = verify::run(level, &cache, &mut std::io::stdout());
            Ok(if ok { 0 } else { EXIT_VERIFY })
        }
        Command::Cache { action } => {
            match action {
                CacheAction::Inspect => match cache.inspect()? {
                    Some(info) => println!(
                        "{}: rough table up to n = {} ({} bytes)",
                        info.path.display(),
                        info.n_max,
                        info.bytes
                    ),
                    None => println!("no usable cache at {}", cache.file_path().display()),
                },
                CacheAction::Clear => {
                    if cache.clear()? {
                        println!("removed {}", cache.file_path().display());
                    } else {
                        println!("nothing to remove");
                    }
                }
            }
            Ok(0)
        }
    }
}

fn check_table_budget(
    kind: TableKind,
    exponent: u32,
    slow: bool,
    cache: &TableCache,
) -> Result<(), Failure> {
    let cap = kind.default_max_exponent();
    if exponent <= cap || slow {
        return Ok(());
    }
    let n_max = 1u64 << (exponent - exponent % 2);
    if kind == TableKind::Impractical {
        if let Ok(Some(info)) = cache.inspect() {
            if info.n_max as u64 >= n_max {
                return Ok(());
            }
        }
    }
    let cost = match kind {
        TableKind::Impractical => format!(
            "the rough triangle up to n = {n_max} costs about {}x the default run (cubic in n)",
            (n_max / (1u64 << cap)).pow(3)
        ),
        _ => format!(
            "exact counts up to n = {n_max} cost about {}x the default run (quadratic in n, with growing integers)",
            (n_max / (1u64 << cap)).pow(2)
        ),
    };
    Err(Failure {
        code: EXIT_USAGE,
        message: format!(
            "exponent {exponent} is beyond the default cap {cap} for {kind}; {cost}. Re-run with --slow to proceed."
        ),
    })
}

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use subshift::presentation::{family_relators, Relator, RelatorFamily};
use subshift::{
    bispecial_oracle, build_rauzy, eta_prefix, factor_set, left_special_oracle, lysenok_relators,
    render_complexity_table, right_special_formula, right_special_oracle, verify_range, Alphabet, Capacity,
    ComplexityProfile, TableFormat,
};

/// Exit codes: 0 success, 1 verification mismatch, 2 bad arguments,
/// 3 capacity exceeded, 4 I/O failure.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("verification failed")]
    Mismatch,
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Capacity(subshift::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch => 1,
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

impl From<subshift::Error> for CliError {
    fn from(err: subshift::Error) -> Self {
        match err {
            subshift::Error::Capacity { .. } => CliError::Capacity(err),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "subshift",
    version,
    about = "Factor complexity, special factors and Rauzy graphs of the a->axa, x->y, y->z, z->x subshift"
)]
struct Cli {
    /// Largest number of letters any generated word may hold.
    #[arg(long, global = true, default_value_t = Capacity::DEFAULT.get() as u64,
          value_parser = clap::value_parser!(u64).range(1024..))]
    cap: u64,

    /// Write the main output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a prefix of the fixed point.
    Eta {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
    },
    /// Tabulate the complexity function, formula next to brute force.
    Complexity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_length: u64,
        /// Also check complexity, first differences and right-special factors
        /// against brute force; exit 1 on the first mismatch.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List the special factors of one length, `<word> TAB <extensions>`.
    Special {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        /// Where right-special factors come from.
        #[arg(long, value_enum, default_value_t = Source::Oracle)]
        source: Source,
    },
    /// Build the Rauzy graph of one order.
    Rauzy {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Write the graph in DOT format to FILE.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Print `order n: V=.. E=.. right_branch=.. left_branch=..`.
        #[arg(long)]
        stats: bool,
        /// Print the maximal non-branching paths between branch vertices.
        #[arg(long)]
        segments: bool,
    },
    /// Emit relators of Lysenok's presentation, one per line.
    Relators {
        #[arg(long, value_enum, default_value_t = FamilyArg::All)]
        family: FamilyArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..))]
        max_k: u32,
        /// Prefix each line with `static:` or `<family>:<k>:`.
        #[arg(long)]
        annotate: bool,
    },
    /// Dump all factors of one length in alphabet order.
    Factors {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Right,
    Left,
    Bi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ad4,
    Adacac4,
    All,
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, text),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn to_usize(value: u64) -> Result<usize, CliError> {
    usize::try_from(value).map_err(|_| CliError::Usage(format!("{value} does not fit in memory")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cap = Capacity::new(to_usize(cli.cap)?);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Eta { length } => {
            let prefix = eta_prefix(to_usize(length)?, cap)?;
            emit(out, &format!("{}\n", prefix.word()))
        }
        Command::Complexity { max_length, check, format } => {
            let profile = ComplexityProfile::from_oracle(max_length, cap)?;
            let format = match format {
                Format::Table => TableFormat::Table,
                Format::Csv => TableFormat::Csv,
                Format::Tsv => TableFormat::Tsv,
            };
            let mut text = render_complexity_table(&profile, format);
            let mut verdict = Ok(());
            if check {
                let report = verify_range(max_length, cap)?;
                text.push_str(&format!("{report}\n"));
                if !report.passed() {
                    verdict = Err(CliError::Mismatch);
                }
            }
            emit(out, &text)?;
            verdict
        }
        Command::Special { length, side, source } => {
            let length = to_usize(length)?;
            let lines: Vec<String> = match (side, source) {
                (Side::Right, Source::Formula) => right_special_formula(length as u64, cap)?
                    .pairs()
                    .iter()
                    .map(|(word, exts)| format!("{word}\t{}", exts.render(Alphabet::AXYZ)))
                    .collect(),
                (_, Source::Formula) => {
                    return Err(CliError::Usage("--source formula is only available with --side right".into()))
                }
                (Side::Right, Source::Oracle) => right_special_oracle(length, cap)?
                    .iter()
                    .map(|r| format!("{}\t{}", r.word, r.right.render(Alphabet::AXYZ)))
                    .collect(),
                (Side::Left, Source::Oracle) => left_special_oracle(length, cap)?
                    .iter()
                    .map(|r| format!("{}\t{}", r.word, r.left.render(Alphabet::AXYZ)))
                    .collect(),
                (Side::Bi, Source::Oracle) => bispecial_oracle(length, cap)?
                    .iter()
                    .map(|r| {
                        format!("{}\t{}\t{}", r.word, r.right.render(Alphabet::AXYZ), r.left.render(Alphabet::AXYZ))
                    })
                    .collect(),
            };
            emit(out, &lines.iter().map(|l| format!("{l}\n")).collect::<String>())
        }
        Command::Rauzy { order, dot, stats, segments } => {
            let graph = build_rauzy(to_usize(order)?, cap)?;
            let mut text = String::new();
            if stats {
                text.push_str(&graph.stats_line());
                text.push('\n');
            }
            if segments {
                text.push_str(&graph.segment_summary());
            }
            match dot {
                Some(path) => write_file(&path, &graph.to_dot())?,
                None if !stats && !segments => text.push_str(&graph.to_dot()),
                None => {}
            }
            emit(out, &text)
        }
        Command::Relators { family, max_k, annotate } => {
            let relators: Vec<Relator> = match family {
                FamilyArg::Ad4 => family_relators(RelatorFamily::Ad4, max_k, cap)?,
                FamilyArg::Adacac4 => family_relators(RelatorFamily::Adacac4, max_k, cap)?,
                FamilyArg::All => lysenok_relators(max_k, cap)?,
            };
            let text: String = relators
                .iter()
                .map(|r| if annotate { format!("{}\n", r.annotated()) } else { format!("{}\n", r.word) })
                .collect();
            emit(out, &text)
        }
        Command::Factors { length } => emit(out, &factor_set(to_usize(length)?, cap)?.dump()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !matches!(err, CliError::Mismatch) {
                eprintln!("error: {err}");
            }
            ExitCode::from(err.exit_code())
        }
    }
}

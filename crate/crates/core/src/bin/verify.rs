use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use glmcr::harness::{parse_rational, run_suite, Format, Suite, SuiteConfig};
use glmcr::monodromy::{AuxOrder, OddSign};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    Plain,
    Koszul,
    Flipped,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Descending,
    Ascending,
}

/// Exact-arithmetic verification suites for the gl(2|1) monodromy algebra.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// scalars, dwpf, lemmas, rtt, mcr-rows, mcr-columns, xy, bethe, dual-bethe or all
    #[arg(long, env = "VERIFY_SUITE", default_value = "all")]
    suite: String,

    /// Largest chain length; chain suites run L = 1..=sites
    #[arg(long, env = "VERIFY_SITES", default_value_t = 2)]
    sites: usize,

    /// Coupling constant as p/q
    #[arg(
        long,
        env = "VERIFY_C",
        default_value = "1",
        allow_hyphen_values = true
    )]
    c: String,

    #[arg(long, env = "VERIFY_SEED", default_value_t = 0)]
    seed: u64,

    /// Bound on the summed variable-set sizes per case
    #[arg(long, env = "VERIFY_MAX_SET_SIZE", default_value_t = 4)]
    max_set_size: usize,

    /// Parameter draws per configuration
    #[arg(long, env = "VERIFY_DRAWS", default_value_t = 5)]
    draws: usize,

    #[arg(long, env = "VERIFY_FORMAT", value_enum, default_value = "text")]
    format: FormatArg,

    /// Write the report here instead of standard output
    #[arg(long, env = "VERIFY_OUT")]
    out: Option<PathBuf>,

    /// Record per-case wall-clock time
    #[arg(long, env = "VERIFY_TIMING")]
    timing: bool,

    /// Sign attached to odd monodromy entries
    #[arg(long, env = "VERIFY_ODD_SIGN", value_enum, default_value = "koszul")]
    odd_sign: SignArg,

    /// Order of the R-matrix factors in the monodromy product
    #[arg(
        long,
        env = "VERIFY_AUX_ORDER",
        value_enum,
        default_value = "descending"
    )]
    aux_order: OrderArg,
}

fn config(cli: &Cli) -> glmcr::Result<SuiteConfig> {
    Ok(SuiteConfig {
        suite: cli.suite.parse::<Suite>()?,
        sites: cli.sites,
        c: parse_rational(&cli.c)?,
        seed: cli.seed,
        max_set_size: cli.max_set_size,
        draws: cli.draws,
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        timing: cli.timing,
        sign: match cli.odd_sign {
            SignArg::Plain => OddSign::Plain,
            SignArg::Koszul => OddSign::Koszul,
            SignArg::Flipped => OddSign::Flipped,
        },
        order: match cli.aux_order {
            OrderArg::Descending => AuxOrder::Descending,
            OrderArg::Ascending => AuxOrder::Ascending,
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match config(&cli).and_then(|cfg| Ok((run_suite(&cfg)?, cfg.format))) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    };
    let (report, format) = report;
    let text = report.render(format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("verify: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            if !report.all_passed() {
                for r in report.failures() {
                    eprintln!("FAIL {} {}", r.case_id, r.detail);
                }
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

//! Command-line surface: sequence terms, coefficient triangles, single
//! family counts, and the check suite.
//!
//! Exit codes: 0 success, 1 usage error, 2 check-suite mismatch, 3 refused
//! enumeration budget.

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use fnomial::verify::{self, VerifyConfig};
use fnomial::{
    colored_total, dag_count, fnomial, inverse_triangle, multi_fnomial, n_alpha, row_sum, triangle,
    Alpha, ColorComposition, Count,
};

#[derive(Parser)]
#[command(
    name = "fnomial",
    version,
    about = "Tiling-sequence F-nomial coefficients and the labeled multigraph families they count"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms 0..=max-n of the sequence with n_F = n*alpha^(n-1)
    Sequence {
        /// Multiplicity parameter (positive integer)
        #[arg(long)]
        alpha: Alpha,
        /// Largest index to print
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the coefficient triangle, or its inverse
    Triangle {
        /// Multiplicity parameter (positive integer)
        #[arg(long)]
        alpha: Alpha,
        /// Largest row to print
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print the inverse matrix instead of the forward one
        #[arg(long)]
        inverse: bool,
    },
    /// Print one count from a named graph family
    Count {
        /// Multiplicity parameter (positive integer)
        #[arg(long)]
        alpha: Alpha,
        /// One of: bipartite(n,k), colored(b1,b2,...), dag(n),
        /// colored-total(n,k), row-sum(n)
        #[arg(long)]
        family: Family,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the identity and enumeration check suite
    Verify {
        /// Alpha values to check (repeat the flag or comma-separate)
        #[arg(long = "alpha", value_delimiter = ',', default_value = "1,2,3")]
        alphas: Vec<Alpha>,
        /// Largest instance space an enumeration check may select
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Plain,
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Debug)]
enum Family {
    Bipartite { n: u64, k: u64 },
    Colored { sizes: Vec<u64> },
    Dag { n: u64 },
    ColoredTotal { n: u64, colors: u64 },
    RowSum { n: u64 },
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || {
            format!(
                "unrecognized family '{s}'; expected bipartite(n,k), colored(b1,b2,...), \
                 dag(n), colored-total(n,k), or row-sum(n)"
            )
        };
        let trimmed = s.trim();
        let (name, rest) = trimmed.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let values: Vec<u64> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|v| v.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        match (name.trim(), values.len()) {
            ("bipartite", 2) => Ok(Family::Bipartite {
                n: values[0],
                k: values[1],
            }),
            ("colored", _) => Ok(Family::Colored { sizes: values }),
            ("dag", 1) => Ok(Family::Dag { n: values[0] }),
            ("colored-total", 2) => Ok(Family::ColoredTotal {
                n: values[0],
                colors: values[1],
            }),
            ("row-sum", 1) => Ok(Family::RowSum { n: values[0] }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Bipartite { n, k } => write!(f, "bipartite({n},{k})"),
            Family::Colored { sizes } => {
                let parts: Vec<String> = sizes.iter().map(u64::to_string).collect();
                write!(f, "colored({})", parts.join(","))
            }
            Family::Dag { n } => write!(f, "dag({n})"),
            Family::ColoredTotal { n, colors } => write!(f, "colored-total({n},{colors})"),
            Family::RowSum { n } => write!(f, "row-sum({n})"),
        }
    }
}

enum Failure {
    Usage(String),
    Budget(fnomial::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(message) => message.fmt(f),
            Failure::Budget(err) => err.fmt(f),
        }
    }
}

impl From<fnomial::Error> for Failure {
    fn from(err: fnomial::Error) -> Self {
        match err {
            fnomial::Error::BudgetExceeded { .. } => Failure::Budget(err),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let requested = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if requested {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Sequence {
            alpha,
            max_n,
            format,
        } => {
            println!("{}", sequence_text(alpha, max_n, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Triangle {
            alpha,
            max_n,
            format,
            inverse,
        } => {
            println!("{}", triangle_text(alpha, max_n, inverse, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            alpha,
            family,
            format,
        } => {
            println!("{}", count_text(alpha, &family, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { alphas, budget } => {
            let config = VerifyConfig { alphas, budget };
            let report = verify::run(&config)?;
            for check in &report.checks {
                let status = if check.passed { "ok  " } else { "FAIL" };
                println!(
                    "{status} {:<26} {} ({:.1?})",
                    check.name, check.detail, check.elapsed
                );
            }
            let total = report.checks.len();
            if report.all_passed() {
                println!("{total} checks passed");
                Ok(ExitCode::SUCCESS)
            } else {
                let failed = report.checks.iter().filter(|c| !c.passed).count();
                println!("{failed} of {total} checks FAILED");
                Ok(ExitCode::from(2))
            }
        }
    }
}

fn decimals(values: &[Count]) -> Vec<String> {
    values.iter().map(Count::to_string).collect()
}

fn sequence_text(alpha: Alpha, max_n: u64, format: Format) -> String {
    let terms: Vec<Count> = (0..=max_n).map(|n| n_alpha(alpha, n)).collect();
    match format {
        Format::Plain => decimals(&terms).join(" "),
        Format::Csv => decimals(&terms).join(","),
        Format::Bfile => terms
            .iter()
            .enumerate()
            .map(|(n, term)| format!("{n} {term}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::json!({
            "alpha": alpha.get(),
            "terms": decimals(&terms),
        })
        .to_string(),
    }
}

fn triangle_text(
    alpha: Alpha,
    max_n: u64,
    inverse: bool,
    format: Format,
) -> Result<String, Failure> {
    let rows: Vec<Vec<Count>> = if inverse {
        inverse_triangle(alpha, max_n).rows().to_vec()
    } else {
        triangle(alpha, max_n).rows().to_vec()
    };
    let joined = |separator: &str| {
        rows.iter()
            .map(|row| decimals(row).join(separator))
            .collect::<Vec<_>>()
            .join("\n")
    };
    match format {
        Format::Plain => Ok(joined(" ")),
        Format::Csv => Ok(joined(",")),
        Format::Json => Ok(serde_json::json!({
            "alpha": alpha.get(),
            "inverse": inverse,
            "rows": rows.iter().map(|row| decimals(row)).collect::<Vec<_>>(),
        })
        .to_string()),
        Format::Bfile => Err(Failure::Usage(
            "bfile format renders flat sequences; use it with the sequence subcommand".into(),
        )),
    }
}

fn count_text(alpha: Alpha, family: &Family, format: Format) -> Result<String, Failure> {
    let value = family_count(alpha, family)?;
    match format {
        Format::Plain | Format::Csv => Ok(value.to_string()),
        Format::Json => Ok(serde_json::json!({
            "alpha": alpha.get(),
            "family": family.to_string(),
            "value": value.to_string(),
        })
        .to_string()),
        Format::Bfile => Err(Failure::Usage(
            "bfile format renders flat sequences; use it with the sequence subcommand".into(),
        )),
    }
}

fn family_count(alpha: Alpha, family: &Family) -> Result<Count, Failure> {
    match family {
        Family::Bipartite { n, k } => Ok(fnomial(alpha, *n, *k)?),
        Family::Colored { sizes } => {
            Ok(multi_fnomial(alpha, &ColorComposition::new(sizes.clone())))
        }
        Family::Dag { n } => Ok(dag_count(alpha, *n)),
        Family::ColoredTotal { n, colors } => {
            if *colors == 0 {
                return Err(Failure::Usage(
                    "colored-total needs at least one color".into(),
                ));
            }
            Ok(colored_total(alpha, *n, *colors as usize))
        }
        Family::RowSum { n } => Ok(row_sum(alpha, *n)),
    }
}

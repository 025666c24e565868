use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use kron_core::certify::{
    builtin_strategies, certify, strategies_by_name, verify_certificate, CertError, Certificate, CertifyOutcome,
    SearchOptions, Triple, VerifyOptions, DEFAULT_ORACLE_CAP,
};
use kron_core::characters::character;
use kron_core::kronecker::{formula_value, kron, kronecker_table, missing_partitions, ScanOptions};
use kron_core::lr::{lr_coefficient, pieri_expand};
use kron_core::report::{verify_paper, TheoremId};
use kron_core::{BoxFrame, KronError, Partition};

/// Exact Kronecker coefficients, tensor-square tables and positivity
/// certificates.
#[derive(Parser)]
#[command(name = "kron", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// g(lambda, mu, nu), with the method used.
    G {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// The character chi^lambda at cycle type alpha.
    Chi { lambda: Partition, alpha: Partition },
    /// The Littlewood-Richardson coefficient c^lambda_{mu nu}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },
    /// Shapes obtained from mu by adding a horizontal strip of n boxes.
    Pieri { mu: Partition, n: usize },
    /// g(lambda, mu, nu) for every nu.
    Table {
        lambda: Partition,
        mu: Partition,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
        /// Only nu fitting a ROWSxCOLS frame.
        #[arg(long, value_parser = parse_frame)]
        frame: Option<BoxFrame>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Partitions nu with g(square_m, square_m, nu) = 0, one per conjugate pair.
    Missing {
        m: u32,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        /// Run side lengths beyond the desk-scale budget.
        #[arg(long)]
        budget_override: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Search for a semigroup certificate of g(lambda, mu, nu) > 0.
    Certify {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long, default_value_t = SearchOptions::default().budget)]
        budget: usize,
        /// Comma-separated strategy names; all built-ins by default.
        #[arg(long, value_delimiter = ',')]
        strategies: Vec<String>,
        #[arg(long, default_value_t = SearchOptions::default().max_depth)]
        max_depth: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file.
    VerifyCert {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Check one of the paper's statements over a range of m.
    VerifyPaper {
        #[arg(long)]
        theorem: TheoremId,
        /// Inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        m_range: (u32, u32),
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Oracle,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a = a.trim().parse().map_err(|e| format!("bad lower end: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("bad upper end: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn parse_frame(s: &str) -> Result<BoxFrame, String> {
    let (r, c) = s.split_once(['x', 'X']).ok_or("expected ROWSxCOLS")?;
    let r = r.trim().parse().map_err(|e| format!("bad row count: {e}"))?;
    let c = c.trim().parse().map_err(|e| format!("bad column count: {e}"))?;
    BoxFrame::new(r, c).map_err(|e| e.to_string())
}

/// A failed run: message and exit code.
struct Failure(String, u8);

const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

impl From<KronError> for Failure {
    fn from(e: KronError) -> Self {
        if let KronError::BudgetExceeded { op, m } = e {
            return Failure(
                format!("{op} for m = {m} exceeds the desk-scale budget; rerun with --budget-override"),
                USAGE,
            );
        }
        let code = if e.is_internal() { INTERNAL } else { USAGE };
        Failure(e.to_string(), code)
    }
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Kron(k) => k.into(),
            CertError::Malformed(_) => Failure(format!("{}: {e}", e.kind()), USAGE),
            _ => Failure(format!("{}: {e}", e.kind()), NEGATIVE),
        }
    }
}

fn scan_options(jobs: Option<usize>) -> Result<ScanOptions, Failure> {
    if jobs == Some(0) {
        return Err(Failure("--jobs must be at least 1".into(), USAGE));
    }
    Ok(ScanOptions {
        jobs,
        ..ScanOptions::from_env()
    })
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

/// Desk scale: the oracle answers, and any formula that also applies must
/// agree with it. Beyond that a formula is used when one applies.
fn cmd_g(lambda: &Partition, mu: &Partition, nu: &Partition, method: Method) -> Result<String, Failure> {
    let formula = formula_value(lambda, mu, nu);
    let oracle = || kron(lambda, mu, nu).map(BigInt::from);
    let (value, by) = match method {
        Method::Oracle => (oracle()?, "oracle".to_string()),
        Method::Formula => match formula {
            Some((v, by)) => (v, by.to_string()),
            None => {
                for other in [mu, nu] {
                    if other.size() != lambda.size() {
                        return Err(KronError::SizeMismatch {
                            what: "Kronecker triples need partitions of one size",
                            left: lambda.size(),
                            right: other.size(),
                        }
                        .into());
                    }
                }
                return Err(Failure(
                    format!("no closed formula covers ({lambda}), ({mu}), ({nu}); use --method oracle"),
                    USAGE,
                ));
            }
        },
        Method::Auto if lambda.size() <= DEFAULT_ORACLE_CAP || formula.is_none() => {
            let v = oracle()?;
            if let Some((f, by)) = formula {
                if f != v {
                    return Err(Failure(format!("oracle gives {v} but the {by} formula gives {f}"), INTERNAL));
                }
            }
            (v, "oracle".to_string())
        }
        Method::Auto => {
            let (v, by) = formula.expect("checked above");
            (v, by.to_string())
        }
    };
    Ok(format!("{value} ({by})"))
}

fn run(cmd: Cmd) -> Result<String, Failure> {
    match cmd {
        Cmd::G { lambda, mu, nu, method } => cmd_g(&lambda, &mu, &nu, method),
        Cmd::Chi { lambda, alpha } => Ok(character(&lambda, &alpha)?.to_string()),
        Cmd::Lr { lambda, mu, nu } => Ok(lr_coefficient(&lambda, &mu, &nu)?.to_string()),
        Cmd::Pieri { mu, n } => Ok(pieri_expand(&mu, n).iter().map(|l| format!("{l}\n")).collect()),
        Cmd::Table {
            lambda,
            mu,
            format,
            frame,
            jobs,
        } => {
            let opts = ScanOptions {
                frame,
                ..scan_options(jobs)?
            };
            let table = kronecker_table(&lambda, &mu, &opts)?;
            Ok(match format {
                TableFormat::Tsv => table.to_tsv(),
                TableFormat::Json => table.to_json() + "\n",
            })
        }
        Cmd::Missing {
            m,
            format,
            budget_override,
            jobs,
        } => {
            let found = missing_partitions(m, &scan_options(jobs)?, budget_override)?;
            Ok(match format {
                ListFormat::Text => found.iter().map(|p| format!("{p}\n")).collect(),
                ListFormat::Json => {
                    let list: Vec<String> = found.iter().map(Partition::to_string).collect();
                    json(&serde_json::json!({ "m": m, "missing": list })) + "\n"
                }
            })
        }
        Cmd::Certify {
            lambda,
            mu,
            nu,
            budget,
            strategies,
            max_depth,
            oracle_cap,
            out,
        } => {
            let strategies = if strategies.is_empty() {
                builtin_strategies()
            } else {
                strategies_by_name(&strategies).map_err(|e| Failure(e, USAGE))?
            };
            let opts = SearchOptions {
                budget,
                max_depth,
                oracle_cap,
                ..Default::default()
            };
            let target: Triple = [lambda, mu, nu];
            match certify(&target, &strategies, &opts)? {
                CertifyOutcome::Found(c) => {
                    let text = c.to_json_pretty() + "\n";
                    match out {
                        Some(path) => {
                            fs::write(&path, text)
                                .map_err(|e| Failure(format!("cannot write {}: {e}", path.display()), USAGE))?;
                            Ok(format!(
                                "certificate written to {}: depth {}, {} leaves\n",
                                path.display(),
                                c.depth(),
                                c.leaf_count()
                            ))
                        }
                        None => Ok(text),
                    }
                }
                CertifyOutcome::NotFound {
                    explored,
                    budget_exhausted,
                } => {
                    let why = if budget_exhausted { "budget exhausted" } else { "search space exhausted" };
                    Err(Failure(
                        format!("no certificate found ({why} after {explored} expansions)"),
                        NEGATIVE,
                    ))
                }
            }
        }
        Cmd::VerifyCert { file, oracle_cap } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure(format!("cannot read {}: {e}", file.display()), USAGE))?;
            let c = Certificate::from_json(&text)?;
            let stats = verify_certificate(&c, &VerifyOptions { oracle_cap })?;
            let [a, b, n] = c.claim();
            Ok(format!(
                "ok: g(({a}), ({b}), ({n})) > 0; depth {}, {} leaves, {} nodes\n",
                stats.depth, stats.leaves, stats.nodes
            ))
        }
        Cmd::VerifyPaper {
            theorem,
            m_range: (lo, hi),
            format,
            jobs,
        } => {
            let report = verify_paper(theorem, lo, hi, &scan_options(jobs)?)?;
            let text = match format {
                ListFormat::Text => report.render(),
                ListFormat::Json => json(&report) + "\n",
            };
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure(format!("theorem {theorem}: verification failed"), NEGATIVE))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(text) => {
            print!("{text}");
            if !text.is_empty() && !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure(msg, code)) => {
            eprintln!("kron: {msg}");
            ExitCode::from(code)
        }
    }
}

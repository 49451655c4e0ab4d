//! `lyubgraph`: compute connectedness and Lyubeznik-number invariants of
//! rings presented by their minimal primes.
//!
//! Exit codes: 0 on success, 1 when a requested check fails, 2 on input
//! errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use lyubgraph::connectedness::DEFAULT_BRUTEFORCE_CAP;
use lyubgraph::input::{abstract_to_value, MAX_VARS_ENV};
use lyubgraph::{
    conn_dim, conn_dim_bruteforce, gamma, gamma_profile_proj, gamma_proj, invariant_report,
    AbstractArrangement, Check, ConnResult, GammaGraph, InputDoc, ParseOptions, ProjectiveVariety,
    ReportOptions, SweepConfig, SweepMode,
};

mod render;

#[derive(Parser)]
#[command(
    name = "lyubgraph",
    version,
    about = "Connectedness and Lyubeznik-number invariants from minimal primes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a coordinate or abstract arrangement.
    Analyze {
        file: PathBuf,
        /// JSON output (default).
        #[arg(long)]
        json: bool,
        /// Markdown report instead of JSON.
        #[arg(long, conflicts_with = "json")]
        md: bool,
        /// Reject non-antichain primes and unknown keys instead of warning.
        #[arg(long)]
        strict: bool,
        /// Exit with code 1 if any theorem check fails.
        #[arg(long)]
        check: bool,
        /// Also run the exhaustive-cover oracle for c(A).
        #[arg(long)]
        oracle: bool,
        /// Asserted depth(A), checked against c(A) >= depth(A) - 1.
        #[arg(long)]
        depth: Option<usize>,
        /// Asserted cd(I, R), checked against c(A) >= n - cd - 1 (needs --ambient).
        #[arg(long)]
        cd: Option<usize>,
        /// Ambient regular dimension n for the --cd check.
        #[arg(long)]
        ambient: Option<usize>,
        /// Cap on primes for the brute-force searches.
        #[arg(long = "max-bruteforce", default_value_t = DEFAULT_BRUTEFORCE_CAP)]
        max_bruteforce: usize,
    },
    /// Build one graph of the family and print it as JSON or DOT.
    Gamma {
        file: PathBuf,
        /// Threshold t (1..=d-1 locally, 1..=d projectively).
        #[arg(long)]
        t: usize,
        #[arg(long)]
        json: bool,
        /// Graphviz output.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Connectedness dimension, with an optional brute-force cross-check.
    Conn {
        file: PathBuf,
        /// Also run the exhaustive-cover oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long = "max-bruteforce", default_value_t = DEFAULT_BRUTEFORCE_CAP)]
        max_bruteforce: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Generic hyperplane section(s) of an arrangement.
    Section {
        file: PathBuf,
        /// Number of successive sections (1..=d-2).
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// Verify component counts and the connectedness-dimension drop.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Invariants of a projective variety and its cone.
    Proj {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, conflicts_with = "json")]
        md: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Run the oracle/theorem check battery over generated arrangements.
    Sweep {
        /// Largest ambient variable count.
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        /// Largest number of minimal primes.
        #[arg(long = "max-s", default_value_t = 4)]
        max_s: usize,
        /// Random mode: number of seeded instances (default: exhaustive).
        #[arg(long)]
        count: Option<usize>,
        /// Seed for random mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-bruteforce", default_value_t = DEFAULT_BRUTEFORCE_CAP)]
        max_bruteforce: usize,
        /// Directory for failure repro files.
        #[arg(long = "repro-dir")]
        repro_dir: Option<PathBuf>,
        /// Testing hook: corrupt one pairdim entry to exercise the failure path.
        #[arg(long = "inject-fault", hide = true)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(lyubgraph::Error),
    Io(PathBuf, std::io::Error),
    Message(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Message(m) => write!(f, "{m}"),
        }
    }
}

impl From<lyubgraph::Error> for CliError {
    fn from(e: lyubgraph::Error) -> Self {
        CliError::Core(e)
    }
}

fn parse_options(strict: bool) -> Result<ParseOptions, CliError> {
    let mut opts = ParseOptions {
        strict,
        ..ParseOptions::default()
    };
    if let Ok(text) = std::env::var(MAX_VARS_ENV) {
        let value: usize = text
            .trim()
            .parse()
            .map_err(|_| CliError::Message(format!("{MAX_VARS_ENV}={text:?} is not a number")))?;
        if value == 0 {
            return Err(CliError::Message(format!(
                "{MAX_VARS_ENV} must be positive"
            )));
        }
        opts.max_vars = value;
    }
    Ok(opts)
}

fn load(path: &Path, strict: bool) -> Result<InputDoc, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    let parsed = lyubgraph::parse_document(&text, &parse_options(strict)?)?;
    for warning in &parsed.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(parsed.doc)
}

/// Coordinate and abstract documents both yield an abstract arrangement;
/// projective documents are routed to `proj`.
fn load_arrangement(path: &Path, strict: bool) -> Result<AbstractArrangement, CliError> {
    match load(path, strict)? {
        InputDoc::Coordinate(c) => Ok(c.to_abstract()?),
        InputDoc::Abstract(a) => Ok(a),
        InputDoc::Projective(_) => Err(CliError::Message(
            "projective input: use the `proj` subcommand (or model the cone as an abstract arrangement)".into(),
        )),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization cannot fail")
    );
}

/// Reduced output for rings of dimension at most one, where the graph family
/// is empty and only the cover search applies.
#[derive(Serialize)]
struct LowDimReport {
    d: usize,
    s: usize,
    c_oracle: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<lyubgraph::ConnWitness>,
    note: &'static str,
}

const LOW_DIM_NOTE: &str =
    "graph invariants need dim >= 2; connectedness dimension computed by exhaustive cover search";

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Analyze {
            file,
            md,
            strict,
            check,
            oracle,
            depth,
            cd,
            ambient,
            max_bruteforce,
            ..
        } => {
            let arr = load_arrangement(&file, strict)?;
            if arr.dim() < 2 {
                let result = conn_dim_bruteforce(&arr, max_bruteforce)?;
                let report = LowDimReport {
                    d: arr.dim(),
                    s: arr.prime_count(),
                    c_oracle: result.c,
                    witness: result.witness,
                    note: LOW_DIM_NOTE,
                };
                if md {
                    print!(
                        "{}",
                        render::low_dim_markdown(report.d, report.s, report.c_oracle)
                    );
                } else {
                    print_json(&report);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let opts = ReportOptions {
                oracle,
                cap: max_bruteforce,
                depth,
                cd,
                ambient,
            };
            let report = invariant_report(&arr, &opts)?;
            if md {
                print!("{}", render::report_markdown(&report));
            } else {
                print_json(&report);
            }
            if check && report.checks.iter().any(|c| !c.passed) {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Gamma {
            file,
            t,
            dot,
            strict,
            ..
        } => {
            let (graph, names) = match load(&file, strict)? {
                InputDoc::Coordinate(c) => {
                    let labels = c.labels();
                    let names: Vec<String> = c
                        .primes()
                        .iter()
                        .map(|p| {
                            let vars: Vec<&str> = p.iter().map(|i| labels[i].as_str()).collect();
                            format!("{{{}}}", vars.join(","))
                        })
                        .collect();
                    (gamma(&c.to_abstract()?, t)?, names)
                }
                InputDoc::Abstract(a) => {
                    let names = (1..=a.prime_count()).map(|i| format!("p{i}")).collect();
                    (gamma(&a, t)?, names)
                }
                InputDoc::Projective(x) => (gamma_proj(&x, t)?, x.components().to_vec()),
            };
            if dot {
                print!("{}", graph.to_dot(Some(&names)));
            } else {
                print_json(&graph_json(&graph, &names));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Conn {
            file,
            oracle,
            max_bruteforce,
            strict,
        } => {
            let arr = load_arrangement(&file, strict)?;
            #[derive(Serialize)]
            struct ConnReport {
                d: usize,
                s: usize,
                #[serde(flatten)]
                result: ConnResult,
                #[serde(skip_serializing_if = "Option::is_none")]
                oracle: Option<ConnResult>,
                #[serde(skip_serializing_if = "Option::is_none")]
                agree: Option<bool>,
                #[serde(skip_serializing_if = "Option::is_none")]
                note: Option<&'static str>,
            }
            let (result, note) = if arr.dim() < 2 {
                (
                    conn_dim_bruteforce(&arr, max_bruteforce)?,
                    Some(LOW_DIM_NOTE),
                )
            } else {
                (conn_dim(&arr)?, None)
            };
            let oracle_result = if oracle && arr.dim() >= 2 {
                Some(conn_dim_bruteforce(&arr, max_bruteforce)?)
            } else {
                None
            };
            let agree = oracle_result.as_ref().map(|o| o.c == result.c);
            print_json(&ConnReport {
                d: arr.dim(),
                s: arr.prime_count(),
                result,
                oracle: oracle_result,
                agree,
                note,
            });
            Ok(ExitCode::SUCCESS)
        }

        Command::Section {
            file,
            iterate,
            check,
            strict,
        } => {
            let arr = load_arrangement(&file, strict)?;
            let d = arr.dim();
            let max = d.saturating_sub(2);
            if iterate == 0 || iterate > max {
                return Err(lyubgraph::Error::IterationOutOfRange { k: iterate, max }.into());
            }
            let mut checks: Vec<Check> = Vec::new();
            let mut current = arr.clone();
            for step in 0..iterate {
                if check {
                    let mut profile = lyubgraph::section_profile_check(&current)?;
                    profile.record("step", step as i64 + 1);
                    let mut conn = lyubgraph::section_conn_check(&current)?;
                    conn.record("step", step as i64 + 1);
                    checks.push(profile);
                    checks.push(conn);
                }
                current = lyubgraph::generic_section(&current)?;
            }

            #[derive(Serialize)]
            struct SectionReport {
                input_dim: usize,
                iterations: usize,
                xi_pairs: Vec<(usize, usize)>,
                result: serde_json::Value,
                checks: Vec<Check>,
            }
            let report = SectionReport {
                input_dim: d,
                iterations: iterate,
                xi_pairs: arr
                    .xi_set()
                    .pairs
                    .iter()
                    .map(|&(i, j)| (i + 1, j + 1))
                    .collect(),
                result: abstract_to_value(&current),
                checks,
            };
            let failed = report.checks.iter().any(|c| !c.passed);
            print_json(&report);
            if check && failed {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Proj {
            file, md, strict, ..
        } => {
            let InputDoc::Projective(x) = load(&file, strict)? else {
                return Err(CliError::Message(
                    "expected a projective document; use `analyze` for ring inputs".into(),
                ));
            };
            let report = proj_report(&x)?;
            if md {
                print!("{}", render::proj_markdown(&report));
            } else {
                print_json(&report);
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Sweep {
            max_n,
            max_s,
            count,
            seed,
            max_bruteforce,
            repro_dir,
            inject_fault,
        } => {
            let config = SweepConfig {
                max_n,
                max_s,
                mode: match count {
                    Some(count) => SweepMode::Random { seed, count },
                    None => SweepMode::Exhaustive,
                },
                cap: max_bruteforce,
                inject_fault,
            };
            let summary = lyubgraph::run_sweep(&config)?;

            let dir = repro_dir.unwrap_or_else(|| PathBuf::from("."));
            if !summary.failures.is_empty() {
                std::fs::create_dir_all(&dir).map_err(|e| CliError::Io(dir.clone(), e))?;
            }
            let mut repro_files = Vec::new();
            for failure in &summary.failures {
                let path = dir.join(format!(
                    "lyubgraph-repro-{:06}-{}.json",
                    failure.index, failure.check
                ));
                let body = serde_json::to_string_pretty(&failure.instance)
                    .expect("instance serialization cannot fail");
                std::fs::write(&path, body + "\n").map_err(|e| CliError::Io(path.clone(), e))?;
                repro_files.push(path.display().to_string());
            }

            #[derive(Serialize)]
            struct SweepReport {
                instances: usize,
                checks_run: usize,
                check_counts: std::collections::BTreeMap<String, usize>,
                failures: Vec<lyubgraph::sweep::SweepFailure>,
                repro_files: Vec<String>,
            }
            let failed = !summary.failures.is_empty();
            print_json(&SweepReport {
                instances: summary.instances,
                checks_run: summary.checks_run,
                check_counts: summary.check_counts,
                failures: summary.failures,
                repro_files,
            });
            if failed {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn graph_json(graph: &GammaGraph, names: &[String]) -> serde_json::Value {
    serde_json::json!({
        "t": graph.t(),
        "vertex_count": graph.vertex_count(),
        "vertices": names,
        "edges": graph
            .edges()
            .iter()
            .map(|&(i, j)| vec![i + 1, j + 1])
            .collect::<Vec<_>>(),
        "components": graph
            .components()
            .iter()
            .map(|class| class.iter().map(|v| v + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "component_count": graph.component_count(),
    })
}

#[derive(Serialize)]
pub(crate) struct ProjReport {
    pub(crate) d: usize,
    pub(crate) s: usize,
    /// `#Γ_t(X)` for t = 1..=d.
    pub(crate) gamma_profile: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub(crate) lambda12: Option<usize>,
    pub(crate) superdiag_lower_bounds: Vec<usize>,
    pub(crate) cone: serde_json::Value,
    pub(crate) checks: Vec<Check>,
}

fn proj_report(x: &ProjectiveVariety) -> Result<ProjReport, CliError> {
    let d = x.dim();
    Ok(ProjReport {
        d,
        s: x.component_count(),
        gamma_profile: gamma_profile_proj(x)?,
        lambda12: if d >= 2 {
            Some(lyubgraph::lambda12_proj(x)?)
        } else {
            None
        },
        superdiag_lower_bounds: if d >= 3 {
            lyubgraph::superdiag_lower_bounds_proj(x)?
        } else {
            Vec::new()
        },
        cone: abstract_to_value(&lyubgraph::cone(x)),
        checks: lyubgraph::cone_consistency_checks(x)?,
    })
}

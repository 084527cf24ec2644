//! Command-line frontend: compute parameters, generate graph families, run
//! the verification suites, and build/check reduction instances.
//!
//! Exit codes: 0 success, 1 parse or input error, 2 size-cap refusal,
//! 3 failed internal cross-check or falsified property.

use clap::{Parser, Subcommand, ValueEnum};
use kappa::error::Error;
use kappa::extremal::{self, param_report, ParamReport};
use kappa::graph::Graph;
use kappa::reductions::{
    check_reduction, reduce_pc_to_kappa_ge, reduce_pc_to_kappa_prime_le, reduce_to_qkappa,
    DecisionInstance,
};
use kappa::suites::{run_suite, SuiteKind, SuiteOptions, ALL_SUITES};
use kappa::{edgelist, graph6};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "kappa", version, about = "Exact extremal accessing-set parameters of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the parameters of one graph and report values, witnesses and
    /// bounds.
    Compute {
        /// Path to a .g6/.el file, or an inline graph6 string.
        input: String,
        #[arg(long, value_enum, default_value_t = Param::All)]
        param: Param,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Cross-check the structured solvers against the definition-level
        /// oracles (refused above the oracle size cap).
        #[arg(long)]
        oracle: bool,
        /// Override the solver size cap.
        #[arg(long)]
        max_n: Option<usize>,
        /// Suppress timing fields so identical invocations are byte-identical.
        #[arg(long)]
        deterministic_witness: bool,
    },
    /// Generate a graph family and write it as graph6.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Run a verification suite over exhaustively enumerated and seeded
    /// random graphs.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a reduction instance from a source graph, optionally verifying
    /// its iff claim exactly.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionKind,
        input: String,
        /// Copy count for to-qkappa.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        check: bool,
        /// Write the instance graph6 here (JSON sidecar at <output>.json).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    All,
    Kappa,
    KappaPrime,
    KappaQ,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Family {
    /// Complete q-partite graph with parts of size p.
    Multipartite {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check the computed parameters against the closed forms.
        #[arg(long)]
        expect: bool,
    },
    /// Disjoint copies of a base graph.
    Copies {
        #[arg(long)]
        base: String,
        #[arg(short)]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Cycle {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Complete {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Empty {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Complement {
        #[arg(long)]
        base: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Duality,
    Bounds,
    Copies,
    Dichotomy,
    PerfectCode,
    Families,
    Reductions,
    Oracle,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReductionKind {
    PcToKappaGe,
    PcToKappaPrimeLe,
    ToQkappa,
}

/// Machine-readable report envelope. Parameter values are exact integers.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct JsonReport {
    schema_version: String,
    input: String,
    report: ParamReport,
    timings_ms: BTreeMap<String, u64>,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SizeCap { .. } => 2,
        Error::CrossCheck(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn solver_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("KAPPA_MAX_N")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(extremal::DEFAULT_SOLVER_CAP)
}

fn oracle_cap() -> usize {
    std::env::var("KAPPA_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(extremal::DEFAULT_ORACLE_CAP)
}

/// Read a graph from a file (format by extension, then content sniffing) or
/// from an inline graph6 argument.
fn load_graph(input: &str) -> Result<Graph, Error> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::EdgeList {
            line: 0,
            reason: format!("cannot read {}: {e}", path.display()),
        })?;
        return match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => graph6::decode(&text),
            Some("el") => edgelist::parse(&text),
            _ => sniff(&text),
        };
    }
    graph6::decode(input)
}

fn sniff(text: &str) -> Result<Graph, Error> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.split_whitespace().count() == 1 && first.parse::<usize>().is_ok() {
        edgelist::parse(text)
    } else {
        graph6::decode(text)
    }
}

fn write_or_print(output: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute {
            input,
            param,
            format,
            oracle,
            max_n,
            deterministic_witness,
        } => cmd_compute(&input, param, format, oracle, max_n, deterministic_witness),
        Command::Family { family } => cmd_family(family),
        Command::Verify {
            suite,
            nmax,
            samples,
            seed,
        } => cmd_verify(suite, nmax, samples, seed),
        Command::Reduce {
            kind,
            input,
            k,
            check,
            output,
        } => cmd_reduce(kind, &input, k, check, &output),
    }
}

fn cmd_compute(
    input: &str,
    param: Param,
    format: Format,
    oracle: bool,
    max_n: Option<usize>,
    deterministic_witness: bool,
) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let g = load_graph(input)?;
    let parse_ms = start.elapsed().as_millis() as u64;

    let solve_start = Instant::now();
    let report = param_report(&g, solver_cap(max_n))?;
    let solve_ms = solve_start.elapsed().as_millis() as u64;

    let mut oracle_ms = 0;
    if oracle {
        let oracle_start = Instant::now();
        let ko = extremal::kappa_oracle_capped(&g, oracle_cap())?;
        let po = extremal::kappa_prime_oracle_capped(&g, oracle_cap())?;
        oracle_ms = oracle_start.elapsed().as_millis() as u64;
        if ko != report.kappa || po != report.kappa_prime {
            return Err(Error::CrossCheck(format!(
                "oracle disagrees: kappa {} vs {ko}, kappa' {} vs {po}",
                report.kappa, report.kappa_prime
            )));
        }
    }

    match format {
        Format::Json => {
            let mut timings_ms = BTreeMap::new();
            if !deterministic_witness {
                timings_ms.insert("parse".to_string(), parse_ms);
                timings_ms.insert("solve".to_string(), solve_ms);
                if oracle {
                    timings_ms.insert("oracle".to_string(), oracle_ms);
                }
            }
            let envelope = JsonReport {
                schema_version: SCHEMA_VERSION.to_string(),
                input: input.to_string(),
                report,
                timings_ms,
            };
            println!("{}", serde_json::to_string_pretty(&envelope).expect("report serializes"));
        }
        Format::Text => print_text_report(&report, param),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_text_report(r: &ParamReport, param: Param) {
    let rows: Vec<(&str, String)> = match param {
        Param::All => vec![
            ("n", r.n.to_string()),
            ("kappa", r.kappa.to_string()),
            ("kappa'", r.kappa_prime.to_string()),
            ("kappa_Q", r.kappa_q.to_string()),
            ("qss threshold", r.qss_threshold.to_string()),
            ("kappa bounds", format!("[{}, {}]", r.bounds.kappa_lower, r.bounds.kappa_upper)),
            (
                "kappa' bounds",
                format!("[{}, {}]", r.bounds.kappa_prime_lower, r.bounds.kappa_prime_upper),
            ),
            ("max non-accessing B", format!("{:?}", r.kappa_witness.set)),
            ("  block witness C", format!("{:?}", r.kappa_witness.certificate.set)),
            ("min accessing B", format!("{:?}", r.kappa_prime_witness.set)),
            (
                "  access witness D",
                format!("{:?}", r.kappa_prime_witness.certificate.set),
            ),
        ],
        Param::Kappa => vec![
            ("kappa", r.kappa.to_string()),
            ("max non-accessing B", format!("{:?}", r.kappa_witness.set)),
            ("  block witness C", format!("{:?}", r.kappa_witness.certificate.set)),
        ],
        Param::KappaPrime => vec![
            ("kappa'", r.kappa_prime.to_string()),
            ("min accessing B", format!("{:?}", r.kappa_prime_witness.set)),
            (
                "  access witness D",
                format!("{:?}", r.kappa_prime_witness.certificate.set),
            ),
        ],
        Param::KappaQ => vec![
            ("kappa_Q", r.kappa_q.to_string()),
            ("qss threshold", r.qss_threshold.to_string()),
        ],
    };
    for (label, value) in rows {
        println!("{label:<22} {value}");
    }
}

fn cmd_family(family: Family) -> Result<ExitCode, Error> {
    let (graph, output, expect) = match family {
        Family::Multipartite { p, q, output, expect } => {
            let g = Graph::complete_multipartite(p, q)?;
            (g, output, expect.then_some((p, q)))
        }
        Family::Copies { base, r, output } => (load_graph(&base)?.disjoint_copies(r)?, output, None),
        Family::Cycle { n, output } => (Graph::cycle(n), output, None),
        Family::Complete { n, output } => (Graph::complete(n), output, None),
        Family::Empty { n, output } => (Graph::empty(n), output, None),
        Family::Complement { base, output } => (load_graph(&base)?.complement(), output, None),
    };

    if let Some((p, q)) = expect {
        let n = p * q;
        let (kappa, _) = extremal::kappa_exact_capped(&graph, solver_cap(None))?;
        let (kp, _) = extremal::kappa_prime_exact_capped(&graph, solver_cap(None))?;
        let (want_kappa, want_kp) = if q % 2 == 1 {
            (n - p, q)
        } else {
            ((n - p).max(n - q), p + q - 1)
        };
        if kappa != want_kappa || kp != want_kp {
            return Err(Error::CrossCheck(format!(
                "closed form mismatch for p={p}, q={q}: kappa={kappa} (want {want_kappa}), kappa'={kp} (want {want_kp})"
            )));
        }
        eprintln!("closed forms hold: kappa={kappa}, kappa'={kp}");
    }

    write_or_print(&output, &format!("{}\n", graph6::encode(&graph)))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: Suite, nmax: usize, samples: usize, seed: u64) -> Result<ExitCode, Error> {
    let opts = SuiteOptions {
        nmax,
        samples,
        seed,
        solver_cap: solver_cap(None),
        oracle_cap: oracle_cap(),
    };
    let kinds: Vec<SuiteKind> = match suite {
        Suite::Duality => vec![SuiteKind::Duality],
        Suite::Bounds => vec![SuiteKind::Bounds],
        Suite::Copies => vec![SuiteKind::Copies],
        Suite::Dichotomy => vec![SuiteKind::Dichotomy],
        Suite::PerfectCode => vec![SuiteKind::PerfectCode],
        Suite::Families => vec![SuiteKind::Families],
        Suite::Reductions => vec![SuiteKind::Reductions],
        Suite::Oracle => vec![SuiteKind::Oracle],
        Suite::All => ALL_SUITES.to_vec(),
    };

    println!("{:<14} {:>8} {:>9} {}", "suite", "checked", "failures", "status");
    let mut any_failed = false;
    for kind in kinds {
        let report = run_suite(kind, &opts)?;
        let status = if report.passed() { "ok" } else { "FALSIFIED" };
        println!(
            "{:<14} {:>8} {:>9} {status}",
            report.name,
            report.checked,
            report.failures.len()
        );
        for failure in &report.failures {
            eprintln!("  {}: {failure}", report.name);
        }
        any_failed |= !report.passed();
    }
    Ok(if any_failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

/// JSON sidecar describing a reduction instance.
#[derive(Serialize, Deserialize)]
struct InstanceSidecar {
    schema_version: String,
    problem: String,
    k: usize,
    graph6: String,
    source_graph6: String,
    provenance: String,
    check: Option<CheckResult>,
}

#[derive(Serialize, Deserialize)]
struct CheckResult {
    source_holds: bool,
    target_holds: bool,
    agrees: bool,
}

fn cmd_reduce(
    kind: ReductionKind,
    input: &str,
    k: Option<usize>,
    check: bool,
    output: &Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let source = load_graph(input)?;
    let inst: DecisionInstance = match kind {
        ReductionKind::PcToKappaGe => reduce_pc_to_kappa_ge(&source)?,
        ReductionKind::PcToKappaPrimeLe => reduce_pc_to_kappa_prime_le(&source)?,
        ReductionKind::ToQkappa => {
            let k = k.ok_or_else(|| Error::InvalidParameter("to-qkappa requires -k".into()))?;
            reduce_to_qkappa(&source, k)?
        }
    };

    let check_result = if check {
        let r = check_reduction(&inst, &source, solver_cap(None))?;
        Some(CheckResult {
            source_holds: r.source_holds,
            target_holds: r.target_holds,
            agrees: r.agrees(),
        })
    } else {
        None
    };

    let sidecar = InstanceSidecar {
        schema_version: SCHEMA_VERSION.to_string(),
        problem: format!("{:?}", inst.problem),
        k: inst.k,
        graph6: graph6::encode(&inst.graph),
        source_graph6: graph6::encode(&source),
        provenance: inst.provenance.clone(),
        check: check_result,
    };
    let sidecar_json = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");

    match output {
        Some(path) => {
            std::fs::write(path, format!("{}\n", sidecar.graph6)).map_err(|e| {
                Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
            })?;
            let mut sidecar_path = path.clone().into_os_string();
            sidecar_path.push(".json");
            std::fs::write(&sidecar_path, sidecar_json).map_err(|e| {
                Error::InvalidParameter(format!("cannot write sidecar: {e}"))
            })?;
        }
        None => println!("{sidecar_json}"),
    }

    if let Some(check) = &sidecar.check {
        if !check.agrees {
            eprintln!(
                "falsification: source={} target={} on instance k={} ({})",
                check.source_holds, check.target_holds, sidecar.k, sidecar.provenance
            );
            return Ok(ExitCode::from(3));
        }
    }
    Ok(ExitCode::SUCCESS)
}

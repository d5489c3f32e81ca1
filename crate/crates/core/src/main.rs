use std::error::Error;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use clawbound::exact::{chromatic_number_within, clique_number_within, Deadline};
use clawbound::graph::generators::{blowup, complete, cycle, join_of_c5, mycielski_graph};
use clawbound::graph::io::{format_graph6, parse_auto, write_dimacs, write_edge_list, Format};
use clawbound::graph::Graph;
use clawbound::harness::{
    batch_verify, exhaustive_check_with, necessity_suite_with, sampled_check, tightness_suite,
    verify_theorem_with, SuiteReport, VerifyOptions,
};
use clawbound::patterns::is_class_member;
use clawbound::repair::{color_bounded_with, color_class_graph_with, RepairConfig, RepairError};
use clawbound::structure::{verify_lemma1, CliqueMode};

#[derive(Parser)]
#[command(
    version,
    about = "Recognise {claw, H1, H2}-free graphs and check chi <= omega + 1"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Per-graph budget for the exact solvers.
    #[arg(long, global = true, default_value_t = 10.0)]
    time_budget_secs: f64,
    /// Input format (default: detected from content); output format for `gen`.
    #[arg(long, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph (graph6 unless --format says otherwise).
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Class membership; exit 0 member, 1 non-member, 2 error.
    Check { input: String },
    /// Clique number with a maximum clique.
    Omega { input: String },
    /// Chromatic number with an optimal colouring.
    Chi { input: String },
    /// Colour with Kempe repair; omega + 1 colours unless --budget is given.
    Color {
        input: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Classify every vertex neighbourhood.
    Lemma1 {
        input: String,
        #[arg(long)]
        all_max_cliques: bool,
    },
    /// Full verdict: membership, omega, chi, bound, Lemma 1.
    Verify { input: String },
    /// Every labeled graph up to --max-n vertices (or a random sample at --max-n).
    Exhaustive {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// One graph6 string per line ("-" for stdin).
    Batch {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Named regression suites.
    Suite { name: SuiteName },
}

#[derive(Subcommand)]
enum Family {
    Cycle {
        k: usize,
    },
    Complete {
        k: usize,
    },
    BlowupC5 {
        m: usize,
    },
    JoinC5 {
        m: usize,
    },
    /// Mycielski iterate with the given chromatic number.
    MycielskiIter {
        chi: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Tightness,
    Necessity,
}

type CliResult = Result<ExitCode, Box<dyn Error>>;

fn read_input(input: &str, format: Option<Format>) -> Result<Graph, Box<dyn Error>> {
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input)?
    } else {
        input.to_string()
    };
    Ok(match format {
        Some(f) => f.parse(&text)?,
        None => parse_auto(&text)?,
    })
}

fn emit<T: Serialize>(
    json: bool,
    value: &T,
    human: impl FnOnce() -> String,
) -> Result<(), Box<dyn Error>> {
    let text = if json {
        serde_json::to_string_pretty(value)?
    } else {
        human()
    };
    write_out(&(text + "\n"))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn write_out(text: &str) -> Result<(), Box<dyn Error>> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn exit_for(report: &SuiteReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn summarize(r: &SuiteReport) -> String {
    let mut out = format!(
        "{}: {} cases, {} passed, {} failed, {} members, {} timed out, {} parse errors",
        r.suite,
        r.counts.total,
        r.counts.passed,
        r.counts.failed,
        r.counts.members,
        r.counts.timed_out,
        r.counts.parse_errors
    );
    for (n, level) in &r.per_n {
        out += &format!(
            "\n  n={n}: {} graphs, {} members",
            level.graphs, level.members
        );
    }
    for c in &r.cases {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        out += &format!("\n  {mark} {} {}", c.id, c.detail);
    }
    if r.halted {
        out += "\n  halted at first violation";
    }
    out
}

fn run(cli: Cli) -> CliResult {
    let budget = Duration::from_secs_f64(cli.time_budget_secs);
    let opts = VerifyOptions {
        time_budget: Some(budget),
        ..VerifyOptions::default()
    };
    let repair = RepairConfig {
        seed: cli.seed,
        ..RepairConfig::default()
    };
    let load = |input: &str| read_input(input, cli.format);

    match cli.command {
        Command::Gen { family } => {
            let g = match family {
                Family::Cycle { k } => cycle(k)?,
                Family::Complete { k } => complete(k)?,
                Family::BlowupC5 { m } => blowup(&cycle(5)?, m)?.graph,
                Family::JoinC5 { m } => join_of_c5(m)?.graph,
                Family::MycielskiIter { chi } => mycielski_graph(chi)?,
            };
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => write_out(&(format_graph6(&g)? + "\n"))?,
                Format::Dimacs => write_out(&write_dimacs(&g))?,
                Format::EdgeList => write_out(&write_edge_list(&g))?,
            }
        }
        Command::Check { input } => {
            let g = load(&input)?;
            let verdict = is_class_member(&g);
            emit(cli.json, &verdict, || match verdict.witness() {
                None => "member".to_string(),
                Some(w) => format!("non-member: induced {} at {:?}", w.pattern, w.embedding.map),
            })?;
            return Ok(if verdict.is_member() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Omega { input } => {
            let g = load(&input)?;
            let r = clique_number_within(&g, Deadline::after(budget))?;
            emit(cli.json, &r, || {
                format!("omega = {}\nclique: {:?}", r.omega, r.witness)
            })?;
        }
        Command::Chi { input } => {
            let g = load(&input)?;
            let r = chromatic_number_within(&g, Deadline::after(budget))?;
            emit(cli.json, &r, || {
                format!("chi = {}\ncoloring: {:?}", r.chi, r.coloring.colors())
            })?;
        }
        Command::Color { input, budget } => {
            let g = load(&input)?;
            let outcome = match budget {
                Some(k) => match color_bounded_with(&g, k, &repair) {
                    Some(o) => o,
                    None => {
                        eprintln!("no proper colouring with {k} colours exists");
                        return Ok(ExitCode::from(1));
                    }
                },
                None => match color_class_graph_with(&g, &repair) {
                    Ok(o) => o,
                    Err(e @ RepairError::NotMember(_)) => {
                        eprintln!("{e}");
                        return Ok(ExitCode::from(1));
                    }
                    Err(e) => return Err(e.into()),
                },
            };
            emit(cli.json, &outcome, || {
                let c = &outcome.counts;
                format!(
                    "colors used = {} (palette {})\ncoloring: {:?}\nstages: free={} swap={} shift={} walk={} exact={}",
                    outcome.colors_used(),
                    outcome.coloring.palette(),
                    outcome.coloring.colors(),
                    c.free_color,
                    c.single_swap,
                    c.sequence_shift,
                    c.random_walk,
                    c.exact_fallback
                )
            })?;
        }
        Command::Lemma1 {
            input,
            all_max_cliques,
        } => {
            let g = load(&input)?;
            let mode = if all_max_cliques {
                CliqueMode::AllMaxCliques
            } else {
                CliqueMode::Single
            };
            let report = verify_lemma1(&g, mode);
            emit(cli.json, &report, || {
                let s = &report.summary;
                let mut out = format!(
                    "complete={} two_nonadjacent={} three_with_middle={} violation={}",
                    s.complete, s.two_nonadjacent, s.three_with_middle, s.violation
                );
                for v in &report.violations {
                    out += &format!(
                        "\n  vertex {} clique {:?}: {}",
                        v.vertex, v.clique, v.reason
                    );
                }
                out
            })?;
            return Ok(if report.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Verify { input } => {
            let g = load(&input)?;
            let v = verify_theorem_with(&g, &opts);
            emit(cli.json, &v, || {
                format!(
                    "{}: in_class={} omega={:?} chi={:?} bound_holds={:?} lemma1_clean={:?} timed_out={}",
                    v.id(),
                    v.in_class,
                    v.omega,
                    v.chi,
                    v.bound_holds,
                    v.lemma1_clean,
                    v.timed_out
                )
            })?;
            return Ok(if v.is_violation() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            });
        }
        Command::Exhaustive { max_n, samples } => {
            let report = match samples {
                Some(s) => sampled_check(max_n, s, cli.seed)?,
                None => exhaustive_check_with(max_n, &opts)?,
            };
            emit(cli.json, &report, || summarize(&report))?;
            return Ok(exit_for(&report));
        }
        Command::Batch { file, jobs } => {
            let text = if file.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(&file)?
            };
            let report = batch_verify(&text, jobs, &opts);
            emit(cli.json, &report, || summarize(&report))?;
            return Ok(exit_for(&report));
        }
        Command::Suite { name } => {
            let report = match name {
                SuiteName::Tightness => tightness_suite(),
                SuiteName::Necessity => necessity_suite_with(&opts),
            };
            emit(cli.json, &report, || summarize(&report))?;
            return Ok(exit_for(&report));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

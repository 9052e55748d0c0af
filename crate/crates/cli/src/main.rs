//! `bhr`: construct, grow, search for and verify cyclic realizations.

mod input;

use std::process::ExitCode;

use anyhow::{bail, Result};
use bhr_core::families::{construct_1x, construct_1x_basic, seed_for_residue, Basic};
use bhr_core::growth::{even_grow, grow, multi_grow, perf_grow, splice_perfect, x2x_swap, GrowthSchedule};
use bhr_core::search::{brute_force, default_brute_cap, local_search, necessity_check, sweep, Oracle};
use bhr_core::seeds::{table, tables, verify_all_seeds};
use bhr_core::solvers::hr_bound;
use bhr_core::{
    solve, verify_realization, Certificate, Error as CoreError, SearchConfig, SolveOptions, SolveOutcome, Verification,
    SCHEMA_VERSION,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use input::{parse_multiset, parse_path, parse_paths, Realization, VerifyFailure};

#[derive(Parser, Debug)]
#[command(name = "bhr", version, about = "Cyclic realizations of edge-length multisets in complete graphs")]
struct Cli {
    /// Machine-readable output on stdout
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// RNG seed for local search
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = SearchConfig::default().max_restarts)]
    restarts: usize,
    /// Non-improving moves before a restart
    #[arg(long, default_value_t = SearchConfig::default().max_steps_per_restart)]
    steps: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            rng_seed: self.seed,
            max_restarts: self.restarts,
            max_steps_per_restart: self.steps,
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a path realizes a multiset, or re-check a certificate
    Verify {
        #[arg(long, conflicts_with = "cert", requires = "multiset")]
        path: Option<String>,
        #[arg(long)]
        multiset: Option<String>,
        /// Certificate JSON file ("-" for stdin)
        #[arg(long, required_unless_present = "path")]
        cert: Option<std::path::PathBuf>,
    },
    /// Admissibility verdict for a multiset such as "1^2 2 3^3"
    Admissible { multiset: String },
    /// Grow at a point, or run a schedule like "2*4 3*3"
    Grow {
        #[command(flatten)]
        input: Realization,
        #[arg(long, required_unless_present = "schedule", conflicts_with = "schedule")]
        x: Option<usize>,
        /// Grow point; defaults to the first registered one for x
        #[arg(long, requires = "x")]
        m: Option<usize>,
        #[arg(long)]
        schedule: Option<String>,
    },
    /// Splice a perfect linear realization in at the 1-point
    Splice {
        #[command(flatten)]
        input: Realization,
        /// Perfect linear realization, e.g. "[0,2,1,3]"
        #[arg(long)]
        perfect: String,
    },
    /// Even-length growth with parameters y and z
    EvenGrow {
        #[command(flatten)]
        input: Realization,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        z: usize,
    },
    /// Grow x three times and turn i quadruples into 2x edges
    X2x {
        #[command(flatten)]
        input: Realization,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        i: usize,
    },
    /// Grow x with x perfect linear realizations, e.g. --parts "[[0,1],[0,1]]"
    PerfGrow {
        #[command(flatten)]
        input: Realization,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        parts: String,
    },
    /// The parametrized {1, x} families
    Family {
        #[arg(long)]
        x: usize,
        /// Count of x, in (x, 2x]
        #[arg(long, conflicts_with_all = ["basic", "residue"])]
        b: Option<usize>,
        /// One of x+1, x+2, 2x
        #[arg(long, conflicts_with = "residue")]
        basic: Option<String>,
        /// Seed for b ≡ residue (mod x)
        #[arg(long)]
        residue: Option<usize>,
    },
    /// Replay a construction for a multiset
    Solve {
        multiset: String,
        /// Search when no construction applies
        #[arg(long)]
        fallback: bool,
        /// Print the derivation
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, env = "BHR_BRUTE_CAP", default_value_t = default_brute_cap())]
        cap: usize,
    },
    /// Local search for a realization
    Search {
        multiset: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exhaustive search: find a realization or prove there is none
    Oracle {
        multiset: String,
        /// Node budget
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, env = "BHR_BRUTE_CAP", default_value_t = default_brute_cap())]
        cap: usize,
    },
    /// Every admissible multiset up to an order
    Sweep {
        #[arg(long)]
        vmax: usize,
        /// Settle search failures by brute force
        #[arg(long)]
        definitive: bool,
        /// Also brute-force the inadmissible multisets
        #[arg(long)]
        necessity: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, env = "BHR_BRUTE_CAP", default_value_t = default_brute_cap())]
        cap: usize,
    },
    /// Stored seed tables
    Seeds {
        #[command(subcommand)]
        action: SeedsAction,
    },
    /// Linear bound on the number of 1s for a set without 1
    Bound { multiset: String },
}

#[derive(Subcommand, Debug)]
enum SeedsAction {
    /// Print tables (all, or one)
    Dump {
        #[arg(long)]
        table: Option<String>,
    },
    /// Verify every stored row
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Exit {
    Ok = 0,
    Usage = 1,
    NotAdmissible = 2,
    OutOfRange = 3,
    SearchFailed = 4,
    Verify = 5,
}

/// A command's result: exit status, JSON payload and human-readable text.
struct Report {
    exit: Exit,
    json: Value,
    text: String,
}

impl Report {
    fn new(exit: Exit, json: Value, text: impl Into<String>) -> Self {
        Self {
            exit,
            json,
            text: text.into(),
        }
    }
}

fn cert_text(c: &Certificate, trace: bool) -> String {
    let verts: Vec<String> = c.path().vertices().iter().map(|v| v.to_string()).collect();
    let points: Vec<String> = c.grow_points().iter().map(|p| p.to_string()).collect();
    let mut s = format!(
        "path: [{}]\nmultiset: {{{}}}\ngrow points: {}",
        verts.join(", "),
        c.multiset(),
        if points.is_empty() { "none".into() } else { points.join(" ") }
    );
    if trace {
        for step in c.trace() {
            s.push_str(&format!("\n  {step}"));
        }
    }
    s
}

fn cert_report(c: Certificate) -> Report {
    let text = cert_text(&c, true);
    Report::new(Exit::Ok, json!({ "certificate": c }), text)
}

fn run(cmd: Command) -> Result<Report> {
    Ok(match cmd {
        Command::Verify { path, multiset, cert } => match (path, multiset, cert) {
            (Some(p), Some(m), _) => {
                let path = parse_path(&p)?;
                let target = parse_multiset(&m)?;
                match verify_realization(&path, &target) {
                    Verification::Realizes => Report::new(
                        Exit::Ok,
                        json!({ "verified": true }),
                        format!("realizes {{{target}}}"),
                    ),
                    Verification::OrderMismatch { path_order, expected } => Report::new(
                        Exit::Verify,
                        json!({ "verified": false, "path_order": path_order, "expected_order": expected }),
                        format!("path has order {path_order}, {{{target}}} needs {expected}"),
                    ),
                    Verification::MultisetMismatch { actual } => Report::new(
                        Exit::Verify,
                        json!({ "verified": false, "actual": actual }),
                        format!("path realizes {{{actual}}}, not {{{target}}}"),
                    ),
                }
            }
            (None, _, Some(file)) => {
                let c = input::load_certificate(&file)?;
                let text = format!("certificate verifies\n{}", cert_text(&c, false));
                Report::new(Exit::Ok, json!({ "verified": true, "certificate": c }), text)
            }
            _ => bail!("give --path with --multiset, or --cert"),
        },
        Command::Admissible { multiset } => {
            let l = parse_multiset(&multiset)?;
            let verdict = l.admissibility();
            let exit = if verdict.is_admissible() { Exit::Ok } else { Exit::NotAdmissible };
            Report::new(
                exit,
                json!({ "multiset": l, "order": l.order(), "admissibility": verdict }),
                format!("{{{l}}} (v = {}): {verdict}", l.order()),
            )
        }
        Command::Grow { input, x, m, schedule } => {
            let c = input.load()?;
            let out = match (schedule, x) {
                (Some(s), _) => multi_grow(&c, &s.parse::<GrowthSchedule>()?)?,
                (None, Some(x)) => {
                    let m = match m {
                        Some(m) => m,
                        None => c.grow_point(x).ok_or(CoreError::MissingGrowPoint { x })?.m,
                    };
                    grow(&c, x, m)?
                }
                (None, None) => bail!("give --x or --schedule"),
            };
            cert_report(out)
        }
        Command::Splice { input, perfect } => cert_report(splice_perfect(&input.load()?, &parse_path(&perfect)?)?),
        Command::EvenGrow { input, y, z } => cert_report(even_grow(&input.load()?, y, z)?),
        Command::X2x { input, x, i } => cert_report(x2x_swap(&input.load()?, x, i)?),
        Command::PerfGrow { input, x, parts } => cert_report(perf_grow(&input.load()?, x, &parse_paths(&parts)?)?),
        Command::Family { x, b, basic, residue } => {
            let c = match (b, basic, residue) {
                (Some(b), _, _) => construct_1x(x, b)?,
                (None, Some(which), _) => {
                    let which = match which.replace(' ', "").as_str() {
                        "x+1" => Basic::XPlus1,
                        "x+2" => Basic::XPlus2,
                        "2x" => Basic::TwoX,
                        other => bail!("--basic takes x+1, x+2 or 2x, not `{other}`"),
                    };
                    construct_1x_basic(x, which)?
                }
                (None, None, Some(r)) => seed_for_residue(x, r)?,
                (None, None, None) => bail!("give --b, --basic or --residue"),
            };
            cert_report(c)
        }
        Command::Solve { multiset, fallback, trace, search, cap } => {
            let l = parse_multiset(&multiset)?;
            let opts = SolveOptions {
                fallback,
                search: search.config(),
                brute_cap: cap,
            };
            let outcome = solve(&l, &opts)?;
            let exit = match &outcome {
                SolveOutcome::Solved { .. } | SolveOutcome::SearchFallback { certificate: Some(_), .. } => Exit::Ok,
                SolveOutcome::NotAdmissible { .. } => Exit::NotAdmissible,
                SolveOutcome::OutOfProvenRange { .. } => Exit::OutOfRange,
                SolveOutcome::SearchFallback { certificate: None, .. } => Exit::SearchFailed,
            };
            let mut text = outcome.status().to_string();
            match &outcome {
                SolveOutcome::NotAdmissible { verdict } => text.push_str(&format!(": {verdict}")),
                SolveOutcome::OutOfProvenRange { reason } => text.push_str(&format!(": {reason}")),
                SolveOutcome::SearchFallback { reason, .. } => {
                    text.push_str(&format!(": {reason} (seed {})", search.seed))
                }
                SolveOutcome::Solved { .. } => {}
            }
            if let Some(c) = outcome.certificate() {
                text.push('\n');
                text.push_str(&cert_text(c, trace));
            }
            let mut j = serde_json::to_value(&outcome)?;
            j["seed"] = json!(search.seed);
            Report::new(exit, j, text)
        }
        Command::Search { multiset, search } => {
            let l = parse_multiset(&multiset)?;
            let verdict = l.admissibility();
            if !verdict.is_admissible() {
                return Ok(Report::new(
                    Exit::NotAdmissible,
                    json!({ "found": false, "admissibility": verdict, "seed": search.seed }),
                    format!("not admissible: {verdict}"),
                ));
            }
            match local_search(&l, &search.config())? {
                Some(c) => {
                    let text = format!("found (seed {})\n{}", search.seed, cert_text(&c, true));
                    Report::new(Exit::Ok, json!({ "found": true, "seed": search.seed, "certificate": c }), text)
                }
                None => Report::new(
                    Exit::SearchFailed,
                    json!({ "found": false, "seed": search.seed }),
                    format!("no realization found (seed {}, {} restarts)", search.seed, search.restarts),
                ),
            }
        }
        Command::Oracle { multiset, budget, cap } => {
            let l = parse_multiset(&multiset)?;
            let oracle = brute_force(&l, budget, cap)?;
            let (exit, text) = match &oracle {
                Oracle::Found { certificate } => (Exit::Ok, format!("found\n{}", cert_text(certificate, false))),
                Oracle::NoneExists if !l.is_admissible() => {
                    (Exit::NotAdmissible, format!("no realization; not admissible: {}", l.admissibility()))
                }
                Oracle::NoneExists => (Exit::SearchFailed, "no realization exists".to_string()),
                Oracle::Exhausted { nodes } => (Exit::SearchFailed, format!("budget exhausted after {nodes} nodes")),
            };
            Report::new(exit, serde_json::to_value(&oracle)?, text)
        }
        Command::Sweep { vmax, definitive, necessity, search, cap } => {
            let report = sweep(vmax, &search.config(), definitive, cap)?;
            let mut text = format!("seed {}, definitive: {definitive}\n", search.seed);
            text.push_str("   v  admissible  realized  unrealizable  unknown");
            for r in &report.rows {
                text.push_str(&format!(
                    "\n{:>4}  {:>10}  {:>8}  {:>12}  {:>7}",
                    r.v, r.admissible_count, r.realized, r.unrealizable, r.unknown
                ));
                for o in &r.open {
                    text.push_str(&format!("\n      open: {{{o}}}"));
                }
            }
            let mut exit = if report.unrealizable() + report.unknown() == 0 { Exit::Ok } else { Exit::SearchFailed };
            let mut j = json!({ "seed": search.seed, "sweep": report });
            if necessity {
                let rows = necessity_check(vmax.min(cap), cap)?;
                text.push_str("\n   v  inadmissible  realized  unsettled");
                for r in &rows {
                    text.push_str(&format!("\n{:>4}  {:>12}  {:>8}  {:>9}", r.v, r.inadmissible, r.realized, r.unsettled));
                }
                if rows.iter().any(|r| r.realized + r.unsettled > 0) {
                    exit = Exit::SearchFailed;
                }
                j["necessity"] = serde_json::to_value(&rows)?;
            }
            Report::new(exit, j, text)
        }
        Command::Seeds { action: SeedsAction::Dump { table: id } } => {
            let chosen: Vec<_> = match &id {
                Some(id) => vec![table(id)?],
                None => tables().iter().collect(),
            };
            let mut text = String::new();
            for t in &chosen {
                text.push_str(&format!("table {} ({} rows): {}\n", t.id, t.entries.len(), t.about));
                for e in &t.entries {
                    let points: Vec<String> = e.declared_grow_points.iter().map(|p| p.to_string()).collect();
                    text.push_str(&format!(
                        "  {:<8} {{{}}} {:?} {}\n",
                        e.label.as_deref().unwrap_or("."),
                        e.multiset,
                        e.path.vertices(),
                        points.join(" ")
                    ));
                }
            }
            Report::new(Exit::Ok, json!({ "tables": chosen }), text.trim_end())
        }
        Command::Seeds { action: SeedsAction::Check } => {
            let report = verify_all_seeds();
            let bad: Vec<_> = report.failures().collect();
            let mut text = format!("{} of {} rows verify", report.checks.len() - bad.len(), report.checks.len());
            for b in &bad {
                text.push_str(&format!("\n  {}: {}", b.entry, b.failures.join("; ")));
            }
            let exit = if bad.is_empty() { Exit::Ok } else { Exit::Verify };
            Report::new(exit, json!({ "passed": bad.is_empty(), "checks": report.checks }), text)
        }
        Command::Bound { multiset } => {
            let l = parse_multiset(&multiset)?;
            let b = hr_bound(&l)?;
            Report::new(Exit::Ok, json!({ "multiset": l, "bound": b }), b.to_string())
        }
    })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Verify { .. } => "verify",
        Command::Admissible { .. } => "admissible",
        Command::Grow { .. } => "grow",
        Command::Splice { .. } => "splice",
        Command::EvenGrow { .. } => "even-grow",
        Command::X2x { .. } => "x2x",
        Command::PerfGrow { .. } => "perf-grow",
        Command::Family { .. } => "family",
        Command::Solve { .. } => "solve",
        Command::Search { .. } => "search",
        Command::Oracle { .. } => "oracle",
        Command::Sweep { .. } => "sweep",
        Command::Seeds { .. } => "seeds",
        Command::Bound { .. } => "bound",
    }
}

/// Exit status for an error: verification failures and inadmissible input
/// have their own codes, anything else is a usage error.
fn error_exit(e: &anyhow::Error) -> Exit {
    if e.downcast_ref::<VerifyFailure>().is_some() {
        return Exit::Verify;
    }
    match e.downcast_ref::<CoreError>() {
        Some(CoreError::NotAdmissible(_)) => Exit::NotAdmissible,
        Some(CoreError::Certificate(_)) => Exit::Verify,
        _ => Exit::Usage,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Usage as u8 } else { Exit::Ok as u8 });
        }
    };
    let name = command_name(&cli.command);
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            let exit = error_exit(&e);
            eprintln!("error: {e:#}");
            if cli.json {
                println!("{}", json!({ "schema": SCHEMA_VERSION, "command": name, "error": format!("{e:#}") }));
            }
            return ExitCode::from(exit as u8);
        }
    };
    if cli.json {
        let mut j = json!({ "schema": SCHEMA_VERSION, "command": name, "exit": report.exit as u8 });
        if let (Value::Object(dst), Value::Object(src)) = (&mut j, report.json) {
            dst.extend(src);
        }
        println!("{j}");
    } else {
        println!("{}", report.text);
    }
    ExitCode::from(report.exit as u8)
}
